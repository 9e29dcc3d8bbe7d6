//! Piecewise-constant functions on the rational line with finitely many
//! jumps, and the bridge identifying them with functions on a finite set.
//!
//! A partition with jumps `t_1 < ... < t_N` splits the line into `2N + 1`
//! pieces: the open intervals first (indices `0..=N`), then the singleton
//! jump points (indices `N+1..=2N`). A piecewise constant function is one
//! value per piece, so the piece-index map `gamma` identifies the algebra
//! with the function algebra on `2N + 1` points; `mu` is that
//! identification. Interval permutations must keep the singleton block
//! within itself, which is what invariance under a line bijection forces
//! on jump points.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::commutant::GradedBasis;
use crate::error::{Error, Result};
use crate::funalg::{induced_automorphism, AlgebraElement, Permutation};
use crate::multiindex::MultiIndex;
use crate::rational::format_rational;

/// Jump points `t_1 < ... < t_N` and the induced `2N + 1` pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    jumps: Vec<BigRational>,
}

impl Partition {
    pub fn new(jumps: Vec<BigRational>) -> Result<Self> {
        if jumps.is_empty() {
            return Err(Error::InvalidPresentation("partition needs at least one jump".into()));
        }
        if jumps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPresentation(
                "jump points must be strictly increasing".into(),
            ));
        }
        Ok(Partition { jumps })
    }

    pub fn num_jumps(&self) -> usize {
        self.jumps.len()
    }

    pub fn piece_count(&self) -> usize {
        2 * self.jumps.len() + 1
    }

    pub fn jumps(&self) -> &[BigRational] {
        &self.jumps
    }

    /// The index of the piece containing `x`; jump points map to their
    /// singleton piece.
    pub fn gamma(&self, x: &BigRational) -> usize {
        let n = self.num_jumps();
        if let Some(k) = self.jumps.iter().position(|t| t == x) {
            return n + 1 + k;
        }
        // Number of jumps strictly below x names the open interval.
        self.jumps.iter().take_while(|t| *t < x).count()
    }

    /// Whether a piece index names a bounded set (an interior interval or
    /// a singleton).
    pub fn piece_is_bounded(&self, piece: usize) -> bool {
        let n = self.num_jumps();
        piece != 0 && piece != n
    }

    /// Endpoint rendering: `(-inf,t1)`, `(t_k,t_{k+1})`, `(t_N,inf)`, `{t_k}`.
    pub fn piece_label(&self, piece: usize) -> String {
        let n = self.num_jumps();
        if piece == 0 {
            format!("(-inf,{})", format_rational(&self.jumps[0]))
        } else if piece < n {
            format!(
                "({},{})",
                format_rational(&self.jumps[piece - 1]),
                format_rational(&self.jumps[piece])
            )
        } else if piece == n {
            format!("({},inf)", format_rational(&self.jumps[n - 1]))
        } else {
            format!("{{{}}}", format_rational(&self.jumps[piece - n - 1]))
        }
    }

    pub fn render_piece_set(&self, pieces: &BTreeSet<usize>) -> String {
        if pieces.is_empty() {
            return "{}".into();
        }
        pieces.iter().map(|&w| self.piece_label(w)).collect::<Vec<_>>().join(" ∪ ")
    }

    /// Rational sample points inside a piece, used to probe pointwise
    /// statements on the line.
    pub fn sample_points(&self, piece: usize) -> Vec<BigRational> {
        let n = self.num_jumps();
        let one = BigRational::from_integer(1.into());
        let half = BigRational::new(1.into(), 2.into());
        if piece == 0 {
            let t = &self.jumps[0];
            vec![t - &one, t - &half]
        } else if piece < n {
            let (a, b) = (&self.jumps[piece - 1], &self.jumps[piece]);
            let mid = (a + b) * &half;
            let quarter = (a + &mid) * &half;
            vec![mid, quarter]
        } else if piece == n {
            let t = &self.jumps[n - 1];
            vec![t + &one, t + &half]
        } else {
            vec![self.jumps[piece - n - 1].clone()]
        }
    }
}

/// A piecewise constant function: one value per piece of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseFunction {
    partition: Partition,
    values: AlgebraElement,
}

impl PiecewiseFunction {
    pub fn new(partition: Partition, values: AlgebraElement) -> Result<Self> {
        if values.len() != partition.piece_count() {
            return Err(Error::Dimension(format!(
                "{} values for {} pieces",
                values.len(),
                partition.piece_count()
            )));
        }
        Ok(PiecewiseFunction { partition, values })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn values(&self) -> &AlgebraElement {
        &self.values
    }

    pub fn evaluate(&self, x: &BigRational) -> &BigRational {
        self.values.value(self.partition.gamma(x))
    }

    pub fn pointwise_mul(&self, other: &PiecewiseFunction) -> Result<PiecewiseFunction> {
        if self.partition != other.partition {
            return Err(Error::Dimension("functions over different partitions".into()));
        }
        Ok(PiecewiseFunction {
            partition: self.partition.clone(),
            values: &self.values * &other.values,
        })
    }

    pub fn pointwise_add(&self, other: &PiecewiseFunction) -> Result<PiecewiseFunction> {
        if self.partition != other.partition {
            return Err(Error::Dimension("functions over different partitions".into()));
        }
        Ok(PiecewiseFunction {
            partition: self.partition.clone(),
            values: &self.values + &other.values,
        })
    }
}

impl fmt::Display for PiecewiseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.partition.piece_count())
            .map(|w| format!("{} on {}", format_rational(self.values.value(w)), self.partition.piece_label(w)))
            .collect();
        write!(f, "{}", labels.join(", "))
    }
}

/// A permutation of piece indices that keeps the singleton block
/// `{N+1, ..., 2N}` invariant as a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPermutation {
    perm: Permutation,
    num_jumps: usize,
}

impl IntervalPermutation {
    pub fn new(perm: Permutation, num_jumps: usize) -> Result<Self> {
        if perm.len() != 2 * num_jumps + 1 {
            return Err(Error::Dimension(format!(
                "permutation on {} pieces, partition has {}",
                perm.len(),
                2 * num_jumps + 1
            )));
        }
        for w in (num_jumps + 1)..=(2 * num_jumps) {
            let t = perm.apply(w);
            if t <= num_jumps {
                return Err(Error::InvalidPermutation(format!(
                    "singleton piece {w} mapped to open interval {t}"
                )));
            }
        }
        Ok(IntervalPermutation { perm, num_jumps })
    }

    pub fn identity(num_jumps: usize) -> Self {
        IntervalPermutation { perm: Permutation::identity(2 * num_jumps + 1), num_jumps }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// True when some bounded open interval maps to an unbounded one or
    /// vice versa. Allowed, but worth surfacing to callers.
    pub fn mixes_boundedness(&self) -> bool {
        let n = self.num_jumps;
        (0..=n).any(|w| {
            let unbounded_in = w == 0 || w == n;
            let t = self.perm.apply(w);
            let unbounded_out = t == 0 || t == n;
            unbounded_in != unbounded_out
        })
    }

    /// The induced automorphism `h -> h o sigma^{-1}` on piecewise functions.
    pub fn apply_to(&self, h: &PiecewiseFunction) -> Result<PiecewiseFunction> {
        let values = induced_automorphism(&self.perm, h.values())?;
        PiecewiseFunction::new(h.partition().clone(), values)
    }
}

/// The identification `mu`: the function taking value `f(w)` on piece `w`.
pub fn mu(f: &AlgebraElement, partition: &Partition) -> Result<PiecewiseFunction> {
    PiecewiseFunction::new(partition.clone(), f.clone())
}

/// Inverse identification: reads the piece values back off.
pub fn mu_inverse(h: &PiecewiseFunction) -> AlgebraElement {
    h.values().clone()
}

/// Piece-index map, the free-function form of [`Partition::gamma`].
pub fn gamma(partition: &Partition, x: &BigRational) -> usize {
    partition.gamma(x)
}

/// Pieces whose points are separated by `sigma^alpha`, i.e. pieces moved
/// by the composed interval permutation.
pub fn sep_intervals(
    perms: &[IntervalPermutation],
    alpha: &MultiIndex,
) -> Result<BTreeSet<usize>> {
    let taus: Vec<Permutation> = perms.iter().map(|p| p.perm.clone()).collect();
    crate::funalg::sep_set(&taus, alpha)
}

/// One translated constraint per monomial: the coefficient of `x^alpha`
/// must vanish on the listed pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalConstraint {
    pub alpha: MultiIndex,
    pub vanish_pieces: BTreeSet<usize>,
    pub rendered: String,
}

/// Rewrites a graded centralizer description over `Omega` as vanishing
/// constraints over the partition pieces, one constraint per monomial with
/// a nonempty forced-zero set.
pub fn translate_centralizer(
    gb: &GradedBasis,
    partition: &Partition,
) -> Result<Vec<IntervalConstraint>> {
    let pieces = partition.piece_count();
    if let Some(v) = gb.per_alpha.values().flatten().next() {
        if v.len() != pieces {
            return Err(Error::Dimension(format!(
                "graded basis over {} points, partition has {} pieces",
                v.len(),
                pieces
            )));
        }
    }
    let mut out = Vec::new();
    for (alpha, basis) in &gb.per_alpha {
        let vanish: BTreeSet<usize> = (0..pieces)
            .filter(|&w| basis.iter().all(|v| v.value(w).is_zero()))
            .collect();
        if vanish.is_empty() {
            continue;
        }
        let rendered = format!("h_{} = 0 on {}", alpha, partition.render_piece_set(&vanish));
        out.push(IntervalConstraint { alpha: alpha.clone(), vanish_pieces: vanish, rendered });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::centralizer_sep_basis;
    use crate::samples;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn single_jump_at_zero() -> Partition {
        Partition::new(vec![q(0)]).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![q(1), q(1)]).is_err());
        assert!(Partition::new(vec![q(2), q(1)]).is_err());
        let p = Partition::new(vec![q(0), qr(3, 2)]).unwrap();
        assert_eq!(p.piece_count(), 5);
    }

    #[test]
    fn gamma_examples() {
        let p = single_jump_at_zero();
        assert_eq!(p.gamma(&q(-5)), 0);
        assert_eq!(p.gamma(&q(0)), 2);
        assert_eq!(p.gamma(&qr(7, 3)), 1);
    }

    #[test]
    fn gamma_two_jumps() {
        let p = Partition::new(vec![q(0), qr(3, 2)]).unwrap();
        assert_eq!(p.gamma(&q(-1)), 0);
        assert_eq!(p.gamma(&q(1)), 1);
        assert_eq!(p.gamma(&q(2)), 2);
        assert_eq!(p.gamma(&q(0)), 3);
        assert_eq!(p.gamma(&qr(3, 2)), 4);
    }

    #[test]
    fn piece_labels() {
        let p = Partition::new(vec![q(0), qr(3, 2)]).unwrap();
        assert_eq!(p.piece_label(0), "(-inf,0)");
        assert_eq!(p.piece_label(1), "(0,3/2)");
        assert_eq!(p.piece_label(2), "(3/2,inf)");
        assert_eq!(p.piece_label(3), "{0}");
        assert_eq!(p.piece_label(4), "{3/2}");
    }

    #[test]
    fn sample_points_land_in_their_piece() {
        let p = Partition::new(vec![q(-1), qr(1, 3), q(4)]).unwrap();
        for w in 0..p.piece_count() {
            for x in p.sample_points(w) {
                assert_eq!(p.gamma(&x), w, "sample {x} for piece {w}");
            }
        }
    }

    #[test]
    fn mu_assigns_values_by_piece() {
        let p = single_jump_at_zero();
        let f = AlgebraElement::from_integers(&[1, 2, 3]);
        let h = mu(&f, &p).unwrap();
        assert_eq!(h.evaluate(&q(-10)), &q(1));
        assert_eq!(h.evaluate(&q(10)), &q(2));
        assert_eq!(h.evaluate(&q(0)), &q(3));
        assert_eq!(mu_inverse(&h), f);
    }

    #[test]
    fn mu_is_multiplicative_and_linear() {
        let p = Partition::new(vec![q(0), q(2)]).unwrap();
        let f = AlgebraElement::from_integers(&[1, -2, 3, 0, 5]);
        let g = AlgebraElement::from_integers(&[7, 1, -1, 2, 2]);
        let lhs = mu(&(&f * &g), &p).unwrap();
        let rhs = mu(&f, &p).unwrap().pointwise_mul(&mu(&g, &p).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs_add = mu(&(&f + &g), &p).unwrap();
        let rhs_add = mu(&f, &p).unwrap().pointwise_add(&mu(&g, &p).unwrap()).unwrap();
        assert_eq!(lhs_add, rhs_add);
    }

    #[test]
    fn interval_permutation_singleton_block() {
        // Swap of the two open pieces around one jump, singleton fixed.
        let ok = IntervalPermutation::new(Permutation::from_image(vec![1, 0, 2]).unwrap(), 1);
        assert!(ok.is_ok());
        // Sending the singleton to an open interval is rejected.
        let bad = IntervalPermutation::new(Permutation::from_image(vec![2, 1, 0]).unwrap(), 1);
        assert!(bad.is_err());
    }

    #[test]
    fn boundedness_mixing_is_flagged_not_rejected() {
        // Two jumps: pieces 0,2 unbounded open, 1 bounded open.
        let mixing =
            IntervalPermutation::new(Permutation::from_image(vec![1, 0, 2, 3, 4]).unwrap(), 2)
                .unwrap();
        assert!(mixing.mixes_boundedness());
        let tame =
            IntervalPermutation::new(Permutation::from_image(vec![2, 1, 0, 4, 3]).unwrap(), 2)
                .unwrap();
        assert!(!tame.mixes_boundedness());
    }

    #[test]
    fn intertwining_with_induced_automorphism() {
        let part = single_jump_at_zero();
        let ip = IntervalPermutation::new(Permutation::from_image(vec![1, 0, 2]).unwrap(), 1)
            .unwrap();
        let f = AlgebraElement::from_integers(&[4, -1, 9]);
        for n in -4..=4i64 {
            let tau_n = ip.permutation().pow(n);
            let lhs = IntervalPermutation::new(tau_n.clone(), 1)
                .unwrap()
                .apply_to(&mu(&f, &part).unwrap())
                .unwrap();
            let rhs = mu(&induced_automorphism(&tau_n, &f).unwrap(), &part).unwrap();
            assert_eq!(lhs, rhs, "power {n}");
        }
    }

    #[test]
    fn sep_intervals_swap_parity() {
        let ip1 = IntervalPermutation::identity(1);
        let ip2 = IntervalPermutation::new(Permutation::from_image(vec![1, 0, 2]).unwrap(), 1)
            .unwrap();
        let perms = vec![ip1, ip2];
        for j in 0..3u32 {
            let odd = MultiIndex::new(vec![j, 3]);
            assert_eq!(sep_intervals(&perms, &odd).unwrap(), BTreeSet::from([0, 1]));
            let even = MultiIndex::new(vec![j, 2]);
            assert!(sep_intervals(&perms, &even).unwrap().is_empty());
        }
        assert!(sep_intervals(&perms, &MultiIndex::zero(2)).unwrap().is_empty());
    }

    #[test]
    fn translate_three_piece_swap() {
        let p = samples::three_piece_swap_plane();
        let gb = centralizer_sep_basis(&p, 4).unwrap();
        let part = single_jump_at_zero();
        let constraints = translate_centralizer(&gb, &part).unwrap();
        assert!(!constraints.is_empty());
        for c in &constraints {
            assert_eq!(c.alpha.entry(1) % 2, 1, "only odd second exponents constrained");
            assert_eq!(c.vanish_pieces, BTreeSet::from([0, 1]));
            assert_eq!(
                c.rendered,
                format!("h_{} = 0 on (-inf,0) ∪ (0,inf)", c.alpha)
            );
        }
        // Even monomials are unconstrained.
        let constrained: BTreeSet<_> = constraints.iter().map(|c| c.alpha.clone()).collect();
        for (alpha, _) in &gb.per_alpha {
            if alpha.entry(1) % 2 == 0 {
                assert!(!constrained.contains(alpha));
            }
        }
    }

    #[test]
    fn translate_identity_has_no_constraints() {
        let p = samples::commutative(3, 2);
        let gb = centralizer_sep_basis(&p, 3).unwrap();
        let constraints = translate_centralizer(&gb, &single_jump_at_zero()).unwrap();
        assert!(constraints.is_empty());
    }

    #[test]
    fn translate_single_generator_swap_constrains_odd_degrees() {
        let tau = Permutation::from_image(vec![1, 0, 2]).unwrap();
        let p = crate::pbw::Presentation::quasi_commutative(3, vec![tau], Default::default())
            .unwrap();
        let gb = centralizer_sep_basis(&p, 5).unwrap();
        let constraints = translate_centralizer(&gb, &single_jump_at_zero()).unwrap();
        let alphas: Vec<u32> = constraints.iter().map(|c| c.alpha.entry(0)).collect();
        assert_eq!(alphas, vec![1, 3, 5]);
    }
}
