//! The skew PBW extension itself: presentation data, sparse elements
//! `sum_alpha f_alpha x^alpha`, and normal-form multiplication.
//!
//! A presentation fixes, over the function algebra on `m` points,
//!
//! * `n` generators `x_1, ..., x_n`,
//! * per generator a permutation `tau_i` (inducing the automorphism
//!   `sigma_i`) and a sigma-derivation `delta_i`, so `x_i r =
//!   sigma_i(r) x_i + delta_i(r)`,
//! * per pair `i < j` an invertible constant `c_ij` and a degree-<= 1
//!   remainder, so `x_j x_i = c_ij x_i x_j + r_ij`.
//!
//! Products are normalized by rewriting the leftmost inversion first and
//! commuting scalars leftward. Every rewrite strictly drops the pair
//! (total degree, inversion count), so normalization terminates; the
//! associativity self-check guards presentations whose data do not
//! actually define a ring with a PBW basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_rational::BigRational;
use num_traits::One;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::funalg::{induced_automorphism, AlgebraElement, Omega, Permutation, SigmaDerivation};
use crate::multiindex::MultiIndex;

/// Degree-<= 1 remainder of a pair relation: a constant part plus one
/// coefficient per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remainder {
    constant: AlgebraElement,
    linear: Vec<AlgebraElement>,
}

impl Remainder {
    pub fn new(constant: AlgebraElement, linear: Vec<AlgebraElement>) -> Self {
        Remainder { constant, linear }
    }

    pub fn zero(n: usize, m: usize) -> Self {
        let omega = Omega::new(m).expect("m >= 1");
        Remainder { constant: omega.zero(), linear: vec![omega.zero(); n] }
    }

    pub fn constant(&self) -> &AlgebraElement {
        &self.constant
    }

    pub fn linear(&self) -> &[AlgebraElement] {
        &self.linear
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.iter().all(AlgebraElement::is_zero)
    }
}

type TermMap = BTreeMap<MultiIndex, AlgebraElement>;

/// A sparse element `sum_alpha f_alpha x^alpha`; zero coefficients are
/// never stored, so equality of elements is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PBWElement {
    terms: TermMap,
}

impl PBWElement {
    pub fn zero() -> Self {
        PBWElement { terms: BTreeMap::new() }
    }

    pub fn from_term_map(mut terms: TermMap) -> Self {
        terms.retain(|_, c| !c.is_zero());
        PBWElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (MultiIndex, AlgebraElement)>) -> Self {
        let mut map = TermMap::new();
        for (alpha, coeff) in terms {
            accumulate(&mut map, alpha, coeff);
        }
        Self::from_term_map(map)
    }

    pub fn monomial(alpha: MultiIndex, coeff: AlgebraElement) -> Self {
        Self::from_term_map(BTreeMap::from([(alpha, coeff)]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &AlgebraElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Option<&AlgebraElement> {
        self.terms.get(alpha)
    }

    fn check_compatible(&self, other: &PBWElement) -> Result<()> {
        let (Some((a, fa)), Some((b, gb))) =
            (self.terms.iter().next(), other.terms.iter().next())
        else {
            return Ok(());
        };
        if a.len() != b.len() || fa.len() != gb.len() {
            return Err(Error::Dimension(format!(
                "elements from different presentations: (n={}, m={}) vs (n={}, m={})",
                a.len(),
                fa.len(),
                b.len(),
                gb.len()
            )));
        }
        Ok(())
    }

    /// Coefficientwise sum; zero terms dropped.
    pub fn add(&self, other: &PBWElement) -> Result<PBWElement> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (alpha, coeff) in &other.terms {
            accumulate(&mut terms, alpha.clone(), coeff.clone());
        }
        Ok(Self::from_term_map(terms))
    }

    pub fn sub(&self, other: &PBWElement) -> Result<PBWElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PBWElement {
        PBWElement {
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }

    /// Left multiplication by a coefficient: each `f_alpha` becomes
    /// `r * f_alpha` pointwise.
    pub fn scalar_times(&self, r: &AlgebraElement) -> Result<PBWElement> {
        if let Some((_, coeff)) = self.terms.iter().next() {
            if coeff.len() != r.len() {
                return Err(Error::Dimension(format!(
                    "scalar over {} points, element over {}",
                    r.len(),
                    coeff.len()
                )));
            }
        }
        Ok(Self::from_term_map(
            self.terms.iter().map(|(a, c)| (a.clone(), r * c)).collect(),
        ))
    }

    pub fn rational_times(&self, q: &BigRational) -> PBWElement {
        Self::from_term_map(self.terms.iter().map(|(a, c)| (a.clone(), c * q)).collect())
    }

    /// The deglex-maximal term; errors on the zero element.
    pub fn leading_term(&self) -> Result<(&MultiIndex, &AlgebraElement)> {
        self.terms.last_key_value().ok_or(Error::ZeroElement)
    }

    /// Total degree, i.e. the degree of the leading term.
    pub fn degree(&self) -> Result<u32> {
        Ok(self.leading_term()?.0.degree())
    }
}

impl fmt::Display for PBWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (alpha, coeff)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if alpha.is_zero() {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff} x^{alpha}")?;
            }
        }
        Ok(())
    }
}

fn accumulate(map: &mut TermMap, alpha: MultiIndex, coeff: AlgebraElement) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(alpha) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &coeff;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Outcome of the associativity self-check.
#[derive(Debug, Clone)]
pub enum AssocOutcome {
    Pass,
    Counterexample {
        left: PBWElement,
        mid: PBWElement,
        right: PBWElement,
    },
}

impl AssocOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AssocOutcome::Pass)
    }
}

/// The full data of a skew PBW extension presentation over the function
/// algebra on a finite set. Immutable once constructed; the monomial
/// product memo behind the lock only caches deterministic results.
#[derive(Debug)]
pub struct Presentation {
    omega: Omega,
    taus: Vec<Permutation>,
    deltas: Vec<SigmaDerivation>,
    c: Vec<AlgebraElement>,
    r: Vec<Remainder>,
    memo: RwLock<HashMap<(MultiIndex, MultiIndex), TermMap>>,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            omega: self.omega,
            taus: self.taus.clone(),
            deltas: self.deltas.clone(),
            c: self.c.clone(),
            r: self.r.clone(),
            memo: RwLock::new(HashMap::new()),
        }
    }
}

impl Presentation {
    /// Builds and structurally validates a presentation. Missing `c` pairs
    /// default to the constant one, missing remainders to zero; every
    /// `c_ij` must be nowhere zero.
    pub fn new(
        omega_size: usize,
        taus: Vec<Permutation>,
        d_params: Option<Vec<AlgebraElement>>,
        c_pairs: BTreeMap<(usize, usize), AlgebraElement>,
        r_pairs: BTreeMap<(usize, usize), Remainder>,
    ) -> Result<Self> {
        let omega = Omega::new(omega_size)?;
        let n = taus.len();
        if n == 0 {
            return Err(Error::InvalidPresentation("need at least one generator".into()));
        }
        for (i, tau) in taus.iter().enumerate() {
            if tau.len() != omega_size {
                return Err(Error::Dimension(format!(
                    "tau_{} acts on {} points, omega has {}",
                    i + 1,
                    tau.len(),
                    omega_size
                )));
            }
        }

        let deltas = match d_params {
            None => taus.iter().map(|t| SigmaDerivation::zero(t.clone())).collect(),
            Some(ds) => {
                if ds.len() != n {
                    return Err(Error::Dimension(format!(
                        "{} derivation vectors for {} generators",
                        ds.len(),
                        n
                    )));
                }
                ds.into_iter()
                    .zip(&taus)
                    .map(|(d, t)| SigmaDerivation::new(d, t.clone()))
                    .collect::<Result<Vec<_>>>()?
            }
        };

        let mut c = Vec::with_capacity(n * (n - 1) / 2);
        let mut r = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let cij = c_pairs.get(&(i, j)).cloned().unwrap_or_else(|| omega.one());
                if cij.len() != omega_size {
                    return Err(Error::Dimension(format!(
                        "c[{},{}] has {} entries, omega has {}",
                        i + 1,
                        j + 1,
                        cij.len(),
                        omega_size
                    )));
                }
                if let Some(point) = cij.first_zero_point() {
                    return Err(Error::NonInvertibleConstant { i: i + 1, j: j + 1, point });
                }
                c.push(cij);
                let rij = r_pairs.get(&(i, j)).cloned().unwrap_or_else(|| Remainder::zero(n, omega_size));
                if rij.constant.len() != omega_size
                    || rij.linear.len() != n
                    || rij.linear.iter().any(|v| v.len() != omega_size)
                {
                    return Err(Error::Dimension(format!(
                        "remainder r[{},{}] has inconsistent shape",
                        i + 1,
                        j + 1
                    )));
                }
                r.push(rij);
            }
        }
        for key in c_pairs.keys().chain(r_pairs.keys()) {
            let (i, j) = *key;
            if i >= j || j >= n {
                return Err(Error::InvalidPresentation(format!(
                    "pair ({},{}) is not an ordered generator pair for n = {}",
                    i + 1,
                    j + 1,
                    n
                )));
            }
        }

        Ok(Presentation { omega, taus, deltas, c, r, memo: RwLock::new(HashMap::new()) })
    }

    /// A presentation with zero derivations and zero remainders.
    pub fn quasi_commutative(
        omega_size: usize,
        taus: Vec<Permutation>,
        c_pairs: BTreeMap<(usize, usize), AlgebraElement>,
    ) -> Result<Self> {
        Self::new(omega_size, taus, None, c_pairs, BTreeMap::new())
    }

    pub fn n(&self) -> usize {
        self.taus.len()
    }

    pub fn omega(&self) -> Omega {
        self.omega
    }

    pub fn omega_size(&self) -> usize {
        self.omega.size()
    }

    pub fn taus(&self) -> &[Permutation] {
        &self.taus
    }

    pub fn tau(&self, i: usize) -> &Permutation {
        &self.taus[i]
    }

    pub fn delta(&self, i: usize) -> &SigmaDerivation {
        &self.deltas[i]
    }

    pub fn deltas(&self) -> &[SigmaDerivation] {
        &self.deltas
    }

    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n());
        let n = self.n();
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    /// The invertible constant of the relation `x_j x_i = c_ij x_i x_j + r_ij`.
    pub fn c(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.c[self.pair_index(i, j)]
    }

    pub fn remainder(&self, i: usize, j: usize) -> &Remainder {
        &self.r[self.pair_index(i, j)]
    }

    /// All derivations zero and all remainders zero.
    pub fn is_quasi_commutative(&self) -> bool {
        self.deltas.iter().all(SigmaDerivation::is_zero_map)
            && self.r.iter().all(Remainder::is_zero)
    }

    pub fn zero_element(&self) -> PBWElement {
        PBWElement::zero()
    }

    pub fn one_element(&self) -> PBWElement {
        PBWElement::monomial(MultiIndex::zero(self.n()), self.omega.one())
    }

    /// A coefficient embedded as a degree-0 element.
    pub fn scalar(&self, r: AlgebraElement) -> PBWElement {
        PBWElement::monomial(MultiIndex::zero(self.n()), r)
    }

    /// The generator `x_i` (0-based index).
    pub fn generator(&self, i: usize) -> Result<PBWElement> {
        if i >= self.n() {
            return Err(Error::GeneratorIndex(i + 1, self.n()));
        }
        Ok(PBWElement::monomial(MultiIndex::unit(self.n(), i), self.omega.one()))
    }

    fn check_element(&self, f: &PBWElement) -> Result<()> {
        for (alpha, coeff) in f.terms() {
            if alpha.len() != self.n() || coeff.len() != self.omega_size() {
                return Err(Error::Dimension(format!(
                    "element shaped (n={}, m={}) used with presentation (n={}, m={})",
                    alpha.len(),
                    coeff.len(),
                    self.n(),
                    self.omega_size()
                )));
            }
        }
        Ok(())
    }

    /// Normal form of `x^alpha * r`, by right-to-left application of
    /// `x_i r' = sigma_i(r') x_i + delta_i(r')`. The leading term is
    /// `sigma^alpha(r) x^alpha`; every other term has strictly lower degree.
    pub fn monomial_times_scalar(&self, alpha: &MultiIndex, r: &AlgebraElement) -> Result<PBWElement> {
        if alpha.len() != self.n() {
            return Err(Error::Dimension(format!(
                "multi-index of length {} for {} generators",
                alpha.len(),
                self.n()
            )));
        }
        if r.len() != self.omega_size() {
            return Err(Error::Dimension(format!(
                "scalar over {} points, omega has {}",
                r.len(),
                self.omega_size()
            )));
        }
        Ok(PBWElement::from_term_map(self.sorted_word_times_scalar(&alpha.word(), r)))
    }

    /// Core scalar-commutation step. `word` must be weakly increasing; the
    /// result's monomials are subwords of `word`, hence already sorted.
    fn sorted_word_times_scalar(&self, word: &[usize], r: &AlgebraElement) -> TermMap {
        debug_assert!(word.windows(2).all(|w| w[0] <= w[1]));
        let n = self.n();
        let mut state = TermMap::new();
        state.insert(MultiIndex::zero(n), r.clone());
        for &i in word.iter().rev() {
            let mut next = TermMap::new();
            let delta_live = !self.deltas[i].is_zero_map();
            for (kept, s) in state {
                let shifted = induced_automorphism(&self.taus[i], &s).expect("sizes agree");
                accumulate(&mut next, kept.add(&MultiIndex::unit(n, i)).expect("same n"), shifted);
                if delta_live {
                    accumulate(&mut next, kept, self.deltas[i].apply(&s).expect("sizes agree"));
                }
            }
            state = next;
        }
        state
    }

    /// Normal form of `x^a * x^b`, memoized per presentation.
    fn monomial_product(&self, a: &MultiIndex, b: &MultiIndex) -> TermMap {
        // Already in normal order: the concatenation has no inversion.
        let a_top = a.entries().iter().rposition(|&e| e > 0);
        let b_bottom = b.entries().iter().position(|&e| e > 0);
        let sorted = match (a_top, b_bottom) {
            (Some(la), Some(fb)) => la <= fb,
            _ => true,
        };
        if sorted {
            let mut map = TermMap::new();
            map.insert(a.add(b).expect("same n"), self.omega.one());
            return map;
        }

        let key = (a.clone(), b.clone());
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }

        let mut word = a.word();
        word.extend(b.word());
        let result = self.normalize_word(&word);

        self.memo.write().expect("memo lock").insert(key, result.clone());
        result
    }

    /// Exhaustively rewrites a word of generator indices into normal form,
    /// returning its term map. Each step eliminates the leftmost adjacent
    /// inversion; side terms strictly drop (degree, inversions).
    fn normalize_word(&self, word: &[usize]) -> TermMap {
        let n = self.n();
        let mut result = TermMap::new();
        let mut work: Vec<(AlgebraElement, Vec<usize>)> = vec![(self.omega.one(), word.to_vec())];
        while let Some((coeff, w)) = work.pop() {
            if coeff.is_zero() {
                continue;
            }
            let Some(p) = w.windows(2).position(|pair| pair[0] > pair[1]) else {
                accumulate(&mut result, MultiIndex::from_word(n, &w), coeff);
                continue;
            };
            let (j, i) = (w[p], w[p + 1]);
            let prefix = &w[..p];
            let suffix = &w[p + 2..];

            // x_j x_i -> c_ij x_i x_j, with c_ij commuted through the prefix.
            for (gamma, h) in self.sorted_word_times_scalar(prefix, self.c(i, j)) {
                let mut nw = gamma.word();
                nw.push(i);
                nw.push(j);
                nw.extend_from_slice(suffix);
                work.push((&coeff * &h, nw));
            }

            let rem = self.remainder(i, j);
            if rem.is_zero() {
                continue;
            }
            if !rem.constant.is_zero() {
                for (gamma, h) in self.sorted_word_times_scalar(prefix, &rem.constant) {
                    let mut nw = gamma.word();
                    nw.extend_from_slice(suffix);
                    work.push((&coeff * &h, nw));
                }
            }
            for (k, rlin) in rem.linear.iter().enumerate() {
                if rlin.is_zero() {
                    continue;
                }
                for (gamma, h) in self.sorted_word_times_scalar(prefix, rlin) {
                    let mut nw = gamma.word();
                    nw.push(k);
                    nw.extend_from_slice(suffix);
                    work.push((&coeff * &h, nw));
                }
            }
        }
        result
    }

    /// The unique normal form of the product of two elements.
    pub fn mul(&self, f: &PBWElement, g: &PBWElement) -> Result<PBWElement> {
        self.check_element(f)?;
        self.check_element(g)?;
        let mut acc = TermMap::new();
        for (alpha, fa) in f.terms() {
            for (beta, gb) in g.terms() {
                // (f_a x^a)(g_b x^b) = f_a (x^a g_b) x^b
                for (gamma, h) in self.sorted_word_times_scalar(&alpha.word(), gb) {
                    let left = fa * &h;
                    if left.is_zero() {
                        continue;
                    }
                    for (eps, w) in self.monomial_product(&gamma, beta) {
                        accumulate(&mut acc, eps, &left * &w);
                    }
                }
            }
        }
        Ok(PBWElement::from_term_map(acc))
    }

    /// Normal form of `x_j * x_i^m` for `i < j` (0-based indices).
    pub fn monomial_commute(&self, j: usize, m: u32, i: usize) -> Result<PBWElement> {
        if j >= self.n() {
            return Err(Error::GeneratorIndex(j + 1, self.n()));
        }
        if i >= j {
            return Err(Error::InvalidPresentation(format!(
                "monomial_commute needs i < j, got i={}, j={}",
                i + 1,
                j + 1
            )));
        }
        let xi_m = PBWElement::monomial(
            MultiIndex::new((0..self.n()).map(|k| if k == i { m } else { 0 }).collect()),
            self.omega.one(),
        );
        self.mul(&self.generator(j)?, &xi_m)
    }

    /// Verifies `(u v) w = u (v w)` over all triples of generators and
    /// indicator scalars, plus `depth > 0` random elements of degree
    /// <= `depth` (deterministically seeded). Failure is a value.
    pub fn associativity_check(&self, depth: u32) -> AssocOutcome {
        let mut basics: Vec<PBWElement> = Vec::new();
        for i in 0..self.n() {
            basics.push(self.generator(i).expect("index in range"));
        }
        for w in self.omega.points() {
            basics.push(self.scalar(self.omega.indicator(w)));
        }
        if depth > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0a55);
            for _ in 0..3 {
                basics.push(self.sample_element(&mut rng, depth, 3));
            }
        }
        for u in &basics {
            for v in &basics {
                let uv = self.mul(u, v).expect("valid elements");
                for w in &basics {
                    let vw = self.mul(v, w).expect("valid elements");
                    let lhs = self.mul(&uv, w).expect("valid elements");
                    let rhs = self.mul(u, &vw).expect("valid elements");
                    if lhs != rhs {
                        return AssocOutcome::Counterexample {
                            left: u.clone(),
                            mid: v.clone(),
                            right: w.clone(),
                        };
                    }
                }
            }
        }
        AssocOutcome::Pass
    }

    fn sample_element(&self, rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> PBWElement {
        let monos = crate::multiindex::multi_indices_up_to(self.n(), max_deg);
        let mut terms = Vec::new();
        for _ in 0..rng.random_range(1..=max_terms) {
            let alpha = monos[rng.random_range(0..monos.len())].clone();
            let values = (0..self.omega_size())
                .map(|_| BigRational::from_integer(rng.random_range(-2..=2).into()))
                .collect();
            terms.push((alpha, AlgebraElement::new(values)));
        }
        PBWElement::from_terms(terms)
    }

    /// Runs the twisted Leibniz rule over every derivation.
    pub fn leibniz_check(&self) -> std::result::Result<(), usize> {
        for (i, delta) in self.deltas.iter().enumerate() {
            if !delta.leibniz_holds() {
                return Err(i);
            }
        }
        Ok(())
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.omega == other.omega
            && self.taus == other.taus
            && self.deltas == other.deltas
            && self.c == other.c
            && self.r == other.r
    }
}

/// Closed-form coefficient `prod_{k=0}^{m-1} tau~_i^k(c)`, used as an
/// independent oracle against `monomial_commute` in quasi-commutative
/// presentations.
pub fn twisted_power_product(tau: &Permutation, c: &AlgebraElement, m: u32) -> AlgebraElement {
    let mut product = AlgebraElement::constant(c.len(), BigRational::one());
    let mut twisted = c.clone();
    for _ in 0..m {
        product = &product * &twisted;
        twisted = induced_automorphism(tau, &twisted).expect("sizes agree");
    }
    product
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn swap_plane() -> Presentation {
        samples::two_point_swap_plane((1, 1), (2, 1))
    }

    #[test]
    fn defining_relation_normal_form() {
        let p = swap_plane();
        let x1 = p.generator(0).unwrap();
        let x2 = p.generator(1).unwrap();
        let prod = p.mul(&x2, &x1).unwrap();
        let expected = PBWElement::monomial(
            MultiIndex::new(vec![1, 1]),
            AlgebraElement::from_integers(&[1, 2]),
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn swap_plane_powers_match_closed_form() {
        let p = swap_plane();
        for m in 1..=5u32 {
            let got = p.monomial_commute(1, m, 0).unwrap();
            let coeff = twisted_power_product(p.tau(0), p.c(0, 1), m);
            let mut alpha = vec![m, 0];
            alpha[1] = 1;
            let expected = PBWElement::monomial(MultiIndex::new(alpha), coeff);
            assert_eq!(got, expected, "m = {m}");
        }
        // (1, 2^m) explicitly for m = 2, 3.
        let got2 = p.monomial_commute(1, 2, 0).unwrap();
        assert_eq!(
            got2.coefficient(&MultiIndex::new(vec![2, 1])).unwrap(),
            &AlgebraElement::from_integers(&[1, 4])
        );
        let got3 = p.monomial_commute(1, 3, 0).unwrap();
        assert_eq!(
            got3.coefficient(&MultiIndex::new(vec![3, 1])).unwrap(),
            &AlgebraElement::from_integers(&[1, 8])
        );
    }

    #[test]
    fn unit_laws_and_scalar_action() {
        let p = swap_plane();
        let omega = p.omega();
        let f = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![1, 0]), AlgebraElement::from_integers(&[3, -1])),
            (MultiIndex::new(vec![0, 2]), AlgebraElement::from_integers(&[0, 5])),
        ]);
        let one = p.one_element();
        assert_eq!(p.mul(&one, &f).unwrap(), f);
        assert_eq!(p.mul(&f, &one).unwrap(), f);
        assert_eq!(f.scalar_times(&omega.one()).unwrap(), f);
        assert!(f.scalar_times(&omega.zero()).unwrap().is_zero());
        // e_0 acts idempotently on an indicator-supported term.
        let g = PBWElement::monomial(MultiIndex::new(vec![0, 1]), omega.one());
        let e0 = omega.indicator(0);
        assert_eq!(
            g.scalar_times(&e0).unwrap(),
            PBWElement::monomial(MultiIndex::new(vec![0, 1]), e0.clone())
        );
    }

    #[test]
    fn add_inverse_and_indicator_merge() {
        let p = swap_plane();
        let omega = p.omega();
        let a = PBWElement::monomial(MultiIndex::new(vec![1, 0]), omega.indicator(0));
        let b = PBWElement::monomial(MultiIndex::new(vec![1, 0]), omega.indicator(1));
        let merged = a.add(&b).unwrap();
        assert_eq!(merged, PBWElement::monomial(MultiIndex::new(vec![1, 0]), omega.one()));
        assert!(merged.add(&merged.neg()).unwrap().is_zero());
        let f = p.one_element();
        assert_eq!(f.add(&PBWElement::zero()).unwrap(), f);
    }

    #[test]
    fn non_central_scalar_witness() {
        // (1,1)x_1 commutes with x_2 only up to the c twist.
        let p = swap_plane();
        let x1 = p.generator(0).unwrap();
        let x2 = p.generator(1).unwrap();
        let first = p.mul(&x1, &x2).unwrap();
        let second = p.mul(&x2, &x1).unwrap();
        assert_eq!(
            first,
            PBWElement::monomial(MultiIndex::new(vec![1, 1]), AlgebraElement::from_integers(&[1, 1]))
        );
        assert_eq!(
            second,
            PBWElement::monomial(MultiIndex::new(vec![1, 1]), AlgebraElement::from_integers(&[1, 2]))
        );
        assert_ne!(first, second);
    }

    #[test]
    fn monomial_times_scalar_swap_action() {
        let p = swap_plane();
        let r = AlgebraElement::from_integers(&[7, 11]);
        // alpha = (0,1): coefficient is swapped, single term.
        let res = p.monomial_times_scalar(&MultiIndex::new(vec![0, 1]), &r).unwrap();
        assert_eq!(
            res,
            PBWElement::monomial(MultiIndex::new(vec![0, 1]), AlgebraElement::from_integers(&[11, 7]))
        );
        // alpha = 0: identity.
        let res0 = p.monomial_times_scalar(&MultiIndex::zero(2), &r).unwrap();
        assert_eq!(res0, PBWElement::monomial(MultiIndex::zero(2), r));
    }

    #[test]
    fn ore_single_step_with_derivation() {
        let p = samples::ore_swap_derivation();
        let r = AlgebraElement::from_integers(&[2, 9]);
        let res = p.monomial_times_scalar(&MultiIndex::new(vec![1]), &r).unwrap();
        let expected = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![1]), AlgebraElement::from_integers(&[9, 2])),
            (MultiIndex::zero(1), AlgebraElement::from_integers(&[7, -7])),
        ]);
        assert_eq!(res, expected);
    }

    #[test]
    fn leading_term_law() {
        // Leading coefficient of x^alpha r is sigma^alpha(r); the rest is lower degree.
        let p = samples::ore_swap_derivation();
        let r = AlgebraElement::from_integers(&[3, 5]);
        for m in 0..=4u32 {
            let alpha = MultiIndex::new(vec![m]);
            let res = p.monomial_times_scalar(&alpha, &r).unwrap();
            let (lead_alpha, lead_coeff) = res.leading_term().unwrap();
            assert_eq!(lead_alpha, &alpha);
            assert_eq!(
                lead_coeff,
                &crate::funalg::apply_sigma_alpha(p.taus(), &alpha, &r).unwrap()
            );
            for (beta, _) in res.terms() {
                assert!(beta == &alpha || beta.degree() < alpha.degree());
            }
        }
    }

    #[test]
    fn leading_term_examples() {
        let f = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![2, 0]), AlgebraElement::from_integers(&[1, 1])),
            (MultiIndex::new(vec![0, 1]), AlgebraElement::from_integers(&[1, 0])),
        ]);
        let (alpha, coeff) = f.leading_term().unwrap();
        assert_eq!(alpha, &MultiIndex::new(vec![2, 0]));
        assert_eq!(coeff, &AlgebraElement::from_integers(&[1, 1]));

        let constant = PBWElement::monomial(MultiIndex::zero(2), AlgebraElement::from_integers(&[4, 2]));
        assert_eq!(constant.leading_term().unwrap().0, &MultiIndex::zero(2));
        assert_eq!(constant.degree().unwrap(), 0);

        let tie = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![1, 1]), AlgebraElement::from_integers(&[1, 0])),
            (MultiIndex::new(vec![0, 2]), AlgebraElement::from_integers(&[0, 1])),
        ]);
        assert_eq!(tie.leading_term().unwrap().0, &MultiIndex::new(vec![1, 1]));

        assert!(PBWElement::zero().leading_term().is_err());
        assert!(PBWElement::zero().degree().is_err());
    }

    #[test]
    fn associativity_pass_and_fail() {
        assert!(swap_plane().associativity_check(2).passed());

        // Adversarial remainder: x_2 x_1 = (1,2) x_1 x_2 + e_0 breaks the
        // scalar overlap, witnessed by a generator/indicator triple.
        let omega_size = 2;
        let taus = vec![
            Permutation::identity(omega_size),
            Permutation::from_image(vec![1, 0]).unwrap(),
        ];
        let mut c = BTreeMap::new();
        c.insert((0usize, 1usize), AlgebraElement::from_integers(&[1, 2]));
        let mut r = BTreeMap::new();
        r.insert(
            (0usize, 1usize),
            Remainder::new(
                AlgebraElement::from_integers(&[1, 0]),
                vec![
                    AlgebraElement::from_integers(&[0, 0]),
                    AlgebraElement::from_integers(&[0, 0]),
                ],
            ),
        );
        let bad = Presentation::new(omega_size, taus, None, c, r).unwrap();
        match bad.associativity_check(0) {
            AssocOutcome::Pass => panic!("expected a counterexample"),
            AssocOutcome::Counterexample { left, mid, right } => {
                let uv = bad.mul(&left, &mid).unwrap();
                let vw = bad.mul(&mid, &right).unwrap();
                assert_ne!(bad.mul(&uv, &right).unwrap(), bad.mul(&left, &vw).unwrap());
            }
        }
    }

    #[test]
    fn rejects_non_invertible_constant() {
        let taus = vec![Permutation::identity(2), Permutation::from_image(vec![1, 0]).unwrap()];
        let mut c = BTreeMap::new();
        c.insert((0usize, 1usize), AlgebraElement::from_integers(&[1, 0]));
        let err = Presentation::new(2, taus, None, c, BTreeMap::new()).unwrap_err();
        assert!(matches!(err, Error::NonInvertibleConstant { i: 1, j: 2, point: 1 }));
    }

    #[test]
    fn degree_is_subadditive_with_quasi_commutative_equality() {
        let p = swap_plane();
        let f = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![2, 1]), AlgebraElement::from_integers(&[1, 3])),
            (MultiIndex::new(vec![0, 1]), AlgebraElement::from_integers(&[2, 0])),
        ]);
        let g = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![1, 2]), AlgebraElement::from_integers(&[-1, 2])),
            (MultiIndex::zero(2), AlgebraElement::from_integers(&[0, 4])),
        ]);
        let fg = p.mul(&f, &g).unwrap();
        assert_eq!(fg.degree().unwrap(), f.degree().unwrap() + g.degree().unwrap());
    }

    #[test]
    fn memo_does_not_change_results() {
        let p = swap_plane();
        let f = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![0, 2]), AlgebraElement::from_integers(&[1, 1])),
            (MultiIndex::new(vec![1, 1]), AlgebraElement::from_integers(&[2, -1])),
        ]);
        let g = PBWElement::monomial(MultiIndex::new(vec![2, 0]), AlgebraElement::from_integers(&[1, 5]));
        let warm = p.mul(&f, &g).unwrap();
        let fresh = p.clone();
        assert_eq!(fresh.mul(&f, &g).unwrap(), warm);
        // Second call hits the memo and must agree.
        assert_eq!(p.mul(&f, &g).unwrap(), warm);
    }
}
