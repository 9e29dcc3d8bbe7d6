//! Degree-bounded computation of the centralizer of the coefficient
//! algebra and of the center, by two independent routes:
//!
//! * the closed-form description for quasi-commutative presentations
//!   (coefficients vanish on the moved points of `tau^alpha`), graded by
//!   monomial, and
//! * an exact linear-algebra kernel over the coefficient coordinates
//!   `(alpha, point)`, driven entirely by normal-form multiplication.
//!
//! Commutation with the whole coefficient algebra is tested against the
//! indicator basis only; commutators are linear in the scalar and the
//! indicators span.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::funalg::{per_set, sep_set, AlgebraElement};
use crate::linalg::{canonical_row_basis, rational_kernel, QMatrix, QVector};
use crate::multiindex::{multi_indices_up_to, MultiIndex};
use crate::pbw::{PBWElement, Presentation};

/// Per-monomial coefficient-space bases, the graded shape the
/// quasi-commutative characterization produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub max_degree: u32,
    pub per_alpha: BTreeMap<MultiIndex, Vec<AlgebraElement>>,
}

impl GradedBasis {
    /// One `v x^alpha` element per graded basis vector.
    pub fn flatten(&self) -> Vec<PBWElement> {
        self.per_alpha
            .iter()
            .flat_map(|(alpha, vs)| {
                vs.iter().map(|v| PBWElement::monomial(alpha.clone(), v.clone()))
            })
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.per_alpha.values().map(Vec::len).sum()
    }
}

/// A list of linearly independent elements of degree at most `max_degree`,
/// in canonical (echelon) form over the `(alpha, point)` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub max_degree: u32,
    pub elements: Vec<PBWElement>,
}

impl SubspaceBasis {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }
}

/// Coordinate frame for elements of degree at most `max_degree`: columns
/// are `(alpha, point)` pairs in (deglex, point) order.
pub struct CoordinateFrame {
    monomials: Vec<MultiIndex>,
    index: HashMap<MultiIndex, usize>,
    points: usize,
}

impl CoordinateFrame {
    pub fn new(n: usize, max_degree: u32, points: usize) -> Self {
        let monomials = multi_indices_up_to(n, max_degree);
        let index = monomials.iter().cloned().zip(0..).collect();
        CoordinateFrame { monomials, index, points }
    }

    pub fn columns(&self) -> usize {
        self.monomials.len() * self.points
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.monomials
    }

    pub fn to_coords(&self, f: &PBWElement) -> Result<QVector> {
        let mut v = vec![BigRational::zero(); self.columns()];
        for (alpha, coeff) in f.terms() {
            let Some(&mi) = self.index.get(alpha) else {
                return Err(Error::Dimension(format!(
                    "term {alpha} exceeds the degree bound of the coordinate frame"
                )));
            };
            for (w, val) in coeff.values().iter().enumerate() {
                v[mi * self.points + w] = val.clone();
            }
        }
        Ok(v)
    }

    pub fn to_element(&self, v: &[BigRational]) -> PBWElement {
        let mut terms = Vec::new();
        for (mi, alpha) in self.monomials.iter().enumerate() {
            let slice = &v[mi * self.points..(mi + 1) * self.points];
            if slice.iter().all(Zero::is_zero) {
                continue;
            }
            terms.push((alpha.clone(), AlgebraElement::new(slice.to_vec())));
        }
        PBWElement::from_terms(terms)
    }

    /// Canonical coordinate matrix of the span of some elements.
    pub fn span_coords(&self, elements: &[PBWElement]) -> Result<QMatrix> {
        let rows = elements.iter().map(|f| self.to_coords(f)).collect::<Result<Vec<_>>>()?;
        Ok(canonical_row_basis(&rows))
    }
}

/// Closed-form centralizer of the coefficient algebra for
/// quasi-commutative presentations: for each `|alpha| <= max_degree`, the
/// coefficient space is spanned by the indicators of the points fixed by
/// `tau^alpha`.
pub fn centralizer_sep_basis(p: &Presentation, max_degree: u32) -> Result<GradedBasis> {
    if !p.is_quasi_commutative() {
        return Err(Error::NotQuasiCommutative);
    }
    let omega = p.omega();
    let mut per_alpha = BTreeMap::new();
    for alpha in multi_indices_up_to(p.n(), max_degree) {
        let fixed = per_set(p.taus(), &alpha)?;
        let basis: Vec<AlgebraElement> = fixed.iter().map(|&w| omega.indicator(w)).collect();
        per_alpha.insert(alpha, basis);
    }
    Ok(GradedBasis { max_degree, per_alpha })
}

fn kernel_of_commutators(
    p: &Presentation,
    max_degree: u32,
    ops: &[PBWElement],
) -> Result<SubspaceBasis> {
    let frame = CoordinateFrame::new(p.n(), max_degree, p.omega_size());
    let omega = p.omega();
    let ncols = frame.columns();

    // One matrix row per touched output coordinate (op, monomial, point),
    // allocated lazily; most coordinates are never hit.
    let mut row_of: HashMap<(usize, MultiIndex, usize), usize> = HashMap::new();
    let mut rows: QMatrix = Vec::new();

    for (mi, alpha) in frame.monomials().iter().enumerate() {
        for w in omega.points() {
            let col = mi * p.omega_size() + w;
            let basis_elem = PBWElement::monomial(alpha.clone(), omega.indicator(w));
            for (op_idx, g) in ops.iter().enumerate() {
                let commutator =
                    p.mul(g, &basis_elem)?.sub(&p.mul(&basis_elem, g)?)?;
                for (beta, coeff) in commutator.terms() {
                    for (theta, val) in coeff.values().iter().enumerate() {
                        if val.is_zero() {
                            continue;
                        }
                        let key = (op_idx, beta.clone(), theta);
                        let ri = *row_of.entry(key).or_insert_with(|| {
                            rows.push(vec![BigRational::zero(); ncols]);
                            rows.len() - 1
                        });
                        rows[ri][col] = val.clone();
                    }
                }
            }
        }
    }

    let kernel = rational_kernel(&rows, ncols);
    let elements = kernel.iter().map(|v| frame.to_element(v)).collect();
    Ok(SubspaceBasis { max_degree, elements })
}

/// Exact basis of `{f : deg f <= max_degree, f e_w = e_w f for all w}`,
/// computed as the null space of the indicator commutators. Works for any
/// presentation, derivations and remainders included.
pub fn centralizer_kernel(p: &Presentation, max_degree: u32) -> Result<SubspaceBasis> {
    let omega = p.omega();
    let ops: Vec<PBWElement> =
        omega.points().map(|w| p.scalar(omega.indicator(w))).collect();
    kernel_of_commutators(p, max_degree, &ops)
}

/// Exact basis of the degree-bounded center: elements commuting with every
/// indicator and with every generator.
pub fn center_direct(p: &Presentation, max_degree: u32) -> Result<SubspaceBasis> {
    let omega = p.omega();
    let mut ops: Vec<PBWElement> =
        omega.points().map(|w| p.scalar(omega.indicator(w))).collect();
    for i in 0..p.n() {
        ops.push(p.generator(i)?);
    }
    kernel_of_commutators(p, max_degree, &ops)
}

/// Outcome of the leading-coefficient necessary condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterOutcome {
    Pass,
    Violations(Vec<(MultiIndex, usize)>),
}

impl FilterOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, FilterOutcome::Pass)
    }
}

/// Necessary condition on the top total-degree slice: every coefficient of
/// maximal total degree must vanish on `Sep^alpha(Omega)`.
///
/// Lower-degree coefficients are exempt on purpose: with nonzero
/// derivations the scalar commutation side terms feed the lower degrees,
/// and genuine centralizer elements with nonzero lower coefficients on
/// moved points exist (see `centralizer_kernel_example_with_derivation`).
pub fn leading_coefficient_filter(p: &Presentation, f: &PBWElement) -> Result<FilterOutcome> {
    let top_degree = f.degree()?;
    let mut violations = Vec::new();
    for (alpha, coeff) in f.terms() {
        if alpha.degree() != top_degree {
            continue;
        }
        for w in sep_set(p.taus(), alpha)? {
            if !coeff.value(w).is_zero() {
                violations.push((alpha.clone(), w));
            }
        }
    }
    if violations.is_empty() {
        Ok(FilterOutcome::Pass)
    } else {
        Ok(FilterOutcome::Violations(violations))
    }
}

/// All `(alpha, point)` pairs, over every term, where a coefficient is
/// nonzero on a moved point. Empty for quasi-commutative centralizer
/// elements; with derivations this probes the stronger all-degrees reading
/// of the necessary condition without asserting it.
pub fn sep_support_violations(p: &Presentation, f: &PBWElement) -> Result<Vec<(MultiIndex, usize)>> {
    let mut out = Vec::new();
    for (alpha, coeff) in f.terms() {
        for w in sep_set(p.taus(), alpha)? {
            if !coeff.value(w).is_zero() {
                out.push((alpha.clone(), w));
            }
        }
    }
    Ok(out)
}

/// Checks centrality of the single graded piece `v x^alpha` in a
/// quasi-commutative presentation by comparing `x_i (v x^alpha)` with
/// `(v x^alpha) x_i` for every generator.
pub fn center_condition_quasicomm(
    p: &Presentation,
    alpha: &MultiIndex,
    v: &AlgebraElement,
) -> Result<bool> {
    if !p.is_quasi_commutative() {
        return Err(Error::NotQuasiCommutative);
    }
    for w in sep_set(p.taus(), alpha)? {
        if !v.value(w).is_zero() {
            return Err(Error::SupportViolation { alpha: alpha.clone(), point: w });
        }
    }
    let f = PBWElement::monomial(alpha.clone(), v.clone());
    for i in 0..p.n() {
        let xi = p.generator(i)?;
        if p.mul(&xi, &f)? != p.mul(&f, &xi)? {
            return Ok(false);
        }
    }
    Ok(true)
}
