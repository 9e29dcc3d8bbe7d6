//! Exact rational Gaussian elimination: reduced row echelon form, null
//! space bases, ranks and span comparisons.
//!
//! Every subspace handed out of this module is in canonical form (the
//! nonzero rows of the RREF of its spanning set), so span equality is
//! literal equality of bases.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QVector = Vec<BigRational>;
pub type QMatrix = Vec<QVector>;

/// In-place reduced row echelon form. Returns the pivot columns.
pub fn rref(mat: &mut QMatrix) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pivot_row);
        let lead = mat[row][col].clone();
        if !lead.is_one() {
            for v in &mut mat[row][col..] {
                if !v.is_zero() {
                    *v /= &lead;
                }
            }
        }
        for r in 0..rows {
            if r == row || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for c in col..cols {
                if mat[row][c].is_zero() {
                    continue;
                }
                let delta = &factor * &mat[row][c];
                mat[r][c] -= delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[QVector]) -> usize {
    let mut mat: QMatrix = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    rref(&mut mat).len()
}

fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Canonical basis of the row span: the nonzero rows of the RREF.
pub fn canonical_row_basis(rows: &[QVector]) -> QMatrix {
    let mut mat: QMatrix = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    // Duplicate rows are common in commutator matrices; dropping them
    // before elimination is a cheap win.
    mat.sort();
    mat.dedup();
    rref(&mut mat);
    mat.retain(|r| !is_zero_vec(r));
    mat
}

/// Exact canonical basis of `{v : Mv = 0}` for a matrix given as rows over
/// `cols` columns.
pub fn rational_kernel(rows: &[QVector], cols: usize) -> QMatrix {
    let mut mat: QMatrix = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    mat.sort();
    mat.dedup();
    let pivots = rref(&mut mat);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = QMatrix::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (k, &p) in pivots.iter().enumerate() {
            if !mat[k][free].is_zero() {
                v[p] = -mat[k][free].clone();
            }
        }
        basis.push(v);
    }
    canonical_row_basis(&basis)
}

pub fn spans_equal(a: &[QVector], b: &[QVector]) -> bool {
    canonical_row_basis(a) == canonical_row_basis(b)
}

/// Does every row of `a` lie in the span of `b`?
pub fn span_contains(b: &[QVector], a: &[QVector]) -> bool {
    let rank_b = rank(b);
    let mut stacked: QMatrix = b.to_vec();
    stacked.extend(a.iter().cloned());
    rank(&stacked) == rank_b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qv(vals: &[i64]) -> QVector {
        vals.iter().map(|&v| q(v)).collect()
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let rows = vec![qv(&[1, 0]), qv(&[0, 1])];
        assert!(rational_kernel(&rows, 2).is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let rows = vec![qv(&[0, 0, 0]), qv(&[0, 0, 0])];
        let basis = rational_kernel(&rows, 3);
        assert_eq!(basis.len(), 3);
        assert_eq!(basis, vec![qv(&[1, 0, 0]), qv(&[0, 1, 0]), qv(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let rows = vec![qv(&[1, 1]), qv(&[2, 2])];
        let basis = rational_kernel(&rows, 2);
        assert_eq!(basis, vec![qv(&[1, -1])]);
        // Membership double-check: M v = 0.
        for row in &rows {
            let dot: BigRational = row.iter().zip(&basis[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn rref_normalizes_leading_entries() {
        let mut mat = vec![qv(&[0, 2, 4]), qv(&[3, 3, 3])];
        let pivots = rref(&mut mat);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(mat[0], qv(&[1, 0, -1]));
        assert_eq!(mat[1], qv(&[0, 1, 2]));
    }

    #[test]
    fn span_comparisons() {
        let a = vec![qv(&[1, 0, 1]), qv(&[0, 1, 1])];
        let b = vec![qv(&[1, 1, 2]), qv(&[1, -1, 0])];
        assert!(spans_equal(&a, &b));
        assert!(span_contains(&a, &[qv(&[2, 3, 5])]));
        assert!(!span_contains(&a, &[qv(&[0, 0, 1])]));
        assert_eq!(rank(&a), 2);
    }
}
