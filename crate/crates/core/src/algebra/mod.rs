//! Exact integer linear algebra.

mod abelian;
mod matrix;
mod snf;

pub use abelian::{FgAbGroup, GradedAbGroup, Truncation};
pub use matrix::{IntegerMatrix, SparseRow};
pub use snf::{determinant, invariant_factors, smith_normal_form, InvariantFactors, SmithForm};

pub(crate) use matrix::normalize_row;

use crate::error::{Error, Result};

/// `ker(z) / im(b)` for composable `b` then `z` with `z · b = 0`.
///
/// The kernel basis is read off the Smith form of `z`; `b` is rewritten in
/// that basis and its own invariant factors give the quotient.
pub fn subquotient_group(z: &IntegerMatrix, b: &IntegerMatrix) -> Result<FgAbGroup> {
    if z.cols() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "Z is {}x{} but B is {}x{}",
            z.rows(),
            z.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if !z.mul(b)?.is_zero() {
        return Err(Error::CompositionNotZero(String::new()));
    }
    let sf = smith_normal_form(z);
    let n = z.cols();
    let kernel_rows: Vec<usize> = (sf.rank..n).collect();
    let all_cols: Vec<usize> = (0..b.cols()).collect();
    let b_new = sf.v_inv.mul(b)?.submatrix(&kernel_rows, &all_cols);
    let inv = invariant_factors(&b_new);
    Ok(FgAbGroup::new(kernel_rows.len() - inv.rank, inv.torsion))
}

/// Homology at a position of dimension `dim` from the invariants of the
/// incoming and outgoing maps. Valid because kernels of integer maps are
/// saturated, so the cokernel of the incoming map inside the kernel has the
/// same torsion as inside the whole module.
pub fn homology_from_invariants(dim: usize, incoming: &InvariantFactors, outgoing_rank: usize) -> FgAbGroup {
    FgAbGroup::new(
        dim - outgoing_rank - incoming.rank,
        incoming.torsion.iter().cloned(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_of_two() {
        let g = subquotient_group(&IntegerMatrix::zeros(1, 1), &IntegerMatrix::from_rows(&[vec![2]])).unwrap();
        assert_eq!(g, FgAbGroup::cyclic(2));
    }

    #[test]
    fn free_kernel_no_boundaries() {
        let g = subquotient_group(&IntegerMatrix::from_rows(&[vec![0, 0]]), &IntegerMatrix::zeros(2, 0)).unwrap();
        assert_eq!(g, FgAbGroup::free(2));
    }

    #[test]
    fn composition_must_vanish() {
        let z = IntegerMatrix::from_rows(&[vec![1]]);
        let b = IntegerMatrix::from_rows(&[vec![1]]);
        assert!(matches!(subquotient_group(&z, &b), Err(Error::CompositionNotZero(_))));
    }

    #[test]
    fn degree_one_of_the_cubic_complex() {
        // Z --[3,3]^T--> Z^2 --[-2,2]--> Z: H^1 = ker[-2,2] / im[3,3]^T = Z/3.
        let z = IntegerMatrix::from_rows(&[vec![-2, 2]]);
        let b = IntegerMatrix::from_rows(&[vec![3], vec![3]]);
        assert_eq!(subquotient_group(&z, &b).unwrap(), FgAbGroup::cyclic(3));
        // The transposed reading has Z·B = 0 as well but computes a different position.
        let z = IntegerMatrix::from_rows(&[vec![3, 3]]);
        let b = IntegerMatrix::from_rows(&[vec![-2], vec![2]]);
        assert_eq!(subquotient_group(&z, &b).unwrap(), FgAbGroup::cyclic(2));
    }
}
