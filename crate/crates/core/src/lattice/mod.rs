//! Exact integer and rational linear algebra: Hermite normal forms, the
//! subgroup `G(S) ⊆ Z^n` spanned by a generator set, and canonical rational
//! subspaces.

mod hnf;
mod subspace;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Result;
use crate::scalar::Field;
use crate::vector::IntVector;

pub use hnf::{hermite_normal_form, IntMatrix};
pub use subspace::{RowReducer, SparseEchelon, SparseRow, Subspace};

fn check_uniform(vectors: &[IntVector], n: usize) -> Result<()> {
    vectors.iter().try_for_each(|v| v.check_dim(n))
}

fn generator_matrix(generators: &[IntVector], n: usize) -> IntMatrix<BigInt> {
    let rows: Vec<Vec<i64>> = generators.iter().map(|g| g.entries().to_vec()).collect();
    if rows.is_empty() {
        IntMatrix::from_i64_rows(n, &[vec![0; n]])
    } else {
        IntMatrix::from_i64_rows(n, &rows)
    }
}

/// The nonzero rows of the Hermite normal form of the generators: a
/// canonical basis of the subgroup they span.
pub fn lattice_basis(generators: &[IntVector], n: usize) -> Result<Vec<Vec<BigInt>>> {
    check_uniform(generators, n)?;
    let (h, _) = hermite_normal_form(&generator_matrix(generators, n));
    Ok(h.rows()
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect())
}

/// Decides `v ∈ G`, the subgroup of `Z^n` generated by `generators`.
pub fn group_contains(generators: &[IntVector], v: &IntVector) -> Result<bool> {
    let n = v.dim();
    let basis = lattice_basis(generators, n)?;
    Ok(in_lattice(&basis, v))
}

/// Membership in the lattice spanned by an HNF basis (integer back-substitution).
pub fn in_lattice(hnf_basis: &[Vec<BigInt>], v: &IntVector) -> bool {
    let mut residual: Vec<BigInt> = v.entries().iter().map(|&x| BigInt::from(x)).collect();
    for row in hnf_basis {
        let p = row.iter().position(|x| !x.is_zero()).expect("zero row in basis");
        if residual[..p].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, r) = residual[p].div_rem(&row[p]);
        if !r.is_zero() {
            return false;
        }
        for (x, y) in residual.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    residual.iter().all(Zero::is_zero)
}

/// Rank of the subgroup generated by `generators`.
pub fn lattice_rank(generators: &[IntVector]) -> Result<usize> {
    let Some(first) = generators.first() else {
        return Ok(0);
    };
    Ok(lattice_basis(generators, first.dim())?.len())
}

/// `{b ∈ F^n : ⟨b, s⟩ = 0 for every constraint s}` in canonical form.
pub fn solve_kernel<F: Field>(n: usize, constraints: &[IntVector]) -> Result<Subspace<F>> {
    check_uniform(constraints, n)?;
    let mut red = RowReducer::new(n);
    for c in constraints {
        if red.rank() == n {
            break;
        }
        red.insert(c.entries().iter().map(|&x| F::from_int(x)).collect());
    }
    Ok(red.into_subspace().annihilator())
}

/// [`solve_kernel`] over the rationals.
pub fn solve_rational_kernel(n: usize, constraints: &[IntVector]) -> Result<crate::RationalSubspace> {
    solve_kernel(n, constraints)
}
