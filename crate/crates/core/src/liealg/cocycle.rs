//! Degree-0 derivations of `Θ(S)` on a degree window.
//!
//! A degree-0 derivation `Δ` maps each root space to itself. Pick the
//! canonical basis `X_{λ,k}` of every `Θ_λ` (for Buchsbaum `S` these are the
//! `D_{λi}`, `i ∈ M(λ)`) and write `Δ(X_{λ,k}) = Σ_l b_{λ,k,l} X_{λ,l}`. The
//! cocycle identity `Δ[X, Y] = [ΔX, Y] + [X, ΔY]` on every pair of basis
//! elements whose degrees and degree sum stay in the window is linear in the
//! `b`'s; comparing coefficients of `D_{λ+μ,m}` gives one equation per `m`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{SparseEchelon, SparseRow, Subspace};
use crate::roots::{roots_default, RootTable};
use crate::scalar::Field;
use crate::semigroup::AffineSemigroup;
use crate::vector::IntVector;
use crate::{Rational, RationalSubspace};

use super::derivation::bracket_vectors;

/// The unknown `b_{λ,i,m}`: coefficient of the `m`-th basis element of
/// `Θ_λ` in the image of the `i`-th. Basis elements are labelled by the
/// (0-based) pivot axis of their canonical vector, which is the axis of
/// `D_{λi}` for ordinary and exceptional roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Unknown {
    pub lambda: IntVector,
    pub i: usize,
    pub m: usize,
}

/// The assembled linear system, exposed so it can be checked by an
/// independent solver.
#[derive(Clone, Debug)]
pub struct CocycleSystem {
    pub degree_bound: i64,
    pub unknowns: Vec<Unknown>,
    pub equations: Vec<SparseRow<Rational>>,
    pub table: RootTable,
    offsets: BTreeMap<IntVector, usize>,
}

impl CocycleSystem {
    fn index(&self, lambda: &IntVector, k: usize, l: usize) -> usize {
        let d = self.table.entries[lambda].dim();
        self.offsets[lambda] + k * d + l
    }

    /// Unknown positions whose root has `|λ| ≤ degree`.
    pub fn coordinates_up_to(&self, degree: i64) -> Vec<usize> {
        (0..self.unknowns.len())
            .filter(|&u| self.unknowns[u].lambda.degree() <= degree)
            .collect()
    }

    /// Cochains of `ad(Σ c_r D_r)`: `b_{λ,k,k} = Σ_r c_r λ_r`, all other
    /// entries zero.
    pub fn inner_space(&self) -> RationalSubspace {
        let n = self.table.n;
        let vectors = (0..n).map(|r| {
            let mut v = vec![Rational::from_int(0); self.unknowns.len()];
            for (lambda, root) in &self.table.entries {
                for k in 0..root.dim() {
                    v[self.index(lambda, k, k)] = Rational::from_int(lambda[r]);
                }
            }
            v
        });
        Subspace::spanned_by(self.unknowns.len(), vectors)
    }
}

fn pivot(v: &[Rational]) -> usize {
    v.iter().position(|x| !x.is_zero()).expect("nonzero basis vector")
}

/// Builds the cocycle equations for all roots with `|λ| ≤ degree`.
pub fn cocycle_system(s: &AffineSemigroup, degree: i64) -> Result<CocycleSystem> {
    let table = roots_default(s, degree)?;
    if table.entries.keys().all(IntVector::is_zero) {
        return Err(Error::NoRoots { degree });
    }
    let mut unknowns = Vec::new();
    let mut offsets = BTreeMap::new();
    for (lambda, root) in &table.entries {
        offsets.insert(lambda.clone(), unknowns.len());
        let basis = root.space.basis();
        for x in basis {
            for y in basis {
                unknowns.push(Unknown {
                    lambda: lambda.clone(),
                    i: pivot(x),
                    m: pivot(y),
                });
            }
        }
    }
    let mut system = CocycleSystem {
        degree_bound: degree,
        unknowns,
        equations: Vec::new(),
        table,
        offsets,
    };

    let elements: Vec<(&IntVector, usize, &Vec<Rational>)> = system
        .table
        .entries
        .iter()
        .flat_map(|(l, r)| r.space.basis().iter().enumerate().map(move |(k, x)| (l, k, x)))
        .collect();
    let n = system.table.n;
    let mut equations = Vec::new();
    for (a, &(lambda, k, x)) in elements.iter().enumerate() {
        for &(mu, l, y) in &elements[a + 1..] {
            let nu = lambda + mu;
            let Some(target) = system.table.get(&nu) else { continue };
            let z = bracket_vectors(lambda, x, mu, y);
            let coords = target.space.coordinates(&z).ok_or_else(|| {
                Error::InconsistentTruncation(format!("[{lambda}, {mu}] leaves the computed root space at {nu}"))
            })?;
            let lambda_basis = system.table.entries[lambda].space.basis();
            let mu_basis = system.table.entries[mu].space.basis();
            // [X_{λ,l'}, Y] and [X, Y_{μ,l'}]
            let left: Vec<Vec<Rational>> = lambda_basis
                .iter()
                .map(|xp| bracket_vectors(lambda, xp, mu, y))
                .collect();
            let right: Vec<Vec<Rational>> = mu_basis.iter().map(|yp| bracket_vectors(lambda, x, mu, yp)).collect();
            let w = target.space.basis();
            for m in 0..n {
                let mut row: SparseRow<Rational> = BTreeMap::new();
                let mut add = |idx: usize, c: Rational| {
                    if !c.is_zero() {
                        let e = row.entry(idx).or_insert_with(|| Rational::from_int(0));
                        *e += c;
                    }
                };
                for (p, cp) in coords.iter().enumerate() {
                    if cp.is_zero() {
                        continue;
                    }
                    for (q, wq) in w.iter().enumerate() {
                        add(system.index(&nu, p, q), cp * &wq[m]);
                    }
                }
                for (lp, br) in left.iter().enumerate() {
                    add(system.index(lambda, k, lp), -br[m].clone());
                }
                for (lp, br) in right.iter().enumerate() {
                    add(system.index(mu, l, lp), -br[m].clone());
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    equations.push(row);
                }
            }
        }
    }
    system.equations = equations;
    Ok(system)
}

/// Solution of the truncated degree-0 cocycle problem.
#[derive(Clone, Debug)]
pub struct CocycleSolution {
    pub degree_bound: i64,
    pub unknown_index: Vec<Unknown>,
    pub solution_space: RationalSubspace,
    pub inner_space: RationalSubspace,
    /// Degree cut used for the comparison: `⌊degree / 2⌋`.
    pub restricted_degree: i64,
    pub restricted_solution_dim: usize,
    pub restricted_inner_dim: usize,
    /// Solution and inner spaces coincide after projecting to the unknowns
    /// with `|λ| ≤ restricted_degree`.
    pub restricted_equal: bool,
    pub equation_count: usize,
    pub rank: usize,
    /// All root spaces in the window were stable under doubling the box.
    pub roots_stabilized: bool,
}

impl CocycleSolution {
    pub fn inner_dim(&self) -> usize {
        self.inner_space.dim()
    }

    pub fn solution_dim(&self) -> usize {
        self.solution_space.dim()
    }

    pub fn inner_contained(&self) -> bool {
        self.inner_space.is_subspace_of(&self.solution_space)
    }
}

pub fn degree0_derivation_space(s: &AffineSemigroup, degree: i64) -> Result<CocycleSolution> {
    let system = cocycle_system(s, degree)?;
    let mut echelon = SparseEchelon::new(system.unknowns.len());
    for eq in &system.equations {
        echelon.insert(eq.clone());
    }
    let solution_space = echelon.kernel();
    let inner_space = system.inner_space();
    let restricted_degree = degree.div_euclid(2);
    let coords = system.coordinates_up_to(restricted_degree);
    let sol_r = solution_space.project(&coords);
    let inner_r = inner_space.project(&coords);
    Ok(CocycleSolution {
        degree_bound: degree,
        unknown_index: system.unknowns.clone(),
        restricted_degree,
        restricted_solution_dim: sol_r.dim(),
        restricted_inner_dim: inner_r.dim(),
        restricted_equal: sol_r == inner_r,
        equation_count: system.equations.len(),
        rank: echelon.rank(),
        roots_stabilized: system.table.all_stabilized(),
        solution_space,
        inner_space,
    })
}
