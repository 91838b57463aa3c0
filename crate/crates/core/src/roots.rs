//! Root data of `Θ(S) = Der k[S]` inside `Der k[t]`.
//!
//! The root space `Θ_λ` is a space of coefficient vectors `b` with
//! `Σ b_i D_{λi} ∈ Θ(S)`, where `D_{λi} = t^λ t_i ∂_i`. Since
//! `D_{λi} t^s = s_i t^{λ+s}`, a vector `b` belongs to `Θ_λ` iff
//! `⟨b, s⟩ = 0` for every `s ∈ S` with `λ + s ∉ S`; we impose that for all
//! members `s` in a box, which yields a subspace containing the true `Θ_λ`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::classify::s_tilde_contains;
use crate::error::Result;
use crate::lattice::RowReducer;
use crate::scalar::Field;
use crate::semigroup::AffineSemigroup;
use crate::vector::{admissible_window, box_points, IntVector};
use crate::{Rational, RationalSubspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RootKind {
    /// Full space: `λ ∈ S̃`.
    Ordinary,
    /// Spanned by `D_{λi}` alone (0-based axis).
    Exceptional(usize),
    /// Any other nonzero space; only possible when `k[S]` is not Buchsbaum.
    Mixed,
    Empty,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSpace {
    pub lambda: IntVector,
    pub space: RationalSubspace,
    pub kind: RootKind,
    /// Constraint box used.
    pub bound: i64,
    /// Doubling the box did not shrink the space.
    pub stabilized: bool,
}

impl RootSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// `λ ∈ Λ_i`: `λ + g ∈ S` for every generator with `g_i ≠ 0` (0-based axis).
/// Exact, since every member with nonzero `i`-th coordinate has such a
/// generator as a summand.
pub fn lambda_i_contains(s: &AffineSemigroup, lambda: &IntVector, axis: usize) -> Result<bool> {
    lambda.check_dim(s.dim())?;
    s.check_axis(axis)?;
    Ok(s.generators()
        .iter()
        .filter(|g| g[axis] != 0)
        .all(|g| s.member(&(lambda + g))))
}

/// Default constraint box for root spaces up to `degree`:
/// `2 · max(degree, 1) · max generator coordinate`.
pub fn default_root_bound(s: &AffineSemigroup, degree: i64) -> i64 {
    2 * degree.max(1) * s.max_coordinate()
}

fn constrained_space(s: &AffineSemigroup, lambda: &IntVector, bound: i64) -> Result<RationalSubspace> {
    let n = s.dim();
    let Some(neg) = lambda.negative_axis() else {
        return Ok(RationalSubspace::zero(n));
    };
    let mut constraints = RowReducer::<Rational>::new(n);
    if let Some(i) = neg {
        for j in (0..n).filter(|&j| j != i) {
            constraints.insert(unit_row(n, j));
        }
    }
    let extents: Vec<i64> = lambda.entries().iter().map(|&x| bound + x.max(0)).collect();
    let table = s.table_covering(&extents)?;
    let cube = vec![bound; n];
    for v in box_points(&cube) {
        if constraints.rank() == n {
            break;
        }
        if table.get(&v) && !table.get(&(lambda + &v)) {
            constraints.insert(v.entries().iter().map(|&x| Rational::from_int(x)).collect());
        }
    }
    Ok(constraints.into_subspace().annihilator())
}

fn unit_row(n: usize, j: usize) -> Vec<Rational> {
    (0..n).map(|k| Rational::from_int(i64::from(k == j))).collect()
}

fn classify_space(lambda: &IntVector, space: &RationalSubspace) -> RootKind {
    let n = lambda.dim();
    match space.dim() {
        0 => RootKind::Empty,
        d if d == n && lambda.is_nonnegative() => RootKind::Ordinary,
        1 => {
            let b = &space.basis()[0];
            let support: Vec<usize> = (0..n).filter(|&j| !b[j].is_zero()).collect();
            if support.len() == 1 {
                RootKind::Exceptional(support[0])
            } else {
                RootKind::Mixed
            }
        }
        _ => RootKind::Mixed,
    }
}

/// `Θ_λ` computed from the members in `[0, bound]^n`, with a stabilization
/// check against `[0, 2·bound]^n`.
pub fn root_space(s: &AffineSemigroup, lambda: &IntVector, bound: i64) -> Result<RootSpace> {
    lambda.check_dim(s.dim())?;
    let space = constrained_space(s, lambda, bound)?;
    let stabilized = space.dim() == 0 || constrained_space(s, lambda, 2 * bound)?.dim() == space.dim();
    Ok(RootSpace {
        lambda: lambda.clone(),
        kind: classify_space(lambda, &space),
        space,
        bound,
        stabilized,
    })
}

/// All nonzero root spaces with `|λ| ≤ degree`.
#[derive(Clone, Debug)]
pub struct RootTable {
    pub n: usize,
    pub degree_bound: i64,
    pub constraint_bound: i64,
    pub entries: BTreeMap<IntVector, RootSpace>,
}

impl RootTable {
    pub fn get(&self, lambda: &IntVector) -> Option<&RootSpace> {
        self.entries.get(lambda)
    }

    pub fn roots(&self) -> impl Iterator<Item = &IntVector> {
        self.entries.keys()
    }

    pub fn of_kind(&self, kind: RootKind) -> Vec<IntVector> {
        self.entries
            .values()
            .filter(|r| r.kind == kind)
            .map(|r| r.lambda.clone())
            .collect()
    }

    pub fn all_stabilized(&self) -> bool {
        self.entries.values().all(|r| r.stabilized)
    }

    pub fn has_negative_degree_root(&self) -> bool {
        self.entries.keys().any(|l| l.degree() < 0)
    }
}

pub fn roots_up_to(s: &AffineSemigroup, degree: i64, bound: i64) -> Result<RootTable> {
    let mut entries = BTreeMap::new();
    for lambda in admissible_window(s.dim(), degree) {
        let r = root_space(s, &lambda, bound)?;
        if r.dim() > 0 {
            entries.insert(lambda, r);
        }
    }
    Ok(RootTable {
        n: s.dim(),
        degree_bound: degree,
        constraint_bound: bound,
        entries,
    })
}

/// [`roots_up_to`] with [`default_root_bound`].
pub fn roots_default(s: &AffineSemigroup, degree: i64) -> Result<RootTable> {
    roots_up_to(s, degree, default_root_bound(s, degree))
}

/// `E_i = Λ_i \ S̃` within `|λ| ≤ degree`, over the region `λ_i ≥ -1`,
/// `λ_j ≥ 0` for `j ≠ i`. Sorted.
pub fn exceptional_roots(s: &AffineSemigroup, axis: usize, degree: i64) -> Result<Vec<IntVector>> {
    s.check_axis(axis)?;
    let mut out = Vec::new();
    for lambda in admissible_window(s.dim(), degree) {
        if matches!(lambda.negative_axis(), Some(Some(j)) if j != axis) {
            continue;
        }
        if lambda_i_contains(s, &lambda, axis)? && !s_tilde_contains(s, &lambda)? {
            out.push(lambda);
        }
    }
    Ok(out)
}

fn is_exceptional(s: &AffineSemigroup, lambda: &IntVector, axis: usize) -> Result<bool> {
    Ok(lambda[axis] >= -1
        && (0..s.dim()).all(|j| j == axis || lambda[j] >= 0)
        && lambda_i_contains(s, lambda, axis)?
        && !s_tilde_contains(s, lambda)?)
}

/// Generators of `E_i` as a module over `A_i = ⟨α^j : j ≠ i⟩`: the
/// exceptional roots `λ` such that no `λ - α^j` (`j ≠ i`) is exceptional.
pub fn exceptional_generators(s: &AffineSemigroup, axis: usize, degree: i64) -> Result<Vec<IntVector>> {
    let alphas = s.axis_elements()?.alphas;
    let mut out = Vec::new();
    for lambda in exceptional_roots(s, axis, degree)? {
        let mut minimal = true;
        for (j, a) in alphas.iter().enumerate() {
            if j != axis && is_exceptional(s, &(&lambda - a), axis)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// The `A_i`-orbit of `generators` restricted to `|λ| ≤ degree`, sorted.
pub fn regenerate(generators: &[IntVector], alphas: &[IntVector], axis: usize, degree: i64) -> Vec<IntVector> {
    let mut seen: BTreeSet<IntVector> = BTreeSet::new();
    let mut frontier: Vec<IntVector> = generators.iter().filter(|g| g.degree() <= degree).cloned().collect();
    while let Some(v) = frontier.pop() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for (j, a) in alphas.iter().enumerate() {
            let w = &v + a;
            if j != axis && w.degree() <= degree && !seen.contains(&w) {
                frontier.push(w);
            }
        }
    }
    seen.into_iter().collect()
}
