//! Affine semigroups `S ⊆ N^n`: exact membership, axis elements,
//! standardness checks and numerical-semigroup data for `n = 1`.

mod numerical;
mod table;

use std::fmt;
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice;
use crate::vector::{box_points, IntVector};

pub use numerical::{minimal_generators_of_set, NumericalProfile};
pub use table::{MembershipTable, MAX_TABLE_POINTS};

/// A finitely generated subsemigroup of `N^n` (with zero).
///
/// Generators are kept sorted and deduplicated but need not be minimal.
/// Membership queries share a monotone cache: a dense bitmap over a box that
/// only ever grows. Readers take a snapshot of the current table, so queries
/// are safe from any number of threads and always give the same answer.
pub struct AffineSemigroup {
    n: usize,
    generators: Vec<IntVector>,
    table: RwLock<Arc<MembershipTable>>,
}

/// Axis elements `α^i = a_i e_i`, with `a_i` minimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxisData {
    pub alphas: Vec<IntVector>,
    pub a: Vec<i64>,
}

/// Outcome of the standard/simplicial position checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardReport {
    /// Every coordinate axis meets `S`.
    pub axis_elements: bool,
    /// Each projection `π_i(S)` is a numerical semigroup (coordinate gcds are 1).
    pub projections_numerical: bool,
    /// The faces `S ∩ ker π_i` are pairwise distinct, each of rank `n - 1`.
    pub faces_distinct_full_rank: bool,
    /// `rank G(S) = n`.
    pub full_rank: bool,
    /// `S̄ = G(S) ∩ N^n`. Not computed: it follows from axis elements and
    /// full rank because the cone of `S` is then the whole orthant and the
    /// normalization is `G(S) ∩ C_S`.
    pub normalization_implied: bool,
}

impl StandardReport {
    pub fn is_standard_simplicial(&self) -> bool {
        self.axis_elements && self.projections_numerical && self.faces_distinct_full_rank && self.full_rank
    }
}

impl AffineSemigroup {
    pub fn new(generators: Vec<IntVector>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let n = first.dim();
        for (index, g) in generators.iter().enumerate() {
            g.check_dim(n)?;
            if !g.is_nonnegative() {
                return Err(Error::NegativeEntry { index });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index });
            }
        }
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        let table = MembershipTable::build(&generators, vec![0; n]);
        Ok(AffineSemigroup {
            n,
            generators,
            table: RwLock::new(Arc::new(table)),
        })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| IntVector::new(r.to_vec())).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn max_coordinate(&self) -> i64 {
        self.generators.iter().map(IntVector::max_entry).max().unwrap_or(0)
    }

    pub(crate) fn check_axis(&self, axis: usize) -> Result<()> {
        if axis < self.n {
            Ok(())
        } else {
            Err(Error::AxisOutOfRange { axis, n: self.n })
        }
    }

    /// A table covering at least the box `[0, extents]`.
    pub fn table_covering(&self, extents: &[i64]) -> Result<Arc<MembershipTable>> {
        {
            let t = self.table.read().expect("membership table poisoned");
            if extents.iter().zip(t.extents()).all(|(x, e)| x <= e) {
                return Ok(Arc::clone(&t));
            }
        }
        let mut guard = self.table.write().expect("membership table poisoned");
        let old = guard.extents().to_vec();
        if extents.iter().zip(&old).all(|(x, e)| x <= e) {
            return Ok(Arc::clone(&guard));
        }
        // grow geometrically along the axes that overflow
        let new: Vec<i64> = extents
            .iter()
            .zip(&old)
            .map(|(&x, &e)| if x <= e { e } else { x.max(e + e / 2).max(8) })
            .collect();
        let points = table::table_points(&new);
        let fitted = if points > MAX_TABLE_POINTS {
            let exact: Vec<i64> = extents.iter().zip(&old).map(|(&x, &e)| x.max(e)).collect();
            let p = table::table_points(&exact);
            if p > MAX_TABLE_POINTS {
                return Err(Error::BoxTooLarge { points: p });
            }
            exact
        } else {
            new
        };
        let t = Arc::new(MembershipTable::build(&self.generators, fitted));
        *guard = Arc::clone(&t);
        Ok(t)
    }

    /// Table covering the cube `[0, bound]^n`.
    pub fn table_cube(&self, bound: i64) -> Result<Arc<MembershipTable>> {
        self.table_covering(&vec![bound.max(0); self.n])
    }

    /// `v ∈ S`. Vectors with a negative coordinate are never members.
    pub fn contains(&self, v: &IntVector) -> Result<bool> {
        v.check_dim(self.n)?;
        if !v.is_nonnegative() {
            return Ok(false);
        }
        Ok(self.table_covering(v.entries())?.get(v))
    }

    /// Infallible membership for vectors of the right dimension.
    ///
    /// Panics on a dimension mismatch or when the box exceeds
    /// [`MAX_TABLE_POINTS`].
    pub fn member(&self, v: &IntVector) -> bool {
        self.contains(v)
            .unwrap_or_else(|e| panic!("membership query for {v}: {e}"))
    }

    /// Minimal axis elements `α^i`; errors if some axis carries no generator.
    pub fn axis_elements(&self) -> Result<AxisData> {
        let mut alphas = Vec::with_capacity(self.n);
        let mut a = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let on_axis = self
                .generators
                .iter()
                .any(|g| g.entries().iter().enumerate().all(|(j, &x)| j == i || x == 0));
            if !on_axis {
                return Err(Error::NotSimplicial { axis: i });
            }
            let limit = self.max_coordinate();
            let ai = (1..=limit)
                .find(|&k| self.member(&IntVector::unit(self.n, i).scale(k)))
                .expect("an axis generator bounds the scan");
            alphas.push(IntVector::unit(self.n, i).scale(ai));
            a.push(ai);
        }
        Ok(AxisData { alphas, a })
    }

    /// Generators of the face `S ∩ ker π_i`.
    pub fn face_generators(&self, axis: usize) -> Vec<IntVector> {
        self.generators.iter().filter(|g| g[axis] == 0).cloned().collect()
    }

    pub fn check_standard_simplicial(&self) -> StandardReport {
        let n = self.n;
        let axis_elements = self.axis_elements().is_ok();
        let projections_numerical = (0..n).all(|i| self.generators.iter().fold(0i64, |g, v| g.gcd(&v[i])) == 1);
        let faces: Vec<Vec<IntVector>> = (0..n).map(|i| self.face_generators(i)).collect();
        let face_ranks_ok = faces
            .iter()
            .all(|f| lattice::lattice_rank(f).expect("uniform dimension") == n - 1);
        // S ∩ ker π_i = S ∩ ker π_j iff every generator of either face vanishes
        // on both coordinates
        let faces_distinct = (0..n)
            .all(|i| (i + 1..n).all(|j| !(faces[i].iter().all(|g| g[j] == 0) && faces[j].iter().all(|g| g[i] == 0))));
        let full_rank = lattice::lattice_rank(&self.generators).expect("uniform dimension") == n;
        StandardReport {
            axis_elements,
            projections_numerical,
            faces_distinct_full_rank: face_ranks_ok && faces_distinct,
            full_rank,
            normalization_implied: axis_elements && full_rank,
        }
    }

    /// All members in the cube `[0, bound]^n`, lexicographically sorted.
    pub fn enumerate_box(&self, bound: i64) -> Result<Vec<IntVector>> {
        if bound < 0 {
            return Ok(Vec::new());
        }
        let t = self.table_cube(bound)?;
        let extents = vec![bound; self.n];
        Ok(box_points(&extents).filter(|p| t.get(p)).collect())
    }

    /// Members with `v_axis = 0` and all coordinates at most `bound`.
    pub fn face_elements(&self, axis: usize, bound: i64) -> Result<Vec<IntVector>> {
        self.check_axis(axis)?;
        if bound < 0 {
            return Ok(Vec::new());
        }
        let t = self.table_cube(bound)?;
        let mut extents = vec![bound; self.n];
        extents[axis] = 0;
        Ok(box_points(&extents).filter(|p| t.get(p)).collect())
    }

    /// Numerical-semigroup data; requires `n = 1` and gcd 1. The sieve runs
    /// up to `(max g)^2 + max g`.
    pub fn numerical_profile(&self) -> Result<NumericalProfile> {
        let m = self.max_coordinate();
        self.numerical_profile_with_bound(m * m + m)
    }

    pub fn numerical_profile_with_bound(&self, sieve_bound: i64) -> Result<NumericalProfile> {
        if self.n != 1 {
            return Err(Error::NotNumerical);
        }
        let gcd = self.generators.iter().fold(0i64, |g, v| g.gcd(&v[0]));
        if gcd != 1 {
            return Err(Error::NotNumerical);
        }
        let gens: Vec<i64> = self.generators.iter().map(|g| g[0]).collect();
        NumericalProfile::sieve(&gens, sieve_bound)
    }

    /// Whether `G(S)` contains `v`.
    pub fn group_contains(&self, v: &IntVector) -> Result<bool> {
        lattice::group_contains(&self.generators, v)
    }

    pub fn rank(&self) -> usize {
        lattice::lattice_rank(&self.generators).expect("uniform dimension")
    }

    /// Image under a coordinate permutation (`perm[j]` is the new position
    /// of coordinate `j`).
    pub fn permuted(&self, perm: &[usize]) -> AffineSemigroup {
        AffineSemigroup::new(self.generators.iter().map(|g| g.permuted(perm)).collect())
            .expect("permutation preserves validity")
    }
}

impl Clone for AffineSemigroup {
    fn clone(&self) -> Self {
        let t = Arc::clone(&self.table.read().expect("membership table poisoned"));
        AffineSemigroup {
            n: self.n,
            generators: self.generators.clone(),
            table: RwLock::new(t),
        }
    }
}

impl PartialEq for AffineSemigroup {
    /// Equality of generator lists (after canonical sorting), not of sets.
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl fmt::Debug for AffineSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if self.n == 1 {
                write!(f, "{}", g[0])?;
            } else {
                write!(f, "{g}")?;
            }
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for AffineSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Set equality of two semigroups of the same dimension, decided on the
/// minimal generators: `S = T` iff each generator set lies in the other.
pub fn same_set(a: &AffineSemigroup, b: &AffineSemigroup) -> bool {
    a.dim() == b.dim() && a.generators().iter().all(|g| b.member(g)) && b.generators().iter().all(|g| a.member(g))
}
