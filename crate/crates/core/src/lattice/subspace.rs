use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Field;

/// A subspace of `F^n` held as the rows of its reduced row echelon form.
///
/// Two subspaces are equal exactly when their bases are, so `PartialEq` is
/// subspace equality.
#[derive(Clone, PartialEq)]
pub struct Subspace<F> {
    n: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(n: usize) -> Self {
        Subspace { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self::spanned_by(n, (0..n).map(|i| unit(n, i)))
    }

    /// Span of the coordinate axes in `axes`.
    pub fn axes(n: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        Self::spanned_by(n, axes.into_iter().map(|i| unit(n, i)))
    }

    pub fn spanned_by(n: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut red = RowReducer::new(n);
        for v in vectors {
            red.insert(v);
        }
        red.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Column index of the leading entry of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("zero basis row"))
            .collect()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.n);
        let mut r = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` lies
    /// outside the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots().into_iter().map(|p| v[p].clone()).collect();
        let mut rebuilt = vec![F::zero(); self.n];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (x, y) in rebuilt.iter_mut().zip(row) {
                *x = x.clone() + c.clone() * y.clone();
            }
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.n == other.n && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn intersects_trivially(&self) -> bool {
        self.basis.is_empty()
    }

    /// Image under the coordinate projection onto `coords` (in that order).
    pub fn project(&self, coords: &[usize]) -> Subspace<F> {
        Subspace::spanned_by(
            coords.len(),
            self.basis
                .iter()
                .map(|row| coords.iter().map(|&c| row[c].clone()).collect()),
        )
    }

    /// The orthogonal complement `{x : ⟨x, b⟩ = 0 for all b in self}`.
    pub fn annihilator(&self) -> Subspace<F> {
        let pivots = self.pivots();
        let free = (0..self.n).filter(|c| !pivots.contains(c));
        let vectors: Vec<Vec<F>> = free
            .map(|f| {
                let mut v = vec![F::zero(); self.n];
                v[f] = F::one();
                for (row, &p) in self.basis.iter().zip(&pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect();
        Subspace::spanned_by(self.n, vectors)
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, [", self.n)?;
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        write!(f, "])")
    }
}

fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Incremental dense reduced row echelon form.
#[derive(Clone, Debug)]
pub struct RowReducer<F> {
    n: usize,
    // sorted by pivot column
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> RowReducer<F> {
    pub fn new(n: usize) -> Self {
        RowReducer { n, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the spanning set. Returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.n);
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub fn into_subspace(self) -> Subspace<F> {
        Subspace {
            n: self.n,
            basis: self.rows.into_iter().map(|(_, r)| r).collect(),
        }
    }
}

/// A sparse linear equation `Σ coeff · x_index = 0`.
pub type SparseRow<F> = BTreeMap<usize, F>;

/// Sparse row echelon form for large homogeneous systems.
///
/// Rows are kept in (non-reduced) echelon form keyed by their leading
/// column; back-substitution happens once, in [`SparseEchelon::kernel`].
#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    n: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(n: usize) -> Self {
        SparseEchelon {
            n,
            pivots: BTreeMap::new(),
        }
    }

    pub fn num_unknowns(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds an equation. Returns `true` when it was independent of the
    /// equations seen so far.
    pub fn insert(&mut self, mut row: SparseRow<F>) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, lead_val)) = row.iter().next() else {
                return false;
            };
            assert!(lead < self.n, "unknown index out of range");
            match self.pivots.get(&lead) {
                Some(prow) => {
                    let f = lead_val.clone();
                    for (c, v) in prow {
                        let e = row.entry(*c).or_insert_with(F::zero);
                        *e = e.clone() - f.clone() * v.clone();
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = F::one() / lead_val.clone();
                    for v in row.values_mut() {
                        *v = v.clone() * inv.clone();
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Basis of the solution space as a canonical subspace of `F^n`.
    pub fn kernel(&self) -> Subspace<F> {
        // back-substitute from the last pivot upwards into fully reduced rows
        let mut reduced: BTreeMap<usize, SparseRow<F>> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let targets: Vec<usize> = r
                .keys()
                .copied()
                .filter(|c| *c != p && reduced.contains_key(c))
                .collect();
            for c in targets {
                let Some(f) = r.get(&c).cloned() else { continue };
                for (k, v) in &reduced[&c] {
                    let e = r.entry(*k).or_insert_with(F::zero);
                    *e = e.clone() - f.clone() * v.clone();
                    if e.is_zero() {
                        r.remove(k);
                    }
                }
            }
            reduced.insert(p, r);
        }
        let free: Vec<usize> = (0..self.n).filter(|c| !reduced.contains_key(c)).collect();
        let mut vectors = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![F::zero(); self.n];
            v[f] = F::one();
            for (&p, row) in &reduced {
                if let Some(x) = row.get(&f) {
                    v[p] = -x.clone();
                }
            }
            vectors.push(v);
        }
        Subspace::spanned_by(self.n, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_integer(x)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::spanned_by(3, vec![q(&[1, 2, 3]), q(&[2, 4, 7])]);
        let b = Subspace::spanned_by(3, vec![q(&[0, 0, 1]), q(&[3, 6, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn annihilator_of_line() {
        let line = Subspace::spanned_by(2, vec![q(&[3, 7])]);
        let ann = line.annihilator();
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&q(&[7, -3])));
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let eqs = [q(&[1, 1, 0, 0]), q(&[0, 1, -1, 0]), q(&[2, 3, -1, 0])];
        let mut sp = SparseEchelon::new(4);
        for e in &eqs {
            sp.insert(e.iter().cloned().enumerate().collect());
        }
        assert_eq!(sp.rank(), 2);
        let ker = sp.kernel();
        let want = Subspace::spanned_by(4, eqs.iter().cloned()).annihilator();
        assert_eq!(ker, want);
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Subspace::spanned_by(3, vec![q(&[1, 0, 2]), q(&[0, 1, 1])]);
        let v = q(&[2, 3, 7]);
        assert_eq!(s.coordinates(&v), Some(q(&[2, 3])));
        assert_eq!(s.coordinates(&q(&[1, 1, 1])), None);
    }

    #[test]
    fn projection() {
        let s = Subspace::spanned_by(3, vec![q(&[1, 0, 2]), q(&[0, 1, 1])]);
        assert_eq!(s.project(&[2]).dim(), 1);
        assert_eq!(s.project(&[0, 1]), Subspace::full(2));
    }
}
