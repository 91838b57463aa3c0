//! Named semigroups used throughout the tests, the acceptance suite and the
//! CLI (`--gens` also accepts these names).

use crate::semigroup::AffineSemigroup;
use crate::vector::IntVector;

fn build(rows: Vec<Vec<i64>>) -> AffineSemigroup {
    AffineSemigroup::new(rows.into_iter().map(IntVector::new).collect()).expect("valid corpus semigroup")
}

/// Numerical semigroup `⟨gens⟩ ⊆ N`.
pub fn numerical(gens: &[i64]) -> AffineSemigroup {
    build(gens.iter().map(|&g| vec![g]).collect())
}

/// `N^n`.
pub fn free(n: usize) -> AffineSemigroup {
    build((0..n).map(|i| IntVector::unit(n, i).into_entries()).collect())
}

/// Cusp times a line: `⟨(2,0), (3,0), (0,1)⟩`.
pub fn cusp_line() -> AffineSemigroup {
    build(vec![vec![2, 0], vec![3, 0], vec![0, 1]])
}

/// Cone over the rational normal curve of degree `d`: `⟨(k, d-k) : 0 ≤ k ≤ d⟩`.
pub fn d_uple(d: i64) -> AffineSemigroup {
    build((0..=d).map(|k| vec![k, d - k]).collect())
}

/// `⟨(0,10), (3,7), (7,3), (8,2), (10,0)⟩`, whose ring is not Buchsbaum.
pub fn non_buchsbaum_plane() -> AffineSemigroup {
    build(vec![vec![0, 10], vec![3, 7], vec![7, 3], vec![8, 2], vec![10, 0]])
}

/// `{s ∈ N^2 : |s| = m·d, m ≥ l} ∪ {0}`; its Cohen-Macaulayfication is
/// [`d_uple`]`(d)`. Generated by the degrees `l·d, …, (2l-1)·d`.
pub fn degree_band(d: i64, l: i64) -> AffineSemigroup {
    let mut rows = Vec::new();
    for m in l..2 * l {
        let deg = m * d;
        rows.extend((0..=deg).map(|k| vec![k, deg - k]));
    }
    build(rows)
}

/// All `λ ∈ N^2` with `|λ| = 6` except `omit`.
pub fn sextic_without(omit: [i64; 2]) -> AffineSemigroup {
    build((0..=6).map(|k| vec![k, 6 - k]).filter(|v| v[..] != omit[..]).collect())
}

/// `S_1`: degree-6 generators without `(3,3)`.
pub fn sextic_twin_1() -> AffineSemigroup {
    sextic_without([3, 3])
}

/// `S_2`: degree-6 generators without `(2,4)`.
pub fn sextic_twin_2() -> AffineSemigroup {
    sextic_without([2, 4])
}

/// `⟨(1,0), (1,1), (0,2)⟩`: contains `e_1` but does not split off a line.
pub fn skew_line() -> AffineSemigroup {
    build(vec![vec![1, 0], vec![1, 1], vec![0, 2]])
}

/// Every named semigroup, labelled.
pub fn named() -> Vec<(&'static str, AffineSemigroup)> {
    vec![
        ("cusp-line", cusp_line()),
        ("duple-2", d_uple(2)),
        ("duple-3", d_uple(3)),
        ("non-buchsbaum", non_buchsbaum_plane()),
        ("band-2-2", degree_band(2, 2)),
        ("band-2-3", degree_band(2, 3)),
        ("sextic-1", sextic_twin_1()),
        ("sextic-2", sextic_twin_2()),
        ("skew-line", skew_line()),
        ("N", free(1)),
        ("N2", free(2)),
        ("num-2-3", numerical(&[2, 3])),
        ("num-3-4-5", numerical(&[3, 4, 5])),
        ("num-3-5", numerical(&[3, 5])),
        ("num-3-7-8", numerical(&[3, 7, 8])),
        ("num-4-5-7", numerical(&[4, 5, 7])),
    ]
}

pub fn by_name(name: &str) -> Option<AffineSemigroup> {
    named().into_iter().find(|(k, _)| *k == name).map(|(_, s)| s)
}

/// The corpus as a plain list.
pub fn all() -> Vec<AffineSemigroup> {
    named().into_iter().map(|(_, s)| s).collect()
}
