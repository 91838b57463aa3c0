//! Root fingerprints and reconstruction of semigroups from root data.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classify::{is_gorenstein_numerical, s_tilde_contains};
use crate::error::{Error, Result};
use crate::roots::roots_default;
use crate::semigroup::{minimal_generators_of_set, AffineSemigroup};
use crate::vector::IntVector;

/// `λ ↦ dim Θ_λ` over the nonzero root spaces with `|λ| ≤ degree_bound`,
/// sorted by `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub degree_bound: i64,
    pub dims: Vec<(IntVector, usize)>,
    /// Every root space in the window was stable under doubling the box.
    pub stabilized: bool,
}

impl Fingerprint {
    fn permuted(&self, perm: &[usize]) -> Vec<(IntVector, usize)> {
        let mut dims: Vec<_> = self.dims.iter().map(|(l, d)| (l.permuted(perm), *d)).collect();
        dims.sort();
        dims
    }
}

pub fn fingerprint(s: &AffineSemigroup, degree: i64) -> Result<Fingerprint> {
    let table = roots_default(s, degree)?;
    Ok(Fingerprint {
        n: s.dim(),
        degree_bound: degree,
        stabilized: table.all_stabilized(),
        dims: table.entries.iter().map(|(l, r)| (l.clone(), r.dim())).collect(),
    })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..n {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Equality of root data up to a permutation of coordinates.
pub fn fingerprints_equal(f1: &Fingerprint, f2: &Fingerprint) -> Result<bool> {
    if f1.n != f2.n || f1.degree_bound != f2.degree_bound {
        return Err(Error::BoundMismatch);
    }
    if f1.dims.len() != f2.dims.len() {
        return Ok(false);
    }
    Ok(permutations(f1.n).iter().any(|p| f1.permuted(p) == f2.dims))
}

/// The roots of full multiplicity `n`: the window of `S̃`.
pub fn ordinary_from_fingerprint(f: &Fingerprint) -> BTreeSet<IntVector> {
    f.dims
        .iter()
        .filter(|(l, d)| *d == f.n && l.is_nonnegative())
        .map(|(l, _)| l.clone())
        .collect()
}

/// The numerical semigroup with the given membership predicate and
/// conductor, as a generated semigroup.
pub fn numerical_from_set(is_member: impl Fn(i64) -> bool, conductor: i64) -> AffineSemigroup {
    let gens = minimal_generators_of_set(is_member, conductor);
    AffineSemigroup::new(gens.into_iter().map(|g| IntVector::new(vec![g])).collect())
        .expect("minimal generators are positive")
}

/// Recovers a Gorenstein numerical semigroup `S` from `S̃ = S ∪ {c - 1}`.
pub fn gorenstein_reconstruct(stilde: &AffineSemigroup) -> Result<AffineSemigroup> {
    let p = stilde.numerical_profile()?;
    let candidate = if p.conductor == 0 {
        numerical_from_set(|x| x == 0 || x >= 2, 2)
    } else {
        let a = p.multiplicity;
        let c = p.conductor + a;
        let candidate = numerical_from_set(|x| x != c - 1 && p.contains(x), c);
        if candidate.member(&IntVector::new(vec![c - 1])) {
            return Err(Error::NotRealizable(format!(
                "{} is a sum of two smaller members",
                c - 1
            )));
        }
        candidate
    };
    if !is_gorenstein_numerical(&candidate)? {
        return Err(Error::NotRealizable(format!("{candidate} is not symmetric")));
    }
    let q = candidate.numerical_profile()?;
    for x in 0..q.conductor.max(p.conductor) {
        if s_tilde_contains(&candidate, &IntVector::new(vec![x]))? != p.contains(x) {
            return Err(Error::NotRealizable(format!("S-tilde of {candidate} differs at {x}")));
        }
    }
    Ok(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::semigroup::same_set;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::new(v.to_vec())
    }

    /// Numerical semigroups with Frobenius number at most `max_f`, by
    /// running over all gap subsets of `1..=max_f`.
    fn brute_force(max_f: i64) -> Vec<AffineSemigroup> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << max_f) {
            let gap = |x: i64| x >= 1 && x <= max_f && mask >> (x - 1) & 1 == 1;
            let member = |x: i64| x >= 0 && !gap(x);
            let closed = (1..=max_f).all(|x| !gap(x) || (1..x).all(|y| !(member(y) && member(x - y))));
            if closed {
                out.push(numerical_from_set(member, max_f + 1));
            }
        }
        out
    }

    fn stilde_set(s: &AffineSemigroup) -> AffineSemigroup {
        let p = s.numerical_profile().unwrap();
        let m = |x: i64| x >= 0 && s_tilde_contains(s, &iv(&[x])).unwrap();
        numerical_from_set(m, p.conductor)
    }

    #[test]
    fn fingerprint_examples() {
        let f1 = fingerprint(&corpus::sextic_twin_1(), 8).unwrap();
        let f2 = fingerprint(&corpus::sextic_twin_2(), 8).unwrap();
        assert!(fingerprints_equal(&f1, &f2).unwrap());
        assert!(fingerprints_equal(&f1, &f1).unwrap());
        let a = fingerprint(&corpus::numerical(&[2, 3]), 6).unwrap();
        let b = fingerprint(&corpus::numerical(&[3, 4, 5]), 6).unwrap();
        assert!(fingerprints_equal(&a, &b).unwrap());
        let a = fingerprint(&corpus::numerical(&[3, 7, 8]), 10).unwrap();
        let b = fingerprint(&corpus::numerical(&[4, 5, 7]), 10).unwrap();
        assert!(fingerprints_equal(&a, &b).unwrap());
        let a = fingerprint(&corpus::cusp_line(), 4).unwrap();
        let b = fingerprint(&corpus::d_uple(2), 4).unwrap();
        assert!(!fingerprints_equal(&a, &b).unwrap());
        let c = fingerprint(&corpus::d_uple(2), 5).unwrap();
        assert_eq!(fingerprints_equal(&b, &c), Err(Error::BoundMismatch));
    }

    #[test]
    fn permutation_invariance() {
        for s in corpus::all().into_iter().filter(|s| s.dim() >= 2) {
            let f = fingerprint(&s, 4).unwrap();
            for p in permutations(s.dim()) {
                let g = fingerprint(&s.permuted(&p), 4).unwrap();
                assert!(fingerprints_equal(&f, &g).unwrap(), "{s} {p:?}");
            }
        }
    }

    #[test]
    fn ordinary_roots() {
        let s = corpus::cusp_line();
        let got = ordinary_from_fingerprint(&fingerprint(&s, 4).unwrap());
        let want: BTreeSet<_> = s
            .enumerate_box(4)
            .unwrap()
            .into_iter()
            .filter(|v| v.degree() <= 4)
            .collect();
        assert_eq!(got, want);

        let band = ordinary_from_fingerprint(&fingerprint(&corpus::degree_band(2, 2), 8).unwrap());
        let duple = corpus::d_uple(2);
        let want: BTreeSet<_> = duple
            .enumerate_box(8)
            .unwrap()
            .into_iter()
            .filter(|v| v.degree() <= 8)
            .collect();
        assert_eq!(band, want);

        let n = ordinary_from_fingerprint(&fingerprint(&corpus::numerical(&[2, 3]), 5).unwrap());
        assert_eq!(n, (0..=5).map(|x| iv(&[x])).collect());
    }

    #[test]
    fn gorenstein_examples() {
        let two_three = corpus::numerical(&[2, 3]);
        assert!(same_set(&gorenstein_reconstruct(&corpus::free(1)).unwrap(), &two_three));
        let r = gorenstein_reconstruct(&corpus::numerical(&[3, 5, 6, 7])).unwrap();
        assert!(same_set(&r, &corpus::numerical(&[3, 5])));
        let r = gorenstein_reconstruct(&two_three).unwrap();
        assert!(same_set(&r, &corpus::numerical(&[2, 5])));
        assert_eq!(gorenstein_reconstruct(&corpus::cusp_line()), Err(Error::NotNumerical));
    }

    #[test]
    fn gorenstein_against_exhaustive_search() {
        // a reconstruction from S-tilde with Frobenius number f has
        // Frobenius number at most 2f + 1
        let gorenstein: Vec<_> = brute_force(13)
            .into_iter()
            .filter(|s| is_gorenstein_numerical(s).unwrap())
            .collect();
        for stilde in &brute_force(6) {
            let matches: Vec<_> = gorenstein
                .iter()
                .filter(|s| s.numerical_profile().unwrap().conductor > 0)
                .filter(|s| same_set(&stilde_set(s), stilde))
                .collect();
            match gorenstein_reconstruct(stilde) {
                Ok(r) => {
                    assert_eq!(matches.len(), 1, "{stilde}");
                    assert!(same_set(&r, matches[0]));
                }
                Err(e) => {
                    assert!(matches!(e, Error::NotRealizable(_)), "{stilde}: {e}");
                    assert!(matches.is_empty(), "{stilde}");
                }
            }
        }
    }

    #[test]
    fn gorenstein_means_type_one() {
        for s in brute_force(14) {
            if is_gorenstein_numerical(&s).unwrap() {
                assert_eq!(crate::classify::cm_type_numerical(&s).unwrap(), 1, "{s}");
            }
        }
    }

    #[test]
    fn brute_force_counts() {
        // numerical semigroups with Frobenius number exactly f, f = 1..=6
        let all = brute_force(6);
        let mut by_f = [0usize; 7];
        for s in &all {
            let f = s.numerical_profile().unwrap().frobenius;
            if f >= 1 {
                by_f[f as usize] += 1;
            }
        }
        assert_eq!(&by_f[1..], &[1, 1, 2, 2, 5, 4]);
    }
}
