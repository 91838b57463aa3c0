#![allow(dead_code)]

use semiroot::reconstruct::numerical_from_set;
use semiroot::AffineSemigroup;

/// Every numerical semigroup with Frobenius number at most `max_f` (`N`
/// included), as a bitmask of its members in `0..=max_f`.
///
/// Gap subsets of `1..=max_f` are walked in increasing order; `x` may be
/// declared a gap only when it is not a sum of two smaller members, which is
/// exactly closure under addition. `max_f` must be below 64.
pub fn numerical_semigroups(max_f: u32) -> Vec<u64> {
    fn walk(x: u32, max_f: u32, members: u64, out: &mut Vec<u64>) {
        if x > max_f {
            out.push(members);
            return;
        }
        let forced = (1..x).any(|y| members >> y & 1 == 1 && members >> (x - y) & 1 == 1);
        walk(x + 1, max_f, members | 1 << x, out);
        if !forced {
            walk(x + 1, max_f, members, out);
        }
    }
    let mut out = Vec::new();
    walk(1, max_f, 1, &mut out);
    out
}

pub fn mask_contains(mask: u64, max_f: u32, x: i64) -> bool {
    x >= 0 && (x > max_f as i64 || mask >> x & 1 == 1)
}

/// Largest gap, `-1` for `N`.
pub fn mask_frobenius(mask: u64, max_f: u32) -> i64 {
    (1..=max_f as i64).rev().find(|&x| mask >> x & 1 == 0).unwrap_or(-1)
}

/// `x ∈ S ⇔ F - x ∉ S` for `0 ≤ x ≤ F`.
pub fn mask_symmetric(mask: u64, max_f: u32) -> bool {
    let f = mask_frobenius(mask, max_f);
    f > 0 && (0..=f).all(|x| mask_contains(mask, max_f, x) != mask_contains(mask, max_f, f - x))
}

pub fn semigroup_from_mask(mask: u64, max_f: u32) -> AffineSemigroup {
    numerical_from_set(|x| mask_contains(mask, max_f, x), max_f as i64 + 1)
}
