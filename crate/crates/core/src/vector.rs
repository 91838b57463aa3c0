//! Integer lattice vectors.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `Z^n`.
///
/// Coordinates are stored as `i64`. Everything that needs unbounded
/// intermediate values (Hermite forms, rational kernels, cocycle systems)
/// lifts into `BigInt`/`BigRational` before doing arithmetic, so the only
/// consumer of raw machine words is the membership table, whose extents are
/// memory-bound long before they approach `i64::MAX`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        IntVector(vec![0; n])
    }

    /// The unit vector `e_axis` (0-based axis).
    pub fn unit(n: usize, axis: usize) -> Self {
        let mut v = vec![0; n];
        v[axis] = 1;
        IntVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    /// Total degree `|v| = Σ v_j`.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn max_entry(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `true` when every coordinate is at most the matching one of `other`.
    pub fn le_componentwise(&self, other: &IntVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, k: i64) -> IntVector {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Ambient admissibility for root spaces of `Der k[t]`: either all
    /// coordinates are nonnegative, or exactly one equals `-1` and the rest
    /// are nonnegative. Returns the axis carrying the `-1`, if any.
    pub fn negative_axis(&self) -> Option<Option<usize>> {
        let mut neg = None;
        for (j, &x) in self.0.iter().enumerate() {
            if x < -1 || (x == -1 && neg.is_some()) {
                return None;
            }
            if x == -1 {
                neg = Some(j);
            }
        }
        Some(neg)
    }

    pub fn is_admissible(&self) -> bool {
        self.negative_axis().is_some()
    }

    /// Apply a coordinate permutation: result[perm[j]] = self[j].
    pub fn permuted(&self, perm: &[usize]) -> IntVector {
        let mut out = vec![0; self.0.len()];
        for (j, &x) in self.0.iter().enumerate() {
            out[perm[j]] = x;
        }
        IntVector(out)
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                found: self.dim(),
            })
        }
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.to_vec())
    }
}

impl Index<usize> for IntVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for IntVector {
    type Output = IntVector;
    fn add(self, rhs: IntVector) -> IntVector {
        &self + &rhs
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for IntVector {
    type Output = IntVector;
    fn sub(self, rhs: IntVector) -> IntVector {
        &self - &rhs
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, x) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Every integer vector with nonnegative coordinates bounded by `extents`,
/// in lexicographic order.
pub fn box_points(extents: &[i64]) -> impl Iterator<Item = IntVector> + '_ {
    let n = extents.len();
    let empty = extents.iter().any(|&e| e < 0);
    let mut cur = if empty { None } else { Some(vec![0i64; n]) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = cur.as_mut().unwrap();
        let mut j = n;
        loop {
            if j == 0 {
                cur = None;
                break;
            }
            j -= 1;
            if next[j] < extents[j] {
                next[j] += 1;
                for x in next.iter_mut().skip(j + 1) {
                    *x = 0;
                }
                break;
            }
        }
        Some(IntVector(out))
    })
}

/// Lattice points of the admissible root region `{λ : |λ| ≤ degree}` where
/// either `λ ∈ N^n` or exactly one coordinate is `-1`, in lexicographic order.
pub fn admissible_window(n: usize, degree: i64) -> Vec<IntVector> {
    fn rec(j: usize, cur: &mut Vec<i64>, neg: bool, sum: i64, degree: i64, out: &mut Vec<IntVector>) {
        if j == cur.len() {
            if sum <= degree {
                out.push(IntVector(cur.clone()));
            }
            return;
        }
        let lo = if neg { 0 } else { -1 };
        for x in lo.. {
            // a -1 in a later slot can still lower the sum by one
            let later = i64::from(!neg && x >= 0 && j + 1 < cur.len());
            if sum + x - later > degree {
                break;
            }
            cur[j] = x;
            rec(j + 1, cur, neg || x < 0, sum + x, degree, out);
        }
        cur[j] = 0;
    }
    let mut out = Vec::new();
    rec(0, &mut vec![0; n], false, 0, degree, &mut out);
    out
}
