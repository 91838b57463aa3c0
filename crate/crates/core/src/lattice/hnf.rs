use std::fmt;

use crate::scalar::IntegerRing;

/// A dense rectangular integer matrix stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix<T> {
    cols: usize,
    rows: Vec<Vec<T>>,
}

impl<T: IntegerRing> IntMatrix<T> {
    pub fn new(cols: usize, rows: Vec<Vec<T>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { cols, rows }
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::new(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| T::from(x)).collect()).collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        IntMatrix { cols: n, rows }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix<T>) -> IntMatrix<T> {
        assert_eq!(self.cols, other.num_rows());
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.cols)
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(T::zero(), |acc, (a, orow)| acc + a.clone() * orow[j].clone())
                    })
                    .collect()
            })
            .collect();
        IntMatrix { cols: other.cols, rows }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn determinant(&self) -> T {
        let n = self.rows.len();
        assert_eq!(n, self.cols, "determinant of a non-square matrix");
        if n == 0 {
            return T::one();
        }
        let mut a = self.rows.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = v / prev.clone();
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// Number of nonzero rows.
    pub fn nonzero_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).count()
    }
}

impl<T: fmt::Display> fmt::Debug for IntMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        write!(f, "]")
    }
}

fn combine_rows<T: IntegerRing>(rows: &mut [Vec<T>], p: usize, i: usize, x: &T, y: &T, z: &T, w: &T) {
    // (row_p, row_i) <- (x row_p + y row_i, z row_p + w row_i)
    let (rp, ri) = (rows[p].clone(), rows[i].clone());
    for k in 0..rp.len() {
        rows[p][k] = x.clone() * rp[k].clone() + y.clone() * ri[k].clone();
        rows[i][k] = z.clone() * rp[k].clone() + w.clone() * ri[k].clone();
    }
}

fn add_multiple<T: IntegerRing>(rows: &mut [Vec<T>], target: usize, src: usize, q: &T) {
    let s = rows[src].clone();
    for (t, v) in rows[target].iter_mut().zip(s) {
        *t = t.clone() - q.clone() * v;
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u · m = h`. The nonzero rows of
/// `h` come first, are in echelon form with positive pivots, and every entry
/// above a pivot lies in `[0, pivot)`. The form is unique, so the output is
/// deterministic.
pub fn hermite_normal_form<T: IntegerRing>(m: &IntMatrix<T>) -> (IntMatrix<T>, IntMatrix<T>) {
    let r = m.num_rows();
    let c = m.num_cols();
    let mut h = m.rows.clone();
    let mut u = IntMatrix::<T>::identity(r).rows;
    let mut p = 0;
    for col in 0..c {
        if p == r {
            break;
        }
        let Some(first) = (p..r).find(|&i| !h[i][col].is_zero()) else {
            continue;
        };
        if first != p {
            h.swap(first, p);
            u.swap(first, p);
        }
        for i in p + 1..r {
            if h[i][col].is_zero() {
                continue;
            }
            let a = h[p][col].clone();
            let b = h[i][col].clone();
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            let (x, y) = (eg.x, eg.y);
            let z = -(b / g.clone());
            let w = a / g;
            combine_rows(&mut h, p, i, &x, &y, &z, &w);
            combine_rows(&mut u, p, i, &x, &y, &z, &w);
        }
        if h[p][col].is_negative() {
            for v in h[p].iter_mut().chain(u[p].iter_mut()) {
                *v = -v.clone();
            }
        }
        let pivot = h[p][col].clone();
        for k in 0..p {
            let q = h[k][col].div_floor(&pivot);
            if !q.is_zero() {
                add_multiple(&mut h, k, p, &q);
                add_multiple(&mut u, k, p, &q);
            }
        }
        p += 1;
    }
    (IntMatrix { cols: c, rows: h }, IntMatrix { cols: r, rows: u })
}
