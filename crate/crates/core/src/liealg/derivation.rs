use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::vector::IntVector;

use super::ring::RingElement;

/// A finite linear combination of monomial derivations
/// `D_{λi} = t^λ t_i ∂_i`, keyed by `(λ, i)` with a 0-based axis.
#[derive(Clone, PartialEq)]
pub struct Derivation<F> {
    n: usize,
    terms: BTreeMap<(IntVector, usize), F>,
}

impl<F: Field> Derivation<F> {
    pub fn zero(n: usize) -> Self {
        Derivation {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · D_{λ, axis}`.
    pub fn monomial(lambda: IntVector, axis: usize, coeff: F) -> Self {
        let n = lambda.dim();
        assert!(axis < n, "axis out of range");
        let mut d = Self::zero(n);
        d.add_term(lambda, axis, coeff);
        d
    }

    /// The Cartan element `D_axis = t_axis ∂_axis`.
    pub fn cartan(n: usize, axis: usize) -> Self {
        Self::monomial(IntVector::zero(n), axis, F::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (IntVector, usize, F)>) -> Result<Self> {
        let mut d = Self::zero(n);
        for (lambda, axis, c) in terms {
            lambda.check_dim(n)?;
            if axis >= n {
                return Err(Error::AxisOutOfRange { axis, n });
            }
            d.add_term(lambda, axis, c);
        }
        Ok(d)
    }

    /// `Σ_i b_i D_{λi}` from a coefficient vector.
    pub fn from_vector(lambda: &IntVector, b: &[F]) -> Self {
        let mut d = Self::zero(lambda.dim());
        for (i, c) in b.iter().enumerate() {
            d.add_term(lambda.clone(), i, c.clone());
        }
        d
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntVector, usize, &F)> {
        self.terms.iter().map(|((l, i), c)| (l, *i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &IntVector, axis: usize) -> F {
        self.terms.get(&(lambda.clone(), axis)).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, lambda: IntVector, axis: usize, c: F) {
        if c.is_zero() {
            return;
        }
        let key = (lambda, axis);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// Splits into homogeneous parts: `λ ↦ (b_1, …, b_n)`.
    pub fn components(&self) -> BTreeMap<IntVector, Vec<F>> {
        let mut out: BTreeMap<IntVector, Vec<F>> = BTreeMap::new();
        for ((l, i), c) in &self.terms {
            out.entry(l.clone()).or_insert_with(|| vec![F::zero(); self.n])[*i] = c.clone();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut d = self.clone();
        for ((l, i), c) in &other.terms {
            d.add_term(l.clone(), *i, c.clone());
        }
        Ok(d)
    }

    pub fn scale(&self, k: &F) -> Self {
        let mut d = Self::zero(self.n);
        for ((l, i), c) in &self.terms {
            d.add_term(l.clone(), *i, c.clone() * k.clone());
        }
        d
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Lie bracket, extending `[D_{λi}, D_{μj}] = μ_i D_{λ+μ,j} - λ_j D_{λ+μ,i}`
    /// bilinearly.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut d = Self::zero(self.n);
        for ((l, i), a) in &self.terms {
            for ((m, j), b) in &other.terms {
                let ab = a.clone() * b.clone();
                let sum = l + m;
                d.add_term(sum.clone(), *j, ab.clone() * F::from_int(m[*i]));
                d.add_term(sum, *i, -(ab * F::from_int(l[*j])));
            }
        }
        Ok(d)
    }

    /// Action on Laurent polynomials: `D_{λi} t^s = s_i t^{λ+s}`.
    pub fn apply(&self, f: &RingElement<F>) -> Result<RingElement<F>> {
        if f.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: f.dim(),
            });
        }
        let mut out = RingElement::zero(self.n);
        for ((l, i), c) in &self.terms {
            for (s, a) in f.terms() {
                out.add_term(l + s, c.clone() * a.clone() * F::from_int(s[*i]));
            }
        }
        Ok(out)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            })
        }
    }
}

/// Bracket of two homogeneous elements given by coefficient vectors:
/// `[Σ x_i D_{λi}, Σ y_j D_{μj}] = Σ_m (⟨x, μ⟩ y_m - ⟨y, λ⟩ x_m) D_{λ+μ,m}`.
pub fn bracket_vectors<F: Field>(lambda: &IntVector, x: &[F], mu: &IntVector, y: &[F]) -> Vec<F> {
    let dot = |v: &[F], w: &IntVector| {
        v.iter()
            .zip(w.entries())
            .fold(F::zero(), |acc, (a, &b)| acc + a.clone() * F::from_int(b))
    };
    let xm = dot(x, mu);
    let yl = dot(y, lambda);
    x.iter()
        .zip(y)
        .map(|(xi, yi)| xm.clone() * yi.clone() - yl.clone() * xi.clone())
        .collect()
}

impl<F: Field> fmt::Debug for Derivation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for Derivation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((l, i), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·D[{l},{}]", i + 1)?;
        }
        Ok(())
    }
}
