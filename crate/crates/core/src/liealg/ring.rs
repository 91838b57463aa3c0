use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Field;
use crate::vector::IntVector;

/// A Laurent polynomial `Σ b_s t^s` with exact coefficients.
#[derive(Clone, PartialEq)]
pub struct RingElement<F> {
    n: usize,
    terms: BTreeMap<IntVector, F>,
}

impl<F: Field> RingElement<F> {
    pub fn zero(n: usize) -> Self {
        RingElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(s: IntVector, coeff: F) -> Self {
        let mut f = Self::zero(s.dim());
        f.add_term(s, coeff);
        f
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntVector, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &IntVector) -> F {
        self.terms.get(s).cloned().unwrap_or_else(F::zero)
    }

    pub(crate) fn add_term(&mut self, s: IntVector, c: F) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&s) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(s, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> fmt::Debug for RingElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c})·t^{s}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
