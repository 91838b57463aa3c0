use serde::Serialize;

use crate::error::{Error, Result};

/// Invariants of a numerical semigroup `S ⊆ N` with finite complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalProfile {
    /// Smallest nonzero element.
    pub multiplicity: i64,
    /// Largest gap, `-1` for `S = N`.
    pub frobenius: i64,
    pub conductor: i64,
    pub gaps: Vec<i64>,
    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub apery: Vec<i64>,
}

impl NumericalProfile {
    /// Sieve membership up to `bound` and read off the invariants.
    pub(crate) fn sieve(gens: &[i64], bound: i64) -> Result<Self> {
        let bound = bound.max(1) as usize;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for x in 1..=bound {
            member[x] = gens.iter().any(|&g| g as usize <= x && member[x - g as usize]);
        }
        let multiplicity = (1..=bound).find(|&x| member[x]).ok_or(Error::NotNumerical)? as i64;
        let frobenius = (0..=bound).rev().find(|&x| !member[x]).map_or(-1, |x| x as i64);
        let conductor = frobenius + 1;
        // a run of `multiplicity` members certifies that everything above is in S
        if conductor + multiplicity - 1 > bound as i64 {
            return Err(Error::NotNumerical);
        }
        let gaps = (0..conductor).filter(|&x| !member[x as usize]).collect();
        let apery = (0..multiplicity)
            .map(|r| {
                (r..)
                    .step_by(multiplicity as usize)
                    .find(|&x| x > frobenius || member[x as usize])
                    .expect("residue class meets S")
            })
            .collect();
        Ok(NumericalProfile {
            multiplicity,
            frobenius,
            conductor,
            gaps,
            apery,
        })
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x >= self.conductor || self.gaps.binary_search(&x).is_err())
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }
}

/// Minimal generators of the numerical semigroup described by `is_member`,
/// which must be closed under addition with every integer `≥ conductor` a
/// member. An element is a minimal generator iff it is not the sum of two
/// nonzero members; all of them lie below `conductor + multiplicity`.
pub fn minimal_generators_of_set(is_member: impl Fn(i64) -> bool, conductor: i64) -> Vec<i64> {
    let multiplicity = (1..).find(|&x| is_member(x)).expect("numerical semigroup");
    (1..conductor.max(0) + multiplicity + 1)
        .filter(|&x| is_member(x))
        .filter(|&x| !(1..=x / 2).any(|y| is_member(y) && is_member(x - y)))
        .collect()
}
