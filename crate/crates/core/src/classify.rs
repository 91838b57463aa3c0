//! Cohen-Macaulay, Buchsbaum and Gorenstein tests for `k[S]`, phrased in
//! terms of the semigroups `S'_i`, `S' = ∩ S'_i` and
//! `S̃ = {λ ∈ N^n : λ + (S \ {0}) ⊆ S}`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice;
use crate::semigroup::{AffineSemigroup, StandardReport};
use crate::vector::{box_points, IntVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Yes,
    No,
    UnknownUpToBound,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Yes => "Yes",
            Status::No => "No",
            Status::UnknownUpToBound => "UnknownUpToBound",
        };
        f.write_str(s)
    }
}

/// Three-valued answer stamped with the search bound it was computed under.
///
/// `witnesses` holds every certificate found, sorted; `witness()` is the
/// first. A `No` always has at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub bound: i64,
    pub witnesses: Vec<IntVector>,
    /// The root a derivation failed at (membership in `Θ(S)` only).
    pub root: Option<IntVector>,
}

impl Verdict {
    pub fn yes(bound: i64) -> Self {
        Verdict {
            status: Status::Yes,
            bound,
            witnesses: Vec::new(),
            root: None,
        }
    }

    pub fn yes_with(bound: i64, witness: IntVector) -> Self {
        Verdict {
            status: Status::Yes,
            bound,
            witnesses: vec![witness],
            root: None,
        }
    }

    pub fn no(bound: i64, witnesses: Vec<IntVector>) -> Self {
        assert!(!witnesses.is_empty(), "a No verdict needs a witness");
        Verdict {
            status: Status::No,
            bound,
            witnesses,
            root: None,
        }
    }

    pub fn unknown(bound: i64) -> Self {
        Verdict {
            status: Status::UnknownUpToBound,
            bound,
            witnesses: Vec::new(),
            root: None,
        }
    }

    pub fn witness(&self) -> Option<&IntVector> {
        self.witnesses.first()
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::No
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = ser.serialize_map(None)?;
        m.serialize_entry("bound", &self.bound)?;
        if let Some(r) = &self.root {
            m.serialize_entry("root", r)?;
        }
        m.serialize_entry("status", &self.status)?;
        m.serialize_entry("witness", &self.witness())?;
        m.serialize_entry("witnesses", &self.witnesses)?;
        m.end()
    }
}

/// Search bound used when none is given: `2 · n · max generator coordinate`.
pub fn default_bound(s: &AffineSemigroup) -> i64 {
    2 * s.dim() as i64 * s.max_coordinate()
}

/// `λ ∈ S̃`. Exact: it suffices that `λ + g ∈ S` for every generator `g`,
/// since every nonzero member is a generator plus a member.
pub fn s_tilde_contains(s: &AffineSemigroup, lambda: &IntVector) -> Result<bool> {
    lambda.check_dim(s.dim())?;
    if !lambda.is_nonnegative() {
        return Ok(false);
    }
    Ok(s.generators().iter().all(|g| s.member(&(lambda + g))))
}

/// `λ ∈ S'_i`: some face element `s` (`s_i = 0`, coordinates `≤ bound`) has
/// `λ + s ∈ S`. The search is one-sided, so failure is `UnknownUpToBound`.
pub fn s_prime_i_contains(s: &AffineSemigroup, axis: usize, lambda: &IntVector, bound: i64) -> Result<Verdict> {
    lambda.check_dim(s.dim())?;
    s.check_axis(axis)?;
    if !lambda.is_nonnegative() {
        return Ok(Verdict::no(bound, vec![lambda.clone()]));
    }
    for f in s.face_elements(axis, bound)? {
        if s.member(&(lambda + &f)) {
            return Ok(Verdict::yes_with(bound, f));
        }
    }
    Ok(Verdict::unknown(bound))
}

/// `S' \ S` inside the cube `[0, bound]^n`, sorted. Candidates are lattice
/// points of `G(S)` outside `S`; each must reach `S` through every face with
/// a face element of coordinates at most `bound`.
pub fn s_prime_minus_s(s: &AffineSemigroup, bound: i64) -> Result<Vec<IntVector>> {
    if bound < 0 {
        return Ok(Vec::new());
    }
    let n = s.dim();
    let basis = lattice::lattice_basis(s.generators(), n)?;
    let faces: Vec<Vec<IntVector>> = (0..n).map(|i| s.face_elements(i, bound)).collect::<Result<_>>()?;
    let table = s.table_cube(2 * bound)?;
    let extents = vec![bound; n];
    Ok(box_points(&extents)
        .filter(|l| !table.get(l) && lattice::in_lattice(&basis, l))
        .filter(|l| faces.iter().all(|face| face.iter().any(|f| table.get(&(l + f)))))
        .collect())
}

/// `S̃ \ S` inside the cube `[0, bound]^n`, sorted.
pub fn s_tilde_minus_s(s: &AffineSemigroup, bound: i64) -> Result<Vec<IntVector>> {
    if bound < 0 {
        return Ok(Vec::new());
    }
    let table = s.table_cube(bound + s.max_coordinate())?;
    let extents = vec![bound; s.dim()];
    Ok(box_points(&extents)
        .filter(|l| !table.get(l))
        .filter(|l| s.generators().iter().all(|g| table.get(&(l + g))))
        .collect())
}

/// `k[S]` is Cohen-Macaulay iff `S' = S`. `Yes` means no element of `S' \ S`
/// exists in the searched box; `No` lists every one found.
pub fn is_cohen_macaulay(s: &AffineSemigroup, bound: i64) -> Result<Verdict> {
    let extra = s_prime_minus_s(s, bound)?;
    Ok(if extra.is_empty() {
        Verdict::yes(bound)
    } else {
        Verdict::no(bound, extra)
    })
}

/// `k[S]` is Buchsbaum iff `S' + (S \ {0}) ⊆ S`, i.e. `S' \ S ⊆ S̃`.
/// `No` lists every element of `S' \ S` (in the box) outside `S̃`.
pub fn is_buchsbaum(s: &AffineSemigroup, bound: i64) -> Result<Verdict> {
    let mut failing = Vec::new();
    for l in s_prime_minus_s(s, bound)? {
        if !s_tilde_contains(s, &l)? {
            failing.push(l);
        }
    }
    Ok(if failing.is_empty() {
        Verdict::yes(bound)
    } else {
        Verdict::no(bound, failing)
    })
}

/// Symmetry of a numerical semigroup: `x ∈ S ⇔ c - 1 - x ∉ S` for
/// `0 ≤ x < c`.
pub fn is_gorenstein_numerical(s: &AffineSemigroup) -> Result<bool> {
    let p = s.numerical_profile()?;
    let c = p.conductor;
    Ok((0..c).all(|x| p.contains(x) != p.contains(c - 1 - x)))
}

/// Cohen-Macaulay type of a numerical semigroup: `|S̃ \ S|`, and 1 for `N`.
pub fn cm_type_numerical(s: &AffineSemigroup) -> Result<usize> {
    let p = s.numerical_profile()?;
    if p.conductor == 0 {
        return Ok(1);
    }
    let mut count = 0;
    for &gap in &p.gaps {
        if s_tilde_contains(s, &IntVector::new(vec![gap]))? {
            count += 1;
        }
    }
    Ok(count)
}

/// Everything [`classify`] computes.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub standard: StandardReport,
    pub bound: i64,
    pub cohen_macaulay: Verdict,
    pub buchsbaum: Verdict,
    pub s_prime_minus_s: Vec<IntVector>,
    pub s_tilde_minus_s: Vec<IntVector>,
    /// `S' \ S` is unchanged when the box is doubled.
    pub stabilized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm_type: Option<usize>,
}

pub fn classify(s: &AffineSemigroup, bound: i64) -> Result<ClassificationReport> {
    let standard = s.check_standard_simplicial();
    let spm = s_prime_minus_s(s, bound)?;
    let doubled = s_prime_minus_s(s, 2 * bound)?;
    let cohen_macaulay = is_cohen_macaulay(s, bound)?;
    let buchsbaum = is_buchsbaum(s, bound)?;
    let (gorenstein, cm_type) = match s.numerical_profile() {
        Ok(_) => (Some(is_gorenstein_numerical(s)?), Some(cm_type_numerical(s)?)),
        Err(Error::NotNumerical) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(ClassificationReport {
        standard,
        bound,
        cohen_macaulay,
        buchsbaum,
        s_tilde_minus_s: s_tilde_minus_s(s, bound)?,
        stabilized: doubled == spm,
        s_prime_minus_s: spm,
        gorenstein,
        cm_type,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use proptest::prelude::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::new(v.to_vec())
    }

    #[test]
    fn s_tilde_examples() {
        assert!(s_tilde_contains(&corpus::numerical(&[3, 5]), &iv(&[7])).unwrap());
        assert!(!s_tilde_contains(&corpus::cusp_line(), &iv(&[1, 0])).unwrap());
        for s in corpus::all() {
            for g in s.generators() {
                assert!(s_tilde_contains(&s, g).unwrap());
            }
        }
    }

    #[test]
    fn s_prime_i_examples() {
        let ex = corpus::non_buchsbaum_plane();
        // the face S ∩ ker π_2 is the first axis
        let v = s_prime_i_contains(&ex, 1, &iv(&[9, 11]), 20).unwrap();
        assert!(v.is_yes());
        let v = s_prime_i_contains(&corpus::cusp_line(), 0, &iv(&[1, 0]), 10).unwrap();
        assert_eq!(v.status, Status::UnknownUpToBound);
        let v = s_prime_i_contains(&ex, 0, &iv(&[3, 7]), 5).unwrap();
        assert_eq!(v.witness(), Some(&iv(&[0, 0])));
    }

    #[test]
    fn s_prime_minus_s_examples() {
        let ex = corpus::non_buchsbaum_plane();
        assert!(s_prime_minus_s(&ex, 24).unwrap().contains(&iv(&[9, 11])));
        assert!(s_prime_minus_s(&corpus::d_uple(2), 12).unwrap().is_empty());
        assert_eq!(
            s_prime_minus_s(&corpus::degree_band(2, 2), 12).unwrap(),
            vec![iv(&[0, 2]), iv(&[1, 1]), iv(&[2, 0])]
        );
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(is_cohen_macaulay(&corpus::cusp_line(), 12).unwrap().is_yes());
        let band = is_cohen_macaulay(&corpus::degree_band(2, 2), 12).unwrap();
        assert!(band.is_no() && band.witnesses.contains(&iv(&[1, 1])));
        let ex = is_cohen_macaulay(&corpus::non_buchsbaum_plane(), 24).unwrap();
        assert!(ex.is_no() && ex.witnesses.contains(&iv(&[9, 11])));
    }

    #[test]
    fn buchsbaum_examples() {
        let ex = is_buchsbaum(&corpus::non_buchsbaum_plane(), 24).unwrap();
        assert!(ex.is_no());
        assert_eq!(ex.witnesses, vec![iv(&[6, 4]), iv(&[9, 11]), iv(&[12, 8])]);
        assert!(is_buchsbaum(&corpus::degree_band(2, 2), 12).unwrap().is_yes());
        assert!(is_buchsbaum(&corpus::cusp_line(), 12).unwrap().is_yes());
    }

    #[test]
    fn numerical_examples() {
        let cases: [(&[i64], bool, usize); 6] = [
            (&[2, 3], true, 1),
            (&[3, 4, 5], false, 2),
            (&[3, 5], true, 1),
            (&[3, 7, 8], false, 2),
            (&[4, 5, 7], false, 2),
            (&[1], true, 1),
        ];
        for (gens, gor, ty) in cases {
            let s = corpus::numerical(gens);
            assert_eq!(is_gorenstein_numerical(&s).unwrap(), gor, "{s}");
            assert_eq!(cm_type_numerical(&s).unwrap(), ty, "{s}");
        }
        assert_eq!(
            is_gorenstein_numerical(&corpus::cusp_line()).unwrap_err(),
            Error::NotNumerical
        );
    }

    #[test]
    fn cm_implies_buchsbaum_on_corpus() {
        for s in corpus::all() {
            let b = default_bound(&s);
            if is_cohen_macaulay(&s, b).unwrap().is_yes() {
                assert!(is_buchsbaum(&s, b).unwrap().is_yes(), "{s}");
            }
        }
    }

    #[test]
    fn members_are_in_s_tilde() {
        for s in corpus::all() {
            for m in s.enumerate_box(8).unwrap() {
                assert!(s_tilde_contains(&s, &m).unwrap());
            }
        }
    }

    #[test]
    fn s_tilde_inside_s_prime() {
        for s in corpus::all().into_iter().filter(|s| s.dim() >= 2) {
            let b = default_bound(&s).min(24);
            let spm = s_prime_minus_s(&s, b).unwrap();
            for l in s_tilde_minus_s(&s, b / 2).unwrap() {
                assert!(spm.contains(&l), "{s}: {l}");
            }
        }
    }

    fn definitional_s_tilde(s: &AffineSemigroup, l: &IntVector, box_bound: i64) -> bool {
        l.is_nonnegative()
            && s.enumerate_box(box_bound)
                .unwrap()
                .iter()
                .filter(|v| !v.is_zero())
                .all(|v| s.member(&(l + v)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn generator_reduction_for_s_tilde(k in 0usize..16, x in 0i64..24, y in 0i64..24) {
            let corpus = corpus::all();
            let s = &corpus[k % corpus.len()];
            let l = if s.dim() == 1 { iv(&[x]) } else { iv(&[x, y]) };
            let box_bound = 2 * s.max_coordinate();
            prop_assert_eq!(s_tilde_contains(s, &l).unwrap(), definitional_s_tilde(s, &l, box_bound));
        }
    }
}
