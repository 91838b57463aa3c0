//! Symbolic engine for `Θ(S)`: monomial derivations, brackets, membership,
//! the product-along-a-line test and the degree-0 cocycle solver.

mod cocycle;
mod derivation;
mod ring;

use num_traits::Zero;

use crate::classify::Verdict;
use crate::error::Result;
use crate::lattice::RowReducer;
use crate::roots::{default_root_bound, root_space, roots_up_to, RootTable};
use crate::scalar::Field;
use crate::semigroup::AffineSemigroup;
use crate::vector::{box_points, IntVector};
use crate::Rational;

pub use cocycle::{cocycle_system, degree0_derivation_space, CocycleSolution, CocycleSystem, Unknown};
pub use derivation::{bracket_vectors, Derivation};
pub use ring::RingElement;

/// Componentwise membership in `Θ(S)`: each homogeneous part `Σ b_i D_{λi}`
/// must lie in `Θ_λ` (computed from members in `[0, bound]^n`). A `No`
/// records the failing root and a member `v` with `λ + v ∉ S` and
/// `⟨b, v⟩ ≠ 0`.
pub fn member_of_theta(s: &AffineSemigroup, d: &Derivation<Rational>, bound: i64) -> Result<Verdict> {
    if d.dim() != s.dim() {
        return Err(crate::Error::DimensionMismatch {
            expected: s.dim(),
            found: d.dim(),
        });
    }
    for (lambda, b) in d.components() {
        let space = root_space(s, &lambda, bound)?.space;
        if space.contains(&b) {
            continue;
        }
        let mut v = violated_member(s, &lambda, &b, bound)?;
        if v.is_none() {
            v = violated_member(s, &lambda, &b, 2 * bound.max(1))?;
        }
        let witness = v.unwrap_or_else(|| lambda.clone());
        let mut verdict = Verdict::no(bound, vec![witness]);
        verdict.root = Some(lambda);
        return Ok(verdict);
    }
    Ok(Verdict::yes(bound))
}

fn violated_member(s: &AffineSemigroup, lambda: &IntVector, b: &[Rational], bound: i64) -> Result<Option<IntVector>> {
    let extents: Vec<i64> = lambda.entries().iter().map(|&x| bound + x.max(0)).collect();
    let table = s.table_covering(&extents)?;
    Ok(box_points(&vec![bound; s.dim()]).find(|v| {
        let dot = b
            .iter()
            .zip(v.entries())
            .fold(Rational::from_int(0), |acc, (x, &y)| acc + x * Rational::from_int(y));
        table.get(v) && !table.get(&(lambda + v)) && !dot.is_zero()
    }))
}

/// Whether some unit vector `e_i` is a member.
pub fn has_unit_vector(s: &AffineSemigroup) -> bool {
    (0..s.dim()).any(|i| s.member(&IntVector::unit(s.dim(), i)))
}

/// `S = N e_i ⊕ (S ∩ ker π_i)` for some axis `i`, after permuting
/// coordinates. Decided exactly: `e_i ∈ S` and every generator `g` has
/// `g - g_i e_i ∈ S`. Equivalent to `-e_i ∈ Λ_i`.
pub fn is_product_along_line(s: &AffineSemigroup) -> bool {
    product_axis(s).is_some()
}

/// The axis along which `S` splits off a copy of `N`, if any.
pub fn product_axis(s: &AffineSemigroup) -> Option<usize> {
    let n = s.dim();
    (0..n).find(|&i| {
        s.member(&IntVector::unit(n, i))
            && s.generators()
                .iter()
                .all(|g| s.member(&(g - &IntVector::unit(n, i).scale(g[i]))))
    })
}

/// Dimension of the span of `[Θ_λ, Θ_{-λ}] ⊆ Θ_0 ≅ Q^n` over the roots
/// with `|λ| ≤ degree`.
pub fn derived_degree0_dim(s: &AffineSemigroup, degree: i64) -> Result<usize> {
    let table = roots_up_to(s, degree, default_root_bound(s, degree))?;
    Ok(derived_degree0_dim_from(&table))
}

pub fn derived_degree0_dim_from(table: &RootTable) -> usize {
    let mut span = RowReducer::<Rational>::new(table.n);
    for (lambda, r) in &table.entries {
        let neg = -lambda;
        let Some(partner) = table.get(&neg) else { continue };
        for x in r.space.basis() {
            for y in partner.space.basis() {
                span.insert(bracket_vectors(lambda, x, &neg, y));
            }
        }
    }
    span.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::roots::roots_default;
    use proptest::prelude::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::new(v.to_vec())
    }

    fn q(x: i64) -> Rational {
        Rational::from_int(x)
    }

    fn mono(l: &[i64], axis: usize, c: i64) -> Derivation<Rational> {
        Derivation::monomial(iv(l), axis, q(c))
    }

    #[test]
    fn bracket_examples() {
        let x = mono(&[-1, 1], 0, 1);
        let y = mono(&[1, -1], 1, 1);
        let want = Derivation::cartan(2, 1).sub(&Derivation::cartan(2, 0)).unwrap();
        assert_eq!(x.bracket(&y).unwrap(), want);
        let d = mono(&[3, 5], 1, 2);
        for i in 0..2 {
            let b = Derivation::cartan(2, i).bracket(&d).unwrap();
            assert_eq!(b, d.scale(&q([3, 5][i])));
        }
        assert!(d.bracket(&d).unwrap().is_zero());
        assert!(x.bracket(&mono(&[1], 0, 1)).is_err());
    }

    #[test]
    fn apply_examples() {
        let f = RingElement::monomial(iv(&[0, 1]), q(1));
        assert_eq!(
            mono(&[1, 0], 1, 1).apply(&f).unwrap(),
            RingElement::monomial(iv(&[1, 1]), q(1))
        );
        let combo = mono(&[9, 11], 0, 7).add(&mono(&[9, 11], 1, -3)).unwrap();
        assert!(combo
            .apply(&RingElement::monomial(iv(&[3, 7]), q(1)))
            .unwrap()
            .is_zero());
        assert!(combo
            .apply(&RingElement::monomial(iv(&[0, 0]), q(5)))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn membership_examples() {
        let s = corpus::non_buchsbaum_plane();
        let combo = mono(&[9, 11], 0, 7).add(&mono(&[9, 11], 1, -3)).unwrap();
        assert!(member_of_theta(&s, &combo, 24).unwrap().is_yes());
        let single = member_of_theta(&s, &mono(&[9, 11], 0, 1), 24).unwrap();
        assert!(single.is_no());
        assert_eq!(single.witness(), Some(&iv(&[3, 7])));
        assert_eq!(single.root, Some(iv(&[9, 11])));
        for t in corpus::all() {
            for i in 0..t.dim() {
                assert!(member_of_theta(&t, &Derivation::cartan(t.dim(), i), 10)
                    .unwrap()
                    .is_yes());
            }
        }
    }

    #[test]
    fn product_along_line() {
        assert!(is_product_along_line(&corpus::cusp_line()));
        assert!(!is_product_along_line(&corpus::d_uple(2)));
        assert!(is_product_along_line(&corpus::free(3)));
        let skew = corpus::skew_line();
        assert!(has_unit_vector(&skew));
        assert!(!is_product_along_line(&skew));
        for s in corpus::all() {
            let via_roots =
                (0..s.dim()).any(|i| crate::roots::lambda_i_contains(&s, &-&IntVector::unit(s.dim(), i), i).unwrap());
            assert_eq!(is_product_along_line(&s), via_roots, "{s}");
        }
    }

    #[test]
    fn derived_dims() {
        assert_eq!(derived_degree0_dim(&corpus::cusp_line(), 2).unwrap(), 2);
        assert_eq!(derived_degree0_dim(&corpus::d_uple(2), 4).unwrap(), 1);
        assert_eq!(derived_degree0_dim(&corpus::numerical(&[2, 3]), 5).unwrap(), 0);
        assert_eq!(derived_degree0_dim(&corpus::free(1), 2).unwrap(), 1);
    }

    #[test]
    fn grading_closure() {
        for s in [corpus::cusp_line(), corpus::d_uple(2), corpus::non_buchsbaum_plane()] {
            let t = roots_default(&s, 4).unwrap();
            let bound = default_root_bound(&s, 8);
            let entries: Vec<_> = t.entries.values().collect();
            for a in entries.iter().step_by(3) {
                for b in entries.iter().step_by(5) {
                    for x in a.space.basis() {
                        for y in b.space.basis() {
                            let dx = Derivation::from_vector(&a.lambda, x);
                            let dy = Derivation::from_vector(&b.lambda, y);
                            let z = dx.bracket(&dy).unwrap();
                            let sum = &a.lambda + &b.lambda;
                            assert!(z.terms().all(|(l, _, _)| *l == sum));
                            assert!(member_of_theta(&s, &z, bound).unwrap().is_yes(), "{s}: {z}");
                        }
                    }
                }
            }
        }
    }

    fn small_derivation() -> impl Strategy<Value = Derivation<Rational>> {
        prop::collection::vec(((-1i64..4, -1i64..4), 0usize..2, -5i64..6, 1i64..4), 0..4).prop_map(|terms| {
            Derivation::from_terms(
                2,
                terms
                    .into_iter()
                    .map(|((a, b), i, num, den)| (iv(&[a, b]), i, Rational::new(num.into(), den.into()))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn antisymmetry_and_jacobi(x in small_derivation(), y in small_derivation(), z in small_derivation()) {
            let xy = x.bracket(&y).unwrap();
            prop_assert_eq!(xy.clone(), y.bracket(&x).unwrap().neg());
            let j = xy.bracket(&z).unwrap()
                .add(&y.bracket(&z).unwrap().bracket(&x).unwrap()).unwrap()
                .add(&z.bracket(&x).unwrap().bracket(&y).unwrap()).unwrap();
            prop_assert!(j.is_zero());
        }

        #[test]
        fn leibniz_compatibility(x in small_derivation(), y in small_derivation(), a in 0i64..5, b in 0i64..5) {
            let f = RingElement::monomial(iv(&[a, b]), q(1));
            let lhs = x.bracket(&y).unwrap().apply(&f).unwrap();
            let rhs = x.apply(&y.apply(&f).unwrap()).unwrap().sub(&y.apply(&x.apply(&f).unwrap()).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
