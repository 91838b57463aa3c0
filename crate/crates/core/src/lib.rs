//! Simplicial affine semigroups `S ⊆ N^n`, the ring-theoretic classification
//! of `k[S]`, root spaces of the derivation Lie algebra `Θ(S)`, a bracket
//! engine for monomial derivations, and reconstruction of `S` from root
//! data.
//!
//! Linear algebra is generic over [`scalar::Field`]; the aliases below fix
//! exact rationals, which is what every public computation uses.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod lattice;
pub mod liealg;
pub mod reconstruct;
pub mod roots;
pub mod scalar;
pub mod semigroup;
pub mod vector;

use num_rational::BigRational;

pub type Rational = BigRational;
pub type RationalSubspace = lattice::Subspace<Rational>;
pub type RationalDerivation = liealg::Derivation<Rational>;
pub type RationalRingElement = liealg::RingElement<Rational>;

pub use classify::{Status, Verdict};
pub use error::{Error, Result};
pub use semigroup::AffineSemigroup;
pub use vector::IntVector;
