//! Exact characters of irreducible highest-weight modules over the principal
//! W-algebra `W_κ(g)` attached to a simple Lie algebra `g`.
//!
//! Everything is computed in exact rational arithmetic:
//!
//! * [`rootdata`]: finite root systems of types A–G, the normalized form, ρ, ρ∨,
//!   `h∨`, exponents and the finite Weyl group.
//! * [`affine`]: affine weights, real affine roots and the extended affine Weyl
//!   group `W̃ = W ⋉ P∨` with its linear and dot actions.
//! * [`integral`]: the integral root system `R^Λ`, the integral Weyl group
//!   `W^Λ` as a Coxeter system, Bruhat order and the domain predicates.
//! * [`kl`]: Kazhdan–Lusztig and inverse Kazhdan–Lusztig polynomials over any
//!   [`kl::CoxeterSystem`].
//! * [`series`] and [`characters`]: truncated q-series, central charge,
//!   conformal weights, Verma and irreducible characters.

pub mod affine;
pub mod characters;
pub mod error;
pub mod integral;
pub mod kl;
pub mod rational;
pub mod rootdata;
pub mod series;

pub use affine::{AffineRealRoot, AffineWeight, ExtendedWeylElement};
pub use characters::{CharacterMetadata, CharacterResult, Reduction};
pub use error::{Error, Result};
pub use integral::{IntegralCoxeterContext, IntegralWeylElement, Sign};
pub use kl::{CoxeterSystem, KlPolynomial, KlSession};
pub use rational::Rational;
pub use rootdata::{Family, FiniteRoot, LieType, RootSystem, WeylMatrix};
pub use series::QSeries;
