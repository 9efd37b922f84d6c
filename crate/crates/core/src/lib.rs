#![cfg_attr(not(test), no_std)]
//! Characteristic classes of hypersurfaces in projective space.
//!
//! Everything here is pure computation over `alloc`: exact arithmetic in the
//! Chow ring of `P^n`, homogeneous polynomials over `Q` and `F_p`, a
//! Buchberger engine with saturation and Hilbert series, the projective-degree
//! route to the Segre class of a singular scheme, and the class formulas built
//! on top of it (CSM, Fulton, mu-class, Milnor number).

extern crate alloc;

pub mod charclasses;
pub mod chowring;
pub mod error;
pub mod idealcalc;
pub mod oracles;
pub mod polyalg;
pub mod segreengine;

pub use chowring::ChowClass;
pub use error::{Error, Result};
pub use polyalg::{FieldSpec, HomogeneousPolynomial, Monomial, PrimeField, Rationals};
