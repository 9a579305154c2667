//! Exact computer algebra for compactified adjoint orbits of `sl(n+1)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyalg`]: rationals, monomials, term orders, polynomials and their text form.
//! * [`groebner`]: reduced Gröbner bases, ideal predicates, elimination,
//!   saturation, the two homogenisations and Hilbert series.
//! * [`orbit`]: generic traceless matrices, orbit and fibre ideals, potentials
//!   and Weyl-group critical data.
//! * [`intersect`]: truncated power series and expected Euler characteristics
//!   of complete intersections.
//! * [`hodge`]: Hodge diamonds with unknown entries, closed forms, Lefschetz
//!   restriction and the reference diamonds.

pub mod error;
pub mod groebner;
pub mod hodge;
pub mod intersect;
pub mod orbit;
pub mod polyalg;

pub use error::{Error, Result};
