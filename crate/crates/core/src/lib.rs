//! Finite-dimensional modules of the universal Bannai–Ito algebra over the
//! rationals.
//!
//! The algebra is generated by `X`, `Y`, `Z` subject to `{X,Y} - Z`,
//! `{Y,Z} - X` and `{Z,X} - Y` being central. A module is given here by the
//! matrices of `X` and `Y` together with the scalar `κ` by which
//! `{X,Y} - Z` acts; `Z` is always derived.
//!
//! * [`linalg`]: exact rational scalars, polynomials and matrices.
//! * [`bimodule`]: the even family `E_d(a,b,c)`, the odd family
//!   `O_d(a,b,c)`, sign twists, relation checking and two non-diagonalizable
//!   fixtures.
//! * [`universal`]: a truncated Verma-type module and the homomorphisms it
//!   produces.
//! * [`classify`]: irreducibility, intertwiners, isomorphism and
//!   identification of irreducible modules.

pub mod bimodule;
pub mod classify;
pub mod linalg;
pub mod universal;

mod error;

pub use error::Error;
