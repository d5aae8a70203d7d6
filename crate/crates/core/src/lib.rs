//! Exact computational engine for the spherical Hecke algebra of GL_n.
//!
//! Everything here is exact integer (or rational) arithmetic; there is no
//! floating point anywhere in the crate. The main quantities:
//!
//! * `c^lambda_{mu_1,...,mu_r}(q)` — structure constants of the spherical
//!   Hecke algebra of GL_n over F_q((t)), computed as chain counts in finite
//!   torsion modules over F_q[[t]] and interpolated into integer polynomials
//!   in the field size `q` ([`hallq`]).
//! * `dim V^lambda_{mu_bullet}` — tensor product multiplicities for the dual
//!   group, by the Littlewood-Richardson rule with an independent
//!   Schur-polynomial oracle ([`repring`]).
//! * point counts of convolution-morphism fibers, their strata, and
//!   Spaltenstein-Springer varieties over small finite fields ([`fibers`]).
//!
//! [`verify`] bundles the cross-checks tying these together (leading-term
//! formula, nonvanishing equivalence, minuscule and PRV criteria, semi-small
//! degree bounds) over configurable sweeps.

pub mod budget;
pub mod error;
pub mod fibers;
pub mod hallq;
pub mod poly;
pub mod repring;
pub mod sweep;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use poly::QPolynomial;
pub use weights::DominantCoweight;
