//! Exact symbolic Schubert calculus on the basic configuration spaces of
//! complex projective 3-space: points, planes, lines and point-line flags.
//!
//! The crate is `no_std` (it needs `alloc`). It provides
//!
//! * [`exactalg`]: graded polynomial arithmetic over `Z[n]`, rewrite-rule
//!   normal forms, confluence checking and integration;
//! * [`spaces`]: the cohomology rings of `P3`, its dual, the Grassmannian of
//!   lines and the point-on-line flag space, with their Schubert symbols;
//! * [`coincidence`]: the coincidence class on the blown-up product and the
//!   Gysin pushforward that yields the class of a plane curve;
//! * [`multipoint`]: the multipoint tangency rewrite calculus;
//! * [`oracle`]: an independent exact Plücker-coordinate line solver;
//! * [`dsl`]: a small expression language for conditions.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod coincidence;
pub mod dsl;
pub mod exactalg;
pub mod multipoint;
pub mod oracle;
pub mod spaces;

pub use exactalg::{Coefficient, Monomial, Polynomial, Presentation, Universe};
pub use spaces::{SpaceHandle, SpaceId};
