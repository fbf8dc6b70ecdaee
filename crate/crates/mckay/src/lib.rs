//! Exact computational toolkit around the McKay correspondence for
//! polyhedral and binary polyhedral groups.
//!
//! The crate builds binary polyhedral subgroups of SU(2) and their
//! polyhedral quotients acting on the cone coordinates (a, b, c), computes
//! character tables and McKay quivers, constructs G-cluster ideals at the
//! origin through Groebner bases over cyclotomic fields, realizes the
//! exceptional curve families in dimensions two and three, and verifies
//! that the contraction map between the two cluster spaces collapses the
//! binary-representation curves to nodes while mapping the pure ones
//! bijectively.
//!
//! All core arithmetic is exact: rational coefficients are arbitrary
//! precision and cyclotomic numbers are residues modulo cyclotomic
//! polynomials.

pub mod cluster;
pub mod cyclo;
pub mod group;
pub mod linalg;
pub mod rep;
pub mod poly;
pub mod error;

pub use cyclo::{CycloField, Cyclotomic, Rat};
pub use error::{Error, Result};
