//! Gromov invariants of maps from a Riemann surface to the Grassmannian `G(r,k)`.
//!
//! The invariants `<X1^s1 ... Xr^sr>` are computed by several independent
//! routes (see [`invariants`]) whose agreement is checked on every query.

pub mod charclass;
pub mod cli;
pub mod critical;
mod error;
pub mod invariants;
pub mod numerics;
pub mod sympoly;
pub mod verify;

pub use error::{Error, Result};
