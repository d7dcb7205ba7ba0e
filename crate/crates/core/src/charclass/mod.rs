//! Exact characteristic-class computations in small graded rings.

mod instances;
mod ring;
mod series;

pub use instances::{diagonal_blowup_correction, diagonal_ring, flip_blowup_correction, flip_ring};
pub use ring::{GradedRing, GradedRingSpec, RingElement};
pub use series::{
    blowup_correction, identity_517, pushforward_power, series_inverse, theta_integral, theta_ring, RingSeries,
};
