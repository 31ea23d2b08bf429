//! Certified bounds on π from Archimedes' inscribed and circumscribed
//! polygons, computed in exact decimal interval arithmetic.
//!
//! - [`exactnum`]: rationals, outward-rounded intervals, integer square roots.
//! - [`polygon`]: half-angle doubling from the triangle, and the
//!   nested-radical closed forms of each perimeter.
//! - [`contfrac`]: continued fractions and certified rational bounds.
//! - [`series`]: classical series and products for π.

pub mod contfrac;
mod error;
pub mod exactnum;
pub mod polygon;
pub mod series;

pub use error::{Error, Result};
