//! Exact symbolic engine for the approximation number of polynomial maps
//! between affine varieties: quasiopenness of fibred powers, rank-partition
//! evaluation, openness tests, critical values and fibre-count bounds, over
//! exact rational (or prime-field) arithmetic.

pub mod config;
pub mod error;
pub mod polycore;

pub mod analysis;
pub mod geometry;
pub mod groebner;

pub use config::{Budget, Config};
pub use error::{Error, Result};
