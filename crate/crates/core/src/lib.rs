//! Parabolic cylinder functions U(a,z), V(a,z) and their derivatives for real
//! arguments, evaluated with uniform asymptotic expansions.

pub mod airy;
pub mod bigfloat;
pub mod cli;
pub mod dd;
pub mod dispatch;
pub mod elem;
pub mod error;
pub mod exactpoly;
pub mod poly;
pub mod quad;
pub mod refseries;
pub mod scaled;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use quad::{FunctionQuad, RegionTag};
pub use scaled::ScaledValue;
