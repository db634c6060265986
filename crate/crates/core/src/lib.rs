#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod inhom;
pub mod liealg;
pub mod qspace;
pub mod rep;
pub mod scalars;
pub mod twist;
pub mod uea;

pub use error::{Error, Result};
pub use scalars::{Rational, XiSeries};
