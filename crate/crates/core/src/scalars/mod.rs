//! Exact scalars: rationals and truncated ξ-series.

mod rational;
mod series;

pub use rational::Rational;
pub use series::XiSeries;
