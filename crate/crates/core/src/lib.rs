//! Exact tropical elliptic curves, their group law, and the tropical QRT map.
//!
//! Everything is computed over exact rationals extended by `-∞`. The group
//! law lives on the hexagonal cycle of a plane tropical cubic and is available
//! through two independent routes: the chord construction with tropical lines
//! ([`group_law`]) and arc-length translation on the cycle ([`jacobian`]).

pub mod curve;
pub mod error;
pub mod group_law;
pub mod io;
pub mod jacobian;
pub mod line;
pub mod qrt;
pub mod rational;
pub mod tropical;
pub mod cli;

pub use curve::{corner_locus, cycle_chart, validate_strict, CurveParams, CycleChart, Rect};
pub use error::{Error, Result};
pub use jacobian::Jacobian;
pub use rational::Rational;
pub use tropical::{eval_poly, trop_add, trop_mul, Point, TropMonomial, TropPolynomial, TropScalar};
