use thiserror::Error;

use crate::tropical::{Exponent, Point};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A point handed to a group-law operation is not on the central cycle.
    #[error("point {point} is not on the cycle (dominant terms: {})", fmt_argmax(.argmax))]
    NotOnCycle { point: Point, argmax: Vec<Exponent> },

    /// An edge of the hexagonal cycle has non-positive lattice length.
    #[error("degenerate cycle: edge {edge} ({}) has lattice length {length}", crate::curve::EDGE_NAMES[*.edge])]
    DegenerateCycle { edge: usize, length: String },

    /// Another term of the cubic dominates x+y+a4 at a hexagon vertex, so the
    /// a4 region is not the six-sided cell the cycle formulas describe.
    #[error("cycle vertex {vertex} at {point} is dominated by term {}", fmt_exp(.term))]
    CycleObstructed {
        vertex: usize,
        point: Point,
        term: Exponent,
    },

    #[error("line vertex {vertex} lies outside the x+y+a4 region")]
    VertexOutsideRegion { vertex: Point },

    #[error("invalid curve parameters: {0}")]
    InvalidParams(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("empty bounding box")]
    EmptyBox,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn fmt_exp(e: &Exponent) -> String {
    format!("({},{})", e.0, e.1)
}

fn fmt_argmax(argmax: &[Exponent]) -> String {
    let parts: Vec<String> = argmax.iter().map(fmt_exp).collect();
    format!("{{{}}}", parts.join(","))
}
