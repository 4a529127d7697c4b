//! Chord construction on the cycle.
//!
//! A tropical line whose vertex lies in the closed x+y+a4 region meets the
//! cycle where its three rays leave the region. When two of those exits are
//! the inputs `p` and `q`, the third intersection is read off by summing the
//! exit coordinates and subtracting `p` and `q`. When they are not (the line
//! runs along a cycle edge, or `p == q`), the chord construction says nothing
//! and the arc-length oracle supplies the answer.

use crate::curve::CurveParams;
use crate::error::{Error, Result};
use crate::jacobian::Jacobian;
use crate::line::line_through;
use crate::rational::Rational;
use crate::tropical::Point;

/// Exits of the downward, leftward and up-right rays from a line vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExitTriple {
    pub r1: Point,
    pub r2: Point,
    pub r3: Point,
}

impl ExitTriple {
    pub fn points(&self) -> [&Point; 3] {
        [&self.r1, &self.r2, &self.r3]
    }

    /// True if `p` and `q` occupy two distinct slots of the triple.
    pub fn contains_pair(&self, p: &Point, q: &Point) -> bool {
        let pts = self.points();
        (0..3).any(|i| pts[i] == p && (0..3).any(|j| j != i && pts[j] == q))
    }

    /// Coordinatewise `r1 + r2 + r3 - p - q`.
    pub fn remainder(&self, p: &Point, q: &Point) -> Point {
        Point::new(
            self.r1.x + self.r2.x + self.r3.x - p.x - q.x,
            self.r1.y + self.r2.y + self.r3.y - p.y - q.y,
        )
    }
}

/// Where the three rays from `v` cross the cycle:
///
/// ```text
/// r1 = (v_x, max(a1-a4, v_x+a3-a4))
/// r2 = (max(a2-a4, v_y+a5-a4), v_y)
/// r3 = (min(a4-a7, v_x-v_y+a4-a8), min(a4-a8, v_y-v_x+a4-a7))
/// ```
///
/// Only meaningful when `v` is in the closed x+y+a4 region.
pub fn ray_exits(c: &CurveParams, v: &Point) -> Result<ExitTriple> {
    if !c.in_center_region(v) {
        return Err(Error::VertexOutsideRegion { vertex: v.clone() });
    }
    Ok(exits_unchecked(c, v))
}

fn exits_unchecked(c: &CurveParams, v: &Point) -> ExitTriple {
    let a = |i: usize| *c.coef(i);
    ExitTriple {
        r1: Point::new(v.x, (a(1) - a(4)).max(v.x + a(3) - a(4))),
        r2: Point::new((a(2) - a(4)).max(v.y + a(5) - a(4)), v.y),
        r3: Point::new(
            (a(4) - a(7)).min(v.x - v.y + a(4) - a(8)),
            (a(4) - a(8)).min(v.y - v.x + a(4) - a(7)),
        ),
    }
}

/// Which computation produced a third point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Coordinate-sum rule over the ray exits.
    Formula,
    /// Arc-length oracle; the exit triple did not contain both inputs.
    Fallback,
}

/// Chord-construction attempt: `Some` only when `p != q`, the line vertex is
/// in the region, and the exits contain both inputs.
pub fn third_point_formula(c: &CurveParams, p: &Point, q: &Point) -> Option<Point> {
    if p == q {
        return None;
    }
    let v = line_through(p, q).vertex();
    let exits = ray_exits(c, &v).ok()?;
    exits.contains_pair(p, q).then(|| exits.remainder(p, q))
}

/// Third intersection of the line through `p` and `q` with the cycle, and the
/// route used to find it.
pub fn third_point_traced(jac: &Jacobian, p: &Point, q: &Point) -> Result<(Point, Route)> {
    let c = jac.params();
    c.require_on_cycle(p)?;
    c.require_on_cycle(q)?;
    match third_point_formula(c, p, q) {
        Some(r) => Ok((r, Route::Formula)),
        None => Ok((jac.third_point_oracle(p, q)?, Route::Fallback)),
    }
}

pub fn third_point(jac: &Jacobian, p: &Point, q: &Point) -> Result<Point> {
    third_point_traced(jac, p, q).map(|(r, _)| r)
}

/// Inverse of `p` for the group with identity `theta`.
pub fn negate(jac: &Jacobian, theta: &Point, p: &Point) -> Result<Point> {
    let st = jac.arc_param(theta)?;
    let sp = jac.arc_param(p)?;
    Ok(jac.arc_point(&(st * Rational::from(2) - sp)))
}

/// `p + q` with identity `theta`: the third point of the line through `theta`
/// and the third point of the line through `p` and `q`.
pub fn add(jac: &Jacobian, theta: &Point, p: &Point, q: &Point) -> Result<Point> {
    jac.params().require_on_cycle(theta)?;
    let r = third_point(jac, p, q)?;
    third_point(jac, &r, theta)
}
