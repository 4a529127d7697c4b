//! Lattice-length parametrization of the cycle.
//!
//! Walking the hexagon counterclockwise from its basepoint and measuring each
//! edge in multiples of its primitive direction identifies the cycle with the
//! circle `Q / LZ`. In these coordinates the three stable intersections of any
//! line with the cycle sum to a fixed residue (the collinearity constant), so
//! the group law becomes translation. This module is the oracle the chord
//! construction in [`crate::group_law`] is checked against, and the fallback it
//! uses where the chord construction degenerates.

use num_traits::{Signed, Zero};

use crate::curve::{cycle_chart, CurveParams, CycleChart};
use crate::error::{Error, Result};
use crate::group_law::ray_exits;
use crate::rational::{int, rem_euclid, Rational};
use crate::tropical::Point;

/// Arc coordinate of an on-cycle point, in `[0, L)`.
pub fn arc_param(chart: &CycleChart, p: &Point) -> Result<Rational> {
    // The chart edges are exactly the cycle, so `locate` decides membership.
    match chart.locate(p) {
        Some((edge, t)) => Ok(chart.cumulative()[edge] + t),
        None => Err(Error::NotOnCycle {
            point: p.clone(),
            argmax: chart.params().eval(p).1,
        }),
    }
}

/// Point at arc coordinate `s` (taken modulo `L`).
pub fn arc_point(chart: &CycleChart, s: &Rational) -> Point {
    let s = rem_euclid(s, chart.total());
    let cum = chart.cumulative();
    let edge = (0..6).rev().find(|&i| cum[i] <= s).unwrap_or(0);
    chart.point_on_edge(edge, &(s - cum[edge]))
}

/// Sum of arc coordinates of the ray exits from one interior line vertex,
/// reduced mod `L`. The vertex is the centroid of the hexagon, nudged along
/// `(ε, 2ε)` with `ε = min edge / 16` while any exit sits on a hexagon corner.
pub fn calibrate_constant(chart: &CycleChart) -> Rational {
    let c = chart.params();
    let verts = chart.vertices();
    let six = int(6);
    let cx = verts.iter().map(|v| v.x).sum::<Rational>() / six;
    let cy = verts.iter().map(|v| v.y).sum::<Rational>() / six;
    let eps = *chart.edge_lengths().iter().min().unwrap() / int(16);

    let sum_at = |v: &Point| -> Option<(Rational, bool)> {
        let exits = ray_exits(c, v).ok()?;
        let mut sum = Rational::zero();
        for r in exits.points() {
            sum += arc_param(chart, r).ok()?;
        }
        let on_corner = exits.points().iter().any(|r| verts.contains(r));
        Some((rem_euclid(&sum, chart.total()), on_corner))
    };

    let centroid = Point::new(cx, cy);
    let mut fallback = None;
    for k in 0..8 {
        let shift = eps * int(k);
        let v = Point::new(cx + shift, cy + shift * int(2));
        match sum_at(&v) {
            Some((sum, false)) => return sum,
            Some((sum, true)) => {
                fallback.get_or_insert(sum);
            }
            None => {}
        }
    }
    // The sum is constant on the closed region, so a corner hit still gives
    // the right value; it just was not the preferred calibration vertex.
    fallback
        .or_else(|| sum_at(&centroid).map(|(s, _)| s))
        .expect("centroid of a convex hexagon is inside it")
}

/// Third intersection in arc coordinates: `s(R) = ccal - s(p) - s(q) mod L`.
pub fn third_point_oracle(chart: &CycleChart, ccal: &Rational, p: &Point, q: &Point) -> Result<Point> {
    let sp = arc_param(chart, p)?;
    let sq = arc_param(chart, q)?;
    Ok(arc_point(chart, &(ccal - sp - sq)))
}

/// A curve with a valid cycle chart and its collinearity constant. This is the
/// context every group-law and QRT operation runs in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jacobian {
    chart: CycleChart,
    ccal: Rational,
}

impl Jacobian {
    pub fn new(params: &CurveParams) -> Result<Self> {
        let chart = cycle_chart(params)?;
        let ccal = calibrate_constant(&chart);
        Ok(Jacobian { chart, ccal })
    }

    pub fn params(&self) -> &CurveParams {
        self.chart.params()
    }

    pub fn chart(&self) -> &CycleChart {
        &self.chart
    }

    /// Collinearity constant in `[0, L)`.
    pub fn ccal(&self) -> &Rational {
        &self.ccal
    }

    pub fn total(&self) -> &Rational {
        self.chart.total()
    }

    pub fn arc_param(&self, p: &Point) -> Result<Rational> {
        arc_param(&self.chart, p)
    }

    pub fn arc_point(&self, s: &Rational) -> Point {
        arc_point(&self.chart, s)
    }

    pub fn reduce(&self, s: &Rational) -> Rational {
        rem_euclid(s, self.chart.total())
    }

    pub fn third_point_oracle(&self, p: &Point, q: &Point) -> Result<Point> {
        third_point_oracle(&self.chart, &self.ccal, p, q)
    }

    /// True if `s` is congruent to zero mod `L`.
    pub fn is_zero_mod(&self, s: &Rational) -> bool {
        !self.reduce(s).is_positive()
    }
}
