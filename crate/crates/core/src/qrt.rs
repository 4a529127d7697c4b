//! The tropical QRT map `P -> P + T` on the cycle.
//!
//! [`qrt_step`] evaluates the explicit max-plus expressions: the vertex `v` of
//! the line through `P` and `T`, the point `-P̄` from its ray exits, the vertex
//! `u` of the line through `-P̄` and `θ`, and finally `P̄`. Each of the two
//! chord half-steps falls back to the arc-length oracle when the chord
//! construction degenerates. [`elliptic_value`] gives the same orbit in closed
//! form as a translation by [`translation_length`].

use crate::curve::CurveParams;
use crate::error::Result;
use crate::group_law::{ray_exits, Route};
use crate::jacobian::Jacobian;
use crate::rational::{int, Rational};
use crate::tropical::Point;

/// The map's data: curve, zero `theta`, translation `t`, and initial point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub curve: CurveParams,
    pub theta: Point,
    pub t: Point,
    pub p0: Point,
    pub steps: usize,
}

impl Scenario {
    /// Fails with `NotOnCycle` if `theta`, `t` or `p0` is off the cycle.
    pub fn new(curve: CurveParams, theta: Point, t: Point, p0: Point, steps: usize) -> Result<Self> {
        for p in [&theta, &t, &p0] {
            curve.require_on_cycle(p)?;
        }
        Ok(Scenario {
            curve,
            theta,
            t,
            p0,
            steps,
        })
    }

    /// `θ = (0, 1/2)`, `T = (1/2, 0)`, `P0 = (1/5, 0)` on the unit hexagon.
    pub fn hexagon_example(steps: usize) -> Self {
        let half = Rational::new(1, 2);
        Scenario::new(
            CurveParams::hexagon_example(),
            Point::new(int(0), half),
            Point::new(half, int(0)),
            Point::new(Rational::new(1, 5), int(0)),
            steps,
        )
        .expect("example points are on the cycle")
    }
}

/// One chord construction inside a QRT step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfStep {
    /// Vertex of the line through the two inputs.
    pub vertex: Point,
    pub route: Route,
    pub result: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    /// Line through `P` and `T`; result is `-P̄`.
    pub first: HalfStep,
    /// Line through `-P̄` and `θ`; result is `P̄`.
    pub second: HalfStep,
}

impl StepTrace {
    pub fn result(&self) -> &Point {
        &self.second.result
    }
}

/// Vertex of the line through `p` and `q`:
/// `(max(p_x+q_y, p_y+q_x) - max(q_y, p_y), max(p_x+q_y, p_y+q_x) - max(q_x, p_x))`.
fn two_point_vertex(p: &Point, q: &Point) -> Point {
    let m = (p.x + q.y).max(p.y + q.x);
    Point::new(m - q.y.max(p.y), m - q.x.max(p.x))
}

/// Third point of the chord through `p` and `q` whose vertex is `v`:
///
/// ```text
/// x = v_x + max(a2-a4, v_y+a5-a4) - max(a7-a4, v_y-v_x+a8-a4) - q_x - p_x
/// y = v_y + max(a1-a4, v_x+a3-a4) - max(a8-a4, v_x-v_y+a7-a4) - q_y - p_y
/// ```
fn chord_remainder(c: &CurveParams, v: &Point, p: &Point, q: &Point) -> Point {
    let a = |i: usize| *c.coef(i);
    let a4 = a(4);
    let x = v.x + (a(2) - a4).max(v.y + a(5) - a4) - (a(7) - a4).max(v.y - v.x + a(8) - a4) - q.x - p.x;
    let y = v.y + (a(1) - a4).max(v.x + a(3) - a4) - (a(8) - a4).max(v.x - v.y + a(7) - a4) - q.y - p.y;
    Point::new(x, y)
}

fn half_step(jac: &Jacobian, p: &Point, q: &Point) -> Result<HalfStep> {
    let c = jac.params();
    let vertex = two_point_vertex(p, q);
    let formula_ok = p != q
        && ray_exits(c, &vertex)
            .map(|e| e.contains_pair(p, q))
            .unwrap_or(false);
    let (route, result) = if formula_ok {
        (Route::Formula, chord_remainder(c, &vertex, p, q))
    } else {
        (Route::Fallback, jac.third_point_oracle(p, q)?)
    };
    Ok(HalfStep {
        vertex,
        route,
        result,
    })
}

/// One QRT step with both half-steps recorded.
pub fn qrt_step_traced(jac: &Jacobian, theta: &Point, t: &Point, p: &Point) -> Result<StepTrace> {
    let c = jac.params();
    for q in [theta, t, p] {
        c.require_on_cycle(q)?;
    }
    step_unchecked(jac, theta, t, p)
}

fn step_unchecked(jac: &Jacobian, theta: &Point, t: &Point, p: &Point) -> Result<StepTrace> {
    let first = half_step(jac, p, t)?;
    let second = half_step(jac, &first.result, theta)?;
    Ok(StepTrace { first, second })
}

/// `P̄ = P + T` with zero `theta`.
pub fn qrt_step(jac: &Jacobian, theta: &Point, t: &Point, p: &Point) -> Result<Point> {
    qrt_step_traced(jac, theta, t, p).map(|s| s.second.result)
}

/// Arc shift of one step: `s(T) - s(θ)` reduced to `[0, L)`.
pub fn translation_length(jac: &Jacobian, theta: &Point, t: &Point) -> Result<Rational> {
    let st = jac.arc_param(t)?;
    let sz = jac.arc_param(theta)?;
    Ok(jac.reduce(&(st - sz)))
}

/// Least `n >= 1` with `n·delta ≡ 0 (mod total)`.
pub fn period_of(total: &Rational, delta: &Rational) -> u64 {
    let r = crate::rational::rem_euclid(delta, total);
    let frac = r / total;
    *frac.denom() as u64
}

/// `P(n)` without iterating: the point at `s(P0) + n·delta`. Negative `n`
/// runs the map backwards.
pub fn elliptic_value(jac: &Jacobian, p0: &Point, delta: &Rational, n: i64) -> Result<Point> {
    let s0 = jac.arc_param(p0)?;
    Ok(jac.arc_point(&(s0 + delta * int(n))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub points: Vec<Point>,
    pub arcs: Vec<Rational>,
    pub on_cycle: Vec<bool>,
    pub steps: Vec<StepTrace>,
    pub delta: Rational,
    /// First `k > 0` with `P(k) == P(0)`, if seen within the computed steps.
    pub period: Option<usize>,
}

/// Iterates [`qrt_step`] `s.steps` times from `s.p0`.
pub fn orbit(s: &Scenario) -> Result<OrbitRecord> {
    let jac = Jacobian::new(&s.curve)?;
    orbit_in(&jac, s)
}

/// [`orbit`] with a prebuilt [`Jacobian`] for `s.curve`.
pub fn orbit_in(jac: &Jacobian, s: &Scenario) -> Result<OrbitRecord> {
    let delta = translation_length(jac, &s.theta, &s.t)?;
    let mut points = Vec::with_capacity(s.steps + 1);
    let mut arcs = Vec::with_capacity(s.steps + 1);
    let mut on_cycle = Vec::with_capacity(s.steps + 1);
    let mut steps = Vec::with_capacity(s.steps);
    let mut period = None;

    let mut p = s.p0.clone();
    for k in 0..=s.steps {
        on_cycle.push(jac.params().on_cycle(&p));
        arcs.push(jac.arc_param(&p)?);
        if k > 0 && period.is_none() && p == s.p0 {
            period = Some(k);
        }
        if k < s.steps {
            // theta and t were checked by translation_length, p by arc_param
            let trace = step_unchecked(jac, &s.theta, &s.t, &p)?;
            let next = trace.result().clone();
            steps.push(trace);
            points.push(std::mem::replace(&mut p, next));
        } else {
            points.push(p.clone());
        }
    }
    Ok(OrbitRecord {
        points,
        arcs,
        on_cycle,
        steps,
        delta,
        period,
    })
}
