//! The plane cubic family
//! `max(a0, x+a1, y+a2, 2x+a3, x+y+a4, 2y+a5, 3x+a6, 2x+y+a7, x+2y+a8, 3y+a9)`,
//! its hexagonal cycle, and corner-locus extraction for plotting.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, Rational};
use crate::tropical::{Exponent, Point, TropMonomial, TropPolynomial, TropScalar};

/// Exponent of coefficient `a_i`.
pub const EXPONENTS: [Exponent; 10] = [
    (0, 0),
    (1, 0),
    (0, 1),
    (2, 0),
    (1, 1),
    (0, 2),
    (3, 0),
    (2, 1),
    (1, 2),
    (0, 3),
];

/// The x+y+a4 term whose region the cycle bounds.
pub const CENTER: Exponent = (1, 1);

/// Coefficients that may be `-∞`.
pub const OPTIONAL: [usize; 3] = [0, 6, 9];

/// Cycle edge directions in counterclockwise order from the basepoint.
pub const EDGE_DIRS: [(i64, i64); 6] = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)];

pub const EDGE_NAMES: [&str; 6] = [
    "bottom",
    "lower diagonal",
    "right",
    "top",
    "upper diagonal",
    "left",
];

/// Coefficients `a0..a9` of the cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveParams {
    a: [TropScalar; 10],
}

impl CurveParams {
    pub fn new(a: [TropScalar; 10]) -> Result<Self> {
        for (i, c) in a.iter().enumerate() {
            if !c.is_finite() && !OPTIONAL.contains(&i) {
                return Err(Error::InvalidParams(format!("a{i} must be finite")));
            }
        }
        Ok(CurveParams { a })
    }

    /// `None` entries become `-∞`.
    pub fn from_options(a: [Option<Rational>; 10]) -> Result<Self> {
        Self::new(a.map(|c| c.map_or(TropScalar::NegInf, TropScalar::Finite)))
    }

    /// Convenience for integer coefficients, all finite.
    pub fn from_ints(a: [i64; 10]) -> Result<Self> {
        Self::from_options(a.map(|c| Some(int(c))))
    }

    /// `max(x, y, x+y, 2x-1, 2y-1, 2x+y-2, x+2y-2)`: hexagon with vertices
    /// (0,0), (1,0), (2,1), (2,2), (1,2), (0,1).
    pub fn hexagon_example() -> Self {
        Self::from_options([
            None,
            Some(int(0)),
            Some(int(0)),
            Some(int(-1)),
            Some(int(0)),
            Some(int(-1)),
            None,
            Some(int(-2)),
            Some(int(-2)),
            None,
        ])
        .expect("example coefficients are valid")
    }

    pub fn coeffs(&self) -> &[TropScalar; 10] {
        &self.a
    }

    /// Finite value of a mandatory coefficient (any index outside 0, 6, 9).
    pub fn coef(&self, i: usize) -> &Rational {
        self.a[i]
            .finite()
            .unwrap_or_else(|| panic!("a{i} is -inf; only a0, a6, a9 may be"))
    }

    pub fn polynomial(&self) -> TropPolynomial {
        let terms = EXPONENTS
            .iter()
            .zip(&self.a)
            .map(|(&(i, j), c)| TropMonomial::new(i, j, c.clone()))
            .collect();
        TropPolynomial::new(terms).expect("a1 is finite and exponents are distinct")
    }

    /// Same result as `self.polynomial().eval(p)`.
    pub fn eval(&self, p: &Point) -> (TropScalar, Vec<Exponent>) {
        // Scan over a common denominator so the comparisons are integer-only.
        let mut den = p.x.denom().lcm(p.y.denom());
        for c in self.a.iter().filter_map(TropScalar::finite) {
            den = den.lcm(c.denom());
        }
        let scale = |r: &Rational| r.numer() * (den / r.denom());
        let (x, y) = (scale(&p.x), scale(&p.y));
        let mut best: Option<i128> = None;
        let mut argmax = Vec::with_capacity(3);
        for (&(i, j), c) in EXPONENTS.iter().zip(&self.a) {
            let Some(c) = c.finite() else { continue };
            let v = scale(c) + i as i128 * x + j as i128 * y;
            match best {
                Some(b) if v < b => {}
                Some(b) if v == b => argmax.push((i, j)),
                _ => {
                    best = Some(v);
                    argmax.clear();
                    argmax.push((i, j));
                }
            }
        }
        let value = best.map_or(TropScalar::NegInf, |b| TropScalar::Finite(Rational::new(b, den)));
        (value, argmax)
    }

    pub fn on_curve(&self, p: &Point) -> bool {
        on_curve(self, p)
    }

    pub fn on_cycle(&self, p: &Point) -> bool {
        on_cycle(self, p)
    }

    /// True iff x+y+a4 is among the maximal terms at `p` (closed a4 region).
    pub fn in_center_region(&self, p: &Point) -> bool {
        self.eval(p).1.contains(&CENTER)
    }

    /// Errors with [`Error::NotOnCycle`] (carrying the argmax) unless `p` is on
    /// the cycle.
    pub fn require_on_cycle(&self, p: &Point) -> Result<()> {
        let (_, argmax) = self.eval(p);
        if argmax.len() >= 2 && argmax.contains(&CENTER) {
            Ok(())
        } else {
            Err(Error::NotOnCycle {
                point: p.clone(),
                argmax,
            })
        }
    }
}

pub fn on_curve(c: &CurveParams, p: &Point) -> bool {
    c.eval(p).1.len() >= 2
}

pub fn on_cycle(c: &CurveParams, p: &Point) -> bool {
    let (_, argmax) = c.eval(p);
    argmax.len() >= 2 && argmax.contains(&CENTER)
}

// ---------------------------------------------------------------------------
// Strict smoothness chains

/// Chains of strict inequalities `a_i > a_j > ...` that together are
/// sufficient for smoothness.
pub const STRICT_CHAINS: [&[usize]; 6] = [
    &[0, 1, 3, 6],
    &[0, 2, 5, 9],
    &[1, 4, 8],
    &[2, 4, 7],
    &[3, 7],
    &[5, 8],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Holds,
    Fails,
    /// Left-hand side is `a0 = -∞`; the comparison is dropped from the chain.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub greater: usize,
    pub lesser: usize,
    pub outcome: Check,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub chain: &'static [usize],
    pub comparisons: Vec<Comparison>,
}

impl ChainReport {
    pub fn pass(&self) -> bool {
        self.comparisons.iter().all(|c| c.outcome != Check::Fails)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictReport {
    pub chains: Vec<ChainReport>,
}

impl StrictReport {
    pub fn pass(&self) -> bool {
        self.chains.iter().all(ChainReport::pass)
    }

    /// `(greater, lesser)` index pairs that fail, deduplicated, in chain order.
    pub fn violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in self.chains.iter().flat_map(|ch| &ch.comparisons) {
            let pair = (c.greater, c.lesser);
            if c.outcome == Check::Fails && !out.contains(&pair) {
                out.push(pair);
            }
        }
        out
    }
}

impl fmt::Display for StrictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ch in &self.chains {
            let names: Vec<String> = ch.chain.iter().map(|i| format!("a{i}")).collect();
            write!(f, "{:<22} {}", names.join(" > "), if ch.pass() { "ok" } else { "FAIL" })?;
            let bad: Vec<String> = ch
                .comparisons
                .iter()
                .filter(|c| c.outcome == Check::Fails)
                .map(|c| format!("a{} > a{}", c.greater, c.lesser))
                .collect();
            if !bad.is_empty() {
                write!(f, " (violated: {})", bad.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks the strict inequality chains literally. A comparison against `-∞`
/// on the right holds for any finite left side; a comparison whose left side
/// is `a0 = -∞` is skipped.
pub fn validate_strict(c: &CurveParams) -> StrictReport {
    let chains = STRICT_CHAINS
        .iter()
        .map(|&chain| {
            let comparisons = chain
                .windows(2)
                .map(|w| {
                    let (g, l) = (w[0], w[1]);
                    let outcome = if !c.a[g].is_finite() {
                        Check::Skipped
                    } else if c.a[g] > c.a[l] {
                        Check::Holds
                    } else {
                        Check::Fails
                    };
                    Comparison {
                        greater: g,
                        lesser: l,
                        outcome,
                    }
                })
                .collect();
            ChainReport { chain, comparisons }
        })
        .collect();
    StrictReport { chains }
}

// ---------------------------------------------------------------------------
// Cycle chart

/// The hexagonal boundary of the x+y+a4 region, with lattice-length
/// arc coordinates. Vertices run counterclockwise from `(a2-a4, a1-a4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleChart {
    params: CurveParams,
    vertices: [Point; 6],
    edge_lengths: [Rational; 6],
    cum: [Rational; 6],
    total: Rational,
}

impl CycleChart {
    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn vertices(&self) -> &[Point; 6] {
        &self.vertices
    }

    pub fn edge_lengths(&self) -> &[Rational; 6] {
        &self.edge_lengths
    }

    /// Arc coordinate of each vertex.
    pub fn cumulative(&self) -> &[Rational; 6] {
        &self.cum
    }

    /// Total lattice length `L`.
    pub fn total(&self) -> &Rational {
        &self.total
    }

    pub fn basepoint(&self) -> &Point {
        &self.vertices[0]
    }

    /// Point at lattice offset `t` from the start of edge `i`.
    pub fn point_on_edge(&self, i: usize, t: &Rational) -> Point {
        let (dx, dy) = EDGE_DIRS[i];
        let v = &self.vertices[i];
        Point::new(v.x + t * int(dx), v.y + t * int(dy))
    }

    /// Edge `i` and offset `t` with `0 <= t < len_i` such that `p` is at offset
    /// `t` along that edge. Vertices resolve to the edge they start.
    pub fn locate(&self, p: &Point) -> Option<(usize, Rational)> {
        for (i, &(dx, dy)) in EDGE_DIRS.iter().enumerate() {
            let v = &self.vertices[i];
            let (ex, ey) = (p.x - v.x, p.y - v.y);
            // displacement must be t·(dx, dy) with dx, dy in {-1, 0, 1}
            let t = if dx != 0 { unit_mul(dx, ex) } else { unit_mul(dy, ey) };
            if ex != unit_mul(dx, t) || ey != unit_mul(dy, t) {
                continue;
            }
            if !t.is_negative() && t < self.edge_lengths[i] {
                return Some((i, t));
            }
        }
        None
    }

    /// Bounding box of the hexagon.
    pub fn bounds(&self) -> Rect {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        Rect {
            xmin: xs.clone().min().unwrap(),
            xmax: xs.max().unwrap(),
            ymin: ys.clone().min().unwrap(),
            ymax: ys.max().unwrap(),
        }
    }
}

fn unit_mul(d: i64, t: Rational) -> Rational {
    match d {
        0 => Rational::zero(),
        1 => t,
        _ => -t,
    }
}

/// Builds the cycle chart. Fails with [`Error::DegenerateCycle`] on the first
/// edge of non-positive lattice length, and with [`Error::CycleObstructed`]
/// when a term other than x+y+a4 strictly dominates at a hexagon vertex.
pub fn cycle_chart(c: &CurveParams) -> Result<CycleChart> {
    let a = |i: usize| *c.coef(i);
    let vertices = [
        Point::new(a(2) - a(4), a(1) - a(4)),
        Point::new(a(1) - a(3), a(1) - a(4)),
        Point::new(a(4) - a(7), a(3) - a(7)),
        Point::new(a(4) - a(7), a(4) - a(8)),
        Point::new(a(5) - a(8), a(4) - a(8)),
        Point::new(a(2) - a(4), a(2) - a(5)),
    ];
    let edge_lengths = [
        (a(1) - a(3)) - (a(2) - a(4)),
        (a(4) - a(7)) - (a(1) - a(3)),
        (a(4) - a(8)) - (a(3) - a(7)),
        (a(4) - a(7)) - (a(5) - a(8)),
        a(4) + a(5) - a(2) - a(8),
        (a(2) - a(5)) - (a(1) - a(4)),
    ];
    if let Some(edge) = edge_lengths.iter().position(|l| !l.is_positive()) {
        return Err(Error::DegenerateCycle {
            edge,
            length: fmt_rational(&edge_lengths[edge]),
        });
    }
    // The a4 region is convex, so it equals the hexagon iff no other term
    // beats x+y+a4 at any of the six vertices.
    let poly = c.polynomial();
    for (i, v) in vertices.iter().enumerate() {
        let (_, argmax) = poly.eval(v);
        if !argmax.contains(&CENTER) {
            return Err(Error::CycleObstructed {
                vertex: i,
                point: v.clone(),
                term: argmax[0],
            });
        }
    }
    let mut cum: [Rational; 6] = Default::default();
    for i in 1..6 {
        cum[i] = cum[i - 1] + edge_lengths[i - 1];
    }
    let total = cum[5] + edge_lengths[5];
    Ok(CycleChart {
        params: c.clone(),
        vertices,
        edge_lengths,
        cum,
        total,
    })
}

// ---------------------------------------------------------------------------
// Corner locus

/// Closed axis-aligned rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rect {
    pub xmin: Rational,
    pub ymin: Rational,
    pub xmax: Rational,
    pub ymax: Rational,
}

impl Rect {
    pub fn new(xmin: Rational, ymin: Rational, xmax: Rational, ymax: Rational) -> Result<Self> {
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::EmptyBox);
        }
        Ok(Rect {
            xmin,
            ymin,
            xmax,
            ymax,
        })
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    pub fn expanded(&self, margin: Rational) -> Rect {
        Rect {
            xmin: self.xmin - margin,
            ymin: self.ymin - margin,
            xmax: self.xmax + margin,
            ymax: self.ymax + margin,
        }
    }

    pub fn width(&self) -> Rational {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> Rational {
        self.ymax - self.ymin
    }
}

/// Unclipped shape of a pairwise tie locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocusShape {
    Segment { from: Point, to: Point },
    Ray { origin: Point, direction: (i64, i64) },
    Line { through: Point, direction: (i64, i64) },
}

/// One-dimensional piece of the corner locus where `terms` tie for the max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusPiece {
    pub terms: (Exponent, Exponent),
    pub shape: LocusShape,
    /// Endpoints after clipping; for rays, `clipped.0` is nearer the origin.
    pub clipped: (Point, Point),
}

impl LocusPiece {
    pub fn involves(&self, e: Exponent) -> bool {
        self.terms.0 == e || self.terms.1 == e
    }

    /// Exact test whether `p` lies on the clipped piece.
    pub fn contains(&self, p: &Point) -> bool {
        let (a, b) = &self.clipped;
        let (dx, dy) = (b.x - a.x, b.y - a.y);
        let (ex, ey) = (p.x - a.x, p.y - a.y);
        if dx * ey != dy * ex {
            return false;
        }
        let dot = dx * ex + dy * ey;
        let len2 = dx * dx + dy * dy;
        !dot.is_negative() && dot <= len2
    }
}

/// Constraint `alpha + beta·t >= 0` folded into an interval `[lo, hi]`.
/// Returns false when the interval becomes empty outright.
fn restrict(lo: &mut Option<Rational>, hi: &mut Option<Rational>, alpha: Rational, beta: Rational) -> bool {
    if beta.is_zero() {
        return !alpha.is_negative();
    }
    let bound = -alpha / beta;
    if beta.is_positive() {
        if lo.is_none_or(|l| bound > l) {
            *lo = Some(bound);
        }
    } else if hi.is_none_or(|h| bound < h) {
        *hi = Some(bound);
    }
    true
}

/// Pairwise-tie computation of `V(f) ∩ bbox`: for every pair of finite terms,
/// the set where both attain the maximum, kept when it is one-dimensional
/// after clipping. Coincident pieces are reported once.
pub fn corner_locus(f: &TropPolynomial, bbox: &Rect) -> Result<Vec<LocusPiece>> {
    if bbox.xmin >= bbox.xmax || bbox.ymin >= bbox.ymax {
        return Err(Error::EmptyBox);
    }
    let terms: Vec<(Exponent, Rational)> = f
        .terms()
        .iter()
        .filter_map(|t| t.coeff.finite().map(|c| (t.exponent(), *c)))
        .collect();
    let mut pieces: Vec<LocusPiece> = Vec::new();

    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            let ((xi, yi), ci) = &terms[i];
            let ((xj, yj), cj) = &terms[j];
            // tie line: a·x + b·y = rhs
            let a = *xi as i64 - *xj as i64;
            let b = *yi as i64 - *yj as i64;
            let rhs = cj - ci;
            let g = a.gcd(&b);
            let dir = (-b / g, a / g);
            let base = if b != 0 {
                Point::new(int(0), rhs / int(b))
            } else {
                Point::new(rhs / int(a), int(0))
            };
            let at = |t: &Rational| Point::new(base.x + t * int(dir.0), base.y + t * int(dir.1));

            let mut lo = None;
            let mut hi = None;
            let mut feasible = true;
            for (k, ((xk, yk), ck)) in terms.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                let gx = int(*xi as i64 - *xk as i64);
                let gy = int(*yi as i64 - *yk as i64);
                let alpha = ci - ck + gx * base.x + gy * base.y;
                let beta = gx * int(dir.0) + gy * int(dir.1);
                if !restrict(&mut lo, &mut hi, alpha, beta) {
                    feasible = false;
                    break;
                }
            }
            if !feasible || matches!((&lo, &hi), (Some(l), Some(h)) if l >= h) {
                continue;
            }
            let shape = match (&lo, &hi) {
                (Some(l), Some(h)) => LocusShape::Segment {
                    from: at(l),
                    to: at(h),
                },
                (Some(l), None) => LocusShape::Ray {
                    origin: at(l),
                    direction: dir,
                },
                (None, Some(h)) => LocusShape::Ray {
                    origin: at(h),
                    direction: (-dir.0, -dir.1),
                },
                (None, None) => LocusShape::Line {
                    through: base.clone(),
                    direction: dir,
                },
            };

            let (mut clo, mut chi) = (lo, hi);
            let dx = int(dir.0);
            let dy = int(dir.1);
            let ok = restrict(&mut clo, &mut chi, base.x - bbox.xmin, dx)
                && restrict(&mut clo, &mut chi, bbox.xmax - base.x, -dx)
                && restrict(&mut clo, &mut chi, base.y - bbox.ymin, dy)
                && restrict(&mut clo, &mut chi, bbox.ymax - base.y, -dy);
            let (true, Some(cl), Some(ch)) = (ok, clo, chi) else {
                continue;
            };
            if cl >= ch {
                continue;
            }
            let mut clipped = (at(&cl), at(&ch));
            if matches!((&lo, &hi), (None, Some(_))) {
                clipped = (clipped.1, clipped.0);
            }
            let dup = pieces.iter().any(|p| {
                (p.clipped.0 == clipped.0 && p.clipped.1 == clipped.1)
                    || (p.clipped.0 == clipped.1 && p.clipped.1 == clipped.0)
            });
            if !dup {
                pieces.push(LocusPiece {
                    terms: (terms[i].0, terms[j].0),
                    shape,
                    clipped,
                });
            }
        }
    }
    Ok(pieces)
}
