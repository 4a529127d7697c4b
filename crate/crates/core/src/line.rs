//! Tropical lines `max(cx + x, cy + y, c0)`.

use crate::rational::Rational;
use crate::tropical::Point;

/// Corner locus of `max(cx + x, cy + y, c0)`: three rays leaving the vertex
/// `(c0 - cx, c0 - cy)` in directions (0,-1), (-1,0) and (1,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropLine {
    pub cx: Rational,
    pub cy: Rational,
    pub c0: Rational,
}

impl TropLine {
    pub fn new(cx: Rational, cy: Rational, c0: Rational) -> Self {
        TropLine { cx, cy, c0 }
    }

    pub fn vertex(&self) -> Point {
        Point::new(self.c0 - self.cx, self.c0 - self.cy)
    }

    /// At least two of the three terms attain the max at `p`.
    pub fn contains(&self, p: &Point) -> bool {
        let terms = [self.cx + p.x, self.cy + p.y, self.c0];
        let max = terms.iter().max().unwrap();
        terms.iter().filter(|t| *t == max).count() >= 2
    }
}

/// The line `max(x + max(y_p, y_q), y + max(x_p, x_q), max(x_p + y_q, x_q + y_p))`.
///
/// For pairs on a common horizontal, vertical or slope-one line this puts the
/// vertex at the coordinatewise larger of the two points; for `p == q` the
/// vertex is `p`.
pub fn line_through(p: &Point, q: &Point) -> TropLine {
    TropLine {
        cx: p.y.max(q.y),
        cy: p.x.max(q.x),
        c0: (p.x + q.y).max(q.x + p.y),
    }
}

pub fn vertex_of(l: &TropLine) -> Point {
    l.vertex()
}

pub fn point_on_line(l: &TropLine, p: &Point) -> bool {
    l.contains(p)
}
