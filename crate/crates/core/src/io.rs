//! Scenario files, orbit CSV and SVG plots.
//!
//! Scenario files are JSON:
//!
//! ```json
//! {
//!   "curve": { "a": [null, 0, 0, -1, 0, -1, null, -2, -2, null] },
//!   "theta": [0, 0.5],
//!   "t": [0.5, 0],
//!   "p0": [0.2, 0],
//!   "steps": 12,
//!   "bbox": [-1, -1, 3, 3]
//! }
//! ```
//!
//! Every number may be a JSON number (decimals are read exactly, so `0.2` is
//! `1/5`) or a string holding `p/q` or a decimal. `null` in `curve.a` means
//! `-∞` and is accepted only at indices 0, 6 and 9. `bbox` is
//! `[xmin, ymin, xmax, ymax]` and optional; `description` is an optional
//! free-text field. Any other key is an error.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Deserialize;
use serde_json::Value;

use crate::curve::{corner_locus, CurveParams, CycleChart, Rect, CENTER, OPTIONAL};
use crate::error::{Error, Result};
use crate::qrt::{OrbitRecord, Scenario};
use crate::rational::{fmt_decimal, fmt_rational, int, parse_rational, Rational};
use crate::tropical::Point;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCurve {
    a: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    curve: RawCurve,
    theta: Vec<Value>,
    t: Vec<Value>,
    p0: Vec<Value>,
    steps: u64,
    #[serde(default)]
    bbox: Option<Vec<Value>>,
    #[serde(default)]
    #[allow(dead_code)]
    description: Option<String>,
}

/// Parsed scenario file; points are not yet checked against the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioFile {
    pub curve: CurveParams,
    pub theta: Point,
    pub t: Point,
    pub p0: Point,
    pub steps: usize,
    pub bbox: Option<Rect>,
}

impl ScenarioFile {
    pub fn into_scenario(self) -> Result<Scenario> {
        Scenario::new(self.curve, self.theta, self.t, self.p0, self.steps)
    }
}

fn value_to_rational(v: &Value, what: &str) -> Result<Rational> {
    match v {
        // arbitrary_precision keeps the literal text of the number
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("{what}: expected a number or \"p/q\" string, got {other}"))),
    }
    .map_err(|e| match e {
        Error::Parse(m) if !m.starts_with(what) => Error::Parse(format!("{what}: {m}")),
        e => e,
    })
}

fn values_to_point(vs: &[Value], what: &str) -> Result<Point> {
    match vs {
        [x, y] => Ok(Point::new(
            value_to_rational(x, &format!("{what}[0]"))?,
            value_to_rational(y, &format!("{what}[1]"))?,
        )),
        _ => Err(Error::Parse(format!("{what}: expected two coordinates, got {}", vs.len()))),
    }
}

/// Parses a point written `X,Y` (each coordinate a decimal or `p/q`).
pub fn parse_point(text: &str) -> Result<Point> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected X,Y, got {text:?}")))?;
    Ok(Point::new(parse_rational(x)?, parse_rational(y)?))
}

/// Parses the document without the on-cycle checks.
pub fn parse_scenario_file(text: &str) -> Result<ScenarioFile> {
    let raw: RawScenario =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("scenario: {e}")))?;
    if raw.curve.a.len() != 10 {
        return Err(Error::Parse(format!(
            "curve.a: expected 10 coefficients, got {}",
            raw.curve.a.len()
        )));
    }
    let mut coeffs: [Option<Rational>; 10] = [None; 10];
    for (i, v) in raw.curve.a.iter().enumerate() {
        if v.is_null() {
            if !OPTIONAL.contains(&i) {
                return Err(Error::Parse(format!("curve.a[{i}]: a{i} must be finite, got null")));
            }
        } else {
            coeffs[i] = Some(value_to_rational(v, &format!("curve.a[{i}]"))?);
        }
    }
    let curve = CurveParams::from_options(coeffs).map_err(|e| Error::Parse(e.to_string()))?;
    let bbox = match raw.bbox {
        None => None,
        Some(b) => {
            let [xmin, ymin, xmax, ymax] = b.as_slice() else {
                return Err(Error::Parse(format!("bbox: expected 4 numbers, got {}", b.len())));
            };
            let r = |v: &Value| value_to_rational(v, "bbox");
            Some(Rect::new(r(xmin)?, r(ymin)?, r(xmax)?, r(ymax)?)?)
        }
    };
    Ok(ScenarioFile {
        curve,
        theta: values_to_point(&raw.theta, "theta")?,
        t: values_to_point(&raw.t, "t")?,
        p0: values_to_point(&raw.p0, "p0")?,
        steps: usize::try_from(raw.steps).map_err(|_| Error::Parse("steps: too large".into()))?,
        bbox,
    })
}

/// Parses and validates: `theta`, `t` and `p0` must lie on the cycle.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    parse_scenario_file(text)?.into_scenario()
}

/// The bundled default scenario.
pub const EXAMPLE_SCENARIO: &str = include_str!("../examples/hexagon.json");

// ---------------------------------------------------------------------------
// CSV

pub const CSV_HEADER: &str = "n,x,y,s,on_cycle";

/// Writes `n,x,y,s,on_cycle` rows with exact `p/q` rationals and LF endings.
pub fn emit_orbit_csv<W: Write>(o: &OrbitRecord, sink: &mut W) -> Result<()> {
    let mut out = String::with_capacity(32 * (o.points.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (n, ((p, s), on)) in o.points.iter().zip(&o.arcs).zip(&o.on_cycle).enumerate() {
        out.push_str(&format!(
            "{n},{},{},{},{on}\n",
            fmt_rational(&p.x),
            fmt_rational(&p.y),
            fmt_rational(s)
        ));
    }
    sink.write_all(out.as_bytes())?;
    Ok(())
}

// ---------------------------------------------------------------------------
// SVG

const SVG_PLACES: u32 = 6;

struct Viewport {
    unit: Rational,
}

impl Viewport {
    fn x(&self, x: &Rational) -> String {
        fmt_decimal(x, SVG_PLACES)
    }

    // SVG y grows downward
    fn y(&self, y: &Rational) -> String {
        fmt_decimal(&-y, SVG_PLACES)
    }

    fn len(&self, k: i64) -> String {
        fmt_decimal(&(self.unit * int(k)), SVG_PLACES)
    }
}

/// Writes a standalone SVG 1.1 document: corner-locus pieces clipped to
/// `bbox` (class `cycle` for edges of the x+y+a4 region, `tentacle` for the
/// rest) and, if given, one `orbit` marker per distinct orbit point labelled
/// with the indices at which it occurs.
pub fn emit_svg<W: Write>(
    chart: &CycleChart,
    orbit: Option<&OrbitRecord>,
    bbox: &Rect,
    sink: &mut W,
) -> Result<()> {
    let pieces = corner_locus(&chart.params().polynomial(), bbox)?;
    let (w, h) = (bbox.width(), bbox.height());
    let vp = Viewport {
        unit: w.max(h) / int(400),
    };
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n",
        vp.x(&bbox.xmin),
        vp.y(&bbox.ymax),
        fmt_decimal(&w, SVG_PLACES),
        fmt_decimal(&h, SVG_PLACES)
    ));
    out.push_str(&format!(
        "<style>.cycle{{stroke:#000;stroke-width:{};stroke-linecap:round}} \
         .tentacle{{stroke:#777;stroke-width:{}}} .orbit{{fill:#c00}} \
         .label{{font-family:sans-serif;font-size:{};fill:#c00}}</style>\n",
        vp.len(3),
        vp.len(1),
        vp.len(12)
    ));
    out.push_str("<title>tropical cubic</title>\n");

    for class in ["tentacle", "cycle"] {
        out.push_str(&format!("<g class=\"{class}\">\n"));
        for p in pieces.iter().filter(|p| p.involves(CENTER) == (class == "cycle")) {
            let (a, b) = &p.clipped;
            out.push_str(&format!(
                "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                vp.x(&a.x),
                vp.y(&a.y),
                vp.x(&b.x),
                vp.y(&b.y)
            ));
        }
        out.push_str("</g>\n");
    }

    if let Some(o) = orbit {
        let mut seen: BTreeMap<&Point, Vec<usize>> = BTreeMap::new();
        let mut order: Vec<&Point> = Vec::new();
        for (n, p) in o.points.iter().enumerate() {
            let e = seen.entry(p).or_default();
            if e.is_empty() {
                order.push(p);
            }
            e.push(n);
        }
        out.push_str("<g class=\"orbit\">\n");
        for p in order {
            let idx = &seen[p];
            let mut label: Vec<String> = idx.iter().take(4).map(|n| n.to_string()).collect();
            if idx.len() > 4 {
                label.push("…".into());
            }
            out.push_str(&format!(
                "<circle class=\"orbit\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
                vp.x(&p.x),
                vp.y(&p.y),
                vp.len(4)
            ));
            out.push_str(&format!(
                "<text class=\"label\" x=\"{}\" y=\"{}\">{}</text>\n",
                fmt_decimal(&(p.x + vp.unit * int(6)), SVG_PLACES),
                fmt_decimal(&(-p.y - vp.unit * int(6)), SVG_PLACES),
                label.join(",")
            ));
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    sink.write_all(out.as_bytes())?;
    Ok(())
}

/// Default plot window: the hexagon's bounding box grown by its larger side.
pub fn default_bbox(chart: &CycleChart) -> Rect {
    let b = chart.bounds();
    let margin = b.width().max(b.height()) / int(2);
    b.expanded(margin)
}
