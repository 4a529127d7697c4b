//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. All checks are exact; timings are wall-clock bounds.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use tropical_qrt::curve::{cycle_chart, validate_strict, CurveParams};
use tropical_qrt::group_law::{add, negate, ray_exits, third_point_formula, third_point_traced, Route};
use tropical_qrt::io::parse_scenario;
use tropical_qrt::qrt::{elliptic_value, orbit_in, period_of, qrt_step, translation_length, Scenario};
use tropical_qrt::rational::{int, ratio};
use tropical_qrt::{Jacobian, Point, Rational};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ipt(x: i64, y: i64) -> Point {
    Point::new(int(x), int(y))
}

fn bundled_orbit_points() -> [Point; 6] {
    [
        pt(ratio(1, 5), int(0)),
        pt(ratio(6, 5), ratio(1, 5)),
        pt(int(2), ratio(6, 5)),
        pt(ratio(9, 5), int(2)),
        pt(ratio(4, 5), ratio(9, 5)),
        pt(int(0), ratio(4, 5)),
    ]
}

fn mean_time<F: FnMut()>(runs: u32, mut f: F) -> Duration {
    let start = Instant::now();
    for _ in 0..runs {
        f();
    }
    start.elapsed() / runs
}

/// Criterion 1: the hexagon of the example curve.
fn hexagon() -> Outcome {
    let c = CurveParams::hexagon_example();
    let chart = cycle_chart(&c).map_err(|e| e.to_string())?;
    let expect = [ipt(0, 0), ipt(1, 0), ipt(2, 1), ipt(2, 2), ipt(1, 2), ipt(0, 1)];
    ensure!(chart.vertices() == &expect, "vertices {:?}", chart.vertices());
    ensure!(chart.edge_lengths().iter().all(|l| *l == int(1)), "edge lengths {:?}", chart.edge_lengths());
    ensure!(*chart.total() == int(6), "L = {}", chart.total());
    let t = mean_time(200, || {
        cycle_chart(&c).unwrap();
    });
    ensure!(t < Duration::from_millis(1), "cycle_chart took {t:?}");
    Ok(format!("vertices and unit edges exact, L = 6, {t:?} per chart"))
}

/// Criterion 2: the bundled orbit: exactly 6-periodic, on the cycle, formula half-steps
/// confirmed against the oracle.
fn bundled_orbit() -> Outcome {
    let s = parse_scenario(tropical_qrt::io::EXAMPLE_SCENARIO).map_err(|e| e.to_string())?;
    let j = Jacobian::new(&s.curve).map_err(|e| e.to_string())?;
    let mut long = s.clone();
    long.steps = 1000;
    let o = orbit_in(&j, &long).map_err(|e| e.to_string())?;
    let expect = bundled_orbit_points();
    for (n, p) in o.points.iter().enumerate() {
        ensure!(*p == expect[n % 6], "P({n}) = {p}, expected {}", expect[n % 6]);
    }
    ensure!(o.period == Some(6), "period {:?}", o.period);
    ensure!(o.on_cycle.iter().all(|&b| b), "an iterate left the cycle");
    for p in &expect {
        ensure!(s.curve.on_cycle(p), "{p} not on cycle");
    }

    let mut formula_half_steps = 0;
    for (n, step) in o.steps.iter().enumerate() {
        let p = &o.points[n];
        for (half, a, b) in [(&step.first, p, &s.t), (&step.second, &step.first.result, &s.theta)] {
            let oracle = j.third_point_oracle(a, b).map_err(|e| e.to_string())?;
            ensure!(half.result == oracle, "step {n}: half-step {} != oracle {oracle}", half.result);
            if half.route == Route::Formula {
                formula_half_steps += 1;
            }
        }
        let closed = elliptic_value(&j, &s.p0, &o.delta, n as i64 + 1).map_err(|e| e.to_string())?;
        ensure!(closed == o.points[n + 1], "step {n}: closed form {closed}");
    }
    ensure!(formula_half_steps > 0, "no half-step took the formula path");

    let t = mean_time(5, || {
        orbit_in(&j, &long).unwrap();
    });
    ensure!(t < Duration::from_millis(10), "1000 steps took {t:?}");
    Ok(format!(
        "period 6 exact over 1000 steps, {formula_half_steps}/2000 half-steps on the formula path all match the oracle, {t:?} per 1000 steps"
    ))
}

/// Criterion 3: chord construction versus arc-length oracle, with the fallback taken
/// exactly when the (brute-force) exit triple omits an input.
fn oracle_equivalence() -> Outcome {
    let mut r = rng(31);
    let mut formula = 0usize;
    let mut fallback = 0usize;
    let curves = test_curves();
    ensure!(curves.iter().any(|(_, c)| *c == strict_curve()), "strict curve missing");
    for (name, c) in &curves {
        let j = Jacobian::new(c).map_err(|e| format!("{name}: {e}"))?;
        for _ in 0..1000 {
            let p = random_cycle_point(&j, &mut r);
            let q = random_cycle_point(&j, &mut r);
            let (res, route) = third_point_traced(&j, &p, &q).map_err(|e| e.to_string())?;
            let oracle = j.third_point_oracle(&p, &q).map_err(|e| e.to_string())?;
            ensure!(res == oracle, "{name}: third({p}, {q}) = {res} via {route:?}, oracle {oracle}");

            // Independent degeneracy predicate from marched exits.
            let v = tropical_qrt::line::line_through(&p, &q).vertex();
            let omits = p == q
                || !c.in_center_region(&v)
                || {
                    let ex = marched_exits(c, &v);
                    let ip = ex.iter().position(|e| *e == p);
                    !(ip.is_some() && (0..3).any(|k| Some(k) != ip && ex[k] == q))
                };
            ensure!(
                (route == Route::Fallback) == omits,
                "{name}: route {route:?} for {p}, {q} but omission = {omits}"
            );
            if route == Route::Formula {
                formula += 1;
                let direct = third_point_formula(c, &p, &q).unwrap();
                ensure!(direct == oracle, "{name}: formula {direct} != oracle {oracle}");
            } else {
                fallback += 1;
            }
        }
    }
    Ok(format!(
        "{} curves x 1000 pairs: {formula} formula-path results equal the oracle, {fallback} fallbacks all on omitted-input configurations",
        curves.len()
    ))
}

/// Criterion 4: group axioms with zero theta.
fn group_axioms() -> Outcome {
    let mut r = rng(41);
    let curves = test_curves();
    for (name, c) in &curves {
        let j = Jacobian::new(c).map_err(|e| e.to_string())?;
        let theta = random_cycle_point(&j, &mut r);
        for _ in 0..500 {
            let p = random_cycle_point(&j, &mut r);
            let q = random_cycle_point(&j, &mut r);
            let w = random_cycle_point(&j, &mut r);
            let sum = |a: &Point, b: &Point| add(&j, &theta, a, b).map_err(|e| e.to_string());
            ensure!(sum(&p, &theta)? == p, "{name}: identity fails at {p}");
            ensure!(sum(&p, &q)? == sum(&q, &p)?, "{name}: commutativity fails at {p}, {q}");
            let left = sum(&sum(&p, &q)?, &w)?;
            let right = sum(&p, &sum(&q, &w)?)?;
            ensure!(left == right, "{name}: associativity fails at {p}, {q}, {w}");
            let n = negate(&j, &theta, &p).map_err(|e| e.to_string())?;
            ensure!(sum(&p, &n)? == theta, "{name}: inverse fails at {p}");
            ensure!(c.on_cycle(&sum(&p, &q)?), "{name}: sum left the cycle");
        }
    }
    Ok(format!("identity, commutativity, associativity, inverses exact on {} curves x 500 triples", curves.len()))
}

/// Criterion 5: ray exits versus marching; constant collinear sum.
fn ray_exit_oracle() -> Outcome {
    let mut r = rng(51);
    let mut checked = 0;
    for (name, c) in test_curves() {
        let j = Jacobian::new(&c).map_err(|e| e.to_string())?;
        for _ in 0..1000 {
            let v = random_region_point(&j, &mut r);
            let e = ray_exits(&c, &v).map_err(|e| e.to_string())?;
            let m = marched_exits(&c, &v);
            ensure!(
                [&e.r1, &e.r2, &e.r3] == [&m[0], &m[1], &m[2]],
                "{name}: v={v}: formula {:?} vs marched {:?}",
                e.points(),
                m
            );
            let sum: Rational = e
                .points()
                .iter()
                .map(|p| j.arc_param(p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?
                .into_iter()
                .sum();
            ensure!(j.reduce(&sum) == *j.ccal(), "{name}: v={v}: exit sum {} != ccal {}", j.reduce(&sum), j.ccal());
            checked += 1;
        }
    }
    Ok(format!("{checked} vertices: exits equal marched exits, collinear sum constant"))
}

/// Criterion 6: translation law, closed form versus iteration, and period detection.
fn translation_law() -> Outcome {
    let mut r = rng(61);
    let mut periods_seen = 0;
    for (name, c) in test_curves() {
        let j = Jacobian::new(&c).map_err(|e| e.to_string())?;
        for _ in 0..6 {
            let theta = random_cycle_point(&j, &mut r);
            let t = random_cycle_point(&j, &mut r);
            let p0 = random_cycle_point(&j, &mut r);
            let s = Scenario::new(c.clone(), theta.clone(), t.clone(), p0.clone(), 100).map_err(|e| e.to_string())?;
            let o = orbit_in(&j, &s).map_err(|e| e.to_string())?;
            let delta = translation_length(&j, &theta, &t).map_err(|e| e.to_string())?;
            ensure!(o.delta == delta, "{name}: orbit delta {} != {delta}", o.delta);
            for k in 0..100 {
                let inc = j.reduce(&(o.arcs[k + 1] - o.arcs[k]));
                ensure!(inc == delta, "{name}: step {k} moved {inc}, expected {delta}");
            }
            let mut p = p0.clone();
            for n in 0..=100i64 {
                let closed = elliptic_value(&j, &p0, &delta, n).map_err(|e| e.to_string())?;
                ensure!(closed == p, "{name}: P({n}) closed {closed} vs iterated {p}");
                p = qrt_step(&j, &theta, &t, &p).map_err(|e| e.to_string())?;
            }
            let period = period_of(j.total(), &delta) as usize;
            let expected = (period <= 100).then_some(period);
            ensure!(o.period == expected, "{name}: detected {:?}, period_of {period}", o.period);
            if o.period.is_some() {
                periods_seen += 1;
            }
        }
    }
    ensure!(periods_seen > 0, "no scenario closed within 100 steps");
    Ok(format!("30 scenarios: constant increments, closed form = iteration for n <= 100, {periods_seen} periods detected and equal period_of"))
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_tropqrt"))
}

fn hexagon_json() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/hexagon.json")
}

/// Criterion 7: CLI CSV output is byte-deterministic and closes after 6 steps.
fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("orbit{k}.csv"));
        let status = Command::new(bin())
            .arg("orbit")
            .arg(hexagon_json())
            .arg("--csv")
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure!(status.success(), "orbit exited with {status}");
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure!(outputs[0] == outputs[1], "CSV bytes differ between runs");
    let text = String::from_utf8(outputs.remove(0)).map_err(|e| e.to_string())?;
    let rows: Vec<&str> = text.lines().collect();
    ensure!(rows.len() == 14, "expected header + 13 rows, got {}", rows.len());
    let tail = |row: &str| row.split_once(',').map(|(_, t)| t.to_string()).unwrap_or_default();
    ensure!(tail(rows[7]) == tail(rows[1]), "row 6 {:?} != row 0 {:?}", rows[7], rows[1]);
    ensure!(rows[1] == "0,1/5,0,1/5,true", "row 0 is {:?}", rows[1]);
    Ok("two runs byte-identical; row 6 repeats row 0".into())
}

/// Criterion 8: strict chains versus cycle non-degeneracy.
fn validators() -> Outcome {
    let strict = validate_strict(&strict_curve());
    ensure!(strict.pass(), "strict curve fails:\n{strict}");
    let example = validate_strict(&CurveParams::hexagon_example());
    ensure!(!example.pass(), "example curve passes strict chains");
    ensure!(example.violations() == vec![(1, 4), (2, 4)], "violations {:?}", example.violations());
    ensure!(cycle_chart(&CurveParams::hexagon_example()).is_ok(), "cycle_chart rejects the example");
    Ok("strict curve passes; example fails exactly a1>a4 and a2>a4 yet has a valid cycle".into())
}

fn main() {
    let criteria: [(&str, Check); 8] = [
        ("hexagon chart of the example curve", hexagon),
        ("6-periodic orbit of the bundled scenario", bundled_orbit),
        ("chord construction equals arc-length oracle", oracle_equivalence),
        ("group axioms", group_axioms),
        ("ray exits equal marched exits", ray_exit_oracle),
        ("translation law and period", translation_law),
        ("CLI CSV determinism", cli_determinism),
        ("validator fidelity", validators),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why}", i + 1);
            }
        }
    }
    let total = start.elapsed();
    let budget = Duration::from_secs(30);
    if total > budget {
        failed += 1;
        println!("[FAIL] suite runtime {total:?} exceeds {budget:?}");
    } else {
        println!("suite runtime {total:?} (budget {budget:?})");
    }
    println!("{} of {} criteria passed", criteria.len() - failed.min(criteria.len()), criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
