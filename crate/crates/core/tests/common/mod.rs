//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropical_qrt::curve::{CurveParams, CENTER};
use tropical_qrt::rational::{int, ratio};
use tropical_qrt::{Jacobian, Point, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(x: Rational, y: Rational) -> Point {
    Point::new(x, y)
}

/// Strict-chain curve with a unit hexagon at (2,2)-(4,4).
pub fn strict_curve() -> CurveParams {
    CurveParams::from_ints([5, 3, 3, 0, 1, 0, -4, -3, -3, -4]).unwrap()
}

/// Hexagon with unequal edges (2, 3, 1/2, 3, 2, 3/2).
pub fn lopsided_curve() -> CurveParams {
    CurveParams::from_options([
        None,
        Some(int(0)),
        Some(int(0)),
        Some(int(-2)),
        Some(int(0)),
        Some(ratio(-3, 2)),
        None,
        Some(int(-5)),
        Some(ratio(-7, 2)),
        None,
    ])
    .unwrap()
}

/// Finite a0, a6, a9 that stay clear of the hexagon, fractional coefficients.
pub fn fractional_curve() -> CurveParams {
    CurveParams::from_options([
        Some(ratio(-5, 1)),
        Some(ratio(1, 3)),
        Some(ratio(-1, 4)),
        Some(ratio(-5, 6)),
        Some(ratio(1, 2)),
        Some(ratio(-7, 5)),
        Some(ratio(-12, 1)),
        Some(ratio(-3, 1)),
        Some(ratio(-17, 6)),
        Some(ratio(-14, 1)),
    ])
    .unwrap()
}

/// Random valid curve by rejection sampling, seeded.
pub fn random_curve(r: &mut ChaCha8Rng) -> CurveParams {
    loop {
        let mut a: [Option<Rational>; 10] = [None; 10];
        for (i, slot) in a.iter_mut().enumerate() {
            let den = r.gen_range(1..=6);
            let v = ratio(r.gen_range(-24..=24), den);
            *slot = match i {
                // keep the optional terms either absent or well below the cycle
                0 | 6 | 9 => r.gen_bool(0.5).then(|| v - int(30)),
                _ => Some(v / int(2)),
            };
        }
        let c = CurveParams::from_options(a).unwrap();
        if Jacobian::new(&c).is_ok() {
            return c;
        }
    }
}

/// Five valid curves: the example hexagon, the strict-chain curve, two fixed
/// irregular ones, and one random.
pub fn test_curves() -> Vec<(String, CurveParams)> {
    let mut r = rng(0x5eed);
    vec![
        ("example".into(), CurveParams::hexagon_example()),
        ("strict".into(), strict_curve()),
        ("lopsided".into(), lopsided_curve()),
        ("fractional".into(), fractional_curve()),
        ("random".into(), random_curve(&mut r)),
    ]
}

/// Uniform rational arc parameter in `[0, L)` with a random small denominator,
/// so chart vertices come up regularly.
pub fn random_arc(j: &Jacobian, r: &mut ChaCha8Rng) -> Rational {
    let den = r.gen_range(1..=48);
    let k = r.gen_range(0..den);
    j.total() * ratio(k, den)
}

pub fn random_cycle_point(j: &Jacobian, r: &mut ChaCha8Rng) -> Point {
    j.arc_point(&random_arc(j, r))
}

/// Random point of the closed x+y+a4 region (boundary included sometimes).
pub fn random_region_point(j: &Jacobian, r: &mut ChaCha8Rng) -> Point {
    let b = j.chart().bounds();
    loop {
        let den = r.gen_range(1..=40);
        let fx = ratio(r.gen_range(0..=den), den);
        let fy = ratio(r.gen_range(0..=den), den);
        let p = pt(b.xmin + fx * b.width(), b.ymin + fy * b.height());
        if j.params().in_center_region(&p) {
            return p;
        }
    }
}

fn in_region(c: &CurveParams, p: &Point) -> bool {
    c.eval(p).1.contains(&CENTER)
}

/// Brute-force exit of the ray `v + t·d`, `t >= 0`: march in steps of 1/32
/// while the a4 term stays maximal, then solve every term-vs-a4 crossing in
/// the last bracket and keep the largest crossing still inside the region.
/// Uses only term evaluation, never the closed-form exit formulas.
pub fn marched_exit(c: &CurveParams, v: &Point, d: (i64, i64)) -> Point {
    assert!(in_region(c, v), "vertex {v} outside region");
    let step = ratio(1, 32);
    let at = |t: &Rational| pt(v.x + t * int(d.0), v.y + t * int(d.1));
    let mut t = Rational::from(0);
    for _ in 0..1_000_000 {
        if !in_region(c, &at(&(t + step))) {
            break;
        }
        t += step;
    }
    let hi = t + step;

    let exps = tropical_qrt::curve::EXPONENTS;
    let center = c.coeffs()[4].finite().unwrap();
    let mut best: Option<Rational> = None;
    for (k, coeff) in c.coeffs().iter().enumerate() {
        let Some(ck) = coeff.finite() else { continue };
        if k == 4 {
            continue;
        }
        let (xk, yk) = exps[k];
        // (a4 + x + y) - (ck + xk·x + yk·y) along the ray = alpha + beta·t
        let gx = int(1 - xk as i64);
        let gy = int(1 - yk as i64);
        let alpha = center - ck + gx * v.x + gy * v.y;
        let beta = gx * int(d.0) + gy * int(d.1);
        if beta == Rational::from(0) {
            continue;
        }
        let root = -alpha / beta;
        if root >= t && root <= hi && in_region(c, &at(&root)) && best.is_none_or(|b| root > b) {
            best = Some(root);
        }
    }
    at(&best.expect("exit lies in the final bracket"))
}

/// `(r1, r2, r3)` from [`marched_exit`] along (0,-1), (-1,0), (1,1).
pub fn marched_exits(c: &CurveParams, v: &Point) -> [Point; 3] {
    [
        marched_exit(c, v, (0, -1)),
        marched_exit(c, v, (-1, 0)),
        marched_exit(c, v, (1, 1)),
    ]
}
