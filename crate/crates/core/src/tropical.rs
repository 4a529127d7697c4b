//! Max-plus scalars and two-variable tropical polynomials.
//!
//! The semiring is `Q ∪ {-∞}` with `max` as addition and ordinary `+` as
//! multiplication. `-∞` is a distinct variant so it never takes part in
//! rational arithmetic.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, Rational};

/// Exponent pair `(i, j)` of the monomial `i·x + j·y`.
pub type Exponent = (u32, u32);

/// Element of the max-plus semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropScalar {
    NegInf,
    Finite(Rational),
}

impl TropScalar {
    pub fn zero() -> Self {
        TropScalar::NegInf
    }

    pub fn one() -> Self {
        TropScalar::Finite(Rational::zero())
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::Finite(r) => Some(r),
            TropScalar::NegInf => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }
}

impl From<Rational> for TropScalar {
    fn from(r: Rational) -> Self {
        TropScalar::Finite(r)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => f.write_str("-inf"),
            TropScalar::Finite(r) => f.write_str(&fmt_rational(r)),
        }
    }
}

/// Tropical addition: `max(a, b)`.
pub fn trop_add(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.max(b).clone()
}

/// Tropical multiplication: classical `a + b`, with `-∞` absorbing.
pub fn trop_mul(a: &TropScalar, b: &TropScalar) -> TropScalar {
    match (a, b) {
        (TropScalar::Finite(x), TropScalar::Finite(y)) => TropScalar::Finite(x + y),
        _ => TropScalar::NegInf,
    }
}

/// A point of the plane with finite rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rational(&self.x), fmt_rational(&self.y))
    }
}

/// `coeff + xexp·x + yexp·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMonomial {
    pub xexp: u32,
    pub yexp: u32,
    pub coeff: TropScalar,
}

impl TropMonomial {
    pub fn new(xexp: u32, yexp: u32, coeff: TropScalar) -> Self {
        TropMonomial { xexp, yexp, coeff }
    }

    pub fn exponent(&self) -> Exponent {
        (self.xexp, self.yexp)
    }

    pub fn eval(&self, p: &Point) -> TropScalar {
        match &self.coeff {
            TropScalar::NegInf => TropScalar::NegInf,
            TropScalar::Finite(c) => TropScalar::Finite(
                c + Rational::from(self.xexp as i128) * p.x + Rational::from(self.yexp as i128) * p.y,
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPolynomial {
    terms: Vec<TropMonomial>,
}

impl TropPolynomial {
    /// Fails if two terms share an exponent pair or every coefficient is `-∞`.
    pub fn new(terms: Vec<TropMonomial>) -> Result<Self> {
        for (i, a) in terms.iter().enumerate() {
            if terms[..i].iter().any(|b| b.exponent() == a.exponent()) {
                return Err(Error::InvalidPolynomial(format!(
                    "repeated exponent ({},{})",
                    a.xexp, a.yexp
                )));
            }
        }
        if !terms.iter().any(|t| t.coeff.is_finite()) {
            return Err(Error::InvalidPolynomial("no finite coefficient".into()));
        }
        Ok(TropPolynomial { terms })
    }

    pub fn terms(&self) -> &[TropMonomial] {
        &self.terms
    }

    /// Value of the polynomial at `p` and every exponent attaining it, in term
    /// order. `p` lies on the corner locus iff the argmax has two or more
    /// entries.
    pub fn eval(&self, p: &Point) -> (TropScalar, Vec<Exponent>) {
        let mut best = TropScalar::NegInf;
        let mut argmax = Vec::new();
        for t in &self.terms {
            let v = t.eval(p);
            if !v.is_finite() {
                continue;
            }
            match v.cmp(&best) {
                Ordering::Greater => {
                    best = v;
                    argmax.clear();
                    argmax.push(t.exponent());
                }
                Ordering::Equal => argmax.push(t.exponent()),
                Ordering::Less => {}
            }
        }
        (best, argmax)
    }

    pub fn on_locus(&self, p: &Point) -> bool {
        self.eval(p).1.len() >= 2
    }
}

/// Free-function form of [`TropPolynomial::eval`].
pub fn eval_poly(f: &TropPolynomial, p: &Point) -> (TropScalar, Vec<Exponent>) {
    f.eval(p)
}
