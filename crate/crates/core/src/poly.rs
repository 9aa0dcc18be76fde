//! Univariate polynomials with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = BigRational;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        Some(Rational::from_integer(s.parse().ok()?))
    }
}

/// Correctly rounded conversion to `f64` for ordinary magnitudes.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    // Scale so the integer quotient carries 64 significant bits.
    let n = r.numer().abs();
    let d = r.denom().clone();
    let shift = d.bits() as i64 - n.bits() as i64 + 64;
    let (num, den) = if shift >= 0 {
        (n << shift as usize, d)
    } else {
        (n, d << (-shift) as usize)
    };
    let quo = num / den;
    let v = quo.to_f64().unwrap_or(f64::INFINITY) * (2f64).powi(-(shift as i32));
    if r.is_negative() {
        -v
    } else {
        v
    }
}

/// Which variable a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Tau,
    TauTilde,
    T,
    Sigma,
    A,
}

impl Var {
    pub fn label(self) -> &'static str {
        match self {
            Var::Tau => "tau",
            Var::TauTilde => "tau~",
            Var::T => "t",
            Var::Sigma => "sigma",
            Var::A => "a",
        }
    }
}

/// Polynomial `Σ coeffs[i]·x^i`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    pub var: Var,
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        RationalPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    /// `c·x^k`
    pub fn monomial(var: Var, c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(var, v)
    }

    pub fn from_ints(var: Var, c: &[i64]) -> Self {
        Self::new(var, c.iter().map(|&x| qi(x)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Index of the lowest nonzero coefficient (None for the zero polynomial).
    pub fn lowest_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * qi(i as i64))
            .collect();
        Self::new(self.var, v)
    }

    /// Antiderivative vanishing at 0.
    pub fn integral(&self) -> Self {
        let mut v = vec![Rational::zero()];
        v.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / qi(i as i64 + 1)),
        );
        Self::new(self.var, v)
    }

    /// `self / x^k`, requiring the low coefficients to vanish.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(
            self.var,
            self.coeffs.iter().skip(k).cloned().collect(),
        ))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `x → p(x)`.
    pub fn compose(&self, p: &RationalPoly) -> Self {
        let mut acc = RationalPoly::zero(p.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * p) + &RationalPoly::constant(p.var, c.clone());
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_to_string).collect()
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }
}

/// Horner evaluation of `f64` coefficients.
pub fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, o: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect();
        RationalPoly::new(self.var, v)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, o: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect();
        RationalPoly::new(self.var, v)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, o: &RationalPoly) -> RationalPoly {
        if self.is_zero() || o.is_zero() {
            return RationalPoly::zero(self.var);
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RationalPoly::new(self.var, v)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = rational_to_string(&c.abs());
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*{}", self.var.label())?,
                _ => write!(f, "{a}*{}^{i}", self.var.label())?,
            }
        }
        Ok(())
    }
}
