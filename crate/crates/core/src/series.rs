//! Truncated power series over a generic field of scalars.
//!
//! A series is a `Vec<T>` of coefficients `c[0] + c[1] x + ...`; every
//! operation takes the number of coefficients `n` to keep.

use crate::poly::{qi, Rational};
use num_traits::Zero;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field element usable as a series coefficient.
///
/// Constructors take `&self` so element types that carry context (such as
/// the modulus of a quadratic extension) can build constants.
pub trait Scalar:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_ratio_like(&self, num: i64, den: i64) -> Self;
    fn is_zero_value(&self) -> bool;

    fn zero_like(&self) -> Self {
        self.from_ratio_like(0, 1)
    }
    fn one_like(&self) -> Self {
        self.from_ratio_like(1, 1)
    }
}

impl Scalar for f64 {
    fn from_ratio_like(&self, num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero_value(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for Rational {
    fn from_ratio_like(&self, num: i64, den: i64) -> Self {
        qi(num) / qi(den)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

fn get<T: Scalar>(a: &[T], i: usize, z: &T) -> T {
    a.get(i).cloned().unwrap_or_else(|| z.clone())
}

fn proto<T: Scalar>(a: &[T]) -> T {
    a.first()
        .expect("series needs at least one coefficient")
        .zero_like()
}

pub fn add<T: Scalar>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let z = proto(a);
    (0..n).map(|i| get(a, i, &z) + get(b, i, &z)).collect()
}

pub fn scale<T: Scalar>(a: &[T], c: &T) -> Vec<T> {
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

pub fn mul<T: Scalar>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let z = proto(a);
    let mut out = vec![z.clone(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero_value() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}

/// Reciprocal; requires `a[0] != 0`.
pub fn inv<T: Scalar>(a: &[T], n: usize) -> Vec<T> {
    let z = proto(a);
    let mut out: Vec<T> = Vec::with_capacity(n);
    let a0 = a[0].clone();
    for k in 0..n {
        let mut s = if k == 0 { z.one_like() } else { z.clone() };
        for j in 1..=k {
            s = s - get(a, j, &z) * out[k - j].clone();
        }
        out.push(s / a0.clone());
    }
    out
}

/// `a^(num/den)` with `a[0] = 1` by Miller's recurrence.
pub fn pow_unit<T: Scalar>(a: &[T], num: i64, den: i64, n: usize) -> Vec<T> {
    let z = proto(a);
    let e = z.from_ratio_like(num, den);
    let mut b: Vec<T> = Vec::with_capacity(n);
    if n == 0 {
        return b;
    }
    b.push(z.one_like());
    for k in 1..n {
        let mut s = z.clone();
        for j in 1..=k {
            let w = (e.clone() + z.one_like()) * z.from_ratio_like(j as i64, 1)
                - z.from_ratio_like(k as i64, 1);
            s = s + w * get(a, j, &z) * b[k - j].clone();
        }
        b.push(s / (z.from_ratio_like(k as i64, 1) * a[0].clone()));
    }
    b
}

/// `exp(a)` for `a[0] = 0`.
pub fn exp0<T: Scalar>(a: &[T], n: usize) -> Vec<T> {
    let z = proto(a);
    let mut e: Vec<T> = Vec::with_capacity(n);
    if n == 0 {
        return e;
    }
    e.push(z.one_like());
    for k in 1..n {
        let mut s = z.clone();
        for j in 1..=k {
            s = s + z.from_ratio_like(j as i64, 1) * get(a, j, &z) * e[k - j].clone();
        }
        e.push(s / z.from_ratio_like(k as i64, 1));
    }
    e
}

/// `f(g(x))` for `g[0] = 0`.
pub fn compose<T: Scalar>(f: &[T], g: &[T], n: usize) -> Vec<T> {
    let z = proto(g);
    let mut out = vec![z.clone(); n];
    let mut gp = {
        let mut v = vec![z.clone(); n];
        if n > 0 {
            v[0] = z.one_like();
        }
        v
    };
    for (k, fk) in f.iter().enumerate().take(n) {
        if k > 0 {
            gp = mul(&gp, g, n);
        }
        if fk.is_zero_value() {
            continue;
        }
        for i in 0..n {
            out[i] = out[i].clone() + fk.clone() * gp[i].clone();
        }
    }
    out
}

/// Compositional inverse of `f` with `f[0] = 0`, `f[1] != 0`.
///
/// Builds the inverse one order at a time: with `g` correct through order
/// `k-1`, the coefficient of `x^k` in `f(g(x)) - x` fixes `g[k]`.
pub fn revert<T: Scalar>(f: &[T], n: usize) -> Vec<T> {
    let z = proto(f);
    let mut g = vec![z.clone(); n];
    if n < 2 {
        return g;
    }
    let f1 = f[1].clone();
    g[1] = z.one_like() / f1.clone();
    for k in 2..n {
        let c = compose(f, &g[..k + 1], k + 1);
        g[k] = -(c[k].clone()) / f1.clone();
    }
    g
}

pub fn derivative<T: Scalar>(a: &[T]) -> Vec<T> {
    let z = proto(a);
    if a.len() <= 1 {
        return vec![z];
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.clone() * z.from_ratio_like(i as i64, 1))
        .collect()
}

/// Horner evaluation of a real series.
pub fn eval(a: &[f64], x: f64) -> f64 {
    a.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Binomial coefficients of `(1+x)^(num/den)`.
pub fn binomial_series<T: Scalar>(like: &T, num: i64, den: i64, n: usize) -> Vec<T> {
    let e = like.from_ratio_like(num, den);
    let mut out = Vec::with_capacity(n);
    let mut c = like.one_like();
    for k in 0..n {
        out.push(c.clone());
        c = c * (e.clone() - like.from_ratio_like(k as i64, 1))
            / like.from_ratio_like(k as i64 + 1, 1);
    }
    out
}

pub fn rational_series_to_f64(a: &[Rational]) -> Vec<f64> {
    a.iter().map(crate::poly::rational_to_f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    #[test]
    fn reciprocal_of_one_minus_x() {
        let a = vec![qi(1), qi(-1)];
        let b = inv(&a, 6);
        assert!(b.iter().all(|c| *c == qi(1)));
    }

    #[test]
    fn square_root_squares_back() {
        let a = vec![qi(1), qi(3), q(1, 2), qi(-7)];
        let r = pow_unit(&a, 1, 2, 8);
        let sq = mul(&r, &r, 8);
        for i in 0..8 {
            let want = a.get(i).cloned().unwrap_or_else(|| qi(0));
            assert_eq!(sq[i], want);
        }
    }

    #[test]
    fn reversion_inverts() {
        // x + x^2 + x^3/3
        let f = vec![qi(0), qi(1), qi(1), q(1, 3)];
        let g = revert(&f, 9);
        let id = compose(&f, &g, 9);
        assert_eq!(id[1], qi(1));
        for c in id.iter().skip(2) {
            assert_eq!(*c, qi(0));
        }
    }

    #[test]
    fn exponential_coefficients() {
        let e = exp0(&[0.0, 1.0], 6);
        assert!((e[5] - 1.0 / 120.0).abs() < 1e-18);
    }

    #[test]
    fn binomial_half() {
        let b = binomial_series(&qi(0), 1, 2, 4);
        assert_eq!(b, vec![qi(1), q(1, 2), q(-1, 8), q(1, 16)]);
    }
}
