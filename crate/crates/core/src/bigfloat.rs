//! Fixed-precision binary floating point on top of `num-bigint`.
//!
//! A value is `±mant · 2^exp` with `mant` holding exactly `prec` bits (or
//! zero). Every operation rounds to nearest at the precision of its left
//! operand. Transcendental functions work with guard bits and round once.

use crate::poly::Rational;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

pub const DEFAULT_PREC: u32 = 256;
const GUARD: u32 = 40;

#[derive(Debug, Clone)]
pub struct BigFloat {
    neg: bool,
    mant: BigUint,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat {
            neg: false,
            mant: BigUint::zero(),
            exp: 0,
            prec,
        }
    }

    fn from_parts(neg: bool, mant: BigUint, exp: i64, prec: u32) -> Self {
        if mant.is_zero() {
            return Self::zero(prec);
        }
        let bits = mant.bits() as i64;
        let p = prec as i64;
        let (mant, exp) = match bits.cmp(&p) {
            Ordering::Greater => {
                let sh = (bits - p) as u64;
                let round = mant.bit(sh - 1);
                let mut m = mant >> sh;
                let mut e = exp + sh as i64;
                if round {
                    m += 1u32;
                    if m.bits() as i64 > p {
                        m >>= 1;
                        e += 1;
                    }
                }
                (m, e)
            }
            Ordering::Less => {
                let sh = (p - bits) as u64;
                (mant << sh, exp - sh as i64)
            }
            Ordering::Equal => (mant, exp),
        };
        BigFloat {
            neg,
            mant,
            exp,
            prec,
        }
    }

    fn from_bigint_exp(v: BigInt, exp: i64, prec: u32) -> Self {
        let (sign, mag) = v.into_parts();
        Self::from_parts(sign == Sign::Minus, mag, exp, prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::from_bigint_exp(v.clone(), 0, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(v), prec)
    }

    /// Exact conversion (for prec ≥ 53).
    pub fn from_f64(x: f64, prec: u32) -> Self {
        assert!(x.is_finite(), "BigFloat::from_f64 needs a finite value");
        if x == 0.0 {
            return Self::zero(prec);
        }
        let bits = x.to_bits();
        let neg = bits >> 63 == 1;
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, ex) = if e == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), e - 1075)
        };
        Self::from_parts(neg, BigUint::from(m), ex, prec)
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let n = Self::from_bigint(r.numer(), prec + GUARD);
        let d = Self::from_bigint(r.denom(), prec + GUARD);
        (n / d).with_prec(prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self::from_parts(self.neg, self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.neg && !self.is_zero()
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            neg: false,
            ..self.clone()
        }
    }

    /// Multiply by 2^k exactly.
    pub fn ldexp(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat {
            exp: self.exp + k,
            ..self.clone()
        }
    }

    /// Binary exponent e with |x| ∈ [2^{e-1}, 2^e).
    pub fn exponent(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let sh = (bits - 64).max(0);
        let top = (&self.mant >> sh as u64).to_u64().unwrap_or(u64::MAX) as f64;
        let v = ldexp_f64(top, self.exp + sh);
        if self.neg {
            -v
        } else {
            v
        }
    }

    /// Natural log of |x| as an `f64`, valid beyond the `f64` range.
    pub fn ln_abs_f64(&self) -> f64 {
        let e = self.exponent();
        let m = self.ldexp(-e).to_f64().abs();
        m.ln() + e as f64 * std::f64::consts::LN_2
    }

    pub fn cmp_abs(&self, o: &BigFloat) -> Ordering {
        if self.is_zero() || o.is_zero() {
            return self.mant.is_zero().cmp(&o.mant.is_zero()).reverse();
        }
        match self.exponent().cmp(&o.exponent()) {
            Ordering::Equal => {
                let (a, b) = align(&self.mant, self.exp, &o.mant, o.exp);
                a.cmp(&b)
            }
            c => c,
        }
    }

    pub fn lt(&self, o: &BigFloat) -> bool {
        (self - o).is_negative()
    }

    fn signed(&self) -> BigInt {
        BigInt::from_biguint(
            if self.neg { Sign::Minus } else { Sign::Plus },
            self.mant.clone(),
        )
    }

    /// Integer part rounded toward -∞.
    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            return self.signed() << self.exp as u64;
        }
        let sh = (-self.exp) as u64;
        let v = self.signed();
        let q = &v >> sh; // arithmetic shift floors for negatives
        q
    }

    pub fn round_int(&self) -> BigInt {
        let half = BigFloat::from_f64(0.5, self.prec.max(64));
        (self + &half).floor_int()
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec as i64;
        let mut sh = 2 * p + 4 - self.mant.bits() as i64;
        if sh < 0 {
            sh = 0;
        }
        if (self.exp - sh).rem_euclid(2) != 0 {
            sh += 1;
        }
        let m = (&self.mant << sh as u64).sqrt();
        Self::from_parts(false, m, (self.exp - sh) / 2, self.prec)
    }

    pub fn recip(&self) -> Self {
        Self::from_i64(1, self.prec) / self
    }

    pub fn powi(&self, n: i64) -> Self {
        let w = self.with_prec(self.prec + GUARD);
        let mut base = if n < 0 { w.recip() } else { w };
        let mut k = n.unsigned_abs();
        let mut acc = Self::from_i64(1, self.prec + GUARD);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc.with_prec(self.prec)
    }

    pub fn pi(prec: u32) -> Self {
        cached(&PI_CACHE, prec, |p| {
            // Machin: π = 16 atan(1/5) - 4 atan(1/239)
            let a = atan_inv(5, p);
            let b = atan_inv(239, p);
            &a.ldexp(4) - &b.ldexp(2)
        })
    }

    pub fn ln2(prec: u32) -> Self {
        cached(&LN2_CACHE, prec, |p| {
            // ln 2 = 2 atanh(1/3)
            let third = BigFloat::from_i64(1, p) / &BigFloat::from_i64(3, p);
            atanh_series(&third).ldexp(1)
        })
    }

    pub fn exp(&self) -> Self {
        let p = self.prec + GUARD + 16;
        let x = self.with_prec(p);
        let ln2 = Self::ln2(p);
        let n = (&x / &ln2).round_int();
        let r = &x - &(&ln2 * &Self::from_bigint(&n, p));
        // halve the reduced argument a few times, then square back
        let halvings = 12;
        let r = r.ldexp(-halvings);
        let mut sum = Self::from_i64(1, p);
        let mut term = Self::from_i64(1, p);
        let eps_exp = -(p as i64) - 4;
        for k in 1..10_000 {
            term = &(&term * &r) / &Self::from_i64(k, p);
            sum = &sum + &term;
            if term.is_zero() || term.exponent() < eps_exp {
                break;
            }
        }
        for _ in 0..halvings {
            sum = &sum * &sum;
        }
        let n = n.to_i64().expect("exponent overflow in BigFloat::exp");
        sum.ldexp(n).with_prec(self.prec)
    }

    pub fn ln(&self) -> Self {
        assert!(
            !self.is_negative() && !self.is_zero(),
            "ln of a non-positive BigFloat"
        );
        let p = self.prec + GUARD + 16;
        let e = self.exponent() - 1;
        let mut m = self.with_prec(p).ldexp(-e); // m ∈ [1, 2)
        let roots = 6;
        for _ in 0..roots {
            m = m.sqrt();
        }
        let one = Self::from_i64(1, p);
        let y = &(&m - &one) / &(&m + &one);
        let lm = atanh_series(&y).ldexp(1 + roots);
        let res = &lm + &(&Self::ln2(p) * &Self::from_i64(e, p));
        res.with_prec(self.prec)
    }

    pub fn atan(&self) -> Self {
        let p = self.prec + GUARD + 16;
        let x = self.with_prec(p);
        let one = Self::from_i64(1, p);
        if x.cmp_abs(&one) == Ordering::Greater {
            let half_pi = Self::pi(p).ldexp(-1);
            let r = x.recip().atan();
            let v = if x.is_negative() {
                &(-&half_pi) - &r
            } else {
                &half_pi - &r
            };
            return v.with_prec(self.prec);
        }
        // atan x = 2 atan(x / (1 + √(1+x²)))
        let halvings = 5;
        let mut y = x;
        for _ in 0..halvings {
            let s = (&one + &(&y * &y)).sqrt();
            y = &y / &(&one + &s);
        }
        let y2 = &y * &y;
        let mut sum = y.clone();
        let mut pw = y;
        let eps_exp = -(p as i64) - 4;
        for k in 1..100_000i64 {
            pw = -&(&pw * &y2);
            let term = &pw / &Self::from_i64(2 * k + 1, p);
            sum = &sum + &term;
            if term.is_zero() || term.exponent() < eps_exp {
                break;
            }
        }
        sum.ldexp(halvings).with_prec(self.prec)
    }

    /// arccos t = 2 atan √((1-t)/(1+t)) for t ∈ [-1, 1].
    pub fn acos(&self) -> Self {
        let p = self.prec + GUARD;
        let t = self.with_prec(p);
        let one = Self::from_i64(1, p);
        let den = &one + &t;
        if den.is_zero() {
            return Self::pi(self.prec);
        }
        let r = (&(&one - &t) / &den).sqrt();
        r.atan().ldexp(1).with_prec(self.prec)
    }

    /// (sin πx, cos πx) with exact reduction of x modulo 2.
    pub fn sin_cos_pi(&self) -> (Self, Self) {
        let p = self.prec + GUARD + 16;
        let x = self.with_prec(p);
        // x = n/2 + r with |r| ≤ 1/4
        let n = x.ldexp(1).round_int();
        let r = &x - &Self::from_bigint(&n, p).ldexp(-1);
        let quadrant = n.mod_floor_i64(4);
        let (s, c) = if r.is_zero() {
            (Self::zero(p), Self::from_i64(1, p))
        } else {
            sin_cos_small(&(&r * &Self::pi(p)))
        };
        let (s, c) = match quadrant {
            0 => (s, c),
            1 => (c, -&s),
            2 => (-&s, -&c),
            _ => (-&c, s),
        };
        (s.with_prec(self.prec), c.with_prec(self.prec))
    }

    /// ln Γ(x) for x > 0.
    pub fn ln_gamma(&self) -> Self {
        assert!(
            !self.is_negative() && !self.is_zero(),
            "ln_gamma needs x > 0"
        );
        let p = self.prec + GUARD + 16;
        let x = self.with_prec(p);
        let b = stirling_bernoulli();
        let k = b.len();
        // Smallest y with the first omitted Stirling term below 2^{-p}.
        let lb = rational_log2(&b[k - 1]) - ((2 * k) as f64 * (2 * k - 1) as f64).log2();
        let y_min = 2f64
            .powf((lb + p as f64 + 8.0) / (2 * k - 1) as f64)
            .max(8.0);
        let xf = x.to_f64();
        let shift = if xf >= y_min {
            0
        } else {
            (y_min - xf).ceil() as i64
        };
        let mut prod = Self::from_i64(1, p);
        for j in 0..shift {
            prod = &prod * &(&x + &Self::from_i64(j, p));
        }
        let y = &x + &Self::from_i64(shift, p);
        let half = Self::from_f64(0.5, p);
        let ln_y = y.ln();
        let two_pi = Self::pi(p).ldexp(1);
        let mut s = &(&(&(&y - &half) * &ln_y) - &y) + &two_pi.ln().ldexp(-1);
        let yinv = y.recip();
        let yinv2 = &yinv * &yinv;
        let mut pw = yinv;
        for (i, bk) in b.iter().enumerate() {
            let kk = (i + 1) as i64;
            let c = Self::from_rational(bk, p) / &Self::from_i64(2 * kk * (2 * kk - 1), p);
            s = &s + &(&c * &pw);
            pw = &pw * &yinv2;
        }
        if shift > 0 {
            s = &s - &prod.ln();
        }
        s.with_prec(self.prec)
    }

    /// 1/Γ(x) for any real x (zero at the poles).
    pub fn rgamma(&self) -> Self {
        let p = self.prec + GUARD;
        let x = self.with_prec(p);
        let half = Self::from_f64(0.5, p);
        if !x.lt(&half) {
            return (-&x.ln_gamma()).exp().with_prec(self.prec);
        }
        // 1/Γ(x) = Γ(1-x) sin(πx)/π
        let one = Self::from_i64(1, p);
        let (s, _) = x.sin_cos_pi();
        if s.is_zero() {
            return Self::zero(self.prec);
        }
        let g = (&one - &x).ln_gamma().exp();
        (&(&g * &s) / &Self::pi(p)).with_prec(self.prec)
    }

    /// Γ(x) for x > 0.
    pub fn gamma(&self) -> Self {
        self.ln_gamma().exp()
    }

    /// Conversion to a scaled double without losing relative accuracy for
    /// magnitudes outside the `f64` range.
    pub fn to_scaled(&self) -> crate::scaled::ScaledValue {
        use crate::scaled::ScaledValue;
        if self.is_zero() {
            return ScaledValue::ZERO;
        }
        let e = self.exponent();
        if e.abs() < 1000 {
            return ScaledValue::from_f64(self.to_f64());
        }
        let k = (e as f64 * std::f64::consts::LN_2).round();
        let p = self.prec + GUARD;
        let m = &self.with_prec(p) * &Self::from_f64(-k, p).exp();
        ScaledValue::new(m.to_f64(), k)
    }

    /// Decimal scientific rendering with `digits` significant digits.
    pub fn to_sci_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let p = self.prec + GUARD;
        let a = self.abs().with_prec(p);
        let l10 = a.ln_abs_f64() / std::f64::consts::LN_10;
        let mut e10 = l10.floor() as i64;
        let scale = |e: i64| Self::from_i64(10, p).powi(digits as i64 - 1 - e);
        let mut n = (&a * &scale(e10)).round_int();
        let limit = BigInt::from(10).pow(digits as u32);
        if n >= limit {
            e10 += 1;
            n = (&a * &scale(e10)).round_int();
        }
        let s = n.to_string();
        let (head, tail) = s.split_at(1);
        let sign = if self.neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }
}

trait ModFloor {
    fn mod_floor_i64(&self, m: i64) -> i64;
}

impl ModFloor for BigInt {
    fn mod_floor_i64(&self, m: i64) -> i64 {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(m)).to_i64().unwrap()
    }
}

fn ldexp_f64(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(e as i32)
}

fn rational_log2(r: &Rational) -> f64 {
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    let l = |v: &BigUint| {
        let b = v.bits() as i64;
        let sh = (b - 60).max(0) as u64;
        (v >> sh).to_f64().unwrap().log2() + sh as f64
    };
    l(n) - l(d)
}

fn align(a: &BigUint, ea: i64, b: &BigUint, eb: i64) -> (BigUint, BigUint) {
    let e = ea.min(eb);
    (a << (ea - e) as u64, b << (eb - e) as u64)
}

/// B_2, B_4, ..., B_120 for the Stirling series.
fn stirling_bernoulli() -> &'static [Rational] {
    static B: OnceLock<Vec<Rational>> = OnceLock::new();
    B.get_or_init(|| {
        let all = crate::exactpoly::bernoulli_numbers(120);
        (1..=60).map(|k| all[2 * k].clone()).collect()
    })
}

static PI_CACHE: OnceLock<Mutex<Vec<BigFloat>>> = OnceLock::new();
static LN2_CACHE: OnceLock<Mutex<Vec<BigFloat>>> = OnceLock::new();

fn cached(
    cell: &'static OnceLock<Mutex<Vec<BigFloat>>>,
    prec: u32,
    f: impl Fn(u32) -> BigFloat,
) -> BigFloat {
    let m = cell.get_or_init(|| Mutex::new(Vec::new()));
    {
        let v = m.lock().unwrap();
        if let Some(c) = v.iter().find(|c| c.prec >= prec) {
            return c.with_prec(prec);
        }
    }
    let val = f(prec + GUARD);
    m.lock().unwrap().push(val.clone());
    val.with_prec(prec)
}

/// atan(1/n) by its Taylor series.
fn atan_inv(n: i64, p: u32) -> BigFloat {
    let x = BigFloat::from_i64(1, p) / &BigFloat::from_i64(n, p);
    let x2 = &x * &x;
    let mut pw = x.clone();
    let mut sum = x;
    let eps_exp = -(p as i64) - 4;
    for k in 1..1_000_000i64 {
        pw = -&(&pw * &x2);
        let term = &pw / &BigFloat::from_i64(2 * k + 1, p);
        sum = &sum + &term;
        if term.exponent() < eps_exp {
            break;
        }
    }
    sum
}

/// atanh y = y + y³/3 + y⁵/5 + ... for small |y|.
fn atanh_series(y: &BigFloat) -> BigFloat {
    let p = y.prec;
    let y2 = y * y;
    let mut pw = y.clone();
    let mut sum = y.clone();
    let eps_exp = -(p as i64) - 4;
    for k in 1..1_000_000i64 {
        pw = &pw * &y2;
        let term = &pw / &BigFloat::from_i64(2 * k + 1, p);
        sum = &sum + &term;
        if term.is_zero() || term.exponent() < eps_exp {
            break;
        }
    }
    sum
}

/// (sin x, cos x) for |x| ≤ π/4 via argument halving and double-angle steps.
fn sin_cos_small(x: &BigFloat) -> (BigFloat, BigFloat) {
    let p = x.prec;
    let halvings = 8;
    let r = x.ldexp(-halvings);
    let r2 = &r * &r;
    let mut s = r.clone();
    let mut term = r;
    let eps_exp = -(p as i64) - 4;
    for k in 1..10_000i64 {
        term = -&(&(&term * &r2) / &BigFloat::from_i64((2 * k) * (2 * k + 1), p));
        s = &s + &term;
        if term.is_zero() || term.exponent() < eps_exp {
            break;
        }
    }
    let one = BigFloat::from_i64(1, p);
    // cos from sin at the small argument keeps full relative accuracy
    let mut c = (&one - &(&s * &s)).sqrt();
    for _ in 0..halvings {
        let s2 = (&s * &c).ldexp(1);
        let c2 = &(&c * &c) - &(&s * &s);
        s = s2;
        c = c2;
    }
    (s, c)
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, o: &BigFloat) -> BigFloat {
        let prec = self.prec;
        if o.is_zero() {
            return self.with_prec(prec);
        }
        if self.is_zero() {
            return o.with_prec(prec);
        }
        // Far-apart magnitudes: the smaller one only affects rounding.
        let gap = prec as i64 + 4;
        if self.exponent() - o.exponent() > gap {
            return self.clone();
        }
        if o.exponent() - self.exponent() > gap {
            return o.with_prec(prec);
        }
        let e = self.exp.min(o.exp);
        let a = self.signed() << (self.exp - e) as u64;
        let b = o.signed() << (o.exp - e) as u64;
        BigFloat::from_bigint_exp(a + b, e, prec)
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, o: &BigFloat) -> BigFloat {
        self + &(-o)
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            neg: !self.neg,
            ..self.clone()
        }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            neg: !self.neg,
            ..self
        }
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, o: &BigFloat) -> BigFloat {
        BigFloat::from_parts(
            self.neg != o.neg,
            &self.mant * &o.mant,
            self.exp + o.exp,
            self.prec,
        )
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    fn div(self, o: &BigFloat) -> BigFloat {
        assert!(!o.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return BigFloat::zero(self.prec);
        }
        let sh = self.prec as i64 + 2 + o.mant.bits() as i64 - self.mant.bits() as i64;
        let sh = sh.max(0);
        let num = &self.mant << sh as u64;
        let q = &num / &o.mant;
        // sticky bit so a nonzero remainder never rounds as an exact tie
        let q = if (&q * &o.mant) != num {
            (q << 1u32) | BigUint::one()
        } else {
            q << 1u32
        };
        BigFloat::from_parts(self.neg != o.neg, q, self.exp - o.exp - sh - 1, self.prec)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $m(self, o: BigFloat) -> BigFloat {
                (&self).$m(&o)
            }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, o: &BigFloat) -> BigFloat {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    const P: u32 = 256;

    fn close(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || d.exponent() <= b.exponent() - bits
    }

    fn dec(s: &str) -> BigFloat {
        // exact decimal → rational → BigFloat
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let n: BigInt = format!("{int}{frac}").parse().unwrap();
        let d = BigInt::from(10).pow(frac.len() as u32);
        BigFloat::from_rational(&Rational::new(n, d), P)
    }

    #[test]
    fn pi_digits() {
        let pi = BigFloat::pi(P);
        let want = dec(
            "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899863",
        );
        assert!(close(&pi, &want, 250));
    }

    #[test]
    fn ln_and_exp_invert() {
        let x = BigFloat::from_rational(&q(7, 3), P);
        let y = x.ln().exp();
        assert!(close(&y, &x, 250));
        let ln10 = BigFloat::from_i64(10, P).ln();
        let want = dec(
            "2.30258509299404568401799145468436420760110148862877297603332790096757260967735248",
        );
        assert!(close(&ln10, &want, 250));
    }

    #[test]
    fn sqrt_two() {
        let s = BigFloat::from_i64(2, P).sqrt();
        let want = dec(
            "1.41421356237309504880168872420969807856967187537694807317667973799073247846210703885",
        );
        assert!(close(&s, &want, 252));
    }

    #[test]
    fn atan_and_acos() {
        let one = BigFloat::from_i64(1, P);
        let quarter_pi = BigFloat::pi(P).ldexp(-2);
        assert!(close(&one.atan(), &quarter_pi, 250));
        let half = BigFloat::from_f64(0.5, P);
        let third_pi = &BigFloat::pi(P) / &BigFloat::from_i64(3, P);
        assert!(close(&half.acos(), &third_pi, 248));
        assert!(close(
            &BigFloat::zero(P).acos(),
            &BigFloat::pi(P).ldexp(-1),
            250
        ));
    }

    #[test]
    fn sin_cos_exact_points() {
        let (s, c) = BigFloat::from_i64(7, P).sin_cos_pi();
        assert!(s.is_zero());
        assert!(close(&c, &BigFloat::from_i64(-1, P), 250));
        let (s, _) = BigFloat::from_f64(1.0 / 6.0, P).sin_cos_pi();
        // 1/6 is not exact in binary; compare against sin of the double
        assert!((s.to_f64() - 0.5).abs() < 1e-15);
        let (s, c) = BigFloat::from_f64(0.25, P).sin_cos_pi();
        assert!(close(&s, &c, 250));
    }

    #[test]
    fn gamma_values() {
        let g = BigFloat::from_f64(0.5, P).gamma();
        let sqrt_pi = BigFloat::pi(P).sqrt();
        assert!(close(&g, &sqrt_pi, 240));
        let g5 = BigFloat::from_i64(6, P).gamma();
        assert!(close(&g5, &BigFloat::from_i64(120, P), 240));
        let r = BigFloat::from_i64(-3, P).rgamma();
        assert!(r.is_zero());
        // 1/Γ(-1/2) = -1/(2√π)
        let r = BigFloat::from_f64(-0.5, P).rgamma();
        let want = -(sqrt_pi.ldexp(1).recip());
        assert!(close(&r, &want, 240));
    }

    #[test]
    fn printing_and_conversion() {
        let x = BigFloat::from_rational(&q(-1, 3), P);
        assert_eq!(x.to_sci_string(5), "-3.3333e-1");
        assert_eq!(BigFloat::from_i64(1000, P).to_sci_string(3), "1.00e3");
        assert_eq!(x.to_f64(), -1.0 / 3.0);
        let tiny = BigFloat::from_i64(10, P).powi(-400);
        assert!((tiny.ln_abs_f64() + 400.0 * std::f64::consts::LN_10).abs() < 1e-9);
    }
}
