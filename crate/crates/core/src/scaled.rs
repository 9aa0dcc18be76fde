//! Values carried as `mantissa · e^logScale` so that factors such as
//! e^{±μ²ξ} never overflow.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    pub mantissa: f64,
    pub log_scale: f64,
}

/// Result of collapsing a scaled value to a plain `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unscaled {
    pub value: f64,
    /// Set when the true value lies outside the `f64` range and `value` is ±∞.
    pub overflow: bool,
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue {
        mantissa: 0.0,
        log_scale: 0.0,
    };

    /// Normalizes so that |mantissa| ∈ [e^{-1/2}, e^{1/2}].
    pub fn new(mantissa: f64, log_scale: f64) -> Self {
        if mantissa == 0.0 || !mantissa.is_finite() {
            return ScaledValue {
                mantissa,
                log_scale: if mantissa == 0.0 { 0.0 } else { log_scale },
            };
        }
        let k = mantissa.abs().ln().round();
        if k == 0.0 {
            return ScaledValue {
                mantissa,
                log_scale,
            };
        }
        ScaledValue {
            mantissa: mantissa * (-k).exp(),
            log_scale: log_scale + k,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        Self::new(x, 0.0)
    }

    /// `sign · e^{ln_abs}`.
    pub fn from_log(ln_abs: f64, sign: f64) -> Self {
        let k = ln_abs.round();
        Self::new(sign * (ln_abs - k).exp(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn ln_abs(&self) -> f64 {
        self.mantissa.abs().ln() + self.log_scale
    }

    pub fn signum(&self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    pub fn unscaled(&self) -> Unscaled {
        if self.mantissa == 0.0 {
            return Unscaled {
                value: 0.0,
                overflow: false,
            };
        }
        let v = self.mantissa * self.log_scale.exp();
        if v.is_infinite() || (self.log_scale > 700.0 && !v.is_finite()) {
            return Unscaled {
                value: self.mantissa.signum() * f64::INFINITY,
                overflow: true,
            };
        }
        Unscaled {
            value: v,
            overflow: false,
        }
    }

    /// Plain value; saturates to ±∞ (and underflows to 0) outside the range.
    pub fn value(&self) -> f64 {
        self.unscaled().value
    }

    pub fn abs(self) -> Self {
        ScaledValue {
            mantissa: self.mantissa.abs(),
            log_scale: self.log_scale,
        }
    }

    /// The argument with the larger magnitude.
    pub fn max(self, o: ScaledValue) -> Self {
        if self.ln_abs() >= o.ln_abs() {
            self
        } else {
            o
        }
    }

    pub fn scale_f64(self, c: f64) -> Self {
        Self::new(self.mantissa * c, self.log_scale)
    }

    /// Multiply by e^{x}.
    pub fn mul_exp(self, x: f64) -> Self {
        Self::new(self.mantissa, self.log_scale + x)
    }

    /// Ratio self/other as an `f64` (both may be far outside the `f64` range).
    pub fn ratio(&self, other: &ScaledValue) -> f64 {
        if self.mantissa == 0.0 {
            return 0.0;
        }
        (self.mantissa / other.mantissa) * (self.log_scale - other.log_scale).exp()
    }
}

impl Mul for ScaledValue {
    type Output = ScaledValue;
    fn mul(self, o: ScaledValue) -> ScaledValue {
        ScaledValue::new(self.mantissa * o.mantissa, self.log_scale + o.log_scale)
    }
}

impl Div for ScaledValue {
    type Output = ScaledValue;
    fn div(self, o: ScaledValue) -> ScaledValue {
        ScaledValue::new(self.mantissa / o.mantissa, self.log_scale - o.log_scale)
    }
}

impl Add for ScaledValue {
    type Output = ScaledValue;
    fn add(self, o: ScaledValue) -> ScaledValue {
        if self.mantissa == 0.0 {
            return o;
        }
        if o.mantissa == 0.0 {
            return self;
        }
        let (big, small) = if self.log_scale >= o.log_scale {
            (self, o)
        } else {
            (o, self)
        };
        let d = small.log_scale - big.log_scale;
        if d < -800.0 {
            return big;
        }
        ScaledValue::new(big.mantissa + small.mantissa * d.exp(), big.log_scale)
    }
}

impl Sub for ScaledValue {
    type Output = ScaledValue;
    fn sub(self, o: ScaledValue) -> ScaledValue {
        self + (-o)
    }
}

impl Neg for ScaledValue {
    type Output = ScaledValue;
    fn neg(self) -> ScaledValue {
        ScaledValue {
            mantissa: -self.mantissa,
            log_scale: self.log_scale,
        }
    }
}

impl fmt::Display for ScaledValue {
    /// Decimal scientific notation, valid far outside the `f64` exponent range.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mantissa == 0.0 {
            return write!(f, "0");
        }
        let prec = f.precision().unwrap_or(15);
        let v = self.unscaled();
        if !v.overflow && v.value != 0.0 && v.value.abs() >= f64::MIN_POSITIVE {
            return write!(f, "{:.*e}", prec, v.value);
        }
        let l10 = (self.mantissa.abs().ln() + self.log_scale) / std::f64::consts::LN_10;
        let e = l10.floor();
        let m = self.mantissa.signum() * 10f64.powf(l10 - e);
        let s = format!("{:.*}", prec, m);
        // Rounding may carry into a tenth digit.
        if s.trim_start_matches('-').starts_with("10") {
            write!(f, "{:.*}e{}", prec, m / 10.0, e as i64 + 1)
        } else {
            write!(f, "{s}e{}", e as i64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn huge_product_stays_finite() {
        let a = ScaledValue::from_log(900.0, 1.0);
        let b = ScaledValue::from_log(-905.0, -1.0);
        let p = a * b;
        assert!((p.value() + (-5f64).exp()).abs() < 1e-15);
        assert!(a.unscaled().overflow);
        assert!(a.mantissa.is_finite());
    }

    #[test]
    fn display_outside_range() {
        let a = ScaledValue::from_log(1000.0 * std::f64::consts::LN_10, 1.0);
        assert_eq!(format!("{:.3}", a), "1.000e1000");
    }

    proptest! {
        #[test]
        fn mantissa_is_normalized(m in -1e300f64..1e300, l in -1e4f64..1e4) {
            let v = ScaledValue::new(m, l);
            if v.mantissa != 0.0 {
                let lm = v.mantissa.abs().ln();
                prop_assert!(lm.abs() <= 1.0);
                let back = v.ln_abs();
                prop_assert!((back - (m.abs().ln() + l)).abs() <= 1e-12 * (1.0 + back.abs()));
            }
        }

        #[test]
        fn addition_matches_f64(x in -1e10f64..1e10, y in -1e10f64..1e10) {
            let s = (ScaledValue::from_f64(x) + ScaledValue::from_f64(y)).value();
            prop_assert!((s - (x + y)).abs() <= 1e-14 * (x.abs() + y.abs()) + 1e-300);
        }
    }
}
