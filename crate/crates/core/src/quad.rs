//! The evaluation result shared by every method: U, U', V, V' plus the
//! region that produced them.

use crate::scaled::ScaledValue;
use std::fmt;

/// √(2/π), the Wronskian U V' - U' V.
pub const WRONSKIAN: f64 = 0.797_884_560_802_865_4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionTag {
    /// Maclaurin (₁F₁) series.
    Series,
    /// a < 0, z beyond the positive turning point: exponential behaviour.
    Elem21,
    /// a < 0, z beyond the negative turning point.
    Elem22,
    /// a < 0, between the turning points: oscillatory.
    Elem23,
    /// a > 0, z ≥ 0.
    Elem24,
    /// a > 0, z < 0.
    Elem25,
    /// Airy-type expansion near z = 2√(-a).
    AiryPlus,
    /// Airy-type expansion near z = -2√(-a).
    AiryMinus,
}

impl RegionTag {
    pub fn name(self) -> &'static str {
        match self {
            RegionTag::Series => "SERIES",
            RegionTag::Elem21 => "ELEM_21",
            RegionTag::Elem22 => "ELEM_22",
            RegionTag::Elem23 => "ELEM_23",
            RegionTag::Elem24 => "ELEM_24",
            RegionTag::Elem25 => "ELEM_25",
            RegionTag::AiryPlus => "AIRY_PLUS",
            RegionTag::AiryMinus => "AIRY_MINUS",
        }
    }
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionQuad {
    pub u: ScaledValue,
    pub du: ScaledValue,
    pub v: ScaledValue,
    pub dv: ScaledValue,
    pub region: RegionTag,
    /// Estimated relative error.
    pub err_estimate: f64,
}

impl FunctionQuad {
    pub fn wronskian(&self) -> ScaledValue {
        self.u * self.dv - self.du * self.v
    }

    /// |U V' - U' V - √(2/π)| / max(√(2/π), |U V'| + |U' V|).
    ///
    /// The denominator is the size of the two products; when both U and V
    /// are large (a dominant pair) their Wronskian is an ill-conditioned
    /// difference and an absolute residual would only measure roundoff.
    pub fn wronskian_residual(&self) -> f64 {
        let p1 = self.u * self.dv;
        let p2 = self.du * self.v;
        let w = p1 - p2;
        let diff = (w - ScaledValue::from_f64(WRONSKIAN)).abs();
        let scale = p1.abs() + p2.abs();
        let denom = if scale.ln_abs() > WRONSKIAN.ln() {
            scale
        } else {
            ScaledValue::from_f64(WRONSKIAN)
        };
        if diff.is_zero() {
            0.0
        } else {
            diff.ratio(&denom)
        }
    }

    /// Largest error of the four values against `reference`, each measured
    /// against the local amplitude of the function/derivative pair.
    ///
    /// With k = √(|z²/4 + a| + |a|^{1/3} + 1), the local wavenumber, an error
    /// in U is compared with max(|U|, |U'|/k) and an error in U' with
    /// max(|U'|, k|U|). This stays meaningful at zeros of U or U'.
    pub fn envelope_error(&self, reference: &FunctionQuad, a: f64, z: f64) -> f64 {
        let k = ((0.25 * z * z + a).abs() + a.abs().cbrt() + 1.0).sqrt();
        let pair = |x: ScaledValue, dx: ScaledValue, rx: ScaledValue, rdx: ScaledValue| {
            let amp = rx.abs().max(rdx.abs().scale_f64(1.0 / k));
            let damp = rdx.abs().max(rx.abs().scale_f64(k));
            let e1 = if amp.is_zero() {
                0.0
            } else {
                (x - rx).abs().ratio(&amp)
            };
            let e2 = if damp.is_zero() {
                0.0
            } else {
                (dx - rdx).abs().ratio(&damp)
            };
            e1.max(e2)
        };
        pair(self.u, self.du, reference.u, reference.du).max(pair(
            self.v,
            self.dv,
            reference.v,
            reference.dv,
        ))
    }

    pub fn with_region(mut self, region: RegionTag) -> Self {
        self.region = region;
        self
    }
}
