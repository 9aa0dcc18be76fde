//! Method selection over the (a, z) plane.
//!
//! For a < 0 write μ = √(-2a) and t = z/(2√(-a)), so the turning points sit
//! at t = ±1. When μ ≥ `mu_switch`:
//!
//! - |t| ≤ 0.8: oscillatory elementary expansion (ELEM_23);
//! - |t| ≥ 1.2: exponential elementary expansion (ELEM_21 for z > 0, ELEM_22
//!   for z < 0);
//! - 0.8 < |t| < 1.2: Airy-type expansion (AIRY_PLUS / AIRY_MINUS).
//!
//! For μ just above the switch the elementary sums converge too slowly
//! close to the band, so the Airy form also takes over wherever the
//! exponent μ²ξ(|t|) or μ²η(|t|) is below [`EXPONENT_MIN`]. Below the
//! switch the convergent series covers |z| ≤ 30 and the exponential
//! expansions the rest. For a ≥ 0 the expansions ELEM_24/25 apply when
//! a + |z| ≥ 30, the series otherwise.

use crate::airy::eval_airy_modified;
use crate::elem::{
    eta_of, exponential_az, exponential_negative_az, oscillatory_az, reflect, xi_of, Trig,
    Truncation,
};
use crate::error::{Error, Result};
use crate::quad::{FunctionQuad, RegionTag};
use crate::refseries::uv_series;

pub const MU_SWITCH: f64 = 5.0;
/// |t| below which the oscillatory expansion is used.
pub const OSCILLATORY_T_MAX: f64 = 0.8;
/// |t| above which the exponential expansion is used.
pub const EXPONENTIAL_T_MIN: f64 = 1.2;
/// Smallest μ²ξ or μ²η at which the elementary expansions are used.
pub const EXPONENT_MIN: f64 = 12.0;
/// a + |z| from which the a ≥ 0 expansions are used.
pub const POSITIVE_A_SWITCH: f64 = 30.0;
/// |z| up to which the series is used for a < 0 and μ below the switch.
pub const SERIES_Z_MAX: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Term count for the elementary expansions.
    pub truncation: Truncation,
    /// Smallest μ for the large-|a| expansions when a < 0.
    pub mu_switch: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            truncation: Truncation::Auto,
            mu_switch: MU_SWITCH,
        }
    }
}

/// μ and t for a < 0.
pub fn negative_a_variables(a: f64, z: f64) -> (f64, f64) {
    let b = -a;
    ((2.0 * b).sqrt(), z / (2.0 * b.sqrt()))
}

pub fn region_select(a: f64, z: f64) -> RegionTag {
    region_select_with(a, z, &EvalOptions::default())
}

pub fn region_select_with(a: f64, z: f64, opts: &EvalOptions) -> RegionTag {
    if a >= 0.0 {
        return if a + z.abs() < POSITIVE_A_SWITCH {
            RegionTag::Series
        } else if z >= 0.0 {
            RegionTag::Elem24
        } else {
            RegionTag::Elem25
        };
    }
    let (mu, t) = negative_a_variables(a, z);
    let at = t.abs();
    let outer = if z >= 0.0 {
        RegionTag::Elem21
    } else {
        RegionTag::Elem22
    };
    if mu < opts.mu_switch {
        return if z.abs() <= SERIES_Z_MAX {
            RegionTag::Series
        } else {
            outer
        };
    }
    let airy = if z >= 0.0 {
        RegionTag::AiryPlus
    } else {
        RegionTag::AiryMinus
    };
    let m2 = mu * mu;
    if at <= OSCILLATORY_T_MAX {
        if m2 * eta_of(at) >= EXPONENT_MIN {
            RegionTag::Elem23
        } else {
            airy
        }
    } else if at >= EXPONENTIAL_T_MIN {
        if m2 * xi_of(at) >= EXPONENT_MIN {
            outer
        } else {
            airy
        }
    } else {
        airy
    }
}

/// U, U', V, V' at (a, z) by the method [`region_select_with`] picks.
pub fn evaluate(a: f64, z: f64, opts: &EvalOptions) -> Result<FunctionQuad> {
    if !(a.is_finite() && z.is_finite()) {
        return Err(Error::Domain(format!("non-finite input a={a}, z={z}")));
    }
    let region = region_select_with(a, z, opts);
    evaluate_in(region, a, z, opts)
}

/// Evaluates with a forced method; the caller is responsible for the
/// method being accurate at (a, z).
pub fn evaluate_in(region: RegionTag, a: f64, z: f64, opts: &EvalOptions) -> Result<FunctionQuad> {
    let trunc = opts.truncation;
    match region {
        RegionTag::Series => uv_series(a, z).map_err(|e| series_error(e, a, z)),
        RegionTag::Elem21 | RegionTag::Elem24 => Ok(exponential_az(a, z, trunc)?.0),
        RegionTag::Elem22 | RegionTag::Elem25 => Ok(exponential_negative_az(a, z, trunc)?.0),
        RegionTag::Elem23 => Ok(oscillatory_az(a, z, trunc)?.0),
        RegionTag::AiryPlus | RegionTag::AiryMinus => {
            if a >= 0.0 {
                return Err(Error::Domain(format!(
                    "Airy-type forms need a < 0, got {a}"
                )));
            }
            let (mu, t) = negative_a_variables(a, z);
            let q = eval_airy_modified(mu, t.abs())?;
            if z >= 0.0 {
                Ok(q)
            } else {
                Ok(reflect(&q, a, Trig::of_a(a))?.with_region(RegionTag::AiryMinus))
            }
        }
    }
}

/// Precision exhaustion in the series becomes `Unsupported`; no value is
/// returned for such points.
fn series_error(e: Error, a: f64, z: f64) -> Error {
    match e {
        Error::AccuracyLoss { digits, budget } => Error::Unsupported {
            a,
            z,
            reason: format!("series cancels {digits:.1} digits (budget {budget:.1})"),
        },
        other => other,
    }
}
