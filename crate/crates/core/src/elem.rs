//! Elementary-function expansions of U, V, U', V' for large |a| or large
//! a + |z|, away from the turning points z = ±2√(-a).
//!
//! Exponential regions (z beyond the turning point, or a ≥ 0) use the
//! modified expansions in τ (or τ̃), which remain valid when either μ or t is
//! large. The oscillatory region between the turning points uses Olver's
//! u_s, v_s polynomials with the normalizer g(μ).
//!
//! Everything is evaluated in the (a, z) variables internally, so the
//! a → 0 limit (μ → 0, t → ∞) is finite: with s = √(z² + 4a),
//!
//! ```text
//! h(μ) e^{-μ²ξ} (t²-1)^{-1/4} = exp(a/2 - a ln((z+s)/2) - zs/4 - ½ ln s)
//! τ / μ² = 1 / (s (z + s))
//! ```
//!
//! and the same two formulas hold for h̃, ξ̃, τ̃ when a > 0 (up to the sign
//! of τ̃).

use crate::error::{Error, Result};
use crate::exactpoly::CoeffTables;
use crate::poly::{horner, rational_to_f64};
use crate::quad::{FunctionQuad, RegionTag};
use crate::refseries::{cos_pi, log_gamma_half, sin_pi};
use crate::scaled::ScaledValue;
use std::f64::consts::{FRAC_1_SQRT_2, LN_2, PI, SQRT_2};
use std::sync::OnceLock;

/// Highest coefficient index held in the `f64` tables.
pub const ELEM_ORDER: usize = 20;

/// Default number of terms for the fixed-length sums.
pub const DEFAULT_TERMS: usize = 5;

const LN_SQRT_2_OVER_PI: f64 = -0.225_791_352_644_727_4; // ln √(2/π)

/// How many terms of each asymptotic sum to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    /// The first S terms (at least the leading one).
    Fixed(usize),
    /// Stop once a term falls below 1e-17 or the terms start to grow.
    Auto,
}

/// Coefficients converted once from the exact rational tables.
///
/// `phi_hat[s]` holds φ_s(τ)/τ^s and `psi_hat[s]` holds ψ_s(τ)/τ^s, both as
/// ascending coefficients in τ.
#[derive(Debug, Clone)]
pub struct ElemTables {
    pub phi_hat: Vec<Vec<f64>>,
    pub psi_hat: Vec<Vec<f64>>,
    pub u: Vec<Vec<f64>>,
    pub v: Vec<Vec<f64>>,
    pub g: Vec<f64>,
    pub gamma_coeffs: Vec<f64>,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

pub fn tables() -> &'static ElemTables {
    static T: OnceLock<ElemTables> = OnceLock::new();
    T.get_or_init(|| {
        let c = CoeffTables::build(ELEM_ORDER).expect("coefficient generation");
        let hat = |polys: &[crate::poly::RationalPoly]| -> Vec<Vec<f64>> {
            polys
                .iter()
                .enumerate()
                .map(|(s, p)| {
                    p.shift_down(s)
                        .expect("τ^s divides the coefficient")
                        .to_f64_coeffs()
                })
                .collect()
        };
        let f = |v: &[crate::poly::Rational]| v.iter().map(rational_to_f64).collect();
        ElemTables {
            phi_hat: hat(&c.phi),
            psi_hat: hat(&c.psi),
            u: c.u.iter().map(|p| p.to_f64_coeffs()).collect(),
            v: c.v.iter().map(|p| p.to_f64_coeffs()).collect(),
            g: f(&c.g),
            gamma_coeffs: f(&c.gamma_coeffs),
            alpha: f(&c.alpha),
            beta: f(&c.beta),
        }
    })
}

/// The maps t ↦ ξ, η, ξ̃, τ, τ̃. Fields outside their domain are `None`
/// and the accessors report a domain error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElemMappings {
    pub t: f64,
    xi: Option<f64>,
    eta: Option<f64>,
    tau: Option<f64>,
    pub xi_tilde: f64,
    pub tau_tilde: f64,
}

impl ElemMappings {
    pub fn xi(&self) -> Result<f64> {
        self.xi
            .ok_or_else(|| Error::Domain(format!("xi needs t >= 1, got {}", self.t)))
    }

    pub fn eta(&self) -> Result<f64> {
        self.eta
            .ok_or_else(|| Error::Domain(format!("eta needs |t| <= 1, got {}", self.t)))
    }

    pub fn tau(&self) -> Result<f64> {
        self.tau
            .ok_or_else(|| Error::Domain(format!("tau needs t > 1, got {}", self.t)))
    }
}

/// C(½, k).
fn half_binomials(n: usize) -> Vec<f64> {
    let mut c = vec![1.0; n];
    for k in 1..n {
        c[k] = c[k - 1] * (0.5 - (k - 1) as f64) / k as f64;
    }
    c
}

/// √2 Σ C(½,k) r^k e^{k+3/2}/(k+3/2): the integral of √(e(2 ± e)).
fn turning_point_area(e: f64, r: f64) -> f64 {
    let c = half_binomials(40);
    let mut sum = 0.0;
    let mut p = e * e.sqrt();
    let mut rk = 1.0;
    for (k, ck) in c.iter().enumerate() {
        let term = ck * rk * p / (k as f64 + 1.5);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        p *= e;
        rk *= r;
    }
    SQRT_2 * sum
}

/// ξ(t) = ½t√(t²-1) - ½ ln(t + √(t²-1)) for t ≥ 1.
pub fn xi_of(t: f64) -> f64 {
    let e = t - 1.0;
    if e < 0.25 {
        turning_point_area(e, 0.5)
    } else {
        0.5 * (t * ((t - 1.0) * (t + 1.0)).sqrt() - t.acosh())
    }
}

/// η(t) = ½ arccos t - ½ t√(1-t²) for |t| ≤ 1.
pub fn eta_of(t: f64) -> f64 {
    let e = 1.0 - t;
    if e < 0.25 {
        turning_point_area(e, -0.5)
    } else {
        0.5 * (t.acos() - t * ((1.0 - t) * (1.0 + t)).sqrt())
    }
}

/// ξ̃(t) = ½[t√(1+t²) + asinh t].
pub fn xi_tilde_of(t: f64) -> f64 {
    0.5 * (t * t.hypot(1.0) + t.asinh())
}

/// τ = ½(t/√(t²-1) - 1) in the cancellation-free form.
pub fn tau_of(t: f64) -> f64 {
    let r = ((t - 1.0) * (t + 1.0)).sqrt();
    1.0 / (2.0 * r * (t + r))
}

/// τ̃ = ½(t/√(1+t²) - 1).
pub fn tau_tilde_of(t: f64) -> f64 {
    let r = t.hypot(1.0);
    if t >= 0.0 {
        -1.0 / (2.0 * r * (t + r))
    } else {
        0.5 * (t / r - 1.0)
    }
}

pub fn mappings(t: f64) -> ElemMappings {
    let at = t.abs();
    ElemMappings {
        t,
        xi: (t >= 1.0).then(|| xi_of(t)),
        eta: (at <= 1.0).then(|| eta_of(t)),
        tau: (t > 1.0).then(|| tau_of(t)),
        xi_tilde: xi_tilde_of(t),
        tau_tilde: tau_tilde_of(t),
    }
}

/// ln h(μ) = -(μ²/4 + ¼) ln 2 - μ²/4 + (μ²/2 - ½) ln μ.
pub fn log_h(mu: f64) -> f64 {
    let m2 = mu * mu;
    -(0.25 * m2 + 0.25) * LN_2 - 0.25 * m2 + (0.5 * m2 - 0.5) * mu.ln()
}

/// ln h̃(μ) = μ²/4 - (μ²/2 + ½) ln μ + (μ²/4 - ¼) ln 2.
pub fn log_h_tilde(mu: f64) -> f64 {
    let m2 = mu * mu;
    0.25 * m2 - (0.5 * m2 + 0.5) * mu.ln() + (0.25 * m2 - 0.25) * LN_2
}

/// Σ g_s/μ^{2s}, summed until the terms stop decreasing.
pub fn g_series(mu: f64, max_terms: usize) -> f64 {
    let g = &tables().g;
    let x = 1.0 / (mu * mu);
    let mut sum = 0.0;
    let mut xp = 1.0;
    let mut last = f64::INFINITY;
    for gs in g.iter().take(max_terms) {
        let term = gs * xp;
        if term != 0.0 {
            if term.abs() > last {
                break;
            }
            last = term.abs();
        }
        sum += term;
        xp *= x;
    }
    sum
}

/// The μ-dependent normalizers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizerSet {
    pub mu: f64,
    pub log_h: f64,
    pub log_h_tilde: f64,
    /// g(μ) from the three leading nonzero g_s (g_0, g_1, g_3).
    pub g_value: f64,
    /// ln g(μ) from every available g_s.
    pub log_g: f64,
    /// ln Γ(½ + ½μ²).
    pub log_gamma_half_mu2: f64,
}

impl NormalizerSet {
    pub fn new(mu: f64) -> Result<Self> {
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(Error::Domain(format!("normalizers need mu > 0, got {mu}")));
        }
        let lh = log_h(mu);
        let short = g_series(mu, 4);
        let full = g_series(mu, ELEM_ORDER + 1);
        Ok(NormalizerSet {
            mu,
            log_h: lh,
            log_h_tilde: log_h_tilde(mu),
            g_value: (lh - short.ln()).exp(),
            log_g: lh - full.ln(),
            log_gamma_half_mu2: log_gamma_half(0.5 * mu * mu)?.log_abs,
        })
    }
}

/// Truncated F, G, P, Q (or their tilde forms).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSums {
    pub f: f64,
    pub g: f64,
    pub p: f64,
    pub q: f64,
    /// Highest index included.
    pub terms: usize,
    /// Size of the first omitted term.
    pub err: f64,
}

impl SeriesSums {
    /// ½(FQ + GP), which is exactly 1 for the untruncated functions.
    pub fn wronskian_half(&self) -> f64 {
        0.5 * (self.f * self.q + self.g * self.p)
    }
}

/// F = Σ w^k φ̂_k(τ), G = Σ w^k ψ̂_k(τ), P, Q with (-w)^k.
///
/// With w = τ/μ² this gives F_μ, G_μ, P_μ, Q_μ; with w = -τ̃/μ² and τ̃ in
/// place of τ it gives F̃, G̃, P̃, Q̃.
pub fn modified_sums(w: f64, tau: f64, trunc: Truncation) -> SeriesSums {
    let tb = tables();
    let max = match trunc {
        Truncation::Fixed(s) => s.clamp(1, ELEM_ORDER + 1) - 1,
        Truncation::Auto => ELEM_ORDER,
    };
    let (mut f, mut g, mut p, mut q) = (0.0, 0.0, 0.0, 0.0);
    let mut wk = 1.0;
    let mut last = f64::INFINITY;
    let mut used = 0;
    let mut err = 0.0;
    for k in 0..=ELEM_ORDER {
        let a = wk * horner(&tb.phi_hat[k], tau);
        let b = wk * horner(&tb.psi_hat[k], tau);
        let size = a.abs().max(b.abs());
        if k > max {
            err = size;
            break;
        }
        if trunc == Truncation::Auto && k > 0 {
            if size > last {
                err = size;
                break;
            }
            if size < 1e-17 {
                err = size;
                used = k;
                f += a;
                g += b;
                let sg = if k % 2 == 0 { 1.0 } else { -1.0 };
                p += sg * a;
                q += sg * b;
                break;
            }
        }
        let sg = if k % 2 == 0 { 1.0 } else { -1.0 };
        f += a;
        g += b;
        p += sg * a;
        q += sg * b;
        used = k;
        last = size;
        wk *= w;
        if k == ELEM_ORDER {
            err = size;
        }
    }
    SeriesSums {
        f,
        g,
        p,
        q,
        terms: used,
        err,
    }
}

/// Geometry of the exponential regions at (a, |z|).
struct ExpKernel {
    s: f64,
    /// ln of U's prefactor h e^{-μ²ξ}(t²-1)^{-1/4} (or the tilde form).
    e: f64,
    sums: SeriesSums,
}

fn exp_kernel(a: f64, x: f64, trunc: Truncation) -> Result<ExpKernel> {
    let s2 = x.mul_add(x, 4.0 * a);
    if !(s2 > 0.0) || x < 0.0 {
        return Err(Error::Domain(format!(
            "no exponential expansion at a={a}, |z|={x}"
        )));
    }
    let s = s2.sqrt();
    let w = 1.0 / (s * (x + s));
    let tau = -2.0 * a * w;
    let e = 0.5 * a - a * (0.5 * (x + s)).ln() - 0.25 * x * s - 0.5 * s.ln();
    Ok(ExpKernel {
        s,
        e,
        sums: modified_sums(w, tau, trunc),
    })
}

/// Γ(½+a)/π in scaled form (a > -½).
fn gamma_over_pi(a: f64) -> Result<ScaledValue> {
    let g = log_gamma_half(a)?;
    Ok(ScaledValue::from_log(g.log_abs - PI.ln(), g.sign))
}

/// sin(πa), cos(πa) with exact zeros.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trig {
    pub sin: f64,
    pub cos: f64,
}

impl Trig {
    pub fn of_a(a: f64) -> Self {
        Trig {
            sin: sin_pi(a),
            cos: cos_pi(a),
        }
    }

    /// sin, cos of πa with a = -½μ², forming μ² exactly as a double-double.
    pub fn of_mu(mu: f64) -> Self {
        let p = mu * mu;
        let lo = mu.mul_add(mu, -p);
        // -½μ² mod 2 = -(p mod 4 + lo)/2.
        let r = p.rem_euclid(4.0);
        let x = -0.5 * (r + lo);
        Trig {
            sin: sin_pi(x),
            cos: cos_pi(x),
        }
    }
}

/// U, U', V, V' at (a, -z) from the values at (a, z).
pub fn reflect(q: &FunctionQuad, a: f64, trig: Trig) -> Result<FunctionQuad> {
    // k1 = π/Γ(½+a) = Γ(½-a) cos πa; k2 = cos πa / Γ(½-a).
    let (k1, k2) = if a <= 0.0 {
        let g = log_gamma_half(-a)?;
        (
            ScaledValue::from_log(g.log_abs, g.sign).scale_f64(trig.cos),
            ScaledValue::from_log(-g.log_abs, g.sign).scale_f64(trig.cos),
        )
    } else {
        let g = log_gamma_half(a)?;
        (
            ScaledValue::from_log(PI.ln() - g.log_abs, g.sign),
            ScaledValue::from_log(g.log_abs - PI.ln(), g.sign).scale_f64(trig.cos * trig.cos),
        )
    };
    let sn = trig.sin;
    Ok(FunctionQuad {
        u: q.u.scale_f64(-sn) + k1 * q.v,
        du: q.du.scale_f64(sn) - k1 * q.dv,
        v: k2 * q.u + q.v.scale_f64(sn),
        dv: -(k2 * q.du) - q.dv.scale_f64(sn),
        region: q.region,
        err_estimate: q.err_estimate,
    })
}

fn check_inputs(a: f64, z: f64) -> Result<()> {
    if !(a.is_finite() && z.is_finite()) {
        return Err(Error::Domain(format!("non-finite input a={a}, z={z}")));
    }
    Ok(())
}

/// Exponential-type region at z > 0: beyond the turning point for a < 0,
/// any z ≥ 0 for a ≥ 0.
pub fn exponential_az(a: f64, z: f64, trunc: Truncation) -> Result<(FunctionQuad, SeriesSums)> {
    check_inputs(a, z)?;
    if z < 0.0 {
        return Err(Error::Domain(format!(
            "exponential_az needs z >= 0, got {z}"
        )));
    }
    if a < 0.0 && z <= 2.0 * (-a).sqrt() {
        return Err(Error::Domain(format!(
            "z={z} is not beyond the turning point for a={a}"
        )));
    }
    let k = exp_kernel(a, z, trunc)?;
    let sm = k.sums;
    let rec = ScaledValue::from_log(k.e, 1.0);
    let dom = ScaledValue::from_log(LN_SQRT_2_OVER_PI - k.e - k.s.ln(), 1.0);
    let u = rec.scale_f64(sm.f);
    let du = rec.scale_f64(-0.5 * k.s * sm.g);
    let mut v = dom.scale_f64(sm.p);
    let mut dv = dom.scale_f64(0.5 * k.s * sm.q);
    let region = if a < 0.0 {
        RegionTag::Elem21
    } else {
        let sn = sin_pi(a);
        if sn != 0.0 {
            let c = gamma_over_pi(a)?.scale_f64(sn);
            v = v + c * u;
            dv = dv + c * du;
        }
        RegionTag::Elem24
    };
    let quad = FunctionQuad {
        u,
        du,
        v,
        dv,
        region,
        err_estimate: sm.err.max(f64::EPSILON),
    };
    Ok((quad, sm))
}

/// Exponential-type region at z < 0.
pub fn exponential_negative_az(
    a: f64,
    z: f64,
    trunc: Truncation,
) -> Result<(FunctionQuad, SeriesSums)> {
    exponential_negative_trig(a, z, trunc, Trig::of_a(a))
}

fn exponential_negative_trig(
    a: f64,
    z: f64,
    trunc: Truncation,
    trig: Trig,
) -> Result<(FunctionQuad, SeriesSums)> {
    check_inputs(a, z)?;
    if z > 0.0 {
        return Err(Error::Domain(format!(
            "exponential_negative_az needs z <= 0, got {z}"
        )));
    }
    let x = -z;
    if a < 0.0 {
        let (q, sm) = exponential_az(a, x, trunc)?;
        let r = reflect(&q, a, trig)?;
        return Ok((r.with_region(RegionTag::Elem22), sm));
    }
    let k = exp_kernel(a, x, trunc)?;
    let sm = k.sums;
    let rec = ScaledValue::from_log(k.e, 1.0);
    let dom = ScaledValue::from_log(LN_SQRT_2_OVER_PI - k.e - k.s.ln(), 1.0);
    let gp = gamma_over_pi(a)?;
    let half_s = 0.5 * k.s;
    // U(a, x) and U(a, -x) = (π/Γ(½+a)) D P.
    let ur = rec.scale_f64(sm.f);
    let dur = rec.scale_f64(-half_s * sm.g);
    let ul = dom.scale_f64(sm.p) / gp;
    let dul = dom.scale_f64(-half_s * sm.q) / gp;
    let sn = trig.sin;
    let u = ul;
    let du = dul;
    let v = dom.scale_f64(sn * sm.p) + gp * ur;
    let dv = dom.scale_f64(-sn * half_s * sm.q) - gp * dur;
    let quad = FunctionQuad {
        u,
        du,
        v,
        dv,
        region: RegionTag::Elem25,
        err_estimate: sm.err.max(f64::EPSILON),
    };
    Ok((quad, sm))
}

/// The four sums of the oscillatory region in powers of w = 1/((1-t²)^{3/2} μ²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorySums {
    /// Σ(-1)^s u_{2s} w^{2s}
    pub a: f64,
    /// Σ(-1)^s u_{2s+1} w^{2s+1}
    pub b: f64,
    /// Σ(-1)^s v_{2s} w^{2s}
    pub c: f64,
    /// Σ(-1)^s v_{2s+1} w^{2s+1}
    pub d: f64,
    /// Terms per sum.
    pub terms: usize,
    pub err: f64,
}

pub fn oscillatory_sums(t: f64, w: f64, trunc: Truncation) -> OscillatorySums {
    let tb = tables();
    let pairs = ELEM_ORDER.div_ceil(2);
    let max = match trunc {
        Truncation::Fixed(s) => s.clamp(1, pairs),
        Truncation::Auto => pairs,
    };
    let (mut a, mut b, mut c, mut d) = (0.0, 0.0, 0.0, 0.0);
    let w2 = w * w;
    let mut wk = 1.0;
    let mut last = f64::INFINITY;
    let mut used = 0;
    let mut err = 0.0;
    for s in 0..=pairs {
        if 2 * s + 1 > ELEM_ORDER {
            break;
        }
        let sg = if s % 2 == 0 { 1.0 } else { -1.0 };
        let ta = sg * wk * horner(&tb.u[2 * s], t);
        let tb_ = sg * wk * w * horner(&tb.u[2 * s + 1], t);
        let tc = sg * wk * horner(&tb.v[2 * s], t);
        let td = sg * wk * w * horner(&tb.v[2 * s + 1], t);
        let size = ta.abs().max(tb_.abs()).max(tc.abs()).max(td.abs());
        if s >= max {
            err = size;
            break;
        }
        if trunc == Truncation::Auto && s > 0 && size > last {
            err = size;
            break;
        }
        a += ta;
        b += tb_;
        c += tc;
        d += td;
        used = s + 1;
        last = size;
        wk *= w2;
        if trunc == Truncation::Auto && size < 1e-17 {
            err = size;
            break;
        }
    }
    if err == 0.0 && used == pairs {
        err = last;
    }
    OscillatorySums {
        a,
        b,
        c,
        d,
        terms: used,
        err,
    }
}

/// Oscillatory region between the turning points, a < 0, |z| < 2√(-a).
pub fn oscillatory_az(
    a: f64,
    z: f64,
    trunc: Truncation,
) -> Result<(FunctionQuad, OscillatorySums)> {
    check_inputs(a, z)?;
    if a >= 0.0 {
        return Err(Error::Domain(format!(
            "oscillatory region needs a < 0, got {a}"
        )));
    }
    let b = -a;
    let rb = b.sqrt();
    let t = z / (2.0 * rb);
    if t.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "oscillatory region needs |t| < 1, got {t}"
        )));
    }
    let mu = (2.0 * b).sqrt();
    let om = (1.0 - t) * (1.0 + t);
    let w = 1.0 / (om * om.sqrt() * mu * mu);
    let sums = oscillatory_sums(t, w, trunc);
    let nz = NormalizerSet::new(mu)?;
    // μ²η = -a arccos t - z√(-4a - z²)/4
    let phase = b * t.acos() - 0.25 * z * (2.0 * rb - z).sqrt() * (2.0 * rb + z).sqrt();
    let (sp, cp) = phase.sin_cos();
    let (cm, sm) = (FRAC_1_SQRT_2 * (cp + sp), FRAC_1_SQRT_2 * (sp - cp)); // θ = phase - π/4
    let (cpl, spl) = (FRAC_1_SQRT_2 * (cp - sp), FRAC_1_SQRT_2 * (sp + cp)); // θ = phase + π/4
    let ln_q = om.ln() * 0.25;
    let ln_u = LN_2 + nz.log_g - ln_q;
    let ln_du = (mu * SQRT_2).ln() + nz.log_g + ln_q;
    let lg = nz.log_gamma_half_mu2;
    let s = &sums;
    let u = ScaledValue::from_log(ln_u, 1.0).scale_f64(cm * s.a - sm * s.b);
    let du = ScaledValue::from_log(ln_du, 1.0).scale_f64(sm * s.c + cm * s.d);
    let v = ScaledValue::from_log(ln_u - lg, 1.0).scale_f64(cpl * s.a - spl * s.b);
    let dv = ScaledValue::from_log(ln_du - lg, 1.0).scale_f64(spl * s.c + cpl * s.d);
    let quad = FunctionQuad {
        u,
        du,
        v,
        dv,
        region: RegionTag::Elem23,
        err_estimate: sums.err.max(f64::EPSILON),
    };
    Ok((quad, sums))
}

fn check_mu(mu: f64) -> Result<()> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::Domain(format!("mu must be positive, got {mu}")));
    }
    Ok(())
}

/// U(-½μ², μt√2) and companions for t > 1, with S terms per sum.
pub fn eval_region_21(mu: f64, t: f64, s: usize) -> Result<(FunctionQuad, SeriesSums)> {
    check_mu(mu)?;
    if !(t > 1.0) {
        return Err(Error::Domain(format!("region 21 needs t > 1, got {t}")));
    }
    exponential_az(-0.5 * mu * mu, mu * t * SQRT_2, Truncation::Fixed(s))
}

/// U(-½μ², -μt√2) and companions for t > 1.
pub fn eval_region_22(mu: f64, t: f64, s: usize) -> Result<FunctionQuad> {
    check_mu(mu)?;
    if !(t > 1.0) {
        return Err(Error::Domain(format!("region 22 needs t > 1, got {t}")));
    }
    let a = -0.5 * mu * mu;
    let (q, _) =
        exponential_negative_trig(a, -mu * t * SQRT_2, Truncation::Fixed(s), Trig::of_mu(mu))?;
    Ok(q)
}

/// Coefficient Γ(½+½μ²) cos(½πμ²) of the dominant part in region 22;
/// zero in the Hermite case μ² = 2n + 1.
pub fn region_22_dominant_coefficient(mu: f64) -> Result<f64> {
    let g = log_gamma_half(0.5 * mu * mu)?;
    Ok(Trig::of_mu(mu).cos * g.log_abs.exp())
}

/// U(-½μ², μt√2) and companions for |t| < 1, S terms in each sum.
pub fn eval_region_23(mu: f64, t: f64, s: usize) -> Result<FunctionQuad> {
    check_mu(mu)?;
    if !(t.abs() < 1.0) {
        return Err(Error::Domain(format!("region 23 needs |t| < 1, got {t}")));
    }
    oscillatory_az(-0.5 * mu * mu, mu * t * SQRT_2, Truncation::Fixed(s)).map(|r| r.0)
}

/// U(½μ², μt√2) and companions; t ≥ 0 uses the recessive form, t < 0 the
/// dominant one. S terms per sum.
pub fn eval_region_24_25(mu: f64, t: f64, s: usize) -> Result<(FunctionQuad, SeriesSums)> {
    check_mu(mu)?;
    if !t.is_finite() {
        return Err(Error::Domain(format!("t must be finite, got {t}")));
    }
    let a = 0.5 * mu * mu;
    let z = mu * t * SQRT_2;
    if t >= 0.0 {
        exponential_az(a, z, Truncation::Fixed(s))
    } else {
        exponential_negative_az(a, z, Truncation::Fixed(s))
    }
}
