//! Airy functions and the turning-point expansions of U, V near z = ±2√(-a).
//!
//! Two forms are provided. The Olver form needs the coefficient functions
//! a_s..d_s, whose closed forms lose accuracy as ζ → 0, so it is only used
//! for |ζ| ≥ [`ZETA_MIN`]. The modified form expands the coefficient
//! functions F, G in powers of ζ, with Maclaurin coefficients obtained from
//! the differential system they satisfy; it covers |ζ| ≤ [`MACLAURIN_RADIUS`].
//!
//! The ζ-map series are built in the variable x = 2^{-1/3} ζ, where every
//! coefficient is rational.

use crate::dd::Dd;
use crate::elem::{eta_of, log_h, tables, xi_of, NormalizerSet, Trig};
use crate::error::{Error, Result};
use crate::exactpoly::{alpha_coeffs, beta_coeffs};
use crate::poly::{horner, rational_to_f64, Rational};
use crate::quad::{FunctionQuad, RegionTag};
use crate::refseries::{log_gamma_half, uv_series};
use crate::scaled::ScaledValue;
use crate::series::{self, Scalar};
use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use std::sync::{Mutex, OnceLock};

/// Smallest |ζ| accepted by the closed-form coefficients a_s..d_s.
pub const ZETA_MIN: f64 = 0.35;
/// Largest |ζ| accepted by the Maclaurin form.
pub const MACLAURIN_RADIUS: f64 = 1.0;
/// Smallest μ for the Olver form, which relies on the asymptotic g(μ).
pub const OLVER_MU_MIN: f64 = 4.0;
/// Below this μ the Maclaurin system is seeded from the convergent series
/// and run forward instead of backward.
pub const FORWARD_MU_MAX: f64 = 4.5;

/// |x| at which Ai, Bi switch from the Maclaurin to the asymptotic series.
const AIRY_SWITCH: f64 = 8.0;
/// Number of ζ-map coefficients kept.
const MAP_ORDER: usize = 160;
/// Extra depth of the backward sweep beyond the retained coefficients.
const SWEEP_MARGIN: usize = 40;
/// |ζ| below which φ, χ and t(ζ) come from their power series.
const MAP_SERIES_RADIUS: f64 = 0.5;

const SQRT_PI: f64 = 1.772_453_850_905_516;
const CBRT_2: f64 = 1.259_921_049_894_873_2;

/// Ai(0), -Ai'(0) and √3 to double-double accuracy.
const AI0: Dd = Dd::new(0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
const NEG_DAI0: Dd = Dd::new(0.258_819_403_792_806_8, -2.522_243_111_610_832e-17);
const SQRT3: Dd = Dd::new(1.732_050_807_568_877_2, 1.003_508_422_180_690_3e-16);

/// Ai, Ai', Bi, Bi' at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryQuad {
    pub ai: ScaledValue,
    pub dai: ScaledValue,
    pub bi: ScaledValue,
    pub dbi: ScaledValue,
}

impl AiryQuad {
    /// Ai Bi' - Ai' Bi, which equals 1/π.
    pub fn wronskian(&self) -> ScaledValue {
        self.ai * self.dbi - self.dai * self.bi
    }
}

fn airy_asymptotic_coeffs() -> &'static (Vec<f64>, Vec<f64>) {
    static C: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    C.get_or_init(|| {
        let f = |v: Vec<Rational>| v.iter().map(rational_to_f64).collect();
        (f(alpha_coeffs(40)), f(beta_coeffs(40)))
    })
}

pub fn airy_eval(x: f64) -> AiryQuad {
    if x.abs() <= AIRY_SWITCH {
        airy_maclaurin(x)
    } else if x > 0.0 {
        airy_asymptotic_positive(x)
    } else {
        airy_asymptotic_negative(-x)
    }
}

fn airy_maclaurin(x: f64) -> AiryQuad {
    let xd = Dd::from_f64(x);
    let x3 = xd * xd * xd;
    // f = Σ t_k, g = Σ s_k and their derivatives p_k, q_k.
    let (mut t, mut s, mut p, mut q) = (Dd::ONE, xd, Dd::ZERO, Dd::ONE);
    let (mut f, mut g, mut df, mut dg) = (Dd::ONE, xd, Dd::ZERO, Dd::ONE);
    for k in 0..200 {
        let kf = k as f64;
        t = t * x3 / Dd::from_f64((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        s = s * x3 / Dd::from_f64((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        p = if k == 0 {
            xd * xd * Dd::from_f64(0.5)
        } else {
            p * x3 / Dd::from_f64(3.0 * kf * (3.0 * kf + 2.0))
        };
        q = q * x3 / Dd::from_f64((3.0 * kf + 1.0) * (3.0 * kf + 3.0));
        f = f + t;
        g = g + s;
        df = df + p;
        dg = dg + q;
        let small = |term: Dd, sum: Dd| term.to_f64().abs() <= 1e-34 * (1.0 + sum.to_f64().abs());
        if small(t, f) && small(s, g) && small(p, df) && small(q, dg) {
            break;
        }
    }
    let sv = |d: Dd| ScaledValue::from_f64(d.to_f64());
    AiryQuad {
        ai: sv(AI0 * f - NEG_DAI0 * g),
        dai: sv(AI0 * df - NEG_DAI0 * dg),
        bi: sv(SQRT3 * (AI0 * f + NEG_DAI0 * g)),
        dbi: sv(SQRT3 * (AI0 * df + NEG_DAI0 * dg)),
    }
}

/// Σ c_m (σx)^m truncated at the smallest term.
fn asymptotic_sum(c: &[f64], x: f64, sign: f64, parity: Option<usize>) -> f64 {
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    let mut xp = 1.0;
    for (m, cm) in c.iter().enumerate() {
        let term = cm * xp;
        if term.abs() > last && m > 2 {
            break;
        }
        let keep = match parity {
            None => true,
            Some(p) => m % 2 == p,
        };
        if keep {
            // Paired terms carry (-1)^{⌊m/2⌋}.
            let sg = if parity.is_some() && (m / 2) % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            sum += sg * term;
        }
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
        last = term.abs();
        xp *= sign * x;
    }
    sum
}

fn airy_asymptotic_positive(x: f64) -> AiryQuad {
    let (alpha, beta) = airy_asymptotic_coeffs();
    let r = x.sqrt();
    let xm = 1.0 / (x * r);
    let z = 2.0 / 3.0 * x * r;
    let q = x.sqrt().sqrt();
    let sa = asymptotic_sum(alpha, xm, -1.0, None);
    let sb = asymptotic_sum(beta, xm, -1.0, None);
    let pa = asymptotic_sum(alpha, xm, 1.0, None);
    let pb = asymptotic_sum(beta, xm, 1.0, None);
    let lead = |sign: f64, c: f64| ScaledValue::from_log(sign * z, 1.0).scale_f64(c);
    AiryQuad {
        ai: lead(-1.0, sa / (2.0 * SQRT_PI * q)),
        dai: lead(-1.0, -q * sb / (2.0 * SQRT_PI)),
        bi: lead(1.0, pa / (SQRT_PI * q)),
        dbi: lead(1.0, q * pb / SQRT_PI),
    }
}

fn airy_asymptotic_negative(y: f64) -> AiryQuad {
    let (alpha, beta) = airy_asymptotic_coeffs();
    let r = y.sqrt();
    let ym = 1.0 / (y * r);
    let theta = 2.0 / 3.0 * y * r - FRAC_PI_4;
    let (sn, cs) = theta.sin_cos();
    let q = r.sqrt();
    let ae = asymptotic_sum(alpha, ym, 1.0, Some(0));
    let ao = asymptotic_sum(alpha, ym, 1.0, Some(1));
    let be = asymptotic_sum(beta, ym, 1.0, Some(0));
    let bo = asymptotic_sum(beta, ym, 1.0, Some(1));
    let sv = ScaledValue::from_f64;
    AiryQuad {
        ai: sv((cs * ae + sn * ao) / (SQRT_PI * q)),
        dai: sv(q * (sn * be - cs * bo) / SQRT_PI),
        bi: sv((-sn * ae + cs * ao) / (SQRT_PI * q)),
        dbi: sv(q * (cs * be + sn * bo) / SQRT_PI),
    }
}

/// Power series of the ζ-map in x = 2^{-1/3} ζ.
///
/// `e` is t - 1, `p` is 2^{1/6} φ, `l` is d ln p / dx and `r` is
/// 2^{2/3} Ψ, all as series in x.
#[derive(Debug, Clone)]
pub struct MapSeries<T> {
    pub e: Vec<T>,
    pub p: Vec<T>,
    pub l: Vec<T>,
    pub r: Vec<T>,
}

/// Coefficients of t - 1 = e(x) from 2x = e(2 + e) (de/dx)², which is
/// ζ (dζ/dt)² = t² - 1 in the variable x.
fn t_minus_one_series<T: Scalar>(like: &T, n: usize) -> Vec<T> {
    let z = like.zero_like();
    let mut e = vec![z.clone(); n];
    if n < 2 {
        return e;
    }
    e[1] = like.one_like();
    for k in 2..n {
        // Coefficient of x^k in e(2+e)e'² with e_k = 0; e_k enters with
        // weight 2 + 4k.
        let de = series::derivative(&e[..k + 1]);
        let de2 = series::mul(&de, &de, k + 1);
        let mut two_plus = e[..k + 1].to_vec();
        two_plus[0] = two_plus[0].clone() + like.from_ratio_like(2, 1);
        let q = series::mul(&e[..k + 1], &two_plus, k + 1);
        let mut c = z.clone();
        for j in 0..=k {
            c = c + q[j].clone() * de2[k - j].clone();
        }
        e[k] = -c / like.from_ratio_like(2 + 4 * k as i64, 1);
    }
    e
}

pub fn map_series<T: Scalar>(like: &T, n: usize) -> MapSeries<T> {
    let m = n + 3;
    let e = t_minus_one_series(like, m + 1);
    let big_e: Vec<T> = e[1..].to_vec();
    let mut half = series::scale(&e[..m], &like.from_ratio_like(1, 2));
    half[0] = half[0].clone() + like.one_like();
    let base = series::mul(&big_e, &half, m);
    let p = series::pow_unit(&base, -1, 4, m);
    let l = series::mul(&series::derivative(&p), &series::inv(&p, m), m - 1);
    // (3t² + 2) / (16 E³ (1 + e/2)³)
    let mut t = e[..m].to_vec();
    t[0] = t[0].clone() + like.one_like();
    let mut num = series::scale(&series::mul(&t, &t, m), &like.from_ratio_like(3, 1));
    num[0] = num[0].clone() + like.from_ratio_like(2, 1);
    let b3 = series::mul(&series::mul(&base, &base, m), &base, m);
    let den = series::scale(&b3, &like.from_ratio_like(16, 1));
    let q = series::mul(&num, &series::inv(&den, m), m);
    let r: Vec<T> = (2..m).map(|k| -q[k].clone()).collect();
    MapSeries {
        e: e[..n].to_vec(),
        p: p[..n].to_vec(),
        l: l[..n].to_vec(),
        r: r[..n].to_vec(),
    }
}

/// The ζ-map coefficients converted to powers of ζ.
#[derive(Debug, Clone)]
pub struct ZetaSeries {
    /// t(ζ) - 1.
    pub t: Vec<f64>,
    pub phi: Vec<f64>,
    pub chi: Vec<f64>,
    /// Maclaurin coefficients ψ_n of Ψ(ζ).
    pub psi: Vec<f64>,
}

pub fn zeta_series() -> &'static ZetaSeries {
    static S: OnceLock<ZetaSeries> = OnceLock::new();
    S.get_or_init(|| {
        let ms = map_series(&0.0f64, MAP_ORDER);
        let c = 1.0 / CBRT_2;
        let conv = |v: &[f64], pre: f64| -> Vec<f64> {
            let mut f = pre;
            v.iter()
                .map(|x| {
                    let y = x * f;
                    f *= c;
                    y
                })
                .collect()
        };
        ZetaSeries {
            t: conv(&ms.e, 1.0),
            phi: conv(&ms.p, 2f64.powf(-1.0 / 6.0)),
            chi: conv(&ms.l, c),
            psi: conv(&ms.r, c * c),
        }
    })
}

/// ζ and the quantities derived from it at one t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningPointMap {
    pub t: f64,
    pub zeta: f64,
    /// φ(ζ) = (ζ/(t²-1))^{1/4}.
    pub phi: f64,
    /// χ(ζ) = φ'(ζ)/φ(ζ).
    pub chi: f64,
    pub psi_coeffs: &'static [f64],
    pub t_of_zeta_coeffs: &'static [f64],
}

/// ζ(t): (2/3)ζ^{3/2} = ξ(t) for t ≥ 1 and (2/3)(-ζ)^{3/2} = η(t) for t ≤ 1.
pub fn zeta_of(t: f64) -> f64 {
    if t >= 1.0 {
        (1.5 * xi_of(t)).powf(2.0 / 3.0)
    } else {
        -(1.5 * eta_of(t)).powf(2.0 / 3.0)
    }
}

/// t(ζ) from the inversion series; valid for |ζ| well inside 1.77.
pub fn t_of_zeta(zeta: f64) -> f64 {
    1.0 + series::eval(&zeta_series().t, zeta)
}

pub fn zeta_map(t: f64) -> Result<TurningPointMap> {
    if !(t > -1.0) || !t.is_finite() {
        return Err(Error::Domain(format!("zeta map needs t > -1, got {t}")));
    }
    let zs = zeta_series();
    let zeta = zeta_of(t);
    let (phi, chi) = if zeta.abs() <= MAP_SERIES_RADIUS {
        (series::eval(&zs.phi, zeta), series::eval(&zs.chi, zeta))
    } else {
        let phi = (zeta / ((t - 1.0) * (t + 1.0))).sqrt().sqrt();
        let p6 = phi.powi(6);
        (phi, (1.0 - 2.0 * t * p6) / (4.0 * zeta))
    };
    Ok(TurningPointMap {
        t,
        zeta,
        phi,
        chi,
        psi_coeffs: &zs.psi,
        t_of_zeta_coeffs: &zs.t,
    })
}

/// Ψ(ζ) = 5/(16ζ²) - (3t²+2)ζ/(4(t²-1)³).
pub fn psi_function(t: f64) -> Result<f64> {
    let m = zeta_map(t)?;
    if m.zeta.abs() <= MAP_SERIES_RADIUS {
        return Ok(series::eval(m.psi_coeffs, m.zeta));
    }
    let w = (t - 1.0) * (t + 1.0);
    Ok(5.0 / (16.0 * m.zeta * m.zeta) - (3.0 * t * t + 2.0) * m.zeta / (4.0 * w * w * w))
}

/// Olver-form coefficient functions and their truncated sums.
#[derive(Debug, Clone, PartialEq)]
pub struct AiryCoeffSet {
    pub zeta: f64,
    pub a_s: Vec<f64>,
    pub b_s: Vec<f64>,
    pub c_s: Vec<f64>,
    pub d_s: Vec<f64>,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

/// Largest s for which every coefficient is available from the u_k table.
pub fn olver_s_limit() -> usize {
    (tables().u.len() - 2) / 2
}

fn poly_derivative(c: &[f64]) -> Vec<f64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, x)| i as f64 * x)
        .collect()
}

/// a_s..d_s for s ≤ `s_max` and the sums Σ x_s/μ^{4s}.
///
/// With p = φ⁶ and U_k = u_k(t) p^k, which makes each term analytic in ζ:
///
/// ```text
/// a_s = ζ^{-3s}   Σ_{m≤2s}   β_m U_{2s-m}
/// b_s = -ζ^{-3s-2} Σ_{m≤2s+1} α_m U_{2s+1-m}
/// c_s = χ a_s + a_s' + ζ b_s,    d_s = a_s + χ b_{s-1} + b_{s-1}'
/// ```
pub fn airy_coeffs(mu: f64, t: f64, s_max: usize) -> Result<AiryCoeffSet> {
    let m = zeta_map(t)?;
    let zeta = m.zeta;
    if zeta.abs() < ZETA_MIN {
        return Err(Error::TooCloseToTurningPoint {
            zeta,
            min: ZETA_MIN,
        });
    }
    let s_max = s_max.min(olver_s_limit());
    let tb = tables();
    let kmax = 2 * s_max + 2;
    let p = m.phi.powi(6);
    let dt = m.phi * m.phi;
    // U_k and dU_k/dζ.
    let mut uk = Vec::with_capacity(kmax);
    let mut duk = Vec::with_capacity(kmax);
    let mut pk = 1.0;
    for k in 0..kmax {
        let u = horner(&tb.u[k], t);
        let du = horner(&poly_derivative(&tb.u[k]), t);
        uk.push(u * pk);
        duk.push(pk * (du * dt + 6.0 * k as f64 * m.chi * u));
        pk *= p;
    }
    let (alpha, beta) = (&tb.alpha, &tb.beta);
    let mut a_s = Vec::new();
    let mut da_s = Vec::new();
    let mut b_s = Vec::new();
    let mut db_s = Vec::new();
    for s in 0..=s_max {
        let (mut sa, mut dsa) = (0.0, 0.0);
        for mm in 0..=2 * s {
            sa += beta[mm] * uk[2 * s - mm];
            dsa += beta[mm] * duk[2 * s - mm];
        }
        let za = zeta.powi(-(3 * s as i32));
        a_s.push(za * sa);
        da_s.push(za * dsa - 3.0 * s as f64 * za / zeta * sa);
        let (mut sb, mut dsb) = (0.0, 0.0);
        for mm in 0..=2 * s + 1 {
            sb += alpha[mm] * uk[2 * s + 1 - mm];
            dsb += alpha[mm] * duk[2 * s + 1 - mm];
        }
        let zb = zeta.powi(-(3 * s as i32) - 2);
        b_s.push(-zb * sb);
        db_s.push(-(zb * dsb - (3 * s + 2) as f64 * zb / zeta * sb));
    }
    let c_s: Vec<f64> = (0..=s_max)
        .map(|s| m.chi * a_s[s] + da_s[s] + zeta * b_s[s])
        .collect();
    let d_s: Vec<f64> = (0..=s_max)
        .map(|s| {
            if s == 0 {
                a_s[0]
            } else {
                a_s[s] + m.chi * b_s[s - 1] + db_s[s - 1]
            }
        })
        .collect();
    let x = mu.powi(-4);
    let sum = |v: &[f64]| v.iter().rev().fold(0.0, |acc, c| acc * x + c);
    Ok(AiryCoeffSet {
        zeta,
        a: sum(&a_s),
        b: sum(&b_s),
        c: sum(&c_s),
        d: sum(&d_s),
        a_s,
        b_s,
        c_s,
        d_s,
    })
}

/// H(μ) = 2√π μ g(μ) h(μ)/Γ(½+½μ²), the ratio of the modified to the
/// Olver coefficient functions.
pub fn h_ratio(mu: f64) -> Result<f64> {
    let nz = NormalizerSet::new(mu)?;
    Ok((2.0 * SQRT_PI * mu).ln().exp() * (nz.log_g + nz.log_h - nz.log_gamma_half_mu2).exp())
}

/// 1 + ½ Σ_{s≥1} (-1)^s γ_s/(½μ²)^s, truncated at the smallest term.
pub fn h_ratio_series(mu: f64) -> f64 {
    let g = &tables().gamma_coeffs;
    let x = 2.0 / (mu * mu);
    let mut sum = 1.0;
    let mut xp = 1.0;
    let mut last = f64::INFINITY;
    for gs in g.iter().skip(1) {
        xp *= -x;
        let term = 0.5 * gs * xp;
        if term.abs() > last {
            break;
        }
        last = term.abs();
        sum += term;
    }
    sum
}

fn check_turning_inputs(mu: f64, t: f64) -> Result<()> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::Domain(format!("mu must be positive, got {mu}")));
    }
    if !(t > -1.0 && t.is_finite()) {
        return Err(Error::Domain(format!(
            "turning-point expansions need t > -1, got {t}"
        )));
    }
    Ok(())
}

/// Combines Airy values with the four coefficient sums:
/// U = k_u [Ai A + Ai' B], U' = k_du [Ai C + Ai' D], V, V' with Bi and the
/// V-prefactors.
struct AiryAssembly {
    k_u: ScaledValue,
    k_du: ScaledValue,
    k_v: ScaledValue,
    k_dv: ScaledValue,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl AiryAssembly {
    fn quad(&self, ai: &AiryQuad, region: RegionTag, err: f64) -> FunctionQuad {
        let comb =
            |f: ScaledValue, df: ScaledValue, x: f64, y: f64| f.scale_f64(x) + df.scale_f64(y);
        FunctionQuad {
            u: self.k_u * comb(ai.ai, ai.dai, self.a, self.b),
            du: self.k_du * comb(ai.ai, ai.dai, self.c, self.d),
            v: self.k_v * comb(ai.bi, ai.dbi, self.a, self.b),
            dv: self.k_dv * comb(ai.bi, ai.dbi, self.c, self.d),
            region,
            err_estimate: err,
        }
    }
}

/// U(-½μ², ±μt√2) and companions from the Olver Airy-type form with
/// s ≤ `s_max`; negative `t` goes through the reflection z → -z.
pub fn eval_airy_olver(mu: f64, t: f64, s_max: usize) -> Result<FunctionQuad> {
    let at = t.abs();
    check_turning_inputs(mu, at)?;
    if mu < OLVER_MU_MIN {
        return Err(Error::Domain(format!(
            "Olver Airy form needs mu >= {OLVER_MU_MIN}, got {mu}"
        )));
    }
    let cs = airy_coeffs(mu, at, s_max)?;
    let m = zeta_map(at)?;
    let nz = NormalizerSet::new(mu)?;
    let m13 = mu.cbrt();
    let m43 = m13 * mu;
    let ln_u = (2.0 * SQRT_PI * m13 * m.phi).ln() + nz.log_g;
    let ln_du = ((2.0 * PI).sqrt() * m13 * m13 / m.phi).ln() + nz.log_g;
    let lg = nz.log_gamma_half_mu2;
    let asm = AiryAssembly {
        k_u: ScaledValue::from_log(ln_u, 1.0),
        k_du: ScaledValue::from_log(ln_du, 1.0),
        k_v: ScaledValue::from_log(ln_u - lg, 1.0),
        k_dv: ScaledValue::from_log(ln_du - lg, 1.0),
        a: cs.a,
        b: cs.b / (m43 * m43),
        c: cs.c / m43,
        d: cs.d,
    };
    let s_used = s_max.min(olver_s_limit());
    let last = cs.a_s[s_used].abs().max(cs.d_s[s_used].abs()) * mu.powi(-4 * s_used as i32);
    let err = last.max(f64::EPSILON);
    let q = asm.quad(&airy_eval(m43 * cs.zeta), RegionTag::AiryPlus, err);
    finish_sign(q, mu, t)
}

fn finish_sign(q: FunctionQuad, mu: f64, t: f64) -> Result<FunctionQuad> {
    if t >= 0.0 {
        return Ok(q);
    }
    let r = crate::elem::reflect(&q, -0.5 * mu * mu, Trig::of_mu(mu))?;
    Ok(r.with_region(RegionTag::AiryMinus))
}

/// Maclaurin coefficients of F(ζ) = Σ c_n ζ^n and G(ζ) = Σ d_n ζ^n.
#[derive(Debug, Clone, PartialEq)]
pub struct MaclaurinSolution {
    pub mu: f64,
    pub n: usize,
    pub c: Vec<f64>,
    pub d: Vec<f64>,
    pub radius: f64,
    /// μ⁴ · 2√π μ h²(μ)/Γ(½+½μ²), the value of the Wronskian-type invariant.
    pub wronskian_target: f64,
    /// Passes of the backward sweep (0 for the forward solution).
    pub iterations: usize,
}

/// Default truncation index.
pub fn default_maclaurin_n(mu: f64) -> usize {
    if mu < FORWARD_MU_MAX {
        80
    } else {
        ((2.0 * mu * mu) as usize).clamp(70, 80)
    }
}

/// μ⁴ · 2√π μ h²(μ)/Γ(½+½μ²).
pub fn maclaurin_wronskian_target(mu: f64) -> Result<f64> {
    let lg = log_gamma_half(0.5 * mu * mu)?.log_abs;
    Ok(mu.powi(4) * ((2.0 * SQRT_PI * mu).ln() + 2.0 * log_h(mu) - lg).exp())
}

fn convolve(psi: &[f64], x: &[f64], n: usize) -> f64 {
    (0..=n).map(|k| psi[k] * x[n - k]).sum()
}

impl MaclaurinSolution {
    /// μ⁴F² + FG' - F'G - ζG² at ζ = 0.
    pub fn wronskian_at_origin(&self) -> f64 {
        let m4 = self.mu.powi(4);
        m4 * self.c[0] * self.c[0] + self.c[0] * self.d[1] - self.c[1] * self.d[0]
    }

    /// F, F', G, G' at ζ.
    pub fn eval(&self, zeta: f64) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (k, coeffs) in [&self.c, &self.d].into_iter().enumerate() {
            let (mut f, mut df) = (0.0, 0.0);
            for cn in coeffs.iter().rev() {
                df = df * zeta + f;
                f = f * zeta + cn;
            }
            out[2 * k] = f;
            out[2 * k + 1] = df;
        }
        out
    }

    /// Largest residual of the two differential equations at ζ, from the
    /// truncated series.
    pub fn system_residual(&self, zeta: f64) -> f64 {
        let second = |v: &[f64]| -> f64 {
            v.iter()
                .enumerate()
                .skip(2)
                .rev()
                .fold(0.0, |acc, (k, c)| acc * zeta + (k * (k - 1)) as f64 * c)
        };
        let [f, df, g, dg] = self.eval(zeta);
        let psi = series::eval(&zeta_series().psi, zeta);
        let r1 = second(&self.c) + 2.0 * zeta * dg + g - psi * f;
        let r2 = second(&self.d) + 2.0 * self.mu.powi(4) * df - psi * g;
        r1.abs().max(r2.abs())
    }

    /// Size of the last retained terms at |ζ| = `zeta`, relative to F(0).
    pub fn tail(&self, zeta: f64) -> f64 {
        let n = self.n;
        let z = zeta.abs();
        let tc = (self.c[n].abs() + self.c[n - 1].abs() * z.recip()) * z.powi(n as i32);
        let td = (self.d[n].abs() + self.d[n - 1].abs() * z.recip()) * z.powi(n as i32);
        (tc + td / self.mu.powi(4).max(1.0)) / self.c[0].abs()
    }
}

/// Solves the Maclaurin system for F, G, keeping c_n, d_n for n ≤ N.
///
/// For μ ≥ [`FORWARD_MU_MAX`] the coefficients come from a backward sweep
/// started 40 indices beyond N with zero tail: with c_0 = 1 held fixed, each pass
/// recomputes c_{n+1} from the second recurrence and d_n from the first,
/// using the convolutions of the previous pass. The pass is repeated until
/// the coefficients settle, and the result is scaled to the exact Wronskian
/// target. Smaller μ makes the backward sweep lose the normalization, so
/// there the four starting values c_0, c_1, d_0, d_1 are taken from U, V, U',
/// V' at the turning point and the recurrences are run forward.
pub fn solve_maclaurin_fg(mu: f64, n: usize) -> Result<MaclaurinSolution> {
    if !(mu >= 1.0 && mu.is_finite()) {
        return Err(Error::Domain(format!(
            "Maclaurin solver needs mu >= 1, got {mu}"
        )));
    }
    if n < 20 || n + SWEEP_MARGIN + 3 > MAP_ORDER {
        return Err(Error::Domain(format!(
            "Maclaurin order must lie in 20..={}, got {n}",
            MAP_ORDER - SWEEP_MARGIN - 3
        )));
    }
    let target = maclaurin_wronskian_target(mu)?;
    if mu < FORWARD_MU_MAX {
        solve_forward(mu, n, target)
    } else {
        solve_backward(mu, n, target)
    }
}

/// Backward sweep with iteration; see [`solve_maclaurin_fg`].
pub fn solve_backward(mu: f64, n_keep: usize, target: f64) -> Result<MaclaurinSolution> {
    let psi = &zeta_series().psi;
    let n = n_keep + SWEEP_MARGIN;
    let m4 = mu.powi(4);
    let mut c = vec![0.0; n + 3];
    let mut d = vec![0.0; n + 3];
    c[0] = 1.0;
    for iter in 1..=50 {
        let rho: Vec<f64> = (0..=n).map(|k| convolve(psi, &c, k)).collect();
        let sigma: Vec<f64> = (0..=n).map(|k| convolve(psi, &d, k)).collect();
        let mut nc = vec![0.0; n + 3];
        let mut nd = vec![0.0; n + 3];
        nc[0] = 1.0;
        for k in (0..=n).rev() {
            let kf = k as f64;
            nc[k + 1] = (sigma[k] - (kf + 2.0) * (kf + 1.0) * nd[k + 2]) / (2.0 * m4 * (kf + 1.0));
            nd[k] = (rho[k] - (kf + 2.0) * (kf + 1.0) * nc[k + 2]) / (2.0 * kf + 1.0);
        }
        let change = nc
            .iter()
            .zip(&c)
            .chain(nd.iter().zip(&d))
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        let scale = nc.iter().chain(&nd).fold(0.0f64, |m, x| m.max(x.abs()));
        c = nc;
        d = nd;
        if change <= 1e-16 * scale {
            c.truncate(n_keep + 1);
            d.truncate(n_keep + 1);
            let mut sol = MaclaurinSolution {
                mu,
                n: n_keep,
                c,
                d,
                radius: MACLAURIN_RADIUS,
                wronskian_target: target,
                iterations: iter,
            };
            let w = sol.wronskian_at_origin();
            if !(w > 0.0 && w.is_finite()) || sol.c.iter().chain(&sol.d).any(|x| !x.is_finite()) {
                return Err(Error::NoConvergence { mu, n: n_keep });
            }
            let k = (target / w).sqrt();
            sol.c
                .iter_mut()
                .chain(sol.d.iter_mut())
                .for_each(|x| *x *= k);
            return Ok(sol);
        }
    }
    Err(Error::NoConvergence { mu, n: n_keep })
}

/// K_U = Γ(½+½μ²)/(μ^{2/3} h(μ)) and K_V = 1/(μ^{2/3} h(μ)), as logs.
fn modified_prefactors(mu: f64) -> Result<(f64, f64)> {
    let lk_v = -(mu.cbrt().powi(2).ln() + log_h(mu));
    let lg = log_gamma_half(0.5 * mu * mu)?.log_abs;
    Ok((lk_v + lg, lk_v))
}

pub fn solve_forward(mu: f64, n: usize, target: f64) -> Result<MaclaurinSolution> {
    let a = -0.5 * mu * mu;
    let q = uv_series(a, mu * SQRT_2)?;
    let (lk_u, lk_v) = modified_prefactors(mu)?;
    let zs = zeta_series();
    let (phi0, chi0) = (zs.phi[0], zs.chi[0]);
    let ai = airy_eval(0.0);
    let (a0, da0, b0, db0) = (ai.ai.value(), ai.dai.value(), ai.bi.value(), ai.dbi.value());
    let m43 = mu.cbrt() * mu;
    let m83 = m43 * m43;
    // U/(K_U φ) = Ai F + Ai' Ĝ and V/(K_V φ) = Bi F + Bi' Ĝ with Ĝ = G/μ^{8/3}.
    let wu = q.u.mul_exp(-lk_u).value() / phi0;
    let wv = q.v.mul_exp(-lk_v).value() / phi0;
    let dwu = mu * SQRT_2 * phi0 * q.du.mul_exp(-lk_u).value() - chi0 * wu;
    let dwv = mu * SQRT_2 * phi0 * q.dv.mul_exp(-lk_v).value() - chi0 * wv;
    let f0 = PI * (db0 * wu - da0 * wv);
    let gh0 = PI * (-b0 * wu + a0 * wv);
    let df0 = PI * (db0 * dwu - da0 * dwv);
    let dgh0 = PI * (-b0 * dwu + a0 * dwv) - m43 * f0;
    let psi = &zs.psi;
    let m4 = mu.powi(4);
    let mut c = vec![0.0; n + 1];
    let mut d = vec![0.0; n + 1];
    c[0] = f0;
    c[1] = df0;
    d[0] = gh0 * m83;
    d[1] = dgh0 * m83;
    for k in 0..n - 1 {
        let kf = k as f64;
        let w = (kf + 2.0) * (kf + 1.0);
        c[k + 2] = (convolve(psi, &c, k) - (2.0 * kf + 1.0) * d[k]) / w;
        d[k + 2] = (convolve(psi, &d, k) - 2.0 * m4 * (kf + 1.0) * c[k + 1]) / w;
    }
    Ok(MaclaurinSolution {
        mu,
        n,
        c,
        d,
        radius: MACLAURIN_RADIUS,
        wronskian_target: target,
        iterations: 0,
    })
}

fn maclaurin_cache() -> &'static Mutex<HashMap<u64, std::sync::Arc<MaclaurinSolution>>> {
    static C: OnceLock<Mutex<HashMap<u64, std::sync::Arc<MaclaurinSolution>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The default-order solution for μ, shared between calls.
pub fn maclaurin_solution(mu: f64) -> Result<std::sync::Arc<MaclaurinSolution>> {
    let key = mu.to_bits();
    if let Some(s) = maclaurin_cache().lock().expect("cache lock").get(&key) {
        return Ok(s.clone());
    }
    let sol = std::sync::Arc::new(solve_maclaurin_fg(mu, default_maclaurin_n(mu))?);
    let mut cache = maclaurin_cache().lock().expect("cache lock");
    if cache.len() > 4096 {
        cache.clear();
    }
    cache.insert(key, sol.clone());
    Ok(sol)
}

/// U(-½μ², ±μt√2) and companions from the modified Airy-type form with
/// Maclaurin-series F and G; negative `t` goes through the reflection.
///
/// With X = μ^{4/3}ζ, Ĝ = G/μ^{8/3} and z-derivatives taken through
/// dz = μ√2 φ² dζ:
///
/// ```text
/// U  = K_U φ [Ai F + Ai' Ĝ]
/// U' = K_U/(μ√2 φ) [Ai (χF + F' + ζG) + Ai' (χĜ + μ^{4/3}F + Ĝ')]
/// ```
///
/// and V, V' the same with Bi and K_V in place of Ai and K_U.
pub fn eval_airy_modified(mu: f64, t: f64) -> Result<FunctionQuad> {
    let at = t.abs();
    check_turning_inputs(mu, at)?;
    let m = zeta_map(at)?;
    if m.zeta.abs() > MACLAURIN_RADIUS {
        return Err(Error::Domain(format!(
            "modified Airy form needs |zeta| <= {MACLAURIN_RADIUS}, got {}",
            m.zeta
        )));
    }
    let sol = maclaurin_solution(mu)?;
    let q = modified_with(&sol, &m)?;
    finish_sign(q, mu, t)
}

/// The modified form with a given Maclaurin solution at ζ(t) ≥ 0 side.
pub fn modified_with(sol: &MaclaurinSolution, m: &TurningPointMap) -> Result<FunctionQuad> {
    let mu = sol.mu;
    let (lk_u, lk_v) = modified_prefactors(mu)?;
    let [f, df, g, dg] = sol.eval(m.zeta);
    let m43 = mu.cbrt() * mu;
    let m83 = m43 * m43;
    let (gh, dgh) = (g / m83, dg / m83);
    let ld = -(mu * SQRT_2 * m.phi).ln();
    let asm = AiryAssembly {
        k_u: ScaledValue::from_log(lk_u, 1.0).scale_f64(m.phi),
        k_du: ScaledValue::from_log(lk_u + ld, 1.0),
        k_v: ScaledValue::from_log(lk_v, 1.0).scale_f64(m.phi),
        k_dv: ScaledValue::from_log(lk_v + ld, 1.0),
        a: f,
        b: gh,
        c: m.chi * f + df + m.zeta * g,
        d: m.chi * gh + m43 * f + dgh,
    };
    let err = sol.tail(m.zeta).max(f64::EPSILON);
    Ok(asm.quad(&airy_eval(m43 * m.zeta), RegionTag::AiryPlus, err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elem::{eval_region_21, eval_region_23};
    use crate::poly::{q, qi};
    use crate::refseries::{log_gamma, uv_series};
    use proptest::prelude::*;

    fn rel(x: f64, y: f64) -> f64 {
        ((x - y) / y).abs()
    }

    fn oracle(mu: f64, t: f64) -> (FunctionQuad, f64, f64) {
        let (a, z) = (-0.5 * mu * mu, mu * t * SQRT_2);
        (uv_series(a, z).unwrap(), a, z)
    }

    #[test]
    fn airy_at_origin_matches_gamma_closed_forms() {
        let q = airy_eval(0.0);
        let ai0 = (-(2.0 / 3.0) * 3f64.ln() - log_gamma(2.0 / 3.0).unwrap().log_abs).exp();
        let dai0 = -(-(1.0 / 3.0) * 3f64.ln() - log_gamma(1.0 / 3.0).unwrap().log_abs).exp();
        assert!(rel(q.ai.value(), ai0) < 1e-14);
        assert!(rel(q.dai.value(), dai0) < 1e-14);
        assert!(rel(q.ai.value(), 0.355_028_053_9) < 1e-10);
    }

    #[test]
    fn airy_reference_values() {
        // x, Ai, Ai', Bi, Bi'
        let cases = [
            (
                -10.0,
                0.040_241_238_486_443_19,
                0.996_265_044_132_790_1,
                -0.314_679_829_643_838_6,
                0.119_414_113_399_909_2,
            ),
            (
                -8.25,
                -0.254_536_320_996_560_6,
                0.608_518_296_887_413_9,
                -0.214_480_525_149_236,
                -0.737_790_825_172_635_9,
            ),
            (
                -3.0,
                -0.378_814_293_677_658_1,
                0.314_583_769_216_598_8,
                -0.198_289_626_374_926_5,
                -0.675_611_222_685_258_5,
            ),
            (
                2.0,
                0.034_924_130_423_274_38,
                -0.053_090_384_433_653_63,
                3.298_094_999_978_215,
                4.100_682_049_932_89,
            ),
            (
                8.25,
                2.283_713_944_482_228e-8,
                -6.626_952_666_987_631e-8,
                2_427_018.456_122_873_6,
                6_895_457.386_769_016,
            ),
            (
                12.0,
                1.393_184_688_875_361e-13,
                -4.854_736_554_985_308e-13,
                329_807_225_829.074_2,
                1_135_507_502_443.370_7,
            ),
        ];
        for (x, ai, dai, bi, dbi) in cases {
            let q = airy_eval(x);
            for (got, want) in [(q.ai, ai), (q.dai, dai), (q.bi, bi), (q.dbi, dbi)] {
                assert!(
                    rel(got.value(), want) < 2e-13,
                    "x={x}: {} vs {want}",
                    got.value()
                );
            }
        }
    }

    #[test]
    fn airy_wronskian_on_grid() {
        for i in 0..=80 {
            let x = -10.0 + 0.25 * i as f64;
            let w = airy_eval(x).wronskian().value();
            assert!(rel(w, 1.0 / PI) < 1e-12, "x={x}: {w}");
        }
        for x in [-40.0, -15.0, 15.0, 40.0, 300.0] {
            assert!(
                rel(airy_eval(x).wronskian().value(), 1.0 / PI) < 1e-12,
                "x={x}"
            );
        }
    }

    #[test]
    fn map_series_reproduces_printed_rationals() {
        let ms = map_series(&qi(0), 6);
        assert_eq!(&ms.e[..4], &[qi(0), qi(1), q(-1, 10), q(11, 350)]);
        let printed = [q(-9, 280), q(7, 150), q(-1359, 26950), q(392, 8125)];
        for (r, p) in ms.r.iter().zip(printed) {
            assert_eq!(r.clone() / qi(2), p);
        }
    }

    #[test]
    fn float_map_series_matches_exact() {
        let exact = map_series(&qi(0), 30);
        let float = map_series(&0.0f64, 30);
        for k in 0..30 {
            for (x, y) in [
                (&exact.r, &float.r),
                (&exact.p, &float.p),
                (&exact.e, &float.e),
            ] {
                let ex = rational_to_f64(&x[k]);
                assert!((y[k] - ex).abs() <= 1e-13 * ex.abs().max(1e-300), "k={k}");
            }
        }
    }

    #[test]
    fn turning_point_values() {
        let m = zeta_map(1.0).unwrap();
        assert_eq!(m.zeta, 0.0);
        assert!(rel(m.phi, 2f64.powf(-1.0 / 6.0)) < 1e-15);
        assert!(rel(m.phi, 0.890_898_718_1) < 1e-10);
        let psi0 = psi_function(1.0).unwrap();
        assert!(rel(psi0, -9.0 * CBRT_2 / 280.0) < 1e-15);
        let m = zeta_map(0.5).unwrap();
        assert!(m.zeta < 0.0);
        assert_eq!(m.zeta, -(1.5 * eta_of(0.5)).powf(2.0 / 3.0));
        assert!(zeta_map(-1.0).is_err());
    }

    #[test]
    fn inversion_round_trip() {
        let z = zeta_map(1.02).unwrap().zeta;
        assert!((t_of_zeta(z) - 1.02).abs() < 1e-12);
        for t in [0.6, 0.9, 0.999, 1.001, 1.3, 1.5] {
            assert!((t_of_zeta(zeta_of(t)) - t).abs() < 1e-13, "t={t}");
        }
    }

    #[test]
    fn series_and_closed_forms_agree_at_the_seam() {
        for target in [-MAP_SERIES_RADIUS, MAP_SERIES_RADIUS] {
            let t = t_of_zeta(target);
            let zeta = zeta_of(t);
            let zs = zeta_series();
            let phi = (zeta / ((t - 1.0) * (t + 1.0))).sqrt().sqrt();
            let chi = (1.0 - 2.0 * t * phi.powi(6)) / (4.0 * zeta);
            assert!(rel(series::eval(&zs.phi, zeta), phi) < 1e-12);
            assert!((series::eval(&zs.chi, zeta) - chi).abs() < 1e-12);
            let w = (t - 1.0) * (t + 1.0);
            let psi = 5.0 / (16.0 * zeta * zeta) - (3.0 * t * t + 2.0) * zeta / (4.0 * w * w * w);
            assert!((series::eval(&zs.psi, zeta) - psi).abs() < 1e-11);
        }
    }

    #[test]
    fn leading_coefficient_functions() {
        for t in [0.2, 0.5, 1.5, 2.0, 4.0] {
            let c = airy_coeffs(10.0, t, 4).unwrap();
            assert!((c.a_s[0] - 1.0).abs() < 1e-15);
            assert!((c.d_s[0] - 1.0).abs() < 1e-15);
        }
        assert!(matches!(
            airy_coeffs(10.0, 1.1, 4),
            Err(Error::TooCloseToTurningPoint { .. })
        ));
    }

    #[test]
    fn first_b_coefficient_matches_direct_form() {
        // At t = 2: √ζ b_0 = -(u_1(2)/3^{3/2} + α_1 ζ^{-3/2}) with u_1 evaluated exactly.
        let t = 2.0;
        let c = airy_coeffs(10.0, t, 0).unwrap();
        let u1 = crate::exactpoly::CoeffTables::build(2).unwrap().u[1].eval(&qi(2));
        let alpha1 = rational_to_f64(&alpha_coeffs(1)[1]);
        let z = c.zeta;
        let direct = -(rational_to_f64(&u1) / 27f64.sqrt() + alpha1 * z.powf(-1.5)) / z.sqrt();
        assert!(rel(c.b_s[0], direct) < 1e-14);
    }

    #[test]
    fn printed_d_closed_form_differs_by_sign() {
        // The closed form d_s = -Σ α_m ζ^{-3m/2} v_{2s-m}/(t²-1)^{3(2s-m)/2} gives
        // d_0 = -1; the derivative relation gives +1. The magnitudes agree.
        let t = 2.5;
        let c = airy_coeffs(10.0, t, 2).unwrap();
        let tb = tables();
        let w = (t * t - 1.0f64).powf(1.5);
        for s in 0..=2 {
            let closed: f64 = (0..=2 * s)
                .map(|m| {
                    -tb.alpha[m] * c.zeta.powf(-1.5 * m as f64) * horner(&tb.v[2 * s - m], t)
                        / w.powi((2 * s - m) as i32)
                })
                .sum();
            assert!(
                rel(-closed, c.d_s[s]) < 1e-12,
                "s={s}: {closed} vs {}",
                c.d_s[s]
            );
        }
    }

    #[test]
    fn olver_form_matches_elementary_and_series() {
        let (r, a, z) = oracle(5.0, 1.5);
        let q = eval_airy_olver(5.0, 1.5, 4).unwrap();
        assert!(q.envelope_error(&r, a, z) < 1e-13);
        // At this point the elementary expansion is the less accurate of the two.
        for s in [5, 8, 12] {
            let (e21, _) = eval_region_21(5.0, 1.5, s).unwrap();
            let gap = rel(q.u.value(), e21.u.value());
            assert!(
                gap < 1.5 * e21.envelope_error(&r, a, z) && gap < 2e-6,
                "S={s}"
            );
        }
        let (r, a, z) = oracle(5.0, 0.5);
        let q = eval_airy_olver(5.0, 0.5, 4).unwrap();
        assert!(q.envelope_error(&r, a, z) < 1e-13);
        let e23 = eval_region_23(5.0, 0.5, 5).unwrap();
        let gap = q.envelope_error(&e23, a, z);
        assert!(gap < 1.5 * e23.envelope_error(&r, a, z) && gap < 1e-5);
        let (r, a, z) = oracle(5.0, -1.3);
        let q = eval_airy_olver(5.0, -1.3, 4).unwrap();
        assert_eq!(q.region, RegionTag::AiryMinus);
        assert!(q.envelope_error(&r, a, z) < 1e-13);
    }

    #[test]
    fn coefficient_wronskian_identity() {
        let mu = 10.0;
        let c = airy_coeffs(mu, 2.0, 6).unwrap();
        let nz = NormalizerSet::new(mu).unwrap();
        let lhs = c.a * c.d - c.b * c.c / mu.powi(4);
        let rhs = (nz.log_gamma_half_mu2 - 2.0 * nz.log_g).exp() / (2.0 * mu * SQRT_PI);
        assert!((lhs - rhs).abs() < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn maclaurin_normalization_and_residual() {
        for mu in [2.0, 5.0, 10.0] {
            let s = solve_maclaurin_fg(mu, default_maclaurin_n(mu)).unwrap();
            assert!(
                rel(s.wronskian_at_origin(), s.wronskian_target) < 1e-12,
                "mu={mu}"
            );
            for zeta in [-1.0, -0.5, 0.0, 0.5, 1.0] {
                assert!(
                    s.system_residual(zeta) < 1e-11 * mu.powi(4),
                    "mu={mu} zeta={zeta}"
                );
            }
        }
        let s = solve_maclaurin_fg(5.0, 40).unwrap();
        for zeta in [-0.5, 0.0, 0.5] {
            assert!(s.system_residual(zeta) < 1e-11 * 625.0);
        }
    }

    #[test]
    fn backward_sweep_is_stable_in_n() {
        // F and G on |ζ| ≤ 1, not single coefficients: the late c_k are
        // below 1e-20 and their relative drift says nothing.
        for mu in [4.6, 5.0, 7.0, 10.0] {
            let n = default_maclaurin_n(mu);
            let a = solve_maclaurin_fg(mu, n).unwrap();
            let b = solve_maclaurin_fg(mu, n + 10).unwrap();
            let (mut fm, mut gm, mut df, mut dg) = (0f64, 0f64, 0f64, 0f64);
            for k in 0..=20 {
                let z = -1.0 + 0.1 * k as f64;
                let (x, y) = (a.eval(z), b.eval(z));
                fm = fm.max(x[0].abs());
                gm = gm.max(x[2].abs());
                df = df.max((x[0] - y[0]).abs());
                dg = dg.max((x[2] - y[2]).abs());
            }
            assert!(
                df / fm < 1e-13 && dg / gm < 1e-13,
                "mu={mu}: {} {}",
                df / fm,
                dg / gm
            );
        }
    }

    #[test]
    fn wronskian_target_expansion() {
        let mu = 20.0f64;
        let target = maclaurin_wronskian_target(mu).unwrap() / mu.powi(4);
        let two_terms = 1.0 + 1.0 / (12.0 * mu * mu) + 1.0 / (288.0 * mu.powi(4));
        assert!((target - two_terms).abs() < 0.05 / mu.powi(6));
        let s = maclaurin_solution(30.0).unwrap();
        assert!((s.c[0] - 1.0 - 1.0 / (24.0 * 900.0)).abs() < 1e-6);
    }

    #[test]
    fn modified_form_wronskian() {
        for mu in [2.0, 5.0, 10.0] {
            for t in [0.8, 0.9, 1.0, 1.1, 1.2] {
                let q = eval_airy_modified(mu, t).unwrap();
                assert!(q.wronskian_residual() < 1e-9, "mu={mu} t={t}");
            }
        }
    }

    #[test]
    fn modified_form_against_series() {
        for (mu, t) in [
            (5.0, 1.0),
            (5.0, 0.8),
            (5.0, 1.2),
            (2.0, 1.0),
            (6.5, -1.05),
            (5.0, -0.9),
        ] {
            let (r, a, z) = oracle(mu, t);
            let q = eval_airy_modified(mu, t).unwrap();
            assert!(q.envelope_error(&r, a, z) < 1e-12, "mu={mu} t={t}");
        }
        let (r, _, _) = oracle(5.0, 1.0);
        let q = eval_airy_modified(5.0, 1.0).unwrap();
        for (x, y) in [(q.u, r.u), (q.du, r.du), (q.v, r.v), (q.dv, r.dv)] {
            assert!(rel(x.value(), y.value()) < 1e-8);
        }
    }

    #[test]
    fn modified_and_olver_forms_overlap() {
        for t in [1.3, 1.6, 0.55] {
            let a = eval_airy_modified(5.0, t).unwrap();
            let b = eval_airy_olver(5.0, t, 4).unwrap();
            let (az, zz) = (-12.5, 5.0 * t * SQRT_2);
            assert!(a.envelope_error(&b, az, zz) < 1e-8, "t={t}");
        }
    }

    #[test]
    fn ratio_of_forms_is_h() {
        let mu = 10.0;
        let sol = maclaurin_solution(mu).unwrap();
        let c = airy_coeffs(mu, 1.7, 9).unwrap();
        let [f, _, _, _] = sol.eval(c.zeta);
        let h = h_ratio(mu).unwrap();
        assert!(rel(f / c.a, h) < 1e-13);
        assert!(rel(f / c.a, h_ratio_series(mu)) < 1e-12);
    }

    #[test]
    fn both_coefficient_functions_share_h() {
        let mu = 25.0;
        let sol = maclaurin_solution(mu).unwrap();
        let hs = h_ratio_series(mu);
        for target in [-0.8, 0.8] {
            let t = t_of_zeta(target);
            let c = airy_coeffs(mu, t, 9).unwrap();
            let [f, _, g, _] = sol.eval(c.zeta);
            assert!(rel(f / c.a, g / c.b) < mu.powi(-8));
            assert!(rel(f / c.a, hs) < mu.powi(-8));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn zeta_is_increasing(t in -0.95f64..3.0, dt in 1e-6f64..0.5) {
            let (a, b) = (zeta_of(t), zeta_of(t + dt));
            prop_assert!(b > a);
            prop_assert_eq!(a.signum(), (t - 1.0).signum());
        }

        #[test]
        fn modified_form_keeps_wronskian(mu in 5.0f64..60.0, t in 0.8f64..1.2) {
            let q = eval_airy_modified(mu, t).unwrap();
            prop_assert!(q.wronskian_residual() < 1e-9);
        }
    }
}
