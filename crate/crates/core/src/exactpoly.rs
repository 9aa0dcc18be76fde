//! Exact rational generation of every coefficient family used by the
//! expansions: φ_s, ψ_s in τ; u_s, r_s, v_s in t; the constants g_s, γ_s,
//! α_m, β_m; the saddle-point coefficients f_k(λ) and the polynomials P_n(a).

use crate::error::{Error, Result};
use crate::poly::{q, qi, rational_to_string, Rational, RationalPoly, Var};
use crate::series::{self, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::json;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// φ_0..φ_S from
/// φ_{s+1} = -4τ²(τ+1)² φ_s' - ¼ ∫_0^τ (20u²+20u+3) φ_s(u) du.
pub fn generate_phi(order: usize) -> Vec<RationalPoly> {
    let w = RationalPoly::from_ints(Var::Tau, &[0, 0, 4, 8, 4]); // 4τ²(τ+1)²
    let k = RationalPoly::from_ints(Var::Tau, &[3, 20, 20]);
    let quarter = q(1, 4);
    let mut out = vec![RationalPoly::one(Var::Tau)];
    for s in 0..order {
        let p = &out[s];
        let a = &w * &p.derivative();
        let b = (&k * p).integral().scale(&quarter);
        out.push(-&(&a + &b));
    }
    out
}

/// ψ_s = φ_s + 2τ(τ+1)(2τ+1) φ_{s-1} + 8τ²(τ+1)² φ'_{s-1}.
pub fn generate_psi(order: usize) -> Vec<RationalPoly> {
    psi_from_phi(&generate_phi(order))
}

pub fn psi_from_phi(phi: &[RationalPoly]) -> Vec<RationalPoly> {
    let m = RationalPoly::from_ints(Var::Tau, &[0, 2, 6, 4]);
    let w = RationalPoly::from_ints(Var::Tau, &[0, 0, 8, 16, 8]);
    let mut out = vec![RationalPoly::one(Var::Tau)];
    for s in 1..phi.len() {
        let prev = &phi[s - 1];
        let x = &(&m * prev) + &(&w * &prev.derivative());
        out.push(&phi[s] + &x);
    }
    out
}

/// Olver's u_s, r_s and v_s for s = 0..=order.
///
/// u_s solves (t²-1)u_s' - 3st u_s = r_{s-1}. Writing u_s = Σ c_m t^m the
/// coefficient of t^m reads (m-1-3s)c_{m-1} - (m+1)c_{m+1} = [t^m] r_{s-1},
/// solved downward from c_{3s}. That top coefficient is the free homogeneous
/// constant: for odd s it is pinned by the t^0 equation, for even s the
/// homogeneous solution (t²-1)^{3s/2} is a polynomial and it is set to zero,
/// which gives the degree 3s-2.
pub fn generate_uv(
    order: usize,
) -> Result<(Vec<RationalPoly>, Vec<RationalPoly>, Vec<RationalPoly>)> {
    let t = Var::T;
    let mut u = vec![RationalPoly::one(t)];
    let mut r = vec![RationalPoly::new(t, vec![q(1, 4), qi(0), q(3, 8)])];
    let three_t2_2 = RationalPoly::from_ints(t, &[2, 0, 3]);
    let t2m1 = RationalPoly::from_ints(t, &[-1, 0, 1]);
    for s in 1..=order {
        let us = solve_u(s, &r[s - 1])?;
        let check =
            &(&t2m1 * &us.derivative()) - &(&RationalPoly::monomial(t, qi(3 * s as i64), 1) * &us);
        if check != r[s - 1] {
            return Err(Error::Internal(format!(
                "non-polynomial residual for u_{s}"
            )));
        }
        let rs = &(&(&three_t2_2 * &us)
            - &(&RationalPoly::monomial(t, qi(12 * (s as i64 + 1)), 1) * &r[s - 1]))
            + &(&t2m1 * &r[s - 1].derivative()).scale(&qi(4));
        u.push(us);
        r.push(rs.scale(&q(1, 8)));
    }
    let half_t = RationalPoly::monomial(t, q(1, 2), 1);
    let mut v = Vec::with_capacity(order + 1);
    for s in 0..=order {
        let mut vs = u[s].clone();
        if s >= 1 {
            vs = &vs + &(&half_t * &u[s - 1]);
        }
        if s >= 2 {
            vs = &vs - &r[s - 2];
        }
        v.push(vs);
    }
    Ok((u, r, v))
}

fn solve_u(s: usize, rhs: &RationalPoly) -> Result<RationalPoly> {
    let top = 3 * s;
    // Each coefficient is tracked as p + q·x with x = c_top.
    let mut c: Vec<(Rational, Rational)> = vec![(qi(0), qi(0)); top + 2];
    c[top] = (qi(0), qi(1));
    for m in (1..=top).rev() {
        let den = qi(m as i64 - 1 - 3 * s as i64);
        let (p1, q1) = c[m + 1].clone();
        let k = qi(m as i64 + 1);
        c[m - 1] = ((rhs.coeff(m) + &k * p1) / &den, (&k * q1) / &den);
    }
    // t^0 equation: -c_1 = [t^0] rhs.
    let (p1, q1) = c[1].clone();
    let x = if q1.is_zero() {
        qi(0)
    } else {
        -(rhs.coeff(0) + p1) / q1
    };
    let coeffs = c.into_iter().map(|(p, q)| p + q * &x).collect();
    Ok(RationalPoly::new(Var::T, coeffs))
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2).
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![qi(1)];
    for m in 1..=n {
        // Σ_{k=0}^{m} C(m+1,k) B_k = 0
        let mut s = qi(0);
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            s += Rational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-s / qi(m as i64 + 1));
    }
    b
}

/// Coefficients γ_s of Γ(½+z) ~ √(2π) e^{-z} z^z Σ γ_s z^{-s}.
pub fn gamma_coeffs(order: usize) -> Vec<Rational> {
    let n = order + 1;
    let b = bernoulli_numbers(n + 1);
    // ln of the series is Σ_k c_k z^{1-2k}, c_k = B_{2k}(½)/(2k(2k-1)),
    // B_n(½) = -(1 - 2^{1-n}) B_n.
    let mut l = vec![qi(0); n];
    let mut k = 1;
    while 2 * k - 1 < n {
        let nn = 2 * k;
        let two_pow = Rational::new(BigInt::one(), BigInt::one() << (nn - 1));
        let bhalf = -(qi(1) - two_pow) * &b[nn];
        l[2 * k - 1] = bhalf / qi((nn * (nn - 1)) as i64);
        k += 1;
    }
    series::exp0(&l, n)
}

/// α_m, m = 0..=order.
pub fn alpha_coeffs(order: usize) -> Vec<Rational> {
    let mut a = vec![qi(1)];
    for m in 0..order as i64 {
        let next = a[m as usize].clone() * qi((6 * m + 5) * (6 * m + 3) * (6 * m + 1))
            / qi(144 * (m + 1) * (2 * m + 1));
        a.push(next);
    }
    a
}

/// β_m = -((6m+1)/(6m-1)) α_m.
pub fn beta_coeffs(order: usize) -> Vec<Rational> {
    alpha_coeffs(order)
        .into_iter()
        .enumerate()
        .map(|(m, a)| -q(6 * m as i64 + 1, 6 * m as i64 - 1) * a)
        .collect()
}

/// The scalar families g, γ, α, β.
#[derive(Debug, Clone, PartialEq)]
pub struct Constants {
    pub g: Vec<Rational>,
    pub gamma_coeffs: Vec<Rational>,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

/// g_s is the leading coefficient [t^{3s}] u_s: as t → ∞ the identity
/// u_s(t) ~ (t²-1)^{3s/2} Σ_j g_{s-j} φ_j(τ) keeps only the j = 0 term.
pub fn g_from_u(u: &[RationalPoly]) -> Vec<Rational> {
    u.iter().enumerate().map(|(s, p)| p.coeff(3 * s)).collect()
}

pub fn constants(order: usize) -> Result<Constants> {
    let (u, _, _) = generate_uv(order)?;
    Ok(Constants {
        g: g_from_u(&u),
        gamma_coeffs: gamma_coeffs(order),
        alpha: alpha_coeffs(order),
        beta: beta_coeffs(order),
    })
}

/// P_0..P_N with P_{n+1} = (n+½)P_n + a·n·P_{n-1}.
pub fn pn_polynomials(n: usize) -> Vec<RationalPoly> {
    let mut p = vec![
        RationalPoly::one(Var::A),
        RationalPoly::constant(Var::A, q(1, 2)),
    ];
    let a = RationalPoly::monomial(Var::A, qi(1), 1);
    for k in 1..n {
        let next = &p[k].scale(&q(2 * k as i64 + 1, 2)) + &(&a * &p[k - 1]).scale(&qi(k as i64));
        p.push(next);
    }
    p.truncate(n + 1);
    p
}

/// All generated families up to order S.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTables {
    pub order: usize,
    pub phi: Vec<RationalPoly>,
    pub psi: Vec<RationalPoly>,
    pub u: Vec<RationalPoly>,
    pub r: Vec<RationalPoly>,
    pub v: Vec<RationalPoly>,
    pub g: Vec<Rational>,
    pub gamma_coeffs: Vec<Rational>,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

impl CoeffTables {
    pub fn build(order: usize) -> Result<Self> {
        let phi = generate_phi(order);
        let psi = psi_from_phi(&phi);
        let (u, r, v) = generate_uv(order)?;
        let g = g_from_u(&u);
        Ok(CoeffTables {
            order,
            phi,
            psi,
            u,
            r,
            v,
            g,
            gamma_coeffs: gamma_coeffs(order),
            alpha: alpha_coeffs(order),
            beta: beta_coeffs(order),
        })
    }
}

/// `{"schemaVersion":1,"family":..,"order":..,"coeffs":[..]}`
pub fn family_json(family: &str, order: usize, coeffs: &[Rational]) -> String {
    let c: Vec<String> = coeffs.iter().map(rational_to_string).collect();
    json!({"schemaVersion": 1, "family": family, "order": order, "coeffs": c}).to_string()
}

// ---------------------------------------------------------------------------
// Saddle-point coefficients f_k(λ).

/// Element p + q√σ of the quadratic extension Q(√σ).
#[derive(Debug, Clone, PartialEq)]
pub struct Surd {
    pub p: Rational,
    pub q: Rational,
    pub sigma: Rational,
}

impl Surd {
    pub fn rational(x: Rational, sigma: &Rational) -> Self {
        Surd {
            p: x,
            q: qi(0),
            sigma: sigma.clone(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        crate::poly::rational_to_f64(&self.p)
            + crate::poly::rational_to_f64(&self.q)
                * crate::poly::rational_to_f64(&self.sigma).sqrt()
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        Surd {
            p: self.p + o.p,
            q: self.q + o.q,
            sigma: self.sigma,
        }
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        Surd {
            p: self.p - o.p,
            q: self.q - o.q,
            sigma: self.sigma,
        }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let p = &self.p * &o.p + &self.q * &o.q * &self.sigma;
        let q = &self.p * &o.q + &self.q * &o.p;
        Surd {
            p,
            q,
            sigma: self.sigma,
        }
    }
}

impl Div for Surd {
    type Output = Surd;
    fn div(self, o: Surd) -> Surd {
        let n = &o.p * &o.p - &o.q * &o.q * &o.sigma;
        let conj = Surd {
            p: o.p / &n,
            q: -o.q / &n,
            sigma: o.sigma,
        };
        self * conj
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            p: -self.p,
            q: -self.q,
            sigma: self.sigma,
        }
    }
}

impl Scalar for Surd {
    fn from_ratio_like(&self, num: i64, den: i64) -> Self {
        Surd::rational(q(num, den), &self.sigma)
    }
    fn is_zero_value(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

/// Data of the f_k(λ) computation at one σ.
#[derive(Debug, Clone)]
pub struct AppendixPipeline {
    pub sigma: Rational,
    pub lambda: Rational,
    pub w0: Rational,
    /// Taylor coefficients of w(t) about t = λ.
    pub d: Vec<Surd>,
    /// `a_coeffs[k][n]` = a_n^{(k)}(λ).
    pub a_coeffs: Vec<Vec<Surd>>,
    pub fk: Vec<Rational>,
    /// The constant A = ½w0² + w0 - λ ln w0 - λ + λ ln λ.
    pub big_a: f64,
    pub pn: Vec<RationalPoly>,
}

/// Run the d_k → a_n → f_k pipeline in exact arithmetic over Q(√σ).
///
/// w(t) maps the saddle point w0 to t = λ; with u = t - λ it satisfies
/// (w² + w - λ)(λ + u) w' = w u. The leading slope is d_1 = (2σ-1)/√σ,
/// the positive root of d_1² = w0/(λ(1+2w0)).
pub fn appendix_fk(k_max: usize, sigma: &Rational) -> Result<AppendixPipeline> {
    let half = q(1, 2);
    if !(sigma > &half && sigma < &qi(1)) {
        return Err(Error::Domain(format!(
            "sigma = {} must lie in (1/2, 1)",
            rational_to_string(sigma)
        )));
    }
    let two_s_1 = qi(2) * sigma - qi(1);
    let w0 = (qi(1) - sigma) / &two_s_1;
    let lambda = sigma * (qi(1) - sigma) / (&two_s_1 * &two_s_1);
    let sr = |x: Rational| Surd::rational(x, sigma);
    let n_d = 2 * k_max + 4;
    let n_a = 2 * k_max + 3;

    let mut d = vec![
        sr(w0.clone()),
        Surd {
            p: qi(0),
            q: &two_s_1 / sigma,
            sigma: sigma.clone(),
        },
    ];
    let lam_plus_u = vec![sr(lambda.clone()), sr(qi(1))];
    let pivot_base = sr(lambda.clone() * (qi(2) * &w0 + qi(1))) * d[1].clone();
    for m in 2..=n_d {
        let mut trial = d.clone();
        trial.push(sr(qi(0)));
        let n = m + 1;
        let w2 = series::mul(&trial, &trial, n);
        let poly = series::add(&series::add(&w2, &trial, n), &[sr(-lambda.clone())], n);
        let wp = series::derivative(&trial);
        let lhs = series::mul(&series::mul(&poly, &lam_plus_u, n), &wp, n);
        let rhs = trial[m - 1].clone();
        let pivot = pivot_base.clone() * sr(qi(m as i64 + 1));
        d.push((rhs - lhs[m].clone()) / pivot);
    }

    // f = (√σ/(2σ-1)) · √((1 + u/λ) w0 / w) · w'
    let n = n_a + 1;
    let w_over_w0: Vec<Surd> = d.iter().map(|c| c.clone() / sr(w0.clone())).collect();
    let ratio = series::mul(
        &[sr(qi(1)), sr(qi(1) / &lambda)],
        &series::inv(&w_over_w0, n),
        n,
    );
    let root = series::pow_unit(&ratio, 1, 2, n);
    let wp = series::derivative(&d);
    let pref = Surd {
        p: qi(0),
        q: qi(1) / &two_s_1,
        sigma: sigma.clone(),
    };
    let a0: Vec<Surd> = series::mul(&root, &wp, n)
        .into_iter()
        .map(|c| c * pref.clone())
        .collect();

    let mut a_coeffs = vec![a0];
    for k in 0..k_max {
        let prev = &a_coeffs[k];
        let len = prev.len().saturating_sub(2);
        let next: Vec<Surd> = (0..len)
            .map(|nn| {
                sr(&lambda * qi(nn as i64 + 1)) * prev[nn + 2].clone()
                    + sr(q(2 * nn as i64 + 1, 2)) * prev[nn + 1].clone()
            })
            .collect();
        a_coeffs.push(next);
    }
    let mut fk = Vec::with_capacity(k_max + 1);
    for (k, a) in a_coeffs.iter().enumerate() {
        let f = a[0].clone();
        if !f.is_rational() {
            return Err(Error::Internal(format!("f_{k} has an irrational part")));
        }
        fk.push(f.p);
    }
    let lf = crate::poly::rational_to_f64(&lambda);
    let wf = crate::poly::rational_to_f64(&w0);
    let big_a = 0.5 * wf * wf + wf - lf * wf.ln() - lf + lf * lf.ln();
    Ok(AppendixPipeline {
        sigma: sigma.clone(),
        lambda,
        w0,
        d,
        a_coeffs,
        fk,
        big_a,
        pn: pn_polynomials(2 * k_max + 2),
    })
}

impl AppendixPipeline {
    /// φ̃_k(σ) = (-1)^k (2λ)^k f_k(λ).
    pub fn phi_tilde(&self, k: usize) -> Rational {
        let two_l = qi(2) * &self.lambda;
        let mut v = self.fk[k].clone() * pow_rational(&two_l, k);
        if k % 2 == 1 {
            v = -v;
        }
        v
    }

    /// ρ = (2σ-1)²/σ.
    pub fn rho(&self) -> Rational {
        let a = qi(2) * &self.sigma - qi(1);
        &a * &a / &self.sigma
    }
}

fn pow_rational(x: &Rational, k: usize) -> Rational {
    (0..k).fold(qi(1), |acc, _| acc * x)
}

/// f_k/ρ^k as a polynomial of degree 2k in σ, recovered by exact
/// interpolation of the pipeline at 2k+1 rational σ, and confirmed at one
/// more point.
pub fn fk_over_rho_poly(k: usize) -> Result<RationalPoly> {
    let npts = 2 * k + 2;
    let denom = 4 * (k as i64 + 1) + 2;
    let mut xs = Vec::with_capacity(npts);
    let mut ys = Vec::with_capacity(npts);
    for j in 1..=npts as i64 {
        let s = q(1, 2) + q(j, denom);
        let pipe = appendix_fk(k, &s)?;
        let rho_k = pow_rational(&pipe.rho(), k);
        ys.push(pipe.fk[k].clone() / rho_k);
        xs.push(s);
    }
    let p = lagrange(&xs[..npts - 1], &ys[..npts - 1]);
    if p.eval(&xs[npts - 1]) != ys[npts - 1] {
        return Err(Error::Internal(format!(
            "f_{k}/rho^{k} is not a degree-{} polynomial",
            2 * k
        )));
    }
    Ok(p)
}

fn lagrange(xs: &[Rational], ys: &[Rational]) -> RationalPoly {
    let mut acc = RationalPoly::zero(Var::Sigma);
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = RationalPoly::one(Var::Sigma);
        let mut den = qi(1);
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPoly::new(Var::Sigma, vec![-xj.clone(), qi(1)]);
                den *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / den));
    }
    acc
}

/// Reduce a rational to lowest terms with positive denominator (already the
/// representation invariant of `Rational`; exposed for tests).
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn phi_low_orders() {
        let phi = generate_phi(3);
        assert_eq!(phi[0], RationalPoly::one(Var::Tau));
        assert_eq!(phi[1].coeffs(), &[qi(0), q(-3, 4), q(-5, 2), q(-5, 3)]);
        assert_eq!(phi[2].eval(&qi(1)), q(53017, 288));
        assert_eq!(phi[3].lowest_power(), Some(3));
    }

    #[test]
    fn psi_low_orders() {
        let psi = generate_psi(2);
        let p1 = RationalPoly::from_ints(Var::Tau, &[0, 15, 42, 28]).scale(&q(1, 12));
        assert_eq!(psi[1], p1);
        let p2 = RationalPoly::from_ints(Var::Tau, &[0, 0, 1215, 9684, 23028, 21840, 7280])
            .scale(&q(-1, 288));
        assert_eq!(psi[2], p2);
    }

    #[test]
    fn olver_u_v() {
        let (u, _, v) = generate_uv(4).unwrap();
        assert_eq!(u[1].coeffs(), &[qi(0), q(-1, 4), qi(0), q(1, 24)]);
        assert_eq!(
            u[2],
            RationalPoly::from_ints(Var::T, &[145, 0, 249, 0, -9]).scale(&q(1, 1152))
        );
        assert_eq!(v[0], RationalPoly::one(Var::T));
        assert_eq!(v[1].coeffs(), &[qi(0), q(1, 4), qi(0), q(1, 24)]);
        assert_eq!(u[3].degree(), 9);
        assert_eq!(u[4].degree(), 10);
    }

    #[test]
    fn scalar_constants() {
        let c = constants(5).unwrap();
        assert_eq!(
            c.g[..6],
            [
                qi(1),
                q(1, 24),
                qi(0),
                q(-2021, 207360),
                qi(0),
                q(5149591, 418037760)
            ]
        );
        assert_eq!(
            c.gamma_coeffs[..4],
            [qi(1), q(-1, 24), q(1, 1152), q(1003, 414720)]
        );
        assert_eq!(c.alpha[1], q(5, 48));
        assert_eq!(c.beta[0], qi(1));
        assert_eq!(c.beta[1], q(-7, 5) * q(5, 48));
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[8], q(-1, 30));
        assert_eq!(b[7], qi(0));
    }

    #[test]
    fn pn_low_orders() {
        let p = pn_polynomials(3);
        assert_eq!(p[0].coeffs(), &ints(&[1])[..]);
        assert_eq!(p[1].coeffs(), &[q(1, 2)]);
        assert_eq!(p[2].coeffs(), &[q(3, 4), qi(1)]);
        assert_eq!(p[3].coeffs(), &[q(15, 8), q(7, 2)]);
    }

    #[test]
    fn pipeline_at_three_quarters() {
        let s = q(3, 4);
        let p = appendix_fk(3, &s).unwrap();
        assert_eq!(p.fk[0], qi(1));
        assert_eq!(p.fk[1], q(-11, 288));
        // d_1² = w0/(λ(1+2w0))
        let d1sq = p.d[1].clone() * p.d[1].clone();
        assert!(d1sq.is_rational());
        assert_eq!(d1sq.p, &p.w0 / (&p.lambda * (qi(1) + qi(2) * &p.w0)));
        assert!(p.d[1].to_f64() > 0.0);
        let phi = generate_phi(3);
        for k in 0..=3 {
            assert_eq!(p.phi_tilde(k), phi[k].eval(&(&s - qi(1))));
        }
    }

    #[test]
    fn pipeline_rejects_bad_sigma() {
        assert!(appendix_fk(1, &q(1, 2)).is_err());
        assert!(appendix_fk(1, &qi(1)).is_err());
    }

    #[test]
    fn f_family_matches_printed_f1() {
        let p = fk_over_rho_poly(1).unwrap();
        assert_eq!(
            p,
            RationalPoly::from_ints(Var::Sigma, &[-1, -10, 20]).scale(&q(-1, 24))
        );
    }

    #[test]
    fn json_shape() {
        let phi = generate_phi(1);
        let s = family_json("phi", 1, phi[1].coeffs());
        assert_eq!(
            s,
            r#"{"schemaVersion":1,"family":"phi","order":1,"coeffs":["0","-3/4","-5/2","-5/3"]}"#
        );
    }
}
