//! Jacobi-type functions `𝔓` on SU(1,1).
//!
//! * finite-dimensional `𝔓^l_mn(cosh τ)`, which equals `P^l_mn(cos(-iτ))`;
//! * the principal series `𝔓^{-1/2+iρ}_mn(cosh τ)`;
//! * the supplementary series `𝔓^{-1/2-σ}_mn(cosh τ)` (the principal series
//!   at `ρ = iσ`);
//! * conical functions, the principal series with `n = 0`.
//!
//! For the unitary series the square root of the four-gamma product is
//! fixed by a single branch convention shared by every route:
//!
//! ```text
//! sqrt(Γ(z-n)Γ(z+n)Γ(z-m)Γ(z+m)) := Γ(z+lo) Γ(z-hi) Π_{j<hi-lo} sqrt_upper(-ρ² - (lo+j+1/2)²)
//! ```
//!
//! with `z = iρ + 1/2`, `lo = min(m, n)`, `hi = max(m, n)`. Both sides
//! square to the same value, and the choice gives `𝔓_mn(1) = δ_mn`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::numkernel::{
    c, factorial, gauss_2f1, gauss_2f1_with, i_pow, inv_factorial, is_nonpositive_integer, ln_gamma, sqrt_upper,
    SeriesControl,
};
use crate::su2::{Ints, WeightTriple};

/// Largest rapidity accepted by the unitary-series routes.
pub const TAU_CAP: f64 = 50.0;

fn sqrt_fact(k: i64) -> f64 {
    factorial(k).sqrt()
}

fn check_tau(tau: f64) -> Result<()> {
    if !tau.is_finite() {
        return Err(Error::Domain(format!("tau = {tau} is not finite")));
    }
    Ok(())
}

/// `𝔓^l_mn(cosh τ)` from the finite sum in `tanh(τ/2)`. Any real `τ` is
/// accepted; negative `τ` is the analytic continuation used by the
/// hyperspherical functions.
pub fn jacobi_p_findim(idx: WeightTriple, tau: f64) -> Result<Complex64> {
    idx.check()?;
    check_tau(tau)?;
    let k = Ints::of(&idx);
    let (ch, sh) = ((tau / 2.0).cosh(), (tau / 2.0).sinh());
    let pref = sqrt_fact(k.l_m) * sqrt_fact(k.lpm) * sqrt_fact(k.l_n) * sqrt_fact(k.lpn);
    let mut sum = 0.0;
    for s in 0.max(-k.d)..=k.l_m.min(k.lpn) {
        let coef = inv_factorial(s) * inv_factorial(k.l_m - s) * inv_factorial(k.lpn - s) * inv_factorial(k.d + s);
        sum += coef * ch.powi((k.two_l - k.d - 2 * s) as i32) * sh.powi((k.d + 2 * s) as i32);
    }
    Ok(c(pref * sum))
}

/// `𝔓^l_mn(cosh τ)` from the finite sum in `sinh(τ/2)`.
pub fn jacobi_p_findim_sinh_form(idx: WeightTriple, tau: f64) -> Result<Complex64> {
    idx.check()?;
    check_tau(tau)?;
    let k = Ints::of(&idx);
    let (ch, sh) = ((tau / 2.0).cosh(), (tau / 2.0).sinh());
    let pref = sqrt_fact(k.l_m) * sqrt_fact(k.l_n) / (sqrt_fact(k.lpm) * sqrt_fact(k.lpn));
    let mut sum = 0.0;
    for s in 0..=k.l_m {
        let coef = factorial(k.lpm + s) * inv_factorial(s) * inv_factorial(k.d + s) * inv_factorial(k.l_m - s);
        if coef == 0.0 {
            continue;
        }
        sum += coef * ch.powi(k.s as i32) * sh.powi((k.d + 2 * s) as i32);
    }
    Ok(c(pref * sum))
}

/// Hypergeometric form in `tanh²(τ/2)`, orientation chosen by the sign of
/// `m - n`.
pub fn jacobi_p_findim_hyp(idx: WeightTriple, tau: f64) -> Result<Complex64> {
    idx.check()?;
    check_tau(tau)?;
    let k = Ints::of(&idx);
    let (l, m, n) = (idx.l.to_f64(), idx.m.to_f64(), idx.n.to_f64());
    let ch = (tau / 2.0).cosh();
    let t = (tau / 2.0).tanh();
    let c2l = ch.powi(k.two_l as i32);
    let v = if k.d >= 0 {
        let pref = inv_factorial(k.d) * sqrt_fact(k.lpm) * sqrt_fact(k.l_n) / (sqrt_fact(k.l_m) * sqrt_fact(k.lpn));
        pref * c2l * t.powi(k.d as i32) * gauss_2f1(c(m - l), c(-n - l), c(k.d as f64 + 1.0), t * t)?
    } else {
        let e = -k.d;
        let pref = inv_factorial(e) * sqrt_fact(k.lpn) * sqrt_fact(k.l_m) / (sqrt_fact(k.l_n) * sqrt_fact(k.lpm));
        pref * c2l * t.powi(e as i32) * gauss_2f1(c(n - l), c(-m - l), c(e as f64 + 1.0), t * t)?
    };
    Ok(v)
}

/// Hypergeometric form in `-sinh²(τ/2)`, orientation chosen by the sign of
/// `m - n`.
pub fn jacobi_p_findim_hyp_sinh(idx: WeightTriple, tau: f64) -> Result<Complex64> {
    idx.check()?;
    check_tau(tau)?;
    let k = Ints::of(&idx);
    let (l, m, n) = (idx.l.to_f64(), idx.m.to_f64(), idx.n.to_f64());
    let (ch, sh) = ((tau / 2.0).cosh(), (tau / 2.0).sinh());
    let x = -sh * sh;
    let v = if k.d >= 0 {
        let pref = inv_factorial(k.d) * sqrt_fact(k.l_n) * sqrt_fact(k.lpm) / (sqrt_fact(k.l_m) * sqrt_fact(k.lpn));
        pref * ch.powi(k.s as i32) * sh.powi(k.d as i32) * gauss_2f1(c(l + m + 1.0), c(m - l), c(k.d as f64 + 1.0), x)?
    } else {
        let e = -k.d;
        let pref = inv_factorial(e) * sqrt_fact(k.l_m) * sqrt_fact(k.lpn) / (sqrt_fact(k.l_n) * sqrt_fact(k.lpm));
        pref * ch.powi(k.s as i32) * sh.powi(e as i32) * gauss_2f1(c(l + n + 1.0), c(n - l), c(e as f64 + 1.0), x)?
    };
    Ok(v)
}

/// Indices of a principal-series function `𝔓^{-1/2+iρ}_mn`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrincipalIndex {
    pub rho: f64,
    pub m: HalfInt,
    pub n: HalfInt,
}

impl PrincipalIndex {
    pub fn check(&self) -> Result<()> {
        if !self.rho.is_finite() {
            return Err(Error::Domain(format!("rho = {} is not finite", self.rho)));
        }
        if (self.m - self.n).to_int().is_none() {
            return Err(Error::Index(format!("m - n must be an integer (m={}, n={})", self.m, self.n)));
        }
        Ok(())
    }
}

/// Indices of a supplementary-series function `𝔓^{-1/2-σ}_mn`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupplementaryIndex {
    pub sigma: f64,
    pub m: HalfInt,
    pub n: HalfInt,
}

impl SupplementaryIndex {
    pub fn check(&self) -> Result<()> {
        if !(self.sigma.is_finite() && self.sigma != 0.0) {
            return Err(Error::Domain(format!("sigma = {} must be finite and nonzero", self.sigma)));
        }
        if !(self.m.is_integer() && self.n.is_integer()) {
            return Err(Error::Index(format!("supplementary weights must be integers (m={}, n={})", self.m, self.n)));
        }
        Ok(())
    }
}

fn check_unitary_tau(tau: f64) -> Result<()> {
    if !tau.is_finite() || tau < 0.0 {
        return Err(Error::Domain(format!("tau = {tau} must be finite and non-negative")));
    }
    if tau > TAU_CAP {
        return Err(Error::Domain(format!("tau = {tau} exceeds the cap {TAU_CAP}")));
    }
    Ok(())
}

/// `Π_{j<d} sqrt_upper(-ρ² - (lo+j+1/2)²)` for complex `ρ`.
pub fn gamma_root_factor(rho: Complex64, lo: HalfInt, d: i64) -> Complex64 {
    let rho2 = rho * rho;
    let mut p = Complex64::new(1.0, 0.0);
    for j in 0..d {
        let a = lo.to_f64() + j as f64 + 0.5;
        p *= sqrt_upper(-rho2 - a * a);
    }
    p
}

fn lo_hi(m: HalfInt, n: HalfInt) -> (HalfInt, HalfInt, i64) {
    let (lo, hi) = if m <= n { (m, n) } else { (n, m) };
    (lo, hi, (hi - lo).to_int().unwrap_or(0))
}

fn complex_pole(z: Complex64) -> bool {
    z.im == 0.0 && is_nonpositive_integer(z.re)
}

/// `𝔓_00` at real `ρ` is invariant under conjugation (`ρ -> -ρ`, then
/// `ν -> -ν-1`), so its imaginary part is rounding from cancelling terms.
fn real_if_conical(rho: Complex64, m: HalfInt, n: HalfInt, v: Complex64) -> Complex64 {
    if rho.im == 0.0 && m == HalfInt::ZERO && n == HalfInt::ZERO {
        Complex64::new(v.re, 0.0)
    } else {
        v
    }
}

/// Series route for `𝔓^{-1/2+iρ}_mn(cosh τ)` at complex `ρ`.
///
/// The first term comes from complex log-gamma values and the rest from the
/// term ratio; terms whose denominator contains a gamma pole vanish.
pub fn jacobi_p_principal_continued(
    rho: Complex64,
    m: HalfInt,
    n: HalfInt,
    tau: f64,
    ctl: SeriesControl,
) -> Result<Complex64> {
    if (m - n).to_int().is_none() {
        return Err(Error::Index(format!("m - n must be an integer (m={m}, n={n})")));
    }
    if !(rho.re.is_finite() && rho.im.is_finite()) {
        return Err(Error::Domain(format!("rho = {rho} is not finite")));
    }
    check_unitary_tau(tau)?;
    if tau == 0.0 {
        return Ok(c(if m == n { 1.0 } else { 0.0 }));
    }
    let z = Complex64::new(0.5, 0.0) + Complex64::new(0.0, 1.0) * rho;
    let (lo, hi, d) = lo_hi(m, n);
    let (mf, nf) = (m.to_f64(), n.to_f64());
    let ln_g = ln_gamma(z + lo.to_f64())? + ln_gamma(z - hi.to_f64())?;
    let root = gamma_root_factor(rho, lo, d);
    let ln_t = (tau / 2.0).tanh().ln();
    let ln_c = (tau / 2.0).cosh().ln();
    let pref = ((2.0 * Complex64::new(0.0, 1.0) * rho - 1.0) * ln_c).exp() * root;

    let dnm = (n - m).to_int().unwrap();
    let s0 = 0.max(-dnm);
    let t2 = (tau / 2.0).tanh().powi(2);
    // Log-space evaluation of term s; used to start the series and to restart
    // after a vanishing term.
    let direct = |s: i64| -> Result<Complex64> {
        let sf = s as f64;
        let (a1, a2) = (z - nf - sf, z + mf - sf);
        if complex_pole(a1) || complex_pole(a2) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let lt = ln_g - ln_gamma(c(sf + 1.0))? - ln_gamma(a1)? - ln_gamma(c((dnm + s) as f64 + 1.0))? - ln_gamma(a2)?
            + ((dnm + 2 * s) as f64) * ln_t;
        Ok(lt.exp())
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    let mut term = direct(s0)?;
    for k in 0..ctl.max_terms {
        let s = s0 + k as i64;
        if k > 0 {
            let sf = (s - 1) as f64;
            term = if term == Complex64::new(0.0, 0.0) {
                direct(s)?
            } else {
                // 1/Γ(w - s - 1) = (w - s - 1)/Γ(w - s)
                term * t2 * (z - nf - sf - 1.0) * (z + mf - sf - 1.0) / ((sf + 1.0) * ((dnm + s) as f64))
            };
        }
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Overflow(format!("principal series partial sum at term {s}")));
        }
        if term.norm() <= ctl.rel_tol * sum.norm() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(real_if_conical(rho, m, n, pref * sum));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence(format!("principal series exceeded {} terms at tau = {tau}", ctl.max_terms)))
}

/// `𝔓^{-1/2+iρ}_mn(cosh τ)` by the infinite series in `tanh²(τ/2)`.
pub fn jacobi_p_principal(idx: PrincipalIndex, tau: f64) -> Result<Complex64> {
    jacobi_p_principal_with(idx, tau, SeriesControl::default())
}

pub fn jacobi_p_principal_with(idx: PrincipalIndex, tau: f64, ctl: SeriesControl) -> Result<Complex64> {
    idx.check()?;
    jacobi_p_principal_continued(c(idx.rho), idx.m, idx.n, tau, ctl)
}

/// Hypergeometric route for complex `ρ`.
pub fn jacobi_p_principal_hyp_continued(
    rho: Complex64,
    m: HalfInt,
    n: HalfInt,
    tau: f64,
    ctl: SeriesControl,
) -> Result<Complex64> {
    if (m - n).to_int().is_none() {
        return Err(Error::Index(format!("m - n must be an integer (m={m}, n={n})")));
    }
    check_unitary_tau(tau)?;
    let (lo, hi, d) = lo_hi(m, n);
    let i_rho = Complex64::new(0.0, 1.0) * rho;
    let root = gamma_root_factor(rho, lo, d);
    let ch = (tau / 2.0).cosh();
    let t = (tau / 2.0).tanh();
    let pref = ((2.0 * i_rho - 1.0) * ch.ln()).exp() * root * t.powi(d as i32) * inv_factorial(d);
    let a = Complex64::new(hi.to_f64() + 0.5, 0.0) - i_rho;
    let b = Complex64::new(-lo.to_f64() + 0.5, 0.0) - i_rho;
    let f = gauss_2f1_with(a, b, c(d as f64 + 1.0), t * t, ctl)?;
    Ok(real_if_conical(rho, m, n, pref * f))
}

/// `𝔓^{-1/2+iρ}_mn(cosh τ)` through `₂F₁(·,·; |m-n|+1; tanh²(τ/2))`.
pub fn jacobi_p_principal_hyp(idx: PrincipalIndex, tau: f64) -> Result<Complex64> {
    jacobi_p_principal_hyp_with(idx, tau, SeriesControl::default())
}

pub fn jacobi_p_principal_hyp_with(idx: PrincipalIndex, tau: f64, ctl: SeriesControl) -> Result<Complex64> {
    idx.check()?;
    jacobi_p_principal_hyp_continued(c(idx.rho), idx.m, idx.n, tau, ctl)
}

/// Root factor for `ρ = iσ` in real arithmetic: returns `(i^k, |value|)`.
fn real_root_factor(sigma: f64, lo: HalfInt, d: i64) -> (Complex64, f64) {
    let mut mag = 1.0;
    let mut k = 0;
    for j in 0..d {
        let a = lo.to_f64() + j as f64 + 0.5;
        let r = sigma * sigma - a * a;
        if r < 0.0 {
            k += 1;
        }
        mag *= r.abs().sqrt();
    }
    (i_pow(k), mag)
}

/// `𝔓^{-1/2-σ}_mn(cosh τ)`, the principal series at `ρ = iσ`, summed in
/// real arithmetic with log-magnitudes and tracked signs.
pub fn jacobi_p_supplementary(idx: SupplementaryIndex, tau: f64) -> Result<Complex64> {
    jacobi_p_supplementary_with(idx, tau, SeriesControl::default())
}

pub fn jacobi_p_supplementary_with(idx: SupplementaryIndex, tau: f64, ctl: SeriesControl) -> Result<Complex64> {
    idx.check()?;
    check_unitary_tau(tau)?;
    let (m, n, sigma) = (idx.m, idx.n, idx.sigma);
    if tau == 0.0 {
        return Ok(c(if m == n { 1.0 } else { 0.0 }));
    }
    let z = 0.5 - sigma;
    let (lo, _, d) = lo_hi(m, n);
    let (mf, nf) = (m.to_f64(), n.to_f64());
    let (phase, root) = real_root_factor(sigma, lo, d);
    let t = (tau / 2.0).tanh();
    let pref = ((-2.0 * sigma - 1.0) * (tau / 2.0).cosh().ln()).exp() * root;

    // At the first index the gamma arguments above and below the fraction
    // coincide, so the leading term is t^d/d! and the rest follow from the
    // term ratio. No gamma values are needed, which keeps σ = ±1/2 regular.
    let dnm = (n - m).to_int().unwrap();
    let s0 = 0.max(-dnm);
    let mut term = t.powi(d as i32) * inv_factorial(d);
    let mut sum = 0.0;
    let mut quiet = 0;
    for k in 0..ctl.max_terms {
        let s = s0 + k as i64;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Overflow(format!("supplementary series partial sum at term {s}")));
        }
        if term.abs() <= ctl.rel_tol * sum.abs() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(phase * (pref * sum));
            }
        } else {
            quiet = 0;
        }
        let sf = s as f64;
        term *= t * t * (z - nf - sf - 1.0) * (z + mf - sf - 1.0) / ((sf + 1.0) * ((dnm + s) as f64 + 1.0));
    }
    Err(Error::NoConvergence(format!("supplementary series exceeded {} terms at tau = {tau}", ctl.max_terms)))
}

/// Supplementary series through `₂F₁(hi+σ+1/2, -lo+σ+1/2; |m-n|+1; tanh²(τ/2))`.
pub fn jacobi_p_supplementary_hyp(idx: SupplementaryIndex, tau: f64) -> Result<Complex64> {
    idx.check()?;
    check_unitary_tau(tau)?;
    let (lo, hi, d) = lo_hi(idx.m, idx.n);
    let sigma = idx.sigma;
    let (phase, root) = real_root_factor(sigma, lo, d);
    let ch = (tau / 2.0).cosh();
    let t = (tau / 2.0).tanh();
    let pref = ch.powf(-1.0 - 2.0 * sigma) * root * t.powi(d as i32) * inv_factorial(d);
    let f = gauss_2f1(c(hi.to_f64() + sigma + 0.5), c(-lo.to_f64() + sigma + 0.5), c(d as f64 + 1.0), t * t)?;
    Ok(phase * f * pref)
}

/// Conical function `𝔓^t_{-1/2+iρ}(cosh τ)`, the principal-series function
/// with `m = t`, `n = 0`. `t` must be an integer.
pub fn conical(rho: f64, t: HalfInt, tau: f64) -> Result<Complex64> {
    conical_with(rho, t, tau, SeriesControl::default())
}

pub fn conical_with(rho: f64, t: HalfInt, tau: f64, ctl: SeriesControl) -> Result<Complex64> {
    if !t.is_integer() {
        return Err(Error::Index(format!("conical order t = {t} must be an integer")));
    }
    jacobi_p_principal_with(PrincipalIndex { rho, m: t, n: HalfInt::ZERO }, tau, ctl)
}
