//! Hyperspherical functions `Z^l_mn(cos θ^c)` with `θ^c = θ - iτ`.
//!
//! The canonical route is the addition-theorem sum
//! `Z^l_mn = Σ_k P^l_mk(cos θ) 𝔓^l_kn(cosh τ)`. `Z^l_mn(cos θ^c)` equals
//! `P^l_mn(cos θ^c)`, an entire function of `θ^c`, so `τ` may have either
//! sign.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::casimir::RepLabel;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::numkernel::{c, factorial, gauss_2f1_regularized_split, i_pow, SeriesControl};
use crate::su11::{
    jacobi_p_findim, jacobi_p_findim_hyp_sinh, jacobi_p_principal_hyp_with, jacobi_p_principal_with,
    jacobi_p_supplementary_with, PrincipalIndex, SupplementaryIndex,
};
use crate::su2::{wigner_p, wigner_p_hyp_sin, wigner_p_hyp_tan, Ints, WeightTriple};

/// `θ^c = θ - iτ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexAngle {
    pub theta: f64,
    pub tau: f64,
}

impl ComplexAngle {
    pub fn new(theta: f64, tau: f64) -> Self {
        ComplexAngle { theta, tau }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.theta, -self.tau)
    }

    /// `cos θ^c`.
    pub fn cos(&self) -> Complex64 {
        self.value().cos()
    }

    /// The angle whose cosine is `z`, taking `Re θ^c` in `[0, π]`.
    pub fn from_cos(z: Complex64) -> ComplexAngle {
        let a = z.acos();
        ComplexAngle { theta: a.re, tau: -a.im }
    }

    fn check(&self) -> Result<()> {
        if !(self.theta.is_finite() && self.tau.is_finite()) {
            return Err(Error::Domain(format!("angle ({}, {}) is not finite", self.theta, self.tau)));
        }
        Ok(())
    }
}

/// `Z^l_mn(cos θ^c)` by the addition-theorem sum.
pub fn hyperspherical_z(idx: WeightTriple, angle: ComplexAngle) -> Result<Complex64> {
    idx.check()?;
    angle.check()?;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in idx.l.weights() {
        let p = wigner_p(WeightTriple { l: idx.l, m: idx.m, n: k }, angle.theta)?;
        let q = jacobi_p_findim(WeightTriple { l: idx.l, m: k, n: idx.n }, angle.tau)?;
        sum += p * q;
    }
    Ok(sum)
}

/// `Z^l_mn(cos θ^c)` as a `k`-sum of products of two hypergeometric
/// functions. For `θ < π/2` the arguments are `-tan²(θ/2)` and
/// `tanh²(τ/2)` with the orientation fixed by the sign of `m - n`; the
/// summands with a lower parameter at a gamma pole use the regularized
/// function. For larger `θ` the `sin²(θ/2)` and `-sinh²(τ/2)` forms are used.
pub fn hyperspherical_z_hyp(idx: WeightTriple, angle: ComplexAngle) -> Result<Complex64> {
    idx.check()?;
    angle.check()?;
    if angle.theta < PI / 2.0 && angle.theta >= 0.0 {
        return z_hyp_tan(idx, angle);
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for k in idx.l.weights() {
        let p = wigner_p_hyp_sin(WeightTriple { l: idx.l, m: idx.m, n: k }, angle.theta)?;
        let q = jacobi_p_findim_hyp_sinh(WeightTriple { l: idx.l, m: k, n: idx.n }, angle.tau)?;
        sum += p * q;
    }
    Ok(sum)
}

/// `t^e F̃(a, b; c; x)` where `F̃ = x^shift * scaled`; the power of `t`
/// absorbs the split-off factor so that no negative power survives.
fn power_times_reg(t: f64, e: i64, a: f64, b: f64, cc: f64, x: f64) -> Result<Complex64> {
    let r = gauss_2f1_regularized_split(c(a), c(b), c(cc), x, SeriesControl::default())?;
    let sign = if x < 0.0 && r.shift % 2 == 1 { -1.0 } else { 1.0 };
    let p = e + 2 * r.shift as i64;
    Ok(r.scaled * (sign * t.powi(p as i32)))
}

fn z_hyp_tan(idx: WeightTriple, angle: ComplexAngle) -> Result<Complex64> {
    let k0 = Ints::of(&idx);
    let (l, m, n) = (idx.l.to_f64(), idx.m.to_f64(), idx.n.to_f64());
    let t = (angle.theta / 2.0).tan();
    let tt = (angle.tau / 2.0).tanh();
    let c2l = ((angle.theta / 2.0).cos() * (angle.tau / 2.0).cosh()).powi(k0.two_l as i32);
    let sf = |k: i64| factorial(k).sqrt();
    let mut sum = Complex64::new(0.0, 0.0);
    if k0.d >= 0 {
        let pref = sf(k0.lpm) * sf(k0.l_n) / (sf(k0.l_m) * sf(k0.lpn));
        for kw in idx.l.weights() {
            let k = kw.to_f64();
            let mk = (idx.m - kw).to_int().unwrap();
            let kn = (kw - idx.n).to_int().unwrap();
            let f1 = power_times_reg(t, mk, m - l, -k - l, mk as f64 + 1.0, -t * t)?;
            let f2 = power_times_reg(tt, kn, k - l, -n - l, kn as f64 + 1.0, tt * tt)?;
            sum += i_pow(mk) * f1 * f2;
        }
        Ok(sum * (pref * c2l))
    } else {
        let pref = sf(k0.l_m) * sf(k0.lpn) / (sf(k0.lpm) * sf(k0.l_n));
        for kw in idx.l.weights() {
            let k = kw.to_f64();
            let km = (kw - idx.m).to_int().unwrap();
            let nk = (idx.n - kw).to_int().unwrap();
            let f1 = power_times_reg(t, km, k - l, -m - l, km as f64 + 1.0, -t * t)?;
            let f2 = power_times_reg(tt, nk, n - l, -k - l, nk as f64 + 1.0, tt * tt)?;
            sum += i_pow(km) * f1 * f2;
        }
        Ok(sum * (pref * c2l))
    }
}

fn check_principal_weights(l0: HalfInt, m: HalfInt, n: HalfInt) -> Result<()> {
    if l0.is_negative() {
        return Err(Error::Index(format!("l0 = {l0} is negative")));
    }
    if m.abs() > l0 || (l0 - m).to_int().is_none() {
        return Err(Error::Index(format!("m = {m} is not a weight of l0 = {l0}")));
    }
    if (m - n).to_int().is_none() {
        return Err(Error::Index(format!("m - n must be an integer (m={m}, n={n})")));
    }
    Ok(())
}

/// `Z^{-1/2+iρ, l0}_mn = Σ_{t=-l0..l0} P^{l0}_mt(cos θ) 𝔓^{-1/2+iρ}_tn(cosh τ)`.
///
/// `|m| <= l0` is required; `n` may be any weight with `m - n` integral.
pub fn hyperspherical_z_principal(
    rho: f64,
    l0: HalfInt,
    m: HalfInt,
    n: HalfInt,
    angle: ComplexAngle,
) -> Result<Complex64> {
    hyperspherical_z_principal_with(rho, l0, m, n, angle, SeriesControl::default())
}

pub fn hyperspherical_z_principal_with(
    rho: f64,
    l0: HalfInt,
    m: HalfInt,
    n: HalfInt,
    angle: ComplexAngle,
    ctl: SeriesControl,
) -> Result<Complex64> {
    check_principal_weights(l0, m, n)?;
    angle.check()?;
    let mut sum = Complex64::new(0.0, 0.0);
    for t in l0.weights() {
        let p = wigner_p(WeightTriple { l: l0, m, n: t }, angle.theta)?;
        let q = jacobi_p_principal_with(PrincipalIndex { rho, m: t, n }, angle.tau, ctl)?;
        sum += p * q;
    }
    Ok(sum)
}

/// Same function through hypergeometric forms of both factors.
pub fn hyperspherical_z_principal_hyp(
    rho: f64,
    l0: HalfInt,
    m: HalfInt,
    n: HalfInt,
    angle: ComplexAngle,
    ctl: SeriesControl,
) -> Result<Complex64> {
    check_principal_weights(l0, m, n)?;
    angle.check()?;
    let mut sum = Complex64::new(0.0, 0.0);
    for t in l0.weights() {
        let w = WeightTriple { l: l0, m, n: t };
        let p =
            if angle.theta < PI / 2.0 { wigner_p_hyp_tan(w, angle.theta)? } else { wigner_p_hyp_sin(w, angle.theta)? };
        let q = jacobi_p_principal_hyp_with(PrincipalIndex { rho, m: t, n }, angle.tau, ctl)?;
        sum += p * q;
    }
    Ok(sum)
}

/// Functions on the complex two-sphere: the hyperspherical function with
/// second weight zero.
///
/// * `FiniteDim(l, _)`: `Z^l_{m0}`, `l` integral;
/// * `Principal(l0, ρ)`: `Σ_t P^{l0}_mt(cos θ) 𝔓^t_{-1/2+iρ}(cosh τ)`, `l0` integral;
/// * `Supplementary(σ)`: `𝔓^{-1/2-σ}_{m0}(cosh τ)`.
pub fn second_type_z(label: &RepLabel, m: HalfInt, angle: ComplexAngle) -> Result<Complex64> {
    second_type_z_with(label, m, angle, SeriesControl::default())
}

pub fn second_type_z_with(label: &RepLabel, m: HalfInt, angle: ComplexAngle, ctl: SeriesControl) -> Result<Complex64> {
    match *label {
        RepLabel::FiniteDim { l, .. } => {
            if !l.is_integer() {
                return Err(Error::Index(format!("second-type functions need integer l, got {l}")));
            }
            hyperspherical_z(WeightTriple::new(l, m, HalfInt::ZERO)?, angle)
        }
        RepLabel::Principal { l0, rho } => {
            if !l0.is_integer() {
                return Err(Error::Index(format!("second-type functions need integer l0, got {l0}")));
            }
            hyperspherical_z_principal_with(rho, l0, m, HalfInt::ZERO, angle, ctl)
        }
        RepLabel::Supplementary { sigma } => {
            angle.check()?;
            jacobi_p_supplementary_with(SupplementaryIndex { sigma, m, n: HalfInt::ZERO }, angle.tau, ctl)
        }
    }
}

/// Value at `θ = τ = 0`, which is `δ_mn` for every family.
pub fn identity_value(m: HalfInt, n: HalfInt) -> Complex64 {
    c(if m == n { 1.0 } else { 0.0 })
}
