//! Generalized spherical functions `P^l_mn(cos θ)` of SU(2).
//!
//! Phase convention: `P^l_mn` carries the factor `i^(m-n)`, so that
//! `P^{1/2}_{1/2,-1/2}(cos θ) = i sin(θ/2)`. The functions are symmetric,
//! `P_mn = P_nm = P_{-m,-n} = P_{-n,-m}`.
//!
//! Four evaluation routes are provided: the finite sum in powers of
//! `sin(θ/2)`, the finite sum in powers of `tan(θ/2)`, and the two
//! corresponding hypergeometric representations. Powers of `tan(θ/2)` are
//! expanded into `cos^p(θ/2) sin^q(θ/2)` so that no intermediate blows up
//! near `θ = π`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::numkernel::{c, factorial, gauss_2f1, i_pow, inv_factorial};

/// Weight indices `(l, m, n)` with `|m|, |n| <= l` and `l - m`, `l - n`
/// integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightTriple {
    pub l: HalfInt,
    pub m: HalfInt,
    pub n: HalfInt,
}

impl WeightTriple {
    pub fn new(l: HalfInt, m: HalfInt, n: HalfInt) -> Result<Self> {
        let w = WeightTriple { l, m, n };
        w.check()?;
        Ok(w)
    }

    /// Convenience constructor from doubled values.
    pub fn from_twice(l2: i64, m2: i64, n2: i64) -> Result<Self> {
        Self::new(HalfInt::from_twice(l2), HalfInt::from_twice(m2), HalfInt::from_twice(n2))
    }

    pub fn check(&self) -> Result<()> {
        let (l, m, n) = (self.l, self.m, self.n);
        if l.is_negative() {
            return Err(Error::Index(format!("l = {l} is negative")));
        }
        if m.abs() > l || n.abs() > l {
            return Err(Error::Index(format!("|m|, |n| must not exceed l (l={l}, m={m}, n={n})")));
        }
        if (l - m).to_int().is_none() || (l - n).to_int().is_none() {
            return Err(Error::Index(format!("l - m and l - n must be integers (l={l}, m={m}, n={n})")));
        }
        Ok(())
    }

    /// All triples `(l, m, n)` for a given `l`, `m` outer and `n` inner.
    pub fn all_for(l: HalfInt) -> Vec<WeightTriple> {
        let mut out = Vec::with_capacity(l.multiplicity() * l.multiplicity());
        for m in l.weights() {
            for n in l.weights() {
                out.push(WeightTriple { l, m, n });
            }
        }
        out
    }

    /// The mirror `(l, -n, -m)`, which has the same function value.
    pub fn mirrored(&self) -> WeightTriple {
        WeightTriple { l: self.l, m: -self.n, n: -self.m }
    }
}

/// Integer combinations of the weights used by every formula.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Ints {
    /// `2l`
    pub two_l: i64,
    /// `l - m`
    pub l_m: i64,
    /// `l + m`
    pub lpm: i64,
    /// `l - n`
    pub l_n: i64,
    /// `l + n`
    pub lpn: i64,
    /// `m - n`
    pub d: i64,
    /// `m + n`
    pub s: i64,
}

impl Ints {
    pub(crate) fn of(w: &WeightTriple) -> Ints {
        let (l, m, n) = (w.l.twice(), w.m.twice(), w.n.twice());
        Ints {
            two_l: l,
            l_m: (l - m) / 2,
            lpm: (l + m) / 2,
            l_n: (l - n) / 2,
            lpn: (l + n) / 2,
            d: (m - n) / 2,
            s: (m + n) / 2,
        }
    }
}

fn sqrt_fact(k: i64) -> f64 {
    factorial(k).sqrt()
}

/// Reduces `θ` to `[0, π]` and returns the sign picked up on the way.
///
/// Uses `P(θ + 2π) = (-1)^(2l) P(θ)` and `P(-θ) = (-1)^(m-n) P(θ)`.
fn reduce_theta(w: &WeightTriple, theta: f64) -> Result<(f64, f64)> {
    if !theta.is_finite() {
        return Err(Error::Domain(format!("theta = {theta} is not finite")));
    }
    if (0.0..=PI).contains(&theta) {
        return Ok((theta, 1.0));
    }
    let ints = Ints::of(w);
    let turns = (theta / (2.0 * PI)).floor();
    let mut sign = if ints.two_l % 2 != 0 && (turns as i64) % 2 != 0 { -1.0 } else { 1.0 };
    let mut t = theta - 2.0 * PI * turns;
    if t > PI {
        // t = 2π - u with u in [0, π)
        t = 2.0 * PI - t;
        if ints.two_l % 2 != 0 {
            sign = -sign;
        }
        if ints.d % 2 != 0 {
            sign = -sign;
        }
    }
    Ok((t.clamp(0.0, PI), sign))
}

/// Sin-form finite sum.
pub fn wigner_p_sin_form(idx: WeightTriple, theta: f64) -> Result<Complex64> {
    idx.check()?;
    let (theta, sign) = reduce_theta(&idx, theta)?;
    // Mirror so that cos(θ/2) never appears with a negative exponent.
    let w = if (idx.m + idx.n).is_negative() { idx.mirrored() } else { idx };
    let k = Ints::of(&w);
    let (ch, sh) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let pref = sqrt_fact(k.l_m) * sqrt_fact(k.l_n) / (sqrt_fact(k.lpm) * sqrt_fact(k.lpn));
    let mut sum = 0.0;
    for t in 0..=k.l_m {
        let coef = factorial(k.lpm + t) * inv_factorial(t) * inv_factorial(k.d + t) * inv_factorial(k.l_m - t);
        if coef == 0.0 {
            continue;
        }
        let sgn = if t % 2 == 0 { 1.0 } else { -1.0 };
        sum += sgn * coef * ch.powi(k.s as i32) * sh.powi((k.d + 2 * t) as i32);
    }
    Ok(i_pow(k.d) * (sign * pref * sum))
}

/// Tan-form finite sum, with `tan^(m-n+2j)` expanded into sines and cosines.
pub fn wigner_p_tan_form(idx: WeightTriple, theta: f64) -> Result<Complex64> {
    idx.check()?;
    let (theta, sign) = reduce_theta(&idx, theta)?;
    let k = Ints::of(&idx);
    let (ch, sh) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let pref = sqrt_fact(k.l_m) * sqrt_fact(k.lpm) * sqrt_fact(k.l_n) * sqrt_fact(k.lpn);
    let j_lo = 0.max(-k.d);
    let j_hi = k.l_m.min(k.lpn);
    let mut sum = 0.0;
    for j in j_lo..=j_hi {
        let coef = inv_factorial(j) * inv_factorial(k.l_m - j) * inv_factorial(k.lpn - j) * inv_factorial(k.d + j);
        let sgn = if j % 2 == 0 { 1.0 } else { -1.0 };
        let pc = k.two_l - k.d - 2 * j;
        let ps = k.d + 2 * j;
        sum += sgn * coef * ch.powi(pc as i32) * sh.powi(ps as i32);
    }
    Ok(i_pow(k.d) * (sign * pref * sum))
}

/// Hypergeometric form in `sin²(θ/2)`, choosing the orientation by the sign
/// of `m - n`.
pub fn wigner_p_hyp_sin(idx: WeightTriple, theta: f64) -> Result<Complex64> {
    idx.check()?;
    let (theta, sign) = reduce_theta(&idx, theta)?;
    let w = if (idx.m + idx.n).is_negative() { idx.mirrored() } else { idx };
    let k = Ints::of(&w);
    let (ch, sh) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let x = sh * sh;
    let (l, m, n) = (w.l.to_f64(), w.m.to_f64(), w.n.to_f64());
    let v = if k.d >= 0 {
        let pref = inv_factorial(k.d) * sqrt_fact(k.l_n) * sqrt_fact(k.lpm) / (sqrt_fact(k.l_m) * sqrt_fact(k.lpn));
        let f = gauss_2f1(c(l + m + 1.0), c(m - l), c(k.d as f64 + 1.0), x)?;
        i_pow(k.d) * pref * ch.powi(k.s as i32) * sh.powi(k.d as i32) * f
    } else {
        let e = -k.d;
        let pref = inv_factorial(e) * sqrt_fact(k.l_m) * sqrt_fact(k.lpn) / (sqrt_fact(k.l_n) * sqrt_fact(k.lpm));
        let f = gauss_2f1(c(l + n + 1.0), c(n - l), c(e as f64 + 1.0), x)?;
        i_pow(e) * pref * ch.powi(k.s as i32) * sh.powi(e as i32) * f
    };
    Ok(v * sign)
}

/// Hypergeometric form in `-tan²(θ/2)`, choosing the orientation by the
/// sign of `m - n`. Intended for `θ <= π/2`; returns `Overflow` when the
/// tangent is too large to give a finite value.
pub fn wigner_p_hyp_tan(idx: WeightTriple, theta: f64) -> Result<Complex64> {
    idx.check()?;
    let (theta, sign) = reduce_theta(&idx, theta)?;
    let k = Ints::of(&idx);
    let (l, m, n) = (idx.l.to_f64(), idx.m.to_f64(), idx.n.to_f64());
    let ch = (theta / 2.0).cos();
    let t = (theta / 2.0).tan();
    let x = -t * t;
    let c2l = ch.powi(k.two_l as i32);
    let v = if k.d >= 0 {
        let pref = inv_factorial(k.d) * sqrt_fact(k.lpm) * sqrt_fact(k.l_n) / (sqrt_fact(k.l_m) * sqrt_fact(k.lpn));
        let f = gauss_2f1(c(m - l), c(-n - l), c(k.d as f64 + 1.0), x)?;
        i_pow(k.d) * pref * c2l * t.powi(k.d as i32) * f
    } else {
        let e = -k.d;
        let pref = inv_factorial(e) * sqrt_fact(k.lpn) * sqrt_fact(k.l_m) / (sqrt_fact(k.l_n) * sqrt_fact(k.lpm));
        let f = gauss_2f1(c(n - l), c(-m - l), c(e as f64 + 1.0), x)?;
        i_pow(e) * pref * c2l * t.powi(e as i32) * f
    };
    if !v.is_finite() {
        return Err(Error::Overflow(format!("tan(θ/2) form at θ = {theta}")));
    }
    Ok(v * sign)
}

/// `P^l_mn(cos θ)`: tan-form for `θ <= π/2`, sin-form otherwise.
pub fn wigner_p(idx: WeightTriple, theta: f64) -> Result<Complex64> {
    idx.check()?;
    let (t, _) = reduce_theta(&idx, theta)?;
    if t <= PI / 2.0 {
        wigner_p_tan_form(idx, theta)
    } else {
        wigner_p_sin_form(idx, theta)
    }
}

/// `P^l_mn(cos θ)` through the hypergeometric function: the `tan` argument
/// for `θ <= π/2`, the `sin` argument otherwise.
pub fn wigner_p_hyp(idx: WeightTriple, theta: f64) -> Result<Complex64> {
    idx.check()?;
    let (t, _) = reduce_theta(&idx, theta)?;
    if t <= PI / 2.0 {
        wigner_p_hyp_tan(idx, theta)
    } else {
        wigner_p_hyp_sin(idx, theta)
    }
}
