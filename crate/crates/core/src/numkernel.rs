//! Scalar kernels: log-gamma for real and complex arguments, the reciprocal
//! gamma function with the zero-at-poles convention, and the Gauss
//! hypergeometric function for the argument ranges used by the matrix
//! element formulas.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type ComplexValue = Complex64;

pub const I: Complex64 = Complex64::new(0.0, 1.0);

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// Lanczos coefficients, g = 607/128, 15 terms.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_5e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_140_8e-5,
    3.689_918_265_953_162_5e-6,
];

/// Truncation control for infinite series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesControl {
    /// A term counts as negligible when `|term| <= rel_tol * |partial sum|`.
    pub rel_tol: f64,
    /// Hard cap on the number of summed terms.
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl { rel_tol: 1e-15, max_terms: 100_000 }
    }
}

/// Number of consecutive negligible terms required to stop.
const QUIET_TERMS: usize = 3;

/// `i^k` for integer `k`, exact.
pub fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Non-positive integer test on the real axis.
pub fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

fn complex_nonpositive_integer(z: Complex64) -> Option<i64> {
    if z.im == 0.0 && is_nonpositive_integer(z.re) {
        Some(z.re as i64)
    } else {
        None
    }
}

/// `sin(pi x)` with exact zeros at integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == 1.5 {
        return -1.0;
    }
    (PI * r).sin()
}

fn cos_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.5 || r == 1.5 {
        return 0.0;
    }
    (PI * r).cos()
}

/// Principal logarithm of `sin(pi z)`, stable for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let y = z.im;
    if y.abs() < 15.0 {
        let s = Complex64::new(sin_pi(z.re) * (PI * y).cosh(), cos_pi(z.re) * (PI * y).sinh());
        return s.ln();
    }
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) for Im z > 0; mirror otherwise.
    let (w, flip) = if y > 0.0 { (z, false) } else { (z.conj(), true) };
    let e2 = (2.0 * PI * I * w).exp();
    let val = Complex64::new((0.5f64).ln(), PI / 2.0) - PI * I * w + (Complex64::new(1.0, 0.0) - e2).ln();
    let val = Complex64::new(val.re, wrap_phase(val.im));
    if flip {
        val.conj()
    } else {
        val
    }
}

fn wrap_phase(phi: f64) -> f64 {
    let mut p = phi.rem_euclid(2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    }
    p
}

fn lanczos_ln_gamma(z: Complex64) -> Complex64 {
    let zm = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += *c / (zm + k as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (zm + 0.5) * t.ln() - t + acc.ln()
}

/// Logarithm of the gamma function for complex argument.
///
/// The imaginary part is reduced to `(-pi, pi]`, so the result is the
/// principal value of `log Γ(z)` and `exp(ln_gamma(z)) = Γ(z)`.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if let Some(k) = complex_nonpositive_integer(z) {
        return Err(Error::Pole(k as f64));
    }
    let raw = if z.re < 0.5 {
        Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - lanczos_ln_gamma(Complex64::new(1.0, 0.0) - z)
    } else {
        lanczos_ln_gamma(z)
    };
    Ok(Complex64::new(raw.re, wrap_phase(raw.im)))
}

/// `Γ(z)` for complex argument.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    ln_gamma(z).map(|l| l.exp())
}

/// `1/Γ(z)` for complex argument; zero at the poles.
pub fn inv_gamma(z: Complex64) -> Complex64 {
    match ln_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// `(ln |Γ(x)|, sign Γ(x))` for real `x`.
pub fn ln_gamma_real(x: f64) -> Result<(f64, f64)> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x >= 0.5 {
        return Ok((lanczos_ln_gamma(Complex64::new(x, 0.0)).re, 1.0));
    }
    let s = sin_pi(x);
    let (lg, _) = ln_gamma_real(1.0 - x)?;
    Ok((PI.ln() - s.abs().ln() - lg, s.signum()))
}

/// `Γ(x)` for real `x`.
pub fn gamma_real(x: f64) -> Result<f64> {
    let (l, s) = ln_gamma_real(x)?;
    Ok(s * l.exp())
}

/// `1/Γ(x)`, exactly zero when `x` is a non-positive integer.
///
/// Finite sums whose terms carry `Γ(non-positive integer)` in a denominator
/// are summed with this function so that the out-of-range terms drop out.
pub fn inv_gamma_real(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 0.0 && x == x.round() && x <= 171.0 {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return 1.0 / f;
    }
    match ln_gamma_real(x) {
        Ok((l, s)) => s * (-l).exp(),
        Err(_) => 0.0,
    }
}

/// `k!` as a float; overflows to infinity past `170!`.
pub fn factorial(k: i64) -> f64 {
    debug_assert!(k >= 0);
    (2..=k).fold(1.0, |acc, j| acc * j as f64)
}

/// `1/k!`, zero for negative `k` (the reciprocal gamma convention at
/// integer arguments).
pub fn inv_factorial(k: i64) -> f64 {
    if k < 0 {
        0.0
    } else {
        inv_gamma_real(k as f64 + 1.0)
    }
}

/// Square root with a fixed branch for real radicands: a zero imaginary
/// part of either sign counts as real, and negative reals map to `+i`.
/// Other arguments use the principal root.
pub fn sqrt_upper(w: Complex64) -> Complex64 {
    if w.im == 0.0 {
        if w.re >= 0.0 {
            Complex64::new(w.re.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-w.re).sqrt())
        }
    } else {
        w.sqrt()
    }
}

fn terminating_degree(a: Complex64, b: Complex64) -> Option<i64> {
    match (complex_nonpositive_integer(a), complex_nonpositive_integer(b)) {
        (Some(p), Some(q)) => Some((-p).min(-q)),
        (Some(p), None) => Some(-p),
        (None, Some(q)) => Some(-q),
        (None, None) => None,
    }
}

/// Sums `sum_{s>=0} coef_s x^s` where `coef_0 = first` and
/// `coef_{s+1}/coef_s = (a+s)(b+s)/((c+s)(s+1))`, optionally stopping after
/// `degree` terms.
fn hyper_series(
    first: Complex64,
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: f64,
    degree: Option<i64>,
    ctl: SeriesControl,
) -> Result<Complex64> {
    let mut term = first;
    let mut sum = first;
    if let Some(n) = degree {
        for s in 0..n {
            let sf = s as f64;
            term = term * ((a + sf) * (b + sf)) / ((c + sf) * (sf + 1.0)) * x;
            sum += term;
        }
        return Ok(sum);
    }
    let mut quiet = 0;
    for s in 0..ctl.max_terms {
        let sf = s as f64;
        term = term * ((a + sf) * (b + sf)) / ((c + sf) * (sf + 1.0)) * x;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Overflow(format!("2F1 partial sum at term {s}")));
        }
        if term.norm() <= ctl.rel_tol * sum.norm() {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence(format!("2F1 series exceeded {} terms at x = {x}", ctl.max_terms)))
}

fn check_argument(x: f64, terminating: bool) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("2F1 argument {x} is not finite")));
    }
    if !terminating && (x <= -1.0 || x >= 1.0) {
        return Err(Error::NoConvergence(format!("non-terminating 2F1 series at x = {x} outside (-1, 1)")));
    }
    Ok(())
}

/// Gauss hypergeometric function `₂F₁(a, b; c; x)` for real `x`.
///
/// Terminating parameters (`a` or `b` a non-positive integer) give the
/// polynomial for any `x`; otherwise the power series is summed for
/// `-1 < x < 1`.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, x: f64) -> Result<Complex64> {
    gauss_2f1_with(a, b, c, x, SeriesControl::default())
}

pub fn gauss_2f1_with(a: Complex64, b: Complex64, c: Complex64, x: f64, ctl: SeriesControl) -> Result<Complex64> {
    let degree = terminating_degree(a, b);
    check_argument(x, degree.is_some())?;
    if let Some(nc) = complex_nonpositive_integer(c) {
        match degree {
            Some(k) if k <= -nc => {}
            _ => return Err(Error::ParameterPole(c.re)),
        }
    }
    if x == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    hyper_series(Complex64::new(1.0, 0.0), a, b, c, x, degree, ctl)
}

/// Regularized hypergeometric function split as `x^shift * scaled`.
///
/// `₂F̃₁(a, b; c; x) = Σ (a)_s (b)_s x^s / (s! Γ(c+s))` is entire in `c`.
/// When `c = -N` the first `N+1` terms vanish and the remaining series is
/// returned with the factor `x^(N+1)` pulled out, so callers can combine
/// it with their own power prefactors without dividing zero by zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Regularized2F1 {
    pub shift: u32,
    pub scaled: Complex64,
}

impl Regularized2F1 {
    pub fn value(&self, x: f64) -> Complex64 {
        self.scaled * x.powi(self.shift as i32)
    }
}

pub fn gauss_2f1_regularized_split(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: f64,
    ctl: SeriesControl,
) -> Result<Regularized2F1> {
    let degree = terminating_degree(a, b);
    check_argument(x, degree.is_some())?;
    let Some(nc) = complex_nonpositive_integer(c) else {
        let inv_c = inv_gamma(c);
        let f = if x == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            hyper_series(Complex64::new(1.0, 0.0), a, b, c, x, degree, ctl)?
        };
        return Ok(Regularized2F1 { shift: 0, scaled: f * inv_c });
    };
    let s0 = 1 - nc;
    // (a)_{s0} (b)_{s0} / s0!
    let mut lead = Complex64::new(1.0, 0.0);
    for j in 0..s0 {
        let jf = j as f64;
        lead = lead * (a + jf) * (b + jf) / (jf + 1.0);
    }
    let remaining = degree.map(|k| (k - s0).max(0));
    if lead == Complex64::new(0.0, 0.0) {
        return Ok(Regularized2F1 { shift: s0 as u32, scaled: lead });
    }
    let s0f = s0 as f64;
    let tail = if x == 0.0 {
        lead
    } else {
        hyper_series(lead, a + s0f, b + s0f, Complex64::new(s0f + 1.0, 0.0), x, remaining, ctl)?
    };
    Ok(Regularized2F1 { shift: s0 as u32, scaled: tail })
}

pub fn gauss_2f1_regularized(a: Complex64, b: Complex64, c: Complex64, x: f64) -> Result<Complex64> {
    gauss_2f1_regularized_split(a, b, c, x, SeriesControl::default()).map(|r| r.value(x))
}

/// Real-parameter convenience wrapper.
pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
