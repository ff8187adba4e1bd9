//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls into the library's special-function kernels: the
//! gamma function is a shifted Stirling series, series are summed by term
//! recurrences, and closed forms are written out by hand.

#![allow(dead_code)]

use std::f64::consts::PI;

use lorentz_core::Complex64;

pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn cx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `Γ(z)` by upward recurrence to `Re z ≥ 20`, Stirling's series there, and
/// reflection for `Re z < 1/2`.
pub fn cgamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        return cx(PI) / ((cx(PI) * z).sin() * cgamma(cx(1.0) - z));
    }
    let mut shift = cx(1.0);
    let mut w = z;
    while w.re < 20.0 {
        shift *= w;
        w += 1.0;
    }
    // ln Γ(w) = (w - 1/2) ln w - w + ln(2π)/2 + Σ B_2k / (2k(2k-1) w^{2k-1})
    let b = [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0];
    let inv = cx(1.0) / w;
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in b {
        corr += c * p;
        p *= inv2;
    }
    let lg = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + corr;
    lg.exp() / shift
}

pub fn fact(k: i64) -> f64 {
    (1..=k).map(|v| v as f64).product()
}

/// `1/k!` with the convention `1/Γ(non-positive integer) = 0`.
pub fn inv_fact(k: i64) -> f64 {
    if k < 0 {
        0.0
    } else {
        1.0 / fact(k)
    }
}

/// Square root with the branch cut just below the negative real axis:
/// negative reals map to `+i sqrt|w|`.
pub fn sqrt_upper(w: Complex64) -> Complex64 {
    if w.im == 0.0 && w.re < 0.0 {
        Complex64::new(0.0, (-w.re).sqrt())
    } else {
        w.sqrt()
    }
}

/// `𝔓^{-1/2+iρ}_mn(cosh τ)` by the power series in `tanh²(τ/2)`, with the
/// gamma quadruple root `Γ(z+lo)Γ(z-hi)Π_j sqrt(-ρ²-(lo+j+1/2)²)`,
/// `z = iρ + 1/2`. Terms follow the ratio recurrence, so only the first
/// uses gamma values.
pub fn principal_oracle(rho: Complex64, m: f64, n: f64, tau: f64) -> Complex64 {
    let z = I * rho + 0.5;
    let (lo, hi) = (m.min(n), m.max(n));
    let d = (hi - lo).round() as i64;
    let mut root = cgamma(z + lo) * cgamma(z - hi);
    for j in 0..d {
        let a = lo + j as f64 + 0.5;
        root *= sqrt_upper(-rho * rho - a * a);
    }
    let t2 = (tau / 2.0).tanh().powi(2);
    let s0 = (m - n).max(0.0).round() as i64;
    // term_s = T^{2s} / (s! Γ(z-n-s) Γ(n-m+s+1) Γ(z+m-s))
    let mut term = cx(t2.powi(s0 as i32) / fact(s0) / fact((n - m).round() as i64 + s0))
        / (cgamma(z - n - s0 as f64) * cgamma(z + m - s0 as f64));
    let mut sum = Complex64::new(0.0, 0.0);
    let mut s = s0;
    let mut small = 0;
    while small < 5 && s < s0 + 20000 {
        sum += term;
        small = if term.norm() < 1e-18 * sum.norm() { small + 1 } else { 0 };
        let sf = s as f64;
        // 1/Γ(w - s - 1) = (w - s - 1)/Γ(w - s)
        term = term * t2 * (z - n - sf - 1.0) * (z + m - sf - 1.0) / ((sf + 1.0) * (n - m + sf + 1.0));
        s += 1;
    }
    let ch = (tau / 2.0).cosh();
    let th = (tau / 2.0).tanh();
    let pow = ((2.0 * I * rho - 1.0) * ch.ln()).exp();
    root * pow * th.powf(n - m) * sum
}

/// Legendre function `P_{-1/2+iρ}(cosh τ)` by the Laplace integral
/// `(1/π)∫_0^π (cosh τ + sinh τ cos φ)^{-1/2+iρ} dφ`, trapezoid rule (the
/// integrand extends to a smooth periodic function, so the rule converges
/// geometrically).
pub fn conical_laplace(rho: f64, tau: f64) -> Complex64 {
    let nu = Complex64::new(-0.5, rho);
    let n = 4000;
    let h = PI / n as f64;
    let f = |phi: f64| ((tau.cosh() + tau.sinh() * phi.cos()).ln() * nu).exp();
    let mut s = (f(0.0) + f(PI)) * 0.5;
    for k in 1..n {
        s += f(k as f64 * h);
    }
    s * h / PI
}

/// `P_ν(x) = ₂F₁(-ν, ν+1; 1; (1-x)/2)` summed directly; valid for
/// `|1-x| < 2`.
pub fn conical_hyp_series(rho: f64, tau: f64) -> Complex64 {
    let nu = Complex64::new(-0.5, rho);
    let x = (1.0 - tau.cosh()) / 2.0;
    assert!(x.abs() < 1.0, "series oracle needs cosh τ < 3");
    let mut term = cx(1.0);
    let mut sum = term;
    for k in 0..5000 {
        let kf = k as f64;
        term = term * (-nu + kf) * (nu + 1.0 + kf) / ((kf + 1.0) * (kf + 1.0)) * x;
        sum += term;
        if term.norm() < 1e-19 {
            break;
        }
    }
    sum
}

/// SU(2) function `P^l_mn(cos θ)` by the tan-form finite sum with real
/// factorials.
pub fn wigner_oracle(l: f64, m: f64, n: f64, theta: f64) -> Complex64 {
    let ri = |x: f64| x.round() as i64;
    let pref = (fact(ri(l - m)) * fact(ri(l + m)) * fact(ri(l - n)) * fact(ri(l + n))).sqrt();
    let t = (theta / 2.0).tan();
    let c = (theta / 2.0).cos();
    let mut sum = Complex64::new(0.0, 0.0);
    let jmin = 0.max(ri(n - m));
    let jmax = ri(l - m).min(ri(l + n));
    for j in jmin..=jmax {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let den = inv_fact(j) * inv_fact(ri(l - m) - j) * inv_fact(ri(l + n) - j) * inv_fact(ri(m - n) + j);
        sum += cx(sign * t.powi(2 * j as i32) * den);
    }
    let phase = I.powi(ri(m - n).rem_euclid(4) as i32);
    phase * pref * c.powf(2.0 * l) * t.powf(m - n) * sum
}

/// Double-sum form of the principal-series hyperspherical function
/// `Σ_t P^{l0}_mt(cos θ) 𝔓^{-1/2+iρ}_tn(cosh τ)`, evaluated entirely with
/// the oracles above.
pub fn principal_z_oracle(rho: f64, l0: f64, m: f64, n: f64, theta: f64, tau: f64) -> Complex64 {
    let steps = (2.0 * l0).round() as i64;
    (0..=steps)
        .map(|k| {
            let t = -l0 + k as f64;
            wigner_oracle(l0, m, t, theta) * principal_oracle(cx(rho), t, n, tau)
        })
        .sum()
}

/// Angles `(φ, ε_φ, θ, τ, ψ, ε_ψ)` as plain numbers.
#[derive(Clone, Copy, Debug)]
pub struct Angles {
    pub phi: f64,
    pub eps_phi: f64,
    pub theta: f64,
    pub tau: f64,
    pub psi: f64,
    pub eps_psi: f64,
}

/// `T_{1/2}` written out in real parameters, rows and columns ordered
/// `(-1/2, 1/2)`.
pub fn t_half_closed(a: &Angles) -> [[Complex64; 2]; 2] {
    let (c2, s2) = ((a.theta / 2.0).cos(), (a.theta / 2.0).sin());
    let (ch, sh) = ((a.tau / 2.0).cosh(), (a.tau / 2.0).sinh());
    let diag = Complex64::new(c2 * ch, s2 * sh);
    let off = Complex64::new(c2 * sh, s2 * ch);
    let e = |re: f64, im: f64| Complex64::new(re / 2.0, im / 2.0).exp();
    [
        [diag * e(a.eps_phi + a.eps_psi, a.phi + a.psi), off * e(a.eps_phi - a.eps_psi, a.phi - a.psi)],
        [off * e(a.eps_psi - a.eps_phi, a.psi - a.phi), diag * e(-a.eps_phi - a.eps_psi, -(a.phi + a.psi))],
    ]
}

/// `T_1` from its entries in `θ^c`, rows and columns ordered `(-1, 0, 1)`.
pub fn t_one_closed(a: &Angles) -> [[Complex64; 3]; 3] {
    let th = Complex64::new(a.theta, -a.tau);
    let phic = Complex64::new(a.phi, -a.eps_phi);
    let psic = Complex64::new(a.psi, -a.eps_psi);
    let c2 = (th / 2.0).cos().powi(2);
    let s2 = (th / 2.0).sin().powi(2);
    let r = I / 2f64.sqrt() * th.sin();
    let z = [[c2, r, -s2], [r, th.cos(), r], [-s2, r, c2]];
    let w = [-1.0, 0.0, 1.0];
    let mut out = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (-I * (phic * w[i] + psic * w[j])).exp() * z[i][j];
        }
    }
    out
}

/// Reference grid for closed-form comparisons: 5 values each of `θ` and `τ`
/// and 3 of `φ`.
pub fn closed_form_grid() -> Vec<Angles> {
    let thetas = [0.0, 0.6, 1.3, 2.2, 3.0];
    let taus = [0.0, 0.25, 0.7, 1.4, 2.5];
    let phis = [0.0, 1.1, 4.0];
    let mut out = Vec::new();
    for &theta in &thetas {
        for &tau in &taus {
            for &phi in &phis {
                out.push(Angles { phi, eps_phi: 0.35, theta, tau, psi: -0.9, eps_psi: -0.6 });
            }
        }
    }
    out
}
