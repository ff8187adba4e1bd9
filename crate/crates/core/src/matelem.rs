//! Matrix elements on the six-parameter group manifold and the
//! representation matrices `T_l`.
//!
//! A group element is given by complex Euler angles `φ^c = φ - iε_φ`,
//! `θ^c = θ - iτ`, `ψ^c = ψ - iε_ψ`. Finite-dimensional matrix elements are
//! `𝔐^l_mn = e^{-i(mφ^c + nψ^c)} Z^l_mn(cos θ^c)` with row index `m` and
//! column index `n`, both running over `-l..l`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::hypersph::{
    hyperspherical_z, hyperspherical_z_principal_hyp, hyperspherical_z_principal_with, ComplexAngle,
};
use crate::numkernel::SeriesControl;
use crate::su11::{jacobi_p_supplementary_with, SupplementaryIndex};
use crate::su2::WeightTriple;

/// Default largest `l` for dense matrices.
pub const DEFAULT_L_CAP: f64 = 25.0;

/// Complex Euler angles of an SL(2,C) element.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ComplexEulerAngles {
    pub phi: f64,
    pub eps_phi: f64,
    pub theta: f64,
    pub tau: f64,
    pub psi: f64,
    pub eps_psi: f64,
}

impl ComplexEulerAngles {
    pub const IDENTITY: ComplexEulerAngles =
        ComplexEulerAngles { phi: 0.0, eps_phi: 0.0, theta: 0.0, tau: 0.0, psi: 0.0, eps_psi: 0.0 };

    pub fn new(phi: f64, eps_phi: f64, theta: f64, tau: f64, psi: f64, eps_psi: f64) -> Self {
        ComplexEulerAngles { phi, eps_phi, theta, tau, psi, eps_psi }
    }

    /// Pure rotation `(φ, θ, ψ)`.
    pub fn rotation(phi: f64, theta: f64, psi: f64) -> Self {
        ComplexEulerAngles { phi, theta, psi, ..Default::default() }
    }

    pub fn phi_c(&self) -> Complex64 {
        Complex64::new(self.phi, -self.eps_phi)
    }

    pub fn theta_c(&self) -> Complex64 {
        Complex64::new(self.theta, -self.tau)
    }

    pub fn psi_c(&self) -> Complex64 {
        Complex64::new(self.psi, -self.eps_psi)
    }

    pub fn angle(&self) -> ComplexAngle {
        ComplexAngle::new(self.theta, self.tau)
    }

    pub fn check(&self) -> Result<()> {
        let all = [self.phi, self.eps_phi, self.theta, self.tau, self.psi, self.eps_psi];
        if all.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::Domain(format!("angles {self:?} are not all finite")))
        }
    }
}

/// Dense square complex matrix, optionally labelled by weights.
///
/// `labels` holds the weight of each row (and column); it is empty for
/// matrices on bases without a single weight label.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    labels: Vec<HalfInt>,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, labels: Vec::new(), data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Attaches weight labels; their number must equal the dimension.
    pub fn with_labels(mut self, labels: Vec<HalfInt>) -> Self {
        assert_eq!(labels.len(), self.dim, "label count must equal dimension");
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[HalfInt] {
        &self.labels
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.dim + c] = v;
    }

    /// Entry addressed by row weight `m` and column weight `n`.
    pub fn entry(&self, m: HalfInt, n: HalfInt) -> Option<Complex64> {
        let r = self.labels.iter().position(|&x| x == m)?;
        let c = self.labels.iter().position(|&x| x == n)?;
        Some(self.get(r, c))
    }

    fn zip(&self, o: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            labels: self.labels.clone(),
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix { dim: self.dim, labels: self.labels.clone(), data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        out.labels = self.labels.clone();
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * o.get(k, c);
                }
            }
        }
        out
    }

    /// `AB - BA`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::from_fn(self.dim, |r, c| self.get(c, r).conj());
        m.labels = self.labels.clone();
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.sub(o).max_abs()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let piv = (col..n).max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm())).unwrap();
            if a[piv * n + col].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if piv != col {
                for k in 0..n {
                    a.swap(piv * n + k, col * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] -= f * v;
                }
            }
        }
        det
    }

    /// `‖M†M - I‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        self.adjoint().mul(self).max_abs_diff(&Self::identity(self.dim))
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| format!("{}", self.get(r, c))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `e^{-i(mφ^c + nψ^c)}`, equivalently `e^{-m(ε_φ+iφ) - n(ε_ψ+iψ)}`.
fn phase_prefactor(m: HalfInt, n: HalfInt, g: &ComplexEulerAngles) -> Complex64 {
    let (m, n) = (m.to_f64(), n.to_f64());
    Complex64::new(-m * g.eps_phi - n * g.eps_psi, -m * g.phi - n * g.psi).exp()
}

/// `𝔐^l_mn(g)`. The dotted variant uses the conjugate angles
/// `φ̇^c = φ + iε_φ`, `θ̇^c = θ + iτ`, `ψ̇^c = ψ + iε_ψ` and the prefactor
/// `e^{+i(mφ̇^c + nψ̇^c)}`.
pub fn matrix_element_findim(idx: WeightTriple, g: &ComplexEulerAngles, dotted: bool) -> Result<Complex64> {
    idx.check()?;
    g.check()?;
    if !dotted {
        let z = hyperspherical_z(idx, g.angle())?;
        return Ok(phase_prefactor(idx.m, idx.n, g) * z);
    }
    let (m, n) = (idx.m.to_f64(), idx.n.to_f64());
    let pre = Complex64::new(-m * g.eps_phi - n * g.eps_psi, m * g.phi + n * g.psi).exp();
    let z = hyperspherical_z(idx, ComplexAngle::new(g.theta, -g.tau))?;
    Ok(pre * z)
}

fn check_cap(l: HalfInt, cap: f64) -> Result<()> {
    if l.is_negative() {
        return Err(Error::Index(format!("l = {l} is negative")));
    }
    if l.to_f64() > cap {
        return Err(Error::Domain(format!("l = {l} exceeds the configured cap {cap}")));
    }
    Ok(())
}

/// `T_l(g)` with entry `(m, n) = 𝔐^l_mn(g)`.
pub fn rep_matrix(l: HalfInt, g: &ComplexEulerAngles) -> Result<ComplexMatrix> {
    rep_matrix_with_cap(l, g, DEFAULT_L_CAP)
}

pub fn rep_matrix_with_cap(l: HalfInt, g: &ComplexEulerAngles, cap: f64) -> Result<ComplexMatrix> {
    check_cap(l, cap)?;
    g.check()?;
    let w: Vec<HalfInt> = l.weights().collect();
    let dim = w.len();
    let mut out = ComplexMatrix::zeros(dim).with_labels(w.clone());
    for (r, &m) in w.iter().enumerate() {
        for (c, &n) in w.iter().enumerate() {
            out.set(r, c, matrix_element_findim(WeightTriple { l, m, n }, g, false)?);
        }
    }
    Ok(out)
}

/// The fundamental 2×2 matrix `T_{1/2}(g)`, rows and columns ordered
/// `(-1/2, 1/2)`. Its determinant is one.
pub fn sl2c_from_angles(g: &ComplexEulerAngles) -> Result<ComplexMatrix> {
    rep_matrix(HalfInt::HALF, g)
}

const DEGENERATE_EPS: f64 = 1e-7;

/// Reduces `φ` to `[0, 2π)` and `ψ` to `[-2π, 2π)`, keeping the element.
///
/// Shifting `φ` by `2πk` together with `ψ` by `-2πk`, or `ψ` alone by `4π`,
/// leaves `T_{1/2}` unchanged.
fn normalize(mut g: ComplexEulerAngles) -> ComplexEulerAngles {
    let k = (g.phi / (2.0 * PI)).floor();
    g.phi -= 2.0 * PI * k;
    g.psi += 2.0 * PI * k;
    if g.phi >= 2.0 * PI {
        g.phi -= 2.0 * PI;
        g.psi += 2.0 * PI;
    }
    let j = ((g.psi + 2.0 * PI) / (4.0 * PI)).floor();
    g.psi -= 4.0 * PI * j;
    if g.psi >= 2.0 * PI {
        g.psi -= 4.0 * PI;
    }
    g
}

fn from_complex(phi_c: Complex64, theta_c: Complex64, psi_c: Complex64) -> ComplexEulerAngles {
    ComplexEulerAngles {
        phi: phi_c.re,
        eps_phi: -phi_c.im,
        theta: theta_c.re,
        tau: -theta_c.im,
        psi: psi_c.re,
        eps_psi: -psi_c.im,
    }
}

/// Complex Euler angles of a 2×2 matrix of unit determinant, inverting
/// [`sl2c_from_angles`].
pub fn angles_from_sl2c(mat: &ComplexMatrix) -> Result<ComplexEulerAngles> {
    if mat.dim() != 2 {
        return Err(Error::Domain("angle extraction needs a 2x2 matrix".into()));
    }
    let (a, b, c, d) = (mat.get(0, 0), mat.get(0, 1), mat.get(1, 0), mat.get(1, 1));
    let i = Complex64::new(0.0, 1.0);
    let zero = Complex64::new(0.0, 0.0);
    if b == zero && c == zero {
        // θ^c = 0: only φ^c + ψ^c is determined.
        let sum = -i * a.ln() * 2.0;
        return Ok(normalize(from_complex(zero, zero, sum)));
    }
    if a == zero && d == zero {
        // θ^c = π: only φ^c - ψ^c is determined.
        let diff = -i * (b / i).ln() * 2.0;
        return Ok(normalize(from_complex(zero, Complex64::new(PI, 0.0), -diff)));
    }
    let w = a * d + b * c;
    let mut th = w.acos();
    // On the real boundary lines choose the representative with τ >= 0.
    if th.re.abs() < 1e-300 && th.im > 0.0 {
        th = -th;
    } else if (th.re - PI).abs() < 1e-15 && th.im > 0.0 {
        th = Complex64::new(2.0 * PI, 0.0) - th;
        th.re = PI;
    }
    let ch = (th / 2.0).cos();
    let sh = (th / 2.0).sin();
    if sh.norm() < DEGENERATE_EPS || ch.norm() < DEGENERATE_EPS {
        return Err(Error::DegenerateExtraction(format!("θ^c = {th} is too close to 0 or π for a stable phase split")));
    }
    let l1 = (a / ch).ln();
    let l2 = (b / (i * sh)).ln();
    let phi_c = -i * (l1 + l2);
    let psi_c = -i * (l1 - l2);
    Ok(normalize(from_complex(phi_c, th, psi_c)))
}

/// Angles of the product `T_{1/2}(g1) T_{1/2}(g2)`.
pub fn angles_compose(g1: &ComplexEulerAngles, g2: &ComplexEulerAngles) -> Result<ComplexEulerAngles> {
    let prod = sl2c_from_angles(g1)?.mul(&sl2c_from_angles(g2)?);
    angles_from_sl2c(&prod)
}

/// `𝔐^{-1/2+iρ, l0}_mn(g) = e^{-m(ε_φ+iφ)} Z^{-1/2+iρ, l0}_mn(cos θ^c) e^{-n(ε_ψ+iψ)}`.
pub fn matrix_element_principal(
    rho: f64,
    l0: HalfInt,
    m: HalfInt,
    n: HalfInt,
    g: &ComplexEulerAngles,
) -> Result<Complex64> {
    matrix_element_principal_with(rho, l0, m, n, g, SeriesControl::default())
}

pub fn matrix_element_principal_with(
    rho: f64,
    l0: HalfInt,
    m: HalfInt,
    n: HalfInt,
    g: &ComplexEulerAngles,
    ctl: SeriesControl,
) -> Result<Complex64> {
    g.check()?;
    let z = hyperspherical_z_principal_with(rho, l0, m, n, g.angle(), ctl)?;
    Ok(phase_prefactor(m, n, g) * z)
}

/// Same element through the hypergeometric forms of both factors.
pub fn matrix_element_principal_hyp(
    rho: f64,
    l0: HalfInt,
    m: HalfInt,
    n: HalfInt,
    g: &ComplexEulerAngles,
    ctl: SeriesControl,
) -> Result<Complex64> {
    g.check()?;
    let z = hyperspherical_z_principal_hyp(rho, l0, m, n, g.angle(), ctl)?;
    Ok(phase_prefactor(m, n, g) * z)
}

/// `𝔐^{-1/2-σ}_mn(g) = e^{-m(ε_φ+iφ)} 𝔓^{-1/2-σ}_mn(cosh τ) e^{-n(ε_ψ+iψ)}`;
/// independent of `θ`.
pub fn matrix_element_supplementary(sigma: f64, m: HalfInt, n: HalfInt, g: &ComplexEulerAngles) -> Result<Complex64> {
    matrix_element_supplementary_with(sigma, m, n, g, SeriesControl::default())
}

pub fn matrix_element_supplementary_with(
    sigma: f64,
    m: HalfInt,
    n: HalfInt,
    g: &ComplexEulerAngles,
    ctl: SeriesControl,
) -> Result<Complex64> {
    g.check()?;
    let p = jacobi_p_supplementary_with(SupplementaryIndex { sigma, m, n }, g.tau, ctl)?;
    Ok(phase_prefactor(m, n, g) * p)
}
