//! Representation labels and the parameter algebra connecting them.
//!
//! Labels appear in three coordinate systems: the Gel'fand-Naimark pair
//! `(l0, l1)`, the Van der Waerden weights `(l, l̇)`, and the unitary-series
//! parameters `(λ, ρ)` or `σ`. The maps and eigenvalue formulas are written
//! once over a [`Field`] so that they can be evaluated either in floating
//! point or exactly over complex rationals.

use std::fmt::Debug;

use num_complex::{Complex, Complex64};
use num_rational::Rational64;
use num_traits::{Num, Zero};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::matelem::ComplexMatrix;

/// Scalar field for the label algebra.
pub trait Field: Clone + PartialEq + Debug + Num + std::ops::Neg<Output = Self> {
    fn from_ratio(num: i64, den: i64) -> Self;
    fn imag_unit() -> Self;

    fn from_half(h: HalfInt) -> Self {
        Self::from_ratio(h.twice(), 2)
    }
}

impl Field for Complex64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
}

/// Exact complex rationals.
pub type ExactComplex = Complex<Rational64>;

impl Field for ExactComplex {
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(Rational64::new(num, den), Rational64::zero())
    }
    fn imag_unit() -> Self {
        Complex::new(Rational64::zero(), Rational64::from_integer(1))
    }
}

/// A representation label.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RepLabel {
    FiniteDim { l: HalfInt, ldot: HalfInt },
    Principal { l0: HalfInt, rho: f64 },
    Supplementary { sigma: f64 },
}

impl RepLabel {
    pub fn check(&self) -> Result<()> {
        match *self {
            RepLabel::FiniteDim { l, ldot } => {
                if l.is_negative() || ldot.is_negative() {
                    return Err(Error::Index(format!("weights must be non-negative (l={l}, ldot={ldot})")));
                }
            }
            RepLabel::Principal { l0, rho } => {
                if l0.is_negative() || !rho.is_finite() {
                    return Err(Error::Index(format!("invalid principal label (l0={l0}, rho={rho})")));
                }
            }
            RepLabel::Supplementary { sigma } => {
                if !(sigma.is_finite() && sigma != 0.0) {
                    return Err(Error::Index(format!("sigma = {sigma} must be finite and nonzero")));
                }
            }
        }
        Ok(())
    }

    /// The Gel'fand-Naimark pair of this label.
    pub fn to_gn(&self) -> Result<GnPair> {
        self.check()?;
        Ok(match *self {
            RepLabel::FiniteDim { l, ldot } => waerden_to_gn::<Complex64>(l, ldot),
            RepLabel::Principal { l0, rho } => principal_to_gn(l0.twice(), Complex64::new(rho, 0.0)).0,
            RepLabel::Supplementary { sigma } => supplementary_to_gn(sigma)?,
        })
    }
}

/// Gel'fand-Naimark pair `(l0, l1)` over a scalar field.
#[derive(Clone, Debug, PartialEq)]
pub struct GnPairOf<S> {
    pub l0: HalfInt,
    pub l1: S,
}

pub type GnPair = GnPairOf<Complex64>;
pub type ExactGnPair = GnPairOf<ExactComplex>;

impl<S: Field> GnPairOf<S> {
    pub fn new(l0: HalfInt, l1: S) -> Self {
        GnPairOf { l0, l1 }
    }
}

/// `(l, l̇) = ((l0 + l1 - 1)/2, (l1 - l0 - 1)/2)`.
///
/// The second component is written so that finite-dimensional pairs
/// `(l0, l1) = (l - l̇, l + l̇ + 1)` return non-negative weights; the pair is
/// only defined up to the overall sign `(l0, l1) ~ (-l0, -l1)`.
pub fn gn_to_waerden<S: Field>(p: &GnPairOf<S>) -> (S, S) {
    let l0 = S::from_half(p.l0);
    let one = S::from_ratio(1, 1);
    let half = S::from_ratio(1, 2);
    let l = (l0.clone() + p.l1.clone() - one.clone()) * half.clone();
    let ld = (p.l1.clone() - l0 - one) * half;
    (l, ld)
}

/// Inverse of [`gn_to_waerden`] on finite-dimensional labels:
/// `l0 = l - l̇`, `l1 = l + l̇ + 1`. For `l̇ > l` the first entry is negative.
pub fn waerden_to_gn<S: Field>(l: HalfInt, ldot: HalfInt) -> GnPairOf<S> {
    GnPairOf { l0: l - ldot, l1: S::from_half(l + ldot + HalfInt::ONE) }
}

/// Principal series `(λ, ρ)` to `(l0, l1)`: `l0 = |λ/2|`,
/// `l1 = -i sign(λ) ρ/2`. For `λ = 0` the sign is ambiguous; the `+iρ/2`
/// branch is returned together with `true`.
pub fn principal_to_gn<S: Field>(lambda: i64, rho: S) -> (GnPairOf<S>, bool) {
    let l0 = HalfInt::from_twice(lambda.abs());
    let half_rho = rho * S::from_ratio(1, 2);
    match lambda.signum() {
        0 => (GnPairOf { l0, l1: S::imag_unit() * half_rho }, true),
        s => (GnPairOf { l0, l1: -(S::imag_unit() * S::from_ratio(s, 1)) * half_rho }, false),
    }
}

/// Supplementary series: `(l0, l1) = (0, σ/2)`. The sign of `l1` is
/// immaterial; `σ` is passed through unchanged.
pub fn supplementary_to_gn(sigma: f64) -> Result<GnPair> {
    if !(sigma.is_finite() && sigma != 0.0) {
        return Err(Error::Domain(format!("sigma = {sigma} must be finite and nonzero")));
    }
    Ok(GnPairOf { l0: HalfInt::ZERO, l1: Complex64::new(sigma / 2.0, 0.0) })
}

/// Exact variant of [`supplementary_to_gn`] for rational `σ = num/den`.
pub fn supplementary_to_gn_exact(num: i64, den: i64) -> Result<ExactGnPair> {
    if num == 0 || den == 0 {
        return Err(Error::Domain("sigma must be a nonzero rational".into()));
    }
    Ok(GnPairOf { l0: HalfInt::ZERO, l1: ExactComplex::from_ratio(num, 2 * den) })
}

/// Casimir eigenvalues `Δ = -2(l0² + l1² - 1)`, `Δ' = -4i l0 l1`.
pub fn casimir_eigenvalues<S: Field>(p: &GnPairOf<S>) -> (S, S) {
    let l0 = S::from_half(p.l0);
    let one = S::from_ratio(1, 1);
    let delta = S::from_ratio(-2, 1) * (l0.clone() * l0.clone() + p.l1.clone() * p.l1.clone() - one);
    let delta_p = S::from_ratio(-4, 1) * S::imag_unit() * l0 * p.l1.clone();
    (delta, delta_p)
}

/// Laplace-Beltrami eigenvalues `(X², Y²) = ((Δ - iΔ')/8, (Δ + iΔ')/8)`.
///
/// With the eigenvalue normalization of [`casimir_eigenvalues`] these
/// equal `(-l(l+1), -l̇(l̇+1))` for `(l, l̇)` from [`gn_to_waerden`].
pub fn lb_eigenvalues<S: Field>(p: &GnPairOf<S>) -> (S, S) {
    let (d, dp) = casimir_eigenvalues(p);
    let eighth = S::from_ratio(1, 8);
    let idp = S::imag_unit() * dp;
    ((d.clone() - idp.clone()) * eighth.clone(), (d + idp) * eighth)
}

/// `-l(l+1)` evaluated in the field.
pub fn minus_l_lp1<S: Field>(l: S) -> S {
    -(l.clone() * (l + S::from_ratio(1, 1)))
}

/// Ladder matrices on the `(2l+1)(2l̇+1)`-dimensional product basis
/// `|l, m; l̇, ṁ⟩`, ordered with `m` ascending outer and `ṁ` ascending inner.
#[derive(Clone, Debug)]
pub struct Ladders {
    pub basis: Vec<(HalfInt, HalfInt)>,
    pub x_plus: ComplexMatrix,
    pub x_minus: ComplexMatrix,
    pub x3: ComplexMatrix,
    pub y_plus: ComplexMatrix,
    pub y_minus: ComplexMatrix,
    pub y3: ComplexMatrix,
}

impl Ladders {
    /// `X1 = (X+ + X-)/2`, `X2 = (X+ - X-)/(2i)`, `X3`.
    pub fn x_cartesian(&self) -> [ComplexMatrix; 3] {
        cartesian(&self.x_plus, &self.x_minus, &self.x3)
    }

    pub fn y_cartesian(&self) -> [ComplexMatrix; 3] {
        cartesian(&self.y_plus, &self.y_minus, &self.y3)
    }

    /// `-(X1² + X2² + X3²)`, which is `-l(l+1)` times the identity.
    pub fn x_casimir(&self) -> ComplexMatrix {
        neg_sum_squares(&self.x_cartesian())
    }

    pub fn y_casimir(&self) -> ComplexMatrix {
        neg_sum_squares(&self.y_cartesian())
    }
}

fn cartesian(p: &ComplexMatrix, m: &ComplexMatrix, z: &ComplexMatrix) -> [ComplexMatrix; 3] {
    let x1 = p.add(m).scale(Complex64::new(0.5, 0.0));
    let x2 = p.sub(m).scale(Complex64::new(0.0, -0.5));
    [x1, x2, z.clone()]
}

fn neg_sum_squares(xs: &[ComplexMatrix; 3]) -> ComplexMatrix {
    let mut acc = xs[0].mul(&xs[0]);
    for x in &xs[1..] {
        acc = acc.add(&x.mul(x));
    }
    acc.scale(Complex64::new(-1.0, 0.0))
}

/// `J+|m⟩ = sqrt((l-m)(l+m+1)) |m+1⟩`.
fn raise_coef(l: HalfInt, m: HalfInt) -> f64 {
    let (l, m) = (l.to_f64(), m.to_f64());
    ((l - m) * (l + m + 1.0)).max(0.0).sqrt()
}

/// `J-|m⟩ = sqrt((l+m)(l-m+1)) |m-1⟩`.
fn lower_coef(l: HalfInt, m: HalfInt) -> f64 {
    let (l, m) = (l.to_f64(), m.to_f64());
    ((l + m) * (l - m + 1.0)).max(0.0).sqrt()
}

pub fn ladder_matrices(l: HalfInt, ldot: HalfInt) -> Result<Ladders> {
    if l.is_negative() || ldot.is_negative() {
        return Err(Error::Index(format!("weights must be non-negative (l={l}, ldot={ldot})")));
    }
    let basis: Vec<(HalfInt, HalfInt)> = l.weights().flat_map(|m| ldot.weights().map(move |md| (m, md))).collect();
    let dim = basis.len();
    let pos = |m: HalfInt, md: HalfInt| -> Option<usize> { basis.iter().position(|&b| b == (m, md)) };
    let zero = || ComplexMatrix::zeros(dim);
    let (mut xp, mut xm, mut x3, mut yp, mut ym, mut y3) = (zero(), zero(), zero(), zero(), zero(), zero());
    for (col, &(m, md)) in basis.iter().enumerate() {
        x3.set(col, col, Complex64::new(m.to_f64(), 0.0));
        y3.set(col, col, Complex64::new(md.to_f64(), 0.0));
        if let Some(row) = pos(m + HalfInt::ONE, md) {
            xp.set(row, col, Complex64::new(raise_coef(l, m), 0.0));
        }
        if let Some(row) = pos(m - HalfInt::ONE, md) {
            xm.set(row, col, Complex64::new(lower_coef(l, m), 0.0));
        }
        if let Some(row) = pos(m, md + HalfInt::ONE) {
            yp.set(row, col, Complex64::new(raise_coef(ldot, md), 0.0));
        }
        if let Some(row) = pos(m, md - HalfInt::ONE) {
            ym.set(row, col, Complex64::new(lower_coef(ldot, md), 0.0));
        }
    }
    Ok(Ladders { basis, x_plus: xp, x_minus: xm, x3, y_plus: yp, y_minus: ym, y3 })
}

/// Residuals of the commutation relations for one `(l, l̇)`:
/// `[X_k, X_l] = iε X_m`, `[Y_k, Y_l] = iε Y_m`, `[X_k, Y_l] = 0`,
/// `[X+, X-] = 2X3`. Returns the largest max-norm deviation.
pub fn commutator_residual(lad: &Ladders) -> f64 {
    let x = lad.x_cartesian();
    let y = lad.y_cartesian();
    let i = Complex64::new(0.0, 1.0);
    let mut worst: f64 = 0.0;
    for set in [&x, &y] {
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let lhs = set[a].commutator(&set[b]);
            worst = worst.max(lhs.max_abs_diff(&set[c].scale(i)));
        }
    }
    for xa in &x {
        for yb in &y {
            worst = worst.max(xa.commutator(yb).max_abs());
        }
    }
    let pm = lad.x_plus.commutator(&lad.x_minus);
    worst = worst.max(pm.max_abs_diff(&lad.x3.scale(Complex64::new(2.0, 0.0))));
    let pm = lad.y_plus.commutator(&lad.y_minus);
    worst.max(pm.max_abs_diff(&lad.y3.scale(Complex64::new(2.0, 0.0))))
}

/// Largest deviation of the ladder-built Casimirs from `x2·I` and `y2·I`,
/// with `(x2, y2)` from [`lb_eigenvalues`].
pub fn ladder_casimir_residual(l: HalfInt, ldot: HalfInt) -> Result<f64> {
    let lad = ladder_matrices(l, ldot)?;
    let (x2, y2) = lb_eigenvalues(&waerden_to_gn::<Complex64>(l, ldot));
    let dim = lad.basis.len();
    let ex = lad.x_casimir().max_abs_diff(&ComplexMatrix::identity(dim).scale(x2));
    let ey = lad.y_casimir().max_abs_diff(&ComplexMatrix::identity(dim).scale(y2));
    Ok(ex.max(ey))
}

/// Exact checks for one principal label with rational `ρ = num/den`.
///
/// Returns `true` when `(λ/2)² - (ρ/2)² = l0² + l1²`, `λρ = 4i l0 l1`, and
/// the Laplace-Beltrami eigenvalues agree with `-l(l+1)`, `-l̇(l̇+1)` of the
/// mapped weights, all as exact rational identities.
pub fn principal_identities_exact(lambda: i64, rho_num: i64, rho_den: i64) -> bool {
    let rho = ExactComplex::from_ratio(rho_num, rho_den);
    let (p, _) = principal_to_gn(lambda, rho);
    let lam = ExactComplex::from_ratio(lambda, 1);
    let half = ExactComplex::from_ratio(1, 2);
    let l0 = ExactComplex::from_half(p.l0);
    let lhs5 = (lam * half) * (lam * half) - (rho * half) * (rho * half);
    let rhs5 = l0 * l0 + p.l1 * p.l1;
    let lhs6 = lam * rho;
    let rhs6 = ExactComplex::from_ratio(4, 1) * ExactComplex::imag_unit() * l0 * p.l1;
    lhs5 == rhs5 && lhs6 == rhs6 && waerden_closure_exact(&p)
}

/// `lb_eigenvalues(p) = (-l(l+1), -l̇(l̇+1))` with `(l, l̇) = gn_to_waerden(p)`,
/// checked exactly.
pub fn waerden_closure_exact(p: &ExactGnPair) -> bool {
    let (l, ld) = gn_to_waerden(p);
    let (x2, y2) = lb_eigenvalues(p);
    x2 == minus_l_lp1(l) && y2 == minus_l_lp1(ld)
}
