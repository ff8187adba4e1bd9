//! Numerical verification: differential-equation residuals,
//! Laplace-Beltrami eigenrelations, the addition theorem, and the
//! homomorphism property of `T_l`.
//!
//! Suites draw their sample points from a ChaCha8 stream seeded by the
//! caller, so a report list is a pure function of `(seed, tolerances)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::casimir::{commutator_residual, ladder_casimir_residual, ladder_matrices, principal_identities_exact};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::hypersph::{hyperspherical_z, ComplexAngle};
use crate::matelem::{angles_compose, matrix_element_findim, rep_matrix_with_cap, ComplexEulerAngles};
use crate::su2::{wigner_p, WeightTriple};

/// Outcome of one named check over a set of sample points.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub check_name: String,
    pub max_abs_residual: f64,
    pub grid_points: usize,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualReport {
    pub fn new(check_name: impl Into<String>, max_abs_residual: f64, grid_points: usize, tolerance: f64) -> Self {
        ResidualReport {
            check_name: check_name.into(),
            max_abs_residual,
            grid_points,
            tolerance,
            pass: max_abs_residual < tolerance,
        }
    }

    /// A check that could not be evaluated; never passes.
    pub fn failed(check_name: impl Into<String>, grid_points: usize, tolerance: f64) -> Self {
        ResidualReport::new(check_name, f64::NAN, grid_points, tolerance)
    }
}

const H_MIN: f64 = 1e-7;
const H_MAX: f64 = 1e-3;

fn check_step(h: f64) -> Result<()> {
    if !(H_MIN..=H_MAX).contains(&h) {
        return Err(Error::Domain(format!("step h = {h} outside [{H_MIN}, {H_MAX}]")));
    }
    Ok(())
}

/// Central-difference stencil for the differential-equation residual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stencil {
    /// Three points, error `O(h²)`.
    Second,
    /// Five points, error `O(h⁴)`.
    Fourth,
}

/// Residual of
/// `(1-z²)w'' - 2zw' - (m²+n²-2mnz)/(1-z²) w + l(l+1)w` for an arbitrary
/// function `w`, with central differences along the real direction through
/// `z`.
pub fn ode_residual_of<F>(
    w: F,
    l: HalfInt,
    m: HalfInt,
    n: HalfInt,
    z: Complex64,
    h: f64,
    stencil: Stencil,
) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    check_step(h)?;
    let one = Complex64::new(1.0, 0.0);
    let reach = if stencil == Stencil::Fourth { 2.0 * h } else { h };
    if (z - one).norm() < 10.0 * reach || (z + one).norm() < 10.0 * reach {
        return Err(Error::SingularPoint(format!("z = {z} within 10h of ±1")));
    }
    let f0 = w(z)?;
    let fp = w(z + h)?;
    let fm = w(z - h)?;
    let (d1, d2) = match stencil {
        Stencil::Second => ((fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)),
        Stencil::Fourth => {
            let fpp = w(z + 2.0 * h)?;
            let fmm = w(z - 2.0 * h)?;
            (
                (fmm - 8.0 * fm + 8.0 * fp - fpp) / (12.0 * h),
                (-fmm + 16.0 * fm - 30.0 * f0 + 16.0 * fp - fpp) / (12.0 * h * h),
            )
        }
    };
    let (l, m, n) = (l.to_f64(), m.to_f64(), n.to_f64());
    let q = one - z * z;
    let r = q * d2 - 2.0 * z * d1 - (m * m + n * n - 2.0 * m * n * z) / q * f0 + l * (l + 1.0) * f0;
    Ok(r.norm())
}

/// Differential-equation residual of `Z^l_mn` at `z = cos θ^c`, with the
/// fourth-order stencil. The second-order one loses about six digits to
/// rounding at the steps where its truncation error is small enough.
pub fn ode_residual(idx: WeightTriple, angle: ComplexAngle, h: f64) -> Result<f64> {
    ode_residual_with(idx, angle, h, Stencil::Fourth)
}

pub fn ode_residual_with(idx: WeightTriple, angle: ComplexAngle, h: f64, stencil: Stencil) -> Result<f64> {
    idx.check()?;
    ode_residual_of(|z| hyperspherical_z(idx, ComplexAngle::from_cos(z)), idx.l, idx.m, idx.n, angle.cos(), h, stencil)
}

/// First and second holomorphic derivative in one complex angle
/// `a + s·i·b` from central differences along `a` and `b`, averaged.
fn holo_derivs(
    f: &dyn Fn(f64, f64) -> Result<Complex64>,
    f0: Complex64,
    h: f64,
    s: f64,
) -> Result<(Complex64, Complex64)> {
    let (ap, am, bp, bm) = (f(h, 0.0)?, f(-h, 0.0)?, f(0.0, h)?, f(0.0, -h)?);
    let da = (ap - am) / (2.0 * h);
    let db = (bp - bm) / (2.0 * h);
    let daa = (ap - 2.0 * f0 + am) / (h * h);
    let dbb = (bp - 2.0 * f0 + bm) / (h * h);
    // ∂_b f = s·i f', ∂_bb f = -f''.
    let d1 = (da - Complex64::new(0.0, s) * db) * 0.5;
    let d2 = (daa - dbb) * 0.5;
    Ok((d1, d2))
}

fn lb_residual(idx: WeightTriple, g: &ComplexEulerAngles, h: f64, dotted: bool) -> Result<f64> {
    check_step(h)?;
    idx.check()?;
    g.check()?;
    // Undotted angles are a - i b, dotted ones a + i b.
    let s = if dotted { 1.0 } else { -1.0 };
    let theta_c = Complex64::new(g.theta, s * g.tau);
    let sin_t = theta_c.sin();
    if sin_t.norm() < 10.0 * h {
        return Err(Error::SingularPoint(format!("sin θ^c = {sin_t} too close to zero")));
    }
    let eval = |d: ComplexEulerAngles| matrix_element_findim(idx, &d, dotted);
    let f0 = eval(*g)?;
    let shifted = |dphi: f64, deps: f64, dth: f64, dtau: f64, dpsi: f64, deps2: f64| {
        let mut d = *g;
        d.phi += dphi;
        d.eps_phi += deps;
        d.theta += dth;
        d.tau += dtau;
        d.psi += dpsi;
        d.eps_psi += deps2;
        eval(d)
    };
    let (_, f_pp) = holo_derivs(&|a, b| shifted(a, b, 0.0, 0.0, 0.0, 0.0), f0, h, s)?;
    let (f_t, f_tt) = holo_derivs(&|a, b| shifted(0.0, 0.0, a, b, 0.0, 0.0), f0, h, s)?;
    let (_, f_ss) = holo_derivs(&|a, b| shifted(0.0, 0.0, 0.0, 0.0, a, b), f0, h, s)?;
    let cross = |a: f64, b: f64, real: bool| {
        if real {
            shifted(a, 0.0, 0.0, 0.0, b, 0.0)
        } else {
            shifted(0.0, a, 0.0, 0.0, 0.0, b)
        }
    };
    let mixed = |real: bool| -> Result<Complex64> {
        Ok((cross(h, h, real)? - cross(h, -h, real)? - cross(-h, h, real)? + cross(-h, -h, real)?) / (4.0 * h * h))
    };
    // ∂_ε ∂_ε' f = (s i)² f_{φψ} = -f_{φψ}.
    let f_ps = (mixed(true)? - mixed(false)?) * 0.5;
    let cos_t = theta_c.cos();
    let op = f_tt + cos_t / sin_t * f_t + (f_pp - 2.0 * cos_t * f_ps + f_ss) / (sin_t * sin_t);
    let l = idx.l.to_f64();
    Ok((op + l * (l + 1.0) * f0).norm())
}

/// `|[X² + l(l+1)] 𝔐^l_mn(g)|` with the Euler-angle form of `X²` applied by
/// central differences.
pub fn lb_eigencheck(idx: WeightTriple, g: &ComplexEulerAngles, h: f64) -> Result<f64> {
    lb_residual(idx, g, h, false)
}

/// `|[Y² + l̇(l̇+1)] 𝔐̇^l̇_ṁṅ(g)|` on the conjugate angles.
pub fn lb_eigencheck_dotted(idx: WeightTriple, g: &ComplexEulerAngles, h: f64) -> Result<f64> {
    lb_residual(idx, g, h, true)
}

const BRANCH_EPS: f64 = 1e-12;

/// Angles `(θ, φ, (φ+ψ)/2)` of the product of the rotations `(0, θ1, 0)`
/// and `(φ2, θ2, 0)`.
pub fn addition_angles(theta1: f64, theta2: f64, phi2: f64) -> Result<(f64, f64, f64)> {
    let (s1, c1, s2, c2) = (theta1.sin(), theta1.cos(), theta2.sin(), theta2.cos());
    let cos_t = (c1 * c2 - s1 * s2 * phi2.cos()).clamp(-1.0, 1.0);
    let n3 = Complex64::new(s1 * c2 + c1 * s2 * phi2.cos(), s2 * phi2.sin());
    let sin_t = n3.norm();
    let theta = sin_t.atan2(cos_t);
    if sin_t < BRANCH_EPS || (theta / 2.0).cos() < BRANCH_EPS {
        return Err(Error::BranchPoint(format!("θ = {theta} at a branch point of the phase relations")));
    }
    let (h1, h2) = (theta1 / 2.0, theta2 / 2.0);
    let half = Complex64::new(0.0, phi2 / 2.0).exp();
    let n4 = h1.cos() * h2.cos() * half - h1.sin() * h2.sin() * half.conj();
    Ok((theta, n3.arg(), n4.arg()))
}

/// Largest deviation over `(m, n)` between the two sides of the SU(2)
/// addition theorem.
pub fn addition_residual(l: HalfInt, theta1: f64, theta2: f64, phi2: f64) -> Result<f64> {
    let (theta, phi, chi) = addition_angles(theta1, theta2, phi2)?;
    let mut worst: f64 = 0.0;
    for m in l.weights() {
        for n in l.weights() {
            let (mf, nf) = (m.to_f64(), n.to_f64());
            // mφ + nψ = (m-n)φ + 2nχ; this form is single-valued in χ.
            let pre = Complex64::new(0.0, -((mf - nf) * phi + 2.0 * nf * chi)).exp();
            let lhs = pre * wigner_p(WeightTriple { l, m, n }, theta)?;
            let mut rhs = Complex64::new(0.0, 0.0);
            for k in l.weights() {
                let e = Complex64::new(0.0, -k.to_f64() * phi2).exp();
                rhs +=
                    e * wigner_p(WeightTriple { l, m, n: k }, theta1)? * wigner_p(WeightTriple { l, m: k, n }, theta2)?;
            }
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok(worst)
}

/// `‖T_l(g1∘g2) - T_l(g1) T_l(g2)‖_max`.
pub fn homomorphism_residual(l: HalfInt, g1: &ComplexEulerAngles, g2: &ComplexEulerAngles) -> Result<f64> {
    homomorphism_residual_with_cap(l, g1, g2, crate::matelem::DEFAULT_L_CAP)
}

pub fn homomorphism_residual_with_cap(
    l: HalfInt,
    g1: &ComplexEulerAngles,
    g2: &ComplexEulerAngles,
    cap: f64,
) -> Result<f64> {
    let g = angles_compose(g1, g2)?;
    let lhs = rep_matrix_with_cap(l, &g, cap)?;
    let rhs = rep_matrix_with_cap(l, g1, cap)?.mul(&rep_matrix_with_cap(l, g2, cap)?);
    Ok(lhs.max_abs_diff(&rhs))
}

/// Verification suites selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ode,
    Laplace,
    Addition,
    Homomorphism,
    Casimir,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ode" => Ok(Suite::Ode),
            "laplace" => Ok(Suite::Laplace),
            "addition" => Ok(Suite::Addition),
            "homomorphism" => Ok(Suite::Homomorphism),
            "casimir" => Ok(Suite::Casimir),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite '{other}'"))),
        }
    }
}

/// Grid margin away from `θ ∈ {0, π}` and `τ = 0`.
pub const MARGIN: f64 = 0.05;
const TAU_MAX: f64 = 1.5;
const EPS_MAX: f64 = 1.0;

fn weights_upto(max_twice: i64) -> impl Iterator<Item = HalfInt> {
    (0..=max_twice).map(HalfInt::from_twice)
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn random_theta(r: &mut ChaCha8Rng) -> f64 {
    r.gen_range(MARGIN..PI - MARGIN)
}

fn random_tau(r: &mut ChaCha8Rng) -> f64 {
    r.gen_range(MARGIN..TAU_MAX)
}

/// A random group element with `θ`, `τ` inside the grid margins.
pub fn random_angles(r: &mut ChaCha8Rng) -> ComplexEulerAngles {
    ComplexEulerAngles {
        phi: r.gen_range(0.0..2.0 * PI),
        eps_phi: r.gen_range(-EPS_MAX..EPS_MAX),
        theta: random_theta(r),
        tau: random_tau(r),
        psi: r.gen_range(-2.0 * PI..2.0 * PI),
        eps_psi: r.gen_range(-EPS_MAX..EPS_MAX),
    }
}

/// Folds per-point results into one report; any error fails the check.
fn fold(name: String, tol: f64, results: impl IntoIterator<Item = Result<f64>>) -> ResidualReport {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut broken = false;
    for r in results {
        count += 1;
        match r {
            Ok(v) if v.is_finite() => worst = worst.max(v),
            _ => broken = true,
        }
    }
    if broken {
        ResidualReport::failed(name, count, tol)
    } else {
        ResidualReport::new(name, worst, count, tol)
    }
}

const ODE_POINTS: usize = 50;
/// Sample points closer than this to `z = ±1` are not generic: the
/// solutions there behave like powers of `1 ∓ z` and difference quotients
/// lose accuracy.
pub const ODE_SINGULAR_GAP: f64 = 0.1;

pub fn suite_ode(seed: u64, tol: &Tolerances) -> Vec<ResidualReport> {
    let mut r = rng_for(seed, 1);
    let mut pts = Vec::with_capacity(ODE_POINTS);
    while pts.len() < ODE_POINTS {
        let a = ComplexAngle::new(random_theta(&mut r), random_tau(&mut r));
        let z = a.cos();
        if (z - 1.0).norm() >= ODE_SINGULAR_GAP && (z + 1.0).norm() >= ODE_SINGULAR_GAP {
            pts.push(a);
        }
    }
    let mut out: Vec<ResidualReport> = weights_upto(4)
        .map(|l| {
            let results = WeightTriple::all_for(l)
                .into_iter()
                .flat_map(|w| pts.iter().map(move |&a| ode_residual(w, a, tol.ode_step)))
                .collect::<Vec<_>>();
            fold(format!("ode l={l}"), tol.ode, results)
        })
        .collect();
    out.push(ode_scaling_report());
    out
}

/// Ratio of the second-order residuals of the closed form `cos(θ^c/2)`
/// at steps `h` and `h/2`; close to 4 when truncation dominates.
pub fn ode_scaling_ratio(angle: ComplexAngle, h: f64) -> Result<f64> {
    let half = HalfInt::HALF;
    let w = |z: Complex64| Ok(((Complex64::new(1.0, 0.0) + z) / 2.0).sqrt());
    let z = angle.cos();
    let r1 = ode_residual_of(w, half, half, half, z, h, Stencil::Second)?;
    let r2 = ode_residual_of(w, half, half, half, z, h / 2.0, Stencil::Second)?;
    Ok(r1 / r2)
}

const SCALING_STEP: f64 = 1e-3;

/// `|ratio - 4|` at `θ = 1, τ = 0.3`, which must stay below `1/2`.
fn ode_scaling_report() -> ResidualReport {
    let angle = ComplexAngle::new(1.0, 0.3);
    fold("ode h^2 scaling".to_string(), 0.5, [ode_scaling_ratio(angle, SCALING_STEP).map(|q| (q - 4.0).abs())])
}

const LB_POINTS: usize = 10;

pub fn suite_laplace(seed: u64, tol: &Tolerances) -> Vec<ResidualReport> {
    let mut r = rng_for(seed, 2);
    let pts: Vec<ComplexEulerAngles> = (0..LB_POINTS).map(|_| random_angles(&mut r)).collect();
    let mut out = Vec::new();
    for dotted in [false, true] {
        for l in weights_upto(4) {
            let results: Vec<Result<f64>> = WeightTriple::all_for(l)
                .into_iter()
                .flat_map(|w| {
                    pts.iter().map(move |g| {
                        if dotted {
                            lb_eigencheck_dotted(w, g, tol.laplace_step)
                        } else {
                            lb_eigencheck(w, g, tol.laplace_step)
                        }
                    })
                })
                .collect();
            let op = if dotted { "laplace Y^2" } else { "laplace X^2" };
            out.push(fold(format!("{op} l={l}"), tol.laplace, results));
        }
    }
    out
}

const ADDITION_TRIPLES: usize = 30;

pub fn suite_addition(seed: u64, tol: &Tolerances) -> Vec<ResidualReport> {
    let mut r = rng_for(seed, 3);
    let triples: Vec<(f64, f64, f64)> = (0..ADDITION_TRIPLES)
        .map(|_| (random_theta(&mut r), random_theta(&mut r), r.gen_range(MARGIN..2.0 * PI - MARGIN)))
        .collect();
    weights_upto(4)
        .map(|l| {
            let results = triples.iter().map(|&(a, b, c)| addition_residual(l, a, b, c)).collect::<Vec<_>>();
            fold(format!("addition l={l}"), tol.addition, results)
        })
        .collect()
}

const HOMOMORPHISM_PAIRS: usize = 50;

pub fn suite_homomorphism(seed: u64, tol: &Tolerances) -> Vec<ResidualReport> {
    let mut r = rng_for(seed, 4);
    let pairs: Vec<(ComplexEulerAngles, ComplexEulerAngles)> =
        (0..HOMOMORPHISM_PAIRS).map(|_| (random_angles(&mut r), random_angles(&mut r))).collect();
    let mut out: Vec<ResidualReport> = [1, 2, 3, 4]
        .into_iter()
        .map(HalfInt::from_twice)
        .map(|l| {
            let results =
                pairs.iter().map(|(a, b)| homomorphism_residual_with_cap(l, a, b, tol.l_cap)).collect::<Vec<_>>();
            fold(format!("homomorphism l={l}"), tol.homomorphism, results)
        })
        .collect();
    let det = pairs.iter().map(|(a, _)| {
        rep_matrix_with_cap(HalfInt::HALF, a, tol.l_cap).map(|t| (t.determinant() - Complex64::new(1.0, 0.0)).norm())
    });
    out.push(fold("det T_1/2 = 1".to_string(), 1e-12, det.collect::<Vec<_>>()));
    let rotations: Vec<ComplexEulerAngles> =
        pairs.iter().map(|(a, _)| ComplexEulerAngles::rotation(a.phi, a.theta, a.psi)).collect();
    for l in weights_upto(4).skip(1) {
        let res = rotations
            .iter()
            .map(|g| rep_matrix_with_cap(l, g, tol.l_cap).map(|t| t.unitarity_residual()))
            .collect::<Vec<_>>();
        out.push(fold(format!("rotation unitarity l={l}"), 1e-11, res));
    }
    out
}

/// Weight pairs used by the ladder checks.
pub const LADDER_PAIRS: [(i64, i64); 3] = [(1, 0), (2, 1), (2, 2)];
const CASIMIR_LABELS: usize = 100;

pub fn suite_casimir(seed: u64, _tol: &Tolerances) -> Vec<ResidualReport> {
    let mut out = Vec::new();
    for (l2, ld2) in LADDER_PAIRS {
        let (l, ld) = (HalfInt::from_twice(l2), HalfInt::from_twice(ld2));
        let comm = ladder_matrices(l, ld).map(|lad| commutator_residual(&lad));
        out.push(fold(format!("ladder commutators (l={l}, ldot={ld})"), 1e-13, [comm]));
        let cas = ladder_casimir_residual(l, ld);
        out.push(fold(format!("ladder casimir (l={l}, ldot={ld})"), 1e-12, [cas]));
    }
    let mut r = rng_for(seed, 5);
    let mismatches = (0..CASIMIR_LABELS)
        .filter(|_| {
            let lambda = r.gen_range(-12i64..=12);
            let num = r.gen_range(-40i64..=40);
            let den = r.gen_range(1i64..=12);
            !principal_identities_exact(lambda, num, den)
        })
        .count();
    // Exact arithmetic: the residual is the count of failing labels.
    out.push(ResidualReport::new("casimir parameter algebra (exact)", mismatches as f64, CASIMIR_LABELS, 0.5));
    out
}

pub fn run_suite(suite: Suite, seed: u64, tol: &Tolerances) -> Vec<ResidualReport> {
    match suite {
        Suite::Ode => suite_ode(seed, tol),
        Suite::Laplace => suite_laplace(seed, tol),
        Suite::Addition => suite_addition(seed, tol),
        Suite::Homomorphism => suite_homomorphism(seed, tol),
        Suite::Casimir => suite_casimir(seed, tol),
        Suite::All => [Suite::Ode, Suite::Laplace, Suite::Addition, Suite::Homomorphism, Suite::Casimir]
            .into_iter()
            .flat_map(|s| run_suite(s, seed, tol))
            .collect(),
    }
}
