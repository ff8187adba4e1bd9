mod common;

use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use lorentz_core::casimir::RepLabel;
use lorentz_core::hypersph::{
    hyperspherical_z, hyperspherical_z_hyp, hyperspherical_z_principal, hyperspherical_z_principal_hyp, second_type_z,
    ComplexAngle,
};
use lorentz_core::numkernel::SeriesControl;
use lorentz_core::su11::{conical, jacobi_p_findim};
use lorentz_core::su2::{wigner_p, WeightTriple};
use lorentz_core::verify::ode_residual;
use lorentz_core::{Complex64, Error, HalfInt};
use proptest::prelude::*;

use common::{closed_form_grid, cx, principal_z_oracle, t_half_closed, t_one_closed, Angles};

fn w(l2: i64, m2: i64, n2: i64) -> WeightTriple {
    WeightTriple::from_twice(l2, m2, n2).unwrap()
}

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn all_upto(max_twice: i64) -> Vec<WeightTriple> {
    (0..=max_twice).flat_map(|l2| WeightTriple::all_for(h(l2))).collect()
}

#[test]
fn printed_entries() {
    let v = hyperspherical_z(w(2, 0, 0), ComplexAngle::new(PI / 2.0, 1.0)).unwrap();
    assert_abs_diff_eq!(v.re, 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(v.im, 1.175_201_193_643_801_4, epsilon = 1e-14);

    let v = hyperspherical_z(w(1, -1, 1), ComplexAngle::new(0.6, 0.4)).unwrap();
    let expect = Complex64::new(0.3f64.cos() * 0.2f64.sinh(), 0.3f64.sin() * 0.2f64.cosh());
    assert!((v - expect).norm() < 1e-15);

    let v = hyperspherical_z_hyp(w(2, 2, 2), ComplexAngle::new(PI / 3.0, 0.0)).unwrap();
    assert_abs_diff_eq!(v.re, 0.75, epsilon = 1e-15);

    // -sin²(θ^c/2) at θ^c = -0.8i, by complex arithmetic.
    let th = Complex64::new(0.0, -0.8);
    let expect = -(th / 2.0).sin().powi(2);
    let v = hyperspherical_z_hyp(w(2, -2, 2), ComplexAngle::new(0.0, 0.8)).unwrap();
    assert!((v - expect).norm() < 1e-14);
    assert_abs_diff_eq!(v.re, 0.4f64.sinh().powi(2), epsilon = 1e-14);

    let a = ComplexAngle::new(0.7, 0.5);
    let v = hyperspherical_z_hyp(w(4, 2, -2), a).unwrap();
    assert!((v - hyperspherical_z(w(4, 2, -2), a).unwrap()).norm() < 1e-12);
}

#[test]
fn identity_values() {
    for idx in all_upto(6) {
        let expect = if idx.m == idx.n { cx(1.0) } else { cx(0.0) };
        let v = hyperspherical_z(idx, ComplexAngle::new(0.0, 0.0)).unwrap();
        assert!((v - expect).norm() < 1e-15, "{idx:?}");
    }
    for l0 in 0..=2 {
        let l0 = HalfInt::from_int(l0);
        for m in l0.weights() {
            for n in l0.weights() {
                let expect = if m == n { cx(1.0) } else { cx(0.0) };
                let v = hyperspherical_z_principal(0.9, l0, m, n, ComplexAngle::new(0.0, 0.0)).unwrap();
                assert!((v - expect).norm() < 1e-14);
            }
        }
    }
}

#[test]
fn index_errors() {
    let bad = WeightTriple { l: HalfInt::ONE, m: HalfInt::HALF, n: HalfInt::ZERO };
    assert!(matches!(hyperspherical_z(bad, ComplexAngle::new(0.3, 0.2)), Err(Error::Index(_))));
    let r = hyperspherical_z_principal(0.5, HalfInt::ONE, h(4), h(0), ComplexAngle::new(0.3, 0.2));
    assert!(matches!(r, Err(Error::Index(_))));
}

#[test]
fn restriction_to_subgroups() {
    for idx in all_upto(6) {
        for x in [0.3, 1.1, 2.4] {
            let z = hyperspherical_z(idx, ComplexAngle::new(x, 0.0)).unwrap();
            assert!((z - wigner_p(idx, x).unwrap()).norm() < 1e-12, "{idx:?} θ={x}");
            let z = hyperspherical_z(idx, ComplexAngle::new(0.0, x)).unwrap();
            assert!((z - jacobi_p_findim(idx, x).unwrap()).norm() < 1e-12, "{idx:?} τ={x}");
        }
    }
}

#[test]
fn routes_agree_on_grid() {
    for idx in all_upto(6) {
        for k in 0..=12 {
            let theta = 0.05 + k as f64 * (PI - 0.1) / 12.0;
            for tau in [0.0, 0.3, 0.9, 1.6] {
                let a = ComplexAngle::new(theta, tau);
                let z = hyperspherical_z(idx, a).unwrap();
                let y = hyperspherical_z_hyp(idx, a).unwrap();
                assert!((z - y).norm() < 1e-10, "{idx:?} θ={theta} τ={tau}: {z} vs {y}");
            }
        }
    }
}

fn zero_phase(a: &Angles) -> Angles {
    Angles { phi: 0.0, eps_phi: 0.0, psi: 0.0, eps_psi: 0.0, ..*a }
}

#[test]
fn low_spin_closed_forms() {
    for a in closed_form_grid().iter().map(zero_phase) {
        let angle = ComplexAngle::new(a.theta, a.tau);
        assert!((hyperspherical_z(w(0, 0, 0), angle).unwrap() - cx(1.0)).norm() < 1e-15);
        let half = t_half_closed(&a);
        for (r, m2) in [-1, 1].into_iter().enumerate() {
            for (c, n2) in [-1, 1].into_iter().enumerate() {
                let v = hyperspherical_z(w(1, m2, n2), angle).unwrap();
                assert!((v - half[r][c]).norm() < 1e-12, "l=1/2 ({m2},{n2}) at {a:?}");
            }
        }
        let one = t_one_closed(&a);
        for (r, m2) in [-2, 0, 2].into_iter().enumerate() {
            for (c, n2) in [-2, 0, 2].into_iter().enumerate() {
                let v = hyperspherical_z(w(2, m2, n2), angle).unwrap();
                let tol = 1e-12 * one[r][c].norm().max(1.0);
                assert!((v - one[r][c]).norm() < tol, "l=1 ({m2},{n2}) at {a:?}");
            }
        }
    }
}

#[test]
fn dotted_angle_is_conjugate() {
    for a in closed_form_grid().iter().map(zero_phase) {
        let dotted = Angles { tau: -a.tau, ..a };
        let (u, d) = (t_half_closed(&a), t_half_closed(&dotted));
        for r in 0..2 {
            assert!((d[r][r] - u[r][r].conj()).norm() < 1e-12);
        }
        let (u, d) = (t_one_closed(&a), t_one_closed(&dotted));
        for r in 0..3 {
            for c in (0..3).filter(|c| (r + c) % 2 == 0) {
                assert!((d[r][c] - u[r][c].conj()).norm() < 1e-12 * u[r][c].norm().max(1.0));
            }
        }
    }
    // The library values obey Z(θ + iτ) = (-1)^{m-n} conj Z(θ - iτ).
    for idx in all_upto(6) {
        let sign = if (idx.m - idx.n).to_int().unwrap() % 2 == 0 { 1.0 } else { -1.0 };
        for (theta, tau) in [(0.4, 0.3), (1.7, 1.1), (2.9, 0.6)] {
            let u = hyperspherical_z(idx, ComplexAngle::new(theta, tau)).unwrap();
            let d = hyperspherical_z(idx, ComplexAngle::new(theta, -tau)).unwrap();
            assert!((d - u.conj() * sign).norm() < 1e-12 * u.norm().max(1.0), "{idx:?}");
        }
    }
}

#[test]
fn fuchsian_equation() {
    for idx in all_upto(6) {
        for (theta, tau) in [(0.7, 0.4), (1.5, 1.0), (2.3, 0.3)] {
            let a = ComplexAngle::new(theta, tau);
            let r = ode_residual(idx, a, 1e-3).unwrap();
            let scale = hyperspherical_z(idx, a).unwrap().norm().max(1.0);
            assert!(r / scale < 1e-6, "{idx:?} θ={theta} τ={tau}: {r}");
        }
    }
}

#[test]
fn principal_examples() {
    let a = ComplexAngle::new(1.3, 0.8);
    let z = hyperspherical_z_principal(0.9, HalfInt::ZERO, h(0), h(0), a).unwrap();
    assert_eq!(z, conical(0.9, HalfInt::ZERO, 0.8).unwrap());
    let z2 = hyperspherical_z_principal(0.9, HalfInt::ZERO, h(0), h(0), ComplexAngle::new(2.5, 0.8)).unwrap();
    assert_eq!(z, z2);

    let z = hyperspherical_z_principal(0.9, HalfInt::ONE, h(0), h(0), ComplexAngle::new(0.5, 0.7)).unwrap();
    let o = principal_z_oracle(0.9, 1.0, 0.0, 0.0, 0.5, 0.7);
    assert!((z - o).norm() < 1e-10, "{z} vs {o}");

    let ctl = SeriesControl::default();
    let y = hyperspherical_z_principal_hyp(0.9, HalfInt::ONE, h(0), h(0), ComplexAngle::new(0.5, 0.7), ctl).unwrap();
    assert!((z - y).norm() < 1e-10);
}

#[test]
fn second_type_examples() {
    let fin = RepLabel::FiniteDim { l: HalfInt::ONE, ldot: HalfInt::ZERO };
    for theta in [0.2, 1.0, 2.6] {
        let v = second_type_z(&fin, HalfInt::ZERO, ComplexAngle::new(theta, 0.0)).unwrap();
        assert!((v - cx(theta.cos())).norm() < 1e-14);
    }
    let labels =
        [fin, RepLabel::Principal { l0: HalfInt::from_int(2), rho: 0.5 }, RepLabel::Supplementary { sigma: 0.4 }];
    for label in &labels {
        for m in -1..=1 {
            let v = second_type_z(label, HalfInt::from_int(m), ComplexAngle::new(0.0, 0.0)).unwrap();
            let expect = if m == 0 { cx(1.0) } else { cx(0.0) };
            assert!((v - expect).norm() < 1e-14, "{label:?} m={m}");
        }
    }
    // Principal label: t-sum recomputed term by term from the factors.
    let p = RepLabel::Principal { l0: HalfInt::ONE, rho: 0.5 };
    let v = second_type_z(&p, HalfInt::ONE, ComplexAngle::new(0.4, 0.6)).unwrap();
    let direct: Complex64 = HalfInt::ONE
        .weights()
        .map(|t| {
            wigner_p(WeightTriple { l: HalfInt::ONE, m: HalfInt::ONE, n: t }, 0.4).unwrap()
                * conical(0.5, t, 0.6).unwrap()
        })
        .sum();
    assert!((v - direct).norm() < 1e-15);
    let o = principal_z_oracle(0.5, 1.0, 1.0, 0.0, 0.4, 0.6);
    assert!((v - o).norm() < 1e-10);
    assert!(second_type_z(
        &RepLabel::FiniteDim { l: HalfInt::HALF, ldot: HalfInt::ZERO },
        HalfInt::HALF,
        ComplexAngle::new(0.3, 0.1)
    )
    .is_err());
}

fn triple(max_twice: i64) -> impl Strategy<Value = WeightTriple> {
    (0..=max_twice).prop_flat_map(|l2| {
        (0..=l2, 0..=l2).prop_map(move |(a, b)| WeightTriple { l: h(l2), m: h(2 * a - l2), n: h(2 * b - l2) })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_sum_is_analytic_continuation(idx in triple(6), theta in 0.0..PI, tau in -2.0..2.0f64) {
        // Z is P^l_mn(cos θ^c): compare against the factorial sum at the complex angle.
        let th = Complex64::new(theta, -tau);
        let z = hyperspherical_z(idx, ComplexAngle::new(theta, tau)).unwrap();
        let o = complex_wigner(idx, th);
        prop_assert!((z - o).norm() < 1e-10 * o.norm().max(1.0), "{z} vs {o}");
    }

    #[test]
    fn routes_agree(idx in triple(6), theta in 0.05..(PI - 0.05), tau in 0.0..2.0f64) {
        let a = ComplexAngle::new(theta, tau);
        let z = hyperspherical_z(idx, a).unwrap();
        let y = hyperspherical_z_hyp(idx, a).unwrap();
        prop_assert!((z - y).norm() < 1e-10 * z.norm().max(1.0));
    }

    #[test]
    fn principal_matches_double_sum(l0 in 0i64..=2, a in 0i64..=4, nn in -2i64..=2, rho in 0.2..3.0f64, theta in 0.05..3.0f64, tau in 0.0..2.0f64) {
        prop_assume!(a <= 2 * l0);
        let l0h = HalfInt::from_int(l0);
        let m = HalfInt::from_int(a - l0);
        let z = hyperspherical_z_principal(rho, l0h, m, HalfInt::from_int(nn), ComplexAngle::new(theta, tau)).unwrap();
        let o = principal_z_oracle(rho, l0 as f64, m.to_f64(), nn as f64, theta, tau);
        prop_assert!((z - o).norm() < 1e-9, "{z} vs {o}");
    }
}

/// `P^l_mn(cos θ^c)` from the factorial sum in `cos(θ^c/2)`, `sin(θ^c/2)`.
fn complex_wigner(idx: WeightTriple, th: Complex64) -> Complex64 {
    let ri = |x: HalfInt| x.to_f64().round() as i64;
    let (l, m, n) = (idx.l, idx.m, idx.n);
    let f = common::fact;
    let pref = (f(ri(l - m)) * f(ri(l + m)) * f(ri(l - n)) * f(ri(l + n))).sqrt();
    let (c, s) = ((th / 2.0).cos(), (th / 2.0).sin());
    let i = Complex64::new(0.0, 1.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let jmin = 0.max(ri(n - m));
    let jmax = ri(l - m).min(ri(l + n));
    for j in jmin..=jmax {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let den = f(j) * f(ri(l - m) - j) * f(ri(l + n) - j) * f(ri(m - n) + j);
        let cp = (ri(l + l) - ri(m - n) - 2 * j) as i32;
        let sp = (ri(m - n) + 2 * j) as i32;
        sum += c.powi(cp) * s.powi(sp) * (sign / den);
    }
    i.powi(ri(m - n).rem_euclid(4) as i32) * pref * sum
}
