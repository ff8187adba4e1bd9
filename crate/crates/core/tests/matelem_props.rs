mod common;

use std::f64::consts::PI;

use lorentz_core::matelem::{
    angles_compose, angles_from_sl2c, matrix_element_findim, matrix_element_principal, matrix_element_principal_hyp,
    matrix_element_supplementary, rep_matrix, rep_matrix_with_cap, sl2c_from_angles, ComplexEulerAngles, ComplexMatrix,
};
use lorentz_core::numkernel::SeriesControl;
use lorentz_core::su11::{conical, jacobi_p_principal_continued, jacobi_p_supplementary, SupplementaryIndex};
use lorentz_core::su2::WeightTriple;
use lorentz_core::verify::homomorphism_residual;
use lorentz_core::{Complex64, Error, HalfInt};
use proptest::prelude::*;

use common::{closed_form_grid, cx, principal_oracle, principal_z_oracle, t_half_closed, t_one_closed, Angles, I};

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn g_of(a: &Angles) -> ComplexEulerAngles {
    ComplexEulerAngles::new(a.phi, a.eps_phi, a.theta, a.tau, a.psi, a.eps_psi)
}

const SAMPLE: ComplexEulerAngles =
    ComplexEulerAngles { phi: 0.8, eps_phi: 0.3, theta: 1.1, tau: 0.6, psi: -1.4, eps_psi: -0.2 };

#[test]
fn spin_half_entry() {
    let g = SAMPLE;
    let v = matrix_element_findim(WeightTriple::from_twice(1, 1, 1).unwrap(), &g, false).unwrap();
    let pre = Complex64::new(-g.eps_phi - g.eps_psi, -(g.phi + g.psi)).scale(0.5).exp();
    let z = Complex64::new((g.theta / 2.0).cos() * (g.tau / 2.0).cosh(), (g.theta / 2.0).sin() * (g.tau / 2.0).sinh());
    assert!((v - pre * z).norm() < 1e-15);
}

#[test]
fn spin_one_off_diagonal_entry() {
    for a in closed_form_grid() {
        let g = ComplexEulerAngles { phi: 0.0, psi: 0.3, ..g_of(&a) };
        let v = matrix_element_findim(WeightTriple::from_twice(2, 0, 2).unwrap(), &g, false).unwrap();
        let expect = I / 2f64.sqrt() * g.theta_c().sin() * (-I * g.psi_c()).exp();
        assert!((v - expect).norm() < 1e-12 * expect.norm().max(1.0));
    }
}

#[test]
fn identity_element() {
    for l2 in 0..=6 {
        let t = rep_matrix(h(l2), &ComplexEulerAngles::IDENTITY).unwrap();
        assert!(t.max_abs_diff(&ComplexMatrix::identity(l2 as usize + 1)) < 1e-15);
    }
    for m in -1..=1 {
        for n in -1..=1 {
            let expect = if m == n { cx(1.0) } else { cx(0.0) };
            let (mh, nh) = (HalfInt::from_int(m), HalfInt::from_int(n));
            let p = matrix_element_principal(0.7, HalfInt::ONE, mh, nh, &ComplexEulerAngles::IDENTITY).unwrap();
            assert!((p - expect).norm() < 1e-14);
            let s = matrix_element_supplementary(0.4, mh, nh, &ComplexEulerAngles::IDENTITY).unwrap();
            assert!((s - expect).norm() < 1e-14);
        }
    }
}

#[test]
fn trivial_representation() {
    let t = rep_matrix(HalfInt::ZERO, &SAMPLE).unwrap();
    assert_eq!(t.dim(), 1);
    assert!((t.get(0, 0) - cx(1.0)).norm() < 1e-15);
}

#[test]
fn matrix_labels_and_cap() {
    let t = rep_matrix(h(3), &SAMPLE).unwrap();
    assert_eq!(t.labels(), &[h(-3), h(-1), h(1), h(3)]);
    let e = matrix_element_findim(WeightTriple::from_twice(3, -1, 3).unwrap(), &SAMPLE, false).unwrap();
    assert_eq!(t.entry(h(-1), h(3)), Some(e));
    assert!(matches!(rep_matrix(HalfInt::from_int(26), &SAMPLE), Err(Error::Domain(_))));
    assert!(rep_matrix_with_cap(HalfInt::from_int(3), &SAMPLE, 2.0).is_err());
}

#[test]
fn closed_forms_on_grid() {
    for a in closed_form_grid() {
        let g = g_of(&a);
        let half = t_half_closed(&a);
        let t = rep_matrix(HalfInt::HALF, &g).unwrap();
        for (r, row) in half.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                let tol = 1e-12 * want.norm().max(1.0);
                assert!((t.get(r, c) - want).norm() < tol, "T1/2 ({r},{c}) at {a:?}");
            }
        }
        let one = t_one_closed(&a);
        let t = rep_matrix(HalfInt::ONE, &g).unwrap();
        for (r, row) in one.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                let tol = 1e-12 * want.norm().max(1.0);
                assert!((t.get(r, c) - want).norm() < tol, "T1 ({r},{c}) at {a:?}");
            }
        }
        let t0 = rep_matrix(HalfInt::ZERO, &g).unwrap();
        assert!((t0.get(0, 0) - cx(1.0)).norm() < 1e-15);
    }
}

#[test]
fn dotted_elements_conjugate_the_angles() {
    // e^{+i(mφ̇^c+nψ̇^c)} is the conjugate of e^{-i(mφ^c+nψ^c)}, and
    // Z(θ + iτ) = (-1)^{m-n} conj Z(θ - iτ).
    for a in closed_form_grid() {
        let g = g_of(&a);
        for idx in WeightTriple::all_for(HalfInt::ONE) {
            let d = matrix_element_findim(idx, &g, true).unwrap();
            let u = matrix_element_findim(idx, &g, false).unwrap();
            let sign = if (idx.m - idx.n).to_int().unwrap() % 2 == 0 { 1.0 } else { -1.0 };
            assert!((d - u.conj() * sign).norm() < 1e-12 * u.norm().max(1.0), "{idx:?} at {a:?}");
        }
    }
}

#[test]
fn fundamental_matrix() {
    let m = sl2c_from_angles(&ComplexEulerAngles::IDENTITY).unwrap();
    assert!(m.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
    let r = sl2c_from_angles(&ComplexEulerAngles::rotation(0.4, 2.0, -1.1)).unwrap();
    assert!(r.unitarity_residual() < 1e-12);

    let tau: f64 = 0.9;
    let b = sl2c_from_angles(&ComplexEulerAngles { tau, ..Default::default() }).unwrap();
    assert!(b.max_abs_diff(&b.adjoint()) < 1e-15, "boost must be Hermitian");
    let (ch, sh) = ((tau / 2.0).cosh(), (tau / 2.0).sinh());
    let expect = ComplexMatrix::from_fn(2, |r, c| if r == c { cx(ch) } else { cx(sh) });
    assert!(b.max_abs_diff(&expect) < 1e-15);
    assert!(ch > sh && (b.determinant() - cx(1.0)).norm() < 1e-15);
}

#[test]
fn compose_examples() {
    let g = angles_compose(&SAMPLE, &ComplexEulerAngles::IDENTITY).unwrap();
    let a = sl2c_from_angles(&g).unwrap();
    assert!(a.max_abs_diff(&sl2c_from_angles(&SAMPLE).unwrap()) < 1e-13);
    assert!((g.theta - SAMPLE.theta).abs() < 1e-13 && (g.tau - SAMPLE.tau).abs() < 1e-13);

    // Rotations about the third axis: diagonal phase matrices.
    let (p1, p2) = (0.7, 1.9);
    let g = angles_compose(&ComplexEulerAngles::rotation(0.0, 0.0, p1), &ComplexEulerAngles::rotation(0.0, 0.0, p2))
        .unwrap();
    assert!(g.theta.abs() < 1e-15 && g.tau.abs() < 1e-15);
    let total = (g.phi + g.psi - (p1 + p2)).rem_euclid(4.0 * PI);
    assert!(total < 1e-12 || (4.0 * PI - total) < 1e-12);

    let b = |tau| ComplexEulerAngles { tau, ..Default::default() };
    let g = angles_compose(&b(0.4), &b(1.3)).unwrap();
    let m = sl2c_from_angles(&g).unwrap();
    assert!(m.max_abs_diff(&sl2c_from_angles(&b(1.7)).unwrap()) < 1e-13);
    assert!(g.theta.abs() < 1e-12 && (g.tau - 1.7).abs() < 1e-12);
}

#[test]
fn extraction_round_trip_and_ranges() {
    for a in closed_form_grid() {
        let g = g_of(&a);
        let m = sl2c_from_angles(&g).unwrap();
        match angles_from_sl2c(&m) {
            Ok(e) => {
                assert!((0.0..2.0 * PI).contains(&e.phi));
                assert!((-2.0 * PI..2.0 * PI).contains(&e.psi));
                assert!(sl2c_from_angles(&e).unwrap().max_abs_diff(&m) < 1e-10, "{a:?}");
            }
            Err(e) => assert!(matches!(e, Error::DegenerateExtraction(_)), "{a:?}: {e}"),
        }
    }
}

#[test]
fn principal_example_against_double_sum() {
    let g = SAMPLE;
    let (m, n) = (HalfInt::ONE, HalfInt::ZERO);
    let v = matrix_element_principal(0.8, HalfInt::ONE, m, n, &g).unwrap();
    let pre = Complex64::new(-g.eps_phi, -g.phi).exp();
    let o = pre * principal_z_oracle(0.8, 1.0, 1.0, 0.0, g.theta, g.tau);
    assert!((v - o).norm() < 1e-10, "{v} vs {o}");
    let y = matrix_element_principal_hyp(0.8, HalfInt::ONE, m, n, &g, SeriesControl::default()).unwrap();
    assert!((v - y).norm() < 1e-9);
}

#[test]
fn principal_scalar_rotation_part() {
    // l0 = 0: e^{-m(ε_φ+iφ)} 𝔓_mn e^{-n(ε_ψ+iψ)}, with the conical function at m = 0.
    let g = SAMPLE;
    let v = matrix_element_principal(1.2, HalfInt::ZERO, HalfInt::ZERO, HalfInt::ONE, &g).unwrap();
    let p = principal_oracle(cx(1.2), 0.0, 1.0, g.tau);
    let expect = p * Complex64::new(-g.eps_psi, -g.psi).exp();
    assert!((v - expect).norm() < 1e-10);
    let v = matrix_element_principal(1.2, HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO, &g).unwrap();
    assert!((v - conical(1.2, HalfInt::ZERO, g.tau).unwrap()).norm() < 1e-15);
}

#[test]
fn supplementary_examples() {
    let g = ComplexEulerAngles { tau: 1.0, ..Default::default() };
    let v = matrix_element_supplementary(0.3, HalfInt::ZERO, HalfInt::ZERO, &g).unwrap();
    assert!(v.im.abs() < 1e-15);
    let o = principal_oracle(Complex64::new(0.0, 0.3), 0.0, 0.0, 1.0);
    assert!((v - o).norm() < 1e-12, "{v} vs {o}");
    for theta in [0.0, 0.9, 2.8] {
        let gt = ComplexEulerAngles { theta, ..SAMPLE };
        let a = matrix_element_supplementary(0.3, HalfInt::ONE, HalfInt::ZERO, &gt).unwrap();
        let b = matrix_element_supplementary(0.3, HalfInt::ONE, HalfInt::ZERO, &SAMPLE).unwrap();
        assert_eq!(a, b);
    }
    assert!(matrix_element_supplementary(0.3, HalfInt::HALF, HalfInt::HALF, &g).is_err());
}

fn angles() -> impl Strategy<Value = ComplexEulerAngles> {
    (0.0..2.0 * PI, -1.0..1.0f64, 0.05..(PI - 0.05), 0.05..1.5f64, -2.0 * PI..2.0 * PI, -1.0..1.0f64)
        .prop_map(|(phi, ep, theta, tau, psi, es)| ComplexEulerAngles::new(phi, ep, theta, tau, psi, es))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn homomorphism(l2 in 1i64..=4, g1 in angles(), g2 in angles()) {
        match homomorphism_residual(h(l2), &g1, &g2) {
            Ok(r) => prop_assert!(r < 1e-9, "l = {} residual {r}", h(l2)),
            Err(e) => prop_assert!(matches!(e, Error::DegenerateExtraction(_)), "{e}"),
        }
    }

    #[test]
    fn product_matrix_round_trip(g1 in angles(), g2 in angles()) {
        if let Ok(g) = angles_compose(&g1, &g2) {
            let prod = sl2c_from_angles(&g1).unwrap().mul(&sl2c_from_angles(&g2).unwrap());
            prop_assert!(sl2c_from_angles(&g).unwrap().max_abs_diff(&prod) < 1e-10 * prod.max_abs().max(1.0));
        }
    }

    #[test]
    fn unit_determinant(g in angles(), tau in -3.0..3.0f64) {
        let g = ComplexEulerAngles { tau, ..g };
        let d = sl2c_from_angles(&g).unwrap().determinant();
        prop_assert!((d - cx(1.0)).norm() < 1e-12, "{d}");
    }

    #[test]
    fn rotations_are_unitary(l2 in 0i64..=4, phi in 0.0..2.0 * PI, theta in 0.0..PI, psi in -2.0 * PI..2.0 * PI) {
        let t = rep_matrix(h(l2), &ComplexEulerAngles::rotation(phi, theta, psi)).unwrap();
        prop_assert!(t.unitarity_residual() < 1e-11);
    }

    #[test]
    fn supplementary_is_continued_principal(m in -2i64..=2, n in -2i64..=2, sigma in 0.05..0.95f64, g in angles()) {
        let (mh, nh) = (HalfInt::from_int(m), HalfInt::from_int(n));
        let v = matrix_element_supplementary(sigma, mh, nh, &g).unwrap();
        let p = jacobi_p_principal_continued(Complex64::new(0.0, sigma), mh, nh, g.tau, SeriesControl::default()).unwrap();
        let pre = Complex64::new(-(m as f64) * g.eps_phi - n as f64 * g.eps_psi, -(m as f64) * g.phi - n as f64 * g.psi).exp();
        prop_assert!((v - pre * p).norm() < 1e-9 * pre.norm().max(1.0));
        let s = jacobi_p_supplementary(SupplementaryIndex { sigma, m: mh, n: nh }, g.tau).unwrap();
        prop_assert!((v - pre * s).norm() < 1e-12 * pre.norm().max(1.0));
    }
}
