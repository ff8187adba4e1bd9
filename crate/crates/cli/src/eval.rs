//! Dispatch of a resolved parameter set to the library.

use lorentz_core::casimir::RepLabel;
use lorentz_core::hypersph::{hyperspherical_z, second_type_z_with, ComplexAngle};
use lorentz_core::matelem::{
    matrix_element_findim, matrix_element_principal_with, matrix_element_supplementary_with, ComplexEulerAngles,
};
use lorentz_core::su11::{conical_with, jacobi_p_findim, jacobi_p_principal_with, jacobi_p_supplementary_with};
use lorentz_core::su11::{PrincipalIndex, SupplementaryIndex};
use lorentz_core::su2::{wigner_p, WeightTriple};
use lorentz_core::{Complex64, Error, HalfInt, Result, Tolerances};

use crate::request::{Family, Params};

fn half(p: &Params, key: &str) -> Result<HalfInt> {
    p.half(key).ok_or_else(|| Error::Index(format!("{key} is required")))
}

fn real(p: &Params, key: &str) -> Result<f64> {
    p.real(key).ok_or_else(|| Error::Domain(format!("{key} is required")))
}

fn triple(p: &Params) -> Result<WeightTriple> {
    WeightTriple::new(half(p, "l")?, half(p, "m")?, half(p, "n")?)
}

pub fn group_element(p: &Params) -> ComplexEulerAngles {
    ComplexEulerAngles::new(
        p.angle("phi"),
        p.angle("eps_phi"),
        p.angle("theta"),
        p.angle("tau"),
        p.angle("psi"),
        p.angle("eps_psi"),
    )
}

/// The representation label of a `second_type` request, chosen by which keys
/// are present.
fn second_type_label(p: &Params) -> Result<RepLabel> {
    let has = |k: &str| p.values.contains_key(k);
    let label = match (has("l"), has("ldot"), has("l0"), has("rho"), has("sigma")) {
        (false, false, false, false, true) => RepLabel::Supplementary { sigma: real(p, "sigma")? },
        (false, false, true, true, false) => RepLabel::Principal { l0: half(p, "l0")?, rho: real(p, "rho")? },
        (true, _, false, false, false) => {
            RepLabel::FiniteDim { l: half(p, "l")?, ldot: p.half("ldot").unwrap_or(HalfInt::ZERO) }
        }
        _ => {
            return Err(Error::Domain(
                "second_type needs exactly one label: sigma, or rho with l0, or l with optional ldot".into(),
            ))
        }
    };
    label.check()?;
    Ok(label)
}

pub fn evaluate(p: &Params, tol: &Tolerances) -> Result<Complex64> {
    let ctl = tol.series();
    let tau = p.angle("tau");
    let theta = p.angle("theta");
    match p.family {
        Family::Wigner => wigner_p(triple(p)?, theta),
        Family::JacobiFindim => jacobi_p_findim(triple(p)?, tau),
        Family::JacobiPrincipal => {
            let idx = PrincipalIndex { rho: real(p, "rho")?, m: half(p, "m")?, n: half(p, "n")? };
            jacobi_p_principal_with(idx, tau, ctl)
        }
        Family::JacobiSupplementary => {
            let idx = SupplementaryIndex { sigma: real(p, "sigma")?, m: half(p, "m")?, n: half(p, "n")? };
            jacobi_p_supplementary_with(idx, tau, ctl)
        }
        Family::Conical => conical_with(real(p, "rho")?, half(p, "t")?, tau, ctl),
        Family::Hypersph => hyperspherical_z(triple(p)?, ComplexAngle::new(theta, tau)),
        Family::MatelemFindim => matrix_element_findim(triple(p)?, &group_element(p), p.flag("dotted")),
        Family::MatelemPrincipal => matrix_element_principal_with(
            real(p, "rho")?,
            half(p, "l0")?,
            half(p, "m")?,
            half(p, "n")?,
            &group_element(p),
            ctl,
        ),
        Family::MatelemSupplementary => {
            matrix_element_supplementary_with(real(p, "sigma")?, half(p, "m")?, half(p, "n")?, &group_element(p), ctl)
        }
        Family::SecondType => {
            second_type_z_with(&second_type_label(p)?, half(p, "m")?, ComplexAngle::new(theta, tau), ctl)
        }
        Family::Matrix => Err(Error::Domain("matrix is not a scalar family".into())),
    }
}
