//! Thresholds for series truncation and numerical verification.

use crate::error::{Error, Result};
use crate::numkernel::SeriesControl;

#[derive(Clone, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative size below which a series term is negligible.
    pub series_rel: f64,
    /// Hard cap on summed series terms.
    pub series_max_terms: usize,
    /// Differential-equation residual bound.
    pub ode: f64,
    /// Laplace-Beltrami eigenrelation residual bound.
    pub laplace: f64,
    /// Addition theorem residual bound.
    pub addition: f64,
    /// Homomorphism residual bound.
    pub homomorphism: f64,
    /// Agreement required between independent evaluation routes.
    pub route: f64,
    /// Finite-difference step for the differential-equation residual.
    pub ode_step: f64,
    /// Finite-difference step for the Laplace-Beltrami check.
    pub laplace_step: f64,
    /// Largest `l` accepted by dense matrix construction.
    pub l_cap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            series_rel: 1e-15,
            series_max_terms: 100_000,
            ode: 1e-6,
            laplace: 1e-5,
            addition: 1e-10,
            homomorphism: 1e-9,
            route: 1e-9,
            ode_step: 1e-3,
            laplace_step: 1e-3,
            l_cap: 25.0,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 10] = [
        "series_rel",
        "series_max_terms",
        "ode",
        "laplace",
        "addition",
        "homomorphism",
        "route",
        "ode_step",
        "laplace_step",
        "l_cap",
    ];

    pub fn series(&self) -> SeriesControl {
        SeriesControl { rel_tol: self.series_rel, max_terms: self.series_max_terms }
    }

    /// Sets one threshold by name. Values must be finite and positive.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Domain(format!("tolerance {name} must be positive and finite, got {value}")));
        }
        match name {
            "series_rel" => self.series_rel = value,
            "series_max_terms" => {
                if value.fract() != 0.0 {
                    return Err(Error::Domain(format!("series_max_terms must be an integer, got {value}")));
                }
                self.series_max_terms = value as usize;
            }
            "ode" => self.ode = value,
            "laplace" => self.laplace = value,
            "addition" => self.addition = value,
            "homomorphism" => self.homomorphism = value,
            "route" => self.route = value,
            "ode_step" => self.ode_step = value,
            "laplace_step" => self.laplace_step = value,
            "l_cap" => self.l_cap = value,
            _ => {
                return Err(Error::Domain(format!(
                    "unknown tolerance {name:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_by_name() {
        let mut t = Tolerances::default();
        t.set("ode", 1e-7).unwrap();
        assert_eq!(t.ode, 1e-7);
        t.set("series_max_terms", 500.0).unwrap();
        assert_eq!(t.series().max_terms, 500);
        assert!(t.set("bogus", 1.0).is_err());
        assert!(t.set("ode", -1.0).is_err());
        assert!(t.set("series_max_terms", 1.5).is_err());
    }
}
