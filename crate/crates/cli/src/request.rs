//! Parsing and validation of `key=value` parameters and grid axes.

use std::collections::BTreeMap;

use lorentz_core::HalfInt;

use crate::error::CliError;

/// Largest number of points a request may expand to.
pub const MAX_POINTS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Half,
    Real,
    Flag,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Half(HalfInt),
    Real(f64),
    Flag(bool),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Wigner,
    JacobiFindim,
    JacobiPrincipal,
    JacobiSupplementary,
    Conical,
    Hypersph,
    MatelemFindim,
    MatelemPrincipal,
    MatelemSupplementary,
    SecondType,
    /// The `matrix` subcommand's parameter set.
    Matrix,
}

const GROUP_ANGLES: &[&str] = &["phi", "eps_phi", "theta", "tau", "psi", "eps_psi"];

/// An index parameter: name, kind, and whether it must be supplied.
type Key = (&'static str, Kind, bool);

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Wigner,
        Family::JacobiFindim,
        Family::JacobiPrincipal,
        Family::JacobiSupplementary,
        Family::Conical,
        Family::Hypersph,
        Family::MatelemFindim,
        Family::MatelemPrincipal,
        Family::MatelemSupplementary,
        Family::SecondType,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Wigner => "wigner",
            Family::JacobiFindim => "jacobi_findim",
            Family::JacobiPrincipal => "jacobi_principal",
            Family::JacobiSupplementary => "jacobi_supplementary",
            Family::Conical => "conical",
            Family::Hypersph => "hypersph",
            Family::MatelemFindim => "matelem_findim",
            Family::MatelemPrincipal => "matelem_principal",
            Family::MatelemSupplementary => "matelem_supplementary",
            Family::SecondType => "second_type",
            Family::Matrix => "matrix",
        }
    }

    pub fn parse(s: &str) -> Result<Family, CliError> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            CliError::Validation(format!("unknown family '{s}'; expected one of {}", names.join(", ")))
        })
    }

    /// Index parameters in output order.
    pub fn indices(self) -> &'static [Key] {
        use Kind::*;
        match self {
            Family::Wigner | Family::JacobiFindim | Family::Hypersph => {
                &[("l", Half, true), ("m", Half, true), ("n", Half, true)]
            }
            Family::JacobiPrincipal => &[("rho", Real, true), ("m", Half, true), ("n", Half, true)],
            Family::JacobiSupplementary | Family::MatelemSupplementary => {
                &[("sigma", Real, true), ("m", Half, true), ("n", Half, true)]
            }
            Family::Conical => &[("rho", Real, true), ("t", Half, true)],
            Family::MatelemFindim => {
                &[("l", Half, true), ("m", Half, true), ("n", Half, true), ("dotted", Flag, false)]
            }
            Family::MatelemPrincipal => {
                &[("rho", Real, true), ("l0", Half, true), ("m", Half, true), ("n", Half, true)]
            }
            Family::SecondType => &[
                ("l", Half, false),
                ("ldot", Half, false),
                ("l0", Half, false),
                ("rho", Real, false),
                ("sigma", Real, false),
                ("m", Half, true),
            ],
            Family::Matrix => &[("l", Half, true)],
        }
    }

    /// Angle parameters in output order; all default to zero.
    pub fn angles(self) -> &'static [&'static str] {
        match self {
            Family::Wigner => &["theta"],
            Family::JacobiFindim | Family::JacobiPrincipal | Family::JacobiSupplementary | Family::Conical => &["tau"],
            Family::Hypersph | Family::SecondType => &["theta", "tau"],
            Family::MatelemFindim | Family::MatelemPrincipal | Family::MatelemSupplementary | Family::Matrix => {
                GROUP_ANGLES
            }
        }
    }

    fn kind_of(self, key: &str) -> Option<Kind> {
        if self.angles().contains(&key) {
            return Some(Kind::Real);
        }
        self.indices().iter().find(|k| k.0 == key).map(|k| k.1)
    }
}

/// Resolved parameters of one evaluation point.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub family: Family,
    pub values: BTreeMap<&'static str, Value>,
}

impl Params {
    pub fn half(&self, key: &str) -> Option<HalfInt> {
        match self.values.get(key) {
            Some(Value::Half(h)) => Some(*h),
            _ => None,
        }
    }

    pub fn real(&self, key: &str) -> Option<f64> {
        match self.values.get(key) {
            Some(Value::Real(x)) => Some(*x),
            _ => None,
        }
    }

    /// Angle value, zero when omitted.
    pub fn angle(&self, key: &str) -> f64 {
        self.real(key).unwrap_or(0.0)
    }

    pub fn flag(&self, key: &str) -> bool {
        matches!(self.values.get(key), Some(Value::Flag(true)))
    }

    /// Supplied index parameters in output order.
    pub fn index_entries(&self) -> Vec<(&'static str, Value)> {
        self.family.indices().iter().filter_map(|k| self.values.get(k.0).map(|v| (k.0, *v))).collect()
    }

    /// All angle parameters in output order, zero-filled.
    pub fn angle_entries(&self) -> Vec<(&'static str, f64)> {
        self.family.angles().iter().map(|&a| (a, self.angle(a))).collect()
    }
}

fn parse_real(key: &str, raw: &str) -> Result<f64, CliError> {
    let x: f64 = raw.trim().parse().map_err(|_| CliError::Validation(format!("{key}: '{raw}' is not a number")))?;
    if !x.is_finite() {
        return Err(CliError::Validation(format!("{key}: value must be finite")));
    }
    Ok(x)
}

fn static_key(family: Family, key: &str) -> Option<&'static str> {
    family.angles().iter().copied().chain(family.indices().iter().map(|k| k.0)).find(|&k| k == key)
}

/// Parses `key=value` pairs, checking names, kinds and required indices.
pub fn parse_params(family: Family, raw: &[String], grid_axes: &[&str]) -> Result<Params, CliError> {
    let mut values = BTreeMap::new();
    for item in raw {
        let (key, val) = item
            .split_once('=')
            .ok_or_else(|| CliError::Validation(format!("parameter '{item}' is not of the form key=value")))?;
        let key = key.trim();
        let name = static_key(family, key).ok_or_else(|| {
            let mut known: Vec<&str> = family.indices().iter().map(|k| k.0).collect();
            known.extend(family.angles());
            CliError::Validation(format!(
                "{key}: not a parameter of {}; expected one of {}",
                family.name(),
                known.join(", ")
            ))
        })?;
        let value = match family.kind_of(name).unwrap() {
            Kind::Half => Value::Half(val.parse::<HalfInt>().map_err(|e| CliError::Validation(format!("{key}: {e}")))?),
            Kind::Real => Value::Real(parse_real(key, val)?),
            Kind::Flag => Value::Flag(
                val.trim()
                    .parse::<bool>()
                    .map_err(|_| CliError::Validation(format!("{key}: expected true or false")))?,
            ),
        };
        if values.insert(name, value).is_some() {
            return Err(CliError::Validation(format!("{key}: given more than once")));
        }
    }
    for &axis in grid_axes {
        match family.kind_of(axis) {
            Some(Kind::Real) => {}
            Some(_) => return Err(CliError::Validation(format!("grid axis {axis}: only real parameters can vary"))),
            None => {
                return Err(CliError::Validation(format!("grid axis {axis}: not a parameter of {}", family.name())))
            }
        }
        if values.contains_key(axis) {
            return Err(CliError::Validation(format!("{axis}: given both as a parameter and a grid axis")));
        }
    }
    for &(key, _, required) in family.indices() {
        if required && !values.contains_key(key) && !grid_axes.contains(&key) {
            return Err(CliError::Validation(format!("{key}: required by {}", family.name())));
        }
    }
    Ok(Params { family, values })
}

/// A grid axis `axis:start:stop:count` with evenly spaced points.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub axis: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn parse(s: &str) -> Result<Grid, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        let [axis, start, stop, count] = parts[..] else {
            return Err(CliError::Validation(format!("grid '{s}' is not of the form axis:start:stop:count")));
        };
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| CliError::Validation(format!("grid count '{count}' is not a positive integer")))?;
        if count == 0 || count > MAX_POINTS {
            return Err(CliError::Validation(format!("grid count must be in 1..={MAX_POINTS}, got {count}")));
        }
        Ok(Grid {
            axis: axis.trim().to_string(),
            start: parse_real("grid start", start)?,
            stop: parse_real("grid stop", stop)?,
            count,
        })
    }

    pub fn point(&self, k: usize) -> f64 {
        if self.count == 1 {
            self.start
        } else if k + 1 == self.count {
            self.stop
        } else {
            self.start + (self.stop - self.start) * k as f64 / (self.count - 1) as f64
        }
    }
}

/// Expands the base parameters over the product of the grids, first axis
/// outermost.
pub fn expand(base: &Params, grids: &[Grid]) -> Result<Vec<Params>, CliError> {
    let mut total: usize = 1;
    for g in grids {
        total = total.saturating_mul(g.count);
    }
    if total > MAX_POINTS {
        return Err(CliError::Validation(format!("grid expands to {total} points, more than {MAX_POINTS}")));
    }
    let mut axes = Vec::new();
    for g in grids {
        if axes.contains(&g.axis.as_str()) {
            return Err(CliError::Validation(format!("grid axis {} repeated", g.axis)));
        }
        axes.push(g.axis.as_str());
    }
    let keys: Vec<&'static str> = grids.iter().map(|g| static_key(base.family, &g.axis).unwrap()).collect();
    let mut out = Vec::with_capacity(total);
    for flat in 0..total {
        let mut p = base.clone();
        let mut rest = flat;
        for (g, key) in grids.iter().zip(&keys).rev() {
            p.values.insert(key, Value::Real(g.point(rest % g.count)));
            rest /= g.count;
        }
        out.push(p);
    }
    Ok(out)
}
