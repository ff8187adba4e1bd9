use std::collections::BTreeMap;
use std::path::Path;

use lorentz_core::Tolerances;
use serde::Deserialize;

use crate::error::CliError;

/// On-disk configuration. Keys of `[tolerances]` are the names in
/// [`Tolerances::NAMES`]; `l_cap` may also sit at the top level.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    l_cap: Option<f64>,
    #[serde(default)]
    tolerances: BTreeMap<String, f64>,
}

fn apply(tol: &mut Tolerances, name: &str, value: f64) -> Result<(), CliError> {
    tol.set(name, value).map_err(|e| CliError::Validation(e.to_string()))
}

/// Defaults, then the config file, then `--tol` overrides.
pub fn resolve(path: Option<&Path>, overrides: &[String]) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances::default();
    if let Some(path) = path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("cannot read config {}: {e}", path.display())))?;
        let file: ConfigFile =
            toml::from_str(&text).map_err(|e| CliError::Validation(format!("config {}: {e}", path.display())))?;
        if file.l_cap.is_some() && file.tolerances.contains_key("l_cap") {
            return Err(CliError::Validation("l_cap given both at top level and in [tolerances]".into()));
        }
        if let Some(cap) = file.l_cap {
            apply(&mut tol, "l_cap", cap)?;
        }
        for (name, value) in &file.tolerances {
            apply(&mut tol, name, *value)?;
        }
    }
    for item in overrides {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Validation(format!("--tol '{item}' is not of the form NAME=VALUE")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Validation(format!("--tol {name}: '{value}' is not a number")))?;
        apply(&mut tol, name.trim(), value)?;
    }
    Ok(tol)
}
