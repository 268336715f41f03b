//! Optional TOML configuration and JSON input files.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::CliError;

/// Budgets and defaults read from `--config`. Command-line flags win.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub seed: Option<u64>,
    /// Random configurations tried by the census after its grid.
    pub budget: Option<usize>,
    pub grid: Option<bool>,
    pub grid_limit: Option<usize>,
    pub curve_pool: Option<usize>,
    pub format: Option<String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

pub const INPUT_SCHEMA: u32 = 1;

/// A curve and differential given as a file instead of flags.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    pub schema: u32,
    /// The polynomial as text; or give `roots` (and optionally `lead`).
    #[serde(default)]
    pub p: Option<String>,
    #[serde(default)]
    pub roots: Option<Vec<String>>,
    #[serde(default)]
    pub lead: Option<String>,
    #[serde(default)]
    pub zeros: Option<Vec<String>>,
    #[serde(default)]
    pub a1: Option<String>,
    #[serde(default)]
    pub a2: Option<String>,
    #[serde(default)]
    pub sign: Option<i8>,
    #[serde(default)]
    pub kind: Option<String>,
    #[serde(default)]
    pub rho: Option<i8>,
}

impl InputFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let input: InputFile =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        if input.schema != INPUT_SCHEMA {
            return Err(CliError::Input(format!(
                "unsupported input schema {} (expected {INPUT_SCHEMA})",
                input.schema
            )));
        }
        Ok(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parses() {
        let c: Config = toml::from_str("seed = 7\nbudget = 1000\ngrid = false\n").unwrap();
        assert_eq!(c.seed, Some(7));
        assert_eq!(c.budget, Some(1000));
        assert_eq!(c.grid, Some(false));
        assert!(toml::from_str::<Config>("sede = 1").is_err());
    }

    #[test]
    fn input_parses() {
        let i: InputFile = serde_json::from_str(r#"{"schema":1,"p":"(z^2-1)(z^2-4)(z^2-9)","a1":"3/2","a2":"-3/2"}"#).unwrap();
        assert_eq!(i.a1.as_deref(), Some("3/2"));
        let r: InputFile = serde_json::from_str(r#"{"schema":1,"roots":["1","-1","i","-i","2","3"],"zeros":["0","inf"]}"#).unwrap();
        assert_eq!(r.roots.map(|v| v.len()), Some(6));
        assert!(serde_json::from_str::<InputFile>(r#"{"schema":1,"p":"z","bogus":1}"#).is_err());
    }
}
