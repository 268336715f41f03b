use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Structure group of a Higgs bundle fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    GL,
    SL,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::GL => f.write_str("GL"),
            Group::SL => f.write_str("SL"),
        }
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Group::GL),
            "SL" => Ok(Group::SL),
            _ => Err(format!("unknown group '{s}' (expected GL or SL)")),
        }
    }
}

/// Genus of a rank-n spectral curve over a genus-g base: 1 + n²(g − 1).
pub fn spectral_genus(n: u64, g: u64) -> u64 {
    1 + n * n * (g - 1)
}

/// Degree of the line bundles on the spectral curve that the real
/// structure can fix: n(n − 1)(g − 1).
pub fn fixed_degree(n: u64, g: u64) -> u64 {
    n * (n - 1) * (g - 1)
}

/// Real dimension of a real Hitchin fibre: 1 + n²(g − 1) for GL(n) and
/// (n² − 1)(g − 1) for SL(n).
pub fn fibre_dim(group: Group, n: u64, g: u64) -> u64 {
    match group {
        Group::GL => 1 + n * n * (g - 1),
        Group::SL => (n * n - 1) * (g - 1),
    }
}
