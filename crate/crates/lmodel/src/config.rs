//! Run configuration shared by every subcommand.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use exactalg::Budget;
use serde::Serialize;

/// Coefficient field: a supported prime or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Prime(u64),
    Rationals,
}

pub const PRIMES: [u64; 4] = [3, 5, 7, 11];

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldChoice::Rationals);
        }
        match s.parse::<u64>() {
            Ok(p) if PRIMES.contains(&p) => Ok(FieldChoice::Prime(p)),
            _ => Err(format!("prime must be one of 3, 5, 7, 11 or Q, got `{s}`")),
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Prime(p) => write!(f, "F_{p}"),
            FieldChoice::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub field: FieldChoice,
    pub budget: Budget,
    /// u-adic precision for lattice-chain comparisons; `None` uses the per-rank default.
    pub precision: Option<usize>,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { field: FieldChoice::Prime(3), budget: Budget::default(), precision: None, out: None, seed: 0 }
    }
}

/// The configuration echoed into every claim report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Setting {
    pub field: String,
    pub budget_pairs: usize,
    pub budget_degree: u32,
    pub precision: Option<usize>,
    pub seed: u64,
}

impl RunConfig {
    pub fn setting(&self) -> Setting {
        Setting {
            field: self.field.to_string(),
            budget_pairs: self.budget.max_pairs,
            budget_degree: self.budget.max_degree,
            precision: self.precision,
            seed: self.seed,
        }
    }
}
