//! Chart specifications.

use serde::{Deserialize, Serialize};

use crate::error::{ChartError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrthExample {
    /// O_2, n = 1, I = {0, 1}.
    Example1,
    /// O_4, n = 2, I = {1}.
    Example2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    /// n odd, I = {0}: chart around π·Λ_0.
    A,
    /// n even, I = {m}: chart around π·Λ_m.
    B,
    /// n even, I = {m}: chart around ⟨f_1, πf_1, …, πf_{n−1}⟩.
    B1,
    /// n = 3, (r, s) = (2, 1), I = {1}.
    PicardI1,
    Orth(OrthExample),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    Naive,
    Wedge,
    Spin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChartSpec {
    pub case: Case,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub level: Level,
}

impl ChartSpec {
    pub fn new(case: Case, n: usize, r: usize, s: usize, level: Level) -> Result<Self> {
        let spec = ChartSpec { case, n, r, s, level };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let ChartSpec { case, n, r, s, .. } = *self;
        if r + s != n || s > r {
            return Err(ChartError::Spec(format!("need r + s = n and s ≤ r, got n={n}, r={r}, s={s}")));
        }
        match case {
            Case::A if n % 2 == 0 || !(1..=9).contains(&n) => {
                Err(ChartError::Spec(format!("case A needs odd n ≤ 9, got {n}")))
            }
            Case::B if n % 2 == 1 || !(2..=8).contains(&n) => {
                Err(ChartError::Spec(format!("case B needs even 2 ≤ n ≤ 8, got {n}")))
            }
            Case::B1 if n % 2 == 1 || !(2..=8).contains(&n) || s == 0 => {
                Err(ChartError::Spec(format!("case B1 needs even 2 ≤ n ≤ 8 and s ≥ 1, got n={n}, s={s}")))
            }
            Case::PicardI1 if (n, r, s) != (3, 2, 1) => {
                Err(ChartError::Spec("the Picard I = {1} chart has (n, r, s) = (3, 2, 1)".into()))
            }
            Case::Orth(OrthExample::Example1) if n != 1 => Err(ChartError::Spec("example 1 has n = 1".into())),
            Case::Orth(OrthExample::Example2) if n != 2 => Err(ChartError::Spec("example 2 has n = 2".into())),
            _ => Ok(()),
        }
    }
}
