//! Claim reports and their aggregation.

use serde::Serialize;
use serde_json::Value;

use crate::config::Setting;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    /// 0 all-pass, 1 any-fail, 2 any-inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub statement: String,
    pub status: Status,
    pub witness: Value,
    pub setting: Setting,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bundle {
    pub suite: String,
    pub status: Status,
    pub claims: Vec<ClaimReport>,
}

impl Bundle {
    pub fn new(suite: &str, claims: Vec<ClaimReport>) -> Self {
        let status = claims.iter().map(|c| c.status).max().unwrap_or(Status::Pass);
        Bundle { suite: suite.to_string(), status, claims }
    }
}
