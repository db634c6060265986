//! One report object per check.

use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub variant: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: ReportParams,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_witness: Option<String>,
    pub wall_time_ms: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `PASS check [N=3 K=4 extended_multi] 12.3 ms`, plus the witness.
    pub fn text_line(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{tag} {} [N={} K={} {}] {:.1} ms",
            self.check, self.params.n, self.params.k, self.params.variant, self.wall_time_ms
        );
        if let Some(w) = &self.residual_witness {
            s.push_str("\n     witness: ");
            s.push_str(w);
        }
        s
    }
}

/// Result of a single check before timing and naming are attached.
pub struct Outcome {
    pub pass: bool,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { pass: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Outcome { pass: false, witness: Some(witness.into()) }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(witness: Option<String>) -> Self {
        Outcome { pass: witness.is_none(), witness }
    }

    pub fn expect(pass: bool, otherwise: impl FnOnce() -> String) -> Self {
        if pass {
            Outcome::pass()
        } else {
            Outcome::fail(otherwise())
        }
    }
}

/// Runs `f`, timing it; errors become failing reports carrying the message.
pub fn timed<F>(check: impl Into<String>, params: &ReportParams, f: F) -> Report
where
    F: FnOnce() -> anyhow::Result<Outcome>,
{
    let start = Instant::now();
    let outcome = f().unwrap_or_else(|e| Outcome::fail(format!("error: {e:#}")));
    Report {
        check: check.into(),
        params: params.clone(),
        status: if outcome.pass { Status::Pass } else { Status::Fail },
        residual_witness: outcome.witness,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}
