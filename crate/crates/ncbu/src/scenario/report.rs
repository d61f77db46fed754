//! Scenario configuration, per-check records, and reports.

use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::numeric::{oracle_compare, Representation};
use crate::poly::{NCPoly, Presentation};
use crate::tolerance;

/// Runtime overrides shared by all scenarios.
#[derive(Clone, Debug)]
pub struct Config {
    /// Cyclic order override where a scenario is parametrized by k.
    pub k: Option<u32>,
    pub seed: u64,
    /// Grid size override for oracle comparisons and sampled families.
    pub grid: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            k: None,
            seed: 7,
            grid: None,
        }
    }
}

/// Expected verdict of a check, declared before running.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
}

/// Observed outcome of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

/// One executed check: expectation, observation, and evidence.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: Expect,
    pub observed: Outcome,
    /// True when observed matches expected.
    pub ok: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

/// A complete scenario run. Deterministic for fixed seeds except for the
/// `wall_ms` field.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub toolkit_version: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub grid: usize,
    pub notes: Vec<String>,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_residual_max: Option<f64>,
    pub overall: Outcome,
    pub wall_ms: u64,
}

impl Report {
    /// pass -> 0, any unexpected verdict -> 1, infrastructure error -> 2.
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "scenario {} (toolkit {}, seed {}, grid {})\n",
            self.scenario, self.toolkit_version, self.seed, self.grid
        ));
        if let Some(k) = self.k {
            out.push_str(&format!("  k = {k}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        for c in &self.checks {
            let mark = if c.ok { "ok " } else { "BAD" };
            out.push_str(&format!(
                "  [{mark}] {:<44} expected {:?}, observed {:?}",
                c.name, c.expected, c.observed
            ));
            if let Some(r) = c.residual {
                out.push_str(&format!(" (residual {r:.3e})"));
            }
            out.push('\n');
            if !c.detail.is_empty() {
                out.push_str(&format!("        {}\n", c.detail));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!("        witness: {w}\n"));
            }
        }
        if let Some(r) = self.oracle_residual_max {
            out.push_str(&format!("  oracle residual max: {r:.3e}\n"));
        }
        out.push_str(&format!(
            "  overall: {:?} ({} ms)\n",
            self.overall, self.wall_ms
        ));
        out
    }
}

/// Incremental report builder used by the registered scenarios. Symbolic
/// zero-checks are automatically cross-checked against a bound numeric
/// representation when one is registered.
pub struct Runner {
    name: String,
    seed: u64,
    k: Option<u32>,
    grid: usize,
    notes: Vec<String>,
    checks: Vec<CheckRecord>,
    oracle: Option<OracleBinding>,
    oracle_max: Option<f64>,
    started: std::time::Instant,
}

struct OracleBinding {
    reps: Vec<Representation>,
    grid: Vec<f64>,
}

impl Runner {
    pub fn new(name: impl Into<String>, cfg: &Config, default_grid: usize) -> Self {
        Runner {
            name: name.into(),
            seed: cfg.seed,
            k: None,
            grid: cfg.grid.unwrap_or(default_grid),
            notes: Vec::new(),
            checks: Vec::new(),
            oracle: None,
            oracle_max: None,
            started: std::time::Instant::now(),
        }
    }

    pub fn set_k(&mut self, k: u32) {
        self.k = Some(k);
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn grid_points(&self) -> usize {
        self.grid
    }

    pub fn grid(&self) -> Vec<f64> {
        crate::numeric::unit_grid(self.grid)
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Registers representations against which `check_zero` cross-checks.
    pub fn bind_oracle(&mut self, reps: Vec<Representation>) {
        let grid = self.grid();
        self.oracle = Some(OracleBinding { reps, grid });
    }

    fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    /// Symbolic zero check: passes iff the normal form is zero. When an
    /// oracle is bound and the polynomial lives over one of its
    /// presentations, the residual is recorded as well.
    pub fn check_zero(&mut self, name: &str, pres: &Presentation, p: &NCPoly, expect: Expect) {
        let (observed, detail, witness) = match pres.normal_form(p) {
            Ok(nf) if nf.is_zero() => (Outcome::Pass, "normal form 0".to_string(), None),
            Ok(nf) => (
                Outcome::Fail,
                "nonzero normal form".to_string(),
                Some(nf.to_string()),
            ),
            Err(e) => (Outcome::Error, e.to_string(), None),
        };
        let mut residual = None;
        if let Some(oracle) = &self.oracle {
            for rep in &oracle.reps {
                if rep.presentation().alphabet().compatible(p.alphabet()) {
                    if let Ok(r) = oracle_compare(rep, p, pres, &oracle.grid) {
                        residual = Some(residual.unwrap_or(0.0f64).max(r));
                    }
                }
            }
            if let Some(r) = residual {
                self.oracle_max = Some(self.oracle_max.unwrap_or(0.0).max(r));
            }
        }
        let ok = matches!(
            (&observed, expect),
            (Outcome::Pass, Expect::Pass) | (Outcome::Fail, Expect::Fail)
        );
        self.push(CheckRecord {
            name: name.to_string(),
            expected: expect,
            observed,
            ok,
            detail,
            witness,
            residual,
        });
    }

    /// Boolean check with optional witness text.
    pub fn check_bool(
        &mut self,
        name: &str,
        expect: Expect,
        observed_pass: bool,
        detail: impl Into<String>,
        witness: Option<String>,
    ) {
        let observed = if observed_pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        let ok = matches!(
            (&observed, expect),
            (Outcome::Pass, Expect::Pass) | (Outcome::Fail, Expect::Fail)
        );
        self.push(CheckRecord {
            name: name.to_string(),
            expected: expect,
            observed,
            ok,
            detail: detail.into(),
            witness,
            residual: None,
        });
    }

    /// Numeric check: passes iff `residual <= tol`.
    pub fn check_residual(&mut self, name: &str, residual: f64, tol: f64, expect: Expect) {
        let observed = if residual <= tol {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        let ok = matches!(
            (&observed, expect),
            (Outcome::Pass, Expect::Pass) | (Outcome::Fail, Expect::Fail)
        );
        self.oracle_max = Some(self.oracle_max.unwrap_or(0.0).max(residual));
        self.push(CheckRecord {
            name: name.to_string(),
            expected: expect,
            observed,
            ok,
            detail: format!("tolerance {tol:.1e}"),
            witness: None,
            residual: Some(residual),
        });
    }

    /// Records an infrastructure error as a failed check.
    pub fn check_error(&mut self, name: &str, expect: Expect, err: impl std::fmt::Display) {
        self.push(CheckRecord {
            name: name.to_string(),
            expected: expect,
            observed: Outcome::Error,
            ok: false,
            detail: err.to_string(),
            witness: None,
            residual: None,
        });
    }

    /// Oracle comparison as an explicit check at the derived tolerance.
    pub fn check_oracle(
        &mut self,
        name: &str,
        rep: &Representation,
        p: &NCPoly,
        pres: &Presentation,
    ) {
        let grid = self.grid();
        match oracle_compare(rep, p, pres, &grid) {
            Ok(r) => self.check_residual(name, r, tolerance::DERIVED, Expect::Pass),
            Err(e) => self.check_error(name, Expect::Pass, e),
        }
    }

    pub fn finish(self) -> Report {
        let overall = if self.checks.iter().any(|c| c.observed == Outcome::Error) {
            Outcome::Error
        } else if self.checks.iter().all(|c| c.ok) {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        Report {
            scenario: self.name,
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: self.seed,
            k: self.k,
            grid: self.grid,
            notes: self.notes,
            checks: self.checks,
            oracle_residual_max: self.oracle_max,
            overall,
            wall_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Shared wording for the standing limitations scenarios carry.
pub fn standing_notes() -> Vec<String> {
    vec![
        "identities are certified in the dense polynomial *-subalgebra; path elements are polynomial in (t, s)".into(),
        "rewrite systems are oriented but not proven globally confluent; every symbolic verdict is cross-checked numerically".into(),
    ]
}

impl From<PolyError> for Outcome {
    fn from(_: PolyError) -> Self {
        Outcome::Error
    }
}
