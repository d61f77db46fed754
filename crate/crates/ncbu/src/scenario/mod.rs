//! Named, reproducible scenarios binding all modules together, with declared
//! expected verdicts (including expected failures) and machine-readable
//! reports.

pub mod json;
mod report;
mod scenarios_core;
mod scenarios_obstruction;

pub use report::{standing_notes, CheckRecord, Config, Expect, Outcome, Report, Runner};

use crate::error::ScenarioError;

type ScenarioFn = fn(&Config) -> Result<Report, ScenarioError>;

/// The registered scenarios, in presentation order.
pub const SCENARIOS: &[(&str, &str)] = &[
    (
        "thm_3_1",
        "circle with the conjugation twist: an equivariant unitary path exists; twist equivariance fails as expected",
    ),
    (
        "thm_3_2",
        "free sphere with the antipodal twist: the self-adjoint pair a_t, b_t gives an equivariant map",
    ),
    (
        "rotation_family",
        "rotation automorphisms R(s,t) with exact inverse; R(-1,0) is the antipodal map",
    ),
    (
        "lemma_2_1_induction",
        "twist-equivariant maps induce morphisms of crossed products and joins; non-equivariant candidates are rejected",
    ),
    (
        "prop_2_5_shift",
        "rank-one averaged shift vs diagonal blocks: the order-k torsion obstruction pipeline",
    ),
    (
        "cor_2_6_clopen",
        "clopen translation blocks with a fiber-swapping twist: freeness plus the fixed-fiber obstruction",
    ),
    (
        "exam_3_6_matrix",
        "matrix algebras: free clock conjugation, and the swap-rotation certificate reaching a k-dimensional representation",
    ),
    (
        "exam_3_7_circle",
        "circle winding obstruction: candidate contraction certificates are rejected with the winding witness",
    ),
    (
        "exam_3_8_strong",
        "free sphere: three-segment certificate for strong contractibility modulo 2",
    ),
    (
        "saturation_demos",
        "saturation criterion on matrix algebras and finite function algebras",
    ),
];

fn lookup(name: &str) -> Option<ScenarioFn> {
    match name {
        "thm_3_1" => Some(scenarios_core::thm_3_1),
        "thm_3_2" => Some(scenarios_core::thm_3_2),
        "rotation_family" => Some(scenarios_core::rotation_family),
        "lemma_2_1_induction" => Some(scenarios_core::lemma_2_1_induction),
        "saturation_demos" => Some(scenarios_core::saturation_demos),
        "prop_2_5_shift" => Some(scenarios_obstruction::prop_2_5_shift),
        "cor_2_6_clopen" => Some(scenarios_obstruction::cor_2_6_clopen),
        "exam_3_6_matrix" => Some(scenarios_obstruction::exam_3_6_matrix),
        "exam_3_7_circle" => Some(scenarios_obstruction::exam_3_7_circle),
        "exam_3_8_strong" => Some(scenarios_obstruction::exam_3_8_strong),
        _ => None,
    }
}

/// Names of all registered scenarios.
pub fn list_scenarios() -> Vec<&'static str> {
    SCENARIOS.iter().map(|(name, _)| *name).collect()
}

/// Runs a registered scenario. Check failures are recorded in the report;
/// `Err` is reserved for infrastructure problems.
pub fn run_scenario(name: &str, cfg: &Config) -> Result<Report, ScenarioError> {
    match lookup(name) {
        Some(f) => f(cfg),
        None => Err(ScenarioError::UnknownScenario(name.to_string())),
    }
}
