//! Error types shared across the toolkit.

use thiserror::Error;

/// Errors raised by the exact scalar ring.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ScalarError {
    /// A root of unity was requested whose conductor exceeds the configured
    /// bound (`NCBU_CONDUCTOR_MAX`, default 64). Signals an unsupported phase.
    #[error("conductor {requested} exceeds the configured bound {bound}")]
    ConductorBound { requested: u32, bound: u32 },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("cannot parse scalar: {0}")]
    Parse(String),
    /// Scalar substitution (t, s) -> (t0, s0) requires s0^2 = 1 - t0^2.
    #[error("substitution point does not satisfy s^2 = 1 - t^2")]
    BranchMismatch,
}

/// Errors raised by polynomials, presentations, and rewriting.
#[derive(Debug, Clone, Error)]
pub enum PolyError {
    #[error("operands live over different alphabets")]
    AlphabetMismatch,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("rewrite rule `{rule}` does not strictly decrease the monomial order")]
    RuleNotDecreasing { rule: String },
    #[error("starred form of rule `{rule}` is neither present nor derivable")]
    StarClosure { rule: String },
    /// The per-call reduction budget was exhausted; suspected non-termination.
    #[error("reduction budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid presentation parameter: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Errors raised while building actions, crossed products, and joins.
#[derive(Debug, Clone, Error)]
pub enum StructureError {
    #[error("action `{action}` is not valid on `{pres}`: {detail}")]
    InvalidAction {
        action: String,
        pres: String,
        detail: String,
    },
    #[error("actions `{a}` and `{b}` do not commute (defect on `{letter}`: {defect})")]
    NonCommuting {
        a: String,
        b: String,
        letter: String,
        defect: String,
    },
    #[error("homomorphism `{hom}` has not been validated")]
    NotValidated { hom: String },
    #[error("homomorphism `{hom}` is invalid: {detail}")]
    InvalidHom { hom: String, detail: String },
    #[error("equivariance hypothesis fails on `{letter}` with defect {defect}")]
    NotEquivariant { letter: String, defect: String },
    #[error("domain/codomain mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Errors raised by the numeric oracle.
#[derive(Debug, Clone, Error)]
pub enum NumericError {
    #[error("representation `{rep}` violates relation `{rule}` with residual {residual:.3e} (tol {tol:.3e})")]
    RelationResidual {
        rep: String,
        rule: String,
        residual: f64,
        tol: f64,
    },
    #[error("letter images must be constant in the path parameters for `{letter}`")]
    NonConstantImage { letter: String },
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Errors raised by obstruction detectors.
#[derive(Debug, Clone, Error)]
pub enum ObstructionError {
    #[error(
        "finite-dimensional algebra fails {law} at basis triple {at:?} (residual {residual:.3e})"
    )]
    AlgebraLaw {
        law: String,
        at: (usize, usize, usize),
        residual: f64,
    },
    #[error("action matrix does not have order {k} (residual {residual:.3e})")]
    ActionOrder { k: u32, residual: f64 },
    #[error("sample {index}: eigenvalue {value:.4} lies within 0.1 of the rank threshold 1/2")]
    IllConditionedProjection { index: usize, value: f64 },
    #[error("sample {index} is not a {kind} (residual {residual:.3e})")]
    BadSample {
        index: usize,
        kind: String,
        residual: f64,
    },
    #[error("insufficient sampling: determinant phase step {step:.4} >= pi at index {index}")]
    InsufficientSampling { index: usize, step: f64 },
    #[error("path endpoint precondition fails: {0}")]
    BadEndpoint(String),
    #[error("certificate is malformed: {0}")]
    BadCertificate(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Errors raised by the scenario runner (infrastructure failures, not
/// check failures: those are recorded inside reports).
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown scenario `{0}`; try `ncbu list`")]
    UnknownScenario(String),
    #[error("malformed scenario file: {0}")]
    BadFile(String),
    #[error("unresolved reference `{0}` in scenario file")]
    Unresolved(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<PolyError> for ScenarioError {
    fn from(e: PolyError) -> Self {
        ScenarioError::Internal(e.to_string())
    }
}

impl From<StructureError> for ScenarioError {
    fn from(e: StructureError) -> Self {
        ScenarioError::Internal(e.to_string())
    }
}

impl From<NumericError> for ScenarioError {
    fn from(e: NumericError) -> Self {
        ScenarioError::Internal(e.to_string())
    }
}

impl From<ObstructionError> for ScenarioError {
    fn from(e: ObstructionError) -> Self {
        ScenarioError::Internal(e.to_string())
    }
}

impl From<ScalarError> for ScenarioError {
    fn from(e: ScalarError) -> Self {
        ScenarioError::Internal(e.to_string())
    }
}
