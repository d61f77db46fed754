//! Nonexistence and existence detectors: saturation (freeness) of finite
//! cyclic actions, rank tracking for projection paths, determinant winding
//! obstructions, the order-k torsion pipeline, and homotopy certificate
//! verification.

pub mod certificate;
mod findim;
mod orderk;
mod path;

pub use certificate::{
    certificate_verify, CertOptions, CertReport, Certificate, RepVerdict, Segment, SegmentVerdict,
    Target, WindingJump, WindingTrace,
};
pub use findim::{
    function_algebra_with_permutation, isotypic_residual, matrix_algebra_with_conjugation,
    saturation_check, FiniteDimAlgebra, GammaVerdict, SaturationReport,
};
pub use orderk::{order_k_obstruction, OrderKReport};
pub use path::{
    projection_rank_path, winding_number, PathReport, PathSample, RankPathReport, SampleKind,
};
