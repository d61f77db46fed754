//! The torsion-unitary obstruction pipeline: a path of order-k unitaries
//! starting at a scalar multiple of the group unitary is normalized,
//! averaged into a path of projections, expanded into matrix form over a
//! twist-fixed representation, and rank-tracked. Endpoint ranks that differ
//! modulo k certify that no continuous path can exist.

use num::complex::Complex64;

use crate::crossed::CrossedPresentation;
use crate::error::ObstructionError;
use crate::numeric::matrix::{distance, identity, projection_residual, CMatrix};
use crate::numeric::{crossed_expand, Representation};
use crate::poly::NCPoly;

use super::path::{projection_rank_path, PathSample, RankPathReport, SampleKind};

/// Outcome of the order-k obstruction pipeline.
#[derive(Clone, Debug)]
pub struct OrderKReport {
    /// The scalar `c` with `u_0 = c mu` (must satisfy `c^k = 1`).
    pub scale: Complex64,
    /// How far the supplied base representation is from being twist-fixed:
    /// the stand-in for properness of the coinvariant ideal.
    pub fixed_residual: f64,
    pub rank_report: RankPathReport,
    /// True when the endpoint ranks differ modulo k: the path cannot be
    /// continuous, so no equivariant map can produce it.
    pub contradiction: bool,
}

/// Runs the pipeline. `u` samples unitaries in the expanded representation
/// `E` over `base_rep` (dimension `k * dim(base_rep)`); `u_t^k = 1` must hold
/// at every sample and `u_0` must be a scalar multiple of the image of the
/// group unitary.
pub fn order_k_obstruction(
    u: &PathSample,
    cp: &CrossedPresentation,
    base_rep: &Representation,
    tol: f64,
) -> Result<OrderKReport, ObstructionError> {
    if u.kind != SampleKind::Unitary {
        return Err(ObstructionError::BadEndpoint(
            "pipeline requires a unitary path".into(),
        ));
    }
    let k = cp.order();
    let expanded = crossed_expand(cp, base_rep)?;
    let dim = expanded.dim();
    for (index, v) in u.values.iter().enumerate() {
        if v.nrows() != dim {
            return Err(ObstructionError::Dimension(format!(
                "sample {index} has dimension {}, expanded representation has {dim}",
                v.nrows()
            )));
        }
        // u_t^k = 1 within tol at each sample.
        let mut power = identity(dim);
        for _ in 0..k {
            power = &power * v;
        }
        let residual = distance(&power, &identity(dim));
        if residual > tol {
            return Err(ObstructionError::BadSample {
                index,
                kind: format!("order-{k} unitary"),
                residual,
            });
        }
    }

    // u_0 = c * E(mu) for a scalar c with c^k = 1.
    let mu_mat = expanded.eval(&cp.mu_poly(), 0.0);
    let u0 = &u.values[0];
    let denom = (mu_mat.adjoint() * &mu_mat).trace();
    let c = (mu_mat.adjoint() * u0).trace() / denom;
    let residual = distance(u0, &mu_mat.map(|x| x * c));
    if residual > tol * (1.0 + c.norm()) {
        return Err(ObstructionError::BadEndpoint(format!(
            "u(0) is not a scalar multiple of the group unitary (residual {residual:.3e})"
        )));
    }
    let torsion = (c.powu(k) - Complex64::new(1.0, 0.0)).norm();
    if torsion > tol {
        return Err(ObstructionError::BadEndpoint(format!(
            "scale c has c^{k} != 1 (residual {torsion:.3e})"
        )));
    }

    // Normalize and average into spectral projections.
    let c_inv = Complex64::new(1.0, 0.0) / c;
    let mut projections = Vec::with_capacity(u.values.len());
    for (index, v) in u.values.iter().enumerate() {
        let vt = v.map(|x| x * c_inv);
        let mut acc = CMatrix::zeros(dim, dim);
        let mut power = identity(dim);
        for _ in 0..k {
            acc += &power;
            power = &power * &vt;
        }
        let p = acc.map(|x| x / Complex64::new(k as f64, 0.0));
        let pr = projection_residual(&p);
        if pr > 1e-8 {
            return Err(ObstructionError::BadSample {
                index,
                kind: "projection".into(),
                residual: pr,
            });
        }
        projections.push(p);
    }
    let proj_path = PathSample::new(
        format!("{}:projections", u.label),
        SampleKind::Projection,
        u.grid.clone(),
        projections,
        u.lipschitz * k as f64,
    )?;
    let rank_report = projection_rank_path(&proj_path)?;

    // Twist-fixedness of the base representation.
    let mut fixed_residual = 0.0f64;
    for gen in cp.base().alphabet().generators() {
        let g = NCPoly::letter(cp.base().alphabet(), gen);
        let moved = cp.twist().apply_raw(&g);
        fixed_residual = fixed_residual.max(distance(
            &base_rep.eval(&moved, 0.0),
            &base_rep.eval(&g, 0.0),
        ));
    }

    let contradiction =
        rank_report.endpoint_ranks.0 % k as usize != rank_report.endpoint_ranks.1 % k as usize;
    Ok(OrderKReport {
        scale: c,
        fixed_residual,
        rank_report,
        contradiction,
    })
}
