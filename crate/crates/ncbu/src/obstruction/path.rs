//! Sampled paths of matrices with declared continuity bounds, spectral rank
//! tracking for projection paths, and the determinant winding number of
//! unitary loops.

use num::complex::Complex64;

use crate::error::ObstructionError;
use crate::numeric::matrix::{
    det, distance, hermitian_eigenvalues, projection_residual, unitarity_residual, CMatrix,
};

/// What a sampled path claims to consist of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Projection,
    Unitary,
    HomImage,
}

/// A path sampled on an increasing `t`-grid with a declared Lipschitz bound.
/// Continuity is certified from the declared bound and the grid, never
/// inferred: the checks confirm `||v_{i+1} - v_i|| <= L (t_{i+1} - t_i) + slack`.
#[derive(Clone, Debug)]
pub struct PathSample {
    pub label: String,
    pub kind: SampleKind,
    pub grid: Vec<f64>,
    pub values: Vec<CMatrix>,
    pub lipschitz: f64,
}

/// Validation summary of a sampled path.
#[derive(Clone, Debug)]
pub struct PathReport {
    pub label: String,
    /// Worst per-sample residual against the declared kind.
    pub max_kind_residual: f64,
    pub lipschitz_ok: bool,
    /// Largest `||step|| - (L dt + slack)` over the grid (negative when ok).
    pub max_step_excess: f64,
}

impl PathSample {
    pub fn new(
        label: impl Into<String>,
        kind: SampleKind,
        grid: Vec<f64>,
        values: Vec<CMatrix>,
        lipschitz: f64,
    ) -> Result<Self, ObstructionError> {
        if grid.len() != values.len() {
            return Err(ObstructionError::Dimension(format!(
                "{} grid points vs {} samples",
                grid.len(),
                values.len()
            )));
        }
        if grid.len() < 2 {
            return Err(ObstructionError::Dimension(
                "need at least two samples".into(),
            ));
        }
        for w in grid.windows(2) {
            if w[1] <= w[0] {
                return Err(ObstructionError::Dimension(
                    "grid must be increasing".into(),
                ));
            }
        }
        if grid[0] < -1e-12 || *grid.last().unwrap() > 1.0 + 1e-12 {
            return Err(ObstructionError::Dimension(
                "grid must lie in [0, 1]".into(),
            ));
        }
        Ok(PathSample {
            label: label.into(),
            kind,
            grid,
            values,
            lipschitz,
        })
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    fn slack(&self) -> f64 {
        1e-9 * (1.0 + self.lipschitz)
    }

    /// Checks per-sample kind residuals and the declared continuity bound.
    pub fn validate(&self, tol: f64) -> Result<PathReport, ObstructionError> {
        let mut max_kind = 0.0f64;
        for (index, v) in self.values.iter().enumerate() {
            let residual = match self.kind {
                SampleKind::Projection => projection_residual(v),
                SampleKind::Unitary => unitarity_residual(v),
                SampleKind::HomImage => 0.0,
            };
            max_kind = max_kind.max(residual);
            if residual > tol {
                return Err(ObstructionError::BadSample {
                    index,
                    kind: format!("{:?}", self.kind).to_lowercase(),
                    residual,
                });
            }
        }
        let mut max_excess = f64::NEG_INFINITY;
        for i in 0..self.len() - 1 {
            let dt = self.grid[i + 1] - self.grid[i];
            let step = distance(&self.values[i + 1], &self.values[i]);
            max_excess = max_excess.max(step - (self.lipschitz * dt + self.slack()));
        }
        Ok(PathReport {
            label: self.label.clone(),
            max_kind_residual: max_kind,
            lipschitz_ok: max_excess <= 0.0,
            max_step_excess: max_excess,
        })
    }
}

/// Ranks of a path of projections, sample by sample.
#[derive(Clone, Debug)]
pub struct RankPathReport {
    pub ranks: Vec<usize>,
    /// True when the rank never changes along the path.
    pub constant: bool,
    pub endpoint_ranks: (usize, usize),
    /// Smallest distance of any eigenvalue from the 1/2 threshold.
    pub min_gap: f64,
}

/// Counts eigenvalues above 1/2 at every sample. Eigenvalues within 0.1 of
/// the threshold indicate an ill-conditioned projection and are an error,
/// not a guess.
pub fn projection_rank_path(p: &PathSample) -> Result<RankPathReport, ObstructionError> {
    if p.kind != SampleKind::Projection {
        return Err(ObstructionError::Dimension(
            "rank path requires projection samples".into(),
        ));
    }
    let mut ranks = Vec::with_capacity(p.len());
    let mut min_gap = f64::INFINITY;
    for (index, v) in p.values.iter().enumerate() {
        let eigs = hermitian_eigenvalues(v);
        for e in &eigs {
            let gap = (e - 0.5).abs();
            min_gap = min_gap.min(gap);
            if gap < 0.1 {
                return Err(ObstructionError::IllConditionedProjection { index, value: *e });
            }
        }
        ranks.push(eigs.iter().filter(|e| **e > 0.5).count());
    }
    let constant = ranks.windows(2).all(|w| w[0] == w[1]);
    let endpoint_ranks = (ranks[0], *ranks.last().unwrap());
    Ok(RankPathReport {
        ranks,
        constant,
        endpoint_ranks,
        min_gap,
    })
}

/// Integer winding of the determinant of a loop of matrices sampled around
/// the circle (the list is read cyclically). Consecutive determinant phases
/// must differ by less than pi; larger steps are reported as insufficient
/// sampling rather than guessed.
pub fn winding_number(loop_samples: &[CMatrix]) -> Result<i64, ObstructionError> {
    if loop_samples.len() < 3 {
        return Err(ObstructionError::InsufficientSampling {
            index: 0,
            step: std::f64::consts::PI,
        });
    }
    let dets: Vec<Complex64> = loop_samples.iter().map(det).collect();
    for (index, d) in dets.iter().enumerate() {
        if d.norm() < 0.1 {
            return Err(ObstructionError::BadSample {
                index,
                kind: "invertible".into(),
                residual: d.norm(),
            });
        }
    }
    let mut total = 0.0f64;
    for i in 0..dets.len() {
        let next = dets[(i + 1) % dets.len()];
        let step = (next / dets[i]).arg();
        if step.abs() >= std::f64::consts::PI - 1e-9 {
            return Err(ObstructionError::InsufficientSampling {
                index: i,
                step: step.abs(),
            });
        }
        total += step;
    }
    let winding = total / (2.0 * std::f64::consts::PI);
    let rounded = winding.round();
    if (winding - rounded).abs() > 0.01 {
        return Err(ObstructionError::InsufficientSampling {
            index: 0,
            step: (winding - rounded).abs(),
        });
    }
    Ok(rounded as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::matrix::{identity, CMatrix};
    use num::complex::Complex64;

    fn circle_loop(n: usize, f: impl Fn(Complex64) -> CMatrix) -> Vec<CMatrix> {
        (0..n)
            .map(|j| {
                let z =
                    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64);
                f(z)
            })
            .collect()
    }

    #[test]
    fn coordinate_loop_winds_once() {
        let samples = circle_loop(64, |z| CMatrix::from_element(1, 1, z));
        assert_eq!(winding_number(&samples).unwrap(), 1);
    }

    #[test]
    fn doubled_diagonal_winds_twice() {
        let samples = circle_loop(64, |z| {
            let mut m = identity(2);
            m[(0, 0)] = z;
            m[(1, 1)] = z;
            m
        });
        assert_eq!(winding_number(&samples).unwrap(), 2);
    }

    #[test]
    fn constant_loop_winds_zero() {
        let samples = vec![identity(3); 16];
        assert_eq!(winding_number(&samples).unwrap(), 0);
    }

    #[test]
    fn sparse_sampling_is_rejected() {
        // Degree-2 loop on 4 samples: measured phase steps land on the pi
        // boundary, where the step direction is undecidable.
        let samples = circle_loop(4, |z| CMatrix::from_element(1, 1, z * z));
        assert!(matches!(
            winding_number(&samples),
            Err(ObstructionError::InsufficientSampling { .. })
        ));
    }

    #[test]
    fn winding_survives_small_perturbations() {
        use crate::numeric::matrix::exp_i_hermitian;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let base = circle_loop(64, |z| {
            let mut m = identity(2);
            m[(0, 0)] = z;
            m[(1, 1)] = z * z;
            m
        });
        let expected = winding_number(&base).unwrap();
        assert_eq!(expected, 3);
        for _ in 0..50 {
            let perturbed: Vec<CMatrix> = base
                .iter()
                .map(|m| {
                    let h = CMatrix::from_fn(2, 2, |i, j| {
                        if i == j {
                            Complex64::new(rng.gen_range(-0.05..0.05), 0.0)
                        } else {
                            Complex64::new(0.0, 0.0)
                        }
                    });
                    m * exp_i_hermitian(&h, 1.0)
                })
                .collect();
            assert_eq!(winding_number(&perturbed).unwrap(), expected);
        }
    }

    #[test]
    fn rank_path_flags_jumps_and_threshold_noise() {
        let p_rank1 = CMatrix::from_fn(2, 2, |i, j| {
            if i == 0 && j == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let path = PathSample::new(
            "jump",
            SampleKind::Projection,
            vec![0.0, 0.5, 1.0],
            vec![p_rank1.clone(), p_rank1.clone(), identity(2)],
            100.0,
        )
        .unwrap();
        let report = projection_rank_path(&path).unwrap();
        assert!(!report.constant);
        assert_eq!(report.endpoint_ranks, (1, 2));

        // An eigenvalue near 1/2 must be an error.
        let half = identity(2).scale(0.45);
        let bad = PathSample::new(
            "ill",
            SampleKind::Projection,
            vec![0.0, 1.0],
            vec![p_rank1, half],
            100.0,
        )
        .unwrap();
        assert!(matches!(
            projection_rank_path(&bad),
            Err(ObstructionError::IllConditionedProjection { .. })
        ));
    }

    #[test]
    fn lipschitz_excess_is_reported() {
        let a = identity(2);
        let b = identity(2).scale(-1.0);
        let path = PathSample::new(
            "too fast",
            SampleKind::Unitary,
            vec![0.0, 1.0],
            vec![a, b],
            0.5,
        )
        .unwrap();
        let report = path.validate(1e-9).unwrap();
        assert!(!report.lipschitz_ok);
        assert!(report.max_step_excess > 1.0);
    }
}
