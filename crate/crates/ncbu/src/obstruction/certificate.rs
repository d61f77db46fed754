//! Homotopy certificates: finite chains of homomorphism families from a
//! presented algebra into itself tensored with a matrix factor, verified
//! pointwise in representations. A passing chain connects the diagonal
//! embedding `a -> a (x) 1_m` to a declared finite-dimensional (or
//! one-dimensional) representation.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;

use crate::crossed::MatrixOverAlg;
use crate::error::ObstructionError;
use crate::numeric::matrix::{distance, kron, opnorm, CMatrix};
use crate::numeric::Representation;
use crate::poly::{Letter, NCPoly, Presentation};

use super::path::winding_number;

/// The connectivity claim a certificate is trying to establish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Chain ends at an m-dimensional representation (scalar blocks).
    ContractibleModK,
    /// Chain ends at a one-dimensional representation (scalar multiple of 1).
    StronglyContractibleModK,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::ContractibleModK => write!(f, "contractible_mod_k"),
            Target::StronglyContractibleModK => write!(f, "strongly_contractible_mod_k"),
        }
    }
}

/// One segment of a certificate: a homomorphism family parametrized by
/// `t in [0, 1]`, either polynomial in `(t, s)` or sampled on its own grid.
pub enum Segment {
    Poly {
        label: String,
        lipschitz: f64,
        /// generator name -> m x m matrix of polynomials over the domain.
        images: Vec<(String, MatrixOverAlg)>,
    },
    Sampled {
        label: String,
        lipschitz: f64,
        grid: Vec<f64>,
        /// generator name -> one realized matrix per grid point.
        images: Vec<(String, Vec<CMatrix>)>,
    },
}

impl Segment {
    pub fn label(&self) -> &str {
        match self {
            Segment::Poly { label, .. } => label,
            Segment::Sampled { label, .. } => label,
        }
    }
}

/// A chain of segments with a declared matrix factor size and target.
pub struct Certificate {
    pub label: String,
    /// Size of the matrix factor (the modulus of the contractibility claim).
    pub m: usize,
    pub target: Target,
    pub segments: Vec<Segment>,
}

/// Verification options.
#[derive(Clone, Debug)]
pub struct CertOptions {
    /// Grid size for polynomial segments.
    pub grid_points: usize,
    /// Tolerance on relation and self-adjointness defects.
    pub tol_relation: f64,
    /// Tolerance on junctions and chain endpoints.
    pub tol_endpoint: f64,
    /// When set (and the representation is pointwise-diagonal), track the
    /// determinant winding of this generator's image around the circle.
    pub track_winding: Option<String>,
}

impl Default for CertOptions {
    fn default() -> Self {
        CertOptions {
            grid_points: 101,
            tol_relation: 1e-8,
            tol_endpoint: 1e-9,
            track_winding: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SegmentVerdict {
    pub label: String,
    pub max_relation_defect: f64,
    pub max_star_defect: f64,
    pub lipschitz_ok: bool,
    pub max_step_excess: f64,
}

#[derive(Clone, Debug)]
pub struct WindingJump {
    pub segment: String,
    pub after_sample: usize,
    pub from: i64,
    pub to: i64,
}

#[derive(Clone, Debug)]
pub struct WindingTrace {
    pub start: i64,
    pub end: i64,
    pub jump: Option<WindingJump>,
}

#[derive(Clone, Debug)]
pub struct RepVerdict {
    pub rep: String,
    pub segments: Vec<SegmentVerdict>,
    pub max_junction_mismatch: f64,
    pub start_residual: f64,
    pub end_residual: f64,
    pub winding: Option<WindingTrace>,
    pub failures: Vec<String>,
}

/// Full verification report; `pass()` iff no failure was recorded anywhere.
#[derive(Debug)]
pub struct CertReport {
    pub certificate: String,
    pub target: Target,
    pub reps: Vec<RepVerdict>,
    pub failures: Vec<String>,
}

impl CertReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.reps.iter().all(|r| r.failures.is_empty())
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures
            .iter()
            .chain(self.reps.iter().flat_map(|r| r.failures.iter()))
            .next()
            .map(String::as_str)
    }
}

/// Evaluates a polynomial under a custom assignment of generator letters to
/// matrices (starred letters become adjoints). Coefficients must be constant.
fn eval_assignment(
    pres: &Presentation,
    images: &BTreeMap<Letter, CMatrix>,
    p: &NCPoly,
    dim: usize,
) -> Result<CMatrix, ObstructionError> {
    let mut acc = CMatrix::zeros(dim, dim);
    for (w, c) in p.terms() {
        if !c.is_constant() {
            return Err(ObstructionError::BadCertificate(
                "domain relations must have constant coefficients".into(),
            ));
        }
        let mut m = CMatrix::identity(dim, dim);
        for &l in w.letters() {
            let img = if pres.alphabet().is_generator(l) {
                images
                    .get(&l)
                    .ok_or_else(|| {
                        ObstructionError::BadCertificate(format!(
                            "missing image for generator {}",
                            pres.alphabet().name(l)
                        ))
                    })?
                    .clone()
            } else {
                let base = pres.alphabet().star(l);
                images
                    .get(&base)
                    .ok_or_else(|| {
                        ObstructionError::BadCertificate(format!(
                            "missing image for generator {}",
                            pres.alphabet().name(base)
                        ))
                    })?
                    .adjoint()
            };
            m *= img;
        }
        acc += m * c.eval(0.0);
    }
    Ok(acc)
}

/// Per-sample realized images of one segment in one representation.
struct RealizedSegment {
    label: String,
    lipschitz: f64,
    grid: Vec<f64>,
    /// One map generator -> matrix per grid point.
    frames: Vec<BTreeMap<Letter, CMatrix>>,
}

fn realize_segment(
    seg: &Segment,
    pres: &Presentation,
    rep: &Representation,
    m: usize,
    opts: &CertOptions,
) -> Result<RealizedSegment, ObstructionError> {
    let resolve = |name: &str| -> Result<Letter, ObstructionError> {
        pres.alphabet()
            .letter(name)
            .map_err(|e| ObstructionError::BadCertificate(e.to_string()))
    };
    let expected_dim = m * rep.dim();
    match seg {
        Segment::Poly {
            label,
            lipschitz,
            images,
        } => {
            let grid = crate::numeric::unit_grid(opts.grid_points);
            let mut frames = Vec::with_capacity(grid.len());
            for &t in &grid {
                let mut frame = BTreeMap::new();
                for (name, mat) in images {
                    if mat.size() != m {
                        return Err(ObstructionError::Dimension(format!(
                            "segment {label}: matrix factor {} != declared {m}",
                            mat.size()
                        )));
                    }
                    frame.insert(resolve(name)?, rep.realize(mat, t));
                }
                frames.push(frame);
            }
            Ok(RealizedSegment {
                label: label.clone(),
                lipschitz: *lipschitz,
                grid,
                frames,
            })
        }
        Segment::Sampled {
            label,
            lipschitz,
            grid,
            images,
        } => {
            if grid.len() < 2 {
                return Err(ObstructionError::BadCertificate(format!(
                    "segment {label}: need at least two samples"
                )));
            }
            let mut frames = vec![BTreeMap::new(); grid.len()];
            for (name, mats) in images {
                if mats.len() != grid.len() {
                    return Err(ObstructionError::Dimension(format!(
                        "segment {label}: {} samples vs {} grid points",
                        mats.len(),
                        grid.len()
                    )));
                }
                let l = resolve(name)?;
                for (i, mat) in mats.iter().enumerate() {
                    if mat.nrows() != expected_dim || mat.ncols() != expected_dim {
                        return Err(ObstructionError::Dimension(format!(
                            "segment {label}: sample is {}x{}, expected {expected_dim}",
                            mat.nrows(),
                            mat.ncols()
                        )));
                    }
                    frames[i].insert(l, mat.clone());
                }
            }
            Ok(RealizedSegment {
                label: label.clone(),
                lipschitz: *lipschitz,
                grid: grid.clone(),
                frames,
            })
        }
    }
}

/// Extracts the per-point block of a realized image for pointwise-diagonal
/// representations: `B_p[i][j] = img[i d + p, j d + p]`.
fn point_block(img: &CMatrix, m: usize, d: usize, p: usize) -> CMatrix {
    CMatrix::from_fn(m, m, |i, j| img[(i * d + p, j * d + p)])
}

/// Verifies a certificate against a presentation in the given
/// representations. Every claim is checked from the data: relation defects
/// at every sample, declared Lipschitz bounds, junction matching, the
/// diagonal-embedding start, the declared target end, and (on request) the
/// determinant winding of a tracked unitary generator.
pub fn certificate_verify(
    cert: &Certificate,
    pres: &Presentation,
    reps: &[&Representation],
    opts: &CertOptions,
) -> Result<CertReport, ObstructionError> {
    if cert.segments.is_empty() {
        return Err(ObstructionError::BadCertificate("no segments".into()));
    }
    let mut report = CertReport {
        certificate: cert.label.clone(),
        target: cert.target,
        reps: Vec::new(),
        failures: Vec::new(),
    };
    for rep in reps {
        let verdict = verify_in_rep(cert, pres, rep, opts)?;
        report.reps.push(verdict);
    }
    Ok(report)
}

fn verify_in_rep(
    cert: &Certificate,
    pres: &Presentation,
    rep: &Representation,
    opts: &CertOptions,
) -> Result<RepVerdict, ObstructionError> {
    let m = cert.m;
    let d = rep.dim();
    let dim = m * d;
    let mut verdict = RepVerdict {
        rep: rep.label().to_string(),
        segments: Vec::new(),
        max_junction_mismatch: 0.0,
        start_residual: 0.0,
        end_residual: 0.0,
        winding: None,
        failures: Vec::new(),
    };
    let mut realized = Vec::new();
    for seg in &cert.segments {
        realized.push(realize_segment(seg, pres, rep, m, opts)?);
    }

    let generators = pres.alphabet().generators();

    // Per-segment pointwise checks.
    for seg in &realized {
        let mut max_rel = 0.0f64;
        let mut max_star = 0.0f64;
        let mut max_excess = f64::NEG_INFINITY;
        let slack = 1e-9 * (1.0 + seg.lipschitz);
        for (i, frame) in seg.frames.iter().enumerate() {
            for rule in pres.rules() {
                let lhs = NCPoly::word(pres.alphabet(), rule.lhs.clone());
                let defect = eval_assignment(pres, frame, &lhs, dim)?
                    - eval_assignment(pres, frame, &rule.rhs, dim)?;
                max_rel = max_rel.max(opnorm(&defect));
            }
            for &g in &generators {
                if pres.alphabet().is_self_adjoint(g) {
                    if let Some(img) = frame.get(&g) {
                        max_star = max_star.max(distance(&img.adjoint(), img));
                    }
                }
            }
            if i + 1 < seg.frames.len() {
                let dt = seg.grid[i + 1] - seg.grid[i];
                for &g in &generators {
                    if let (Some(a), Some(b)) = (seg.frames[i + 1].get(&g), frame.get(&g)) {
                        let step = distance(a, b);
                        max_excess = max_excess.max(step - (seg.lipschitz * dt + slack));
                    }
                }
            }
        }
        let lipschitz_ok = max_excess <= 0.0;
        if max_rel > opts.tol_relation {
            verdict.failures.push(format!(
                "segment {}: relation defect {max_rel:.3e} exceeds {:.1e}",
                seg.label, opts.tol_relation
            ));
        }
        if max_star > opts.tol_relation {
            verdict.failures.push(format!(
                "segment {}: self-adjointness defect {max_star:.3e}",
                seg.label
            ));
        }
        if !lipschitz_ok {
            verdict.failures.push(format!(
                "segment {}: declared Lipschitz bound violated by {max_excess:.3e}",
                seg.label
            ));
        }
        verdict.segments.push(SegmentVerdict {
            label: seg.label.clone(),
            max_relation_defect: max_rel,
            max_star_defect: max_star,
            lipschitz_ok,
            max_step_excess: max_excess,
        });
    }

    // Junctions.
    for w in realized.windows(2) {
        let end = w[0].frames.last().unwrap();
        let start = w[1].frames.first().unwrap();
        for &g in &generators {
            if let (Some(a), Some(b)) = (end.get(&g), start.get(&g)) {
                let mismatch = distance(a, b);
                verdict.max_junction_mismatch = verdict.max_junction_mismatch.max(mismatch);
                if mismatch > opts.tol_endpoint {
                    verdict.failures.push(format!(
                        "junction {} -> {}: mismatch {mismatch:.3e} on {}",
                        w[0].label,
                        w[1].label,
                        pres.alphabet().name(g)
                    ));
                }
            }
        }
    }

    // Chain start: the diagonal embedding a -> a (x) 1_m.
    let first = realized.first().unwrap().frames.first().unwrap();
    for &g in &generators {
        if let Some(img) = first.get(&g) {
            let target = kron(
                &CMatrix::identity(m, m),
                &rep.eval(&NCPoly::letter(pres.alphabet(), g), 0.0),
            );
            let residual = distance(img, &target);
            verdict.start_residual = verdict.start_residual.max(residual);
            if residual > opts.tol_endpoint {
                verdict.failures.push(format!(
                    "chain start is not the diagonal embedding on {} (residual {residual:.3e})",
                    pres.alphabet().name(g)
                ));
            }
        }
    }

    // Chain end: the declared target.
    let last = realized.last().unwrap().frames.last().unwrap();
    match cert.target {
        Target::StronglyContractibleModK => {
            for &g in &generators {
                if let Some(img) = last.get(&g) {
                    let c = img.trace() / Complex64::new(dim as f64, 0.0);
                    let residual = distance(img, &CMatrix::identity(dim, dim).map(|x| x * c));
                    verdict.end_residual = verdict.end_residual.max(residual);
                    if residual > opts.tol_endpoint {
                        verdict.failures.push(format!(
                            "chain end is not one-dimensional on {} (residual {residual:.3e})",
                            pres.alphabet().name(g)
                        ));
                    }
                }
            }
        }
        Target::ContractibleModK => {
            let mut scalar_images: BTreeMap<Letter, CMatrix> = BTreeMap::new();
            for &g in &generators {
                if let Some(img) = last.get(&g) {
                    // Best scalar-block approximation kron(M, I_d).
                    let mut small = CMatrix::zeros(m, m);
                    for i in 0..m {
                        for j in 0..m {
                            let mut tr = Complex64::new(0.0, 0.0);
                            for a in 0..d {
                                tr += img[(i * d + a, j * d + a)];
                            }
                            small[(i, j)] = tr / Complex64::new(d as f64, 0.0);
                        }
                    }
                    let residual = distance(img, &kron(&small, &CMatrix::identity(d, d)));
                    verdict.end_residual = verdict.end_residual.max(residual);
                    if residual > opts.tol_endpoint {
                        verdict.failures.push(format!(
                            "chain end is not an m-dimensional representation on {} (residual {residual:.3e})",
                            pres.alphabet().name(g)
                        ));
                    }
                    scalar_images.insert(g, small);
                }
            }
            // The scalar blocks must themselves satisfy the relations.
            if verdict.failures.is_empty() {
                for rule in pres.rules() {
                    let lhs = NCPoly::word(pres.alphabet(), rule.lhs.clone());
                    let defect = eval_assignment(pres, &scalar_images, &lhs, m)?
                        - eval_assignment(pres, &scalar_images, &rule.rhs, m)?;
                    let r = opnorm(&defect);
                    if r > opts.tol_relation {
                        verdict.failures.push(format!(
                            "end representation violates `{}` (residual {r:.3e})",
                            rule.lhs.display(pres.alphabet())
                        ));
                    }
                }
            }
        }
    }

    // Winding trace for pointwise-diagonal representations.
    if let (Some(gen_name), Some(points)) = (&opts.track_winding, rep.diagonal_points()) {
        let l = pres
            .alphabet()
            .letter(gen_name)
            .map_err(|e| ObstructionError::BadCertificate(e.to_string()))?;
        let n_points = points.len();
        let mut sequence: Vec<(String, usize, i64)> = Vec::new();
        for seg in &realized {
            for (i, frame) in seg.frames.iter().enumerate() {
                if let Some(img) = frame.get(&l) {
                    let blocks: Vec<CMatrix> =
                        (0..n_points).map(|p| point_block(img, m, d, p)).collect();
                    match winding_number(&blocks) {
                        Ok(w) => sequence.push((seg.label.clone(), i, w)),
                        Err(e) => {
                            verdict
                                .failures
                                .push(format!("winding undefined in {}: {e}", seg.label));
                        }
                    }
                }
            }
        }
        if let (Some(first), Some(last)) = (sequence.first(), sequence.last()) {
            let mut jump = None;
            for w in sequence.windows(2) {
                if w[0].2 != w[1].2 {
                    jump = Some(WindingJump {
                        segment: w[1].0.clone(),
                        after_sample: w[0].1,
                        from: w[0].2,
                        to: w[1].2,
                    });
                    break;
                }
            }
            if let Some(j) = &jump {
                verdict.failures.push(format!(
                    "winding number jumps from {} to {} entering {} after sample {}: \
                     no continuous chain can connect endpoints with different winding",
                    j.from, j.to, j.segment, j.after_sample
                ));
            }
            verdict.winding = Some(WindingTrace {
                start: first.2,
                end: last.2,
                jump,
            });
        }
    }

    Ok(verdict)
}
