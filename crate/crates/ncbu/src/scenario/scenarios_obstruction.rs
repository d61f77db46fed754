//! Registered scenarios for the obstruction detectors: the shift projection
//! pipeline, the clopen-decomposition picture, matrix-algebra
//! contractibility, the circle winding obstruction, and the strong
//! contractibility certificate of the free sphere.

use std::sync::Arc;

use num::complex::Complex64;

use crate::action::CyclicAction;
use crate::crossed::{CrossedPresentation, MatrixOverAlg};
use crate::error::ScenarioError;
use crate::numeric::{self, clock_matrix, identity, kron, shift_matrix, CMatrix, Representation};
use crate::obstruction::{
    certificate_verify, function_algebra_with_permutation, isotypic_residual,
    matrix_algebra_with_conjugation, order_k_obstruction, projection_rank_path, saturation_check,
    winding_number, CertOptions, Certificate, PathSample, SampleKind, Segment, Target,
};
use crate::poly::{builtins, NCPoly};
use crate::scalar::{inv_sqrt2, Cyclotomic, PathScalar};
use crate::scenario::report::{standing_notes, Config, Expect, Report, Runner};
use crate::tolerance;

fn scenario_k(cfg: &Config, default: u32, max: u32) -> u32 {
    cfg.k.unwrap_or(default).clamp(2, max)
}

/// The averaged-shift projection `T = (1/k) sum S^n` has rank one, while a
/// diagonal block of projections has rank divisible by k; a fabricated
/// connecting path is caught by rank tracking, and the full pipeline reports
/// the contradiction.
pub fn prop_2_5_shift(cfg: &Config) -> Result<Report, ScenarioError> {
    let k = scenario_k(cfg, 3, 8);
    let mut r = Runner::new("prop_2_5_shift", cfg, 11);
    r.set_k(k);
    for n in standing_notes() {
        r.note(n);
    }
    r.note("the coinvariant quotient is modeled by twist-fixed representations".to_string());
    let ku = k as usize;

    // T = (1/k) sum_n S^n: the rank-one averaging projection.
    let s = shift_matrix(ku);
    let mut t_mat = CMatrix::zeros(ku, ku);
    let mut power = identity(ku);
    for _ in 0..ku {
        t_mat += &power;
        power = &power * &s;
    }
    t_mat /= Complex64::new(k as f64, 0.0);
    let t_path = PathSample::new(
        "constant T",
        SampleKind::Projection,
        vec![0.0, 1.0],
        vec![t_mat.clone(), t_mat.clone()],
        1.0,
    )?;
    let t_report = projection_rank_path(&t_path)?;
    r.check_bool(
        "T = (1/k) sum S^n has rank exactly 1",
        Expect::Pass,
        t_report.constant && t_report.endpoint_ranks.0 == 1,
        format!("ranks {:?}", t_report.ranks),
        None,
    );
    r.check_bool(
        "eigenvalue gap at the 1/2 threshold exceeds 0.4",
        Expect::Pass,
        t_report.min_gap > 0.4,
        format!("gap {:.3}", t_report.min_gap),
        None,
    );

    // diag(a, ..., a) for a rank-one projection a: rank divisible by k.
    let a_proj = CMatrix::from_fn(2, 2, |i, j| {
        if i == 0 && j == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let diag_block = kron(&identity(ku), &a_proj);
    let diag_path = PathSample::new(
        "constant diagonal block",
        SampleKind::Projection,
        vec![0.0, 1.0],
        vec![diag_block.clone(), diag_block],
        1.0,
    )?;
    let diag_report = projection_rank_path(&diag_path)?;
    r.check_bool(
        "diagonal endpoint rank is divisible by k",
        Expect::Pass,
        diag_report.endpoint_ranks.1 % ku == 0 && diag_report.endpoint_ranks.1 > 0,
        format!("rank {}", diag_report.endpoint_ranks.1),
        None,
    );

    // A synthetic rank jump is flagged by the constancy verdict.
    let jump_path = PathSample::new(
        "synthetic rank jump",
        SampleKind::Projection,
        vec![0.0, 0.5, 1.0],
        vec![
            t_mat.clone(),
            t_mat.clone(),
            identity(ku).map(|x| x * Complex64::new(1.0, 0.0)),
        ],
        1000.0,
    )?;
    let jump_report = projection_rank_path(&jump_path)?;
    r.check_bool(
        "synthetic rank-jump path keeps rank constant",
        Expect::Fail,
        jump_report.constant,
        "expected failure: rank jumps are incompatible with continuity",
        Some(format!("ranks {:?}", jump_report.ranks)),
    );

    // Full pipeline: the cyclic function algebra with the trivial twist; the
    // torsion unitary connects the group unitary to the constant character.
    let base = Arc::new(builtins::cyclic_group(k).map_err(ScenarioError::from)?);
    let beta = CyclicAction::trivial(&base, k);
    let cp = CrossedPresentation::new(Arc::clone(&base), beta, k)?;
    // One-dimensional twist-fixed representation: evaluation at a fixed point.
    let one_dim = Representation::new(
        "point evaluation",
        &base,
        vec![("mu", identity(1))],
        tolerance::ASSIGNED,
    )?;
    // Fabricated path: E(mu) for the first half, the identity afterwards.
    let e_mu = shift_matrix(ku);
    let grid: Vec<f64> = (0..6).map(|i| i as f64 / 5.0).collect();
    let values: Vec<CMatrix> = (0..6)
        .map(|i| if i < 3 { e_mu.clone() } else { identity(ku) })
        .collect();
    let u = PathSample::new(
        "claimed connecting path",
        SampleKind::Unitary,
        grid,
        values,
        1e6,
    )?;
    match order_k_obstruction(&u, &cp, &one_dim, tolerance::DERIVED) {
        Ok(report) => {
            r.check_bool(
                "pipeline finds endpoint ranks 1 vs divisible by k",
                Expect::Pass,
                report.contradiction,
                format!(
                    "ranks {:?}, scale c = {:.3}",
                    report.rank_report.ranks, report.scale
                ),
                None,
            );
            r.check_bool(
                "claimed path keeps rank constant",
                Expect::Fail,
                report.rank_report.constant,
                "expected failure: the obstruction certifies no continuous path exists",
                Some(format!("ranks {:?}", report.rank_report.ranks)),
            );
            r.check_residual(
                "base representation is twist-fixed",
                report.fixed_residual,
                tolerance::CONSTRUCTED,
                Expect::Pass,
            );
        }
        Err(e) => r.check_error(
            "pipeline finds endpoint ranks 1 vs divisible by k",
            Expect::Pass,
            e,
        ),
    }

    Ok(r.finish())
}

/// The clopen-decomposition picture: k translated copies of a three-point
/// block, the free translation action, and a twist fixing one fiber. The
/// torsion unitary is the character of the translation; restriction to the
/// twist-fixed fiber reproduces the shift pipeline.
pub fn cor_2_6_clopen(cfg: &Config) -> Result<Report, ScenarioError> {
    let k = scenario_k(cfg, 3, 8);
    let mut r = Runner::new("cor_2_6_clopen", cfg, 11);
    r.set_k(k);
    for n in standing_notes() {
        r.note(n);
    }
    let ku = k as usize;
    let n_points = 3 * ku;
    let point = |m: usize, eps: usize| m * 3 + eps;

    // alpha: translate the block index; beta: swap the two moving fibers.
    let alpha_perm: Vec<usize> = (0..n_points)
        .map(|p| point((p / 3 + 1) % ku, p % 3))
        .collect();
    let beta_perm: Vec<usize> = (0..n_points)
        .map(|p| match p % 3 {
            0 => p,
            1 => p + 1,
            _ => p - 1,
        })
        .collect();

    let alg = function_algebra_with_permutation(n_points, &alpha_perm, k, "C(k blocks of 3)")?;
    let sat = saturation_check(&alg)?;
    r.check_bool(
        "translation action on the clopen blocks is free",
        Expect::Pass,
        sat.free(),
        format!(
            "ideal dims {:?}",
            sat.per_gamma
                .iter()
                .map(|g| g.ideal_dim)
                .collect::<Vec<_>>()
        ),
        None,
    );

    let fixed_points = beta_perm
        .iter()
        .enumerate()
        .filter(|(p, q)| *p == **q)
        .count();
    r.check_bool(
        "twist has fixed points (coinvariant ideal is proper)",
        Expect::Pass,
        fixed_points > 0,
        format!("{fixed_points} fixed points"),
        None,
    );

    // The translation and the fiber swap commute.
    let commute = (0..n_points).all(|p| alpha_perm[beta_perm[p]] == beta_perm[alpha_perm[p]]);
    r.check_bool(
        "translation commutes with the twist",
        Expect::Pass,
        commute,
        "",
        None,
    );

    // f(m, eps) = omega^{-m}: an order-k unitary in the first character
    // space for the translation (functions pull back along the inverse).
    let omega =
        |m: usize| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * m as f64 / k as f64);
    let f_vec = numeric::CVector::from_fn(n_points, |p, _| omega(p / 3));
    r.check_residual(
        "character unitary lies in the first isotypic component",
        isotypic_residual(&alg, 1, &f_vec),
        tolerance::ASSIGNED,
        Expect::Pass,
    );
    let mut f_pow = alg.unit().clone();
    for _ in 0..k {
        f_pow = alg.mul(&f_pow, &f_vec);
    }
    r.check_residual(
        "character unitary has order k",
        (f_pow - alg.unit()).norm(),
        tolerance::ASSIGNED,
        Expect::Pass,
    );

    // Restriction to the fixed fiber is the cyclic picture; run the pipeline
    // there: the character restricts to the cyclic character.
    let base = Arc::new(builtins::cyclic_group(k).map_err(ScenarioError::from)?);
    let beta = CyclicAction::trivial(&base, k);
    let cp = CrossedPresentation::new(Arc::clone(&base), beta, k)?;
    let fixed_rep = Representation::new(
        "evaluation at a fixed point",
        &base,
        vec![("mu", identity(1))],
        tolerance::ASSIGNED,
    )?;
    let e_mu = shift_matrix(ku);
    let grid: Vec<f64> = (0..4).map(|i| i as f64 / 3.0).collect();
    let values: Vec<CMatrix> = (0..4)
        .map(|i| if i < 2 { e_mu.clone() } else { identity(ku) })
        .collect();
    let u = PathSample::new("restricted path", SampleKind::Unitary, grid, values, 1e6)?;
    match order_k_obstruction(&u, &cp, &fixed_rep, tolerance::DERIVED) {
        Ok(report) => r.check_bool(
            "restriction to the fixed fiber certifies the obstruction",
            Expect::Pass,
            report.contradiction,
            format!("ranks {:?}", report.rank_report.ranks),
            None,
        ),
        Err(e) => r.check_error(
            "restriction to the fixed fiber certifies the obstruction",
            Expect::Pass,
            e,
        ),
    }

    Ok(r.finish())
}

/// Matrix algebras: conjugation by the clock is free, the shift unitary
/// spans the first character space, and the swap rotation certificate
/// connects the diagonal embedding to a k-dimensional representation; no
/// one-dimensional endpoint exists.
pub fn exam_3_6_matrix(cfg: &Config) -> Result<Report, ScenarioError> {
    let k = scenario_k(cfg, 3, 5);
    let mut r = Runner::new("exam_3_6_matrix", cfg, 101);
    r.set_k(k);
    for n in standing_notes() {
        r.note(n);
    }
    let ku = k as usize;

    let alg = matrix_algebra_with_conjugation(ku, &clock_matrix(ku), k)?;
    let sat = saturation_check(&alg)?;
    r.check_bool(
        "conjugation by the clock matrix is free",
        Expect::Pass,
        sat.free(),
        format!(
            "unit residuals {:?}",
            sat.per_gamma
                .iter()
                .map(|g| format!("{:.1e}", g.unit_residual))
                .collect::<Vec<_>>()
        ),
        None,
    );

    // The shift unitary lies in the omega-isotypic component.
    let w = shift_matrix(ku);
    let mut w_vec = numeric::CVector::zeros(ku * ku);
    for i in 0..ku {
        for j in 0..ku {
            w_vec[i * ku + j] = w[(i, j)];
        }
    }
    r.check_residual(
        "shift unitary lies in the first isotypic component",
        isotypic_residual(&alg, 1, &w_vec),
        tolerance::ASSIGNED,
        Expect::Pass,
    );

    // Certificate: conjugation by exp(i t H) with H = pi P_- for the leg
    // swap, from the diagonal embedding to the scalar-block picture.
    let pres = Arc::new(builtins::clock_shift(k).map_err(ScenarioError::from)?);
    let rep = numeric::clock_shift_rep(&pres, k)?;
    let d = ku;
    let dim = ku * d;
    let swap = CMatrix::from_fn(dim, dim, |row, col| {
        let (i, a) = (row / d, row % d);
        let (j, b) = (col / d, col % d);
        if i == b && a == j {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let p_minus = (identity(dim) - &swap).map(|x| x * Complex64::new(0.5, 0.0));
    let grid = numeric::unit_grid(r.grid_points().max(21));
    let u_at = |t: f64| -> CMatrix {
        let phase = Complex64::from_polar(1.0, std::f64::consts::PI * t);
        identity(dim) + p_minus.map(|x| x * (phase - Complex64::new(1.0, 0.0)))
    };
    let mut images_v = Vec::with_capacity(grid.len());
    let mut images_w = Vec::with_capacity(grid.len());
    for &t in &grid {
        let u = u_at(t);
        let diag_v = kron(
            &identity(ku),
            &rep.letter_matrix(pres.alphabet().letter("v").unwrap()),
        );
        let diag_w = kron(
            &identity(ku),
            &rep.letter_matrix(pres.alphabet().letter("w").unwrap()),
        );
        images_v.push(&u * diag_v * u.adjoint());
        images_w.push(&u * diag_w * u.adjoint());
    }
    let segment = Segment::Sampled {
        label: "swap rotation".into(),
        lipschitz: 7.0,
        grid: grid.clone(),
        images: vec![("v".into(), images_v), ("w".into(), images_w)],
    };
    let cert = Certificate {
        label: format!("diagonal embedding to the second leg, k = {k}"),
        m: ku,
        target: Target::ContractibleModK,
        segments: vec![segment],
    };
    let opts = CertOptions::default();
    match certificate_verify(&cert, &pres, &[&rep], &opts) {
        Ok(report) => {
            r.check_bool(
                "certificate connects the diagonal embedding to a k-dimensional representation",
                Expect::Pass,
                report.pass(),
                "relations, continuity, endpoints, and the scalar-block target all verified",
                report.first_failure().map(str::to_string),
            );
        }
        Err(e) => r.check_error(
            "certificate connects the diagonal embedding to a k-dimensional representation",
            Expect::Pass,
            e,
        ),
    }

    // The same chain cannot end one-dimensionally: matrix algebras have no
    // characters.
    let cert_strong = Certificate {
        label: "one-dimensional endpoint candidate".into(),
        m: ku,
        target: Target::StronglyContractibleModK,
        segments: vec![Segment::Sampled {
            label: "swap rotation".into(),
            lipschitz: 7.0,
            grid: grid.clone(),
            images: vec![
                (
                    "v".into(),
                    grid.iter()
                        .map(|&t| {
                            let u = u_at(t);
                            &u * kron(
                                &identity(ku),
                                &rep.letter_matrix(pres.alphabet().letter("v").unwrap()),
                            ) * u.adjoint()
                        })
                        .collect(),
                ),
                (
                    "w".into(),
                    grid.iter()
                        .map(|&t| {
                            let u = u_at(t);
                            &u * kron(
                                &identity(ku),
                                &rep.letter_matrix(pres.alphabet().letter("w").unwrap()),
                            ) * u.adjoint()
                        })
                        .collect(),
                ),
            ],
        }],
    };
    match certificate_verify(&cert_strong, &pres, &[&rep], &opts) {
        Ok(report) => r.check_bool(
            "chain reaches a one-dimensional representation",
            Expect::Fail,
            report.pass(),
            "expected failure: matrix algebras admit no characters",
            report.first_failure().map(str::to_string),
        ),
        Err(e) => r.check_error(
            "chain reaches a one-dimensional representation",
            Expect::Fail,
            e,
        ),
    }

    Ok(r.finish())
}

/// The circle is not contractible modulo k: the determinant loop of the
/// diagonal embedding winds k times while any finite-dimensional
/// representation winds zero times, and winding cannot jump along a
/// continuous chain. Candidate certificates are rejected with the winding
/// witness.
pub fn exam_3_7_circle(cfg: &Config) -> Result<Report, ScenarioError> {
    let k = scenario_k(cfg, 2, 3);
    let mut r = Runner::new("exam_3_7_circle", cfg, 21);
    r.set_k(k);
    for n in standing_notes() {
        r.note(n);
    }
    r.note(
        "the winding obstruction used here is an elementary determinant invariant, \
         independent of any deeper classification machinery"
            .to_string(),
    );
    let ku = k as usize;
    let circle = Arc::new(builtins::circle());
    let n_points = 64;
    let rep = numeric::circle_roots(&circle, n_points)?;
    let points: Vec<Complex64> = rep.diagonal_points().unwrap().to_vec();

    // Winding of the diagonal embedding: det(z 1_k) = z^k.
    let diag_loop: Vec<CMatrix> = points
        .iter()
        .map(|&z| identity(ku).map(|x| x * z))
        .collect();
    match winding_number(&diag_loop) {
        Ok(wn) => r.check_bool(
            "diagonal embedding determinant loop winds k times",
            Expect::Pass,
            wn == k as i64,
            format!("winding {wn}"),
            None,
        ),
        Err(e) => r.check_error(
            "diagonal embedding determinant loop winds k times",
            Expect::Pass,
            e,
        ),
    }

    // Constant loops (finite-dimensional representations) wind zero times.
    let const_loop: Vec<CMatrix> = (0..n_points).map(|_| clock_matrix(ku)).collect();
    match winding_number(&const_loop) {
        Ok(wn) => r.check_bool(
            "k-dimensional representation loop winds zero times",
            Expect::Pass,
            wn == 0,
            format!("winding {wn}"),
            None,
        ),
        Err(e) => r.check_error(
            "k-dimensional representation loop winds zero times",
            Expect::Pass,
            e,
        ),
    }
    let scalar_loop: Vec<CMatrix> = (0..n_points).map(|_| identity(1)).collect();
    match winding_number(&scalar_loop) {
        Ok(wn) => r.check_bool(
            "one-dimensional representation loop winds zero times",
            Expect::Pass,
            wn == 0,
            format!("winding {wn}"),
            None,
        ),
        Err(e) => r.check_error(
            "one-dimensional representation loop winds zero times",
            Expect::Pass,
            e,
        ),
    }

    // Candidate certificates. Both satisfy relations pointwise; both are
    // rejected because the winding number jumps somewhere along the chain.
    let d = rep.dim();
    let diag_img = kron(
        &identity(ku),
        &rep.eval(&NCPoly::gen(circle.alphabet(), "z"), 0.0),
    );
    let target_img = kron(&clock_matrix(ku), &identity(d));
    let opts = CertOptions {
        track_winding: Some("z".into()),
        ..CertOptions::default()
    };

    // Candidate A: a single sampled segment that silently retargets halfway,
    // hiding the jump behind an enormous declared Lipschitz bound.
    let grid = numeric::unit_grid(21);
    let images: Vec<CMatrix> = grid
        .iter()
        .map(|&t| {
            if t < 0.5 {
                diag_img.clone()
            } else {
                target_img.clone()
            }
        })
        .collect();
    let cand_a = Certificate {
        label: "abrupt retarget".into(),
        m: ku,
        target: Target::ContractibleModK,
        segments: vec![Segment::Sampled {
            label: "abrupt retarget".into(),
            lipschitz: 1e6,
            grid: grid.clone(),
            images: vec![("z".into(), images)],
        }],
    };
    match certificate_verify(&cand_a, &circle, &[&rep], &opts) {
        Ok(report) => {
            let winding_witnessed = report
                .reps
                .iter()
                .flat_map(|v| v.failures.iter())
                .any(|f| f.contains("winding"));
            r.check_bool(
                "candidate (abrupt retarget) passes verification",
                Expect::Fail,
                report.pass(),
                "expected failure with the winding witness",
                report.first_failure().map(str::to_string),
            );
            r.check_bool(
                "rejection of the abrupt retarget carries the winding witness",
                Expect::Pass,
                winding_witnessed,
                "",
                None,
            );
        }
        Err(e) => r.check_error(
            "candidate (abrupt retarget) passes verification",
            Expect::Fail,
            e,
        ),
    }

    // Candidate B: two constant segments whose junction does not match.
    let seg_const = |label: &str, img: &CMatrix| Segment::Sampled {
        label: label.into(),
        lipschitz: 1.0,
        grid: vec![0.0, 1.0],
        images: vec![("z".into(), vec![img.clone(), img.clone()])],
    };
    let cand_b = Certificate {
        label: "mismatched junction".into(),
        m: ku,
        target: Target::ContractibleModK,
        segments: vec![
            seg_const("hold the diagonal", &diag_img),
            seg_const("hold the representation", &target_img),
        ],
    };
    match certificate_verify(&cand_b, &circle, &[&rep], &opts) {
        Ok(report) => {
            let winding_witnessed = report
                .reps
                .iter()
                .flat_map(|v| v.failures.iter())
                .any(|f| f.contains("winding"));
            r.check_bool(
                "candidate (mismatched junction) passes verification",
                Expect::Fail,
                report.pass(),
                "expected failure with junction and winding witnesses",
                report.first_failure().map(str::to_string),
            );
            r.check_bool(
                "rejection of the mismatched junction carries the winding witness",
                Expect::Pass,
                winding_witnessed,
                "",
                None,
            );
        }
        Err(e) => r.check_error(
            "candidate (mismatched junction) passes verification",
            Expect::Fail,
            e,
        ),
    }

    Ok(r.finish())
}

/// The free sphere is strongly contractible modulo 2: a three-segment
/// polynomial certificate glues the rotation doubling, the crossed-product
/// contraction, and the two-point merge into a chain from the diagonal
/// embedding to a one-dimensional representation.
pub fn exam_3_8_strong(cfg: &Config) -> Result<Report, ScenarioError> {
    let mut r = Runner::new("exam_3_8_strong", cfg, 101);
    r.set_k(2);
    for n in standing_notes() {
        r.note(n);
    }
    let sphere = Arc::new(builtins::free_sphere());
    let alphabet = sphere.alphabet();
    let x = NCPoly::gen(alphabet, "x");
    let y = NCPoly::gen(alphabet, "y");
    let zero = NCPoly::zero(alphabet);
    let one = NCPoly::one(alphabet);

    let t = PathScalar::t();
    let s = PathScalar::s();
    // Double-angle parameters: c = s^2 - t^2 = 1 - 2 t^2, sigma = 2 s t.
    let c = s.mul(&s).sub(&t.mul(&t));
    let sigma = s.mul(&t).scale(&Cyclotomic::from_integer(2));

    // Segment 1: a -> diag(a, R_double(a)) from the diagonal embedding to
    // diag(a, antipode(a)).
    let seg1_x = MatrixOverAlg::from_fn(2, |i, j| match (i, j) {
        (0, 0) => x.clone(),
        (1, 1) => x.scale(&c).add(&y.scale(&sigma)),
        _ => zero.clone(),
    });
    let seg1_y = MatrixOverAlg::from_fn(2, |i, j| match (i, j) {
        (0, 0) => y.clone(),
        (1, 1) => x.scale(&sigma).neg().add(&y.scale(&c)),
        _ => zero.clone(),
    });

    // Segment 2: the expanded crossed-product contraction
    // a -> E(s a + (t/sqrt 2) mu), running from diag(a, -a) to the group
    // algebra picture.
    let t_over_sqrt2 = t.scale(&inv_sqrt2());
    let seg2_x = MatrixOverAlg::from_fn(2, |i, j| match (i, j) {
        (0, 0) => x.scale(&s),
        (1, 1) => x.scale(&s).neg(),
        _ => one.scale(&t_over_sqrt2),
    });
    let seg2_y = MatrixOverAlg::from_fn(2, |i, j| match (i, j) {
        (0, 0) => y.scale(&s),
        (1, 1) => y.scale(&s).neg(),
        _ => one.scale(&t_over_sqrt2),
    });

    // Segment 3: inside the commutative corner spanned by the spectral
    // projections Q_+/- of the flip, merge the two evaluation points:
    // a -> value(p1) Q_+ + value(p2(t)) Q_-.
    let inv_s2 = PathScalar::from_cyclotomic(inv_sqrt2());
    let q_plus = |coeff: &PathScalar| {
        MatrixOverAlg::from_fn(2, |_, _| {
            one.scale(&coeff.scale_rational(&num::BigRational::new(1.into(), 2.into())))
        })
    };
    let q_minus = |coeff: &PathScalar| {
        MatrixOverAlg::from_fn(2, |i, j| {
            let sign = if i == j { 1 } else { -1 };
            one.scale(&coeff.scale_rational(&num::BigRational::new(sign.into(), 2.into())))
        })
    };
    // x image: (1/sqrt2) Q_+ - (1/sqrt2)(c - sigma) Q_-
    let seg3_x = q_plus(&inv_s2).add(&q_minus(&inv_s2.mul(&c.sub(&sigma)).neg()));
    // y image: (1/sqrt2) Q_+ - (1/sqrt2)(c + sigma) Q_-
    let seg3_y = q_plus(&inv_s2).add(&q_minus(&inv_s2.mul(&c.add(&sigma)).neg()));

    let segments = vec![
        Segment::Poly {
            label: "rotation doubling".into(),
            lipschitz: 40.0,
            images: vec![("x".into(), seg1_x.clone()), ("y".into(), seg1_y.clone())],
        },
        Segment::Poly {
            label: "crossed-product contraction".into(),
            lipschitz: 20.0,
            images: vec![("x".into(), seg2_x.clone()), ("y".into(), seg2_y.clone())],
        },
        Segment::Poly {
            label: "two-point merge".into(),
            lipschitz: 40.0,
            images: vec![("x".into(), seg3_x.clone()), ("y".into(), seg3_y.clone())],
        },
    ];

    // Symbolic exactness of each segment: images satisfy the sphere
    // relations as matrices of polynomials.
    for (label, img_x, img_y) in [
        ("rotation doubling", &seg1_x, &seg1_y),
        ("crossed-product contraction", &seg2_x, &seg2_y),
        ("two-point merge", &seg3_x, &seg3_y),
    ] {
        let idm = MatrixOverAlg::identity(alphabet, 2);
        let sphere_defect = img_x
            .mul(img_x)
            .add(&img_y.mul(img_y))
            .sub(&idm)
            .normal_form(&sphere)
            .map_err(ScenarioError::from)?;
        r.check_bool(
            &format!("segment ({label}) satisfies the sphere relation exactly"),
            Expect::Pass,
            sphere_defect.is_zero(),
            "matrix of normal forms is zero",
            None,
        );
        let star_defect_x = img_x
            .star()
            .sub(img_x)
            .normal_form(&sphere)
            .map_err(ScenarioError::from)?;
        let star_defect_y = img_y
            .star()
            .sub(img_y)
            .normal_form(&sphere)
            .map_err(ScenarioError::from)?;
        r.check_bool(
            &format!("segment ({label}) images are self-adjoint exactly"),
            Expect::Pass,
            star_defect_x.is_zero() && star_defect_y.is_zero(),
            "",
            None,
        );
    }

    let cert = Certificate {
        label: "strong contraction of the free sphere modulo 2".into(),
        m: 2,
        target: Target::StronglyContractibleModK,
        segments,
    };
    let mut reps = Vec::new();
    for i in 0..5u64 {
        let theta0 = 0.35 + 0.22 * i as f64;
        reps.push(numeric::free_sphere_random(
            &sphere,
            cfg.seed.wrapping_add(i),
            theta0,
        )?);
    }
    let rep_refs: Vec<&Representation> = reps.iter().collect();
    // The sampling schedule is part of the certificate: the declared
    // Lipschitz bounds are calibrated to the 101-point grid.
    let opts = CertOptions {
        grid_points: 101,
        tol_relation: 1e-8,
        tol_endpoint: 1e-9,
        track_winding: None,
    };
    match certificate_verify(&cert, &sphere, &rep_refs, &opts) {
        Ok(report) => {
            let max_end = report
                .reps
                .iter()
                .map(|v| v.end_residual)
                .fold(0.0f64, f64::max);
            let max_junction = report
                .reps
                .iter()
                .map(|v| v.max_junction_mismatch)
                .fold(0.0f64, f64::max);
            let max_rel = report
                .reps
                .iter()
                .flat_map(|v| v.segments.iter())
                .map(|s| s.max_relation_defect)
                .fold(0.0f64, f64::max);
            r.check_bool(
                "three-segment certificate verifies strong contractibility modulo 2",
                Expect::Pass,
                report.pass(),
                format!(
                    "max relation defect {max_rel:.2e}, junction mismatch {max_junction:.2e}, end residual {max_end:.2e}"
                ),
                report.first_failure().map(str::to_string),
            );
            r.check_residual(
                "endpoint mismatches across representations",
                max_junction.max(max_end),
                1e-9,
                Expect::Pass,
            );
            r.check_residual(
                "relation defects across the grid",
                max_rel,
                1e-8,
                Expect::Pass,
            );
        }
        Err(e) => r.check_error(
            "three-segment certificate verifies strong contractibility modulo 2",
            Expect::Pass,
            e,
        ),
    }

    Ok(r.finish())
}
