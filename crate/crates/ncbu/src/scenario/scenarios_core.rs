//! Registered scenarios for the equivariant-map constructions: the circle
//! with the conjugation twist, the free sphere with the antipodal twist, the
//! rotation family, induced join morphisms, and the saturation demos.

use std::sync::Arc;

use crate::action::CyclicAction;
use crate::crossed::{combined_dual_action, CrossedPresentation};
use crate::error::ScenarioError;
use crate::hom::{self, GenHom};
use crate::join;
use crate::numeric::clock_matrix;
use crate::numeric::{self, unitarity_residual};
use crate::obstruction::{
    function_algebra_with_permutation, matrix_algebra_with_conjugation, saturation_check,
};
use crate::poly::{builtins, NCPoly};
use crate::scenario::report::{standing_notes, Config, Expect, Report, Runner};
use crate::tolerance;

/// Circle with the conjugation twist: the order-two unitary path
/// `f = t z + i s mu` is a boundary-respecting unitary negated by the
/// combined action, giving an equivariant map out of the circle; the twist
/// equivariance fails, and is expected to.
pub fn thm_3_1(cfg: &Config) -> Result<Report, ScenarioError> {
    let mut r = Runner::new("thm_3_1", cfg, 11);
    r.set_k(2);
    for n in standing_notes() {
        r.note(n);
    }
    let circle = Arc::new(builtins::circle());
    let conj = CyclicAction::conjugation(&circle)?;
    let anti = CyclicAction::antipodal(&circle);
    let cp = Arc::new(CrossedPresentation::new(
        Arc::clone(&circle),
        conj.clone(),
        2,
    )?);

    let base_rep = numeric::circle_roots(&circle, 8)?;
    let crossed_rep = numeric::crossed_expand(&cp, &base_rep)?;
    r.bind_oracle(vec![crossed_rep.clone()]);

    let one = NCPoly::one(cp.full().alphabet());
    let (a, b) = join::circle_pair(&cp);
    let f = join::circle_conjugation_unitary(&cp);

    let sum_sq = a.mul(&a).add(&b.mul(&b)).body().sub(&one);
    r.check_zero("a_t^2 + b_t^2 - 1 = 0", cp.full(), &sum_sq, Expect::Pass);
    let f_decomp = f.body().sub(&a.body().add(&b.body().scale(
        &crate::scalar::PathScalar::from_cyclotomic(crate::scalar::Cyclotomic::i()),
    )));
    r.check_zero("f = a_t + i b_t", cp.full(), &f_decomp, Expect::Pass);
    r.check_zero(
        "f f* - 1 = 0",
        cp.full(),
        &f.mul(&f.star()).body().sub(&one),
        Expect::Pass,
    );
    r.check_zero(
        "f* f - 1 = 0",
        cp.full(),
        &f.star().mul(&f).body().sub(&one),
        Expect::Pass,
    );

    let af = join::tilde_action_apply(&f, &anti, 1)?;
    r.check_zero(
        "combined action negates f",
        cp.full(),
        &af.body().add(f.body()),
        Expect::Pass,
    );

    let verdict = f.boundary_check()?;
    r.check_bool(
        "boundary: f(0) in the group algebra, f(1) in the base",
        Expect::Pass,
        verdict.passed(),
        "endpoint normal forms computed by exact substitution",
        verdict.witness(),
    );

    let mut phi = GenHom::new("phi", &circle, cp.full(), &[("z", f.body().clone())])?;
    let hom_report = phi.validate()?;
    r.check_bool(
        "phi(z) = f is a unital *-homomorphism",
        Expect::Pass,
        hom_report.valid(),
        "all circle relations map to zero",
        hom_report.first_defect(),
    );

    let combined = combined_dual_action(&cp, &anti)?;
    let eq = phi.equivariance_check(&anti, &combined)?;
    r.check_bool(
        "(antipodal, combined) equivariance",
        Expect::Pass,
        eq.pass(),
        "phi intertwines the free action with the combined action",
        eq.first_defect(),
    );

    // The twist equivariance must fail; the defect is the evidence that the
    // double-equivariance obstruction does not apply to this map.
    let beta_ext = cp.beta_extended();
    let eq2 = phi.equivariance_check(&conj, &beta_ext)?;
    r.check_bool(
        "(conjugation, conjugation) equivariance",
        Expect::Fail,
        eq2.pass(),
        "expected failure: phi does not intertwine the twist",
        eq2.first_defect(),
    );

    // Numeric unitarity of f along the grid.
    let mut worst = 0.0f64;
    for t in r.grid() {
        let m = crossed_rep.eval(f.body(), t);
        worst = worst.max(unitarity_residual(&m));
    }
    r.check_residual(
        "numeric unitarity of f along the grid",
        worst,
        tolerance::DERIVED,
        Expect::Pass,
    );

    Ok(r.finish())
}

/// Free sphere with the antipodal twist: the pair
/// `a_t = t x + (s/sqrt 2) mu`, `b_t = t y + (s/sqrt 2) mu` solves the sphere
/// relation, is negated by the combined action, and defines an equivariant
/// map even though the twist is connected to the identity.
pub fn thm_3_2(cfg: &Config) -> Result<Report, ScenarioError> {
    let mut r = Runner::new("thm_3_2", cfg, 11);
    r.set_k(2);
    for n in standing_notes() {
        r.note(n);
    }
    r.note("the 1/sqrt(2) coefficient is exact: (zeta_8 + zeta_8^-1)/2".to_string());
    let sphere = Arc::new(builtins::free_sphere());
    let anti = CyclicAction::antipodal(&sphere);
    let cp = Arc::new(CrossedPresentation::new(
        Arc::clone(&sphere),
        anti.clone(),
        2,
    )?);

    // Five seeded random 2-dimensional representations, expanded.
    let mut reps = Vec::new();
    for i in 0..5u64 {
        let theta0 = 0.3 + 0.25 * i as f64;
        let base = numeric::free_sphere_random(&sphere, cfg.seed.wrapping_add(i), theta0)?;
        reps.push(numeric::crossed_expand(&cp, &base)?);
    }
    r.bind_oracle(reps.clone());

    let one = NCPoly::one(cp.full().alphabet());
    let (a, b) = join::free_sphere_pair(&cp);
    r.check_zero(
        "a_t^2 + b_t^2 - 1 = 0",
        cp.full(),
        &a.mul(&a).add(&b.mul(&b)).body().sub(&one),
        Expect::Pass,
    );
    r.check_zero(
        "a_t is self-adjoint",
        cp.full(),
        &a.star().body().sub(a.body()),
        Expect::Pass,
    );
    r.check_zero(
        "b_t is self-adjoint",
        cp.full(),
        &b.star().body().sub(b.body()),
        Expect::Pass,
    );

    for (name, e) in [("a_t", &a), ("b_t", &b)] {
        let img = join::tilde_action_apply(e, &anti, 1)?;
        r.check_zero(
            &format!("combined action negates {name}"),
            cp.full(),
            &img.body().add(e.body()),
            Expect::Pass,
        );
        let verdict = e.boundary_check()?;
        r.check_bool(
            &format!("boundary conditions for {name}"),
            Expect::Pass,
            verdict.passed(),
            "",
            verdict.witness(),
        );
    }

    let mut phi = GenHom::new(
        "phi",
        &sphere,
        cp.full(),
        &[("x", a.body().clone()), ("y", b.body().clone())],
    )?;
    let hom_report = phi.validate()?;
    r.check_bool(
        "phi(x) = a_t, phi(y) = b_t is a unital *-homomorphism",
        Expect::Pass,
        hom_report.valid(),
        "sphere relation maps to zero",
        hom_report.first_defect(),
    );

    let combined = combined_dual_action(&cp, &anti)?;
    let eq = phi.equivariance_check(&anti, &combined)?;
    r.check_bool(
        "(antipodal, combined) equivariance",
        Expect::Pass,
        eq.pass(),
        "",
        eq.first_defect(),
    );

    let beta_ext = cp.beta_extended();
    let eq2 = phi.equivariance_check(&anti, &beta_ext)?;
    r.check_bool(
        "(twist, twist) equivariance",
        Expect::Fail,
        eq2.pass(),
        "expected failure: the double-equivariance hypothesis is violated",
        eq2.first_defect(),
    );

    // ev_{t=1} . phi is the inclusion into the crossed product.
    let ev1 = hom::ev_t1(&cp);
    let composed = GenHom::compose(&ev1, &phi)?;
    let x = NCPoly::gen(cp.full().alphabet(), "x");
    let x_dom = NCPoly::gen(sphere.alphabet(), "x");
    let img = composed.apply(&x_dom)?;
    r.check_zero(
        "evaluation at t = 1 recovers the inclusion",
        cp.full(),
        &img.sub(&x),
        Expect::Pass,
    );

    // Numeric self-adjoint unitarity: a_t^2 + b_t^2 at grid points in all reps.
    let defect_poly = a.mul(&a).add(&b.mul(&b)).body().sub(&one);
    let mut worst = 0.0f64;
    for rep in &reps {
        for t in r.grid() {
            worst = worst.max(numeric::opnorm(&rep.eval(&defect_poly, t)));
        }
    }
    r.check_residual(
        "numeric sphere relation across seeded representations",
        worst,
        tolerance::DERIVED,
        Expect::Pass,
    );

    Ok(r.finish())
}

/// The rotation family `R_{(s,t)}` on the free sphere: a validated
/// one-parameter family of automorphisms with exact inverse, whose value at
/// `(-1, 0)` is the antipodal map.
pub fn rotation_family(cfg: &Config) -> Result<Report, ScenarioError> {
    let mut r = Runner::new("rotation_family", cfg, 11);
    for n in standing_notes() {
        r.note(n);
    }
    let sphere = Arc::new(builtins::free_sphere());
    let rep = numeric::free_sphere_random(&sphere, cfg.seed, 0.85)?;
    r.bind_oracle(vec![rep]);

    let rot = match hom::rotation_family(&sphere) {
        Ok(h) => h,
        Err(e) => {
            r.check_error("rotation family validates", Expect::Pass, e);
            return Ok(r.finish());
        }
    };
    r.check_bool(
        "R(s,t) validates as an endomorphism with s^2 + t^2 = 1",
        Expect::Pass,
        true,
        "images (s x + t y, -t x + s y) preserve the sphere relation",
        None,
    );
    //04The relation defect itself, symbolically (and through the oracle).
    let x = NCPoly::gen(sphere.alphabet(), "x");
    let y = NCPoly::gen(sphere.alphabet(), "y");
    let img_x = rot.apply(&x)?;
    let img_y = rot.apply(&y)?;
    let defect = img_x
        .mul(&img_x)
        .add(&img_y.mul(&img_y))
        .sub(&NCPoly::one(sphere.alphabet()));
    r.check_zero(
        "R(s,t) image sphere relation",
        &sphere,
        &defect,
        Expect::Pass,
    );

    let inv = hom::rotation_family_inverse(&sphere)?;
    let id = GenHom::identity(&sphere);
    let both = GenHom::compose(&inv, &rot)?;
    r.check_bool(
        "R(s,-t) . R(s,t) = id exactly",
        Expect::Pass,
        both.agrees_with(&id)?,
        "generator images reduce to the letters themselves",
        None,
    );

    let anti_hom = hom::rotation_at(
        &sphere,
        &crate::scalar::Cyclotomic::from_integer(-1),
        &crate::scalar::Cyclotomic::zero(),
    )?;
    let x_l = sphere.alphabet().letter("x").unwrap();
    let y_l = sphere.alphabet().letter("y").unwrap();
    let antipodal_exact = anti_hom.image(x_l) == &x.neg() && anti_hom.image(y_l) == &y.neg();
    r.check_bool(
        "R(-1,0) equals the antipodal generator exactly",
        Expect::Pass,
        antipodal_exact,
        "substitution (t, s) -> (0, -1) is exact",
        None,
    );

    // Doubling the family reaches the antipodal map at t = 1:
    // R(s,t) . R(s,t) = R(s^2 - t^2, 2 s t).
    let doubled = GenHom::compose(&rot, &rot)?;
    let at_one = doubled
        .image(x_l)
        .subst_scalars(
            &crate::scalar::Cyclotomic::one(),
            &crate::scalar::Cyclotomic::zero(),
        )
        .map_err(crate::error::PolyError::from)?;
    r.check_zero(
        "doubled rotation reaches the antipodal map at t = 1",
        &sphere,
        &at_one.add(&x),
        Expect::Pass,
    );

    Ok(r.finish())
}

/// Induced morphisms of twisted joins: the quotient from the free sphere onto
/// the circle is twist-equivariant for the antipodal actions, so it extends
/// to the crossed products with the group unitary fixed, and the extension
/// intertwines the combined actions. A non-equivariant candidate is rejected
/// with its defect.
pub fn lemma_2_1_induction(cfg: &Config) -> Result<Report, ScenarioError> {
    let mut r = Runner::new("lemma_2_1_induction", cfg, 11);
    r.set_k(2);
    for n in standing_notes() {
        r.note(n);
    }
    let sphere = Arc::new(builtins::free_sphere());
    let circle = Arc::new(builtins::circle());
    let cp_s = Arc::new(CrossedPresentation::new(
        Arc::clone(&sphere),
        CyclicAction::antipodal(&sphere),
        2,
    )?);
    let cp_c = Arc::new(CrossedPresentation::new(
        Arc::clone(&circle),
        CyclicAction::antipodal(&circle),
        2,
    )?);

    let base_rep = numeric::circle_roots(&circle, 8)?;
    let crossed_rep = numeric::crossed_expand(&cp_c, &base_rep)?;
    r.bind_oracle(vec![crossed_rep]);

    let phi = hom::sphere_to_circle(&sphere, &circle)?;
    r.check_bool(
        "quotient sphere -> circle validates",
        Expect::Pass,
        true,
        "x -> (z + z*)/2, y -> (z - z*)/(2i)",
        None,
    );

    let eq = phi.equivariance_check(
        &CyclicAction::antipodal(&sphere),
        &CyclicAction::antipodal(&circle),
    )?;
    r.check_bool(
        "quotient is twist-equivariant",
        Expect::Pass,
        eq.pass(),
        "",
        eq.first_defect(),
    );

    let psi = match join::induce_join_hom(&phi, &cp_s, &cp_c) {
        Ok(psi) => psi,
        Err(e) => {
            r.check_error("induced crossed-product morphism", Expect::Pass, e);
            return Ok(r.finish());
        }
    };
    r.check_bool(
        "induced crossed-product morphism validates",
        Expect::Pass,
        true,
        "psi(a) = phi(a), psi(mu) = mu",
        None,
    );

    // Defects of the crossed relations map to zero exactly; spot-check one.
    let mu_s = cp_s.mu_poly();
    let x = NCPoly::gen(cp_s.full().alphabet(), "x");
    let img = psi.apply(&mu_s.mul(&x).add(&x.mul(&mu_s)))?;
    r.check_zero(
        "psi maps the twist commutation defect to zero",
        cp_c.full(),
        &img,
        Expect::Pass,
    );

    let combined_s = combined_dual_action(&cp_s, &CyclicAction::antipodal(&sphere))?;
    let combined_c = combined_dual_action(&cp_c, &CyclicAction::antipodal(&circle))?;
    let eq2 = psi.equivariance_check(&combined_s, &combined_c)?;
    r.check_bool(
        "induced morphism intertwines the combined actions",
        Expect::Pass,
        eq2.pass(),
        "",
        eq2.first_defect(),
    );

    // Composition: inducing the composite equals composing the inductions.
    let id = GenHom::identity(&sphere);
    let psi_id = join::induce_join_hom(&id, &cp_s, &cp_s)?;
    let both = GenHom::compose(&psi, &psi_id)?;
    let direct = join::induce_join_hom(&GenHom::compose(&phi, &id)?, &cp_s, &cp_c)?;
    r.check_bool(
        "induction commutes with composition",
        Expect::Pass,
        both.agrees_with(&direct)?,
        "J[phi . id] = J[phi] . J[id] on generators",
        None,
    );

    // Depth-2 iteration: the join of the join, with the twist extended.
    let cp_s2 = Arc::new(CrossedPresentation::new(
        Arc::clone(cp_s.full()),
        cp_s.beta_extended(),
        2,
    )?);
    let cp_c2 = Arc::new(CrossedPresentation::new(
        Arc::clone(cp_c.full()),
        cp_c.beta_extended(),
        2,
    )?);
    match join::induce_join_hom(&psi, &cp_s2, &cp_c2) {
        Ok(_) => r.check_bool(
            "induction iterates to the second join",
            Expect::Pass,
            true,
            "the induced morphism is itself twist-equivariant",
            None,
        ),
        Err(e) => r.check_error("induction iterates to the second join", Expect::Pass, e),
    }

    // A candidate that is not twist-intertwining must be rejected.
    let id_c = GenHom::identity(&circle);
    let cp_conj = Arc::new(CrossedPresentation::new(
        Arc::clone(&circle),
        CyclicAction::conjugation(&circle)?,
        2,
    )?);
    match join::induce_join_hom(&id_c, &cp_conj, &cp_c) {
        Ok(_) => r.check_bool(
            "non-equivariant candidate is rejected",
            Expect::Fail,
            true,
            "unexpected acceptance",
            None,
        ),
        Err(e) => r.check_bool(
            "non-equivariant candidate is rejected",
            Expect::Fail,
            false,
            "rejection carries the defect polynomial",
            Some(e.to_string()),
        ),
    }

    Ok(r.finish())
}

/// Saturation demos: conjugation by the clock on a matrix algebra is free,
/// the trivial action on two points is not, and the cyclic shift on four
/// points is.
pub fn saturation_demos(cfg: &Config) -> Result<Report, ScenarioError> {
    let mut r = Runner::new("saturation_demos", cfg, 11);
    r.note(
        "freeness is certified by the saturation criterion on every character subspace".to_string(),
    );

    let m2 = matrix_algebra_with_conjugation(2, &clock_matrix(2), 2)?;
    let rep1 = saturation_check(&m2)?;
    r.check_bool(
        "conjugation by diag(1,-1) on the 2x2 matrix algebra is free",
        Expect::Pass,
        rep1.free(),
        format!(
            "isotypic dims {:?}",
            rep1.per_gamma
                .iter()
                .map(|g| g.isotypic_dim)
                .collect::<Vec<_>>()
        ),
        None,
    );

    let c2 = function_algebra_with_permutation(2, &[0, 1], 2, "C(2 points), trivial")?;
    let rep2 = saturation_check(&c2)?;
    r.check_bool(
        "trivial action on two points is free",
        Expect::Fail,
        rep2.free(),
        "expected failure: the nontrivial character subspace is empty",
        Some(format!(
            "gamma = 1 isotypic dimension {}",
            rep2.per_gamma[1].isotypic_dim
        )),
    );

    let c4 = function_algebra_with_permutation(4, &[1, 2, 3, 0], 4, "C(Z_4), shift")?;
    let rep3 = saturation_check(&c4)?;
    r.check_bool(
        "cyclic shift on four points is free",
        Expect::Pass,
        rep3.free(),
        "every character function is an invertible isotypic element",
        None,
    );

    Ok(r.finish())
}
