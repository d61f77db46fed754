//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with: cargo test -p ncbu --test acceptance -- --nocapture

use std::sync::Arc;
use std::time::Instant;

use ncbu::action::CyclicAction;
use ncbu::crossed::CrossedPresentation;
use ncbu::hom::{rotation_at, rotation_family, rotation_family_inverse, GenHom};
use ncbu::join;
use ncbu::numeric::{self, oracle_compare, unit_grid};
use ncbu::poly::sampling::{random_poly, SampleConfig};
use ncbu::poly::{builtins, NCPoly, Presentation};
use ncbu::scalar::Cyclotomic;
use ncbu::scenario::{run_scenario, Config, Expect, Outcome, Report};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn conclude(number: u32, description: &str, ok: bool) {
    println!(
        "ACCEPTANCE {number:02}: {} - {description}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {number} failed: {description}");
}

fn check_ok(report: &Report, name: &str) -> bool {
    report
        .checks
        .iter()
        .find(|c| c.name == name)
        .map(|c| c.ok)
        .unwrap_or(false)
}

#[test]
fn criterion_01_circle_conjugation_suite() {
    let started = Instant::now();
    let report = run_scenario("thm_3_1", &Config::default()).unwrap();
    let expected_checks = [
        "a_t^2 + b_t^2 - 1 = 0",
        "f f* - 1 = 0",
        "f* f - 1 = 0",
        "combined action negates f",
        "boundary: f(0) in the group algebra, f(1) in the base",
        "phi(z) = f is a unital *-homomorphism",
        "(antipodal, combined) equivariance",
    ];
    let mut ok = report.overall == Outcome::Pass;
    for name in expected_checks {
        ok &= check_ok(&report, name);
    }
    ok &= report.oracle_residual_max.unwrap_or(f64::INFINITY) <= 1e-9;
    ok &= started.elapsed().as_secs_f64() < 5.0;
    conclude(
        1,
        "circle/conjugation suite: exact identities, boundary, homomorphism, equivariance, oracle <= 1e-9, < 5 s",
        ok,
    );
}

#[test]
fn criterion_02_free_sphere_suite() {
    let report = run_scenario("thm_3_2", &Config::default()).unwrap();
    let mut ok = report.overall == Outcome::Pass;
    for name in [
        "a_t^2 + b_t^2 - 1 = 0",
        "a_t is self-adjoint",
        "b_t is self-adjoint",
        "combined action negates a_t",
        "combined action negates b_t",
        "phi(x) = a_t, phi(y) = b_t is a unital *-homomorphism",
        "(antipodal, combined) equivariance",
        "numeric sphere relation across seeded representations",
    ] {
        ok &= check_ok(&report, name);
    }
    ok &= report.oracle_residual_max.unwrap_or(f64::INFINITY) <= 1e-9;
    // The 1/sqrt(2) coefficient is the conductor-8 cyclotomic (z8 + z8^-1)/2.
    let c = ncbu::scalar::inv_sqrt2();
    ok &= c.conductor() == 8 && c.mul(&c) == Cyclotomic::rational(1, 2);
    conclude(
        2,
        "free-sphere suite: exact identities with conductor-8 scalars, oracle <= 1e-9 across 5 seeded representations",
        ok,
    );
}

#[test]
fn criterion_03_rotation_family() {
    let report = run_scenario("rotation_family", &Config::default()).unwrap();
    let mut ok = report.overall == Outcome::Pass;

    let sphere = Arc::new(builtins::free_sphere());
    let rot = rotation_family(&sphere).unwrap();
    let inv = rotation_family_inverse(&sphere).unwrap();
    let id = GenHom::identity(&sphere);
    ok &= GenHom::compose(&inv, &rot)
        .unwrap()
        .agrees_with(&id)
        .unwrap();
    let anti = rotation_at(&sphere, &Cyclotomic::from_integer(-1), &Cyclotomic::zero()).unwrap();
    let x = NCPoly::gen(sphere.alphabet(), "x");
    let y = NCPoly::gen(sphere.alphabet(), "y");
    let x_l = sphere.alphabet().letter("x").unwrap();
    let y_l = sphere.alphabet().letter("y").unwrap();
    ok &= anti.image(x_l) == &x.neg() && anti.image(y_l) == &y.neg();
    conclude(
        3,
        "rotation family validates with s^2 + t^2 = 1; inverse composes to the identity; R(-1,0) is the antipodal map",
        ok,
    );
}

#[test]
fn criterion_04_induced_join_morphism() {
    let report = run_scenario("lemma_2_1_induction", &Config::default()).unwrap();
    let mut ok = report.overall == Outcome::Pass;
    for name in [
        "quotient is twist-equivariant",
        "induced crossed-product morphism validates",
        "psi maps the twist commutation defect to zero",
        "induced morphism intertwines the combined actions",
    ] {
        ok &= check_ok(&report, name);
    }
    conclude(
        4,
        "induced join morphism for the sphere-to-circle quotient validates and intertwines the combined actions",
        ok,
    );
}

#[test]
fn criterion_05_shift_projection_pipeline() {
    let started = Instant::now();
    let mut ok = true;
    for k in 2..=8u32 {
        let cfg = Config {
            k: Some(k),
            ..Config::default()
        };
        let report = run_scenario("prop_2_5_shift", &cfg).unwrap();
        ok &= report.overall == Outcome::Pass;
        ok &= check_ok(&report, "T = (1/k) sum S^n has rank exactly 1");
        ok &= check_ok(&report, "eigenvalue gap at the 1/2 threshold exceeds 0.4");
        ok &= check_ok(&report, "diagonal endpoint rank is divisible by k");
        ok &= check_ok(&report, "synthetic rank-jump path keeps rank constant");
        ok &= check_ok(&report, "pipeline finds endpoint ranks 1 vs divisible by k");
    }
    let elapsed = started.elapsed().as_secs_f64();
    ok &= elapsed < 10.0;
    conclude(
        5,
        "shift pipeline for k = 2..8: rank 1 with gap > 0.4, divisible diagonal endpoint, synthetic jump rejected, < 10 s",
        ok,
    );
}

#[test]
fn criterion_06_matrix_algebra_contractibility() {
    let mut ok = true;
    for k in 2..=5u32 {
        let cfg = Config {
            k: Some(k),
            ..Config::default()
        };
        let report = run_scenario("exam_3_6_matrix", &cfg).unwrap();
        ok &= report.overall == Outcome::Pass;
        ok &= check_ok(&report, "conjugation by the clock matrix is free");
        let iso = report
            .checks
            .iter()
            .find(|c| c.name == "shift unitary lies in the first isotypic component")
            .unwrap();
        ok &= iso.ok && iso.residual.unwrap_or(f64::INFINITY) <= 1e-12;
        ok &= check_ok(
            &report,
            "certificate connects the diagonal embedding to a k-dimensional representation",
        );
    }
    conclude(
        6,
        "matrix algebras k = 2..5: free clock conjugation, shift in the first character space (<= 1e-12), certificate passes",
        ok,
    );
}

#[test]
fn criterion_07_circle_winding_obstruction() {
    let mut ok = true;
    for k in 2..=3u32 {
        let cfg = Config {
            k: Some(k),
            ..Config::default()
        };
        let report = run_scenario("exam_3_7_circle", &cfg).unwrap();
        ok &= report.overall == Outcome::Pass;
        ok &= check_ok(&report, "diagonal embedding determinant loop winds k times");
        ok &= check_ok(
            &report,
            "k-dimensional representation loop winds zero times",
        );
        ok &= check_ok(
            &report,
            "one-dimensional representation loop winds zero times",
        );
        ok &= check_ok(&report, "candidate (abrupt retarget) passes verification");
        ok &= check_ok(
            &report,
            "rejection of the abrupt retarget carries the winding witness",
        );
        ok &= check_ok(
            &report,
            "candidate (mismatched junction) passes verification",
        );
        ok &= check_ok(
            &report,
            "rejection of the mismatched junction carries the winding witness",
        );
    }
    conclude(
        7,
        "circle winding for k = 2,3: diagonal loop winds k, representations wind 0, every candidate rejected with the winding witness",
        ok,
    );
}

#[test]
fn criterion_08_strong_contractibility_certificate() {
    let report = run_scenario("exam_3_8_strong", &Config::default()).unwrap();
    let mut ok = report.overall == Outcome::Pass;
    ok &= check_ok(
        &report,
        "three-segment certificate verifies strong contractibility modulo 2",
    );
    let endpoints = report
        .checks
        .iter()
        .find(|c| c.name == "endpoint mismatches across representations")
        .unwrap();
    ok &= endpoints.ok && endpoints.residual.unwrap_or(f64::INFINITY) <= 1e-9;
    let relations = report
        .checks
        .iter()
        .find(|c| c.name == "relation defects across the grid")
        .unwrap();
    ok &= relations.ok && relations.residual.unwrap_or(f64::INFINITY) <= 1e-8;
    conclude(
        8,
        "three-segment certificate: relation defects <= 1e-8 at 101 grid points in 5 seeded representations, endpoints <= 1e-9, Lipschitz bounds respected",
        ok,
    );
}

struct EnginePack {
    pres: Arc<Presentation>,
    rep: numeric::Representation,
    cfg: SampleConfig,
}

fn engine_packs() -> Vec<EnginePack> {
    let circle = Arc::new(builtins::circle());
    let sphere = Arc::new(builtins::free_sphere());
    let phases = [((1usize, 2usize), Cyclotomic::from_integer(-1))];
    let theta = Arc::new(builtins::theta_sphere(2, &phases).unwrap());
    let cyclic = Arc::new(builtins::cyclic_group(3).unwrap());
    vec![
        EnginePack {
            rep: numeric::circle_roots(&circle, 8).unwrap(),
            pres: circle,
            cfg: SampleConfig::default(),
        },
        EnginePack {
            rep: numeric::free_sphere_random(&sphere, 11, 0.8).unwrap(),
            pres: sphere,
            cfg: SampleConfig::default(),
        },
        EnginePack {
            rep: numeric::theta_sphere_weyl(&theta, 2, &phases).unwrap(),
            pres: theta,
            cfg: SampleConfig {
                max_word_len: 5,
                ..SampleConfig::default()
            },
        },
        EnginePack {
            rep: numeric::cyclic_regular(&cyclic, 3).unwrap(),
            pres: cyclic,
            cfg: SampleConfig::default(),
        },
    ]
}

#[test]
fn criterion_09_engine_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(2718);
    let grid = unit_grid(11);
    let mut ok = true;
    let mut worst = 0.0f64;
    for pack in engine_packs() {
        for _ in 0..500 {
            let p = random_poly(&mut rng, pack.pres.alphabet(), &pack.cfg);
            let nf = pack.pres.normal_form(&p).unwrap();
            // Idempotence.
            ok &= pack.pres.normal_form(&nf).unwrap() == nf;
            // Star compatibility.
            let star_nf = pack.pres.normal_form(&p.star()).unwrap();
            ok &= pack.pres.normal_form(&nf.star()).unwrap() == star_nf;
            // Oracle agreement.
            let residual = oracle_compare(&pack.rep, &p, &pack.pres, &grid).unwrap();
            worst = worst.max(residual);
            ok &= residual <= 1e-9;
            if !ok {
                break;
            }
        }
    }
    println!("engine soundness worst oracle residual: {worst:.3e}");

    // Isotypic completeness and orthogonality on 200 random elements.
    let circle = Arc::new(builtins::circle());
    let conj = CyclicAction::conjugation(&circle).unwrap();
    let sphere = Arc::new(builtins::free_sphere());
    let anti = CyclicAction::antipodal(&sphere);
    let cfg = SampleConfig::default();
    for i in 0..200 {
        let (pres, action): (&Arc<Presentation>, &CyclicAction) = if i % 2 == 0 {
            (&circle, &conj)
        } else {
            (&sphere, &anti)
        };
        let p = random_poly(&mut rng, pres.alphabet(), &cfg);
        let p0 = action.isotypic_project(0, &p, pres).unwrap();
        let p1 = action.isotypic_project(1, &p, pres).unwrap();
        // Completeness.
        let sum = p0.add(&p1);
        ok &= pres.is_zero_mod(&sum.sub(&p)).unwrap();
        // Idempotence and orthogonality.
        ok &= pres
            .is_zero_mod(&action.isotypic_project(0, &p0, pres).unwrap().sub(&p0))
            .unwrap();
        ok &= action.isotypic_project(1, &p0, pres).unwrap().is_zero();
        if !ok {
            break;
        }
    }
    conclude(
        9,
        "engine soundness: 500 random polynomials per builtin (idempotence, star compatibility, oracle <= 1e-9); isotypic completeness/orthogonality on 200 elements",
        ok,
    );
}

#[test]
fn criterion_10_expected_equivariance_failure() {
    let report = run_scenario("thm_3_1", &Config::default()).unwrap();
    let check = report
        .checks
        .iter()
        .find(|c| c.name == "(conjugation, conjugation) equivariance")
        .unwrap();
    let mut ok = check.expected == Expect::Fail && check.observed == Outcome::Fail && check.ok;
    // The witness is a nonzero defect polynomial.
    ok &= check
        .witness
        .as_deref()
        .map(|w| !w.is_empty())
        .unwrap_or(false);

    // Recompute the defect directly: it is -2 i s mu, not zero.
    let circle = Arc::new(builtins::circle());
    let conj = CyclicAction::conjugation(&circle).unwrap();
    let cp = Arc::new(CrossedPresentation::new(Arc::clone(&circle), conj.clone(), 2).unwrap());
    let f = join::circle_conjugation_unitary(&cp);
    let mut phi = GenHom::new("phi", &circle, cp.full(), &[("z", f.body().clone())]).unwrap();
    phi.validate().unwrap();
    let eq = phi.equivariance_check(&conj, &cp.beta_extended()).unwrap();
    ok &= !eq.pass();
    let defect = &eq.defects[0].1;
    ok &= !defect.is_zero();
    conclude(
        10,
        "the twist equivariance fails with a nonzero defect polynomial, and the scenario records the failure as expected",
        ok,
    );
}
