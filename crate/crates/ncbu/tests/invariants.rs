//! Cross-module invariants on randomized inputs: the expansion map is a
//! homomorphism, the crossed-product grading matches the dual-action
//! isotypic projections, reduction is compatible with multiplication, the
//! twisted join is closed under its operations, and the induced actions have
//! the right order.

use std::sync::Arc;

use ncbu::action::CyclicAction;
use ncbu::crossed::{combined_dual_action, expand_matrix, CrossedPresentation};
use ncbu::join::{tilde_action_apply, JoinElement};
use ncbu::poly::sampling::{random_poly, random_word, SampleConfig};
use ncbu::poly::{builtins, NCPoly, Presentation, Word};
use ncbu::scalar::PathScalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn circle_conj() -> Arc<CrossedPresentation> {
    let base = Arc::new(builtins::circle());
    let conj = CyclicAction::conjugation(&base).unwrap();
    Arc::new(CrossedPresentation::new(base, conj, 2).unwrap())
}

fn sphere_anti() -> Arc<CrossedPresentation> {
    let base = Arc::new(builtins::free_sphere());
    let anti = CyclicAction::antipodal(&base);
    Arc::new(CrossedPresentation::new(base, anti, 2).unwrap())
}

#[test]
fn expansion_is_multiplicative_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let cfg = SampleConfig {
        max_terms: 3,
        max_word_len: 4,
        ..SampleConfig::default()
    };
    for cp in [circle_conj(), sphere_anti()] {
        for _ in 0..200 {
            let p = random_poly(&mut rng, cp.full().alphabet(), &cfg);
            let q = random_poly(&mut rng, cp.full().alphabet(), &cfg);
            let lhs = expand_matrix(&cp, &p.mul(&q)).unwrap();
            let rhs = expand_matrix(&cp, &p)
                .unwrap()
                .mul(&expand_matrix(&cp, &q).unwrap())
                .normal_form(cp.base())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        // Star compatibility on a few samples.
        for _ in 0..20 {
            let p = random_poly(&mut rng, cp.full().alphabet(), &cfg);
            let lhs = expand_matrix(&cp, &p.star()).unwrap();
            let rhs = expand_matrix(&cp, &p)
                .unwrap()
                .star()
                .normal_form(cp.base())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn grading_matches_dual_action_projections() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = SampleConfig {
        max_terms: 3,
        max_word_len: 4,
        ..SampleConfig::default()
    };
    for cp in [circle_conj(), sphere_anti()] {
        let dual = cp.dual_action();
        for _ in 0..50 {
            let p = random_poly(&mut rng, cp.full().alphabet(), &cfg);
            let comps = cp.mu_coefficients(&p).unwrap();
            let mu = cp.mu_poly();
            for (j, comp) in comps.iter().enumerate() {
                let projected = dual.isotypic_project(j as u32, &p, cp.full()).unwrap();
                let direct = cp
                    .full()
                    .normal_form(&cp.embed(comp).mul(&mu.pow(j as u32)))
                    .unwrap();
                assert_eq!(projected, direct, "component {j}");
            }
        }
    }
}

#[test]
fn reduction_is_compatible_with_multiplication() {
    // Confluence surrogate: nf(pq) = nf(nf(p) nf(q)) for random pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cfg = SampleConfig {
        max_terms: 3,
        max_word_len: 5,
        ..SampleConfig::default()
    };
    let packs: Vec<Arc<Presentation>> = vec![
        Arc::new(builtins::circle()),
        Arc::new(builtins::free_sphere()),
        Arc::new(
            builtins::theta_sphere(2, &[((1, 2), ncbu::scalar::Cyclotomic::from_integer(-1))])
                .unwrap(),
        ),
        Arc::new(builtins::cyclic_group(4).unwrap()),
    ];
    for pres in &packs {
        for _ in 0..500 {
            let p = random_poly(&mut rng, pres.alphabet(), &cfg);
            let q = random_poly(&mut rng, pres.alphabet(), &cfg);
            let one_shot = pres.normal_form(&p.mul(&q)).unwrap();
            let two_step = pres
                .normal_form(
                    &pres
                        .normal_form(&p)
                        .unwrap()
                        .mul(&pres.normal_form(&q).unwrap()),
                )
                .unwrap();
            assert_eq!(one_shot, two_step);
        }
    }
}

#[test]
fn reduction_terminates_well_inside_the_budget() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cfg = SampleConfig {
        max_terms: 4,
        max_word_len: 6,
        ..SampleConfig::default()
    };
    for pres in [
        Arc::new(builtins::circle()),
        Arc::new(builtins::free_sphere()),
        Arc::new(builtins::cyclic_group(5).unwrap()),
    ] {
        let mut worst = 0u64;
        for _ in 0..200 {
            let p = random_poly(&mut rng, pres.alphabet(), &cfg);
            let (_, steps) = pres.normal_form_with_stats(&p, 1_000_000).unwrap();
            worst = worst.max(steps);
        }
        assert!(worst < 10_000, "{}: {worst} steps", pres.label());
    }
}

/// Random twisted-join elements: terms vanish at whichever endpoint their
/// word shape is not allowed to touch.
fn random_join_element<R: Rng>(rng: &mut R, cp: &Arc<CrossedPresentation>) -> JoinElement {
    let alphabet = cp.full().alphabet();
    let mut body = NCPoly::zero(alphabet);
    let t = PathScalar::t();
    let s = PathScalar::s();
    for _ in 0..rng.gen_range(1..4) {
        match rng.gen_range(0..3) {
            // t^a (mu-free word), a >= 1
            0 => {
                let w = random_word(rng, cp.base().alphabet(), 3);
                let mut c = t.clone();
                for _ in 0..rng.gen_range(0..2) {
                    c = c.mul(&t);
                }
                body = body.add(&NCPoly::monomial(alphabet, w, c));
            }
            // s (pure group word)
            1 => {
                let j = rng.gen_range(0..cp.order());
                let w = Word::single(cp.mu()).power(j as usize);
                body = body.add(&NCPoly::monomial(alphabet, w, s.clone()));
            }
            // t s (anything)
            _ => {
                let mut letters = Vec::new();
                for _ in 0..rng.gen_range(0..4) {
                    let pick = rng.gen_range(0..alphabet.len());
                    let letter = alphabet.letters().nth(pick).unwrap();
                    letters.push(letter);
                }
                body = body.add(&NCPoly::monomial(
                    alphabet,
                    Word::from_letters(letters),
                    t.mul(&s),
                ));
            }
        }
    }
    JoinElement::new(cp, body)
}

#[test]
fn join_operations_preserve_the_boundary_conditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for cp in [circle_conj(), sphere_anti()] {
        for _ in 0..60 {
            let e = random_join_element(&mut rng, &cp);
            let f = random_join_element(&mut rng, &cp);
            assert!(e.boundary_check().unwrap().passed());
            assert!(e.mul(&f).boundary_check().unwrap().passed());
            assert!(e.add(&f).boundary_check().unwrap().passed());
            assert!(e.star().boundary_check().unwrap().passed());
        }
    }
}

#[test]
fn tilde_action_has_the_right_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for cp in [circle_conj(), sphere_anti()] {
        let alpha = CyclicAction::antipodal(cp.base());
        for _ in 0..20 {
            let e = random_join_element(&mut rng, &cp);
            let once = tilde_action_apply(&e, &alpha, 1).unwrap();
            let back = tilde_action_apply(&once, &alpha, 1).unwrap();
            let expected = cp.full().normal_form(e.body()).unwrap();
            assert_eq!(back.body(), &expected);
            let all_at_once = tilde_action_apply(&e, &alpha, 2).unwrap();
            assert_eq!(all_at_once.body(), &expected);
        }
    }
}

#[test]
fn combined_action_validates_on_both_scenarios() {
    for cp in [circle_conj(), sphere_anti()] {
        let alpha = CyclicAction::antipodal(cp.base());
        let combined = combined_dual_action(&cp, &alpha).unwrap();
        assert!(combined.validate(cp.full()).unwrap().valid());
        assert_eq!(combined.order(), cp.order());
    }
}

#[test]
fn isotypic_projections_are_eigenvectors() {
    // alpha(pi_gamma(p)) = omega^gamma pi_gamma(p) modulo relations.
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let cfg = SampleConfig::default();
    let circle = Arc::new(builtins::circle());
    let conj = CyclicAction::conjugation(&circle).unwrap();
    for _ in 0..40 {
        let p = random_poly(&mut rng, circle.alphabet(), &cfg);
        for gamma in 0..2u32 {
            let proj = conj.isotypic_project(gamma, &p, &circle).unwrap();
            let moved = conj.apply(1, &proj, &circle).unwrap();
            let scaled = if gamma == 0 { proj.clone() } else { proj.neg() };
            assert_eq!(moved, scaled);
        }
    }
}

#[test]
fn hom_composition_is_associative_on_generators() {
    use ncbu::hom::{rotation_family, rotation_family_inverse, sphere_to_circle, GenHom};
    let sphere = Arc::new(builtins::free_sphere());
    let circle = Arc::new(builtins::circle());
    let r = rotation_family(&sphere).unwrap();
    let r_inv = rotation_family_inverse(&sphere).unwrap();
    let q = sphere_to_circle(&sphere, &circle).unwrap();
    let left = GenHom::compose(&GenHom::compose(&q, &r).unwrap(), &r_inv).unwrap();
    let right = GenHom::compose(&q, &GenHom::compose(&r, &r_inv).unwrap()).unwrap();
    assert!(left.agrees_with(&right).unwrap());
}

#[test]
fn core_values_are_sendable_between_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<ncbu::scalar::Cyclotomic>();
    assert_send_sync::<ncbu::scalar::PathScalar>();
    assert_send_sync::<NCPoly>();
    assert_send_sync::<Presentation>();
    assert_send_sync::<CyclicAction>();
    assert_send_sync::<CrossedPresentation>();
    assert_send_sync::<ncbu::numeric::Representation>();
    assert_send_sync::<JoinElement>();
}

#[test]
fn order_k_pipeline_rejects_bad_starting_points() {
    use ncbu::numeric::{identity, Representation};
    use ncbu::obstruction::{order_k_obstruction, PathSample, SampleKind};
    let k = 3u32;
    let base = Arc::new(builtins::cyclic_group(k).unwrap());
    let beta = CyclicAction::trivial(&base, k);
    let cp = CrossedPresentation::new(Arc::clone(&base), beta, k).unwrap();
    let fixed =
        Representation::new("point evaluation", &base, vec![("mu", identity(1))], 1e-12).unwrap();
    // A constant path at the identity: order-k holds, but u(0) is not a
    // scalar multiple of the group unitary, so the precondition fails.
    let u = PathSample::new(
        "constant identity",
        SampleKind::Unitary,
        vec![0.0, 1.0],
        vec![identity(3), identity(3)],
        1.0,
    )
    .unwrap();
    let err = order_k_obstruction(&u, &cp, &fixed, 1e-9).unwrap_err();
    assert!(matches!(err, ncbu::ObstructionError::BadEndpoint(_)));
}

#[test]
fn uniform_scaling_distributes_over_group_sums() {
    // (1 + v + v^2)/3 has every coefficient 1/3.
    let pres = Arc::new(builtins::cyclic_group(3).unwrap());
    let v = NCPoly::gen(pres.alphabet(), "mu");
    let sum = NCPoly::one(pres.alphabet()).add(&v).add(&v.mul(&v));
    let third = PathScalar::rational(1, 3);
    let scaled = sum.scale(&third);
    assert_eq!(scaled.num_terms(), 3);
    for (_, c) in scaled.terms() {
        assert_eq!(c, &third);
    }
}
