//! The free sphere inside its antipodally twisted join: the self-adjoint
//! pair `a_t = t x + (s/sqrt 2) mu`, `b_t = t y + (s/sqrt 2) mu` solves the
//! sphere relation exactly (the 1/sqrt(2) is a conductor-8 cyclotomic) and
//! gives an equivariant map even though the twist is connected to the
//! identity through rotations.
//!
//! Run with: cargo run -p ncbu --example free_sphere_pair

use std::sync::Arc;

use ncbu::action::CyclicAction;
use ncbu::crossed::{combined_dual_action, CrossedPresentation};
use ncbu::hom::{ev_t1, GenHom};
use ncbu::join::{free_sphere_pair, tilde_action_apply};
use ncbu::numeric::{crossed_expand, free_sphere_random, oracle_compare, unit_grid};
use ncbu::poly::{builtins, NCPoly};

fn main() {
    let sphere = Arc::new(builtins::free_sphere());
    let anti = CyclicAction::antipodal(&sphere);
    let cp = Arc::new(CrossedPresentation::new(Arc::clone(&sphere), anti.clone(), 2).unwrap());

    let (a, b) = free_sphere_pair(&cp);
    println!("a_t = {}", a.body());
    println!("b_t = {}", b.body());

    let one = NCPoly::one(cp.full().alphabet());
    let defect = a.mul(&a).add(&b.mul(&b)).body().sub(&one);
    println!(
        "a_t^2 + b_t^2 - 1 == 0: {}",
        cp.full().is_zero_mod(&defect).unwrap()
    );
    println!(
        "boundaries hold: {} {}",
        a.boundary_check().unwrap().passed(),
        b.boundary_check().unwrap().passed()
    );

    // x -> a_t, y -> b_t is a homomorphism negated by the combined action.
    let mut phi = GenHom::new(
        "phi",
        &sphere,
        cp.full(),
        &[("x", a.body().clone()), ("y", b.body().clone())],
    )
    .unwrap();
    println!("phi validates: {}", phi.validate().unwrap().valid());
    let combined = combined_dual_action(&cp, &anti).unwrap();
    let eq = phi.equivariance_check(&anti, &combined).unwrap();
    println!("(antipodal, combined)-equivariant: {}", eq.pass());
    let na = tilde_action_apply(&a, &anti, 1).unwrap();
    println!(
        "combined action negates a_t: {}",
        cp.full().is_zero_mod(&na.body().add(a.body())).unwrap()
    );

    // Evaluation at t = 1 recovers the inclusion into the crossed product.
    let composed = GenHom::compose(&ev_t1(&cp), &phi).unwrap();
    let x_dom = NCPoly::gen(sphere.alphabet(), "x");
    println!("ev_1(phi(x)) = {}", composed.apply(&x_dom).unwrap());

    // Numeric cross-check in seeded random 2-dimensional representations.
    for seed in 0..3u64 {
        let base = free_sphere_random(&sphere, seed, 0.4 + 0.2 * seed as f64).unwrap();
        let rep = crossed_expand(&cp, &base).unwrap();
        let residual = oracle_compare(&rep, &defect, cp.full(), &unit_grid(11)).unwrap();
        println!("oracle residual (seed {seed}): {residual:.3e}");
    }
}
