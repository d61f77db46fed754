//! Twist-equivariant maps induce morphisms between crossed products (and so
//! between twisted joins, pointwise): the quotient from the free sphere onto
//! the circle extends with the group unitary fixed, and the extension
//! intertwines the combined actions. Non-equivariant candidates are rejected
//! with the defect polynomial.
//!
//! Run with: cargo run -p ncbu --example induced_join_morphisms

use std::sync::Arc;

use ncbu::action::CyclicAction;
use ncbu::crossed::{combined_dual_action, CrossedPresentation};
use ncbu::hom::{sphere_to_circle, GenHom};
use ncbu::join::induce_join_hom;
use ncbu::poly::{builtins, NCPoly};

fn main() {
    let sphere = Arc::new(builtins::free_sphere());
    let circle = Arc::new(builtins::circle());
    let cp_s =
        CrossedPresentation::new(Arc::clone(&sphere), CyclicAction::antipodal(&sphere), 2).unwrap();
    let cp_c =
        CrossedPresentation::new(Arc::clone(&circle), CyclicAction::antipodal(&circle), 2).unwrap();

    // The quotient x -> (z + z*)/2, y -> (z - z*)/(2i) is antipodally
    // equivariant, so it induces psi with psi(mu) = mu.
    let phi = sphere_to_circle(&sphere, &circle).unwrap();
    let psi = induce_join_hom(&phi, &cp_s, &cp_c).unwrap();
    println!("psi(mu) = {}", psi.apply(&cp_s.mu_poly()).unwrap());
    let x = NCPoly::gen(cp_s.full().alphabet(), "x");
    println!("psi(x)  = {}", psi.apply(&x).unwrap());

    // The induced morphism intertwines the combined actions.
    let comb_s = combined_dual_action(&cp_s, &CyclicAction::antipodal(&sphere)).unwrap();
    let comb_c = combined_dual_action(&cp_c, &CyclicAction::antipodal(&circle)).unwrap();
    let eq = psi.equivariance_check(&comb_s, &comb_c).unwrap();
    println!("combined equivariance: {}", eq.pass());

    // Induction is functorial on generators.
    let id = GenHom::identity(&sphere);
    let psi_id = induce_join_hom(&id, &cp_s, &cp_s).unwrap();
    let composed = GenHom::compose(&psi, &psi_id).unwrap();
    let direct = induce_join_hom(&GenHom::compose(&phi, &id).unwrap(), &cp_s, &cp_c).unwrap();
    println!(
        "J[phi . id] = J[phi] . J[id]: {}",
        composed.agrees_with(&direct).unwrap()
    );

    // The construction iterates: the join of the join carries a second group
    // unitary, and the induced morphism lifts again.
    let cp_s2 = CrossedPresentation::new(Arc::clone(cp_s.full()), cp_s.beta_extended(), 2).unwrap();
    let cp_c2 = CrossedPresentation::new(Arc::clone(cp_c.full()), cp_c.beta_extended(), 2).unwrap();
    let psi2 = induce_join_hom(&psi, &cp_s2, &cp_c2).unwrap();
    println!(
        "depth-2 induction: psi2(mu2) = {}",
        psi2.apply(&cp_s2.mu_poly()).unwrap()
    );

    // A candidate that fails the twist hypothesis is rejected with a defect.
    let cp_conj = CrossedPresentation::new(
        Arc::clone(&circle),
        CyclicAction::conjugation(&circle).unwrap(),
        2,
    )
    .unwrap();
    match induce_join_hom(&GenHom::identity(&circle), &cp_conj, &cp_c) {
        Err(e) => println!("rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
