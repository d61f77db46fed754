//! The circle inside its conjugation-twisted join: the unitary path
//! `f = t z + i s mu` respects the boundary conditions, is negated by the
//! combined action, and defines an equivariant map out of the circle. Its
//! twist equivariance fails, with the defect printed as the witness.
//!
//! Run with: cargo run -p ncbu --example twisted_join_unitary

use std::sync::Arc;

use ncbu::action::CyclicAction;
use ncbu::crossed::{combined_dual_action, CrossedPresentation};
use ncbu::hom::GenHom;
use ncbu::join::{circle_conjugation_unitary, tilde_action_apply};
use ncbu::poly::{builtins, NCPoly};

fn main() {
    let circle = Arc::new(builtins::circle());
    let conj = CyclicAction::conjugation(&circle).unwrap();
    let anti = CyclicAction::antipodal(&circle);
    let cp = Arc::new(CrossedPresentation::new(Arc::clone(&circle), conj.clone(), 2).unwrap());

    let f = circle_conjugation_unitary(&cp);
    println!("f = {}", f.body());

    // Boundary: f(0) lands in the group algebra, f(1) in the base copy.
    let verdict = f.boundary_check().unwrap();
    println!("boundary check: {:?}", verdict.passed());
    println!("f(0) = {}", f.at_zero().unwrap());
    println!("f(1) = {}", f.at_one().unwrap());

    // Unitarity, exactly.
    let one = NCPoly::one(cp.full().alphabet());
    let ff = f.mul(&f.star()).body().sub(&one);
    println!("f f* - 1 == 0: {}", cp.full().is_zero_mod(&ff).unwrap());

    // The combined action negates f.
    let af = tilde_action_apply(&f, &anti, 1).unwrap();
    println!(
        "combined action negates f: {}",
        cp.full().is_zero_mod(&af.body().add(f.body())).unwrap()
    );

    // z -> f is a unital *-homomorphism, equivariant for (antipodal, combined).
    let mut phi = GenHom::new("phi", &circle, cp.full(), &[("z", f.body().clone())]).unwrap();
    let report = phi.validate().unwrap();
    println!("phi validates: {}", report.valid());
    let combined = combined_dual_action(&cp, &anti).unwrap();
    let eq = phi.equivariance_check(&anti, &combined).unwrap();
    println!("(antipodal, combined)-equivariant: {}", eq.pass());

    // The twist equivariance fails; the defect polynomial is the witness.
    let eq2 = phi.equivariance_check(&conj, &cp.beta_extended()).unwrap();
    println!(
        "(conjugation, conjugation)-equivariant: {} (defect: {})",
        eq2.pass(),
        eq2.first_defect().unwrap()
    );
}
