//! Cyclic group actions on presented algebras: validation, iterated
//! application, and the isotypic (spectral subspace) decomposition.
//!
//! Run with: cargo run -p ncbu --example actions_and_gradings

use ncbu::action::CyclicAction;
use ncbu::poly::{builtins, NCPoly};
use ncbu::scalar::PathScalar;

fn main() {
    let circle = builtins::circle();
    let z = NCPoly::gen(circle.alphabet(), "z");

    // The antipodal action negates the generator; conjugation stars it.
    let anti = CyclicAction::antipodal(&circle);
    let conj = CyclicAction::conjugation(&circle).unwrap();
    println!(
        "antipodal valid: {}",
        anti.validate(&circle).unwrap().valid()
    );
    println!(
        "conjugation valid: {}",
        conj.validate(&circle).unwrap().valid()
    );
    println!(
        "they commute: {}",
        anti.commutes_with(&conj, &circle).unwrap().is_none()
    );

    // A non-isometric candidate breaks the unitary relation and is rejected.
    let double = CyclicAction::new(
        "double",
        2,
        &circle,
        &[("z", z.scale(&PathScalar::from_integer(2)))],
    )
    .unwrap();
    let report = double.validate(&circle).unwrap();
    println!(
        "z -> 2z valid: {} (defect on {})",
        report.valid(),
        report.relation_defects[0].0
    );

    // Isotypic projections: averaging with character weights.
    println!(
        "antipodal projections of z: even part {}, odd part {}",
        anti.isotypic_project(0, &z, &circle).unwrap(),
        anti.isotypic_project(1, &z, &circle).unwrap()
    );
    println!(
        "conjugation fixed part of z: {}",
        conj.isotypic_project(0, &z, &circle).unwrap()
    );

    // The projections sum back to the element.
    let back = conj
        .isotypic_project(0, &z, &circle)
        .unwrap()
        .add(&conj.isotypic_project(1, &z, &circle).unwrap());
    println!(
        "completeness: sum of projections - z == 0: {}",
        circle.is_zero_mod(&back.sub(&z)).unwrap()
    );
}
