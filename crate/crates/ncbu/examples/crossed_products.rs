//! Crossed products as extended presentations: the group unitary, the dual
//! and combined actions, the grading, and the matrix expansion map.
//!
//! Run with: cargo run -p ncbu --example crossed_products

use std::sync::Arc;

use ncbu::action::CyclicAction;
use ncbu::crossed::{combined_dual_action, expand_matrix, CrossedPresentation};
use ncbu::poly::{builtins, NCPoly};

fn main() {
    // The circle with the conjugation twist: mu z = z* mu, mu^2 = 1.
    let circle = Arc::new(builtins::circle());
    let conj = CyclicAction::conjugation(&circle).unwrap();
    let cp = CrossedPresentation::new(Arc::clone(&circle), conj, 2).unwrap();
    println!("{}", cp.full());

    let z = NCPoly::gen(cp.full().alphabet(), "z");
    let mu = cp.mu_poly();
    println!(
        "nf(mu z)   = {}",
        cp.full().normal_form(&mu.mul(&z)).unwrap()
    );
    println!(
        "nf(mu z mu) = {}",
        cp.full().normal_form(&mu.mul(&z).mul(&mu)).unwrap()
    );

    // The grading: every element splits as sum a_j mu^j with a_j in the base.
    let p = z.mul(&mu).add(&z.mul(&z)).add(&mu.mul(&z));
    for (j, c) in cp.mu_coefficients(&p).unwrap().iter().enumerate() {
        println!("mu^{j} coefficient of (z mu + z^2 + mu z): {c}");
    }

    // The combined action scales mu by a root of unity and moves the base
    // through the given action.
    let anti = CyclicAction::antipodal(&circle);
    let combined = combined_dual_action(&cp, &anti).unwrap();
    println!(
        "combined action: z -> {},  mu -> {}",
        combined.apply(1, &z, cp.full()).unwrap(),
        combined.apply(1, &mu, cp.full()).unwrap()
    );

    // The expansion map E into 2x2 matrices over the circle:
    // E(z) = diag(z, z*), E(mu) = the 0/1 shift.
    println!("E(z) =\n{}", expand_matrix(&cp, &z).unwrap());
    println!("E(mu) =\n{}", expand_matrix(&cp, &mu).unwrap());
    println!("E(z mu) =\n{}", expand_matrix(&cp, &z.mul(&mu)).unwrap());

    // E is multiplicative: E(mu z) = E(mu) E(z) entrywise mod relations.
    let lhs = expand_matrix(&cp, &mu.mul(&z)).unwrap();
    let rhs = expand_matrix(&cp, &mu)
        .unwrap()
        .mul(&expand_matrix(&cp, &z).unwrap())
        .normal_form(cp.base())
        .unwrap();
    println!("E(mu z) == E(mu) E(z): {}", lhs == rhs);
}
