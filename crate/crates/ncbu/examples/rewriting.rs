//! Presentations and normal forms: identity of elements modulo relations is
//! decided by oriented rewriting.
//!
//! Run with: cargo run -p ncbu --example rewriting

use ncbu::poly::{builtins, NCPoly};
use ncbu::scalar::Cyclotomic;

fn main() {
    // The circle algebra: z is a unitary.
    let circle = builtins::circle();
    let z = NCPoly::gen(circle.alphabet(), "z");
    let zs = NCPoly::gen(circle.alphabet(), "z*");
    println!(
        "Circle: nf(z z*)      = {}",
        circle.normal_form(&z.mul(&zs)).unwrap()
    );

    // The free sphere: x, y self-adjoint with x^2 + y^2 = 1. The relation is
    // oriented y^2 -> 1 - x^2, with the overlap rule y x^2 -> x^2 y.
    let sphere = builtins::free_sphere();
    let x = NCPoly::gen(sphere.alphabet(), "x");
    let y = NCPoly::gen(sphere.alphabet(), "y");
    println!(
        "FreeSphere: nf(y^2)   = {}",
        sphere.normal_form(&y.mul(&y)).unwrap()
    );
    let defect = x
        .mul(&x)
        .add(&y.mul(&y))
        .sub(&NCPoly::one(sphere.alphabet()));
    println!(
        "x^2 + y^2 - 1 == 0    : {}",
        sphere.is_zero_mod(&defect).unwrap()
    );
    let comm = x.mul(&y).sub(&y.mul(&x));
    println!(
        "x y - y x == 0        : {}  (the sphere stays noncommutative)",
        sphere.is_zero_mod(&comm).unwrap()
    );

    // A twisted sphere on two normal generators with anticommutation.
    let minus_one = Cyclotomic::from_integer(-1);
    let anti = builtins::theta_sphere(2, &[((1, 2), minus_one)]).unwrap();
    let z1 = NCPoly::gen(anti.alphabet(), "z1");
    let z2 = NCPoly::gen(anti.alphabet(), "z2");
    println!(
        "Antisphere: nf(z2 z1) = {}",
        anti.normal_form(&z2.mul(&z1)).unwrap()
    );

    // The cyclic group algebra: mu^k = 1 and mu* = mu^{k-1}.
    let cg = builtins::cyclic_group(3).unwrap();
    let mu_star = NCPoly::gen(cg.alphabet(), "mu*");
    println!(
        "CyclicGroup(3): nf(mu*) = {}",
        cg.normal_form(&mu_star).unwrap()
    );

    // Reduction budgets guard against runaway rule systems; built-ins stay
    // comfortably inside.
    let big = y.pow(12).mul(&x.pow(6));
    let (nf, steps) = sphere.normal_form_with_stats(&big, 1_000_000).unwrap();
    println!(
        "nf(y^12 x^6): {} terms in {steps} rewrite steps",
        nf.num_terms()
    );
}
