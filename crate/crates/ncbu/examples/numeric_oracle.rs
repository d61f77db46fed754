//! The numeric oracle: matrix representations of the presented algebras
//! evaluate symbolic elements and cross-check every normal form. The oracle
//! is a falsifier for the rewriting engine: eval(p) must agree with
//! eval(normal_form(p)) on a grid of path parameters.
//!
//! Run with: cargo run -p ncbu --example numeric_oracle

use std::sync::Arc;

use ncbu::action::CyclicAction;
use ncbu::crossed::CrossedPresentation;
use ncbu::numeric::{
    circle_roots, crossed_expand, free_sphere_random, oracle_compare, theta_sphere_weyl, unit_grid,
};
use ncbu::poly::sampling::{random_poly, SampleConfig};
use ncbu::poly::{builtins, NCPoly};
use ncbu::scalar::Cyclotomic;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let grid = unit_grid(11);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cfg = SampleConfig::default();

    // Circle functions evaluated at roots of unity.
    let circle = Arc::new(builtins::circle());
    let rep = circle_roots(&circle, 8).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = random_poly(&mut rng, circle.alphabet(), &cfg);
        worst = worst.max(oracle_compare(&rep, &p, &circle, &grid).unwrap());
    }
    println!("circle oracle, 100 random polynomials: max residual {worst:.3e}");

    // The free sphere in seeded random reflection representations.
    let sphere = Arc::new(builtins::free_sphere());
    let rep = free_sphere_random(&sphere, 42, 0.9).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = random_poly(&mut rng, sphere.alphabet(), &cfg);
        worst = worst.max(oracle_compare(&rep, &p, &sphere, &grid).unwrap());
    }
    println!("free sphere oracle: max residual {worst:.3e}");

    // A twisted sphere realized by clock and shift matrices.
    let phases = [((1usize, 2usize), Cyclotomic::from_integer(-1))];
    let theta = Arc::new(builtins::theta_sphere(2, &phases).unwrap());
    let rep = theta_sphere_weyl(&theta, 2, &phases).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = random_poly(&mut rng, theta.alphabet(), &cfg);
        worst = worst.max(oracle_compare(&rep, &p, &theta, &grid).unwrap());
    }
    println!("antisphere oracle (clock/shift): max residual {worst:.3e}");

    // A crossed product: the expanded representation checks the twist rules.
    let conj = CyclicAction::conjugation(&circle).unwrap();
    let cp = CrossedPresentation::new(Arc::clone(&circle), conj, 2).unwrap();
    let base = circle_roots(&circle, 6).unwrap();
    let rep = crossed_expand(&cp, &base).unwrap();
    let z = NCPoly::gen(cp.full().alphabet(), "z");
    let mu = cp.mu_poly();
    let p = mu.mul(&z).mul(&mu).sub(&z.star()); // mu z mu = z*
    println!(
        "crossed product: residual of (mu z mu - z*): {:.3e}",
        oracle_compare(&rep, &p, cp.full(), &grid).unwrap()
    );
}
