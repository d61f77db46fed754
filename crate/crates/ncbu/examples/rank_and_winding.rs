//! The spectral detectors: projection rank tracking along sampled paths,
//! and the determinant winding number of unitary loops. Together they drive
//! the order-k obstruction pipeline.
//!
//! Run with: cargo run -p ncbu --example rank_and_winding

use std::sync::Arc;

use ncbu::action::CyclicAction;
use ncbu::crossed::CrossedPresentation;
use ncbu::numeric::{identity, shift_matrix, CMatrix, Representation};
use ncbu::obstruction::{
    order_k_obstruction, projection_rank_path, winding_number, PathSample, SampleKind,
};
use ncbu::poly::builtins;
use num::complex::Complex64;

fn main() {
    let k = 3usize;

    // The averaged shift T = (1/k) sum S^n is a rank-one projection.
    let s = shift_matrix(k);
    let mut t_mat = CMatrix::zeros(k, k);
    let mut power = identity(k);
    for _ in 0..k {
        t_mat += &power;
        power = &power * &s;
    }
    t_mat /= Complex64::new(k as f64, 0.0);
    let path = PathSample::new(
        "constant T",
        SampleKind::Projection,
        vec![0.0, 1.0],
        vec![t_mat.clone(), t_mat.clone()],
        1.0,
    )
    .unwrap();
    let report = projection_rank_path(&path).unwrap();
    println!(
        "T = (1/{k}) sum S^n: ranks {:?}, eigenvalue gap {:.2}",
        report.ranks, report.min_gap
    );

    // Winding numbers of determinant loops around the circle.
    let loop_of = |f: &dyn Fn(Complex64) -> CMatrix| -> Vec<CMatrix> {
        (0..64)
            .map(|j| {
                f(Complex64::from_polar(
                    1.0,
                    2.0 * std::f64::consts::PI * j as f64 / 64.0,
                ))
            })
            .collect()
    };
    let single = loop_of(&|z| CMatrix::from_element(1, 1, z));
    let doubled = loop_of(&|z| identity(2).map(|x| x * z));
    let constant = loop_of(&|_| identity(2));
    println!(
        "winding numbers: z -> {}, z 1_2 -> {}, constant -> {}",
        winding_number(&single).unwrap(),
        winding_number(&doubled).unwrap(),
        winding_number(&constant).unwrap()
    );

    // The order-k pipeline: a path of order-k unitaries from the group
    // unitary to a constant cannot keep the averaged projection rank
    // constant, certifying that no continuous path exists.
    let base = Arc::new(builtins::cyclic_group(k as u32).unwrap());
    let beta = CyclicAction::trivial(&base, k as u32);
    let cp = CrossedPresentation::new(Arc::clone(&base), beta, k as u32).unwrap();
    let fixed =
        Representation::new("point evaluation", &base, vec![("mu", identity(1))], 1e-12).unwrap();
    let grid: Vec<f64> = (0..6).map(|i| i as f64 / 5.0).collect();
    let values: Vec<CMatrix> = (0..6)
        .map(|i| if i < 3 { shift_matrix(k) } else { identity(k) })
        .collect();
    let u = PathSample::new("claimed path", SampleKind::Unitary, grid, values, 1e6).unwrap();
    let verdict = order_k_obstruction(&u, &cp, &fixed, 1e-9).unwrap();
    println!(
        "pipeline: ranks {:?}, contradiction found: {}",
        verdict.rank_report.ranks, verdict.contradiction
    );
}
