//! Freeness of finite cyclic actions via saturation: every character
//! subspace must generate the whole algebra through its products.
//!
//! Run with: cargo run -p ncbu --example saturation_freeness

use ncbu::numeric::{clock_matrix, shift_matrix, CVector};
use ncbu::obstruction::{
    function_algebra_with_permutation, isotypic_residual, matrix_algebra_with_conjugation,
    saturation_check,
};

fn main() {
    // Conjugation by the clock matrix on M_k is free: the shift unitary
    // witnesses saturation in every character.
    for k in 2..=5usize {
        let alg = matrix_algebra_with_conjugation(k, &clock_matrix(k), k as u32).unwrap();
        let report = saturation_check(&alg).unwrap();
        println!(
            "M_{k} with clock conjugation: free = {}, isotypic dims {:?}",
            report.free(),
            report
                .per_gamma
                .iter()
                .map(|g| g.isotypic_dim)
                .collect::<Vec<_>>()
        );
    }

    // The shift unitary lies in the first character space.
    let k = 4;
    let alg = matrix_algebra_with_conjugation(k, &clock_matrix(k), k as u32).unwrap();
    let w = shift_matrix(k);
    let mut v = CVector::zeros(k * k);
    for i in 0..k {
        for j in 0..k {
            v[i * k + j] = w[(i, j)];
        }
    }
    println!(
        "shift in the first isotypic component of M_4: residual {:.3e}",
        isotypic_residual(&alg, 1, &v)
    );

    // The trivial action is never free: the nontrivial characters are empty.
    let triv = function_algebra_with_permutation(2, &[0, 1], 2, "C(2 points)").unwrap();
    let report = saturation_check(&triv).unwrap();
    println!(
        "trivial action on 2 points: free = {} (character 1 dimension {})",
        report.free(),
        report.per_gamma[1].isotypic_dim
    );

    // The cyclic shift on points is free: character functions are unitary.
    let shift = function_algebra_with_permutation(4, &[1, 2, 3, 0], 4, "C(Z_4)").unwrap();
    println!(
        "cyclic shift on 4 points: free = {}",
        saturation_check(&shift).unwrap().free()
    );
}
