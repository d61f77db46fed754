//! Numeric oracle: concrete matrix representations of the presented algebras
//! and evaluation of symbolic elements, used to cross-check every symbolic
//! identity.

pub mod matrix;
mod rep;

pub use matrix::{
    clock_matrix, dagger, det, distance, exp_i_hermitian, hermitian_eigenvalues, identity, kron,
    opnorm, projection_residual, random_reflection, random_unitary, shift_matrix,
    unitarity_residual, CMatrix, CVector,
};
pub use rep::{
    circle_points, circle_roots, clock_shift_rep, crossed_expand, cyclic_regular,
    free_sphere_random, oracle_compare, theta_sphere_weyl, unit_grid, Representation,
};
