//! Finite-dimensional *-algebras with cyclic actions, and the saturation
//! (freeness) criterion: the action is free when every isotypic subspace
//! satisfies `1 in span(A_gamma A_gamma*)` up to ideal closure.

use num::complex::Complex64;

use crate::error::ObstructionError;
use crate::numeric::matrix::{distance, identity, CMatrix, CVector};
use crate::tolerance;

/// A finite-dimensional *-algebra with a distinguished Z/kZ action.
///
/// Elements are coordinate vectors over a fixed basis `e_0, ..., e_{d-1}`;
/// multiplication is given by structure constants, the involution by an
/// antilinear matrix (`x* = S conj(x)`), and the action by an invertible
/// matrix of order `k`. All laws are checked at construction.
pub struct FiniteDimAlgebra {
    label: String,
    dim: usize,
    /// Left multiplication operators: `e_i . y = left[i] * y`.
    left: Vec<CMatrix>,
    unit: CVector,
    star_mat: CMatrix,
    action_mat: CMatrix,
    k: u32,
}

impl FiniteDimAlgebra {
    pub fn new(
        label: impl Into<String>,
        left: Vec<CMatrix>,
        unit: CVector,
        star_mat: CMatrix,
        action_mat: CMatrix,
        k: u32,
    ) -> Result<Self, ObstructionError> {
        let dim = left.len();
        let alg = FiniteDimAlgebra {
            label: label.into(),
            dim,
            left,
            unit,
            star_mat,
            action_mat,
            k,
        };
        alg.validate()?;
        Ok(alg)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn unit(&self) -> &CVector {
        &self.unit
    }

    pub fn action_matrix(&self) -> &CMatrix {
        &self.action_mat
    }

    pub fn basis(&self, i: usize) -> CVector {
        let mut v = CVector::zeros(self.dim);
        v[i] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn mul(&self, x: &CVector, y: &CVector) -> CVector {
        let mut out = CVector::zeros(self.dim);
        for i in 0..self.dim {
            if x[i] != Complex64::new(0.0, 0.0) {
                out += (&self.left[i] * y) * x[i];
            }
        }
        out
    }

    pub fn star(&self, x: &CVector) -> CVector {
        &self.star_mat * x.map(|c| c.conj())
    }

    pub fn act(&self, j: u32, x: &CVector) -> CVector {
        let mut out = x.clone();
        for _ in 0..(j % self.k) {
            out = &self.action_mat * out;
        }
        out
    }

    fn validate(&self) -> Result<(), ObstructionError> {
        let d = self.dim;
        let law = |name: &str, at: (usize, usize, usize), r: f64| {
            if r > tolerance::CONSTRUCTED {
                Err(ObstructionError::AlgebraLaw {
                    law: name.to_string(),
                    at,
                    residual: r,
                })
            } else {
                Ok(())
            }
        };
        for i in 0..d {
            for j in 0..d {
                let eij = self.mul(&self.basis(i), &self.basis(j));
                for l in 0..d {
                    let lhs = self.mul(&eij, &self.basis(l));
                    let rhs = self.mul(&self.basis(i), &self.mul(&self.basis(j), &self.basis(l)));
                    law("associativity", (i, j, l), (lhs - rhs).norm())?;
                }
                // star anti-multiplicativity on basis pairs
                let lhs = self.star(&eij);
                let rhs = self.mul(&self.star(&self.basis(j)), &self.star(&self.basis(i)));
                law("star-antimultiplicativity", (i, j, 0), (lhs - rhs).norm())?;
                // action multiplicativity
                let lhs = self.act(1, &eij);
                let rhs = self.mul(&self.act(1, &self.basis(i)), &self.act(1, &self.basis(j)));
                law("action-multiplicativity", (i, j, 0), (lhs - rhs).norm())?;
            }
            let e = self.basis(i);
            law(
                "left-unit",
                (i, 0, 0),
                (self.mul(&self.unit, &e) - &e).norm(),
            )?;
            law(
                "right-unit",
                (i, 0, 0),
                (self.mul(&e, &self.unit) - &e).norm(),
            )?;
            law(
                "star-involution",
                (i, 0, 0),
                (self.star(&self.star(&e)) - &e).norm(),
            )?;
        }
        // action order
        let mut power = identity(d);
        for _ in 0..self.k {
            power = &self.action_mat * power;
        }
        let residual = distance(&power, &identity(d));
        if residual > tolerance::CONSTRUCTED {
            return Err(ObstructionError::ActionOrder {
                k: self.k,
                residual,
            });
        }
        Ok(())
    }
}

/// Verdict for a single character of the grading.
#[derive(Clone, Debug)]
pub struct GammaVerdict {
    pub gamma: u32,
    pub isotypic_dim: usize,
    pub product_span_dim: usize,
    pub ideal_dim: usize,
    /// Distance from the unit to the span of `A_gamma A_gamma*`.
    pub unit_residual: f64,
    /// True when the two-sided ideal generated by the products is everything.
    pub full: bool,
}

/// Result of the saturation check: free iff every character passes.
#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub algebra: String,
    pub per_gamma: Vec<GammaVerdict>,
}

impl SaturationReport {
    pub fn free(&self) -> bool {
        self.per_gamma.iter().all(|g| g.full)
    }
}

const RANK_EPS: f64 = 1e-8;

/// Orthonormal basis of the column space, with singular values above a
/// relative threshold.
fn column_space(m: &CMatrix) -> Vec<CVector> {
    if m.ncols() == 0 {
        return Vec::new();
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.as_ref().expect("left vectors requested");
    let smax = svd.singular_values.max().max(1.0);
    let mut basis = Vec::new();
    for (i, s) in svd.singular_values.iter().enumerate() {
        if *s > RANK_EPS * smax {
            basis.push(u.column(i).into_owned());
        }
    }
    basis
}

fn stack(columns: &[CVector], dim: usize) -> CMatrix {
    let mut m = CMatrix::zeros(dim, columns.len());
    for (j, c) in columns.iter().enumerate() {
        m.set_column(j, c);
    }
    m
}

/// Distance from `v` to the column space of `basis` (orthonormal columns).
fn residual_to_span(v: &CVector, basis: &[CVector]) -> f64 {
    let mut rem = v.clone();
    for b in basis {
        let coeff = b.dotc(&rem);
        rem -= b * coeff;
    }
    rem.norm()
}

/// Computes the per-character saturation verdicts for the action.
pub fn saturation_check(alg: &FiniteDimAlgebra) -> Result<SaturationReport, ObstructionError> {
    let d = alg.dim();
    let k = alg.order();
    let mut per_gamma = Vec::new();
    for gamma in 0..k {
        // Spectral projection onto the omega^gamma eigenspace of the action.
        let mut proj = CMatrix::zeros(d, d);
        let mut power = identity(d);
        for j in 0..k {
            let phase = Complex64::from_polar(
                1.0,
                -2.0 * std::f64::consts::PI * (gamma as f64) * (j as f64) / (k as f64),
            );
            proj += power.scale(1.0 / k as f64) * phase;
            power = alg.action_matrix() * power;
        }
        let iso_basis = column_space(&proj);
        let isotypic_dim = iso_basis.len();

        // span(A_gamma A_gamma*)
        let mut products = Vec::new();
        for a in &iso_basis {
            for b in &iso_basis {
                products.push(alg.mul(a, &alg.star(b)));
            }
        }
        let span_basis = column_space(&stack(&products, d));
        let product_span_dim = span_basis.len();
        let unit_residual = if span_basis.is_empty() {
            alg.unit().norm()
        } else {
            residual_to_span(alg.unit(), &span_basis)
        };

        // Two-sided ideal closure by linear algebra.
        let mut ideal = span_basis;
        loop {
            let mut extended: Vec<CVector> = ideal.clone();
            for v in &ideal {
                for i in 0..d {
                    extended.push(alg.mul(&alg.basis(i), v));
                    extended.push(alg.mul(v, &alg.basis(i)));
                }
            }
            let closed = column_space(&stack(&extended, d));
            if closed.len() == ideal.len() {
                ideal = closed;
                break;
            }
            ideal = closed;
        }
        let ideal_dim = ideal.len();
        per_gamma.push(GammaVerdict {
            gamma,
            isotypic_dim,
            product_span_dim,
            ideal_dim,
            unit_residual,
            full: ideal_dim == d,
        });
    }
    Ok(SaturationReport {
        algebra: alg.label().to_string(),
        per_gamma,
    })
}

/// Distance from `x` to the isotypic subspace of the given character.
pub fn isotypic_residual(alg: &FiniteDimAlgebra, gamma: u32, x: &CVector) -> f64 {
    let k = alg.order();
    let mut projected = CVector::zeros(alg.dim());
    let mut iter = x.clone();
    for j in 0..k {
        let phase = Complex64::from_polar(
            1.0,
            -2.0 * std::f64::consts::PI * (gamma as f64) * (j as f64) / (k as f64),
        );
        projected += iter.scale(1.0 / k as f64) * phase;
        iter = alg.act(1, &iter);
    }
    (x - projected).norm()
}

/// `M_k(C)` with basis `E_{ij}` (row-major) and the conjugation action of a
/// given unitary.
pub fn matrix_algebra_with_conjugation(
    k: usize,
    conjugator: &CMatrix,
    order: u32,
) -> Result<FiniteDimAlgebra, ObstructionError> {
    let d = k * k;
    let idx = |i: usize, j: usize| i * k + j;
    // Left multiplication: E_ij . E_lm = delta_{jl} E_im.
    let mut left = vec![CMatrix::zeros(d, d); d];
    for i in 0..k {
        for j in 0..k {
            let op = &mut left[idx(i, j)];
            for m in 0..k {
                op[(idx(i, m), idx(j, m))] = Complex64::new(1.0, 0.0);
            }
        }
    }
    let mut unit = CVector::zeros(d);
    for i in 0..k {
        unit[idx(i, i)] = Complex64::new(1.0, 0.0);
    }
    let mut star = CMatrix::zeros(d, d);
    for i in 0..k {
        for j in 0..k {
            star[(idx(j, i), idx(i, j))] = Complex64::new(1.0, 0.0);
        }
    }
    // Action: vectorized conjugation M -> U M U*.
    let mut action = CMatrix::zeros(d, d);
    for l in 0..k {
        for m in 0..k {
            // image of E_lm
            let mut e = CMatrix::zeros(k, k);
            e[(l, m)] = Complex64::new(1.0, 0.0);
            let img = conjugator * e * conjugator.adjoint();
            for i in 0..k {
                for j in 0..k {
                    action[(idx(i, j), idx(l, m))] = img[(i, j)];
                }
            }
        }
    }
    FiniteDimAlgebra::new(format!("M_{k}"), left, unit, star, action, order)
}

/// Functions on `n` points with a permutation action `p -> perm[p]`.
pub fn function_algebra_with_permutation(
    n: usize,
    perm: &[usize],
    order: u32,
    label: impl Into<String>,
) -> Result<FiniteDimAlgebra, ObstructionError> {
    assert_eq!(perm.len(), n);
    let mut left = vec![CMatrix::zeros(n, n); n];
    for p in 0..n {
        left[p][(p, p)] = Complex64::new(1.0, 0.0);
    }
    let unit = CVector::from_element(n, Complex64::new(1.0, 0.0));
    let star = identity(n);
    let mut action = CMatrix::zeros(n, n);
    for p in 0..n {
        action[(perm[p], p)] = Complex64::new(1.0, 0.0);
    }
    FiniteDimAlgebra::new(label, left, unit, star, action, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::matrix::{clock_matrix, random_unitary, shift_matrix};
    use rand::SeedableRng;

    #[test]
    fn conjugation_by_the_clock_is_free() {
        for k in 2..=5usize {
            let alg = matrix_algebra_with_conjugation(k, &clock_matrix(k), k as u32).unwrap();
            let report = saturation_check(&alg).unwrap();
            assert!(report.free(), "k = {k}: {report:?}");
            for g in &report.per_gamma {
                assert_eq!(g.isotypic_dim, k);
                assert!(g.unit_residual < 1e-9);
            }
        }
    }

    #[test]
    fn trivial_action_on_two_points_is_not_free() {
        let alg = function_algebra_with_permutation(2, &[0, 1], 2, "C^2(trivial)").unwrap();
        let report = saturation_check(&alg).unwrap();
        assert!(!report.free());
        // gamma = 1 has an empty isotypic subspace.
        assert_eq!(report.per_gamma[1].isotypic_dim, 0);
        assert!(!report.per_gamma[1].full);
    }

    #[test]
    fn cyclic_shift_on_four_points_is_free() {
        let alg = function_algebra_with_permutation(4, &[1, 2, 3, 0], 4, "C(Z_4)").unwrap();
        let report = saturation_check(&alg).unwrap();
        assert!(report.free());
        for g in &report.per_gamma {
            // Each character subspace is spanned by one character function.
            assert_eq!(g.isotypic_dim, 1);
        }
    }

    #[test]
    fn shift_unitary_lies_in_the_first_isotypic_component() {
        let k = 4;
        let alg = matrix_algebra_with_conjugation(k, &clock_matrix(k), k as u32).unwrap();
        let w = shift_matrix(k);
        let mut v = CVector::zeros(k * k);
        for i in 0..k {
            for j in 0..k {
                v[i * k + j] = w[(i, j)];
            }
        }
        assert!(isotypic_residual(&alg, 1, &v) < 1e-12);
        assert!(isotypic_residual(&alg, 0, &v) > 0.5);
    }

    #[test]
    fn saturation_is_conjugation_invariant() {
        // Conjugating the action by an algebra automorphism preserves freeness.
        let k = 3;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let u = random_unitary(&mut rng, k);
            let conj = &u * clock_matrix(k) * u.adjoint();
            let alg = matrix_algebra_with_conjugation(k, &conj, k as u32).unwrap();
            assert!(saturation_check(&alg).unwrap().free());
        }
    }
}
