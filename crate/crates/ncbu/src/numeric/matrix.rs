//! Dense complex matrix helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;
use rand::Rng;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub fn zeros(n: usize) -> CMatrix {
    CMatrix::zeros(n, n)
}

pub fn dagger(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

/// Operator norm (largest singular value).
pub fn opnorm(m: &CMatrix) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    m.clone().svd(false, false).singular_values.max()
}

/// `||a - b||` in operator norm.
pub fn distance(a: &CMatrix, b: &CMatrix) -> f64 {
    opnorm(&(a - b))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let sym = (m + m.adjoint()).scale(0.5);
    let mut vals: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Residual of the unitarity relation `m* m = 1`.
pub fn unitarity_residual(m: &CMatrix) -> f64 {
    let n = m.nrows();
    distance(&(m.adjoint() * m), &identity(n))
}

/// Residual of the projection relations `m^2 = m = m*`.
pub fn projection_residual(m: &CMatrix) -> f64 {
    let idem = distance(&(m * m), m);
    let herm = distance(&m.adjoint(), m);
    idem.max(herm)
}

/// Kronecker product with the left factor indexing blocks:
/// `(a ⊗ b)[(i p + k), (j p + l)] = a[i,j] b[k,l]` where `p = dim b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = CMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let scale = a[(i, j)];
            if scale == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = scale * b[(k, l)];
                }
            }
        }
    }
    out
}

/// The cyclic shift on C^k: `e_n -> e_{n+1 mod k}`.
pub fn shift_matrix(k: usize) -> CMatrix {
    CMatrix::from_fn(k, k, |i, j| {
        if i == (j + 1) % k {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// The clock matrix `diag(1, omega, ..., omega^{k-1})` with `omega = e^{2 pi i / k}`.
pub fn clock_matrix(k: usize) -> CMatrix {
    CMatrix::from_fn(k, k, |i, j| {
        if i == j {
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * i as f64 / k as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// A Haar-ish random unitary from the QR decomposition of a complex
/// Gaussian sample.
pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> CMatrix {
    let g = CMatrix::from_fn(n, n, |_, _| Complex64::new(gauss(rng), gauss(rng)));
    let qr = g.qr();
    qr.q()
}

/// A random self-adjoint unitary with signature `diag(1, -1, ...)` conjugated
/// by a random unitary: a reflection when `n = 2`.
pub fn random_reflection<R: Rng>(rng: &mut R, n: usize) -> CMatrix {
    let q = random_unitary(rng, n);
    let d = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            // Alternate signs so both eigenvalues occur.
            Complex64::new(if i % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    &q * d * q.adjoint()
}

fn gauss<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller.
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Unitary interpolation `exp(i t H)` for Hermitian `H`, via the spectral
/// decomposition.
pub fn exp_i_hermitian(h: &CMatrix, t: f64) -> CMatrix {
    let sym = (h + h.adjoint()).scale(0.5);
    let eig = sym.symmetric_eigen();
    let n = h.nrows();
    let mut d = CMatrix::zeros(n, n);
    for i in 0..n {
        d[(i, i)] = Complex64::from_polar(1.0, t * eig.eigenvalues[i]);
    }
    &eig.eigenvectors * d * eig.eigenvectors.adjoint()
}

/// Determinant via LU.
pub fn det(m: &CMatrix) -> Complex64 {
    m.determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn clock_and_shift_weyl_relation() {
        for k in [2usize, 3, 5] {
            let c = clock_matrix(k);
            let s = shift_matrix(k);
            let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / k as f64);
            // C S = omega S C
            let lhs = &c * &s;
            let rhs = (&s * &c).scale(1.0) * omega;
            assert!(distance(&lhs, &rhs) < 1e-12, "k = {k}");
            assert!(unitarity_residual(&c) < 1e-12);
            assert!(unitarity_residual(&s) < 1e-12);
        }
    }

    #[test]
    fn reflections_square_to_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let r = random_reflection(&mut rng, 2);
            assert!(distance(&(&r * &r), &identity(2)) < 1e-12);
            assert!(distance(&r.adjoint(), &r) < 1e-12);
        }
    }

    #[test]
    fn exp_interpolates_a_swap() {
        // H = pi P_- gives exp(i t H) from I to the reflection 2P_+ - 1.
        let swap = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let p_minus = (identity(2) - &swap).scale(0.5);
        let h = p_minus.scale(std::f64::consts::PI);
        assert!(distance(&exp_i_hermitian(&h, 0.0), &identity(2)) < 1e-12);
        assert!(distance(&exp_i_hermitian(&h, 1.0), &swap) < 1e-12);
        assert!(unitarity_residual(&exp_i_hermitian(&h, 0.37)) < 1e-12);
    }

    #[test]
    fn hermitian_eigenvalues_of_rank_one_projection() {
        let k = 4;
        let t = CMatrix::from_fn(k, k, |_, _| Complex64::new(1.0 / k as f64, 0.0));
        let eigs = hermitian_eigenvalues(&t);
        assert!((eigs[k - 1] - 1.0).abs() < 1e-12);
        for e in &eigs[..k - 1] {
            assert!(e.abs() < 1e-12);
        }
    }
}
