//! Concrete matrix representations of presented algebras, numeric evaluation
//! of symbolic elements, and the oracle that cross-checks the rewriting
//! engine.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::matrix::{
    clock_matrix, distance, identity, kron, opnorm, random_reflection, shift_matrix, CMatrix,
};
use crate::crossed::{CrossedPresentation, MatrixOverAlg};
use crate::error::NumericError;
use crate::poly::{Letter, NCPoly, Presentation};
use crate::scalar::Cyclotomic;
use crate::tolerance;

/// A matrix representation: one matrix per unstarred letter; starred letters
/// evaluate to conjugate transposes. Relations are verified at construction.
#[derive(Clone)]
pub struct Representation {
    label: String,
    pres: Arc<Presentation>,
    dim: usize,
    assign: BTreeMap<Letter, CMatrix>,
    tol: f64,
    /// Set when the assigned matrices are simultaneously diagonal, with one
    /// evaluation point per diagonal slot (pointwise function picture).
    diagonal_points: Option<Vec<Complex64>>,
}

impl Representation {
    /// Builds and validates a representation from `(generator name, matrix)`
    /// pairs.
    pub fn new(
        label: impl Into<String>,
        pres: &Arc<Presentation>,
        images: Vec<(&str, CMatrix)>,
        tol: f64,
    ) -> Result<Self, NumericError> {
        let label = label.into();
        let mut assign = BTreeMap::new();
        let mut dim = 0;
        for (name, m) in images {
            let l = pres.alphabet().letter(name)?;
            if dim == 0 {
                dim = m.nrows();
            }
            if m.nrows() != dim || m.ncols() != dim {
                return Err(NumericError::Dimension(format!(
                    "image of {name} is {}x{}, expected {dim}x{dim}",
                    m.nrows(),
                    m.ncols()
                )));
            }
            assign.insert(l, m);
        }
        if dim == 0 {
            return Err(NumericError::InvalidParams("no generator images".into()));
        }
        for gen in pres.alphabet().generators() {
            if !assign.contains_key(&gen) {
                return Err(NumericError::InvalidParams(format!(
                    "missing image for generator {}",
                    pres.alphabet().name(gen)
                )));
            }
        }
        let rep = Representation {
            label,
            pres: Arc::clone(pres),
            dim,
            assign,
            tol,
            diagonal_points: None,
        };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<(), NumericError> {
        // Rules with path-dependent coefficients are checked on a small grid.
        for rule in self.pres.rules() {
            let lhs = NCPoly::word(self.pres.alphabet(), rule.lhs.clone());
            let defect = lhs.sub(&rule.rhs);
            for &t0 in &[0.0, 0.37, 1.0] {
                let residual = opnorm(&self.eval(&defect, t0));
                if residual > self.tol {
                    return Err(NumericError::RelationResidual {
                        rep: self.label.clone(),
                        rule: rule.lhs.display(self.pres.alphabet()).to_string(),
                        residual,
                        tol: self.tol,
                    });
                }
                if defect.has_constant_coefficients() {
                    break;
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// For pointwise-diagonal representations, the evaluation points.
    pub fn diagonal_points(&self) -> Option<&[Complex64]> {
        self.diagonal_points.as_deref()
    }

    pub fn letter_matrix(&self, l: Letter) -> CMatrix {
        if let Some(m) = self.assign.get(&l) {
            return m.clone();
        }
        let base = self.pres.alphabet().star(l);
        self.assign[&base].adjoint()
    }

    /// Evaluates a polynomial at path parameter `t0` (with `s = +sqrt(1-t0^2)`).
    pub fn eval(&self, p: &NCPoly, t0: f64) -> CMatrix {
        let mut acc = CMatrix::zeros(self.dim, self.dim);
        for (w, c) in p.terms() {
            let mut m = identity(self.dim);
            for &l in w.letters() {
                m *= self.letter_matrix(l);
            }
            acc += m * c.eval(t0);
        }
        acc
    }

    /// Realizes a matrix over the algebra as a block matrix, block `(i, j)`
    /// being the evaluation of the `(i, j)` entry.
    pub fn realize(&self, m: &MatrixOverAlg, t0: f64) -> CMatrix {
        let k = m.size();
        let mut out = CMatrix::zeros(k * self.dim, k * self.dim);
        for i in 0..k {
            for j in 0..k {
                let block = self.eval(m.get(i, j), t0);
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        out[(i * self.dim + a, j * self.dim + b)] = block[(a, b)];
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({}, dim {})", self.label, self.dim)
    }
}

/// Max residual `||eval(p) - eval(normal_form(p))||` over a `t`-grid: the
/// soundness metric guarding the rewriting engine. The oracle is a falsifier:
/// a small residual does not prove equality beyond the represented picture.
pub fn oracle_compare(
    rep: &Representation,
    p: &NCPoly,
    pres: &Presentation,
    grid: &[f64],
) -> Result<f64, NumericError> {
    let nf = pres.normal_form(p)?;
    let mut max = 0.0f64;
    for &t0 in grid {
        let residual = distance(&rep.eval(p, t0), &rep.eval(&nf, t0));
        max = max.max(residual);
    }
    Ok(max)
}

/// An evenly spaced grid of `n >= 2` points in `[0, 1]`.
pub fn unit_grid(n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

/// Evaluation of circle functions at the given points: `z -> diag(points)`.
pub fn circle_points(
    pres: &Arc<Presentation>,
    points: &[Complex64],
) -> Result<Representation, NumericError> {
    if points.is_empty() {
        return Err(NumericError::InvalidParams(
            "need at least one point".into(),
        ));
    }
    for p in points {
        if (p.norm() - 1.0).abs() > tolerance::ASSIGNED {
            return Err(NumericError::InvalidParams(format!(
                "point {p} is not on the unit circle"
            )));
        }
    }
    let n = points.len();
    let z = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            points[i]
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let mut rep = Representation::new(
        format!("circle_points({n})"),
        pres,
        vec![("z", z)],
        tolerance::ASSIGNED,
    )?;
    rep.diagonal_points = Some(points.to_vec());
    Ok(rep)
}

/// Evaluation at the `n`-th roots of unity, ordered counterclockwise.
pub fn circle_roots(pres: &Arc<Presentation>, n: usize) -> Result<Representation, NumericError> {
    let points: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64))
        .collect();
    circle_points(pres, &points)
}

/// A seeded 2-dimensional representation of the free sphere:
/// `x -> cos(theta0) U`, `y -> sin(theta0) V` for random reflections `U, V`.
/// The sphere relation holds exactly since `U^2 = V^2 = 1`.
pub fn free_sphere_random(
    pres: &Arc<Presentation>,
    seed: u64,
    theta0: f64,
) -> Result<Representation, NumericError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = random_reflection(&mut rng, 2);
    let v = random_reflection(&mut rng, 2);
    let x = u.scale(theta0.cos());
    let y = v.scale(theta0.sin());
    Representation::new(
        format!("free_sphere_random(seed={seed})"),
        pres,
        vec![("x", x), ("y", y)],
        tolerance::ASSIGNED,
    )
}

/// The regular representation of the cyclic group algebra: `mu -> shift`.
pub fn cyclic_regular(pres: &Arc<Presentation>, k: u32) -> Result<Representation, NumericError> {
    Representation::new(
        format!("cyclic_regular({k})"),
        pres,
        vec![("mu", shift_matrix(k as usize))],
        tolerance::ASSIGNED,
    )
}

/// The defining representation of the clock/shift presentation of `M_k`.
pub fn clock_shift_rep(pres: &Arc<Presentation>, k: u32) -> Result<Representation, NumericError> {
    Representation::new(
        format!("clock_shift({k})"),
        pres,
        vec![
            ("v", clock_matrix(k as usize)),
            ("w", shift_matrix(k as usize)),
        ],
        tolerance::ASSIGNED,
    )
}

/// Clock/shift realization of a theta-sphere: one tensor leg per phase pair,
/// `z_j -> (1/sqrt n) X_j` with commuting legs producing the exact phases.
pub fn theta_sphere_weyl(
    pres: &Arc<Presentation>,
    n: usize,
    phases: &[((usize, usize), Cyclotomic)],
) -> Result<Representation, NumericError> {
    // Order and exponent of each phase: phase = zeta_q^m exactly.
    let mut legs: Vec<((usize, usize), u32, u32)> = Vec::new();
    for ((j, l), phase) in phases {
        if phase.is_one() {
            continue;
        }
        let mut order = 0u32;
        for q in 1..=(2 * phase.conductor()) {
            if phase.pow(q).is_one() {
                order = q;
                break;
            }
        }
        if order == 0 {
            return Err(NumericError::InvalidParams(format!(
                "phase for ({j},{l}) is not a root of unity"
            )));
        }
        let mut exponent = None;
        for m in 0..order {
            let candidate = Cyclotomic::root_of_unity(order, i64::from(m))
                .map_err(|e| NumericError::InvalidParams(e.to_string()))?;
            if candidate == *phase {
                exponent = Some(m);
                break;
            }
        }
        let m = exponent.ok_or_else(|| {
            NumericError::InvalidParams(format!("cannot resolve phase exponent for ({j},{l})"))
        })?;
        legs.push(((*j, *l), order, m));
    }

    let total_dim: usize = legs
        .iter()
        .map(|(_, q, _)| *q as usize)
        .product::<usize>()
        .max(1);
    let scale = 1.0 / (n as f64).sqrt();
    let mut images: Vec<(String, CMatrix)> = Vec::new();
    for gen in 1..=n {
        let mut x = identity(1);
        for &((j, l), q, m) in &legs {
            let factor = if gen == j {
                // clock^{q - m}: the inverse power makes z_l z_j = phase z_j z_l.
                let mut c = identity(q as usize);
                let clock = clock_matrix(q as usize);
                for _ in 0..(q - m) % q {
                    c *= &clock;
                }
                c
            } else if gen == l {
                shift_matrix(q as usize)
            } else {
                identity(q as usize)
            };
            x = kron(&x, &factor);
        }
        debug_assert_eq!(x.nrows(), total_dim);
        images.push((format!("z{gen}"), x.scale(scale)));
    }
    let refs: Vec<(&str, CMatrix)> = images
        .iter()
        .map(|(n, m)| (n.as_str(), m.clone()))
        .collect();
    Representation::new(
        format!("theta_sphere_weyl({n})"),
        pres,
        refs,
        tolerance::ASSIGNED,
    )
}

/// Composes a base representation with the matrix expansion: a base letter
/// `g` becomes `diag(rho(g), rho(beta^{-1} g), ...)` and the group unitary
/// the block shift. Twist images must be constant in the path parameters.
pub fn crossed_expand(
    cp: &CrossedPresentation,
    base_rep: &Representation,
) -> Result<Representation, NumericError> {
    let k = cp.order() as usize;
    let d = base_rep.dim();
    let full = cp.full();
    let base_alphabet = cp.base().alphabet();
    let mut images: Vec<(String, CMatrix)> = Vec::new();
    for gen in base_alphabet.generators() {
        let mut blocks: Vec<CMatrix> = Vec::with_capacity(k);
        let mut current = NCPoly::letter(base_alphabet, gen);
        for _ in 0..k {
            if !current.has_constant_coefficients() {
                return Err(NumericError::NonConstantImage {
                    letter: base_alphabet.name(gen).to_string(),
                });
            }
            blocks.push(base_rep.eval(&current, 0.0));
            let mut next = current.clone();
            for _ in 0..(cp.order() - 1) {
                next = cp.twist().apply_raw(&next);
            }
            current = cp.base().normal_form(&next).map_err(NumericError::from)?;
        }
        let mut m = CMatrix::zeros(k * d, k * d);
        for (i, b) in blocks.iter().enumerate() {
            for a in 0..d {
                for c in 0..d {
                    m[(i * d + a, i * d + c)] = b[(a, c)];
                }
            }
        }
        images.push((base_alphabet.name(gen).to_string(), m));
    }
    let mu_block = kron(&shift_matrix(k), &identity(d));
    images.push((full.alphabet().name(cp.mu()).to_string(), mu_block));
    let refs: Vec<(&str, CMatrix)> = images
        .iter()
        .map(|(n, m)| (n.as_str(), m.clone()))
        .collect();
    Representation::new(
        format!("expand({})", base_rep.label()),
        full,
        refs,
        tolerance::CONSTRUCTED,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::CyclicAction;
    use crate::poly::builtins;

    #[test]
    fn circle_roots_validate() {
        let pres = Arc::new(builtins::circle());
        let rep = circle_roots(&pres, 6).unwrap();
        let z = NCPoly::gen(pres.alphabet(), "z");
        let zs = NCPoly::gen(pres.alphabet(), "z*");
        let residual = distance(&rep.eval(&z.mul(&zs), 0.0), &identity(6));
        assert!(residual < 1e-12);
    }

    #[test]
    fn two_point_evaluation() {
        // z -> diag(1, -1): evaluation at a pair of points.
        let pres = Arc::new(builtins::circle());
        let points = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)];
        let rep = circle_points(&pres, &points).unwrap();
        let z = NCPoly::gen(pres.alphabet(), "z");
        let m = rep.eval(&z, 0.0);
        assert_eq!(m[(0, 0)], points[0]);
        assert_eq!(m[(1, 1)], points[1]);
        // Off-circle points are rejected.
        assert!(circle_points(&pres, &[Complex64::new(0.5, 0.0)]).is_err());
    }

    #[test]
    fn free_sphere_random_validates_exactly() {
        let pres = Arc::new(builtins::free_sphere());
        for seed in 0..5u64 {
            let rep = free_sphere_random(&pres, seed, std::f64::consts::FRAC_PI_4).unwrap();
            assert_eq!(rep.dim(), 2);
        }
    }

    #[test]
    fn weyl_rep_of_the_antisphere() {
        let phases = [((1usize, 2usize), Cyclotomic::from_integer(-1))];
        let pres = Arc::new(builtins::theta_sphere(2, &phases).unwrap());
        let rep = theta_sphere_weyl(&pres, 2, &phases).unwrap();
        assert_eq!(rep.dim(), 2);
        let z1 = NCPoly::gen(pres.alphabet(), "z1");
        let z2 = NCPoly::gen(pres.alphabet(), "z2");
        // z2 z1 + z1 z2 = 0 numerically.
        let anti = z2.mul(&z1).add(&z1.mul(&z2));
        assert!(opnorm(&rep.eval(&anti, 0.0)) < 1e-12);
    }

    #[test]
    fn weyl_rep_with_fourth_root_phase() {
        // z2 z1 = i z1 z2 realized on a conductor-4 leg.
        let i_phase = Cyclotomic::i();
        let phases = [((1usize, 2usize), i_phase.clone())];
        let pres = Arc::new(builtins::theta_sphere(2, &phases).unwrap());
        let rep = theta_sphere_weyl(&pres, 2, &phases).unwrap();
        assert_eq!(rep.dim(), 4);
        let z1 = NCPoly::gen(pres.alphabet(), "z1");
        let z2 = NCPoly::gen(pres.alphabet(), "z2");
        let defect = z2.mul(&z1).sub(&z1.mul(&z2).scale_cyclotomic(&i_phase));
        assert!(opnorm(&rep.eval(&defect, 0.0)) < 1e-12);
    }

    #[test]
    fn expanded_rep_validates_crossed_relations() {
        let base = Arc::new(builtins::circle());
        let conj = CyclicAction::conjugation(&base).unwrap();
        let cp = CrossedPresentation::new(Arc::clone(&base), conj, 2).unwrap();
        let base_rep = circle_roots(&base, 4).unwrap();
        let rep = crossed_expand(&cp, &base_rep).unwrap();
        assert_eq!(rep.dim(), 8);
        // mu maps to the 0/1 block shift.
        let mu_mat = rep.eval(&cp.mu_poly(), 0.0);
        let expected = kron(&shift_matrix(2), &identity(4));
        assert!(distance(&mu_mat, &expected) < 1e-12);
    }

    #[test]
    fn oracle_agrees_on_handmade_identities() {
        let base = Arc::new(builtins::free_sphere());
        let anti = CyclicAction::antipodal(&base);
        let cp = CrossedPresentation::new(Arc::clone(&base), anti, 2).unwrap();
        let base_rep = free_sphere_random(&base, 7, 0.9).unwrap();
        let rep = crossed_expand(&cp, &base_rep).unwrap();
        let alphabet = cp.full().alphabet();
        let x = NCPoly::gen(alphabet, "x");
        let mu = cp.mu_poly();
        // mu x mu + x reduces to 0; the oracle must agree on the whole grid.
        let p = mu.mul(&x).mul(&mu).add(&x);
        let residual = oracle_compare(&rep, &p, cp.full(), &unit_grid(11)).unwrap();
        assert!(residual < 1e-10, "residual {residual}");
    }
}
