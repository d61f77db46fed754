//! Twisted-join elements: path-parametrized crossed-product polynomials with
//! boundary conditions `f(0) in C*(Gamma)`, `f(1) in A`, the induced action
//! on them, and induced morphisms between joins.
//!
//! Elements here are polynomial paths in `(t, s)`; arbitrary continuous paths
//! appear only in sampled form on the obstruction side.

use std::fmt;
use std::sync::Arc;

use crate::action::CyclicAction;
use crate::crossed::{combined_dual_action, CrossedPresentation};
use crate::error::{PolyError, StructureError};
use crate::hom::GenHom;
use crate::poly::{NCPoly, Word};
use crate::scalar::{Cyclotomic, PathScalar};

/// An element of the twisted join, represented by a polynomial body over the
/// crossed presentation with [`PathScalar`] coefficients.
#[derive(Clone)]
pub struct JoinElement {
    cp: Arc<CrossedPresentation>,
    body: NCPoly,
}

/// Outcome of a boundary check.
#[derive(Clone, Debug)]
pub enum BoundaryVerdict {
    /// Both endpoint conditions hold; the endpoint normal forms are returned.
    Pass { at0: NCPoly, at1: NCPoly },
    /// An endpoint condition fails, with the offending normal-form term.
    Fail {
        endpoint: u8,
        witness_word: String,
        witness_coeff: PathScalar,
    },
}

impl BoundaryVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, BoundaryVerdict::Pass { .. })
    }

    pub fn witness(&self) -> Option<String> {
        match self {
            BoundaryVerdict::Pass { .. } => None,
            BoundaryVerdict::Fail {
                endpoint,
                witness_word,
                witness_coeff,
            } => Some(format!(
                "at t={endpoint}: term ({witness_coeff}) {witness_word}"
            )),
        }
    }
}

impl JoinElement {
    pub fn new(cp: &Arc<CrossedPresentation>, body: NCPoly) -> Self {
        JoinElement {
            cp: Arc::clone(cp),
            body,
        }
    }

    pub fn body(&self) -> &NCPoly {
        &self.body
    }

    pub fn crossed(&self) -> &Arc<CrossedPresentation> {
        &self.cp
    }

    pub fn add(&self, other: &JoinElement) -> JoinElement {
        JoinElement::new(&self.cp, self.body.add(&other.body))
    }

    pub fn mul(&self, other: &JoinElement) -> JoinElement {
        JoinElement::new(&self.cp, self.body.mul(&other.body))
    }

    pub fn star(&self) -> JoinElement {
        JoinElement::new(&self.cp, self.body.star())
    }

    pub fn scale(&self, c: &PathScalar) -> JoinElement {
        JoinElement::new(&self.cp, self.body.scale(c))
    }

    /// Endpoint substitution `t -> 0, s -> 1` followed by reduction.
    pub fn at_zero(&self) -> Result<NCPoly, PolyError> {
        let sub = self
            .body
            .subst_scalars(&Cyclotomic::zero(), &Cyclotomic::one())?;
        self.cp.full().normal_form(&sub)
    }

    /// Endpoint substitution `t -> 1, s -> 0` followed by reduction.
    pub fn at_one(&self) -> Result<NCPoly, PolyError> {
        let sub = self
            .body
            .subst_scalars(&Cyclotomic::one(), &Cyclotomic::zero())?;
        self.cp.full().normal_form(&sub)
    }

    /// Checks the boundary conditions: at `t = 0` only group-unitary words
    /// may remain; at `t = 1` no group letter may remain.
    pub fn boundary_check(&self) -> Result<BoundaryVerdict, PolyError> {
        let alphabet = self.cp.full().alphabet();
        let mu = self.cp.mu();
        let mu_star = alphabet.star(mu);

        let at0 = self.at_zero()?;
        for (w, c) in at0.terms() {
            let pure_group = w.letters().iter().all(|&l| l == mu || l == mu_star);
            if !pure_group {
                return Ok(BoundaryVerdict::Fail {
                    endpoint: 0,
                    witness_word: w.display(alphabet).to_string(),
                    witness_coeff: c.clone(),
                });
            }
        }
        let at1 = self.at_one()?;
        for (w, c) in at1.terms() {
            let mu_free = w.letters().iter().all(|&l| l != mu && l != mu_star);
            if !mu_free {
                return Ok(BoundaryVerdict::Fail {
                    endpoint: 1,
                    witness_word: w.display(alphabet).to_string(),
                    witness_coeff: c.clone(),
                });
            }
        }
        Ok(BoundaryVerdict::Pass { at0, at1 })
    }
}

impl fmt::Debug for JoinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JoinElement({})", self.body)
    }
}

/// Applies the j-th power of the combined action pointwise (the path
/// parameters are untouched).
pub fn tilde_action_apply(
    e: &JoinElement,
    alpha: &CyclicAction,
    j: u32,
) -> Result<JoinElement, StructureError> {
    let combined = combined_dual_action(e.crossed(), alpha)?;
    let body = combined
        .apply(j, e.body(), e.crossed().full())
        .map_err(StructureError::from)?;
    Ok(JoinElement::new(e.crossed(), body))
}

/// Lifts a twist-equivariant homomorphism `phi: A -> B` to the crossed
/// products (and hence to the joins, pointwise): `psi(a) = phi(a)`,
/// `psi(mu) = mu`. Rejects candidates that are not intertwining the twists,
/// returning the defect polynomial.
pub fn induce_join_hom(
    phi: &GenHom,
    cp_dom: &CrossedPresentation,
    cp_cod: &CrossedPresentation,
) -> Result<GenHom, StructureError> {
    if cp_dom.order() != cp_cod.order() {
        return Err(StructureError::Mismatch(
            "joins have different group orders".into(),
        ));
    }
    // Hypothesis: phi is (beta_dom, beta_cod)-equivariant.
    let base_dom = cp_dom.base();
    for gen in base_dom.alphabet().generators() {
        let g = NCPoly::letter(base_dom.alphabet(), gen);
        let lhs = phi.apply(&cp_dom.twist().apply_raw(&g))?;
        let rhs = cp_cod
            .base()
            .normal_form(&cp_cod.twist().apply_raw(&phi.apply(&g)?))
            .map_err(StructureError::from)?;
        let defect = cp_cod
            .base()
            .normal_form(&lhs.sub(&rhs))
            .map_err(StructureError::from)?;
        if !defect.is_zero() {
            return Err(StructureError::NotEquivariant {
                letter: base_dom.alphabet().name(gen).to_string(),
                defect: defect.to_string(),
            });
        }
    }
    let cod_alphabet = cp_cod.full().alphabet();
    let mut images: Vec<(String, NCPoly)> = Vec::new();
    for gen in base_dom.alphabet().generators() {
        images.push((
            base_dom.alphabet().name(gen).to_string(),
            phi.image(gen).embed(cod_alphabet),
        ));
    }
    images.push((
        cp_dom.full().alphabet().name(cp_dom.mu()).to_string(),
        cp_cod.mu_poly(),
    ));
    let refs: Vec<(&str, NCPoly)> = images
        .iter()
        .map(|(n, p)| (n.as_str(), p.clone()))
        .collect();
    let psi = GenHom::new(
        format!("J[{}]", phi.label()),
        cp_dom.full(),
        cp_cod.full(),
        &refs,
    )
    .map_err(StructureError::from)?;
    psi.validated()
}

/// Certifies the second half of the induction: when `phi` also intertwines
/// free actions `alpha` on both bases, the induced morphism intertwines the
/// combined actions on the crossed products (and hence the joins).
pub fn certify_combined_equivariance(
    psi: &GenHom,
    cp_dom: &CrossedPresentation,
    cp_cod: &CrossedPresentation,
    alpha_dom: &CyclicAction,
    alpha_cod: &CyclicAction,
) -> Result<crate::hom::EquivarianceReport, StructureError> {
    let combined_dom = combined_dual_action(cp_dom, alpha_dom)?;
    let combined_cod = combined_dual_action(cp_cod, alpha_cod)?;
    psi.equivariance_check(&combined_dom, &combined_cod)
}

/// Convenience: the unitary path of the circle-with-conjugation construction,
/// `f = t z + i s mu`, as a join element.
pub fn circle_conjugation_unitary(cp: &Arc<CrossedPresentation>) -> JoinElement {
    let alphabet = cp.full().alphabet();
    let z = NCPoly::gen(alphabet, "z");
    let mu = cp.mu_poly();
    let t = PathScalar::t();
    let is = PathScalar::s().scale(&Cyclotomic::i());
    JoinElement::new(cp, z.scale(&t).add(&mu.scale(&is)))
}

/// The self-adjoint pair of the free-sphere construction:
/// `a_t = t x + (s/sqrt 2) mu`, `b_t = t y + (s/sqrt 2) mu`.
pub fn free_sphere_pair(cp: &Arc<CrossedPresentation>) -> (JoinElement, JoinElement) {
    let alphabet = cp.full().alphabet();
    let x = NCPoly::gen(alphabet, "x");
    let y = NCPoly::gen(alphabet, "y");
    let mu = cp.mu_poly();
    let t = PathScalar::t();
    let s_over_sqrt2 = PathScalar::s().scale(&crate::scalar::inv_sqrt2());
    let a = JoinElement::new(cp, x.scale(&t).add(&mu.scale(&s_over_sqrt2)));
    let b = JoinElement::new(cp, y.scale(&t).add(&mu.scale(&s_over_sqrt2)));
    (a, b)
}

/// The self-adjoint pair of the circle construction, `a_t = t x`,
/// `b_t = t y + s mu`, with `x = (z + z*)/2` and `y = (z - z*)/(2i)`.
pub fn circle_pair(cp: &Arc<CrossedPresentation>) -> (JoinElement, JoinElement) {
    let alphabet = cp.full().alphabet();
    let z = NCPoly::gen(alphabet, "z");
    let zs = NCPoly::gen(alphabet, "z*");
    let half = PathScalar::rational(1, 2);
    let minus_i_half = PathScalar::from_cyclotomic(Cyclotomic::i().neg()).mul(&half);
    let x = z.add(&zs).scale(&half);
    let y = z.sub(&zs).scale(&minus_i_half);
    let mu = cp.mu_poly();
    let t = PathScalar::t();
    let s = PathScalar::s();
    let a = JoinElement::new(cp, x.scale(&t));
    let b = JoinElement::new(cp, y.scale(&t).add(&mu.scale(&s)));
    (a, b)
}

/// A word consisting of group letters only, for endpoint assertions.
pub fn is_group_word(cp: &CrossedPresentation, w: &Word) -> bool {
    let mu = cp.mu();
    let mu_star = cp.full().alphabet().star(mu);
    w.letters().iter().all(|&l| l == mu || l == mu_star)
}
