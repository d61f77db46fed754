//! Unital *-homomorphism candidates between presented algebras: validation,
//! equivariance certification, application, and composition.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::action::CyclicAction;
use crate::crossed::CrossedPresentation;
use crate::error::{PolyError, StructureError};
use crate::poly::{Letter, NCPoly, Presentation};
use crate::scalar::{Cyclotomic, PathScalar};

/// Validation status of a [`GenHom`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomStatus {
    Unvalidated,
    Valid,
    Invalid,
}

/// A unital *-homomorphism candidate given by images of the domain's
/// unstarred generators. Starred letters map to starred images, so
/// `phi(g*) = phi(g)*` and `phi(1) = 1` hold by construction; what validation
/// checks is that every domain relation maps to zero in the codomain.
///
/// An optional scalar substitution `(t0, s0)` is applied to coefficients
/// before letters are mapped; this realizes the boundary evaluation maps of
/// path-parametrized algebras.
#[derive(Clone)]
pub struct GenHom {
    label: String,
    dom: Arc<Presentation>,
    cod: Arc<Presentation>,
    images: BTreeMap<Letter, NCPoly>,
    subst: Option<(Cyclotomic, Cyclotomic)>,
    status: HomStatus,
}

/// Defects collected by [`GenHom::validate`].
#[derive(Clone, Debug)]
pub struct HomReport {
    pub hom: String,
    pub relation_defects: Vec<(String, NCPoly)>,
    pub star_defects: Vec<(String, NCPoly)>,
}

impl HomReport {
    pub fn valid(&self) -> bool {
        self.relation_defects.is_empty() && self.star_defects.is_empty()
    }

    pub fn first_defect(&self) -> Option<String> {
        self.relation_defects
            .iter()
            .chain(&self.star_defects)
            .next()
            .map(|(what, d)| format!("{what}: {d}"))
    }
}

/// Result of an equivariance check: empty defect list means the square
/// commutes on every generator.
#[derive(Clone, Debug)]
pub struct EquivarianceReport {
    pub hom: String,
    pub dom_action: String,
    pub cod_action: String,
    pub defects: Vec<(String, NCPoly)>,
}

impl EquivarianceReport {
    pub fn pass(&self) -> bool {
        self.defects.is_empty()
    }

    pub fn first_defect(&self) -> Option<String> {
        self.defects.first().map(|(g, d)| format!("on {g}: {d}"))
    }
}

impl GenHom {
    /// Builds an unvalidated candidate from `(generator name, image)` pairs.
    /// Unlisted generators map to the letter of the same name in the codomain
    /// when one exists.
    pub fn new(
        label: impl Into<String>,
        dom: &Arc<Presentation>,
        cod: &Arc<Presentation>,
        images: &[(&str, NCPoly)],
    ) -> Result<Self, PolyError> {
        let mut map = BTreeMap::new();
        for (name, img) in images {
            let l = dom.alphabet().letter(name)?;
            map.insert(l, img.clone());
        }
        for gen in dom.alphabet().generators() {
            if map.contains_key(&gen) {
                continue;
            }
            let name = dom.alphabet().name(gen);
            let target = cod.alphabet().letter(name)?;
            map.insert(gen, NCPoly::letter(cod.alphabet(), target));
        }
        Ok(GenHom {
            label: label.into(),
            dom: Arc::clone(dom),
            cod: Arc::clone(cod),
            images: map,
            subst: None,
            status: HomStatus::Unvalidated,
        })
    }

    /// The identity endomorphism.
    pub fn identity(pres: &Arc<Presentation>) -> Self {
        let mut hom = Self::new("id", pres, pres, &[]).expect("letters resolve");
        hom.status = HomStatus::Valid;
        hom
    }

    pub fn with_subst(mut self, t0: Cyclotomic, s0: Cyclotomic) -> Self {
        self.subst = Some((t0, s0));
        self.status = HomStatus::Unvalidated;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dom(&self) -> &Arc<Presentation> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Presentation> {
        &self.cod
    }

    pub fn status(&self) -> &HomStatus {
        &self.status
    }

    pub fn image(&self, gen: Letter) -> &NCPoly {
        &self.images[&gen]
    }

    /// Applies the map without the validity gate; used during validation.
    fn apply_raw(&self, p: &NCPoly) -> Result<NCPoly, PolyError> {
        let p = match &self.subst {
            Some((t0, s0)) => p.subst_scalars(t0, s0)?,
            None => p.clone(),
        };
        Ok(p.map_letters(self.cod.alphabet(), &|l| {
            if self.dom.alphabet().is_generator(l) {
                self.images[&l].clone()
            } else {
                self.images[&self.dom.alphabet().star(l)].star()
            }
        }))
    }

    /// Checks that every domain relation maps to zero and that self-adjoint
    /// generators have self-adjoint images. Updates the status.
    pub fn validate(&mut self) -> Result<HomReport, PolyError> {
        let mut report = HomReport {
            hom: self.label.clone(),
            relation_defects: Vec::new(),
            star_defects: Vec::new(),
        };
        for rule in self.dom.rules() {
            let lhs = NCPoly::word(self.dom.alphabet(), rule.lhs.clone());
            let img = self.apply_raw(&lhs)?.sub(&self.apply_raw(&rule.rhs)?);
            let defect = self.cod.normal_form(&img)?;
            if !defect.is_zero() {
                report
                    .relation_defects
                    .push((rule.lhs.display(self.dom.alphabet()).to_string(), defect));
            }
        }
        for gen in self.dom.alphabet().generators() {
            if self.dom.alphabet().is_self_adjoint(gen) {
                let img = &self.images[&gen];
                let defect = self.cod.normal_form(&img.star().sub(img))?;
                if !defect.is_zero() {
                    report
                        .star_defects
                        .push((self.dom.alphabet().name(gen).to_string(), defect));
                }
            }
        }
        self.status = if report.valid() {
            HomStatus::Valid
        } else {
            HomStatus::Invalid
        };
        Ok(report)
    }

    /// Validates and errors out unless the candidate is a *-homomorphism.
    pub fn validated(mut self) -> Result<Self, StructureError> {
        let report = self.validate().map_err(StructureError::from)?;
        if report.valid() {
            Ok(self)
        } else {
            Err(StructureError::InvalidHom {
                hom: self.label.clone(),
                detail: report.first_defect().unwrap_or_default(),
            })
        }
    }

    /// Applies the validated map and reduces in the codomain.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly, StructureError> {
        if self.status != HomStatus::Valid {
            return Err(StructureError::NotValidated {
                hom: self.label.clone(),
            });
        }
        let img = self.apply_raw(p).map_err(StructureError::from)?;
        self.cod.normal_form(&img).map_err(StructureError::from)
    }

    /// `outer . inner`, with images reduced in the outer codomain.
    pub fn compose(outer: &GenHom, inner: &GenHom) -> Result<GenHom, StructureError> {
        if outer.status != HomStatus::Valid {
            return Err(StructureError::NotValidated {
                hom: outer.label.clone(),
            });
        }
        if inner.status != HomStatus::Valid {
            return Err(StructureError::NotValidated {
                hom: inner.label.clone(),
            });
        }
        if !inner.cod.alphabet().compatible(outer.dom.alphabet()) {
            return Err(StructureError::Mismatch(format!(
                "cannot compose {} . {}: inner codomain {} is not outer domain {}",
                outer.label,
                inner.label,
                inner.cod.label(),
                outer.dom.label()
            )));
        }
        let mut images = BTreeMap::new();
        for gen in inner.dom.alphabet().generators() {
            let img = inner.images[&gen].embed(outer.dom.alphabet());
            images.insert(gen, outer.apply(&img)?);
        }
        let mut hom = GenHom {
            label: format!("{}.{}", outer.label, inner.label),
            dom: Arc::clone(&inner.dom),
            cod: Arc::clone(&outer.cod),
            images,
            subst: inner.subst.clone(),
            status: HomStatus::Unvalidated,
        };
        hom.validate().map_err(StructureError::from)?;
        Ok(hom)
    }

    /// Checks `phi(alpha_dom(g)) = alpha_cod(phi(g))` for every generator.
    pub fn equivariance_check(
        &self,
        dom_action: &CyclicAction,
        cod_action: &CyclicAction,
    ) -> Result<EquivarianceReport, StructureError> {
        if self.status != HomStatus::Valid {
            return Err(StructureError::NotValidated {
                hom: self.label.clone(),
            });
        }
        let mut defects = Vec::new();
        for gen in self.dom.alphabet().generators() {
            let g = NCPoly::letter(self.dom.alphabet(), gen);
            let through_dom = self.apply(&dom_action.apply_raw(&g))?;
            let through_cod = self
                .cod
                .normal_form(&cod_action.apply_raw(&self.apply(&g)?))
                .map_err(StructureError::from)?;
            let defect = self
                .cod
                .normal_form(&through_dom.sub(&through_cod))
                .map_err(StructureError::from)?;
            if !defect.is_zero() {
                defects.push((self.dom.alphabet().name(gen).to_string(), defect));
            }
        }
        Ok(EquivarianceReport {
            hom: self.label.clone(),
            dom_action: dom_action.label().to_string(),
            cod_action: cod_action.label().to_string(),
            defects,
        })
    }

    /// Generator-level equality after reduction in the codomain.
    pub fn agrees_with(&self, other: &GenHom) -> Result<bool, StructureError> {
        if !self.dom.alphabet().compatible(other.dom.alphabet())
            || !self.cod.alphabet().compatible(other.cod.alphabet())
        {
            return Ok(false);
        }
        for gen in self.dom.alphabet().generators() {
            let a = self
                .cod
                .normal_form(&self.images[&gen])
                .map_err(StructureError::from)?;
            let b = self
                .cod
                .normal_form(&other.images[&gen])
                .map_err(StructureError::from)?;
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for GenHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GenHom({}: {} -> {}, {:?})",
            self.label,
            self.dom.label(),
            self.cod.label(),
            self.status
        )
    }
}

/// The rotation family `R_{(s,t)}: x -> s x + t y, y -> -t x + s y` on the
/// free sphere, with the symbolic relation `s^2 + t^2 = 1`. A one-parameter
/// family of automorphisms connecting the identity (t = 0) to the quarter
/// turn (t = 1); composing it with itself reaches the antipodal map.
pub fn rotation_family(pres: &Arc<Presentation>) -> Result<GenHom, StructureError> {
    let x = NCPoly::gen(pres.alphabet(), "x");
    let y = NCPoly::gen(pres.alphabet(), "y");
    let s = PathScalar::s();
    let t = PathScalar::t();
    let hom = GenHom::new(
        "rotation(s,t)",
        pres,
        pres,
        &[
            ("x", x.scale(&s).add(&y.scale(&t))),
            ("y", x.scale(&t).neg().add(&y.scale(&s))),
        ],
    )
    .map_err(StructureError::from)?;
    hom.validated()
}

/// The inverse rotation `R_{(s,-t)}`.
pub fn rotation_family_inverse(pres: &Arc<Presentation>) -> Result<GenHom, StructureError> {
    let x = NCPoly::gen(pres.alphabet(), "x");
    let y = NCPoly::gen(pres.alphabet(), "y");
    let s = PathScalar::s();
    let t = PathScalar::t();
    let hom = GenHom::new(
        "rotation(s,-t)",
        pres,
        pres,
        &[
            ("x", x.scale(&s).sub(&y.scale(&t))),
            ("y", x.scale(&t).add(&y.scale(&s))),
        ],
    )
    .map_err(StructureError::from)?;
    hom.validated()
}

/// The rotation at an exact point `(s0, t0)` with `s0^2 + t0^2 = 1`.
/// `rotation_at(-1, 0)` is the antipodal automorphism.
pub fn rotation_at(
    pres: &Arc<Presentation>,
    s0: &Cyclotomic,
    t0: &Cyclotomic,
) -> Result<GenHom, StructureError> {
    let family = rotation_family(pres)?;
    let mut images = Vec::new();
    for gen in pres.alphabet().generators() {
        let img = family
            .image(pres.alphabet().letter(pres.alphabet().name(gen)).unwrap())
            .subst_scalars(t0, s0)
            .map_err(|e| StructureError::from(PolyError::from(e)))?;
        images.push((pres.alphabet().name(gen).to_string(), img));
    }
    let refs: Vec<(&str, NCPoly)> = images
        .iter()
        .map(|(n, p)| (n.as_str(), p.clone()))
        .collect();
    let hom = GenHom::new(format!("rotation({s0},{t0})"), pres, pres, &refs)
        .map_err(StructureError::from)?;
    hom.validated()
}

/// Boundary evaluation `t -> 1, s -> 0` as an endomorphism of a crossed
/// presentation; on twisted-join elements it lands in the base copy.
pub fn ev_t1(cp: &CrossedPresentation) -> GenHom {
    GenHom::new("ev_t1", cp.full(), cp.full(), &[])
        .expect("identity images resolve")
        .with_subst(Cyclotomic::one(), Cyclotomic::zero())
        .validated()
        .expect("scalar substitution preserves relations")
}

/// Boundary evaluation `t -> 0, s -> 1`; on twisted-join elements it lands in
/// the group algebra copy.
pub fn ev_t0(cp: &CrossedPresentation) -> GenHom {
    GenHom::new("ev_t0", cp.full(), cp.full(), &[])
        .expect("identity images resolve")
        .with_subst(Cyclotomic::zero(), Cyclotomic::one())
        .validated()
        .expect("scalar substitution preserves relations")
}

/// The quotient map from the free sphere onto the circle:
/// `x -> (z + z*)/2`, `y -> (z - z*)/(2i)`.
pub fn sphere_to_circle(
    sphere: &Arc<Presentation>,
    circle: &Arc<Presentation>,
) -> Result<GenHom, StructureError> {
    let z = NCPoly::gen(circle.alphabet(), "z");
    let zs = NCPoly::gen(circle.alphabet(), "z*");
    let half = PathScalar::rational(1, 2);
    let i = Cyclotomic::i();
    // 1/(2i) = -i/2
    let minus_i_half = PathScalar::from_cyclotomic(i.neg()).mul(&half);
    let hom = GenHom::new(
        "sphere->circle",
        sphere,
        circle,
        &[
            ("x", z.add(&zs).scale(&half)),
            ("y", z.sub(&zs).scale(&minus_i_half)),
        ],
    )
    .map_err(StructureError::from)?;
    hom.validated()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::builtins;

    #[test]
    fn rotation_family_validates_and_inverts() {
        let pres = Arc::new(builtins::free_sphere());
        let rot = rotation_family(&pres).unwrap();
        let inv = rotation_family_inverse(&pres).unwrap();
        let composed = GenHom::compose(&inv, &rot).unwrap();
        assert!(composed.agrees_with(&GenHom::identity(&pres)).unwrap());
        let composed2 = GenHom::compose(&rot, &inv).unwrap();
        assert!(composed2.agrees_with(&GenHom::identity(&pres)).unwrap());
    }

    #[test]
    fn rotation_at_minus_one_is_antipodal() {
        let pres = Arc::new(builtins::free_sphere());
        let r = rotation_at(&pres, &Cyclotomic::from_integer(-1), &Cyclotomic::zero()).unwrap();
        let x = NCPoly::gen(pres.alphabet(), "x");
        let y = NCPoly::gen(pres.alphabet(), "y");
        let x_l = pres.alphabet().letter("x").unwrap();
        let y_l = pres.alphabet().letter("y").unwrap();
        assert_eq!(r.image(x_l), &x.neg());
        assert_eq!(r.image(y_l), &y.neg());
    }

    #[test]
    fn quotient_onto_circle_validates() {
        let sphere = Arc::new(builtins::free_sphere());
        let circle = Arc::new(builtins::circle());
        let q = sphere_to_circle(&sphere, &circle).unwrap();
        assert_eq!(*q.status(), HomStatus::Valid);
        // x^2 + y^2 maps to 1.
        let x = NCPoly::gen(sphere.alphabet(), "x");
        let y = NCPoly::gen(sphere.alphabet(), "y");
        let img = q.apply(&x.mul(&x).add(&y.mul(&y))).unwrap();
        assert!(img.is_one());
    }

    #[test]
    fn relation_breaking_candidate_is_invalid() {
        let sphere = Arc::new(builtins::free_sphere());
        let circle = Arc::new(builtins::circle());
        let z = NCPoly::gen(circle.alphabet(), "z");
        let mut bad = GenHom::new(
            "bad",
            &sphere,
            &circle,
            &[("x", z), ("y", NCPoly::zero(circle.alphabet()))],
        )
        .unwrap();
        let report = bad.validate().unwrap();
        assert!(!report.valid());
        // x -> z is not even self-adjoint, and x^2 + y^2 - 1 -> z^2 - 1 != 0.
        assert!(!report.star_defects.is_empty());
        assert_eq!(*bad.status(), HomStatus::Invalid);
        assert!(bad.apply(&NCPoly::one(sphere.alphabet())).is_err());
    }

    #[test]
    fn equivariance_of_identity() {
        let pres = Arc::new(builtins::circle());
        let id = GenHom::identity(&pres);
        let anti = CyclicAction::antipodal(&pres);
        let report = id.equivariance_check(&anti, &anti).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn multiplicativity_on_samples() {
        use crate::poly::sampling::{random_poly, SampleConfig};
        use rand::SeedableRng;
        let sphere = Arc::new(builtins::free_sphere());
        let circle = Arc::new(builtins::circle());
        let q = sphere_to_circle(&sphere, &circle).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let cfg = SampleConfig {
            max_word_len: 4,
            ..Default::default()
        };
        for _ in 0..25 {
            let p1 = random_poly(&mut rng, sphere.alphabet(), &cfg);
            let p2 = random_poly(&mut rng, sphere.alphabet(), &cfg);
            let lhs = q.apply(&p1.mul(&p2)).unwrap();
            let rhs = circle
                .normal_form(&q.apply(&p1).unwrap().mul(&q.apply(&p2).unwrap()))
                .unwrap();
            assert_eq!(lhs, rhs);
            // Star compatibility.
            let star_lhs = q.apply(&p1.star()).unwrap();
            let star_rhs = circle.normal_form(&q.apply(&p1).unwrap().star()).unwrap();
            assert_eq!(star_lhs, star_rhs);
        }
    }
}
