//! Actions of Z/kZ on presented algebras: validation that generator images
//! define an order-k automorphism, iterated application, and isotypic
//! (spectral subspace) projections.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::BigRational;

use crate::error::{PolyError, StructureError};
use crate::poly::{Alphabet, Letter, NCPoly, Presentation};
use crate::scalar::{Cyclotomic, PathScalar};

/// A Z/kZ action given by images of the unstarred generator letters.
/// Starred letters map to the starred images; coefficients are fixed.
#[derive(Clone)]
pub struct CyclicAction {
    label: String,
    k: u32,
    alphabet: Arc<Alphabet>,
    images: BTreeMap<Letter, NCPoly>,
}

/// Per-relation defects gathered by [`CyclicAction::validate`]. The action is
/// valid exactly when every listed defect is empty.
#[derive(Clone, Debug)]
pub struct ActionReport {
    pub action: String,
    /// (rule display, defect normal form) for each violated relation.
    pub relation_defects: Vec<(String, NCPoly)>,
    /// Self-adjoint generators whose image is not self-adjoint.
    pub star_defects: Vec<(String, NCPoly)>,
    /// Generators on which the k-fold composite is not the identity.
    pub order_defects: Vec<(String, NCPoly)>,
}

impl ActionReport {
    pub fn valid(&self) -> bool {
        self.relation_defects.is_empty()
            && self.star_defects.is_empty()
            && self.order_defects.is_empty()
    }

    pub fn first_defect(&self) -> Option<String> {
        self.relation_defects
            .iter()
            .chain(&self.star_defects)
            .chain(&self.order_defects)
            .next()
            .map(|(what, d)| format!("{what}: {d}"))
    }
}

impl CyclicAction {
    /// Builds an action from `(generator name, image)` pairs. Generators not
    /// listed are fixed.
    pub fn new(
        label: impl Into<String>,
        k: u32,
        pres: &Presentation,
        images: &[(&str, NCPoly)],
    ) -> Result<Self, PolyError> {
        let alphabet = Arc::clone(pres.alphabet());
        let mut map = BTreeMap::new();
        for gen in alphabet.generators() {
            map.insert(gen, NCPoly::letter(&alphabet, gen));
        }
        for (name, img) in images {
            let l = alphabet.letter(name)?;
            map.insert(l, img.clone());
        }
        Ok(CyclicAction {
            label: label.into(),
            k,
            alphabet,
            images: map,
        })
    }

    /// The trivial action of order k.
    pub fn trivial(pres: &Presentation, k: u32) -> Self {
        Self::new("trivial", k, pres, &[]).expect("no letters to resolve")
    }

    /// Negates every generator; order 2. The antipodal action of the spheres.
    pub fn antipodal(pres: &Presentation) -> Self {
        let alphabet = pres.alphabet();
        let images: Vec<(String, NCPoly)> = alphabet
            .generators()
            .into_iter()
            .map(|g| {
                (
                    alphabet.name(g).to_string(),
                    NCPoly::letter(alphabet, g).neg(),
                )
            })
            .collect();
        let image_refs: Vec<(&str, NCPoly)> = images
            .iter()
            .map(|(n, p)| (n.as_str(), p.clone()))
            .collect();
        Self::new("antipodal", 2, pres, &image_refs).expect("generators resolve")
    }

    /// `z -> z*` on the circle presentation; order 2.
    pub fn conjugation(pres: &Presentation) -> Result<Self, PolyError> {
        let alphabet = pres.alphabet();
        let z = alphabet.letter("z")?;
        let zs = alphabet.star(z);
        Self::new(
            "conjugation",
            2,
            pres,
            &[("z", NCPoly::letter(alphabet, zs))],
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn image(&self, gen: Letter) -> &NCPoly {
        &self.images[&gen]
    }

    /// One application, without reduction.
    pub fn apply_raw(&self, p: &NCPoly) -> NCPoly {
        p.map_letters(&self.alphabet, &|l| {
            if self.alphabet.is_generator(l) {
                self.images[&l].clone()
            } else {
                let base = self.alphabet.star(l);
                self.images[&base].star()
            }
        })
    }

    /// The j-th iterate followed by reduction to normal form.
    pub fn apply(&self, j: u32, p: &NCPoly, pres: &Presentation) -> Result<NCPoly, PolyError> {
        let mut out = p.clone();
        for _ in 0..(j % self.k.max(1)) {
            out = self.apply_raw(&out);
        }
        pres.normal_form(&out)
    }

    /// Checks that the images define an order-k automorphism of `pres`.
    pub fn validate(&self, pres: &Presentation) -> Result<ActionReport, PolyError> {
        let mut report = ActionReport {
            action: self.label.clone(),
            relation_defects: Vec::new(),
            star_defects: Vec::new(),
            order_defects: Vec::new(),
        };
        for rule in pres.rules() {
            let lhs = NCPoly::word(&self.alphabet, rule.lhs.clone());
            let defect = pres.normal_form(&self.apply_raw(&lhs).sub(&self.apply_raw(&rule.rhs)))?;
            if !defect.is_zero() {
                report
                    .relation_defects
                    .push((rule.lhs.display(&self.alphabet).to_string(), defect));
            }
        }
        for gen in self.alphabet.generators() {
            if self.alphabet.is_self_adjoint(gen) {
                let img = &self.images[&gen];
                let defect = pres.normal_form(&img.star().sub(img))?;
                if !defect.is_zero() {
                    report
                        .star_defects
                        .push((self.alphabet.name(gen).to_string(), defect));
                }
            }
            let mut iter = NCPoly::letter(&self.alphabet, gen);
            for _ in 0..self.k {
                iter = self.apply_raw(&iter);
            }
            let defect = pres.normal_form(&iter.sub(&NCPoly::letter(&self.alphabet, gen)))?;
            if !defect.is_zero() {
                report
                    .order_defects
                    .push((self.alphabet.name(gen).to_string(), defect));
            }
        }
        Ok(report)
    }

    /// Requires validity, turning defects into an error.
    pub fn validated(&self, pres: &Presentation) -> Result<(), StructureError> {
        let report = self.validate(pres)?;
        if report.valid() {
            Ok(())
        } else {
            Err(StructureError::InvalidAction {
                action: self.label.clone(),
                pres: pres.label().to_string(),
                detail: report.first_defect().unwrap_or_default(),
            })
        }
    }

    /// Checks commutation with another action on generators, modulo relations.
    pub fn commutes_with(
        &self,
        other: &CyclicAction,
        pres: &Presentation,
    ) -> Result<Option<(String, NCPoly)>, PolyError> {
        for gen in self.alphabet.generators() {
            let g = NCPoly::letter(&self.alphabet, gen);
            let ab = self.apply_raw(&other.apply_raw(&g));
            let ba = other.apply_raw(&self.apply_raw(&g));
            let defect = pres.normal_form(&ab.sub(&ba))?;
            if !defect.is_zero() {
                return Ok(Some((self.alphabet.name(gen).to_string(), defect)));
            }
        }
        Ok(None)
    }

    /// The isotypic projection `(1/k) sum_j omega^{-gamma j} alpha^j(p)`.
    pub fn isotypic_project(
        &self,
        gamma: u32,
        p: &NCPoly,
        pres: &Presentation,
    ) -> Result<NCPoly, PolyError> {
        let omega_inv_gamma = |j: u32| -> Result<Cyclotomic, PolyError> {
            Ok(Cyclotomic::root_of_unity(
                self.k,
                -i64::from(gamma) * i64::from(j),
            )?)
        };
        let mut acc = NCPoly::zero(&self.alphabet);
        let mut iter = p.clone();
        for j in 0..self.k {
            let phase = omega_inv_gamma(j)?;
            acc = acc.add(&iter.scale_cyclotomic(&phase));
            iter = self.apply_raw(&iter);
        }
        let scale = PathScalar::from_cyclotomic(Cyclotomic::from_rational(BigRational::new(
            1.into(),
            i64::from(self.k).into(),
        )));
        pres.normal_form(&acc.scale(&scale))
    }
}

impl fmt::Debug for CyclicAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicAction({}, k={})", self.label, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::builtins;

    #[test]
    fn antipodal_on_circle_is_valid_order_two() {
        let pres = builtins::circle();
        let anti = CyclicAction::antipodal(&pres);
        let report = anti.validate(&pres).unwrap();
        assert!(report.valid(), "{report:?}");
        assert_eq!(anti.order(), 2);
    }

    #[test]
    fn conjugation_on_circle_commutes_with_antipodal() {
        let pres = builtins::circle();
        let anti = CyclicAction::antipodal(&pres);
        let conj = CyclicAction::conjugation(&pres).unwrap();
        assert!(conj.validate(&pres).unwrap().valid());
        assert!(anti.commutes_with(&conj, &pres).unwrap().is_none());
    }

    #[test]
    fn scaling_breaks_the_unitary_relation() {
        let pres = builtins::circle();
        let z = NCPoly::gen(pres.alphabet(), "z");
        let double = CyclicAction::new(
            "double",
            2,
            &pres,
            &[("z", z.scale(&PathScalar::from_integer(2)))],
        )
        .unwrap();
        let report = double.validate(&pres).unwrap();
        assert!(!report.valid());
        assert!(!report.relation_defects.is_empty());
    }

    #[test]
    fn apply_examples() {
        let pres = builtins::circle();
        let anti = CyclicAction::antipodal(&pres);
        let conj = CyclicAction::conjugation(&pres).unwrap();
        let z = NCPoly::gen(pres.alphabet(), "z");
        let zs = NCPoly::gen(pres.alphabet(), "z*");
        // Even words are fixed by the antipodal action.
        assert_eq!(anti.apply(1, &z.mul(&z), &pres).unwrap(), z.mul(&z));
        assert_eq!(conj.apply(1, &z, &pres).unwrap(), zs);
        // Order two on the free sphere.
        let sphere = builtins::free_sphere();
        let x = NCPoly::gen(sphere.alphabet(), "x");
        let anti2 = CyclicAction::antipodal(&sphere);
        assert_eq!(anti2.apply(2, &x, &sphere).unwrap(), x);
    }

    #[test]
    fn isotypic_projections_on_circle() {
        let pres = builtins::circle();
        let anti = CyclicAction::antipodal(&pres);
        let conj = CyclicAction::conjugation(&pres).unwrap();
        let z = NCPoly::gen(pres.alphabet(), "z");
        let zs = NCPoly::gen(pres.alphabet(), "z*");
        // z is odd for the antipodal action.
        assert_eq!(anti.isotypic_project(1, &z, &pres).unwrap(), z);
        assert!(anti.isotypic_project(0, &z, &pres).unwrap().is_zero());
        // Averaging over conjugation gives the real part (z + z*)/2.
        let half = PathScalar::rational(1, 2);
        let expected = z.add(&zs).scale(&half);
        assert_eq!(conj.isotypic_project(0, &z, &pres).unwrap(), expected);
    }
}
