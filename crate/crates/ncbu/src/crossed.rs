//! Crossed products A x| Z/kZ as extended presentations, the dual and
//! combined actions on them, and the expansion map into k x k matrices over
//! the base algebra.

use std::fmt;
use std::sync::Arc;

use crate::action::CyclicAction;
use crate::error::{PolyError, StructureError};
use crate::poly::{Alphabet, Letter, NCPoly, Presentation, Word};
use crate::scalar::{Cyclotomic, PathScalar};

/// A crossed product presentation: the base alphabet plus a group unitary
/// `mu` with `mu g = beta(g) mu`, `mu^k = 1`, `mu* = mu^{k-1}`. Every element
/// has a unique normal form `sum a_j mu^j` with `a_j` over the base alphabet.
pub struct CrossedPresentation {
    base: Arc<Presentation>,
    beta: CyclicAction,
    k: u32,
    full: Arc<Presentation>,
    mu: Letter,
}

impl CrossedPresentation {
    /// Builds the crossed product; `beta` must be a valid action on `base`
    /// whose order divides `k`.
    pub fn new(
        base: Arc<Presentation>,
        beta: CyclicAction,
        k: u32,
    ) -> Result<Self, StructureError> {
        if k < 2 {
            return Err(StructureError::Mismatch(
                "crossed order must be >= 2".into(),
            ));
        }
        beta.validated(&base)?;
        // Order dividing k: the k-fold composite is the identity.
        for gen in base.alphabet().generators() {
            let mut img = NCPoly::letter(base.alphabet(), gen);
            for _ in 0..k {
                img = beta.apply_raw(&img);
            }
            let defect = base
                .normal_form(&img.sub(&NCPoly::letter(base.alphabet(), gen)))
                .map_err(StructureError::from)?;
            if !defect.is_zero() {
                return Err(StructureError::InvalidAction {
                    action: beta.label().to_string(),
                    pres: base.label().to_string(),
                    detail: format!("k-fold composite moves {}", base.alphabet().name(gen)),
                });
            }
        }

        let base_alphabet = base.alphabet();
        let mut mu_name = "mu".to_string();
        let mut counter = 1;
        while base_alphabet.letter(&mu_name).is_ok() {
            mu_name = format!("mu{counter}");
            counter += 1;
        }
        let full_alphabet = extend_alphabet(base_alphabet, &mu_name, k);
        let mu = full_alphabet.letter(&mu_name).unwrap();
        let mu_star = full_alphabet.star(mu);

        let mut rules: Vec<(Word, NCPoly)> = base
            .rules()
            .iter()
            .map(|r| (r.lhs.clone(), r.rhs.embed(&full_alphabet)))
            .collect();
        let mu_word = Word::single(mu);
        for l in base_alphabet.letters() {
            let image = if base_alphabet.is_generator(l) {
                beta.image(l).clone()
            } else {
                beta.image(base_alphabet.star(l)).star()
            };
            let rhs = image
                .embed(&full_alphabet)
                .mul(&NCPoly::word(&full_alphabet, mu_word.clone()));
            rules.push((Word::from_letters(vec![mu, l]), rhs));
        }
        rules.push((mu_word.power(k as usize), NCPoly::one(&full_alphabet)));
        rules.push((
            Word::single(mu_star),
            NCPoly::word(&full_alphabet, mu_word.power(k as usize - 1)),
        ));

        let label = format!("{} x|_{} Z/{}", base.label(), beta.label(), k);
        let full =
            Arc::new(Presentation::new(label, full_alphabet, rules).map_err(StructureError::from)?);
        Ok(CrossedPresentation {
            base,
            beta,
            k,
            full,
            mu,
        })
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn full(&self) -> &Arc<Presentation> {
        &self.full
    }

    pub fn twist(&self) -> &CyclicAction {
        &self.beta
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn mu(&self) -> Letter {
        self.mu
    }

    pub fn mu_poly(&self) -> NCPoly {
        NCPoly::letter(self.full.alphabet(), self.mu)
    }

    /// Re-tags a base polynomial over the full alphabet.
    pub fn embed(&self, p: &NCPoly) -> NCPoly {
        p.embed(self.full.alphabet())
    }

    /// Interprets a mu-free polynomial over the base alphabet; `None` if a
    /// group letter occurs.
    pub fn restrict(&self, p: &NCPoly) -> Option<NCPoly> {
        let mu_star = self.full.alphabet().star(self.mu);
        let mut out = NCPoly::zero(self.base.alphabet());
        for (w, c) in p.terms() {
            if w.letters().iter().any(|&l| l == self.mu || l == mu_star) {
                return None;
            }
            out.add_term(w.clone(), c.clone());
        }
        Some(out)
    }

    /// The grading components: `p = sum_j c_j mu^j` in normal form, with each
    /// `c_j` over the base alphabet.
    pub fn mu_coefficients(&self, p: &NCPoly) -> Result<Vec<NCPoly>, StructureError> {
        let nf = self.full.normal_form(p).map_err(StructureError::from)?;
        let mut out = vec![NCPoly::zero(self.base.alphabet()); self.k as usize];
        let mu_star = self.full.alphabet().star(self.mu);
        for (w, c) in nf.terms() {
            let letters = w.letters();
            let mut j = 0;
            while j < letters.len() && letters[letters.len() - 1 - j] == self.mu {
                j += 1;
            }
            let prefix = &letters[..letters.len() - j];
            if prefix.iter().any(|&l| l == self.mu || l == mu_star) {
                return Err(StructureError::Mismatch(format!(
                    "normal form `{}` is not graded",
                    w.display(self.full.alphabet())
                )));
            }
            out[j % self.k as usize].add_term(Word::from_letters(prefix.to_vec()), c.clone());
        }
        Ok(out)
    }

    /// The twist extended to the crossed product, fixing the group unitary.
    pub fn beta_extended(&self) -> CyclicAction {
        let alphabet = self.full.alphabet();
        let images: Vec<(String, NCPoly)> = self
            .base
            .alphabet()
            .generators()
            .into_iter()
            .map(|g| {
                (
                    self.base.alphabet().name(g).to_string(),
                    self.beta.image(g).embed(alphabet),
                )
            })
            .collect();
        let refs: Vec<(&str, NCPoly)> = images
            .iter()
            .map(|(n, p)| (n.as_str(), p.clone()))
            .collect();
        CyclicAction::new(
            format!("{}^", self.beta.label()),
            self.beta.order(),
            &self.full,
            &refs,
        )
        .expect("base letters resolve in the full alphabet")
    }

    /// The dual action: base fixed, `mu -> omega mu`.
    pub fn dual_action(&self) -> CyclicAction {
        let trivial = CyclicAction::trivial(&self.base, self.k);
        combined_dual_action(self, &trivial).expect("trivial action commutes")
    }
}

/// Appends a `pair_star_last` group letter to a copy of an alphabet.
fn extend_alphabet(base: &Arc<Alphabet>, mu_name: &str, k: u32) -> Arc<Alphabet> {
    let mut builder = Alphabet::builder();
    for l in base.letters() {
        if !base.is_generator(l) {
            continue; // pairs are added through their generator
        }
        let name = base.name(l);
        if base.is_self_adjoint(l) {
            builder = builder.self_adjoint(name);
        } else if base.star(l).index() < l.index() {
            builder = builder.pair_star_first(name);
        } else {
            builder = builder.pair_star_last(name, base.weight(base.star(l)));
        }
    }
    builder = builder.pair_star_last(mu_name, k);
    let out = builder.build();
    debug_assert_eq!(out.len(), base.len() + 2);
    debug_assert!(base
        .letters()
        .all(|l| out.name(l) == base.name(l) && out.weight(l) == base.weight(l)));
    out
}

/// The combined action `alpha beta^` on the crossed product: base letters map
/// through `alpha`, the group unitary is scaled by `omega = zeta_k`.
/// `alpha` must be valid on the base and commute with the twist.
pub fn combined_dual_action(
    cp: &CrossedPresentation,
    alpha: &CyclicAction,
) -> Result<CyclicAction, StructureError> {
    alpha.validated(cp.base())?;
    if let Some((letter, defect)) = alpha
        .commutes_with(cp.twist(), cp.base())
        .map_err(StructureError::from)?
    {
        return Err(StructureError::NonCommuting {
            a: alpha.label().to_string(),
            b: cp.twist().label().to_string(),
            letter,
            defect: defect.to_string(),
        });
    }
    let alphabet = cp.full().alphabet();
    let omega = Cyclotomic::root_of_unity(cp.order(), 1).map_err(PolyError::from)?;
    let mut images: Vec<(String, NCPoly)> = cp
        .base()
        .alphabet()
        .generators()
        .into_iter()
        .map(|g| {
            (
                cp.base().alphabet().name(g).to_string(),
                alpha.image(g).embed(alphabet),
            )
        })
        .collect();
    images.push((
        alphabet.name(cp.mu()).to_string(),
        cp.mu_poly().scale_cyclotomic(&omega),
    ));
    let refs: Vec<(&str, NCPoly)> = images
        .iter()
        .map(|(n, p)| (n.as_str(), p.clone()))
        .collect();
    let combined = CyclicAction::new(format!("{}b^", alpha.label()), cp.order(), cp.full(), &refs)
        .map_err(StructureError::from)?;
    combined.validated(cp.full())?;
    Ok(combined)
}

/// A square matrix with entries in the free *-algebra over a base alphabet.
#[derive(Clone, PartialEq)]
pub struct MatrixOverAlg {
    size: usize,
    entries: Vec<NCPoly>,
}

impl MatrixOverAlg {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> NCPoly) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        MatrixOverAlg { size, entries }
    }

    pub fn identity(alphabet: &Arc<Alphabet>, size: usize) -> Self {
        Self::from_fn(size, |i, j| {
            if i == j {
                NCPoly::one(alphabet)
            } else {
                NCPoly::zero(alphabet)
            }
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.size + j]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self::from_fn(self.size, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self::from_fn(self.size, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self::from_fn(self.size, |i, j| {
            let mut acc = NCPoly::zero(self.entries[0].alphabet());
            for l in 0..self.size {
                acc = acc.add(&self.get(i, l).mul(other.get(l, j)));
            }
            acc
        })
    }

    pub fn scale(&self, c: &PathScalar) -> Self {
        Self::from_fn(self.size, |i, j| self.get(i, j).scale(c))
    }

    /// Conjugate transpose with entrywise star.
    pub fn star(&self) -> Self {
        Self::from_fn(self.size, |i, j| self.get(j, i).star())
    }

    pub fn normal_form(&self, pres: &Presentation) -> Result<Self, PolyError> {
        let mut entries = Vec::with_capacity(self.size * self.size);
        for e in &self.entries {
            entries.push(pres.normal_form(e)?);
        }
        Ok(MatrixOverAlg {
            size: self.size,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }
}

impl fmt::Display for MatrixOverAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            write!(f, "[ ")?;
            for j in 0..self.size {
                if j > 0 {
                    write!(f, " | ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MatrixOverAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The expansion map `E: A x| Z/kZ -> M_k(A)`: a mu-free element `a` goes to
/// `diag(a, beta^{-1}(a), ..., beta^{-(k-1)}(a))` and `mu` to the cyclic
/// shift `e_n -> e_{n+1}`, so that `E(mu) E(a) = E(beta(a)) E(mu)`.
pub fn expand_matrix(
    cp: &CrossedPresentation,
    p: &NCPoly,
) -> Result<MatrixOverAlg, StructureError> {
    let k = cp.order() as usize;
    let base = cp.base();
    let base_alphabet = base.alphabet();
    let mu_star = cp.full().alphabet().star(cp.mu());

    let shift = |transpose: bool| {
        MatrixOverAlg::from_fn(k, |i, j| {
            let hit = if transpose {
                (i + 1) % k == j
            } else {
                i == (j + 1) % k
            };
            if hit {
                NCPoly::one(base_alphabet)
            } else {
                NCPoly::zero(base_alphabet)
            }
        })
    };

    let letter_matrix = |l: Letter| -> Result<MatrixOverAlg, StructureError> {
        if l == cp.mu() {
            return Ok(shift(false));
        }
        if l == mu_star {
            return Ok(shift(true));
        }
        // Base letter: diagonal of backward twist iterates.
        let letter_poly = NCPoly::letter(base_alphabet, l);
        let mut iterates = Vec::with_capacity(k);
        let mut current = letter_poly;
        for _ in 0..k {
            iterates.push(current.clone());
            let mut next = current.clone();
            for _ in 0..(cp.order() - 1) {
                next = cp.twist().apply_raw(&next);
            }
            current = base.normal_form(&next).map_err(StructureError::from)?;
        }
        Ok(MatrixOverAlg::from_fn(k, |i, j| {
            if i == j {
                iterates[i].clone()
            } else {
                NCPoly::zero(base_alphabet)
            }
        }))
    };

    let mut out = MatrixOverAlg::from_fn(k, |_, _| NCPoly::zero(base_alphabet));
    for (w, c) in p.terms() {
        let mut m = MatrixOverAlg::identity(base_alphabet, k);
        for &l in w.letters() {
            m = m.mul(&letter_matrix(l)?);
        }
        out = out.add(&m.scale(c));
    }
    out.normal_form(base).map_err(StructureError::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::builtins;

    fn circle_conj() -> CrossedPresentation {
        let base = Arc::new(builtins::circle());
        let conj = CyclicAction::conjugation(&base).unwrap();
        CrossedPresentation::new(base, conj, 2).unwrap()
    }

    fn sphere_antipodal() -> CrossedPresentation {
        let base = Arc::new(builtins::free_sphere());
        let anti = CyclicAction::antipodal(&base);
        CrossedPresentation::new(base, anti, 2).unwrap()
    }

    #[test]
    fn mu_commutation_rules() {
        let cp = circle_conj();
        let alphabet = cp.full().alphabet();
        let z = NCPoly::gen(alphabet, "z");
        let zs = NCPoly::gen(alphabet, "z*");
        let mu = cp.mu_poly();
        // mu z = z* mu
        let defect = mu.mul(&z).sub(&zs.mul(&mu));
        assert!(cp.full().is_zero_mod(&defect).unwrap());

        let cp2 = sphere_antipodal();
        let a2 = cp2.full().alphabet();
        let x = NCPoly::gen(a2, "x");
        let mu2 = cp2.mu_poly();
        // mu x = -x mu
        let defect2 = mu2.mul(&x).add(&x.mul(&mu2));
        assert!(cp2.full().is_zero_mod(&defect2).unwrap());
        // mu x mu = -x
        let nf = cp2.full().normal_form(&mu2.mul(&x).mul(&mu2)).unwrap();
        assert_eq!(nf, x.neg());
    }

    #[test]
    fn trivial_twist_commutes() {
        let base = Arc::new(builtins::circle());
        let triv = CyclicAction::trivial(&base, 2);
        let cp = CrossedPresentation::new(base, triv, 2).unwrap();
        let alphabet = cp.full().alphabet();
        let z = NCPoly::gen(alphabet, "z");
        let mu = cp.mu_poly();
        let defect = mu.mul(&z).sub(&z.mul(&mu));
        assert!(cp.full().is_zero_mod(&defect).unwrap());
    }

    #[test]
    fn combined_action_negates_everything_for_conj_twist() {
        let cp = circle_conj();
        let anti = CyclicAction::antipodal(cp.base());
        let combined = combined_dual_action(&cp, &anti).unwrap();
        let alphabet = cp.full().alphabet();
        let z = NCPoly::gen(alphabet, "z");
        let mu = cp.mu_poly();
        assert_eq!(
            combined.apply(1, &z, cp.full()).unwrap(),
            cp.full().normal_form(&z.neg()).unwrap()
        );
        assert_eq!(combined.apply(1, &mu, cp.full()).unwrap(), mu.neg());
    }

    #[test]
    fn dual_action_alone_scales_mu() {
        let cp = circle_conj();
        let dual = cp.dual_action();
        let alphabet = cp.full().alphabet();
        let z = NCPoly::gen(alphabet, "z");
        let mu = cp.mu_poly();
        assert_eq!(dual.apply(1, &z, cp.full()).unwrap(), z);
        assert_eq!(dual.apply(1, &mu, cp.full()).unwrap(), mu.neg());
    }

    #[test]
    fn grading_splits_normal_forms() {
        let cp = circle_conj();
        let alphabet = cp.full().alphabet();
        let z = NCPoly::gen(alphabet, "z");
        let mu = cp.mu_poly();
        let p = z.mul(&mu).add(&z.mul(&z)).add(&mu.mul(&z));
        let comps = cp.mu_coefficients(&p).unwrap();
        assert_eq!(comps.len(), 2);
        let zb = NCPoly::gen(cp.base().alphabet(), "z");
        let zsb = NCPoly::gen(cp.base().alphabet(), "z*");
        assert_eq!(comps[0], zb.mul(&zb));
        // z mu + mu z = z mu + z* mu: coefficient z + z*.
        assert_eq!(comps[1], zb.add(&zsb));
    }

    #[test]
    fn expansion_examples() {
        let cp = sphere_antipodal();
        let alphabet = cp.full().alphabet();
        // E(mu) is the 0/1 shift matrix.
        let e_mu = expand_matrix(&cp, &cp.mu_poly()).unwrap();
        assert!(e_mu.get(0, 0).is_zero());
        assert!(e_mu.get(0, 1).is_one());
        assert!(e_mu.get(1, 0).is_one());
        assert!(e_mu.get(1, 1).is_zero());
        // E(x) = diag(x, -x).
        let x = NCPoly::gen(alphabet, "x");
        let e_x = expand_matrix(&cp, &x).unwrap();
        let xb = NCPoly::gen(cp.base().alphabet(), "x");
        assert_eq!(e_x.get(0, 0), &xb);
        assert_eq!(e_x.get(1, 1), &xb.neg());
        assert!(e_x.get(0, 1).is_zero());
        // E(1) = I.
        let e_one = expand_matrix(&cp, &NCPoly::one(alphabet)).unwrap();
        assert_eq!(e_one, MatrixOverAlg::identity(cp.base().alphabet(), 2));
    }

    #[test]
    fn expansion_of_z_mu_product() {
        let cp = circle_conj();
        let alphabet = cp.full().alphabet();
        let z = NCPoly::gen(alphabet, "z");
        let e = expand_matrix(&cp, &z.mul(&cp.mu_poly())).unwrap();
        let zb = NCPoly::gen(cp.base().alphabet(), "z");
        let zsb = NCPoly::gen(cp.base().alphabet(), "z*");
        assert!(e.get(0, 0).is_zero());
        assert_eq!(e.get(0, 1), &zb);
        assert_eq!(e.get(1, 0), &zsb);
        assert!(e.get(1, 1).is_zero());
    }

    #[test]
    fn expansion_intertwines_mu_and_twist_k3() {
        // E(mu) E(a) = E(beta(a)) E(mu) on a conductor-3 crossed product.
        let base = Arc::new(builtins::cyclic_group(3).unwrap());
        let triv = CyclicAction::trivial(&base, 3);
        let cp = CrossedPresentation::new(Arc::clone(&base), triv, 3).unwrap();
        // The adjoined unitary is named mu1 to avoid the collision.
        assert_eq!(cp.full().alphabet().name(cp.mu()), "mu1");
        let g = NCPoly::gen(cp.full().alphabet(), "mu");
        let e_mu = expand_matrix(&cp, &cp.mu_poly()).unwrap();
        let e_g = expand_matrix(&cp, &g).unwrap();
        let lhs = e_mu.mul(&e_g).normal_form(cp.base()).unwrap();
        let rhs = e_g.mul(&e_mu).normal_form(cp.base()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
