//! Free *-polynomials: finite sums of words with [`PathScalar`] coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::BigRational;

use super::alphabet::{Alphabet, Letter, Word};
use crate::error::ScalarError;
use crate::scalar::{Cyclotomic, PathScalar};

/// An element of the free *-algebra over an alphabet.
///
/// Invariants: no zero coefficients are stored, and the unit is the empty
/// word. Star is an anti-automorphism; multiplication is free (reduction by
/// relations is the job of a `Presentation`).
#[derive(Clone)]
pub struct NCPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, PathScalar>,
}

impl NCPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        NCPoly {
            alphabet: Arc::clone(alphabet),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::monomial(alphabet, Word::empty(), PathScalar::one())
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: PathScalar) -> Self {
        Self::monomial(alphabet, Word::empty(), c)
    }

    pub fn letter(alphabet: &Arc<Alphabet>, l: Letter) -> Self {
        Self::monomial(alphabet, Word::single(l), PathScalar::one())
    }

    /// The generator with the given token name.
    pub fn gen(alphabet: &Arc<Alphabet>, name: &str) -> Self {
        let l = alphabet
            .letter(name)
            .unwrap_or_else(|_| panic!("unknown letter `{name}`"));
        Self::letter(alphabet, l)
    }

    pub fn word(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        Self::monomial(alphabet, w, PathScalar::one())
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, w: Word, c: PathScalar) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(w, c);
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Word::empty())
                .map(PathScalar::is_one)
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &PathScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, PathScalar> {
        self.terms
    }

    pub fn coefficient(&self, w: &Word) -> PathScalar {
        self.terms.get(w).cloned().unwrap_or_else(PathScalar::zero)
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: PathScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(entry) => {
                *entry = entry.add(&c);
                if entry.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn check_alphabet(&self, other: &NCPoly) {
        assert!(
            self.alphabet.compatible(&other.alphabet),
            "operands live over different alphabets"
        );
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        self.check_alphabet(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        self.check_alphabet(other);
        let mut out = NCPoly::zero(&self.alphabet);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &PathScalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(&self.alphabet);
        }
        let mut out = NCPoly::zero(&self.alphabet);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.mul(c));
        }
        out
    }

    pub fn scale_cyclotomic(&self, c: &Cyclotomic) -> NCPoly {
        self.scale(&PathScalar::from_cyclotomic(c.clone()))
    }

    pub fn scale_rational(&self, q: &BigRational) -> NCPoly {
        self.scale(&PathScalar::from_cyclotomic(Cyclotomic::from_rational(
            q.clone(),
        )))
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut acc = NCPoly::one(&self.alphabet);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The involution: star each word (reversing) and conjugate coefficients.
    pub fn star(&self) -> NCPoly {
        let mut out = NCPoly::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.star(&self.alphabet), c.conj());
        }
        out
    }

    /// Multiplicative, star-compatible extension of a letter substitution.
    /// Coefficients are carried over unchanged.
    pub fn map_letters(&self, target: &Arc<Alphabet>, images: &dyn Fn(Letter) -> NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(target);
        for (w, c) in &self.terms {
            let mut prod = NCPoly::one(target);
            for &l in w.letters() {
                prod = prod.mul(&images(l));
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Re-tags a polynomial over a prefix-extended alphabet (letter indices
    /// preserved).
    pub fn embed(&self, target: &Arc<Alphabet>) -> NCPoly {
        debug_assert!(target.len() >= self.alphabet.len());
        NCPoly {
            alphabet: Arc::clone(target),
            terms: self.terms.clone(),
        }
    }

    /// Exact substitution of the path parameters; see [`PathScalar::subst`].
    pub fn subst_scalars(&self, t0: &Cyclotomic, s0: &Cyclotomic) -> Result<NCPoly, ScalarError> {
        let mut out = NCPoly::zero(&self.alphabet);
        for (w, c) in &self.terms {
            let v = c.subst(t0, s0)?;
            out.add_term(w.clone(), PathScalar::from_cyclotomic(v));
        }
        Ok(out)
    }

    /// True when every coefficient is constant in `(t, s)`.
    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(PathScalar::is_constant)
    }
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet.compatible(&other.alphabet) && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let word = w.display(&self.alphabet).to_string();
            let part = if c.is_one() {
                word
            } else if w.is_empty() {
                format!("({c})")
            } else {
                format!("({c}) {word}")
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly::neg(self)
    }
}
