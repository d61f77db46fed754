//! Oriented rewriting systems over free *-polynomials.
//!
//! A presentation fixes an alphabet, a weighted graded-lexicographic monomial
//! order, and a list of rules `lhs -> rhs` in which every monomial of `rhs`
//! is strictly smaller than `lhs`. Rewriting therefore terminates; identity
//! of elements modulo the relations is decided by reduction to normal form.
//! Global confluence of a rule set is not proven here: the numeric oracle
//! cross-checks reduction results on every built-in presentation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::alphabet::{Alphabet, Word};
use super::ncpoly::NCPoly;
use crate::error::PolyError;
use crate::scalar::PathScalar;

/// Reduction step budget per `normal_form` call.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// An oriented rule `lhs -> rhs` with `lhs` greater than every `rhs` monomial.
#[derive(Clone)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// A finitely presented *-algebra: alphabet, monomial order, rules, label.
pub struct Presentation {
    label: String,
    alphabet: Arc<Alphabet>,
    rules: Vec<RewriteRule>,
    /// Rule indices bucketed by the first letter of their lhs.
    by_first: Vec<Vec<usize>>,
}

impl Presentation {
    /// Builds and validates a presentation. Every rule must strictly decrease
    /// the monomial order, and the starred form of each rule must reduce to
    /// an identity under the full rule set.
    pub fn new(
        label: impl Into<String>,
        alphabet: Arc<Alphabet>,
        rules: Vec<(Word, NCPoly)>,
    ) -> Result<Self, PolyError> {
        let label = label.into();
        let mut built = Vec::with_capacity(rules.len());
        let mut by_first = vec![Vec::new(); alphabet.len()];
        for (lhs, rhs) in rules {
            if lhs.is_empty() {
                return Err(PolyError::RuleNotDecreasing {
                    rule: "1 -> ...".into(),
                });
            }
            for (m, _) in rhs.terms() {
                if weighted_cmp(&alphabet, &lhs, m) != Ordering::Greater {
                    return Err(PolyError::RuleNotDecreasing {
                        rule: format!("{} -> {}", lhs.display(&alphabet), rhs),
                    });
                }
            }
            by_first[lhs.letters()[0].index()].push(built.len());
            built.push(RewriteRule { lhs, rhs });
        }
        let pres = Presentation {
            label,
            alphabet,
            rules: built,
            by_first,
        };
        // Involution closure: star of each rule must be derivable.
        for rule in &pres.rules {
            let lhs_star = NCPoly::word(&pres.alphabet, rule.lhs.star(&pres.alphabet));
            let defect = lhs_star.sub(&rule.rhs.star());
            if !pres.is_zero_mod(&defect)? {
                return Err(PolyError::StarClosure {
                    rule: format!("{} -> {}", rule.lhs.display(&pres.alphabet), rule.rhs),
                });
            }
        }
        Ok(pres)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn weighted_degree(&self, w: &Word) -> u64 {
        w.letters()
            .iter()
            .map(|&l| self.alphabet.weight(l) as u64)
            .sum()
    }

    /// The monomial order: weighted degree, then lexicographic by letter
    /// position in the alphabet.
    pub fn monomial_cmp(&self, a: &Word, b: &Word) -> Ordering {
        weighted_cmp(&self.alphabet, a, b)
    }

    fn first_redex(&self, w: &Word) -> Option<(usize, usize)> {
        let letters = w.letters();
        for pos in 0..letters.len() {
            for &ri in &self.by_first[letters[pos].index()] {
                if w.matches_at(pos, &self.rules[ri].lhs) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_irreducible_word(&self, w: &Word) -> bool {
        self.first_redex(w).is_none()
    }

    /// Reduces `p` to an irreducible form under the rules.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly, PolyError> {
        self.normal_form_with_stats(p, DEFAULT_BUDGET)
            .map(|(nf, _)| nf)
    }

    /// As `normal_form`, also returning the number of rewrite steps taken.
    pub fn normal_form_with_stats(
        &self,
        p: &NCPoly,
        budget: u64,
    ) -> Result<(NCPoly, u64), PolyError> {
        assert!(
            self.alphabet.compatible(p.alphabet()),
            "polynomial is over a different alphabet"
        );
        let mut out = NCPoly::zero(&self.alphabet);
        let mut work: BTreeMap<Word, PathScalar> =
            p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut steps: u64 = 0;
        while let Some((w, c)) = work.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.first_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, ri)) => {
                    steps += 1;
                    if steps > budget {
                        return Err(PolyError::BudgetExceeded { budget });
                    }
                    let rule = &self.rules[ri];
                    let (prefix, suffix) = w.split_around(pos, rule.lhs.len());
                    for (m, cm) in rule.rhs.terms() {
                        let new_word = prefix.concat(m).concat(&suffix);
                        let new_coeff = c.mul(cm);
                        if new_coeff.is_zero() {
                            continue;
                        }
                        let entry = work.entry(new_word).or_insert_with(PathScalar::zero);
                        *entry = entry.add(&new_coeff);
                    }
                }
            }
        }
        Ok((out, steps))
    }

    /// True iff `p` reduces to the zero polynomial.
    pub fn is_zero_mod(&self, p: &NCPoly) -> Result<bool, PolyError> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

fn weighted_cmp(alphabet: &Alphabet, a: &Word, b: &Word) -> Ordering {
    let deg = |w: &Word| -> u64 { w.letters().iter().map(|&l| alphabet.weight(l) as u64).sum() };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.letters().iter().zip(b.letters().iter()) {
        match x.index().cmp(&y.index()) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    // Equal weighted degree with one a prefix of the other forces equality
    // (weights are positive), so the length comparison is decisive.
    a.len().cmp(&b.len())
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "presentation {}", self.label)?;
        let names: Vec<&str> = self
            .alphabet
            .letters()
            .map(|l| self.alphabet.name(l))
            .collect();
        writeln!(f, "  letters: {}", names.join(" < "))?;
        for rule in &self.rules {
            writeln!(f, "  {} -> {}", rule.lhs.display(&self.alphabet), rule.rhs)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({})", self.label)
    }
}
