//! Alphabets of generator letters with involution markers and weights.
//!
//! Each letter is either self-adjoint (its own star) or half of a `(g, g*)`
//! pair. The declared order of letters induces the lexicographic part of the
//! monomial order; per-letter weights give the graded part. Weights other
//! than 1 are used where a starred letter must rewrite to a power of its
//! partner (e.g. `mu* -> mu^{k-1}` needs `weight(mu*) = k`).

use std::fmt;

use std::sync::Arc;

use crate::error::PolyError;

/// Index of a letter inside its alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(pub(crate) u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct LetterInfo {
    name: String,
    star: u16,
    weight: u32,
    /// True for the unstarred representative of its generator.
    generator: bool,
}

/// An ordered alphabet with involution structure.
#[derive(PartialEq, Eq, Debug)]
pub struct Alphabet {
    letters: Vec<LetterInfo>,
}

impl Alphabet {
    pub fn builder() -> AlphabetBuilder {
        AlphabetBuilder {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.letters[l.index()].name
    }

    pub fn star(&self, l: Letter) -> Letter {
        Letter(self.letters[l.index()].star)
    }

    pub fn weight(&self, l: Letter) -> u32 {
        self.letters[l.index()].weight
    }

    pub fn is_self_adjoint(&self, l: Letter) -> bool {
        self.letters[l.index()].star == l.0
    }

    /// The unstarred representatives, in declaration order.
    pub fn generators(&self) -> Vec<Letter> {
        (0..self.letters.len() as u16)
            .map(Letter)
            .filter(|l| self.letters[l.index()].generator)
            .collect()
    }

    pub fn is_generator(&self, l: Letter) -> bool {
        self.letters[l.index()].generator
    }

    pub fn letter(&self, name: &str) -> Result<Letter, PolyError> {
        self.letters
            .iter()
            .position(|i| i.name == name)
            .map(|i| Letter(i as u16))
            .ok_or_else(|| PolyError::UnknownLetter(name.to_string()))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.letters.len() as u16).map(Letter)
    }

    /// True when `self` and `other` describe the same alphabet.
    pub fn compatible(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.letters == other.letters
    }
}

pub struct AlphabetBuilder {
    letters: Vec<LetterInfo>,
}

impl AlphabetBuilder {
    /// A self-adjoint generator `g = g*`.
    pub fn self_adjoint(mut self, name: &str) -> Self {
        let idx = self.letters.len() as u16;
        self.letters.push(LetterInfo {
            name: name.to_string(),
            star: idx,
            weight: 1,
            generator: true,
        });
        self
    }

    /// A generator pair declared as `g*` then `g`, so that `g > g*` in the
    /// letter order (normal forms pull stars leftward).
    pub fn pair_star_first(mut self, name: &str) -> Self {
        let star_idx = self.letters.len() as u16;
        self.letters.push(LetterInfo {
            name: format!("{name}*"),
            star: star_idx + 1,
            weight: 1,
            generator: false,
        });
        self.letters.push(LetterInfo {
            name: name.to_string(),
            star: star_idx,
            weight: 1,
            generator: true,
        });
        self
    }

    /// A generator pair declared as `g` then `g*`, with a custom weight on
    /// the star so that `g* -> g^{w-1}`-style rules decrease the order.
    pub fn pair_star_last(mut self, name: &str, star_weight: u32) -> Self {
        let idx = self.letters.len() as u16;
        self.letters.push(LetterInfo {
            name: name.to_string(),
            star: idx + 1,
            weight: 1,
            generator: true,
        });
        self.letters.push(LetterInfo {
            name: format!("{name}*"),
            star: idx,
            weight: star_weight.max(1),
            generator: false,
        });
        self
    }

    pub fn build(self) -> Arc<Alphabet> {
        Arc::new(Alphabet {
            letters: self.letters,
        })
    }
}

/// A word in the free monoid over an alphabet. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub(crate) Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn from_letters(ls: impl Into<Vec<Letter>>) -> Self {
        Word(ls.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(&self, e: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * e);
        for _ in 0..e {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Involution: reverse the sequence and star each letter.
    pub fn star(&self, alphabet: &Alphabet) -> Word {
        Word(self.0.iter().rev().map(|&l| alphabet.star(l)).collect())
    }

    pub fn matches_at(&self, pos: usize, pattern: &Word) -> bool {
        pos + pattern.0.len() <= self.0.len() && self.0[pos..pos + pattern.0.len()] == pattern.0[..]
    }

    /// Replace `pattern` at `pos` by nothing, returning (prefix, suffix).
    pub fn split_around(&self, pos: usize, len: usize) -> (Word, Word) {
        (
            Word(self.0[..pos].to_vec()),
            Word(self.0[pos + len..].to_vec()),
        )
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<&str> = self
            .word
            .letters()
            .iter()
            .map(|&l| self.alphabet.name(l))
            .collect();
        write!(f, "{}", names.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Word{:?}",
            self.0.iter().map(|l| l.0).collect::<Vec<_>>()
        )
    }
}

/// Parses a word from whitespace-separated letter tokens; `1` or the empty
/// string denote the unit.
pub fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word, PolyError> {
    let text = text.trim();
    if text.is_empty() || text == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        letters.push(alphabet.letter(token)?);
    }
    Ok(Word(letters))
}
