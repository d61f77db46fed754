//! Seeded random generators for scalars, words, and polynomials. Used by the
//! engine-soundness checks and property tests.

use std::sync::Arc;

use num::BigRational;
use rand::Rng;

use super::alphabet::{Alphabet, Word};
use super::ncpoly::NCPoly;
use crate::scalar::{Cyclotomic, PathScalar};

/// Shape of randomly drawn polynomials.
#[derive(Clone, Debug)]
pub struct SampleConfig {
    pub max_terms: usize,
    pub max_word_len: usize,
    pub max_t_degree: u32,
    pub with_s: bool,
    pub conductors: Vec<u32>,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            max_terms: 4,
            max_word_len: 6,
            max_t_degree: 2,
            with_s: true,
            conductors: vec![1, 2, 4, 8],
        }
    }
}

pub fn random_cyclotomic<R: Rng>(rng: &mut R, cfg: &SampleConfig) -> Cyclotomic {
    let n = cfg.conductors[rng.gen_range(0..cfg.conductors.len())];
    let j = rng.gen_range(0..n) as i64;
    let p = rng.gen_range(-4i64..=4);
    let q = rng.gen_range(1i64..=3);
    Cyclotomic::root_of_unity(n, j)
        .expect("sampled conductors stay within bound")
        .scale(&BigRational::new(p.into(), q.into()))
}

pub fn random_path_scalar<R: Rng>(rng: &mut R, cfg: &SampleConfig) -> PathScalar {
    let mut acc = PathScalar::zero();
    let parts = rng.gen_range(1..=2);
    for _ in 0..parts {
        let mut m = PathScalar::from_cyclotomic(random_cyclotomic(rng, cfg));
        let t_deg = rng.gen_range(0..=cfg.max_t_degree);
        for _ in 0..t_deg {
            m = m.mul(&PathScalar::t());
        }
        if cfg.with_s && rng.gen_bool(0.3) {
            m = m.mul(&PathScalar::s());
        }
        acc = acc.add(&m);
    }
    acc
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<_> = (0..len)
        .map(|_| {
            let i = rng.gen_range(0..alphabet.len());
            alphabet.letters().nth(i).unwrap()
        })
        .collect();
    Word::from_letters(letters)
}

pub fn random_poly<R: Rng>(rng: &mut R, alphabet: &Arc<Alphabet>, cfg: &SampleConfig) -> NCPoly {
    let mut out = NCPoly::zero(alphabet);
    let terms = rng.gen_range(1..=cfg.max_terms);
    for _ in 0..terms {
        let w = random_word(rng, alphabet, cfg.max_word_len);
        let c = random_path_scalar(rng, cfg);
        out.add_term(w, c);
    }
    out
}
