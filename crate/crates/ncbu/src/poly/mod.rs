//! Free *-polynomials and oriented rewriting systems for finitely presented
//! *-algebras. Normal forms decide identity of elements modulo relations.

mod alphabet;
pub mod builtins;
mod ncpoly;
mod rewrite;
pub mod sampling;

pub use alphabet::{parse_word, Alphabet, AlphabetBuilder, Letter, Word};
pub use ncpoly::NCPoly;
pub use rewrite::{Presentation, RewriteRule, DEFAULT_BUDGET};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn sphere() -> Arc<Presentation> {
        Arc::new(builtins::free_sphere())
    }

    fn arb_poly() -> impl Strategy<Value = NCPoly> {
        let pres = sphere();
        let alphabet = Arc::clone(pres.alphabet());
        prop::collection::vec(
            (prop::collection::vec(0usize..2, 0..5), -3i64..=3),
            1..4,
        )
        .prop_map(move |terms| {
            let letters: Vec<Letter> = alphabet.letters().collect();
            let mut p = NCPoly::zero(&alphabet);
            for (word_idx, coeff) in terms {
                let w = Word::from_letters(
                    word_idx.iter().map(|&i| letters[i]).collect::<Vec<_>>(),
                );
                p = p.add(&NCPoly::monomial(
                    &alphabet,
                    w,
                    crate::scalar::PathScalar::from_integer(coeff),
                ));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiplication_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn star_is_an_anti_automorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
            prop_assert_eq!(a.star().star(), a.clone());
        }

        #[test]
        fn reduction_is_sound_for_sums(a in arb_poly(), b in arb_poly()) {
            let pres = sphere();
            let lhs = pres.normal_form(&a.add(&b)).unwrap();
            let rhs = pres
                .normal_form(&pres.normal_form(&a).unwrap().add(&pres.normal_form(&b).unwrap()))
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[cfg(test)]
mod structure_tests {
    use super::*;
    use std::sync::Arc;

    /// All irreducible words of weighted degree at most `bound`.
    fn irreducible_words(pres: &Presentation, bound: u64) -> Vec<Word> {
        let letters: Vec<Letter> = pres.alphabet().letters().collect();
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        while let Some(w) = frontier.pop() {
            for &l in &letters {
                let next = w.concat(&Word::single(l));
                if pres.weighted_degree(&next) > bound {
                    continue;
                }
                if pres.is_irreducible_word(&next) {
                    out.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn clock_shift_normal_words_match_the_matrix_dimension() {
        // The irreducible words of the k x k matrix presentation are exactly
        // v^a w^b with a, b < k: k^2 of them, independent in the defining
        // representation.
        for k in [2u32, 3] {
            let pres = Arc::new(builtins::clock_shift(k).unwrap());
            let words = irreducible_words(&pres, 2 * (k as u64 - 1));
            assert_eq!(words.len(), (k * k) as usize, "k = {k}");
            let v = pres.alphabet().letter("v").unwrap();
            let w = pres.alphabet().letter("w").unwrap();
            for word in &words {
                let letters = word.letters();
                let split = letters.iter().position(|&l| l == w).unwrap_or(letters.len());
                assert!(letters[..split].iter().all(|&l| l == v));
                assert!(letters[split..].iter().all(|&l| l == w));
            }
            // Numeric independence: vectorized images span k^2 dimensions.
            let rep = crate::numeric::clock_shift_rep(&pres, k).unwrap();
            let d = (k * k) as usize;
            let mut m = crate::numeric::CMatrix::zeros(d, words.len());
            for (col, word) in words.iter().enumerate() {
                let img = rep.eval(&NCPoly::word(pres.alphabet(), word.clone()), 0.0);
                for i in 0..k as usize {
                    for j in 0..k as usize {
                        m[(i * k as usize + j, col)] = img[(i, j)];
                    }
                }
            }
            let rank = m
                .svd(false, false)
                .singular_values
                .iter()
                .filter(|s| **s > 1e-9)
                .count();
            assert_eq!(rank, d, "k = {k}");
        }
    }

    #[test]
    fn cyclic_group_normal_words_are_the_group_elements() {
        for k in [2u32, 3, 5] {
            let pres = Arc::new(builtins::cyclic_group(k).unwrap());
            let words = irreducible_words(&pres, k as u64 - 1);
            assert_eq!(words.len(), k as usize, "k = {k}");
        }
    }

    #[test]
    fn circle_normal_words_are_the_laurent_monomials() {
        // Irreducible circle words are z^a and (z*)^a: 2n + 1 of weight <= n.
        let pres = Arc::new(builtins::circle());
        let n = 5;
        let words = irreducible_words(&pres, n);
        assert_eq!(words.len(), 2 * n as usize + 1);
    }
}
