//! Exact scalar arithmetic: cyclotomic rationals extended by the commuting
//! path parameters `t` and `s` with `s^2 = 1 - t^2`.

mod cyclotomic;
mod path;

pub use cyclotomic::{conductor_max, euler_phi, Cyclotomic, DEFAULT_CONDUCTOR_MAX};
pub use path::{inv_sqrt2, rational_to_f64, PathScalar};

#[cfg(test)]
mod proptests {
    use super::*;
    use num::complex::Complex64;
    use proptest::prelude::*;

    fn arb_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
        // Small rationals times roots of unity with conductor in {1,2,3,4,8}.
        (prop::collection::vec(
            (
                -4i64..=4,
                1i64..=3,
                prop::sample::select(vec![1u32, 2, 3, 4, 8]),
                0i64..8,
            ),
            1..3,
        ),)
            .prop_map(|(parts,)| {
                let mut acc = Cyclotomic::zero();
                for (p, q, n, j) in parts {
                    let root = Cyclotomic::root_of_unity(n, j).unwrap();
                    acc = acc.add(&root.scale(&num::BigRational::new(p.into(), q.into())));
                }
                acc
            })
    }

    fn arb_path_scalar() -> impl Strategy<Value = PathScalar> {
        prop::collection::vec((arb_cyclotomic(), 0u32..3, 0u8..2), 0..4).prop_map(|terms| {
            let mut acc = PathScalar::zero();
            for (c, a, b) in terms {
                let mut m = PathScalar::from_cyclotomic(c);
                for _ in 0..a {
                    m = m.mul(&PathScalar::t());
                }
                if b == 1 {
                    m = m.mul(&PathScalar::s());
                }
                acc = acc.add(&m);
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in arb_path_scalar(), b in arb_path_scalar(), c in arb_path_scalar()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn conj_is_involutive_multiplicative(a in arb_path_scalar(), b in arb_path_scalar()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        }

        #[test]
        fn s_degree_stays_reduced(a in arb_path_scalar(), b in arb_path_scalar()) {
            prop_assert!(a.mul(&b).max_s_degree() <= 1);
            prop_assert!(a.add(&b).max_s_degree() <= 1);
        }

        #[test]
        fn eval_respects_ring_ops(a in arb_path_scalar(), b in arb_path_scalar(), t0 in 0.0f64..1.0) {
            let rel = |x: Complex64, y: Complex64| {
                let scale = 1.0_f64.max(x.norm()).max(y.norm());
                (x - y).norm() / scale
            };
            prop_assert!(rel(a.add(&b).eval(t0), a.eval(t0) + b.eval(t0)) < 1e-12);
            prop_assert!(rel(a.mul(&b).eval(t0), a.eval(t0) * b.eval(t0)) < 1e-12);
        }

        #[test]
        fn text_roundtrip(a in arb_path_scalar()) {
            let text = a.to_string();
            let back: PathScalar = text.parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
