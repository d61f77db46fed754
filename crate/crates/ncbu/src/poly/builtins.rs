//! Built-in presentations: the circle algebra, the free sphere algebra,
//! theta-deformed spheres, cyclic group algebras, and the clock/shift
//! presentation of a full matrix algebra.

use num::BigRational;

use super::alphabet::{Alphabet, Word};
use super::ncpoly::NCPoly;
use super::rewrite::Presentation;
use crate::error::PolyError;
use crate::scalar::{Cyclotomic, PathScalar};

/// `C*(z | z normal, z z* = 1)`: the coordinate algebra of the circle.
pub fn circle() -> Presentation {
    let alphabet = Alphabet::builder().pair_star_first("z").build();
    let z = alphabet.letter("z").unwrap();
    let zs = alphabet.letter("z*").unwrap();
    let one = NCPoly::one(&alphabet);
    let rules = vec![
        (Word::from_letters(vec![z, zs]), one.clone()),
        (Word::from_letters(vec![zs, z]), one),
    ];
    Presentation::new("Circle", alphabet, rules).expect("circle rules orient")
}

/// `C*(x, y | x = x*, y = y*, x^2 + y^2 = 1)`.
///
/// The defining relation is oriented as `y^2 -> 1 - x^2`; the extra rule
/// `y x^2 -> x^2 y` resolves the `y^3` overlap, making normal forms canonical
/// (x^2 = 1 - y^2 is central among words in x and y only through it).
pub fn free_sphere() -> Presentation {
    let alphabet = Alphabet::builder()
        .self_adjoint("x")
        .self_adjoint("y")
        .build();
    let x = alphabet.letter("x").unwrap();
    let y = alphabet.letter("y").unwrap();
    let one = NCPoly::one(&alphabet);
    let xx = NCPoly::word(&alphabet, Word::from_letters(vec![x, x]));
    let rules = vec![
        (Word::from_letters(vec![y, y]), one.sub(&xx)),
        (
            Word::from_letters(vec![y, x, x]),
            NCPoly::word(&alphabet, Word::from_letters(vec![x, x, y])),
        ),
    ];
    Presentation::new("FreeSphere", alphabet, rules).expect("free sphere rules orient")
}

/// Theta-deformed sphere on `n` normal generators:
/// `z_l z_j = phase * z_j z_l` for `j < l`, `sum z_j z_j* = 1`.
///
/// `phases` lists `((j, l), phase)` with 1-based `j < l`, giving the scalar in
/// `z_l z_j -> phase * z_j z_l`; omitted pairs commute. Phases must be roots
/// of unity (the exact engine does not carry irrational angles). The full
/// rule set includes the starred and mixed-star commutation forms, which hold
/// in the enveloping C*-algebra by normality.
pub fn theta_sphere(
    n: usize,
    phases: &[((usize, usize), Cyclotomic)],
) -> Result<Presentation, PolyError> {
    if n == 0 {
        return Err(PolyError::InvalidParams(
            "need at least one generator".into(),
        ));
    }
    let mut phase_of = vec![vec![Cyclotomic::one(); n + 1]; n + 1];
    for ((j, l), phase) in phases {
        if *j == 0 || *l == 0 || *j >= *l || *l > n {
            return Err(PolyError::InvalidParams(format!(
                "phase pair ({j}, {l}) out of range for n = {n}"
            )));
        }
        if !phase.is_root_of_unity() {
            return Err(PolyError::InvalidParams(format!(
                "phase for ({j}, {l}) is not a root of unity"
            )));
        }
        phase_of[*j][*l] = phase.clone();
    }
    let mut builder = Alphabet::builder();
    for i in 1..=n {
        builder = builder.pair_star_first(&format!("z{i}"));
    }
    let alphabet = builder.build();
    let gen = |i: usize| alphabet.letter(&format!("z{i}")).unwrap();
    let gen_star = |i: usize| alphabet.letter(&format!("z{i}*")).unwrap();

    let mut rules = Vec::new();
    for l in 2..=n {
        for j in 1..l {
            let lam = &phase_of[j][l];
            let lam_bar = lam.conj();
            let word = |a, b| Word::from_letters(vec![a, b]);
            let scaled = |a, b, c: &Cyclotomic| {
                NCPoly::monomial(
                    &alphabet,
                    word(a, b),
                    PathScalar::from_cyclotomic(c.clone()),
                )
            };
            rules.push((word(gen(l), gen(j)), scaled(gen(j), gen(l), lam)));
            rules.push((
                word(gen(l), gen_star(j)),
                scaled(gen_star(j), gen(l), &lam_bar),
            ));
            rules.push((
                word(gen_star(l), gen(j)),
                scaled(gen(j), gen_star(l), &lam_bar),
            ));
            rules.push((
                word(gen_star(l), gen_star(j)),
                scaled(gen_star(j), gen_star(l), lam),
            ));
        }
    }
    for j in 1..=n {
        rules.push((
            Word::from_letters(vec![gen(j), gen_star(j)]),
            NCPoly::word(&alphabet, Word::from_letters(vec![gen_star(j), gen(j)])),
        ));
    }
    // z_n* z_n -> 1 - sum_{j<n} z_j* z_j
    let mut rhs = NCPoly::one(&alphabet);
    for j in 1..n {
        rhs = rhs.sub(&NCPoly::word(
            &alphabet,
            Word::from_letters(vec![gen_star(j), gen(j)]),
        ));
    }
    rules.push((Word::from_letters(vec![gen_star(n), gen(n)]), rhs));

    let label = if phases.is_empty() {
        format!("ThetaSphere({n})")
    } else {
        format!("ThetaSphere({n};twisted)")
    };
    Presentation::new(label, alphabet, rules)
}

/// The group algebra of Z/kZ on a single unitary `mu` with `mu^k = 1`.
pub fn cyclic_group(k: u32) -> Result<Presentation, PolyError> {
    if k < 2 {
        return Err(PolyError::InvalidParams("cyclic order must be >= 2".into()));
    }
    let alphabet = Alphabet::builder().pair_star_last("mu", k).build();
    let mu = alphabet.letter("mu").unwrap();
    let mu_star = alphabet.letter("mu*").unwrap();
    let rules = vec![
        (Word::single(mu).power(k as usize), NCPoly::one(&alphabet)),
        (
            Word::single(mu_star),
            NCPoly::word(&alphabet, Word::single(mu).power(k as usize - 1)),
        ),
    ];
    Presentation::new(format!("CyclicGroup({k})"), alphabet, rules)
}

/// The clock/shift presentation of the k x k matrix algebra:
/// unitaries `v` (clock) and `w` (shift) with `v^k = w^k = 1` and
/// `v w = omega w v` for `omega = zeta_k`.
pub fn clock_shift(k: u32) -> Result<Presentation, PolyError> {
    if k < 2 {
        return Err(PolyError::InvalidParams("matrix size must be >= 2".into()));
    }
    let omega_bar = Cyclotomic::root_of_unity(k, -1)?;
    let alphabet = Alphabet::builder()
        .pair_star_last("v", k)
        .pair_star_last("w", k)
        .build();
    let v = alphabet.letter("v").unwrap();
    let vs = alphabet.letter("v*").unwrap();
    let w = alphabet.letter("w").unwrap();
    let ws = alphabet.letter("w*").unwrap();
    let rules = vec![
        (Word::single(v).power(k as usize), NCPoly::one(&alphabet)),
        (Word::single(w).power(k as usize), NCPoly::one(&alphabet)),
        (
            Word::single(vs),
            NCPoly::word(&alphabet, Word::single(v).power(k as usize - 1)),
        ),
        (
            Word::single(ws),
            NCPoly::word(&alphabet, Word::single(w).power(k as usize - 1)),
        ),
        // w v -> omega^{-1} v w, i.e. v w = omega w v.
        (
            Word::from_letters(vec![w, v]),
            NCPoly::monomial(
                &alphabet,
                Word::from_letters(vec![v, w]),
                PathScalar::from_cyclotomic(omega_bar),
            ),
        ),
    ];
    Presentation::new(format!("ClockShift({k})"), alphabet, rules)
}

/// String-keyed construction used by the scenario file format.
#[derive(Clone, Debug)]
pub enum BuiltinSpec {
    Circle,
    FreeSphere,
    ThetaSphere {
        n: usize,
        phases: Vec<((usize, usize), Cyclotomic)>,
    },
    CyclicGroup {
        k: u32,
    },
}

pub fn builtin_presentation(spec: &BuiltinSpec) -> Result<Presentation, PolyError> {
    match spec {
        BuiltinSpec::Circle => Ok(circle()),
        BuiltinSpec::FreeSphere => Ok(free_sphere()),
        BuiltinSpec::ThetaSphere { n, phases } => theta_sphere(*n, phases),
        BuiltinSpec::CyclicGroup { k } => cyclic_group(*k),
    }
}

/// Convenience: `1/k` as an exact coefficient.
pub fn one_over(k: u32) -> PathScalar {
    PathScalar::from_cyclotomic(Cyclotomic::from_rational(BigRational::new(
        1.into(),
        i64::from(k).into(),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_unit_irreducible() {
        let pres = circle();
        assert_eq!(pres.rules().len(), 2);
        assert!(pres.is_irreducible_word(&Word::empty()));
        let z = NCPoly::gen(pres.alphabet(), "z");
        let zs = NCPoly::gen(pres.alphabet(), "z*");
        let nf = pres.normal_form(&z.mul(&zs)).unwrap();
        assert!(nf.is_one());
    }

    #[test]
    fn free_sphere_relation_orientation() {
        let pres = free_sphere();
        let x = NCPoly::gen(pres.alphabet(), "x");
        let y = NCPoly::gen(pres.alphabet(), "y");
        let nf = pres.normal_form(&y.mul(&y)).unwrap();
        let expected = NCPoly::one(pres.alphabet()).sub(&x.mul(&x));
        assert_eq!(nf, expected);
        // x^2 + y^2 - 1 reduces to zero; xy - yx does not.
        let sphere = x.mul(&x).add(&y.mul(&y)).sub(&NCPoly::one(pres.alphabet()));
        assert!(pres.is_zero_mod(&sphere).unwrap());
        let comm = x.mul(&y).sub(&y.mul(&x));
        assert!(!pres.is_zero_mod(&comm).unwrap());
    }

    #[test]
    fn free_sphere_central_square() {
        // x^2 commutes with y modulo the sphere relation.
        let pres = free_sphere();
        let x = NCPoly::gen(pres.alphabet(), "x");
        let y = NCPoly::gen(pres.alphabet(), "y");
        let xx = x.mul(&x);
        let defect = y.mul(&xx).sub(&xx.mul(&y));
        assert!(pres.is_zero_mod(&defect).unwrap());
        // Both reduction routes of y^3 agree.
        let y3 = y.mul(&y).mul(&y);
        let route1 = pres.normal_form(&y3).unwrap();
        let route2 = pres
            .normal_form(&y.mul(&pres.normal_form(&y.mul(&y)).unwrap()))
            .unwrap();
        assert_eq!(route1, route2);
    }

    #[test]
    fn cyclic_group_two() {
        let pres = cyclic_group(2).unwrap();
        let mu = NCPoly::gen(pres.alphabet(), "mu");
        let mu_star = NCPoly::gen(pres.alphabet(), "mu*");
        assert!(pres
            .is_zero_mod(&mu.mul(&mu).sub(&NCPoly::one(pres.alphabet())))
            .unwrap());
        assert_eq!(pres.normal_form(&mu_star).unwrap(), mu);
    }

    #[test]
    fn cyclic_group_star_power() {
        for k in [3u32, 5] {
            let pres = cyclic_group(k).unwrap();
            let mu = NCPoly::gen(pres.alphabet(), "mu");
            let mu_star = NCPoly::gen(pres.alphabet(), "mu*");
            // mu* = mu^{k-1} and mu mu* = 1.
            assert_eq!(
                pres.normal_form(&mu_star).unwrap(),
                pres.normal_form(&mu.pow(k - 1)).unwrap()
            );
            assert!(pres
                .is_zero_mod(&mu.mul(&mu_star).sub(&NCPoly::one(pres.alphabet())))
                .unwrap());
        }
    }

    #[test]
    fn antisphere_anticommutation() {
        let minus_one = Cyclotomic::from_integer(-1);
        let pres = theta_sphere(2, &[((1, 2), minus_one)]).unwrap();
        let z1 = NCPoly::gen(pres.alphabet(), "z1");
        let z2 = NCPoly::gen(pres.alphabet(), "z2");
        // z2 z1 -> -z1 z2
        let nf = pres.normal_form(&z2.mul(&z1)).unwrap();
        assert_eq!(nf, z1.mul(&z2).neg());
        // sphere relation
        let z1s = NCPoly::gen(pres.alphabet(), "z1*");
        let z2s = NCPoly::gen(pres.alphabet(), "z2*");
        let sphere = z1
            .mul(&z1s)
            .add(&z2.mul(&z2s))
            .sub(&NCPoly::one(pres.alphabet()));
        assert!(pres.is_zero_mod(&sphere).unwrap());
    }

    #[test]
    fn theta_sphere_rejects_non_root_phase() {
        let bad = Cyclotomic::rational(1, 2);
        assert!(theta_sphere(2, &[((1, 2), bad)]).is_err());
    }

    #[test]
    fn clock_shift_dimensions() {
        for k in [2u32, 3] {
            let pres = clock_shift(k).unwrap();
            let v = NCPoly::gen(pres.alphabet(), "v");
            let w = NCPoly::gen(pres.alphabet(), "w");
            let omega = Cyclotomic::root_of_unity(k, 1).unwrap();
            // v w = omega w v
            let defect = v.mul(&w).sub(&w.mul(&v).scale_cyclotomic(&omega));
            assert!(pres.is_zero_mod(&defect).unwrap());
            assert!(pres
                .is_zero_mod(&v.pow(k).sub(&NCPoly::one(pres.alphabet())))
                .unwrap());
        }
    }
}
