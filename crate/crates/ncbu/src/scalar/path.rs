//! The coefficient ring for path-parametrized elements: cyclotomic rationals
//! extended by commuting parameters `t` and `s` subject to `s^2 = 1 - t^2`.
//!
//! Every stored monomial keeps `s`-degree at most 1; `s^2` is rewritten to
//! `1 - t^2` eagerly, so equality of reduced forms is coefficient equality.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use num::{BigRational, One, ToPrimitive, Zero};

use super::cyclotomic::{fmt_rational, parse_rational, Cyclotomic};
use crate::error::ScalarError;

/// A polynomial in `t` and `s` (with `s^2 = 1 - t^2`) over cyclotomic rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct PathScalar {
    /// (t-degree, s-degree) -> coefficient; s-degree is 0 or 1.
    terms: BTreeMap<(u32, u8), Cyclotomic>,
}

impl PathScalar {
    pub fn zero() -> Self {
        PathScalar {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_cyclotomic(Cyclotomic::one())
    }

    pub fn from_cyclotomic(c: Cyclotomic) -> Self {
        let mut p = Self::zero();
        p.insert((0, 0), c);
        p
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_cyclotomic(Cyclotomic::from_integer(n))
    }

    pub fn rational(p: i64, q: i64) -> Self {
        Self::from_cyclotomic(Cyclotomic::rational(p, q))
    }

    /// The path parameter `t`.
    pub fn t() -> Self {
        let mut p = Self::zero();
        p.insert((1, 0), Cyclotomic::one());
        p
    }

    /// The formal square root `s` of `1 - t^2` (positive branch at evaluation).
    pub fn s() -> Self {
        let mut p = Self::zero();
        p.insert((0, 1), Cyclotomic::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(Cyclotomic::is_one)
                .unwrap_or(false)
    }

    /// Returns the constant part when there is no t/s dependence.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        if self.terms.is_empty() {
            return Some(Cyclotomic::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Inserts `c * t^a * s^b`, reducing `s^2 -> 1 - t^2` as needed.
    fn insert(&mut self, key: (u32, u8), c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let (a, b) = key;
        if b >= 2 {
            // c * t^a * s^b = c * t^a * s^(b-2) - c * t^(a+2) * s^(b-2)
            self.insert((a, b - 2), c.clone());
            self.insert((a + 2, b - 2), c.neg());
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Cyclotomic::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &PathScalar) -> PathScalar {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PathScalar) -> PathScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PathScalar {
        PathScalar {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &PathScalar) -> PathScalar {
        let mut out = PathScalar::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.insert((a1 + a2, b1 + b2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> PathScalar {
        if c.is_zero() {
            return PathScalar::zero();
        }
        let mut out = PathScalar::zero();
        for (k, v) in &self.terms {
            out.insert(*k, v.mul(c));
        }
        out
    }

    pub fn scale_rational(&self, q: &BigRational) -> PathScalar {
        self.scale(&Cyclotomic::from_rational(q.clone()))
    }

    /// Conjugation fixes `t` and `s` and conjugates coefficients.
    pub fn conj(&self) -> PathScalar {
        PathScalar {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> PathScalar {
        let mut acc = PathScalar::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Numeric evaluation with `t = t0`, `s = +sqrt(1 - t0^2)`, for `0 <= t0 <= 1`.
    pub fn eval(&self, t0: f64) -> Complex64 {
        let s0 = (1.0 - t0 * t0).max(0.0).sqrt();
        let mut acc = Complex64::new(0.0, 0.0);
        for ((a, b), c) in &self.terms {
            let factor = t0.powi(*a as i32) * if *b == 1 { s0 } else { 1.0 };
            acc += c.eval() * factor;
        }
        acc
    }

    /// Exact substitution `t -> t0`, `s -> s0`; requires `s0^2 = 1 - t0^2`.
    pub fn subst(&self, t0: &Cyclotomic, s0: &Cyclotomic) -> Result<Cyclotomic, ScalarError> {
        let one = Cyclotomic::one();
        if s0.mul(s0).add(&t0.mul(t0)) != one {
            return Err(ScalarError::BranchMismatch);
        }
        let mut acc = Cyclotomic::zero();
        for ((a, b), c) in &self.terms {
            let mut term = c.mul(&t0.pow(*a));
            if *b == 1 {
                term = term.mul(s0);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    pub fn max_t_degree(&self) -> u32 {
        self.terms.keys().map(|(a, _)| *a).max().unwrap_or(0)
    }

    pub fn max_s_degree(&self) -> u8 {
        self.terms.keys().map(|(_, b)| *b).max().unwrap_or(0)
    }

    /// Terms iterator, for serialization.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u8), &Cyclotomic)> {
        self.terms.iter()
    }
}

impl fmt::Debug for PathScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PathScalar {
    /// Text form: a sum of `q * zeta(N,j) * t^a * s^b` terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for ((a, b), c) in &self.terms {
            let n = c.conductor();
            for (j, q) in c.coords().iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let mut factors: Vec<String> = Vec::new();
                if j > 0 {
                    factors.push(format!("zeta({n},{j})"));
                }
                match *a {
                    0 => {}
                    1 => factors.push("t".into()),
                    d => factors.push(format!("t^{d}")),
                }
                if *b == 1 {
                    factors.push("s".into());
                }
                let q_str = fmt_rational(q);
                let term = if factors.is_empty() {
                    q_str
                } else if q.is_one() {
                    factors.join("*")
                } else if (-q).is_one() {
                    format!("-{}", factors.join("*"))
                } else {
                    format!("{}*{}", q_str, factors.join("*"))
                };
                parts.push(term);
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for PathScalar {
    type Err = ScalarError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let input = input.trim();
        if input.is_empty() || input == "0" {
            return Ok(PathScalar::zero());
        }
        let mut out = PathScalar::zero();
        for raw_term in input.split('+') {
            let term = raw_term.trim();
            if term.is_empty() {
                return Err(ScalarError::Parse("empty term".into()));
            }
            let (negate, term) = match term.strip_prefix('-') {
                Some(rest) => (true, rest.trim()),
                None => (false, term),
            };
            let mut q = BigRational::from_integer(1.into());
            let mut zeta: Option<(u32, i64)> = None;
            let mut t_deg: u32 = 0;
            let mut s_deg: u8 = 0;
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(ScalarError::Parse(format!("empty factor in `{term}`")));
                }
                if let Some(rest) = factor.strip_prefix("zeta(") {
                    let inner = rest
                        .strip_suffix(')')
                        .ok_or_else(|| ScalarError::Parse(format!("bad zeta `{factor}`")))?;
                    let (n_str, j_str) = inner
                        .split_once(',')
                        .ok_or_else(|| ScalarError::Parse(format!("bad zeta `{factor}`")))?;
                    let n: u32 = n_str
                        .trim()
                        .parse()
                        .map_err(|_| ScalarError::Parse(format!("bad conductor `{n_str}`")))?;
                    let j: i64 = j_str
                        .trim()
                        .parse()
                        .map_err(|_| ScalarError::Parse(format!("bad exponent `{j_str}`")))?;
                    zeta = Some(match zeta {
                        None => (n, j),
                        Some(_) => {
                            return Err(ScalarError::Parse(
                                "at most one zeta factor per term".into(),
                            ))
                        }
                    });
                } else if factor == "t" {
                    t_deg += 1;
                } else if factor == "s" {
                    s_deg += 1;
                } else if let Some(rest) = factor.strip_prefix("t^") {
                    t_deg += rest
                        .parse::<u32>()
                        .map_err(|_| ScalarError::Parse(format!("bad power `{factor}`")))?;
                } else if let Some(rest) = factor.strip_prefix("s^") {
                    s_deg += rest
                        .parse::<u8>()
                        .map_err(|_| ScalarError::Parse(format!("bad power `{factor}`")))?;
                } else {
                    q *= parse_rational(factor)?;
                }
            }
            let mut coeff = match zeta {
                Some((n, j)) => Cyclotomic::root_of_unity(n, j)?,
                None => Cyclotomic::one(),
            };
            coeff = coeff.scale(&q);
            if negate {
                coeff = coeff.neg();
            }
            out.insert((t_deg, s_deg), coeff);
        }
        Ok(out)
    }
}

/// `1/sqrt(2)` as the conductor-8 cyclotomic `(zeta_8 + zeta_8^-1)/2`.
pub fn inv_sqrt2() -> Cyclotomic {
    let z = Cyclotomic::root_of_unity(8, 1).expect("conductor 8");
    let zi = Cyclotomic::root_of_unity(8, 7).expect("conductor 8");
    z.add(&zi).scale(&BigRational::new(1.into(), 2.into()))
}

/// Approximate float value of a rational, used by numeric shims.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_squared_reduces() {
        let s = PathScalar::s();
        let t = PathScalar::t();
        let expected = PathScalar::one().sub(&t.mul(&t));
        assert_eq!(s.mul(&s), expected);
        assert_eq!(s.mul(&s).max_s_degree(), 0);
    }

    #[test]
    fn additive_identity() {
        let t = PathScalar::t();
        assert_eq!(t.add(&PathScalar::zero()), t);
    }

    #[test]
    fn i_squared() {
        let i = PathScalar::from_cyclotomic(Cyclotomic::i());
        assert_eq!(i.mul(&i), PathScalar::from_integer(-1));
    }

    #[test]
    fn eval_boundaries() {
        let s = PathScalar::s();
        assert!((s.eval(1.0)).norm() < 1e-15);
        assert!((s.eval(0.0) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        // t*s at t = 0.6: 0.6 * 0.8 = 0.48
        let ts = PathScalar::t().mul(&s);
        assert!((ts.eval(0.6) - Complex64::new(0.48, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn subst_requires_circle_point() {
        let s = PathScalar::s();
        let bad = s.subst(&Cyclotomic::one(), &Cyclotomic::one());
        assert_eq!(bad.unwrap_err(), ScalarError::BranchMismatch);
        // (t, s) -> (0, -1) is a valid exact substitution (negative branch allowed).
        let v = s
            .subst(&Cyclotomic::zero(), &Cyclotomic::from_integer(-1))
            .unwrap();
        assert_eq!(v, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn display_parse_roundtrip() {
        let p = PathScalar::t()
            .mul(&PathScalar::t())
            .scale(&Cyclotomic::rational(-3, 4))
            .add(&PathScalar::s().scale(&Cyclotomic::i()))
            .add(&PathScalar::rational(1, 2));
        let text = p.to_string();
        let back: PathScalar = text.parse().unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn parse_examples() {
        let p: PathScalar = "1/2 * zeta(8,1) * t^2 * s".parse().unwrap();
        assert_eq!(p.max_t_degree(), 2);
        assert_eq!(p.max_s_degree(), 1);
        let q: PathScalar = "t + -1*s".parse().unwrap();
        assert_eq!(q, PathScalar::t().sub(&PathScalar::s()));
    }

    #[test]
    fn inv_sqrt2_squares_to_half() {
        let c = inv_sqrt2();
        assert_eq!(c.mul(&c), Cyclotomic::rational(1, 2));
    }
}
