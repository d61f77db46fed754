//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements are stored as rational coordinate vectors over the power basis
//! `zeta_N^0, ..., zeta_N^{phi(N)-1}`, reduced by the N-th cyclotomic
//! polynomial. All arithmetic is exact; rounding happens only in [`Cyclotomic::eval`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::complex::Complex64;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::error::ScalarError;

/// Default bound on conductors accepted from the outside world.
pub const DEFAULT_CONDUCTOR_MAX: u32 = 64;

/// Configured conductor bound: `NCBU_CONDUCTOR_MAX` or 64.
pub fn conductor_max() -> u32 {
    static MAX: OnceLock<u32> = OnceLock::new();
    *MAX.get_or_init(|| {
        std::env::var("NCBU_CONDUCTOR_MAX")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_CONDUCTOR_MAX)
    })
}

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

/// Coefficients (ascending degree) of the N-th cyclotomic polynomial.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut memo: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = BigInt::from(-1);
        poly[d as usize] = BigInt::one();
        for (e, phi_e) in memo.iter() {
            if d % e == 0 {
                poly = poly_div_exact(&poly, phi_e);
            }
        }
        memo.insert(d, poly);
    }
    memo.remove(&n).expect("divisor chain includes n")
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for j in 0..=dd {
            rem[i + j] -= &c * &den[j];
        }
    }
    assert!(
        rem.iter().all(Zero::is_zero),
        "polynomial division not exact"
    );
    quot
}

/// Reduction table for one conductor: coordinates of every power
/// `zeta^e`, e in 0..N, over the power basis.
struct Table {
    phi: usize,
    rows: Vec<Vec<BigRational>>,
}

fn table(n: u32) -> Arc<Table> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return Arc::clone(t);
    }
    let phi = euler_phi(n) as usize;
    let cyc = cyclotomic_polynomial(n);
    // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
    let top: Vec<BigRational> = (0..phi)
        .map(|i| -BigRational::from_integer(cyc[i].clone()))
        .collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n as usize);
    for e in 0..n as usize {
        if e < phi {
            let mut row = vec![BigRational::zero(); phi];
            row[e] = BigRational::one();
            rows.push(row);
        } else {
            // rows[e] = zeta * rows[e-1], reducing the overflow term by `top`.
            let prev = &rows[e - 1];
            let mut row = vec![BigRational::zero(); phi];
            for i in 0..phi - 1 {
                row[i + 1] = prev[i].clone();
            }
            let carry = prev[phi - 1].clone();
            if !carry.is_zero() {
                for i in 0..phi {
                    row[i] += &carry * &top[i];
                }
            }
            rows.push(row);
        }
    }
    let t = Arc::new(Table { phi, rows });
    guard.insert(n, Arc::clone(&t));
    t
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    let g = gcd_u32(a, b);
    a / g * b
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An element of the cyclotomic field Q(zeta_N), exact.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coords: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coords: vec![BigRational::one()],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coords: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as an exact scalar.
    pub fn rational(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// zeta_N^j, checked against the configured conductor bound.
    pub fn root_of_unity(n: u32, j: i64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroConductor);
        }
        let bound = conductor_max();
        if n > bound {
            return Err(ScalarError::ConductorBound {
                requested: n,
                bound,
            });
        }
        let e = j.rem_euclid(n as i64) as usize;
        let t = table(n);
        Ok(Cyclotomic {
            conductor: n,
            coords: t.rows[e].clone(),
        })
    }

    /// The imaginary unit, zeta_4.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1).expect("4 <= bound")
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// Returns the rational value when the element has no root-of-unity part.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Lift into Q(zeta_m); requires `conductor | m`.
    fn lift(&self, m: u32) -> Cyclotomic {
        if m == self.conductor {
            return self.clone();
        }
        debug_assert_eq!(m % self.conductor, 0);
        let stride = (m / self.conductor) as usize;
        let t = table(m);
        let mut coords = vec![BigRational::zero(); t.phi];
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.rows[(i * stride) % m as usize];
            for (k, r) in row.iter().enumerate() {
                coords[k] += c * r;
            }
        }
        Cyclotomic {
            conductor: m,
            coords,
        }
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic, u32) {
        let m = lcm_u32(a.conductor, b.conductor);
        (a.lift(m), b.lift(m), m)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b, m) = Self::common(self, other);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x += y;
        }
        Cyclotomic {
            conductor: m,
            coords: a.coords,
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b, m) = Self::common(self, other);
        let t = table(m);
        let mut coords = vec![BigRational::zero(); t.phi];
        for (i, ci) in a.coords.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in b.coords.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let prod = ci * cj;
                let row = &t.rows[(i + j) % m as usize];
                for (k, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        coords[k] += &prod * r;
                    }
                }
            }
        }
        Cyclotomic {
            conductor: m,
            coords,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    /// Complex conjugation: zeta_N -> zeta_N^{N-1}.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.conductor as usize;
        let t = table(self.conductor);
        let mut coords = vec![BigRational::zero(); t.phi];
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.rows[(n - i) % n];
            for (k, r) in row.iter().enumerate() {
                coords[k] += c * r;
            }
        }
        Cyclotomic {
            conductor: self.conductor,
            coords,
        }
    }

    pub fn pow(&self, e: u32) -> Cyclotomic {
        let mut acc = Cyclotomic::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Floating-point value; the only lossy operation on this type.
    pub fn eval(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (i as f64) / n;
            let q = c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
            acc += Complex64::new(angle.cos(), angle.sin()) * q;
        }
        acc
    }

    /// True when `self` is a root of unity of order dividing `2 * conductor`.
    /// Roots of unity inside Q(zeta_N) are exactly `+/- zeta_N^j`.
    pub fn is_root_of_unity(&self) -> bool {
        let e = self.pow(2 * self.conductor);
        e.is_one()
    }

    /// Basis coordinates, for serialization and display.
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Self::common(self, other);
        a.coords == b.coords
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "zeta({},{})", self.conductor, i)?;
            } else {
                write!(f, "{c}*zeta({},{})", self.conductor, i)?;
            }
        }
        Ok(())
    }
}

/// Formats a rational without a denominator of 1.
pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p`, or `p/q`.
pub(crate) fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let parse_int = |x: &str| -> Result<BigInt, ScalarError> {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| ScalarError::Parse(format!("bad integer `{x}`")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(ScalarError::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u32, j: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, j).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(64), 32);
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = zeta(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn minus_one_as_second_root() {
        assert_eq!(zeta(2, 1), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let sum = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(sum, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn root_power_wraps() {
        // zeta_N^N = 1 under multiplication.
        for n in [2u32, 3, 4, 5, 6, 8, 12] {
            let z = zeta(n, 1);
            assert!(z.pow(n).is_one(), "conductor {n}");
        }
    }

    #[test]
    fn conjugation_inverts_roots() {
        for n in [3u32, 4, 8] {
            let z = zeta(n, 1);
            assert!(z.mul(&z.conj()).is_one());
            assert_eq!(z.conj().conj(), z);
        }
    }

    #[test]
    fn cross_conductor_equality() {
        // zeta_4^2 = zeta_2 = -1 even though conductors differ.
        assert_eq!(zeta(4, 2), zeta(2, 1));
        assert_eq!(zeta(8, 4), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn sqrt2_from_conductor_8() {
        // zeta_8 + zeta_8^{-1} = sqrt(2); squaring gives 2 exactly.
        let s = zeta(8, 1).add(&zeta(8, 7));
        assert_eq!(s.mul(&s), Cyclotomic::from_integer(2));
        let inv_sqrt2 = s.scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(inv_sqrt2.mul(&inv_sqrt2), Cyclotomic::rational(1, 2));
    }

    #[test]
    fn conductor_bound_enforced() {
        let err = Cyclotomic::root_of_unity(128, 1).unwrap_err();
        assert!(matches!(err, ScalarError::ConductorBound { .. }));
    }

    #[test]
    fn eval_matches_angle() {
        let z = zeta(8, 1);
        let v = z.eval();
        let expected = Complex64::from_polar(1.0, std::f64::consts::PI / 4.0);
        assert!((v - expected).norm() < 1e-14);
    }

    #[test]
    fn roots_of_unity_detected() {
        assert!(zeta(8, 3).is_root_of_unity());
        assert!(zeta(8, 3).neg().is_root_of_unity());
        assert!(!Cyclotomic::rational(1, 2).is_root_of_unity());
        let golden_like = zeta(8, 1).add(&Cyclotomic::rational(1, 3));
        assert!(!golden_like.is_root_of_unity());
    }
}
