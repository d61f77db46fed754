//! The exact coefficient ring: cyclotomic rationals extended by the path
//! parameters `t` and `s` with `s^2 = 1 - t^2`.
//!
//! Run with: cargo run -p ncbu --example exact_scalars

use ncbu::scalar::{inv_sqrt2, Cyclotomic, PathScalar};

fn main() {
    // Roots of unity are exact: zeta_4^2 = -1, zeta_3 + zeta_3^2 = -1.
    let i = Cyclotomic::i();
    println!("zeta_4^2          = {}", i.mul(&i));
    let z3 = Cyclotomic::root_of_unity(3, 1).unwrap();
    let z3sq = Cyclotomic::root_of_unity(3, 2).unwrap();
    println!("zeta_3 + zeta_3^2 = {}", z3.add(&z3sq));

    // 1/sqrt(2) lives in conductor 8 and squares to 1/2 exactly.
    let c = inv_sqrt2();
    println!("(1/sqrt2)^2       = {}", c.mul(&c));

    // The path parameters: s^2 reduces to 1 - t^2 on contact.
    let t = PathScalar::t();
    let s = PathScalar::s();
    println!("s * s             = {}", s.mul(&s));

    // Numeric evaluation fixes the positive branch s = +sqrt(1 - t^2).
    let ts = t.mul(&s);
    println!("(t s)(0.6)        = {:.3}", ts.eval(0.6));

    // Exact substitution accepts any point with s0^2 = 1 - t0^2, including
    // the negative branch used by rotation endpoints.
    let v = s
        .subst(&Cyclotomic::zero(), &Cyclotomic::from_integer(-1))
        .unwrap();
    println!("s at (t,s)=(0,-1) = {v}");

    // Scalars serialize as sums of q * zeta(N,j) * t^a * s^b terms.
    let mixed = t
        .mul(&t)
        .scale(&Cyclotomic::rational(-3, 4))
        .add(&s.scale(&Cyclotomic::i()));
    let text = mixed.to_string();
    let back: PathScalar = text.parse().unwrap();
    println!(
        "roundtrip         = {text}  (parses back: {})",
        back == mixed
    );

    // The conductor bound rejects unsupported phases.
    match Cyclotomic::root_of_unity(1 << 20, 1) {
        Err(e) => println!("conductor guard   : {e}"),
        Ok(_) => unreachable!(),
    }
}
