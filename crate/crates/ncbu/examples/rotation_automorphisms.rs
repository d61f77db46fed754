//! The rotation family `R(s,t): x -> s x + t y, y -> -t x + s y` on the free
//! sphere: a validated one-parameter family of automorphisms with exact
//! inverse `R(s,-t)`, connecting the identity to the antipodal map through
//! the double-angle composite.
//!
//! Run with: cargo run -p ncbu --example rotation_automorphisms

use std::sync::Arc;

use ncbu::hom::{rotation_at, rotation_family, rotation_family_inverse, GenHom};
use ncbu::poly::{builtins, NCPoly};
use ncbu::scalar::Cyclotomic;

fn main() {
    let sphere = Arc::new(builtins::free_sphere());
    let x = NCPoly::gen(sphere.alphabet(), "x");
    let x_l = sphere.alphabet().letter("x").unwrap();
    let y_l = sphere.alphabet().letter("y").unwrap();

    let rot = rotation_family(&sphere).unwrap();
    println!("R(s,t) x = {}", rot.image(x_l));
    println!("R(s,t) y = {}", rot.image(y_l));

    // Exact inverse.
    let inv = rotation_family_inverse(&sphere).unwrap();
    let id = GenHom::identity(&sphere);
    let round = GenHom::compose(&inv, &rot).unwrap();
    println!("R(s,-t) . R(s,t) = id: {}", round.agrees_with(&id).unwrap());

    // Specialization at exact circle points; the negative branch reaches the
    // antipodal map.
    let anti = rotation_at(&sphere, &Cyclotomic::from_integer(-1), &Cyclotomic::zero()).unwrap();
    println!("R(-1,0) x = {}", anti.image(x_l));
    println!("R(-1,0) y = {}", anti.image(y_l));

    // Doubling the family walks the half-circle: at t = 1 the composite is
    // the antipodal map, so the twist is connected to the identity.
    let doubled = GenHom::compose(&rot, &rot).unwrap();
    println!("R(s,t)^2 x = {}", doubled.image(x_l));
    let at_one = doubled
        .image(x_l)
        .subst_scalars(&Cyclotomic::one(), &Cyclotomic::zero())
        .unwrap();
    println!(
        "R(s,t)^2 x at t=1 equals -x: {}",
        sphere.is_zero_mod(&at_one.add(&x)).unwrap()
    );
}
