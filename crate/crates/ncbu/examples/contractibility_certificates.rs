//! Homotopy certificates for contractibility modulo k: the matrix algebra
//! reaches a k-dimensional representation through the swap rotation, the
//! free sphere reaches a one-dimensional representation through a
//! three-segment polynomial chain, and the circle is blocked by the winding
//! obstruction.
//!
//! Run with: cargo run -p ncbu --example contractibility_certificates

use ncbu::scenario::{run_scenario, Config};

fn main() {
    let cfg = Config::default();

    for (name, blurb) in [
        (
            "exam_3_6_matrix",
            "matrix algebra: diagonal embedding to the second tensor leg",
        ),
        (
            "exam_3_8_strong",
            "free sphere: rotation doubling + crossed contraction + point merge",
        ),
        (
            "exam_3_7_circle",
            "circle: all candidate certificates rejected by the winding witness",
        ),
    ] {
        println!("==== {name}: {blurb}");
        let report = run_scenario(name, &cfg).unwrap();
        print!("{}", report.to_text());
        println!();
    }
}
