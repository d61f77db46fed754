//! Serialization formats: scalar text, polynomial term arrays, matrices,
//! path samples, finite-dimensional algebras, and certificates.

use std::sync::Arc;

use ncbu::numeric::{identity, shift_matrix};
use ncbu::obstruction::{projection_rank_path, saturation_check, SampleKind};
use ncbu::poly::builtins;
use ncbu::poly::sampling::{random_poly, SampleConfig};
use ncbu::scenario::json::{
    self, certificate_from_json, finite_dim_algebra_from_json, matrix_from_json, matrix_to_json,
    path_sample_from_json, path_sample_to_json, poly_from_json, poly_to_json,
};
use ncbu::scenario::{Config, Outcome};
use num::complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn polynomials_roundtrip_through_term_arrays() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let cfg = SampleConfig::default();
    for pres in [
        Arc::new(builtins::circle()),
        Arc::new(builtins::free_sphere()),
        Arc::new(builtins::cyclic_group(3).unwrap()),
    ] {
        for _ in 0..40 {
            let p = random_poly(&mut rng, pres.alphabet(), &cfg);
            let encoded = poly_to_json(&p);
            let back = poly_from_json(pres.alphabet(), &encoded).unwrap();
            assert_eq!(back, p);
        }
    }
}

#[test]
fn matrices_roundtrip() {
    let m = shift_matrix(3).map(|x| x * Complex64::new(0.5, -1.25));
    let back = matrix_from_json(&matrix_to_json(&m)).unwrap();
    assert_eq!(back, m);
}

#[test]
fn path_samples_roundtrip_and_verify() {
    let p = ncbu::obstruction::PathSample::new(
        "demo",
        SampleKind::Projection,
        vec![0.0, 0.5, 1.0],
        vec![identity(2), identity(2), identity(2)],
        1.0,
    )
    .unwrap();
    let encoded = path_sample_to_json(&p);
    let text = serde_json::to_string(&encoded).unwrap();
    let decoded: json::PathSampleJson = serde_json::from_str(&text).unwrap();
    let back = path_sample_from_json(&decoded).unwrap();
    assert_eq!(back.grid, p.grid);
    let report = projection_rank_path(&back).unwrap();
    assert!(report.constant);
    assert_eq!(report.endpoint_ranks, (2, 2));
}

#[test]
fn finite_dim_algebras_load_from_json() {
    // C(Z_3) with the cyclic shift, written out longhand.
    let one = [1.0, 0.0];
    let zero = [0.0, 0.0];
    let diag = |i: usize| -> Vec<Vec<[f64; 2]>> {
        (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| if r == c && r == i { one } else { zero })
                    .collect()
            })
            .collect()
    };
    let perm_matrix: Vec<Vec<[f64; 2]>> = vec![
        vec![zero, zero, one],
        vec![one, zero, zero],
        vec![zero, one, zero],
    ];
    let idm: Vec<Vec<[f64; 2]>> = (0..3)
        .map(|r| (0..3).map(|c| if r == c { one } else { zero }).collect())
        .collect();
    let data = json::FiniteDimAlgebraJson {
        label: "C(Z_3)".into(),
        dim: 3,
        k: 3,
        left: vec![diag(0), diag(1), diag(2)],
        unit: vec![one, one, one],
        star: idm,
        action: perm_matrix,
    };
    let alg = finite_dim_algebra_from_json(&data).unwrap();
    let report = saturation_check(&alg).unwrap();
    assert!(report.free());
}

#[test]
fn certificates_roundtrip_from_json() {
    let sphere = Arc::new(builtins::free_sphere());
    let text = r#"{
        "label": "hold still",
        "m": 1,
        "target": "contractible_mod_k",
        "segments": [
            { "kind": "poly", "label": "constant", "lipschitz": 1.0,
              "images": { "x": [[[["x", "1"]]]], "y": [[[["y", "1"]]]] } }
        ]
    }"#;
    let decoded: json::CertificateJson = serde_json::from_str(text).unwrap();
    let cert = certificate_from_json(sphere.alphabet(), &decoded).unwrap();
    assert_eq!(cert.m, 1);
    assert_eq!(cert.segments.len(), 1);
}

#[test]
fn reports_serialize_with_stable_fields() {
    let report = ncbu::scenario::run_scenario("saturation_demos", &Config::default()).unwrap();
    assert_eq!(report.overall, Outcome::Pass);
    let text = report.to_json();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for field in [
        "scenario",
        "toolkit_version",
        "seed",
        "grid",
        "checks",
        "overall",
        "wall_ms",
    ] {
        assert!(value.get(field).is_some(), "missing field {field}");
    }
    // Round-trips through the typed representation.
    let back: ncbu::scenario::Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back.scenario, report.scenario);
}

#[test]
fn scalar_text_rejects_malformed_input() {
    use ncbu::scalar::PathScalar;
    assert!("zeta(4)".parse::<PathScalar>().is_err());
    assert!("t^".parse::<PathScalar>().is_err());
    assert!("1/0".parse::<PathScalar>().is_err());
    assert!("zeta(4,1) * zeta(8,1)".parse::<PathScalar>().is_err());
}

#[test]
fn words_are_accepted_as_token_arrays() {
    let circle = Arc::new(builtins::circle());
    let text = r#"[[["z", "z*"], "1"], ["", "-1"]]"#;
    let terms: json::PolyJson = serde_json::from_str(text).unwrap();
    let p = poly_from_json(circle.alphabet(), &terms).unwrap();
    assert!(circle.is_zero_mod(&p).unwrap());
}

#[test]
fn file_mode_runs_obstruction_checks() {
    use ncbu::scenario::json::{run_file_value, ScenarioFile};
    // A projection path with constant rank, a winding check, and a
    // certificate that (correctly) fails to reach a one-dimensional target.
    let text = r#"{
        "name": "obstruction_checks",
        "presentations": { "circ": { "builtin": "Circle" } },
        "checks": [
            { "op": "rank_path",
              "path": { "label": "hold", "kind": "projection", "grid": [0.0, 1.0],
                        "lipschitz": 1.0,
                        "values": [ [[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0]]],
                                    [[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0]]] ] },
              "expect": "pass" },
            { "op": "winding",
              "loop": [ [[[1.0,0.0]]], [[[0.0,1.0]]], [[[-1.0,0.0]]], [[[0.0,-1.0]]] ],
              "value": 1, "expect": "pass" },
            { "op": "certificate", "over": "circ",
              "rep": { "builtin": "circle_roots", "n": 16 },
              "certificate": {
                  "label": "hold the diagonal",
                  "m": 1,
                  "target": "strongly_contractible_mod_k",
                  "segments": [
                      { "kind": "poly", "label": "constant", "lipschitz": 1.0,
                        "images": { "z": [[[["z", "1"]]]] } }
                  ]
              },
              "track_winding": "z",
              "expect": "fail" }
        ]
    }"#;
    let file: ScenarioFile = serde_json::from_str(text).unwrap();
    let report = run_file_value(&file, &ncbu::scenario::Config::default()).unwrap();
    assert_eq!(report.overall, Outcome::Pass, "{:#?}", report.checks);
    // The failing certificate carries a witness.
    assert!(report.checks[2].witness.is_some());
}
