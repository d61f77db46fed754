//! The JSON scenario format: components (presentations, actions, crossed
//! products, homomorphisms, join elements) are declared by name, checks
//! carry their expected verdicts, and the whole file runs through the same
//! engine as the registered scenarios (also available as
//! `ncbu run --file <path>`).
//!
//! Run with: cargo run -p ncbu --example scenario_files

use ncbu::scenario::json::{run_file_value, ScenarioFile};
use ncbu::scenario::Config;

const SCENARIO: &str = r#"
{
  "name": "conjugation_twist_from_a_file",
  "grid": 11,
  "notes": ["the twisted unitary path, declared entirely in JSON"],
  "presentations": { "circ": { "builtin": "Circle" } },
  "actions": {
    "conj": { "on": "circ", "k": 2, "images": { "z": [["z*", "1"]] } },
    "anti": { "on": "circ", "k": 2, "images": { "z": [["z", "-1"]] } }
  },
  "crossed": { "cp": { "base": "circ", "twist": "conj", "k": 2 } },
  "elements": {
    "f": { "in": "cp", "poly": [["z", "t"], ["mu", "zeta(4,1)*s"]] }
  },
  "homs": {
    "phi": { "dom": "circ", "cod": "cp", "images": { "z": [["z", "t"], ["mu", "zeta(4,1)*s"]] } }
  },
  "checks": [
    { "op": "action_validate", "action": "conj", "expect": "pass" },
    { "op": "actions_commute", "a": "conj", "b": "anti", "expect": "pass" },
    { "op": "boundary", "element": "f", "expect": "pass" },
    { "op": "hom_validate", "hom": "phi", "expect": "pass" },
    { "op": "is_zero", "over": "cp",
      "poly": [["mu z", "1"], ["z* mu", "-1"]], "expect": "pass" },
    { "op": "oracle", "over": "cp",
      "rep": { "builtin": "crossed_expand", "crossed": "cp",
               "base": { "builtin": "circle_roots", "n": 8 } },
      "poly": [["mu z mu", "1"], ["z*", "-1"]], "expect": "pass" },
    { "op": "saturation", "algebra": { "kind": "matrix_conjugation", "k": 3 }, "expect": "pass" },
    { "op": "is_zero", "over": "circ", "poly": [["z z", "1"]], "expect": "fail" }
  ]
}
"#;

fn main() {
    let file: ScenarioFile = serde_json::from_str(SCENARIO).unwrap();
    let report = run_file_value(&file, &Config::default()).unwrap();
    print!("{}", report.to_text());
    std::process::exit(report.exit_code());
}
