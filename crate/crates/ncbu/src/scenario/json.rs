//! JSON schemas for the toolkit's data: scalars as term strings, words as
//! letter-token strings, polynomials as `[word, scalar]` term arrays, plus
//! descriptors for presentations, actions, crossed products, homomorphisms,
//! path samples, finite-dimensional algebras, certificates, and whole
//! scenario files runnable from the command line.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::action::CyclicAction;
use crate::crossed::{CrossedPresentation, MatrixOverAlg};
use crate::error::ScenarioError;
use crate::hom::GenHom;
use crate::join::JoinElement;
use crate::numeric::{self, CMatrix, Representation};
use crate::obstruction::{
    self, certificate_verify, function_algebra_with_permutation, matrix_algebra_with_conjugation,
    projection_rank_path, saturation_check, winding_number, CertOptions, Certificate, PathSample,
    SampleKind, Segment, Target,
};
use crate::poly::{builtins, parse_word, Alphabet, NCPoly, Presentation};
use crate::scalar::{Cyclotomic, PathScalar};
use crate::scenario::report::{Config, Expect, Report, Runner};
use crate::tolerance;

// ---------------------------------------------------------------------------
// Polynomials and matrices

/// A word, accepted either as one whitespace-separated token string
/// (`"z z*"`) or as an explicit token array (`["z", "z*"]`). Serialization
/// always emits the string form.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordField {
    Tokens(Vec<String>),
    Text(String),
}

impl WordField {
    fn as_text(&self) -> String {
        match self {
            WordField::Text(s) => s.clone(),
            WordField::Tokens(ts) => ts.join(" "),
        }
    }
}

/// A polynomial as a list of `[word, scalar]` term pairs.
pub type PolyJson = Vec<(WordField, String)>;

pub fn poly_to_json(p: &NCPoly) -> PolyJson {
    p.terms()
        .map(|(w, c)| {
            (
                WordField::Text(w.display(p.alphabet()).to_string()),
                c.to_string(),
            )
        })
        .collect()
}

pub fn poly_from_json(alphabet: &Arc<Alphabet>, json: &PolyJson) -> Result<NCPoly, ScenarioError> {
    let mut out = NCPoly::zero(alphabet);
    for (word_field, scalar_text) in json {
        let w = parse_word(alphabet, &word_field.as_text())
            .map_err(|e| ScenarioError::BadFile(e.to_string()))?;
        let c: PathScalar = scalar_text
            .parse()
            .map_err(|e: crate::error::ScalarError| ScenarioError::BadFile(e.to_string()))?;
        out = out.add(&NCPoly::monomial(alphabet, w, c));
    }
    Ok(out)
}

/// A complex number as `[re, im]`, a matrix as rows of entries.
pub type MatrixJson = Vec<Vec<[f64; 2]>>;

pub fn matrix_to_json(m: &CMatrix) -> MatrixJson {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| [m[(i, j)].re, m[(i, j)].im])
                .collect()
        })
        .collect()
}

pub fn matrix_from_json(json: &MatrixJson) -> Result<CMatrix, ScenarioError> {
    let rows = json.len();
    if rows == 0 {
        return Err(ScenarioError::BadFile("empty matrix".into()));
    }
    let cols = json[0].len();
    if json.iter().any(|r| r.len() != cols) {
        return Err(ScenarioError::BadFile("ragged matrix".into()));
    }
    Ok(CMatrix::from_fn(rows, cols, |i, j| {
        Complex64::new(json[i][j][0], json[i][j][1])
    }))
}

/// A matrix over the algebra as nested arrays of polynomial term lists.
pub type AlgMatrixJson = Vec<Vec<PolyJson>>;

pub fn alg_matrix_to_json(m: &MatrixOverAlg) -> AlgMatrixJson {
    (0..m.size())
        .map(|i| (0..m.size()).map(|j| poly_to_json(m.get(i, j))).collect())
        .collect()
}

pub fn alg_matrix_from_json(
    alphabet: &Arc<Alphabet>,
    json: &AlgMatrixJson,
) -> Result<MatrixOverAlg, ScenarioError> {
    let n = json.len();
    if json.iter().any(|r| r.len() != n) {
        return Err(ScenarioError::BadFile(
            "matrix over algebra must be square".into(),
        ));
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in json {
        for cell in row {
            entries.push(poly_from_json(alphabet, cell)?);
        }
    }
    let mut k = 0;
    let m = MatrixOverAlg::from_fn(n, |_, _| {
        let e = entries[k].clone();
        k += 1;
        e
    });
    Ok(m)
}

// ---------------------------------------------------------------------------
// Presentations, actions, homs

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhaseSpec {
    /// 1-based generator pair (j, l) with j < l.
    pub pair: (usize, usize),
    /// The phase as `zeta_{root.0}^{root.1}`.
    pub root: (u32, i64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LetterSpec {
    pub name: String,
    /// `self_adjoint`, `pair_star_first`, or `pair_star_last`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star_weight: Option<u32>,
}

/// A presentation: one of the built-ins or an explicit letter/rule list.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct PresentationSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phases: Vec<PhaseSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub letters: Vec<LetterSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rules: Vec<(String, PolyJson)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

fn build_presentation(name: &str, spec: &PresentationSpec) -> Result<Presentation, ScenarioError> {
    if let Some(builtin) = &spec.builtin {
        let pres = match builtin.as_str() {
            "Circle" => builtins::circle(),
            "FreeSphere" => builtins::free_sphere(),
            "ThetaSphere" => {
                let n = spec
                    .n
                    .ok_or_else(|| ScenarioError::BadFile("ThetaSphere needs `n`".into()))?;
                let phases: Vec<((usize, usize), Cyclotomic)> = spec
                    .phases
                    .iter()
                    .map(|p| {
                        Cyclotomic::root_of_unity(p.root.0, p.root.1)
                            .map(|c| (p.pair, c))
                            .map_err(|e| ScenarioError::BadFile(e.to_string()))
                    })
                    .collect::<Result<_, _>>()?;
                builtins::theta_sphere(n, &phases).map_err(ScenarioError::from)?
            }
            "CyclicGroup" => {
                let k = spec
                    .k
                    .ok_or_else(|| ScenarioError::BadFile("CyclicGroup needs `k`".into()))?;
                builtins::cyclic_group(k).map_err(ScenarioError::from)?
            }
            other => {
                return Err(ScenarioError::BadFile(format!(
                    "unknown builtin presentation `{other}`"
                )))
            }
        };
        return Ok(pres);
    }
    if spec.letters.is_empty() {
        return Err(ScenarioError::BadFile(format!(
            "presentation `{name}` needs either `builtin` or `letters`"
        )));
    }
    let mut builder = Alphabet::builder();
    for l in &spec.letters {
        builder = match l.kind.as_str() {
            "self_adjoint" => builder.self_adjoint(&l.name),
            "pair_star_first" => builder.pair_star_first(&l.name),
            "pair_star_last" => builder.pair_star_last(&l.name, l.star_weight.unwrap_or(2)),
            other => {
                return Err(ScenarioError::BadFile(format!(
                    "unknown letter kind `{other}`"
                )))
            }
        };
    }
    let alphabet = builder.build();
    let mut rules = Vec::new();
    for (lhs_text, rhs_json) in &spec.rules {
        let lhs = parse_word(&alphabet, lhs_text).map_err(ScenarioError::from)?;
        let rhs = poly_from_json(&alphabet, rhs_json)?;
        rules.push((lhs, rhs));
    }
    let label = spec.label.clone().unwrap_or_else(|| name.to_string());
    Presentation::new(label, alphabet, rules).map_err(ScenarioError::from)
}

/// An action given by `k` and generator images.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionSpec {
    /// Presentation (or crossed product) the action lives on.
    pub on: String,
    pub k: u32,
    #[serde(default)]
    pub images: BTreeMap<String, PolyJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossedSpec {
    pub base: String,
    pub twist: String,
    pub k: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomSpec {
    pub dom: String,
    pub cod: String,
    #[serde(default)]
    pub images: BTreeMap<String, PolyJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementSpec {
    /// Crossed product the element lives in.
    pub r#in: String,
    pub poly: PolyJson,
}

/// A representation builder reference.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepSpec {
    pub builtin: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta0: Option<f64>,
    /// For `crossed_expand`: the crossed product name and the base spec.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<RepSpec>>,
}

// ---------------------------------------------------------------------------
// Obstruction data files

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PathSampleJson {
    pub label: String,
    /// `projection`, `unitary`, or `hom_image`.
    pub kind: String,
    pub grid: Vec<f64>,
    pub lipschitz: f64,
    pub values: Vec<MatrixJson>,
}

pub fn path_sample_to_json(p: &PathSample) -> PathSampleJson {
    PathSampleJson {
        label: p.label.clone(),
        kind: match p.kind {
            SampleKind::Projection => "projection".into(),
            SampleKind::Unitary => "unitary".into(),
            SampleKind::HomImage => "hom_image".into(),
        },
        grid: p.grid.clone(),
        lipschitz: p.lipschitz,
        values: p.values.iter().map(matrix_to_json).collect(),
    }
}

pub fn path_sample_from_json(json: &PathSampleJson) -> Result<PathSample, ScenarioError> {
    let kind = match json.kind.as_str() {
        "projection" => SampleKind::Projection,
        "unitary" => SampleKind::Unitary,
        "hom_image" => SampleKind::HomImage,
        other => {
            return Err(ScenarioError::BadFile(format!(
                "unknown sample kind `{other}`"
            )))
        }
    };
    let values = json
        .values
        .iter()
        .map(matrix_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    PathSample::new(
        json.label.clone(),
        kind,
        json.grid.clone(),
        values,
        json.lipschitz,
    )
    .map_err(|e| ScenarioError::BadFile(e.to_string()))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiniteDimAlgebraJson {
    pub label: String,
    pub dim: usize,
    pub k: u32,
    /// Left multiplication operator of each basis element.
    pub left: Vec<MatrixJson>,
    pub unit: Vec<[f64; 2]>,
    pub star: MatrixJson,
    pub action: MatrixJson,
}

pub fn finite_dim_algebra_from_json(
    json: &FiniteDimAlgebraJson,
) -> Result<obstruction::FiniteDimAlgebra, ScenarioError> {
    let left = json
        .left
        .iter()
        .map(matrix_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    let unit = numeric::CVector::from_fn(json.unit.len(), |i, _| {
        Complex64::new(json.unit[i][0], json.unit[i][1])
    });
    let star = matrix_from_json(&json.star)?;
    let action = matrix_from_json(&json.action)?;
    obstruction::FiniteDimAlgebra::new(json.label.clone(), left, unit, star, action, json.k)
        .map_err(|e| ScenarioError::BadFile(e.to_string()))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SegmentJson {
    Poly {
        label: String,
        lipschitz: f64,
        /// generator name -> m x m nested polynomial matrix.
        images: BTreeMap<String, AlgMatrixJson>,
    },
    Sampled {
        label: String,
        lipschitz: f64,
        grid: Vec<f64>,
        images: BTreeMap<String, Vec<MatrixJson>>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub label: String,
    pub m: usize,
    /// `contractible_mod_k` or `strongly_contractible_mod_k`.
    pub target: String,
    pub segments: Vec<SegmentJson>,
}

pub fn certificate_from_json(
    alphabet: &Arc<Alphabet>,
    json: &CertificateJson,
) -> Result<Certificate, ScenarioError> {
    let target = match json.target.as_str() {
        "contractible_mod_k" => Target::ContractibleModK,
        "strongly_contractible_mod_k" => Target::StronglyContractibleModK,
        other => return Err(ScenarioError::BadFile(format!("unknown target `{other}`"))),
    };
    let mut segments = Vec::new();
    for seg in &json.segments {
        segments.push(match seg {
            SegmentJson::Poly {
                label,
                lipschitz,
                images,
            } => Segment::Poly {
                label: label.clone(),
                lipschitz: *lipschitz,
                images: images
                    .iter()
                    .map(|(name, m)| {
                        alg_matrix_from_json(alphabet, m).map(|mat| (name.clone(), mat))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            },
            SegmentJson::Sampled {
                label,
                lipschitz,
                grid,
                images,
            } => Segment::Sampled {
                label: label.clone(),
                lipschitz: *lipschitz,
                grid: grid.clone(),
                images: images
                    .iter()
                    .map(|(name, mats)| {
                        mats.iter()
                            .map(matrix_from_json)
                            .collect::<Result<Vec<_>, _>>()
                            .map(|ms| (name.clone(), ms))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            },
        });
    }
    Ok(Certificate {
        label: json.label.clone(),
        m: json.m,
        target,
        segments,
    })
}

/// Serialization descriptor of a join element: body plus twist reference.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JoinElementJson {
    pub twist: CrossedSpec,
    pub body: PolyJson,
}

pub fn join_element_to_json(e: &JoinElement, base: &str, twist: &str) -> JoinElementJson {
    JoinElementJson {
        twist: CrossedSpec {
            base: base.to_string(),
            twist: twist.to_string(),
            k: e.crossed().order(),
        },
        body: poly_to_json(e.body()),
    }
}

// ---------------------------------------------------------------------------
// Scenario files

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    /// `matrix_conjugation` (clock conjugation on M_k) or
    /// `function_permutation` (C(points) with a permutation), or `file` data.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<FiniteDimAlgebraJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum CheckSpec {
    /// Normal form of the polynomial is zero over the named presentation.
    IsZero {
        over: String,
        poly: PolyJson,
        expect: Expect,
    },
    /// Twisted-join boundary conditions of a named element.
    Boundary {
        element: String,
        expect: Expect,
    },
    ActionValidate {
        action: String,
        expect: Expect,
    },
    ActionsCommute {
        a: String,
        b: String,
        expect: Expect,
    },
    HomValidate {
        hom: String,
        expect: Expect,
    },
    Equivariance {
        hom: String,
        dom_action: String,
        cod_action: String,
        expect: Expect,
    },
    /// Oracle comparison of a polynomial in a built representation.
    Oracle {
        over: String,
        rep: RepSpec,
        poly: PolyJson,
        expect: Expect,
    },
    /// Freeness of a finite-dimensional action by saturation.
    Saturation {
        algebra: AlgebraSpec,
        expect: Expect,
    },
    /// Rank constancy of a projection path.
    RankPath {
        path: PathSampleJson,
        expect: Expect,
    },
    /// Winding number of a loop of matrices equals `value`.
    Winding {
        r#loop: Vec<MatrixJson>,
        value: i64,
        expect: Expect,
    },
    /// Full certificate verification in a built representation.
    Certificate {
        over: String,
        rep: RepSpec,
        certificate: CertificateJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        track_winding: Option<String>,
        expect: Expect,
    },
}

/// A scenario file: named components plus a list of checks with declared
/// expected verdicts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScenarioFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub presentations: BTreeMap<String, PresentationSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub actions: BTreeMap<String, ActionSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub crossed: BTreeMap<String, CrossedSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homs: BTreeMap<String, HomSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub elements: BTreeMap<String, ElementSpec>,
    pub checks: Vec<CheckSpec>,
}

struct ResolvedWorld {
    presentations: BTreeMap<String, Arc<Presentation>>,
    crossed: BTreeMap<String, Arc<CrossedPresentation>>,
    actions: BTreeMap<String, CyclicAction>,
    homs: BTreeMap<String, GenHom>,
    elements: BTreeMap<String, JoinElement>,
}

impl ResolvedWorld {
    fn pres(&self, name: &str) -> Result<Arc<Presentation>, ScenarioError> {
        if let Some(p) = self.presentations.get(name) {
            return Ok(Arc::clone(p));
        }
        if let Some(cp) = self.crossed.get(name) {
            return Ok(Arc::clone(cp.full()));
        }
        Err(ScenarioError::Unresolved(name.to_string()))
    }
}

fn resolve_world(file: &ScenarioFile) -> Result<ResolvedWorld, ScenarioError> {
    let mut world = ResolvedWorld {
        presentations: BTreeMap::new(),
        crossed: BTreeMap::new(),
        actions: BTreeMap::new(),
        homs: BTreeMap::new(),
        elements: BTreeMap::new(),
    };
    for (name, spec) in &file.presentations {
        world
            .presentations
            .insert(name.clone(), Arc::new(build_presentation(name, spec)?));
    }
    // Actions on plain presentations must resolve before crossed products;
    // actions on crossed products resolve afterwards.
    let mut pending: Vec<(&String, &ActionSpec)> = file.actions.iter().collect();
    let mut progress = true;
    while progress {
        progress = false;
        let mut remaining = Vec::new();
        for (name, spec) in pending {
            let target = match world.pres(&spec.on) {
                Ok(p) => p,
                Err(_) => {
                    remaining.push((name, spec));
                    continue;
                }
            };
            let mut images = Vec::new();
            for (gen, poly) in &spec.images {
                images.push((gen.clone(), poly_from_json(target.alphabet(), poly)?));
            }
            let refs: Vec<(&str, NCPoly)> = images
                .iter()
                .map(|(n, p)| (n.as_str(), p.clone()))
                .collect();
            let action = CyclicAction::new(name.clone(), spec.k, &target, &refs)
                .map_err(ScenarioError::from)?;
            world.actions.insert(name.clone(), action);
            progress = true;
        }
        // Build crossed products whose base and twist are now available.
        for (name, spec) in &file.crossed {
            if world.crossed.contains_key(name) {
                continue;
            }
            let base = match world.presentations.get(&spec.base) {
                Some(b) => Arc::clone(b),
                None => continue,
            };
            let twist = match world.actions.get(&spec.twist) {
                Some(a) => a.clone(),
                None => continue,
            };
            world.crossed.insert(
                name.clone(),
                Arc::new(CrossedPresentation::new(base, twist, spec.k)?),
            );
            progress = true;
        }
        pending = remaining;
        if pending.is_empty() {
            break;
        }
    }
    if !pending.is_empty() {
        return Err(ScenarioError::Unresolved(pending[0].1.on.clone()));
    }
    for (name, spec) in &file.crossed {
        if !world.crossed.contains_key(name) {
            return Err(ScenarioError::Unresolved(format!(
                "crossed product `{name}` (base `{}` or twist `{}`)",
                spec.base, spec.twist
            )));
        }
    }
    for (name, spec) in &file.homs {
        let dom = world.pres(&spec.dom)?;
        let cod = world.pres(&spec.cod)?;
        let mut images = Vec::new();
        for (gen, poly) in &spec.images {
            images.push((gen.clone(), poly_from_json(cod.alphabet(), poly)?));
        }
        let refs: Vec<(&str, NCPoly)> = images
            .iter()
            .map(|(n, p)| (n.as_str(), p.clone()))
            .collect();
        let hom = GenHom::new(name.clone(), &dom, &cod, &refs).map_err(ScenarioError::from)?;
        world.homs.insert(name.clone(), hom);
    }
    for (name, spec) in &file.elements {
        let cp = world
            .crossed
            .get(&spec.r#in)
            .ok_or_else(|| ScenarioError::Unresolved(spec.r#in.clone()))?;
        let body = poly_from_json(cp.full().alphabet(), &spec.poly)?;
        world
            .elements
            .insert(name.clone(), JoinElement::new(cp, body));
    }
    Ok(world)
}

fn build_rep(
    world: &ResolvedWorld,
    over: &str,
    spec: &RepSpec,
) -> Result<Representation, ScenarioError> {
    match spec.builtin.as_str() {
        "circle_roots" => {
            let pres = world.pres(over)?;
            Ok(numeric::circle_roots(&pres, spec.n.unwrap_or(8))?)
        }
        "free_sphere_random" => {
            let pres = world.pres(over)?;
            Ok(numeric::free_sphere_random(
                &pres,
                spec.seed.unwrap_or(7),
                spec.theta0.unwrap_or(0.8),
            )?)
        }
        "cyclic_regular" => {
            let pres = world.pres(over)?;
            Ok(numeric::cyclic_regular(
                &pres,
                spec.k
                    .ok_or_else(|| ScenarioError::BadFile("cyclic_regular needs k".into()))?,
            )?)
        }
        "theta_sphere_weyl" => Err(ScenarioError::BadFile(
            "theta_sphere_weyl requires phases; build it through the library API".into(),
        )),
        "crossed_expand" => {
            let crossed_name = spec
                .crossed
                .as_deref()
                .ok_or_else(|| ScenarioError::BadFile("crossed_expand needs `crossed`".into()))?;
            let cp = world
                .crossed
                .get(crossed_name)
                .ok_or_else(|| ScenarioError::Unresolved(crossed_name.to_string()))?;
            let base_spec = spec
                .base
                .as_deref()
                .ok_or_else(|| ScenarioError::BadFile("crossed_expand needs `base`".into()))?;
            let base_rep = build_rep(world, &find_base_name(world, cp)?, base_spec)?;
            Ok(numeric::crossed_expand(cp, &base_rep)?)
        }
        other => Err(ScenarioError::BadFile(format!(
            "unknown representation builder `{other}`"
        ))),
    }
}

fn find_base_name(
    world: &ResolvedWorld,
    cp: &CrossedPresentation,
) -> Result<String, ScenarioError> {
    for (name, pres) in &world.presentations {
        if Arc::ptr_eq(pres, cp.base()) {
            return Ok(name.clone());
        }
    }
    Err(ScenarioError::Unresolved(
        "base presentation of crossed product".into(),
    ))
}

fn build_algebra(spec: &AlgebraSpec) -> Result<obstruction::FiniteDimAlgebra, ScenarioError> {
    match spec.kind.as_str() {
        "matrix_conjugation" => {
            let k = spec
                .k
                .ok_or_else(|| ScenarioError::BadFile("matrix_conjugation needs k".into()))?;
            Ok(matrix_algebra_with_conjugation(
                k as usize,
                &numeric::clock_matrix(k as usize),
                k,
            )?)
        }
        "function_permutation" => {
            let perm = spec
                .perm
                .as_ref()
                .ok_or_else(|| ScenarioError::BadFile("function_permutation needs perm".into()))?;
            let k = spec
                .k
                .ok_or_else(|| ScenarioError::BadFile("function_permutation needs k".into()))?;
            Ok(function_algebra_with_permutation(
                perm.len(),
                perm,
                k,
                "C(points)",
            )?)
        }
        "file" => {
            let data = spec
                .data
                .as_ref()
                .ok_or_else(|| ScenarioError::BadFile("file algebra needs data".into()))?;
            finite_dim_algebra_from_json(data)
        }
        other => Err(ScenarioError::BadFile(format!(
            "unknown algebra kind `{other}`"
        ))),
    }
}

/// Runs a scenario file. Component construction failures are infrastructure
/// errors; check failures are recorded in the report.
pub fn run_file_value(file: &ScenarioFile, cfg: &Config) -> Result<Report, ScenarioError> {
    let effective = Config {
        k: cfg.k,
        seed: cfg.seed.max(file.seed.unwrap_or(cfg.seed)),
        grid: cfg.grid.or(file.grid),
    };
    let mut r = Runner::new(file.name.clone(), &effective, file.grid.unwrap_or(11));
    for n in &file.notes {
        r.note(n.clone());
    }
    let world = resolve_world(file)?;

    for (i, check) in file.checks.iter().enumerate() {
        let tag = format!("check {}", i + 1);
        match check {
            CheckSpec::IsZero { over, poly, expect } => {
                let pres = world.pres(over)?;
                let p = poly_from_json(pres.alphabet(), poly)?;
                r.check_zero(&format!("{tag}: normal form vanishes"), &pres, &p, *expect);
            }
            CheckSpec::Boundary { element, expect } => {
                let e = world
                    .elements
                    .get(element)
                    .ok_or_else(|| ScenarioError::Unresolved(element.clone()))?;
                match e.boundary_check() {
                    Ok(v) => r.check_bool(
                        &format!("{tag}: boundary conditions of `{element}`"),
                        *expect,
                        v.passed(),
                        "",
                        v.witness(),
                    ),
                    Err(err) => r.check_error(
                        &format!("{tag}: boundary conditions of `{element}`"),
                        *expect,
                        err,
                    ),
                }
            }
            CheckSpec::ActionValidate { action, expect } => {
                let a = world
                    .actions
                    .get(action)
                    .ok_or_else(|| ScenarioError::Unresolved(action.clone()))?;
                let pres = world.pres(
                    file.actions
                        .get(action)
                        .map(|s| s.on.as_str())
                        .unwrap_or(action),
                )?;
                match a.validate(&pres) {
                    Ok(report) => r.check_bool(
                        &format!("{tag}: action `{action}` validates"),
                        *expect,
                        report.valid(),
                        "",
                        report.first_defect(),
                    ),
                    Err(err) => {
                        r.check_error(&format!("{tag}: action `{action}` validates"), *expect, err)
                    }
                }
            }
            CheckSpec::ActionsCommute { a, b, expect } => {
                let aa = world
                    .actions
                    .get(a)
                    .ok_or_else(|| ScenarioError::Unresolved(a.clone()))?;
                let bb = world
                    .actions
                    .get(b)
                    .ok_or_else(|| ScenarioError::Unresolved(b.clone()))?;
                let pres = world.pres(file.actions.get(a).map(|s| s.on.as_str()).unwrap_or(a))?;
                match aa.commutes_with(bb, &pres) {
                    Ok(None) => r.check_bool(
                        &format!("{tag}: actions `{a}` and `{b}` commute"),
                        *expect,
                        true,
                        "",
                        None,
                    ),
                    Ok(Some((letter, defect))) => r.check_bool(
                        &format!("{tag}: actions `{a}` and `{b}` commute"),
                        *expect,
                        false,
                        format!("defect on {letter}"),
                        Some(defect.to_string()),
                    ),
                    Err(err) => r.check_error(
                        &format!("{tag}: actions `{a}` and `{b}` commute"),
                        *expect,
                        err,
                    ),
                }
            }
            CheckSpec::HomValidate { hom, expect } => {
                let mut h = world
                    .homs
                    .get(hom)
                    .ok_or_else(|| ScenarioError::Unresolved(hom.clone()))?
                    .clone();
                match h.validate() {
                    Ok(report) => r.check_bool(
                        &format!("{tag}: hom `{hom}` validates"),
                        *expect,
                        report.valid(),
                        "",
                        report.first_defect(),
                    ),
                    Err(err) => {
                        r.check_error(&format!("{tag}: hom `{hom}` validates"), *expect, err)
                    }
                }
            }
            CheckSpec::Equivariance {
                hom,
                dom_action,
                cod_action,
                expect,
            } => {
                let mut h = world
                    .homs
                    .get(hom)
                    .ok_or_else(|| ScenarioError::Unresolved(hom.clone()))?
                    .clone();
                let da = world
                    .actions
                    .get(dom_action)
                    .ok_or_else(|| ScenarioError::Unresolved(dom_action.clone()))?;
                let ca = world
                    .actions
                    .get(cod_action)
                    .ok_or_else(|| ScenarioError::Unresolved(cod_action.clone()))?;
                let name = format!("{tag}: `{hom}` is ({dom_action}, {cod_action})-equivariant");
                let result = h
                    .validate()
                    .map_err(ScenarioError::from)
                    .and_then(|_| h.equivariance_check(da, ca).map_err(ScenarioError::from));
                match result {
                    Ok(report) => {
                        r.check_bool(&name, *expect, report.pass(), "", report.first_defect())
                    }
                    Err(err) => r.check_error(&name, *expect, err),
                }
            }
            CheckSpec::Oracle {
                over,
                rep,
                poly,
                expect,
            } => {
                let pres = world.pres(over)?;
                let p = poly_from_json(pres.alphabet(), poly)?;
                match build_rep(&world, over, rep) {
                    Ok(representation) => {
                        let grid = r.grid();
                        match numeric::oracle_compare(&representation, &p, &pres, &grid) {
                            Ok(res) => r.check_residual(
                                &format!("{tag}: oracle residual"),
                                res,
                                tolerance::DERIVED,
                                *expect,
                            ),
                            Err(err) => {
                                r.check_error(&format!("{tag}: oracle residual"), *expect, err)
                            }
                        }
                    }
                    Err(err) => r.check_error(&format!("{tag}: oracle residual"), *expect, err),
                }
            }
            CheckSpec::Saturation { algebra, expect } => {
                match build_algebra(algebra)
                    .and_then(|alg| saturation_check(&alg).map_err(ScenarioError::from))
                {
                    Ok(report) => r.check_bool(
                        &format!("{tag}: action is free (saturation)"),
                        *expect,
                        report.free(),
                        format!(
                            "ideal dims {:?}",
                            report
                                .per_gamma
                                .iter()
                                .map(|g| g.ideal_dim)
                                .collect::<Vec<_>>()
                        ),
                        None,
                    ),
                    Err(err) => {
                        r.check_error(&format!("{tag}: action is free (saturation)"), *expect, err)
                    }
                }
            }
            CheckSpec::RankPath { path, expect } => {
                match path_sample_from_json(path)
                    .and_then(|p| projection_rank_path(&p).map_err(ScenarioError::from))
                {
                    Ok(report) => r.check_bool(
                        &format!("{tag}: projection rank is constant"),
                        *expect,
                        report.constant,
                        format!("ranks {:?}", report.ranks),
                        None,
                    ),
                    Err(err) => {
                        r.check_error(&format!("{tag}: projection rank is constant"), *expect, err)
                    }
                }
            }
            CheckSpec::Winding {
                r#loop: loop_json,
                value,
                expect,
            } => {
                let mats = loop_json
                    .iter()
                    .map(matrix_from_json)
                    .collect::<Result<Vec<_>, _>>()?;
                match winding_number(&mats) {
                    Ok(w) => r.check_bool(
                        &format!("{tag}: winding number equals {value}"),
                        *expect,
                        w == *value,
                        format!("computed {w}"),
                        None,
                    ),
                    Err(err) => r.check_error(
                        &format!("{tag}: winding number equals {value}"),
                        *expect,
                        err,
                    ),
                }
            }
            CheckSpec::Certificate {
                over,
                rep,
                certificate,
                track_winding,
                expect,
            } => {
                let pres = world.pres(over)?;
                let name = format!("{tag}: certificate `{}`", certificate.label);
                let outcome = build_rep(&world, over, rep).and_then(|representation| {
                    let cert = certificate_from_json(pres.alphabet(), certificate)?;
                    let opts = CertOptions {
                        track_winding: track_winding.clone(),
                        ..CertOptions::default()
                    };
                    certificate_verify(&cert, &pres, &[&representation], &opts)
                        .map_err(ScenarioError::from)
                });
                match outcome {
                    Ok(report) => r.check_bool(
                        &name,
                        *expect,
                        report.pass(),
                        "",
                        report.first_failure().map(str::to_string),
                    ),
                    Err(err) => r.check_error(&name, *expect, err),
                }
            }
        }
    }
    Ok(r.finish())
}

/// Loads and runs a scenario file from disk.
pub fn run_file(path: &std::path::Path, cfg: &Config) -> Result<Report, ScenarioError> {
    let text = std::fs::read_to_string(path)?;
    let file: ScenarioFile = serde_json::from_str(&text)?;
    run_file_value(&file, cfg)
}
