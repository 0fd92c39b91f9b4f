//! Input documents, caps resolution, report documents and single map
//! evaluation.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AssocAlgebra, LieAlgebra, Mono, Triangular, TriangularSpec};
use crate::chern::{tau, CLift, ChernBlock, Comparison, Wedge, Upsilon};
use crate::complexes::{Bar, CyclicModule, HnKey};
use crate::exactlin::{parse_q, Vector, Q};
use crate::hopf::{Algebra, EnvelopingHopf};
use crate::tensor::Word;
use crate::verify::{sparse_with, Caps, Instance, Sparse, SuiteError, VerificationReport};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at {pointer}: {message}")]
    Parse { pointer: String, message: String },
    #[error("invalid input at {pointer}: {message}")]
    Invalid { pointer: String, message: String },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("bad element {element:?}: {message}")]
    Element { element: String, message: String },
    #[error(transparent)]
    Suite(#[from] SuiteError),
}

impl IoError {
    fn invalid(pointer: impl Into<String>, message: impl ToString) -> Self {
        IoError::Invalid { pointer: pointer.into(), message: message.to_string() }
    }
}

/// `{k, c}`: the coefficient `c` (a `"p/q"` string) on basis element `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

/// `[e_i, e_j] = Σ c e_k` or `e_i e_j = Σ c e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Structure {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSection {
    pub dim: usize,
    #[serde(default)]
    pub names: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<Structure>,
}

/// Products not listed are zero. Vectors are dense lists of `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub dim: usize,
    #[serde(default)]
    pub names: Vec<String>,
    pub unit: Vec<String>,
    #[serde(default)]
    pub mult: Vec<Structure>,
    #[serde(default)]
    pub ideal: Vec<Vec<String>>,
    #[serde(default)]
    pub degrees: Option<Vec<u32>>,
}

/// `base` names the document's `algebra` section or a built-in algebra
/// (`dual_numbers`, `rationals`, `upper_triangular_<n>`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangularSection {
    pub n: usize,
    #[serde(default)]
    pub sigma: Vec<[usize; 2]>,
    #[serde(default = "default_base")]
    pub base: String,
}

fn default_base() -> String {
    "algebra".into()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsSection {
    pub degree: Option<usize>,
    pub columns: Option<usize>,
    pub truncation: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub lie_algebra: Option<LieSection>,
    #[serde(default)]
    pub algebra: Option<AlgebraSection>,
    #[serde(default)]
    pub triangular: Option<TriangularSection>,
    #[serde(default)]
    pub caps: Option<CapsSection>,
}

/// Parses a document, locating errors by JSON pointer.
pub fn parse_document(text: &str) -> Result<InputDocument, IoError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let pointer = if path == "." { "/".to_string() } else { format!("/{}", path.replace('.', "/")) };
        IoError::Parse { pointer, message: e.into_inner().to_string() }
    })
}

fn rational(s: &str, pointer: &str) -> Result<Q, IoError> {
    parse_q(s).map_err(|e| IoError::invalid(pointer, e))
}

fn dense(v: &[String], dim: usize, pointer: &str) -> Result<Vector<usize>, IoError> {
    if v.len() != dim {
        return Err(IoError::invalid(pointer, format!("expected {dim} coordinates, got {}", v.len())));
    }
    let mut out = Vector::zero();
    for (i, s) in v.iter().enumerate() {
        out.add_term(i, rational(s, &format!("{pointer}/{i}"))?);
    }
    Ok(out)
}

fn terms(t: &[Term], dim: usize, pointer: &str) -> Result<Vector<usize>, IoError> {
    let mut out = Vector::zero();
    for (n, term) in t.iter().enumerate() {
        if term.k >= dim {
            return Err(IoError::invalid(format!("{pointer}/{n}/k"), format!("index {} out of range 0..{dim}", term.k)));
        }
        out.add_term(term.k, rational(&term.c, &format!("{pointer}/{n}/c"))?);
    }
    Ok(out)
}

fn names(given: &[String], dim: usize, prefix: &str, pointer: &str) -> Result<Vec<String>, IoError> {
    if given.is_empty() {
        return Ok((1..=dim).map(|i| format!("{prefix}{i}")).collect());
    }
    if given.len() != dim {
        return Err(IoError::invalid(pointer, format!("expected {dim} names, got {}", given.len())));
    }
    Ok(given.to_vec())
}

impl LieSection {
    pub fn build(&self) -> Result<LieAlgebra, IoError> {
        let dim = self.dim;
        let names = names(&self.names, dim, "x", "/lie_algebra/names")?;
        let mut brackets = Vec::new();
        for (n, s) in self.brackets.iter().enumerate() {
            let p = format!("/lie_algebra/brackets/{n}");
            if s.i >= s.j || s.j >= dim {
                return Err(IoError::invalid(&p, format!("need i < j < {dim}, got ({}, {})", s.i, s.j)));
            }
            brackets.push((s.i, s.j, terms(&s.terms, dim, &format!("{p}/terms"))?));
        }
        LieAlgebra::new(names, brackets).map_err(|e| IoError::invalid("/lie_algebra", e))
    }
}

impl AlgebraSection {
    pub fn build(&self) -> Result<AssocAlgebra, IoError> {
        let dim = self.dim;
        let names = names(&self.names, dim, "a", "/algebra/names")?;
        let unit = dense(&self.unit, dim, "/algebra/unit")?;
        let mut table = vec![vec![Vector::zero(); dim]; dim];
        for (n, s) in self.mult.iter().enumerate() {
            let p = format!("/algebra/mult/{n}");
            if s.i >= dim || s.j >= dim {
                return Err(IoError::invalid(&p, format!("index out of range 0..{dim}")));
            }
            table[s.i][s.j] = terms(&s.terms, dim, &format!("{p}/terms"))?;
        }
        let ideal = self
            .ideal
            .iter()
            .enumerate()
            .map(|(n, v)| dense(v, dim, &format!("/algebra/ideal/{n}")))
            .collect::<Result<Vec<_>, _>>()?;
        let a = AssocAlgebra::new(names, unit, table, ideal).map_err(|e| IoError::invalid("/algebra", e))?;
        match &self.degrees {
            Some(d) => a.with_degrees(d.clone()).map_err(|e| IoError::invalid("/algebra/degrees", e)),
            None => Ok(a),
        }
    }
}

fn builtin(name: &str) -> Option<AssocAlgebra> {
    match name {
        "dual_numbers" => Some(AssocAlgebra::dual_numbers()),
        "rationals" => Some(AssocAlgebra::rationals()),
        _ => name.strip_prefix("upper_triangular_")?.parse().ok().filter(|&n| n >= 1).map(AssocAlgebra::upper_triangular),
    }
}

impl InputDocument {
    pub fn instance(&self, fallback_name: &str) -> Result<Instance, IoError> {
        let mut inst = Instance::named(self.name.clone().unwrap_or_else(|| fallback_name.to_string()));
        if let Some(l) = &self.lie_algebra {
            inst = inst.with_lie(l.build()?);
        }
        if let Some(a) = &self.algebra {
            inst = inst.with_algebra(a.build()?);
        }
        if let Some(t) = &self.triangular {
            let base = match t.base.as_str() {
                "algebra" => inst
                    .algebra
                    .as_deref()
                    .cloned()
                    .ok_or_else(|| IoError::invalid("/triangular/base", "refers to a missing algebra section"))?,
                other => builtin(other).ok_or_else(|| IoError::invalid("/triangular/base", format!("unknown algebra {other:?}")))?,
            };
            let spec = TriangularSpec { n: t.n, sigma: t.sigma.iter().map(|p| (p[0], p[1])).collect(), base };
            spec.validate().map_err(|e| IoError::invalid("/triangular/sigma", e))?;
            Triangular::build(spec.clone()).map_err(|e| IoError::invalid("/triangular", e))?;
            if inst.algebra.is_none() {
                inst.algebra = Some(Arc::new(spec.base.clone()));
            }
            inst = inst.with_triangular(spec);
        }
        if inst.lie.is_none() && inst.algebra.is_none() {
            return Err(IoError::invalid("/", "document has none of lie_algebra, algebra, triangular"));
        }
        Ok(inst)
    }
}

/// Cap overrides from the command line; unset fields fall back to the
/// document, then to the defaults `D = 4`, `P = 3`, `N = class + 1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CapFlags {
    pub degree: Option<usize>,
    pub columns: Option<usize>,
    pub truncation: Option<u32>,
}

/// The smallest truncation on which the truncated constructions are
/// faithful: class + 1 for a Lie algebra, the nilpotency index of the ideal
/// for a block.
pub fn min_truncation(inst: &Instance) -> Result<u32, IoError> {
    if let Some(lie) = &inst.lie {
        return Ok(lie.nilpotency_class().map_or(2, |c| c as u32 + 1));
    }
    if let Some(spec) = &inst.triangular {
        return Ok(spec.base.nilpotency_index().map_or(2, |i| i as u32));
    }
    Ok(1)
}

pub fn resolve_caps(doc: &InputDocument, flags: CapFlags, inst: &Instance) -> Result<Caps, IoError> {
    let from_doc = doc.caps.unwrap_or_default();
    let degree = flags.degree.or(from_doc.degree).unwrap_or(4);
    let columns = flags.columns.or(from_doc.columns).unwrap_or(3);
    let truncation = match flags.truncation.or(from_doc.truncation) {
        Some(n) => n,
        None => inst.default_truncation()?,
    };
    if degree == 0 {
        return Err(IoError::Config("degree cap must be at least 1".into()));
    }
    let floor = min_truncation(inst)?;
    if truncation < floor {
        return Err(IoError::Config(format!("truncation {truncation} is below {floor}, where the truncated group law stops being faithful")));
    }
    Ok(Caps::new(degree, columns, truncation))
}

/// The serialized result of a command: one report per suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub ok: bool,
    pub reports: Vec<VerificationReport>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, reports: Vec<VerificationReport>) -> Self {
        let ok = reports.iter().all(VerificationReport::ok);
        Self { command: command.into(), ok, reports }
    }

    /// Pretty JSON in a fixed key order; identical inputs give identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de)
            .map_err(|e| IoError::Parse { pointer: format!("/{}", e.path().to_string().replace('.', "/")), message: e.into_inner().to_string() })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_string());
        }
        out.push_str(if self.ok { "overall: pass\n" } else { "overall: FAIL\n" });
        out
    }
}

/// Maps `eval` knows, with the shape of their argument.
pub const EVAL_MAPS: [(&str, &str); 12] = [
    ("tau", "bar word"),
    ("c", "bar word"),
    ("upsilon", "E word"),
    ("upsilon-b", "bar word"),
    ("sw", "bar word"),
    ("e", "wedge"),
    ("d", "wedge"),
    ("theta", "wedge"),
    ("psi", "wedge"),
    ("ch-minus", "bar word"),
    ("ch-rht", "bar word"),
    ("rho", "wedge"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalResult {
    pub map: String,
    pub element: String,
    pub value: Sparse,
    pub caps: Caps,
}

impl EvalResult {
    pub fn to_text(&self) -> String {
        let value = if self.value.is_empty() {
            "0".to_string()
        } else {
            self.value.iter().map(|(k, c)| format!("{c}·{k}")).collect::<Vec<_>>().join(" + ")
        };
        format!("{}({}) = {}\n", self.map, self.element, value)
    }
}

fn bad(element: &str, message: impl Into<String>) -> IoError {
    IoError::Element { element: element.into(), message: message.into() }
}

fn letter_index(names: &[String], name: &str, element: &str) -> Result<usize, IoError> {
    names.iter().position(|n| n == name).ok_or_else(|| bad(element, format!("unknown generator {name:?}")))
}

/// `x*y^2` (or `x y^2`, or `1`) as a PBW monomial; letters must come in
/// basis order.
fn parse_mono(s: &str, names: &[String], element: &str) -> Result<Mono, IoError> {
    let mut exps = vec![0u32; names.len()];
    let s = s.trim();
    if s == "1" {
        return Ok(Mono(exps));
    }
    let mut last = None;
    for factor in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|f| !f.is_empty()) {
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad(element, format!("bad exponent in {factor:?}")))?),
            None => (factor, 1),
        };
        let i = letter_index(names, name, element)?;
        if last.is_some_and(|l| l >= i) {
            return Err(bad(element, "write monomials in PBW order, each generator once"));
        }
        last = Some(i);
        exps[i] = e;
    }
    Ok(Mono(exps))
}

/// `[x|y*z|x^2]`, brackets optional; `[]` is the empty word.
fn parse_word(s: &str, names: &[String]) -> Result<Word<Mono>, IoError> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if inner.is_empty() {
        return Ok(Word(Vec::new()));
    }
    inner.split('|').map(|m| parse_mono(m, names, s)).collect::<Result<_, _>>().map(Word)
}

/// `x∧y`, `x,y` or `1`.
fn parse_wedge(s: &str, names: &[String]) -> Result<(Wedge, Q), IoError> {
    let t = s.trim();
    if t == "1" || t.is_empty() {
        return Ok((Wedge(Vec::new()), Q::from_integer(1.into())));
    }
    let letters = t
        .split(['∧', ','])
        .map(|n| letter_index(names, n.trim(), s))
        .collect::<Result<Vec<_>, _>>()?;
    Wedge::sorted(letters).ok_or_else(|| bad(s, "repeated generator; the wedge is zero"))
}

/// Evaluates one named map on one element, for inspection.
pub fn evaluate(map: &str, element: &str, inst: &Instance, caps: &Caps) -> Result<EvalResult, IoError> {
    let value = match map {
        "ch-minus" | "ch-rht" | "rho" => {
            let spec = inst.triangular_or(&format!("eval {map}"))?;
            let t = Triangular::build(spec.clone()).map_err(SuiteError::from)?;
            let names = t.names().to_vec();
            let b = ChernBlock::new(t, caps.columns).map_err(SuiteError::from)?;
            let base = b.base().clone();
            let rt = |k: &HnKey<Word<usize>>| format!("u^{}{}", k.col, base.render_word(&k.elem));
            match map {
                "rho" => {
                    let (w, c) = parse_wedge(element, &names)?;
                    sparse_with(&b.rho(&Vector::term(w, c)), |w| base.render_word(w))
                }
                _ => {
                    let v = Vector::basis(parse_word(element, &names)?);
                    let v = Bar::new(b.enveloping().clone()).b().normalize(&v);
                    if map == "ch-minus" {
                        sparse_with(&b.ch_minus(&v), rt)
                    } else {
                        sparse_with(&b.ch_rht(&v).map_err(SuiteError::from)?, rt)
                    }
                }
            }
        }
        _ => {
            let lie = inst.lie_or(&format!("eval {map}"))?.clone();
            let names = lie.names().to_vec();
            let u = Arc::new(EnvelopingHopf::new((*lie).clone()));
            let bar = Arc::new(Bar::new(u.clone()));
            let ce = Arc::new(crate::chern::Ce::new(u.clone()));
            let rw = |w: &Word<Mono>| u.render_word(w);
            let rh = |k: &HnKey<Word<Mono>>| format!("u^{}{}", k.col, u.render_word(&k.elem));
            let rx = |w: &Wedge| ce.render(w);
            match map {
                "tau" => sparse_with(&tau(&*u, &parse_word(element, &names)?), rw),
                "c" => {
                    let v = bar.b().normalize(&Vector::basis(parse_word(element, &names)?));
                    sparse_with(&CLift::new(bar.clone(), true, caps.columns).apply(&v), rh)
                }
                "upsilon" => {
                    let v = Vector::basis(parse_word(element, &names)?);
                    if v.keys().any(|w| w.0.is_empty()) {
                        return Err(bad(element, "E words have at least one letter"));
                    }
                    sparse_with(&Upsilon::new(bar.clone(), true, caps.columns).e_lift(&v), rh)
                }
                "upsilon-b" => {
                    let v = bar.b().normalize(&Vector::basis(parse_word(element, &names)?));
                    sparse_with(&Upsilon::new(bar.clone(), true, caps.columns).b_lift(&v), rh)
                }
                "sw" => {
                    let v = bar.b().normalize(&Vector::basis(parse_word(element, &names)?));
                    let cmp = Comparison::new(ce.clone(), bar.clone()).map_err(SuiteError::from)?;
                    sparse_with(&cmp.sw(&v).map_err(SuiteError::from)?, rx)
                }
                "e" | "d" | "theta" | "psi" => {
                    let (w, c) = parse_wedge(element, &names)?;
                    let x = Vector::term(w, c);
                    match map {
                        "e" => sparse_with(&ce.e_vec(&x), rw),
                        "d" => sparse_with(&ce.d_vec(&x), rx),
                        "theta" => sparse_with(&ce.theta_vec(&x), rw),
                        _ => sparse_with(&ce.psi(&x), rh),
                    }
                }
                _ => {
                    let known: Vec<&str> = EVAL_MAPS.iter().map(|(m, _)| *m).collect();
                    return Err(IoError::Config(format!("unknown map {map:?}; known: {}", known.join(", "))));
                }
            }
        }
    };
    Ok(EvalResult { map: map.into(), element: element.into(), value, caps: *caps })
}
