use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactlin::{format_q, Vector, Q};

/// A vector in serialized form: rendered basis element to `"p/q"`.
pub type Sparse = BTreeMap<String, String>;

pub fn sparse<K: Ord + Clone + fmt::Display>(v: &Vector<K>) -> Sparse {
    sparse_with(v, |k| k.to_string())
}

/// Like [`sparse`], with a custom rendering of basis elements. Terms whose
/// keys render alike are summed.
pub fn sparse_with<K: Ord + Clone, F: Fn(&K) -> String>(v: &Vector<K>, render: F) -> Sparse {
    let mut acc: BTreeMap<String, Q> = BTreeMap::new();
    for (k, c) in v {
        *acc.entry(render(k)).or_default() += c;
    }
    acc.into_iter().filter(|(_, c)| *c != Q::default()).map(|(k, c)| (k, format_q(&c))).collect()
}

/// A scalar as a multiple of the basis element `1`.
pub fn scalar_sparse(c: &Q) -> Sparse {
    if *c == Q::default() {
        Sparse::new()
    } else {
        Sparse::from([("1".to_string(), format_q(c))])
    }
}

fn render_sparse(s: &Sparse) -> String {
    if s.is_empty() {
        return "0".into();
    }
    s.iter().map(|(k, c)| format!("{c}·{k}")).collect::<Vec<_>>().join(" + ")
}

/// Verdict of a single check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail { witness: Witness },
    /// A statement known to be false failed, as it should.
    ExpectedFail { witness: Witness },
    /// A statement known to be false held on the window: a regression.
    UnexpectedPass,
}

/// A basis element on which two sides differ, with both values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub element: String,
    pub lhs: Sparse,
    pub rhs: Sparse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Number of basis elements (or samples) on which the identity was tested.
    pub tested: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Check {
    pub fn ok(&self) -> bool {
        matches!(self.outcome, Outcome::Pass | Outcome::ExpectedFail { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Fail { witness } | Outcome::ExpectedFail { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail { .. } => "fail",
            Outcome::ExpectedFail { .. } => "expected-fail",
            Outcome::UnexpectedPass => "unexpected-pass",
        }
    }
}

/// Accumulates the comparisons behind one check and keeps the first
/// counterexample.
#[derive(Debug)]
pub struct CheckBuilder {
    name: String,
    tested: usize,
    failure: Option<Witness>,
    expect_failure: bool,
}

impl CheckBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), tested: 0, failure: None, expect_failure: false }
    }

    /// A check of a statement that is expected to fail somewhere.
    pub fn expected_failure(name: impl Into<String>) -> Self {
        Self { expect_failure: true, ..Self::new(name) }
    }

    pub fn eq<K: Ord + Clone + fmt::Display>(
        &mut self,
        element: impl fmt::Display,
        lhs: &Vector<K>,
        rhs: &Vector<K>,
    ) -> bool {
        self.eq_with(element, lhs, rhs, |k| k.to_string())
    }

    pub fn eq_with<K: Ord + Clone, F: Fn(&K) -> String>(
        &mut self,
        element: impl fmt::Display,
        lhs: &Vector<K>,
        rhs: &Vector<K>,
        render: F,
    ) -> bool {
        self.tested += 1;
        let same = lhs == rhs;
        if !same && self.failure.is_none() {
            self.failure = Some(Witness {
                element: element.to_string(),
                lhs: sparse_with(lhs, &render),
                rhs: sparse_with(rhs, &render),
            });
        }
        same
    }

    /// Records a comparison that was done elsewhere.
    pub fn record(&mut self, element: impl fmt::Display, holds: bool, lhs: Sparse, rhs: Sparse) {
        self.tested += 1;
        if !holds && self.failure.is_none() {
            self.failure = Some(Witness { element: element.to_string(), lhs, rhs });
        }
    }

    /// Folds a finished check into this one, keeping the first failure.
    pub fn absorb(&mut self, c: &Check) {
        self.tested += c.tested;
        if self.failure.is_none() {
            if let Outcome::Fail { witness } = &c.outcome {
                self.failure = Some(witness.clone());
            }
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn finish(self) -> Check {
        let outcome = match (self.failure, self.expect_failure) {
            (None, false) => Outcome::Pass,
            (Some(witness), false) => Outcome::Fail { witness },
            (Some(witness), true) => Outcome::ExpectedFail { witness },
            (None, true) => Outcome::UnexpectedPass,
        };
        Check { name: self.name, tested: self.tested, outcome }
    }
}

/// A chain homotopy found on a window, in serialized form: for each source
/// basis element `x` of degree `n`, the value `h_n(x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyWitness {
    pub name: String,
    pub window: usize,
    pub values: BTreeMap<String, Sparse>,
    /// Whether substituting `h` back into the equations reproduced `f - g`.
    pub reverified: bool,
}

/// A functional on the homotopy equations that kills every `dh + hd` but
/// not `f - g`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateWitness {
    pub name: String,
    pub window: usize,
    pub functional: Sparse,
    pub pairing: String,
}

/// The outcome of a suite: its checks, the caps it ran with, and notes on
/// any stand-in constructions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub caps: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub homotopies: Vec<HomotopyWitness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateWitness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), ..Self::default() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn cap(&mut self, key: &str, value: impl fmt::Display) {
        self.caps.insert(key.to_string(), value.to_string());
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// A named row of values, e.g. homology dimensions by degree.
    pub fn table(&mut self, key: &str, row: Vec<String>) {
        self.tables.insert(key.to_string(), row);
    }

    /// Appends another report's contents, prefixing its check names.
    pub fn absorb(&mut self, other: VerificationReport) {
        let prefix = other.suite;
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.tables {
            self.tables.insert(format!("{prefix}: {k}"), v);
        }
        self.homotopies.extend(other.homotopies);
        self.certificates.extend(other.certificates);
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}", self.suite, if self.ok() { "pass" } else { "FAIL" })?;
        for (k, v) in &self.caps {
            writeln!(f, "  cap {k} = {v}")?;
        }
        for c in &self.checks {
            writeln!(f, "  [{}] {} ({} tested)", c.verdict(), c.name, c.tested)?;
            if let Some(w) = c.witness() {
                writeln!(f, "      at {}: {} != {}", w.element, render_sparse(&w.lhs), render_sparse(&w.rhs))?;
            }
        }
        for (k, row) in &self.tables {
            writeln!(f, "  {k}: ({})", row.join(", "))?;
        }
        for h in &self.homotopies {
            let state = if h.reverified { "re-verified" } else { "NOT re-verified" };
            writeln!(f, "  homotopy {} on window {}: {} nonzero values, {state}", h.name, h.window, h.values.len())?;
        }
        for c in &self.certificates {
            writeln!(f, "  no homotopy {} on window {}: functional pairs to {}", c.name, c.window, c.pairing)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
