//! Axiom checks and homology tables.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{AssocAlgebra, LieAlgebra, Triangular};
use crate::complexes::{Canonical, CyclicModule, HnKey, HnSlice, Mixed, RModule};
use crate::hopf::check_hopf_axioms;
use crate::tensor::Word;

use super::context::{caps_into, GroupCtx, LieCtx};
use super::{check_cyclic_module, Caps, ChainComplex, Instance, SuiteError, VerificationReport};

/// Which homology `homology_report` tabulates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologyKind {
    Lie,
    Hochschild,
    HnTruncated,
}

impl FromStr for HomologyKind {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        match s {
            "lie" => Ok(Self::Lie),
            "hh" | "hochschild" => Ok(Self::Hochschild),
            "hn" | "hn_truncated" => Ok(Self::HnTruncated),
            _ => Err(SuiteError::Config(format!("unknown homology kind {s:?} (expected lie, hh or hn)"))),
        }
    }
}

impl fmt::Display for HomologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Lie => "lie",
            Self::Hochschild => "hh",
            Self::HnTruncated => "hn",
        })
    }
}

fn prefixed(rep: &mut VerificationReport, prefix: &str, sub: VerificationReport) {
    let mut sub = sub;
    sub.suite = prefix.to_string();
    rep.absorb(sub);
}

/// Words of `C_n(A)` for a finite-dimensional algebra, normalized when the
/// unit is a basis element.
fn algebra_words(a: &AssocAlgebra, n: usize) -> Vec<Word<usize>> {
    let unit = a.unit_index();
    let mut out: Vec<Vec<usize>> = (0..a.dim()).map(|i| vec![i]).collect();
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| (0..a.dim()).filter(|&i| Some(i) != unit).map(move |i| [w.clone(), vec![i]].concat()))
            .collect();
    }
    out.into_iter().map(Word).collect()
}

fn lie_axioms(rep: &mut VerificationReport, tag: &str, lie: &Arc<LieAlgebra>, caps: &Caps, top: usize) -> Result<(), SuiteError> {
    let l = LieCtx::new(lie, caps)?;
    rep.cap(&format!("{tag} degree window"), top);
    let (e, b) = (l.bar.e(), l.bar.b());
    let r = RModule::new(l.u.clone());
    let c = Canonical::new(l.u.clone());
    prefixed(rep, &format!("{tag} E(U/F_N)"), check_cyclic_module(&e, "", top, |n| l.e_words(n, false)));
    prefixed(rep, &format!("{tag} B(U/F_N)"), check_cyclic_module(&b, "", top, |n| l.b_words(n, false)));
    prefixed(rep, &format!("{tag} R(U/F_N)"), check_cyclic_module(&r, "", top, |n| l.e_words(n, false)));
    prefixed(rep, &format!("{tag} C(U/F_N)"), check_cyclic_module(&c, "", top, |n| l.e_words(n, false)));
    let basis = l.u.basis_below(caps.truncation);
    prefixed(rep, &format!("{tag} U/F_N"), check_hopf_axioms(&*l.u, "", &basis));

    let g = GroupCtx::new(lie, caps)?;
    let gt = super::suites::group_window(caps) + 1;
    let (e, b) = (g.bar.e(), g.bar.b());
    let r = RModule::new(g.g.clone());
    let c = Canonical::new(g.g.clone());
    prefixed(rep, &format!("{tag} E(Q[exp g])"), check_cyclic_module(&e, "", gt, |n| g.words(n + 1)));
    prefixed(rep, &format!("{tag} B(Q[exp g])"), check_cyclic_module(&b, "", gt, |n| g.words(n)));
    prefixed(rep, &format!("{tag} R(Q[exp g])"), check_cyclic_module(&r, "", gt, |n| g.words(n + 1)));
    prefixed(rep, &format!("{tag} C(Q[exp g])"), check_cyclic_module(&c, "", gt, |n| g.words(n + 1)));
    prefixed(rep, &format!("{tag} Q[exp g]"), check_hopf_axioms(&*g.g, "", &g.samples));
    rep.cap(&format!("{tag} group sample window"), gt);
    Ok(())
}

/// Cyclic-module identities for every complex the instance defines, and
/// the Hopf axioms on the truncated bases.
pub fn check_axioms(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let mut rep = VerificationReport::new("check-axioms");
    caps_into(&mut rep, caps);
    rep.cap("instance", &inst.name);
    if let Some(lie) = &inst.lie {
        lie_axioms(&mut rep, "g:", lie, caps, caps.degree)?;
    }
    if let Some(a) = &inst.algebra {
        let c = Canonical::new(a.clone());
        let top = caps.degree;
        prefixed(&mut rep, "C(A)", check_cyclic_module(&c, "", top, |n| all_words(a, n)));
    }
    if let Some(spec) = &inst.triangular {
        let t = Triangular::build(spec.clone())?;
        // U(t) has five generators; degree 5, or N past class + 1, takes minutes
        let class = t.lie().nilpotency_class().map_or(2, |c| c as u32 + 1);
        let tcaps = Caps { truncation: caps.truncation.min(class), ..*caps };
        rep.cap("t: truncation", tcaps.truncation);
        lie_axioms(&mut rep, "t:", t.lie(), &tcaps, caps.degree.min(3))?;
    }
    if inst.lie.is_none() && inst.algebra.is_none() && inst.triangular.is_none() {
        return Err(SuiteError::MissingSection { suite: "check-axioms".into(), section: "lie_algebra" });
    }
    Ok(rep)
}

/// Every word of length `n + 1`, degenerate or not.
fn all_words(a: &AssocAlgebra, n: usize) -> Vec<Word<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..=n {
        out = out.into_iter().flat_map(|w| (0..a.dim()).map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    out.into_iter().map(Word).collect()
}

/// Hochschild homology of a normalized cyclic module, degrees `0..=top`.
fn hochschild<M: CyclicModule>(m: &M, top: usize, basis: impl Fn(usize) -> Vec<M::K>) -> Result<Vec<usize>, SuiteError> {
    let cx = ChainComplex::new((0..=top + 1).map(&basis).collect(), |x| m.normalize(&m.boundary(x)))?;
    Ok(cx.homology())
}

/// `HN` of the column truncation at `p`, total degrees `0..=top`. The slice
/// starts in degree -1 so that degree 0 sees its outgoing differential.
fn negative_cyclic<M: CyclicModule>(
    m: &M,
    p: usize,
    top: usize,
    basis: impl Fn(usize) -> Vec<M::K>,
) -> Result<Vec<usize>, SuiteError> {
    let mixed = Mixed::new(m, true);
    let hn = HnSlice::new(&mixed, p);
    let bases: Vec<Vec<HnKey<M::K>>> = (-1..=top as i64 + 1).map(|n| hn.basis(n, &basis)).collect();
    let cx = ChainComplex::new(bases, |k| hn.d(k))?;
    Ok(cx.homology()[1..].to_vec())
}

fn row(dims: &[usize]) -> Vec<String> {
    dims.iter().map(usize::to_string).collect()
}

fn add(acc: &mut Vec<usize>, dims: &[usize]) {
    if acc.len() < dims.len() {
        acc.resize(dims.len(), 0);
    }
    for (a, d) in acc.iter_mut().zip(dims) {
        *a += d;
    }
}

fn hn_tables(
    rep: &mut VerificationReport,
    label: &str,
    caps: &Caps,
    run: impl Fn(usize) -> Result<Vec<usize>, SuiteError>,
) -> Result<(), SuiteError> {
    let at = run(caps.columns)?;
    let next = run(caps.columns + 1)?;
    let flags: Vec<String> = at.iter().zip(&next).map(|(a, b)| if a == b { "stable" } else { "unstable" }.to_string()).collect();
    rep.table(&format!("{label} HN at P"), row(&at));
    rep.table(&format!("{label} HN at P+1"), row(&next));
    rep.table(&format!("{label} P vs P+1"), flags);
    Ok(())
}

/// Exact homology dimensions by degree. `hn` is computed at the column cap
/// `P` and at `P + 1`, and each degree is flagged by whether they agree.
pub fn homology_report(kind: HomologyKind, inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let mut rep = VerificationReport::new(format!("homology {kind}"));
    caps_into(&mut rep, caps);
    rep.cap("instance", &inst.name);
    let top = caps.degree;
    match kind {
        HomologyKind::Lie => {
            let lie = match (&inst.lie, &inst.triangular) {
                (Some(l), _) => l.clone(),
                (None, Some(spec)) => Triangular::build(spec.clone())?.lie().clone(),
                _ => return Err(SuiteError::MissingSection { suite: "homology lie".into(), section: "lie_algebra" }),
            };
            let l = LieCtx::new(&lie, caps)?;
            let dim = lie.dim();
            let cx = ChainComplex::new((0..=dim + 1).map(|n| l.all_wedges(n)).collect(), |x| l.ce.d(x))?;
            rep.push(cx.check_squares("d² = 0 on ∧g"));
            rep.table("dim H_n(g)", row(&cx.homology()));
            rep.table("dim ∧^n g", row(&cx.dims()[..=dim]));
        }
        HomologyKind::Hochschild => {
            if let Some(a) = &inst.algebra {
                let c = Canonical::new(a.clone());
                let dims = if c.has_unit_basis() {
                    hochschild(&c, top, |n| algebra_words(a, n))?
                } else {
                    hochschild(&c, top, |n| all_words(a, n))?
                };
                rep.table("dim HH_n(A)", row(&dims));
            } else {
                let l = LieCtx::new(inst.lie_or("homology hh")?, caps)?;
                let c = Canonical::new(l.u.clone());
                let mut total = Vec::new();
                for w in l.weights() {
                    let dims = hochschild(&c, top, |n| l.e_words_of(n, w, true))?;
                    rep.table(&format!("dim HH_n(U) weight {w}"), row(&dims));
                    add(&mut total, &dims);
                }
                rep.table("dim HH_n(U/F_N) over weights < N", row(&total));
            }
        }
        HomologyKind::HnTruncated => {
            if let Some(a) = &inst.algebra {
                let c = Canonical::new(a.clone());
                if !c.has_unit_basis() {
                    return Err(SuiteError::Config("HN needs the unit as a basis element".into()));
                }
                hn_tables(&mut rep, "A:", caps, |p| negative_cyclic(&c, p, top, |n| algebra_words(a, n)))?;
            } else {
                let l = LieCtx::new(inst.lie_or("homology hn")?, caps)?;
                let c = Canonical::new(l.u.clone());
                for w in l.weights() {
                    hn_tables(&mut rep, &format!("U weight {w}:"), caps, |p| {
                        negative_cyclic(&c, p, top, |n| l.e_words_of(n, w, true))
                    })?;
                }
            }
            rep.note("column truncation is a quotient complex; P vs P+1 flags where the cap matters");
        }
    }
    Ok(rep)
}
