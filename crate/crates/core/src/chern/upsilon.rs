use std::sync::Arc;

use crate::complexes::{Bar, CyclicModule, HnKey};
use crate::exactlin::Vector;
use crate::hopf::Hopf;
use crate::tensor::Word;

use super::kappa::{Convention, Kappa};

/// The lift `Υ' = Σ Υ'^n : HH(E(H)) → HN(E(H))` with `Υ'^0 = 1` and
/// `Υ'^{n+1} = κ^{-B'Υ'^n}`, and `Υ = k ⊗_H Υ'` on `B(H)`; columns beyond
/// the cap are not built.
pub struct Upsilon<H: Hopf> {
    bar: Arc<Bar<H>>,
    normalized: bool,
    levels: Vec<Arc<Kappa<H, Word<H::B>>>>,
}

fn connes<H: Hopf>(bar: &Bar<H>, normalized: bool, v: &Vector<Word<H::B>>) -> Vector<Word<H::B>> {
    let e = bar.e();
    if normalized {
        v.map_linear(|w| e.connes_normalized(w).expect("closed formula on E(H)"))
    } else {
        v.map_linear(|w| e.connes(w))
    }
}

impl<H: Hopf + 'static> Upsilon<H> {
    pub fn new(bar: Arc<Bar<H>>, normalized: bool, columns: usize) -> Self {
        let mut levels: Vec<Arc<Kappa<H, Word<H::B>>>> = Vec::new();
        for _ in 0..columns {
            let prev = levels.last().cloned();
            let (b1, b2, b3) = (bar.clone(), bar.clone(), bar.clone());
            let f = move |g: &Word<H::B>| {
                let base = Vector::basis(g.clone());
                let v = match &prev {
                    Some(k) => k.apply(&base),
                    None if normalized => b1.e().normalize(&base),
                    None => base,
                };
                -&connes(&b1, normalized, &v)
            };
            let s = move |v: &Vector<Word<H::B>>| {
                let out = v.map_keys(|w| b2.contraction(w));
                if normalized {
                    b2.e().normalize(&out)
                } else {
                    out
                }
            };
            let act = move |a: &H::B, v: &Vector<Word<H::B>>| b3.act(a, v);
            levels.push(Arc::new(Kappa::new(bar.clone(), normalized, Convention::Odd, f, s, act)));
        }
        Self { bar, normalized, levels }
    }

    pub fn bar(&self) -> &Arc<Bar<H>> {
        &self.bar
    }

    pub fn normalized(&self) -> bool {
        self.normalized
    }

    pub fn columns(&self) -> usize {
        self.levels.len()
    }

    /// `Υ'^i` on `E(H)`.
    pub fn level(&self, i: usize, v: &Vector<Word<H::B>>) -> Vector<Word<H::B>> {
        match i {
            0 if self.normalized => self.bar.e().normalize(v),
            0 => v.clone(),
            _ => self.levels[i - 1].apply(v),
        }
    }

    /// `Υ'(v) = (Υ'^0 v, Υ'^1 v, …)` in columns `0..=cap`.
    pub fn e_lift(&self, v: &Vector<Word<H::B>>) -> Vector<HnKey<Word<H::B>>> {
        let mut out = Vector::zero();
        for i in 0..=self.columns() {
            out += &self.level(i, v).map_keys(|w| HnKey { col: i, elem: w.clone() });
        }
        out
    }

    /// `Υ^i = 1 ⊗_H Υ'^i` on `B(H)`.
    pub fn b_level(&self, i: usize, v: &Vector<Word<H::B>>) -> Vector<Word<H::B>> {
        let lifted = v.map_keys(|w| self.bar.lift(w));
        self.bar.to_b(&self.level(i, &lifted))
    }

    /// `Υ(x)` on `B(H)`, columns `0..=cap`.
    pub fn b_lift(&self, v: &Vector<Word<H::B>>) -> Vector<HnKey<Word<H::B>>> {
        let mut out = Vector::zero();
        for i in 0..=self.columns() {
            out += &self.b_level(i, v).map_keys(|w| HnKey { col: i, elem: w.clone() });
        }
        out
    }
}
