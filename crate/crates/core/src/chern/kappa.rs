use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::complexes::{Bar, CyclicModule};
use crate::exactlin::{Key, Vector};
use crate::hopf::Hopf;
use crate::tensor::Word;

/// Which commutator the contraction solves for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `dκ + κd = f`, for a chain map `f`: `κ(v) = s(f v - κ(d v))`.
    Even,
    /// `dκ - κd = f`, for `f` anticommuting with `d`: `κ(v) = s(f v + κ(d v))`.
    Odd,
}

type Eval<B, L> = Box<dyn Fn(&Word<B>) -> Vector<L> + Send + Sync>;
type VecMap<L> = Box<dyn Fn(&Vector<L>) -> Vector<L> + Send + Sync>;
type Action<B, L> = Box<dyn Fn(&B, &Vector<L>) -> Vector<L> + Send + Sync>;

/// The `H`-linear contraction `κ^f` of an `H`-linear map `f` out of the bar
/// resolution `E(H)` (or its normalization), built on the generators
/// `1 ⊗ h_1 ⊗ … ⊗ h_n` from a `k`-linear contraction `s` of the target and
/// extended through the action on the first factor.
pub struct Kappa<H: Hopf, L: Key> {
    bar: Arc<Bar<H>>,
    normalized: bool,
    convention: Convention,
    f: Eval<H::B, L>,
    s: VecMap<L>,
    act: Action<H::B, L>,
    memo: Mutex<HashMap<Word<H::B>, Vector<L>>>,
}

impl<H: Hopf + 'static, L: Key + Send + Sync + 'static> Kappa<H, L> {
    /// `f` is evaluated on generators `[1|h_1|…|h_n]`; `act(a, v)` is the
    /// module structure of the target.
    pub fn new(
        bar: Arc<Bar<H>>,
        normalized: bool,
        convention: Convention,
        f: impl Fn(&Word<H::B>) -> Vector<L> + Send + Sync + 'static,
        s: impl Fn(&Vector<L>) -> Vector<L> + Send + Sync + 'static,
        act: impl Fn(&H::B, &Vector<L>) -> Vector<L> + Send + Sync + 'static,
    ) -> Self {
        Self {
            bar,
            normalized,
            convention,
            f: Box::new(f),
            s: Box::new(s),
            act: Box::new(act),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// `κ(1 ⊗ h_1 ⊗ … ⊗ h_n)`, keyed by the tail `[h_1|…|h_n]`.
    pub fn on_generator(&self, tail: &Word<H::B>) -> Vector<L> {
        if let Some(v) = self.memo.lock().unwrap().get(tail) {
            return v.clone();
        }
        let g = self.bar.contraction(tail);
        let fv = (self.f)(&g);
        let inner = if tail.is_empty() {
            fv
        } else {
            let e = self.bar.e();
            let mut dv = e.boundary(&g);
            if self.normalized {
                dv = e.normalize(&dv);
            }
            let kd = self.apply(&dv);
            match self.convention {
                Convention::Even => &fv - &kd,
                Convention::Odd => &fv + &kd,
            }
        };
        let out = (self.s)(&inner);
        self.memo.lock().unwrap().insert(tail.clone(), out.clone());
        out
    }

    /// `κ(Σ c a ⊗ w) = Σ c a·κ(1 ⊗ w)`.
    pub fn apply(&self, v: &Vector<Word<H::B>>) -> Vector<L> {
        let mut out = Vector::zero();
        for (w, c) in v {
            let tail = Word(w.0[1..].to_vec());
            let k = self.on_generator(&tail);
            if self.bar.is_unit(&w.0[0]) {
                out.axpy(c, &k);
            } else {
                out.axpy(c, &(self.act)(&w.0[0], &k));
            }
        }
        out
    }
}
