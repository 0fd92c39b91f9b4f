use std::fmt;

use crate::exactlin::{rank, FreeModule, Key, LinError, LinMap, Solution, Solver, Vector, Q};

use super::report::{sparse_with, CertificateWitness, HomotopyWitness};
use super::{CheckBuilder, Check};

/// A finite slice of a chain complex: bases in degrees `0..=top` and the
/// differentials `d_n : C_n → C_{n-1}` for `1 ≤ n ≤ top`.
#[derive(Clone, Debug)]
pub struct ChainComplex<K: Key> {
    modules: Vec<FreeModule<K>>,
    d: Vec<LinMap<K, K>>,
}

impl<K: Key> ChainComplex<K> {
    /// `d` must map each basis element of degree `n ≥ 1` into the span of
    /// the degree `n - 1` basis; it is not evaluated in degree 0.
    pub fn new(bases: Vec<Vec<K>>, mut d: impl FnMut(&K) -> Vector<K>) -> Result<Self, LinError> {
        let modules: Vec<FreeModule<K>> = bases.into_iter().map(FreeModule::new).collect::<Result<_, _>>()?;
        let empty = FreeModule::new(Vec::new())?;
        let mut maps = Vec::with_capacity(modules.len());
        for n in 0..modules.len() {
            maps.push(if n == 0 {
                LinMap::zero(modules[0].clone(), empty.clone())
            } else {
                LinMap::from_fn(modules[n].clone(), modules[n - 1].clone(), &mut d)?
            });
        }
        Ok(Self { modules, d: maps })
    }

    pub fn top(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    pub fn module(&self, n: usize) -> &FreeModule<K> {
        &self.modules[n]
    }

    pub fn d(&self, n: usize) -> &LinMap<K, K> {
        &self.d[n]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModule::dim).collect()
    }

    /// `d_{n-1} d_n = 0` on every basis element.
    pub fn check_squares(&self, name: &str) -> Check {
        let mut cb = CheckBuilder::new(name);
        for n in 2..=self.top() {
            for (x, col) in self.modules[n].basis().iter().zip(self.d[n].columns()) {
                let dd = self.d[n - 1].apply(col).expect("columns lie in the codomain");
                cb.eq(x, &dd, &Vector::zero());
            }
        }
        cb.finish()
    }

    /// Homology dimensions in degrees `0..top`; the top degree is omitted
    /// since its boundaries are not in the slice.
    pub fn homology(&self) -> Vec<usize> {
        (0..self.top())
            .map(|n| {
                let kernel = self.modules[n].dim() - rank(&self.d[n]);
                kernel - rank(&self.d[n + 1])
            })
            .collect()
    }
}

/// A degreewise linear map between two slices, in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct ChainMap<K1: Key, K2: Key> {
    maps: Vec<LinMap<K1, K2>>,
}

impl<K1: Key, K2: Key> ChainMap<K1, K2> {
    pub fn new(
        src: &ChainComplex<K1>,
        tgt: &ChainComplex<K2>,
        top: usize,
        mut f: impl FnMut(&K1) -> Vector<K2>,
    ) -> Result<Self, LinError> {
        let maps = (0..=top)
            .map(|n| LinMap::from_fn(src.module(n).clone(), tgt.module(n).clone(), &mut f))
            .collect::<Result<_, _>>()?;
        Ok(Self { maps })
    }

    /// Like [`ChainMap::new`] for maps that may fail.
    pub fn try_new<E: From<LinError>>(
        src: &ChainComplex<K1>,
        tgt: &ChainComplex<K2>,
        top: usize,
        mut f: impl FnMut(&K1) -> Result<Vector<K2>, E>,
    ) -> Result<Self, E> {
        let mut maps = Vec::new();
        for n in 0..=top {
            let cols = src.module(n).basis().iter().map(&mut f).collect::<Result<Vec<_>, E>>()?;
            maps.push(LinMap::new(src.module(n).clone(), tgt.module(n).clone(), cols)?);
        }
        Ok(Self { maps })
    }

    pub fn top(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn at(&self, n: usize) -> &LinMap<K1, K2> {
        &self.maps[n]
    }
}

/// `d f = f d` (or `d f = -f d` when `anti`) on every basis element of
/// degree `1..=window`.
pub fn check_chain_map<K1: Key, K2: Key>(
    name: &str,
    src: &ChainComplex<K1>,
    tgt: &ChainComplex<K2>,
    f: &ChainMap<K1, K2>,
    window: usize,
    anti: bool,
) -> Check {
    check_chain_map_with(name, src, tgt, f, window, anti, |x| x.to_string(), |y| y.to_string())
}

/// [`check_chain_map`] with witnesses rendered by the given functions.
#[allow(clippy::too_many_arguments)]
pub fn check_chain_map_with<K1: Key, K2: Key>(
    name: &str,
    src: &ChainComplex<K1>,
    tgt: &ChainComplex<K2>,
    f: &ChainMap<K1, K2>,
    window: usize,
    anti: bool,
    render_src: impl Fn(&K1) -> String,
    render_tgt: impl Fn(&K2) -> String,
) -> Check {
    let mut cb = CheckBuilder::new(name);
    for n in 1..=window.min(f.top()) {
        for (i, x) in src.module(n).basis().iter().enumerate() {
            let lhs = tgt.d(n).apply(f.at(n).column(i)).expect("in codomain");
            let mut rhs = f.at(n - 1).apply(src.d(n).column(i)).expect("in domain");
            if anti {
                rhs = -&rhs;
            }
            cb.eq_with(render_src(x), &lhs, &rhs, &render_tgt);
        }
    }
    cb.finish()
}

/// Unknown `h_n(x_i)` coefficient on `y_j`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HomKey {
    pub n: usize,
    pub src: usize,
    pub tgt: usize,
}

impl fmt::Display for HomKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}[{},{}]", self.n, self.src, self.tgt)
    }
}

/// Equation `(f_n - g_n)(x_i)` at coordinate `y_k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EqKey {
    pub n: usize,
    pub src: usize,
    pub tgt: usize,
}

impl fmt::Display for EqKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}[{},{}]", self.n, self.src, self.tgt)
    }
}

/// `h_n : C_n → D_{n+1}` for `0 ≤ n ≤ window`.
#[derive(Clone, Debug)]
pub struct ChainHomotopy<K1: Key, K2: Key> {
    pub window: usize,
    pub maps: Vec<LinMap<K1, K2>>,
}

/// A functional `y` on the equations with `y(dh + hd) = 0` for all `h` and
/// `y(f - g) = pairing ≠ 0`. It only rules out homotopies on this window.
#[derive(Clone, Debug)]
pub struct NoHomotopy {
    pub window: usize,
    pub functional: Vector<EqKey>,
    pub pairing: Q,
}

#[derive(Clone, Debug)]
pub enum HomotopyResult<K1: Key, K2: Key> {
    Found(ChainHomotopy<K1, K2>),
    None(NoHomotopy),
}

struct System {
    columns: Vec<(HomKey, Vector<EqKey>)>,
    target: Vector<EqKey>,
    equations: Vec<EqKey>,
}

fn homotopy_system<K1: Key, K2: Key>(
    src: &ChainComplex<K1>,
    tgt: &ChainComplex<K2>,
    f: &ChainMap<K1, K2>,
    g: &ChainMap<K1, K2>,
    window: usize,
) -> System {
    let mut columns = Vec::new();
    for n in 0..=window {
        let (ds, dt) = (src.module(n).dim(), tgt.module(n + 1).dim());
        // transpose of d_{n+1} on the source: x_i ↦ [(i2, c)] with d x_{i2} ∋ c x_i
        let mut up: Vec<Vec<(usize, Q)>> = vec![Vec::new(); ds];
        if n < window {
            for (i2, dcol) in src.d(n + 1).columns().iter().enumerate() {
                for (x, c) in dcol {
                    up[src.module(n).index_of(x).expect("in basis")].push((i2, c.clone()));
                }
            }
        }
        for i in 0..ds {
            for j in 0..dt {
                let mut col = Vector::zero();
                // d_{n+1} h_n in equation n
                for (y, c) in tgt.d(n + 1).column(j) {
                    let k = tgt.module(n).index_of(y).expect("in basis");
                    col.add_term(EqKey { n, src: i, tgt: k }, c.clone());
                }
                // h_n d_{n+1} in equation n + 1
                for (i2, c) in &up[i] {
                    col.add_term(EqKey { n: n + 1, src: *i2, tgt: j }, c.clone());
                }
                columns.push((HomKey { n, src: i, tgt: j }, col));
            }
        }
    }
    let mut target = Vector::zero();
    let mut equations = Vec::new();
    for n in 0..=window {
        for i in 0..src.module(n).dim() {
            let diff = f.at(n).column(i) - g.at(n).column(i);
            for (y, c) in &diff {
                let k = tgt.module(n).index_of(y).expect("in basis");
                target.add_term(EqKey { n, src: i, tgt: k }, c.clone());
            }
            for k in 0..tgt.module(n).dim() {
                equations.push(EqKey { n, src: i, tgt: k });
            }
        }
    }
    System { columns, target, equations }
}

/// Solves `f_n - g_n = d_{n+1} h_n + h_{n-1} d_n` for `n ≤ window` exactly.
/// Needs both slices to reach degree `window + 1` and `f`, `g` to reach
/// `window`. A found homotopy is checked again by substitution.
pub fn find_homotopy<K1: Key, K2: Key>(
    src: &ChainComplex<K1>,
    tgt: &ChainComplex<K2>,
    f: &ChainMap<K1, K2>,
    g: &ChainMap<K1, K2>,
    window: usize,
) -> Result<HomotopyResult<K1, K2>, LinError> {
    if src.top() < window || tgt.top() < window + 1 || f.top() < window || g.top() < window {
        return Err(LinError::Shape(format!("slices do not reach degree {}", window + 1)));
    }
    let sys = homotopy_system(src, tgt, f, g, window);
    let (keys, cols): (Vec<HomKey>, Vec<Vector<EqKey>>) = sys.columns.into_iter().unzip();
    let map = LinMap::new(FreeModule::new(keys)?, FreeModule::new(sys.equations)?, cols)?;
    match Solver::new(map).solve(&sys.target)? {
        Solution::Solved(x) => {
            let mut maps = Vec::new();
            for n in 0..=window {
                let cols = (0..src.module(n).dim())
                    .map(|i| {
                        (0..tgt.module(n + 1).dim())
                            .filter_map(|j| {
                                let c = x.get(&HomKey { n, src: i, tgt: j });
                                (c != Q::default()).then(|| (tgt.module(n + 1).basis()[j].clone(), c))
                            })
                            .collect()
                    })
                    .collect();
                maps.push(LinMap::new(src.module(n).clone(), tgt.module(n + 1).clone(), cols)?);
            }
            let h = ChainHomotopy { window, maps };
            if !reverify(src, tgt, f, g, &h) {
                return Err(LinError::Shape("homotopy failed re-verification".into()));
            }
            Ok(HomotopyResult::Found(h))
        }
        Solution::Inconsistent { certificate } => {
            let pairing = certificate.dot(&sys.target);
            Ok(HomotopyResult::None(NoHomotopy { window, functional: certificate, pairing }))
        }
    }
}

/// `f_n - g_n = d h_n + h_{n-1} d` on every basis element, recomputed from
/// the maps alone.
pub fn reverify<K1: Key, K2: Key>(
    src: &ChainComplex<K1>,
    tgt: &ChainComplex<K2>,
    f: &ChainMap<K1, K2>,
    g: &ChainMap<K1, K2>,
    h: &ChainHomotopy<K1, K2>,
) -> bool {
    (0..=h.window).all(|n| {
        (0..src.module(n).dim()).all(|i| {
            let lhs = f.at(n).column(i) - g.at(n).column(i);
            let mut rhs = tgt.d(n + 1).apply(h.maps[n].column(i)).expect("in codomain");
            if n > 0 {
                rhs += &h.maps[n - 1].apply(src.d(n).column(i)).expect("in domain");
            }
            lhs == rhs
        })
    })
}

/// Checks a certificate without the solver: `y` pairs to zero with every
/// column of the homotopy system and to `pairing ≠ 0` with `f - g`.
pub fn verify_certificate<K1: Key, K2: Key>(
    src: &ChainComplex<K1>,
    tgt: &ChainComplex<K2>,
    f: &ChainMap<K1, K2>,
    g: &ChainMap<K1, K2>,
    cert: &NoHomotopy,
) -> bool {
    let sys = homotopy_system(src, tgt, f, g, cert.window);
    let pairing = cert.functional.dot(&sys.target);
    pairing != Q::default() && pairing == cert.pairing && sys.columns.iter().all(|(_, c)| cert.functional.dot(c) == Q::default())
}

impl<K1: Key, K2: Key> ChainHomotopy<K1, K2> {
    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(LinMap::is_zero)
    }

    pub fn witness(
        &self,
        name: &str,
        render_src: impl Fn(&K1) -> String,
        render_tgt: impl Fn(&K2) -> String,
        reverified: bool,
    ) -> HomotopyWitness {
        let mut values = std::collections::BTreeMap::new();
        for m in &self.maps {
            for (x, col) in m.domain().basis().iter().zip(m.columns()) {
                if !col.is_zero() {
                    values.insert(render_src(x), sparse_with(col, &render_tgt));
                }
            }
        }
        HomotopyWitness { name: name.to_string(), window: self.window, values, reverified }
    }
}

impl NoHomotopy {
    pub fn witness(&self, name: &str) -> CertificateWitness {
        CertificateWitness {
            name: name.to_string(),
            window: self.window,
            functional: sparse_with(&self.functional, |k| k.to_string()),
            pairing: crate::exactlin::format_q(&self.pairing),
        }
    }
}
