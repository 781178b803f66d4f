//! Evaluation of `H` against `U(g)` and the semantic equality test on `H` and its tensor powers.
//!
//! Values `<X^e, m>` for PBW monomials `X^e` are stored unnormalized; products in `H`
//! become binomial convolutions, since `f -> sum_e <X^e, f> t^e / e!` is multiplicative.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::dual::{DualElement, DualMonomial, GeneratorSymbol, Kind, TensorDual};
use crate::lie::LieAlgebra;
use crate::scalar::{Matrix, Scalar};
use crate::uea::{PbwMonomial, Side, UeaElement, UeaError, UeaPair};

pub const DEFAULT_CAP: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqMode {
    /// Compare values on all PBW probes of total degree `<= d`.
    Heuristic(u32),
    /// Cyclic-subspace decision; `cap` bounds the dimension of the cyclic subspace.
    Exact { cap: usize },
}

impl EqMode {
    pub fn exact() -> Self {
        EqMode::Exact { cap: DEFAULT_CAP }
    }
}

impl fmt::Display for EqMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqMode::Heuristic(d) => write!(f, "heuristic:{d}"),
            EqMode::Exact { .. } => write!(f, "exact"),
        }
    }
}

/// A PBW probe (one monomial per tensor leg) on which a functional is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub probe: Vec<PbwMonomial>,
    pub value: Scalar,
    /// Which component failed, for functionals compared fiberwise.
    pub note: String,
}

impl Witness {
    pub fn render(&self, side: Side) -> String {
        let p: Vec<String> = self.probe.iter().map(|m| m.render(side.letter())).collect();
        let at = if self.note.is_empty() { String::new() } else { format!(" at {}", self.note) };
        format!("<{}, lhs - rhs>{} = {}", p.join(" ⊗ "), at, self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unequal(Witness),
    Inconclusive(String),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

struct SeriesTable {
    degree: u32,
    monos: Vec<PbwMonomial>,
    index: HashMap<PbwMonomial, usize>,
    // per monomial: (index of a, index of e - a, binom(e, a))
    splits: Vec<Vec<(usize, usize, Scalar)>>,
    values: RwLock<HashMap<DualMonomial, Arc<Vec<Scalar>>>>,
}

impl SeriesTable {
    fn new(n: usize, degree: u32) -> Self {
        let monos = PbwMonomial::all_up_to(n, degree);
        let index: HashMap<_, _> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let splits = monos
            .iter()
            .map(|m| {
                m.splits().into_iter().map(|(a, b, k)| (index[&a], index[&b], Scalar::from_integer(k.into()))).collect()
            })
            .collect();
        SeriesTable { degree, monos, index, splits, values: RwLock::new(HashMap::new()) }
    }
}

/// Evaluates the pairing `<D, f>` for `D` in `U(g_L)` and `f` in `H`, with caches.
pub struct Pairing {
    n: usize,
    ad: Vec<Matrix>,
    // -ad_k^T, the contragredient representation
    ad_dual: Vec<Matrix>,
    table: RwLock<Arc<SeriesTable>>,
}

impl fmt::Debug for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pairing").field("n", &self.n).finish()
    }
}

impl Pairing {
    pub fn new(lie: &LieAlgebra) -> Self {
        let ad = lie.adjoint_matrices();
        let ad_dual = ad.iter().map(|m| -&m.transpose()).collect();
        let n = lie.dim();
        Pairing { n, ad, ad_dual, table: RwLock::new(Arc::new(SeriesTable::new(n, 4))) }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn table(&self, degree: u32) -> Arc<SeriesTable> {
        {
            let t = self.table.read().expect("table lock");
            if t.degree >= degree {
                return t.clone();
            }
        }
        let mut w = self.table.write().expect("table lock");
        if w.degree < degree {
            *w = Arc::new(SeriesTable::new(self.n, degree));
        }
        w.clone()
    }

    /// `rho(X^e)` for `U`, `rho_bar(X^e)` for `Ubar`, as matrices, over the whole table.
    fn symbol_values(&self, t: &SeriesTable, g: GeneratorSymbol) -> Vec<Scalar> {
        // rho(X^e) = rho(X^{e'}) ad_l with l the last letter; rho_bar(X^{e'} X_l) = -ad_l rho_bar(X^{e'})
        let mut mats: Vec<Matrix> = Vec::with_capacity(t.monos.len());
        for m in &t.monos {
            let w = m.word();
            let mat = match w.last() {
                None => Matrix::identity(self.n),
                Some(&l) => {
                    let mut e = m.exponents().to_vec();
                    e[l] -= 1;
                    let prev = &mats[t.index[&PbwMonomial::from_exponents(e)]];
                    match g.kind {
                        Kind::U => prev * &self.ad[l],
                        Kind::Ubar => -&(&self.ad[l] * prev),
                    }
                }
            };
            mats.push(mat);
        }
        mats.into_iter().map(|m| m[(g.row(), g.col())].clone()).collect()
    }

    fn values(&self, t: &SeriesTable, m: &DualMonomial) -> Arc<Vec<Scalar>> {
        if let Some(v) = t.values.read().expect("values lock").get(m) {
            return v.clone();
        }
        let v = match m.split_last() {
            None => {
                let mut v = vec![Scalar::zero(); t.monos.len()];
                v[0] = Scalar::one();
                v
            }
            Some((rest, last)) if rest.is_empty() => self.symbol_values(t, last),
            Some((rest, last)) => {
                let a = self.values(t, &rest);
                let b = self.values(t, &DualMonomial::from_symbols(vec![last]));
                t.splits
                    .iter()
                    .map(|sp| {
                        let mut acc = Scalar::zero();
                        for (x, y, k) in sp {
                            if !a[*x].is_zero() && !b[*y].is_zero() {
                                acc += &a[*x] * &b[*y] * k;
                            }
                        }
                        acc
                    })
                    .collect()
            }
        };
        let v = Arc::new(v);
        t.values.write().expect("values lock").insert(m.clone(), v.clone());
        v
    }

    /// `<X^e, m>` for a single PBW monomial and dual monomial.
    pub fn value(&self, m: &DualMonomial, e: &PbwMonomial) -> Scalar {
        let t = self.table(e.degree());
        self.values(&t, m)[t.index[e]].clone()
    }

    /// `<D, f>` for `D` in the left copy.
    pub fn pair(&self, d: &UeaElement, f: &DualElement) -> Result<Scalar, UeaError> {
        if d.side() != Side::L {
            return Err(UeaError::CopyMismatch { expected: Side::L, found: d.side() });
        }
        let t = self.table(d.degree().unwrap_or(0));
        let mut acc = Scalar::zero();
        for (m, x) in f.terms() {
            let vals = self.values(&t, m);
            for (e, c) in d.terms() {
                let v = &vals[t.index[e]];
                if !v.is_zero() {
                    acc += x * c * v;
                }
            }
        }
        Ok(acc)
    }

    /// `<Y, f>_R = <phi^{-1}(Y), f>`: `<Y_k, U^i_j> = C^i_kj` and monomials pair in reversed order.
    pub fn pair_right(&self, uea: &UeaPair, y: &UeaElement, f: &DualElement) -> Result<Scalar, UeaError> {
        self.pair(&uea.phi_inv(y)?, f)
    }

    /// `<D_1 (x) ... (x) D_k, t>` for PBW probes.
    pub fn pair_tensor(&self, probe: &[PbwMonomial], t: &TensorDual) -> Scalar {
        let deg = probe.iter().map(PbwMonomial::degree).max().unwrap_or(0);
        let tab = self.table(deg);
        let idx: Vec<usize> = probe.iter().map(|p| tab.index[p]).collect();
        self.pair_indexed(&tab, &idx, t)
    }

    fn pair_indexed(&self, tab: &SeriesTable, idx: &[usize], t: &TensorDual) -> Scalar {
        let mut acc = Scalar::zero();
        'terms: for (k, c) in t.terms() {
            let mut prod = c.clone();
            for (m, &i) in k.iter().zip(idx) {
                let v = &self.values(tab, m)[i];
                if v.is_zero() {
                    continue 'terms;
                }
                prod *= v;
            }
            acc += prod;
        }
        acc
    }

    pub fn equals(&self, f: &DualElement, g: &DualElement, mode: EqMode) -> Verdict {
        self.is_zero(&TensorDual::from_element(&f.sub(g)), mode)
    }

    pub fn equals_tensor(&self, f: &TensorDual, g: &TensorDual, mode: EqMode) -> Verdict {
        self.is_zero(&f.sub(g), mode)
    }

    /// Decides whether `t` vanishes as a functional on `U(g)^{(x) legs}`.
    pub fn is_zero(&self, t: &TensorDual, mode: EqMode) -> Verdict {
        if t.is_zero() {
            return Verdict::Equal;
        }
        match mode {
            EqMode::Heuristic(d) => match self.probe_search(t, d) {
                Some(w) => Verdict::Unequal(w),
                None => Verdict::Equal,
            },
            EqMode::Exact { cap } => self.krylov(&[t], cap).map_or(Verdict::Equal, |(_, v)| v),
        }
    }

    /// First functional in `ts` that is not zero, with its verdict. Exact mode shares one
    /// cyclic subspace across all of them.
    pub fn first_nonzero(&self, ts: &[&TensorDual], mode: EqMode) -> Option<(usize, Verdict)> {
        let live: Vec<usize> = (0..ts.len()).filter(|&i| !ts[i].is_zero()).collect();
        match mode {
            EqMode::Heuristic(_) => live.into_iter().find_map(|i| match self.is_zero(ts[i], mode) {
                Verdict::Equal => None,
                v => Some((i, v)),
            }),
            EqMode::Exact { cap } => {
                let sub: Vec<&TensorDual> = live.iter().map(|&i| ts[i]).collect();
                self.krylov(&sub, cap).map(|(k, v)| (live.get(k).copied().unwrap_or(0), v))
            }
        }
    }

    /// First probe of total degree `<= d` (graded order) with nonzero value.
    pub fn probe_search(&self, t: &TensorDual, d: u32) -> Option<Witness> {
        let legs = t.legs().max(1);
        let tab = self.table(d);
        for joint in PbwMonomial::all_up_to(self.n * legs, d) {
            let probe: Vec<PbwMonomial> =
                joint.exponents().chunks(self.n).map(|c| PbwMonomial::from_exponents(c.to_vec())).collect();
            let idx: Vec<usize> = probe.iter().map(|p| tab.index[p]).collect();
            let v = self.pair_indexed(&tab, &idx, t);
            if !v.is_zero() {
                return Some(Witness { probe, value: v, note: String::new() });
            }
        }
        None
    }

    /// `None` when every functional vanishes; otherwise the index of one that does not.
    /// Index 0 with an inconclusive verdict when the cap is hit.
    fn krylov(&self, ts: &[&TensorDual], cap: usize) -> Option<(usize, Verdict)> {
        if ts.is_empty() {
            return None;
        }
        let legs = ts.iter().map(|t| t.legs()).max().unwrap_or(1).max(1);
        let by_col = Blocks::build(self.n, ts, false);
        let by_row = Blocks::build(self.n, ts, true);
        let blocks =
            if (by_row.layout.len(), by_row.ambient) < (by_col.layout.len(), by_col.ambient) { by_row } else { by_col };
        let gens: Vec<(usize, usize)> = (0..legs).flat_map(|l| (0..self.n).map(move |k| (l, k))).collect();
        let hit = |v: &Sparse, depth: u32| {
            let i = blocks.tests.iter().position(|t| !dot(t, v).is_zero())?;
            Some((i, self.witness_or_inconclusive(ts[i], depth)))
        };
        let mut basis = SparseEchelon::default();
        let start = blocks.start.clone();
        if let Some(r) = hit(&start, 0) {
            return Some(r);
        }
        let mut frontier = Vec::new();
        if let Some(v) = basis.insert(start) {
            frontier.push(v);
        }
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for w in &frontier {
                for &(leg, k) in &gens {
                    let img = blocks.act(self, leg, k, w);
                    if let Some(r) = hit(&img, depth) {
                        return Some(r);
                    }
                    if let Some(v) = basis.insert(img) {
                        if basis.len() > cap {
                            return Some((
                                0,
                                Verdict::Inconclusive(format!("cyclic subspace dimension exceeds cap {cap}")),
                            ));
                        }
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        None
    }

    fn witness_or_inconclusive(&self, t: &TensorDual, depth: u32) -> Verdict {
        match self.probe_search(t, depth) {
            Some(w) => Verdict::Unequal(w),
            None => Verdict::Inconclusive(format!("no probe of degree <= {depth} separates")),
        }
    }
}

type Sparse = BTreeMap<usize, Scalar>;

/// Direct sum of tensor-product representations carrying every monomial of a functional
/// as a matrix coefficient `<test, rho(D) start>`.
struct Blocks {
    ambient: usize,
    // per block: offset, factor list (leg, kind)
    layout: Vec<(usize, Vec<(usize, Kind)>)>,
    start: Sparse,
    tests: Vec<Sparse>,
    transposed: bool,
}

impl Blocks {
    fn build(n: usize, ts: &[&TensorDual], transposed: bool) -> Self {
        // (signature, fixed index tuple) -> (test, free index tuple) -> coefficient
        type Sig = Vec<(usize, Kind)>;
        type Class = BTreeMap<(usize, Vec<usize>), Scalar>;
        let mut classes: BTreeMap<(Sig, Vec<usize>), Class> = BTreeMap::new();
        for (which, t) in ts.iter().enumerate() {
            for (key, c) in t.terms() {
                let mut sig = Vec::new();
                let mut rows = Vec::new();
                let mut cols = Vec::new();
                for (leg, m) in key.iter().enumerate() {
                    for g in m.symbols() {
                        sig.push((leg, g.kind));
                        // <D, U^i_j> = rho(D)_ij, <D, Ubar^i_j> = rho*(D)_ji
                        let (r, s) = match g.kind {
                            Kind::U => (g.row(), g.col()),
                            Kind::Ubar => (g.col(), g.row()),
                        };
                        rows.push(r);
                        cols.push(s);
                    }
                }
                let (fixed, free) = if transposed { (rows, cols) } else { (cols, rows) };
                *classes.entry((sig, fixed)).or_default().entry((which, free)).or_insert_with(Scalar::zero) += c;
            }
        }
        let mut layout = Vec::new();
        let mut start = Sparse::new();
        let mut tests = vec![Sparse::new(); ts.len()];
        let mut offset = 0;
        for ((sig, fixed), coeffs) in classes {
            start.insert(offset + flat(n, &fixed), Scalar::one());
            for ((which, free), c) in coeffs {
                if !c.is_zero() {
                    tests[which].insert(offset + flat(n, &free), c);
                }
            }
            let size = n.pow(sig.len() as u32);
            layout.push((offset, sig));
            offset += size;
        }
        Blocks { ambient: offset, layout, start, tests, transposed }
    }

    fn act(&self, p: &Pairing, leg: usize, k: usize, v: &Sparse) -> Sparse {
        let n = p.n;
        let mut out = Sparse::new();
        for (&g, x) in v {
            let b = self.layout.partition_point(|(o, _)| *o <= g) - 1;
            let (offset, sig) = &self.layout[b];
            let idx = g - offset;
            let r = sig.len();
            for (pos, &(l, kind)) in sig.iter().enumerate() {
                if l != leg {
                    continue;
                }
                let mat = match kind {
                    Kind::U => &p.ad[k],
                    Kind::Ubar => &p.ad_dual[k],
                };
                let stride = n.pow((r - 1 - pos) as u32);
                let d = (idx / stride) % n;
                let base = idx - d * stride;
                for a in 0..n {
                    // transposed orientation applies rho(X)^T
                    let m = if self.transposed { &mat[(d, a)] } else { &mat[(a, d)] };
                    if !m.is_zero() {
                        *out.entry(offset + base + a * stride).or_insert_with(Scalar::zero) += m * x;
                    }
                }
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }
}

fn flat(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i)
}

fn dot(a: &Sparse, b: &Sparse) -> Scalar {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = Scalar::zero();
    for (i, x) in small {
        if let Some(y) = large.get(i) {
            acc += x * y;
        }
    }
    acc
}

/// Row echelon form over sparse vectors, rows keyed by leading index.
#[derive(Default)]
struct SparseEchelon {
    rows: BTreeMap<usize, Sparse>,
}

impl SparseEchelon {
    fn len(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v`; if independent, stores it with leading coefficient 1 and returns it.
    fn insert(&mut self, mut v: Sparse) -> Option<Sparse> {
        let mut from = 0;
        loop {
            let (&p, c) = v.range(from..).next()?;
            let Some(row) = self.rows.get(&p) else {
                let inv = c.recip();
                for x in v.values_mut() {
                    *x *= &inv;
                }
                v = v.split_off(&p);
                self.rows.insert(p, v.clone());
                return Some(v);
            };
            let f = c.clone();
            for (i, y) in row {
                let e = v.entry(*i).or_insert_with(Scalar::zero);
                *e -= &f * y;
                if e.is_zero() {
                    v.remove(i);
                }
            }
            from = p + 1;
        }
    }
}

/// Canonical representatives of `H` elements built from monomials of bounded length.
///
/// A monomial is standard when its functional is independent of all smaller monomials;
/// every element is rewritten as the unique combination of standard monomials.
#[derive(Debug)]
pub struct Reducer {
    length: usize,
    table: Arc<SeriesTable>,
    cols: usize,
    standard: Vec<DualMonomial>,
    // (pivot, row, combination over `standard`)
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
}

impl fmt::Debug for SeriesTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesTable").field("degree", &self.degree).finish()
    }
}

impl Pairing {
    /// Reducer for lengths up to `length`; `None` past `max_monomials` monomials or degree 16.
    pub fn reducer(&self, length: usize, max_monomials: usize) -> Option<Reducer> {
        let mut monos = DualMonomial::all_up_to(self.n, length);
        if monos.len() > max_monomials {
            return None;
        }
        monos.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        for cap in [4u32, 8, 12, 16] {
            let t = self.table(cap);
            let vals: Vec<Arc<Vec<Scalar>>> = monos.iter().map(|m| self.values(&t, m)).collect();
            let mut ech = Echelon::default();
            let mut stable = None;
            let mut j = 0;
            for d in 0..=cap {
                let mut grew = false;
                while j < t.monos.len() && t.monos[j].degree() == d {
                    let col: Vec<Scalar> = vals.iter().map(|v| v[j].clone()).collect();
                    grew |= ech.insert(col).is_some();
                    j += 1;
                }
                if !grew && d > 0 {
                    stable = Some(j);
                    break;
                }
            }
            let Some(cols) = stable else { continue };
            let mut r = Reducer { length, table: t, cols, standard: Vec::new(), rows: Vec::new() };
            for (m, v) in monos.iter().zip(&vals) {
                let k = r.standard.len();
                let mut combo = vec![Scalar::zero(); k + 1];
                combo[k] = Scalar::one();
                if r.absorb(v[..cols].to_vec(), combo) {
                    r.standard.push(m.clone());
                }
            }
            return Some(r);
        }
        None
    }
}

impl Reducer {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn standard(&self) -> &[DualMonomial] {
        &self.standard
    }

    fn eliminate(&self, v: &mut [Scalar], combo: &mut Vec<Scalar>) {
        for (p, row, c) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            if combo.len() < c.len() {
                combo.resize(c.len(), Scalar::zero());
            }
            for (x, y) in combo.iter_mut().zip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }

    fn absorb(&mut self, mut v: Vec<Scalar>, mut combo: Vec<Scalar>) -> bool {
        self.eliminate(&mut v, &mut combo);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].recip();
        for x in v.iter_mut().chain(combo.iter_mut()) {
            *x *= &inv;
        }
        self.rows.push((p, v, combo));
        true
    }

    /// Canonical form of `f`; `None` if `f` is longer than the reducer.
    pub fn reduce(&self, pairing: &Pairing, f: &DualElement) -> Option<DualElement> {
        if f.length() > self.length {
            return None;
        }
        let mut v = vec![Scalar::zero(); self.cols];
        for (m, c) in f.terms() {
            let vals = pairing.values(&self.table, m);
            for (x, y) in v.iter_mut().zip(vals.iter()) {
                *x += c * y;
            }
        }
        // v = sum_i lam_i row_i, and row_i = sum_s combo_i[s] standard_s
        let mut out = vec![Scalar::zero(); self.standard.len()];
        for (p, row, combo) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let lam = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &lam * y;
                }
            }
            for (x, y) in out.iter_mut().zip(combo) {
                if !y.is_zero() {
                    *x += &lam * y;
                }
            }
        }
        debug_assert!(v.iter().all(Zero::is_zero));
        Some(DualElement::from_terms(self.standard.iter().cloned().zip(out)))
    }
}

#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    /// Reduces `v`; if independent, stores it and returns it.
    fn insert(&mut self, mut v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((p, v.clone()));
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;
    use crate::scalar::int;

    fn setup(name: &str) -> (LieAlgebra, UeaPair, Pairing) {
        let lie = builtin(name).unwrap();
        let u = UeaPair::new(&lie);
        let p = Pairing::new(&lie);
        (lie, u, p)
    }

    #[test]
    fn generator_values() {
        let (lie, u, p) = setup("sl2");
        for k in 0..3 {
            let x = u.left.generator(k).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(p.pair(&x, &DualElement::u(i, j)).unwrap(), lie.constant(i, k, j));
                    assert_eq!(p.pair(&x, &DualElement::ubar(i, j)).unwrap(), -lie.constant(i, k, j));
                }
            }
        }
        assert_eq!(p.pair(&u.left.one(), &DualElement::u(1, 1)).unwrap(), int(1));
        assert_eq!(p.pair(&u.left.one(), &DualElement::u(0, 1)).unwrap(), int(0));
    }

    #[test]
    fn solvable_square() {
        let (_, u, p) = setup("solvable2");
        let d = u.left.word(&[0, 0]);
        assert_eq!(p.pair(&d, &DualElement::u(1, 1)).unwrap(), int(1));
    }

    #[test]
    fn right_copy_pairing() {
        let (lie, u, p) = setup("solvable2");
        let y = u.right.generator(0).unwrap();
        assert_eq!(p.pair_right(&u, &y, &DualElement::u(1, 1)).unwrap(), lie.constant(1, 0, 1));
        assert!(p.pair(&y, &DualElement::one()).is_err());
        // <Y1 Y2, U> = ad_2 ad_1
        let ad = lie.adjoint_matrices();
        let m = &ad[1] * &ad[0];
        let y12 = u.right.word(&[0, 1]);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(p.pair_right(&u, &y12, &DualElement::u(i, j)).unwrap(), m[(i, j)]);
            }
        }
    }

    #[test]
    fn inverse_matrix_identity_exact() {
        let (_, _, p) = setup("sl2");
        for i in 0..3 {
            for k in 0..3 {
                let mut f = DualElement::zero();
                for j in 0..3 {
                    f = f.add(&DualElement::u(i, j).mul(&DualElement::ubar(j, k)));
                }
                let rhs = if i == k { DualElement::one() } else { DualElement::zero() };
                assert_eq!(p.equals(&f, &rhs, EqMode::exact()), Verdict::Equal);
                assert_eq!(p.equals(&f, &rhs, EqMode::Heuristic(5)), Verdict::Equal);
            }
        }
    }

    #[test]
    fn abelian_off_diagonal_vanishes() {
        let (_, _, p) = setup("abelian2");
        assert!(p.equals(&DualElement::u(0, 1), &DualElement::zero(), EqMode::exact()).is_equal());
    }

    #[test]
    fn detects_inequality_with_witness() {
        let (_, _, p) = setup("solvable2");
        let v = p.equals(&DualElement::u(1, 1), &DualElement::one(), EqMode::exact());
        match v {
            Verdict::Unequal(w) => {
                assert_eq!(w.probe[0].degree(), 1);
                assert_eq!(w.value, int(1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cap_gives_inconclusive() {
        // sum_j U^1_j Ubar^j_1 = 1 needs a cyclic subspace of dimension > 1
        let (_, _, p) = setup("sl2");
        let mut f = DualElement::zero();
        for j in 0..3 {
            f = f.add(&DualElement::u(0, j).mul(&DualElement::ubar(j, 0)));
        }
        assert!(p.equals(&f, &DualElement::one(), EqMode::exact()).is_equal());
        assert!(matches!(p.equals(&f, &DualElement::one(), EqMode::Exact { cap: 1 }), Verdict::Inconclusive(_)));
    }

    #[test]
    fn tensor_zero_test() {
        let (_, _, p) = setup("sl2");
        let f = DualElement::u(0, 2).mul(&DualElement::ubar(2, 1));
        let d = f.coproduct(3);
        let flipped = TensorDual::from_terms(d.terms().map(|(k, c)| (vec![k[1].clone(), k[0].clone()], c.clone())));
        assert!(p.equals_tensor(&d, &d, EqMode::exact()).is_equal());
        assert!(!p.equals_tensor(&d, &flipped, EqMode::exact()).is_equal());
        assert!(!p.equals_tensor(&d, &flipped, EqMode::Heuristic(4)).is_equal());
    }
}
