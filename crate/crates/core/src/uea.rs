//! The universal enveloping algebra U(g) in PBW normal form.
//!
//! Two copies are supported: `Side::L` multiplies with the structure constants `C`,
//! `Side::R` with `-C`, so that `Y_i Y_j - Y_j Y_i = -sum_k C^k_ij Y_k`. Both carry the
//! cocommutative Hopf structure with primitive generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie::LieAlgebra;
use crate::scalar::{binomial, coeff_prefix, int, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::L => 'X',
            Side::R => 'Y',
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UeaError {
    #[error("copy mismatch: expected {expected:?}, found {found:?}")]
    CopyMismatch { expected: Side, found: Side },
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// Exponent vector `(e_1, ..., e_n)` of `X_1^{e_1} ... X_n^{e_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PbwMonomial(Vec<u16>);

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        PbwMonomial(vec![0; n])
    }

    pub fn generator(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        e[k] = 1;
        PbwMonomial(e)
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        PbwMonomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Letters in PBW order, e.g. `X1^2 X3` gives `[0, 0, 2]`.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect()
    }

    fn last_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// All PBW monomials in `n` variables of total degree `<= max_degree`, in graded order.
    pub fn all_up_to(n: usize, max_degree: u32) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let mut e = vec![0u16; n];
            compositions(n, d, 0, &mut e, &mut out);
        }
        out
    }

    /// Pairs `(a, e - a, multiplicity)` of the coproduct `Delta(X^e) = sum binom(e, a) X^a (x) X^{e-a}`.
    pub fn splits(&self) -> Vec<(PbwMonomial, PbwMonomial, u64)> {
        let mut out = vec![(Vec::new(), Vec::new(), 1u64)];
        for &e in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for (a, b, m) in &out {
                for k in 0..=e {
                    let mut a2 = a.clone();
                    let mut b2 = b.clone();
                    a2.push(k);
                    b2.push(e - k);
                    next.push((a2, b2, m * binomial(e as u32, k as u32)));
                }
            }
            out = next;
        }
        out.into_iter().map(|(a, b, m)| (PbwMonomial(a), PbwMonomial(b), m)).collect()
    }

    pub(crate) fn graded_key(&self) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<Vec<u16>>) {
        (std::cmp::Reverse(self.degree()), std::cmp::Reverse(self.0.clone()))
    }

    pub fn render(&self, letter: char) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{letter}{}", i + 1)),
                _ => parts.push(format!("{letter}{}^{e}", i + 1)),
            }
        }
        parts.join("*")
    }
}

fn compositions(n: usize, remaining: u32, pos: usize, e: &mut Vec<u16>, out: &mut Vec<PbwMonomial>) {
    if pos == n - 1 {
        e[pos] = remaining as u16;
        out.push(PbwMonomial(e.clone()));
        e[pos] = 0;
        return;
    }
    for k in (0..=remaining).rev() {
        e[pos] = k as u16;
        compositions(n, remaining - k, pos + 1, e, out);
    }
    e[pos] = 0;
}

pub(crate) type Terms = BTreeMap<PbwMonomial, Scalar>;

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Element of `U(g)` (copy `side`) as a finite combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UeaElement {
    side: Side,
    n: usize,
    terms: Terms,
}

impl UeaElement {
    pub fn zero(side: Side, n: usize) -> Self {
        UeaElement { side, n, terms: BTreeMap::new() }
    }

    pub fn one(side: Side, n: usize) -> Self {
        Self::monomial(side, PbwMonomial::one(n), Scalar::one())
    }

    pub fn scalar(side: Side, n: usize, c: Scalar) -> Self {
        Self::monomial(side, PbwMonomial::one(n), c)
    }

    pub fn monomial(side: Side, m: PbwMonomial, c: Scalar) -> Self {
        let n = m.dim();
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c);
        UeaElement { side, n, terms }
    }

    /// Generator `X_{k+1}` (0-based `k`).
    pub fn generator(side: Side, n: usize, k: usize) -> Self {
        Self::monomial(side, PbwMonomial::generator(n, k), Scalar::one())
    }

    pub fn from_terms(side: Side, n: usize, terms: impl IntoIterator<Item = (PbwMonomial, Scalar)>) -> Self {
        let mut out = Self::zero(side, n);
        for (m, c) in terms {
            add_term(&mut out.terms, m, c);
        }
        out
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> UeaElement {
        if c.is_zero() {
            return Self::zero(self.side, self.n);
        }
        UeaElement { side: self.side, n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Scalar) {
        for (m, x) in &other.terms {
            add_term(&mut self.terms, m.clone(), x * c);
        }
    }

    pub(crate) fn push(&mut self, m: PbwMonomial, c: Scalar) {
        add_term(&mut self.terms, m, c);
    }

    /// Counit: coefficient of the empty monomial.
    pub fn counit(&self) -> Scalar {
        self.coefficient(&PbwMonomial::one(self.n))
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter(), |m| m.render(self.side.letter()), |m| m.is_one(), |m| m.graded_key())
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Shared term printer: `3/2*X1^2*X2 - X3 + 1`.
pub(crate) fn render_terms<'a, K: 'a, O: Ord>(
    terms: impl Iterator<Item = (&'a K, &'a Scalar)>,
    body: impl Fn(&K) -> String,
    is_unit: impl Fn(&K) -> bool,
    key: impl Fn(&K) -> O,
) -> String {
    let mut items: Vec<_> = terms.collect();
    if items.is_empty() {
        return "0".to_string();
    }
    items.sort_by_key(|(k, _)| key(k));
    let mut s = String::new();
    for (idx, (k, c)) in items.into_iter().enumerate() {
        let (sign, prefix) = coeff_prefix(c, idx == 0);
        s.push_str(&sign);
        if is_unit(k) {
            let a: Scalar = num_traits::Signed::abs(c);
            s.push_str(&a.to_string());
        } else {
            s.push_str(&prefix);
            s.push_str(&body(k));
        }
    }
    s
}

/// Iterated coproduct legs: each key lists one PBW monomial per tensor leg.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorUea {
    side: Side,
    terms: BTreeMap<Vec<PbwMonomial>, Scalar>,
}

impl TensorUea {
    pub fn legs(&self) -> usize {
        self.terms.keys().next().map_or(0, Vec::len)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<PbwMonomial>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[PbwMonomial]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self) -> String {
        let letter = self.side.letter();
        render_terms(
            self.terms.iter(),
            |k| k.iter().map(|m| m.render(letter)).collect::<Vec<_>>().join(" ⊗ "),
            |_| false,
            |k| k.iter().map(PbwMonomial::graded_key).collect::<Vec<_>>(),
        )
    }
}

/// Multiplication context for one copy of `U(g)`. Holds a memo table of
/// `monomial * generator` products, shared by all callers.
pub struct Uea {
    side: Side,
    n: usize,
    // bracket[i][j] = [X_i, X_j] in this copy
    bracket: Vec<Vec<Vec<(usize, Scalar)>>>,
    gen_cache: RwLock<HashMap<(PbwMonomial, usize), Terms>>,
    pair_cache: RwLock<HashMap<(PbwMonomial, PbwMonomial), Terms>>,
}

impl fmt::Debug for Uea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Uea").field("side", &self.side).field("n", &self.n).finish()
    }
}

impl Uea {
    pub fn new(lie: &LieAlgebra, side: Side) -> Self {
        let n = lie.dim();
        let sign = match side {
            Side::L => int(1),
            Side::R => int(-1),
        };
        let bracket = (0..n)
            .map(|i| (0..n).map(|j| lie.bracket(i, j).iter().map(|(k, c)| (*k, c * &sign)).collect()).collect())
            .collect();
        Uea { side, n, bracket, gen_cache: RwLock::new(HashMap::new()), pair_cache: RwLock::new(HashMap::new()) }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> UeaElement {
        UeaElement::one(self.side, self.n)
    }

    pub fn zero(&self) -> UeaElement {
        UeaElement::zero(self.side, self.n)
    }

    pub fn generator(&self, k: usize) -> Result<UeaElement, UeaError> {
        if k >= self.n {
            return Err(UeaError::IndexOutOfRange { index: k + 1, n: self.n });
        }
        Ok(UeaElement::generator(self.side, self.n, k))
    }

    fn check(&self, a: &UeaElement) -> Result<(), UeaError> {
        if a.side != self.side {
            return Err(UeaError::CopyMismatch { expected: self.side, found: a.side });
        }
        Ok(())
    }

    /// `m * X_k` in PBW normal form, by straightening `X_l X_k -> X_k X_l + [X_l, X_k]` for `l > k`.
    fn mul_generator(&self, m: &PbwMonomial, k: usize) -> Terms {
        let key = (m.clone(), k);
        if let Some(t) = self.gen_cache.read().expect("cache lock").get(&key) {
            return t.clone();
        }
        let mut out = Terms::new();
        match m.last_index() {
            Some(last) if last > k => {
                let mut prefix = m.clone();
                prefix.0[last] -= 1;
                // (prefix * X_k) * X_last
                for (p, c) in self.mul_generator(&prefix, k) {
                    for (q, d) in self.mul_generator(&p, last) {
                        add_term(&mut out, q, &c * &d);
                    }
                }
                // prefix * [X_last, X_k]
                for (s, cs) in &self.bracket[last][k] {
                    for (q, d) in self.mul_generator(&prefix, *s) {
                        add_term(&mut out, q, cs * &d);
                    }
                }
            }
            _ => {
                let mut e = m.clone();
                e.0[k] += 1;
                out.insert(e, Scalar::one());
            }
        }
        self.gen_cache.write().expect("cache lock").insert(key, out.clone());
        out
    }

    fn mul_monomials(&self, a: &PbwMonomial, b: &PbwMonomial) -> Terms {
        if b.is_one() {
            return Terms::from([(a.clone(), Scalar::one())]);
        }
        if a.is_one() {
            return Terms::from([(b.clone(), Scalar::one())]);
        }
        let key = (a.clone(), b.clone());
        if let Some(t) = self.pair_cache.read().expect("cache lock").get(&key) {
            return t.clone();
        }
        let mut cur = Terms::from([(a.clone(), Scalar::one())]);
        for k in b.word() {
            let mut next = Terms::new();
            for (m, c) in &cur {
                for (q, d) in self.mul_generator(m, k) {
                    add_term(&mut next, q, c * &d);
                }
            }
            cur = next;
        }
        self.pair_cache.write().expect("cache lock").insert(key, cur.clone());
        cur
    }

    pub fn mul(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement, UeaError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let coeff = ca * cb;
                for (m, c) in self.mul_monomials(ma, mb) {
                    add_term(&mut out.terms, m, &coeff * &c);
                }
            }
        }
        Ok(out)
    }

    /// Product of a word of generators (0-based letters), normalized.
    pub fn word(&self, letters: &[usize]) -> UeaElement {
        let mut cur = self.one();
        for &k in letters {
            let mut next = self.zero();
            for (m, c) in &cur.terms {
                for (q, d) in self.mul_generator(m, k) {
                    add_term(&mut next.terms, q, c * &d);
                }
            }
            cur = next;
        }
        cur
    }

    /// `a * X_k`.
    pub fn mul_gen_right(&self, a: &UeaElement, k: usize) -> UeaElement {
        let mut out = self.zero();
        for (m, c) in &a.terms {
            for (q, d) in self.mul_generator(m, k) {
                add_term(&mut out.terms, q, c * &d);
            }
        }
        out
    }

    /// `a^p`.
    pub fn pow(&self, a: &UeaElement, p: u32) -> Result<UeaElement, UeaError> {
        let mut out = self.one();
        for _ in 0..p {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }

    /// `Delta(a) = sum a_(1) (x) a_(2)` with primitive generators.
    pub fn coproduct(&self, a: &UeaElement) -> Result<TensorUea, UeaError> {
        self.coproduct_iter(a, 1)
    }

    /// `Delta^{(m)}`, the `(m+1)`-fold coproduct, obtained by iterating `Delta (x) id`.
    pub fn coproduct_iter(&self, a: &UeaElement, m: usize) -> Result<TensorUea, UeaError> {
        self.check(a)?;
        let mut cur: BTreeMap<Vec<PbwMonomial>, Scalar> =
            a.terms.iter().map(|(k, c)| (vec![k.clone()], c.clone())).collect();
        for _ in 0..m.max(1) {
            let mut next = BTreeMap::new();
            for (legs, c) in &cur {
                for (x, y, mult) in legs[0].splits() {
                    let mut key = Vec::with_capacity(legs.len() + 1);
                    key.push(x);
                    key.push(y);
                    key.extend(legs[1..].iter().cloned());
                    add_term(&mut next, key, c * Scalar::from_integer(mult.into()));
                }
            }
            cur = next;
        }
        Ok(TensorUea { side: self.side, terms: cur })
    }

    pub fn counit(&self, a: &UeaElement) -> Result<Scalar, UeaError> {
        self.check(a)?;
        Ok(a.counit())
    }

    /// `S(X_{i_1} ... X_{i_m}) = (-1)^m X_{i_m} ... X_{i_1}`, renormalized.
    pub fn antipode(&self, a: &UeaElement) -> Result<UeaElement, UeaError> {
        self.check(a)?;
        let mut out = self.zero();
        for (m, c) in &a.terms {
            let mut w = m.word();
            w.reverse();
            let sign = if w.len() % 2 == 0 { c.clone() } else { -c };
            out.add_scaled(&self.word(&w), &sign);
        }
        Ok(out)
    }

    /// Image of `a` under the antiisomorphism to the other copy (`X_i -> Y_i` or back),
    /// computed in `target`.
    pub fn transfer(&self, a: &UeaElement, target: &Uea) -> Result<UeaElement, UeaError> {
        self.check(a)?;
        let mut out = target.zero();
        for (m, c) in &a.terms {
            let mut w = m.word();
            w.reverse();
            out.add_scaled(&target.word(&w), c);
        }
        Ok(out)
    }
}

/// The pair of copies `U(g_L)`, `U(g_R)` with the antiisomorphism `phi: X_i -> Y_i`.
#[derive(Debug)]
pub struct UeaPair {
    pub left: Uea,
    pub right: Uea,
}

impl UeaPair {
    pub fn new(lie: &LieAlgebra) -> Self {
        UeaPair { left: Uea::new(lie, Side::L), right: Uea::new(lie, Side::R) }
    }

    pub fn ring(&self, side: Side) -> &Uea {
        match side {
            Side::L => &self.left,
            Side::R => &self.right,
        }
    }

    pub fn mul(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement, UeaError> {
        if a.side != b.side {
            return Err(UeaError::CopyMismatch { expected: a.side, found: b.side });
        }
        self.ring(a.side).mul(a, b)
    }

    pub fn phi(&self, a: &UeaElement) -> Result<UeaElement, UeaError> {
        self.left.transfer(a, &self.right)
    }

    pub fn phi_inv(&self, a: &UeaElement) -> Result<UeaElement, UeaError> {
        self.right.transfer(a, &self.left)
    }
}
