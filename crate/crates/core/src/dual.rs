//! The commutative Hopf algebra `H = U(g)^min` generated by the matrix-coefficient
//! functionals `U^i_j` and `Ubar^i_j`, represented syntactically as polynomials in them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::uea::{add_term, render_terms};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    U,
    Ubar,
}

impl Kind {
    pub fn flip(self) -> Kind {
        match self {
            Kind::U => Kind::Ubar,
            Kind::Ubar => Kind::U,
        }
    }
}

/// `U^i_j` or `Ubar^i_j`; indices stored 0-based, printed 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSymbol {
    pub kind: Kind,
    pub i: u16,
    pub j: u16,
}

impl GeneratorSymbol {
    pub fn u(i: usize, j: usize) -> Self {
        GeneratorSymbol { kind: Kind::U, i: i as u16, j: j as u16 }
    }

    pub fn ubar(i: usize, j: usize) -> Self {
        GeneratorSymbol { kind: Kind::Ubar, i: i as u16, j: j as u16 }
    }

    pub fn row(&self) -> usize {
        self.i as usize
    }

    pub fn col(&self) -> usize {
        self.j as usize
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Kind::U => "U",
            Kind::Ubar => "Ubar",
        };
        write!(f, "{}[{},{}]", name, self.i + 1, self.j + 1)
    }
}

/// Sorted multiset of generator symbols. The empty monomial is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualMonomial(Vec<GeneratorSymbol>);

impl DualMonomial {
    pub fn one() -> Self {
        DualMonomial(Vec::new())
    }

    pub fn from_symbols(mut s: Vec<GeneratorSymbol>) -> Self {
        s.sort_unstable();
        DualMonomial(s)
    }

    /// All monomials of length `<= r` in the `2 n^2` symbols, shortest first.
    pub fn all_up_to(n: usize, r: usize) -> Vec<DualMonomial> {
        let mut syms = Vec::with_capacity(2 * n * n);
        for kind in [Kind::U, Kind::Ubar] {
            for i in 0..n {
                for j in 0..n {
                    syms.push(GeneratorSymbol { kind, i: i as u16, j: j as u16 });
                }
            }
        }
        let mut out = vec![DualMonomial::one()];
        let mut layer: Vec<(usize, Vec<GeneratorSymbol>)> = vec![(0, Vec::new())];
        for _ in 0..r {
            let mut next = Vec::new();
            for (from, v) in &layer {
                for (s, g) in syms.iter().enumerate().skip(*from) {
                    let mut w = v.clone();
                    w.push(*g);
                    next.push((s, w));
                }
            }
            out.extend(next.iter().map(|(_, w)| DualMonomial(w.clone())));
            layer = next;
        }
        out
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &DualMonomial) -> DualMonomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() && b < other.0.len() {
            if self.0[a] <= other.0[b] {
                v.push(self.0[a]);
                a += 1;
            } else {
                v.push(other.0[b]);
                b += 1;
            }
        }
        v.extend_from_slice(&self.0[a..]);
        v.extend_from_slice(&other.0[b..]);
        DualMonomial(v)
    }

    /// Splits off the last symbol: `m = rest * last`.
    pub fn split_last(&self) -> Option<(DualMonomial, GeneratorSymbol)> {
        let (last, rest) = self.0.split_last()?;
        Some((DualMonomial(rest.to_vec()), *last))
    }

    pub fn antipode(&self) -> DualMonomial {
        DualMonomial::from_symbols(self.0.iter().map(|g| GeneratorSymbol { kind: g.kind.flip(), ..*g }).collect())
    }

    pub fn counit(&self) -> bool {
        self.0.iter().all(|g| g.i == g.j)
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < self.0.len() {
            let mut e = 1;
            while k + e < self.0.len() && self.0[k + e] == self.0[k] {
                e += 1;
            }
            if e == 1 {
                parts.push(self.0[k].to_string());
            } else {
                parts.push(format!("{}^{}", self.0[k], e));
            }
            k += e;
        }
        parts.join("*")
    }

    pub(crate) fn graded_key(&self) -> (std::cmp::Reverse<usize>, DualMonomial) {
        (std::cmp::Reverse(self.0.len()), self.clone())
    }
}

/// Element of `H`: a finite combination of dual monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DualElement {
    terms: BTreeMap<DualMonomial, Scalar>,
}

impl DualElement {
    pub fn zero() -> Self {
        DualElement::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(DualMonomial::one(), c)
    }

    pub fn monomial(m: DualMonomial, c: Scalar) -> Self {
        let mut out = DualElement::zero();
        add_term(&mut out.terms, m, c);
        out
    }

    pub fn symbol(g: GeneratorSymbol) -> Self {
        Self::monomial(DualMonomial(vec![g]), Scalar::one())
    }

    pub fn u(i: usize, j: usize) -> Self {
        Self::symbol(GeneratorSymbol::u(i, j))
    }

    pub fn ubar(i: usize, j: usize) -> Self {
        Self::symbol(GeneratorSymbol::ubar(i, j))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (DualMonomial, Scalar)>) -> Self {
        let mut out = DualElement::zero();
        for (m, c) in terms {
            add_term(&mut out.terms, m, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DualMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &DualMonomial) -> Scalar {
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

    /// Largest monomial length.
    pub fn length(&self) -> usize {
        self.terms.keys().map(DualMonomial::len).max().unwrap_or(0)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|g| g.row().max(g.col()))).max()
    }

    pub fn add(&self, other: &DualElement) -> DualElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &DualElement) -> DualElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scale(&self, c: &Scalar) -> DualElement {
        DualElement::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    pub fn add_scaled(&mut self, other: &DualElement, c: &Scalar) {
        for (m, x) in &other.terms {
            add_term(&mut self.terms, m.clone(), x * c);
        }
    }

    pub(crate) fn push(&mut self, m: DualMonomial, c: Scalar) {
        add_term(&mut self.terms, m, c);
    }

    pub fn mul(&self, other: &DualElement) -> DualElement {
        let mut out = DualElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                add_term(&mut out.terms, a.mul(b), x * y);
            }
        }
        out
    }

    pub fn counit(&self) -> Scalar {
        self.terms.iter().filter(|(m, _)| m.counit()).fold(Scalar::zero(), |acc, (_, c)| acc + c)
    }

    pub fn antipode(&self) -> DualElement {
        DualElement::from_terms(self.terms.iter().map(|(m, c)| (m.antipode(), c.clone())))
    }

    /// `Delta(f)` with `Delta(U^i_j) = sum_k U^i_k (x) U^k_j` and
    /// `Delta(Ubar^i_j) = sum_k Ubar^k_j (x) Ubar^i_k`.
    pub fn coproduct(&self, n: usize) -> TensorDual {
        self.coproduct_iter(n, 1)
    }

    /// `(m+1)`-fold coproduct, iterating `Delta (x) id`.
    pub fn coproduct_iter(&self, n: usize, m: usize) -> TensorDual {
        let mut cur = TensorDual::from_element(self);
        for _ in 0..m.max(1) {
            let mut next = BTreeMap::new();
            for (legs, c) in &cur.terms {
                for (a, b) in monomial_coproduct(&legs[0], n) {
                    let mut key = Vec::with_capacity(legs.len() + 1);
                    key.push(a);
                    key.push(b);
                    key.extend(legs[1..].iter().cloned());
                    add_term(&mut next, key, c.clone());
                }
            }
            cur = TensorDual { terms: next };
        }
        cur
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter(), DualMonomial::render, DualMonomial::is_empty, DualMonomial::graded_key)
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn symbol_coproduct(g: GeneratorSymbol, n: usize) -> impl Iterator<Item = (GeneratorSymbol, GeneratorSymbol)> {
    (0..n).map(move |k| match g.kind {
        Kind::U => (GeneratorSymbol::u(g.row(), k), GeneratorSymbol::u(k, g.col())),
        Kind::Ubar => (GeneratorSymbol::ubar(k, g.col()), GeneratorSymbol::ubar(g.row(), k)),
    })
}

/// Expanded coproduct of a monomial; repeated keys are possible.
pub(crate) fn monomial_coproduct(m: &DualMonomial, n: usize) -> Vec<(DualMonomial, DualMonomial)> {
    let mut acc: Vec<(Vec<GeneratorSymbol>, Vec<GeneratorSymbol>)> = vec![(Vec::new(), Vec::new())];
    for g in &m.0 {
        let mut next = Vec::with_capacity(acc.len() * n);
        for (a, b) in &acc {
            for (x, y) in symbol_coproduct(*g, n) {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                a2.push(x);
                b2.push(y);
                next.push((a2, b2));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(a, b)| (DualMonomial::from_symbols(a), DualMonomial::from_symbols(b))).collect()
}

/// Element of `H^{(x) k}`; every key lists one monomial per leg.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorDual {
    terms: BTreeMap<Vec<DualMonomial>, Scalar>,
}

impl TensorDual {
    pub fn zero() -> Self {
        TensorDual::default()
    }

    pub fn from_element(f: &DualElement) -> Self {
        TensorDual { terms: f.terms.iter().map(|(m, c)| (vec![m.clone()], c.clone())).collect() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<DualMonomial>, Scalar)>) -> Self {
        let mut out = TensorDual::zero();
        for (k, c) in terms {
            add_term(&mut out.terms, k, c);
        }
        out
    }

    /// `f (x) g` for single-leg factors.
    pub fn pure(legs: &[&DualElement]) -> Self {
        let mut cur: BTreeMap<Vec<DualMonomial>, Scalar> = BTreeMap::from([(Vec::new(), Scalar::one())]);
        for f in legs {
            let mut next = BTreeMap::new();
            for (k, c) in &cur {
                for (m, x) in &f.terms {
                    let mut k2 = k.clone();
                    k2.push(m.clone());
                    add_term(&mut next, k2, c * x);
                }
            }
            cur = next;
        }
        TensorDual { terms: cur }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<DualMonomial>, &Scalar)> {
        self.terms.iter()
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

    pub fn legs(&self) -> usize {
        self.terms.keys().next().map_or(0, Vec::len)
    }

    pub fn add_scaled(&mut self, other: &TensorDual, c: &Scalar) {
        for (k, x) in &other.terms {
            add_term(&mut self.terms, k.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &TensorDual) -> TensorDual {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub(crate) fn push(&mut self, k: Vec<DualMonomial>, c: Scalar) {
        add_term(&mut self.terms, k, c);
    }

    /// Applies `f -> (f_(1), f_(2))` to leg `leg`, producing one more leg.
    pub fn expand_leg(&self, leg: usize, n: usize) -> TensorDual {
        let mut out = TensorDual::zero();
        for (k, c) in &self.terms {
            for (a, b) in monomial_coproduct(&k[leg], n) {
                let mut key = k[..leg].to_vec();
                key.push(a);
                key.push(b);
                key.extend(k[leg + 1..].iter().cloned());
                add_term(&mut out.terms, key, c.clone());
            }
        }
        out
    }

    /// Applies the counit to leg `leg`, removing it.
    pub fn counit_leg(&self, leg: usize) -> TensorDual {
        let mut out = TensorDual::zero();
        for (k, c) in &self.terms {
            if k[leg].counit() {
                let mut key = k.clone();
                key.remove(leg);
                add_term(&mut out.terms, key, c.clone());
            }
        }
        out
    }

    /// Single-leg view.
    pub fn into_element(self) -> DualElement {
        DualElement::from_terms(self.terms.into_iter().map(|(mut k, c)| {
            assert_eq!(k.len(), 1, "expected a single tensor leg");
            (k.pop().unwrap(), c)
        }))
    }

    pub fn render(&self) -> String {
        render_terms(
            self.terms.iter(),
            |k| k.iter().map(DualMonomial::render).collect::<Vec<_>>().join(" ⊗ "),
            |_| false,
            |k| k.iter().map(DualMonomial::graded_key).collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for TensorDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn commutative_product() {
        let a = DualElement::u(0, 1);
        let b = DualElement::ubar(1, 0);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).to_string(), "U[1,2]*Ubar[2,1]");
        assert_eq!(a.mul(&DualElement::one()), a);
        let s = DualElement::u(0, 0).add(&DualElement::u(1, 1));
        assert_eq!(s.mul(&DualElement::u(0, 0)).to_string(), "U[1,1]^2 + U[1,1]*U[2,2]");
    }

    #[test]
    fn enumerates_multisets() {
        let all = DualMonomial::all_up_to(2, 2);
        assert_eq!(all.len(), 1 + 8 + 36);
        assert!(all.windows(2).all(|w| w[0].len() <= w[1].len()));
        assert_eq!(DualMonomial::all_up_to(3, 1).len(), 19);
    }

    #[test]
    fn coproduct_generators() {
        let d = DualElement::u(0, 1).coproduct(2);
        assert_eq!(d.render(), "U[1,1] ⊗ U[1,2] + U[1,2] ⊗ U[2,2]");
        let d = DualElement::ubar(0, 1).coproduct(2);
        assert_eq!(d.render(), "Ubar[1,2] ⊗ Ubar[1,1] + Ubar[2,2] ⊗ Ubar[1,2]");
        assert_eq!(DualElement::one().coproduct(2).render(), "1 ⊗ 1");
    }

    #[test]
    fn counit_values() {
        assert_eq!(DualElement::u(0, 1).counit(), int(0));
        assert_eq!(DualElement::u(0, 0).mul(&DualElement::ubar(1, 1)).counit(), int(1));
        assert_eq!(DualElement::one().counit(), int(1));
    }

    #[test]
    fn antipode_swaps_kinds() {
        assert_eq!(DualElement::u(0, 1).antipode(), DualElement::ubar(0, 1));
        let f = DualElement::ubar(0, 1).mul(&DualElement::u(1, 0));
        assert_eq!(f.antipode().to_string(), "U[1,2]*Ubar[2,1]");
        assert_eq!(f.antipode().antipode(), f);
        assert_eq!(DualElement::one().antipode(), DualElement::one());
    }

    #[test]
    fn coassociative_and_counital_on_monomials() {
        let n = 2;
        let f = DualElement::u(0, 1).mul(&DualElement::ubar(1, 0)).add(&DualElement::u(1, 1));
        let d = f.coproduct(n);
        let left = d.expand_leg(0, n);
        let right = d.expand_leg(1, n);
        assert_eq!(left, right);
        assert_eq!(d.counit_leg(0).into_element(), f);
        assert_eq!(d.counit_leg(1).into_element(), f);
        assert_eq!(f.coproduct_iter(n, 2), left);
    }
}
