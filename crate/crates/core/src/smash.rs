//! The smash product `B = H # U(g)`, the actions of `U(g)` and `H` on each other,
//! and the coaction `lambda`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::context::Context;
use crate::dual::{DualElement, DualMonomial, GeneratorSymbol, Kind};
use crate::pairing::{EqMode, Verdict};
use crate::scalar::{coeff_prefix, Scalar};
use crate::uea::{add_term, PbwMonomial, Side, UeaElement, UeaError};

/// Element `sum c f # D` of `H # U(g)`; `side` records which copy of `U(g)` is used.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmashElement {
    side: Side,
    n: usize,
    terms: BTreeMap<(DualMonomial, PbwMonomial), Scalar>,
}

impl SmashElement {
    pub fn zero(side: Side, n: usize) -> Self {
        SmashElement { side, n, terms: BTreeMap::new() }
    }

    pub fn one(side: Side, n: usize) -> Self {
        Self::term(side, DualMonomial::one(), PbwMonomial::one(n), Scalar::one())
    }

    pub fn scalar(side: Side, n: usize, c: Scalar) -> Self {
        Self::term(side, DualMonomial::one(), PbwMonomial::one(n), c)
    }

    pub fn term(side: Side, f: DualMonomial, d: PbwMonomial, c: Scalar) -> Self {
        let n = d.dim();
        let mut out = SmashElement::zero(side, n);
        add_term(&mut out.terms, (f, d), c);
        out
    }

    /// `f # 1`.
    pub fn from_dual(side: Side, n: usize, f: &DualElement) -> Self {
        Self::pure(f, &UeaElement::one(side, n))
    }

    /// `1 # D`.
    pub fn from_uea(d: &UeaElement) -> Self {
        Self::pure(&DualElement::one(), d)
    }

    /// `f # D`.
    pub fn pure(f: &DualElement, d: &UeaElement) -> Self {
        let mut out = SmashElement::zero(d.side(), d.dim());
        for (m, x) in f.terms() {
            for (e, c) in d.terms() {
                add_term(&mut out.terms, (m.clone(), e.clone()), x * c);
            }
        }
        out
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(DualMonomial, PbwMonomial), &Scalar)> {
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

    pub fn add(&self, other: &SmashElement) -> SmashElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &SmashElement) -> SmashElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scale(&self, c: &Scalar) -> SmashElement {
        let mut out = SmashElement::zero(self.side, self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn add_scaled(&mut self, other: &SmashElement, c: &Scalar) {
        for (k, x) in &other.terms {
            add_term(&mut self.terms, k.clone(), x * c);
        }
    }

    pub(crate) fn push(&mut self, f: DualMonomial, d: PbwMonomial, c: Scalar) {
        add_term(&mut self.terms, (f, d), c);
    }

    /// Coefficients in `H` of each PBW monomial.
    pub fn fibers(&self) -> BTreeMap<PbwMonomial, DualElement> {
        let mut out: BTreeMap<PbwMonomial, DualElement> = BTreeMap::new();
        for ((f, d), c) in &self.terms {
            out.entry(d.clone()).or_default().push(f.clone(), c.clone());
        }
        out
    }

    /// The `H` part, if this element lies in `H # 1`.
    pub fn dual_part(&self) -> Option<DualElement> {
        let mut out = DualElement::zero();
        for ((f, d), c) in &self.terms {
            if !d.is_one() {
                return None;
            }
            out.push(f.clone(), c.clone());
        }
        Some(out)
    }

    /// Counit on the `H` factor: `sum eps(f) D`.
    pub fn counit_dual(&self) -> UeaElement {
        let mut out = UeaElement::zero(self.side, self.n);
        for ((f, d), c) in &self.terms {
            if f.counit() {
                out.push(d.clone(), c.clone());
            }
        }
        out
    }

    /// A scalar in the dual leg is printed there: `3/2 ♯ X1`, not `3/2*1 ♯ X1`.
    pub fn render(&self) -> String {
        let letter = self.side.letter();
        let mut items: Vec<_> = self.terms.iter().collect();
        if items.is_empty() {
            return "0".to_string();
        }
        items.sort_by_key(|((f, d), _)| (d.graded_key(), f.graded_key()));
        let mut s = String::new();
        for (idx, ((f, d), c)) in items.into_iter().enumerate() {
            let (sign, prefix) = coeff_prefix(c, idx == 0);
            s.push_str(&sign);
            if f.is_empty() {
                s.push_str(&format!("{} ♯ {}", c.abs(), d.render(letter)));
            } else {
                s.push_str(&format!("{prefix}{} ♯ {}", f.render(), d.render(letter)));
            }
        }
        s
    }
}

impl fmt::Display for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Context {
    /// `X_k |> g` (or `Y_k |> g`) on a single symbol.
    fn derive_symbol(&self, side: Side, k: usize, g: GeneratorSymbol) -> Vec<(GeneratorSymbol, Scalar)> {
        let n = self.dim();
        let (i, j) = (g.row(), g.col());
        let mut out = Vec::new();
        for m in 0..n {
            let (sym, c) = match (side, g.kind) {
                (Side::L, Kind::U) => (GeneratorSymbol::u(i, m), self.lie.constant(m, k, j)),
                (Side::L, Kind::Ubar) => (GeneratorSymbol::ubar(m, j), -self.lie.constant(i, k, m)),
                (Side::R, Kind::U) => (GeneratorSymbol::u(m, j), self.lie.constant(i, k, m)),
                (Side::R, Kind::Ubar) => (GeneratorSymbol::ubar(i, m), -self.lie.constant(m, k, j)),
            };
            if !c.is_zero() {
                out.push((sym, c));
            }
        }
        out
    }

    /// Generators act on `H` by derivations.
    fn derive_monomial(&self, side: Side, k: usize, m: &DualMonomial) -> DualElement {
        let key = (side, k, m.clone());
        if let Some(v) = self.deriv.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let mut out = DualElement::zero();
        let syms = m.symbols();
        for (pos, g) in syms.iter().enumerate() {
            if pos > 0 && syms[pos - 1] == *g {
                continue;
            }
            let mult = syms.iter().filter(|s| *s == g).count();
            let mut rest = syms.to_vec();
            rest.remove(pos);
            for (s, c) in self.derive_symbol(side, k, *g) {
                let mut v = rest.clone();
                v.push(s);
                out.push(DualMonomial::from_symbols(v), c * Scalar::from_integer(mult.into()));
            }
        }
        self.deriv.write().expect("cache lock").insert(key, out.clone());
        out
    }

    fn derive(&self, side: Side, k: usize, f: &DualElement) -> DualElement {
        let mut out = DualElement::zero();
        for (m, c) in f.terms() {
            out.add_scaled(&self.derive_monomial(side, k, m), c);
        }
        out
    }

    /// `X^e |> f` for a PBW monomial.
    pub(crate) fn act_left_monomial(&self, side: Side, e: &PbwMonomial, f: &DualElement) -> DualElement {
        let mut cur = f.clone();
        for &k in e.word().iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.derive(side, k, &cur);
        }
        cur
    }

    /// `D |> f = sum f_(1) <D, f_(2)>`; for the right copy `Y |> f = sum <Y, f_(1)> f_(2)`.
    pub fn act_left(&self, d: &UeaElement, f: &DualElement) -> DualElement {
        let mut out = DualElement::zero();
        for (e, c) in d.terms() {
            out.add_scaled(&self.act_left_monomial(d.side(), e, f), c);
        }
        out
    }

    fn pair_side(&self, side: Side, a: &PbwMonomial, f: &DualElement) -> Result<Scalar, UeaError> {
        let n = self.dim();
        match side {
            Side::L => self.pairing.pair(&UeaElement::monomial(Side::L, a.clone(), Scalar::one()), f),
            Side::R => self.pairing.pair_right(&self.uea, &UeaElement::monomial(Side::R, a.clone(), Scalar::one()), f),
        }
        .inspect(|_| debug_assert_eq!(a.dim(), n))
    }

    /// `D <| f = sum <D_(1), f> D_(2)`.
    pub fn act_right(&self, d: &UeaElement, f: &DualElement) -> Result<UeaElement, UeaError> {
        let mut out = UeaElement::zero(d.side(), d.dim());
        for (e, c) in d.terms() {
            for (a, b, k) in e.splits() {
                let v = self.pair_side(d.side(), &a, f)?;
                if !v.is_zero() {
                    out.push(b, c * v * Scalar::from_integer(k.into()));
                }
            }
        }
        Ok(out)
    }

    /// `D <| (f # Z) = (D <| f) Z`.
    pub fn act_right_smash(&self, d: &UeaElement, x: &SmashElement) -> Result<UeaElement, UeaError> {
        let ring = self.uea.ring(d.side());
        let mut out = UeaElement::zero(d.side(), d.dim());
        for ((f, z), c) in x.terms() {
            let part = self.act_right(d, &DualElement::monomial(f.clone(), c.clone()))?;
            let z = UeaElement::monomial(x.side(), z.clone(), Scalar::one());
            out = out.add(&ring.mul(&part, &z)?);
        }
        Ok(out)
    }

    /// `(f # P)(g # D) = sum f (P_(1) |> g) # P_(2) D`.
    pub fn smash_mul(&self, x: &SmashElement, y: &SmashElement) -> Result<SmashElement, UeaError> {
        if x.side != y.side {
            return Err(UeaError::CopyMismatch { expected: x.side, found: y.side });
        }
        let side = x.side;
        let ring = self.uea.ring(side);
        let mut out = SmashElement::zero(side, self.dim());
        for ((f, p), cx) in &x.terms {
            let splits = p.splits();
            for ((g, d), cy) in &y.terms {
                let coeff = cx * cy;
                let gd = DualElement::monomial(g.clone(), Scalar::one());
                let dd = UeaElement::monomial(side, d.clone(), Scalar::one());
                for (a, b, k) in &splits {
                    if g.is_empty() && !a.is_one() {
                        continue;
                    }
                    let acted = self.act_left_monomial(side, a, &gd);
                    if acted.is_zero() {
                        continue;
                    }
                    let left = DualElement::monomial(f.clone(), Scalar::one()).mul(&acted);
                    let right = ring.mul(&UeaElement::monomial(side, b.clone(), Scalar::one()), &dd)?;
                    let w = &coeff * Scalar::from_integer((*k).into());
                    for (h, ch) in left.terms() {
                        for (q, cq) in right.terms() {
                            out.push(h.clone(), q.clone(), &w * ch * cq);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `lambda(X_j) = sum_i Ubar^i_j # X_i`; on the right copy `lambda(Y_j) = sum_i U^i_j # Y_i`.
    pub fn lambda_generator(&self, side: Side, j: usize) -> SmashElement {
        let n = self.dim();
        let mut out = SmashElement::zero(side, n);
        for i in 0..n {
            let g = match side {
                Side::L => GeneratorSymbol::ubar(i, j),
                Side::R => GeneratorSymbol::u(i, j),
            };
            out.push(DualMonomial::from_symbols(vec![g]), PbwMonomial::generator(n, i), Scalar::one());
        }
        out
    }

    /// `lambda` on a PBW monomial, extended antimultiplicatively right to left.
    pub fn lambda_monomial(&self, side: Side, e: &PbwMonomial) -> SmashElement {
        let key = (side, e.clone());
        if let Some(v) = self.lambda.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let n = self.dim();
        let out = match e.word().last() {
            None => SmashElement::one(side, n),
            Some(&l) => {
                let mut prev = e.exponents().to_vec();
                prev[l] -= 1;
                let rest = self.lambda_monomial(side, &PbwMonomial::from_exponents(prev));
                self.smash_mul(&self.lambda_generator(side, l), &rest).expect("same copy")
            }
        };
        self.lambda.write().expect("cache lock").insert(key, out.clone());
        out
    }

    pub fn lambda_coact(&self, d: &UeaElement) -> SmashElement {
        let mut out = SmashElement::zero(d.side(), d.dim());
        for (e, c) in d.terms() {
            out.add_scaled(&self.lambda_monomial(d.side(), e), c);
        }
        out
    }

    /// Semantic equality: componentwise on PBW monomials, each `H` coefficient
    /// compared as a functional.
    pub fn smash_equals(&self, a: &SmashElement, b: &SmashElement, mode: EqMode) -> Verdict {
        let diff = a.sub(b);
        let letter = a.side.letter();
        let fibers: Vec<(PbwMonomial, crate::dual::TensorDual)> =
            diff.fibers().into_iter().map(|(d, f)| (d, crate::dual::TensorDual::from_element(&f))).collect();
        let refs: Vec<&crate::dual::TensorDual> = fibers.iter().map(|(_, t)| t).collect();
        match self.pairing.first_nonzero(&refs, mode) {
            None => Verdict::Equal,
            Some((i, Verdict::Unequal(mut w))) => {
                w.note = format!("♯ {}", fibers[i].0.render(letter));
                Verdict::Unequal(w)
            }
            Some((_, v)) => v,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;
    use crate::scalar::int;

    fn ctx(name: &str) -> Context {
        Context::new(builtin(name).unwrap())
    }

    #[test]
    fn generator_actions() {
        let c = ctx("sl2");
        let n = 3;
        for k in 0..n {
            let x = c.uea.left.generator(k).unwrap();
            for i in 0..n {
                for j in 0..n {
                    // X_k <| U^i_j = C^i_kj + delta^i_j X_k
                    let mut expect = UeaElement::scalar(Side::L, n, c.lie.constant(i, k, j));
                    if i == j {
                        expect = expect.add(&x);
                    }
                    assert_eq!(c.act_right(&x, &DualElement::u(i, j)).unwrap(), expect);
                    // X_k |> U^i_j = sum_m U^i_m C^m_kj
                    let mut expect = DualElement::zero();
                    for m in 0..n {
                        expect.add_scaled(&DualElement::u(i, m), &c.lie.constant(m, k, j));
                    }
                    assert_eq!(c.act_left(&x, &DualElement::u(i, j)), expect);
                }
            }
            assert!(c.act_left(&x, &DualElement::one()).is_zero());
        }
    }

    #[test]
    fn smash_generator_product() {
        let c = ctx("solvable2");
        let n = 2;
        let x1 = SmashElement::from_uea(&c.uea.left.generator(0).unwrap());
        let u = SmashElement::from_dual(Side::L, n, &DualElement::u(1, 1));
        // (1 # X_1)(U^2_2 # 1) = sum_m U^2_m C^m_12 # 1 + U^2_2 # X_1
        assert_eq!(c.smash_mul(&x1, &u).unwrap().to_string(), "U[2,2] ♯ X1 + U[2,2] ♯ 1");
        assert_eq!(c.smash_mul(&u, &x1).unwrap().to_string(), "U[2,2] ♯ X1");
    }

    #[test]
    fn lambda_values() {
        let c = ctx("abelian2");
        let x1 = c.uea.left.generator(0).unwrap();
        assert_eq!(c.lambda_coact(&x1).to_string(), "Ubar[1,1] ♯ X1 + Ubar[2,1] ♯ X2");
        let s = ctx("sl2");
        let d = s.lambda_coact(&s.uea.left.generator(1).unwrap());
        assert_eq!(d.len(), 3);
        assert_eq!(s.lambda_coact(&s.uea.left.one()), SmashElement::one(Side::L, 3));
    }

    #[test]
    fn lambda_act_gives_product() {
        let c = ctx("sl2");
        for j in 0..3 {
            for k in 0..3 {
                let xk = c.uea.left.generator(k).unwrap();
                let xj = c.uea.left.generator(j).unwrap();
                let lhs = c.act_right_smash(&xk, &c.lambda_coact(&xj)).unwrap();
                assert_eq!(lhs, c.uea.left.mul(&xj, &xk).unwrap());
            }
        }
    }

    #[test]
    fn mixed_copies_rejected() {
        let c = ctx("solvable2");
        let a = SmashElement::one(Side::L, 2);
        let b = SmashElement::one(Side::R, 2);
        assert!(c.smash_mul(&a, &b).is_err());
    }

    #[test]
    fn semantic_equality_on_fibers() {
        let c = ctx("abelian2");
        let a = SmashElement::from_dual(Side::L, 2, &DualElement::u(0, 1));
        assert!(c.smash_equals(&a, &SmashElement::zero(Side::L, 2), EqMode::exact()).is_equal());
        let b = SmashElement::scalar(Side::L, 2, int(2));
        assert!(!c.smash_equals(&b, &SmashElement::zero(Side::L, 2), EqMode::exact()).is_equal());
    }
}
