//! Hopf algebroid structure on `B = H # U(g_L)` over the base `U(g_L)`.
//!
//! Conventions: source `s = alpha_L`, target `t = beta_L`, and `B (x)_A B` is balanced by
//! `t(a) x (x) y = x (x) s(a) y`. Balanced tensors are kept with the left leg in `H # 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::context::Context;
use crate::dual::{monomial_coproduct, DualElement, DualMonomial, TensorDual};
use crate::pairing::{EqMode, Verdict};
use crate::report::{Bounds, CheckRecord, Outcome, Recorder};
use crate::scalar::Scalar;
use crate::smash::SmashElement;
use crate::theorem61;
use crate::uea::{add_term, render_terms, PbwMonomial, Side, UeaElement, UeaError};
use crate::yd::{dual, label, mono};

pub const SUITE: &str = "algebroid";

/// Element of `B (x)_A B` in normal form `sum (h # 1) (x) (g # D)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BalancedTensor {
    terms: BTreeMap<(DualMonomial, DualMonomial, PbwMonomial), Scalar>,
}

impl BalancedTensor {
    pub fn zero() -> Self {
        BalancedTensor::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(DualMonomial, DualMonomial, PbwMonomial), &Scalar)> {
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

    pub(crate) fn push(&mut self, h: DualMonomial, g: DualMonomial, d: PbwMonomial, c: Scalar) {
        add_term(&mut self.terms, (h, g, d), c);
    }

    /// `(h # 1) (x) y`.
    pub fn pure(h: &DualElement, y: &SmashElement) -> Self {
        let mut out = BalancedTensor::zero();
        for (m, c) in h.terms() {
            for ((g, d), x) in y.terms() {
                out.push(m.clone(), g.clone(), d.clone(), c * x);
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &BalancedTensor, c: &Scalar) {
        for (k, x) in &other.terms {
            add_term(&mut self.terms, k.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &BalancedTensor) -> BalancedTensor {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    /// Two-leg `H` functionals, one per PBW monomial of the right leg.
    pub fn fibers(&self) -> BTreeMap<PbwMonomial, TensorDual> {
        let mut out: BTreeMap<PbwMonomial, TensorDual> = BTreeMap::new();
        for ((h, g, d), c) in &self.terms {
            out.entry(d.clone()).or_default().push(vec![h.clone(), g.clone()], c.clone());
        }
        out
    }

    /// `x (x) y -> eps(x) y` on the left leg.
    pub fn left_counit(&self, n: usize) -> SmashElement {
        let mut out = SmashElement::zero(Side::L, n);
        for ((h, g, d), c) in &self.terms {
            if h.counit() {
                out.push(g.clone(), d.clone(), c.clone());
            }
        }
        out
    }

    pub fn render(&self) -> String {
        render_terms(
            self.terms.iter(),
            |(h, g, d)| format!("{} ♯ 1 ⊗ {} ♯ {}", h.render(), g.render(), d.render('X')),
            |_| false,
            |(h, g, d)| (d.graded_key(), h.graded_key(), g.graded_key()),
        )
    }
}

impl fmt::Display for BalancedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `(f, M)` for the basis element `f # M`.
pub type SmashKey = (DualMonomial, PbwMonomial);

/// Element of `B (x) B` before balancing.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SmashTensor {
    terms: BTreeMap<(SmashKey, SmashKey), Scalar>,
}

impl SmashTensor {
    pub fn pure(x: &SmashElement, y: &SmashElement) -> Self {
        let mut out = SmashTensor::default();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                add_term(&mut out.terms, (a.clone(), b.clone()), c * d);
            }
        }
        out
    }

    pub fn add(&self, other: &SmashTensor) -> SmashTensor {
        let mut out = self.clone();
        for (k, x) in &other.terms {
            add_term(&mut out.terms, k.clone(), x.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(SmashKey, SmashKey), &Scalar)> {
        self.terms.iter()
    }
}

impl Context {
    /// `alpha_L(D) = 1 # D`.
    pub fn alpha_l(&self, d: &UeaElement) -> SmashElement {
        SmashElement::from_uea(d)
    }

    fn beta_monomial(&self, e: &PbwMonomial) -> SmashElement {
        if let Some(v) = self.beta.read().expect("cache lock").get(e) {
            return v.clone();
        }
        let n = self.dim();
        let out = match e.word().last() {
            None => SmashElement::one(Side::L, n),
            Some(&l) => {
                let mut prev = e.exponents().to_vec();
                prev[l] -= 1;
                let rest = self.beta_monomial(&PbwMonomial::from_exponents(prev));
                self.smash_mul(&self.beta_generator(l), &rest).expect("left copy")
            }
        };
        self.beta.write().expect("cache lock").insert(e.clone(), out.clone());
        out
    }

    /// `beta_L(X_j) = lambda(X_j) - c_j`.
    pub fn beta_generator(&self, j: usize) -> SmashElement {
        let n = self.dim();
        self.lambda_generator(Side::L, j).sub(&SmashElement::scalar(Side::L, n, self.modular[j].clone()))
    }

    /// Antimultiplicative extension of `beta_L`.
    pub fn beta_l(&self, d: &UeaElement) -> SmashElement {
        let mut out = SmashElement::zero(Side::L, self.dim());
        for (e, c) in d.terms() {
            out.add_scaled(&self.beta_monomial(e), c);
        }
        out
    }

    /// `alpha_R(Y) = lambda(phi^{-1}(Y))`.
    pub fn alpha_r(&self, y: &UeaElement) -> Result<SmashElement, UeaError> {
        Ok(self.lambda_coact(&self.uea.phi_inv(y)?))
    }

    /// `beta_R(Y) = 1 # phi^{-1}(Y)`.
    pub fn beta_r(&self, y: &UeaElement) -> Result<SmashElement, UeaError> {
        Ok(SmashElement::from_uea(&self.uea.phi_inv(y)?))
    }

    /// `(alpha_L(X_j), beta_L(X_j), alpha_R(Y_j), beta_R(Y_j))` for 0-based `j`.
    pub fn source_target(&self, j: usize) -> Result<[SmashElement; 4], UeaError> {
        let x = self.uea.left.generator(j)?;
        let y = self.uea.right.generator(j)?;
        Ok([self.alpha_l(&x), self.beta_l(&x), self.alpha_r(&y)?, self.beta_r(&y)?])
    }

    /// `Gamma_j(h) = [lambda(X_j), h # 1] = sum_i Ubar^i_j (X_i |> h)`.
    fn gamma(&self, j: usize, h: &DualElement) -> DualElement {
        let n = self.dim();
        let mut out = DualElement::zero();
        for i in 0..n {
            let acted = self.act_left(&UeaElement::generator(Side::L, n, i), h);
            if !acted.is_zero() {
                out = out.add(&DualElement::ubar(i, j).mul(&acted));
            }
        }
        out
    }

    /// Writes `g # M` as `sum_a beta_L(a) (h_a # 1)`, keyed by PBW monomials `a`.
    fn decompose(&self, g: &DualMonomial, m: &PbwMonomial) -> Vec<(PbwMonomial, DualElement)> {
        let key = (g.clone(), m.clone());
        if let Some(v) = self.decomp.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let n = self.dim();
        let out = match m.word().last() {
            None => vec![(m.clone(), dual(g))],
            Some(&k) => {
                let mut prev = m.exponents().to_vec();
                prev[k] -= 1;
                // 1 # X_k = sum_j beta_L(X_j)(U^j_k # 1) + K_k
                let mut kk = DualElement::scalar(-self.modular[k].clone());
                for j in 0..n {
                    kk.add_scaled(&DualElement::u(j, k), &self.modular[j]);
                }
                let mut acc: BTreeMap<PbwMonomial, DualElement> = BTreeMap::new();
                for (a, h) in self.decompose(g, &PbwMonomial::from_exponents(prev)) {
                    let mut stay = h.mul(&kk);
                    for j in 0..n {
                        let uj = DualElement::u(j, k);
                        let moved =
                            self.uea.left.mul(&UeaElement::generator(Side::L, n, j), &mono(&a)).expect("left copy");
                        let hu = h.mul(&uj);
                        for (a2, c) in moved.terms() {
                            acc.entry(a2.clone()).or_default().add_scaled(&hu, c);
                        }
                        stay = stay.sub(&self.gamma(j, &h).mul(&uj));
                    }
                    acc.entry(a).or_default().add_scaled(&stay, &Scalar::one());
                }
                acc.into_iter().filter(|(_, h)| !h.is_zero()).collect()
            }
        };
        self.decomp.write().expect("cache lock").insert(key, out.clone());
        out
    }

    /// Moves the `U(g)` part of each left leg across the tensor sign.
    pub fn reduce_balanced(&self, t: &SmashTensor) -> BalancedTensor {
        let mut out = BalancedTensor::zero();
        for (((g, m), (g2, m2)), c) in t.terms() {
            let right = SmashElement::term(Side::L, g2.clone(), m2.clone(), Scalar::one());
            for (a, h) in self.decompose(g, m) {
                let y = if a.is_one() {
                    right.clone()
                } else {
                    self.smash_mul(&SmashElement::from_uea(&mono(&a)), &right).expect("left copy")
                };
                out.add_scaled(&BalancedTensor::pure(&h, &y), c);
            }
        }
        out
    }

    /// Unreduced `Delta_L(f # M) = sum (f_(2) # M) (x) (f_(1) # 1)`.
    pub fn delta_l_raw(&self, x: &SmashElement) -> SmashTensor {
        let n = self.dim();
        let mut out = SmashTensor::default();
        for ((f, m), c) in x.terms() {
            for (a, b) in monomial_coproduct(f, n) {
                add_term(&mut out.terms, ((b, m.clone()), (a, PbwMonomial::one(n))), c.clone());
            }
        }
        out
    }

    pub fn delta_l(&self, x: &SmashElement) -> BalancedTensor {
        self.reduce_balanced(&self.delta_l_raw(x))
    }

    /// `Delta_R(f # M) = sum (f_(2) # 1) (x) (f_(1) # M)`, already with left legs in `H # 1`.
    pub fn delta_r(&self, x: &SmashElement) -> BalancedTensor {
        let n = self.dim();
        let mut out = BalancedTensor::zero();
        for ((f, m), c) in x.terms() {
            for (a, b) in monomial_coproduct(f, n) {
                out.push(b, a, m.clone(), c.clone());
            }
        }
        out
    }

    /// `eps_L(f # D) = phi^{-1}(phi(D) <| S(f))`.
    pub fn epsilon_l(&self, x: &SmashElement) -> UeaElement {
        let n = self.dim();
        let mut out = UeaElement::zero(Side::L, n);
        for ((f, m), c) in x.terms() {
            let y = self.uea.phi(&mono(m)).expect("left copy");
            let acted = self.act_right(&y, &dual(f).antipode()).expect("right copy");
            out.add_scaled(&self.uea.phi_inv(&acted).expect("right copy"), c);
        }
        out
    }

    /// `eps_R(f # D) = eps(f) phi(D)`.
    pub fn epsilon_r(&self, x: &SmashElement) -> UeaElement {
        self.uea.phi(&x.counit_dual()).expect("left copy")
    }

    /// `tau(f # M) = lambda(M) (S(f) # 1)`.
    pub fn tau(&self, x: &SmashElement) -> SmashElement {
        self.antipode_with(x, |m| self.lambda_monomial(Side::L, m))
    }

    /// `tau^{-1}(f # M) = beta_L(M) (S(f) # 1)`.
    pub fn tau_inv(&self, x: &SmashElement) -> SmashElement {
        self.antipode_with(x, |m| self.beta_monomial(m))
    }

    fn antipode_with(&self, x: &SmashElement, head: impl Fn(&PbwMonomial) -> SmashElement) -> SmashElement {
        let n = self.dim();
        let mut out = SmashElement::zero(Side::L, n);
        for ((f, m), c) in x.terms() {
            let s = SmashElement::from_dual(Side::L, n, &dual(f).antipode());
            out.add_scaled(&self.smash_mul(&head(m), &s).expect("left copy"), c);
        }
        out
    }

    /// Componentwise product, valid on normal forms since `(h # 1)(h' # 1) = hh' # 1`.
    pub fn balanced_mul(&self, a: &BalancedTensor, b: &BalancedTensor) -> BalancedTensor {
        let mut out = BalancedTensor::zero();
        for ((h, g, d), c) in a.terms() {
            let y = SmashElement::term(Side::L, g.clone(), d.clone(), Scalar::one());
            for ((h2, g2, d2), c2) in b.terms() {
                let y2 = SmashElement::term(Side::L, g2.clone(), d2.clone(), Scalar::one());
                let prod = self.smash_mul(&y, &y2).expect("left copy");
                let hh = DualElement::monomial(h.mul(h2), c * c2);
                out.add_scaled(&BalancedTensor::pure(&hh, &prod), &Scalar::one());
            }
        }
        out
    }

    /// `sum (h # 1) (x) y -> sum t(eps_L(y)) (h # 1)`.
    pub fn right_counit(&self, t: &BalancedTensor) -> SmashElement {
        let n = self.dim();
        let mut out = SmashElement::zero(Side::L, n);
        for ((h, g, d), c) in t.terms() {
            let e = self.epsilon_l(&SmashElement::term(Side::L, g.clone(), d.clone(), Scalar::one()));
            if e.is_zero() {
                continue;
            }
            let h = SmashElement::from_dual(Side::L, n, &dual(h));
            out.add_scaled(&self.smash_mul(&self.beta_l(&e), &h).expect("left copy"), c);
        }
        out
    }

    /// `sum (h # 1) (x) y -> sum (h # 1) beta_R(eps_R(y))`.
    pub fn right_counit_r(&self, t: &BalancedTensor) -> SmashElement {
        let n = self.dim();
        let mut out = SmashElement::zero(Side::L, n);
        for ((h, g, d), c) in t.terms() {
            let e = self.epsilon_r(&SmashElement::term(Side::L, g.clone(), d.clone(), Scalar::one()));
            if e.is_zero() {
                continue;
            }
            let h = SmashElement::from_dual(Side::L, n, &dual(h));
            out.add_scaled(&self.smash_mul(&h, &self.beta_r(&e).expect("right copy")).expect("left copy"), c);
        }
        out
    }

    pub fn balanced_equals(&self, a: &BalancedTensor, b: &BalancedTensor, mode: EqMode) -> Verdict {
        let fibers: Vec<(PbwMonomial, TensorDual)> = a.sub(b).fibers().into_iter().collect();
        let refs: Vec<&TensorDual> = fibers.iter().map(|(_, t)| t).collect();
        match self.pairing.first_nonzero(&refs, mode) {
            None => Verdict::Equal,
            Some((i, Verdict::Unequal(mut w))) => {
                w.note = format!("⊗ ♯ {}", fibers[i].0.render('X'));
                Verdict::Unequal(w)
            }
            Some((_, v)) => v,
        }
    }
}

fn smash_outcome(ctx: &Context, lhs: &SmashElement, rhs: &SmashElement, mode: EqMode) -> Outcome {
    if lhs == rhs {
        return Outcome::Pass;
    }
    let v = ctx.smash_equals(lhs, rhs, mode);
    Outcome::from_verdict(v, Side::L, || lhs.to_string(), || rhs.to_string())
}

fn balanced_outcome(ctx: &Context, lhs: &BalancedTensor, rhs: &BalancedTensor, mode: EqMode) -> Outcome {
    if lhs == rhs {
        return Outcome::Pass;
    }
    let v = ctx.balanced_equals(lhs, rhs, mode);
    Outcome::from_verdict(v, Side::L, || lhs.to_string(), || rhs.to_string())
}

/// Generators of `B`: `1 # X_k`, `U^i_j # 1`, `Ubar^i_j # 1`.
pub fn generator_grid(n: usize) -> Vec<(String, SmashElement)> {
    let mut out = Vec::new();
    for k in 0..n {
        let x = UeaElement::generator(Side::L, n, k);
        out.push((format!("1♯X{}", k + 1), SmashElement::from_uea(&x)));
    }
    for m in DualMonomial::all_up_to(n, 1).into_iter().skip(1) {
        out.push((format!("{}♯1", m.render()), SmashElement::from_dual(Side::L, n, &dual(&m))));
    }
    out
}

/// Basis elements `f # M` with `len(f) + deg(M) = 2` inside the bounds.
pub fn degree_two_grid(n: usize, b: &Bounds) -> Vec<(String, SmashElement)> {
    let mut out = Vec::new();
    for m in DualMonomial::all_up_to(n, b.rmax.min(2) as usize) {
        for d in PbwMonomial::all_up_to(n, b.dmax.min(2)) {
            if m.len() + d.degree() as usize == 2 {
                out.push((
                    format!("{}♯{}", m.render(), label(&d)),
                    SmashElement::term(Side::L, m.clone(), d, Scalar::one()),
                ));
            }
        }
    }
    out
}

pub fn algebroid_suite(ctx: &Context, b: &Bounds) -> Vec<CheckRecord> {
    let mut rec = Recorder::new(SUITE, b.timing);
    let pre = theorem61::theorem61(ctx, b);
    if !theorem61::all_pass(&pre) {
        let first = pre.iter().find(|r| r.status != crate::report::Status::Pass).expect("a failure");
        rec.push(
            "prerequisite",
            format!("theorem61 {} ({}) did not pass; suite not run", first.code, first.instance),
            Outcome::fail("theorem61 hypotheses", "all pass"),
            0.0,
        );
        return rec.finish();
    }
    let n = ctx.dim();
    let mode = b.mode;
    let pbw = PbwMonomial::all_up_to(n, b.dmax);
    let duals = DualMonomial::all_up_to(n, b.rmax as usize);
    let gens = generator_grid(n);
    let mut wide = gens.clone();
    wide.extend(degree_two_grid(n, b));
    let left = &ctx.uea.left;

    // (a) alpha_L multiplicative, embedded bracket
    for d in &pbw {
        for p in pbw.iter().filter(|p| p.degree() + d.degree() <= b.dmax) {
            rec.check("a", format!("D={}, P={}", label(d), label(p)), || {
                let lhs = ctx.smash_mul(&ctx.alpha_l(&mono(d)), &ctx.alpha_l(&mono(p))).expect("left copy");
                let rhs = ctx.alpha_l(&left.mul(&mono(d), &mono(p)).expect("left copy"));
                Outcome::compare(&lhs, &rhs)
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            rec.check("a", format!("bracket i={}, j={}", i + 1, j + 1), || {
                let (xi, xj) = (
                    ctx.alpha_l(&mono(&PbwMonomial::generator(n, i))),
                    ctx.alpha_l(&mono(&PbwMonomial::generator(n, j))),
                );
                let lhs = ctx.smash_mul(&xi, &xj).unwrap().sub(&ctx.smash_mul(&xj, &xi).unwrap());
                let mut rhs = SmashElement::zero(Side::L, n);
                for (k, c) in ctx.lie.bracket(i, j) {
                    rhs.add_scaled(&ctx.alpha_l(&mono(&PbwMonomial::generator(n, *k))), c);
                }
                Outcome::compare(&lhs, &rhs)
            });
        }
    }

    // (b) beta_L antimultiplicative, flipped bracket on beta_L and lambda images
    for d in &pbw {
        for p in pbw.iter().filter(|p| p.degree() + d.degree() <= b.dmax) {
            rec.check("b", format!("D={}, P={}", label(d), label(p)), || {
                let lhs = ctx.beta_l(&left.mul(&mono(d), &mono(p)).expect("left copy"));
                let rhs = ctx.smash_mul(&ctx.beta_l(&mono(p)), &ctx.beta_l(&mono(d))).expect("left copy");
                smash_outcome(ctx, &lhs, &rhs, mode)
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            for (name, f) in [("beta_L", 0), ("lambda", 1)] {
                rec.check("b", format!("{name} bracket i={}, j={}", i + 1, j + 1), || {
                    let img = |k: usize| {
                        if f == 0 {
                            ctx.beta_generator(k)
                        } else {
                            ctx.lambda_generator(Side::L, k)
                        }
                    };
                    let (bi, bj) = (img(i), img(j));
                    let lhs = ctx.smash_mul(&bi, &bj).unwrap().sub(&ctx.smash_mul(&bj, &bi).unwrap());
                    let mut rhs = SmashElement::zero(Side::L, n);
                    for (k, c) in ctx.lie.bracket(i, j) {
                        rhs.add_scaled(&img(*k), &-c.clone());
                    }
                    smash_outcome(ctx, &lhs, &rhs, mode)
                });
            }
        }
    }

    // (c) source and target images commute
    for d in &pbw {
        for p in &pbw {
            rec.check("c", format!("D={}, P={}", label(d), label(p)), || {
                let s = ctx.alpha_l(&mono(d));
                let t = ctx.beta_l(&mono(p));
                let lhs = ctx.smash_mul(&s, &t).expect("left copy");
                let rhs = ctx.smash_mul(&t, &s).expect("left copy");
                smash_outcome(ctx, &lhs, &rhs, mode)
            });
        }
    }

    // (d) counit laws and coassociativity of Delta_L on H # 1 and 1 # U(g)
    let mut spanning: Vec<(String, SmashElement)> =
        duals.iter().map(|f| (format!("{}♯1", f.render()), SmashElement::from_dual(Side::L, n, &dual(f)))).collect();
    spanning.extend(pbw.iter().skip(1).map(|d| (format!("1♯{}", label(d)), ctx.alpha_l(&mono(d)))));
    for (name, x) in &spanning {
        rec.check("d", format!("x={name}"), || {
            let dl = ctx.delta_l(x);
            let left_law = Outcome::compare(&dl.left_counit(n), x);
            let right_law = smash_outcome(ctx, &ctx.right_counit(&dl), x, mode);
            let coassoc = coassociativity(ctx, &dl, mode);
            let dr = ctx.delta_r(x);
            let r_left = Outcome::compare(&dr.left_counit(n), x);
            let r_right = smash_outcome(ctx, &ctx.right_counit_r(&dr), x, mode);
            Outcome::all([left_law, right_law, coassoc, r_left, r_right])
        });
    }

    // (e) Delta_L multiplicative into the balanced tensor
    for (nx, x) in &wide {
        for (ny, y) in &gens {
            rec.check("e", format!("x={nx}, y={ny}"), || {
                let xy = ctx.smash_mul(x, y).expect("left copy");
                let lhs = ctx.balanced_mul(&ctx.delta_l(x), &ctx.delta_l(y));
                let rhs = ctx.delta_l(&xy);
                balanced_outcome(ctx, &lhs, &rhs, mode)
            });
        }
    }

    // (f) antipode laws
    for (nx, x) in &wide {
        for (ny, y) in &gens {
            rec.check("f", format!("antimultiplicative x={nx}, y={ny}"), || {
                let lhs = ctx.tau(&ctx.smash_mul(x, y).expect("left copy"));
                let rhs = ctx.smash_mul(&ctx.tau(y), &ctx.tau(x)).expect("left copy");
                smash_outcome(ctx, &lhs, &rhs, mode)
            });
        }
        rec.check("f", format!("inverse x={nx}"), || {
            let a = smash_outcome(ctx, &ctx.tau_inv(&ctx.tau(x)), x, mode);
            let b2 = smash_outcome(ctx, &ctx.tau(&ctx.tau_inv(x)), x, mode);
            Outcome::all([a, b2])
        });
    }
    for j in 0..n {
        rec.check("f", format!("tau(beta_L(X{})) = alpha_L(X{})", j + 1, j + 1), || {
            let x = mono(&PbwMonomial::generator(n, j));
            smash_outcome(ctx, &ctx.tau(&ctx.beta_l(&x)), &ctx.alpha_l(&x), mode)
        });
    }
    for f in &duals {
        rec.check("f", format!("tau({}♯1)", f.render()), || {
            let lhs = ctx.tau(&SmashElement::from_dual(Side::L, n, &dual(f)));
            Outcome::compare(&lhs, &SmashElement::from_dual(Side::L, n, &dual(f).antipode()))
        });
    }

    // (g) counit against source and target
    for (nx, x) in &gens {
        for (ny, y) in &gens {
            rec.check("g", format!("x={nx}, y={ny}"), || {
                let ey = ctx.epsilon_l(y);
                let mid = ctx.epsilon_l(&ctx.smash_mul(x, y).expect("left copy"));
                let via_s = ctx.epsilon_l(&ctx.smash_mul(x, &ctx.alpha_l(&ey)).expect("left copy"));
                let via_t = ctx.epsilon_l(&ctx.smash_mul(x, &ctx.beta_l(&ey)).expect("left copy"));
                Outcome::all([Outcome::compare(&via_s, &mid), Outcome::compare(&via_t, &mid)])
            });
        }
    }

    // (h) the presentation over H # U(g_R), translated through Y_j -> lambda(X_j)
    for j in 0..n {
        let xj = mono(&PbwMonomial::generator(n, j));
        let yj = UeaElement::generator(Side::R, n, j);
        let cj = ctx.modular[j].clone();
        let ar = ctx.alpha_r(&yj).expect("right copy");
        rec.check("h", format!("X{} = sum_i U[i,{}]♯Y_i", j + 1, j + 1), || {
            let mut rhs = SmashElement::zero(Side::L, n);
            for i in 0..n {
                let u = SmashElement::from_dual(Side::L, n, &DualElement::u(i, j));
                let yi = ctx.alpha_r(&UeaElement::generator(Side::R, n, i)).expect("right copy");
                rhs = rhs.add(&ctx.smash_mul(&u, &yi).expect("left copy"));
            }
            smash_outcome(ctx, &ctx.alpha_l(&xj), &rhs, mode)
        });
        rec.check("h", format!("beta_L(X{}) = Y{} - c", j + 1, j + 1), || {
            let rhs = ar.sub(&SmashElement::scalar(Side::L, n, cj.clone()));
            Outcome::compare(&ctx.beta_l(&xj), &rhs)
        });
        rec.check("h", format!("beta_R(Y{}) = X{}, eps_R(X{}) = Y{}", j + 1, j + 1, j + 1, j + 1), || {
            let a = Outcome::compare(&ctx.beta_r(&yj).expect("right copy"), &ctx.alpha_l(&xj));
            let b2 = Outcome::compare(&ctx.epsilon_r(&ctx.alpha_l(&xj)), &yj);
            Outcome::all([a, b2])
        });
        for f in &duals {
            rec.check("h", format!("f={}, j={}", f.render(), j + 1), || {
                let fs = SmashElement::from_dual(Side::L, n, &dual(f));
                let fy = ctx.smash_mul(&fs, &ar).expect("left copy");
                let fx = SmashElement::term(Side::L, f.clone(), PbwMonomial::generator(n, j), Scalar::one());
                let eps_f = dual(f).counit();
                // eps_L(f Y_j) = f |> X_j + eps(f) c_j
                let mut e_rhs = ctx.epsilon_l(&fx);
                e_rhs.add_scaled(&UeaElement::one(Side::L, n), &(&eps_f * &cj));
                let e_l = Outcome::compare(&ctx.epsilon_l(&fy), &e_rhs);
                // f |> X_j = X_j <| S(f)
                let dual_route =
                    Outcome::compare(&ctx.epsilon_l(&fx), &ctx.act_right(&xj, &dual(f).antipode()).expect("left copy"));
                // eps_R(f Y_j) = eps(f) Y_j
                let e_r = Outcome::compare(&ctx.epsilon_r(&fy), &yj.scale(&eps_f));
                // tau(f Y_j) = (X_j + c_j) S(f)
                let xc = ctx.alpha_l(&xj).add(&SmashElement::scalar(Side::L, n, cj.clone()));
                let t_rhs =
                    ctx.smash_mul(&xc, &SmashElement::from_dual(Side::L, n, &dual(f).antipode())).expect("left copy");
                let t = smash_outcome(ctx, &ctx.tau(&fy), &t_rhs, mode);
                Outcome::all([e_l, dual_route, e_r, t])
            });
        }
    }
    rec.finish()
}

/// `(Delta_L (x) id) Delta_L(x) = (id (x) Delta_L) Delta_L(x)` with all but the last leg in `H # 1`.
fn coassociativity(ctx: &Context, dl: &BalancedTensor, mode: EqMode) -> Outcome {
    let n = ctx.dim();
    let mut lhs: BTreeMap<PbwMonomial, TensorDual> = BTreeMap::new();
    let mut rhs: BTreeMap<PbwMonomial, TensorDual> = BTreeMap::new();
    for ((h, g, d), c) in dl.terms() {
        for (a, b) in monomial_coproduct(h, n) {
            lhs.entry(d.clone()).or_default().push(vec![b, a, g.clone()], c.clone());
        }
        let inner = ctx.delta_l(&SmashElement::term(Side::L, g.clone(), d.clone(), Scalar::one()));
        for ((h2, g2, d2), c2) in inner.terms() {
            rhs.entry(d2.clone()).or_default().push(vec![h.clone(), h2.clone(), g2.clone()], c * c2);
        }
    }
    let mut keys: Vec<PbwMonomial> = lhs.keys().chain(rhs.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    let diffs: Vec<TensorDual> = keys
        .iter()
        .map(|d| lhs.get(d).cloned().unwrap_or_default().sub(&rhs.get(d).cloned().unwrap_or_default()))
        .collect();
    let refs: Vec<&TensorDual> = diffs.iter().collect();
    match ctx.pairing.first_nonzero(&refs, mode) {
        None => {}
        Some((i, Verdict::Unequal(mut w))) => {
            w.note = format!("⊗ ⊗ ♯ {}", label(&keys[i]));
            let (l, r) =
                (lhs.get(&keys[i]).cloned().unwrap_or_default(), rhs.get(&keys[i]).cloned().unwrap_or_default());
            return Outcome::from_verdict(Verdict::Unequal(w), Side::L, || l.to_string(), || r.to_string());
        }
        Some((_, inc)) => return Outcome::from_verdict(inc, Side::L, String::new, String::new),
    }
    Outcome::Pass
}
