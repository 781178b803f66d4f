//! Yetter-Drinfeld module-algebra checks for `U(g)` over `H`, in smash-product form.
//!
//! Codes: (a) Hopf action, (b) YD condition, (c) antimultiplicativity of `lambda`,
//! (d) coassociativity and counit of `lambda`, (e) braided commutativity,
//! (f) `lambda`-images commute with `1 # U(g)`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::context::Context;
use crate::dual::{monomial_coproduct, DualElement, DualMonomial, TensorDual};
use crate::pairing::Verdict;
use crate::report::{Bounds, CheckRecord, Outcome, Recorder};
use crate::scalar::Scalar;
use crate::smash::SmashElement;
use crate::uea::{PbwMonomial, Side, UeaElement};

pub const SUITE: &str = "yd";

pub(crate) fn mono(e: &PbwMonomial) -> UeaElement {
    UeaElement::monomial(Side::L, e.clone(), Scalar::one())
}

pub(crate) fn dual(m: &DualMonomial) -> DualElement {
    DualElement::monomial(m.clone(), Scalar::one())
}

pub(crate) fn label(e: &PbwMonomial) -> String {
    e.render('X')
}

pub fn yd_suite(ctx: &Context, b: &Bounds) -> Vec<CheckRecord> {
    let n = ctx.dim();
    let pbw = PbwMonomial::all_up_to(n, b.dmax);
    let duals = DualMonomial::all_up_to(n, b.rmax as usize);
    let mut rec = Recorder::new(SUITE, b.timing);

    for d in &pbw {
        for f in &duals {
            let inst = format!("D={}, f={}", label(d), f.render());
            rec.check("a", inst.clone(), || hopf_action(ctx, d, f));
            rec.check("b", inst, || yd_condition(ctx, d, f, b));
        }
    }
    for d in &pbw {
        for p in pbw.iter().filter(|p| p.degree() + d.degree() <= b.dmax) {
            rec.check("c", format!("D={}, P={}", label(d), label(p)), || antimultiplicative(ctx, d, p, b));
        }
        rec.check("d", format!("D={}", label(d)), || coassociative(ctx, d, b));
        for p in &pbw {
            let inst = format!("D={}, P={}", label(d), label(p));
            rec.check("e", inst.clone(), || braided_commutative(ctx, d, p));
            rec.check("f", inst, || image_commutes(ctx, d, p, b));
        }
    }
    rec.finish()
}

/// `1 <| f = eps(f)`, `D <| 1 = D`, `D <| (f' s) = (D <| f') <| s`,
/// `(D' X_k) <| f = sum (D' <| f_(1)) (X_k <| f_(2))`.
pub fn hopf_action(ctx: &Context, d: &PbwMonomial, f: &DualMonomial) -> Outcome {
    let n = ctx.dim();
    let ring = &ctx.uea.left;
    let dd = mono(d);
    let ff = dual(f);
    let acted = match ctx.act_right(&dd, &ff) {
        Ok(v) => v,
        Err(e) => return Outcome::fail(e, "action"),
    };
    let mut parts = Vec::new();
    if d.is_one() {
        parts.push(Outcome::compare(&acted, &UeaElement::scalar(Side::L, n, ff.counit())));
    }
    if f.is_empty() {
        parts.push(Outcome::compare(&acted, &dd));
    }
    if let Some((rest, last)) = f.split_last() {
        if !rest.is_empty() {
            let step = ctx.act_right(&dd, &dual(&rest)).and_then(|x| ctx.act_right(&x, &DualElement::symbol(last)));
            parts.push(match step {
                Ok(v) => Outcome::compare(&acted, &v),
                Err(e) => Outcome::fail(e, "action"),
            });
        }
    }
    if let Some(&k) = d.word().last() {
        let mut prev = d.exponents().to_vec();
        prev[k] -= 1;
        let dp = mono(&PbwMonomial::from_exponents(prev));
        let xk = UeaElement::generator(Side::L, n, k);
        let mut sum = ring.zero();
        for (a, c) in monomial_coproduct(f, n) {
            let l = ctx.act_right(&dp, &dual(&a)).expect("left copy");
            let r = ctx.act_right(&xk, &dual(&c)).expect("left copy");
            sum = sum.add(&ring.mul(&l, &r).expect("left copy"));
        }
        parts.push(Outcome::compare(&acted, &sum));
    }
    Outcome::all(parts)
}

/// `lambda(D) (f # 1) = sum (f_(2) # 1) lambda(D <| f_(1))`.
pub fn yd_condition(ctx: &Context, d: &PbwMonomial, f: &DualMonomial, b: &Bounds) -> Outcome {
    let n = ctx.dim();
    let lam = ctx.lambda_monomial(Side::L, d);
    let lhs = ctx.smash_mul(&lam, &SmashElement::from_dual(Side::L, n, &dual(f))).expect("left copy");
    let mut rhs = SmashElement::zero(Side::L, n);
    for (a, c) in monomial_coproduct(f, n) {
        let acted = ctx.act_right(&mono(d), &dual(&a)).expect("left copy");
        if acted.is_zero() {
            continue;
        }
        let lam = ctx.lambda_coact(&acted);
        let term = ctx.smash_mul(&SmashElement::from_dual(Side::L, n, &dual(&c)), &lam).expect("left copy");
        rhs = rhs.add(&term);
    }
    let v = ctx.smash_equals(&lhs, &rhs, b.mode);
    Outcome::from_verdict(v, Side::L, || lhs.to_string(), || rhs.to_string())
}

/// `lambda(DP) = lambda(P) lambda(D)`, and `lambda(1) = 1 # 1`.
pub fn antimultiplicative(ctx: &Context, d: &PbwMonomial, p: &PbwMonomial, b: &Bounds) -> Outcome {
    let n = ctx.dim();
    let dp = ctx.uea.left.mul(&mono(d), &mono(p)).expect("left copy");
    let lhs = ctx.lambda_coact(&dp);
    let rhs = ctx.smash_mul(&ctx.lambda_monomial(Side::L, p), &ctx.lambda_monomial(Side::L, d)).expect("left copy");
    let mut parts = Vec::new();
    if d.is_one() && p.is_one() {
        parts.push(Outcome::compare(&lhs, &SmashElement::one(Side::L, n)));
    }
    let v = ctx.smash_equals(&lhs, &rhs, b.mode);
    parts.push(Outcome::from_verdict(v, Side::L, || lhs.to_string(), || rhs.to_string()));
    Outcome::all(parts)
}

/// `(id (x) lambda) lambda = (Delta (x) id) lambda` and `(eps (x) id) lambda = id`.
pub fn coassociative(ctx: &Context, d: &PbwMonomial, b: &Bounds) -> Outcome {
    let n = ctx.dim();
    let lam = ctx.lambda_monomial(Side::L, d);
    let mut lhs: BTreeMap<PbwMonomial, TensorDual> = BTreeMap::new();
    let mut rhs: BTreeMap<PbwMonomial, TensorDual> = BTreeMap::new();
    for ((f, m), c) in lam.terms() {
        for ((g, q), c2) in ctx.lambda_monomial(Side::L, m).terms() {
            lhs.entry(q.clone()).or_default().push(vec![f.clone(), g.clone()], c * c2);
        }
        let t = rhs.entry(m.clone()).or_default();
        for (x, y) in monomial_coproduct(f, n) {
            t.push(vec![x, y], c.clone());
        }
    }
    let mut parts = vec![Outcome::compare(&lam.counit_dual(), &mono(d))];
    let mut keys: Vec<PbwMonomial> = lhs.keys().chain(rhs.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    let diffs: Vec<TensorDual> = keys
        .iter()
        .map(|q| lhs.get(q).cloned().unwrap_or_default().sub(&rhs.get(q).cloned().unwrap_or_default()))
        .collect();
    let refs: Vec<&TensorDual> = diffs.iter().collect();
    if let Some((i, v)) = ctx.pairing.first_nonzero(&refs, b.mode) {
        let q = &keys[i];
        let v = match v {
            Verdict::Unequal(mut w) => {
                w.note = format!("♯ {}", label(q));
                Verdict::Unequal(w)
            }
            other => other,
        };
        let (l, r) = (lhs.get(q).cloned().unwrap_or_default(), rhs.get(q).cloned().unwrap_or_default());
        parts.push(Outcome::from_verdict(v, Side::L, || l.to_string(), || r.to_string()));
    }
    Outcome::all(parts)
}

/// `P <| lambda(D) = D P`.
pub fn braided_commutative(ctx: &Context, d: &PbwMonomial, p: &PbwMonomial) -> Outcome {
    let lhs = ctx.act_right_smash(&mono(p), &ctx.lambda_monomial(Side::L, d)).expect("left copy");
    let rhs = ctx.uea.left.mul(&mono(d), &mono(p)).expect("left copy");
    Outcome::compare(&lhs, &rhs)
}

/// `lambda(D) (1 # P) = (1 # P) lambda(D)`.
pub fn image_commutes(ctx: &Context, d: &PbwMonomial, p: &PbwMonomial, b: &Bounds) -> Outcome {
    let lam = ctx.lambda_monomial(Side::L, d);
    let pp = SmashElement::from_uea(&mono(p));
    let lhs = ctx.smash_mul(&lam, &pp).expect("left copy");
    let rhs = ctx.smash_mul(&pp, &lam).expect("left copy");
    if lhs == rhs {
        return Outcome::Pass;
    }
    let v = ctx.smash_equals(&lhs, &rhs, b.mode);
    Outcome::from_verdict(v, Side::L, || lhs.to_string(), || rhs.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;
    use crate::pairing::EqMode;
    use crate::report::Status;

    #[test]
    fn small_suite_passes() {
        for name in ["abelian2", "solvable2"] {
            let ctx = Context::new(builtin(name).unwrap());
            let recs = yd_suite(&ctx, &Bounds::new(2, 1, EqMode::Heuristic(5)));
            let bad: Vec<_> = recs.iter().filter(|r| r.status != Status::Pass).collect();
            assert!(bad.is_empty(), "{name}: {bad:?}");
        }
    }

    #[test]
    fn detects_wrong_coaction_ordering() {
        // multiplicative instead of antimultiplicative extension breaks (c) off the abelian case
        let ctx = Context::new(builtin("solvable2").unwrap());
        let x1 = PbwMonomial::generator(2, 0);
        let x2 = PbwMonomial::generator(2, 1);
        let wrong = ctx.smash_mul(&ctx.lambda_monomial(Side::L, &x1), &ctx.lambda_monomial(Side::L, &x2)).unwrap();
        let dp = ctx.uea.left.mul(&mono(&x1), &mono(&x2)).unwrap();
        let right = ctx.lambda_coact(&dp);
        assert!(!ctx.smash_equals(&wrong, &right, EqMode::exact()).is_equal());
    }
}
