//! Hypotheses on `O := U` that make `H` pair with `U(g)` as required: generator values,
//! the bracket identity, the inverse-matrix identity, and the coalgebra/antipode formulas
//! read back through the pairing. Also the Hopf pairing laws themselves.

use num_traits::{One, Zero};

use crate::context::Context;
use crate::dual::{monomial_coproduct, DualElement, DualMonomial, GeneratorSymbol};
use crate::report::{Bounds, CheckRecord, Outcome, Recorder, Status};
use crate::scalar::Scalar;
use crate::uea::{PbwMonomial, Side, UeaElement};
use crate::yd::{dual, label, mono};

pub const SUITE: &str = "theorem61";

/// `sum_{l,m} C^k_lm U^l_i U^m_j` and `sum_r U^k_r C^r_ij`.
pub fn bracket_identity(ctx: &Context, i: usize, j: usize, k: usize) -> (DualElement, DualElement) {
    let n = ctx.dim();
    let mut lhs = DualElement::zero();
    let mut rhs = DualElement::zero();
    for l in 0..n {
        for m in 0..n {
            let c = ctx.lie.constant(k, l, m);
            if !c.is_zero() {
                lhs.add_scaled(&DualElement::u(l, i).mul(&DualElement::u(m, j)), &c);
            }
        }
    }
    for r in 0..n {
        rhs.add_scaled(&DualElement::u(k, r), &ctx.lie.constant(r, i, j));
    }
    (lhs, rhs)
}

/// `sum_j U^i_j Ubar^j_k` (or with the factors' kinds swapped) against `delta^i_k`.
pub fn inverse_identity(n: usize, i: usize, k: usize, ubar_first: bool) -> (DualElement, DualElement) {
    let mut lhs = DualElement::zero();
    for j in 0..n {
        let t = if ubar_first {
            DualElement::ubar(i, j).mul(&DualElement::u(j, k))
        } else {
            DualElement::u(i, j).mul(&DualElement::ubar(j, k))
        };
        lhs = lhs.add(&t);
    }
    let rhs = if i == k { DualElement::one() } else { DualElement::zero() };
    (lhs, rhs)
}

pub fn theorem61(ctx: &Context, b: &Bounds) -> Vec<CheckRecord> {
    let n = ctx.dim();
    let mut rec = Recorder::new(SUITE, b.timing);
    let p = &ctx.pairing;
    for k in 0..n {
        let xk = UeaElement::generator(Side::L, n, k);
        for i in 0..n {
            for j in 0..n {
                rec.check("pairing", format!("k={}, i={}, j={}", k + 1, i + 1, j + 1), || {
                    let v = p.pair(&xk, &DualElement::u(i, j)).expect("left copy");
                    Outcome::compare(&v, &ctx.lie.constant(i, k, j))
                });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                rec.check("ccu", format!("i={}, j={}, k={}", i + 1, j + 1, k + 1), || {
                    let (l, r) = bracket_identity(ctx, i, j, k);
                    let v = p.equals(&l, &r, b.mode);
                    Outcome::from_verdict(v, Side::L, || l.to_string(), || r.to_string())
                });
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            for ubar_first in [false, true] {
                let which = if ubar_first { "Ubar*U" } else { "U*Ubar" };
                rec.check("cui", format!("{which}, i={}, k={}", i + 1, k + 1), || {
                    let (l, r) = inverse_identity(n, i, k, ubar_first);
                    let v = p.equals(&l, &r, b.mode);
                    Outcome::from_verdict(v, Side::L, || l.to_string(), || r.to_string())
                });
            }
        }
    }
    let pbw = PbwMonomial::all_up_to(n, b.dmax);
    let symbols: Vec<GeneratorSymbol> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| [GeneratorSymbol::u(i, j), GeneratorSymbol::ubar(i, j)]))
        .collect();
    for g in &symbols {
        let f = DualMonomial::from_symbols(vec![*g]);
        rec.check("counit", g.to_string(), || law_units(ctx, &PbwMonomial::one(n), &f));
        for d in &pbw {
            rec.check("antipode", format!("D={}, f={}", label(d), g), || law_antipode(ctx, d, &f));
            for q in pbw.iter().filter(|q| q.degree() + d.degree() <= b.dmax) {
                rec.check("coproduct", format!("D={}, P={}, f={}", label(d), label(q), g), || {
                    law_product(ctx, d, q, &f)
                });
            }
        }
    }
    rec.finish()
}

pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.status == Status::Pass)
}

fn pair(ctx: &Context, d: &UeaElement, f: &DualElement) -> Scalar {
    ctx.pairing.pair(d, f).expect("left copy")
}

/// `<DP, f> = sum <D, f_(1)> <P, f_(2)>`.
pub fn law_product(ctx: &Context, d: &PbwMonomial, p: &PbwMonomial, f: &DualMonomial) -> Outcome {
    let dp = ctx.uea.left.mul(&mono(d), &mono(p)).expect("left copy");
    let lhs = pair(ctx, &dp, &dual(f));
    let mut rhs = Scalar::zero();
    for (a, c) in monomial_coproduct(f, ctx.dim()) {
        rhs += ctx.pairing.value(&a, d) * ctx.pairing.value(&c, p);
    }
    Outcome::compare(&lhs, &rhs)
}

/// `<D, fg> = sum <D_(1), f> <D_(2), g>`.
pub fn law_coproduct(ctx: &Context, d: &PbwMonomial, f: &DualMonomial, g: &DualMonomial) -> Outcome {
    let lhs = ctx.pairing.value(&f.mul(g), d);
    let mut rhs = Scalar::zero();
    for (a, c, k) in d.splits() {
        rhs += ctx.pairing.value(f, &a) * ctx.pairing.value(g, &c) * Scalar::from_integer(k.into());
    }
    Outcome::compare(&lhs, &rhs)
}

/// `<S(D), f> = <D, S(f)>`.
pub fn law_antipode(ctx: &Context, d: &PbwMonomial, f: &DualMonomial) -> Outcome {
    let s = ctx.uea.left.antipode(&mono(d)).expect("left copy");
    let lhs = pair(ctx, &s, &dual(f));
    let rhs = pair(ctx, &mono(d), &dual(f).antipode());
    Outcome::compare(&lhs, &rhs)
}

/// `<1, f> = eps(f)` and `<D, 1> = eps(D)`.
pub fn law_units(ctx: &Context, d: &PbwMonomial, f: &DualMonomial) -> Outcome {
    let n = ctx.dim();
    let one = UeaElement::one(Side::L, n);
    let a = Outcome::compare(&pair(ctx, &one, &dual(f)), &dual(f).counit());
    let eps = if d.is_one() { Scalar::one() } else { Scalar::zero() };
    let b = Outcome::compare(&pair(ctx, &mono(d), &DualElement::one()), &eps);
    Outcome::all([a, b])
}
