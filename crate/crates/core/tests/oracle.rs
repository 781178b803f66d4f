mod common;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use ugmin::{builtin, Context, DualElement, PbwMonomial, Scalar, Side};

const ALGEBRAS: [&str; 4] = ["abelian2", "solvable2", "heisenberg3", "sl2"];

fn ctx(name: &str) -> Context {
    Context::new(builtin(name).unwrap())
}

#[test]
fn pbw_products_match_rewriting() {
    for name in ALGEBRAS {
        let c = ctx(name);
        let n = c.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for side in [Side::L, Side::R] {
            let consts = constants(c.lie(), side);
            let ring = c.uea().ring(side);
            for _ in 0..40 {
                let a = random_word(&mut rng, n, 3);
                let b = random_word(&mut rng, n, 3);
                let got = ring.mul(&ring.word(&a), &ring.word(&b)).unwrap();
                let want = to_uea(side, n, &word_product(&consts, &a, &b));
                assert_eq!(got, want, "{name} {side:?}: {a:?} * {b:?}");
            }
        }
    }
}

#[test]
fn coproduct_matches_position_subsets() {
    for name in ALGEBRAS {
        let c = ctx(name);
        let n = c.dim();
        let consts = constants(c.lie(), Side::L);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..25 {
            let w = random_word(&mut rng, n, 4);
            let mut want: BTreeMap<Vec<PbwMonomial>, Scalar> = BTreeMap::new();
            for (a, b) in sweedler(&w) {
                let sa = to_uea(Side::L, n, &straighten(&consts, &Words::from([(a, Scalar::one())])));
                let sb = to_uea(Side::L, n, &straighten(&consts, &Words::from([(b, Scalar::one())])));
                for (ma, xa) in sa.terms() {
                    for (mb, xb) in sb.terms() {
                        *want.entry(vec![ma.clone(), mb.clone()]).or_insert_with(Scalar::zero) += xa * xb;
                    }
                }
            }
            want.retain(|_, v| !v.is_zero());
            let got: BTreeMap<Vec<PbwMonomial>, Scalar> = c
                .uea()
                .left
                .coproduct(&c.uea().left.word(&w))
                .unwrap()
                .terms()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            assert_eq!(got, want, "{name}: {w:?}");
        }
    }
}

#[test]
fn antipode_reverses_words() {
    for name in ALGEBRAS {
        let c = ctx(name);
        let n = c.dim();
        let consts = constants(c.lie(), Side::L);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..25 {
            let w = random_word(&mut rng, n, 4);
            let mut rev = w.clone();
            rev.reverse();
            let sign = if w.len().is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
            let want = to_uea(Side::L, n, &straighten(&consts, &Words::from([(rev, sign)])));
            assert_eq!(c.uea().left.antipode(&c.uea().left.word(&w)).unwrap(), want, "{name}: {w:?}");
        }
    }
}

#[test]
fn pairing_values_match_matrix_products() {
    for name in ALGEBRAS {
        let c = ctx(name);
        let n = c.dim();
        let consts = constants(c.lie(), Side::L);
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..30 {
            // an unsorted word, paired through its PBW expansion
            let w = random_word(&mut rng, n, 4);
            let f = random_dual_monomial(&mut rng, n, 2);
            let d = c.uea().left.word(&w);
            let got = c.pairing().pair(&d, &DualElement::monomial(f.clone(), Scalar::one())).unwrap();
            assert_eq!(got, pair_word(&consts, &w, &f), "{name}: <{w:?}, {}>", f.render());
        }
    }
}
