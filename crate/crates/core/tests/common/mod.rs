//! Independent oracles: brute-force rewriting in the free algebra and brute-force
//! Sweedler sums over word positions. Nothing here calls the library's multiplication,
//! coproduct, or pairing.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ugmin::{DualMonomial, Kind, LieAlgebra, PbwMonomial, Scalar, Side, UeaElement};

pub type Words = BTreeMap<Vec<usize>, Scalar>;

/// `c[k][i][j] = C^k_ij`, negated for the right copy.
pub fn constants(lie: &LieAlgebra, side: Side) -> Vec<Vec<Vec<Scalar>>> {
    let n = lie.dim();
    let sign = if side == Side::L { Scalar::one() } else { -Scalar::one() };
    (0..n).map(|k| (0..n).map(|i| (0..n).map(|j| lie.constant(k, i, j) * &sign).collect()).collect()).collect()
}

fn add(out: &mut Words, w: Vec<usize>, c: Scalar) {
    let e = out.entry(w.clone()).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        out.remove(&w);
    }
}

/// Rewrites `... X_a X_b ...` with `a > b` to `... X_b X_a ... + sum_k C^k_ab ... X_k ...`
/// until every word is sorted.
pub fn straighten(c: &[Vec<Vec<Scalar>>], input: &Words) -> Words {
    let mut todo: Vec<(Vec<usize>, Scalar)> = input.iter().map(|(w, x)| (w.clone(), x.clone())).collect();
    let mut done = Words::new();
    while let Some((w, x)) = todo.pop() {
        match (1..w.len()).find(|&p| w[p - 1] > w[p]) {
            None => add(&mut done, w, x),
            Some(p) => {
                let (a, b) = (w[p - 1], w[p]);
                let mut swapped = w.clone();
                swapped.swap(p - 1, p);
                todo.push((swapped, x.clone()));
                for (k, plane) in c.iter().enumerate() {
                    let v = &plane[a][b];
                    if !v.is_zero() {
                        let mut shorter = w[..p - 1].to_vec();
                        shorter.push(k);
                        shorter.extend_from_slice(&w[p + 1..]);
                        todo.push((shorter, &x * v));
                    }
                }
            }
        }
    }
    done
}

pub fn word_product(c: &[Vec<Vec<Scalar>>], a: &[usize], b: &[usize]) -> Words {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    straighten(c, &Words::from([(w, Scalar::one())]))
}

pub fn to_uea(side: Side, n: usize, words: &Words) -> UeaElement {
    UeaElement::from_terms(
        side,
        n,
        words.iter().map(|(w, x)| {
            let mut e = vec![0u16; n];
            for &l in w {
                e[l] += 1;
            }
            (PbwMonomial::from_exponents(e), x.clone())
        }),
    )
}

/// `ad_k` with `(ad_k)_{ij} = C^i_kj`.
pub fn adjoint(c: &[Vec<Vec<Scalar>>], k: usize) -> Vec<Vec<Scalar>> {
    let n = c.len();
    (0..n).map(|i| (0..n).map(|j| c[i][k][j].clone()).collect()).collect()
}

fn matmul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(Scalar::zero(), |acc, m| acc + &a[i][m] * &b[m][j])).collect()).collect()
}

fn identity(n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect()
}

/// `<X_{w1} ... X_{wm}, U^i_j> = (ad_{w1} ... ad_{wm})_{ij}` and
/// `<X_{w1} ... X_{wm}, Ubar^i_j> = (-1)^m (ad_{wm} ... ad_{w1})_{ij}`.
pub fn symbol_value(c: &[Vec<Vec<Scalar>>], word: &[usize], kind: Kind, i: usize, j: usize) -> Scalar {
    let n = c.len();
    let mut m = identity(n);
    match kind {
        Kind::U => {
            for &l in word {
                m = matmul(&m, &adjoint(c, l));
            }
            m[i][j].clone()
        }
        Kind::Ubar => {
            for &l in word.iter().rev() {
                m = matmul(&m, &adjoint(c, l));
            }
            if word.len() % 2 == 1 {
                -m[i][j].clone()
            } else {
                m[i][j].clone()
            }
        }
    }
}

/// All `(word|S, word|S^c)` over subsets `S` of positions.
pub fn sweedler(word: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let m = word.len();
    (0..1u32 << m)
        .map(|mask| {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (p, &l) in word.iter().enumerate() {
                if mask & (1 << p) != 0 {
                    a.push(l);
                } else {
                    b.push(l);
                }
            }
            (a, b)
        })
        .collect()
}

/// `<word, g_1 ... g_r>` by splitting positions among the factors.
pub fn pair_word(c: &[Vec<Vec<Scalar>>], word: &[usize], f: &DualMonomial) -> Scalar {
    let syms = f.symbols();
    match syms.split_first() {
        None => {
            if word.is_empty() {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        }
        Some((g, [])) => symbol_value(c, word, g.kind, g.row(), g.col()),
        Some((g, rest)) => {
            let tail = DualMonomial::from_symbols(rest.to_vec());
            sweedler(word)
                .into_iter()
                .map(|(a, b)| {
                    let x = symbol_value(c, &a, g.kind, g.row(), g.col());
                    if x.is_zero() {
                        x
                    } else {
                        x * pair_word(c, &b, &tail)
                    }
                })
                .fold(Scalar::zero(), |acc, v| acc + v)
        }
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

pub fn random_pbw(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> PbwMonomial {
    let all = PbwMonomial::all_up_to(n, max_degree);
    all[rng.gen_range(0..all.len())].clone()
}

pub fn random_dual_monomial(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> DualMonomial {
    let all = DualMonomial::all_up_to(n, max_len);
    all[rng.gen_range(0..all.len())].clone()
}
