#![allow(dead_code)]

use loccalc::algebra::{rat, BigRational, MultiPoly, Ring, VarPrefix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Terms of a polynomial: coefficient and exponent vector.
pub fn terms(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-9i64..=9, prop::collection::vec(0..=max_deg, nvars)), 1..=max_terms)
}

pub fn build(ring: Ring, terms: &[(i64, Vec<u32>)]) -> MultiPoly {
    MultiPoly::from_terms(ring, terms.iter().map(|(c, e)| (e.clone(), rat(*c)))).unwrap()
}

pub fn poly(ring: Ring, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    terms(ring.nvars(), max_deg, max_terms).prop_map(move |t| build(ring, &t))
}

pub fn nonzero_poly(ring: Ring, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    poly(ring, max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// A homogeneous polynomial of degree `deg`: each term is a product of `deg`
/// variables drawn with repetition.
pub fn homogeneous(ring: Ring, deg: usize, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let n = ring.nvars();
    prop::collection::vec((-9i64..=9, prop::collection::vec(0..n, deg)), 1..=max_terms).prop_map(move |ts| {
        let terms = ts.into_iter().map(|(c, vars)| {
            let mut e = vec![0u32; n];
            for v in vars {
                e[v] += 1;
            }
            (e, rat(c))
        });
        MultiPoly::from_terms(ring, terms).unwrap()
    })
}

pub fn point(nvars: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-50i64..=50, 1i64..=12), nvars)
        .prop_map(|v| v.into_iter().map(|(p, q)| BigRational::new(p.into(), q.into())).collect())
}

pub fn ring(n: usize, prefix: VarPrefix) -> Ring {
    Ring::new(n, prefix)
}

/// Seeded generator for sweeps that do not need shrinking.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random homogeneous polynomial of degree `deg` with up to `max_terms` terms
/// and nonzero coefficients in `-9..=9`.
pub fn random_homogeneous<R: Rng>(rng: &mut R, ring: Ring, deg: usize, max_terms: usize) -> MultiPoly {
    let n = ring.nvars();
    let count = rng.random_range(1..=max_terms);
    let terms: Vec<(Vec<u32>, BigRational)> = (0..count)
        .map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.random_range(0..n)] += 1;
            }
            let c: i64 = rng.random_range(1..=9) * if rng.random_bool(0.5) { -1 } else { 1 };
            (e, rat(c))
        })
        .collect();
    MultiPoly::from_terms(ring, terms).unwrap()
}

/// All exponent vectors `(m_1..m_k)` with `sum r m_r = d`.
pub fn weighted_compositions(k: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(r: usize, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r > k {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for m in 0..=left / r as u32 {
            cur.push(m);
            go(r + 1, k, left - m * r as u32, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, d, &mut Vec::new(), &mut out);
    out
}
