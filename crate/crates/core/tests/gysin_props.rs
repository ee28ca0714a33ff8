mod common;

use common::{random_homogeneous, rng};
use loccalc::algebra::{rat, MultiPoly, Ring, VarPrefix};
use loccalc::gysin::{
    check_pushforward, fiber_integral_via_flag, flag_pushforward, flag_pushforward_weyl_sum,
    projection_formula_check, staircase, FiberClass,
};
use loccalc::symfun::{elementary_symmetric, is_symmetric};
use loccalc::weyl::WeylElement;
use proptest::prelude::*;
use rand::Rng;

fn a_ring(n: usize) -> Ring {
    Ring::new(n, VarPrefix::A)
}

/// `∂_i f = (f - s_i f) / (a_i - a_{i+1})`.
fn divided_difference(f: &MultiPoly, i: usize) -> MultiPoly {
    let n = f.nvars();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i - 1, i);
    let s = WeylElement::new(perm, vec![1; n]).unwrap();
    let num = f - &s.act_on_poly(f).unwrap();
    let den = &MultiPoly::variable(f.ring(), i).unwrap() - &MultiPoly::variable(f.ring(), i + 1).unwrap();
    num.try_div_exact(&den).unwrap().expect("divided difference is a polynomial")
}

/// `∂_{w0}` along the reduced word `(s_1)(s_2 s_1)(s_3 s_2 s_1)...`, applied right to left.
fn longest_divided_difference(f: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    let mut word = Vec::new();
    for top in 1..n {
        word.extend((1..=top).rev());
    }
    word.iter().rev().fold(f.clone(), |acc, &i| divided_difference(&acc, i))
}

/// A random element of `Q[e_1..e_n]` of degree `deg`, expanded in the roots.
fn random_symmetric<R: Rng>(r: &mut R, n: usize, deg: u32) -> MultiPoly {
    let ring = a_ring(n);
    let all: Vec<usize> = (1..=n).collect();
    let e: Vec<MultiPoly> = (1..=n).map(|k| elementary_symmetric(k as i64, &all, ring).unwrap()).collect();
    let mut out = MultiPoly::zero(ring);
    for _ in 0..3 {
        // a random partition of deg with parts at most n
        let mut left = deg;
        let mut term = MultiPoly::one(ring);
        while left > 0 {
            let part = r.random_range(1..=left.min(n as u32));
            term = &term * &e[part as usize - 1];
            left -= part;
        }
        out = &out + &term.scale(&rat(r.random_range(-5..=5)));
    }
    out
}

fn fiber(p: MultiPoly) -> FiberClass {
    FiberClass::new(p).unwrap()
}

#[test]
fn staircase_pushes_forward_to_one() {
    for n in 1..=5 {
        let b = fiber(staircase(n));
        assert!(flag_pushforward(&b, false).unwrap().symmetric.is_one(), "n = {n}");
        assert!(fiber_integral_via_flag(&b).unwrap().is_one(), "n = {n}");
    }
}

#[test]
fn low_degree_classes_push_forward_to_zero() {
    let mut r = rng(11);
    for n in 2..=4 {
        let top = n * (n - 1) / 2;
        for deg in 0..top {
            let b = fiber(random_homogeneous(&mut r, a_ring(n), deg, 4));
            assert!(flag_pushforward(&b, false).unwrap().symmetric.is_zero());
        }
    }
}

#[test]
fn weyl_sum_agrees_with_divided_vandermonde() {
    let mut r = rng(12);
    for n in 2..=4 {
        let top = n * (n - 1) / 2;
        for extra in 0..=2 {
            let b = fiber(random_homogeneous(&mut r, a_ring(n), top + extra, 3));
            let fast = flag_pushforward(&b, false).unwrap().symmetric;
            assert_eq!(flag_pushforward_weyl_sum(&b).unwrap(), fast, "b = {}", b.poly());
        }
    }
}

#[test]
fn dual_roots_negate_the_chern_classes() {
    let mut r = rng(13);
    for n in 2..=4 {
        let minus = WeylElement::new((0..n).collect(), vec![-1; n]).unwrap();
        let b = fiber(random_homogeneous(&mut r, a_ring(n), n * (n - 1) / 2 + 2, 3));
        let plain = flag_pushforward(&b, false).unwrap();
        let dual = flag_pushforward(&b, true).unwrap();
        assert_eq!(dual.symmetric, plain.symmetric);
        let flipped = minus.act_on_poly(&plain.symmetric).unwrap();
        assert_eq!(dual.chern_form.expand(a_ring(n)).unwrap(), flipped);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pushforward_is_symmetric_with_degree_drop(n in 1usize..=4, extra in 0usize..=3, seed in any::<u64>()) {
        let top = n * (n - 1) / 2;
        let b = fiber(random_homogeneous(&mut rng(seed), a_ring(n), top + extra, 4));
        let out = flag_pushforward(&b, false).unwrap();
        prop_assert!(is_symmetric(&out.symmetric));
        prop_assert!(out.symmetric.is_zero() || out.symmetric.total_degree() == Some(extra as u32));
        prop_assert_eq!(out.chern_form.expand(a_ring(n)).unwrap(), out.symmetric);
    }

    #[test]
    fn pushforward_is_the_longest_divided_difference(n in 1usize..=4, extra in 0usize..=2, seed in any::<u64>()) {
        let b = fiber(random_homogeneous(&mut rng(seed), a_ring(n), n * (n - 1) / 2 + extra, 4));
        prop_assert_eq!(flag_pushforward(&b, false).unwrap().symmetric, longest_divided_difference(b.poly()));
    }

    #[test]
    fn pushforward_matches_flag_integral_and_pointwise_sum(n in 2usize..=4, extra in 0usize..=1, seed in any::<u64>()) {
        let b = fiber(random_homogeneous(&mut rng(seed), a_ring(n), n * (n - 1) / 2 + extra, 3));
        let out = flag_pushforward(&b, false).unwrap().symmetric;
        prop_assert_eq!(fiber_integral_via_flag(&b).unwrap(), out.clone());
        prop_assert!(check_pushforward(&b, &out, seed).unwrap());
    }

    #[test]
    fn projection_formula_holds(n in 1usize..=4, deg_b in 0usize..=7, deg_c in 0u32..=3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = fiber(random_homogeneous(&mut r, a_ring(n), deg_b, 3));
        let c = random_symmetric(&mut r, n, deg_c);
        let check = projection_formula_check(&c, &b).unwrap();
        prop_assert!(check.holds(), "lhs {} rhs {}", check.lhs, check.rhs);
    }
}
