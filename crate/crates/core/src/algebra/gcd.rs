//! Multivariate polynomial gcd.
//!
//! Rational inputs are scaled to primitive integer polynomials and the gcd is
//! taken in `Z[x_1, ..., x_l]`. Variables present in only one argument are
//! eliminated by taking contents, exact divisibility is tried first, then the
//! heuristic gcd (evaluation at a large integer and xi-adic reconstruction,
//! verified by trial division). The primitive pseudo-remainder sequence is
//! the fallback when the heuristic gives up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::poly::MultiPoly;
use super::sparse::Sparse;
use crate::error::{Error, Result};

type ZPoly = Sparse<BigInt>;

const HEURISTIC_ROUNDS: usize = 6;
/// Evaluation points above this many bits go straight to the PRS fallback.
const HEURISTIC_MAX_BITS: u64 = 1 << 16;

/// Greatest common divisor, normalized to coprime integer coefficients with
/// a positive graded-lex leading coefficient.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    if p.ring() != q.ring() {
        return Err(Error::IncompatibleRings { left: p.ring().to_string(), right: q.ring().to_string() });
    }
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::ZeroGcd),
        (true, false) => return Ok(q.primitive_part()),
        (false, true) => return Ok(p.primitive_part()),
        _ => {}
    }
    if p.is_constant() || q.is_constant() {
        return Ok(MultiPoly::one(p.ring()));
    }
    let a = to_integer(&p.primitive_part());
    let b = to_integer(&q.primitive_part());
    let g = normalize(&gcd_z(&a, &b));
    Ok(MultiPoly::from_sparse(p.ring(), g.map_coeffs(|c| BigRational::from_integer(c.clone()))))
}

fn to_integer(p: &MultiPoly) -> ZPoly {
    p.sparse().map_coeffs(|c| {
        debug_assert!(c.is_integer());
        c.numer().clone()
    })
}

fn integer_content(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.terms.values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the integer content and makes the leading coefficient positive.
fn normalize(p: &ZPoly) -> ZPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut c = integer_content(p);
    if p.leading().is_some_and(|(_, lc)| lc.is_negative()) {
        c = -c;
    }
    if c.is_one() {
        p.clone()
    } else {
        p.try_div(&Sparse::constant(p.nvars, c)).expect("content divides")
    }
}

fn max_norm(p: &ZPoly) -> BigInt {
    p.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(p: &ZPoly, var: usize) -> ZPoly {
    let mut coeffs = p.coefficients_in(var).into_values();
    let mut g = coeffs.next().unwrap_or_else(|| Sparse::zero(p.nvars));
    for c in coeffs {
        g = gcd_z(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    normalize(&g)
}

/// Full gcd in `Z[x]`: the integer gcd of the contents times the gcd of the
/// primitive parts.
fn gcd_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let nvars = a.nvars;
    let (ca, cb) = (integer_content(a), integer_content(b));
    let c = ca.gcd(&cb);
    let constant = |k: &BigInt| Sparse::constant(nvars, k.clone());
    if a.is_constant() || b.is_constant() {
        return constant(&c);
    }
    let mut a = a.try_div(&constant(&ca)).expect("content divides");
    let mut b = b.try_div(&constant(&cb)).expect("content divides");

    loop {
        let va = a.variables();
        let vb = b.variables();
        let only_a: Vec<usize> = va.iter().copied().filter(|v| !vb.contains(v)).collect();
        let only_b: Vec<usize> = vb.iter().copied().filter(|v| !va.contains(v)).collect();
        if only_a.is_empty() && only_b.is_empty() {
            break;
        }
        for v in only_a {
            a = content_in(&a, v);
        }
        for v in only_b {
            b = content_in(&b, v);
        }
    }
    if a.is_constant() || b.is_constant() {
        return constant(&c);
    }

    let g = if b.len() <= a.len() && a.try_div(&b).is_some() {
        b
    } else if a.len() <= b.len() && b.try_div(&a).is_some() {
        a
    } else if let Some(g) = heuristic_gcd(&a, &b) {
        g
    } else {
        let var = a.variables()[0];
        prs_gcd(&a, &b, var)
    };
    normalize(&g).scale(&c)
}

/// `p` with `x_var` replaced by the integer `xi`.
fn eval_var(p: &ZPoly, var: usize, xi: &BigInt) -> ZPoly {
    let mut out = Sparse::zero(p.nvars);
    for (m, c) in &p.terms {
        let e = m.exponents()[var];
        out.add_term(m.with_exponent(var, 0), c * xi.pow(e));
    }
    out
}

fn symmetric_mod(c: &BigInt, xi: &BigInt) -> BigInt {
    let r = c.mod_floor(xi);
    if &r + &r > *xi {
        r - xi
    } else {
        r
    }
}

/// Rebuilds a polynomial in `x_var` from its image at `x_var = xi` by
/// reading off balanced base-`xi` digits.
fn interpolate(mut gamma: ZPoly, var: usize, xi: &BigInt) -> ZPoly {
    let mut out = Sparse::zero(gamma.nvars);
    let mut power = 0u32;
    while !gamma.is_zero() {
        let mut digit = Sparse::zero(gamma.nvars);
        for (m, c) in &gamma.terms {
            digit.add_term(m.clone(), symmetric_mod(c, xi));
        }
        for (m, c) in &digit.terms {
            out.add_term(m.with_exponent(var, power), c.clone());
        }
        gamma = gamma.sub(&digit);
        gamma = gamma.map_coeffs(|c| c / xi);
        power += 1;
    }
    out
}

/// Heuristic gcd of primitive polynomials sharing all of their variables.
fn heuristic_gcd(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let var = *a.variables().first()?;
    let bound = max_norm(a).min(max_norm(b));
    let mut xi: BigInt = bound * 2 + 29;
    for _ in 0..HEURISTIC_ROUNDS {
        let degree = a.degree_in(var).max(b.degree_in(var)) as u64;
        if xi.bits() * degree.max(1) > HEURISTIC_MAX_BITS {
            return None;
        }
        let aa = eval_var(a, var, &xi);
        let bb = eval_var(b, var, &xi);
        if !aa.is_zero() && !bb.is_zero() {
            let gamma = gcd_z(&aa, &bb);
            let g = normalize(&interpolate(gamma, var, &xi));
            if !g.is_zero() && a.try_div(&g).is_some() && b.try_div(&g).is_some() {
                return Some(g);
            }
        }
        xi = (xi * 73794) / 27011;
    }
    None
}

/// Pseudo-remainder of `f` by `g` with respect to `var`.
fn pseudo_remainder(f: &ZPoly, g: &ZPoly, var: usize) -> ZPoly {
    let n = g.degree_in(var);
    let lcg = g.coefficients_in(var).remove(&n).expect("leading coefficient");
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(var) >= n {
        let d = r.degree_in(var);
        let lcr = r.coefficients_in(var).remove(&d).expect("leading coefficient");
        let shift = Monomial::var(r.nvars, var);
        let mut shifted = g.clone();
        for _ in 0..(d - n) {
            shifted = shifted.mul_term(&shift, &BigInt::one());
        }
        r = r.mul(&lcg).sub(&shifted.mul(&lcr));
    }
    r
}

fn primitive_in(p: &ZPoly, var: usize) -> ZPoly {
    let c = content_in(p, var);
    p.try_div(&c).expect("content divides")
}

fn prs_gcd(a: &ZPoly, b: &ZPoly, var: usize) -> ZPoly {
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let content = gcd_z(&ca, &cb);
    let mut f = a.try_div(&ca).expect("content divides");
    let mut g = b.try_div(&cb).expect("content divides");
    if f.degree_in(var) < g.degree_in(var) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_remainder(&f, &g, var);
        if r.is_zero() {
            return primitive_in(&g, var).mul(&content);
        }
        if r.degree_in(var) == 0 {
            return content;
        }
        f = g;
        g = primitive_in(&r, var);
    }
}
