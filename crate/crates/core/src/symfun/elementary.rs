use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::algebra::{MultiPoly, Ring, VarPrefix};
use crate::error::{Error, Result};
use crate::weyl::WeylElement;

/// `e_r` in the variables with 1-based indices `vars`; `e_0 = 1` and `e_r = 0`
/// when `r` exceeds the number of variables.
pub fn elementary_symmetric(r: i64, vars: &[usize], ring: Ring) -> Result<MultiPoly> {
    if r < 0 {
        return Err(Error::precondition(format!("elementary symmetric degree {r} is negative")));
    }
    let r = r as usize;
    if r > vars.len() {
        return Ok(MultiPoly::zero(ring));
    }
    // coefficients of prod (1 + t x_i), truncated at t^r
    let mut e = vec![MultiPoly::zero(ring); r + 1];
    e[0] = MultiPoly::one(ring);
    for (k, &v) in vars.iter().enumerate() {
        let x = MultiPoly::variable(ring, v)?;
        for j in (1..=r.min(k + 1)).rev() {
            e[j] = &e[j] + &(&e[j - 1] * &x);
        }
    }
    Ok(e.swap_remove(r))
}

/// `e_1, ..., e_l` in all variables of `ring`.
fn all_elementary(ring: Ring) -> Vec<MultiPoly> {
    let vars: Vec<usize> = (1..=ring.nvars()).collect();
    (1..=ring.nvars() as i64).map(|r| elementary_symmetric(r, &vars, ring).expect("valid degree")).collect()
}

/// Returns the first adjacent transposition `(i, i+1)` that changes `p`.
pub fn symmetry_witness(p: &MultiPoly) -> Option<(usize, usize)> {
    let n = p.nvars();
    (1..n).find_map(|i| {
        let w = WeylElement::transposition(n, i, i + 1);
        let q = w.act_on_poly(p).expect("same variable count");
        (q != *p).then_some((i, i + 1))
    })
}

pub fn is_symmetric(p: &MultiPoly) -> bool {
    symmetry_witness(p).is_none()
}

/// A polynomial in the elementary symmetric polynomials `e_1, ..., e_l`,
/// stored as a polynomial in `l` variables rendered with the prefix `e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EBasisPoly {
    terms: MultiPoly,
}

impl EBasisPoly {
    pub fn zero(nvars: usize) -> Self {
        EBasisPoly { terms: MultiPoly::zero(Ring::new(nvars, VarPrefix::E)) }
    }

    /// Builds from `(exponents over e_1..e_l, coefficient)` pairs.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        Ok(EBasisPoly { terms: MultiPoly::from_terms(Ring::new(nvars, VarPrefix::E), terms)? })
    }

    pub fn nvars(&self) -> usize {
        self.terms.nvars()
    }

    /// Terms in decreasing graded-lex order of their e-exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Substitutes `e_r -> e_r(x_1, ..., x_l)` in the variables of `ring`.
    pub fn expand(&self, ring: Ring) -> Result<MultiPoly> {
        if ring.nvars() != self.nvars() {
            return Err(Error::IncompatibleRings {
                left: self.terms.ring().to_string(),
                right: ring.to_string(),
            });
        }
        let es = all_elementary(ring);
        let mut out = MultiPoly::zero(ring);
        for (exps, c) in self.terms() {
            let mut t = MultiPoly::constant(ring, c.clone());
            for (e, &k) in es.iter().zip(exps) {
                if k > 0 {
                    t = &t * &e.pow(k);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }
}

impl fmt::Display for EBasisPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.fmt(f)
    }
}

/// Rewrites a symmetric polynomial in the elementary basis by repeatedly
/// cancelling the leading term `c u^α` (α is then a partition) against
/// `c e_1^{α_1-α_2} e_2^{α_2-α_3} ... e_l^{α_l}`.
pub fn to_elementary_basis(p: &MultiPoly) -> Result<EBasisPoly> {
    if let Some((i, j)) = symmetry_witness(p) {
        return Err(Error::NotSymmetric(i, j));
    }
    let ring = p.ring();
    let n = ring.nvars();
    let es = all_elementary(ring);
    let mut out: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    let mut rem = p.clone();
    while let Some((alpha, c)) = rem.leading_term() {
        let alpha = alpha.to_vec();
        let c = c.clone();
        let beta: Vec<u32> = (0..n)
            .map(|i| {
                let next = alpha.get(i + 1).copied().unwrap_or(0);
                alpha[i].checked_sub(next)
            })
            .collect::<Option<_>>()
            .ok_or_else(|| {
                Error::invariant("leading exponent of a symmetric polynomial is not a partition")
            })?;
        let mut t = MultiPoly::constant(ring, c.clone());
        for (e, &k) in es.iter().zip(&beta) {
            if k > 0 {
                t = &t * &e.pow(k);
            }
        }
        rem = &rem - &t;
        *out.entry(beta).or_insert_with(|| BigRational::from_integer(0.into())) += c;
    }
    EBasisPoly::from_terms(n, out)
}
