//! Coefficient-generic sparse polynomial storage shared by the public
//! rational polynomials and the integer polynomials used inside the gcd.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;

pub(crate) trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self>
where
    for<'a> &'a Self:
        Add<&'a Self, Output = Self> + Sub<&'a Self, Output = Self> + Mul<&'a Self, Output = Self>,
{
    /// `self / rhs` when the quotient exists in the coefficient ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Coeff for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Sparse<C> {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Sparse<C>
where
    for<'a> &'a C: Add<&'a C, Output = C> + Sub<&'a C, Output = C> + Mul<&'a C, Output = C>,
{
    pub fn zero(nvars: usize) -> Self {
        Sparse { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Sparse::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponents()[var]).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&Monomial::one(self.nvars)).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Sparse { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Sparse::zero(self.nvars);
        }
        Sparse { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Sparse::zero(self.nvars);
        }
        Sparse { nvars: self.nvars, terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut out = Sparse::zero(self.nvars);
        for (m, c) in &small.terms {
            for (n, d) in &large.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Sparse::constant(self.nvars, C::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Leading terms are taken in graded-lex order; if the divisor
    /// divides exactly, every leading term of the running remainder is
    /// divisible by the divisor's leading term.
    pub fn try_div(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        if divisor.len() == 1 {
            let mut q = Sparse::zero(self.nvars);
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                q.terms.insert(lm.quotient_of(m), c.div_exact(&lc)?);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut quot = Sparse::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c.div_exact(&lc)?;
            for (n, d) in &divisor.terms {
                rem.add_term(n.mul(&qm), -(d * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Sparse<D>
    where
        for<'a> &'a D: Add<&'a D, Output = D> + Sub<&'a D, Output = D> + Mul<&'a D, Output = D>,
    {
        let mut out = Sparse::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Substitutes `x_i -> sign_i * x_{perm_i}` for every variable.
    pub fn signed_permute(&self, perm: &[usize], signs: &[i8]) -> Self {
        let mut out = Sparse::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; self.nvars];
            let mut negative = false;
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[perm[i]] += e;
                if signs[i] < 0 && e % 2 == 1 {
                    negative = !negative;
                }
            }
            let c = if negative { -c.clone() } else { c.clone() };
            out.add_term(Monomial::new(exps), c);
        }
        out
    }

    /// Coefficients with respect to `var`: pairs `(degree, coefficient)`
    /// where each coefficient no longer involves `var`.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<u32, Sparse<C>> {
        let mut out: BTreeMap<u32, Sparse<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.exponents()[var];
            out.entry(d)
                .or_insert_with(|| Sparse::zero(self.nvars))
                .add_term(m.with_exponent(var, 0), c.clone());
        }
        out
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn lin(a: i64, b: i64) -> Sparse<BigInt> {
        let mut p = Sparse::zero(2);
        p.add_term(Monomial::var(2, 0), z(a));
        p.add_term(Monomial::var(2, 1), z(b));
        p
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = lin(1, -1);
        let b = lin(2, 3);
        let prod = a.mul(&b).mul(&a);
        assert_eq!(prod.try_div(&a).unwrap(), a.mul(&b));
        assert_eq!(prod.try_div(&b).unwrap(), a.mul(&a));
        assert!(prod.try_div(&lin(1, 1)).is_none());
    }

    #[test]
    fn integer_division_needs_divisible_coefficients() {
        let p = lin(2, 4);
        assert_eq!(p.try_div(&Sparse::constant(2, z(2))).unwrap(), lin(1, 2));
        assert!(p.try_div(&Sparse::constant(2, z(3))).is_none());
    }

    #[test]
    fn signed_permutation_substitution() {
        // u1^2 + u1*u2 under u1 -> -u1
        let mut p = Sparse::zero(2);
        p.add_term(Monomial::new(vec![2, 0]), z(1));
        p.add_term(Monomial::new(vec![1, 1]), z(1));
        let q = p.signed_permute(&[0, 1], &[-1, 1]);
        assert_eq!(q.terms[&Monomial::new(vec![2, 0])], z(1));
        assert_eq!(q.terms[&Monomial::new(vec![1, 1])], z(-1));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = lin(1, 1);
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert_eq!(a.pow(0), Sparse::constant(2, z(1)));
    }
}
