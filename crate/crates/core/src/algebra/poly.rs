use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::sparse::Sparse;
use crate::error::{Error, Result};

/// Display prefix of ring variables.
///
/// `u` are the equivariant parameters, `y` the Chern classes on `G/T`, `a` the
/// fiber classes of a flag bundle and `c` Chern classes of a bundle. `e` is
/// reserved for the elementary symmetric basis and is never parsed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum VarPrefix {
    U,
    Y,
    A,
    C,
    E,
}

impl VarPrefix {
    pub fn as_char(self) -> char {
        match self {
            VarPrefix::U => 'u',
            VarPrefix::Y => 'y',
            VarPrefix::A => 'a',
            VarPrefix::C => 'c',
            VarPrefix::E => 'e',
        }
    }

    /// Prefixes accepted in user input.
    pub fn from_input_char(c: char) -> Option<Self> {
        match c {
            'u' => Some(VarPrefix::U),
            'y' => Some(VarPrefix::Y),
            'a' => Some(VarPrefix::A),
            'c' => Some(VarPrefix::C),
            _ => None,
        }
    }
}

impl fmt::Display for VarPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A polynomial ring `Q[x_1, ..., x_l]`, identified by its variable count and
/// display prefix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    nvars: usize,
    prefix: VarPrefix,
}

impl Ring {
    pub fn new(nvars: usize, prefix: VarPrefix) -> Self {
        Ring { nvars, prefix }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn prefix(&self) -> VarPrefix {
        self.prefix
    }

    pub fn with_prefix(self, prefix: VarPrefix) -> Self {
        Ring { prefix, ..self }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}1..{}{}]", self.prefix, self.prefix, self.nvars)
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// No stored coefficient is zero, so structural equality is mathematical
/// equality. The arithmetic operators on references panic when the rings
/// differ; the `try_*` methods report it as [`Error::IncompatibleRings`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    ring: Ring,
    inner: Sparse<BigRational>,
}

impl MultiPoly {
    pub fn zero(ring: Ring) -> Self {
        MultiPoly { ring, inner: Sparse::zero(ring.nvars) }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: Ring, c: BigRational) -> Self {
        MultiPoly { ring, inner: Sparse::constant(ring.nvars, c) }
    }

    pub fn integer(ring: Ring, c: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(c.into()))
    }

    /// The variable with 1-based `index`.
    pub fn variable(ring: Ring, index: usize) -> Result<Self> {
        if index == 0 || index > ring.nvars {
            return Err(Error::IndexOutOfRange { index, vars: ring.nvars });
        }
        let mut inner = Sparse::zero(ring.nvars);
        inner.add_term(Monomial::var(ring.nvars, index - 1), BigRational::one());
        Ok(MultiPoly { ring, inner })
    }

    /// The linear form `sum_i coeffs[i] * x_{i+1}`.
    pub fn linear_form(ring: Ring, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != ring.nvars {
            return Err(Error::LengthMismatch { expected: ring.nvars, got: coeffs.len() });
        }
        let mut inner = Sparse::zero(ring.nvars);
        for (i, &c) in coeffs.iter().enumerate() {
            inner.add_term(Monomial::var(ring.nvars, i), BigRational::from_integer(c.into()));
        }
        Ok(MultiPoly { ring, inner })
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; like terms
    /// are merged and zeros dropped.
    pub fn from_terms<I>(ring: Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut inner = Sparse::zero(ring.nvars);
        for (exps, c) in terms {
            if exps.len() != ring.nvars {
                return Err(Error::LengthMismatch { expected: ring.nvars, got: exps.len() });
            }
            inner.add_term(Monomial::new(exps), c);
        }
        Ok(MultiPoly { ring, inner })
    }

    pub(crate) fn from_sparse(ring: Ring, inner: Sparse<BigRational>) -> Self {
        debug_assert_eq!(ring.nvars, inner.nvars);
        MultiPoly { ring, inner }
    }

    pub(crate) fn sparse(&self) -> &Sparse<BigRational> {
        &self.inner
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.inner.is_constant()
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.inner.constant_term())
    }

    pub fn num_terms(&self) -> usize {
        self.inner.len()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.inner.terms.iter().rev().map(|(m, c)| (m.exponents(), c))
    }

    pub fn leading_term(&self) -> Option<(&[u32], &BigRational)> {
        self.inner.leading().map(|(m, c)| (m.exponents(), c))
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.inner.leading().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.inner.terms.keys().map(Monomial::total_degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.inner.degree_in(index - 1)
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::IncompatibleRings { left: self.ring.to_string(), right: other.ring.to_string() })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(MultiPoly { ring: self.ring, inner: self.inner.add(&other.inner) })
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(MultiPoly { ring: self.ring, inner: self.inner.sub(&other.inner) })
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(MultiPoly { ring: self.ring, inner: self.inner.mul(&other.inner) })
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn try_div_exact(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inner.try_div(&divisor.inner).map(|inner| MultiPoly { ring: self.ring, inner }))
    }

    pub fn scale(&self, k: &BigRational) -> MultiPoly {
        MultiPoly { ring: self.ring, inner: self.inner.scale(k) }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        MultiPoly { ring: self.ring, inner: self.inner.pow(e) }
    }

    /// Same coefficients, viewed in a ring with another variable prefix.
    pub fn rename(&self, prefix: VarPrefix) -> MultiPoly {
        MultiPoly { ring: self.ring.with_prefix(prefix), inner: self.inner.clone() }
    }

    /// Substitutes `x_i -> signs[i] * x_{perm[i]}` (0-based `perm`).
    pub(crate) fn signed_permute(&self, perm: &[usize], signs: &[i8]) -> MultiPoly {
        MultiPoly { ring: self.ring, inner: self.inner.signed_permute(perm, signs) }
    }

    /// Substitutes `x_i -> point[i]`.
    pub fn eval_at(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.nvars {
            return Err(Error::LengthMismatch { expected: self.ring.nvars, got: point.len() });
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        // x_i = p_i / q and c_m = P_m / l with integers p_i, P_m, so
        // self(x) = (sum_m P_m prod p_i^{m_i} q^{D-|m|}) / (l q^D)
        let q = point.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = point.iter().map(|x| x.numer() * (&q / x.denom())).collect();
        let l = self.inner.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let top = self.inner.total_degree().unwrap_or(0) as usize;
        let powers_of = |base: &BigInt, d: usize| {
            let mut row = Vec::with_capacity(d + 1);
            row.push(BigInt::one());
            for k in 1..=d {
                let next = &row[k - 1] * base;
                row.push(next);
            }
            row
        };
        let powers: Vec<Vec<BigInt>> =
            ints.iter().enumerate().map(|(i, p)| powers_of(p, self.inner.degree_in(i) as usize)).collect();
        let q_powers = powers_of(&q, top);
        let mut total = BigInt::zero();
        for (m, coeff) in &self.inner.terms {
            let scaled = coeff.numer() * (&l / coeff.denom());
            let mut term = scaled * &q_powers[top - m.total_degree() as usize];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term *= &powers[i][e as usize];
                }
            }
            total += term;
        }
        Ok(BigRational::new(total, l * &q_powers[top]))
    }

    /// Rational `c` such that `self / c` has coprime integer coefficients and
    /// a positive leading coefficient. Zero for the zero polynomial.
    pub fn content(&self) -> BigRational {
        let Some(lc) = self.leading_coefficient() else {
            return BigRational::zero();
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.inner.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let c = BigRational::new(num_gcd, den_lcm);
        if lc.is_negative() {
            -c
        } else {
            c
        }
    }

    /// `self / self.content()`.
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("incompatible rings")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("incompatible rings")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("incompatible rings")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { ring: self.ring, inner: self.inner.neg() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical rendering: decreasing graded-lex order, `*` between factors,
/// e.g. `5*u1^2*u2 - 1/2*u3`. The zero polynomial renders as `0`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let prefix = self.ring.prefix.as_char();
        for (k, (exps, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = exps.iter().all(|&e| e == 0);
            let mut first = true;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{prefix}{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
