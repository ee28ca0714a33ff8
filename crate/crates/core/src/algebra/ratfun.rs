use std::fmt;
use std::ops::{Add, Neg};

use num_rational::BigRational;
use num_traits::One;

use super::gcd::poly_gcd;
use super::poly::{MultiPoly, Ring};
use crate::error::{Error, Result};

/// A reduced quotient of two polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit and `den` has coprime integer
/// coefficients with a positive graded-lex leading coefficient. Two fractions
/// are equal as rational functions exactly when they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if num.ring() != den.ring() {
            return Err(Error::IncompatibleRings {
                left: num.ring().to_string(),
                right: den.ring().to_string(),
            });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun::zero(num.ring()));
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() { (num, den) } else { (exact(&num, &g), exact(&den, &g)) };
        Ok(RatFun::normalized(num, den))
    }

    /// Assumes `num` and `den` are coprime; fixes the scalar normalization.
    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        let c = den.content();
        if c.is_one() {
            RatFun { num, den }
        } else {
            let inv = c.recip();
            RatFun { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero(ring: Ring) -> Self {
        RatFun { num: MultiPoly::zero(ring), den: MultiPoly::one(ring) }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.ring());
        RatFun { num: p, den }
    }

    pub fn ring(&self) -> Ring {
        self.num.ring()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Sum in canonical form. Uses `gcd(num, gcd(b, d))` for the final
    /// reduction, which suffices because both operands are already reduced.
    pub fn try_add(&self, other: &RatFun) -> Result<RatFun> {
        if self.ring() != other.ring() {
            return Err(Error::IncompatibleRings {
                left: self.ring().to_string(),
                right: other.ring().to_string(),
            });
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            let num = &self.num + &other.num;
            if num.is_zero() {
                return Ok(RatFun::zero(self.ring()));
            }
            if self.den.is_one() {
                return Ok(RatFun { num, den: self.den.clone() });
            }
            let h = poly_gcd(&num, &self.den)?;
            if h.is_one() {
                return Ok(RatFun { num, den: self.den.clone() });
            }
            return Ok(RatFun::normalized(exact(&num, &h), exact(&self.den, &h)));
        }
        let g = poly_gcd(&self.den, &other.den)?;
        let b = exact(&self.den, &g);
        let d = exact(&other.den, &g);
        let num = &(&self.num * &d) + &(&other.num * &b);
        if num.is_zero() {
            return Ok(RatFun::zero(self.ring()));
        }
        let den = &b * &other.den;
        let h = poly_gcd(&num, &g)?;
        if h.is_one() {
            Ok(RatFun::normalized(num, den))
        } else {
            Ok(RatFun::normalized(exact(&num, &h), exact(&den, &h)))
        }
    }

    /// The polynomial this fraction equals, if the denominator is a constant.
    pub fn as_poly(&self) -> Result<MultiPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotAPolynomial(self.den.to_string()))
        }
    }

    pub fn eval_at(&self, point: &[BigRational]) -> Result<BigRational> {
        let d = self.den.eval_at(point)?;
        if d == BigRational::from_integer(0.into()) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_at(point)? / d)
    }

    /// Applies a signed variable permutation to both parts and re-canonicalizes.
    pub(crate) fn signed_permute(&self, perm: &[usize], signs: &[i8]) -> RatFun {
        let num = self.num.signed_permute(perm, signs);
        let den = self.den.signed_permute(perm, signs);
        // still coprime: the substitution is a ring automorphism
        RatFun::normalized(num, den)
    }
}

fn exact(p: &MultiPoly, d: &MultiPoly) -> MultiPoly {
    p.try_div_exact(d).expect("same ring").expect("gcd divides both arguments")
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;

    fn add(self, rhs: &'a RatFun) -> RatFun {
        self.try_add(rhs).expect("incompatible rings")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
