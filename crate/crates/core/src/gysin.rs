//! Gysin pushforward along the complete flag bundle `Fl(V) -> M` of a rank-`n`
//! bundle, as the symmetrization operator
//! `b(a) -> sum_{w∈S_n} w·(b(a) / prod_{i<j} (a_i - a_j))`.
//!
//! The result is the pullback `f^* f_* b`, a symmetric polynomial in the
//! Chern roots `a_i`; it is also returned in the elementary basis, where
//! `e_i` stands for `c_i(V)`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{MultiPoly, RatFun, Ring, VarPrefix};
use crate::error::{Error, Result};
use crate::localize::{random_point, EVALUATION_POINTS};
use crate::symfun::{symmetry_witness, to_elementary_basis, EBasisPoly};
use crate::weyl::{WeylElement, WeylElements};

/// A class `b(a_1, ..., a_n)` on the flag bundle of a rank-`n` bundle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberClass {
    poly: MultiPoly,
}

impl FiberClass {
    /// The rank is the number of variables; they must carry the prefix `a`.
    pub fn new(poly: MultiPoly) -> Result<Self> {
        if poly.ring().prefix() != VarPrefix::A || poly.nvars() == 0 {
            return Err(Error::IncompatibleRings {
                left: "Q[a1..an] with n >= 1".into(),
                right: poly.ring().to_string(),
            });
        }
        Ok(FiberClass { poly })
    }

    pub fn rank(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn ring(&self) -> Ring {
        self.poly.ring()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PushforwardResult {
    pub symmetric: MultiPoly,
    pub chern_form: EBasisPoly,
}

/// `prod_{i<j} (a_i - a_j)`.
pub fn vandermonde(ring: Ring) -> MultiPoly {
    let n = ring.nvars();
    let mut v = MultiPoly::one(ring);
    for i in 0..n {
        for j in i + 1..n {
            let mut coeffs = vec![0; n];
            coeffs[i] = 1;
            coeffs[j] = -1;
            v = &v * &MultiPoly::linear_form(ring, &coeffs).expect("length n");
        }
    }
    v
}

/// `sum_w sgn(w) w·b`.
pub fn antisymmetrize(b: &MultiPoly) -> MultiPoly {
    let elements: Vec<WeylElement> = WeylElements::symmetric_group(b.nvars()).collect();
    elements
        .par_iter()
        .map(|w| {
            let image = w.act_on_poly(b).expect("same variable count");
            if w.permutation_sign() < 0 {
                -&image
            } else {
                image
            }
        })
        .reduce(|| MultiPoly::zero(b.ring()), |x, y| &x + &y)
}

fn negate_variables(p: &MultiPoly) -> MultiPoly {
    let n = p.nvars();
    let flip = WeylElement::new((0..n).collect(), vec![-1; n]).expect("valid signed permutation");
    flip.act_on_poly(p).expect("same variable count")
}

fn finish(symmetric: MultiPoly, dual_roots: bool) -> Result<PushforwardResult> {
    if let Some((i, j)) = symmetry_witness(&symmetric) {
        return Err(Error::invariant(format!("pushforward {symmetric} is not symmetric under ({i} {j})")));
    }
    let basis_input = if dual_roots { negate_variables(&symmetric) } else { symmetric.clone() };
    let chern_form = to_elementary_basis(&basis_input)?;
    Ok(PushforwardResult { symmetric, chern_form })
}

/// `f^* f_* b`, computed as the antisymmetrization of `b` divided exactly by
/// the Vandermonde product. With `dual_roots`, the e-basis form is taken
/// after `a_i -> -a_i`.
pub fn flag_pushforward(b: &FiberClass, dual_roots: bool) -> Result<PushforwardResult> {
    let ring = b.ring();
    let symmetric = if b.rank() == 1 {
        b.poly.clone()
    } else {
        let alt = antisymmetrize(&b.poly);
        alt.try_div_exact(&vandermonde(ring))?.ok_or_else(|| {
            Error::invariant("antisymmetrized class is not divisible by the Vandermonde product")
        })?
    };
    finish(symmetric, dual_roots)
}

/// The literal Weyl sum `sum_w w·(b / prod_{i<j} (a_i - a_j))` over `n!`
/// reduced rational functions. Slower; kept as a cross-check.
pub fn flag_pushforward_weyl_sum(b: &FiberClass) -> Result<MultiPoly> {
    let ring = b.ring();
    let term = RatFun::new(b.poly.clone(), vandermonde(ring))?;
    let elements: Vec<WeylElement> = WeylElements::symmetric_group(b.rank()).collect();
    let summands = elements.par_iter().map(|w| w.act_on_ratfun(&term)).collect::<Result<Vec<_>>>()?;
    let total = summands.into_par_iter().map(Ok).try_reduce(|| RatFun::zero(ring), |x, y| x.try_add(&y))?;
    total.as_poly().map_err(|_| Error::invariant(format!("Weyl symmetrization left a denominator: {total}")))
}

/// `sum_w b(w^{-1}·x) / V(w^{-1}·x)` with `V` the Vandermonde product: the
/// Weyl sum as a number at a point with distinct coordinates.
pub fn pushforward_sum_at(b: &FiberClass, x: &[BigRational]) -> Result<BigRational> {
    let n = b.rank();
    if x.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: x.len() });
    }
    let elements: Vec<WeylElement> = WeylElements::symmetric_group(n).collect();
    elements
        .par_iter()
        .map(|w| {
            let y = w.pull_back_point(x);
            let mut den = BigRational::one();
            for i in 0..n {
                for j in i + 1..n {
                    den *= &y[i] - &y[j];
                }
            }
            if den.is_zero() {
                return Err(Error::precondition("evaluation point has repeated coordinates"));
            }
            Ok(b.poly.eval_at(&y)? / den)
        })
        .try_reduce(BigRational::zero, |p, q| Ok(p + q))
}

/// Compares a pushforward against [`pushforward_sum_at`] at random points.
pub fn check_pushforward(b: &FiberClass, symmetric: &MultiPoly, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..EVALUATION_POINTS {
        let x = random_point(&mut rng, b.rank());
        if pushforward_sum_at(b, &x)? != symmetric.eval_at(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of `f_*((f^*c)·b) = c·f_*(b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectionCheck {
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

impl ProjectionCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of the projection formula for a symmetric `c`.
pub fn projection_formula_check(c: &MultiPoly, b: &FiberClass) -> Result<ProjectionCheck> {
    if c.ring() != b.ring() {
        return Err(Error::IncompatibleRings { left: c.ring().to_string(), right: b.ring().to_string() });
    }
    if let Some((i, j)) = symmetry_witness(c) {
        return Err(Error::NotSymmetric(i, j));
    }
    let product = FiberClass::new(c.try_mul(&b.poly)?)?;
    let lhs = flag_pushforward(&product, false)?.symmetric;
    let rhs = c.try_mul(&flag_pushforward(b, false)?.symmetric)?;
    Ok(ProjectionCheck { lhs, rhs })
}

/// `a_1^{n-1} a_2^{n-2} ... a_{n-1}`, whose pushforward is 1.
pub fn staircase(n: usize) -> MultiPoly {
    let ring = Ring::new(n, VarPrefix::A);
    let exps: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    MultiPoly::from_terms(ring, [(exps, crate::algebra::rat(1))]).expect("length n")
}

/// The fiber integral of `b` read as a flag-manifold integrand: `a_i -> y_i`
/// and integrated over `SU(n)/T`.
pub fn fiber_integral_via_flag(b: &FiberClass) -> Result<MultiPoly> {
    use crate::localize::{flag_integral, FlagIntegralProblem};
    use crate::weyl::{CartanType, RootSystem};
    if b.rank() < 2 {
        return Ok(b.poly.clone());
    }
    let rs = RootSystem::new(CartanType::A, b.rank() - 1)?;
    let f = b.poly.rename(VarPrefix::Y);
    let result = flag_integral(&FlagIntegralProblem::new(rs, f)?)?;
    Ok(result.rename(VarPrefix::A))
}
