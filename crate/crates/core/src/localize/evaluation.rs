//! Scalar evaluation of fixed-point sums at random rational points.
//!
//! Used as an independent check of the symbolic path and as a fast path
//! when the answer is known to be a constant.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::flag::{flag_integral, FlagIntegralProblem};
use super::grassmann::{ChernNumber, GrassmannProblem, Subset};
use crate::algebra::{MultiPoly, VarPrefix};
use crate::error::{Error, Result};
use crate::weyl::{CartanType, RootSystem, WeylElement, WeylElements};

/// Number of independent points a scalar result must agree on.
pub const EVALUATION_POINTS: usize = 3;

/// Random nonzero rationals with pairwise distinct absolute values, so that
/// no root of any classical type vanishes at the point.
pub fn random_point<R: Rng>(rng: &mut R, nvars: usize) -> Vec<BigRational> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(nvars);
    while out.len() < nvars {
        let num: i64 = rng.random_range(1..=1000);
        let den: i64 = rng.random_range(1..=97);
        let x = BigRational::new(BigInt::from(num), BigInt::from(den));
        if !seen.insert(x.clone()) {
            continue;
        }
        out.push(if rng.random_bool(0.5) { -x } else { x });
    }
    out
}

/// `f = (sum_m P_m y^m) / l` with integer `P_m`, prepared once so that each
/// fixed point costs only integer products.
struct IntegerForm {
    terms: Vec<(Vec<u32>, u32, BigInt)>,
    denom: BigInt,
    degree: u32,
    var_degrees: Vec<u32>,
}

impl IntegerForm {
    fn new(f: &MultiPoly) -> Self {
        let denom = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms: Vec<(Vec<u32>, u32, BigInt)> =
            f.terms().map(|(e, c)| (e.to_vec(), e.iter().sum(), c.numer() * (&denom / c.denom()))).collect();
        let degree = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let var_degrees = (1..=f.nvars()).map(|i| f.degree_in(i)).collect();
        IntegerForm { terms, denom, degree, var_degrees }
    }

    /// `l q^D f(y/q)` for the integer vector `y`, as an integer.
    fn eval_scaled(&self, y: &[BigInt], q_powers: &[BigInt]) -> BigInt {
        let powers: Vec<Vec<BigInt>> = y
            .iter()
            .zip(&self.var_degrees)
            .map(|(v, &d)| {
                let mut row = vec![BigInt::one()];
                for k in 1..=d as usize {
                    let next = &row[k - 1] * v;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut total = BigInt::zero();
        for (exps, deg, c) in &self.terms {
            let mut term = c * &q_powers[(self.degree - deg) as usize];
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term *= &powers[i][e as usize];
                }
            }
            total += term;
        }
        total
    }
}

/// A point `x = p / q` with integer `p` and the powers of `q` up to `degree`.
struct ScaledPoint {
    ints: Vec<BigInt>,
    q_powers: Vec<BigInt>,
}

impl ScaledPoint {
    fn new(x: &[BigRational], degree: usize) -> Self {
        let q = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints = x.iter().map(|v| v.numer() * (&q / v.denom())).collect();
        let mut q_powers = vec![BigInt::one()];
        for k in 1..=degree {
            let next = &q_powers[k - 1] * &q;
            q_powers.push(next);
        }
        ScaledPoint { ints, q_powers }
    }
}

/// `sum_w f(w^{-1}·x) / prod_α α(w^{-1}·x)`: the fixed-point sum as a number.
pub fn flag_sum_at(problem: &FlagIntegralProblem, x: &[BigRational]) -> Result<BigRational> {
    let n = problem.root_system().var_count();
    if x.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: x.len() });
    }
    let form = IntegerForm::new(problem.integrand());
    let roots = problem.root_system().positive_roots();
    let point = ScaledPoint::new(x, (form.degree as usize).max(roots.len()));
    let elements: Vec<WeylElement> = WeylElements::new(problem.root_system()).collect();
    elements
        .par_iter()
        .map(|w| {
            // numerator l q^D f(y), denominator q^N prod α(y), y = p / q
            let y = w.pull_back_point(&point.ints);
            let mut euler = BigInt::one();
            for root in roots {
                let value: BigInt = root.iter().zip(&y).filter(|(c, _)| **c != 0).map(|(&c, v)| v * c).sum();
                euler *= value;
            }
            if euler.is_zero() {
                return Err(Error::precondition("evaluation point lies on a root hyperplane"));
            }
            let num = form.eval_scaled(&y, &point.q_powers) * &point.q_powers[roots.len()];
            let den = euler * &form.denom * &point.q_powers[form.degree as usize];
            Ok(BigRational::new(num, den))
        })
        .try_reduce(BigRational::zero, |a, b| Ok(a + b))
}

fn agree_at_points<F>(nvars: usize, seed: u64, eval: F) -> Result<BigRational>
where
    F: Fn(&[BigRational]) -> Result<BigRational>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut value: Option<BigRational> = None;
    for _ in 0..EVALUATION_POINTS {
        let x = random_point(&mut rng, nvars);
        let v = eval(&x)?;
        match &value {
            Some(prev) if *prev != v => {
                return Err(Error::invariant(format!(
                    "fixed-point sum is not constant: {prev} and {v} at different points"
                )));
            }
            _ => value = Some(v),
        }
    }
    Ok(value.expect("at least one point"))
}

/// The flag integral of an integrand of degree at most `|Δ+|`, computed by
/// scalar evaluation at [`EVALUATION_POINTS`] random points that must agree.
pub fn flag_integral_by_evaluation(problem: &FlagIntegralProblem, seed: u64) -> Result<BigRational> {
    let dim = problem.dim_over_two() as u32;
    if problem.integrand().total_degree().is_some_and(|d| d > dim) {
        return Err(Error::precondition(format!(
            "evaluation needs degree <= {dim}; the over-degree result is not a constant"
        )));
    }
    agree_at_points(problem.root_system().var_count(), seed, |x| flag_sum_at(problem, x))
}

/// Compares a symbolic flag integral against scalar evaluation. Constant
/// results are compared directly; polynomial results are compared pointwise.
pub fn check_flag_integral(problem: &FlagIntegralProblem, result: &MultiPoly, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..EVALUATION_POINTS {
        let x = random_point(&mut rng, problem.root_system().var_count());
        if flag_sum_at(problem, &x)? != result.eval_at(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Grassmannian fixed-point sum at a point of `Q^n`.
pub fn grassmann_sum_at(problem: &GrassmannProblem, x: &[BigRational]) -> Result<BigRational> {
    if x.len() != problem.n() {
        return Err(Error::LengthMismatch { expected: problem.n(), got: x.len() });
    }
    let subsets: Vec<Subset> = problem.fixed_points().collect();
    subsets
        .par_iter()
        .map(|s| grassmann_summand_at(problem, s, x))
        .try_reduce(BigRational::zero, |a, b| Ok(a + b))
}

/// One summand evaluated directly from scalars.
fn grassmann_summand_at(problem: &GrassmannProblem, s: &Subset, x: &[BigRational]) -> Result<BigRational> {
    // e_r(x_I) by the recurrence prod (1 + x_i t)
    let mut e = vec![BigRational::zero(); problem.k() + 1];
    e[0] = BigRational::one();
    for &i in &s.indices {
        for r in (1..e.len()).rev() {
            let step = &e[r - 1] * &x[i - 1];
            e[r] += step;
        }
    }
    let mut num = BigRational::one();
    for (r, &m) in problem.exponents().iter().enumerate() {
        num *= num_traits::pow(e[r + 1].clone(), m as usize);
    }
    let mut den = BigRational::one();
    for &i in &s.indices {
        for &j in &s.complement {
            den *= &x[i - 1] - &x[j - 1];
        }
    }
    if den.is_zero() {
        return Err(Error::precondition("evaluation point has repeated coordinates"));
    }
    Ok(num / den)
}

/// Compares a Grassmannian result against scalar evaluation.
pub fn check_grassmann(problem: &GrassmannProblem, result: &ChernNumber, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..EVALUATION_POINTS {
        let x = random_point(&mut rng, problem.n());
        let expected = match result {
            ChernNumber::Constant(c) => c.clone(),
            ChernNumber::Polynomial(p) => p.eval_at(&x)?,
        };
        if grassmann_sum_at(problem, &x)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

fn top_class_problem(kind: CartanType, rank: usize) -> Result<FlagIntegralProblem> {
    let rs = RootSystem::new(kind, rank)?;
    let top = rs.root_product(VarPrefix::Y);
    FlagIntegralProblem::new(rs, top)
}

fn weyl_order(kind: CartanType, rank: usize) -> Result<BigInt> {
    Ok(BigInt::from(RootSystem::new(kind, rank)?.weyl_order()))
}

/// `χ(G/T) = |W|`, computed from the closed-form order and from the
/// symbolic flag integral of the top class `prod_α y_α`; they must agree.
pub fn euler_characteristic(kind: CartanType, rank: usize) -> Result<BigInt> {
    let order = weyl_order(kind, rank)?;
    let integral = flag_integral(&top_class_problem(kind, rank)?)?;
    match integral.constant_value() {
        Some(v) if v.is_integer() && *v.numer() == order => Ok(order),
        _ => Err(Error::invariant(format!(
            "flag integral of the top class of {kind}{rank} is {integral}, expected {order}"
        ))),
    }
}

/// As [`euler_characteristic`], with the integral taken by scalar evaluation.
pub fn euler_characteristic_by_evaluation(kind: CartanType, rank: usize, seed: u64) -> Result<BigInt> {
    let order = weyl_order(kind, rank)?;
    let value = flag_integral_by_evaluation(&top_class_problem(kind, rank)?, seed)?;
    if value.is_integer() && !value.is_negative() && *value.numer() == order {
        Ok(order)
    } else {
        Err(Error::invariant(format!("evaluated top class of {kind}{rank} is {value}, expected {order}")))
    }
}
