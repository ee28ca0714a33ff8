use num_rational::BigRational;
use rayon::prelude::*;

use super::flag::parallel_sum;
use crate::algebra::{MultiPoly, RatFun, Ring, VarPrefix};
use crate::error::{Error, Result};
use crate::symfun::elementary_symmetric;

/// `∫_{G(k,C^n)} c_1(S)^{m_1} ... c_k(S)^{m_k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrassmannProblem {
    n: usize,
    k: usize,
    exponents: Vec<u32>,
}

impl GrassmannProblem {
    pub fn new(n: usize, k: usize, exponents: Vec<u32>) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::precondition(format!("need 1 <= k < n, got n={n}, k={k}")));
        }
        if exponents.len() != k {
            return Err(Error::precondition(format!(
                "expected {k} exponents (one per Chern class of S), got {}",
                exponents.len()
            )));
        }
        Ok(GrassmannProblem { n, k, exponents })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `sum_r r * m_r`, the cohomological degree over two.
    pub fn weighted_degree(&self) -> u64 {
        self.exponents.iter().enumerate().map(|(i, &m)| (i as u64 + 1) * u64::from(m)).sum()
    }

    /// `k(n-k)`, the complex dimension of the Grassmannian.
    pub fn dimension(&self) -> u64 {
        (self.k * (self.n - self.k)) as u64
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.n, VarPrefix::U)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = Subset> {
        subsets(self.n, self.k)
    }
}

/// A fixed point of the torus on `G(k, C^n)`: a `k`-subset of `{1..n}` with
/// its complement, both increasing and 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subset {
    pub indices: Vec<usize>,
    pub complement: Vec<usize>,
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (1..=k).collect());
    std::iter::from_fn(move || {
        let indices = current.take()?;
        // advance to the next combination
        let mut next = indices.clone();
        let mut i = k;
        while i > 0 && next[i - 1] == n - k + i {
            i -= 1;
        }
        if i > 0 {
            next[i - 1] += 1;
            for j in i..k {
                next[j] = next[j - 1] + 1;
            }
            current = Some(next);
        }
        let complement = (1..=n).filter(|j| !indices.contains(j)).collect();
        Some(Subset { indices, complement })
    })
}

/// Value of a Grassmannian integral.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChernNumber {
    /// Exact or under degree: an integer (zero below the top degree).
    Constant(BigRational),
    /// Over degree: the equivariant pushforward, a polynomial in `u`.
    Polynomial(MultiPoly),
}

/// `prod_r σ_r(u_I)^{m_r} / prod_{i∈I} prod_{j∈J} (u_i - u_j)` at one fixed point.
pub fn grassmann_summand(problem: &GrassmannProblem, subset: &Subset) -> Result<RatFun> {
    let ring = problem.ring();
    let mut num = MultiPoly::one(ring);
    for (r, &m) in problem.exponents.iter().enumerate() {
        if m > 0 {
            let sigma = elementary_symmetric(r as i64 + 1, &subset.indices, ring)?;
            num = &num * &sigma.pow(m);
        }
    }
    let mut den = MultiPoly::one(ring);
    for &i in &subset.indices {
        for &j in &subset.complement {
            den = &den * &(&MultiPoly::variable(ring, i)? - &MultiPoly::variable(ring, j)?);
        }
    }
    RatFun::new(num, den)
}

/// Sum of [`grassmann_summand`] over all `C(n, k)` fixed points.
pub fn grassmannian_chern_number(problem: &GrassmannProblem) -> Result<ChernNumber> {
    let subsets: Vec<Subset> = problem.fixed_points().collect();
    let summands = subsets.par_iter().map(|s| grassmann_summand(problem, s)).collect::<Result<Vec<_>>>()?;
    let total = parallel_sum(summands, problem.ring())?;
    let poly = total
        .as_poly()
        .map_err(|_| Error::invariant(format!("Grassmannian sum left a denominator: {total}")))?;
    let (wdeg, dim) = (problem.weighted_degree(), problem.dimension());
    if wdeg > dim {
        return Ok(ChernNumber::Polynomial(poly));
    }
    let value =
        poly.constant_value().ok_or_else(|| Error::invariant(format!("expected a constant, got {poly}")))?;
    if wdeg < dim && value != BigRational::from_integer(0.into()) {
        return Err(Error::invariant(format!("under-degree integral is {value}, not 0")));
    }
    if !value.is_integer() {
        return Err(Error::invariant(format!("Chern number {value} is not an integer")));
    }
    Ok(ChernNumber::Constant(value))
}
