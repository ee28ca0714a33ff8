//! Schubert calculus on `G(k, C^n)` through the Pieri rules.
//!
//! Schubert classes `σ_λ` are indexed by partitions in the `k x m` box,
//! `m = n - k`. Multiplication by the special classes `σ_r` adds horizontal
//! strips; multiplication by `σ_{1^r}` adds vertical strips. Only these two
//! rules are implemented: they suffice for every monomial in the Chern classes
//! of the tautological subbundle, because `c_r(S) = (-1)^r σ_{1^r}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; the parts must be weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::precondition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `k x m` rectangle `(m, ..., m)`.
    pub fn rectangle(k: usize, m: u32) -> Self {
        if m == 0 {
            Partition::empty()
        } else {
            Partition(vec![m; k])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn fits_in_box(&self, k: usize, m: u32) -> bool {
        self.0.len() <= k && self.0.first().is_none_or(|&p| p <= m)
    }

    fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

fn check_box(lambda: &Partition, k: usize, m: u32) -> Result<()> {
    if lambda.fits_in_box(k, m) {
        Ok(())
    } else {
        Err(Error::precondition(format!("{lambda} does not fit in the {k}x{m} box")))
    }
}

/// `σ_λ · σ_r`: every way to add a horizontal strip of `r` boxes to `λ`
/// that stays inside the `k x m` box.
pub fn pieri_product(lambda: &Partition, r: u32, k: usize, m: u32) -> Result<Vec<Partition>> {
    check_box(lambda, k, m)?;
    if r > m {
        return Err(Error::precondition(format!("σ_{r} is zero in a box of width {m}")));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    horizontal_strips(lambda, k, m, 0, r, &mut current, &mut out);
    Ok(out)
}

fn horizontal_strips(
    lambda: &Partition,
    k: usize,
    m: u32,
    row: usize,
    remaining: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == k {
        if remaining == 0 {
            out.push(Partition::new(current.clone()).expect("interlacing keeps the order"));
        }
        return;
    }
    let low = lambda.part(row);
    // interlacing: μ_row <= λ_{row-1}
    let high = if row == 0 { m } else { lambda.part(row - 1) };
    let high = high.min(low + remaining);
    for mu in low..=high {
        current.push(mu);
        horizontal_strips(lambda, k, m, row + 1, remaining - (mu - low), current, out);
        current.pop();
    }
}

/// `σ_λ · σ_{1^r}`: every way to add a vertical strip of `r` boxes to `λ`
/// that stays inside the `k x m` box.
pub fn dual_pieri_product(lambda: &Partition, r: u32, k: usize, m: u32) -> Result<Vec<Partition>> {
    check_box(lambda, k, m)?;
    if r as usize > k {
        return Err(Error::precondition(format!("σ_(1^{r}) is zero with {k} rows")));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << k) {
        if mask.count_ones() != r {
            continue;
        }
        let parts: Vec<u32> = (0..k).map(|i| lambda.part(i) + (mask >> i & 1) as u32).collect();
        if parts.iter().any(|&p| p > m) || parts.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        out.push(Partition::new(parts).expect("checked above"));
    }
    Ok(out)
}

/// A formal integer combination of Schubert classes.
pub type SchubertClass = BTreeMap<Partition, BigInt>;

/// `∫ expr`: the coefficient of the full `k x m` rectangle.
pub fn schubert_integral(expr: &SchubertClass, k: usize, m: u32) -> Result<BigRational> {
    for lambda in expr.keys() {
        check_box(lambda, k, m)?;
    }
    let top = Partition::rectangle(k, m);
    Ok(BigRational::from_integer(expr.get(&top).cloned().unwrap_or_else(BigInt::zero)))
}

fn multiply_elementary(class: &SchubertClass, r: u32, k: usize, m: u32) -> Result<SchubertClass> {
    let mut out = SchubertClass::new();
    for (lambda, c) in class {
        for mu in dual_pieri_product(lambda, r, k, m)? {
            *out.entry(mu).or_insert_with(BigInt::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// `∫_{G(k,C^n)} c_1(S)^{m_1} ... c_k(S)^{m_k}` by iterated dual Pieri
/// products, using `c_r(S) = (-1)^r σ_{1^r}` for the tautological subbundle.
pub fn chern_monomial_integral(n: usize, k: usize, exponents: &[u32]) -> Result<BigRational> {
    if k == 0 || k >= n {
        return Err(Error::precondition(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    if exponents.len() != k {
        return Err(Error::precondition(format!("expected {k} exponents, got {}", exponents.len())));
    }
    let m = (n - k) as u32;
    let mut class = SchubertClass::new();
    class.insert(Partition::empty(), BigInt::one());
    let mut sign = BigInt::one();
    for (i, &mult) in exponents.iter().enumerate() {
        let r = (i + 1) as u32;
        for _ in 0..mult {
            class = multiply_elementary(&class, r, k, m)?;
            if r % 2 == 1 {
                sign = -sign;
            }
        }
    }
    Ok(schubert_integral(&class, k, m)? * BigRational::from_integer(sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn set(v: Vec<Partition>) -> std::collections::BTreeSet<Partition> {
        v.into_iter().collect()
    }

    #[test]
    fn partition_normalization() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1]).to_string(), "[2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!(p(&[2, 2]).fits_in_box(2, 2));
        assert!(!p(&[3]).fits_in_box(2, 2));
        assert!(!p(&[1, 1, 1]).fits_in_box(2, 2));
    }

    #[test]
    fn pieri_examples() {
        let got = set(pieri_product(&p(&[1]), 1, 2, 2).unwrap());
        assert_eq!(got, set(vec![p(&[2]), p(&[1, 1])]));
        assert_eq!(pieri_product(&Partition::empty(), 0, 2, 2).unwrap(), vec![Partition::empty()]);
        assert!(pieri_product(&p(&[2, 2]), 1, 2, 2).unwrap().is_empty());
        // horizontal strip: (1) * σ_2 in a 2x3 box gives (3), (2,1)
        let got = set(pieri_product(&p(&[1]), 2, 2, 3).unwrap());
        assert_eq!(got, set(vec![p(&[3]), p(&[2, 1])]));
    }

    #[test]
    fn pieri_preconditions() {
        assert!(pieri_product(&p(&[3]), 1, 2, 2).is_err());
        assert!(pieri_product(&p(&[1]), 3, 2, 2).is_err());
        assert!(dual_pieri_product(&p(&[1]), 3, 2, 2).is_err());
    }

    #[test]
    fn dual_pieri_examples() {
        let got = set(dual_pieri_product(&p(&[1]), 1, 2, 2).unwrap());
        assert_eq!(got, set(vec![p(&[2]), p(&[1, 1])]));
        let got = set(dual_pieri_product(&p(&[1]), 2, 3, 2).unwrap());
        assert_eq!(got, set(vec![p(&[2, 1]), p(&[1, 1, 1])]));
        assert_eq!(dual_pieri_product(&p(&[1, 1]), 2, 2, 2).unwrap(), vec![p(&[2, 2])]);
    }

    #[test]
    fn integral_reads_top_coefficient() {
        let mut e = SchubertClass::new();
        e.insert(p(&[2, 2]), BigInt::from(1));
        assert_eq!(schubert_integral(&e, 2, 2).unwrap(), BigRational::one());
        let mut e = SchubertClass::new();
        e.insert(p(&[1]), BigInt::from(1));
        assert_eq!(schubert_integral(&e, 2, 2).unwrap(), BigRational::zero());
        let mut e = SchubertClass::new();
        e.insert(p(&[2, 2]), BigInt::from(3));
        e.insert(p(&[1, 1]), BigInt::from(-1));
        assert_eq!(schubert_integral(&e, 2, 2).unwrap(), BigRational::from_integer(3.into()));
    }

    #[test]
    fn sigma_one_to_the_fourth_on_g24() {
        let mut class = SchubertClass::new();
        class.insert(Partition::empty(), BigInt::one());
        for _ in 0..4 {
            let mut next = SchubertClass::new();
            for (lambda, c) in &class {
                for mu in pieri_product(lambda, 1, 2, 2).unwrap() {
                    *next.entry(mu).or_insert_with(BigInt::zero) += c;
                }
            }
            class = next;
        }
        assert_eq!(schubert_integral(&class, 2, 2).unwrap(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn chern_monomials_on_g24() {
        let v = |e: &[u32]| chern_monomial_integral(4, 2, e).unwrap();
        assert_eq!(v(&[4, 0]), BigRational::from_integer(2.into()));
        assert_eq!(v(&[2, 1]), BigRational::from_integer(1.into()));
        assert_eq!(v(&[0, 2]), BigRational::from_integer(1.into()));
        assert_eq!(v(&[1, 0]), BigRational::zero());
    }

    #[test]
    fn projective_space_signs() {
        // ∫_{CP^2} c_1(S)^2 = 1, ∫_{CP^3} c_1(S)^3 = -1
        assert_eq!(chern_monomial_integral(3, 1, &[2]).unwrap(), BigRational::one());
        assert_eq!(chern_monomial_integral(4, 1, &[3]).unwrap(), -BigRational::one());
    }
}
