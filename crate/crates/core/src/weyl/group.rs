use std::fmt;

use super::roots::{CartanType, Root, RootSystem};
use crate::algebra::{MultiPoly, RatFun};
use crate::error::{Error, Result};

/// A signed permutation: acts on variables by `u_i -> signs[i] * u_{perm[i]}`.
///
/// Indices are stored 0-based; rendering is 1-based one-line notation such as
/// `[2-,1+,3+]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// `perm` is 0-based; `signs` entries must be `1` or `-1`.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: signs.len() });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::precondition(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::precondition("signs must be +1 or -1"));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn from_permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    /// The transposition of the 1-based indices `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i - 1, j - 1);
        w
    }

    /// Negates the 1-based variable `i`.
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.signs[i - 1] = -1;
        w
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// The product `self * other`, acting as `other` first, then `self`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let signs = other.perm.iter().zip(&other.signs).map(|(&j, &s)| s * self.signs[j]).collect();
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// Sign of the underlying permutation, from its inversion count.
    pub fn permutation_sign(&self) -> i8 {
        let mut inversions = 0usize;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn belongs_to(&self, rs: &RootSystem) -> bool {
        if self.len() != rs.var_count() {
            return false;
        }
        let negatives = self.signs.iter().filter(|&&s| s < 0).count();
        match rs.kind() {
            CartanType::A => negatives == 0,
            CartanType::D => negatives % 2 == 0,
            CartanType::B | CartanType::C => true,
        }
    }

    pub fn act_on_poly(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.nvars() != self.len() {
            return Err(Error::IncompatibleRings {
                left: format!("Weyl element on {} letters", self.len()),
                right: p.ring().to_string(),
            });
        }
        Ok(p.signed_permute(&self.perm, &self.signs))
    }

    pub fn act_on_ratfun(&self, r: &RatFun) -> Result<RatFun> {
        if r.ring().nvars() != self.len() {
            return Err(Error::IncompatibleRings {
                left: format!("Weyl element on {} letters", self.len()),
                right: r.ring().to_string(),
            });
        }
        Ok(r.signed_permute(&self.perm, &self.signs))
    }

    /// Image of a root under the linear action.
    pub fn act_on_root(&self, root: &Root) -> Root {
        let mut out = vec![0; root.len()];
        for (i, &c) in root.iter().enumerate() {
            out[self.perm[i]] += c * i64::from(self.signs[i]);
        }
        out
    }

    /// Point `y` with `(w·p)(x) = p(y)`, i.e. `y_i = signs[i] * x[perm[i]]`.
    pub(crate) fn pull_back_point<T: Clone + std::ops::Neg<Output = T>>(&self, x: &[T]) -> Vec<T> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&j, &s)| if s < 0 { -x[j].clone() } else { x[j].clone() })
            .collect()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (p, s)) in self.perm.iter().zip(&self.signs).enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}{}", p + 1, if *s < 0 { '-' } else { '+' })?;
        }
        f.write_str("]")
    }
}

/// Enumerates a Weyl group: permutations in lexicographic order, and for each
/// permutation the admissible sign patterns in binary-counter order.
#[derive(Clone, Debug)]
pub struct WeylElements {
    perm: Option<Vec<usize>>,
    mask: u64,
    n: usize,
    kind: CartanType,
}

impl WeylElements {
    pub fn new(rs: &RootSystem) -> Self {
        Self::of_type(rs.kind(), rs.var_count())
    }

    /// All permutations of `n` letters (the type-A group acting on `n` variables).
    pub fn symmetric_group(n: usize) -> Self {
        Self::of_type(CartanType::A, n)
    }

    fn of_type(kind: CartanType, n: usize) -> Self {
        assert!(n < 64, "too many variables for a sign mask");
        WeylElements { perm: Some((0..n).collect()), mask: 0, n, kind }
    }

    fn mask_allowed(&self, mask: u64) -> bool {
        match self.kind {
            CartanType::A => mask == 0,
            CartanType::B | CartanType::C => true,
            CartanType::D => mask.count_ones().is_multiple_of(2),
        }
    }

    fn mask_limit(&self) -> u64 {
        if self.kind == CartanType::A {
            1
        } else {
            1 << self.n
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl Iterator for WeylElements {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        loop {
            let perm = self.perm.as_ref()?;
            if self.mask >= self.mask_limit() {
                let mut p = perm.clone();
                self.perm = next_permutation(&mut p).then_some(p);
                self.mask = 0;
                continue;
            }
            let mask = self.mask;
            self.mask += 1;
            if !self.mask_allowed(mask) {
                continue;
            }
            let signs = (0..self.n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            return Some(WeylElement { perm: perm.clone(), signs });
        }
    }
}
