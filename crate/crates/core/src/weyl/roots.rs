use std::fmt;
use std::str::FromStr;

use crate::algebra::{MultiPoly, Ring, VarPrefix};
use crate::error::{Error, Result};

/// Classical Cartan type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            other => Err(Error::precondition(format!("unsupported root system type {other:?}"))),
        }
    }
}

/// A root as its coefficient vector in the basis `u_1, ..., u_l`.
pub type Root = Vec<i64>;

/// Positive roots of a classical root system.
///
/// Type `A_{n-1}` is realized for `U(n)`: `l = n` variables permuted by
/// `S_n`, so `var_count = rank + 1`. The other types use `l = rank`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    var_count: usize,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    /// Standard positive roots:
    ///
    /// | type | roots |
    /// |------|-------|
    /// | A | `u_i - u_j`, `i < j` |
    /// | B | `u_i - u_j`, `u_i + u_j`, `u_i` |
    /// | C | `u_i - u_j`, `u_i + u_j`, `2 u_i` |
    /// | D | `u_i - u_j`, `u_i + u_j` |
    ///
    /// `D_1` is rejected. `D_2` is accepted and is `A_1 x A_1`.
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::precondition("rank must be at least 1"));
        }
        if kind == CartanType::D && rank < 2 {
            return Err(Error::precondition("type D needs rank at least 2"));
        }
        let var_count = if kind == CartanType::A { rank + 1 } else { rank };
        let unit = |i: usize, c: i64| {
            let mut v = vec![0; var_count];
            v[i] = c;
            v
        };
        let mut roots = Vec::new();
        for i in 0..var_count {
            for j in i + 1..var_count {
                let mut minus = unit(i, 1);
                minus[j] = -1;
                roots.push(minus);
                if kind != CartanType::A {
                    let mut plus = unit(i, 1);
                    plus[j] = 1;
                    roots.push(plus);
                }
            }
        }
        match kind {
            CartanType::B => roots.extend((0..var_count).map(|i| unit(i, 1))),
            CartanType::C => roots.extend((0..var_count).map(|i| unit(i, 2))),
            _ => {}
        }
        Ok(RootSystem { kind, rank, var_count, positive_roots: roots })
    }

    /// Same system with the opposite choice of positive roots.
    pub fn negated(&self) -> Self {
        RootSystem {
            positive_roots: self.positive_roots.iter().map(|r| r.iter().map(|c| -c).collect()).collect(),
            ..self.clone()
        }
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `|Δ+|`, which is also the complex dimension of `G/T`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Closed-form order of the Weyl group.
    /// Saturates at `u128::MAX`.
    pub fn weyl_order(&self) -> u128 {
        let n = self.var_count as u128;
        let fact = (1..=n).fold(1u128, |acc, i| acc.saturating_mul(i));
        let flips = match self.kind {
            CartanType::A => 0,
            CartanType::B | CartanType::C => n,
            CartanType::D => n - 1,
        };
        (0..flips).fold(fact, |acc, _| acc.saturating_mul(2))
    }

    /// The root as a linear form in a ring with this system's variable count.
    pub fn root_form(&self, root: &Root, prefix: VarPrefix) -> MultiPoly {
        MultiPoly::linear_form(Ring::new(self.var_count, prefix), root)
            .expect("root length matches variable count")
    }

    /// `prod_{α ∈ Δ+} α` in the given variables.
    pub fn root_product(&self, prefix: VarPrefix) -> MultiPoly {
        let ring = Ring::new(self.var_count, prefix);
        self.positive_roots.iter().fold(MultiPoly::one(ring), |acc, r| &acc * &self.root_form(r, prefix))
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}
