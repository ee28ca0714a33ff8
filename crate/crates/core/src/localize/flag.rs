use rayon::prelude::*;

use crate::algebra::{MultiPoly, RatFun, Ring, VarPrefix};
use crate::error::{Error, Result};
use crate::weyl::{RootSystem, WeylElement, WeylElements};

/// `∫_{G/T} f(y_1, ..., y_l)` for a root system and an integrand in `y`.
#[derive(Clone, Debug)]
pub struct FlagIntegralProblem {
    root_system: RootSystem,
    integrand: MultiPoly,
}

impl FlagIntegralProblem {
    pub fn new(root_system: RootSystem, integrand: MultiPoly) -> Result<Self> {
        let expected = Ring::new(root_system.var_count(), VarPrefix::Y);
        if integrand.ring() != expected {
            return Err(Error::IncompatibleRings {
                left: expected.to_string(),
                right: integrand.ring().to_string(),
            });
        }
        Ok(FlagIntegralProblem { root_system, integrand })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn integrand(&self) -> &MultiPoly {
        &self.integrand
    }

    /// Complex dimension of `G/T`, i.e. `|Δ+|`.
    pub fn dim_over_two(&self) -> usize {
        self.root_system.num_positive_roots()
    }
}

/// Restriction of `p(ỹ)` to the fixed point `w`: `y_i -> w·u_i`.
pub fn restrict_at_fixed_point(w: &WeylElement, p: &MultiPoly) -> Result<MultiPoly> {
    w.act_on_poly(&p.rename(VarPrefix::U))
}

/// Equivariant Euler class of the normal space at `w`: `w·prod_{α∈Δ+} α`.
pub fn euler_class_at_fixed_point(w: &WeylElement, rs: &RootSystem) -> Result<MultiPoly> {
    if !w.belongs_to(rs) {
        return Err(Error::precondition(format!("{w} is not in the Weyl group of {rs}")));
    }
    w.act_on_poly(&rs.root_product(VarPrefix::U))
}

/// Adds rational functions pairwise in parallel. The canonical form makes
/// the total independent of the grouping.
pub(crate) fn parallel_sum(terms: Vec<RatFun>, ring: Ring) -> Result<RatFun> {
    terms.into_par_iter().map(Ok).try_reduce(|| RatFun::zero(ring), |a, b| a.try_add(&b))
}

/// `sum_{w∈W} w·f(u) / w·prod_{α∈Δ+} α`, reduced to a polynomial in `u`.
///
/// A constant when `deg f = |Δ+|`, zero when `deg f < |Δ+|`, and the
/// equivariant pushforward (a polynomial in `u`) when `deg f > |Δ+|`.
pub fn flag_integral(problem: &FlagIntegralProblem) -> Result<MultiPoly> {
    let rs = &problem.root_system;
    let f = problem.integrand.rename(VarPrefix::U);
    let euler = rs.root_product(VarPrefix::U);
    let elements: Vec<WeylElement> = WeylElements::new(rs).collect();
    let summands = elements
        .par_iter()
        .map(|w| RatFun::new(w.act_on_poly(&f)?, w.act_on_poly(&euler)?))
        .collect::<Result<Vec<_>>>()?;
    let total = parallel_sum(summands, f.ring())?;
    total.as_poly().map_err(|e| match e {
        Error::NotAPolynomial(den) => {
            Error::invariant(format!("fixed-point sum over {rs} left denominator {den}"))
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::weyl::CartanType;

    fn y(n: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(Ring::new(n, VarPrefix::Y), i).unwrap()
    }

    fn u(n: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(Ring::new(n, VarPrefix::U), i).unwrap()
    }

    #[test]
    fn restriction() {
        let p = &y(2, 1).pow(2) * &y(2, 2);
        let id = WeylElement::identity(2);
        assert_eq!(restrict_at_fixed_point(&id, &p).unwrap(), &u(2, 1).pow(2) * &u(2, 2));
        let s = WeylElement::transposition(2, 1, 2);
        assert_eq!(restrict_at_fixed_point(&s, &y(2, 1)).unwrap(), u(2, 2));
        let c = MultiPoly::integer(Ring::new(2, VarPrefix::Y), 3);
        assert_eq!(restrict_at_fixed_point(&s, &c).unwrap(), c.rename(VarPrefix::U));
    }

    #[test]
    fn euler_classes() {
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        let e = euler_class_at_fixed_point(&WeylElement::identity(3), &a2).unwrap();
        let (u1, u2, u3) = (u(3, 1), u(3, 2), u(3, 3));
        assert_eq!(e, &(&(&u1 - &u2) * &(&u1 - &u3)) * &(&u2 - &u3));

        let a1 = RootSystem::new(CartanType::A, 1).unwrap();
        let s = WeylElement::transposition(2, 1, 2);
        assert_eq!(euler_class_at_fixed_point(&s, &a1).unwrap(), &u(2, 2) - &u(2, 1));

        let b2 = RootSystem::new(CartanType::B, 2).unwrap();
        for w in WeylElements::new(&b2) {
            let e = euler_class_at_fixed_point(&w, &b2).unwrap();
            assert!(e.is_homogeneous());
            assert_eq!(e.total_degree(), Some(4));
        }
        assert!(euler_class_at_fixed_point(&WeylElement::sign_flip(2, 1), &a1).is_err());
    }

    #[test]
    fn projective_line() {
        let a1 = RootSystem::new(CartanType::A, 1).unwrap();
        let p = FlagIntegralProblem::new(a1.clone(), y(2, 1)).unwrap();
        assert!(flag_integral(&p).unwrap().is_one());
        let one = MultiPoly::one(Ring::new(2, VarPrefix::Y));
        let p = FlagIntegralProblem::new(a1, one).unwrap();
        assert!(flag_integral(&p).unwrap().is_zero());
    }

    #[test]
    fn top_class_counts_fixed_points() {
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        let top = a2.root_product(VarPrefix::Y);
        let p = FlagIntegralProblem::new(a2, top).unwrap();
        assert_eq!(flag_integral(&p).unwrap().constant_value(), Some(rat(6)));
    }

    #[test]
    fn over_degree_gives_equivariant_polynomial() {
        // on CP^1, y1^2 pushes forward to u1 + u2
        let a1 = RootSystem::new(CartanType::A, 1).unwrap();
        let p = FlagIntegralProblem::new(a1, y(2, 1).pow(2)).unwrap();
        assert_eq!(flag_integral(&p).unwrap(), &u(2, 1) + &u(2, 2));
    }

    #[test]
    fn integrand_ring_is_checked() {
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        assert!(FlagIntegralProblem::new(a2.clone(), y(2, 1)).is_err());
        assert!(FlagIntegralProblem::new(a2, u(3, 1)).is_err());
    }
}
