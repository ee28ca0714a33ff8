//! Exact localization computations.
//!
//! Integrals of characteristic classes over complete flag manifolds `G/T`
//! and complex Grassmannians are evaluated as finite sums over torus-fixed
//! points, with every summand a rational function of the equivariant
//! parameters `u_1, ..., u_l`. The sums are carried out in exact rational
//! arithmetic, so a statement like "this sum of fractions is the integer 1"
//! is checked by structural equality.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`]: polynomials, gcd, rational functions.
//! * [`symfun`]: elementary symmetric polynomials, the elementary basis, and
//!   a Pieri-rule Schubert calculus used as an independent check.
//! * [`weyl`]: classical root systems and their Weyl groups as signed
//!   permutations.
//! * [`localize`]: fixed-point sums over `G/T` and Grassmannians.
//! * [`gysin`]: pushforward along a complete flag bundle.
//! * [`expr`] and [`cli`]: polynomial input syntax and the `loccalc` tool.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod gysin;
pub mod localize;
pub mod symfun;
pub mod weyl;

pub use error::{Error, Result};

// The book's code blocks run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/flag-manifolds.md")]
    mod flag_manifolds {}
    #[doc = include_str!("../../../book/src/grassmannians.md")]
    mod grassmannians {}
    #[doc = include_str!("../../../book/src/gysin.md")]
    mod gysin {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    mod conventions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
