//! Classical root systems and their Weyl groups.
//!
//! Weyl group elements index the torus-fixed points of `G/T`, and act on the
//! equivariant parameters `u_i` by signed permutations.

mod group;
mod roots;

pub use group::{WeylElement, WeylElements};
pub use roots::{CartanType, Root, RootSystem};
