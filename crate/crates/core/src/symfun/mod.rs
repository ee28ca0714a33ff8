//! Symmetric functions: elementary symmetric polynomials, rewriting in the
//! elementary basis, and a Pieri-rule Schubert calculus on Grassmannians.

mod elementary;
mod schubert;

pub use elementary::{elementary_symmetric, is_symmetric, symmetry_witness, to_elementary_basis, EBasisPoly};
pub use schubert::{
    chern_monomial_integral, dual_pieri_product, pieri_product, schubert_integral, Partition, SchubertClass,
};
