//! Fixed-point localization on `G/T` and on Grassmannians.

mod evaluation;
mod flag;
mod grassmann;

pub use evaluation::{
    check_flag_integral, check_grassmann, euler_characteristic, euler_characteristic_by_evaluation,
    flag_integral_by_evaluation, flag_sum_at, grassmann_sum_at, random_point, EVALUATION_POINTS,
};
pub use flag::{euler_class_at_fixed_point, flag_integral, restrict_at_fixed_point, FlagIntegralProblem};
pub use grassmann::{
    grassmann_summand, grassmannian_chern_number, subsets, ChernNumber, GrassmannProblem, Subset,
};
