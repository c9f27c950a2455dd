//! Numeric and regularized stuffle characters: integer zeta values,
//! polyzetas, the γ-character through stuffle regularization, the exponent
//! series ℓ_k and the eulerian functions Γ_{y_k}^{-1} with their zero sets
//! and reflection formula.

mod consts;
mod eulerian;
mod mzv;
mod regularize;

pub use consts::{bernoulli, euler_gamma, zeta_bigfloat, zeta_even_over_pi_pow, zeta_int, CharacterValue};
pub use eulerian::{
    ell, inv_gamma_yk, predicted_zeros, reflection_check, reflection_check_pair, root_set_g,
    symmetrize, EvalMode, ReflectionReport,
};
pub use mzv::{h_numeric, mzv};
pub use regularize::{
    gamma_char, gamma_char_hat, gamma_char_poly_coeffs, stuffle_regularize,
    stuffle_regularize_by_solve, stuffle_regularize_poly, zeta_equal_letter, RegularizedValue,
};

pub use crate::bigc::PrecisionContext;
