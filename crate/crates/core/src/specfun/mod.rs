//! Real-argument special functions: Γ in signed-log form, ψ, ψ′, harmonic
//! numbers, Pochhammer symbols, complete and incomplete beta, and the
//! β(z) = ½[ψ((z+1)/2) - ψ(z/2)] notation.

mod beta;
mod digamma;
mod gamma;
mod pochhammer;

pub use beta::{beta_fn, incomplete_beta, scaled_incomplete_beta};
pub use digamma::{digamma, harmonic, prudnikov_beta, prudnikov_beta_prime, trigamma, EULER_GAMMA};
pub use gamma::{
    check_pole, gamma, gamma_ratio, log_gamma_signed, pi_cot_pi, pole_distance, sin_cos_pi, SignedLogValue, POLE_GUARD,
};
pub use pochhammer::{pochhammer, pochhammer_deriv, pochhammer_log, reciprocal_pochhammer_deriv};
