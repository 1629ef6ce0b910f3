//! Independent high-accuracy path: compensated summation, double-double
//! arithmetic, double-double ψ and series evaluation.

mod dd;
mod digamma;
mod series;
mod sum;

pub use dd::{ext_add, ext_div, ext_mul, quick_two_sum, two_prod, two_sum, ExtendedReal};
pub use digamma::ext_digamma;
pub use series::{sum_extended, ExtendedSeries};
pub use sum::{compensated_sum, Neumaier};

use crate::error::{Error, Result};
use crate::identities::{self, LhsForm, ParamPoint};

/// Re-evaluates the left-hand side of a catalog entry in extended precision.
pub fn oracle_sum(id: &str, point: &ParamPoint, max_terms: usize) -> Result<ExtendedReal> {
    let entry = identities::lookup(id)?;
    entry.validate_point(point)?;
    match entry.lhs {
        LhsForm::Series(build) => {
            let r = sum_extended(&build(point)?, max_terms)?;
            if r.converged {
                Ok(r.value)
            } else {
                Err(Error::NonConvergence { terms: r.terms_used })
            }
        }
        LhsForm::Custom(_) => Err(Error::Unsupported(format!("{id} has no extended-precision path"))),
    }
}
