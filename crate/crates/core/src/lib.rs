//! Numerical verification of finite and infinite sums of digamma-weighted
//! hypergeometric terms.

pub mod cli;
pub mod error;
pub mod grid;
pub mod hyper;
pub mod identities;
pub mod oracle;
pub mod report;
pub mod specfun;

pub use error::{Error, Result};
