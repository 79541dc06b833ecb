//! Hospital-resident games and their resident-optimal stable matching.
//!
//! The module knows nothing about clustering: players are arbitrary ids.

mod audit;
mod instance;
mod solver;

pub use audit::{check_valid, enumerate_stable, is_stable, ENUMERATION_LIMIT};
pub use instance::{HrInstance, Matching};
pub use solver::solve;
