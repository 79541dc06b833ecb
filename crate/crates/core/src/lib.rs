//! k-modes clustering for categorical data.
//!
//! The crate provides the k-modes refinement loop together with four ways of
//! choosing the initial modes:
//!
//! * uniform random sampling of dataset rows,
//! * Huang's frequency-weighted potential modes, replaced greedily by their
//!   nearest rows,
//! * Cao's density-times-separation selection,
//! * a matching initialisation that replaces Huang's greedy step with a
//!   resident-optimal solution of a hospital-resident game between the
//!   potential modes and their nearest rows.
//!
//! Around those sit a general hospital-resident solver, knee-point selection
//! of `k`, a seeded experiment harness and a few dataset-analysis helpers.
//!
//! ```
//! use kmodes_core::{engine, init::{self, InitMethod}, Dataset};
//!
//! let data = Dataset::from_labels(&[
//!     vec!["red", "small"],
//!     vec!["red", "small"],
//!     vec!["blue", "large"],
//!     vec!["blue", "large"],
//! ])?;
//! let modes = init::initial_modes(&data, 2, &InitMethod::Cao)?;
//! let fit = engine::fit(&data, &modes, 100)?;
//! assert_eq!(fit.final_cost, 0);
//! # Ok::<(), kmodes_core::Error>(())
//! ```

pub mod analysis;
pub mod categorical;
pub mod engine;
mod error;
pub mod harness;
pub mod init;
pub mod selection;
pub mod stable_matching;

pub use categorical::{AttributeSpace, Code, DataPoint, Dataset};
pub use engine::{Clustering, FitResult};
pub use error::{Error, Result};
