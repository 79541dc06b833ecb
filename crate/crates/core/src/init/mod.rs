//! Choice of the initial modes.
//!
//! Every method returns `k` rows of the dataset with pairwise distinct
//! values. The seeded methods draw from a ChaCha20 stream keyed by the seed
//! and a per-method stream id, so a `(dataset, k, seed)` triple always yields
//! the same modes.

mod cao;
mod huang;
mod matching;
mod random;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::categorical::{DataPoint, Dataset};
use crate::engine::{self, FitResult};
use crate::error::{Error, Result};

pub use cao::cao_init;
pub use huang::{huang_init, huang_replace, sample_potential_modes};
pub use matching::{matching_game, matching_init, matching_replace};
pub use random::random_init;

/// Which initialiser to use, with its seed where it takes one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InitMethod {
    Random { seed: u64 },
    Huang { seed: u64 },
    Cao,
    Matching { seed: u64 },
}

/// Initialiser name without a seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InitKind {
    Random,
    Huang,
    Cao,
    Matching,
}

impl InitKind {
    pub const ALL: [InitKind; 4] = [InitKind::Random, InitKind::Huang, InitKind::Cao, InitKind::Matching];

    pub fn label(self) -> &'static str {
        match self {
            InitKind::Random => "random",
            InitKind::Huang => "huang",
            InitKind::Cao => "cao",
            InitKind::Matching => "matching",
        }
    }

    pub fn is_deterministic(self) -> bool {
        self == InitKind::Cao
    }

    /// The method with `seed` attached (ignored by Cao).
    pub fn with_seed(self, seed: u64) -> InitMethod {
        match self {
            InitKind::Random => InitMethod::Random { seed },
            InitKind::Huang => InitMethod::Huang { seed },
            InitKind::Cao => InitMethod::Cao,
            InitKind::Matching => InitMethod::Matching { seed },
        }
    }

    fn stream(self) -> u64 {
        match self {
            InitKind::Random => 1,
            InitKind::Huang => 2,
            InitKind::Cao => 0,
            InitKind::Matching => 3,
        }
    }
}

impl fmt::Display for InitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "random" => Ok(InitKind::Random),
            "huang" => Ok(InitKind::Huang),
            "cao" => Ok(InitKind::Cao),
            "matching" => Ok(InitKind::Matching),
            other => Err(Error::Config(format!("unknown initialisation method {other:?}"))),
        }
    }
}

impl InitMethod {
    pub fn kind(&self) -> InitKind {
        match self {
            InitMethod::Random { .. } => InitKind::Random,
            InitMethod::Huang { .. } => InitKind::Huang,
            InitMethod::Cao => InitKind::Cao,
            InitMethod::Matching { .. } => InitKind::Matching,
        }
    }

    pub fn label(&self) -> &'static str {
        self.kind().label()
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            InitMethod::Random { seed } | InitMethod::Huang { seed } | InitMethod::Matching { seed } => Some(seed),
            InitMethod::Cao => None,
        }
    }
}

/// The random stream for one seeded initialisation call.
pub(crate) fn method_rng(seed: u64, kind: InitKind) -> ChaCha20Rng {
    stream_rng(seed, kind.stream())
}

pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Row indices of the first occurrence of each distinct value, failing when
/// there are fewer than `k` of them.
pub(crate) fn distinct_rows_for(dataset: &Dataset, k: usize) -> Result<Vec<usize>> {
    if k == 0 || k > dataset.n_rows() {
        return Err(Error::InvalidK { k, n: dataset.n_rows() });
    }
    let distinct = dataset.distinct_row_indices();
    if k > distinct.len() {
        return Err(Error::TooFewDistinctRows {
            k,
            distinct: distinct.len(),
        });
    }
    Ok(distinct)
}

/// Initial modes for `k` clusters.
pub fn initial_modes(dataset: &Dataset, k: usize, method: &InitMethod) -> Result<Vec<DataPoint>> {
    match *method {
        InitMethod::Random { seed } => random_init(dataset, k, seed),
        InitMethod::Huang { seed } => huang_init(dataset, k, seed),
        InitMethod::Cao => cao_init(dataset, k),
        InitMethod::Matching { seed } => matching_init(dataset, k, seed),
    }
}

/// Initialises and fits in one go. `elapsed_seconds` covers both steps.
pub fn run(dataset: &Dataset, k: usize, method: &InitMethod, max_iterations: usize) -> Result<FitResult> {
    let start = Instant::now();
    let modes = initial_modes(dataset, k, method)?;
    let mut result = engine::fit(dataset, &modes, max_iterations)?;
    result.elapsed_seconds = start.elapsed().as_secs_f64();
    result.seed = method.seed();
    result.init_label = method.label().to_string();
    Ok(result)
}
