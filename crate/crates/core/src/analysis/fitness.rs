use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::categorical::{Code, Dataset};
use crate::engine::DEFAULT_MAX_ITERATIONS;
use crate::error::{Error, Result};
use crate::init::{self, stream_rng, InitMethod};

pub const FITNESS_K: usize = 3;

const SAMPLER_STREAM: u64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FitnessReport {
    pub c_cao: u64,
    pub c_match: u64,
    /// `c_cao - c_match`; negative when matching found the cheaper clustering.
    pub fitness: i64,
    pub reps_used: usize,
    pub k: usize,
}

/// Cao's final cost minus the best final cost of `reps` matching runs, at
/// `k = 3`. Matching run `r` uses seed `seed + r`.
pub fn fitness(dataset: &Dataset, reps: usize, seed: u64) -> Result<FitnessReport> {
    fitness_with(dataset, FITNESS_K, reps, seed, DEFAULT_MAX_ITERATIONS)
}

pub fn fitness_with(
    dataset: &Dataset,
    k: usize,
    reps: usize,
    seed: u64,
    max_iterations: usize,
) -> Result<FitnessReport> {
    if reps == 0 {
        return Err(Error::Config("reps must be at least 1".into()));
    }
    let c_cao = init::run(dataset, k, &InitMethod::Cao, max_iterations)?.final_cost;
    let c_match = (0..reps)
        .into_par_iter()
        .map(|r| {
            let method = InitMethod::Matching {
                seed: seed.wrapping_add(r as u64),
            };
            init::run(dataset, k, &method, max_iterations).map(|f| f.final_cost)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("reps >= 1");
    Ok(FitnessReport {
        c_cao,
        c_match,
        fitness: c_cao as i64 - c_match as i64,
        reps_used: reps,
        k,
    })
}

/// `n_rows` rows with independent uniform cells, attribute `j` drawn from
/// `sizes[j]` categories. Categories that never come up are not part of
/// the resulting space.
pub fn sample_random_dataset(n_rows: usize, sizes: &[usize], seed: u64) -> Result<Dataset> {
    if n_rows == 0 || sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidDataset(
            "need at least one row, one attribute and one category per attribute".into(),
        ));
    }
    let mut rng = stream_rng(seed, SAMPLER_STREAM);
    let rows: Vec<Vec<Code>> = (0..n_rows)
        .map(|_| sizes.iter().map(|&d| rng.random_range(0..d) as Code).collect())
        .collect();
    Dataset::from_code_rows(&rows)
}
