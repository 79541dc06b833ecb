use std::collections::HashSet;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;

use super::{distinct_rows_for, method_rng, InitKind};
use crate::categorical::{hamming, Code, DataPoint, Dataset};
use crate::error::Result;

/// `k` points of the attribute space whose coordinates are drawn
/// independently, attribute `j` with probability `n(a_s^(j)) / N`.
///
/// Uses the Huang stream for `seed`.
pub fn sample_potential_modes(dataset: &Dataset, k: usize, seed: u64) -> Vec<DataPoint> {
    potential_modes_from(dataset, k, &mut method_rng(seed, InitKind::Huang))
}

pub(crate) fn potential_modes_from<R: Rng + ?Sized>(dataset: &Dataset, k: usize, rng: &mut R) -> Vec<DataPoint> {
    let samplers: Vec<WeightedIndex<usize>> = dataset
        .frequency_table()
        .into_iter()
        .map(|counts| WeightedIndex::new(counts).expect("every observed category has a positive count"))
        .collect();
    (0..k)
        .map(|_| DataPoint::new(samplers.iter().map(|w| w.sample(rng) as Code).collect()))
        .collect()
}

/// Replaces each potential mode, in order, by the nearest row not already
/// chosen (lowest row index on ties).
pub fn huang_replace(dataset: &Dataset, potential: &[DataPoint]) -> Result<Vec<DataPoint>> {
    let candidates = distinct_rows_for(dataset, potential.len())?;
    let mut taken: HashSet<usize> = HashSet::with_capacity(potential.len());
    let mut modes = Vec::with_capacity(potential.len());
    for z in potential {
        let best = candidates
            .iter()
            .copied()
            .filter(|i| !taken.contains(i))
            .min_by_key(|&i| (hamming(dataset.row(i), z), i))
            .expect("k <= number of distinct rows");
        taken.insert(best);
        modes.push(dataset.point(best));
    }
    Ok(modes)
}

/// Huang's frequency-based initialisation.
pub fn huang_init(dataset: &Dataset, k: usize, seed: u64) -> Result<Vec<DataPoint>> {
    distinct_rows_for(dataset, k)?;
    let potential = sample_potential_modes(dataset, k, seed);
    huang_replace(dataset, &potential)
}
