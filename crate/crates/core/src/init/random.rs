use std::collections::HashSet;

use rand::seq::SliceRandom;

use super::{distinct_rows_for, method_rng, InitKind};
use crate::categorical::{DataPoint, Dataset};
use crate::error::Result;

/// `k` rows drawn uniformly without replacement, skipping rows whose value
/// was already drawn.
pub fn random_init(dataset: &Dataset, k: usize, seed: u64) -> Result<Vec<DataPoint>> {
    distinct_rows_for(dataset, k)?;
    let mut rng = method_rng(seed, InitKind::Random);
    let mut order: Vec<usize> = (0..dataset.n_rows()).collect();
    order.shuffle(&mut rng);
    let mut seen = HashSet::with_capacity(k);
    Ok(order
        .into_iter()
        .filter(|&i| seen.insert(dataset.row(i)))
        .take(k)
        .map(|i| dataset.point(i))
        .collect())
}
