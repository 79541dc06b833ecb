use super::distinct_rows_for;
use crate::categorical::{density_numerators, hamming, DataPoint, Dataset};
use crate::error::Result;

/// Cao's density-based initialisation.
///
/// The first mode is the densest row. Each further mode is the row that
/// maximises `Dens(x) * min_l d(x, z_l)` over the modes chosen so far.
/// Densities share the denominator `mN`, so the products are compared on
/// the integer numerators; ties go to the lowest row index.
pub fn cao_init(dataset: &Dataset, k: usize) -> Result<Vec<DataPoint>> {
    distinct_rows_for(dataset, k)?;
    let dens = density_numerators(dataset);
    let n = dataset.n_rows();

    let first = argmax(dens.iter().copied());
    let mut chosen = vec![first];
    let mut nearest: Vec<u64> = (0..n)
        .map(|i| hamming(dataset.row(i), dataset.row(first)) as u64)
        .collect();

    while chosen.len() < k {
        let next = argmax((0..n).map(|i| dens[i] * nearest[i]));
        debug_assert!(nearest[next] > 0, "k <= distinct rows keeps the best score positive");
        chosen.push(next);
        for (i, d) in nearest.iter_mut().enumerate() {
            *d = (*d).min(hamming(dataset.row(i), dataset.row(next)) as u64);
        }
    }
    Ok(chosen.into_iter().map(|i| dataset.point(i)).collect())
}

/// Index of the first maximum.
fn argmax(values: impl Iterator<Item = u64>) -> usize {
    let mut best = (0, None);
    for (i, v) in values.enumerate() {
        if best.1.is_none_or(|b| v > b) {
            best = (i, Some(v));
        }
    }
    best.0
}
