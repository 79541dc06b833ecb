use std::collections::BTreeMap;

use super::huang::potential_modes_from;
use super::{distinct_rows_for, method_rng, InitKind};
use crate::categorical::{hamming, DataPoint, Dataset};
use crate::error::{Error, Result};
use crate::stable_matching::{self, HrInstance};

/// The hospital-resident game between potential modes (residents, by
/// position) and their nearest rows (hospitals, by row index).
///
/// Each resident ranks the `k` distinct rows least dissimilar to it, nearest
/// first with ties to the lower row index. Every listed row gets capacity one
/// and ranks the residents that listed it, nearest first; ties go to the
/// lexicographically smaller potential mode and then to the lower position,
/// which keeps the outcome independent of the order of the residents.
pub fn matching_game(dataset: &Dataset, potential: &[DataPoint]) -> Result<HrInstance<usize, usize>> {
    let k = potential.len();
    let candidates = distinct_rows_for(dataset, k)?;
    for z in potential {
        dataset.space().validate(z)?;
    }

    let mut residents = Vec::with_capacity(k);
    let mut rankers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (r, z) in potential.iter().enumerate() {
        let mut keyed: Vec<(usize, usize)> = candidates.iter().map(|&i| (hamming(dataset.row(i), z), i)).collect();
        if keyed.len() > k {
            keyed.select_nth_unstable(k - 1);
            keyed.truncate(k);
        }
        keyed.sort_unstable();
        let prefs: Vec<usize> = keyed.into_iter().map(|(_, i)| i).collect();
        for &h in &prefs {
            rankers.entry(h).or_default().push(r);
        }
        residents.push((r, prefs));
    }

    let hospitals = rankers
        .into_iter()
        .map(|(h, mut rs)| {
            let row = dataset.row(h);
            rs.sort_by(|&a, &b| {
                (hamming(row, &potential[a]), &potential[a], a).cmp(&(hamming(row, &potential[b]), &potential[b], b))
            });
            (h, 1, rs)
        })
        .collect();
    HrInstance::new(residents, hospitals)
}

/// Replaces the potential modes by the rows they are matched to in the
/// resident-optimal stable matching of [`matching_game`].
pub fn matching_replace(dataset: &Dataset, potential: &[DataPoint]) -> Result<Vec<DataPoint>> {
    let game = matching_game(dataset, potential)?;
    let matching = stable_matching::solve(&game);
    debug_assert!(stable_matching::is_stable(&game, &matching)
        .map(|b| b.is_empty())
        .unwrap_or(false));
    (0..game.n_residents())
        .map(|r| {
            matching
                .hospital_of(r)
                .map(|h| dataset.point(*game.hospital(h)))
                .ok_or(Error::UnmatchedResident)
        })
        .collect()
}

/// The matching initialisation: Huang's potential modes replaced through a
/// stable matching instead of greedily.
pub fn matching_init(dataset: &Dataset, k: usize, seed: u64) -> Result<Vec<DataPoint>> {
    distinct_rows_for(dataset, k)?;
    let potential = potential_modes_from(dataset, k, &mut method_rng(seed, InitKind::Matching));
    matching_replace(dataset, &potential)
}
