use super::space::{AttributeSpace, Code, DataPoint};
use crate::error::{Error, Result};

/// Chooses a most frequent category.
///
/// Keeps `incumbent` when it is among the maximal counts, otherwise returns
/// the lowest maximal code.
fn most_frequent(counts: &[u32], incumbent: Option<Code>) -> Code {
    let max = counts.iter().copied().max().unwrap_or(0);
    if let Some(c) = incumbent {
        if counts.get(c as usize) == Some(&max) {
            return c;
        }
    }
    counts.iter().position(|&n| n == max).unwrap_or(0) as Code
}

/// A point minimising the summed dissimilarity to `rows`.
///
/// Attribute-wise majority; when several categories tie for the majority the
/// one already held by `current` is kept, otherwise the lowest code wins.
pub fn mode_of<'a, I>(rows: I, space: &AttributeSpace, current: Option<&[Code]>) -> Result<DataPoint>
where
    I: IntoIterator<Item = &'a [Code]>,
{
    if let Some(c) = current {
        space.validate(c)?;
    }
    let mut counts: Vec<Vec<u32>> = space.sizes().into_iter().map(|d| vec![0; d]).collect();
    let mut size = 0usize;
    for row in rows {
        space.validate(row)?;
        for (j, &c) in row.iter().enumerate() {
            counts[j][c as usize] += 1;
        }
        size += 1;
    }
    if size == 0 {
        return Err(Error::EmptyCluster);
    }
    Ok(DataPoint::new(
        counts
            .iter()
            .enumerate()
            .map(|(j, col)| most_frequent(col, current.map(|c| c[j])))
            .collect(),
    ))
}

/// Per-attribute category counts of one cluster and its current mode, kept up
/// to date in `O(m)` per insertion.
#[derive(Clone, Debug)]
pub struct ClusterProfile {
    counts: Vec<Vec<u32>>,
    size: usize,
    mode: DataPoint,
}

impl ClusterProfile {
    /// Empty cluster whose mode starts at `seed` (or all zeros).
    pub fn new(space: &AttributeSpace, seed: Option<DataPoint>) -> Self {
        let counts: Vec<Vec<u32>> = space.sizes().into_iter().map(|d| vec![0; d]).collect();
        let mode = seed.unwrap_or_else(|| DataPoint::new(vec![0; counts.len()]));
        Self { counts, size: 0, mode }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn mode(&self) -> &DataPoint {
        &self.mode
    }

    /// Summed dissimilarity of the members to the current mode.
    pub fn cost(&self) -> u64 {
        self.mode
            .iter()
            .zip(&self.counts)
            .map(|(&c, counts)| (self.size as u64) - counts[c as usize] as u64)
            .sum()
    }

    pub fn add(&mut self, row: &[Code]) {
        self.size += 1;
        let mut mode = std::mem::take(&mut self.mode).into_vec();
        for (j, &c) in row.iter().enumerate() {
            let counts = &mut self.counts[j];
            counts[c as usize] += 1;
            // only the incremented category can overtake the incumbent
            if counts[c as usize] > counts[mode[j] as usize] {
                mode[j] = c;
            }
        }
        self.mode = DataPoint::new(mode);
    }

    pub fn remove(&mut self, row: &[Code]) {
        debug_assert!(self.size > 0);
        self.size -= 1;
        let mut mode = std::mem::take(&mut self.mode).into_vec();
        for (j, &c) in row.iter().enumerate() {
            let counts = &mut self.counts[j];
            debug_assert!(counts[c as usize] > 0);
            counts[c as usize] -= 1;
            if c == mode[j] {
                mode[j] = most_frequent(counts, Some(c));
            }
        }
        self.mode = DataPoint::new(mode);
    }
}
