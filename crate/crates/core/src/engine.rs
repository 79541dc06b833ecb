//! The k-modes refinement loop.
//!
//! Rows are visited in dataset order and modes are updated after every single
//! insertion or move, so the outcome is a pure function of the row order and
//! the initial modes.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::Instant;

use serde::Serialize;

use crate::categorical::{hamming, ClusterProfile, Code, DataPoint, Dataset};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ITERATIONS: usize = 100;

/// A partition of the rows into `k` clusters together with their modes.
#[derive(Clone, Debug)]
pub struct Clustering {
    assignment: Vec<usize>,
    members: Vec<BTreeSet<usize>>,
    profiles: Vec<ClusterProfile>,
}

impl Clustering {
    pub fn k(&self) -> usize {
        self.profiles.len()
    }

    /// Cluster index of every row.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn members(&self, l: usize) -> &BTreeSet<usize> {
        &self.members[l]
    }

    pub fn mode(&self, l: usize) -> &DataPoint {
        self.profiles[l].mode()
    }

    pub fn modes(&self) -> Vec<DataPoint> {
        self.profiles.iter().map(|p| p.mode().clone()).collect()
    }

    /// Total within-cluster dissimilarity, read off the per-cluster counts.
    pub fn cost(&self) -> u64 {
        self.profiles.iter().map(ClusterProfile::cost).sum()
    }

    /// Checks that the member sets partition `0..n`, agree with the
    /// assignment vector, and that no cluster is empty.
    pub fn check_integrity(&self, n: usize) -> Result<()> {
        if self.assignment.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: self.assignment.len(),
            });
        }
        let k = self.k();
        let mut total = 0;
        for (l, set) in self.members.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::DegenerateInitialisation { cluster: l });
            }
            if set.len() != self.profiles[l].len() {
                return Err(Error::InvalidDataset(format!(
                    "cluster {l} has {} members but counts for {}",
                    set.len(),
                    self.profiles[l].len()
                )));
            }
            for &i in set {
                if self.assignment.get(i) != Some(&l) {
                    return Err(Error::Unassigned { row: i, k });
                }
            }
            total += set.len();
        }
        if total != n {
            return Err(Error::InvalidDataset(format!(
                "member sets cover {total} rows out of {n}"
            )));
        }
        Ok(())
    }

    fn closest(&self, x: &[Code]) -> (usize, usize) {
        let mut best = (0, usize::MAX);
        for (l, p) in self.profiles.iter().enumerate() {
            let d = hamming(x, p.mode());
            if d < best.1 {
                best = (l, d);
            }
        }
        best
    }
}

/// Outcome of one k-modes run.
#[derive(Clone, Debug)]
pub struct FitResult {
    pub clustering: Clustering,
    pub initial_cost: u64,
    pub final_cost: u64,
    /// Passes of the refinement loop; the initial assignment is not counted.
    pub n_iterations: usize,
    /// False when the run stopped at `max_iterations` with points still moving.
    pub converged: bool,
    /// Cost after the initial assignment followed by the cost after each pass.
    pub cost_trace: Vec<u64>,
    pub elapsed_seconds: f64,
    pub seed: Option<u64>,
    pub init_label: String,
}

/// Summary of a [`FitResult`] without the clustering itself.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitMetrics {
    pub initial_cost: u64,
    pub final_cost: u64,
    pub n_iterations: usize,
    pub converged: bool,
}

impl FitResult {
    pub fn metrics(&self) -> FitMetrics {
        FitMetrics {
            initial_cost: self.initial_cost,
            final_cost: self.final_cost,
            n_iterations: self.n_iterations,
            converged: self.converged,
        }
    }
}

/// Index of the mode closest to `x`; the lowest index wins ties.
///
/// # Panics
/// If `modes` is empty.
pub fn select_closest(x: &[Code], modes: &[DataPoint]) -> usize {
    assert!(!modes.is_empty(), "select_closest needs at least one mode");
    let mut best = (0, usize::MAX);
    for (l, z) in modes.iter().enumerate() {
        let d = hamming(x, z);
        if d < best.1 {
            best = (l, d);
        }
    }
    best.0
}

fn validate_initial_modes(dataset: &Dataset, modes: &[DataPoint]) -> Result<()> {
    let n = dataset.n_rows();
    let k = modes.len();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let mut seen: HashMap<&[Code], usize> = HashMap::with_capacity(k);
    for (l, z) in modes.iter().enumerate() {
        dataset.space().validate(z)?;
        if let Some(&first) = seen.get(z.as_slice()) {
            return Err(Error::DuplicateModes { first, second: l });
        }
        seen.insert(z.as_slice(), l);
    }
    let rows: HashSet<&[Code]> = dataset.rows().collect();
    if let Some(l) = modes.iter().position(|z| !rows.contains(z.as_slice())) {
        return Err(Error::ModeNotInDataset { index: l });
    }
    Ok(())
}

/// Assigns every row, in order, to its closest current mode and updates that
/// mode straight away.
pub fn initial_assignment(dataset: &Dataset, initial_modes: &[DataPoint]) -> Result<Clustering> {
    validate_initial_modes(dataset, initial_modes)?;
    let space = dataset.space();
    let mut clustering = Clustering {
        assignment: Vec::with_capacity(dataset.n_rows()),
        members: vec![BTreeSet::new(); initial_modes.len()],
        profiles: initial_modes
            .iter()
            .map(|z| ClusterProfile::new(space, Some(z.clone())))
            .collect(),
    };
    for (i, row) in dataset.rows().enumerate() {
        let (l, _) = clustering.closest(row);
        clustering.assignment.push(l);
        clustering.members[l].insert(i);
        clustering.profiles[l].add(row);
    }
    if let Some(l) = clustering.members.iter().position(BTreeSet::is_empty) {
        return Err(Error::DegenerateInitialisation { cluster: l });
    }
    Ok(clustering)
}

/// One pass over the rows. A row moves when another mode is strictly closer
/// than its own; a move that would empty its source cluster is skipped.
/// Returns the number of moves.
pub fn iterate(dataset: &Dataset, clustering: &mut Clustering) -> usize {
    let mut moved = 0;
    for (i, row) in dataset.rows().enumerate() {
        let from = clustering.assignment[i];
        let (to, d_to) = clustering.closest(row);
        if to == from || d_to >= hamming(row, clustering.profiles[from].mode()) {
            continue;
        }
        if clustering.members[from].len() == 1 {
            continue;
        }
        clustering.members[from].remove(&i);
        clustering.members[to].insert(i);
        clustering.assignment[i] = to;
        clustering.profiles[from].remove(row);
        clustering.profiles[to].add(row);
        moved += 1;
    }
    moved
}

/// Runs k-modes from the given initial modes until a pass moves no point or
/// `max_iterations` passes have run.
pub fn fit(dataset: &Dataset, initial_modes: &[DataPoint], max_iterations: usize) -> Result<FitResult> {
    if max_iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    let start = Instant::now();
    let mut clustering = initial_assignment(dataset, initial_modes)?;
    let initial_cost = clustering.cost();
    let mut cost_trace = vec![initial_cost];
    let mut n_iterations = 0;
    let mut converged = false;
    while n_iterations < max_iterations {
        n_iterations += 1;
        let moved = iterate(dataset, &mut clustering);
        cost_trace.push(clustering.cost());
        if moved == 0 {
            converged = true;
            break;
        }
    }
    if !converged {
        log::warn!("k-modes stopped after {max_iterations} passes without converging");
    }
    let final_cost = clustering.cost();
    Ok(FitResult {
        clustering,
        initial_cost,
        final_cost,
        n_iterations,
        converged,
        cost_trace,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        seed: None,
        init_label: String::new(),
    })
}
