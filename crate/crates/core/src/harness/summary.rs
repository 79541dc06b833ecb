use serde::Serialize;

use super::RunRecord;
use crate::error::{Error, Result};

/// Sample mean and standard deviation (`n - 1` denominator; 0 when `n = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MeanStd {
    pub mean: f64,
    pub std: f64,
}

impl MeanStd {
    pub fn of(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::TooFewValues { needed: 1, found: 0 });
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let std = if values.len() == 1 {
            0.0
        } else {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        };
        Ok(Self { mean, std })
    }

    /// `mean (std)` with two and three decimals.
    pub fn cell(&self) -> String {
        format!("{:.2} ({:.3})", self.mean, self.std)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub init_label: String,
    pub initial_cost: MeanStd,
    pub final_cost: MeanStd,
    pub n_iterations: MeanStd,
    pub time: MeanStd,
}

impl SummaryRow {
    pub const HEADER: [&'static str; 5] = ["init", "initial_cost", "final_cost", "n_iterations", "time"];

    pub fn cells(&self) -> [String; 5] {
        [
            self.init_label.clone(),
            self.initial_cost.cell(),
            self.final_cost.cell(),
            self.n_iterations.cell(),
            self.time.cell(),
        ]
    }
}

/// One row per initialiser, in order of first appearance.
pub fn summarize(records: &[RunRecord]) -> Result<Vec<SummaryRow>> {
    if records.is_empty() {
        return Err(Error::TooFewValues { needed: 1, found: 0 });
    }
    let mut labels: Vec<&str> = Vec::new();
    for r in records {
        if !labels.contains(&r.init_label.as_str()) {
            labels.push(&r.init_label);
        }
    }
    labels
        .into_iter()
        .map(|label| {
            let group: Vec<&RunRecord> = records.iter().filter(|r| r.init_label == label).collect();
            let stat = |f: fn(&RunRecord) -> f64| MeanStd::of(&group.iter().map(|r| f(r)).collect::<Vec<_>>());
            Ok(SummaryRow {
                init_label: label.to_string(),
                initial_cost: stat(|r| r.initial_cost as f64)?,
                final_cost: stat(|r| r.final_cost as f64)?,
                n_iterations: stat(|r| r.n_iterations as f64)?,
                time: stat(|r| r.elapsed_seconds)?,
            })
        })
        .collect()
}

/// Empirical distribution function as `(value, fraction <= value)` steps
/// over the sorted distinct values.
pub fn ecdf(values: &[f64]) -> Result<Vec<(f64, f64)>> {
    if values.is_empty() {
        return Err(Error::TooFewValues { needed: 1, found: 0 });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let mut steps: Vec<(f64, f64)> = Vec::new();
    for (i, &v) in sorted.iter().enumerate() {
        if i + 1 == n || sorted[i + 1] != v {
            steps.push((v, (i + 1) as f64 / n as f64));
        }
    }
    Ok(steps)
}
