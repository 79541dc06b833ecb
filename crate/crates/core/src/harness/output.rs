use std::fs;
use std::path::Path;

use serde::Serialize;

use super::{ecdf, summarize, IngestReport, RunRecord, SummaryRow};
use crate::error::Result;
use crate::selection::CostCurve;

pub const RECORDS_FILE: &str = "records.csv";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const ECDF_INITIAL_FILE: &str = "ecdf_initial.csv";
pub const ECDF_FINAL_FILE: &str = "ecdf_final.csv";
pub const SCATTER_FILE: &str = "scatter.csv";
pub const INGEST_FILE: &str = "ingest.json";
pub const COST_CURVE_FILE: &str = "cost_curve.csv";
pub const KNEE_FILE: &str = "knee.json";

/// Writes the six files of a run directory, creating it if needed.
pub fn write_run_outputs(dir: &Path, records: &[RunRecord], report: &IngestReport) -> Result<()> {
    fs::create_dir_all(dir)?;
    write_records(&dir.join(RECORDS_FILE), records)?;
    write_summary(&dir.join(SUMMARY_FILE), &summarize(records)?)?;
    write_ecdf(&dir.join(ECDF_INITIAL_FILE), records, |r| r.initial_cost)?;
    write_ecdf(&dir.join(ECDF_FINAL_FILE), records, |r| r.final_cost)?;
    write_scatter(&dir.join(SCATTER_FILE), records)?;
    write_json(&dir.join(INGEST_FILE), report)
}

pub fn write_records(path: &Path, records: &[RunRecord]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary(path: &Path, rows: &[SummaryRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(SummaryRow::HEADER)?;
    for row in rows {
        w.write_record(row.cells())?;
    }
    w.flush()?;
    Ok(())
}

/// `init,value,fraction`, one step function per initialiser.
pub fn write_ecdf(path: &Path, records: &[RunRecord], metric: fn(&RunRecord) -> u64) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["init", "value", "fraction"])?;
    for row in summarize(records)? {
        let values: Vec<f64> = records
            .iter()
            .filter(|r| r.init_label == row.init_label)
            .map(|r| metric(r) as f64)
            .collect();
        for (v, f) in ecdf(&values)? {
            w.write_record([row.init_label.clone(), v.to_string(), f.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Initial against final cost for every record.
pub fn write_scatter(path: &Path, records: &[RunRecord]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["init", "seed", "initial_cost", "final_cost"])?;
    for r in records {
        w.write_record([
            r.init_label.clone(),
            r.seed.map(|s| s.to_string()).unwrap_or_default(),
            r.initial_cost.to_string(),
            r.final_cost.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_cost_curve(path: &Path, curve: &CostCurve) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["k", "cost"])?;
    for &(k, c) in curve.points() {
        w.write_record([k.to_string(), c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}
