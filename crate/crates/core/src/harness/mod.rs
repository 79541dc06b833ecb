//! Ingestion, seeded repetition experiments and their output files.

mod experiment;
mod ingest;
pub mod output;
mod summary;

pub use experiment::{run_experiment, Experiment, RunRecord};
pub use ingest::{load_dataset, IngestOptions, IngestReport, Ingested, LabelColumn};
pub use summary::{ecdf, summarize, MeanStd, SummaryRow};
