use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::categorical::Dataset;
use crate::error::{Error, Result};

/// Which column of the file holds the class label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelColumn {
    /// Header name; needs a header row.
    Name(String),
    /// Zero-based column index.
    Index(usize),
    Last,
}

impl FromStr for LabelColumn {
    type Err = std::convert::Infallible;

    /// `last`, a zero-based index, or a header name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(if s.eq_ignore_ascii_case("last") {
            LabelColumn::Last
        } else if let Ok(i) = s.parse() {
            LabelColumn::Index(i)
        } else {
            LabelColumn::Name(s.to_string())
        })
    }
}

impl fmt::Display for LabelColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelColumn::Name(s) => f.write_str(s),
            LabelColumn::Index(i) => write!(f, "{i}"),
            LabelColumn::Last => f.write_str("last"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IngestOptions {
    pub missing_token: String,
    pub label_column: Option<LabelColumn>,
    pub has_header: bool,
    pub delimiter: u8,
}

impl Default for IngestOptions {
    fn default() -> Self {
        Self {
            missing_token: "?".into(),
            label_column: None,
            has_header: true,
            delimiter: b',',
        }
    }
}

/// Row and class counts before and after dropping incomplete rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    pub raw_n: usize,
    pub adjusted_n: usize,
    pub m: usize,
    /// Distinct labels, the missing token excepted.
    pub raw_classes: Option<usize>,
    pub adjusted_classes: Option<usize>,
    /// Zero-based indices of the dropped data rows, header excluded.
    pub dropped_rows: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Ingested {
    pub dataset: Dataset,
    /// Class label of every kept row, when a label column was given.
    pub labels: Option<Vec<String>>,
    pub report: IngestReport,
}

/// Reads a delimited file of categorical records.
///
/// Fields are trimmed and empty lines skipped. Any row with the missing
/// token in one of its cells, label included, is dropped. The label column
/// is kept apart from the attributes. The remaining rows keep their
/// original positions as row ids.
pub fn load_dataset(path: &Path, options: &IngestOptions) -> Result<Ingested> {
    let fail = |reason: String| Error::Ingest {
        path: path.to_path_buf(),
        reason,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(options.has_header)
        .delimiter(options.delimiter)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| fail(e.to_string()))?;

    let header: Option<Vec<String>> = if options.has_header {
        let h = reader.headers().map_err(|e| fail(e.to_string()))?;
        Some(h.iter().map(str::to_string).collect())
    } else {
        None
    };

    let mut records: Vec<Vec<String>> = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| fail(e.to_string()))?;
        let fields: Vec<String> = rec.iter().map(str::to_string).collect();
        if let Some(first) = records.first() {
            if fields.len() != first.len() {
                return Err(fail(format!(
                    "data row {i} has {} fields, expected {}",
                    fields.len(),
                    first.len()
                )));
            }
        }
        records.push(fields);
    }
    let width = match (records.first(), &header) {
        (Some(r), _) => r.len(),
        (None, Some(h)) => h.len(),
        (None, None) => 0,
    };
    if let Some(h) = &header {
        if !records.is_empty() && h.len() != width {
            return Err(fail(format!("header has {} fields, rows have {width}", h.len())));
        }
    }

    let label_idx = match &options.label_column {
        None => None,
        Some(LabelColumn::Index(i)) if *i < width => Some(*i),
        Some(LabelColumn::Last) if width > 0 => Some(width - 1),
        Some(LabelColumn::Name(name)) => match header.as_ref().and_then(|h| h.iter().position(|c| c == name)) {
            Some(i) => Some(i),
            None => return Err(fail(format!("unknown label column {name:?}"))),
        },
        Some(other) => return Err(fail(format!("unknown label column {other}"))),
    };
    if width == 0 || width == usize::from(label_idx.is_some()) {
        return Err(fail("no attribute columns".into()));
    }

    let raw_n = records.len();
    let raw_classes = label_idx.map(|l| {
        records
            .iter()
            .map(|r| &r[l])
            .filter(|c| **c != options.missing_token)
            .collect::<BTreeSet<_>>()
            .len()
    });

    let mut dropped = Vec::new();
    let mut ids = Vec::new();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut labels = Vec::new();
    for (i, mut rec) in records.into_iter().enumerate() {
        if rec.contains(&options.missing_token) {
            dropped.push(i);
            continue;
        }
        if let Some(l) = label_idx {
            labels.push(rec.remove(l));
        }
        ids.push(i);
        rows.push(rec);
    }
    if rows.is_empty() {
        return Err(fail("no complete rows".into()));
    }

    let adjusted_classes = label_idx.map(|_| labels.iter().collect::<BTreeSet<_>>().len());
    let dataset = Dataset::from_labels_with_ids(&rows, Some(ids)).map_err(|e| fail(e.to_string()))?;
    let report = IngestReport {
        raw_n,
        adjusted_n: dataset.n_rows(),
        m: dataset.n_attributes(),
        raw_classes,
        adjusted_classes,
        dropped_rows: dropped,
    };
    Ok(Ingested {
        dataset,
        labels: label_idx.map(|_| labels),
        report,
    })
}
