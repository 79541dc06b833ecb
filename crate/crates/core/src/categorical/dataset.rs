use std::collections::{HashMap, HashSet};

use super::space::{AttributeSpace, Code, DataPoint};
use crate::error::{Error, Result};

/// An integer-coded `N x m` categorical matrix.
///
/// Rows are stored contiguously. `row_ids` keeps the index each row had in its
/// source (before rows with missing values were dropped).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    space: AttributeSpace,
    codes: Vec<Code>,
    n: usize,
    row_ids: Vec<usize>,
}

impl Dataset {
    /// Builds a dataset from already-coded rows.
    ///
    /// Every category of `space` must occur in at least one row.
    pub fn new(space: AttributeSpace, rows: Vec<DataPoint>, row_ids: Option<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDataset("a dataset needs at least one row".into()));
        }
        let m = space.m();
        let n = rows.len();
        let row_ids = match row_ids {
            Some(ids) if ids.len() != n => {
                return Err(Error::InvalidDataset(format!(
                    "{} row ids given for {n} rows",
                    ids.len()
                )))
            }
            Some(ids) => ids,
            None => (0..n).collect(),
        };
        let mut codes = Vec::with_capacity(n * m);
        let mut seen: Vec<Vec<bool>> = space.sizes().into_iter().map(|d| vec![false; d]).collect();
        for row in &rows {
            space.validate(row)?;
            for (j, &c) in row.iter().enumerate() {
                seen[j][c as usize] = true;
            }
            codes.extend_from_slice(row);
        }
        for (j, s) in seen.iter().enumerate() {
            if let Some(c) = s.iter().position(|&b| !b) {
                return Err(Error::InvalidDataset(format!(
                    "category {:?} of attribute {j} never occurs",
                    space.label(j, c as Code).unwrap_or_default()
                )));
            }
        }
        Ok(Self {
            space,
            codes,
            n,
            row_ids,
        })
    }

    /// Codes string records attribute-wise in first-appearance order.
    pub fn from_labels<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        Self::from_labels_with_ids(rows, None)
    }

    pub fn from_labels_with_ids<S: AsRef<str>>(rows: &[Vec<S>], row_ids: Option<Vec<usize>>) -> Result<Self> {
        let m = match rows.first() {
            Some(r) => r.len(),
            None => return Err(Error::InvalidDataset("a dataset needs at least one row".into())),
        };
        if m == 0 {
            return Err(Error::InvalidSpace("at least one attribute is required".into()));
        }
        let mut labels: Vec<Vec<String>> = vec![Vec::new(); m];
        let mut maps: Vec<HashMap<&str, Code>> = vec![HashMap::new(); m];
        let mut coded = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidDataset(format!(
                    "row {i} has {} fields, expected {m}",
                    row.len()
                )));
            }
            let point: Vec<Code> = row
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let v = v.as_ref();
                    *maps[j].entry(v).or_insert_with(|| {
                        labels[j].push(v.to_string());
                        (labels[j].len() - 1) as Code
                    })
                })
                .collect();
            coded.push(DataPoint::new(point));
        }
        Self::new(AttributeSpace::new(labels)?, coded, row_ids)
    }

    /// Codes integer rows as labels, so the codes of the result are renumbered
    /// in first-appearance order.
    pub fn from_code_rows(rows: &[Vec<Code>]) -> Result<Self> {
        let labels: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        Self::from_labels(&labels)
    }

    pub fn space(&self) -> &AttributeSpace {
        &self.space
    }

    /// Number of rows, `N`.
    pub fn n_rows(&self) -> usize {
        self.n
    }

    /// Number of attributes, `m`.
    pub fn n_attributes(&self) -> usize {
        self.space.m()
    }

    pub fn row(&self, i: usize) -> &[Code] {
        let m = self.space.m();
        &self.codes[i * m..(i + 1) * m]
    }

    pub fn get(&self, i: usize) -> Result<&[Code]> {
        if i >= self.n {
            return Err(Error::RowOutOfRange { index: i, n: self.n });
        }
        Ok(self.row(i))
    }

    pub fn point(&self, i: usize) -> DataPoint {
        DataPoint::from(self.row(i))
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Code]> + '_ {
        self.codes.chunks_exact(self.space.m())
    }

    pub fn row_ids(&self) -> &[usize] {
        &self.row_ids
    }

    /// Category counts `n(a_s)` for attribute `j`, indexed by code.
    pub fn frequencies(&self, j: usize) -> Result<Vec<usize>> {
        let m = self.space.m();
        if j >= m {
            return Err(Error::AttributeOutOfRange { index: j, m });
        }
        let mut counts = vec![0usize; self.space.size(j)];
        for row in self.rows() {
            counts[row[j] as usize] += 1;
        }
        Ok(counts)
    }

    pub fn relative_frequencies(&self, j: usize) -> Result<Vec<f64>> {
        let n = self.n as f64;
        Ok(self.frequencies(j)?.into_iter().map(|c| c as f64 / n).collect())
    }

    /// Counts for every attribute.
    pub fn frequency_table(&self) -> Vec<Vec<usize>> {
        let mut table: Vec<Vec<usize>> = self.space.sizes().into_iter().map(|d| vec![0; d]).collect();
        for row in self.rows() {
            for (j, &c) in row.iter().enumerate() {
                table[j][c as usize] += 1;
            }
        }
        table
    }

    /// Index of the first occurrence of every distinct row, in row order.
    pub fn distinct_row_indices(&self) -> Vec<usize> {
        let mut seen = HashSet::with_capacity(self.n);
        (0..self.n).filter(|&i| seen.insert(self.row(i))).collect()
    }

    pub fn n_distinct_rows(&self) -> usize {
        self.rows().collect::<HashSet<_>>().len()
    }

    pub fn contains(&self, point: &[Code]) -> bool {
        self.rows().any(|r| r == point)
    }
}
