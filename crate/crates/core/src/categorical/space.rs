use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer code of a category within one attribute.
pub type Code = u32;

/// The product of the per-attribute category sets.
///
/// Attribute `j` has `size(j)` categories coded `0..size(j)`, each with a
/// distinct label. The code order is the order in which labels were first
/// seen during ingestion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttributeSpace {
    categories: Vec<Vec<String>>,
    lookup: Vec<HashMap<String, Code>>,
}

impl AttributeSpace {
    pub fn new(categories: Vec<Vec<String>>) -> Result<Self> {
        if categories.is_empty() {
            return Err(Error::InvalidSpace("at least one attribute is required".into()));
        }
        let mut lookup = Vec::with_capacity(categories.len());
        for (j, labels) in categories.iter().enumerate() {
            if labels.is_empty() {
                return Err(Error::InvalidSpace(format!("attribute {j} has no categories")));
            }
            if labels.len() > Code::MAX as usize {
                return Err(Error::InvalidSpace(format!("attribute {j} has too many categories")));
            }
            let mut map = HashMap::with_capacity(labels.len());
            for (code, label) in labels.iter().enumerate() {
                if map.insert(label.clone(), code as Code).is_some() {
                    return Err(Error::InvalidSpace(format!(
                        "attribute {j} repeats the label {label:?}"
                    )));
                }
            }
            lookup.push(map);
        }
        Ok(Self { categories, lookup })
    }

    /// Space whose labels are the decimal codes themselves.
    pub fn with_sizes(sizes: &[usize]) -> Result<Self> {
        Self::new(sizes.iter().map(|&d| (0..d).map(|c| c.to_string()).collect()).collect())
    }

    /// Number of attributes, `m`.
    pub fn m(&self) -> usize {
        self.categories.len()
    }

    pub fn size(&self, j: usize) -> usize {
        self.categories[j].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.categories.iter().map(Vec::len).collect()
    }

    pub fn labels(&self, j: usize) -> &[String] {
        &self.categories[j]
    }

    pub fn label(&self, j: usize, code: Code) -> Option<&str> {
        self.categories.get(j)?.get(code as usize).map(String::as_str)
    }

    pub fn code(&self, j: usize, label: &str) -> Option<Code> {
        self.lookup.get(j)?.get(label).copied()
    }

    /// Number of points in the space, saturating at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        self.categories
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    pub fn validate(&self, codes: &[Code]) -> Result<()> {
        if codes.len() != self.m() {
            return Err(Error::LengthMismatch {
                expected: self.m(),
                found: codes.len(),
            });
        }
        for (j, &code) in codes.iter().enumerate() {
            if code as usize >= self.size(j) {
                return Err(Error::InvalidCode {
                    attribute: j,
                    code,
                    size: self.size(j),
                });
            }
        }
        Ok(())
    }

    pub fn encode<S: AsRef<str>>(&self, labels: &[S]) -> Result<DataPoint> {
        if labels.len() != self.m() {
            return Err(Error::LengthMismatch {
                expected: self.m(),
                found: labels.len(),
            });
        }
        labels
            .iter()
            .enumerate()
            .map(|(j, l)| {
                self.code(j, l.as_ref()).ok_or_else(|| {
                    Error::InvalidSpace(format!("label {:?} is not a category of attribute {j}", l.as_ref()))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(DataPoint)
    }

    pub fn decode(&self, point: &[Code]) -> Result<Vec<&str>> {
        self.validate(point)?;
        Ok(point
            .iter()
            .enumerate()
            .map(|(j, &c)| self.categories[j][c as usize].as_str())
            .collect())
    }
}

/// An `m`-tuple of attribute codes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DataPoint(Vec<Code>);

impl DataPoint {
    pub fn new(codes: Vec<Code>) -> Self {
        Self(codes)
    }

    pub fn as_slice(&self) -> &[Code] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Code> {
        self.0
    }
}

impl Deref for DataPoint {
    type Target = [Code];

    fn deref(&self) -> &[Code] {
        &self.0
    }
}

impl From<Vec<Code>> for DataPoint {
    fn from(codes: Vec<Code>) -> Self {
        Self(codes)
    }
}

impl From<&[Code]> for DataPoint {
    fn from(codes: &[Code]) -> Self {
        Self(codes.to_vec())
    }
}

impl fmt::Display for DataPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
