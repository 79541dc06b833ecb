//! Integer-coded categorical data and the measures k-modes is built on.

mod dataset;
mod measures;
mod mode;
mod space;

pub use dataset::Dataset;
pub(crate) use measures::hamming;
pub use measures::{cost_of, densities, density, density_numerators, dissimilarity, summed_dissimilarity};
pub use mode::{mode_of, ClusterProfile};
pub use space::{AttributeSpace, Code, DataPoint};
