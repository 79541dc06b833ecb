//! Instruments for comparing datasets: the Cao-versus-matching fitness, a
//! uniform random dataset sampler, and summaries of the first principal
//! component of the integer codes.

mod component;
mod fitness;
mod pca;

pub use component::{quantile, summarize_component, ComponentSummary};
pub use fitness::{fitness, fitness_with, sample_random_dataset, FitnessReport, FITNESS_K};
pub use pca::{first_principal_component, PrincipalComponent};
