use serde::Serialize;

use crate::categorical::Dataset;
use crate::error::{Error, Result};

const TOLERANCE: f64 = 1e-10;
const MAX_ITERATIONS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrincipalComponent {
    /// Projection of every centred row on the leading direction.
    pub scores: Vec<f64>,
    /// Unit leading eigenvector. Its largest-magnitude entry is positive, the
    /// first one when several tie to within 1e-6.
    pub loadings: Vec<f64>,
    /// Leading eigenvalue of the sample covariance matrix.
    pub eigenvalue: f64,
    /// Set when every column is constant, so there is no direction and the
    /// scores are all zero.
    pub degenerate: bool,
}

/// Leading principal component of the integer codes, by power iteration on
/// the sample covariance matrix.
pub fn first_principal_component(dataset: &Dataset) -> Result<PrincipalComponent> {
    let (n, m) = (dataset.n_rows(), dataset.n_attributes());
    if n < 2 {
        return Err(Error::TooFewValues { needed: 2, found: n });
    }
    let mut means = vec![0.0; m];
    for row in dataset.rows() {
        for (mu, &c) in means.iter_mut().zip(row) {
            *mu += c as f64;
        }
    }
    means.iter_mut().for_each(|mu| *mu /= n as f64);
    let centred: Vec<Vec<f64>> = dataset
        .rows()
        .map(|row| row.iter().zip(&means).map(|(&c, mu)| c as f64 - mu).collect())
        .collect();

    let mut cov = vec![vec![0.0; m]; m];
    for x in &centred {
        for (row, xa) in cov.iter_mut().zip(x) {
            for (c, xb) in row.iter_mut().zip(x) {
                *c += xa * xb;
            }
        }
    }
    cov.iter_mut().flatten().for_each(|c| *c /= (n - 1) as f64);

    if cov.iter().enumerate().all(|(j, r)| r[j] == 0.0) {
        log::warn!("all columns are constant; the first principal component is undefined");
        return Ok(PrincipalComponent {
            scores: vec![0.0; n],
            loadings: vec![0.0; m],
            eigenvalue: 0.0,
            degenerate: true,
        });
    }

    // A single fixed start fails whenever it happens to be orthogonal to the
    // leading direction, which integer-coded data makes easy to hit with
    // rational start vectors. Two unrelated starts are run and the larger
    // Rayleigh quotient kept.
    let logs: Vec<f64> = (0..m).map(|j| ((j + 2) as f64).ln()).collect();
    let widest = (0..m).fold(0, |b, j| if cov[j][j] > cov[b][b] { j } else { b });
    let mut v = [logs, cov[widest].clone()]
        .into_iter()
        .filter_map(|start| power_iteration(&cov, start))
        .max_by(|a, b| rayleigh(&cov, a).total_cmp(&rayleigh(&cov, b)))
        .expect("the widest column is a non-zero start in the column space");

    // magnitudes within 1e-6 of the largest count as tied; the first one wins
    let top = v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let lead = v.iter().position(|x| x.abs() >= top - 1e-6).unwrap_or(0);
    if v[lead] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    let eigenvalue = rayleigh(&cov, &v);
    let scores = centred.iter().map(|x| dot(x, &v)).collect();
    Ok(PrincipalComponent {
        scores,
        loadings: v,
        eigenvalue,
        degenerate: false,
    })
}

/// Unit vector reached from `v`, or `None` if the iteration collapses to
/// zero.
fn power_iteration(cov: &[Vec<f64>], mut v: Vec<f64>) -> Option<Vec<f64>> {
    if normalise(&mut v) == 0.0 {
        return None;
    }
    for _ in 0..MAX_ITERATIONS {
        let mut w = mat_vec(cov, &v);
        if normalise(&mut w) == 0.0 {
            return None;
        }
        let change = w.iter().zip(&v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        v = w;
        if change <= TOLERANCE {
            break;
        }
    }
    Some(v)
}

fn rayleigh(cov: &[Vec<f64>], v: &[f64]) -> f64 {
    dot(v, &mat_vec(cov, v))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn mat_vec(a: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    a.iter().map(|row| dot(row, v)).collect()
}

/// Scales `v` to unit length and returns its previous norm.
fn normalise(v: &mut [f64]) -> f64 {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}
