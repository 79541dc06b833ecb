//! Choosing `k`: the range to search, a cost-versus-`k` curve, and Kneedle
//! knee detection on that curve.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::categorical::Dataset;
use crate::error::{Error, Result};
use crate::init::{self, InitKind};

/// Final cost as a function of `k`, with strictly increasing `k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CostCurve {
    points: Vec<(usize, f64)>,
}

impl CostCurve {
    pub fn new(points: Vec<(usize, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidCurve(format!("{} points, need at least 2", points.len())));
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidCurve("k values must be strictly increasing".into()));
        }
        if points.iter().any(|p| !p.1.is_finite()) {
            return Err(Error::InvalidCurve("costs must be finite".into()));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(usize, f64)] {
        &self.points
    }

    pub fn ks(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().map(|p| p.0)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The search range `[2, floor(sqrt(N))]`.
pub fn k_bounds(n: usize) -> Result<RangeInclusive<usize>> {
    if n < 9 {
        return Err(Error::TooFewRowsForKRange { n });
    }
    Ok(2..=n.isqrt())
}

/// Final cost for each `k` in `k_range`.
///
/// Cao is run once per `k`; a seeded method is run `reps` times with seeds
/// `base_seed + r` and the lowest final cost is kept. Points are computed in
/// parallel.
pub fn build_cost_curve(
    dataset: &Dataset,
    k_range: RangeInclusive<usize>,
    kind: InitKind,
    reps: usize,
    base_seed: u64,
    max_iterations: usize,
) -> Result<CostCurve> {
    if reps == 0 {
        return Err(Error::Config("reps must be at least 1".into()));
    }
    let runs = if kind.is_deterministic() { 1 } else { reps };
    let ks: Vec<usize> = k_range.collect();
    let points = ks
        .par_iter()
        .map(|&k| {
            let mut best = u64::MAX;
            for r in 0..runs {
                let method = kind.with_seed(base_seed.wrapping_add(r as u64));
                best = best.min(init::run(dataset, k, &method, max_iterations)?.final_cost);
            }
            Ok((k, best as f64))
        })
        .collect::<Result<Vec<_>>>()?;
    CostCurve::new(points)
}

/// Why [`knee`] fell back instead of reporting a confirmed knee.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KneeWarning {
    /// Only two points, so there is no interior point to choose.
    TooFewPoints,
    /// Every cost is equal.
    FlatCurve,
    /// No local maximum of the difference curve passed the threshold test;
    /// the global maximum was used.
    Unconfirmed,
}

impl fmt::Display for KneeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KneeWarning::TooFewPoints => "curve has only two points; returning the smallest k",
            KneeWarning::FlatCurve => "curve is flat; returning the smallest k",
            KneeWarning::Unconfirmed => "no knee passed the threshold; returning the maximum of the difference curve",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KneeResult {
    pub k: usize,
    pub warning: Option<KneeWarning>,
}

/// Normalised difference curve `(1 - y_norm) - x_norm` of a decreasing
/// convex curve. `None` when either axis has zero range.
pub fn difference_curve(curve: &CostCurve) -> Option<Vec<f64>> {
    let pts = curve.points();
    let (x0, x1) = (pts[0].0 as f64, pts[pts.len() - 1].0 as f64);
    let (lo, hi) = pts.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
        (lo.min(p.1), hi.max(p.1))
    });
    if hi <= lo || x1 <= x0 {
        return None;
    }
    Some(
        pts.iter()
            .map(|&(k, c)| (1.0 - (c - lo) / (hi - lo)) - (k as f64 - x0) / (x1 - x0))
            .collect(),
    )
}

/// Kneedle with sensitivity 1 and no smoothing.
///
/// A local maximum `i` of the difference curve becomes a candidate with
/// threshold `diff[i] - mean(dx)`; it is confirmed as the knee once the curve
/// drops strictly below that threshold before a new local maximum appears.
pub fn knee(curve: &CostCurve) -> KneeResult {
    let smallest = curve.points()[0].0;
    if curve.len() < 3 {
        log::warn!("{}", KneeWarning::TooFewPoints);
        return KneeResult {
            k: smallest,
            warning: Some(KneeWarning::TooFewPoints),
        };
    }
    let Some(diff) = difference_curve(curve) else {
        log::warn!("{}", KneeWarning::FlatCurve);
        return KneeResult {
            k: smallest,
            warning: Some(KneeWarning::FlatCurve),
        };
    };
    let n = diff.len();
    // x is normalised to [0, 1], so the mean step is 1 / (n - 1)
    let step = 1.0 / (n - 1) as f64;

    let mut candidate: Option<(usize, f64)> = None;
    for i in 1..n {
        if i + 1 < n && diff[i - 1] < diff[i] && diff[i] >= diff[i + 1] {
            candidate = Some((i, diff[i] - step));
            continue;
        }
        if let Some((c, threshold)) = candidate {
            if diff[i] < threshold {
                return KneeResult {
                    k: curve.points()[c].0,
                    warning: None,
                };
            }
        }
    }

    let best = (0..n).fold(0, |b, i| if diff[i] > diff[b] { i } else { b });
    log::warn!("{}", KneeWarning::Unconfirmed);
    KneeResult {
        k: curve.points()[best].0,
        warning: Some(KneeWarning::Unconfirmed),
    }
}
