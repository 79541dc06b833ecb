use serde::Serialize;

use crate::error::{Error, Result};

/// Spread and shape of a score vector.
///
/// Skewness and kurtosis are the plain moment ratios `m3 / m2^1.5` and
/// `m4 / m2^2 - 3`, without small-sample correction. Quantiles interpolate
/// linearly between order statistics.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComponentSummary {
    pub variance: f64,
    pub skewness: f64,
    pub kurtosis: f64,
    pub iqr: f64,
    pub lower_decile: f64,
    pub upper_decile: f64,
}

impl ComponentSummary {
    pub const HEADER: [&'static str; 6] = [
        "variance",
        "skewness",
        "kurtosis",
        "iqr",
        "lower_decile",
        "upper_decile",
    ];

    pub fn values(&self) -> [f64; 6] {
        [
            self.variance,
            self.skewness,
            self.kurtosis,
            self.iqr,
            self.lower_decile,
            self.upper_decile,
        ]
    }
}

pub fn summarize_component(scores: &[f64]) -> Result<ComponentSummary> {
    let n = scores.len();
    if n < 2 {
        return Err(Error::TooFewValues { needed: 2, found: n });
    }
    let nf = n as f64;
    let mean = scores.iter().sum::<f64>() / nf;
    let moment = |p: i32| scores.iter().map(|x| (x - mean).powi(p)).sum::<f64>() / nf;
    let (m2, m3, m4) = (moment(2), moment(3), moment(4));
    let (skewness, kurtosis) = if m2 > 0.0 {
        (m3 / m2.powf(1.5), m4 / (m2 * m2) - 3.0)
    } else {
        (0.0, 0.0)
    };

    let mut sorted = scores.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(ComponentSummary {
        variance: m2 * nf / (nf - 1.0),
        skewness,
        kurtosis,
        iqr: quantile(&sorted, 0.75) - quantile(&sorted, 0.25),
        lower_decile: quantile(&sorted, 0.1),
        upper_decile: quantile(&sorted, 0.9),
    })
}

/// Quantile `p` of sorted, non-empty data, interpolating linearly between
/// the order statistics at `(n - 1) p`.
pub fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    match sorted.get(lo + 1) {
        Some(&next) => sorted[lo] + (h - lo as f64) * (next - sorted[lo]),
        None => sorted[lo],
    }
}
