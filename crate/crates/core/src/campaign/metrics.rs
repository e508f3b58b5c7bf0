use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rl::EpisodeMetrics;

/// Delivered bits per joule of expended energy.
pub fn energy_efficiency(throughput_bits: f64, total_energy_j: f64) -> Result<f64> {
    if !(total_energy_j > 0.0 && total_energy_j.is_finite()) {
        return Err(Error::Domain(format!("energy efficiency needs positive energy (got {total_energy_j})")));
    }
    if !(throughput_bits >= 0.0 && throughput_bits.is_finite()) {
        return Err(Error::Domain(format!("throughput must be non-negative (got {throughput_bits})")));
    }
    Ok(throughput_bits / total_energy_j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Throughput,
    Harvest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionsToTarget {
    Reached(u32),
    NotReached,
}

impl ActionsToTarget {
    pub fn reached(self) -> Option<u32> {
        match self {
            ActionsToTarget::Reached(n) => Some(n),
            ActionsToTarget::NotReached => None,
        }
    }
}

/// 1-based index of the first step whose cumulative quantity reaches `target`.
pub fn actions_to_target(metrics: &EpisodeMetrics, target: f64, quantity: Quantity) -> Result<ActionsToTarget> {
    if !(target > 0.0 && target.is_finite()) {
        return Err(Error::Domain(format!("target must be positive (got {target})")));
    }
    let trace = match quantity {
        Quantity::Throughput => &metrics.throughput_trace,
        Quantity::Harvest => &metrics.harvest_trace,
    };
    let mut total = 0.0;
    for (i, v) in trace.iter().enumerate() {
        total += v;
        if total >= target {
            return Ok(ActionsToTarget::Reached(i as u32 + 1));
        }
    }
    Ok(ActionsToTarget::NotReached)
}

pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample standard deviation; 0 for fewer than two values.
pub fn std_dev(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    (values.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (values.len() - 1) as f64).sqrt()
}

/// Percentile bootstrap interval for the mean.
pub fn bootstrap_mean_ci(values: &[f64], resamples: usize, level: f64, seed: u64) -> Result<(f64, f64)> {
    if values.is_empty() || resamples == 0 || !(level > 0.0 && level < 1.0) {
        return Err(Error::Domain("bootstrap needs data, resamples >= 1 and level in (0,1)".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = values.len();
    let mut means: Vec<f64> = (0..resamples)
        .map(|_| (0..n).map(|_| values[rng.random_range(0..n)]).sum::<f64>() / n as f64)
        .collect();
    means.sort_by(f64::total_cmp);
    let tail = (1.0 - level) / 2.0;
    let pick = |q: f64| {
        let idx = (q * (resamples - 1) as f64).round() as usize;
        means[idx.min(resamples - 1)]
    };
    Ok((pick(tail), pick(1.0 - tail)))
}
