//! Coverage probabilities for the AUV's downward cone: analytic cone volume,
//! Monte-Carlo volume of the cone clipped to the deployment cube, binomial
//! node-count distribution, and start-position sweeps checked against
//! simulated deployments.

use std::f64::consts::PI;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::env::{EnvConfig, Environment};
use crate::error::{Error, Result};
use crate::geometry::{Cone, Cube, Point3};
use crate::seed::derive_seed;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConeGeometry {
    pub apex: Point3,
    pub apex_angle_deg: f64,
    pub height_h: f64,
    pub base_radius_r: f64,
}

impl ConeGeometry {
    pub fn new(apex: Point3, apex_angle_deg: f64, height_h: f64) -> Self {
        let base_radius_r = height_h * (apex_angle_deg.to_radians() / 2.0).tan();
        Self {
            apex,
            apex_angle_deg,
            height_h,
            base_radius_r,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.apex_angle_deg > 0.0 && self.apex_angle_deg < 180.0) {
            return Err(Error::Domain(format!("apex angle {} outside (0, 180)", self.apex_angle_deg)));
        }
        if !(self.height_h >= 0.0) || !(self.base_radius_r >= 0.0) {
            return Err(Error::Domain("cone height and radius must be non-negative".into()));
        }
        let expected = self.height_h * (self.apex_angle_deg.to_radians() / 2.0).tan();
        if (expected - self.base_radius_r).abs() > 1e-9 * expected.max(1.0) {
            return Err(Error::Domain(format!(
                "base radius {} inconsistent with angle and height (expected {expected})",
                self.base_radius_r
            )));
        }
        Ok(())
    }

    fn cone(&self) -> Cone {
        Cone::new(self.apex, self.apex_angle_deg, self.height_h)
    }
}

/// `V = π·r²·h / 3`.
pub fn cone_volume(geom: &ConeGeometry) -> f64 {
    if geom.height_h <= 0.0 {
        return 0.0;
    }
    PI * geom.base_radius_r * geom.base_radius_r * geom.height_h / 3.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeEstimate {
    pub volume: f64,
    pub std_error: f64,
}

/// Monte-Carlo volume of `cone ∩ cube`.
///
/// Points are drawn uniformly from the cone's bounding box clipped to the
/// cube, which contains the whole intersection, so the hit fraction times the
/// box volume is unbiased.
pub fn clipped_cone_volume_mc(geom: &ConeGeometry, cube: &Cube, samples: usize, seed: u64) -> Result<VolumeEstimate> {
    if samples < 1000 {
        return Err(Error::Domain(format!("need at least 1000 samples, got {samples}")));
    }
    geom.validate()?;
    let r = geom.base_radius_r;
    let lo = [
        (geom.apex.x - r).max(0.0),
        (geom.apex.y - r).max(0.0),
        geom.apex.z.max(0.0),
    ];
    let hi = [
        (geom.apex.x + r).min(cube.length),
        (geom.apex.y + r).min(cube.width),
        (geom.apex.z + geom.height_h).min(cube.height),
    ];
    let extent = [hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]];
    if extent.iter().any(|e| *e <= 0.0) {
        return Ok(VolumeEstimate {
            volume: 0.0,
            std_error: 0.0,
        });
    }
    let box_volume = extent[0] * extent[1] * extent[2];
    let cone = geom.cone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..samples)
        .filter(|_| {
            let p = Point3::new(
                lo[0] + rng.random::<f64>() * extent[0],
                lo[1] + rng.random::<f64>() * extent[1],
                lo[2] + rng.random::<f64>() * extent[2],
            );
            cone.contains(&p)
        })
        .count();
    let frac = hits as f64 / samples as f64;
    Ok(VolumeEstimate {
        volume: box_volume * frac,
        std_error: box_volume * (frac * (1.0 - frac) / samples as f64).sqrt(),
    })
}

fn check_binomial(n: u32, p: f64, k: u32) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("probability {p} outside [0, 1]")));
    }
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

fn binomial_coefficient(n: u32, k: u32) -> f64 {
    let k = k.min(n - k);
    (1..=k).fold(1.0, |c, i| c * (n - k + i) as f64 / i as f64)
}

fn pmf_unchecked(n: u32, p: f64, k: u32) -> f64 {
    binomial_coefficient(n, k) * p.powi(k as i32) * (1.0 - p).powi((n - k) as i32)
}

/// Probability that exactly `k` of `n` uniformly placed nodes fall in a region
/// holding fraction `p` of the volume.
pub fn coverage_pmf(n: u32, p: f64, k: u32) -> Result<f64> {
    check_binomial(n, p, k)?;
    Ok(pmf_unchecked(n, p, k))
}

/// Probability of covering `k` or more nodes.
pub fn coverage_tail(n: u32, p: f64, k: u32) -> Result<f64> {
    check_binomial(n, p, k)?;
    if k == 0 {
        return Ok(1.0);
    }
    Ok((k..=n).map(|i| pmf_unchecked(n, p, i)).sum::<f64>().min(1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n_values: Vec<u32>,
    pub start_grid: Vec<[i32; 2]>,
    pub k_values: Vec<u32>,
    pub trials: usize,
    pub volume_samples: usize,
    pub seed: u64,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            n_values: vec![10, 25, 50],
            start_grid: vec![[50, 50], [25, 25], [50, 0], [0, 0]],
            k_values: vec![1, 2, 3, 4],
            trials: 2000,
            volume_samples: 400_000,
            seed: 7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub start_x: i32,
    pub start_y: i32,
    pub n: u32,
    pub k: u32,
    /// Tail probability using the cube-clipped cone volume.
    pub p_analytic: f64,
    /// Fraction of simulated deployments covering at least `k` nodes.
    pub p_empirical: f64,
    /// Standard error of `p_empirical − p_analytic`.
    pub stderr: f64,
    /// Tail probability using the unclipped cone volume.
    pub p_unclipped: f64,
}

/// For every start column, node count and threshold `k`, compares the
/// binomial tail against the empirical frequency over seeded deployments.
pub fn coverage_sweep(config: &EnvConfig, spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    if spec.trials < 100 {
        return Err(Error::config(format!("coverage sweep needs >= 100 trials, got {}", spec.trials)));
    }
    if spec.n_values.is_empty() || spec.start_grid.is_empty() || spec.k_values.is_empty() {
        return Err(Error::config("coverage sweep needs non-empty n_values, start_grid and k_values"));
    }
    let cube = config.cube();
    let angle = config.auv.cone_apex_angle_deg;

    let mut rows = Vec::new();
    for (si, &[sx, sy]) in spec.start_grid.iter().enumerate() {
        let geom = ConeGeometry::new(Point3::new(sx as f64, sy as f64, 0.0), angle, cube.height);
        let clipped = clipped_cone_volume_mc(&geom, &cube, spec.volume_samples, derive_seed(spec.seed, &[si as u64]))?;
        let p_clip = (clipped.volume / cube.volume()).clamp(0.0, 1.0);
        let p_clip_se = clipped.std_error / cube.volume();
        let p_full = (cone_volume(&geom) / cube.volume()).clamp(0.0, 1.0);

        for &n in &spec.n_values {
            let counts = covered_counts(config, [sx, sy], n, spec)?;
            for &k in &spec.k_values {
                let (p_analytic, p_unclipped, analytic_se) = if k > n {
                    (0.0, 0.0, 0.0)
                } else {
                    let h = 1e-6;
                    let up = coverage_tail(n, (p_clip + h).min(1.0), k)?;
                    let down = coverage_tail(n, (p_clip - h).max(0.0), k)?;
                    let slope = (up - down) / (2.0 * h);
                    (coverage_tail(n, p_clip, k)?, coverage_tail(n, p_full, k)?, slope.abs() * p_clip_se)
                };
                let hits = counts.iter().filter(|&&c| c >= k as usize).count();
                let p_empirical = hits as f64 / spec.trials as f64;
                let sampling = p_analytic * (1.0 - p_analytic) / spec.trials as f64;
                rows.push(SweepRow {
                    start_x: sx,
                    start_y: sy,
                    n,
                    k,
                    p_analytic,
                    p_empirical,
                    stderr: (sampling + analytic_se * analytic_se).sqrt(),
                    p_unclipped,
                });
            }
        }
    }
    Ok(rows)
}

/// Covered-node count at the start position for each seeded deployment.
fn covered_counts(config: &EnvConfig, start: [i32; 2], n: u32, spec: &SweepSpec) -> Result<Vec<usize>> {
    if n == 0 {
        return Ok(vec![0; spec.trials]);
    }
    (0..spec.trials)
        .into_par_iter()
        .map(|t| {
            let cfg = EnvConfig {
                node_count: Some(n),
                node_density_lambda: None,
                rng_seed: derive_seed(spec.seed, &[0xC0FE, n as u64, t as u64]),
                start_xy: Some(start),
                randomize_start: false,
                ..config.clone()
            };
            Ok(Environment::deploy(cfg)?.covered().len())
        })
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| Error::Parse(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| Error::io("<csv>", e))?;
    Ok(())
}
