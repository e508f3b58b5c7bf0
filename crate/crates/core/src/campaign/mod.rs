//! Monte-Carlo experiment campaigns: every (algorithm, node count, Γ, run)
//! cell is deployed, trained and evaluated with seeds derived from one master
//! seed, then aggregated and written out as CSV datasets.

mod config;
mod emit;
mod metrics;

use std::fs;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use config::{apply_override, CampaignConfig};
pub use emit::{emit_datasets, DATASET_FILES};
pub use metrics::{
    actions_to_target, bootstrap_mean_ci, energy_efficiency, mean, std_dev, ActionsToTarget, Quantity,
};

use crate::coverage::{coverage_sweep, SweepRow};
use crate::env::{EnvConfig, Environment};
use crate::error::{Error, Result};
use crate::rl::{greedy_rollout, random_rollout, train, Algorithm, EpisodeMetrics, LearnConfig};
use crate::seed::derive_seed;

const TAG_DEPLOY: u64 = 1;
const TAG_LEARN: u64 = 2;
const TAG_EVAL: u64 = 3;
const TAG_BOOT: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellKey {
    pub algorithm: Algorithm,
    pub node_count: u32,
    /// Position of Γ in `gamma_sweep`.
    pub gamma_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSeeds {
    /// Node placement; shared by all algorithms and Γ values of a run so
    /// comparisons are matched.
    pub deploy: u64,
    pub learn: u64,
    pub eval: u64,
}

pub fn run_seeds(master: u64, key: &CellKey, gamma: f64, run: usize) -> RunSeeds {
    let algo = key.algorithm as u64;
    let n = key.node_count as u64;
    RunSeeds {
        deploy: derive_seed(master, &[TAG_DEPLOY, n, run as u64]),
        learn: derive_seed(master, &[TAG_LEARN, algo, n, gamma.to_bits(), run as u64]),
        eval: derive_seed(master, &[TAG_EVAL, algo, n, gamma.to_bits(), run as u64]),
    }
}

/// Outcome of one Monte-Carlo run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub key: CellKey,
    pub gamma: f64,
    pub run: usize,
    pub seeds: RunSeeds,
    /// Evaluation episode: greedy rollout for learners, uniform rollout for Random.
    pub eval: EpisodeMetrics,
    pub energy_efficiency: f64,
    /// Total reward of each training episode.
    pub reward_trace: Vec<f64>,
    /// Mean per-episode reward terms over the final training episodes.
    pub converged_throughput_term: f64,
    pub converged_harvest_term: f64,
    pub converged_motion_term: f64,
    /// Q-table text and initial snapshot JSON when `save_tables` is set.
    pub artifacts: Option<(String, String)>,
}

impl RunRecord {
    /// File stem shared by the run's saved table and snapshot.
    pub fn artifact_stem(&self) -> String {
        format!("{}_n{}_g{}_r{}", self.key.algorithm, self.key.node_count, self.gamma, self.run)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Summary {
    fn of(values: &[f64], resamples: usize, seed: u64) -> Result<Self> {
        let (ci_low, ci_high) = bootstrap_mean_ci(values, resamples, 0.95, seed)?;
        Ok(Self {
            mean: mean(values),
            min: values.iter().copied().fold(f64::INFINITY, f64::min),
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            ci_low,
            ci_high,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TargetStat {
    pub fraction: f64,
    pub target: f64,
    /// Mean over runs that reached the target; `None` if none did.
    pub mean_actions_reached: Option<f64>,
    /// Mean with unreached runs counted as `episode_length + 1`.
    pub restricted_mean_actions: f64,
    pub reached_runs: usize,
    pub runs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellAggregate {
    pub key: CellKey,
    pub gamma: f64,
    pub runs: usize,
    pub throughput_bits: Summary,
    pub harvested_j: Summary,
    pub energy_efficiency: Summary,
    pub total_energy_j: f64,
    pub throughput_term: f64,
    pub harvest_term: f64,
    pub motion_term: f64,
    pub converged_throughput_term: f64,
    pub converged_harvest_term: f64,
    pub converged_motion_term: f64,
    pub actions_throughput: Vec<TargetStat>,
    pub actions_harvest: Vec<TargetStat>,
    pub reward_trace_mean: Vec<f64>,
    pub reward_trace_std: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateResult {
    pub config: CampaignConfig,
    /// Sorted by `(algorithm, node_count, gamma_index, run)`.
    pub runs: Vec<RunRecord>,
    /// Sorted by `CellKey`.
    pub cells: Vec<CellAggregate>,
    pub coverage: Vec<SweepRow>,
}

impl AggregateResult {
    pub fn cell(&self, algorithm: Algorithm, node_count: u32, gamma: f64) -> Option<&CellAggregate> {
        self.cells
            .iter()
            .find(|c| c.key.algorithm == algorithm && c.key.node_count == node_count && c.gamma == gamma)
    }

    /// EE of each learned algorithm over Random's, at the operating Γ.
    pub fn ee_ratios(&self) -> Vec<(Algorithm, u32, f64)> {
        let g = self.config.operating_gamma;
        let mut out = Vec::new();
        for &n in &self.config.node_counts {
            let Some(base) = self.cell(Algorithm::Random, n, g) else { continue };
            for &a in &self.config.algorithms {
                if a.is_learned() {
                    if let Some(c) = self.cell(a, n, g) {
                        out.push((a, n, c.energy_efficiency.mean / base.energy_efficiency.mean));
                    }
                }
            }
        }
        out
    }
}

/// Γ-sweep reward decomposition row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaRow {
    pub algorithm: Algorithm,
    pub node_count: u32,
    pub gamma: f64,
    pub throughput_term: f64,
    pub harvest_term: f64,
    pub motion_term: f64,
    pub converged_throughput_term: f64,
    pub converged_harvest_term: f64,
}

/// Per-Γ split of the evaluated and converged training reward.
pub fn gamma_sweep_report(result: &AggregateResult) -> Vec<GammaRow> {
    result
        .cells
        .iter()
        .map(|c| GammaRow {
            algorithm: c.key.algorithm,
            node_count: c.key.node_count,
            gamma: c.gamma,
            throughput_term: c.throughput_term,
            harvest_term: c.harvest_term,
            motion_term: c.motion_term,
            converged_throughput_term: c.converged_throughput_term,
            converged_harvest_term: c.converged_harvest_term,
        })
        .collect()
}

/// Runs every cell of the campaign. Nothing is written except the output
/// directory, which is created up front so an unwritable path fails fast.
pub fn run_campaign(config: &CampaignConfig) -> Result<AggregateResult> {
    config.validate()?;
    fs::create_dir_all(&config.output_dir).map_err(|e| Error::io(&config.output_dir, e))?;

    let mut jobs = Vec::new();
    for &algorithm in &config.algorithms {
        for &node_count in &config.node_counts {
            for (gamma_index, &gamma) in config.gamma_sweep.iter().enumerate() {
                let key = CellKey {
                    algorithm,
                    node_count,
                    gamma_index,
                };
                for run in 0..config.mc_runs {
                    jobs.push((key, gamma, run));
                }
            }
        }
    }
    jobs.sort_by_key(|(k, _, r)| (*k, *r));

    let runs: Vec<RunRecord> = jobs
        .par_iter()
        .map(|&(key, gamma, run)| run_cell(config, key, gamma, run))
        .collect::<Result<_>>()?;

    let coverage = match &config.coverage {
        Some(spec) => coverage_sweep(&config.env, spec)?,
        None => Vec::new(),
    };
    aggregate_runs(config, runs, coverage)
}

/// Merges finished runs, in any completion order, into per-cell summaries.
pub fn aggregate_runs(config: &CampaignConfig, mut runs: Vec<RunRecord>, coverage: Vec<SweepRow>) -> Result<AggregateResult> {
    runs.sort_by_key(|r| (r.key, r.run));
    let cells = aggregate(config, &runs)?;
    Ok(AggregateResult {
        config: config.clone(),
        runs,
        cells,
        coverage,
    })
}

/// Deploys, trains and evaluates one Monte-Carlo run; depends only on the
/// configuration and the run's coordinates.
pub fn run_cell(config: &CampaignConfig, key: CellKey, gamma: f64, run: usize) -> Result<RunRecord> {
    let seeds = run_seeds(config.seed, &key, gamma, run);
    let env_cfg = EnvConfig {
        node_count: Some(key.node_count),
        node_density_lambda: None,
        reward_gamma: gamma,
        rng_seed: seeds.deploy,
        ..config.env.clone()
    };
    let mut env = Environment::deploy(env_cfg)?;
    let initial = config
        .save_tables
        .then(|| serde_json::to_string_pretty(&env.snapshot()).expect("snapshot serializes"));
    let learn = LearnConfig {
        seed: seeds.learn,
        ..config.learn.clone()
    };
    let (q, history) = train(&mut env, key.algorithm, &learn)?;
    let rollout = if key.algorithm.is_learned() {
        greedy_rollout(&mut env, &q)?
    } else {
        random_rollout(&mut env, &mut ChaCha8Rng::seed_from_u64(seeds.eval))?
    };
    let eval = rollout.metrics;
    let energy_efficiency = energy_efficiency(eval.throughput_bits, eval.total_energy_j())?;

    let tail = ((history.len() as f64 * config.converged_tail_fraction).ceil() as usize).clamp(1, history.len());
    let last = &history[history.len() - tail..];
    let avg = |f: fn(&EpisodeMetrics) -> f64| last.iter().map(f).sum::<f64>() / tail as f64;
    Ok(RunRecord {
        key,
        gamma,
        run,
        seeds,
        energy_efficiency,
        reward_trace: history.iter().map(|m| m.total_reward).collect(),
        converged_throughput_term: avg(|m| m.throughput_term),
        converged_harvest_term: avg(|m| m.harvest_term),
        converged_motion_term: avg(|m| m.motion_term),
        artifacts: initial.map(|snap| (q.to_text(), snap)),
        eval,
    })
}

/// Reference totals for actions-to-target: the explicit target when given,
/// otherwise Random's mean episode total (or the all-algorithm mean without a
/// Random arm) at the operating Γ, per node count.
fn target_reference(config: &CampaignConfig, runs: &[RunRecord], n: u32, quantity: Quantity) -> Option<f64> {
    let explicit = match quantity {
        Quantity::Throughput => config.target_throughput_bits,
        Quantity::Harvest => config.target_harvest_j,
    };
    if explicit.is_some() {
        return explicit;
    }
    let total = |r: &RunRecord| match quantity {
        Quantity::Throughput => r.eval.throughput_bits,
        Quantity::Harvest => r.eval.harvested_j,
    };
    let at_op = |r: &&RunRecord| r.key.node_count == n && r.gamma == config.operating_gamma;
    let random: Vec<f64> = runs
        .iter()
        .filter(at_op)
        .filter(|r| r.key.algorithm == Algorithm::Random)
        .map(total)
        .collect();
    let all: Vec<f64> = runs.iter().filter(at_op).map(total).collect();
    [mean(&random), mean(&all)].into_iter().find(|v| *v > 0.0)
}

pub fn targets(config: &CampaignConfig, runs: &[RunRecord], n: u32, quantity: Quantity) -> Vec<(f64, f64)> {
    match target_reference(config, runs, n, quantity) {
        Some(reference) => config.target_fractions.iter().map(|&f| (f, f * reference)).collect(),
        None => Vec::new(),
    }
}

fn target_stats(config: &CampaignConfig, cell: &[&RunRecord], targets: &[(f64, f64)], quantity: Quantity) -> Result<Vec<TargetStat>> {
    let censored = (config.env.episode_length + 1) as f64;
    targets
        .iter()
        .map(|&(fraction, target)| {
            let hits = cell
                .iter()
                .map(|r| actions_to_target(&r.eval, target, quantity).map(ActionsToTarget::reached))
                .collect::<Result<Vec<_>>>()?;
            let reached: Vec<f64> = hits.iter().flatten().map(|&a| a as f64).collect();
            let restricted: Vec<f64> = hits.iter().map(|h| h.map_or(censored, |a| a as f64)).collect();
            Ok(TargetStat {
                fraction,
                target,
                mean_actions_reached: (!reached.is_empty()).then(|| mean(&reached)),
                restricted_mean_actions: mean(&restricted),
                reached_runs: reached.len(),
                runs: cell.len(),
            })
        })
        .collect()
}

fn aggregate(config: &CampaignConfig, runs: &[RunRecord]) -> Result<Vec<CellAggregate>> {
    let mut keys: Vec<CellKey> = runs.iter().map(|r| r.key).collect();
    keys.dedup();
    let mut cells = Vec::with_capacity(keys.len());
    for key in keys {
        let cell: Vec<&RunRecord> = runs.iter().filter(|r| r.key == key).collect();
        let gamma = cell[0].gamma;
        let pick = |f: &dyn Fn(&RunRecord) -> f64| cell.iter().map(|r| f(r)).collect::<Vec<f64>>();
        let boot = |slot: u64| {
            derive_seed(
                config.seed,
                &[TAG_BOOT, key.algorithm as u64, key.node_count as u64, key.gamma_index as u64, slot],
            )
        };
        let resamples = config.bootstrap_resamples;
        let episodes = cell[0].reward_trace.len();
        let mut trace_mean = Vec::with_capacity(episodes);
        let mut trace_std = Vec::with_capacity(episodes);
        for e in 0..episodes {
            let column: Vec<f64> = cell.iter().map(|r| r.reward_trace[e]).collect();
            trace_mean.push(mean(&column));
            trace_std.push(std_dev(&column));
        }
        cells.push(CellAggregate {
            key,
            gamma,
            runs: cell.len(),
            throughput_bits: Summary::of(&pick(&|r| r.eval.throughput_bits), resamples, boot(0))?,
            harvested_j: Summary::of(&pick(&|r| r.eval.harvested_j), resamples, boot(1))?,
            energy_efficiency: Summary::of(&pick(&|r| r.energy_efficiency), resamples, boot(2))?,
            total_energy_j: mean(&pick(&|r| r.eval.total_energy_j())),
            throughput_term: mean(&pick(&|r| r.eval.throughput_term)),
            harvest_term: mean(&pick(&|r| r.eval.harvest_term)),
            motion_term: mean(&pick(&|r| r.eval.motion_term)),
            converged_throughput_term: mean(&pick(&|r| r.converged_throughput_term)),
            converged_harvest_term: mean(&pick(&|r| r.converged_harvest_term)),
            converged_motion_term: mean(&pick(&|r| r.converged_motion_term)),
            actions_throughput: target_stats(
                config,
                &cell,
                &targets(config, runs, key.node_count, Quantity::Throughput),
                Quantity::Throughput,
            )?,
            actions_harvest: target_stats(
                config,
                &cell,
                &targets(config, runs, key.node_count, Quantity::Harvest),
                Quantity::Harvest,
            )?,
            reward_trace_mean: trace_mean,
            reward_trace_std: trace_std,
        });
    }
    Ok(cells)
}
