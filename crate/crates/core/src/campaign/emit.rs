use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;

use super::{targets, AggregateResult, CellAggregate, Quantity, TargetStat};
use crate::coverage::write_sweep_csv;
use crate::error::{Error, Result};
use crate::rl::Algorithm;

pub const DATASET_FILES: [&str; 11] = [
    "fig_coverage.csv",
    "fig_gamma.csv",
    "fig_throughput.csv",
    "fig_actions_throughput.csv",
    "fig_ee.csv",
    "fig_harvest.csv",
    "fig_actions_harvest.csv",
    "fig_reward_trace.csv",
    "runs.csv",
    "run_manifest.json",
    "README.md",
];

/// Writes every dataset into `output_dir` and returns the paths written.
/// All content is rendered before the first file is touched.
pub fn emit_datasets(result: &AggregateResult, output_dir: &Path) -> Result<Vec<PathBuf>> {
    result.config.validate()?;
    if result.cells.is_empty() {
        return Err(Error::config("campaign result has no cells"));
    }
    let rendered = [
        coverage_csv(result)?,
        gamma_csv(result)?,
        summary_csv(result, Quantity::Throughput)?,
        actions_csv(result, Quantity::Throughput)?,
        ee_csv(result)?,
        summary_csv(result, Quantity::Harvest)?,
        actions_csv(result, Quantity::Harvest)?,
        reward_trace_csv(result)?,
        runs_csv(result)?,
        manifest(result)?,
        README.to_string(),
    ];
    fs::create_dir_all(output_dir).map_err(|e| Error::io(output_dir, e))?;
    let mut written = Vec::with_capacity(DATASET_FILES.len());
    for (name, body) in DATASET_FILES.iter().zip(rendered) {
        let path = output_dir.join(name);
        fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    if result.config.save_tables {
        let dir = output_dir.join("tables");
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        for r in &result.runs {
            if let Some((table, snapshot)) = &r.artifacts {
                for (ext, body) in [("qtable", table), ("snapshot.json", snapshot)] {
                    let path = dir.join(format!("{}.{ext}", r.artifact_stem()));
                    fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
                    written.push(path);
                }
            }
        }
    }
    Ok(written)
}

fn table(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn num(v: f64) -> String {
    format!("{v}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn operating(result: &AggregateResult) -> impl Iterator<Item = &CellAggregate> {
    let g = result.config.operating_gamma;
    result.cells.iter().filter(move |c| c.gamma == g)
}

fn coverage_csv(result: &AggregateResult) -> Result<String> {
    if result.coverage.is_empty() {
        return table(
            &["start_x", "start_y", "n", "k", "p_analytic", "p_empirical", "stderr", "p_unclipped"],
            Vec::new(),
        );
    }
    let mut buf = Vec::new();
    write_sweep_csv(&result.coverage, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

fn gamma_csv(result: &AggregateResult) -> Result<String> {
    let rows = result
        .cells
        .iter()
        .map(|c| {
            vec![
                c.key.algorithm.to_string(),
                c.key.node_count.to_string(),
                num(c.gamma),
                num(c.throughput_term),
                num(c.harvest_term),
                num(c.motion_term),
                num(c.throughput_term + c.harvest_term - c.motion_term),
                num(c.converged_throughput_term),
                num(c.converged_harvest_term),
                num(c.converged_motion_term),
            ]
        })
        .collect();
    table(
        &[
            "algorithm",
            "node_count",
            "gamma",
            "throughput_term",
            "harvest_term",
            "motion_term",
            "reward",
            "converged_throughput_term",
            "converged_harvest_term",
            "converged_motion_term",
        ],
        rows,
    )
}

fn summary_csv(result: &AggregateResult, quantity: Quantity) -> Result<String> {
    let rows = operating(result)
        .map(|c| {
            let s = match quantity {
                Quantity::Throughput => c.throughput_bits,
                Quantity::Harvest => c.harvested_j,
            };
            vec![
                c.key.algorithm.to_string(),
                c.key.node_count.to_string(),
                num(c.gamma),
                c.runs.to_string(),
                num(s.mean),
                num(s.min),
                num(s.max),
                num(s.ci_low),
                num(s.ci_high),
            ]
        })
        .collect();
    let unit = match quantity {
        Quantity::Throughput => "bits",
        Quantity::Harvest => "j",
    };
    let h = |s: &str| format!("{s}_{unit}");
    let header = [
        "algorithm".to_string(),
        "node_count".into(),
        "gamma".into(),
        "runs".into(),
        h("mean"),
        h("min"),
        h("max"),
        h("ci95_low"),
        h("ci95_high"),
    ];
    table(&header.iter().map(String::as_str).collect::<Vec<_>>(), rows)
}

fn ee_csv(result: &AggregateResult) -> Result<String> {
    let ratios = result.ee_ratios();
    let rows = operating(result)
        .map(|c| {
            let ratio = ratios
                .iter()
                .find(|(a, n, _)| *a == c.key.algorithm && *n == c.key.node_count)
                .map(|r| r.2);
            vec![
                c.key.algorithm.to_string(),
                c.key.node_count.to_string(),
                num(c.gamma),
                c.runs.to_string(),
                num(c.energy_efficiency.mean),
                num(c.energy_efficiency.min),
                num(c.energy_efficiency.max),
                num(c.energy_efficiency.ci_low),
                num(c.energy_efficiency.ci_high),
                num(c.throughput_bits.mean),
                num(c.total_energy_j),
                opt(ratio),
            ]
        })
        .collect();
    table(
        &[
            "algorithm",
            "node_count",
            "gamma",
            "runs",
            "ee_mean_bits_per_j",
            "ee_min",
            "ee_max",
            "ee_ci95_low",
            "ee_ci95_high",
            "throughput_mean_bits",
            "energy_mean_j",
            "ee_ratio_vs_random",
        ],
        rows,
    )
}

fn actions_csv(result: &AggregateResult, quantity: Quantity) -> Result<String> {
    let mut rows = Vec::new();
    for c in operating(result) {
        let stats: &[TargetStat] = match quantity {
            Quantity::Throughput => &c.actions_throughput,
            Quantity::Harvest => &c.actions_harvest,
        };
        for s in stats {
            rows.push(vec![
                c.key.algorithm.to_string(),
                c.key.node_count.to_string(),
                num(c.gamma),
                num(s.fraction),
                num(s.target),
                opt(s.mean_actions_reached),
                (s.reached_runs == 0).to_string(),
                num(s.restricted_mean_actions),
                s.reached_runs.to_string(),
                s.runs.to_string(),
            ]);
        }
    }
    table(
        &[
            "algorithm",
            "node_count",
            "gamma",
            "target_fraction",
            "target",
            "mean_actions",
            "not_reached",
            "restricted_mean_actions",
            "reached_runs",
            "runs",
        ],
        rows,
    )
}

fn reward_trace_csv(result: &AggregateResult) -> Result<String> {
    let mut rows = Vec::new();
    for c in &result.cells {
        for (e, (m, s)) in c.reward_trace_mean.iter().zip(&c.reward_trace_std).enumerate() {
            rows.push(vec![
                c.key.algorithm.to_string(),
                c.key.node_count.to_string(),
                num(c.gamma),
                e.to_string(),
                num(*m),
                num(*s),
            ]);
        }
    }
    table(
        &["algorithm", "node_count", "gamma", "episode", "reward_mean", "reward_std"],
        rows,
    )
}

fn runs_csv(result: &AggregateResult) -> Result<String> {
    let cfg = &result.config;
    let mut header: Vec<String> = [
        "algorithm",
        "node_count",
        "gamma",
        "run",
        "deploy_seed",
        "learn_seed",
        "eval_seed",
        "throughput_bits",
        "harvested_j",
        "motion_energy_j",
        "swipt_energy_j",
        "energy_efficiency",
        "reward",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for f in &cfg.target_fractions {
        header.push(format!("actions_throughput_{f}"));
        header.push(format!("not_reached_throughput_{f}"));
    }
    for f in &cfg.target_fractions {
        header.push(format!("actions_harvest_{f}"));
        header.push(format!("not_reached_harvest_{f}"));
    }
    let mut rows = Vec::with_capacity(result.runs.len());
    for r in &result.runs {
        let mut row = vec![
            r.key.algorithm.to_string(),
            r.key.node_count.to_string(),
            num(r.gamma),
            r.run.to_string(),
            r.seeds.deploy.to_string(),
            r.seeds.learn.to_string(),
            r.seeds.eval.to_string(),
            num(r.eval.throughput_bits),
            num(r.eval.harvested_j),
            num(r.eval.motion_energy_j),
            num(r.eval.swipt_energy_j),
            num(r.energy_efficiency),
            num(r.eval.total_reward),
        ];
        for quantity in [Quantity::Throughput, Quantity::Harvest] {
            let ts = targets(cfg, &result.runs, r.key.node_count, quantity);
            for i in 0..cfg.target_fractions.len() {
                match ts.get(i) {
                    Some(&(_, target)) => {
                        let hit = super::actions_to_target(&r.eval, target, quantity)?.reached();
                        row.push(hit.map(|a| a.to_string()).unwrap_or_default());
                        row.push(hit.is_none().to_string());
                    }
                    None => {
                        row.push(String::new());
                        row.push(String::new());
                    }
                }
            }
        }
        rows.push(row);
    }
    table(&header.iter().map(String::as_str).collect::<Vec<_>>(), rows)
}

fn manifest(result: &AggregateResult) -> Result<String> {
    let cfg = &result.config;
    let runs: Vec<_> = result
        .runs
        .iter()
        .map(|r| {
            json!({
                "algorithm": r.key.algorithm,
                "node_count": r.key.node_count,
                "gamma": r.gamma,
                "run": r.run,
                "deploy_seed": r.seeds.deploy,
                "learn_seed": r.seeds.learn,
                "eval_seed": r.seeds.eval,
            })
        })
        .collect();
    let mut target_rows = Vec::new();
    for &n in &cfg.node_counts {
        for (quantity, name) in [(Quantity::Throughput, "throughput_bits"), (Quantity::Harvest, "harvested_j")] {
            for (fraction, target) in targets(cfg, &result.runs, n, quantity) {
                target_rows.push(json!({"node_count": n, "quantity": name, "fraction": fraction, "target": target}));
            }
        }
    }
    let algorithms: Vec<&str> = cfg.algorithms.iter().map(|a: &Algorithm| a.name()).collect();
    let doc = json!({
        "manifest_version": 1,
        "generator": {"name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION")},
        "algorithms": algorithms,
        "config": cfg,
        "runs": runs,
        "targets": target_rows,
        "files": DATASET_FILES,
    });
    let mut text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

const README: &str = "# Campaign datasets

All quantities come from one evaluation episode per Monte-Carlo run: a greedy
rollout of the trained table for `qlearning` and `sarsa`, a uniformly random
rollout for `random`. Per-algorithm files use the operating Γ
(`operating_gamma` in `run_manifest.json`). Intervals are 95% percentile
bootstrap intervals of the mean over runs.

`fig_coverage.csv`: start_x, start_y (AUV start column), n (nodes), k,
p_analytic (binomial tail with the cube-clipped cone volume), p_empirical
(fraction of seeded deployments covering >= k nodes), stderr (standard error
of their difference), p_unclipped (tail with the full cone volume).

`fig_gamma.csv`: one row per (algorithm, node_count, gamma). throughput_term,
harvest_term, motion_term and reward are evaluation-episode sums of the
normalised reward components; converged_* average the same sums over the last
training episodes (`converged_tail_fraction`).

`fig_throughput.csv`, `fig_harvest.csv`: runs, then mean/min/max and ci95
bounds of bits delivered to the surface station (`*_bits`) or joules accepted
by node stores (`*_j`) per episode.

`fig_ee.csv`: energy efficiency in bits per joule, where energy is AUV
navigation plus SWIPT transmit energy. ee_ratio_vs_random is the mean EE over
Random's mean EE at the same node count (empty for Random itself or when
Random did not run).

`fig_actions_throughput.csv`, `fig_actions_harvest.csv`: target_fraction and
target (absolute); mean_actions is the mean 1-based step at which the
cumulative quantity first reaches the target over runs that reached it, empty
when no run did, in which case not_reached is true. restricted_mean_actions
counts unreached runs as episode_length + 1. reached_runs of runs reached it.
Targets are listed in the manifest.

`fig_reward_trace.csv`: mean and standard deviation over runs of the total
training reward per episode.

`runs.csv`: one row per run with its derived seeds, evaluation totals and
actions-to-target per fraction (empty cell plus not_reached_* = true when the
target was never reached).

`run_manifest.json`: configuration echo, per-run seeds, targets and generator
version. Passing it back as `--config` reproduces these files.
";
