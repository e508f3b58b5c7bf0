use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use aquaswipt::campaign::{emit_datasets, gamma_sweep_report, run_campaign, CampaignConfig};
use aquaswipt::coverage::{coverage_sweep, write_sweep_csv};
use aquaswipt::rl::{greedy_rollout, Algorithm, QTable};
use aquaswipt::{Environment, Error};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "aquaswipt", version, about = "AUV SWIPT data-collection campaigns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a Monte-Carlo campaign and write the datasets.
    Run(CampaignArgs),
    /// Run only the coverage sweep and write fig_coverage.csv.
    Coverage(CampaignArgs),
    /// Check a configuration and print the resolved document.
    Validate(CampaignArgs),
    /// Greedy rollout of a saved Q-table on a saved environment snapshot.
    Replay(ReplayArgs),
}

#[derive(Args)]
struct CampaignArgs {
    /// JSON configuration or a run_manifest.json from an earlier run.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,
    #[arg(long, value_name = "N")]
    runs: Option<usize>,
    /// Comma-separated subset of qlearning,sarsa,random.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    algos: Option<Vec<String>>,
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    nodes: Option<Vec<u32>>,
    /// Γ values; the first becomes the operating Γ unless the configured one is listed.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    gamma: Option<Vec<f64>>,
    /// Dotted-path override such as `env.channel.frequency_khz=30`; repeatable.
    #[arg(long = "set", value_name = "PATH=VALUE")]
    overrides: Vec<String>,
    /// Also write each run's Q-table and environment snapshot.
    #[arg(long)]
    save_tables: bool,
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Args)]
struct ReplayArgs {
    #[arg(long, value_name = "PATH")]
    qtable: PathBuf,
    #[arg(long, value_name = "PATH")]
    snapshot: PathBuf,
    /// Write the rollout JSON here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl CampaignArgs {
    fn resolve(&self) -> anyhow::Result<CampaignConfig> {
        let mut cfg = CampaignConfig::from_sources(self.config.as_deref(), &self.overrides)?;
        if let Some(dir) = &self.out {
            cfg.output_dir = dir.clone();
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Some(runs) = self.runs {
            cfg.mc_runs = runs;
        }
        if let Some(algos) = &self.algos {
            cfg.algorithms = algos
                .iter()
                .map(|a| a.parse::<Algorithm>())
                .collect::<Result<_, _>>()?;
        }
        if let Some(nodes) = &self.nodes {
            cfg.node_counts = nodes.clone();
        }
        if let Some(gammas) = &self.gamma {
            if !gammas.contains(&cfg.operating_gamma) {
                if let Some(&first) = gammas.first() {
                    cfg.operating_gamma = first;
                }
            }
            cfg.gamma_sweep = gammas.clone();
        }
        if self.save_tables {
            cfg.save_tables = true;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(raw) = std::env::var("AQUASWIPT_THREADS") {
        let n: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| Error::Config(vec![format!("AQUASWIPT_THREADS must be a positive integer (got `{raw}`)")]))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    Ok(())
}

fn run(args: &CampaignArgs) -> anyhow::Result<()> {
    let cfg = args.resolve()?;
    if !args.quiet {
        let cells = cfg.algorithms.len() * cfg.node_counts.len() * cfg.gamma_sweep.len();
        eprintln!(
            "running {cells} cells x {} runs ({} episodes each) into {}",
            cfg.mc_runs,
            cfg.learn.episodes,
            cfg.output_dir.display()
        );
    }
    let result = run_campaign(&cfg)?;
    let written = emit_datasets(&result, &cfg.output_dir)?;
    if !args.quiet {
        for c in result.cells.iter().filter(|c| c.gamma == cfg.operating_gamma) {
            println!(
                "{:<9} n={:<4} throughput {:>12.0} bits  harvest {:>10.4} J  EE {:>9.3} bit/J",
                c.key.algorithm.name(),
                c.key.node_count,
                c.throughput_bits.mean,
                c.harvested_j.mean,
                c.energy_efficiency.mean
            );
        }
        for (algo, n, ratio) in result.ee_ratios() {
            println!("EE ratio {algo}/random at n={n}: {ratio:.3}");
        }
        if cfg.gamma_sweep.len() > 1 {
            for row in gamma_sweep_report(&result) {
                println!(
                    "{:<9} n={:<4} gamma={:<5} throughput term {:>9.3}  harvest term {:>9.3}",
                    row.algorithm.name(),
                    row.node_count,
                    row.gamma,
                    row.throughput_term,
                    row.harvest_term
                );
            }
        }
        println!("wrote {} files to {}", written.len(), cfg.output_dir.display());
    }
    Ok(())
}

fn coverage(args: &CampaignArgs) -> anyhow::Result<()> {
    let cfg = args.resolve()?;
    let mut spec = cfg.coverage.clone().unwrap_or_default();
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    if let Some(nodes) = &args.nodes {
        spec.n_values = nodes.clone();
    }
    let rows = coverage_sweep(&cfg.env, &spec)?;
    std::fs::create_dir_all(&cfg.output_dir).map_err(|e| io_error(&cfg.output_dir, e))?;
    let path = cfg.output_dir.join("fig_coverage.csv");
    let file = std::fs::File::create(&path).map_err(|e| io_error(&path, e))?;
    write_sweep_csv(&rows, file)?;
    if !args.quiet {
        for r in &rows {
            println!(
                "start=({:>3},{:>3}) n={:<3} k={} analytic {:.4} empirical {:.4} (se {:.4})",
                r.start_x, r.start_y, r.n, r.k, r.p_analytic, r.p_empirical, r.stderr
            );
        }
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn validate(args: &CampaignArgs) -> anyhow::Result<()> {
    let cfg = args.resolve()?;
    if !args.quiet {
        println!("{}", serde_json::to_string_pretty(&cfg)?);
    }
    Ok(())
}

fn replay(args: &ReplayArgs) -> anyhow::Result<()> {
    let q = QTable::load(&args.qtable)?;
    let mut env = Environment::load_snapshot(&args.snapshot)?;
    let rollout = greedy_rollout(&mut env, &q)?;
    let m = &rollout.metrics;
    let doc = serde_json::json!({
        "start": rollout.start,
        "trajectory": rollout.trajectory,
        "actions": m.actions,
        "total_reward": m.total_reward,
        "throughput_bits": m.throughput_bits,
        "harvested_j": m.harvested_j,
        "motion_energy_j": m.motion_energy_j,
        "swipt_energy_j": m.swipt_energy_j,
        "rewards": m.rewards,
    });
    let text = serde_json::to_string_pretty(&doc)? + "\n";
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_error(path, e))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Config(_)) => 2,
        Some(Error::Io { .. }) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|()| match &cli.command {
        Command::Run(a) => run(a),
        Command::Coverage(a) => coverage(a),
        Command::Validate(a) => validate(a),
        Command::Replay(a) => replay(a),
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
