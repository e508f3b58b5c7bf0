use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coverage::SweepSpec;
use crate::env::EnvConfig;
use crate::error::{Error, Result};
use crate::rl::{Algorithm, LearnConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CampaignConfig {
    pub env: EnvConfig,
    pub learn: LearnConfig,
    pub algorithms: Vec<Algorithm>,
    pub node_counts: Vec<u32>,
    pub gamma_sweep: Vec<f64>,
    /// Γ used for the per-algorithm figures; must appear in `gamma_sweep`.
    pub operating_gamma: f64,
    pub mc_runs: usize,
    /// Master seed; every deployment, training and evaluation seed derives from it.
    pub seed: u64,
    pub output_dir: PathBuf,
    pub target_throughput_bits: Option<f64>,
    pub target_harvest_j: Option<f64>,
    /// Fractions of the reference total at which actions-to-target is measured.
    pub target_fractions: Vec<f64>,
    pub bootstrap_resamples: usize,
    /// Share of final training episodes averaged for the converged reward split.
    pub converged_tail_fraction: f64,
    /// Coverage sweep emitted alongside; `null` skips it.
    pub coverage: Option<SweepSpec>,
    /// Also write each run's Q-table and initial environment snapshot under `tables/`.
    pub save_tables: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            env: EnvConfig::default(),
            learn: LearnConfig::default(),
            algorithms: Algorithm::ALL.to_vec(),
            node_counts: vec![10, 25, 50],
            gamma_sweep: vec![0.0, 0.5, 1.0],
            operating_gamma: 0.5,
            mc_runs: 20,
            seed: 2024,
            output_dir: PathBuf::from("results"),
            target_throughput_bits: None,
            target_harvest_j: None,
            target_fractions: vec![0.25, 0.5, 0.75, 1.0],
            bootstrap_resamples: 2000,
            converged_tail_fraction: 0.1,
            coverage: Some(SweepSpec::default()),
            save_tables: false,
        }
    }
}

impl CampaignConfig {
    /// Every problem with the configuration, prefixed by its dotted path.
    pub fn issues(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if self.algorithms.is_empty() {
            issues.push("algorithms must be non-empty".into());
        }
        let mut algos = self.algorithms.clone();
        algos.sort();
        algos.dedup();
        if algos.len() != self.algorithms.len() {
            issues.push("algorithms must not repeat".into());
        }
        if self.node_counts.is_empty() {
            issues.push("node_counts must be non-empty".into());
        }
        if self.node_counts.iter().any(|&n| n == 0) {
            issues.push("node_counts must be positive".into());
        }
        if self.gamma_sweep.is_empty() {
            issues.push("gamma_sweep must be non-empty".into());
        }
        if self.gamma_sweep.iter().any(|g| !(0.0..=1.0).contains(g)) {
            issues.push("gamma_sweep entries must lie in [0, 1]".into());
        }
        if !self.gamma_sweep.contains(&self.operating_gamma) {
            issues.push(format!("operating_gamma {} must appear in gamma_sweep", self.operating_gamma));
        }
        if self.mc_runs == 0 {
            issues.push("mc_runs must be >= 1".into());
        }
        for (name, t) in [
            ("target_throughput_bits", self.target_throughput_bits),
            ("target_harvest_j", self.target_harvest_j),
        ] {
            if let Some(t) = t {
                if !(t > 0.0 && t.is_finite()) {
                    issues.push(format!("{name} must be positive"));
                }
            }
        }
        if self.target_fractions.iter().any(|f| !(*f > 0.0 && f.is_finite())) {
            issues.push("target_fractions must be positive".into());
        }
        if self.bootstrap_resamples == 0 {
            issues.push("bootstrap_resamples must be >= 1".into());
        }
        if !(self.converged_tail_fraction > 0.0 && self.converged_tail_fraction <= 1.0) {
            issues.push("converged_tail_fraction must lie in (0, 1]".into());
        }
        if self.output_dir.as_os_str().is_empty() {
            issues.push("output_dir must be set".into());
        }
        if let Some(cov) = &self.coverage {
            if cov.trials < 100 {
                issues.push("coverage.trials must be >= 100".into());
            }
            if cov.volume_samples < 1000 {
                issues.push("coverage.volume_samples must be >= 1000".into());
            }
            if cov.n_values.is_empty() || cov.start_grid.is_empty() || cov.k_values.is_empty() {
                issues.push("coverage needs non-empty n_values, start_grid and k_values".into());
            }
        }
        // Node counts come from `node_counts`, so the env check runs on a representative cell.
        let probe = EnvConfig {
            node_count: Some(self.node_counts.first().copied().unwrap_or(1).max(1)),
            node_density_lambda: None,
            reward_gamma: self.operating_gamma.clamp(0.0, 1.0),
            ..self.env.clone()
        };
        if let Err(Error::Config(env_issues)) = probe.validate() {
            issues.extend(env_issues);
        }
        issues.extend(self.learn.validate());
        issues
    }

    pub fn validate(&self) -> Result<()> {
        let issues = self.issues();
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::Config(issues))
        }
    }

    /// Builds a configuration from defaults, an optional JSON document (a
    /// config or a run manifest) and `path=value` overrides.
    pub fn from_sources(file: Option<&Path>, overrides: &[String]) -> Result<Self> {
        let mut user = match file {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
                let doc: Value = serde_json::from_str(&text)
                    .map_err(|e| Error::Config(vec![format!("{}: {e}", path.display())]))?;
                match doc {
                    Value::Object(mut map) if map.contains_key("manifest_version") => {
                        map.remove("config").unwrap_or(Value::Object(Default::default()))
                    }
                    other => other,
                }
            }
            None => Value::Object(Default::default()),
        };
        if !user.is_object() {
            return Err(Error::config("configuration must be a JSON object"));
        }
        for o in overrides {
            apply_override(&mut user, o)?;
        }
        Self::from_json(user)
    }

    pub fn from_json(user: Value) -> Result<Self> {
        let mut merged = serde_json::to_value(Self::default()).expect("default config serializes");
        merge(&mut merged, &user);
        let cfg: Self = serde_json::from_value(merged).map_err(|e| Error::Config(vec![e.to_string()]))?;
        let canonical = serde_json::to_value(&cfg).expect("config serializes");
        let mut unknown = Vec::new();
        unknown_paths(&user, &canonical, "", &mut unknown);
        if !unknown.is_empty() {
            return Err(Error::Config(unknown.into_iter().map(|p| format!("unknown field `{p}`")).collect()));
        }
        Ok(cfg)
    }
}

fn merge(base: &mut Value, patch: &Value) {
    match (base, patch) {
        (Value::Object(b), Value::Object(p)) => {
            for (k, v) in p {
                match b.get_mut(k) {
                    // A tagged enum switching variant replaces the object wholesale.
                    Some(slot) if slot.is_object() && v.is_object() && !switches_tag(slot, v) => merge(slot, v),
                    _ => {
                        b.insert(k.clone(), v.clone());
                    }
                }
            }
        }
        (b, p) => *b = p.clone(),
    }
}

fn switches_tag(base: &Value, patch: &Value) -> bool {
    matches!((base.get("kind"), patch.get("kind")), (Some(a), Some(b)) if a != b)
}

fn unknown_paths(user: &Value, known: &Value, prefix: &str, out: &mut Vec<String>) {
    if let (Value::Object(u), Value::Object(k)) = (user, known) {
        for (key, v) in u {
            let path = if prefix.is_empty() { key.clone() } else { format!("{prefix}.{key}") };
            match k.get(key) {
                None => out.push(path),
                Some(kv) => unknown_paths(v, kv, &path, out),
            }
        }
    }
}

/// Sets `a.b.c=value` inside a JSON object. The value is parsed as JSON and
/// falls back to a plain string.
pub fn apply_override(doc: &mut Value, spec: &str) -> Result<()> {
    let (path, raw) = spec
        .split_once('=')
        .ok_or_else(|| Error::config(format!("override `{spec}` must look like path=value")))?;
    let path = path.trim();
    if path.is_empty() || path.split('.').any(str::is_empty) {
        return Err(Error::config(format!("override `{spec}` has an empty path segment")));
    }
    let value = serde_json::from_str(raw.trim()).unwrap_or_else(|_| Value::String(raw.trim().to_string()));
    let mut slot = doc;
    let parts: Vec<&str> = path.split('.').collect();
    for part in &parts[..parts.len() - 1] {
        if !slot.is_object() {
            *slot = Value::Object(Default::default());
        }
        slot = slot
            .as_object_mut()
            .expect("just made an object")
            .entry(part.to_string())
            .or_insert_with(|| Value::Object(Default::default()));
    }
    if !slot.is_object() {
        *slot = Value::Object(Default::default());
    }
    slot.as_object_mut()
        .expect("just made an object")
        .insert(parts[parts.len() - 1].to_string(), value);
    Ok(())
}
