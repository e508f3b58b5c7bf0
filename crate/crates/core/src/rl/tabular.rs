use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Mdp, StepMetrics, Transition};
use crate::error::{Error, Result};

/// Explicit finite MDP given by transition and reward tables.
#[derive(Debug, Clone)]
pub struct TabularMdp {
    /// `transitions[s][a]` lists `(next_state, probability)`.
    pub transitions: Vec<Vec<Vec<(usize, f64)>>>,
    /// `rewards[s][a]`
    pub rewards: Vec<Vec<f64>>,
    pub terminal: Vec<bool>,
    /// Episodes start in a uniformly drawn non-terminal state when `None`.
    pub start: Option<usize>,
    pub max_steps: usize,
    state: usize,
    steps: usize,
    rng: ChaCha8Rng,
}

impl TabularMdp {
    pub fn new(
        transitions: Vec<Vec<Vec<(usize, f64)>>>,
        rewards: Vec<Vec<f64>>,
        terminal: Vec<bool>,
        seed: u64,
    ) -> Result<Self> {
        let n = transitions.len();
        if n == 0 || rewards.len() != n || terminal.len() != n {
            return Err(Error::Domain("transition, reward and terminal tables must agree in size".into()));
        }
        let actions = transitions[0].len();
        for (s, row) in transitions.iter().enumerate() {
            if row.len() != actions || rewards[s].len() != actions {
                return Err(Error::Domain(format!("state {s} has a ragged action row")));
            }
            for outcomes in row {
                let total: f64 = outcomes.iter().map(|(_, p)| p).sum();
                if (total - 1.0).abs() > 1e-9 || outcomes.iter().any(|(t, p)| *t >= n || *p < 0.0) {
                    return Err(Error::Domain(format!("state {s}: invalid transition distribution")));
                }
            }
        }
        if terminal.iter().all(|t| *t) {
            return Err(Error::Domain("at least one state must be non-terminal".into()));
        }
        Ok(Self {
            transitions,
            rewards,
            terminal,
            start: None,
            max_steps: 50,
            state: 0,
            steps: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    /// Deterministic MDP from a successor table.
    pub fn deterministic(next: Vec<Vec<usize>>, rewards: Vec<Vec<f64>>, terminal: Vec<bool>, seed: u64) -> Result<Self> {
        let transitions = next
            .into_iter()
            .map(|row| row.into_iter().map(|t| vec![(t, 1.0)]).collect())
            .collect();
        Self::new(transitions, rewards, terminal, seed)
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }
}

impl Mdp for TabularMdp {
    type State = usize;

    fn num_actions(&self) -> usize {
        self.transitions[0].len()
    }

    fn reset_episode(&mut self) -> usize {
        self.steps = 0;
        self.state = match self.start {
            Some(s) => s,
            None => {
                let live: Vec<usize> = (0..self.num_states()).filter(|s| !self.terminal[*s]).collect();
                live[self.rng.random_range(0..live.len())]
            }
        };
        self.state
    }

    fn step_action(&mut self, action: usize) -> Result<Transition<usize>> {
        if self.terminal[self.state] {
            return Err(Error::State("episode already reached a terminal state".into()));
        }
        let outcomes = &self.transitions[self.state][action];
        let mut u: f64 = self.rng.random();
        let mut next = outcomes[outcomes.len() - 1].0;
        for &(t, p) in outcomes {
            if u < p {
                next = t;
                break;
            }
            u -= p;
        }
        let reward = self.rewards[self.state][action];
        self.state = next;
        self.steps += 1;
        let terminal = self.terminal[next];
        Ok(Transition {
            next_state: next,
            reward,
            terminal,
            truncated: !terminal && self.steps >= self.max_steps,
            metrics: StepMetrics::default(),
        })
    }
}

/// Optimal action values by repeated Bellman optimality backups.
///
/// Terminal states have value zero. Iteration stops once the sup-norm change
/// guarantees the result lies within `tol` of the fixed point.
pub fn value_iteration_oracle(mdp: &TabularMdp, kappa: f64, tol: f64) -> Result<Vec<Vec<f64>>> {
    const MAX_SWEEPS: usize = 1_000_000;
    if mdp.num_states() > 10_000 {
        return Err(Error::Domain("value iteration oracle limited to 10^4 states".into()));
    }
    if !(0.0..=1.0).contains(&kappa) || !(tol > 0.0) {
        return Err(Error::Domain(format!("need kappa in [0,1] and tol > 0 (got {kappa}, {tol})")));
    }
    let n = mdp.num_states();
    let a = mdp.num_actions();
    let stop = if kappa < 1.0 { tol * (1.0 - kappa) / kappa.max(f64::MIN_POSITIVE) } else { tol };
    let mut q = vec![vec![0.0; a]; n];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_SWEEPS {
        let v: Vec<f64> = (0..n)
            .map(|s| {
                if mdp.terminal[s] {
                    0.0
                } else {
                    q[s].iter().copied().fold(f64::NEG_INFINITY, f64::max)
                }
            })
            .collect();
        residual = 0.0f64;
        for s in 0..n {
            if mdp.terminal[s] {
                continue;
            }
            for act in 0..a {
                let expected: f64 = mdp.transitions[s][act].iter().map(|&(t, p)| p * v[t]).sum();
                let updated = mdp.rewards[s][act] + kappa * expected;
                residual = residual.max((updated - q[s][act]).abs());
                q[s][act] = updated;
            }
        }
        if residual <= stop {
            return Ok(q);
        }
    }
    Err(Error::NotConverged {
        iterations: MAX_SWEEPS,
        residual,
    })
}
