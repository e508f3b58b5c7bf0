use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::qtable::QTable;
use super::{Mdp, StepMetrics, Transition};
use crate::env::{Action, Environment, StateKey, StepOutcome, NUM_ACTIONS};
use crate::error::{Error, Result};
use crate::geometry::GridPos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "qlearning")]
    QLearning,
    #[serde(rename = "sarsa")]
    Sarsa,
    #[serde(rename = "random")]
    Random,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::QLearning, Algorithm::Sarsa, Algorithm::Random];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::QLearning => "qlearning",
            Algorithm::Sarsa => "sarsa",
            Algorithm::Random => "random",
        }
    }

    pub fn is_learned(self) -> bool {
        !matches!(self, Algorithm::Random)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "qlearning" | "q-learning" | "q" => Ok(Algorithm::QLearning),
            "sarsa" => Ok(Algorithm::Sarsa),
            "random" => Ok(Algorithm::Random),
            other => Err(Error::config(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LearnConfig {
    pub learning_rate: f64,
    pub discount_kappa: f64,
    pub epsilon0: f64,
    /// Multiplicative ε decay applied after every episode.
    pub epsilon_decay: f64,
    pub epsilon_min: f64,
    pub episodes: usize,
    pub seed: u64,
    /// Multiplicative learning-rate decay per episode (1 = constant).
    pub learning_rate_decay: f64,
    pub learning_rate_min: f64,
    /// Initial Q value for unseen states.
    pub initial_q: f64,
    /// Kept so configs listing it still parse; tabular agents have no replay buffer.
    pub replay_memory_size: usize,
    /// Unused, as above.
    pub batch_size: usize,
}

impl Default for LearnConfig {
    fn default() -> Self {
        Self {
            learning_rate: 0.75,
            discount_kappa: 0.99,
            epsilon0: 1.0,
            epsilon_decay: 0.999,
            epsilon_min: 0.001,
            episodes: 5000,
            seed: 0,
            learning_rate_decay: 1.0,
            learning_rate_min: 0.0,
            initial_q: 0.0,
            replay_memory_size: 1000,
            batch_size: 4,
        }
    }
}

impl LearnConfig {
    pub fn validate(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if !(self.learning_rate > 0.0 && self.learning_rate <= 1.0) {
            issues.push(format!("learn.learning_rate must lie in (0, 1] (got {})", self.learning_rate));
        }
        if !(self.discount_kappa > 0.0 && self.discount_kappa <= 1.0) {
            issues.push(format!("learn.discount_kappa must lie in (0, 1] (got {})", self.discount_kappa));
        }
        if !(0.0..=1.0).contains(&self.epsilon0) {
            issues.push("learn.epsilon0 must lie in [0, 1]".into());
        }
        if !(self.epsilon_decay > 0.0 && self.epsilon_decay <= 1.0) {
            issues.push("learn.epsilon_decay must lie in (0, 1]".into());
        }
        if !(0.0..=1.0).contains(&self.epsilon_min) || self.epsilon_min > self.epsilon0 {
            issues.push("learn.epsilon_min must lie in [0, epsilon0]".into());
        }
        if self.episodes == 0 {
            issues.push("learn.episodes must be >= 1".into());
        }
        if !(self.learning_rate_decay > 0.0 && self.learning_rate_decay <= 1.0) {
            issues.push("learn.learning_rate_decay must lie in (0, 1]".into());
        }
        if !(self.learning_rate_min >= 0.0 && self.learning_rate_min <= self.learning_rate) {
            issues.push("learn.learning_rate_min must lie in [0, learning_rate]".into());
        }
        if !self.initial_q.is_finite() {
            issues.push("learn.initial_q must be finite".into());
        }
        issues
    }
}

/// ε used during episode `t` (0-based): `max(ε_min, ε0·decay^t)`.
pub fn epsilon_schedule(cfg: &LearnConfig, episode: usize) -> f64 {
    (cfg.epsilon0 * cfg.epsilon_decay.powi(episode as i32)).max(cfg.epsilon_min)
}

fn learning_rate_schedule(cfg: &LearnConfig, episode: usize) -> f64 {
    (cfg.learning_rate * cfg.learning_rate_decay.powi(episode as i32)).max(cfg.learning_rate_min)
}

/// ε-greedy selection. Greedy ties go to the lowest action index.
pub fn select_action<S, R>(q: &QTable<S>, state: &S, epsilon: f64, rng: &mut R) -> usize
where
    S: Clone + Eq + std::hash::Hash,
    R: Rng + ?Sized,
{
    if epsilon > 0.0 && rng.random::<f64>() < epsilon {
        rng.random_range(0..q.n_actions())
    } else {
        q.argmax(state)
    }
}

/// `Q(s,a) ← Q(s,a) + ρ·[r + κ·max_a' Q(s',a') − Q(s,a)]`; `next = None`
/// marks an absorbing successor. Returns the new value.
pub fn q_update<S: Clone + Eq + std::hash::Hash>(
    q: &mut QTable<S>,
    state: &S,
    action: usize,
    reward: f64,
    next: Option<&S>,
    learning_rate: f64,
    discount: f64,
) -> f64 {
    let bootstrap = next.map_or(0.0, |s| q.max_value(s));
    td_update(q, state, action, reward + discount * bootstrap, learning_rate)
}

/// `Q(s,a) ← Q(s,a) + ρ·[r + κ·Q(s',a') − Q(s,a)]`.
pub fn sarsa_update<S: Clone + Eq + std::hash::Hash>(
    q: &mut QTable<S>,
    state: &S,
    action: usize,
    reward: f64,
    next: Option<(&S, usize)>,
    learning_rate: f64,
    discount: f64,
) -> f64 {
    let bootstrap = next.map_or(0.0, |(s, a)| q.value(s, a));
    td_update(q, state, action, reward + discount * bootstrap, learning_rate)
}

fn td_update<S: Clone + Eq + std::hash::Hash>(
    q: &mut QTable<S>,
    state: &S,
    action: usize,
    target: f64,
    learning_rate: f64,
) -> f64 {
    let old = q.value(state, action);
    let new = old + learning_rate * (target - old);
    if new != old {
        q.set(state, action, new);
    }
    new
}

/// Totals and per-step traces of one episode.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EpisodeMetrics {
    pub episode: usize,
    pub epsilon: f64,
    pub actions: usize,
    pub total_reward: f64,
    pub throughput_bits: f64,
    pub harvested_j: f64,
    pub motion_energy_j: f64,
    pub swipt_energy_j: f64,
    pub throughput_term: f64,
    pub harvest_term: f64,
    pub motion_term: f64,
    pub rewards: Vec<f64>,
    pub throughput_trace: Vec<f64>,
    pub harvest_trace: Vec<f64>,
}

impl EpisodeMetrics {
    fn record(&mut self, reward: f64, m: &StepMetrics) {
        self.actions += 1;
        self.total_reward += reward;
        self.throughput_bits += m.throughput_bits;
        self.harvested_j += m.harvested_j;
        self.motion_energy_j += m.motion_energy_j;
        self.swipt_energy_j += m.swipt_energy_j;
        self.throughput_term += m.throughput_term;
        self.harvest_term += m.harvest_term;
        self.motion_term += m.motion_term;
        self.rewards.push(reward);
        self.throughput_trace.push(m.throughput_bits);
        self.harvest_trace.push(m.harvested_j);
    }

    /// Navigation plus SWIPT transmit energy.
    pub fn total_energy_j(&self) -> f64 {
        self.motion_energy_j + self.swipt_energy_j
    }
}

/// Runs `cfg.episodes` episodes of the chosen algorithm.
pub fn train<M: Mdp>(env: &mut M, algo: Algorithm, cfg: &LearnConfig) -> Result<(QTable<M::State>, Vec<EpisodeMetrics>)> {
    let issues = cfg.validate();
    if !issues.is_empty() {
        return Err(Error::Config(issues));
    }
    let n_actions = env.num_actions();
    let mut q = QTable::new(n_actions, cfg.initial_q);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut history = Vec::with_capacity(cfg.episodes);

    for episode in 0..cfg.episodes {
        let epsilon = epsilon_schedule(cfg, episode);
        let lr = learning_rate_schedule(cfg, episode);
        let explore = if algo == Algorithm::Random { 1.0 } else { epsilon };
        let mut metrics = EpisodeMetrics {
            episode,
            epsilon: explore,
            ..EpisodeMetrics::default()
        };
        let mut state = env.reset_episode();
        let mut action = select_action(&q, &state, explore, &mut rng);
        loop {
            let Transition {
                next_state,
                reward,
                terminal,
                truncated,
                metrics: step,
            } = env.step_action(action)?;
            metrics.record(reward, &step);
            let next_action = match algo {
                Algorithm::QLearning => {
                    let next = (!terminal).then_some(&next_state);
                    q_update(&mut q, &state, action, reward, next, lr, cfg.discount_kappa);
                    select_action(&q, &next_state, explore, &mut rng)
                }
                Algorithm::Sarsa => {
                    let a_next = select_action(&q, &next_state, explore, &mut rng);
                    let next = (!terminal).then_some((&next_state, a_next));
                    sarsa_update(&mut q, &state, action, reward, next, lr, cfg.discount_kappa);
                    a_next
                }
                Algorithm::Random => rng.random_range(0..n_actions),
            };
            if terminal || truncated {
                break;
            }
            state = next_state;
            action = next_action;
        }
        history.push(metrics);
    }
    Ok((q, history))
}

pub enum Policy<'a, S> {
    Greedy(&'a QTable<S>),
    Uniform(&'a mut ChaCha8Rng),
}

/// One evaluation episode without learning. Returns the metrics and the
/// visited states (excluding the initial one).
pub fn rollout<M: Mdp>(env: &mut M, mut policy: Policy<'_, M::State>) -> Result<(EpisodeMetrics, Vec<M::State>)> {
    let mut metrics = EpisodeMetrics::default();
    let mut visited = Vec::new();
    let mut state = env.reset_episode();
    loop {
        let action = match &mut policy {
            Policy::Greedy(q) => q.argmax(&state),
            Policy::Uniform(rng) => rng.random_range(0..env.num_actions()),
        };
        let tr = env.step_action(action)?;
        metrics.record(tr.reward, &tr.metrics);
        visited.push(tr.next_state.clone());
        if tr.done() {
            break;
        }
        state = tr.next_state;
    }
    Ok((metrics, visited))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rollout {
    pub start: GridPos,
    /// AUV position after each action.
    pub trajectory: Vec<GridPos>,
    pub metrics: EpisodeMetrics,
}

/// Executes the ε = 0 policy of `q` for one episode.
pub fn greedy_rollout(env: &mut Environment, q: &QTable<StateKey>) -> Result<Rollout> {
    let start = env.reset(env.config().randomize_start).auv_pos;
    run_from_reset(env, start, |state| q.argmax(state))
}

/// Uniform random trajectory: the baseline evaluation policy.
pub fn random_rollout(env: &mut Environment, rng: &mut ChaCha8Rng) -> Result<Rollout> {
    let start = env.reset(env.config().randomize_start).auv_pos;
    run_from_reset(env, start, |_| rng.random_range(0..NUM_ACTIONS))
}

fn run_from_reset(env: &mut Environment, start: GridPos, mut choose: impl FnMut(&StateKey) -> usize) -> Result<Rollout> {
    let mut metrics = EpisodeMetrics::default();
    let mut visited = Vec::new();
    let mut state = env.encode_state();
    loop {
        let action = Action::from_index(choose(&state)).expect("action index in range");
        let out = env.step(action)?;
        let tr = transition(out);
        metrics.record(tr.reward, &tr.metrics);
        visited.push(tr.next_state);
        if tr.done() {
            break;
        }
        state = tr.next_state;
    }
    Ok(Rollout {
        start,
        trajectory: visited.iter().map(|k| k.auv_pos).collect(),
        metrics,
    })
}

fn transition(out: StepOutcome) -> Transition<StateKey> {
    let terminal = out.battery_depleted;
    Transition {
        next_state: out.next_state,
        reward: out.reward,
        terminal,
        truncated: out.done && !terminal,
        metrics: StepMetrics {
            throughput_bits: out.throughput_bits,
            harvested_j: out.harvested_j,
            motion_energy_j: out.motion_energy_j,
            swipt_energy_j: out.swipt_energy_j,
            throughput_term: out.throughput_term,
            harvest_term: out.harvest_term,
            motion_term: out.motion_term,
        },
    }
}

impl Mdp for Environment {
    type State = StateKey;

    fn num_actions(&self) -> usize {
        NUM_ACTIONS
    }

    fn reset_episode(&mut self) -> StateKey {
        let randomize = self.config().randomize_start;
        self.reset(randomize)
    }

    fn step_action(&mut self, action: usize) -> Result<Transition<StateKey>> {
        let action = Action::from_index(action)
            .ok_or_else(|| Error::Domain(format!("action index {action} out of range")))?;
        Ok(transition(self.step(action)?))
    }
}
