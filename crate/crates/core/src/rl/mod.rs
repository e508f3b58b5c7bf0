//! Tabular value-based reinforcement learning: Q-learning, SARSA, a uniform
//! random baseline, and an exact value-iteration oracle over explicit MDPs.

mod agents;
mod qtable;
mod tabular;

use std::hash::Hash;

pub use agents::{
    epsilon_schedule, greedy_rollout, q_update, random_rollout, rollout, sarsa_update, select_action, train,
    Algorithm, EpisodeMetrics, LearnConfig, Policy, Rollout,
};
pub use qtable::QTable;
pub use tabular::{value_iteration_oracle, TabularMdp};

use crate::error::Result;

/// Per-step physical quantities reported alongside the reward. Toy MDPs leave
/// them at zero.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StepMetrics {
    pub throughput_bits: f64,
    pub harvested_j: f64,
    pub motion_energy_j: f64,
    pub swipt_energy_j: f64,
    pub throughput_term: f64,
    pub harvest_term: f64,
    pub motion_term: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transition<S> {
    pub next_state: S,
    pub reward: f64,
    /// Absorbing state reached: no bootstrap from `next_state`.
    pub terminal: bool,
    /// Episode cut off by the step budget; `next_state` is still bootstrapped.
    pub truncated: bool,
    pub metrics: StepMetrics,
}

impl<S> Transition<S> {
    pub fn done(&self) -> bool {
        self.terminal || self.truncated
    }
}

/// Episodic environment with a finite action set.
pub trait Mdp {
    type State: Clone + Eq + Hash;

    fn num_actions(&self) -> usize;

    /// Starts a new episode and returns its initial state.
    fn reset_episode(&mut self) -> Self::State;

    fn step_action(&mut self, action: usize) -> Result<Transition<Self::State>>;
}
