//! Simulation of an AUV that serves a field of underwater sensor nodes with
//! simultaneous wireless information and power transfer (SWIPT) over an
//! acoustic link, plus tabular RL agents that learn where to go.

pub mod auv;
pub mod campaign;
pub mod channel;
pub mod coverage;
pub mod env;
pub mod error;
pub mod geometry;
pub mod rl;
pub mod seed;
pub mod swipt;

pub use auv::AuvSpec;
pub use channel::{ChannelParams, ModemSpec, NoiseModel};
pub use env::{Action, EnvConfig, Environment, StateKey, StepOutcome};
pub use error::{Error, Result};
pub use geometry::{Cone, Cube, GridPos, Point3};
pub use swipt::{EnergyStore, HarvestSpec};
