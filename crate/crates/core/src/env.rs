//! 3D underwater network environment: node field, downward cone coverage,
//! six-action lattice kinematics, per-step SWIPT and data-transfer resolution,
//! and the throughput/harvest/motion reward.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};

use crate::auv::{self, AuvSpec};
use crate::channel::{self, ChannelParams, ModemSpec, REFERENCE_RANGE_M};
use crate::error::{Error, Result};
use crate::geometry::{Cone, Cube, GridPos, Point3};
use crate::swipt::{self, EnergyStore, HarvestSpec};

/// Unit lattice moves. The discriminant is the Q-table column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Action {
    PosX = 0,
    NegX = 1,
    PosY = 2,
    NegY = 3,
    PosZ = 4,
    NegZ = 5,
}

pub const NUM_ACTIONS: usize = 6;

impl Action {
    pub const ALL: [Action; NUM_ACTIONS] = [
        Action::PosX,
        Action::NegX,
        Action::PosY,
        Action::NegY,
        Action::PosZ,
        Action::NegZ,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Action> {
        Self::ALL.get(i).copied()
    }

    pub fn delta(self) -> (i32, i32, i32) {
        match self {
            Action::PosX => (1, 0, 0),
            Action::NegX => (-1, 0, 0),
            Action::PosY => (0, 1, 0),
            Action::NegY => (0, -1, 0),
            Action::PosZ => (0, 0, 1),
            Action::NegZ => (0, 0, -1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EnvConfig {
    /// Length, width and depth of the deployment volume in metres.
    pub dims_lwh_m: [u32; 3],
    pub node_count: Option<u32>,
    /// Poisson intensity in nodes/m³; alternative to `node_count`.
    pub node_density_lambda: Option<f64>,
    pub episode_length: u32,
    pub step_duration_s: f64,
    pub rng_seed: u64,
    pub channel: ChannelParams,
    pub auv: AuvSpec,
    /// Projector on the AUV: powers the SWIPT downlink and the surface relay.
    pub auv_modem: ModemSpec,
    pub node_modem: ModemSpec,
    pub node_harvest: HarvestSpec,
    /// Capacity and initial charge of every node's store.
    pub node_store: EnergyStore,
    /// Data each node holds at the start of an episode.
    pub node_buffer_bits: f64,
    pub surface_station_xy: [f64; 2],
    /// Start column; defaults to the surface station.
    pub start_xy: Option<[i32; 2]>,
    pub randomize_start: bool,
    /// Γ: weight of the throughput term against the harvest term.
    pub reward_gamma: f64,
    /// When set, the node power-splitting ratio follows `reward_gamma`.
    pub couple_split_to_gamma: bool,
    pub throughput_scale: Option<f64>,
    pub power_scale: Option<f64>,
    pub motion_scale: Option<f64>,
    /// Ascending SNR thresholds (dB) for the state's gain bin.
    pub gain_bin_edges_db: [f64; 3],
}

pub const PACKET_BITS: f64 = 100.0 * 8.0;

impl Default for EnvConfig {
    fn default() -> Self {
        Self {
            dims_lwh_m: [100, 100, 50],
            node_count: Some(25),
            node_density_lambda: None,
            episode_length: 50,
            step_duration_s: 1.0,
            rng_seed: 42,
            channel: ChannelParams::default(),
            auv: AuvSpec::default(),
            auv_modem: ModemSpec::default(),
            node_modem: ModemSpec::default(),
            node_harvest: HarvestSpec::default(),
            node_store: EnergyStore::new(100.0, 50.0),
            node_buffer_bits: 5000.0 * PACKET_BITS,
            surface_station_xy: [0.0, 0.0],
            start_xy: None,
            randomize_start: false,
            reward_gamma: 1.0,
            couple_split_to_gamma: true,
            throughput_scale: None,
            power_scale: None,
            motion_scale: None,
            gain_bin_edges_db: [65.0, 70.0, 75.0],
        }
    }
}

impl EnvConfig {
    pub fn cube(&self) -> Cube {
        let [l, w, h] = self.dims_lwh_m;
        Cube::new(l as f64, w as f64, h as f64)
    }

    pub fn start_column(&self) -> [i32; 2] {
        self.start_xy.unwrap_or([
            self.surface_station_xy[0].round() as i32,
            self.surface_station_xy[1].round() as i32,
        ])
    }

    pub fn split_ratio(&self) -> f64 {
        if self.couple_split_to_gamma {
            self.reward_gamma
        } else {
            self.node_harvest.split_ratio
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut issues = Vec::new();
        if self.dims_lwh_m.contains(&0) {
            issues.push(format!("env.dims_lwh_m must be positive (got {:?})", self.dims_lwh_m));
        }
        match (self.node_count, self.node_density_lambda) {
            (Some(0), None) => issues.push("env.node_count must be >= 1".into()),
            (Some(_), None) => {}
            (None, Some(l)) if !(l > 0.0 && l.is_finite()) => {
                issues.push(format!("env.node_density_lambda must be > 0 (got {l})"))
            }
            (None, Some(_)) => {}
            _ => issues.push("exactly one of env.node_count / env.node_density_lambda must be set".into()),
        }
        if self.episode_length == 0 {
            issues.push("env.episode_length must be >= 1".into());
        }
        if !(self.step_duration_s > 0.0 && self.step_duration_s.is_finite()) {
            issues.push("env.step_duration_s must be > 0".into());
        }
        issues.extend(self.channel.validate());
        issues.extend(self.auv.validate("env.auv"));
        issues.extend(self.auv_modem.validate("env.auv_modem"));
        issues.extend(self.node_modem.validate("env.node_modem"));
        issues.extend(self.node_harvest.validate("env.node_harvest"));
        issues.extend(self.node_store.validate("env.node_store"));
        if !(self.node_buffer_bits >= 0.0 && self.node_buffer_bits.is_finite()) {
            issues.push("env.node_buffer_bits must be >= 0".into());
        }
        if !(0.0..=1.0).contains(&self.reward_gamma) {
            issues.push(format!("env.reward_gamma must lie in [0, 1] (got {})", self.reward_gamma));
        }
        for (name, v) in [
            ("throughput_scale", self.throughput_scale),
            ("power_scale", self.power_scale),
            ("motion_scale", self.motion_scale),
        ] {
            if matches!(v, Some(s) if !(s > 0.0 && s.is_finite())) {
                issues.push(format!("env.{name} must be > 0"));
            }
        }
        let [l, w, _] = self.dims_lwh_m;
        let [sx, sy] = self.start_column();
        if !(0..=l as i32).contains(&sx) || !(0..=w as i32).contains(&sy) {
            issues.push(format!("env start column ({sx}, {sy}) lies outside the deployment area"));
        }
        let e = self.gain_bin_edges_db;
        if !(e[0] <= e[1] && e[1] <= e[2]) {
            issues.push("env.gain_bin_edges_db must be ascending".into());
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::Config(issues))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeState {
    pub position: Point3,
    pub store: EnergyStore,
    pub data_buffer_bits: f64,
}

/// Discretised MDP state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StateKey {
    pub auv_pos: GridPos,
    pub covered_with_data: u8,
    pub covered_undercharged: u8,
    pub gain_bin: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub next_state: StateKey,
    pub reward: f64,
    /// Bits delivered to the surface station this step.
    pub throughput_bits: f64,
    /// Energy accepted by node stores this step.
    pub harvested_j: f64,
    /// AUV navigation energy this step.
    pub motion_energy_j: f64,
    /// AUV projector energy spent on SWIPT this step.
    pub swipt_energy_j: f64,
    /// Sum over covered nodes of harvestable power before splitting.
    pub received_power_w: f64,
    /// Bits removed from node buffers this step.
    pub collected_bits: f64,
    /// Weighted, normalised reward components (`reward = throughput_term + harvest_term - motion_term`).
    pub throughput_term: f64,
    pub harvest_term: f64,
    pub motion_term: f64,
    pub covered_nodes: Vec<usize>,
    /// The AUV battery ran dry this step.
    pub battery_depleted: bool,
    pub done: bool,
}

/// Reference magnitudes used to make the three reward terms commensurable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RewardScales {
    pub throughput_bits: f64,
    pub harvest_j: f64,
    pub motion_j: f64,
}

#[derive(Debug, Clone)]
struct LinkBudget {
    noise_level_db: f64,
    auv_sl_db: f64,
    node_sl_db: f64,
}

#[derive(Debug, Clone)]
pub struct Environment {
    config: EnvConfig,
    cube: Cube,
    link: LinkBudget,
    scales: RewardScales,
    split_ratio: f64,
    nodes: Vec<NodeState>,
    auv: AuvSpec,
    auv_pos: GridPos,
    auv_buffer_bits: f64,
    step_index: u32,
    done: bool,
    episode_rng: ChaCha8Rng,
    total_collected_bits: f64,
    total_relayed_bits: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuvSnapshot {
    pub position: GridPos,
    pub battery_level_j: f64,
    pub buffer_bits: f64,
    pub step_index: u32,
}

/// Plain JSON image of an environment for replay and debugging.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvSnapshot {
    pub config: EnvConfig,
    pub nodes: Vec<NodeState>,
    pub auv: AuvSnapshot,
}

fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

impl Environment {
    /// Places nodes uniformly at random in the volume using `config.rng_seed`.
    pub fn deploy(config: EnvConfig) -> Result<Self> {
        config.validate()?;
        let cube = config.cube();
        let mut rng = seeded(config.rng_seed, 0);
        let count = match (config.node_count, config.node_density_lambda) {
            (Some(n), _) => n as usize,
            (None, Some(lambda)) => {
                let mean = lambda * cube.volume();
                let poisson = Poisson::new(mean).map_err(|e| Error::config(format!("node density: {e}")))?;
                poisson.sample(&mut rng) as usize
            }
            (None, None) => unreachable!("validated"),
        };
        let positions = (0..count)
            .map(|_| {
                Point3::new(
                    rng.random::<f64>() * cube.length,
                    rng.random::<f64>() * cube.width,
                    rng.random::<f64>() * cube.height,
                )
            })
            .collect();
        Self::build(config, positions)
    }

    /// Environment over an explicit node layout.
    pub fn with_nodes(config: EnvConfig, positions: Vec<Point3>) -> Result<Self> {
        config.validate()?;
        let cube = config.cube();
        if let Some(p) = positions.iter().find(|p| !cube.contains(p)) {
            return Err(Error::config(format!("node position {p:?} lies outside the volume")));
        }
        Self::build(config, positions)
    }

    fn build(config: EnvConfig, positions: Vec<Point3>) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::config("deployment produced no nodes"));
        }
        let link = LinkBudget {
            noise_level_db: channel::noise_level_db(&config.channel)?,
            auv_sl_db: channel::source_level(&config.auv_modem),
            node_sl_db: channel::source_level(&config.node_modem),
        };
        let scales = default_scales(&config, &link)?;
        let nodes = positions
            .into_iter()
            .map(|position| NodeState {
                position,
                store: config.node_store,
                data_buffer_bits: config.node_buffer_bits,
            })
            .collect();
        let [sx, sy] = config.start_column();
        let mut env = Self {
            cube: config.cube(),
            link,
            scales,
            split_ratio: config.split_ratio(),
            nodes,
            auv: config.auv.clone(),
            auv_pos: GridPos::new(sx, sy, 0),
            auv_buffer_bits: 0.0,
            step_index: 0,
            done: false,
            episode_rng: seeded(config.rng_seed, 1),
            total_collected_bits: 0.0,
            total_relayed_bits: 0.0,
            config,
        };
        env.reset(false);
        Ok(env)
    }

    pub fn config(&self) -> &EnvConfig {
        &self.config
    }

    pub fn nodes(&self) -> &[NodeState] {
        &self.nodes
    }

    pub fn auv_position(&self) -> GridPos {
        self.auv_pos
    }

    pub fn auv(&self) -> &AuvSpec {
        &self.auv
    }

    pub fn auv_buffer_bits(&self) -> f64 {
        self.auv_buffer_bits
    }

    pub fn step_index(&self) -> u32 {
        self.step_index
    }

    pub fn is_done(&self) -> bool {
        self.done
    }

    pub fn scales(&self) -> RewardScales {
        self.scales
    }

    pub fn split_ratio(&self) -> f64 {
        self.split_ratio
    }

    /// Cumulative (collected from nodes, relayed to surface) bits since reset.
    pub fn data_totals(&self) -> (f64, f64) {
        (self.total_collected_bits, self.total_relayed_bits)
    }

    /// Changes Γ (and the coupled split ratio) without redeploying.
    pub fn set_reward_gamma(&mut self, gamma: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::config(format!("reward_gamma must lie in [0, 1] (got {gamma})")));
        }
        self.config.reward_gamma = gamma;
        self.split_ratio = self.config.split_ratio();
        Ok(())
    }

    fn cone(&self) -> Cone {
        let apex = self.auv_pos.to_point();
        Cone::new(
            apex,
            self.auv.cone_apex_angle_deg,
            self.cube.height - apex.z,
        )
    }

    fn link_range(&self, node: &NodeState) -> f64 {
        self.auv_pos.to_point().distance(&node.position).max(REFERENCE_RANGE_M)
    }

    /// AUV→node SNR in dB.
    pub fn downlink_snr_db(&self, node: usize) -> Result<f64> {
        let tl = channel::transmission_loss_db(self.link_range(&self.nodes[node]), &self.config.channel)?;
        Ok(channel::snr_from_levels(
            self.link.auv_sl_db,
            tl,
            self.link.noise_level_db,
            self.config.auv_modem.directivity_index_db,
        ))
    }

    /// Node→AUV SNR in dB.
    pub fn uplink_snr_db(&self, node: usize) -> Result<f64> {
        let tl = channel::transmission_loss_db(self.link_range(&self.nodes[node]), &self.config.channel)?;
        Ok(channel::snr_from_levels(
            self.link.node_sl_db,
            tl,
            self.link.noise_level_db,
            self.config.node_modem.directivity_index_db,
        ))
    }

    /// AUV→surface-station SNR in dB.
    pub fn relay_snr_db(&self) -> Result<f64> {
        let [sx, sy] = self.config.surface_station_xy;
        let range = self
            .auv_pos
            .to_point()
            .distance(&Point3::new(sx, sy, 0.0))
            .max(REFERENCE_RANGE_M);
        let tl = channel::transmission_loss_db(range, &self.config.channel)?;
        Ok(channel::snr_from_levels(
            self.link.auv_sl_db,
            tl,
            self.link.noise_level_db,
            self.config.auv_modem.directivity_index_db,
        ))
    }

    /// Nodes inside the downward cone whose downlink clears the AUV modem's SNR threshold.
    pub fn covered(&self) -> Vec<usize> {
        let cone = self.cone();
        (0..self.nodes.len())
            .filter(|&i| {
                cone.contains(&self.nodes[i].position)
                    && self
                        .downlink_snr_db(i)
                        .map(|g| g >= self.config.auv_modem.min_snr_db)
                        .unwrap_or(false)
            })
            .collect()
    }

    pub fn encode_state(&self) -> StateKey {
        self.encode_with(&self.covered())
    }

    fn encode_with(&self, covered: &[usize]) -> StateKey {
        let clamp = |n: usize| n.min(3) as u8;
        let with_data = covered.iter().filter(|&&i| self.nodes[i].data_buffer_bits > 0.0).count();
        let undercharged = covered.iter().filter(|&&i| !self.nodes[i].store.is_full()).count();
        let gain_bin = if covered.is_empty() {
            0
        } else {
            let mean = covered
                .iter()
                .map(|&i| self.downlink_snr_db(i).unwrap_or(f64::NEG_INFINITY))
                .sum::<f64>()
                / covered.len() as f64;
            self.config.gain_bin_edges_db.iter().filter(|&&e| mean >= e).count() as u8
        };
        StateKey {
            auv_pos: self.auv_pos,
            covered_with_data: clamp(with_data),
            covered_undercharged: clamp(undercharged),
            gain_bin,
        }
    }

    /// Restores buffers, stores, battery and start position. Node positions are untouched.
    pub fn reset(&mut self, randomize_start: bool) -> StateKey {
        for node in &mut self.nodes {
            node.store = self.config.node_store;
            node.data_buffer_bits = self.config.node_buffer_bits;
        }
        self.auv = self.config.auv.clone();
        let [sx, sy] = if randomize_start {
            let [l, w, _] = self.config.dims_lwh_m;
            [
                self.episode_rng.random_range(0..=l as i32),
                self.episode_rng.random_range(0..=w as i32),
            ]
        } else {
            self.config.start_column()
        };
        self.auv_pos = GridPos::new(sx, sy, 0);
        self.auv_buffer_bits = 0.0;
        self.step_index = 0;
        self.done = false;
        self.total_collected_bits = 0.0;
        self.total_relayed_bits = 0.0;
        self.encode_state()
    }

    fn clamp_to_volume(&self, p: GridPos) -> GridPos {
        let [l, w, h] = self.config.dims_lwh_m;
        GridPos::new(
            p.x.clamp(0, l as i32),
            p.y.clamp(0, w as i32),
            p.z.clamp(0, h as i32),
        )
    }

    pub fn step(&mut self, action: Action) -> Result<StepOutcome> {
        if self.done {
            return Err(Error::State("episode is finished; call reset".into()));
        }
        let dt = self.config.step_duration_s;
        let ch = self.config.channel.clone();

        // 1. kinematics and navigation energy
        let (dx, dy, dz) = action.delta();
        let from = self.auv_pos;
        let to = self.clamp_to_volume(GridPos::new(from.x + dx, from.y + dy, from.z + dz));
        let motion_energy_j = auv::step_energy(&self.auv, &from.to_point(), &to.to_point(), dt);
        let (battery, depleted) = self.auv.battery.drain(motion_energy_j);
        self.auv.battery = battery;
        self.auv_pos = to;

        // 2. SWIPT and data collection for covered nodes
        let covered = self.covered();
        let rewardable = self.auv_buffer_bits > 0.0
            || covered.iter().any(|&i| {
                let n = &self.nodes[i];
                n.data_buffer_bits > 0.0 || !n.store.is_full()
            });
        let node_min_snr = self.config.node_modem.min_snr_db;
        let mut harvested_j = 0.0;
        let mut received_power_w = 0.0;
        let mut collected_bits = 0.0;
        for &i in &covered {
            let down = self.downlink_snr_db(i)?;
            let up = self.uplink_snr_db(i)?;
            let received = swipt::harvestable_power(down, &self.config.node_harvest);
            received_power_w += received;
            let (info_w, harvest_w) = swipt::split_power(received, self.split_ratio);
            let node = &mut self.nodes[i];
            let (store, accepted) = node.store.charge(harvest_w, dt);
            node.store = store;
            harvested_j += accepted;
            // The node answers the poll only if the decoding share of the downlink clears its threshold.
            let decodable = info_w > 0.0 && down + 10.0 * self.split_ratio.log10() >= node_min_snr;
            if decodable && node.data_buffer_bits > 0.0 {
                let bits = node
                    .data_buffer_bits
                    .min(channel::shannon_throughput_bps(up, &ch, node_min_snr) * dt);
                node.data_buffer_bits -= bits;
                collected_bits += bits;
            }
        }
        self.auv_buffer_bits += collected_bits;
        self.total_collected_bits += collected_bits;

        // 3. store-and-forward relay to the surface station
        let relay_capacity =
            channel::shannon_throughput_bps(self.relay_snr_db()?, &ch, self.config.auv_modem.min_snr_db) * dt;
        let throughput_bits = self.auv_buffer_bits.min(relay_capacity);
        self.auv_buffer_bits -= throughput_bits;
        self.total_relayed_bits += throughput_bits;

        let swipt_energy_j = if covered.is_empty() {
            0.0
        } else {
            self.config.auv_modem.electrical_power_w * dt
        };

        // 4. reward
        let gamma = self.config.reward_gamma;
        let motion_term = motion_energy_j / self.scales.motion_j;
        let (throughput_term, harvest_term) = if rewardable {
            (
                gamma * throughput_bits / self.scales.throughput_bits,
                (1.0 - gamma) * harvested_j / self.scales.harvest_j,
            )
        } else {
            (0.0, 0.0)
        };
        let reward = throughput_term + harvest_term - motion_term;

        self.step_index += 1;
        self.done = self.step_index >= self.config.episode_length || depleted;
        Ok(StepOutcome {
            next_state: self.encode_with(&covered),
            reward,
            throughput_bits,
            harvested_j,
            motion_energy_j,
            swipt_energy_j,
            received_power_w,
            collected_bits,
            throughput_term,
            harvest_term,
            motion_term,
            covered_nodes: covered,
            battery_depleted: depleted,
            done: self.done,
        })
    }

    pub fn snapshot(&self) -> EnvSnapshot {
        EnvSnapshot {
            config: self.config.clone(),
            nodes: self.nodes.clone(),
            auv: AuvSnapshot {
                position: self.auv_pos,
                battery_level_j: self.auv.battery.level_j,
                buffer_bits: self.auv_buffer_bits,
                step_index: self.step_index,
            },
        }
    }

    /// Rebuilds an environment from a snapshot. The node layout is taken from
    /// the snapshot; per-episode state is restored as recorded.
    pub fn from_snapshot(snapshot: EnvSnapshot) -> Result<Self> {
        let positions = snapshot.nodes.iter().map(|n| n.position).collect();
        let mut env = Self::with_nodes(snapshot.config, positions)?;
        env.nodes = snapshot.nodes;
        env.auv_pos = env.clamp_to_volume(snapshot.auv.position);
        env.auv.battery.level_j = snapshot.auv.battery_level_j.clamp(0.0, env.auv.battery.capacity_j);
        env.auv_buffer_bits = snapshot.auv.buffer_bits.max(0.0);
        env.step_index = snapshot.auv.step_index;
        env.done = env.step_index >= env.config.episode_length || env.auv.battery.level_j <= 0.0;
        Ok(env)
    }

    pub fn save_snapshot(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(&self.snapshot()).expect("snapshot serialises");
        fs::write(path, json).map_err(|e| Error::io(path, e))
    }

    pub fn load_snapshot(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let snap: EnvSnapshot =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_snapshot(snap)
    }
}

fn default_scales(config: &EnvConfig, link: &LinkBudget) -> Result<RewardScales> {
    let dt = config.step_duration_s;
    let gamma_th = config.node_modem.min_snr_db;
    let throughput_bits = config.throughput_scale.unwrap_or_else(|| {
        config.channel.bandwidth_hz * (1.0 + 10f64.powf(gamma_th / 10.0) + 1.0).log2() * dt
    });
    let harvest_j = match config.power_scale {
        Some(s) => s,
        None => {
            let tl = channel::transmission_loss_db(REFERENCE_RANGE_M, &config.channel)?;
            let snr = channel::snr_from_levels(
                link.auv_sl_db,
                tl,
                link.noise_level_db,
                config.auv_modem.directivity_index_db,
            );
            swipt::harvestable_power(snr, &config.node_harvest) * dt
        }
    };
    let motion_j = config.motion_scale.unwrap_or_else(|| {
        auv::step_energy(&config.auv, &Point3::default(), &Point3::new(1.0, 0.0, 0.0), dt)
    });
    let scales = RewardScales {
        throughput_bits,
        harvest_j,
        motion_j,
    };
    if [scales.throughput_bits, scales.harvest_j, scales.motion_j]
        .iter()
        .all(|s| *s > 0.0 && s.is_finite())
    {
        Ok(scales)
    } else {
        Err(Error::config(format!("degenerate reward scales {scales:?}")))
    }
}
