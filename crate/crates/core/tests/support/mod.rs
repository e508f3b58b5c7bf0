#![allow(dead_code)]

#[path = "../oracle/physics_data.rs"]
pub mod physics_data;

use aquaswipt::auv::{self, AuvSpec};
use aquaswipt::channel::{self, ChannelParams, ModemSpec};
use aquaswipt::env::{Action, EnvConfig, Environment};
use aquaswipt::geometry::{GridPos, Point3};
use aquaswipt::rl::{train, value_iteration_oracle, Algorithm, LearnConfig, QTable, TabularMdp};
use aquaswipt::swipt::{self, EnergyStore, HarvestSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Relative error, falling back to absolute error for references below 1 in
/// magnitude (dB values cross zero).
pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

/// Pure relative error for strictly positive quantities spanning many decades.
pub fn strict_rel_err(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

pub struct OracleCheck {
    pub name: &'static str,
    pub cases: usize,
    pub worst: f64,
}

pub fn physics_checks() -> Vec<OracleCheck> {
    use physics_data::*;
    let mut out = Vec::new();
    let mut check = |name, errs: Vec<f64>| {
        out.push(OracleCheck {
            name,
            cases: errs.len(),
            worst: errs.into_iter().fold(0.0, f64::max),
        })
    };

    check(
        "thorp_absorption",
        THORP
            .iter()
            .map(|&(f, want)| rel_err(channel::thorp_absorption(f).unwrap(), want))
            .collect(),
    );

    let mut noise = Vec::new();
    for &(f, w, s, nt, ns, nw, nth, total) in NOISE {
        let params = ChannelParams {
            wind_speed_w: w,
            shipping_factor_s: s,
            ..ChannelParams::default()
        };
        let psd = channel::noise_psd_db(f, &params).unwrap();
        for (got, want) in [
            (psd.turbulence_db, nt),
            (psd.shipping_db, ns),
            (psd.wind_db, nw),
            (psd.thermal_db, nth),
            (psd.total_db, total),
        ] {
            noise.push(rel_err(got, want));
        }
    }
    check("noise_psd_db", noise);

    check(
        "transmission_loss_db",
        TRANSMISSION_LOSS
            .iter()
            .map(|&(r, k, f, want)| {
                let params = ChannelParams {
                    spreading_factor_k: k,
                    frequency_khz: f,
                    ..ChannelParams::default()
                };
                rel_err(channel::transmission_loss_db(r, &params).unwrap(), want)
            })
            .collect(),
    );

    check(
        "source_level",
        SOURCE_LEVEL
            .iter()
            .map(|&(p, eta, di, want)| {
                let modem = ModemSpec {
                    electrical_power_w: p,
                    ea_efficiency: eta,
                    directivity_index_db: di,
                    source_level_db: None,
                    ..ModemSpec::default()
                };
                rel_err(channel::source_level(&modem), want)
            })
            .collect(),
    );

    check(
        "induced_voltage",
        INDUCED_VOLTAGE
            .iter()
            .map(|&(g, rho, want)| strict_rel_err(swipt::induced_voltage(g, &HarvestSpec::from_sensitivity_db(rho)), want))
            .collect(),
    );

    check(
        "harvestable_power",
        HARVESTABLE_POWER
            .iter()
            .map(|&(g, rho, n, eta, r, want)| {
                let spec = HarvestSpec {
                    array_elements_n: n,
                    ae_efficiency: eta,
                    load_resistance_ohm: r,
                    ..HarvestSpec::from_sensitivity_db(rho)
                };
                strict_rel_err(swipt::harvestable_power(g, &spec), want)
            })
            .collect(),
    );

    let mut drag = Vec::new();
    let mut prop = Vec::new();
    for &(cd, a, rho, v, beta, want_d, want_p) in PROPULSION {
        let spec = AuvSpec {
            drag_coefficient_cd: cd,
            frontal_area_m2: a,
            water_density: rho,
            speed_mps: v,
            motor_efficiency_beta: beta,
            ..AuvSpec::default()
        };
        drag.push(strict_rel_err(auv::drag_force(&spec), want_d));
        prop.push(strict_rel_err(auv::propulsion_power(&spec), want_p));
    }
    check("drag_force", drag);
    check("propulsion_power", prop);
    out
}

/// Worst relative gap between harvestable power and `n·η·V²/(4R)` over
/// seeded random inputs.
pub fn voltage_power_consistency(samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let spec = HarvestSpec {
            array_elements_n: rng.random_range(1..=16),
            ae_efficiency: rng.random_range(0.05..1.0),
            load_resistance_ohm: rng.random_range(1.0..500.0),
            ..HarvestSpec::from_sensitivity_db(rng.random_range(-200.0..0.0))
        };
        let g = rng.random_range(-20.0..120.0);
        let v = swipt::induced_voltage(g, &spec);
        let via_voltage = spec.array_elements_n as f64 * spec.ae_efficiency * v * v / (4.0 * spec.load_resistance_ohm);
        worst = worst.max(strict_rel_err(swipt::harvestable_power(g, &spec), via_voltage));
    }
    worst
}

/// Random deterministic MDP with `states` states, a few of them terminal.
pub fn random_toy_mdp(states: usize, actions: usize, seed: u64) -> TabularMdp {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let next = (0..states)
        .map(|_| (0..actions).map(|_| rng.random_range(0..states)).collect())
        .collect();
    let rewards = (0..states)
        .map(|_| (0..actions).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    let terminal = (0..states).map(|s| s > 0 && rng.random::<f64>() < 0.15).collect();
    TabularMdp::deterministic(next, rewards, terminal, seed ^ 0x5eed).unwrap()
}

/// Smallest gap between the best and second-best optimal action value over
/// non-terminal states.
pub fn min_action_gap(q: &[Vec<f64>], terminal: &[bool]) -> f64 {
    let mut gap = f64::INFINITY;
    for (s, row) in q.iter().enumerate() {
        if terminal[s] {
            continue;
        }
        let mut sorted = row.clone();
        sorted.sort_by(|a, b| b.total_cmp(a));
        gap = gap.min(sorted[0] - sorted[1]);
    }
    gap
}

pub fn argmax(row: &[f64]) -> usize {
    let mut best = 0;
    for i in 1..row.len() {
        if row[i] > row[best] {
            best = i;
        }
    }
    best
}

/// 3×1×1 m corridor: the AUV starts at the origin and one node sits on the
/// far bottom edge, so only the column x = 3 sees it.
pub fn corridor_env(episode_length: u32) -> Environment {
    let cfg = EnvConfig {
        dims_lwh_m: [3, 1, 1],
        node_count: Some(1),
        episode_length,
        start_xy: Some([0, 0]),
        ..EnvConfig::default()
    };
    Environment::with_nodes(cfg, vec![Point3::new(3.0, 0.0, 1.0)]).unwrap()
}

/// Fewest actions after which some node is covered, by exhaustive search over
/// action sequences up to `max_len`.
pub fn brute_force_min_actions(env: &Environment, max_len: usize) -> Option<usize> {
    let mut frontier = vec![env.clone()];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for e in &frontier {
            for a in Action::ALL {
                let mut child = e.clone();
                let out = child.step(a).unwrap();
                if !out.covered_nodes.is_empty() {
                    return Some(len);
                }
                if !out.done {
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    None
}

/// Best discounted episode return and the AUV path of every sequence that
/// attains it (within `tol`), by enumerating all action sequences.
pub fn brute_force_best_paths(env: &Environment, kappa: f64, tol: f64) -> (f64, Vec<Vec<GridPos>>) {
    let mut best = f64::NEG_INFINITY;
    let mut paths: Vec<Vec<GridPos>> = Vec::new();
    let mut stack = vec![(env.clone(), 0.0, Vec::new())];
    while let Some((e, ret, path)) = stack.pop() {
        for a in Action::ALL {
            let mut child = e.clone();
            let out = child.step(a).unwrap();
            let r = ret + kappa.powi(path.len() as i32) * out.reward;
            let mut p = path.clone();
            p.push(child.auv_position());
            if out.done {
                if r > best + tol {
                    best = r;
                    paths.clear();
                }
                if (r - best).abs() <= tol && !paths.contains(&p) {
                    paths.push(p);
                }
            } else {
                stack.push((child, r, p));
            }
        }
    }
    (best, paths)
}

/// Outcome of the conservation fuzzer: steps taken and the first violation.
#[derive(Debug, Default)]
pub struct FuzzReport {
    pub steps: usize,
    pub episodes: usize,
    pub covered_steps: usize,
    pub harvest_steps: usize,
    pub relay_steps: usize,
    pub depletions: usize,
    pub violation: Option<String>,
}

/// Drives randomly configured environments with random actions for `steps`
/// steps, checking the per-step energy and data invariants.
pub fn conservation_fuzz(steps: usize, seed: u64) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = FuzzReport::default();
    while report.steps < steps {
        let dims = [rng.random_range(2..30), rng.random_range(2..30), rng.random_range(2..15)];
        let capacity = rng.random_range(1e-12..1e-9);
        let cfg = EnvConfig {
            dims_lwh_m: dims,
            node_count: Some(rng.random_range(1..12)),
            episode_length: rng.random_range(5..60),
            rng_seed: rng.random(),
            reward_gamma: rng.random_range(0.0..=1.0),
            randomize_start: rng.random_bool(0.5),
            node_buffer_bits: rng.random_range(0.0..2e5),
            node_store: EnergyStore {
                capacity_j: capacity,
                level_j: rng.random_range(0.0..capacity),
                charge_efficiency: rng.random_range(0.5..=1.0),
            },
            auv: AuvSpec {
                battery: EnergyStore::new(rng.random_range(50.0..5000.0), f64::INFINITY),
                speed_mps: rng.random_range(0.5..2.0),
                ..AuvSpec::default()
            },
            start_xy: Some([rng.random_range(0..=dims[0] as i32), rng.random_range(0..=dims[1] as i32)]),
            ..EnvConfig::default()
        };
        let mut env = match Environment::deploy(cfg.clone()) {
            Ok(e) => e,
            Err(e) => {
                report.violation = Some(format!("deploy failed: {e}"));
                return report;
            }
        };
        for _ in 0..rng.random_range(1..6) {
            env.reset(cfg.randomize_start);
            report.episodes += 1;
            let initial_total: f64 = env.nodes().iter().map(|n| n.data_buffer_bits).sum();
            let mut removed = 0.0;
            let mut relayed = 0.0;
            let alpha = env.split_ratio();
            loop {
                let before_nodes = env.nodes().to_vec();
                let battery_before = env.auv().battery.level_j;
                let step_before = env.step_index();
                let action = Action::ALL[rng.random_range(0..6)];
                let out = env.step(action).unwrap();
                report.steps += 1;
                report.covered_steps += usize::from(!out.covered_nodes.is_empty());
                report.harvest_steps += usize::from(out.harvested_j > 0.0);
                report.relay_steps += usize::from(out.throughput_bits > 0.0);
                report.depletions += usize::from(out.battery_depleted);
                let seed = cfg.rng_seed;
                let fail = |mut report: FuzzReport, msg: String| {
                    report.violation = Some(format!("{msg} (config seed {seed})"));
                    report
                };

                let dt = cfg.step_duration_s;
                let eff = cfg.node_store.charge_efficiency;
                let gained: f64 = env
                    .nodes()
                    .iter()
                    .zip(&before_nodes)
                    .map(|(a, b)| a.store.level_j - b.store.level_j)
                    .sum();
                let bound = (1.0 - alpha) * out.received_power_w * dt * eff;
                if gained > bound * (1.0 + 1e-9) + 1e-300 {
                    return fail(report, format!("store gain {gained} exceeds harvest bound {bound}"));
                }
                if (gained - out.harvested_j).abs() > 1e-9 * out.harvested_j.max(1e-300) {
                    return fail(report, format!("harvested_j {} != store gain {gained}", out.harvested_j));
                }
                for (a, b) in env.nodes().iter().zip(&before_nodes) {
                    if a.store.level_j < b.store.level_j || a.store.level_j > a.store.capacity_j {
                        return fail(report, "node store left [previous, capacity]".into());
                    }
                    if a.data_buffer_bits < 0.0 || a.data_buffer_bits > b.data_buffer_bits {
                        return fail(report, "node buffer grew or went negative".into());
                    }
                }
                removed += before_nodes
                    .iter()
                    .zip(env.nodes())
                    .map(|(b, a)| b.data_buffer_bits - a.data_buffer_bits)
                    .sum::<f64>();
                relayed += out.throughput_bits;
                let slack = 1e-9 * initial_total.max(1.0);
                if relayed > removed + slack || removed > initial_total + slack {
                    return fail(report, format!("data: relayed {relayed}, removed {removed}, initial {initial_total}"));
                }
                let p = env.auv_position();
                if p.x < 0 || p.y < 0 || p.z < 0 || p.x > dims[0] as i32 || p.y > dims[1] as i32 || p.z > dims[2] as i32 {
                    return fail(report, format!("AUV left the volume at {p:?}"));
                }
                let battery = env.auv().battery.level_j;
                if battery > battery_before {
                    return fail(report, "battery level increased".into());
                }
                let depleted = battery <= 0.0;
                let expect_done = step_before + 1 == cfg.episode_length || depleted;
                if out.done != expect_done {
                    return fail(report, format!("done = {} but step {} / depleted {depleted}", out.done, step_before + 1));
                }
                if out.done {
                    break;
                }
            }
            if report.steps >= steps {
                break;
            }
        }
    }
    report
}

/// Outcome of training both learners on one random toy MDP.
pub struct ToyResult {
    pub seed: u64,
    pub states: usize,
    pub q_policy_matches: bool,
    pub q_sup_error: f64,
    pub q_bellman_residual: f64,
    pub sarsa_policy_matches: bool,
}

pub const TOY_KAPPA: f64 = 0.9;
pub const TOY_ACTIONS: usize = 6;
/// Oracle action gaps below this are treated as ties and the MDP is skipped.
pub const TOY_MIN_GAP: f64 = 0.01;

/// Q-learning with uniform exploration and an annealed learning rate.
pub fn toy_q_config(seed: u64) -> LearnConfig {
    LearnConfig {
        learning_rate: 0.75,
        learning_rate_decay: 0.9998,
        learning_rate_min: 0.25,
        discount_kappa: TOY_KAPPA,
        epsilon0: 1.0,
        epsilon_decay: 1.0,
        epsilon_min: 0.0,
        episodes: 30_000,
        seed,
        ..LearnConfig::default()
    }
}

/// SARSA in the ε → 0 limit. Optimistic values at the bound `1/(1-κ)` keep
/// every estimate above Q*, which drives the exploration instead.
pub fn toy_sarsa_config(seed: u64) -> LearnConfig {
    LearnConfig {
        epsilon0: 0.0,
        epsilon_decay: 1.0,
        episodes: 10_000,
        initial_q: 1.0 / (1.0 - TOY_KAPPA),
        ..toy_q_config(seed)
    }
}

/// Largest one-step Bellman optimality residual of `q` on a deterministic MDP.
pub fn bellman_residual(mdp: &TabularMdp, q: &[Vec<f64>], kappa: f64) -> f64 {
    let mut worst = 0.0f64;
    for s in (0..mdp.num_states()).filter(|&s| !mdp.terminal[s]) {
        for a in 0..q[s].len() {
            let next = mdp.transitions[s][a][0].0;
            let future = if mdp.terminal[next] { 0.0 } else { q[next].iter().copied().fold(f64::MIN, f64::max) };
            worst = worst.max((q[s][a] - mdp.rewards[s][a] - kappa * future).abs());
        }
    }
    worst
}

/// Trains both learners on the MDP for `seed`, or returns `None` when the
/// oracle policy has near-ties.
pub fn toy_case(seed: u64) -> Option<ToyResult> {
    let states = 5 + (seed as usize % 16);
    let mut mdp = random_toy_mdp(states, TOY_ACTIONS, seed);
    mdp.max_steps = 10;
    let oracle = value_iteration_oracle(&mdp, TOY_KAPPA, 1e-12).unwrap();
    if min_action_gap(&oracle, &mdp.terminal) < TOY_MIN_GAP {
        return None;
    }
    let live: Vec<usize> = (0..states).filter(|&s| !mdp.terminal[s]).collect();
    let rows = |q: &QTable<usize>| (0..states).map(|s| q.row(&s)).collect::<Vec<_>>();
    let same_policy = |q: &[Vec<f64>]| live.iter().all(|&s| argmax(&q[s]) == argmax(&oracle[s]));

    let (q, _) = train(&mut mdp.clone(), Algorithm::QLearning, &toy_q_config(seed)).unwrap();
    let learned = rows(&q);
    let q_sup_error = live
        .iter()
        .flat_map(|&s| learned[s].iter().zip(&oracle[s]).map(|(a, b)| (a - b).abs()))
        .fold(0.0, f64::max);

    let (sq, _) = train(&mut mdp.clone(), Algorithm::Sarsa, &toy_sarsa_config(seed)).unwrap();
    Some(ToyResult {
        seed,
        states,
        q_policy_matches: same_policy(&learned),
        q_sup_error,
        q_bellman_residual: bellman_residual(&mdp, &learned, TOY_KAPPA),
        sarsa_policy_matches: same_policy(&rows(&sq)),
    })
}
