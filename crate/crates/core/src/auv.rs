//! AUV energetics: hydrodynamic drag, propulsion power and battery bookkeeping.

use serde::{Deserialize, Serialize};

use crate::geometry::Point3;
use crate::swipt::EnergyStore;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuvSpec {
    pub drag_coefficient_cd: f64,
    pub frontal_area_m2: f64,
    /// kg/m³
    pub water_density: f64,
    /// Mechanical-to-electrical conversion factor of the drive train.
    pub motor_efficiency_beta: f64,
    pub speed_mps: f64,
    pub hotel_load_w: f64,
    pub battery: EnergyStore,
    /// Full apex angle of the downward acoustic coverage cone.
    pub cone_apex_angle_deg: f64,
}

impl Default for AuvSpec {
    fn default() -> Self {
        Self {
            drag_coefficient_cd: 0.4,
            frontal_area_m2: 0.04,
            water_density: 1025.0,
            motor_efficiency_beta: 0.5,
            speed_mps: 1.0,
            hotel_load_w: 30.0,
            // 1 kWh pack
            battery: EnergyStore::new(3.6e6, 3.6e6),
            cone_apex_angle_deg: 60.0,
        }
    }
}

impl AuvSpec {
    pub fn validate(&self, prefix: &str) -> Vec<String> {
        let mut issues = Vec::new();
        let positive = [
            ("drag_coefficient_cd", self.drag_coefficient_cd),
            ("frontal_area_m2", self.frontal_area_m2),
            ("water_density", self.water_density),
            ("speed_mps", self.speed_mps),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                issues.push(format!("{prefix}.{name} must be > 0 (got {v})"));
            }
        }
        if !(self.motor_efficiency_beta > 0.0 && self.motor_efficiency_beta <= 1.0) {
            issues.push(format!("{prefix}.motor_efficiency_beta must lie in (0, 1]"));
        }
        if !(self.hotel_load_w >= 0.0 && self.hotel_load_w.is_finite()) {
            issues.push(format!("{prefix}.hotel_load_w must be >= 0"));
        }
        if !(self.cone_apex_angle_deg > 0.0 && self.cone_apex_angle_deg < 180.0) {
            issues.push(format!("{prefix}.cone_apex_angle_deg must lie in (0, 180)"));
        }
        issues.extend(self.battery.validate(&format!("{prefix}.battery")));
        issues
    }
}

/// `D = C_D·A·ρ·v² / (2β)`.
pub fn drag_force(spec: &AuvSpec) -> f64 {
    spec.drag_coefficient_cd * spec.frontal_area_m2 * spec.water_density * spec.speed_mps * spec.speed_mps
        / (2.0 * spec.motor_efficiency_beta)
}

/// `P_prop = C_D·A·ρ·v³ / (2β)`, excluding hotel load.
pub fn propulsion_power(spec: &AuvSpec) -> f64 {
    drag_force(spec) * spec.speed_mps
}

/// Total electrical power while under way: propulsion plus hotel load.
pub fn electrical_power(spec: &AuvSpec) -> f64 {
    propulsion_power(spec) + spec.hotel_load_w
}

/// Energy to travel the straight segment `from → to` at cruise speed.
pub fn move_energy(spec: &AuvSpec, from: &Point3, to: &Point3) -> f64 {
    let d = from.distance(to);
    electrical_power(spec) * d / spec.speed_mps
}

/// Hotel-load energy while holding station for `dwell_s`.
pub fn hover_energy(spec: &AuvSpec, dwell_s: f64) -> f64 {
    spec.hotel_load_w * dwell_s.max(0.0)
}

/// Energy for one control step of `step_s` seconds in which the vehicle moves
/// `from → to` and holds station for whatever time remains.
pub fn step_energy(spec: &AuvSpec, from: &Point3, to: &Point3, step_s: f64) -> f64 {
    let travel_s = from.distance(to) / spec.speed_mps;
    move_energy(spec, from, to) + hover_energy(spec, step_s - travel_s)
}

/// Drains the battery by `energy_j`, flooring at zero.
pub fn drain_battery(mut spec: AuvSpec, energy_j: f64) -> (AuvSpec, bool) {
    let (battery, depleted) = spec.battery.drain(energy_j);
    spec.battery = battery;
    (spec, depleted)
}
