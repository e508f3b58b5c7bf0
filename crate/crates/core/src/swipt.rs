//! SWIPT receive chain: hydrophone voltage, harvestable electrical power,
//! power splitting and storage accounting.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarvestSpec {
    /// `20·log10(M)`, dB re V/µPa.
    pub sensitivity_rho_db: f64,
    /// Hydrophone sensitivity M in V/µPa.
    pub sensitivity_m: f64,
    pub load_resistance_ohm: f64,
    pub array_elements_n: u32,
    /// Acousto-electric conversion efficiency.
    pub ae_efficiency: f64,
    /// Fraction of received power routed to information decoding.
    pub split_ratio: f64,
}

impl HarvestSpec {
    pub fn from_sensitivity_db(rho_db: f64) -> Self {
        Self {
            sensitivity_rho_db: rho_db,
            sensitivity_m: 10f64.powf(rho_db / 20.0),
            ..Self::default()
        }
    }

    pub fn validate(&self, prefix: &str) -> Vec<String> {
        let mut issues = Vec::new();
        if !(self.sensitivity_m > 0.0) {
            issues.push(format!("{prefix}.sensitivity_m must be > 0"));
        } else {
            let derived = 20.0 * self.sensitivity_m.log10();
            let tol = 1e-9 * self.sensitivity_rho_db.abs().max(1.0);
            if (derived - self.sensitivity_rho_db).abs() > tol {
                issues.push(format!(
                    "{prefix}.sensitivity_rho_db ({}) disagrees with 20·log10(sensitivity_m) = {derived}",
                    self.sensitivity_rho_db
                ));
            }
        }
        if !(self.load_resistance_ohm > 0.0) {
            issues.push(format!("{prefix}.load_resistance_ohm must be > 0"));
        }
        if self.array_elements_n == 0 {
            issues.push(format!("{prefix}.array_elements_n must be >= 1"));
        }
        if !(self.ae_efficiency > 0.0 && self.ae_efficiency <= 1.0) {
            issues.push(format!("{prefix}.ae_efficiency must lie in (0, 1]"));
        }
        if !(0.0..=1.0).contains(&self.split_ratio) {
            issues.push(format!("{prefix}.split_ratio must lie in [0, 1]"));
        }
        issues
    }
}

impl Default for HarvestSpec {
    fn default() -> Self {
        Self {
            sensitivity_rho_db: -160.0,
            sensitivity_m: 1e-8,
            load_resistance_ohm: 25.0,
            array_elements_n: 1,
            ae_efficiency: 0.5,
            split_ratio: 0.5,
        }
    }
}

/// `V_ind = 10^(γ/20)·10^(ρ/20)`.
pub fn induced_voltage(snr_db: f64, spec: &HarvestSpec) -> f64 {
    10f64.powf(snr_db / 20.0) * 10f64.powf(spec.sensitivity_rho_db / 20.0)
}

/// `P = n·η·10^((γ+ρ)/10) / (4·R_p)`.
pub fn harvestable_power(snr_db: f64, spec: &HarvestSpec) -> f64 {
    spec.array_elements_n as f64 * spec.ae_efficiency * 10f64.powf((snr_db + spec.sensitivity_rho_db) / 10.0)
        / (4.0 * spec.load_resistance_ohm)
}

/// Splits `received_power_w` into `(information, harvest)` parts.
pub fn split_power(received_power_w: f64, split_ratio: f64) -> (f64, f64) {
    // The larger share is rounded and the smaller one is its exact remainder
    // (Sterbenz), so the parts always sum to the input bit for bit.
    if split_ratio >= 0.5 {
        let info = split_ratio * received_power_w;
        (info, received_power_w - info)
    } else {
        let harvest = (1.0 - split_ratio) * received_power_w;
        (received_power_w - harvest, harvest)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyStore {
    pub capacity_j: f64,
    pub level_j: f64,
    pub charge_efficiency: f64,
}

impl EnergyStore {
    pub fn new(capacity_j: f64, level_j: f64) -> Self {
        Self {
            capacity_j,
            level_j: level_j.clamp(0.0, capacity_j),
            charge_efficiency: 1.0,
        }
    }

    pub fn headroom_j(&self) -> f64 {
        (self.capacity_j - self.level_j).max(0.0)
    }

    pub fn is_full(&self) -> bool {
        self.level_j >= self.capacity_j
    }

    /// Adds `harvest_w·duration_s·efficiency`, saturating at capacity.
    /// Returns the updated store and the energy actually accepted.
    pub fn charge(mut self, harvest_w: f64, duration_s: f64) -> (Self, f64) {
        let offered = (harvest_w * duration_s * self.charge_efficiency).max(0.0);
        let accepted = offered.min(self.headroom_j());
        self.level_j = (self.level_j + accepted).min(self.capacity_j);
        (self, accepted)
    }

    /// Removes up to `energy_j`, flooring at zero. The flag is set once the
    /// store is empty.
    pub fn drain(mut self, energy_j: f64) -> (Self, bool) {
        self.level_j = (self.level_j - energy_j.max(0.0)).max(0.0);
        (self, self.level_j <= 0.0)
    }

    pub fn validate(&self, prefix: &str) -> Vec<String> {
        let mut issues = Vec::new();
        if !(self.capacity_j > 0.0 && self.capacity_j.is_finite()) {
            issues.push(format!("{prefix}.capacity_j must be > 0"));
        }
        if !(self.level_j >= 0.0 && self.level_j <= self.capacity_j) {
            issues.push(format!("{prefix}.level_j must lie in [0, capacity_j]"));
        }
        if !(self.charge_efficiency > 0.0 && self.charge_efficiency <= 1.0) {
            issues.push(format!("{prefix}.charge_efficiency must lie in (0, 1]"));
        }
        issues
    }
}
