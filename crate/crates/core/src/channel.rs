//! Underwater acoustic link budget: Thorp absorption, spreading loss, ambient
//! noise, the passive sonar equation and Shannon capacity.
//!
//! All levels are in decibels. Frequencies are in kHz, ranges in metres.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reference distance of the source level.
pub const REFERENCE_RANGE_M: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoiseModel {
    /// Turbulence + shipping + wind + thermal PSD integrated over the band.
    Composite,
    /// Fixed in-band noise level in dB.
    ConstantOverride { nl_db: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub frequency_khz: f64,
    pub bandwidth_hz: f64,
    pub spreading_factor_k: f64,
    pub wind_speed_w: f64,
    pub shipping_factor_s: f64,
    pub noise_model: NoiseModel,
    pub sound_speed_c: f64,
}

impl Default for ChannelParams {
    fn default() -> Self {
        Self {
            frequency_khz: 24.0,
            // 22–26 kHz band
            bandwidth_hz: 4000.0,
            spreading_factor_k: 1.5,
            wind_speed_w: 10.0,
            shipping_factor_s: 0.0,
            noise_model: NoiseModel::Composite,
            sound_speed_c: 1500.0,
        }
    }
}

impl ChannelParams {
    pub fn validate(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if !(self.frequency_khz > 0.0 && self.frequency_khz.is_finite()) {
            issues.push(format!("channel.frequency_khz must be > 0 (got {})", self.frequency_khz));
        }
        if !(self.bandwidth_hz > 0.0 && self.bandwidth_hz.is_finite()) {
            issues.push(format!("channel.bandwidth_hz must be > 0 (got {})", self.bandwidth_hz));
        }
        if !(1.0..=2.0).contains(&self.spreading_factor_k) {
            issues.push(format!(
                "channel.spreading_factor_k must lie in [1, 2] (got {})",
                self.spreading_factor_k
            ));
        }
        if !(self.wind_speed_w >= 0.0 && self.wind_speed_w.is_finite()) {
            issues.push(format!("channel.wind_speed_w must be >= 0 (got {})", self.wind_speed_w));
        }
        if !(0.0..=1.0).contains(&self.shipping_factor_s) {
            issues.push(format!(
                "channel.shipping_factor_s must lie in [0, 1] (got {})",
                self.shipping_factor_s
            ));
        }
        if !(self.sound_speed_c > 0.0) {
            issues.push(format!("channel.sound_speed_c must be > 0 (got {})", self.sound_speed_c));
        }
        if let NoiseModel::ConstantOverride { nl_db } = self.noise_model {
            if !nl_db.is_finite() {
                issues.push("channel.noise_model.nl_db must be finite".into());
            }
        }
        issues
    }
}

/// Transducer description for one end of a link.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModemSpec {
    pub electrical_power_w: f64,
    pub ea_efficiency: f64,
    #[serde(default)]
    pub directivity_index_db: f64,
    /// Explicit source level; when absent it is derived from the electrical side.
    #[serde(default)]
    pub source_level_db: Option<f64>,
    pub min_snr_db: f64,
}

impl Default for ModemSpec {
    fn default() -> Self {
        Self {
            electrical_power_w: 1000.0,
            ea_efficiency: 0.5,
            directivity_index_db: 0.0,
            source_level_db: Some(170.0),
            min_snr_db: 10.0,
        }
    }
}

impl ModemSpec {
    pub fn validate(&self, prefix: &str) -> Vec<String> {
        let mut issues = Vec::new();
        if !(self.electrical_power_w > 0.0 && self.electrical_power_w.is_finite()) {
            issues.push(format!(
                "{prefix}.electrical_power_w must be > 0 (got {})",
                self.electrical_power_w
            ));
        }
        if !(self.ea_efficiency > 0.0 && self.ea_efficiency <= 1.0) {
            issues.push(format!(
                "{prefix}.ea_efficiency must lie in (0, 1] (got {})",
                self.ea_efficiency
            ));
        }
        if !self.directivity_index_db.is_finite() {
            issues.push(format!("{prefix}.directivity_index_db must be finite"));
        }
        if matches!(self.source_level_db, Some(sl) if !sl.is_finite()) {
            issues.push(format!("{prefix}.source_level_db must be finite"));
        }
        if !self.min_snr_db.is_finite() {
            issues.push(format!("{prefix}.min_snr_db must be finite"));
        }
        issues
    }
}

/// Per-component noise power spectral densities, dB re 1 µPa per Hz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoisePsd {
    pub turbulence_db: f64,
    pub shipping_db: f64,
    pub wind_db: f64,
    pub thermal_db: f64,
    pub total_db: f64,
}

fn check_frequency(frequency_khz: f64) -> Result<()> {
    if frequency_khz > 0.0 && frequency_khz.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "frequency must be positive and finite, got {frequency_khz} kHz"
        )))
    }
}

/// Thorp absorption coefficient in dB/km.
pub fn thorp_absorption(frequency_khz: f64) -> Result<f64> {
    check_frequency(frequency_khz)?;
    let f2 = frequency_khz * frequency_khz;
    Ok(0.11 * f2 / (1.0 + f2) + 44.0 * f2 / (4100.0 + f2) + 2.75e-4 * f2 + 0.003)
}

/// Source level in dB re 1 µPa @ 1 m.
pub fn source_level(modem: &ModemSpec) -> f64 {
    match modem.source_level_db {
        Some(sl) => sl,
        None => {
            170.8
                + 10.0 * modem.electrical_power_w.log10()
                + 10.0 * modem.ea_efficiency.log10()
                + modem.directivity_index_db
        }
    }
}

/// Spreading plus absorption loss over `range_m`.
///
/// The absorption coefficient is taken in dB/km and applied linearly in
/// range: `TL = k·10·log10(r) + (r/1000)·α(f)`.
pub fn transmission_loss_db(range_m: f64, params: &ChannelParams) -> Result<f64> {
    if !(range_m >= REFERENCE_RANGE_M) || !range_m.is_finite() {
        return Err(Error::Domain(format!(
            "range must be >= {REFERENCE_RANGE_M} m, got {range_m}"
        )));
    }
    let alpha = thorp_absorption(params.frequency_khz)?;
    Ok(params.spreading_factor_k * 10.0 * range_m.log10() + range_m / 1000.0 * alpha)
}

pub fn noise_psd_db(frequency_khz: f64, params: &ChannelParams) -> Result<NoisePsd> {
    check_frequency(frequency_khz)?;
    let f = frequency_khz;
    let lf = f.log10();
    let turbulence_db = 17.0 - 30.0 * lf;
    let shipping_db = 30.0 + 20.0 * params.shipping_factor_s + 26.0 * lf - 60.0 * (f + 0.03).log10();
    let wind_db = 50.0 + 7.5 * params.wind_speed_w.sqrt() + 20.0 * lf - 40.0 * (f + 0.4).log10();
    let thermal_db = -15.0 + 20.0 * lf;
    let linear: f64 = [turbulence_db, shipping_db, wind_db, thermal_db]
        .iter()
        .map(|db| 10f64.powf(db / 10.0))
        .sum();
    Ok(NoisePsd {
        turbulence_db,
        shipping_db,
        wind_db,
        thermal_db,
        total_db: 10.0 * linear.log10(),
    })
}

/// In-band noise level NL used by the sonar equation.
pub fn noise_level_db(params: &ChannelParams) -> Result<f64> {
    match params.noise_model {
        NoiseModel::ConstantOverride { nl_db } => Ok(nl_db),
        NoiseModel::Composite => {
            let psd = noise_psd_db(params.frequency_khz, params)?;
            Ok(psd.total_db + 10.0 * params.bandwidth_hz.log10())
        }
    }
}

/// Sonar equation with an already-evaluated noise level. Hot loops use this
/// with a cached NL.
pub fn snr_from_levels(source_level_db: f64, tl_db: f64, nl_db: f64, di_db: f64) -> f64 {
    source_level_db - tl_db - nl_db + di_db
}

/// `γ = SL − TL − NL + DI`.
pub fn received_snr_db(source: &ModemSpec, range_m: f64, params: &ChannelParams) -> Result<f64> {
    let tl = transmission_loss_db(range_m, params)?;
    let nl = noise_level_db(params)?;
    Ok(snr_from_levels(
        source_level(source),
        tl,
        nl,
        source.directivity_index_db,
    ))
}

/// Shannon capacity `B·log2(1+γ)` in bit/s, or 0 when `γ < γ_th`.
pub fn shannon_throughput_bps(snr_db: f64, params: &ChannelParams, min_snr_db: f64) -> f64 {
    if !(snr_db >= min_snr_db) {
        return 0.0;
    }
    params.bandwidth_hz * (1.0 + 10f64.powf(snr_db / 10.0)).log2()
}
