//! Numeric budgets shared by the solvers.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("precision {precision} exceeds the maximum {max}")]
    PrecisionAboveMax { precision: u32, max: u32 },
    #[error("precision must be at least 16 bits")]
    PrecisionTooLow,
    #[error("tolerance must be a positive finite number")]
    BadTolerance,
    #[error("grid resolution must be at least 2")]
    BadGrid,
    #[error("horizon must be at least 1")]
    BadHorizon,
}

/// Precision ladder, tolerances and search budgets.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Starting working precision in bits.
    pub precision_bits: u32,
    /// Acceptance threshold for fitted witnesses and reported residuals.
    pub tolerance: f64,
    /// Precision at which escalation stops with `CertificationFailed`.
    pub max_precision_bits: u32,
    /// Horizon for gcd tables of shifted powers.
    pub max_k: usize,
    /// Lines per direction in the simple-real-point search.
    pub grid_resolution: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            precision_bits: 128,
            tolerance: 1e-12,
            max_precision_bits: 4096,
            max_k: 24,
            grid_resolution: 64,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.precision_bits < 16 {
            return Err(ConfigError::PrecisionTooLow);
        }
        if self.precision_bits > self.max_precision_bits {
            return Err(ConfigError::PrecisionAboveMax {
                precision: self.precision_bits,
                max: self.max_precision_bits,
            });
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(ConfigError::BadTolerance);
        }
        if self.grid_resolution < 2 {
            return Err(ConfigError::BadGrid);
        }
        if self.max_k < 1 {
            return Err(ConfigError::BadHorizon);
        }
        Ok(())
    }
}
