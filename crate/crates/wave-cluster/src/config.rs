use crate::error::WaveError;

/// Parameters of a wave-clustering run.
#[derive(Debug, Clone)]
pub struct WaveConfig {
    /// Wave speed; the update is stable for `0 < c <= sqrt(2)`.
    pub c: f64,
    /// Number of simulated steps (also the FFT length).
    pub t_max: usize,
    /// Number of non-constant modes to extract.
    pub k: usize,
    /// Cycles of the lowest frequency required before a peak counts as
    /// resolved.
    pub eta: u32,
    /// Seed for the random initial displacement.
    pub seed: u64,
}

pub const DEFAULT_ETA: u32 = 8;

impl WaveConfig {
    pub fn new(c: f64, t_max: usize, k: usize, seed: u64) -> Result<Self, WaveError> {
        Self::with_eta(c, t_max, k, DEFAULT_ETA, seed)
    }

    pub fn with_eta(
        c: f64,
        t_max: usize,
        k: usize,
        eta: u32,
        seed: u64,
    ) -> Result<Self, WaveError> {
        if !(c > 0.0 && c <= std::f64::consts::SQRT_2) {
            return Err(WaveError::InvalidConfig(format!(
                "wave speed c = {c} outside (0, sqrt(2)]"
            )));
        }
        if t_max < 16 {
            return Err(WaveError::InvalidConfig(format!(
                "t_max = {t_max} below minimum 16"
            )));
        }
        if k < 1 {
            return Err(WaveError::InvalidConfig("k must be at least 1".into()));
        }
        if eta < 6 {
            return Err(WaveError::InvalidConfig(format!(
                "eta = {eta} below minimum 6"
            )));
        }
        Ok(Self {
            c,
            t_max,
            k,
            eta,
            seed,
        })
    }

    /// Construct without invariant checks. Exists so harnesses can probe the
    /// stability boundary with out-of-range wave speeds.
    #[doc(hidden)]
    pub fn unvalidated(c: f64, t_max: usize, k: usize, eta: u32, seed: u64) -> Self {
        Self {
            c,
            t_max,
            k,
            eta,
            seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(WaveConfig::new(1.0, 256, 2, 0).is_ok());
        assert!(WaveConfig::new(std::f64::consts::SQRT_2, 256, 2, 0).is_ok());
        assert!(WaveConfig::new(1.5, 256, 2, 0).is_err());
        assert!(WaveConfig::new(0.0, 256, 2, 0).is_err());
        assert!(WaveConfig::new(1.0, 8, 2, 0).is_err());
        assert!(WaveConfig::new(1.0, 256, 0, 0).is_err());
        assert!(WaveConfig::with_eta(1.0, 256, 2, 4, 0).is_err());
    }
}
