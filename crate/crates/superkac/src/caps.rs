//! Size caps for oracle computations.
//!
//! Worst-case explicit constructions grow exponentially, so the oracle
//! refuses instances beyond these bounds instead of running unbounded.
//! `SUPERKAC_MAX_DIM` overrides the module-dimension cap.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_MODULE_DIM: usize = 512;
pub const DEFAULT_MAX_COCHAIN_DIM: usize = 200_000;

/// Module-dimension cap, from `SUPERKAC_MAX_DIM` when set.
pub fn max_module_dim() -> usize {
    std::env::var("SUPERKAC_MAX_DIM")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_MODULE_DIM)
}

pub fn max_cochain_dim() -> usize {
    DEFAULT_MAX_COCHAIN_DIM
}

pub fn check_module_dim(dim: usize) -> Result<()> {
    let cap = max_module_dim();
    if dim > cap {
        Err(Error::SizeCap(format!(
            "module dimension {dim} exceeds cap {cap}"
        )))
    } else {
        Ok(())
    }
}

pub fn check_cochain_dim(dim: usize) -> Result<()> {
    let cap = max_cochain_dim();
    if dim > cap {
        Err(Error::SizeCap(format!(
            "cochain dimension {dim} exceeds cap {cap}"
        )))
    } else {
        Ok(())
    }
}
