//! Enumeration caps.
//!
//! Defaults keep every sweep at desk scale. `REPST_LIMITS` raises or lowers
//! them, e.g. `REPST_LIMITS="partition-n=60,max-n=30"`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const LIMITS_ENV: &str = "REPST_LIMITS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` whose partitions may be enumerated.
    pub partition_n: u32,
    /// Largest rank `n` in oracle sweeps.
    pub max_n: u32,
    /// Largest `|lambda|` in interpolation sweeps.
    pub max_size: u32,
    /// Largest degree in Hilbert coefficient tables.
    pub max_m: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            partition_n: 40,
            max_n: 24,
            max_size: 10,
            max_m: 10,
        }
    }
}

impl Limits {
    /// Parses `key=value` pairs separated by commas on top of the defaults.
    pub fn parse(spec: &str) -> Result<Limits> {
        let mut limits = Limits::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in {LIMITS_ENV}, got {item:?}")))?;
            let value: u32 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad value in {LIMITS_ENV}: {item:?}")))?;
            match key.trim() {
                "partition-n" => limits.partition_n = value,
                "max-n" => limits.max_n = value,
                "max-size" => limits.max_size = value,
                "max-m" => limits.max_m = value,
                other => return Err(Error::Parse(format!("unknown key {other:?} in {LIMITS_ENV}"))),
            }
        }
        Ok(limits)
    }

    /// Process-wide limits, read once from the environment. A malformed
    /// variable falls back to the defaults.
    pub fn get() -> &'static Limits {
        static LIMITS: OnceLock<Limits> = OnceLock::new();
        LIMITS.get_or_init(|| {
            std::env::var(LIMITS_ENV)
                .ok()
                .and_then(|s| Limits::parse(&s).ok())
                .unwrap_or_default()
        })
    }

    pub fn check(what: &'static str, value: u32, limit: u32) -> Result<()> {
        if value > limit {
            Err(Error::LimitExceeded {
                what,
                value: value.into(),
                limit: limit.into(),
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let l = Limits::parse("partition-n=60, max-m=3").unwrap();
        assert_eq!(l.partition_n, 60);
        assert_eq!(l.max_m, 3);
        assert_eq!(l.max_n, Limits::default().max_n);
        assert!(Limits::parse("bogus=1").is_err());
        assert!(Limits::parse("max-n").is_err());
        assert_eq!(Limits::parse("").unwrap(), Limits::default());
    }
}
