use num_bigint::BigUint;

use crate::error::{Error, Result};

pub const DEFAULT_GUARD: u64 = 10_000_000;

/// Upper bound on the number of candidates an exhaustive routine may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub limit: u64,
}

impl Guard {
    pub fn new(limit: u64) -> Self {
        Self { limit }
    }

    pub fn unlimited() -> Self {
        Self { limit: u64::MAX }
    }

    pub fn check(&self, what: &'static str, required: &BigUint) -> Result<()> {
        if *required > BigUint::from(self.limit) {
            return Err(Error::GuardExceeded {
                what,
                required: required.to_string(),
                limit: self.limit,
            });
        }
        Ok(())
    }
}

impl Default for Guard {
    fn default() -> Self {
        Self::new(DEFAULT_GUARD)
    }
}
