//! State-count ceilings for enumeration tasks.
//!
//! Every exhaustive search in the crate charges the candidates it visits to
//! a [`Budget`]. Exceeding the ceiling is an explicit error naming the task,
//! never a silent truncation.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default ceiling per enumeration task: 10^8 candidate states.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A per-task state counter with a hard ceiling.
#[derive(Debug)]
pub struct Budget {
    task: String,
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64, task: impl Into<String>) -> Self {
        Budget {
            task: task.into(),
            limit,
            used: AtomicU64::new(0),
        }
    }

    /// Records `n` visited states, failing once the ceiling is crossed.
    pub fn charge(&self, n: u64) -> Result<()> {
        let prev = self.used.fetch_add(n, Ordering::Relaxed);
        if prev.saturating_add(n) > self.limit {
            return Err(Error::BudgetExceeded {
                task: self.task.clone(),
                limit: self.limit,
            });
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charges_accumulate_and_trip() {
        let b = Budget::new(10, "test task");
        assert!(b.charge(6).is_ok());
        assert!(b.charge(4).is_ok());
        let err = b.charge(1).unwrap_err();
        assert!(err.to_string().contains("test task"), "{err}");
    }
}
