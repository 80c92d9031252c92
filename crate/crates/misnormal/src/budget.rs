//! Wall-clock budget for the core solvers.

use std::time::{Duration, Instant};

use misnormal_core::Budget;

/// Default solver budget in seconds when neither the flag nor the
/// `MISNORMAL_BUDGET_SECS` environment variable is set.
pub const DEFAULT_BUDGET_SECS: u64 = 600;

/// A deadline-based budget: exceeded once the wall clock passes
/// start + limit.
#[derive(Debug, Clone, Copy)]
pub struct WallClock {
    deadline: Instant,
}

impl WallClock {
    pub fn new(limit: Duration) -> WallClock {
        WallClock { deadline: Instant::now() + limit }
    }

    pub fn from_secs(secs: u64) -> WallClock {
        WallClock::new(Duration::from_secs(secs))
    }
}

impl Budget for WallClock {
    fn is_exceeded(&self) -> bool {
        Instant::now() >= self.deadline
    }
}
