//! Resource limits for the exponential searches.
//!
//! A [`Budget`] combines an optional wall-clock deadline with an optional
//! cap on search steps. It is shared by reference across worker threads;
//! the step counter is the only mutable state and is atomic.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::BudgetExceeded;

const CLOCK_CHECK_INTERVAL: u64 = 1 << 12;

#[derive(Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    max_steps: Option<u64>,
    steps: AtomicU64,
    tripped: AtomicBool,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self {
            deadline: None,
            max_steps: None,
            steps: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    pub fn with_time(limit: Duration) -> Self {
        Self {
            deadline: Some(Instant::now() + limit),
            ..Self::unlimited()
        }
    }

    pub fn with_steps(max_steps: u64) -> Self {
        Self {
            max_steps: Some(max_steps),
            ..Self::unlimited()
        }
    }

    #[must_use]
    pub fn and_steps(mut self, max_steps: u64) -> Self {
        self.max_steps = Some(max_steps);
        self
    }

    pub fn steps_used(&self) -> u64 {
        self.steps.load(Ordering::Relaxed)
    }

    pub fn is_exhausted(&self) -> bool {
        self.tripped.load(Ordering::Relaxed)
    }

    /// Records `n` steps of work and fails once either limit is passed.
    /// After the first failure every later call fails too.
    pub fn tick(&self, n: u64) -> Result<(), BudgetExceeded> {
        if self.tripped.load(Ordering::Relaxed) {
            return Err(self.reason());
        }
        let before = self.steps.fetch_add(n, Ordering::Relaxed);
        let after = before + n;
        if let Some(max) = self.max_steps {
            if after > max {
                self.tripped.store(true, Ordering::Relaxed);
                return Err(BudgetExceeded::Steps);
            }
        }
        if let Some(deadline) = self.deadline {
            let crossed = before / CLOCK_CHECK_INTERVAL != after / CLOCK_CHECK_INTERVAL;
            if (crossed || n >= CLOCK_CHECK_INTERVAL) && Instant::now() >= deadline {
                self.tripped.store(true, Ordering::Relaxed);
                return Err(BudgetExceeded::Time);
            }
        }
        Ok(())
    }

    fn reason(&self) -> BudgetExceeded {
        match self.max_steps {
            Some(max) if self.steps_used() > max => BudgetExceeded::Steps,
            _ => BudgetExceeded::Time,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}
