//! Exact combinatorial search on graphs: maximum cliques, maximum
//! independent sets, and enumeration of the maximum independent sets.

mod clique;
mod enumerate;

use std::time::{Duration, Instant};

pub use clique::{
    max_clique, max_clique_with, max_independent_set, max_independent_set_with, CliqueOptions, CliqueResult,
};
pub use enumerate::{
    clique_partition, enumerate_max_independent_sets, is_clique_partition, visit_independent_sets, EnumerateOptions,
    SearchOutcome,
};

/// A wall-clock limit shared by one or more searches. The default never
/// expires.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn never() -> Self {
        Deadline(None)
    }

    pub fn after(budget: Duration) -> Self {
        Deadline(Instant::now().checked_add(budget))
    }

    pub fn expired(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }

    pub fn earliest(self, other: Deadline) -> Deadline {
        match (self.0, other.0) {
            (Some(a), Some(b)) => Deadline(Some(a.min(b))),
            (a, b) => Deadline(a.or(b)),
        }
    }
}
