use crate::error::Result;
use crate::instance::{rank_of, Element, Instance};

/// The result of one selection run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionOutcome {
    /// The selected element. For a failed Monte Carlo run this is the
    /// rejected candidate.
    pub element: Element,
    /// Count of strictly smaller elements in the whole instance; only filled
    /// in by [`SelectionOutcome::with_rank`].
    pub rank_from_bottom: Option<usize>,
    /// Comparisons spent by this run (all repetitions, for Las Vegas).
    pub comparisons: u64,
    /// Comparisons spent before the exact-selection call: pairing in A1,
    /// group tournaments for hyperpairs, zero otherwise.
    pub grouping_comparisons: u64,
    /// Attempts made; greater than one only for Las Vegas runs.
    pub repetitions: u32,
    /// Set when a Monte Carlo run rejected its candidate.
    pub failed: bool,
}

impl SelectionOutcome {
    pub(crate) fn new(element: Element, comparisons: u64) -> Self {
        SelectionOutcome {
            element,
            rank_from_bottom: None,
            comparisons,
            grouping_comparisons: 0,
            repetitions: 1,
            failed: false,
        }
    }

    /// Fills `rank_from_bottom` from the rank oracle.
    pub fn with_rank(mut self, instance: &Instance) -> Result<Self> {
        self.rank_from_bottom = Some(rank_of(self.element, instance)?);
        Ok(self)
    }

    /// Whether the outcome is a successful `(i, j)`-mediocre selection,
    /// checked against the oracle.
    pub fn is_mediocre_in(&self, instance: &Instance) -> Result<bool> {
        if self.failed {
            return Ok(false);
        }
        let rank = rank_of(self.element, instance)?;
        Ok(instance.j() <= rank && rank + instance.i() < instance.n())
    }
}
