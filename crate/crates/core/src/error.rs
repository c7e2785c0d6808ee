use thiserror::Error;

use crate::instance::Element;

/// Errors raised by the selection and cost-model operations.
///
/// A Monte Carlo failure of the randomized algorithm is *not* an error; it is
/// reported through [`crate::SelectionOutcome::failed`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input parameter violates a precondition. The message names the
    /// violated inequality.
    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// The queried element does not occur in the instance.
    #[error("element {0} does not occur in the instance")]
    NotFound(Element),

    /// The instance lies outside the range an algorithm supports.
    #[error("out of range: {0}")]
    Range(String),

    /// A real-valued argument lies outside the domain of a cost formula.
    #[error("argument {value} outside the domain {domain}")]
    Domain { value: f64, domain: &'static str },

    /// The floating-point evaluation of a lower bound cannot decide the ceiling.
    #[error("lower bound for (i={i}, j={j}) is ambiguous: log2 lies in [{lo}, {hi}]")]
    Ambiguous { i: u64, j: u64, lo: f64, hi: f64 },

    /// The Las Vegas wrapper hit its repetition cap without a success.
    #[error("gave up after {repetitions} failed repetitions ({comparisons} comparisons spent)")]
    GaveUp { repetitions: u32, comparisons: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
