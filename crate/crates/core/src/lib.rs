//! Exact and approximate selection with every comparison counted.
//!
//! An element is `(i, j)`-mediocre when it is neither among the `i` largest
//! nor among the `j` smallest of a totally ordered set. This crate provides:
//!
//! * [`approx`]: Yao's prefix scheme, the pairing algorithm A1 and its
//!   hyperpair generalization, and the sampling algorithm A2 in Monte Carlo
//!   and Las Vegas form;
//! * [`exact`]: the exact selectors they build on (median of medians,
//!   knockout tournament, Floyd-Rivest);
//! * [`cost`]: the closed-form comparison-cost model and the
//!   information-theoretic lower bound;
//! * the instance model, the rank oracle and a reproducible RNG.
//!
//! Algorithms only order elements through a [`Comparator`], so the tally in a
//! [`CountingComparator`] is exactly the number of order queries made.

pub mod approx;
pub mod compare;
pub mod cost;
pub mod error;
pub mod exact;
pub mod instance;
pub mod outcome;
pub mod rng;

pub use approx::{
    a1_select, a2_las_vegas, a2_once, a2_params, hyperpair_select, yao_select, A2Params, HyperpairConfig,
};
pub use compare::{Comparator, CountingComparator, RecordingComparator};
pub use error::{Error, Result};
pub use exact::{
    select_adaptive, select_by_sort, select_floyd_rivest, select_mom, select_second_tournament, ExactSelector,
};
pub use instance::{generate_instance, is_mediocre, rank_of, Element, Instance};
pub use outcome::SelectionOutcome;
pub use rng::Rng;
