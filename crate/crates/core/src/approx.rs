//! Approximate selection of `(i, j)`-mediocre elements.
//!
//! Every algorithm works on a fixed prefix of the instance (its "arbitrary
//! subset") and never looks at the remaining elements.
//!
//! * [`yao_select`]: the `(i+1)`-th largest of the first `i + j + 1` elements.
//! * [`a1_select`]: compare disjoint pairs among the first `2i + j + 1`
//!   elements and select among the pair winners.
//! * [`hyperpair_select`]: the same with knockout groups of `g = 2^t`.
//! * [`a2_once`] / [`a2_las_vegas`]: pick the `k`-th smallest of a random
//!   sample, check it against the rest of the working set, retry on failure.

use std::collections::HashSet;

use crate::compare::Comparator;
use crate::error::{param, Error, Result};
use crate::exact::{knockout, ExactSelector, Side};
use crate::instance::{Element, Instance};
use crate::outcome::SelectionOutcome;
use crate::rng::Rng;

/// Default cap on Las Vegas repetitions.
pub const DEFAULT_MAX_REPETITIONS: u32 = 100;

/// Yao's scheme: the `(i+1)`-th largest of the first `i + j + 1` elements.
pub fn yao_select<C: Comparator>(instance: &Instance, exact: ExactSelector, cmp: &mut C) -> Result<SelectionOutcome> {
    let start = cmp.comparisons();
    let (i, j) = (instance.i(), instance.j());
    let mut subset = instance.elements()[..i + j + 1].to_vec();
    let x = exact.kth_largest(&mut subset, i + 1, cmp);
    Ok(SelectionOutcome::new(x, cmp.comparisons() - start))
}

/// Whether A1 applies: `i <= j <= n - 2i - 1`.
pub fn a1_in_range(n: usize, i: usize, j: usize) -> bool {
    i <= j && 2 * i + j < n
}

/// Algorithm A1.
///
/// Takes the first `2i + j + 1` elements, compares `m = i + floor((j+1)/2)`
/// disjoint pairs, pools the winners (plus the leftover element when `j` is
/// even, uncompared) and returns the pool's `(i+1)`-th largest. Outside
/// `i <= j <= n - 2i - 1` it runs [`yao_select`] instead.
pub fn a1_select<C: Comparator>(instance: &Instance, exact: ExactSelector, cmp: &mut C) -> Result<SelectionOutcome> {
    let (n, i, j) = (instance.n(), instance.i(), instance.j());
    if !a1_in_range(n, i, j) {
        return yao_select(instance, exact, cmp);
    }
    let start = cmp.comparisons();
    let subset = &instance.elements()[..2 * i + j + 1];
    #[allow(clippy::manual_div_ceil)] // reads as i + floor((j+1)/2)
    let pairs = i + (j + 1) / 2;
    let mut pool: Vec<Element> = subset[..2 * pairs]
        .chunks_exact(2)
        .map(|pair| if cmp.less(pair[0], pair[1]) { pair[1] } else { pair[0] })
        .collect();
    if j % 2 == 0 {
        pool.push(subset[2 * pairs]);
    }
    let grouping = cmp.comparisons() - start;
    let x = exact.kth_largest(&mut pool, i + 1, cmp);
    let mut out = SelectionOutcome::new(x, cmp.comparisons() - start);
    out.grouping_comparisons = grouping;
    Ok(out)
}

/// Shape of a hyperpair run: `m` groups of `g` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperpairConfig {
    pub g: usize,
    pub m: usize,
    pub subset_size: usize,
}

impl HyperpairConfig {
    /// `m = i + ceil((j+1)/g)`; requires `g` a power of two, `g >= 2` and
    /// `g * m <= n`. Correctness (`j <= g (m - i) - 1`) follows from the
    /// choice of `m`.
    pub fn new(n: usize, i: usize, j: usize, g: usize) -> Result<Self> {
        if g < 2 || !g.is_power_of_two() {
            return Err(param(format!("group size must be a power of two >= 2 (g = {g})")));
        }
        let m = i + (j + 1).div_ceil(g);
        if m == 0 {
            return Err(Error::Range("at least one group is required (m >= 1)".into()));
        }
        let subset_size = g * m;
        if subset_size > n {
            return Err(Error::Range(format!(
                "g * m <= n violated (g = {g}, m = {i} + ceil(({j} + 1) / {g}) = {m}, g * m = {subset_size} > n = {n})"
            )));
        }
        debug_assert!(j < g * (m - i));
        Ok(HyperpairConfig { g, m, subset_size })
    }
}

/// Hyperpair generalization of A1: the maximum of each of `m` groups of `g`
/// by a balanced knockout (`g - 1` comparisons each), then the `(i+1)`-th
/// largest among the `m` group maxima.
///
/// Unlike [`a1_select`] there is no fallback: an unsupported `(n, i, j, g)`
/// is an error.
pub fn hyperpair_select<C: Comparator>(
    instance: &Instance,
    g: usize,
    exact: ExactSelector,
    cmp: &mut C,
) -> Result<SelectionOutcome> {
    let (i, j) = (instance.i(), instance.j());
    let cfg = HyperpairConfig::new(instance.n(), i, j, g)?;
    let start = cmp.comparisons();
    let subset = &instance.elements()[..cfg.subset_size];
    let mut pool: Vec<Element> = subset
        .chunks_exact(g)
        .map(|group| group[knockout(group, (0..g).collect(), Side::Largest, cmp, None)])
        .collect();
    let grouping = cmp.comparisons() - start;
    let x = exact.kth_largest(&mut pool, i + 1, cmp);
    let mut out = SelectionOutcome::new(x, cmp.comparisons() - start);
    out.grouping_comparisons = grouping;
    Ok(out)
}

/// Sizes used by A2: working set `m`, sample size `r`, sample rank `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct A2Params {
    pub m: usize,
    pub r: usize,
    pub k: usize,
}

fn round_half_up(x: f64) -> usize {
    (x + 0.5).floor() as usize
}

impl A2Params {
    /// The band `[ceil(m^(1/2)/2), r - floor(m^(1/2)/2)]` that `k` must lie in.
    pub fn k_band(&self) -> (usize, usize) {
        let half_root = (self.m as f64).sqrt() / 2.0;
        (half_root.ceil() as usize, self.r - half_root.floor() as usize)
    }
}

/// Computes A2's sizes:
///
/// ```text
/// m = round(i + j + 2 (i+j)^(3/4))
/// r = round(m^(3/4))
/// k = round(j m^(-1/4) + m^(1/2) / 2), clamped into k_band()
/// ```
///
/// where `round` is round-half-up. Requires `i + j >= 16` and
/// `i + j + 2 (i+j)^(3/4) <= n`.
pub fn a2_params(i: usize, j: usize, n: usize) -> Result<A2Params> {
    let s = i + j;
    if s < 16 {
        return Err(param(format!("i + j >= 16 violated (i + j = {s})")));
    }
    let spread = 2.0 * (s as f64).powf(0.75);
    let m_real = s as f64 + spread;
    if m_real > n as f64 {
        return Err(param(format!(
            "i + j + 2(i+j)^(3/4) <= n violated ({s} + {spread:.3} > {n})"
        )));
    }
    let m = round_half_up(m_real);
    let mf = m as f64;
    let r = round_half_up(mf.powf(0.75));
    let k_real = j as f64 * mf.powf(-0.25) + mf.sqrt() / 2.0;
    let mut params = A2Params { m, r, k: 0 };
    let (lo, hi) = params.k_band();
    params.k = round_half_up(k_real).clamp(lo.max(1), hi.min(r));

    debug_assert!(params.m <= n);
    debug_assert!(params.r as f64 <= spread);
    debug_assert!(lo <= hi && 1 <= params.k && params.k <= params.r);
    Ok(params)
}

/// One Monte Carlo run of A2.
///
/// The first `m` elements form the working set. `r` positions are drawn from
/// it uniformly with replacement; the `k`-th smallest of the drawn multiset is
/// the candidate `x`. Sampled elements are classified by the selector's
/// partition; every working-set element never drawn costs one comparison
/// against `x`. The run succeeds when at least `i` working-set elements are
/// larger than `x` and at least `j` smaller, and otherwise reports
/// `failed = true`, so a returned success is always mediocre.
///
/// Comparisons: `m - |distinct sample|` plus the cost of selecting in the
/// sample.
pub fn a2_once<C: Comparator>(
    instance: &Instance,
    exact: ExactSelector,
    cmp: &mut C,
    rng: &mut Rng,
) -> Result<SelectionOutcome> {
    let (i, j) = (instance.i(), instance.j());
    let params = a2_params(i, j, instance.n())?;
    let start = cmp.comparisons();
    let working = &instance.elements()[..params.m];

    let picks = rng.sample_with_replacement(params.m, params.r);
    let mut drawn = vec![false; params.m];
    for &p in &picks {
        drawn[p] = true;
    }
    let mut sample: Vec<Element> = picks.iter().map(|&p| working[p]).collect();
    let nth = params.k - 1;
    exact.nth_smallest_in_place(&mut sample, nth, cmp);
    let x = sample[nth];

    // keys are distinct, so a repeated draw is the same element
    let below: HashSet<u64> = sample[..nth].iter().filter(|e| **e != x).map(|e| e.0).collect();
    let above: HashSet<u64> = sample[nth + 1..].iter().filter(|e| **e != x).map(|e| e.0).collect();
    let mut smaller = below.len();
    let mut larger = above.len();

    for (pos, &e) in working.iter().enumerate() {
        if drawn[pos] {
            continue;
        }
        if cmp.less(e, x) {
            smaller += 1;
        } else {
            larger += 1;
        }
    }

    let mut out = SelectionOutcome::new(x, cmp.comparisons() - start);
    out.failed = !(larger >= i && smaller >= j);
    Ok(out)
}

/// A2 as a Las Vegas algorithm: [`a2_once`] with fresh samples until it
/// succeeds, at most [`DEFAULT_MAX_REPETITIONS`] times.
pub fn a2_las_vegas<C: Comparator>(
    instance: &Instance,
    exact: ExactSelector,
    cmp: &mut C,
    rng: &mut Rng,
) -> Result<SelectionOutcome> {
    a2_las_vegas_capped(instance, exact, cmp, rng, DEFAULT_MAX_REPETITIONS)
}

/// [`a2_las_vegas`] with an explicit repetition cap.
pub fn a2_las_vegas_capped<C: Comparator>(
    instance: &Instance,
    exact: ExactSelector,
    cmp: &mut C,
    rng: &mut Rng,
    max_repetitions: u32,
) -> Result<SelectionOutcome> {
    let start = cmp.comparisons();
    for attempt in 1..=max_repetitions {
        let mut out = a2_once(instance, exact, cmp, rng)?;
        if !out.failed {
            out.comparisons = cmp.comparisons() - start;
            out.repetitions = attempt;
            return Ok(out);
        }
    }
    Err(Error::GaveUp {
        repetitions: max_repetitions,
        comparisons: cmp.comparisons() - start,
    })
}
