//! Exact selection: the sorting oracle, median of medians, the knockout
//! tournament for the second largest, and Floyd-Rivest.
//!
//! Public entry points take a rank `k` counted from the top (`k = 1` is the
//! maximum) and leave the caller's buffer untouched. Internally everything
//! works on "the `nth` smallest, 0-based" and permutes a scratch slice in
//! place, leaving it partitioned around the answer:
//!
//! ```text
//! buf[..nth]  <= buf[nth] <= buf[nth + 1..]
//! ```
//!
//! The partition is what lets the randomized approximate selector learn the
//! side of every sampled element without paying for it twice.
//!
//! Inputs may contain repeated keys (the randomized algorithm selects inside a
//! multiset sample); all routines stay correct on them. The worst-case
//! comparison bounds quoted below assume distinct keys.

use crate::compare::Comparator;
use crate::error::{param, Result};
use crate::instance::Element;
use crate::rng::Rng;

/// Floyd-Rivest hands ranges of at most this many elements to median of
/// medians.
pub const FLOYD_RIVEST_CUTOFF: usize = 600;

/// Range size below which [`ExactSelector::Adaptive`] stops sampling.
pub const ADAPTIVE_CUTOFF: usize = 48;

/// Deterministic exact selectors that can be plugged into the approximate
/// algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ExactSelector {
    /// Median of medians with groups of five; worst-case linear.
    #[default]
    MedianOfMedians,
    /// Two-pivot Floyd-Rivest selection without randomization, guarded by
    /// median of medians whenever a pass fails to shrink the range by a
    /// quarter. Worst-case linear; close to `n + min(k, n - k)` comparisons
    /// when the input order is random, as it is for a random sample.
    Adaptive,
}

impl ExactSelector {
    pub fn name(self) -> &'static str {
        match self {
            ExactSelector::MedianOfMedians => "mom",
            ExactSelector::Adaptive => "adaptive",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "mom" => Some(ExactSelector::MedianOfMedians),
            "adaptive" => Some(ExactSelector::Adaptive),
            _ => None,
        }
    }

    /// Moves the `nth` smallest (0-based) to `buf[nth]` and partitions around it.
    pub fn nth_smallest_in_place<C: Comparator>(self, buf: &mut [Element], nth: usize, cmp: &mut C) {
        assert!(nth < buf.len(), "rank {nth} outside buffer of {}", buf.len());
        match self {
            ExactSelector::MedianOfMedians => mom_range(buf, 0, buf.len(), nth, cmp),
            ExactSelector::Adaptive => sample_select(buf, &[nth], cmp, ADAPTIVE),
        }
    }

    /// The `k`-th largest of `buf` (1-based), permuting `buf`.
    ///
    /// Extreme ranks use their optimal special-purpose routines: a linear
    /// scan for the maximum or minimum (`s - 1` comparisons) and the knockout
    /// tournament for the second largest or second smallest
    /// (`s - 2 + ceil(log2 s)`). Other ranks go to the selected algorithm.
    pub fn kth_largest<C: Comparator>(self, buf: &mut [Element], k: usize, cmp: &mut C) -> Element {
        let s = buf.len();
        assert!(1 <= k && k <= s, "rank {k} outside buffer of {s}");
        if k == 1 {
            return buf[extreme(buf, Side::Largest, cmp)];
        }
        if k == s {
            return buf[extreme(buf, Side::Smallest, cmp)];
        }
        if k == 2 {
            return buf[tournament(buf, Side::Largest, cmp).1];
        }
        if k == s - 1 {
            return buf[tournament(buf, Side::Smallest, cmp).1];
        }
        self.nth_smallest_in_place(buf, s - k, cmp);
        buf[s - k]
    }
}

fn check_rank(len: usize, k: usize) -> Result<()> {
    if k == 0 || k > len {
        return Err(param(format!(
            "1 <= k <= |buffer| violated (k = {k}, |buffer| = {len})"
        )));
    }
    Ok(())
}

/// Total-order adapter for `sort_by`.
fn ordering<C: Comparator>(cmp: &mut C, a: Element, b: Element) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    if cmp.less(a, b) {
        Less
    } else if cmp.less(b, a) {
        Greater
    } else {
        Equal
    }
}

/// The `k`-th largest by sorting a copy. Correctness oracle only.
pub fn select_by_sort<C: Comparator>(buffer: &[Element], k: usize, cmp: &mut C) -> Result<Element> {
    check_rank(buffer.len(), k)?;
    let mut sorted = buffer.to_vec();
    sorted.sort_by(|&a, &b| ordering(cmp, b, a));
    Ok(sorted[k - 1])
}

/// The `k`-th largest by median of medians (groups of five).
///
/// A group median costs 6 comparisons and each partition `len - 1`, giving at
/// most about `22 |buffer|` comparisons on distinct keys; random inputs use
/// far fewer.
pub fn select_mom<C: Comparator>(buffer: &[Element], k: usize, cmp: &mut C) -> Result<Element> {
    check_rank(buffer.len(), k)?;
    let mut work = buffer.to_vec();
    let nth = work.len() - k;
    let len = work.len();
    mom_range(&mut work, 0, len, nth, cmp);
    Ok(work[nth])
}

/// The second largest by a balanced knockout tournament followed by a playoff
/// among the elements that lost directly to the champion.
///
/// Uses exactly `s - 2 + ceil(log2 s)` comparisons when `s` is a power of two
/// and never more otherwise.
pub fn select_second_tournament<C: Comparator>(buffer: &[Element], cmp: &mut C) -> Result<Element> {
    if buffer.len() < 2 {
        return Err(param(format!("|buffer| >= 2 violated (|buffer| = {})", buffer.len())));
    }
    Ok(buffer[tournament(buffer, Side::Largest, cmp).1])
}

/// The `k`-th largest by Floyd-Rivest selection on a shuffled copy.
///
/// Two pivots are drawn from a sample of `ceil(n^(2/3))` elements, two
/// standard deviations of sample rank either side of the target, so that the
/// target usually lands in a middle class of about `n^(2/3)` elements. Ranges
/// of at most [`FLOYD_RIVEST_CUTOFF`] elements go to median of medians.
pub fn select_floyd_rivest<C: Comparator>(buffer: &[Element], k: usize, cmp: &mut C, rng: &mut Rng) -> Result<Element> {
    check_rank(buffer.len(), k)?;
    let mut work = buffer.to_vec();
    rng.shuffle(&mut work);
    let nth = work.len() - k;
    sample_select(&mut work, &[nth], cmp, FLOYD_RIVEST);
    Ok(work[nth])
}

/// The `k`-th largest by [`ExactSelector::Adaptive`].
pub fn select_adaptive<C: Comparator>(buffer: &[Element], k: usize, cmp: &mut C) -> Result<Element> {
    check_rank(buffer.len(), k)?;
    let mut work = buffer.to_vec();
    Ok(ExactSelector::Adaptive.kth_largest(&mut work, k, cmp))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Largest,
    Smallest,
}

/// Whether `a` beats `b` on the given side.
#[inline]
fn beats<C: Comparator>(cmp: &mut C, side: Side, a: Element, b: Element) -> bool {
    match side {
        Side::Largest => cmp.less(b, a),
        Side::Smallest => cmp.less(a, b),
    }
}

/// Position of the maximum (or minimum) in `s - 1` comparisons.
pub(crate) fn extreme<C: Comparator>(buf: &[Element], side: Side, cmp: &mut C) -> usize {
    let mut best = 0;
    for pos in 1..buf.len() {
        if beats(cmp, side, buf[pos], buf[best]) {
            best = pos;
        }
    }
    best
}

/// Position of the champion of a balanced knockout over `players`.
///
/// Adjacent players meet in each round; an odd player out gets a bye. When
/// `beaten` is given, each winner's victims are appended to its list.
pub(crate) fn knockout<C: Comparator>(
    buf: &[Element],
    mut players: Vec<usize>,
    side: Side,
    cmp: &mut C,
    mut beaten: Option<&mut [Vec<usize>]>,
) -> usize {
    while players.len() > 1 {
        let mut next = Vec::with_capacity(players.len().div_ceil(2));
        for pair in players.chunks(2) {
            match *pair {
                [a, b] => {
                    let (winner, loser) = if beats(cmp, side, buf[b], buf[a]) {
                        (b, a)
                    } else {
                        (a, b)
                    };
                    if let Some(beaten) = beaten.as_deref_mut() {
                        beaten[winner].push(loser);
                    }
                    next.push(winner);
                }
                [a] => next.push(a),
                _ => unreachable!(),
            }
        }
        players = next;
    }
    players[0]
}

/// `(champion, runner-up)` positions of a knockout over the whole buffer.
pub(crate) fn tournament<C: Comparator>(buf: &[Element], side: Side, cmp: &mut C) -> (usize, usize) {
    debug_assert!(buf.len() >= 2);
    let mut beaten = vec![Vec::new(); buf.len()];
    let champion = knockout(buf, (0..buf.len()).collect(), side, cmp, Some(&mut beaten));
    let playoff = &beaten[champion];
    let mut second = playoff[0];
    for &pos in &playoff[1..] {
        if beats(cmp, side, buf[pos], buf[second]) {
            second = pos;
        }
    }
    (champion, second)
}

/// Binary insertion sort of `buf[lo..hi]`.
fn insertion_sort<C: Comparator>(buf: &mut [Element], lo: usize, hi: usize, cmp: &mut C) {
    for t in lo + 1..hi {
        let item = buf[t];
        let (mut a, mut b) = (lo, t);
        while a < b {
            let mid = (a + b) / 2;
            if cmp.less(item, buf[mid]) {
                b = mid;
            } else {
                a = mid + 1;
            }
        }
        buf[a..=t].rotate_right(1);
    }
}

/// Position (within `g`) of the median of five elements, in 6 comparisons.
///
/// Pair up (a, b) and (c, d). The smaller of the two pair minima is below
/// three others, so it cannot be the median; drop it, pair its partner with
/// e, and repeat. The two dropped elements are the two smallest, so the
/// median is the smaller of the surviving pair minimum and the lone partner.
fn median_of_five<C: Comparator>(g: [Element; 5], cmp: &mut C) -> usize {
    // (low, high) position pairs
    let mut p = if cmp.less(g[1], g[0]) { (1, 0) } else { (0, 1) };
    let mut q = if cmp.less(g[3], g[2]) { (3, 2) } else { (2, 3) };
    if cmp.less(g[q.0], g[p.0]) {
        std::mem::swap(&mut p, &mut q);
    }
    // p.0 is out; p.1 pairs with e
    let mut r = if cmp.less(g[4], g[p.1]) { (4, p.1) } else { (p.1, 4) };
    if cmp.less(g[r.0], g[q.0]) {
        std::mem::swap(&mut q, &mut r);
    }
    // q.0 is out; the median is min(r.0, q.1)
    if cmp.less(g[q.1], g[r.0]) {
        q.1
    } else {
        r.0
    }
}

/// Moves `buf[pivot]` to its sorted position within `buf[lo..hi]`, keys
/// smaller than it to the left and the rest to the right, in `hi - lo - 1`
/// comparisons. Returns the pivot's new position.
fn partition<C: Comparator>(buf: &mut [Element], lo: usize, hi: usize, pivot: usize, cmp: &mut C) -> usize {
    buf.swap(pivot, hi - 1);
    let pv = buf[hi - 1];
    let mut store = lo;
    for t in lo..hi - 1 {
        if cmp.less(buf[t], pv) {
            buf.swap(t, store);
            store += 1;
        }
    }
    buf.swap(store, hi - 1);
    store
}

/// Median of medians on `buf[lo..hi]`; places the `nth` smallest (absolute
/// index) and partitions the range around it.
fn mom_range<C: Comparator>(buf: &mut [Element], mut lo: usize, mut hi: usize, nth: usize, cmp: &mut C) {
    debug_assert!(lo <= nth && nth < hi);
    loop {
        if hi - lo <= 5 {
            insertion_sort(buf, lo, hi, cmp);
            return;
        }
        let pivot = mom_pivot(buf, lo, hi, cmp);
        let p = partition(buf, lo, hi, pivot, cmp);
        match nth.cmp(&p) {
            std::cmp::Ordering::Equal => return,
            std::cmp::Ordering::Less => hi = p,
            std::cmp::Ordering::Greater => lo = p + 1,
        }
    }
}

/// Gathers the group medians at the front of `buf[lo..hi]` and returns the
/// position of their median.
fn mom_pivot<C: Comparator>(buf: &mut [Element], lo: usize, hi: usize, cmp: &mut C) -> usize {
    let mut medians = lo;
    let mut start = lo;
    while start < hi {
        let end = (start + 5).min(hi);
        let mid = if end - start == 5 {
            let g = [
                buf[start],
                buf[start + 1],
                buf[start + 2],
                buf[start + 3],
                buf[start + 4],
            ];
            start + median_of_five(g, cmp)
        } else {
            insertion_sort(buf, start, end, cmp);
            start + (end - start - 1) / 2
        };
        buf.swap(medians, mid);
        medians += 1;
        start = end;
    }
    let target = lo + (medians - lo - 1) / 2;
    mom_range(buf, lo, medians, target, cmp);
    target
}

/// Tuning of the sampling selector.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SampleSelect {
    /// Ranges of at most this size go to median of medians.
    pub cutoff: usize,
    /// Half-width of the pivot bracket, in standard deviations of a sample
    /// rank.
    pub gap: f64,
}

pub(crate) const FLOYD_RIVEST: SampleSelect = SampleSelect {
    cutoff: FLOYD_RIVEST_CUTOFF,
    gap: GAP,
};
pub(crate) const ADAPTIVE: SampleSelect = SampleSelect {
    cutoff: ADAPTIVE_CUTOFF,
    gap: GAP,
};
const GAP: f64 = 2.0;

/// Two-pivot Floyd-Rivest selection of the `targets` (sorted, distinct,
/// in range) smallest of `buf`, assuming the order of `buf` is random.
/// On return every target index holds its order statistic and `buf` is
/// partitioned around each of them.
///
/// The first `s = ceil(size^(2/3))` elements serve as the sample. Two sample
/// order statistics `u <= v` are selected recursively, bracketing the
/// expected sample ranks of the lowest and highest target by `gap` standard
/// deviations, and every other element is classified as below `u`, between,
/// or above `v`, testing first against the pivot on the side expected to
/// hold more elements. The search then continues in the classes that hold
/// targets. A class keeping more than three quarters of the range is handed
/// to median of medians, which bounds the worst case linearly for any input
/// order.
///
/// Within each class unsampled elements keep their relative order and come
/// first, so the next level's sample is again a random one.
fn sample_select<C: Comparator>(buf: &mut [Element], targets: &[usize], cmp: &mut C, cfg: SampleSelect) {
    let size = buf.len();
    let (lo, hi) = (targets[0], targets[targets.len() - 1]);
    debug_assert!(hi < size);
    if size <= cfg.cutoff.max(2) {
        mom_many(buf, targets, cmp);
        return;
    }

    let s = ((size as f64).powf(2.0 / 3.0).ceil() as usize).clamp(1, size - 1);
    let scale = s as f64 / size as f64;
    let sd = |t: usize| {
        let p = (t as f64 + 0.5) / size as f64;
        (s as f64 * p * (1.0 - p)).sqrt()
    };
    let gap = cfg.gap;
    let ku = ((lo as f64 + 0.5) * scale - 0.5 - gap * sd(lo)).floor().max(0.0) as usize;
    let kv = (((hi as f64 + 0.5) * scale - 0.5 + gap * sd(hi)).ceil().max(0.0) as usize)
        .min(s - 1)
        .max(ku);

    let (sample, rest) = buf.split_at_mut(s);
    if ku < kv {
        sample_select(sample, &[ku, kv], cmp, cfg);
    } else {
        sample_select(sample, &[ku], cmp, cfg);
    }
    let (u, v) = (sample[ku], sample[kv]);

    let mut low = Vec::new();
    let mut mid = Vec::new();
    let mut high = Vec::new();
    let upper_first = lo + hi < size;
    for &e in rest.iter() {
        if upper_first {
            if cmp.less(v, e) {
                high.push(e);
            } else if cmp.less(e, u) {
                low.push(e);
            } else {
                mid.push(e);
            }
        } else if cmp.less(e, u) {
            low.push(e);
        } else if cmp.less(v, e) {
            high.push(e);
        } else {
            mid.push(e);
        }
    }

    // layout: low | u | mid | v | high, with a single pivot when ku == kv
    let mut out = Vec::with_capacity(size);
    out.extend_from_slice(&low);
    out.extend_from_slice(&sample[..ku]);
    let u_pos = out.len();
    out.push(u);
    out.extend_from_slice(&mid);
    let v_pos = if ku < kv {
        out.extend_from_slice(&sample[ku + 1..kv]);
        out.push(v);
        out.len() - 1
    } else {
        u_pos
    };
    out.extend_from_slice(&high);
    out.extend_from_slice(&sample[kv + 1..]);
    buf.copy_from_slice(&out);

    for (start, end) in [(0, u_pos), (u_pos + 1, v_pos), (v_pos + 1, size)] {
        let inside: Vec<usize> = targets
            .iter()
            .filter(|&&t| start <= t && t < end)
            .map(|&t| t - start)
            .collect();
        if inside.is_empty() {
            continue;
        }
        let region = &mut buf[start..end];
        if 4 * region.len() > 3 * size {
            mom_many(region, &inside, cmp);
        } else {
            sample_select(region, &inside, cmp, cfg);
        }
    }
}

/// Median of medians for sorted distinct targets, highest first so that each
/// lower target is searched in the prefix below the previous one.
fn mom_many<C: Comparator>(buf: &mut [Element], targets: &[usize], cmp: &mut C) {
    let mut hi = buf.len();
    for &t in targets.iter().rev() {
        mom_range(buf, 0, hi, t, cmp);
        hi = t;
    }
}
