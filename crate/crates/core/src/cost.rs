//! Closed-form comparison costs.
//!
//! Selecting the `alpha n`-th largest of `n` with the mass-production
//! algorithm of Dor and Zwick costs `g(alpha, l) n + o(n)` comparisons for a
//! free integer parameter `l`:
//!
//! ```text
//! g(alpha, l) = 1 + (l + 2) (alpha + (1 - alpha) / 2^l)
//! l*(alpha)   = floor(log2(1/alpha) + log2(log2(1/alpha)))
//! f(alpha)    = min(g(alpha, l*), g(alpha, l* + 1) [, cap])
//! ```
//!
//! From `f` follow the per-element costs of A1, the hyperpair variant with
//! groups of four, and Yao's scheme on the instances
//! `(alpha n, (1 - 2 alpha) n - 1)` and `(alpha n, (1 - 4 alpha) n - 1)`.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Which cap, if any, bounds `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FVariant {
    /// `min(g(l), g(l+1))`.
    Plain,
    /// `min(g(l), g(l+1), 3)`: the Schonhage-Paterson-Pippenger bound.
    #[default]
    Cap3,
    /// `min(g(l), g(l+1), 2.95)`: the Dor-Zwick median bound.
    Cap295,
}

impl FVariant {
    fn cap(self) -> f64 {
        match self {
            FVariant::Plain => f64::INFINITY,
            FVariant::Cap3 => 3.0,
            FVariant::Cap295 => 2.95,
        }
    }
}

/// One row of the `f` table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostPoint {
    pub alpha: f64,
    pub l_star: u32,
    pub g_l: f64,
    pub g_l1: f64,
    pub f: f64,
    pub variant: FVariant,
}

/// Per-element comparison constants of A1 and Yao (pairs), and of the
/// four-element hyperpair algorithm and Yao on its instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceConstants {
    pub alpha: f64,
    pub c_a1: f64,
    pub c_yao: f64,
    /// Only defined for `alpha <= 1/5`.
    pub c_a4: Option<f64>,
    pub c_yao4: Option<f64>,
}

fn check_half_open(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 0.5 {
        Ok(())
    } else {
        Err(Error::Domain {
            value: alpha,
            domain: "(0, 1/2]",
        })
    }
}

pub fn g(alpha: f64, l: u32) -> Result<f64> {
    check_half_open(alpha)?;
    Ok(1.0 + f64::from(l + 2) * (alpha + (1.0 - alpha) / 2f64.powi(l as i32)))
}

pub fn l_star(alpha: f64) -> Result<u32> {
    check_half_open(alpha)?;
    let lg = (1.0 / alpha).log2();
    Ok((lg + lg.log2()).floor() as u32)
}

/// The `f` row for `alpha`, after folding `alpha > 1/2` onto `1 - alpha`.
pub fn cost_point(alpha: f64, variant: FVariant) -> Result<CostPoint> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain {
            value: alpha,
            domain: "(0, 1)",
        });
    }
    let alpha = if alpha > 0.5 { 1.0 - alpha } else { alpha };
    let l = l_star(alpha)?;
    let g_l = g(alpha, l)?;
    let g_l1 = g(alpha, l + 1)?;
    Ok(CostPoint {
        alpha,
        l_star: l,
        g_l,
        g_l1,
        f: g_l.min(g_l1).min(variant.cap()),
        variant,
    })
}

pub fn f(alpha: f64, variant: FVariant) -> Result<f64> {
    Ok(cost_point(alpha, variant)?.f)
}

/// `c_A1`, `c_Yao` (for `0 < alpha < 1/3`) and, when `alpha <= 1/5`, the
/// four-element hyperpair pair `c_A4`, `c_Yao4`. All use [`FVariant::Cap3`].
pub fn instance_constants(alpha: f64) -> Result<InstanceConstants> {
    if !(alpha > 0.0 && alpha < 1.0 / 3.0) {
        return Err(Error::Domain {
            value: alpha,
            domain: "(0, 1/3)",
        });
    }
    let fv = |x: f64| f(x, FVariant::Cap3);
    let c_a1 = 0.5 * (1.0 + fv(2.0 * alpha)?);
    let c_yao = (1.0 - alpha) * fv(alpha / (1.0 - alpha))?;
    let (c_a4, c_yao4) = if alpha <= 0.2 {
        (
            Some(0.25 * (3.0 + fv(4.0 * alpha)?)),
            Some((1.0 - 3.0 * alpha) * fv(alpha / (1.0 - 3.0 * alpha))?),
        )
    } else {
        (None, None)
    };
    Ok(InstanceConstants {
        alpha,
        c_a1,
        c_yao,
        c_a4,
        c_yao4,
    })
}

fn percentile(s: u32) -> f64 {
    f64::from(s) / 100.0
}

/// `f` rows for the percentiles `alpha = 0.01 ..= 0.33`.
pub fn f_table() -> Vec<CostPoint> {
    (1..=33)
        .map(|s| cost_point(percentile(s), FVariant::Cap3).expect("percentiles are in range"))
        .collect()
}

/// `c_A1` / `c_Yao` rows for the percentiles `alpha = 0.01 ..= 0.33`.
pub fn constants_table() -> Vec<InstanceConstants> {
    (1..=33)
        .map(|s| instance_constants(percentile(s)).expect("percentiles are in range"))
        .collect()
}

/// `c_A4` / `c_Yao4` rows for the percentiles `alpha = 0.09 ..= 0.16`.
pub fn hyper4_table() -> Vec<InstanceConstants> {
    (9..=16)
        .map(|s| instance_constants(percentile(s)).expect("percentiles are in range"))
        .collect()
}

/// `instance_constants` on the grid `from, from + step, ...` up to `to`
/// inclusive. Grid points are rounded to 12 decimals so that decimal grids
/// land on the same `f64` as `s / 100`.
pub fn curve(from: f64, to: f64, step: f64) -> Result<Vec<InstanceConstants>> {
    if !(from > 0.0 && from < to && to < 1.0 / 3.0) {
        return Err(Error::Domain {
            value: if from > 0.0 && from < to { to } else { from },
            domain: "0 < from < to < 1/3",
        });
    }
    if step.is_nan() || step <= 0.0 {
        return Err(Error::Domain {
            value: step,
            domain: "step > 0",
        });
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    (0..count)
        .map(|t| {
            let alpha = ((from + t as f64 * step) * 1e12).round() / 1e12;
            instance_constants(alpha)
        })
        .collect()
}

/// Worst-case comparisons to find the second largest of `k >= 2` elements:
/// `k - 2 + ceil(log2 k)`.
pub fn v2(k: u64) -> u64 {
    assert!(k >= 2);
    k - 2 + u64::from(k.next_power_of_two().trailing_zeros())
}

/// Largest `i + j` for which [`lower_bound`] uses exact integer arithmetic.
pub const EXACT_LOWER_BOUND_LIMIT: u64 = 10_000;

/// Information-theoretic lower bound on the comparisons needed to find an
/// `(i, j)`-mediocre element: `ceil(log2((i+j+1)! / (i! j!)))`.
///
/// Exact big-integer arithmetic up to `i + j = 10^4`; beyond that the log is
/// summed in floating point with an error interval, and an interval that
/// straddles an integer yields [`Error::Ambiguous`].
pub fn lower_bound(i: u64, j: u64) -> Result<u64> {
    if i + j <= EXACT_LOWER_BOUND_LIMIT {
        Ok(ceil_log2(&mediocre_ratio(i, j)))
    } else {
        lower_bound_float(i, j)
    }
}

/// `(i+j+1)! / (i! j!) = (j+1) * binom(i+j+1, i)`, exactly.
pub fn mediocre_ratio(i: u64, j: u64) -> BigUint {
    let n = i + j + 1;
    let small = i.min(n - i);
    let mut acc = BigUint::from(1u32);
    for t in 1..=small {
        acc *= n - small + t;
        acc /= t;
    }
    acc * (j + 1)
}

fn ceil_log2(x: &BigUint) -> u64 {
    debug_assert!(*x >= BigUint::from(1u32));
    (x - 1u32).bits()
}

fn lower_bound_float(i: u64, j: u64) -> Result<u64> {
    let (lo_fact, hi_fact) = (i.min(j), i.max(j));
    // log2((i+j+1)! / hi!) - log2(lo!)
    let mut sum = 0.0f64;
    let mut terms = 0u64;
    for t in hi_fact + 1..=i + j + 1 {
        sum += (t as f64).log2();
        terms += 1;
    }
    for t in 2..=lo_fact {
        sum -= (t as f64).log2();
        terms += 1;
    }
    // each log2 and each addition contributes at most a few ulps of the
    // running magnitude
    let magnitude = ((i + j + 1) as f64).log2() * terms as f64;
    let slack = 4.0 * f64::EPSILON * magnitude * terms as f64 + f64::EPSILON * magnitude;
    let (lo, hi) = (sum - slack, sum + slack);
    if lo.ceil() != hi.ceil() {
        return Err(Error::Ambiguous { i, j, lo, hi });
    }
    Ok(hi.ceil() as u64)
}
