use std::collections::HashSet;
use std::fmt;

use crate::error::{param, Error, Result};
use crate::rng::Rng;

/// A key in a selection instance.
///
/// `Element` deliberately does not implement `Ord`: algorithms can only order
/// elements through a [`crate::Comparator`], which keeps the comparison tally
/// honest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Element(pub u64);

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An `(i, j)`-mediocre selection problem: find an element of `elements` that
/// is neither among the `i` largest nor among the `j` smallest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    i: usize,
    j: usize,
    elements: Vec<Element>,
}

pub(crate) fn check_ijn(n: usize, i: usize, j: usize) -> Result<()> {
    if n == 0 {
        return Err(param("n >= 1 violated (n = 0)"));
    }
    if i + j + 1 > n {
        return Err(param(format!("i + j + 1 <= n violated ({i} + {j} + 1 > {n})")));
    }
    Ok(())
}

impl Instance {
    /// Builds an instance from explicit keys, which must be pairwise distinct.
    pub fn new(elements: Vec<Element>, i: usize, j: usize) -> Result<Self> {
        check_ijn(elements.len(), i, j)?;
        let mut seen = HashSet::with_capacity(elements.len());
        if let Some(dup) = elements.iter().find(|e| !seen.insert(e.0)) {
            return Err(param(format!("elements must be distinct ({dup} repeats)")));
        }
        Ok(Instance { i, j, elements })
    }

    pub fn from_values(values: &[u64], i: usize, j: usize) -> Result<Self> {
        Self::new(values.iter().copied().map(Element).collect(), i, j)
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    /// Number of largest elements to avoid.
    pub fn i(&self) -> usize {
        self.i
    }

    /// Number of smallest elements to avoid.
    pub fn j(&self) -> usize {
        self.j
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// The same keys with a different `(i, j)` target.
    pub fn retarget(&self, i: usize, j: usize) -> Result<Self> {
        check_ijn(self.n(), i, j)?;
        Ok(Instance {
            i,
            j,
            elements: self.elements.clone(),
        })
    }
}

/// A uniformly random permutation of `0..n`, drawn from `Rng::new(seed)`.
pub fn generate_instance(n: usize, i: usize, j: usize, seed: u64) -> Result<Instance> {
    check_ijn(n, i, j)?;
    let mut elements: Vec<Element> = (0..n as u64).map(Element).collect();
    Rng::new(seed).shuffle(&mut elements);
    Ok(Instance { i, j, elements })
}

/// Number of elements of `instance` strictly smaller than `x`.
///
/// This is the test oracle: a plain scan over the keys that never goes
/// through a comparator.
pub fn rank_of(x: Element, instance: &Instance) -> Result<usize> {
    let mut present = false;
    let mut smaller = 0;
    for e in instance.elements() {
        if e.0 == x.0 {
            present = true;
        } else if e.0 < x.0 {
            smaller += 1;
        }
    }
    if present {
        Ok(smaller)
    } else {
        Err(Error::NotFound(x))
    }
}

/// Whether `x` is `(i, j)`-mediocre: `j <= rank_of(x) <= n - 1 - i`.
pub fn is_mediocre(x: Element, instance: &Instance) -> Result<bool> {
    let rank = rank_of(x, instance)?;
    Ok(instance.j() <= rank && rank + instance.i() < instance.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_element_instance() {
        let inst = generate_instance(1, 0, 0, 7).unwrap();
        assert_eq!(inst.elements(), &[Element(0)]);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_instance(5, 2, 2, 99).unwrap();
        let b = generate_instance(5, 2, 2, 99).unwrap();
        assert_eq!(a, b);
        let mut sorted: Vec<u64> = a.elements().iter().map(|e| e.0).collect();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn large_instance_is_a_permutation() {
        let inst = generate_instance(10_000, 100, 100, 1).unwrap();
        let mut sorted: Vec<u64> = inst.elements().iter().map(|e| e.0).collect();
        sorted.sort_unstable();
        assert!(sorted.iter().copied().eq(0..10_000));
        // and not the identity
        assert!(inst.elements().iter().enumerate().any(|(p, e)| e.0 != p as u64));
    }

    #[test]
    fn invalid_parameters_name_the_inequality() {
        let err = generate_instance(5, 3, 2, 0).unwrap_err();
        assert!(err.to_string().contains("i + j + 1 <= n"), "{err}");
        let err = generate_instance(0, 0, 0, 0).unwrap_err();
        assert!(err.to_string().contains("n >= 1"), "{err}");
    }

    #[test]
    fn duplicates_rejected() {
        assert!(Instance::from_values(&[1, 2, 1], 0, 0).is_err());
    }

    #[test]
    fn rank_extremes_and_identity() {
        let inst = Instance::from_values(&(0..10).collect::<Vec<_>>(), 0, 0).unwrap();
        assert_eq!(rank_of(Element(0), &inst).unwrap(), 0);
        assert_eq!(rank_of(Element(9), &inst).unwrap(), 9);
        assert_eq!(rank_of(Element(4), &inst).unwrap(), 4);
        assert_eq!(rank_of(Element(10), &inst), Err(Error::NotFound(Element(10))));
    }

    #[test]
    fn mediocre_forced_median() {
        let inst = Instance::from_values(&[2, 0, 1], 1, 1).unwrap();
        let ok: Vec<bool> = (0..3).map(|v| is_mediocre(Element(v), &inst).unwrap()).collect();
        assert_eq!(ok, vec![false, true, false]);
    }

    #[test]
    fn mediocre_everything_when_unconstrained() {
        let inst = generate_instance(5, 0, 0, 3).unwrap();
        for &e in inst.elements() {
            assert!(is_mediocre(e, &inst).unwrap());
        }
    }

    #[test]
    fn mediocre_ranks_for_2_7_of_12() {
        let inst = generate_instance(12, 2, 7, 11).unwrap();
        let ranks: Vec<u64> = (0..12).filter(|&v| is_mediocre(Element(v), &inst).unwrap()).collect();
        // enumerate ranks against 7 <= r <= 12 - 1 - 2
        let expected: Vec<u64> = (0..12u64).filter(|r| (7..=9).contains(r)).collect();
        assert_eq!(ranks, expected);
    }
}
