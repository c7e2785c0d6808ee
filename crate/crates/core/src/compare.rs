use crate::instance::Element;

/// Strict order queries over elements, with a running tally.
///
/// The only query is "is `a` smaller than `b`?", so a comparator can never
/// answer "equal". Every selection routine in this crate orders elements
/// exclusively through this trait.
pub trait Comparator {
    fn less(&mut self, a: Element, b: Element) -> bool;

    /// Number of `less` queries answered so far.
    fn comparisons(&self) -> u64;
}

impl<C: Comparator + ?Sized> Comparator for &mut C {
    fn less(&mut self, a: Element, b: Element) -> bool {
        (**self).less(a, b)
    }

    fn comparisons(&self) -> u64 {
        (**self).comparisons()
    }
}

/// Compares keys by their natural order and counts every query.
#[derive(Debug, Default, Clone)]
pub struct CountingComparator {
    comparisons: u64,
}

impl CountingComparator {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Comparator for CountingComparator {
    #[inline]
    fn less(&mut self, a: Element, b: Element) -> bool {
        self.comparisons += 1;
        a.0 < b.0
    }

    fn comparisons(&self) -> u64 {
        self.comparisons
    }
}

/// Wraps a comparator, keeping its own independent count and a log of every
/// element it was asked about.
#[derive(Debug)]
pub struct RecordingComparator<C> {
    inner: C,
    queries: u64,
    touched: Vec<Element>,
}

impl<C: Comparator> RecordingComparator<C> {
    pub fn new(inner: C) -> Self {
        RecordingComparator {
            inner,
            queries: 0,
            touched: Vec::new(),
        }
    }

    /// Count kept by the wrapper, independent of the inner tally.
    pub fn queries(&self) -> u64 {
        self.queries
    }

    pub fn touched(&self) -> &[Element] {
        &self.touched
    }

    pub fn into_inner(self) -> C {
        self.inner
    }
}

impl<C: Comparator> Comparator for RecordingComparator<C> {
    fn less(&mut self, a: Element, b: Element) -> bool {
        self.queries += 1;
        self.touched.push(a);
        self.touched.push(b);
        self.inner.less(a, b)
    }

    fn comparisons(&self) -> u64 {
        self.inner.comparisons()
    }
}
