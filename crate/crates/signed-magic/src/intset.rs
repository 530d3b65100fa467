//! Finite integer sets built from arithmetic progressions, ±-closure and
//! fixed-difference pairing.
//!
//! These sets carry the entry bookkeeping for every block construction: the
//! residual sets left uncovered by a block family are split here into pairs
//! `{x, x+eps}` that feed the 2-row micro-blocks.

use crate::error::{Error, Result};

/// A finite set of integers in canonical sorted storage, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntSet {
    elems: Vec<i64>,
}

/// The arithmetic progression `a, a+d, ..., b`; empty when `a > b`.
///
/// Errors when `a <= b` but the endpoints disagree mod `d` — in that case the
/// progression cannot end at `b` and the caller transcribed a formula wrong.
pub fn interval(a: i64, b: i64, d: i64) -> Result<IntSet> {
    assert!(d > 0, "interval step must be positive");
    if a > b {
        return Ok(IntSet::default());
    }
    if (b - a) % d != 0 {
        return Err(Error::MalformedInterval { a, b, d });
    }
    Ok(IntSet {
        elems: (0..=(b - a) / d).map(|i| a + i * d).collect(),
    })
}

impl IntSet {
    pub fn from_sorted_unique(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        IntSet { elems }
    }

    pub fn from_iter_unchecked<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut elems: Vec<i64> = iter.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        IntSet { elems }
    }

    /// Builds a set from values that must all be distinct.
    pub fn from_distinct<I: IntoIterator<Item = i64>>(iter: I) -> Result<Self> {
        let mut elems: Vec<i64> = iter.into_iter().collect();
        elems.sort_unstable();
        for w in elems.windows(2) {
            if w[0] == w[1] {
                return Err(Error::SetOverlap(w[0]));
            }
        }
        Ok(IntSet { elems })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.elems
    }

    /// `self ∪ (−self)`. All members must be positive.
    pub fn plus_minus(&self) -> Result<IntSet> {
        if let Some(&bad) = self.elems.iter().find(|&&v| v <= 0) {
            return Err(Error::NonPositiveMember(bad));
        }
        let mut out = Vec::with_capacity(self.elems.len() * 2);
        out.extend(self.elems.iter().rev().map(|v| -v));
        out.extend(self.elems.iter());
        Ok(IntSet { elems: out })
    }

    /// Exact union: the operands must be disjoint, anything else is a bug in
    /// the caller's bookkeeping and comes back as an error.
    pub fn union_disjoint(&self, other: &IntSet) -> Result<IntSet> {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.elems[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.elems[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return Err(Error::SetOverlap(self.elems[i])),
            }
        }
        out.extend_from_slice(&self.elems[i..]);
        out.extend_from_slice(&other.elems[j..]);
        Ok(IntSet { elems: out })
    }

    /// Exact difference: `other` must be contained in `self`.
    pub fn difference_contained(&self, other: &IntSet) -> Result<IntSet> {
        for v in other.iter() {
            if !self.contains(v) {
                return Err(Error::NotContained(v));
            }
        }
        Ok(IntSet {
            elems: self.iter().filter(|v| !other.contains(*v)).collect(),
        })
    }

    /// Unions a list of pairwise-disjoint sets.
    pub fn union_all<'a, I: IntoIterator<Item = &'a IntSet>>(parts: I) -> Result<IntSet> {
        let mut acc = IntSet::default();
        for p in parts {
            acc = acc.union_disjoint(p)?;
        }
        Ok(acc)
    }
}

impl FromIterator<i64> for IntSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntSet::from_iter_unchecked(iter)
    }
}

/// Allowed differences for a 2-set `{x, x+eps}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eps {
    One,
    Two,
    Four,
}

impl Eps {
    pub fn value(self) -> i64 {
        match self {
            Eps::One => 1,
            Eps::Two => 2,
            Eps::Four => 4,
        }
    }
}

/// An ordered pair `{low, low+eps}` of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoSet {
    low: i64,
    eps: Eps,
}

impl TwoSet {
    pub fn new(low: i64, eps: Eps) -> Result<Self> {
        if low <= 0 {
            return Err(Error::NonPositiveMember(low));
        }
        Ok(TwoSet { low, eps })
    }

    /// Reads a 2-element set `{x, x+eps}` as a pair; errors when the gap is wrong.
    pub fn from_set(s: &IntSet, eps: Eps) -> Result<Self> {
        if s.len() != 2 {
            return Err(Error::Domain(format!(
                "expected a 2-element set, got {} elements",
                s.len()
            )));
        }
        let lo = s.min().unwrap();
        let hi = s.max().unwrap();
        if hi - lo != eps.value() {
            return Err(Error::Unpairable { element: lo, eps: eps.value() });
        }
        TwoSet::new(lo, eps)
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.eps.value()
    }

    pub fn eps(&self) -> Eps {
        self.eps
    }
}

/// Splits `s` into pairs `{x, x+eps}` by the canonical greedy rule: repeatedly
/// remove the minimum `x` together with `x+eps`.
///
/// The minimum element of a set can only ever pair downward with itself, so
/// greedy min-first succeeds whenever any pairing exists; a failure signals a
/// wrong residual-set derivation upstream.
pub fn partition_pairs(s: &IntSet, eps: Eps) -> Result<Vec<TwoSet>> {
    let e = eps.value();
    let mut out = Vec::with_capacity(s.len() / 2);
    let mut pending: Vec<i64> = Vec::new();
    // One sorted sweep: a value either closes the oldest pending value at
    // distance eps or opens a new pending slot of its own.
    for v in s.iter() {
        if let Some(pos) = pending.iter().position(|&p| v - p == e) {
            let low = pending.remove(pos);
            out.push(TwoSet::new(low, eps)?);
        } else {
            // Any pending value now beyond reach can never be paired.
            if let Some(&dead) = pending.iter().find(|&&p| v - p > e) {
                return Err(Error::Unpairable { element: dead, eps: e });
            }
            pending.push(v);
        }
    }
    match pending.first() {
        Some(&dead) => Err(Error::Unpairable { element: dead, eps: e }),
        None => Ok(out),
    }
}

/// Pairs each constituent set separately (greedy min-first inside each) and
/// concatenates the results in the given order. The constituents must be
/// pairwise disjoint; order determines which pair lands in which block.
pub fn partition_pairs_each(parts: &[IntSet], eps: Eps) -> Result<Vec<TwoSet>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(partition_pairs(p, eps)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn interval_basics() {
        assert_eq!(
            interval(2, 8, 2).unwrap().as_slice(),
            &[2, 4, 6, 8]
        );
        assert!(interval(5, 3, 1).unwrap().is_empty());
        assert_eq!(interval(1, 1, 4).unwrap().as_slice(), &[1]);
        assert!(matches!(
            interval(1, 4, 2),
            Err(Error::MalformedInterval { .. })
        ));
    }

    #[test]
    fn plus_minus_doubles() {
        let s = IntSet::from_iter_unchecked([1, 3]);
        assert_eq!(s.plus_minus().unwrap().as_slice(), &[-3, -1, 1, 3]);
        assert!(IntSet::default().plus_minus().unwrap().is_empty());
        assert_eq!(
            IntSet::from_iter_unchecked([10]).plus_minus().unwrap().as_slice(),
            &[-10, 10]
        );
        assert!(IntSet::from_iter_unchecked([0, 1]).plus_minus().is_err());
    }

    #[test]
    fn union_rejects_overlap() {
        let a = IntSet::from_iter_unchecked([1, 2]);
        let b = IntSet::from_iter_unchecked([2, 3]);
        assert_eq!(a.union_disjoint(&b), Err(Error::SetOverlap(2)));
    }

    #[test]
    fn pairs_greedy_min_first() {
        let s = IntSet::from_iter_unchecked([2, 4, 6, 8]);
        let pairs = partition_pairs(&s, Eps::Two).unwrap();
        assert_eq!(
            pairs.iter().map(|p| (p.low(), p.high())).collect::<Vec<_>>(),
            vec![(2, 4), (6, 8)]
        );
        let s = IntSet::from_iter_unchecked([12, 13, 14, 15]);
        let pairs = partition_pairs(&s, Eps::One).unwrap();
        assert_eq!(
            pairs.iter().map(|p| (p.low(), p.high())).collect::<Vec<_>>(),
            vec![(12, 13), (14, 15)]
        );
        let s = IntSet::from_iter_unchecked([1, 2, 4]);
        assert!(partition_pairs(&s, Eps::One).is_err());
    }

    /// Exhaustive matching oracle: does any perfect pairing into
    /// `{x, x+eps}` pairs exist?
    fn pairing_exists(elems: &[i64], eps: i64) -> bool {
        if elems.is_empty() {
            return true;
        }
        if elems.len() % 2 == 1 {
            return false;
        }
        let x = elems[0];
        let Some(pos) = elems.iter().position(|&y| y == x + eps) else {
            return false;
        };
        let rest: Vec<i64> = elems
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != 0 && i != pos)
            .map(|(_, &v)| v)
            .collect();
        pairing_exists(&rest, eps)
    }

    proptest! {
        // Greedy completeness: greedy succeeds exactly when some pairing exists.
        #[test]
        fn greedy_matches_exhaustive(values in proptest::collection::btree_set(1i64..40, 0..12),
                                     eps_pick in 0usize..3) {
            let eps = [Eps::One, Eps::Two, Eps::Four][eps_pick];
            let s = IntSet::from_iter_unchecked(values.iter().copied());
            let elems: Vec<i64> = s.iter().collect();
            let greedy = partition_pairs(&s, eps);
            prop_assert_eq!(greedy.is_ok(), pairing_exists(&elems, eps.value()));
        }

        // Flattened output is a permutation of the input and gaps equal eps.
        #[test]
        fn pairs_cover_input(start in 1i64..50, len in 0usize..6, eps_pick in 0usize..3) {
            let eps = [Eps::One, Eps::Two, Eps::Four][eps_pick];
            // Build a union of `len` disjoint pairs so pairing always exists.
            let mut vals = Vec::new();
            let mut base = start;
            for _ in 0..len {
                vals.push(base);
                vals.push(base + eps.value());
                base += 3 * eps.value();
            }
            let s = IntSet::from_iter_unchecked(vals.iter().copied());
            let pairs = partition_pairs(&s, eps).unwrap();
            let mut flat: Vec<i64> = pairs.iter().flat_map(|p| [p.low(), p.high()]).collect();
            flat.sort_unstable();
            prop_assert_eq!(flat, {
                let mut v = vals.clone();
                v.sort_unstable();
                v
            });
            for p in &pairs {
                prop_assert_eq!(p.high() - p.low(), eps.value());
            }
        }
    }
}
