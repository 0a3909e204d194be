//! Segments on the integer line and multisegments.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The interval `[begin, end]` of integers, never empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct Segment {
    begin: i64,
    end: i64,
}

impl Segment {
    pub fn new(begin: i64, end: i64) -> Result<Self> {
        if begin > end {
            return Err(Error::InvalidSegment { begin, end });
        }
        Ok(Segment { begin, end })
    }

    /// Builds `[begin, end]`, or `None` (the empty segment) when `begin > end`.
    pub fn or_empty(begin: i64, end: i64) -> Option<Self> {
        (begin <= end).then_some(Segment { begin, end })
    }

    pub fn begin(&self) -> i64 {
        self.begin
    }

    pub fn end(&self) -> i64 {
        self.end
    }

    // a segment is never empty
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> i64 {
        self.end - self.begin + 1
    }

    pub fn contains(&self, x: i64) -> bool {
        self.begin <= x && x <= self.end
    }

    /// `self ≺ other`.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.begin < other.begin && other.begin <= self.end + 1 && self.end < other.end
    }

    /// `self ≺_k other`: precedence with the union shorter than `k`.
    pub fn k_precedes(&self, other: &Segment, k: u32) -> bool {
        self.precedes(other) && other.end - self.begin < i64::from(k)
    }

    pub fn linked(&self, other: &Segment) -> bool {
        self.precedes(other) || other.precedes(self)
    }

    pub fn k_linked(&self, other: &Segment, k: u32) -> bool {
        self.k_precedes(other, k) || other.k_precedes(self, k)
    }

    pub fn cup(&self, other: &Segment) -> Result<Segment> {
        self.require_linked(other)?;
        Ok(Segment {
            begin: self.begin.min(other.begin),
            end: self.end.max(other.end),
        })
    }

    /// Intersection of two linked segments; `None` when they only abut.
    pub fn cap(&self, other: &Segment) -> Result<Option<Segment>> {
        self.require_linked(other)?;
        Ok(Segment::or_empty(self.begin.max(other.begin), self.end.min(other.end)))
    }

    fn require_linked(&self, other: &Segment) -> Result<()> {
        if self.linked(other) {
            Ok(())
        } else {
            Err(Error::NotLinked(self.begin, self.end, other.begin, other.end))
        }
    }

    /// `[a-1, b-1]`.
    pub fn shift_left(&self) -> Segment {
        Segment {
            begin: self.begin - 1,
            end: self.end - 1,
        }
    }

    /// `[a+1, b]`, empty for a singleton.
    pub fn minus(&self) -> Option<Segment> {
        Segment::or_empty(self.begin + 1, self.end)
    }

    /// Left aligned order `≤_b`.
    pub fn leq_b(&self, other: &Segment) -> bool {
        self.begin < other.begin || (self.begin == other.begin && self.end <= other.end)
    }

    /// Right aligned order `≤_e`.
    pub fn leq_e(&self, other: &Segment) -> bool {
        self.end < other.end || (self.end == other.end && self.begin <= other.begin)
    }

    /// Total order refining `≤_b`.
    pub fn cmp_b(&self, other: &Segment) -> Ordering {
        (self.begin, self.end).cmp(&(other.begin, other.end))
    }

    /// Total order refining `≤_e`.
    pub fn cmp_e(&self, other: &Segment) -> Ordering {
        (self.end, self.begin).cmp(&(other.end, other.begin))
    }
}

impl TryFrom<[i64; 2]> for Segment {
    type Error = Error;

    fn try_from(v: [i64; 2]) -> Result<Self> {
        Segment::new(v[0], v[1])
    }
}

impl From<Segment> for [i64; 2] {
    fn from(s: Segment) -> Self {
        [s.begin, s.end]
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.begin, self.end)
    }
}

/// Shorthand for `Segment::new(a, b).unwrap()` in literals.
///
/// # Panics
/// When `a > b`.
pub fn seg(a: i64, b: i64) -> Segment {
    Segment::new(a, b).expect("segment literal with begin > end")
}

/// A finite multiset of segments. The stored order is kept as given, since
/// index sets refer to it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(segments: Vec<Segment>) -> Self {
        Multisegment { segments }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses `[(a,b), ...]`, rejecting inverted pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(a, b)| Segment::new(a, b))
            .collect::<Result<Vec<_>>>()
            .map(Multisegment::new)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.segments.iter()
    }

    /// `self + other`, concatenating the stored orders.
    pub fn sum(&self, other: &Multisegment) -> Multisegment {
        let mut segments = self.segments.clone();
        segments.extend_from_slice(&other.segments);
        Multisegment { segments }
    }

    pub fn push(&mut self, s: Segment) {
        self.segments.push(s);
    }

    /// Sorted descending by `≤_b`; the canonical form used as a map key.
    pub fn canonical(&self) -> Multisegment {
        let mut segments = self.segments.clone();
        segments.sort_by(|x, y| y.cmp_b(x));
        Multisegment { segments }
    }

    /// Sorted ascending by `≤_b` (stable).
    pub fn sorted_b(&self) -> Multisegment {
        let mut segments = self.segments.clone();
        segments.sort_by(Segment::cmp_b);
        Multisegment { segments }
    }

    /// Sorted descending by `≤_e` (stable).
    pub fn sorted_e_desc(&self) -> Multisegment {
        let mut segments = self.segments.clone();
        segments.sort_by(|x, y| y.cmp_e(x));
        Multisegment { segments }
    }

    /// Every segment shorter than `k`.
    pub fn in_mult_k(&self, k: u32) -> bool {
        self.segments.iter().all(|s| s.len() < i64::from(k))
    }

    /// Strictly increasing begins and ends after sorting.
    pub fn is_ladder(&self) -> bool {
        let sorted = self.sorted_b();
        sorted
            .segments
            .windows(2)
            .all(|w| w[0].begin < w[1].begin && w[0].end < w[1].end)
    }

    /// No repeated begin and no repeated end.
    pub fn is_regular(&self) -> bool {
        let mut begins: Vec<_> = self.segments.iter().map(Segment::begin).collect();
        let mut ends: Vec<_> = self.segments.iter().map(Segment::end).collect();
        begins.sort_unstable();
        ends.sort_unstable();
        begins.windows(2).all(|w| w[0] != w[1]) && ends.windows(2).all(|w| w[0] != w[1])
    }

    /// `Δ_i ⊀ Δ_j` for all `i < j` in the stored order.
    pub fn is_ordered(&self) -> bool {
        let s = &self.segments;
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| !s[i].precedes(&s[j])))
    }

    /// Sorted multiset of begins.
    pub fn begins(&self) -> Vec<i64> {
        let mut v: Vec<_> = self.segments.iter().map(Segment::begin).collect();
        v.sort_unstable();
        v
    }

    /// Sorted multiset of ends.
    pub fn ends(&self) -> Vec<i64> {
        let mut v: Vec<_> = self.segments.iter().map(Segment::end).collect();
        v.sort_unstable();
        v
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Multisegment {
    type Item = &'a Segment;
    type IntoIter = std::slice::Iter<'a, Segment>;

    fn into_iter(self) -> Self::IntoIter {
        self.segments.iter()
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Builds a multisegment from `(a, b)` literals.
///
/// # Panics
/// On an inverted pair.
pub fn ms(pairs: &[(i64, i64)]) -> Multisegment {
    Multisegment::from_pairs(pairs).expect("multisegment literal with begin > end")
}
