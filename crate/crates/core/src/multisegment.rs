//! Segments, multisegments and infinitesimal parameters.
//!
//! Exponents are half-integers stored doubled. A segment `[a, b]` on a
//! cuspidal line is the run `a, a+1, ..., b`; a multisegment is a multiset of
//! segments kept in a canonical "does not precede" listing.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice_value: i32) -> Self {
        HalfInt(twice_value)
    }

    pub const fn from_int(v: i32) -> Self {
        HalfInt(2 * v)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// 0 for integers, 1 for proper half-integers.
    pub const fn parity(self) -> i32 {
        self.0.rem_euclid(2)
    }

    /// Shift by an integer number of steps.
    pub const fn step(self, k: i32) -> Self {
        HalfInt(self.0 + 2 * k)
    }

    /// `(self - other)` when it is an integer.
    pub fn int_diff(self, other: HalfInt) -> Option<i32> {
        let d = self.0 - other.0;
        (d % 2 == 0).then_some(d / 2)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Identifies a family of unramified twists of one cuspidal representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineId {
    label: Arc<str>,
    base_degree: u32,
}

impl LineId {
    pub const DEFAULT_LABEL: &'static str = "1";

    pub fn new(label: &str, base_degree: u32) -> Result<Self> {
        if base_degree == 0 {
            return Err(Error::OutOfRange("base degree must be positive".into()));
        }
        if label.is_empty() {
            return Err(Error::OutOfRange("line label must be non-empty".into()));
        }
        Ok(LineId {
            label: Arc::from(label),
            base_degree,
        })
    }

    pub fn labelled(label: &str) -> Result<Self> {
        Self::new(label, 1)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base_degree(&self) -> u32 {
        self.base_degree
    }

    pub fn is_default(&self) -> bool {
        &*self.label == Self::DEFAULT_LABEL && self.base_degree == 1
    }

    fn write_suffix(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_default() {
            write!(f, "@{}", self.label)?;
            if self.base_degree != 1 {
                write!(f, ":{}", self.base_degree)?;
            }
        }
        Ok(())
    }
}

impl Default for LineId {
    fn default() -> Self {
        LineId {
            label: Arc::from(Self::DEFAULT_LABEL),
            base_degree: 1,
        }
    }
}

/// The segment `[a, b]` on one line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    line: LineId,
    a: HalfInt,
    b: HalfInt,
}

impl Segment {
    pub fn new(line: LineId, a: HalfInt, b: HalfInt) -> Result<Self> {
        match b.int_diff(a) {
            Some(d) if d >= 0 => Ok(Segment { line, a, b }),
            _ => Err(Error::InvalidSegment {
                a: a.to_string(),
                b: b.to_string(),
            }),
        }
    }

    /// Segment on the default line from doubled endpoints.
    pub fn from_twice(a2: i32, b2: i32) -> Result<Self> {
        Self::new(LineId::default(), HalfInt::from_twice(a2), HalfInt::from_twice(b2))
    }

    pub fn singleton(line: LineId, r: HalfInt) -> Self {
        Segment { line, a: r, b: r }
    }

    pub fn line(&self) -> &LineId {
        &self.line
    }

    pub fn start(&self) -> HalfInt {
        self.a
    }

    pub fn end(&self) -> HalfInt {
        self.b
    }

    /// Number of exponents in the segment.
    pub fn len(&self) -> usize {
        (self.b.int_diff(self.a).unwrap() + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether the exponent `r` of `line` lies in this segment.
    pub fn contains_point(&self, line: &LineId, r: HalfInt) -> bool {
        &self.line == line && r >= self.a && r <= self.b && r.int_diff(self.a).is_some()
    }

    /// Whether `other` is a sub-segment of `self`.
    pub fn contains(&self, other: &Segment) -> bool {
        self.line == other.line
            && other.a.int_diff(self.a).is_some()
            && self.a <= other.a
            && other.b <= self.b
    }

    /// The exponents `a, a+1, ..., b`.
    pub fn points(&self) -> impl Iterator<Item = HalfInt> + '_ {
        (0..self.len() as i32).map(move |k| self.a.step(k))
    }

    pub fn negate(&self) -> Segment {
        Segment {
            line: self.line.clone(),
            a: -self.b,
            b: -self.a,
        }
    }

    fn canonical_key(&self) -> (Reverse<HalfInt>, HalfInt, &LineId) {
        (Reverse(self.b), self.a, &self.line)
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == self.b {
            write!(f, "[{}]", self.a)?;
        } else {
            write!(f, "[{},{}]", self.a, self.b)?;
        }
        self.line.write_suffix(f)
    }
}

/// `d1` precedes `d2`: same line, neither contains the other, `d2` starts a
/// positive integer after `d1`, and their union is again a segment.
pub fn precedes(d1: &Segment, d2: &Segment) -> bool {
    if d1.line != d2.line {
        return false;
    }
    let Some(shift) = d2.a.int_diff(d1.a) else {
        return false;
    };
    if shift <= 0 || d1.contains(d2) || d2.contains(d1) {
        return false;
    }
    // union is a segment iff d2 starts no later than one step past d1's end
    d2.a <= d1.b.step(1)
}

/// Either segment precedes the other.
pub fn linked(d1: &Segment, d2: &Segment) -> bool {
    precedes(d1, d2) || precedes(d2, d1)
}

/// A multiset of segments in canonical order: end descending, then start
/// ascending (longer first), then line label. No segment precedes a later one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn empty() -> Self {
        Multisegment::default()
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

    pub fn degree(&self) -> u64 {
        self.segments
            .iter()
            .map(|s| s.len() as u64 * s.line.base_degree as u64)
            .sum()
    }

    /// Reflect every exponent through zero.
    pub fn negate(&self) -> Multisegment {
        canonicalize(self.segments.iter().map(Segment::negate))
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        canonicalize(iter)
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

pub fn canonicalize<I: IntoIterator<Item = Segment>>(segments: I) -> Multisegment {
    let mut segments: Vec<Segment> = segments.into_iter().collect();
    segments.sort();
    Multisegment { segments }
}

/// Multiset union, re-sorted.
pub fn concat(alpha: &Multisegment, beta: &Multisegment) -> Multisegment {
    canonicalize(alpha.segments.iter().chain(&beta.segments).cloned())
}

/// Exponents covered by the segments, with multiplicity.
pub fn support(alpha: &Multisegment) -> InfinitesimalParameter {
    let mut lambda = InfinitesimalParameter::default();
    for s in &alpha.segments {
        for r in s.points() {
            lambda.insert(&s.line, r, 1);
        }
    }
    lambda
}

/// A maximal run of exponents `r, r+1, ..., r+k-1` on one line with positive
/// multiplicities. Distinct blocks never interact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub line: LineId,
    pub start: HalfInt,
    pub mults: Vec<usize>,
}

impl Block {
    pub fn exponent(&self, i: usize) -> HalfInt {
        self.start.step(i as i32)
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn points(&self) -> usize {
        self.mults.iter().sum()
    }

    /// Index of `r` in this block, if present.
    pub fn index_of(&self, line: &LineId, r: HalfInt) -> Option<usize> {
        if line != &self.line {
            return None;
        }
        let d = r.int_diff(self.start)?;
        (d >= 0 && (d as usize) < self.mults.len()).then_some(d as usize)
    }

    pub fn to_lambda(&self) -> InfinitesimalParameter {
        let mut lambda = InfinitesimalParameter::default();
        for (i, &e) in self.mults.iter().enumerate() {
            lambda.insert(&self.line, self.exponent(i), e);
        }
        lambda
    }
}

/// Per-line multiset of half-integer exponents.
///
/// Exponents of different parity on one line never share a segment, so they
/// fall into separate [`Block`]s even though they keep the same [`LineId`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct InfinitesimalParameter {
    lines: BTreeMap<LineId, BTreeMap<HalfInt, usize>>,
}

impl InfinitesimalParameter {
    pub fn from_exponents<I: IntoIterator<Item = HalfInt>>(line: &LineId, exps: I) -> Self {
        let mut lambda = InfinitesimalParameter::default();
        for r in exps {
            lambda.insert(line, r, 1);
        }
        lambda
    }

    pub fn insert(&mut self, line: &LineId, r: HalfInt, count: usize) {
        if count == 0 {
            return;
        }
        *self
            .lines
            .entry(line.clone())
            .or_default()
            .entry(r)
            .or_insert(0) += count;
    }

    pub fn union(&self, other: &InfinitesimalParameter) -> InfinitesimalParameter {
        let mut out = self.clone();
        for (line, exps) in &other.lines {
            for (&r, &c) in exps {
                out.insert(line, r, c);
            }
        }
        out
    }

    pub fn multiplicity(&self, line: &LineId, r: HalfInt) -> usize {
        self.lines
            .get(line)
            .and_then(|m| m.get(&r))
            .copied()
            .unwrap_or(0)
    }

    pub fn lines(&self) -> impl Iterator<Item = (&LineId, &BTreeMap<HalfInt, usize>)> {
        self.lines.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Number of exponents counted with multiplicity.
    pub fn points(&self) -> usize {
        self.lines.values().flat_map(|m| m.values()).sum()
    }

    pub fn points_on_line(&self, line: &LineId) -> usize {
        self.lines.get(line).map_or(0, |m| m.values().sum())
    }

    pub fn max_points_per_line(&self) -> usize {
        self.lines
            .values()
            .map(|m| m.values().sum())
            .max()
            .unwrap_or(0)
    }

    /// `n` such that this parameter belongs to GL(n).
    pub fn degree(&self) -> u64 {
        self.lines
            .iter()
            .map(|(l, m)| l.base_degree as u64 * m.values().sum::<usize>() as u64)
            .sum()
    }

    /// Split into maximal runs of consecutive exponents.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out = Vec::new();
        for (line, exps) in &self.lines {
            for parity in 0..2 {
                let mut current: Option<Block> = None;
                for (&r, &e) in exps.iter().filter(|(r, _)| r.parity() == parity) {
                    match current.as_mut() {
                        Some(b) if b.exponent(b.len()) == r => b.mults.push(e),
                        _ => {
                            if let Some(b) = current.take() {
                                out.push(b);
                            }
                            current = Some(Block {
                                line: line.clone(),
                                start: r,
                                mults: vec![e],
                            });
                        }
                    }
                }
                if let Some(b) = current {
                    out.push(b);
                }
            }
        }
        out.sort();
        out
    }

    pub fn negate(&self) -> InfinitesimalParameter {
        let mut out = InfinitesimalParameter::default();
        for (line, exps) in &self.lines {
            for (&r, &c) in exps {
                out.insert(line, -r, c);
            }
        }
        out
    }

    /// All singleton segments, i.e. the closed orbit.
    pub fn singletons(&self) -> Multisegment {
        let mut segs = Vec::new();
        for (line, exps) in &self.lines {
            for (&r, &c) in exps {
                for _ in 0..c {
                    segs.push(Segment::singleton(line.clone(), r));
                }
            }
        }
        canonicalize(segs)
    }
}

impl fmt::Display for InfinitesimalParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.singletons())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a2: i32, b2: i32) -> Segment {
        Segment::from_twice(a2, b2).unwrap()
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&seg(-1, -1), &seg(1, 1)));
        assert!(!precedes(&seg(-1, 1), &seg(1, 1)));
        assert!(!precedes(&seg(0, 0), &seg(4, 4)));
        assert!(linked(&seg(1, 1), &seg(-1, -1)));
    }

    #[test]
    fn precedes_needs_same_line_and_parity() {
        let other = LineId::labelled("chi").unwrap();
        let d2 = Segment::new(other, HalfInt::from_twice(1), HalfInt::from_twice(1)).unwrap();
        assert!(!precedes(&seg(-1, -1), &d2));
        assert!(!precedes(&seg(0, 0), &seg(1, 1)));
    }

    #[test]
    fn segment_rejects_bad_endpoints() {
        assert!(Segment::from_twice(1, -1).is_err());
        assert!(Segment::from_twice(0, 1).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let m = canonicalize([seg(1, 1), seg(-1, 1), seg(-1, -1)]);
        assert_eq!(m.segments(), &[seg(-1, 1), seg(1, 1), seg(-1, -1)]);
        assert!(canonicalize([]).is_empty());
        let m = canonicalize([seg(0, 2), seg(0, 2)]);
        assert_eq!(m.segments(), &[seg(0, 2), seg(0, 2)]);
    }

    #[test]
    fn support_examples() {
        let m = canonicalize([seg(-1, 1), seg(1, 1), seg(-1, -1)]);
        let l = support(&m);
        let line = LineId::default();
        assert_eq!(l.multiplicity(&line, HalfInt::from_twice(1)), 2);
        assert_eq!(l.multiplicity(&line, HalfInt::from_twice(-1)), 2);
        assert_eq!(l.degree(), 4);
        assert!(support(&Multisegment::empty()).is_empty());
    }

    #[test]
    fn concat_examples() {
        let a = canonicalize([seg(-1, 1)]);
        let b = canonicalize([seg(1, 1), seg(-1, -1)]);
        assert_eq!(concat(&a, &b).to_string(), "[-1/2,1/2]+[1/2]+[-1/2]");
        assert_eq!(concat(&a, &Multisegment::empty()), a);
        let c = concat(&canonicalize([seg(1, 1)]), &canonicalize([seg(-1, -1)]));
        assert_eq!(c.to_string(), "[1/2]+[-1/2]");
    }

    #[test]
    fn blocks_split_on_gaps_and_parity() {
        let line = LineId::default();
        let l = InfinitesimalParameter::from_exponents(
            &line,
            [0, 2, 2, 6, 1, 3].map(HalfInt::from_twice),
        );
        let blocks = l.blocks();
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks[0].mults, vec![1, 2]);
        assert_eq!(blocks[1].start, HalfInt::from_twice(1));
        assert_eq!(blocks[1].mults, vec![1, 1]);
        assert_eq!(blocks[2].start, HalfInt::from_twice(6));
    }

    #[test]
    fn display_halfints() {
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_twice(4).to_string(), "2");
        assert_eq!(seg(-2, 0).to_string(), "[-1,0]");
    }
}
