use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported permutation size (one nibble per entry in a `u64`).
pub const MAX_N: usize = 16;

/// A permutation of `{0, .., n-1}` packed four bits per position.
///
/// Displayed and parsed in 1-based one-line notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    code: u64,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N);
        let mut code = 0u64;
        for i in 0..n {
            code |= (i as u64) << (4 * i);
        }
        Permutation { n: n as u8, code }
    }

    /// From 0-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_N {
            return Err(Error::InvalidPermutation(format!(
                "size {n} exceeds the supported maximum {MAX_N}"
            )));
        }
        let mut seen = 0u32;
        let mut code = 0u64;
        for (i, &v) in images.iter().enumerate() {
            if v >= n || seen & (1 << v) != 0 {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen |= 1 << v;
            code |= (v as u64) << (4 * i);
        }
        Ok(Permutation { n: n as u8, code })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{word:?} contains 0")));
        }
        Self::from_images(&word.iter().map(|v| v - 1).collect::<Vec<_>>())
    }

    pub fn size(&self) -> usize {
        self.n as usize
    }

    /// 0-based image of position `i`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        ((self.code >> (4 * i)) & 0xF) as usize
    }

    pub fn images(&self) -> Vec<usize> {
        (0..self.size()).map(|i| self.get(i)).collect()
    }

    pub fn one_line(&self) -> Vec<usize> {
        (0..self.size()).map(|i| self.get(i) + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut code = 0u64;
        for i in 0..self.size() {
            code |= (i as u64) << (4 * self.get(i));
        }
        Permutation { n: self.n, code }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.size();
        let mut l = 0;
        for i in 0..n {
            let wi = self.get(i);
            for j in i + 1..n {
                if wi > self.get(j) {
                    l += 1;
                }
            }
        }
        l
    }

    /// Swap the entries in positions `i` and `j` (right multiplication by a
    /// transposition).
    #[inline]
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let (a, b) = (self.get(i) as u64, self.get(j) as u64);
        let mask = !((0xFu64 << (4 * i)) | (0xFu64 << (4 * j)));
        Permutation {
            n: self.n,
            code: (self.code & mask) | (b << (4 * i)) | (a << (4 * j)),
        }
    }

    /// `w s_i`: swap positions `i` and `i+1`.
    #[inline]
    pub fn right_simple(&self, i: usize) -> Self {
        self.swap_positions(i, i + 1)
    }

    /// `s_i w`: swap the values `i` and `i+1`.
    pub fn left_simple(&self, i: usize) -> Self {
        let inv = self.inverse();
        self.swap_positions(inv.get(i), inv.get(i + 1))
    }

    /// Bitmask of `i` with `w(i) > w(i+1)`.
    pub fn right_descents(&self) -> u32 {
        let mut d = 0;
        for i in 0..self.size().saturating_sub(1) {
            if self.get(i) > self.get(i + 1) {
                d |= 1 << i;
            }
        }
        d
    }

    /// Bitmask of values `i` with `i+1` appearing before `i`.
    pub fn left_descents(&self) -> u32 {
        self.inverse().right_descents()
    }

    /// Elements covered by `self` in Bruhat order.
    pub fn lower_covers(&self) -> Vec<Permutation> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            let wi = self.get(i);
            // largest value below w(i) seen strictly between i and j
            let mut highest: Option<usize> = None;
            for j in i + 1..n {
                let wj = self.get(j);
                if wj < wi {
                    if highest.map_or(true, |h| h < wj) {
                        out.push(self.swap_positions(i, j));
                    }
                    highest = Some(highest.map_or(wj, |h| h.max(wj)));
                }
            }
        }
        out
    }

    /// Standardized restriction to positions `range` (values shifted down by
    /// `range.start`); only valid at a split point.
    pub(crate) fn slice(&self, start: usize, end: usize) -> Permutation {
        let mut code = 0u64;
        for i in start..end {
            code |= ((self.get(i) - start) as u64) << (4 * (i - start));
        }
        Permutation {
            n: (end - start) as u8,
            code,
        }
    }

    /// Block-diagonal concatenation.
    pub fn concat(&self, other: &Permutation) -> Result<Permutation> {
        let mut images = self.images();
        images.extend(other.images().into_iter().map(|v| v + self.size()));
        Permutation::from_images(&images)
    }
}

/// Bruhat order through the rank-matrix criterion:
/// `x <= w` iff `#{i <= r : x(i) <= s} >= #{i <= r : w(i) <= s}` for all `r, s`.
pub fn bruhat_leq(x: &Permutation, w: &Permutation) -> Result<bool> {
    if x.size() != w.size() {
        return Err(Error::LengthMismatch(x.size(), w.size()));
    }
    Ok(leq_unchecked(x, w))
}

pub(crate) fn leq_unchecked(x: &Permutation, w: &Permutation) -> bool {
    let n = x.size();
    let mut cx = [0i32; MAX_N];
    let mut cw = [0i32; MAX_N];
    for r in 0..n {
        // cx[s] = #{i <= r : x(i) <= s}
        for s in x.get(r)..n {
            cx[s] += 1;
        }
        for s in w.get(r)..n {
            cw[s] += 1;
        }
        if (0..n).any(|s| cx[s] < cw[s]) {
            return false;
        }
    }
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.one_line();
        if self.size() <= 9 {
            for v in word {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in word.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings (`"2143"`) or comma-separated lists (`"10,1,..."`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?}"));
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if word.is_empty() && !s.is_empty() {
            return Err(bad());
        }
        Permutation::from_one_line(&word)
    }
}
