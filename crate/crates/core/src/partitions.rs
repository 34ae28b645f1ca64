//! Integer partitions.
//!
//! A partition is stored as a weakly decreasing sequence of positive parts.
//! Parts are read with 0-based indices and any index past the last part
//! reads as 0, so callers can walk two partitions of different lengths in
//! lockstep.
//!
//! The natural order follows the convention used throughout this crate:
//! `p <= q` when every prefix sum of `p` is at least the matching prefix sum
//! of `q`. The finest partition `(1,1,…,1)` is therefore the maximum.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The zero partition.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts that are already weakly decreasing and
    /// positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", i + 1)));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {} and {} increase ({} < {})",
                i + 1,
                i + 2,
                parts[i],
                parts[i + 1]
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts and drops zeros; never fails.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// `(1,1,…,1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 0-based index `i`, or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Sum of the parts, written `|p|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.get(0);
        let parts = (1..=width)
            .map(|r| self.parts.iter().take_while(|&&p| p >= r).count())
            .collect();
        Self { parts }
    }

    /// Componentwise sum, the shorter one padded with zeros.
    pub fn add(&self, other: &Self) -> Self {
        let len = self.parts.len().max(other.parts.len());
        let parts = (0..len).map(|i| self.get(i) + other.get(i)).collect();
        // componentwise sums of decreasing sequences stay decreasing
        Self { parts }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// `n(p) = Σ p_i (i-1)` with 1-based `i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| p * i).sum()
    }

    /// Sum of the first `k` parts.
    pub fn prefix_sum(&self, k: usize) -> usize {
        self.parts.iter().take(k).sum()
    }

    /// Natural order: every prefix sum of `self` dominates the one of `other`.
    pub fn nat_leq(&self, other: &Self) -> Result<bool> {
        Ok(self.nat_violation(other)?.is_none())
    }

    /// First `k` (1-based) where the prefix-sum condition of [`nat_leq`]
    /// fails, if any.
    ///
    /// [`nat_leq`]: Partition::nat_leq
    pub fn nat_violation(&self, other: &Self) -> Result<Option<usize>> {
        let (left, right) = (self.size(), other.size());
        if left != right {
            return Err(Error::IncomparableTotals { left, right });
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut s, mut t) = (0, 0);
        for k in 0..len {
            s += self.get(k);
            t += other.get(k);
            if s < t {
                return Ok(Some(k + 1));
            }
        }
        Ok(None)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Syntax(format!("expected `[p1,p2,...]`, got `{s}`")))?;
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Syntax(format!("`{t}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
