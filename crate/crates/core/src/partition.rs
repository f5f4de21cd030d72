//! Integer partitions and the Young-diagram data the eigenvalue formulas use.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{Characteristic, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("arm and leg lists must be strictly decreasing and of equal length")]
    BadFrobenius,
    #[error("partition size bound must be nonnegative, got {0}")]
    NegativeSize(i64),
}

/// A partition, stored as its weakly decreasing positive parts.
///
/// Ordered by size, then by parts compared lexicographically from the
/// largest part down, larger first: `(2) < (1,1)`, `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::NotDecreasing(parts))
        }
    }

    /// Shorthand for tests and tables; panics on invalid parts.
    pub fn from_parts(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cells as `(row, column)`, both 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// Contents `j - i` of all cells, row by row.
    pub fn contents(&self) -> impl Iterator<Item = i32> + '_ {
        self.cells().map(|(i, j)| j as i32 - i as i32)
    }

    /// `C(t) = sum over cells of t^content`, with `t` stored in the `s` slot.
    pub fn content_polynomial(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.contents().map(|c| ((0, c), BigInt::from(1))),
            Characteristic::Zero,
        )
    }

    /// Length of the `j`-th column (1-based).
    fn column(&self, j: u32) -> u32 {
        self.parts.iter().take_while(|&&p| p >= j).count() as u32
    }

    /// Frobenius form `(arms | legs)` along the main diagonal.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let k = self.parts.iter().enumerate().take_while(|&(i, &p)| p > i as u32).count();
        let arms = (0..k).map(|i| self.parts[i] - i as u32 - 1).collect();
        let legs = (0..k).map(|i| self.column(i as u32 + 1) - i as u32 - 1).collect();
        (arms, legs)
    }

    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Result<Self, PartitionError> {
        let decreasing = |x: &[u32]| x.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !decreasing(arms) || !decreasing(legs) {
            return Err(PartitionError::BadFrobenius);
        }
        let k = arms.len();
        let rows = if k == 0 { 0 } else { legs[0] as usize + 1 };
        let mut parts = Vec::with_capacity(rows);
        for i in 0..rows {
            let part = if i < k {
                arms[i] as usize + i + 1
            } else {
                // Below the diagonal square: count the legs that reach row i.
                (0..k).filter(|&c| legs[c] as usize + c >= i).count()
            };
            parts.push(part as u32);
        }
        Self::new(parts)
    }

    /// `(s - s^-1) C(s^2) == sum_i (s^(2a_i+1) - s^(-2b_i-1))`.
    pub fn frobenius_identity_check(&self) -> bool {
        let chr = Characteristic::Zero;
        let z = LaurentPoly::s(chr) - LaurentPoly::monomial(1, 0, -1, chr);
        let lhs = &z * &self.content_polynomial().substitute(1, 2);
        let (arms, legs) = self.frobenius();
        let rhs = arms.iter().zip(&legs).fold(LaurentPoly::zero(chr), |acc, (&a, &b)| {
            acc + LaurentPoly::monomial(1, 0, 2 * a as i32 + 1, chr)
                - LaurentPoly::monomial(1, 0, -2 * b as i32 - 1, chr)
        });
        lhs == rhs
    }

    /// Partitions obtained by adding one cell.
    pub fn plus(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for i in 0..=self.parts.len() {
            let cur = self.parts.get(i).copied().unwrap_or(0);
            if i == 0 || self.parts[i - 1] > cur {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.insert(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by deleting one cell.
    pub fn minus(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for i in 0..self.parts.len() {
            let next = self.parts.get(i + 1).copied().unwrap_or(0);
            if self.parts[i] > next {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.insert(Partition { parts });
            }
        }
        out
    }

    /// `self+ ∪ self-`.
    pub fn neighbors(&self) -> BTreeSet<Partition> {
        let mut out = self.plus();
        out.extend(self.minus());
        out
    }

    /// Partitions of exactly `n`, in this type's order.
    pub fn of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// Every partition of size at most `n`, ordered.
    pub fn enumerate(n: i64) -> Result<Vec<Partition>, PartitionError> {
        if n < 0 {
            return Err(PartitionError::NegativeSize(n));
        }
        Ok((0..=n as u32).flat_map(Self::of_size).collect())
    }
}

fn fill(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        cur.push(p);
        fill(remaining - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = text
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(text.into()))?;
        Self::new(parts)
    }
}
