//! Dyck paths stored as height sequences, Marchal's two growth moves, and the
//! halving/doubling maps between pair-partition codes and their full paths.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonnegative lattice excursion `h_0, ..., h_L` with `h_0 = h_L = 0` and
/// unit steps. The zero-step path `(0)` is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    heights: Vec<u32>,
}

impl DyckPath {
    /// The zero-step path `(0)`.
    pub fn empty() -> Self {
        DyckPath { heights: vec![0] }
    }

    /// Checks the excursion invariants, reporting the first offending index.
    pub fn validate(heights: &[i64]) -> Result<Self> {
        let Some(&first) = heights.first() else {
            return Err(Error::NotAnExcursion { index: 0, reason: "empty height sequence" });
        };
        if first != 0 {
            return Err(Error::NotAnExcursion { index: 0, reason: "path must start at 0" });
        }
        for (i, w) in heights.windows(2).enumerate() {
            if (w[1] - w[0]).abs() != 1 {
                return Err(Error::NotAnExcursion { index: i + 1, reason: "step is not +-1" });
            }
            if w[1] < 0 {
                return Err(Error::NotAnExcursion { index: i + 1, reason: "negative height" });
            }
        }
        let last = heights.len() - 1;
        if heights[last] != 0 {
            return Err(Error::NotAnExcursion { index: last, reason: "path must end at 0" });
        }
        Ok(DyckPath { heights: heights.iter().map(|&h| h as u32).collect() })
    }

    /// Builds a path from heights already known to satisfy the invariants.
    pub(crate) fn from_heights_unchecked(heights: Vec<u32>) -> Self {
        debug_assert!(Self::validate(&heights.iter().map(|&h| h as i64).collect::<Vec<_>>()).is_ok());
        DyckPath { heights }
    }

    /// Builds a path from a step string of `U`/`D` characters.
    pub fn from_steps(steps: &str) -> Result<Self> {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        let mut h: i64 = 0;
        heights.push(0);
        for (i, c) in steps.trim().chars().enumerate() {
            match c {
                'U' | 'u' => h += 1,
                'D' | 'd' => h -= 1,
                other => return Err(Error::Parse(format!("unexpected step {other:?} at {i}"))),
            }
            heights.push(h);
        }
        Self::validate(&heights)
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn height(&self, t: usize) -> u32 {
        self.heights[t]
    }

    /// Number of steps `L`.
    pub fn len(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Half the number of steps.
    pub fn semilength(&self) -> usize {
        self.len() / 2
    }

    pub fn to_steps(&self) -> String {
        self.heights
            .windows(2)
            .map(|w| if w[1] > w[0] { 'U' } else { 'D' })
            .collect()
    }

    fn check_time(&self, k: usize) -> Result<()> {
        if k > self.len() {
            return Err(Error::IndexOutOfRange { k, max: self.len() });
        }
        Ok(())
    }

    /// Inserts an up-step followed by a down-step right after time `k`.
    pub fn marchal_insert(&self, k: usize) -> Result<Self> {
        self.check_time(k)?;
        let hk = self.heights[k];
        let mut heights = Vec::with_capacity(self.heights.len() + 2);
        heights.extend_from_slice(&self.heights[..=k]);
        heights.push(hk + 1);
        heights.extend_from_slice(&self.heights[k..]);
        Ok(DyckPath { heights })
    }

    /// The last time `l >= k` reached from `k` without going below `h_k`
    /// and at height `h_k`.
    pub fn lift_end(&self, k: usize) -> Result<usize> {
        self.check_time(k)?;
        let hk = self.heights[k];
        let drop = self.heights[k + 1..].iter().position(|&h| h < hk);
        Ok(match drop {
            // the step into the first lower time comes from height h_k
            Some(offset) => k + offset,
            None => self.len(),
        })
    }

    /// Raises the segment between time `k` and [`lift_end`](Self::lift_end)
    /// by one, inserting an up-step after `k` and a down-step after the
    /// shifted end.
    pub fn marchal_lift(&self, k: usize) -> Result<Self> {
        let l = self.lift_end(k)?;
        let mut heights = Vec::with_capacity(self.heights.len() + 2);
        heights.extend_from_slice(&self.heights[..=k]);
        heights.extend(self.heights[k..=l].iter().map(|&h| h + 1));
        heights.extend_from_slice(&self.heights[l..]);
        Ok(DyckPath { heights })
    }

    /// Compresses a pair-partition code `(h_0, h_2, ..., h_{4n})` by halving
    /// the even-time heights.
    pub fn halve(&self) -> Result<Self> {
        let evens: Vec<u32> = self.heights.iter().step_by(2).copied().collect();
        for (k, w) in evens.windows(2).enumerate() {
            if w[0].abs_diff(w[1]) != 2 {
                return Err(Error::NotPairEncodable { k });
            }
        }
        Ok(DyckPath { heights: evens.into_iter().map(|h| h / 2).collect() })
    }

    /// Inverse of [`halve`](Self::halve): doubles every height and fills each
    /// odd time with the unique value one away from both neighbours.
    pub fn double(&self) -> Self {
        let mut heights = Vec::with_capacity(2 * self.heights.len() - 1);
        heights.push(0);
        for w in self.heights.windows(2) {
            heights.push(2 * w[0].max(w[1]) - 1);
            heights.push(2 * w[1]);
        }
        DyckPath { heights }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_steps())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_steps(s)
    }
}
