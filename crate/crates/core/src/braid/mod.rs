//! Braid words on a fixed number of strands and the permutation they induce.
//!
//! Letters are signed, 1-based generator indices: `i > 0` is `σ_i`, `i < 0`
//! is `σ_{|i|}^{-1}`. Words act left to right, so the first letter is the
//! topmost crossing of the diagram.

mod permutation;
mod word;

pub use permutation::Permutation;
pub use word::{format_word, free_reduce, parse_word, permutation_of, BraidWord};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest strand count accepted anywhere. Permutation images are stored as bytes.
pub const MAX_STRANDS: usize = 128;

/// Number of strands of a braid group. Always at least 2.
///
/// Plat operations additionally require an even count; see [`StrandCount::bridges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct StrandCount(u8);

impl StrandCount {
    pub fn new(value: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&value) {
            return Err(Error::usage(format!(
                "strand count must lie in 2..={MAX_STRANDS}, got {value}"
            )));
        }
        Ok(StrandCount(value as u8))
    }

    /// `2n` strands for `n` bridges.
    pub fn for_bridges(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::usage("bridge number must be at least 1"));
        }
        Self::new(2 * n)
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Number of generators `σ_1 .. σ_{strands-1}`.
    #[inline]
    pub fn generators(self) -> usize {
        self.get() - 1
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// The bridge number `n` of a `2n`-strand plat, or a usage error for odd counts.
    pub fn bridges(self) -> Result<usize> {
        if self.is_even() {
            Ok(self.get() / 2)
        } else {
            Err(Error::usage(format!(
                "plat operations need an even strand count, got {}",
                self.0
            )))
        }
    }

    pub(crate) fn ensure_same(self, other: StrandCount) -> Result<()> {
        if self != other {
            return Err(Error::usage(format!(
                "strand counts differ: {} vs {}",
                self.0, other.0
            )));
        }
        Ok(())
    }
}

impl TryFrom<usize> for StrandCount {
    type Error = Error;

    fn try_from(value: usize) -> Result<Self> {
        StrandCount::new(value)
    }
}

impl From<StrandCount> for usize {
    fn from(s: StrandCount) -> usize {
        s.get()
    }
}

impl std::fmt::Display for StrandCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
