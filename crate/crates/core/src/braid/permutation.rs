use std::fmt;

use crate::error::{Error, Result};

/// A bijection of strand positions.
///
/// `images[i] = j` means the strand entering at position `i` (top) leaves at
/// position `j` (bottom). Storage is 0-based; the text form and
/// [`Permutation::images_one_based`] use 1-based positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..len as u8).collect(),
        }
    }

    /// The half-twist permutation `i -> len - 1 - i`.
    pub fn reversal(len: usize) -> Self {
        Permutation {
            images: (0..len as u8).rev().collect(),
        }
    }

    /// Swap of positions `pos` and `pos + 1` (0-based), the image of `σ_{pos+1}`.
    pub fn adjacent(len: usize, pos: usize) -> Self {
        let mut p = Self::identity(len);
        p.images.swap(pos, pos + 1);
        p
    }

    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Malformed {
                    token: format!("{images:?}"),
                    reason: "not a permutation of 1..n".into(),
                });
            }
            seen[v - 1] = true;
            out.push((v - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of a 0-based position.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    /// Left-to-right composition: first `self`, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), next.len());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| next.images[v as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Post-compose with the adjacent swap at `pos`, i.e. `self` followed by `σ_{pos+1}`.
    pub(crate) fn swap_outputs(&mut self, pos: usize) {
        let (a, b) = (pos as u8, pos as u8 + 1);
        for v in self.images.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    /// Pre-compose with the adjacent swap at `pos`, i.e. `σ_{pos+1}` followed by `self`.
    pub(crate) fn swap_inputs(&mut self, pos: usize) {
        self.images.swap(pos, pos + 1);
    }

    /// Conjugation by the half-twist: `i -> n-1-p(n-1-i)`.
    pub(crate) fn flip(&self) -> Permutation {
        let n = self.len() as u8;
        Permutation {
            images: self.images.iter().rev().map(|&v| n - 1 - v).collect(),
        }
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    /// One-line image notation, comma separated: `2,1,3,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}
