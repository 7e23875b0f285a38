use std::fmt;

use super::{Permutation, StrandCount};
use crate::error::{Error, Result};

/// A finite sequence of signed Artin generators on a fixed strand count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: StrandCount,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn identity(strands: StrandCount) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Checks every letter against the strand count.
    pub fn new(strands: StrandCount, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            check_letter(l, strands).map_err(|reason| Error::Malformed {
                token: l.to_string(),
                reason,
            })?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: StrandCount, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| check_letter(l, strands).is_ok()));
        BraidWord { strands, letters }
    }

    #[inline]
    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    #[inline]
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.strands.ensure_same(other.strands)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Same letters read in a larger braid group.
    pub fn widen(&self, strands: StrandCount) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Smallest generator index occurring in the word.
    pub fn lowest_index(&self) -> Option<i32> {
        self.letters.iter().map(|l| l.abs()).min()
    }
}

fn check_letter(l: i32, strands: StrandCount) -> std::result::Result<(), String> {
    if l == 0 {
        return Err("generator index 0 does not exist".into());
    }
    if l.unsigned_abs() as usize >= strands.get() {
        return Err(format!(
            "index {} out of range for {} strands",
            l.unsigned_abs(),
            strands
        ));
    }
    Ok(())
}

/// Parses whitespace-separated signed integers. Blank text is the identity.
pub fn parse_word(text: &str, strands: StrandCount) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let l: i32 = token.parse().map_err(|_| Error::Malformed {
            token: token.to_string(),
            reason: "not a signed integer".into(),
        })?;
        check_letter(l, strands).map_err(|reason| Error::Malformed {
            token: token.to_string(),
            reason,
        })?;
        letters.push(l);
    }
    Ok(BraidWord { strands, letters })
}

/// Inverse of [`parse_word`]: letters joined by single spaces.
pub fn format_word(w: &BraidWord) -> String {
    let mut out = String::with_capacity(w.len() * 3);
    for (k, l) in w.letters.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        out.push_str(&l.to_string());
    }
    out
}

/// Cancels adjacent `σ_i^e σ_i^{-e}` pairs until none remain.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut stack: Vec<i32> = Vec::with_capacity(w.len());
    for &l in &w.letters {
        if stack.last() == Some(&-l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    BraidWord {
        strands: w.strands,
        letters: stack,
    }
}

/// Image in the symmetric group, composed left to right:
/// `permutation_of(uv) = permutation_of(u).then(permutation_of(v))`.
pub fn permutation_of(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands.get());
    for &l in &w.letters {
        p.swap_outputs(l.unsigned_abs() as usize - 1);
    }
    p
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, format_word(self))
    }
}
