//! Generating words for the Hilden subgroup `H_{2n}` of `B_{2n}`, the braids
//! that extend over the trivial tangle bounded by the standard caps.
//!
//! Three families: twisting a cap, pulling cap `i+1` through cap `i`, and
//! interchanging adjacent caps. The list may be redundant; explorers only
//! need it to generate.

use std::fmt;

use crate::braid::{BraidWord, StrandCount};
use crate::error::{Error, Result};
use crate::plat::{plat_signature, PlatSignature};

/// Largest `n` for which [`verify_generators`] computes signatures by default.
pub const DEFAULT_VERIFY_MAX_BRIDGES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HildenFamily {
    CapTwist(usize),
    CapThrough(usize),
    CapInterchange(usize),
}

impl fmt::Display for HildenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HildenFamily::CapTwist(i) => write!(f, "CapTwist({i})"),
            HildenFamily::CapThrough(i) => write!(f, "CapThrough({i})"),
            HildenFamily::CapInterchange(i) => write!(f, "CapInterchange({i})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HildenGenerator {
    pub family: HildenFamily,
    pub word: BraidWord,
}

impl HildenFamily {
    fn letters(self) -> Vec<i32> {
        match self {
            HildenFamily::CapTwist(i) => vec![2 * i as i32 - 1],
            HildenFamily::CapThrough(i) => {
                let i = i as i32;
                vec![2 * i, 2 * i - 1, 2 * i - 1, 2 * i]
            }
            HildenFamily::CapInterchange(i) => {
                let i = i as i32;
                vec![2 * i, 2 * i + 1, 2 * i - 1, 2 * i]
            }
        }
    }
}

/// Twists, then throughs, then interchanges, each by ascending index.
pub fn hilden_generators(n: usize) -> Result<Vec<HildenGenerator>> {
    let strands = StrandCount::for_bridges(n)?;
    let families = (1..=n)
        .map(HildenFamily::CapTwist)
        .chain((1..n).map(HildenFamily::CapThrough))
        .chain((1..n).map(HildenFamily::CapInterchange));
    families
        .map(|family| {
            Ok(HildenGenerator {
                family,
                word: BraidWord::new(strands, family.letters())?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub family: HildenFamily,
    pub inverse: bool,
    pub word: BraidWord,
    pub passed: bool,
}

impl fmt::Display for GeneratorCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}{} [{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.family,
            if self.inverse { "^-1" } else { "" },
            self.word
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub bridges: usize,
    pub expected: PlatSignature,
    pub checks: Vec<GeneratorCheck>,
}

/// Checks that every generator and its inverse plat-closes to the
/// `n`-component unlink signature.
pub fn verify_generators(n: usize) -> Result<VerificationReport> {
    verify_generators_up_to(n, DEFAULT_VERIFY_MAX_BRIDGES)
}

pub fn verify_generators_up_to(n: usize, max_bridges: usize) -> Result<VerificationReport> {
    if n > max_bridges {
        return Err(Error::usage(format!(
            "generator verification is limited to n <= {max_bridges}, got {n}"
        )));
    }
    let strands = StrandCount::for_bridges(n)?;
    let expected = plat_signature(&BraidWord::identity(strands))?;
    let mut checks = Vec::new();
    for g in hilden_generators(n)? {
        for inverse in [false, true] {
            let word = if inverse {
                g.word.inverse()
            } else {
                g.word.clone()
            };
            let passed = plat_signature(&word)? == expected;
            checks.push(GeneratorCheck {
                family: g.family,
                inverse,
                word,
                passed,
            });
        }
    }
    if let Some(bad) = checks.iter().find(|c| !c.passed) {
        return Err(Error::Integrity(format!(
            "Hilden generator {}{} [{}] does not fix the trivial plat",
            bad.family,
            if bad.inverse { "^-1" } else { "" },
            bad.word
        )));
    }
    Ok(VerificationReport {
        bridges: n,
        expected,
        checks,
    })
}
