//! Proper complexity functions on braid groups and the finite balls that
//! witness properness.
//!
//! Two functions are provided. Geodesic Artin length is exact but only
//! computable inside an explored ball; the Garside complexity
//! `|inf| + canonical length` is cheap and proper because it bounds both the
//! power of `Δ` and the number of simple factors.

mod ball;

pub use ball::{ball_enumerate, Ball, BallEntry, DEFAULT_BALL_CAP};

use std::fmt;
use std::str::FromStr;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::{normal_form, BraidElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexityFunction {
    /// Word length in the Artin generators, searched up to `radius_limit`.
    GeodesicArtin { radius_limit: u32 },
    /// `|inf| + (sup - inf)` of the left normal form.
    GarsideProper,
}

impl fmt::Display for ComplexityFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexityFunction::GeodesicArtin { radius_limit } => {
                write!(f, "geodesic:{radius_limit}")
            }
            ComplexityFunction::GarsideProper => f.write_str("garside"),
        }
    }
}

impl FromStr for ComplexityFunction {
    type Err = Error;

    /// Accepts `garside`, `geodesic` (limit 8) or `geodesic:<limit>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed {
            token: s.to_string(),
            reason: "expected `garside`, `geodesic` or `geodesic:<limit>`".into(),
        };
        match s.split_once(':') {
            None if s == "garside" => Ok(ComplexityFunction::GarsideProper),
            None if s == "geodesic" => Ok(ComplexityFunction::GeodesicArtin { radius_limit: 8 }),
            Some(("geodesic", limit)) => Ok(ComplexityFunction::GeodesicArtin {
                radius_limit: limit.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

/// Meet-in-the-middle search for the Artin length of a group element.
///
/// `g` has length at most `k` iff `g = x y` with `|x| = ⌈k/2⌉` and
/// `|y| ≤ ⌊k/2⌋`, so only a ball of radius `⌈limit/2⌉` is ever built. The
/// ball is kept between queries.
#[derive(Debug, Clone)]
pub struct GeodesicOracle {
    ball: Ball,
    inverses: Vec<BraidElement>,
}

impl GeodesicOracle {
    pub fn new(strands: crate::braid::StrandCount) -> Self {
        Self::with_cap(strands, DEFAULT_BALL_CAP)
    }

    pub fn with_cap(strands: crate::braid::StrandCount, cap: usize) -> Self {
        let ball = Ball::new(strands, cap);
        let inverses = vec![BraidElement::identity(strands)];
        GeodesicOracle { ball, inverses }
    }

    fn ensure_radius(&mut self, r: u32) -> Result<()> {
        self.ball.extend_to(r)?;
        let start = self.inverses.len();
        self.inverses.extend(
            self.ball.entries()[start..]
                .iter()
                .map(|e| e.element.inverse()),
        );
        Ok(())
    }

    pub fn length(&mut self, g: &BraidElement, radius_limit: u32) -> Result<u32> {
        self.ball.strands().ensure_same(g.strands())?;
        if let Some(e) = self.ball.get(g) {
            if e.length <= radius_limit {
                return Ok(e.length);
            }
        }
        for k in 0..=radius_limit {
            let (a, b) = (k.div_ceil(2), k / 2);
            self.ensure_radius(a)?;
            let ball = &self.ball;
            let hit = self.inverses[ball.sphere_range(a)].iter().any(|x_inv| {
                let y = x_inv.mul(g).expect("strands checked");
                ball.get(&y).is_some_and(|e| e.length <= b)
            });
            if hit {
                return Ok(k);
            }
        }
        Err(Error::NotFound {
            what: format!("word of length <= limit equal to {}", g.key()),
            limit: radius_limit as u64,
        })
    }
}

/// Least length of a word equal to `w` in the group, if it is at most `radius_limit`.
pub fn geodesic_length(w: &BraidWord, radius_limit: u32) -> Result<u32> {
    GeodesicOracle::new(w.strands()).length(&normal_form(w), radius_limit)
}

/// `|inf| + (sup - inf)`.
pub fn garside_complexity(e: &BraidElement) -> u32 {
    e.inf().unsigned_abs() + e.canonical_length() as u32
}

pub fn complexity_of(c: ComplexityFunction, w: &BraidWord) -> Result<u32> {
    match c {
        ComplexityFunction::GeodesicArtin { radius_limit } => geodesic_length(w, radius_limit),
        ComplexityFunction::GarsideProper => Ok(garside_complexity(&normal_form(w))),
    }
}
