use std::collections::HashMap;

use rayon::prelude::*;

use crate::braid::{BraidWord, StrandCount};
use crate::error::{Error, Result};
use crate::garside::BraidElement;

/// Default cap on the number of distinct elements a ball may hold.
pub const DEFAULT_BALL_CAP: usize = 5_000_000;

/// One element of a ball with a shortest word reaching it.
#[derive(Debug, Clone)]
pub struct BallEntry {
    pub element: BraidElement,
    pub key: String,
    pub length: u32,
    pub witness: BraidWord,
}

/// All elements of Artin length at most `radius`, deduplicated by normal form.
///
/// Entries are stored sphere by sphere, each sphere sorted by normal-form
/// key, so indices are stable for a given `(strands, radius)`. Witnesses are
/// the first `(parent key, letter)` path found, which makes them independent
/// of how the expansion is scheduled.
#[derive(Debug, Clone)]
pub struct Ball {
    strands: StrandCount,
    radius: u32,
    cap: usize,
    entries: Vec<BallEntry>,
    sphere_starts: Vec<usize>,
    index: HashMap<BraidElement, usize>,
}

impl Ball {
    pub fn new(strands: StrandCount, cap: usize) -> Self {
        let id = BraidElement::identity(strands);
        let mut index = HashMap::new();
        index.insert(id.clone(), 0);
        Ball {
            strands,
            radius: 0,
            cap,
            entries: vec![BallEntry {
                key: id.key(),
                element: id,
                length: 0,
                witness: BraidWord::identity(strands),
            }],
            sphere_starts: vec![0, 1],
            index,
        }
    }

    pub fn enumerate(strands: StrandCount, radius: u32, cap: usize) -> Result<Self> {
        let mut ball = Ball::new(strands, cap);
        ball.extend_to(radius)?;
        Ok(ball)
    }

    #[inline]
    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    #[inline]
    pub fn radius(&self) -> u32 {
        self.radius
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BallEntry] {
        &self.entries
    }

    pub fn entry(&self, idx: usize) -> &BallEntry {
        &self.entries[idx]
    }

    /// Elements of length exactly `r`.
    pub fn sphere(&self, r: u32) -> &[BallEntry] {
        &self.entries[self.sphere_range(r)]
    }

    /// Index range of the sphere of radius `r` within [`Ball::entries`].
    pub fn sphere_range(&self, r: u32) -> std::ops::Range<usize> {
        let r = r as usize;
        if r + 1 >= self.sphere_starts.len() {
            return 0..0;
        }
        self.sphere_starts[r]..self.sphere_starts[r + 1]
    }

    pub fn index_of(&self, e: &BraidElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn get(&self, e: &BraidElement) -> Option<&BallEntry> {
        self.index_of(e).map(|i| &self.entries[i])
    }

    /// Grows the ball one sphere at a time up to `radius`.
    pub fn extend_to(&mut self, radius: u32) -> Result<()> {
        while self.radius < radius {
            self.grow()?;
        }
        Ok(())
    }

    fn grow(&mut self) -> Result<()> {
        let gens = self.strands.generators() as i32;
        let letters: Vec<i32> = (1..=gens).flat_map(|i| [i, -i]).collect();
        let frontier = self.sphere(self.radius);
        let products: Vec<Vec<BraidElement>> = frontier
            .par_iter()
            .map(|entry| {
                letters
                    .iter()
                    .map(|&l| {
                        let mut e = entry.element.clone();
                        e.mul_letter(l);
                        e
                    })
                    .collect()
            })
            .collect();

        let mut fresh: HashMap<BraidElement, BraidWord> = HashMap::new();
        for (entry, row) in frontier.iter().zip(products) {
            for (&l, e) in letters.iter().zip(row) {
                if self.index.contains_key(&e) || fresh.contains_key(&e) {
                    continue;
                }
                let mut letters = entry.witness.letters().to_vec();
                letters.push(l);
                fresh.insert(e, BraidWord::from_letters_unchecked(self.strands, letters));
            }
        }
        if self.entries.len() + fresh.len() > self.cap {
            return Err(Error::BudgetExceeded {
                what: "ball element cap".into(),
                used: (self.entries.len() + fresh.len()) as u64,
            });
        }

        let length = self.radius + 1;
        let mut level: Vec<BallEntry> = fresh
            .into_iter()
            .map(|(element, witness)| BallEntry {
                key: element.key(),
                element,
                length,
                witness,
            })
            .collect();
        level.sort_by(|a, b| a.key.cmp(&b.key));
        for entry in level {
            self.index.insert(entry.element.clone(), self.entries.len());
            self.entries.push(entry);
        }
        self.sphere_starts.push(self.entries.len());
        self.radius = length;
        Ok(())
    }
}

/// Ball of the given radius with the default element cap.
pub fn ball_enumerate(strands: StrandCount, radius: u32) -> Result<Ball> {
    Ball::enumerate(strands, radius, DEFAULT_BALL_CAP)
}
