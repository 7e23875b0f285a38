//! Left normal form `Δ^inf · s_1 ⋯ s_k` for braid groups.
//!
//! Simple elements (positive braids where each pair of strands crosses at most
//! once) are stored as their permutations. A normal form keeps the half-twist
//! `Δ` implicit in `inf`; factors are never `Δ` or the identity, and each
//! adjacent pair is left-weighted: the starting set of `s_{j+1}` is contained
//! in the finishing set of `s_j`.
//!
//! Products are built by appending one simple factor at a time and sliding
//! generators leftwards until every adjacent pair is left-weighted again.

use std::fmt;

use crate::braid::{BraidWord, Permutation, StrandCount};
use crate::error::{Error, Result};

/// Generators `σ_{i+1}` that are left divisors of the simple element `p`.
fn starting_set(p: &Permutation) -> u128 {
    let mut set = 0u128;
    for i in 0..p.len() - 1 {
        if p.apply(i) > p.apply(i + 1) {
            set |= 1 << i;
        }
    }
    set
}

/// Generators `σ_{i+1}` that are right divisors of the simple element `p`.
fn finishing_set(p: &Permutation) -> u128 {
    starting_set(&p.inverse())
}

/// Makes `(a, b)` left-weighted by moving generators from the front of `b`
/// to the back of `a`. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let movable = starting_set(b) & !finishing_set(a);
        if movable == 0 {
            return changed;
        }
        let i = movable.trailing_zeros() as usize;
        a.swap_outputs(i);
        b.swap_inputs(i);
        changed = true;
    }
}

pub fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    starting_set(b) & !finishing_set(a) == 0
}

/// Positive word of a simple element, peeling the lowest starting generator first.
/// Its length equals the number of inversions of the permutation.
pub fn simple_word(p: &Permutation) -> Vec<i32> {
    let mut rest = p.clone();
    let mut letters = Vec::with_capacity(p.inversions());
    loop {
        let s = starting_set(&rest);
        if s == 0 {
            return letters;
        }
        let i = s.trailing_zeros() as usize;
        letters.push(i as i32 + 1);
        rest.swap_inputs(i);
    }
}

/// A braid group element in left normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidElement {
    strands: StrandCount,
    inf: i32,
    factors: Vec<Permutation>,
}

impl BraidElement {
    pub fn identity(strands: StrandCount) -> Self {
        BraidElement {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    /// `Δ^k`.
    pub fn delta_power(strands: StrandCount, k: i32) -> Self {
        BraidElement {
            strands,
            inf: k,
            factors: Vec::new(),
        }
    }

    #[inline]
    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    #[inline]
    pub fn inf(&self) -> i32 {
        self.inf
    }

    #[inline]
    pub fn sup(&self) -> i32 {
        self.inf + self.factors.len() as i32
    }

    #[inline]
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    fn delta_perm(&self) -> Permutation {
        Permutation::reversal(self.strands.get())
    }

    /// Right multiplication by `Δ^k`: `x Δ = Δ τ(x)` with `τ` the half-twist flip.
    pub fn mul_delta_power(&mut self, k: i32) {
        self.inf += k;
        if k % 2 != 0 {
            for f in &mut self.factors {
                *f = f.flip();
            }
        }
    }

    /// Right multiplication by the simple element with permutation `s`.
    pub fn mul_simple(&mut self, s: Permutation) {
        debug_assert_eq!(s.len(), self.strands.get());
        if s.is_identity() {
            return;
        }
        if s == self.delta_perm() {
            self.mul_delta_power(1);
            return;
        }
        self.factors.push(s);
        self.restore_left_weighting();
    }

    /// Right multiplication by a single letter `σ_i^{±1}`.
    pub fn mul_letter(&mut self, letter: i32) {
        let pos = letter.unsigned_abs() as usize - 1;
        let n = self.strands.get();
        if letter > 0 {
            self.mul_simple(Permutation::adjacent(n, pos));
        } else {
            // σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1}), and Δ σ_i^{-1} is simple.
            let mut complement = Permutation::reversal(n);
            complement.swap_outputs(pos);
            self.mul_delta_power(-1);
            self.mul_simple(complement);
        }
    }

    /// Repeated right-to-left sweeps of local sliding; then peel off leading
    /// `Δ` factors and trailing identities.
    fn restore_left_weighting(&mut self) {
        loop {
            let mut changed = false;
            for j in (1..self.factors.len()).rev() {
                let (head, tail) = self.factors.split_at_mut(j);
                changed |= left_weight(&mut head[j - 1], &mut tail[0]);
            }
            if !changed {
                break;
            }
        }
        let delta = self.delta_perm();
        let leading = self.factors.iter().take_while(|f| **f == delta).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf += leading as i32;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    pub fn mul(&self, other: &BraidElement) -> Result<BraidElement> {
        self.strands.ensure_same(other.strands)?;
        let mut out = self.clone();
        out.mul_delta_power(other.inf);
        for f in &other.factors {
            out.mul_simple(f.clone());
        }
        Ok(out)
    }

    /// `(Δ^p s_1 ⋯ s_k)^{-1} = s_k^{-1} ⋯ s_1^{-1} Δ^{-p}`, each `s^{-1}` written
    /// as `Δ^{-1}` times its simple complement.
    pub fn inverse(&self) -> BraidElement {
        let mut out = BraidElement::identity(self.strands);
        let delta = self.delta_perm();
        for f in self.factors.iter().rev() {
            out.mul_delta_power(-1);
            out.mul_simple(delta.then(&f.inverse()));
        }
        out.mul_delta_power(-self.inf);
        out
    }

    /// Strand permutation, composed left to right like [`crate::braid::permutation_of`].
    pub fn permutation(&self) -> Permutation {
        let n = self.strands.get();
        let mut p = if self.inf % 2 != 0 {
            Permutation::reversal(n)
        } else {
            Permutation::identity(n)
        };
        for f in &self.factors {
            p = p.then(f);
        }
        p
    }

    /// `Δ^inf` followed by the positive word of each factor. Negative powers
    /// of `Δ` are written with inverse letters.
    pub fn to_word(&self) -> BraidWord {
        let delta_word = simple_word(&self.delta_perm());
        let mut letters = Vec::new();
        for _ in 0..self.inf.unsigned_abs() {
            if self.inf > 0 {
                letters.extend_from_slice(&delta_word);
            } else {
                letters.extend(delta_word.iter().rev().map(|l| -l));
            }
        }
        for f in &self.factors {
            letters.extend(simple_word(f));
        }
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    /// Dedup key: `inf|perm_1|perm_2|…`, permutations in comma-separated
    /// one-line notation.
    pub fn key(&self) -> String {
        let mut out = self.inf.to_string();
        for f in &self.factors {
            out.push('|');
            out.push_str(&f.to_string());
        }
        out
    }

    /// Parses a [`BraidElement::key`] and checks that it really is a normal form.
    pub fn from_key(strands: StrandCount, key: &str) -> Result<BraidElement> {
        let malformed = |reason: &str| Error::Malformed {
            token: key.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = key.split('|');
        let inf: i32 = parts
            .next()
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| malformed("missing or invalid inf"))?;
        let mut factors = Vec::new();
        for part in parts {
            let images = part
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| malformed("invalid permutation image"))?;
            if images.len() != strands.get() {
                return Err(malformed("permutation length differs from strand count"));
            }
            factors.push(Permutation::from_images_one_based(&images)?);
        }
        let e = BraidElement {
            strands,
            inf,
            factors,
        };
        if !e.is_normal() {
            return Err(malformed("factors are not in left normal form"));
        }
        Ok(e)
    }

    /// The normal-form invariants: no identity or `Δ` factor, left-weighted pairs.
    pub fn is_normal(&self) -> bool {
        let delta = self.delta_perm();
        self.factors
            .iter()
            .all(|f| f.len() == self.strands.get() && !f.is_identity() && *f != delta)
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]))
    }
}

impl fmt::Debug for BraidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}<{}>", self.strands, self.key())
    }
}

impl fmt::Display for BraidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// Left normal form of the element a word represents.
pub fn normal_form(w: &BraidWord) -> BraidElement {
    let mut e = BraidElement::identity(w.strands());
    for &l in w.letters() {
        e.mul_letter(l);
    }
    e
}

pub fn word_problem_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    u.strands().ensure_same(v.strands())?;
    Ok(normal_form(u) == normal_form(v))
}

/// `(inf, sup)` of a normal form.
pub fn inf_sup(e: &BraidElement) -> (i32, i32) {
    (e.inf(), e.sup())
}
