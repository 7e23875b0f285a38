//! The Dehornoy order on braid groups.
//!
//! Convention: a word is σ-positive when its LOWEST occurring generator index
//! appears only with positive exponent, and `a < b` iff `a^{-1} b` is
//! represented by a σ-positive word. Every report that depends on the order
//! names this convention via [`CONVENTION`].
//!
//! Classification goes through handle reduction. A `σ_i`-handle is a subword
//! `σ_i^e v σ_i^{-e}` where `v` only uses indices above `i`; it is permitted
//! when the `σ_{i+1}` letters of `v` all share one sign. Reducing it deletes
//! the outer letters and rewrites every `σ_{i+1}^d` in `v` as
//! `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.

use std::cmp::Ordering;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::normal_form;

/// Human-readable name of the σ-positivity convention in use.
pub const CONVENTION: &str = "sigma-positive = lowest generator index occurs only positively";

/// Default safety valve for [`handle_reduce`].
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaClass {
    Trivial,
    Positive(u32),
    Negative(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderOutcome {
    Less,
    Equal,
    Greater,
}

impl OrderOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderOutcome::Less => "LT",
            OrderOutcome::Equal => "EQ",
            OrderOutcome::Greater => "GT",
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            OrderOutcome::Less => OrderOutcome::Greater,
            OrderOutcome::Equal => OrderOutcome::Equal,
            OrderOutcome::Greater => OrderOutcome::Less,
        }
    }
}

impl From<OrderOutcome> for Ordering {
    fn from(o: OrderOutcome) -> Ordering {
        match o {
            OrderOutcome::Less => Ordering::Less,
            OrderOutcome::Equal => Ordering::Equal,
            OrderOutcome::Greater => Ordering::Greater,
        }
    }
}

/// Classifies a handle-free word by the sign of its lowest index.
pub fn sigma_classify(w: &BraidWord) -> Result<SigmaClass> {
    let Some(low) = w.lowest_index() else {
        return Ok(SigmaClass::Trivial);
    };
    let mut pos = false;
    let mut neg = false;
    for &l in w.letters() {
        if l == low {
            pos = true;
        } else if l == -low {
            neg = true;
        }
    }
    match (pos, neg) {
        (true, false) => Ok(SigmaClass::Positive(low as u32)),
        (false, true) => Ok(SigmaClass::Negative(low as u32)),
        _ => Err(Error::Contract(format!(
            "generator {low} occurs with both signs; word is not handle-free: {w}"
        ))),
    }
}

/// Position of the opening letter of the handle closed at `q`, if any: the
/// nearest earlier letter with index at most `|w[q]|` must be `w[q]^{-1}`.
fn handle_opening(letters: &[i32], q: usize) -> Option<usize> {
    let i = letters[q].abs();
    let p = letters[..q].iter().rposition(|l| l.abs() <= i)?;
    (letters[p] == -letters[q]).then_some(p)
}

fn is_permitted(letters: &[i32], p: usize, q: usize) -> bool {
    let next = letters[p].abs() + 1;
    let mut sign = 0;
    for &l in &letters[p + 1..q] {
        if l.abs() == next {
            let s = l.signum();
            if sign != 0 && s != sign {
                return false;
            }
            sign = s;
        }
    }
    true
}

/// Chosen handle: lowest main index, then leftmost opening, among permitted ones.
fn select_handle(letters: &[i32]) -> Option<(usize, usize)> {
    let mut best: Option<(i32, usize, usize)> = None;
    for q in 1..letters.len() {
        let Some(p) = handle_opening(letters, q) else {
            continue;
        };
        let i = letters[q].abs();
        if best.is_some_and(|(bi, bp, _)| (bi, bp) <= (i, p)) {
            continue;
        }
        if is_permitted(letters, p, q) {
            best = Some((i, p, q));
        }
    }
    best.map(|(_, p, q)| (p, q))
}

/// True when no subword is a handle.
pub fn is_handle_free(w: &BraidWord) -> bool {
    let letters = w.letters();
    (1..letters.len()).all(|q| handle_opening(letters, q).is_none())
}

fn reduce_at(letters: &[i32], p: usize, q: usize) -> Vec<i32> {
    let e = letters[p].signum();
    let i = letters[p].abs();
    let mut out = Vec::with_capacity(letters.len() + 2 * (q - p));
    out.extend_from_slice(&letters[..p]);
    for &l in &letters[p + 1..q] {
        if l.abs() == i + 1 {
            let d = l.signum();
            out.extend_from_slice(&[-e * (i + 1), d * i, e * (i + 1)]);
        } else {
            out.push(l);
        }
    }
    out.extend_from_slice(&letters[q + 1..]);
    out
}

/// Eliminates every handle. Each reduction (free cancellations included)
/// counts as one step against `step_budget`.
pub fn handle_reduce(w: &BraidWord, step_budget: u64) -> Result<BraidWord> {
    let mut letters = crate::braid::free_reduce(w).into_letters();
    let mut steps = 0u64;
    while let Some((p, q)) = select_handle(&letters) {
        if steps >= step_budget {
            return Err(Error::BudgetExceeded {
                what: "handle reduction steps".into(),
                used: steps,
            });
        }
        letters = reduce_at(&letters, p, q);
        steps += 1;
    }
    Ok(BraidWord::from_letters_unchecked(w.strands(), letters))
}

/// Three-way Dehornoy comparison with the default step budget.
pub fn dehornoy_compare(a: &BraidWord, b: &BraidWord) -> Result<OrderOutcome> {
    dehornoy_compare_with_budget(a, b, DEFAULT_STEP_BUDGET)
}

pub fn dehornoy_compare_with_budget(
    a: &BraidWord,
    b: &BraidWord,
    step_budget: u64,
) -> Result<OrderOutcome> {
    a.strands().ensure_same(b.strands())?;
    if normal_form(a) == normal_form(b) {
        return Ok(OrderOutcome::Equal);
    }
    let quotient = a.inverse().concat(b)?;
    match sigma_classify(&handle_reduce(&quotient, step_budget)?)? {
        SigmaClass::Positive(_) => Ok(OrderOutcome::Less),
        SigmaClass::Negative(_) => Ok(OrderOutcome::Greater),
        SigmaClass::Trivial => Err(Error::Integrity(format!(
            "handle reduction emptied {a}^-1 {b} but the normal forms differ"
        ))),
    }
}

/// The Dehornoy-least word of a nonempty collection. Words that represent
/// the same element are ranked by length, then lexicographically, so the
/// answer does not depend on input order.
pub fn dehornoy_min<'a, I>(words: I) -> Result<&'a BraidWord>
where
    I: IntoIterator<Item = &'a BraidWord>,
{
    let mut iter = words.into_iter();
    let mut best = iter
        .next()
        .ok_or_else(|| Error::usage("dehornoy_min needs a nonempty set"))?;
    for w in iter {
        let ord = match dehornoy_compare(w, best)? {
            OrderOutcome::Equal => shortlex(w, best),
            o => o.into(),
        };
        if ord == Ordering::Less {
            best = w;
        }
    }
    Ok(best)
}

fn shortlex(a: &BraidWord, b: &BraidWord) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.letters().cmp(b.letters()))
}

/// Sorts ascending in the Dehornoy order (ties as in [`dehornoy_min`]).
pub fn dehornoy_sort(words: &mut [BraidWord]) -> Result<()> {
    let mut failure = None;
    words.sort_by(|a, b| match dehornoy_compare(a, b) {
        Ok(OrderOutcome::Equal) => shortlex(a, b),
        Ok(o) => o.into(),
        Err(e) => {
            failure.get_or_insert(e);
            Ordering::Equal
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}
