//! Helpers shared by the integration suites: seeded random words, a
//! rewriter that applies defining relations, and a brute-force state-sum
//! oracle for plat closures that shares no code with the library's engine.

#![allow(dead_code)]

use std::collections::BTreeMap;

use platorder_core::{BraidWord, StrandCount};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn strands(n: usize) -> StrandCount {
    StrandCount::new(n).unwrap()
}

pub fn word(letters: &[i32], n: usize) -> BraidWord {
    BraidWord::new(strands(n), letters.to_vec()).unwrap()
}

pub fn random_letters(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    word(&random_letters(rng, n, max_len), n)
}

/// Applies one randomly chosen defining relation somewhere in `letters`,
/// falling back to inserting a cancelling pair when nothing else applies.
pub fn rewrite_once(rng: &mut impl Rng, letters: &mut Vec<i32>, n: usize) {
    let len = letters.len();
    let mut options: Vec<(u8, usize)> = Vec::new();
    for p in 0..len.saturating_sub(1) {
        let (a, b) = (letters[p], letters[p + 1]);
        if a == -b {
            options.push((0, p));
        }
        if (a.abs() - b.abs()).abs() >= 2 {
            options.push((1, p));
        }
    }
    for p in 0..len.saturating_sub(2) {
        let (a, b, c) = (letters[p], letters[p + 1], letters[p + 2]);
        if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
            options.push((2, p));
        }
    }
    let insert = options.is_empty() || rng.gen_bool(0.3);
    if insert {
        let i = rng.gen_range(1..n as i32);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        let at = rng.gen_range(0..=len);
        letters.splice(at..at, [i * e, -i * e]);
        return;
    }
    let (kind, p) = options[rng.gen_range(0..options.len())];
    match kind {
        0 => {
            letters.drain(p..p + 2);
        }
        1 => letters.swap(p, p + 1),
        _ => {
            let (a, b) = (letters[p], letters[p + 1]);
            letters[p] = b;
            letters[p + 1] = a;
            letters[p + 2] = b;
        }
    }
}

/// A word equal in the group to `w`, produced by `steps` relation rewrites.
pub fn rewritten(rng: &mut impl Rng, w: &BraidWord, steps: usize) -> BraidWord {
    let n = w.strands().get();
    let mut letters = w.letters().to_vec();
    for _ in 0..steps {
        rewrite_once(rng, &mut letters, n);
    }
    word(&letters, n)
}

/// Laurent polynomial in `A` as exponent -> coefficient, zeros dropped.
pub type Poly = BTreeMap<i32, i64>;

pub fn poly(terms: &[(i64, i32)]) -> Poly {
    let mut p = Poly::new();
    for &(c, e) in terms {
        *p.entry(e).or_default() += c;
    }
    p.retain(|_, c| *c != 0);
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn join(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    parent[ra] = rb;
}

/// Number of closed curves in the plat diagram of `letters` on `m` strands
/// where crossing `t` is either kept (`None`) or smoothed (`Some(vertical)`).
fn plat_curves(letters: &[i32], m: usize, choice: impl Fn(usize) -> Option<bool>) -> usize {
    let levels = letters.len() + 1;
    let point = |level: usize, j: usize| level * m + j;
    let mut parent: Vec<usize> = (0..levels * m).collect();
    for k in (0..m).step_by(2) {
        join(&mut parent, point(0, k), point(0, k + 1));
        join(&mut parent, point(levels - 1, k), point(levels - 1, k + 1));
    }
    for (t, l) in letters.iter().enumerate() {
        let i = l.unsigned_abs() as usize - 1;
        for j in (0..m).filter(|&j| j != i && j != i + 1) {
            join(&mut parent, point(t, j), point(t + 1, j));
        }
        match choice(t) {
            None => {
                join(&mut parent, point(t, i), point(t + 1, i + 1));
                join(&mut parent, point(t, i + 1), point(t + 1, i));
            }
            Some(true) => {
                join(&mut parent, point(t, i), point(t + 1, i));
                join(&mut parent, point(t, i + 1), point(t + 1, i + 1));
            }
            Some(false) => {
                join(&mut parent, point(t, i), point(t, i + 1));
                join(&mut parent, point(t + 1, i), point(t + 1, i + 1));
            }
        }
    }
    (0..levels * m)
        .filter(|&x| find(&mut parent, x) == x)
        .count()
}

pub fn oracle_components(w: &BraidWord) -> usize {
    plat_curves(w.letters(), w.strands().get(), |_| None)
}

/// Kauffman bracket of the plat closure by summing over all `2^c` states.
/// A positive letter contributes `A` for the vertical smoothing and `A^-1`
/// for the cap-cup smoothing; a negative letter the other way round. The
/// result is normalised so a single circle evaluates to 1.
pub fn oracle_bracket(w: &BraidWord) -> Poly {
    let letters = w.letters();
    let c = letters.len();
    assert!(c <= 20, "state sum over {c} crossings is too large");
    let delta = poly(&[(-1, 2), (-1, -2)]);
    let mut total = Poly::new();
    for state in 0u32..1 << c {
        let vertical = |t: usize| state >> t & 1 == 1;
        let mut exp = 0;
        for (t, l) in letters.iter().enumerate() {
            exp += if vertical(t) == (*l > 0) { 1 } else { -1 };
        }
        let loops = plat_curves(letters, w.strands().get(), |t| Some(vertical(t)));
        let mut term = poly(&[(1, exp)]);
        for _ in 1..loops {
            term = poly_mul(&term, &delta);
        }
        for (e, k) in term {
            *total.entry(e).or_default() += k;
        }
    }
    total.retain(|_, k| *k != 0);
    total
}

/// Converts the library's polynomial into the oracle's representation.
pub fn as_poly(p: &platorder_core::LaurentPoly) -> Poly {
    poly(&p.terms().collect::<Vec<_>>())
}
