//! Invariants of the plat closure of a braid on `2n` strands.
//!
//! The plat closure joins top endpoints `(1,2), (3,4), …` with caps and the
//! bottom endpoints the same way with cups. Braid words are read top to
//! bottom. The Kauffman bracket is evaluated as a Temperley–Lieb transfer:
//! start from the cap state, resolve `σ_i` as `A·1 + A^{-1}·e_i` (and
//! `σ_i^{-1}` with `A` and `A^{-1}` swapped), then pair with the cup state.
//! Brackets are normalised so the unknot has value 1.

mod laurent;
mod matching;

pub use laurent::LaurentPoly;
pub use matching::{all_matchings, PlanarMatching};

use serde::{Deserialize, Serialize};

use crate::braid::{permutation_of, BraidWord};
use crate::error::Result;
use matching::TlState;

/// Number of link components of the plat closure.
pub fn component_count(w: &BraidWord) -> Result<usize> {
    Ok(trace_components(w)?.count)
}

struct Components {
    count: usize,
    /// Component index of each strand, strands named by their top position.
    of_strand: Vec<usize>,
    /// Whether the traced orientation runs the strand downward.
    downward: Vec<bool>,
}

/// Walks every component: down a strand, across a bottom cup, up the strand
/// ending there, across a top cap, and so on. Each component is entered at
/// its lowest-numbered strand heading down.
fn trace_components(w: &BraidWord) -> Result<Components> {
    w.strands().bridges()?;
    let n = w.strands().get();
    let perm = permutation_of(w);
    let inv = perm.inverse();
    let mut of_strand = vec![usize::MAX; n];
    let mut downward = vec![true; n];
    let mut count = 0;
    for start in 0..n {
        if of_strand[start] != usize::MAX {
            continue;
        }
        let mut strand = start;
        let mut down = true;
        while of_strand[strand] == usize::MAX {
            of_strand[strand] = count;
            downward[strand] = down;
            if down {
                strand = inv.apply(perm.apply(strand) ^ 1);
            } else {
                strand ^= 1;
            }
            down = !down;
        }
        count += 1;
    }
    Ok(Components {
        count,
        of_strand,
        downward,
    })
}

fn transfer(w: &BraidWord) -> TlState {
    let n = w.strands().get();
    let mut state = TlState::new();
    state.insert(PlanarMatching::standard_caps(n), LaurentPoly::one());
    let delta = LaurentPoly::delta();
    for &l in w.letters() {
        let pos = l.unsigned_abs() as usize - 1;
        let (keep, cup) = if l > 0 { (1, -1) } else { (-1, 1) };
        let mut next = TlState::new();
        for (m, c) in &state {
            *next.entry(m.clone()).or_default() += &c.scaled(1, keep);
            let (closed, m2) = m.cap_cup(pos);
            let mut term = c.scaled(1, cup);
            if closed {
                term = &term * &delta;
            }
            *next.entry(m2).or_default() += &term;
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    state
}

/// Unknot-normalised Kauffman bracket of the plat diagram.
pub fn kauffman_bracket_plat(w: &BraidWord) -> Result<LaurentPoly> {
    let n = w.strands().get();
    w.strands().bridges()?;
    let cups = PlanarMatching::standard_caps(n);
    let delta = LaurentPoly::delta();
    let mut total = LaurentPoly::zero();
    for (m, c) in transfer(w) {
        let loops = m.loops_against(&cups) as u32;
        total += &(&c * &delta.pow(loops - 1));
    }
    Ok(total)
}

/// Writhe of the plat diagram for strand directions `downward`.
///
/// A crossing `σ_i^e` counts `e` when both strands run the same vertical
/// direction and `-e` when they run opposite ways.
fn writhe(w: &BraidWord, downward: &[bool]) -> i32 {
    let mut at: Vec<usize> = (0..w.strands().get()).collect();
    let mut total = 0;
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (at[i], at[i + 1]);
        let e = l.signum();
        total += if downward[a] == downward[b] { e } else { -e };
        at.swap(i, i + 1);
    }
    total
}

/// Computable stand-in for the link type of a plat closure.
///
/// Equal signatures do not prove the links are isotopic; reports call the
/// grouping a "signature class".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlatSignature {
    pub components: usize,
    /// Writhe-normalised brackets `(-A^3)^{-w}⟨D⟩`, one per orientation
    /// class (global reversal identified), sorted.
    #[serde(with = "poly_strings")]
    pub brackets: Vec<LaurentPoly>,
}

impl PlatSignature {
    /// Signature of the unknot at any level.
    pub fn unknot() -> Self {
        PlatSignature {
            components: 1,
            brackets: vec![LaurentPoly::one()],
        }
    }

    /// Signature of the trivial plat on `2n` strands, the `n`-component unlink.
    pub fn unlink(n: usize) -> Self {
        let value = LaurentPoly::delta().pow(n as u32 - 1);
        PlatSignature {
            components: n,
            brackets: vec![value; 1 << (n - 1)],
        }
    }
}

pub fn plat_signature(w: &BraidWord) -> Result<PlatSignature> {
    let comps = trace_components(w)?;
    let bracket = kauffman_bracket_plat(w)?;
    let mut brackets = Vec::with_capacity(1 << (comps.count - 1));
    // Component 0 keeps its traced orientation; the others flip per mask bit.
    for mask in 0usize..1 << (comps.count - 1) {
        let downward: Vec<bool> = comps
            .downward
            .iter()
            .zip(&comps.of_strand)
            .map(|(&d, &c)| {
                if c > 0 && mask >> (c - 1) & 1 == 1 {
                    !d
                } else {
                    d
                }
            })
            .collect();
        let wr = writhe(w, &downward);
        let sign = if wr % 2 == 0 { 1 } else { -1 };
        brackets.push(bracket.scaled(sign, -3 * wr));
    }
    brackets.sort();
    Ok(PlatSignature {
        components: comps.count,
        brackets,
    })
}

/// Outcome of checking the Temperley–Lieb relations on every basis state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TlRelationCheck {
    pub points: usize,
    pub states: usize,
    pub failures: Vec<String>,
}

/// Verifies `e_i e_i = δ e_i` and `e_i e_{i±1} e_i = e_i` on all states of `2n` points.
pub fn check_tl_relations(n: usize) -> TlRelationCheck {
    let points = 2 * n;
    let states = all_matchings(points);
    let mut failures = Vec::new();
    // (loops, result) after applying a sequence of generators.
    let apply = |m: &PlanarMatching, seq: &[usize]| {
        seq.iter().fold((0usize, m.clone()), |(loops, m), &i| {
            let (closed, m2) = m.cap_cup(i);
            (loops + closed as usize, m2)
        })
    };
    for m in &states {
        for i in 0..points.saturating_sub(1) {
            let (l1, m1) = apply(m, &[i]);
            let (l2, m2) = apply(m, &[i, i]);
            if m2 != m1 || l2 != l1 + 1 {
                failures.push(format!("e{}^2 != delta e{} on {:?}", i + 1, i + 1, m));
            }
            for j in [i.wrapping_sub(1), i + 1] {
                if j >= points - 1 {
                    continue;
                }
                let (l3, m3) = apply(m, &[i, j, i]);
                if m3 != m1 || l3 != l1 {
                    failures.push(format!("e{0} e{1} e{0} != e{0} on {2:?}", i + 1, j + 1, m));
                }
            }
        }
    }
    TlRelationCheck {
        points,
        states: states.len(),
        failures,
    }
}

mod poly_strings {
    use super::LaurentPoly;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(polys: &[LaurentPoly], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(polys.iter().map(|p| p.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<LaurentPoly>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| t.parse().map_err(D::Error::custom))
            .collect()
    }
}
