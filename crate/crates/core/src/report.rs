//! Serialisable reports. Field order is fixed by declaration order, so the
//! same inputs always produce byte-identical JSON.

use serde::{Deserialize, Serialize};

use crate::braid::{format_word, parse_word, BraidWord, StrandCount};
use crate::complexity::ComplexityFunction;
use crate::dehornoy::CONVENTION;
use crate::error::{Error, Result};
use crate::explorer::{Budget, CanPlatReport, CosetCell, OrderedClasses, SignaturePartition};
use crate::garside::{normal_form, BraidElement};
use crate::plat::{kauffman_bracket_plat, plat_signature, PlatSignature};

pub const MONOTONICITY_NOTE: &str = "cells can only merge, never split, as budgets grow; \
     against true double cosets, cells may split, never merge incorrectly";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetReport {
    pub ball_radius: u32,
    pub move_depth: u32,
    pub complexity: String,
}

impl From<Budget> for BudgetReport {
    fn from(b: Budget) -> Self {
        BudgetReport {
            ball_radius: b.ball_radius,
            move_depth: b.move_depth,
            complexity: b.complexity.to_string(),
        }
    }
}

impl TryFrom<&BudgetReport> for Budget {
    type Error = Error;

    fn try_from(r: &BudgetReport) -> Result<Self> {
        Ok(Budget {
            ball_radius: r.ball_radius,
            move_depth: r.move_depth,
            complexity: r.complexity.parse::<ComplexityFunction>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub strands: usize,
    pub budget: BudgetReport,
    pub seed: String,
    /// Normal-form key of the canonical representative.
    pub nf_key: String,
    pub member_count: usize,
    pub c_min: u32,
    pub min_set: Vec<String>,
    pub canonical: String,
    pub saturated_at_radius: bool,
    pub signature: PlatSignature,
    pub convention: String,
    pub note: String,
}

impl From<&CosetCell> for CellReport {
    fn from(c: &CosetCell) -> Self {
        CellReport {
            strands: c.strands.get(),
            budget: c.budget.into(),
            seed: format_word(&c.seed),
            nf_key: c.canonical_key(),
            member_count: c.members.len(),
            c_min: c.c_min,
            min_set: c.min_set.iter().map(format_word).collect(),
            canonical: format_word(&c.canonical),
            saturated_at_radius: c.saturated_at_radius,
            signature: c.signature.clone(),
            convention: CONVENTION.to_string(),
            note: MONOTONICITY_NOTE.to_string(),
        }
    }
}

impl CellReport {
    /// Re-parses every word and the key, checking they agree with each other.
    pub fn check_round_trip(&self) -> Result<()> {
        let strands = StrandCount::new(self.strands)?;
        Budget::try_from(&self.budget)?;
        parse_word(&self.seed, strands)?;
        for word in &self.min_set {
            parse_word(word, strands)?;
        }
        let canonical = parse_word(&self.canonical, strands)?;
        let from_key = BraidElement::from_key(strands, &self.nf_key)?;
        if normal_form(&canonical) != from_key {
            return Err(Error::Integrity(format!(
                "nf_key `{}` does not match canonical `{}`",
                self.nf_key, self.canonical
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanPlatJson {
    #[serde(flatten)]
    pub cell: CellReport,
    pub beta_global: String,
    pub compatible: bool,
    pub c_min_global: u32,
    pub global_min_set: Vec<String>,
    /// Number of ball elements in the target's signature class.
    pub signature_class_size: usize,
    pub move_closed: bool,
    pub verdict: String,
}

impl From<&CanPlatReport> for CanPlatJson {
    fn from(r: &CanPlatReport) -> Self {
        CanPlatJson {
            cell: (&r.cell_of_beta).into(),
            beta_global: format_word(&r.beta_global),
            compatible: r.compatible,
            c_min_global: r.c_min_global,
            global_min_set: r.global_min_set.iter().map(format_word).collect(),
            signature_class_size: r.candidate_set.len(),
            move_closed: r.move_closed,
            verdict: r.verdict().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeReport {
    pub seed: String,
    pub merged_into: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub strands: usize,
    pub budget: BudgetReport,
    pub convention: String,
    pub cell_count: usize,
    /// Ascending in the induced order.
    pub cells: Vec<CellReport>,
    pub merges: Vec<MergeReport>,
    pub max_canonical_complexity: u32,
    pub note: String,
}

impl From<&OrderedClasses> for OrderReport {
    fn from(o: &OrderedClasses) -> Self {
        OrderReport {
            strands: o.strands.get(),
            budget: o.budget.into(),
            convention: CONVENTION.to_string(),
            cell_count: o.cells.len(),
            cells: o.cells.iter().map(CellReport::from).collect(),
            merges: o
                .merges
                .iter()
                .map(|(seed, into)| MergeReport {
                    seed: format_word(seed),
                    merged_into: format_word(into),
                })
                .collect(),
            max_canonical_complexity: o.max_canonical_complexity,
            note: MONOTONICITY_NOTE.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub strands: usize,
    pub budget: BudgetReport,
    pub signature: PlatSignature,
    pub signature_class_size: usize,
    pub cell_count: usize,
    pub saturated_at_radius: bool,
    pub cells: Vec<CellReport>,
    pub note: String,
}

impl From<&SignaturePartition> for PartitionReport {
    fn from(p: &SignaturePartition) -> Self {
        PartitionReport {
            strands: p.cells.first().map_or(0, |c| c.strands.get()),
            budget: p.budget.into(),
            signature: p.target_signature.clone(),
            signature_class_size: p.candidate_count,
            cell_count: p.cell_count(),
            saturated_at_radius: p.saturated(),
            cells: p.cells.iter().map(CellReport::from).collect(),
            note: MONOTONICITY_NOTE.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatReport {
    pub strands: usize,
    pub word: String,
    pub bracket: String,
    pub components: usize,
    pub brackets: Vec<String>,
}

pub fn plat_report(w: &BraidWord) -> Result<PlatReport> {
    let sig = plat_signature(w)?;
    Ok(PlatReport {
        strands: w.strands().get(),
        word: format_word(w),
        bracket: kauffman_bracket_plat(w)?.to_string(),
        components: sig.components,
        brackets: sig.brackets.iter().map(ToString::to_string).collect(),
    })
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports contain only strings, numbers and bools")
}
