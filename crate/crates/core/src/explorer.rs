//! Budgeted exploration of Hilden double cosets `H_{2n} β H_{2n}`.
//!
//! The explorer works inside the ball of Artin radius `ball_radius`. From a
//! seed it follows left and right multiplications by Hilden generators and
//! their inverses, admitting a product only if it stays in the ball, and
//! allowing at most `move_depth` moves on each side along any path. The
//! resulting cell is an under-approximation of the true double coset: a true
//! coset may show up as several explored cells, and cells only ever merge as
//! the budget grows. A reported cell never joins braids from different cosets.
//!
//! Within a cell the canonical representative is the Dehornoy-least element
//! among the members of minimal complexity.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::braid::{BraidWord, StrandCount};
use crate::complexity::{garside_complexity, Ball, ComplexityFunction, DEFAULT_BALL_CAP};
use crate::dehornoy::{dehornoy_compare, dehornoy_sort};
use crate::error::{Error, Result};
use crate::garside::{normal_form, BraidElement};
use crate::hilden::hilden_generators;
use crate::plat::{plat_signature, PlatSignature};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget {
    /// Members must have geodesic length at most this.
    pub ball_radius: u32,
    /// Maximum number of Hilden moves on each side along a path.
    pub move_depth: u32,
    pub complexity: ComplexityFunction,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            ball_radius: 5,
            move_depth: 4,
            complexity: ComplexityFunction::GeodesicArtin { radius_limit: 8 },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone)]
struct HildenMove {
    side: Side,
    by: BraidElement,
}

/// One explored member of a cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMember {
    pub element: BraidElement,
    pub key: String,
    pub witness: BraidWord,
    pub length: u32,
    pub complexity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCell {
    pub strands: StrandCount,
    pub budget: Budget,
    pub seed: BraidWord,
    /// Sorted by `(length, key)`.
    pub members: Vec<CellMember>,
    pub c_min: u32,
    /// Members of complexity `c_min`, ascending in the Dehornoy order.
    pub min_set: Vec<BraidWord>,
    pub canonical: BraidWord,
    /// No member lies on the boundary sphere of the ball.
    pub saturated_at_radius: bool,
    pub signature: PlatSignature,
}

impl CosetCell {
    pub fn contains(&self, e: &BraidElement) -> bool {
        self.members.iter().any(|m| &m.element == e)
    }

    pub fn canonical_key(&self) -> String {
        normal_form(&self.canonical).key()
    }
}

/// A set of distinct cells sorted by the Dehornoy order of their canonical
/// representatives.
#[derive(Debug, Clone)]
pub struct OrderedClasses {
    pub strands: StrandCount,
    pub budget: Budget,
    pub cells: Vec<CosetCell>,
    /// `(seed, seed whose cell absorbed it)` for every seed that joined an earlier cell.
    pub merges: Vec<(BraidWord, BraidWord)>,
    /// Largest complexity among canonical representatives.
    pub max_canonical_complexity: u32,
}

#[derive(Debug, Clone)]
pub struct CanPlatReport {
    pub target_signature: PlatSignature,
    pub budget: Budget,
    pub candidate_set: Vec<BraidWord>,
    pub c_min_global: u32,
    /// Ascending in the Dehornoy order.
    pub global_min_set: Vec<BraidWord>,
    pub beta_global: BraidWord,
    pub cell_of_beta: CosetCell,
    pub compatible: bool,
    /// Every admitted Hilden move from a candidate lands on a candidate.
    pub move_closed: bool,
}

impl CanPlatReport {
    pub fn verdict(&self) -> &'static str {
        match (self.compatible, self.move_closed) {
            (true, _) => "compatible",
            (false, false) => "inconclusive under budget",
            (false, true) => "incompatible",
        }
    }
}

/// All explored cells of one signature class inside the ball.
#[derive(Debug, Clone)]
pub struct SignaturePartition {
    pub target_signature: PlatSignature,
    pub budget: Budget,
    pub candidate_count: usize,
    /// Sorted by the Dehornoy order of canonicals.
    pub cells: Vec<CosetCell>,
}

impl SignaturePartition {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn saturated(&self) -> bool {
        self.cells.iter().all(|c| c.saturated_at_radius)
    }
}

/// Ball, move set and memoised move graph for one `(strands, budget)`.
pub struct CosetExplorer {
    strands: StrandCount,
    budget: Budget,
    ball: Ball,
    moves: Vec<HildenMove>,
    neighbors: Vec<Option<Box<[Option<u32>]>>>,
    signatures: Vec<Option<PlatSignature>>,
}

impl CosetExplorer {
    pub fn new(strands: StrandCount, budget: Budget) -> Result<Self> {
        Self::with_ball_cap(strands, budget, DEFAULT_BALL_CAP)
    }

    pub fn with_ball_cap(strands: StrandCount, budget: Budget, cap: usize) -> Result<Self> {
        let n = strands.bridges()?;
        let ball = Ball::enumerate(strands, budget.ball_radius, cap)?;
        let mut moves = Vec::new();
        for g in hilden_generators(n)? {
            let e = normal_form(&g.word);
            for by in [e.inverse(), e] {
                for side in [Side::Left, Side::Right] {
                    moves.push(HildenMove {
                        side,
                        by: by.clone(),
                    });
                }
            }
        }
        let len = ball.len();
        Ok(CosetExplorer {
            strands,
            budget,
            ball,
            moves,
            neighbors: vec![None; len],
            signatures: vec![None; len],
        })
    }

    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    fn neighbors_of(&mut self, idx: usize) -> &[Option<u32>] {
        if self.neighbors[idx].is_none() {
            let here = &self.ball.entry(idx).element;
            let row: Box<[Option<u32>]> = self
                .moves
                .iter()
                .map(|m| {
                    let product = match m.side {
                        Side::Left => m.by.mul(here),
                        Side::Right => here.mul(&m.by),
                    }
                    .expect("moves share the strand count");
                    self.ball.index_of(&product).map(|i| i as u32)
                })
                .collect();
            self.neighbors[idx] = Some(row);
        }
        self.neighbors[idx].as_deref().expect("filled above")
    }

    /// Ball indices reachable from `start` with at most `move_depth` moves on
    /// each side. States are `(element, left moves, right moves)`; a state is
    /// dropped when the element was already reached with no more moves on
    /// either side.
    fn reach(&mut self, start: usize) -> Vec<usize> {
        let depth = self.budget.move_depth;
        let mut fronts: BTreeMap<usize, Vec<(u32, u32)>> = BTreeMap::new();
        fronts.insert(start, vec![(0, 0)]);
        let mut queue = VecDeque::from([(start, 0u32, 0u32)]);
        while let Some((idx, l, r)) = queue.pop_front() {
            let sides: Vec<Side> = self.moves.iter().map(|m| m.side).collect();
            let row = self.neighbors_of(idx).to_vec();
            for (side, next) in sides.into_iter().zip(row) {
                let Some(next) = next else { continue };
                let (nl, nr) = match side {
                    Side::Left => (l + 1, r),
                    Side::Right => (l, r + 1),
                };
                if nl > depth || nr > depth {
                    continue;
                }
                let front = fronts.entry(next as usize).or_default();
                if front.iter().any(|&(a, b)| a <= nl && b <= nr) {
                    continue;
                }
                front.retain(|&(a, b)| !(nl <= a && nr <= b));
                front.push((nl, nr));
                queue.push_back((next as usize, nl, nr));
            }
        }
        fronts.into_keys().collect()
    }

    fn seed_index(&self, seed: &BraidWord) -> Result<usize> {
        self.strands.ensure_same(seed.strands())?;
        self.ball.index_of(&normal_form(seed)).ok_or_else(|| {
            Error::usage(format!(
                "seed `{seed}` lies outside the ball of radius {}",
                self.budget.ball_radius
            ))
        })
    }

    fn complexity_at(&self, idx: usize) -> Result<u32> {
        let entry = self.ball.entry(idx);
        match self.budget.complexity {
            ComplexityFunction::GeodesicArtin { radius_limit } => {
                if entry.length > radius_limit {
                    return Err(Error::NotFound {
                        what: format!("geodesic length of {}", entry.key),
                        limit: radius_limit as u64,
                    });
                }
                Ok(entry.length)
            }
            ComplexityFunction::GarsideProper => Ok(garside_complexity(&entry.element)),
        }
    }

    fn signature_at(&mut self, idx: usize) -> Result<&PlatSignature> {
        if self.signatures[idx].is_none() {
            self.signatures[idx] = Some(plat_signature(&self.ball.entry(idx).witness)?);
        }
        Ok(self.signatures[idx].as_ref().expect("filled above"))
    }

    fn fill_all_signatures(&mut self) -> Result<()> {
        let ball = &self.ball;
        let computed: Vec<(usize, PlatSignature)> = self
            .signatures
            .par_iter()
            .enumerate()
            .filter(|(_, s)| s.is_none())
            .map(|(i, _)| plat_signature(&ball.entry(i).witness).map(|s| (i, s)))
            .collect::<Result<_>>()?;
        for (i, s) in computed {
            self.signatures[i] = Some(s);
        }
        Ok(())
    }

    /// Builds a cell from a member index set. Every member's signature is
    /// compared against the seed's; a mismatch means the move table is wrong.
    fn build_cell(&mut self, seed: BraidWord, mut members: Vec<usize>) -> Result<CosetCell> {
        members.sort_unstable();
        members.dedup();
        let signature = plat_signature(&seed)?;
        for &i in &members {
            if *self.signature_at(i)? != signature {
                return Err(Error::Integrity(format!(
                    "cell of `{seed}` contains `{}` with a different plat signature",
                    self.ball.entry(i).witness
                )));
            }
        }
        let mut cell_members = Vec::with_capacity(members.len());
        for &i in &members {
            let entry = self.ball.entry(i);
            cell_members.push(CellMember {
                element: entry.element.clone(),
                key: entry.key.clone(),
                witness: entry.witness.clone(),
                length: entry.length,
                complexity: self.complexity_at(i)?,
            });
        }
        let c_min = cell_members
            .iter()
            .map(|m| m.complexity)
            .min()
            .expect("a cell contains its seed");
        let mut min_set: Vec<BraidWord> = cell_members
            .iter()
            .filter(|m| m.complexity == c_min)
            .map(|m| m.witness.clone())
            .collect();
        dehornoy_sort(&mut min_set)?;
        let canonical = min_set[0].clone();
        let saturated_at_radius = cell_members
            .iter()
            .all(|m| m.length < self.budget.ball_radius);
        Ok(CosetCell {
            strands: self.strands,
            budget: self.budget,
            seed,
            members: cell_members,
            c_min,
            min_set,
            canonical,
            saturated_at_radius,
            signature,
        })
    }

    pub fn explore(&mut self, seed: &BraidWord) -> Result<CosetCell> {
        let start = self.seed_index(seed)?;
        let members = self.reach(start);
        self.build_cell(seed.clone(), members)
    }

    /// Explores every seed, merges cells that share a member, and sorts the
    /// distinct cells by their canonical representatives.
    pub fn order_classes(&mut self, seeds: &[BraidWord]) -> Result<OrderedClasses> {
        if seeds.is_empty() {
            return Err(Error::usage("order needs at least one seed"));
        }
        let mut reached = Vec::with_capacity(seeds.len());
        for seed in seeds {
            let start = self.seed_index(seed).map_err(|e| name_seed(e, seed))?;
            reached.push(self.reach(start));
        }
        let mut uf = UnionFind::new(seeds.len());
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        for (s, members) in reached.iter().enumerate() {
            for &m in members {
                match owner.get(&m) {
                    Some(&other) => {
                        uf.union(other, s);
                    }
                    None => {
                        owner.insert(m, s);
                    }
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for s in 0..seeds.len() {
            classes.entry(uf.find(s)).or_default().push(s);
        }
        let mut merges = Vec::new();
        let mut cells = Vec::new();
        let mut groups: Vec<Vec<usize>> = classes.into_values().collect();
        groups.sort_by_key(|g| g[0]);
        for group in groups {
            let first = group[0];
            for &s in &group[1..] {
                merges.push((seeds[s].clone(), seeds[first].clone()));
            }
            let members: Vec<usize> = group
                .iter()
                .flat_map(|&s| reached[s].iter().copied())
                .collect();
            let cell = self
                .build_cell(seeds[first].clone(), members)
                .map_err(|e| name_seed(e, &seeds[first]))?;
            cells.push(cell);
        }
        sort_cells(&mut cells)?;
        let max_canonical_complexity = cells.iter().map(|c| c.c_min).max().unwrap_or(0);
        Ok(OrderedClasses {
            strands: self.strands,
            budget: self.budget,
            cells,
            merges,
            max_canonical_complexity,
        })
    }

    /// Ball indices whose plat signature equals `target`, ascending.
    pub fn candidates(&mut self, target: &PlatSignature) -> Result<Vec<usize>> {
        self.fill_all_signatures()?;
        Ok(self
            .signatures
            .iter()
            .enumerate()
            .filter(|(_, s)| s.as_ref() == Some(target))
            .map(|(i, _)| i)
            .collect())
    }

    /// Budgeted global canonical braid for a signature and the cell it spans.
    pub fn can_plat_search(&mut self, target: &PlatSignature) -> Result<CanPlatReport> {
        let candidates = self.candidates(target)?;
        if candidates.is_empty() {
            return Err(Error::NotFound {
                what: format!(
                    "braid on {} strands with the target plat signature",
                    self.strands
                ),
                limit: self.budget.ball_radius as u64,
            });
        }
        let mut c_min_global = u32::MAX;
        let mut complexities = Vec::with_capacity(candidates.len());
        for &i in &candidates {
            let c = self.complexity_at(i)?;
            c_min_global = c_min_global.min(c);
            complexities.push(c);
        }
        let mut global_min_set: Vec<BraidWord> = candidates
            .iter()
            .zip(&complexities)
            .filter(|(_, &c)| c == c_min_global)
            .map(|(&i, _)| self.ball.entry(i).witness.clone())
            .collect();
        dehornoy_sort(&mut global_min_set)?;
        let beta_global = global_min_set[0].clone();
        let cell_of_beta = self.explore(&beta_global)?;
        let compatible = normal_form(&beta_global) == normal_form(&cell_of_beta.canonical);

        let mut move_closed = true;
        'outer: for &i in &candidates {
            let row = self.neighbors_of(i).to_vec();
            for next in row.into_iter().flatten() {
                if self.signature_at(next as usize)? != target {
                    move_closed = false;
                    break 'outer;
                }
            }
        }

        Ok(CanPlatReport {
            target_signature: target.clone(),
            budget: self.budget,
            candidate_set: candidates
                .iter()
                .map(|&i| self.ball.entry(i).witness.clone())
                .collect(),
            c_min_global,
            global_min_set,
            beta_global,
            cell_of_beta,
            compatible,
            move_closed,
        })
    }

    /// Splits the signature class of `target` inside the ball into explored
    /// cells. Every candidate is used as a seed and overlapping reach sets
    /// are merged.
    pub fn partition_signature_class(
        &mut self,
        target: &PlatSignature,
    ) -> Result<SignaturePartition> {
        let candidates = self.candidates(target)?;
        let mut uf = UnionFind::new(self.ball.len());
        for &c in &candidates {
            for m in self.reach(c) {
                uf.union(c, m);
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &c in &candidates {
            classes.entry(uf.find(c)).or_default().push(c);
        }
        let mut cells = Vec::with_capacity(classes.len());
        for members in classes.into_values() {
            let seed = self.ball.entry(members[0]).witness.clone();
            cells.push(self.build_cell(seed, members)?);
        }
        sort_cells(&mut cells)?;
        Ok(SignaturePartition {
            target_signature: target.clone(),
            budget: self.budget,
            candidate_count: candidates.len(),
            cells,
        })
    }
}

fn name_seed(e: Error, seed: &BraidWord) -> Error {
    match e {
        Error::BudgetExceeded { what, used } => Error::BudgetExceeded {
            what: format!("{what} (seed `{seed}`)"),
            used,
        },
        Error::NotFound { what, limit } => Error::NotFound {
            what: format!("{what} (seed `{seed}`)"),
            limit,
        },
        other => other,
    }
}

fn sort_cells(cells: &mut [CosetCell]) -> Result<()> {
    let mut failure = None;
    cells.sort_by(|a, b| match dehornoy_compare(&a.canonical, &b.canonical) {
        Ok(o) => o.into(),
        Err(e) => {
            failure.get_or_insert(e);
            std::cmp::Ordering::Equal
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    for pair in cells.windows(2) {
        if normal_form(&pair[0].canonical) == normal_form(&pair[1].canonical) {
            return Err(Error::Integrity(format!(
                "disjoint cells share the canonical representative `{}`",
                pair[0].canonical
            )));
        }
    }
    Ok(())
}

pub fn explore_cell(seed: &BraidWord, budget: Budget) -> Result<CosetCell> {
    CosetExplorer::new(seed.strands(), budget)?.explore(seed)
}

pub fn order_classes(seeds: &[BraidWord], budget: Budget) -> Result<OrderedClasses> {
    let strands = seeds
        .first()
        .ok_or_else(|| Error::usage("order needs at least one seed"))?
        .strands();
    for s in seeds {
        strands.ensure_same(s.strands())?;
    }
    CosetExplorer::new(strands, budget)?.order_classes(seeds)
}

pub fn can_plat_search(
    target: &PlatSignature,
    strands: StrandCount,
    budget: Budget,
) -> Result<CanPlatReport> {
    CosetExplorer::new(strands, budget)?.can_plat_search(target)
}
