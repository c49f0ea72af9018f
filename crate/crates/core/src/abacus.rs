//! `r`-abaci and the combinatorics built on them.
//!
//! Row `j` of the abacus of `(lambda, s)` has a bead at `k` iff
//! `k = lambda_i - i + s` for some `i >= 0`. Rows are stored as
//! `(charge, partition)` pairs, so equality of abaci is equality of rows.
//! Rows are numbered `1..=r` in [`OpPosition`] and in rendered output, and
//! zero-based everywhere else.

use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Context, Multicharge};
use crate::young::{ChargedMultipartition, Multipartition, Partition};

/// One row of an abacus: a charged partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbacusRow {
    pub charge: i64,
    pub shape: Partition,
}

impl AbacusRow {
    pub fn new(shape: Partition, charge: i64) -> Self {
        Self { charge, shape }
    }

    /// The first `count` beta numbers, decreasing.
    pub fn betas(&self, count: usize) -> Vec<i64> {
        (0..count)
            .map(|i| self.shape.part(i) as i64 - i as i64 + self.charge)
            .collect()
    }

    /// Every position at or below this one is a bead.
    pub fn bead_floor(&self) -> i64 {
        self.charge - self.shape.len() as i64
    }

    /// Position of the rightmost bead.
    pub fn top_bead(&self) -> i64 {
        self.shape.part(0) as i64 + self.charge
    }

    pub fn has_bead(&self, k: i64) -> bool {
        if k <= self.bead_floor() {
            return true;
        }
        let betas = self.betas(self.shape.len());
        betas.binary_search_by(|b| k.cmp(b)).is_ok()
    }

    /// Reads a row back from its beads: everything at or below `floor`,
    /// plus `beads` (all strictly above `floor`).
    pub fn from_beads(floor: i64, mut beads: Vec<i64>) -> Self {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(beads.iter().all(|&b| b > floor));
        let charge = floor + beads.len() as i64;
        let parts = beads
            .iter()
            .enumerate()
            .map(|(i, &b)| (b + i as i64 - charge) as usize)
            .collect();
        Self { charge, shape: Partition::from_sorted(parts) }
    }

    /// Beads strictly above `floor`, where `floor <= bead_floor()`.
    fn beads_above(&self, floor: i64) -> Vec<i64> {
        let count = (self.charge - floor).max(0) as usize;
        self.betas(count.max(self.shape.len()))
            .into_iter()
            .filter(|&b| b > floor)
            .collect()
    }

    fn without_bead(&self, k: i64) -> Self {
        let floor = self.bead_floor().min(k - 1);
        let mut beads = self.beads_above(floor);
        let pos = beads.iter().position(|&b| b == k).expect("no bead to remove");
        beads.swap_remove(pos);
        Self::from_beads(floor, beads)
    }

    fn with_bead(&self, k: i64) -> Self {
        let floor = self.bead_floor().min(k - 1);
        let mut beads = self.beads_above(floor);
        debug_assert!(!beads.contains(&k));
        beads.push(k);
        Self::from_beads(floor, beads)
    }
}

/// An `r`-abacus for a fixed `ell`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Abacus {
    ell: usize,
    rows: Vec<AbacusRow>,
}

/// Position `(i, j)` of an elementary operation; `j` is one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OpPosition {
    pub i: i64,
    pub j: usize,
}

impl OpPosition {
    pub fn new(i: i64, j: usize) -> Self {
        Self { i, j }
    }
}

impl Abacus {
    pub fn new(ell: usize, rows: Vec<AbacusRow>) -> Self {
        assert!(ell >= 2, "ell must be at least 2");
        assert!(!rows.is_empty(), "an abacus needs at least one row");
        Self { ell, rows }
    }

    /// The abacus of `(mp, lifts)`.
    pub fn from_multipartition(ell: usize, mp: &Multipartition, lifts: &[i64]) -> Result<Self> {
        if lifts.len() != mp.r() {
            return Err(Error::ComponentCount { expected: mp.r(), got: lifts.len() });
        }
        let rows = mp
            .components()
            .iter()
            .zip(lifts)
            .map(|(p, &c)| AbacusRow::new(p.clone(), c))
            .collect();
        Ok(Self::new(ell, rows))
    }

    /// Inverse of [`Abacus::from_multipartition`].
    pub fn to_multipartition(&self) -> (Multipartition, Vec<i64>) {
        let mp = Multipartition::new(self.rows.iter().map(|r| r.shape.clone()).collect());
        (mp, self.charges())
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[AbacusRow] {
        &self.rows
    }

    pub fn charges(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.charge).collect()
    }

    /// Bead predicate, `j` one-based.
    pub fn bead(&self, k: i64, j: usize) -> bool {
        self.rows[j - 1].has_bead(k)
    }

    /// Where the bead at `(i, j)` would land.
    fn target(&self, p: OpPosition) -> (i64, usize) {
        if p.j < self.r() {
            (p.i, p.j + 1)
        } else {
            (p.i - self.ell as i64, 1)
        }
    }

    pub fn can_apply(&self, p: OpPosition) -> bool {
        if p.j == 0 || p.j > self.r() || !self.bead(p.i, p.j) {
            return false;
        }
        let (k, t) = self.target(p);
        !self.bead(k, t)
    }

    /// An `ell`-elementary operation, or `None` when it is impossible.
    pub fn elementary_op(&self, p: OpPosition) -> Option<Abacus> {
        if !self.can_apply(p) {
            return None;
        }
        let (k, t) = self.target(p);
        let mut rows = self.rows.clone();
        rows[p.j - 1] = rows[p.j - 1].without_bead(p.i);
        rows[t - 1] = rows[t - 1].with_bead(k);
        Some(Abacus { ell: self.ell, rows })
    }

    /// Every possible elementary operation, sorted by `(j, i)`.
    pub fn applicable_ops(&self) -> Vec<OpPosition> {
        let mut ops = Vec::new();
        for j in 1..=self.r() {
            let row = &self.rows[j - 1];
            let (shift, t) = if j < self.r() { (0, j + 1) } else { (self.ell as i64, 1) };
            // the target needs a hole, so it sits above the target's floor
            let lo = self.rows[t - 1].bead_floor() + 1 + shift;
            for i in lo..=row.top_bead() {
                let p = OpPosition::new(i, j);
                if self.can_apply(p) {
                    ops.push(p);
                }
            }
        }
        ops
    }

    pub fn is_core(&self) -> bool {
        self.applicable_ops().is_empty()
    }

    /// Text picture over `[lo, hi]`: row `r` on top, `o` for beads, `.` for
    /// holes, and `|` just left of position 0 when it is in the window.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        assert!(lo <= hi, "empty window");
        let mut out = String::new();
        for (n, row) in self.rows.iter().enumerate().rev() {
            for k in lo..=hi {
                if k == 0 {
                    out.push('|');
                }
                out.push(if row.has_bead(k) { 'o' } else { '.' });
            }
            if n > 0 {
                out.push('\n');
            }
        }
        out
    }

    /// Window covering every position where some row changes.
    pub fn default_window(&self) -> (i64, i64) {
        let lo = self.rows.iter().map(AbacusRow::bead_floor).min().unwrap_or(0);
        let hi = self.rows.iter().map(AbacusRow::top_bead).max().unwrap_or(0);
        ((lo - 1).min(-1), (hi + 1).max(0))
    }
}

/// How [`reduce_to_core`] picks the next operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionPolicy {
    /// Smallest `(j, i)` first.
    Deterministic,
    /// Uniformly random among the possible operations.
    Random(u64),
}

/// Performs elementary operations until none is possible. Returns the core
/// and the number of operations done.
pub fn reduce_to_core(a: &Abacus, policy: ReductionPolicy) -> (Abacus, usize) {
    let mut rng = match policy {
        ReductionPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        ReductionPolicy::Deterministic => None,
    };
    let mut current = a.clone();
    let mut count = 0;
    loop {
        let ops = current.applicable_ops();
        if ops.is_empty() {
            return (current, count);
        }
        let pick = match rng.as_mut() {
            Some(rng) => ops[rng.gen_range(0..ops.len())],
            None => ops[0],
        };
        current = current.elementary_op(pick).expect("listed operation applies");
        count += 1;
    }
}

/// A charged multipartition with canonical lifts, stably sorted by lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedCharge {
    pub mp: Multipartition,
    pub lifts: Vec<i64>,
    /// `mp.component(k)` is component `permutation[k]` of the input.
    pub permutation: Vec<usize>,
}

pub fn sort_for_core(x: &ChargedMultipartition) -> SortedCharge {
    let s = x.charge();
    let mut permutation: Vec<usize> = (0..s.r()).collect();
    permutation.sort_by_key(|&j| s.get(j));
    let mp = Multipartition::new(permutation.iter().map(|&j| x.mp().component(j).clone()).collect());
    let lifts = permutation.iter().map(|&j| s.get(j) as i64).collect();
    SortedCharge { mp, lifts, permutation }
}

/// The `ell`-core of a charged multipartition, in sorted component order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargedCore {
    pub mp: Multipartition,
    pub charge: Multicharge,
    /// Integer charges of the core abacus before reduction modulo `ell`.
    pub lifts: Vec<i64>,
    /// Number of elementary operations performed.
    pub ops: usize,
    pub permutation: Vec<usize>,
}

pub fn charged_core(ctx: &Context, x: &ChargedMultipartition) -> ChargedCore {
    let sorted = sort_for_core(x);
    let a = Abacus::from_multipartition(ctx.ell(), &sorted.mp, &sorted.lifts)
        .expect("sorted lifts match the component count");
    let (core, ops) = reduce_to_core(&a, ReductionPolicy::Deterministic);
    let (mp, lifts) = core.to_multipartition();
    let charge = Multicharge::new(ctx, &lifts).expect("the core keeps r rows");
    ChargedCore { mp, charge, lifts, ops, permutation: sorted.permutation }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Uglov's map on an arbitrary `r`-abacus: the single row whose bead at `y`
/// is the bead of the source at `(p(y), rho(y))`, with
/// `p(y) = ell * floor((y-1)/(r ell)) + ((y-1) mod ell) + 1` and
/// `rho(y) = r - floor(((y-1) mod (r ell)) / ell)`.
pub fn uglov_abacus(a: &Abacus) -> (Partition, i64) {
    let ell = a.ell() as i64;
    let r = a.r() as i64;
    let block = r * ell;
    let floor = a.rows().iter().map(AbacusRow::bead_floor).min().expect("nonempty");
    let top = a.rows().iter().map(AbacusRow::top_bead).max().expect("nonempty");
    // every y in blocks <= m_lo is a bead, every y in blocks >= m_hi a hole
    let m_lo = floor_div(floor, ell) - 1;
    let m_hi = floor_div(top - 1, ell) + 1;
    let y_floor = (m_lo + 1) * block;
    let beads: Vec<i64> = (y_floor + 1..=m_hi * block)
        .filter(|&y| {
            let p = ell * floor_div(y - 1, block) + (y - 1).rem_euclid(ell) + 1;
            let rho = r - (y - 1).rem_euclid(block) / ell;
            a.bead(p, rho as usize)
        })
        .collect();
    let row = AbacusRow::from_beads(y_floor, beads);
    (row.shape, row.charge)
}

/// Uglov's map `tau(mp, lifts)` for nondecreasing lifts in `[0, ell)`.
pub fn uglov_tau(ctx: &Context, mp: &Multipartition, lifts: &[i64]) -> Result<(Partition, i64)> {
    let ell = ctx.ell() as i64;
    let sorted = lifts.windows(2).all(|w| w[0] <= w[1]);
    if !sorted || lifts.iter().any(|&c| !(0..ell).contains(&c)) {
        return Err(Error::InvalidLifts(lifts.to_vec()));
    }
    let a = Abacus::from_multipartition(ctx.ell(), mp, lifts)?;
    Ok(uglov_abacus(&a))
}

/// A witness: `path` leads from the searched abacus to the start of `cycle`,
/// a sequence of `r` elementary operations that restores the charges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RCycle {
    pub path: Vec<OpPosition>,
    pub cycle: Vec<OpPosition>,
}

impl RCycle {
    /// Replays the witness, returning the abaci before and after the cycle.
    pub fn replay(&self, a: &Abacus) -> Option<(Abacus, Abacus)> {
        let start = self.path.iter().try_fold(a.clone(), |acc, &p| acc.elementary_op(p))?;
        let end = self.cycle.iter().try_fold(start.clone(), |acc, &p| acc.elementary_op(p))?;
        (self.cycle.len() == a.r() && end.charges() == start.charges()).then_some((start, end))
    }
}

/// Lexicographically smallest charge-restoring `r`-op sequence from `a`.
fn cycle_from(a: &Abacus) -> Option<Vec<OpPosition>> {
    fn dfs(a: &Abacus, goal: &[i64], used: &mut Vec<bool>, seq: &mut Vec<OpPosition>) -> bool {
        if seq.len() == a.r() {
            return a.charges() == goal;
        }
        for p in a.applicable_ops() {
            // charge flows around the cycle 1 -> 2 -> ... -> r -> 1, so a
            // restoring sequence of length r uses every row exactly once
            if used[p.j - 1] {
                continue;
            }
            let next = a.elementary_op(p).expect("listed operation applies");
            used[p.j - 1] = true;
            seq.push(p);
            if dfs(&next, goal, used, seq) {
                return true;
            }
            seq.pop();
            used[p.j - 1] = false;
        }
        false
    }
    let goal = a.charges();
    let mut used = vec![false; a.r()];
    let mut seq = Vec::new();
    dfs(a, &goal, &mut used, &mut seq).then_some(seq)
}

/// Breadth-first search, up to `depth` operations away from `a`, for an
/// abacus admitting an `r`-cycle.
pub fn find_r_cycle(a: &Abacus, depth: usize) -> Option<RCycle> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back((a.clone(), Vec::new()));
    while let Some((current, path)) = queue.pop_front() {
        if let Some(cycle) = cycle_from(&current) {
            return Some(RCycle { path, cycle });
        }
        if path.len() >= depth {
            continue;
        }
        for p in current.applicable_ops() {
            let next = current.elementary_op(p).expect("listed operation applies");
            if seen.insert(next.clone()) {
                let mut next_path = path.clone();
                next_path.push(p);
                queue.push_back((next, next_path));
            }
        }
    }
    None
}

/// Writes the abacus of a charged multipartition with canonical lifts.
pub fn render_charged(ctx: &Context, x: &ChargedMultipartition, window: Option<(i64, i64)>) -> String {
    let a = Abacus::from_multipartition(ctx.ell(), x.mp(), &x.charge().lifts())
        .expect("charge length matches");
    let (lo, hi) = window.unwrap_or_else(|| a.default_window());
    a.render(lo, hi)
}
