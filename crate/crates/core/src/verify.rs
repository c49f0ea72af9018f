//! Property suites run by `akb verify`.
//!
//! Every check walks a grid of `(ell, r, s, n)` and reports the number of
//! instances examined together with the first counterexample, if any.
//! Cells are processed in parallel; results are merged in grid order so the
//! report is deterministic.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::abacus::{
    charged_core, find_r_cycle, reduce_to_core, sort_for_core, uglov_abacus, uglov_tau, Abacus,
    AbacusRow, ReductionPolicy,
};
use crate::blocks::{
    classify_blocks, component_dimension, component_index_set, default_lift_radius,
    fayers_core_criterion, BlockSummary, IndexMethod,
};
use crate::lattice::{
    block_invariants, c_gamma, cartan_pair, charge_data, dot_reflect, root_as_weight, Context,
    Multicharge, ResidueConvention, WeightVector,
};
use crate::young::{
    enumerate_multipartitions, hub, is_ell_core, omega_weight, partitions, residue_vector,
    weyl_apply, ChargedMultipartition, Multipartition, Partition,
};

/// Parameter ranges for the grid-based properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub ells: Vec<usize>,
    pub rs: Vec<usize>,
    pub n_max: usize,
    /// Largest `n` for the level-one block count.
    pub level_one_n_max: usize,
    pub seed: u64,
    pub convention: ResidueConvention,
}

/// One `(ell, r, s)` point of the grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub ctx: Context,
    pub charge: Multicharge,
}

impl Grid {
    /// `ell in {2,3,4}`, `r in {1,2,3}`, `n <= 6`.
    pub fn standard(seed: u64) -> Self {
        Self {
            ells: vec![2, 3, 4],
            rs: vec![1, 2, 3],
            n_max: 6,
            level_one_n_max: 10,
            seed,
            convention: ResidueConvention::Content,
        }
    }

    /// For each `(ell, r)`: the zero multicharge, the constant multicharge
    /// `(1, ..., 1)` and two seeded random ones.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for &ell in &self.ells {
            for &r in &self.rs {
                let ctx = Context::new(ell, r)
                    .expect("grid parameters are valid")
                    .with_convention(self.convention);
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ ((ell as u64) << 32 | r as u64));
                let mut charges = vec![vec![0i64; r], vec![1i64; r]];
                for _ in 0..2 {
                    charges.push((0..r).map(|_| rng.gen_range(0..ell as i64)).collect());
                }
                for c in charges {
                    let charge = Multicharge::new(&ctx, &c).expect("length r");
                    cells.push(Cell { ctx, charge });
                }
            }
        }
        cells
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ell={} r={} s={}", self.ctx.ell(), self.ctx.r(), self.charge)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub instances: usize,
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub properties: Vec<PropertyReport>,
}

impl VerifyReport {
    pub fn all_hold(&self) -> bool {
        self.properties.iter().all(PropertyReport::holds)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            match &p.counterexample {
                None => writeln!(f, "ok    {:<28} {} instances", p.name, p.instances)?,
                Some(c) => writeln!(f, "FAIL  {:<28} {} instances; counterexample: {c}", p.name, p.instances)?,
            }
        }
        if self.all_hold() {
            writeln!(f, "all properties hold")
        } else {
            let failed = self.properties.iter().filter(|p| !p.holds()).count();
            writeln!(f, "{failed} properties failed")
        }
    }
}

/// Outcome of one property on one cell.
#[derive(Debug, Default)]
struct Tally {
    instances: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }
}

fn merge(name: &'static str, tallies: Vec<Tally>) -> PropertyReport {
    let instances = tallies.iter().map(|t| t.instances).sum();
    let counterexample = tallies.into_iter().find_map(|t| t.counterexample);
    PropertyReport { name, instances, counterexample }
}

fn charged(mp: Multipartition, s: &Multicharge) -> ChargedMultipartition {
    ChargedMultipartition::new(mp, s.clone()).expect("length r")
}

fn members(cell: &Cell, n: usize) -> impl Iterator<Item = ChargedMultipartition> + '_ {
    enumerate_multipartitions(n, cell.ctx.r()).map(move |mp| charged(mp, &cell.charge))
}

/// `2 Omega = dim = 2kr + 2 alpha.w - <alpha, alpha>` and `Omega` equals the
/// number of elementary operations to the core.
fn check_dimensions(cell: &Cell, n_max: usize) -> Tally {
    let ctx = &cell.ctx;
    let (_, w) = charge_data(ctx, &cell.charge);
    let mut t = Tally::default();
    for n in 0..=n_max {
        for x in members(cell, n) {
            let d = residue_vector(ctx, &x);
            let omega = omega_weight(ctx, &x);
            let dim = component_dimension(ctx, &d, &cell.charge);
            let ok = match block_invariants(ctx, &d, &cell.charge) {
                None => false,
                Some(inv) => {
                    let aa = cartan_pair(ctx, &inv.alpha, &inv.alpha).expect("same ell");
                    let excess = 2 * inv.alpha.dot(&w) - aa;
                    let via_k = 2 * inv.k * ctx.r() as i64 + excess;
                    let ops = charged_core(ctx, &x).ops as i64;
                    2 * omega == dim && dim == via_k && ops == omega && excess >= 0
                }
            };
            t.check(ok, || format!("{x} ({cell}): Omega={omega}, dim={dim}"));
        }
    }
    t
}

/// `Lambda^{s'}` of the charged core equals `Lambda^+` modulo `delta`.
fn check_core_charge(cell: &Cell, n_max: usize) -> Tally {
    let ctx = &cell.ctx;
    let mut t = Tally::default();
    for n in 0..=n_max {
        for x in members(cell, n) {
            let core = charged_core(ctx, &x);
            let lambda_core = charge_data(ctx, &core.charge).0;
            let plus = block_invariants(ctx, &residue_vector(ctx, &x), &cell.charge)
                .map(|inv| inv.lambda_plus);
            let ok = plus.as_ref().is_some_and(|p| p.lam == lambda_core.lam);
            t.check(ok, || {
                format!(
                    "{x} ({cell}): core charge {} gives {lambda_core}, Lambda^+ is {}",
                    core.charge,
                    plus.map_or("undefined".into(), |p| p.to_string())
                )
            });
        }
    }
    t
}

/// `hub(x) = c_Gamma(Res(x)) - Lambda^s` in `Lambda` coordinates.
fn check_hub(cell: &Cell, n_max: usize) -> Tally {
    let ctx = &cell.ctx;
    let lambda_s = charge_data(ctx, &cell.charge).0;
    let mut t = Tally::default();
    for n in 0..=n_max {
        for x in members(cell, n) {
            let h = hub(ctx, &x);
            let expected = &c_gamma(ctx, &residue_vector(ctx, &x)) - &lambda_s;
            t.check(h.lam == expected.lam, || format!("{x} ({cell}): hub {h}, expected {expected}"));
        }
    }
    t
}

/// Grouping by residue, by hub and by charged core give the same partition.
fn check_block_partitions(cell: &Cell, n_max: usize) -> Tally {
    let ctx = &cell.ctx;
    let mut t = Tally::default();
    for n in 0..=n_max {
        let keyed: Vec<_> = members(cell, n)
            .map(|x| {
                let core = charged_core(ctx, &x);
                (residue_vector(ctx, &x), hub(ctx, &x).lam, (core.mp, core.charge), x)
            })
            .collect();
        for (i, a) in keyed.iter().enumerate() {
            for b in &keyed[i + 1..] {
                let by_res = a.0 == b.0;
                let by_hub = a.1 == b.1;
                let by_core = a.2 == b.2;
                t.check(by_res == by_hub && by_res == by_core, || {
                    format!(
                        "{} vs {} ({cell}): same residue {by_res}, same hub {by_hub}, same core {by_core}",
                        a.3, b.3
                    )
                });
            }
        }
    }
    t
}

/// The abacus on which `r`-cycles are searched: sorted components,
/// canonical lifts.
fn sorted_abacus(ctx: &Context, x: &ChargedMultipartition) -> Abacus {
    let sorted = sort_for_core(x);
    Abacus::from_multipartition(ctx.ell(), &sorted.mp, &sorted.lifts).expect("length r")
}

/// `k = 0` iff Fayers' criterion holds iff no `r`-cycle is reachable, for
/// every member; and core blocks are exactly the blocks minimal among those
/// with the same hub at sizes `m <= n`.
fn check_core_blocks(cell: &Cell, n_max: usize) -> Tally {
    let ctx = &cell.ctx;
    let mut t = Tally::default();
    let by_size: Vec<Vec<BlockSummary>> = (0..=n_max).map(|n| classify_blocks(ctx, n, &cell.charge)).collect();
    for (n, blocks) in by_size.iter().enumerate() {
        let radius = default_lift_radius(ctx, n);
        for b in blocks {
            let core_block = b.k == 0;
            for mp in &b.members {
                let x = charged(mp.clone(), &cell.charge);
                let fayers = fayers_core_criterion(ctx, &x, radius);
                let depth = b.omega.max(0) as usize;
                let no_cycle = find_r_cycle(&sorted_abacus(ctx, &x), depth).is_none();
                t.check(core_block == fayers && core_block == no_cycle, || {
                    format!("{x} ({cell}): k={}, fayers={fayers}, no r-cycle={no_cycle}", b.k)
                });
            }
            let rival = by_size[..=n]
                .iter()
                .flatten()
                .any(|o| o.hub.lam == b.hub.lam && o.omega <= b.omega && (o.n, &o.key) != (b.n, &b.key));
            t.check(core_block != rival, || {
                format!("block d={} n={n} ({cell}): k={}, smaller block with same hub: {rival}", b.key, b.k)
            });
        }
    }
    t
}

/// Fock-side and lattice-side index sets coincide; dimensions are even and
/// in `[0, 2nr]`.
fn check_index_sets(cell: &Cell, n_max: usize) -> Tally {
    let ctx = &cell.ctx;
    let mut t = Tally::default();
    for n in 0..=n_max {
        let fock = component_index_set(ctx, n, &cell.charge, IndexMethod::Fock);
        let lattice = component_index_set(ctx, n, &cell.charge, IndexMethod::Lattice);
        t.check(fock == lattice, || {
            let extra: Vec<String> = lattice.symmetric_difference(&fock).map(|d| d.to_string()).collect();
            format!("n={n} ({cell}): index sets differ at {}", extra.join(" "))
        });
        let bound = 2 * (n * ctx.r()) as i64;
        for d in &lattice {
            let dim = component_dimension(ctx, d, &cell.charge);
            t.check(dim % 2 == 0 && (0..=bound).contains(&dim), || {
                format!("d={d} n={n} ({cell}): dim {dim} outside even [0, {bound}]")
            });
        }
    }
    t
}

/// Residue and weight identities for Uglov's map, and hook removal under
/// elementary operations.
fn check_uglov(cell: &Cell, n_max: usize) -> Tally {
    let ctx = &cell.ctx;
    let ell = ctx.ell() as i64;
    let ctx1 = ctx.with_level(1).expect("level 1 is valid");
    let mut t = Tally::default();
    let lambda_s = charge_data(ctx, &cell.charge).0;
    for n in 0..=n_max {
        for x in members(cell, n) {
            let sorted = sort_for_core(&x);
            let total: i64 = sorted.lifts.iter().sum();
            let (tau, charge) = uglov_tau(ctx, &sorted.mp, &sorted.lifts).expect("sorted lifts");
            let (tau0, charge0) =
                uglov_tau(ctx, &Multipartition::empty(ctx.r()), &sorted.lifts).expect("sorted lifts");
            t.check(charge == total && charge0 == total, || {
                format!("{x} ({cell}): tau charge {charge}, expected {total}")
            });
            let big_s = Multicharge::new(&ctx1, &[total]).expect("level 1");
            let res_tau = residue_vector(ctx, &charged(Multipartition::new(vec![tau.clone()]), &big_s));
            let res_tau0 = residue_vector(ctx, &charged(Multipartition::new(vec![tau0]), &big_s));
            let res = residue_vector(ctx, &x);
            t.check(res.delta_offset(&(&res_tau - &res_tau0)).is_some(), || {
                format!("{x} ({cell}): Res {res} vs tau difference {}", &res_tau - &res_tau0)
            });
            let lhs = &lambda_s + &root_as_weight(ctx, &res_tau0);
            let mut rhs = WeightVector::fundamental(ctx.ell(), ctx.reduce(total));
            rhs.lam[0] += ctx.r() as i64 - 1;
            t.check(lhs.lam == rhs.lam, || format!("{x} ({cell}): {lhs} vs {rhs}"));

            let a = Abacus::from_multipartition(ctx.ell(), &sorted.mp, &sorted.lifts).expect("length r");
            for p in a.applicable_ops() {
                let b = a.elementary_op(p).expect("listed operation applies");
                let (tau_b, charge_b) = uglov_abacus(&b);
                let ok = charge_b == total
                    && tau.size() as i64 - tau_b.size() as i64 == ell
                    && remove_rim_hooks(&tau, charge, ell).contains(&tau_b);
                t.check(ok, || format!("{x} ({cell}): op at ({}, {}) sends tau {tau} to {tau_b}", p.i, p.j));
            }
        }
    }
    t
}

/// Partitions obtained from `lambda` by removing one rim hook of length
/// `ell`, via beta numbers.
fn remove_rim_hooks(lambda: &Partition, charge: i64, ell: i64) -> Vec<Partition> {
    let row = AbacusRow::new(lambda.clone(), charge);
    let betas = row.betas(lambda.len());
    betas
        .iter()
        .filter(|&&b| !row.has_bead(b - ell))
        .map(|&b| {
            let floor = row.bead_floor().min(b - ell - 1);
            let beads: Vec<i64> = (floor + 1..=row.top_bead())
                .filter(|&k| row.has_bead(k) && k != b)
                .chain(std::iter::once(b - ell))
                .collect();
            AbacusRow::from_beads(floor, beads).shape
        })
        .collect()
}

fn random_instance(rng: &mut ChaCha8Rng, convention: ResidueConvention, n_max: usize) -> (Context, ChargedMultipartition) {
    let ell = rng.gen_range(2..=4);
    let r = rng.gen_range(1..=3);
    let ctx = Context::new(ell, r).expect("valid").with_convention(convention);
    let charges: Vec<i64> = (0..r).map(|_| rng.gen_range(0..ell as i64)).collect();
    let s = Multicharge::new(&ctx, &charges).expect("length r");
    let n = rng.gen_range(0..=n_max);
    let count = enumerate_multipartitions(n, r).count();
    let mp = enumerate_multipartitions(n, r)
        .nth(rng.gen_range(0..count))
        .expect("index in range");
    (ctx, charged(mp, &s))
}

/// `Res(s_i . x) = s_i . Res(x)` and both actions are involutions.
pub fn check_equivariance(samples: usize, seed: u64, convention: ResidueConvention) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for _ in 0..samples {
        let (ctx, x) = random_instance(&mut rng, convention, 8);
        let i = rng.gen_range(0..ctx.ell());
        let y = weyl_apply(&ctx, i, &x);
        let d = residue_vector(&ctx, &x);
        let moved = dot_reflect(&ctx, i, &d, x.charge());
        let ok = residue_vector(&ctx, &y) == moved
            && weyl_apply(&ctx, i, &y) == x
            && dot_reflect(&ctx, i, &moved, x.charge()) == d;
        t.check(ok, || format!("s_{i} on {x} (ell={})", ctx.ell()));
    }
    merge("weyl equivariance", vec![t])
}

/// Random reduction orders reach the same core with the same count.
pub fn check_order_independence(instances: usize, policies: usize, seed: u64) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for _ in 0..instances {
        let (ctx, x) = random_instance(&mut rng, ResidueConvention::Content, 8);
        let a = sorted_abacus(&ctx, &x);
        let reference = reduce_to_core(&a, ReductionPolicy::Deterministic);
        let seeds: Vec<u64> = (0..policies).map(|_| rng.gen()).collect();
        let ok = seeds
            .iter()
            .all(|&s| reduce_to_core(&a, ReductionPolicy::Random(s)) == reference);
        t.check(ok, || format!("{x} (ell={})", ctx.ell()));
    }
    merge("reduction order independence", vec![t])
}

/// For `r = 1`, blocks of size `n` correspond to `ell`-cores `c` with
/// `|c| <= n` and `|c| = n mod ell`.
pub fn check_level_one(ells: &[usize], n_max: usize, convention: ResidueConvention) -> PropertyReport {
    let mut t = Tally::default();
    for &ell in ells {
        let ctx = Context::new(ell, 1).expect("valid").with_convention(convention);
        let s = Multicharge::zero(&ctx);
        let cores_by_size: Vec<usize> = (0..=n_max)
            .map(|m| partitions(m).iter().filter(|p| is_ell_core(&ctx, p)).count())
            .collect();
        for n in 0..=n_max {
            let blocks = classify_blocks(&ctx, n, &s).len();
            let cores: usize = (0..=n).filter(|m| (n - m) % ell == 0).map(|m| cores_by_size[m]).sum();
            t.check(blocks == cores, || format!("ell={ell} n={n}: {blocks} blocks, {cores} cores"));
        }
    }
    merge("level one block count", vec![t])
}

fn run_cells(name: &'static str, cells: &[Cell], n_max: usize, check: fn(&Cell, usize) -> Tally) -> PropertyReport {
    let tallies: Vec<Tally> = cells.par_iter().map(|c| check(c, n_max)).collect();
    merge(name, tallies)
}

/// Runs every suite over `grid`.
pub fn verify(grid: &Grid) -> VerifyReport {
    let cells = grid.cells();
    let n = grid.n_max;
    let properties = vec![
        run_cells("dimension identities", &cells, n, check_dimensions),
        run_cells("core multicharge", &cells, n, check_core_charge),
        run_cells("hub identity", &cells, n, check_hub),
        run_cells("block partitions", &cells, n, check_block_partitions),
        run_cells("core blocks", &cells, n, check_core_blocks),
        run_cells("component index sets", &cells, n, check_index_sets),
        check_equivariance(500, grid.seed, grid.convention),
        check_order_independence(50, 100, grid.seed),
        run_cells("uglov identities", &cells, n, check_uglov),
        check_level_one(&grid.ells, grid.level_one_n_max, grid.convention),
    ];
    VerifyReport { properties }
}

/// Runs [`verify`] on a pool capped by `AKB_THREADS` when it is set.
pub fn verify_with_env_threads(grid: &Grid) -> VerifyReport {
    let threads = std::env::var("AKB_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    match threads {
        Some(k) if k > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(|| verify(grid)))
            .unwrap_or_else(|_| verify(grid)),
        _ => verify(grid),
    }
}
