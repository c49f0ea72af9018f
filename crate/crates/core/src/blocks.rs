//! Blocks of `H_{n,r}(ell, s)` and the components of the fixed-point locus.
//!
//! Two Specht modules lie in the same block iff their residue vectors agree,
//! so a block is identified with its residue vector `d`. The same `d` indexes
//! an irreducible component of the fixed-point locus, of dimension
//! `2 d.w^s - <d, d>`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::abacus::{charged_core, Abacus};
use crate::lattice::{
    block_invariants, cartan_pair, charge_data, Context, Multicharge, RootVector, WeightVector,
};
use crate::young::{
    enumerate_multipartitions, hub, is_multicore, omega_of_residue, residue_vector,
    ChargedMultipartition, Multipartition,
};

/// A charged core as it appears in block summaries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreLabel {
    pub mp: Multipartition,
    pub charge: Multicharge,
}

/// Serializes a weight by its `Lambda` coordinates only.
pub(crate) mod lam_only {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::lattice::WeightVector;

    #[derive(Serialize, Deserialize)]
    struct Lam {
        lam: Vec<i64>,
    }

    pub fn serialize<S: Serializer>(w: &WeightVector, ser: S) -> Result<S::Ok, S::Error> {
        Lam { lam: w.lam.clone() }.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<WeightVector, D::Error> {
        Ok(WeightVector::new(Lam::deserialize(de)?.lam, 0))
    }
}


#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    #[serde(rename = "d")]
    pub key: RootVector,
    pub n: usize,
    #[serde(with = "lam_only")]
    pub hub: WeightVector,
    pub omega: i64,
    pub dim: i64,
    pub k: i64,
    #[serde(with = "lam_only")]
    pub lambda_plus: WeightVector,
    pub core: CoreLabel,
    #[serde(rename = "core_block")]
    pub is_core_block: bool,
    pub members: Vec<Multipartition>,
}

/// A component of the fixed-point locus and its dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub d: RootVector,
    pub dim: i64,
}

fn charged(x: &Multipartition, s: &Multicharge) -> ChargedMultipartition {
    ChargedMultipartition::new(x.clone(), s.clone()).expect("multicharge length matches r")
}

fn summarize(ctx: &Context, s: &Multicharge, key: RootVector, members: Vec<Multipartition>) -> BlockSummary {
    let first = charged(&members[0], s);
    let inv = block_invariants(ctx, &key, s).expect("residue vectors are weights");
    let omega = omega_of_residue(ctx, &key, s);
    let core = charged_core(ctx, &first);
    BlockSummary {
        n: first.size(),
        hub: hub(ctx, &first),
        omega,
        dim: component_dimension(ctx, &key, s),
        k: inv.k,
        lambda_plus: inv.lambda_plus,
        core: CoreLabel { mp: core.mp, charge: core.charge },
        is_core_block: inv.k == 0,
        key,
        members,
    }
}

/// All blocks of `H_{n,r}(ell, s)`, in order of first appearance in
/// [`enumerate_multipartitions`]; members keep that order too.
pub fn classify_blocks(ctx: &Context, n: usize, s: &Multicharge) -> Vec<BlockSummary> {
    let mut index: HashMap<RootVector, usize> = HashMap::new();
    let mut groups: Vec<(RootVector, Vec<Multipartition>)> = Vec::new();
    for mp in enumerate_multipartitions(n, ctx.r()) {
        let d = residue_vector(ctx, &charged(&mp, s));
        match index.get(&d) {
            Some(&g) => groups[g].1.push(mp),
            None => {
                index.insert(d.clone(), groups.len());
                groups.push((d, vec![mp]));
            }
        }
    }
    groups
        .into_iter()
        .map(|(key, members)| summarize(ctx, s, key, members))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexMethod {
    /// Residue vectors of all `r`-multipartitions of `n`.
    Fock,
    /// Roots `d >= 0` of size `n` with `Lambda^s - d` a weight of
    /// `L(Lambda^s)`.
    Lattice,
}

/// Compositions of `n` into `parts` non-negative integers.
fn weak_compositions(n: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            weak_compositions(n - first, parts - 1).into_iter().map(move |mut tail| {
                tail.insert(0, first);
                tail
            })
        })
        .collect()
}

/// The index set of the components of the fixed-point locus.
pub fn component_index_set(ctx: &Context, n: usize, s: &Multicharge, method: IndexMethod) -> BTreeSet<RootVector> {
    match method {
        IndexMethod::Fock => enumerate_multipartitions(n, ctx.r())
            .map(|mp| residue_vector(ctx, &charged(&mp, s)))
            .collect(),
        IndexMethod::Lattice => weak_compositions(n as i64, ctx.ell())
            .into_iter()
            .map(RootVector::new)
            .filter(|d| block_invariants(ctx, d, s).is_some())
            .collect(),
    }
}

/// `2 d.w^s - <d, d>`. Meaningful for members of the index set; see
/// [`is_component`].
pub fn component_dimension(ctx: &Context, d: &RootVector, s: &Multicharge) -> i64 {
    let (_, w) = charge_data(ctx, s);
    2 * d.dot(&w) - cartan_pair(ctx, d, d).expect("root vector length must equal ell")
}

/// Whether `d` indexes a component, i.e. `d >= 0` and `Lambda^s - d` is a
/// weight.
pub fn is_component(ctx: &Context, d: &RootVector, s: &Multicharge) -> bool {
    d.is_nonnegative() && block_invariants(ctx, d, s).is_some()
}

/// Components of the fixed-point locus in `Gieseker(n, r)`, sorted by `d`.
pub fn components(ctx: &Context, n: usize, s: &Multicharge) -> Vec<ComponentRecord> {
    component_index_set(ctx, n, s, IndexMethod::Lattice)
        .into_iter()
        .map(|d| {
            let dim = component_dimension(ctx, &d, s);
            ComponentRecord { d, dim }
        })
        .collect()
}

/// `k_{Res(x)}`: the number of `r`-cycles removed on the way to the core.
pub fn r_cycle_count(ctx: &Context, x: &ChargedMultipartition) -> i64 {
    block_invariants(ctx, &residue_vector(ctx, x), x.charge())
        .expect("residue vectors are weights")
        .k
}

/// Whether the block of `x` is a core block (`k = 0`).
pub fn is_core_block(ctx: &Context, x: &ChargedMultipartition) -> bool {
    r_cycle_count(ctx, x) == 0
}

/// Largest bead position of row `j` (one-based) congruent to `i` mod `ell`.
pub fn fayers_b(ctx: &Context, mp: &Multipartition, lifts: &[i64], i: usize, j: usize) -> i64 {
    let a = Abacus::from_multipartition(ctx.ell(), mp, lifts).expect("one lift per component");
    fayers_b_of(&a, i, j)
}

fn fayers_b_of(a: &Abacus, i: usize, j: usize) -> i64 {
    let ell = a.ell() as i64;
    let row = &a.rows()[j - 1];
    let mut k = row.top_bead();
    while k.rem_euclid(ell) != i as i64 || !row.has_bead(k) {
        k -= 1;
    }
    k
}

/// Lift search radius used when none is given.
pub fn default_lift_radius(ctx: &Context, n: usize) -> i64 {
    1 + n.div_ceil(ctx.ell()) as i64
}

/// Fayers' core-block test: `x` is a multicore and some lift of the charge
/// puts every `b_{ij}` in `{a_i, a_i + ell}`.
pub fn fayers_core_criterion(ctx: &Context, x: &ChargedMultipartition, lift_radius: i64) -> bool {
    if !is_multicore(ctx, x.mp()) {
        return false;
    }
    let ell = ctx.ell() as i64;
    let base = x.charge().lifts();
    let r = base.len();
    let shifts: Vec<i64> = (-lift_radius..=lift_radius).collect();
    let mut odometer = vec![0usize; r];
    loop {
        let lifts: Vec<i64> = base.iter().zip(&odometer).map(|(&b, &o)| b + ell * shifts[o]).collect();
        if lift_is_balanced(ctx, x.mp(), &lifts) {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == r {
                return false;
            }
            odometer[pos] += 1;
            if odometer[pos] < shifts.len() {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

/// For each residue the `b_{ij}` spread over at most one `ell` step.
fn lift_is_balanced(ctx: &Context, mp: &Multipartition, lifts: &[i64]) -> bool {
    let ell = ctx.ell() as i64;
    let a = Abacus::from_multipartition(ctx.ell(), mp, lifts).expect("one lift per component");
    (0..ctx.ell()).all(|i| {
        let bs: Vec<i64> = (1..=a.r()).map(|j| fayers_b_of(&a, i, j)).collect();
        let lo = *bs.iter().min().expect("r >= 1");
        let hi = *bs.iter().max().expect("r >= 1");
        hi - lo <= ell
    })
}
