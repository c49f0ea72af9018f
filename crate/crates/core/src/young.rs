//! Partitions, multipartitions and their nodes.
//!
//! A node `(a, b, c)` sits in column `a`, row `b` of component `c`
//! (zero-based). Its residue is `a - b + s_c mod ell`, see
//! [`Context::node_residue`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{charge_data, Context, Multicharge, RootVector, WeightVector};

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: &[i64]) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition(parts.to_vec()));
        }
        Ok(Self(parts.iter().filter(|&&p| p > 0).map(|&p| p as usize).collect()))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `b`-th part, zero beyond the length.
    pub fn part(&self, b: usize) -> usize {
        self.0.get(b).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|a| self.0.iter().filter(|&&p| p > a).count()).collect())
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (b, &row) in self.0.iter().enumerate() {
            for a in 0..row {
                hooks.push(row - a + conj.part(a) - b - 1);
            }
        }
        hooks
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(de)?;
        Partition::new(&parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An `r`-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Self(components)
    }

    pub fn empty(r: usize) -> Self {
        Self(vec![Partition::empty(); r])
    }

    /// Parses the JSON syntax `[[3,1],[2],[]]`.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("multipartition {text:?}: {e}")))
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.0[c]
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// JSON rendering, e.g. `[[3,1],[2],[]]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multipartitions serialize")
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join("|"))
    }
}

/// A multipartition together with a multicharge of the same length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChargedMultipartition {
    mp: Multipartition,
    charge: Multicharge,
}

impl ChargedMultipartition {
    pub fn new(mp: Multipartition, charge: Multicharge) -> Result<Self> {
        if mp.r() != charge.r() {
            return Err(Error::ComponentCount { expected: charge.r(), got: mp.r() });
        }
        Ok(Self { mp, charge })
    }

    pub fn mp(&self) -> &Multipartition {
        &self.mp
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn size(&self) -> usize {
        self.mp.size()
    }
}

impl fmt::Display for ChargedMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.mp, self.charge)
    }
}

/// A node: column `a`, row `b`, component `c` (all zero-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// The residue vector `Res_ell(x)`.
pub fn residue_vector(ctx: &Context, x: &ChargedMultipartition) -> RootVector {
    let mut d = vec![0i64; ctx.ell()];
    for (c, lambda) in x.mp.components().iter().enumerate() {
        let charge = x.charge.get(c);
        for (b, &row) in lambda.parts().iter().enumerate() {
            for a in 0..row {
                d[ctx.node_residue(a, b, charge)] += 1;
            }
        }
    }
    RootVector::new(d)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeClasses {
    pub removable: Vec<Node>,
    pub addable: Vec<Node>,
}

/// Removable and addable `i`-nodes, component by component, top row first.
pub fn node_classes(ctx: &Context, x: &ChargedMultipartition, i: usize) -> NodeClasses {
    let mut out = NodeClasses::default();
    for (c, lambda) in x.mp.components().iter().enumerate() {
        let charge = x.charge.get(c);
        for b in 0..=lambda.len() {
            let row = lambda.part(b);
            if row > 0 && lambda.part(b + 1) < row && ctx.node_residue(row - 1, b, charge) == i {
                out.removable.push(Node { a: row - 1, b, c });
            }
            let fits = b == 0 || lambda.part(b - 1) > row;
            if fits && ctx.node_residue(row, b, charge) == i {
                out.addable.push(Node { a: row, b, c });
            }
        }
    }
    out
}

/// Fayers' hub: removable minus addable `i`-nodes for each `i`.
pub fn hub(ctx: &Context, x: &ChargedMultipartition) -> WeightVector {
    let lam = (0..ctx.ell())
        .map(|i| {
            let nc = node_classes(ctx, x, i);
            nc.removable.len() as i64 - nc.addable.len() as i64
        })
        .collect();
    WeightVector::new(lam, 0)
}

/// `Omega_ell(d, s) = sum_j d_{s_j} - 1/2 sum_i (d_i - d_{i+1})^2`.
pub fn omega_of_residue(ctx: &Context, d: &RootVector, s: &Multicharge) -> i64 {
    let linear: i64 = s.residues().iter().map(|&c| d.coeffs()[c]).sum();
    let ell = ctx.ell() as i64;
    let squares: i64 = (0..ell).map(|i| (d.at(i) - d.at(i + 1)).pow(2)).sum();
    debug_assert!(squares % 2 == 0);
    linear - squares / 2
}

/// Fayers' weight of a charged multipartition.
pub fn omega_weight(ctx: &Context, x: &ChargedMultipartition) -> i64 {
    omega_of_residue(ctx, &residue_vector(ctx, x), &x.charge)
}

/// `s_i . x`: removes every removable `i`-node and adds every addable one.
pub fn weyl_apply(ctx: &Context, i: usize, x: &ChargedMultipartition) -> ChargedMultipartition {
    let nc = node_classes(ctx, x, i % ctx.ell());
    let mut rows: Vec<Vec<i64>> = x
        .mp
        .components()
        .iter()
        .map(|p| {
            let mut v: Vec<i64> = p.parts().iter().map(|&q| q as i64).collect();
            v.push(0);
            v
        })
        .collect();
    for n in &nc.removable {
        rows[n.c][n.b] -= 1;
    }
    for n in &nc.addable {
        rows[n.c][n.b] += 1;
    }
    let comps = rows
        .into_iter()
        .map(|v| Partition::new(&v).expect("the Weyl action preserves partitions"))
        .collect();
    ChargedMultipartition { mp: Multipartition(comps), charge: x.charge.clone() }
}

/// No hook of length `ell`.
pub fn is_ell_core(ctx: &Context, lambda: &Partition) -> bool {
    !lambda.hook_lengths().contains(&ctx.ell())
}

pub fn is_multicore(ctx: &Context, mp: &Multipartition) -> bool {
    mp.components().iter().all(|p| is_ell_core(ctx, p))
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for first in (1..=rest.min(max)).rev() {
        current.push(first);
        fill_partitions(rest - first, first, current, out);
        current.pop();
    }
}

/// Compositions of `n` into `r` non-negative parts, largest first component
/// first.
fn compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut tail in compositions(n - first, r - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Iterator over the `r`-multipartitions of `n`; see
/// [`enumerate_multipartitions`].
pub struct Multipartitions {
    by_size: Vec<Vec<Partition>>,
    compositions: Vec<Vec<usize>>,
    comp: usize,
    odometer: Vec<usize>,
}

impl Iterator for Multipartitions {
    type Item = Multipartition;

    fn next(&mut self) -> Option<Multipartition> {
        let sizes = self.compositions.get(self.comp)?;
        let item = Multipartition(
            sizes
                .iter()
                .zip(&self.odometer)
                .map(|(&k, &idx)| self.by_size[k][idx].clone())
                .collect(),
        );
        // advance: last component varies fastest
        let mut pos = sizes.len();
        loop {
            if pos == 0 {
                self.comp += 1;
                self.odometer.iter_mut().for_each(|o| *o = 0);
                break;
            }
            pos -= 1;
            self.odometer[pos] += 1;
            if self.odometer[pos] < self.by_size[sizes[pos]].len() {
                break;
            }
            self.odometer[pos] = 0;
        }
        Some(item)
    }
}

/// Every `r`-multipartition of `n` exactly once: compositions with the
/// largest first component first, then each component in reverse
/// lexicographic order.
pub fn enumerate_multipartitions(n: usize, r: usize) -> Multipartitions {
    assert!(r >= 1, "need at least one component");
    Multipartitions {
        by_size: (0..=n).map(partitions).collect(),
        compositions: compositions(n, r),
        comp: 0,
        odometer: vec![0; r],
    }
}

/// `-Lambda^s`, the hub of the empty multipartition.
pub fn empty_hub(ctx: &Context, s: &Multicharge) -> WeightVector {
    charge_data(ctx, s).0.scale(-1)
}
