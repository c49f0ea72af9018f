//! Strategies and small oracles shared by the integration tests.
#![allow(dead_code)]

use akb::{ChargedMultipartition, Context, Multicharge, Multipartition, Partition, RootVector};
use proptest::prelude::*;

pub fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part as i64, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v).expect("sorted nonnegative parts")
    })
}

pub fn multipartition(r: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(partition(4, 5), r).prop_map(Multipartition::new)
}

/// `(ctx, x)` with `ell in 2..=5`, `r in 1..=3`.
pub fn charged() -> impl Strategy<Value = (Context, ChargedMultipartition)> {
    (2usize..=5, 1usize..=3)
        .prop_flat_map(|(ell, r)| {
            (
                Just(ell),
                prop::collection::vec(-10i64..10, r),
                multipartition(r),
            )
        })
        .prop_map(|(ell, s, mp)| {
            let ctx = Context::new(ell, s.len()).unwrap();
            let s = Multicharge::new(&ctx, &s).unwrap();
            (ctx, ChargedMultipartition::new(mp, s).unwrap())
        })
}

pub fn root_vector(ell: usize) -> impl Strategy<Value = RootVector> {
    prop::collection::vec(-6i64..=6, ell).prop_map(RootVector::new)
}

/// Hook lengths computed directly from the diagram.
pub fn hook_lengths(p: &Partition) -> Vec<usize> {
    let parts = p.parts();
    let mut out = Vec::new();
    for (a, &row) in parts.iter().enumerate() {
        for b in 0..row {
            let arm = row - b - 1;
            let leg = parts[a + 1..].iter().filter(|&&q| q > b).count();
            out.push(arm + leg + 1);
        }
    }
    out
}

/// Whether no hook length is divisible by `ell`.
pub fn is_core_by_hooks(p: &Partition, ell: usize) -> bool {
    hook_lengths(p).iter().all(|h| h % ell != 0)
}

/// All partitions of `n`, built recursively with a bounded largest part.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions reachable from `p` by removing one rim hook of length `ell`,
/// by walking the boundary cells of the diagram.
pub fn rim_hook_removals(p: &Partition, ell: usize) -> Vec<Partition> {
    let parts = p.parts().to_vec();
    let mut out = Vec::new();
    for (a, &row) in parts.iter().enumerate() {
        for b in 0..row {
            let arm = row - b - 1;
            let leg = parts[a + 1..].iter().filter(|&&q| q > b).count();
            if arm + leg + 1 != ell {
                continue;
            }
            // rows above the foot drop to one less than the row below;
            // the foot row drops to b
            let mut q = parts.clone();
            for t in a..a + leg {
                q[t] = parts[t + 1] - 1;
            }
            q[a + leg] = b;
            let q: Vec<i64> = q.into_iter().filter(|&x| x > 0).map(|x| x as i64).collect();
            out.push(Partition::new(&q).expect("removing a rim hook leaves a partition"));
        }
    }
    out
}
