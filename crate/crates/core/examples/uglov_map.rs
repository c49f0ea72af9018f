//! Uglov's map from r-abaci to charged partitions; elementary operations
//! become removals of ell-hooks.
//!
//! cargo run --example uglov_map

use akb::abacus::{uglov_abacus, uglov_tau, Abacus};
use akb::{Context, Multipartition};

fn main() -> akb::Result<()> {
    let ctx = Context::new(4, 3)?;
    let mp = Multipartition::parse("[[],[],[2]]")?;
    let lifts = [0, 1, 2];
    let (tau, charge) = uglov_tau(&ctx, &mp, &lifts)?;
    println!("tau({mp}, {lifts:?}) = {tau} with charge {charge}");

    let mp = Multipartition::parse("[[2,1],[1],[3]]")?;
    let a = Abacus::from_multipartition(ctx.ell(), &mp, &lifts)?;
    let (tau, _) = uglov_abacus(&a);
    println!("tau({mp}, {lifts:?}) = {tau}");
    for p in a.applicable_ops() {
        let (after, _) = uglov_abacus(&a.elementary_op(p).expect("applies"));
        println!("  op at ({}, {}): {tau} -> {after} (size {} -> {})", p.i, p.j, tau.size(), after.size());
    }
    Ok(())
}
