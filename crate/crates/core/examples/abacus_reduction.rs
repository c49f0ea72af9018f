//! Building an r-abacus, applying elementary operations and reducing to
//! the charged core.
//!
//! cargo run --example abacus_reduction

use akb::abacus::{charged_core, reduce_to_core, Abacus, ReductionPolicy};
use akb::{ChargedMultipartition, Context, Multicharge, Multipartition};

fn main() -> akb::Result<()> {
    let ctx = Context::new(3, 2)?;
    let mp = Multipartition::parse("[[4,2],[3]]")?;
    let a = Abacus::from_multipartition(ctx.ell(), &mp, &[0, 1])?;
    let (lo, hi) = a.default_window();
    println!("abacus of {mp} with lifts (0,1):\n{}\n", a.render(lo, hi));

    for p in a.applicable_ops() {
        let b = a.elementary_op(p).expect("listed operations apply");
        println!("op at ({}, {}) gives {}", p.i, p.j, b.to_multipartition().0);
    }

    let (core, ops) = reduce_to_core(&a, ReductionPolicy::Deterministic);
    let (core_mp, lifts) = core.to_multipartition();
    println!("\ncore {core_mp} with lifts {lifts:?} after {ops} operations");
    println!("{}", core.render(lo, hi));

    let random = reduce_to_core(&a, ReductionPolicy::Random(42));
    println!("a random order agrees: {}", random == (core, ops));

    let x = ChargedMultipartition::new(mp, Multicharge::new(&ctx, &[0, 1])?)?;
    let c = charged_core(&ctx, &x);
    println!("charged core: {} with charge {}", c.mp, c.charge);
    Ok(())
}
