//! The affine Weyl group acting on multipartitions and, compatibly, on
//! residue vectors.
//!
//! cargo run --example weyl_action

use akb::lattice::{dominant_reduce, dot_reflect, WeightVector};
use akb::young::{residue_vector, weyl_apply};
use akb::{ChargedMultipartition, Context, Multicharge, Multipartition};

fn main() -> akb::Result<()> {
    let ctx = Context::new(3, 2)?;
    let s = Multicharge::new(&ctx, &[0, 2])?;
    let x = ChargedMultipartition::new(Multipartition::parse("[[2],[1,1]]")?, s.clone())?;

    for i in 0..ctx.ell() {
        let y = weyl_apply(&ctx, i, &x);
        let d = residue_vector(&ctx, &x);
        println!(
            "s_{i}: {} -> {}   Res {} -> {} (dot action gives {})",
            x.mp(),
            y.mp(),
            d,
            residue_vector(&ctx, &y),
            dot_reflect(&ctx, i, &d, &s)
        );
    }

    let mu = WeightVector::new(vec![3, -2, 1], 0);
    let (dominant, word) = dominant_reduce(&ctx, &mu)?;
    println!("{mu} reduces to {dominant} via s_{word:?}");
    Ok(())
}
