//! Residue vector, hub, weight and block invariants of one charged
//! multipartition.
//!
//! cargo run --example residues_and_hub

use akb::lattice::block_invariants;
use akb::young::{hub, omega_weight, residue_vector};
use akb::{ChargedMultipartition, Context, Multicharge, Multipartition};

fn main() -> akb::Result<()> {
    let ctx = Context::new(3, 2)?;
    let s = Multicharge::new(&ctx, &[0, 1])?;
    let mp = Multipartition::parse("[[3,1],[2]]")?;
    let x = ChargedMultipartition::new(mp, s.clone())?;

    let d = residue_vector(&ctx, &x);
    println!("x        = {x}");
    println!("Res(x)   = {d}");
    println!("hub(x)   = {}", hub(&ctx, &x));
    println!("Omega(x) = {}", omega_weight(&ctx, &x));

    let inv = block_invariants(&ctx, &d, &s).expect("residue vectors are weights");
    println!("alpha    = {}", inv.alpha);
    println!("k        = {}", inv.k);
    println!("Lambda^+ = {}", inv.lambda_plus);
    Ok(())
}
