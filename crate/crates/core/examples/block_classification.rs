//! Sorting all r-multipartitions of n into blocks.
//!
//! cargo run --example block_classification

use akb::blocks::classify_blocks;
use akb::{Context, Multicharge};

fn main() -> akb::Result<()> {
    let ctx = Context::new(2, 2)?;
    let s = Multicharge::new(&ctx, &[0, 1])?;
    for n in 0..=4 {
        let blocks = classify_blocks(&ctx, n, &s);
        println!("n = {n}: {} blocks", blocks.len());
        for b in &blocks {
            let members: Vec<String> = b.members.iter().map(|m| m.to_string()).collect();
            println!(
                "  d={} Omega={} k={} core={} {}  [{}]",
                b.key,
                b.omega,
                b.k,
                b.core.mp,
                if b.is_core_block { "core block" } else { "" },
                members.join(" ")
            );
        }
    }
    let json = serde_json::to_string_pretty(&classify_blocks(&ctx, 2, &s)).expect("serializable");
    println!("\nJSON for n = 2:\n{json}");
    Ok(())
}
