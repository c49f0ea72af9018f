//! Three ways to recognise core blocks: k = 0, Fayers' abacus criterion
//! and the absence of r-cycles.
//!
//! cargo run --example core_blocks

use akb::abacus::{find_r_cycle, sort_for_core, Abacus};
use akb::blocks::{classify_blocks, default_lift_radius, fayers_core_criterion};
use akb::{ChargedMultipartition, Context, Multicharge};

fn main() -> akb::Result<()> {
    let ctx = Context::new(3, 2)?;
    let s = Multicharge::new(&ctx, &[0, 1])?;
    let n = 4;
    for b in classify_blocks(&ctx, n, &s) {
        let x = ChargedMultipartition::new(b.members[0].clone(), s.clone())?;
        let sorted = sort_for_core(&x);
        let a = Abacus::from_multipartition(ctx.ell(), &sorted.mp, &sorted.lifts)?;
        let cycle = find_r_cycle(&a, b.omega as usize);
        let fayers = fayers_core_criterion(&ctx, &x, default_lift_radius(&ctx, n));
        print!("d={} k={} fayers={fayers} ", b.key, b.k);
        match cycle {
            None => println!("no r-cycle"),
            Some(w) => {
                let path: Vec<String> = w.path.iter().map(|p| format!("({},{})", p.i, p.j)).collect();
                let cyc: Vec<String> = w.cycle.iter().map(|p| format!("({},{})", p.i, p.j)).collect();
                println!("r-cycle {} after [{}] from {}", cyc.join(" "), path.join(" "), x.mp());
            }
        }
    }
    Ok(())
}
