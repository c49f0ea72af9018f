//! Index set and dimensions of the components of the cyclic fixed-point
//! locus of the Gieseker space, computed two ways.
//!
//! cargo run --example fixed_point_components

use akb::blocks::{component_index_set, components, IndexMethod};
use akb::{Context, Multicharge};

fn main() -> akb::Result<()> {
    let ctx = Context::new(3, 2)?;
    let s = Multicharge::new(&ctx, &[0, 0])?;
    for n in 0..=5 {
        let fock = component_index_set(&ctx, n, &s, IndexMethod::Fock);
        let lattice = component_index_set(&ctx, n, &s, IndexMethod::Lattice);
        assert_eq!(fock, lattice);
        let dims: Vec<String> = components(&ctx, n, &s)
            .iter()
            .map(|c| format!("{}:{}", c.d, c.dim))
            .collect();
        println!("n = {n} (ambient dimension {}): {}", 2 * n * ctx.r(), dims.join("  "));
    }
    Ok(())
}
