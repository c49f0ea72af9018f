//! Running the property suites on a small grid, as `akb verify` does.
//!
//! cargo run --release --example self_verification

use akb::verify::{verify, Grid};

fn main() {
    let grid = Grid { n_max: 4, level_one_n_max: 8, ..Grid::standard(1) };
    let report = verify(&grid);
    print!("{report}");
    std::process::exit(if report.all_hold() { 0 } else { 1 });
}
