//! Prints the operation-count comparison table as CSV.
//!
//! cargo run --example cost_model -- 2 16

use std::io;

use tbt_grc::comparison_table;
use tbt_grc::cost::write_csv;

fn main() -> tbt_grc::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (min, max) = match args[..] {
        [min, max] => (min, max),
        [] => (2, 16),
        _ => panic!("usage: cost_model [min max]"),
    };
    write_csv(io::stdout().lock(), &comparison_table(min, max)?)
}
