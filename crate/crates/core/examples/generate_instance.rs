//! Generates a random positive-definite TBT generator and prints it in the
//! text format read by the other tools.
//!
//! cargo run --example generate_instance -- 3 4 42

use std::io;

use tbt_grc::random::DEFAULT_RIDGE;
use tbt_grc::{generate_pd_tbt, grc_full};

fn main() -> tbt_grc::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (n1, n2, seed) = match args[..] {
        [n1, n2, seed] => (n1 as usize, n2 as usize, seed),
        [] => (3, 4, 42),
        _ => panic!("usage: generate_instance [n1 n2 seed]"),
    };
    let g = generate_pd_tbt(n1, n2, seed, DEFAULT_RIDGE);
    g.write_text(io::stdout().lock())?;
    let tables = grc_full(&g.assemble_dense())?;
    let v = tables.get(0, g.n() - 1)?.v;
    eprintln!(
        "n = {}, c00 = {:.6}, final prediction error v(0,n-1) = {v:.6}",
        g.n(),
        g.c00()
    );
    Ok(())
}
