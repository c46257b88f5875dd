//! Block-Levinson recursion on the same instance as the structured solver:
//! prediction-error traces per order and the normal-equation residual.

use tbt_grc::random::DEFAULT_RIDGE;
use tbt_grc::wwr::rhs_norm;
use tbt_grc::{generate_pd_tbt, wwr_recurse_counted, wwr_residual, OpCounter};

fn main() -> tbt_grc::Result<()> {
    let g = generate_pd_tbt(3, 6, 99, DEFAULT_RIDGE);
    let mut ops = OpCounter::new();
    let states = wwr_recurse_counted(&g, &mut ops)?;
    println!("order  trace(P)");
    for s in &states {
        println!("{:>5}  {:.6}", s.order, s.p.trace().re);
    }
    let last = states.last().expect("n2 >= 2");
    let rel = wwr_residual(&g, last)? / rhs_norm(&g);
    println!("relative residual {rel:.2e}, {ops}");
    Ok(())
}
