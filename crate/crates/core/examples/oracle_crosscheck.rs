//! Runs the dense reflection-coefficient recursion on the assembled matrix and
//! compares every coefficient tuple with the structured recursion.

use tbt_grc::random::DEFAULT_RIDGE;
use tbt_grc::{generate_pd_tbt, grc_full_counted, tbt_grc_counted, OpCounter};

fn main() -> tbt_grc::Result<()> {
    for (n1, n2) in [(2, 2), (3, 4), (4, 4), (6, 5)] {
        let g = generate_pd_tbt(n1, n2, 7, DEFAULT_RIDGE);
        let (mut fast_ops, mut dense_ops) = (OpCounter::new(), OpCounter::new());
        let fast = tbt_grc_counted(&g, &mut fast_ops)?;
        let oracle = grc_full_counted(&g.assemble_dense(), &mut dense_ops)?;
        let mut worst = 0.0f64;
        for (k, l) in oracle.pairs() {
            worst = worst.max(fast.fetch(k, l)?.max_rel_deviation(oracle.get(k, l)?));
        }
        println!(
            "n1={n1} n2={n2}: max deviation {worst:.2e}, multiplies {} vs {}",
            fast_ops.mul, dense_ops.mul
        );
    }
    Ok(())
}
