//! Instrumented multiply counts of the structured recursion against the closed
//! form and the baseline, with the fitted log-log slope.

use tbt_grc::random::DEFAULT_RIDGE;
use tbt_grc::{generate_pd_tbt, opc_closed_form, opcwwr, tbt_grc_counted, OpCounter};

fn main() -> tbt_grc::Result<()> {
    let sizes = [4usize, 6, 8, 12, 16];
    let mut logs = Vec::new();
    println!("   n   measured mul   closed form   baseline   measured/closed");
    for n in sizes {
        let mut ops = OpCounter::new();
        tbt_grc_counted(&generate_pd_tbt(n, n, n as u64, DEFAULT_RIDGE), &mut ops)?;
        let closed = opc_closed_form(n, n);
        println!(
            "{n:>4} {:>14} {closed:>13.0} {:>10.0} {:>17.3}",
            ops.mul,
            opcwwr(n, n)?,
            ops.mul as f64 / closed
        );
        logs.push(((n as f64).ln(), (ops.mul as f64).ln()));
    }
    let m = logs.len() as f64;
    let (mx, my) = logs
        .iter()
        .fold((0.0, 0.0), |(a, b), (x, y)| (a + x / m, b + y / m));
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    println!("log-log slope {:.3}", sxy / sxx);
    Ok(())
}
