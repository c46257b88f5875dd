//! Shows the index exchange and the coefficient relations it induces between
//! mirrored pairs.

use tbt_grc::random::DEFAULT_RIDGE;
use tbt_grc::{generate_pd_tbt, grc_full, index_exchange};

fn main() -> tbt_grc::Result<()> {
    let n1 = 3;
    let g = generate_pd_tbt(n1, 3, 5, DEFAULT_RIDGE);
    let t = grc_full(&g.assemble_dense())?;
    println!(
        "{:>16} {:>16} {:>12} {:>18}",
        "(k,l) -> (k',l')", "|a - conj(a'_m)|", "|v - v'_m|", "|p - mirror(q_m)|"
    );
    for (k, l) in [(0, 1), (0, 4), (1, 5), (2, 7), (3, 8), (4, 6)] {
        let (kk, ll) = index_exchange(k, l, n1);
        let (e, m) = (t.get(k, l)?, t.get(kk, ll)?);
        let dp = e.p.max_abs_diff(&m.q.mirrored(k as isize - kk as isize)?);
        println!(
            "{:>16} {:>16.1e} {:>12.1e} {dp:>18.1e}",
            format!("({k},{l}) -> ({kk},{ll})"),
            (e.a - m.a_prime.conj()).norm(),
            (e.v - m.v_prime).abs()
        );
    }
    Ok(())
}
