//! Inverts a TBT matrix with the structured recursion and checks `R·X = I`.

use num_complex::Complex64;
use tbt_grc::random::DEFAULT_RIDGE;
use tbt_grc::{
    generate_pd_tbt, tbt_factorization, tbt_grc_counted, CMatrix, MatrixAccess, OpCounter,
};

fn main() -> tbt_grc::Result<()> {
    let g = generate_pd_tbt(4, 5, 2024, DEFAULT_RIDGE);
    let n = g.n();

    let mut ops = OpCounter::new();
    let tables = tbt_grc_counted(&g, &mut ops)?;
    println!(
        "n1={} n2={} n={n}: {} stored coefficient pairs, {ops}",
        g.n1(),
        g.n2(),
        tables.stored_keys().len()
    );

    let factor = tbt_factorization(&g)?;
    let x = factor.inverse_dense();
    let residual = (&g.assemble_dense().as_matrix().matmul(x.as_matrix()) - &CMatrix::identity(n))
        .frobenius_norm();
    println!(
        "||R X - I||_F / sqrt(n) = {:.3e}",
        residual / (n as f64).sqrt()
    );

    // Solving without materializing the inverse.
    let b: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0, i as f64 / n as f64))
        .collect();
    let y = factor.apply_inverse(&b)?;
    let err = (0..n)
        .map(|i| ((0..n).map(|j| g.entry(i, j) * y[j]).sum::<Complex64>() - b[i]).norm())
        .fold(0.0, f64::max);
    println!("max |R y - b| = {err:.3e}");
    Ok(())
}
