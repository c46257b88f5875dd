//! Whittle–Wiggins–Robinson block-Levinson recursion, the comparison baseline.
//!
//! With `R_d` the blocks of the first block row, order `n` is reached from
//! order `n-1` by
//!
//! ```text
//! Δ_n    = R_n + Σ_{l<n} A_l^{n-1} R_{n-l}
//! A_n^n  = -Δ_n · (J conj(P_{n-1}) J)⁻¹
//! P_n    = P_{n-1} + A_n^n Δ_nᴴ
//! A_l^n  = A_l^{n-1} + A_n^n · J conj(A_{n-l}^{n-1}) J     (l < n)
//! ```
//!
//! starting from `P_0 = R_0`. `J conj(P) J` is the backward prediction error,
//! which equals `P` only when `P` happens to be persymmetric.
//! The final coefficients satisfy `Σ_l A_l R_{j-l} = -R_j` for `j = 1..n2-1`.

use std::io::Write;

use crate::counter::OpCounter;
use crate::dense::CMatrix;
use crate::error::{Error, Result};
use crate::generator::TbtGenerator;
use crate::textio::format_f64;

/// Pivot threshold for the `n1 × n1` solve, relative to `‖P‖_F`.
pub const SINGULAR_TOLERANCE: f64 = 1e3 * f64::EPSILON;

#[derive(Debug, Clone, PartialEq)]
pub struct WwrState {
    pub order: usize,
    /// `A_1^n … A_n^n`.
    pub coeffs: Vec<CMatrix>,
    /// Forward prediction-error matrix `P_n`.
    pub p: CMatrix,
    /// Innovation `Δ_n`.
    pub delta: CMatrix,
}

pub fn wwr_recurse(g: &TbtGenerator) -> Result<Vec<WwrState>> {
    wwr_recurse_counted(g, &mut OpCounter::new())
}

/// States for orders `1 ..= n2-1`; block products and solves are tallied in `counter`.
pub fn wwr_recurse_counted(g: &TbtGenerator, counter: &mut OpCounter) -> Result<Vec<WwrState>> {
    let n2 = g.n2();
    if n2 < 2 {
        return Err(Error::Domain("the block recursion needs n2 >= 2".into()));
    }
    let blocks: Vec<CMatrix> = (0..n2 as isize).map(|d| g.block(d)).collect();
    let mut p = blocks[0].clone();
    let mut coeffs: Vec<CMatrix> = Vec::new();
    let mut states = Vec::with_capacity(n2 - 1);
    for order in 1..n2 {
        let mut delta = blocks[order].clone();
        for (l, a) in coeffs.iter().enumerate() {
            delta = &delta + &a.matmul_counted(&blocks[order - (l + 1)], counter);
        }
        let backward = p.flip_conj();
        let floor = SINGULAR_TOLERANCE * backward.frobenius_norm();
        // X·B = -Δ  <=>  Bᵀ·Xᵀ = -Δᵀ
        let reflection = backward
            .transpose()
            .solve_counted(&delta.transpose().scale((-1.0).into()), floor, counter)
            .ok_or(Error::SingularP { order: order - 1 })?
            .transpose();
        p = (&p + &reflection.matmul_counted(&delta.conj_transpose(), counter)).hermitian_part();
        let mut next: Vec<CMatrix> = coeffs
            .iter()
            .enumerate()
            .map(|(l, a)| {
                let mirror = coeffs[order - 2 - l].flip_conj();
                a + &reflection.matmul_counted(&mirror, counter)
            })
            .collect();
        next.push(reflection);
        coeffs = next;
        states.push(WwrState {
            order,
            coeffs: coeffs.clone(),
            p: p.clone(),
            delta,
        });
    }
    Ok(states)
}

/// Dense block Toeplitz matrix `[R_{j-i}]` for `i, j = 0..m-1` and the right-hand
/// side `[R_1 … R_m]`.
fn normal_equations(g: &TbtGenerator, m: usize) -> (CMatrix, CMatrix) {
    let n1 = g.n1();
    let blocks: Vec<CMatrix> = (-(m as isize)..=m as isize).map(|d| g.block(d)).collect();
    let block = |d: isize| &blocks[(d + m as isize) as usize];
    let big = CMatrix::from_fn(m * n1, m * n1, |i, j| {
        block((j / n1) as isize - (i / n1) as isize).get(i % n1, j % n1)
    });
    let rhs = CMatrix::from_fn(n1, m * n1, |i, j| {
        block((j / n1) as isize + 1).get(i, j % n1)
    });
    (big, rhs)
}

/// `‖X·𝐑 − 𝐫‖_F` for the block normal equations, where `X = −[A_1 … A_{n2-1}]`
/// is the solution carried by the final state.
pub fn wwr_residual(g: &TbtGenerator, last: &WwrState) -> Result<f64> {
    let m = g.n2() - 1;
    if last.coeffs.len() != m {
        return Err(Error::SizeMismatch {
            expected: m,
            actual: last.coeffs.len(),
        });
    }
    let n1 = g.n1();
    let (big, rhs) = normal_equations(g, m);
    let x = CMatrix::from_fn(n1, m * n1, |i, j| -last.coeffs[j / n1].get(i, j % n1));
    Ok((&x.matmul(&big) - &rhs).frobenius_norm())
}

/// `‖𝐫‖_F`, the scale for a relative residual.
pub fn rhs_norm(g: &TbtGenerator) -> f64 {
    normal_equations(g, g.n2() - 1).1.frobenius_norm()
}

/// Structural block-operation count `Σ_{n=1}^{n2-1} (3 + 2(n-1))·n1³`.
pub fn structural_cost(n1: usize, n2: usize) -> f64 {
    let cube = (n1 as f64).powi(3);
    (1..n2).map(|n| (3 + 2 * (n - 1)) as f64 * cube).sum()
}

/// Writes the final coefficient blocks in the dense text format, blank-line
/// separated, followed by a `# residual <value>` report line.
pub fn write_coefficients<W: Write>(mut w: W, last: &WwrState, residual: f64) -> Result<()> {
    for (i, block) in last.coeffs.iter().enumerate() {
        if i > 0 {
            writeln!(w)?;
        }
        block.write_text(&mut w)?;
    }
    writeln!(w, "# residual {}", format_f64(residual))?;
    Ok(())
}
