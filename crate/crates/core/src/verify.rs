//! End-to-end cross-check of the fast path against the dense oracle and the baseline.

use std::fmt;

use crate::dense::CMatrix;
use crate::error::Result;
use crate::fast::{factor_from_tables, tbt_grc};
use crate::generator::TbtGenerator;
use crate::oracle::grc_full;
use crate::textio::format_f64;
use crate::wwr::{rhs_norm, wwr_recurse, wwr_residual};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    /// Largest relative deviation between fetched fast tuples and oracle tuples.
    pub max_table_deviation: f64,
    /// `‖R·X − I‖_F / √n` for the inverse materialized from the fast factor.
    pub inverse_residual: f64,
    /// Relative residual of the block normal equations, when `n2 ≥ 2`.
    pub wwr_residual: Option<f64>,
    pub tolerance: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        let tol = self.tolerance;
        self.max_table_deviation <= tol
            && self.inverse_residual <= tol
            && self.wwr_residual.is_none_or(|r| r <= tol)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "table_deviation {}",
            format_f64(self.max_table_deviation)
        )?;
        writeln!(f, "inverse_residual {}", format_f64(self.inverse_residual))?;
        match self.wwr_residual {
            Some(r) => writeln!(f, "wwr_residual {}", format_f64(r))?,
            None => writeln!(f, "wwr_residual n/a")?,
        }
        writeln!(f, "tolerance {}", format_f64(self.tolerance))?;
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn run_verify(g: &TbtGenerator, tolerance: f64) -> Result<VerifyReport> {
    let dense = g.assemble_dense();
    let oracle = grc_full(&dense)?;
    let fast = tbt_grc(g)?;

    let mut max_table_deviation = 0.0f64;
    for (k, l) in oracle.pairs() {
        let dev = fast.fetch(k, l)?.max_rel_deviation(oracle.get(k, l)?);
        max_table_deviation = max_table_deviation.max(dev);
    }

    let n = g.n();
    let inverse = factor_from_tables(&fast)?.inverse_dense();
    let product = dense.as_matrix().matmul(inverse.as_matrix());
    let inverse_residual = (&product - &CMatrix::identity(n)).frobenius_norm() / (n as f64).sqrt();

    let wwr_residual = if g.n2() >= 2 {
        let states = wwr_recurse(g)?;
        let abs = wwr_residual(g, states.last().expect("n2 >= 2 gives a state"))?;
        let scale = rhs_norm(g);
        Some(if scale > 0.0 { abs / scale } else { abs })
    } else {
        None
    };

    Ok(VerifyReport {
        max_table_deviation,
        inverse_residual,
        wwr_residual,
        tolerance,
    })
}
