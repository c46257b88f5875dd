//! Closed-form operation counts of the fast recursion and of the block-Levinson
//! baseline, and the `n1 = n2` comparison sweep.

use std::io::Write;

use crate::error::{Error, Result};
use crate::textio::format_sig6;

/// Step constant used for the comparison with the baseline.
pub const STEP_CONSTANT: f64 = 3.0;

/// Header of the comparison CSV.
pub const CSV_HEADER: &str = "n1,n2,opc_eq15,opc_eq12_c1_3,opcwwr_eq14,ratio";

/// Half the sum, over the fast schedule, of `c1` times the width of each step:
/// the upper-triangle loops contribute `c1·(n1·d2 + d1)`, the lower-triangle
/// loops `c1·(n1·d2 - d1)`.
pub fn opc_triple_sum(n1: usize, n2: usize, c1: f64) -> f64 {
    // The summands do not depend on `u`; the innermost sums collapse to counts.
    let mut upper = 0.0;
    for d2 in 0..n2 {
        for d1 in 1..n1 {
            upper += (n1 - d1) as f64 * c1 * (n1 * d2 + d1) as f64;
        }
    }
    let mut lower = 0.0;
    for d2 in 1..n2 {
        for d1 in 0..n1 {
            lower += (n1 - d1) as f64 * (c1 * (n1 * d2) as f64 - c1 * d1 as f64);
        }
    }
    0.5 * (upper + lower)
}

/// Expanded count of the fast algorithm with `c1 = 3`, plus `5/2·n1²·n2` for
/// the divisions and the scalar updates.
pub fn opc_closed_form(n1: usize, n2: usize) -> f64 {
    let (a, b) = (n1 as f64, n2 as f64);
    (a - 1.0) * 0.75 * (a - 1.0) * a - 0.25 * (a - 1.0) * a * (2.0 * a - 1.0)
        + a * 1.5 * (b - 1.0) * b * (a - 1.0).powi(2)
        - a * (b - 1.0) * b * 0.75 * (a - 1.0) * a
        + (a - 1.0) * a * 0.75 * (b - 1.0) * b
        + 2.5 * a * a * b
}

/// Block-Levinson count `(n2-1)·3·n1³ + n1³·(n2+1)·(n2-2)`; defined for `n2 ≥ 2`.
pub fn opcwwr(n1: usize, n2: usize) -> Result<f64> {
    if n2 < 2 {
        return Err(Error::Domain(format!(
            "baseline count needs n2 >= 2, got {n2}"
        )));
    }
    let (a, b) = (n1 as f64, n2 as f64);
    Ok((b - 1.0) * 3.0 * a.powi(3) + a.powi(3) * (b + 1.0) * (b - 2.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostReport {
    pub n1: usize,
    pub n2: usize,
    pub opc_sum12: f64,
    pub opc15: f64,
    pub opcwwr14: f64,
    pub ratio: f64,
    pub measured_mul: Option<u64>,
}

impl CostReport {
    pub fn evaluate(n1: usize, n2: usize) -> Result<Self> {
        let opcwwr14 = opcwwr(n1, n2)?;
        if opcwwr14.is_nan() || opcwwr14 <= 0.0 {
            return Err(Error::Domain(
                "ratio undefined: baseline count is not positive".into(),
            ));
        }
        let opc15 = opc_closed_form(n1, n2);
        Ok(Self {
            n1,
            n2,
            opc_sum12: opc_triple_sum(n1, n2, STEP_CONSTANT),
            opc15,
            opcwwr14,
            ratio: opc15 / opcwwr14,
            measured_mul: None,
        })
    }

    pub fn with_measured_mul(mut self, mul: u64) -> Self {
        self.measured_mul = Some(mul);
        self
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n1,
            self.n2,
            format_sig6(self.opc15),
            format_sig6(self.opc_sum12),
            format_sig6(self.opcwwr14),
            format_sig6(self.ratio)
        )
    }
}

/// One report per `n = n1 = n2` in `n_min ..= n_max`.
pub fn comparison_table(n_min: usize, n_max: usize) -> Result<Vec<CostReport>> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::Domain(format!(
            "need 2 <= min <= max, got {n_min}..{n_max}"
        )));
    }
    (n_min..=n_max)
        .map(|n| CostReport::evaluate(n, n))
        .collect()
}

pub fn write_csv<W: Write>(mut w: W, rows: &[CostReport]) -> Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(w, "{}", r.csv_row())?;
    }
    Ok(())
}
