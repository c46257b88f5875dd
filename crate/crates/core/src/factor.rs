//! Inverse factorization `R⁻¹ = conj(Rᴾ) · (Dᴾ)⁻¹ · Rᴾᵀ`.
//!
//! `Rᴾ` is unit lower triangular with column `k` equal to `p(k, n-1)`, and
//! `Dᴾ = Rᴾᵀ · R · conj(Rᴾ)` is diagonal with entries `v'(k, n-1)`.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::access::MatrixAccess;
use crate::band::BandVector;
use crate::dense::{CMatrix, DenseHermitian};
use crate::error::{Error, Result};
use crate::oracle::CoeffTables;
use crate::textio::{format_complex, parse_complexes, parse_usizes, Lines};

/// Relative tolerance of the diagonal verification pass.
pub const DIAG_CHECK_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct InverseFactor {
    columns: Vec<BandVector>,
    diag: Vec<f64>,
}

impl InverseFactor {
    /// Checks the structural invariants, then verifies every `diag[k]` against
    /// the directly computed `p_kᵀ R conj(p_k)` of `m`.
    ///
    /// The comparison is relative to `Σ |p_i|·|r_ij|·|p_j|`, the natural scale
    /// of the rounding error in that quadratic form.
    pub fn verified<M: MatrixAccess + ?Sized>(
        columns: Vec<BandVector>,
        diag: Vec<f64>,
        m: &M,
    ) -> Result<Self> {
        let f = Self::from_parts(columns, diag)?;
        for (k, (col, &d)) in f.columns.iter().zip(&f.diag).enumerate() {
            let (direct, scale) = quadratic_form(col, m);
            if (direct - d).abs() > DIAG_CHECK_TOLERANCE * scale {
                return Err(Error::FactorizationMismatch {
                    column: k,
                    table: d,
                    direct,
                });
            }
        }
        Ok(f)
    }

    /// Builds a factor without the verification pass (used when reading files).
    pub fn from_parts(columns: Vec<BandVector>, diag: Vec<f64>) -> Result<Self> {
        let n = columns.len();
        if diag.len() != n || n == 0 {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: diag.len(),
            });
        }
        for (k, col) in columns.iter().enumerate() {
            if col.len() != n || col.lo() != k || col.get(k) != Complex64::new(1.0, 0.0) {
                return Err(Error::Domain(format!(
                    "column {k} must have support starting at {k} with a unit head"
                )));
            }
        }
        if let Some(k) = diag.iter().position(|&d| !d.is_finite() || d <= 0.0) {
            return Err(Error::Domain(format!("diagonal entry {k} is not positive")));
        }
        Ok(Self { columns, diag })
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[BandVector] {
        &self.columns
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    /// `R⁻¹ b` in three passes: `Rᴾᵀ`, `(Dᴾ)⁻¹`, `conj(Rᴾ)`.
    pub fn apply_inverse(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.n();
        if b.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: b.len(),
            });
        }
        let z: Vec<Complex64> = self
            .columns
            .iter()
            .zip(&self.diag)
            .map(|(col, &d)| {
                let dot: Complex64 = col
                    .coeffs()
                    .iter()
                    .zip(&b[col.lo()..=col.hi()])
                    .map(|(p, x)| p * x)
                    .sum();
                dot / d
            })
            .collect();
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        for (col, &zk) in self.columns.iter().zip(&z) {
            for (slot, p) in x[col.lo()..=col.hi()].iter_mut().zip(col.coeffs()) {
                *slot += p.conj() * zk;
            }
        }
        Ok(x)
    }

    /// Materializes `R⁻¹`; the result is averaged with its conjugate transpose.
    pub fn inverse_dense(&self) -> DenseHermitian {
        let n = self.n();
        let mut x = CMatrix::zeros(n, n);
        for (col, &d) in self.columns.iter().zip(&self.diag) {
            let inv = 1.0 / d;
            for i in col.lo()..=col.hi() {
                let pi = col.get(i).conj() * inv;
                for j in col.lo()..=col.hi() {
                    x[(i, j)] += pi * col.get(j);
                }
            }
        }
        DenseHermitian::from_hermitian_part(&x)
    }

    /// Dense `Rᴾ`.
    pub fn lower_matrix(&self) -> CMatrix {
        let n = self.n();
        CMatrix::from_fn(n, n, |i, j| self.columns[j].get(i))
    }

    /// Writes `n`, one `k hi c_k … c_hi` line per column, then the diagonal as a
    /// band line `0 n-1 d_0 0 … d_{n-1} 0`.
    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        let n = self.n();
        writeln!(w, "{n}")?;
        for col in &self.columns {
            write_band(&mut w, col)?;
        }
        let diag = BandVector::new(
            n,
            0,
            self.diag.iter().map(|&d| Complex64::new(d, 0.0)).collect(),
        )?;
        write_band(&mut w, &diag)
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = Lines::new(r);
        let (lineno, header) = lines.next_record()?.ok_or(Error::Parse {
            line: 0,
            message: "empty factor file".into(),
        })?;
        let [n] = parse_usizes(&header, lineno)?[..] else {
            return Err(Error::Parse {
                line: lineno,
                message: "expected `n`".into(),
            });
        };
        let mut columns = Vec::with_capacity(n);
        for _ in 0..n {
            columns.push(read_band(&mut lines, n)?);
        }
        let diag = read_band(&mut lines, n)?;
        if diag.lo() != 0 || diag.hi() != n - 1 || diag.coeffs().iter().any(|z| z.im != 0.0) {
            return Err(Error::Parse {
                line: lines.line(),
                message: "diagonal line must span 0..n-1 with real values".into(),
            });
        }
        Self::from_parts(columns, diag.coeffs().iter().map(|z| z.re).collect())
    }
}

fn write_band<W: Write>(w: &mut W, v: &BandVector) -> Result<()> {
    let coeffs: Vec<String> = v.coeffs().iter().map(|&z| format_complex(z)).collect();
    writeln!(w, "{} {} {}", v.lo(), v.hi(), coeffs.join(" "))?;
    Ok(())
}

fn read_band<R: BufRead>(lines: &mut Lines<R>, n: usize) -> Result<BandVector> {
    let (lineno, line) = lines.next_record()?.ok_or(Error::Parse {
        line: lines.line(),
        message: "missing band line".into(),
    })?;
    let mut toks = line.splitn(3, char::is_whitespace);
    let mut index = |what: &str| -> Result<usize> {
        toks.next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse {
                line: lineno,
                message: format!("missing {what} index"),
            })
    };
    let lo = index("support start")?;
    let hi = index("support end")?;
    let coeffs = parse_complexes(toks.next().unwrap_or(""), lineno)?;
    if hi < lo || hi >= n || coeffs.len() != hi - lo + 1 {
        return Err(Error::Parse {
            line: lineno,
            message: format!(
                "support [{lo}, {hi}] does not match {} coefficients",
                coeffs.len()
            ),
        });
    }
    BandVector::new(n, lo, coeffs)
}

/// `(pᵀ M conj(p), Σ|p_i||m_ij||p_j|)` over the support of `p`.
fn quadratic_form<M: MatrixAccess + ?Sized>(p: &BandVector, m: &M) -> (f64, f64) {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for i in p.lo()..=p.hi() {
        let pi = p.get(i);
        for j in p.lo()..=p.hi() {
            let t = m.entry(i, j) * p.get(j).conj();
            acc += pi * t;
            scale += pi.norm() * t.norm();
        }
    }
    (acc.re, scale)
}

/// Builds the factor from complete tables: column `k` is `p(k, n-1)` and
/// `diag[k] = v'(k, n-1)`, verified against `m`.
pub fn build_factorization<M: MatrixAccess + ?Sized>(
    tables: &CoeffTables,
    m: &M,
) -> Result<InverseFactor> {
    let n = tables.n();
    let mut columns = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        let e = tables.get(k, n - 1)?;
        columns.push(widen_to_tail(&e.p));
        diag.push(e.v_prime);
    }
    InverseFactor::verified(columns, diag, m)
}

/// Pads the support of a column out to `n - 1` so the factor layout is uniform.
pub(crate) fn widen_to_tail(v: &BandVector) -> BandVector {
    let n = v.len();
    if v.hi() == n - 1 {
        return v.clone();
    }
    let mut coeffs = v.coeffs().to_vec();
    coeffs.resize(n - v.lo(), Complex64::new(0.0, 0.0));
    BandVector::new(n, v.lo(), coeffs).expect("support stays in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::grc_full;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rho_half() -> DenseHermitian {
        DenseHermitian::from_upper(2, |i, j| if i == j { c(1.0, 0.0) } else { c(0.5, 0.0) })
    }

    #[test]
    fn identity_factor() {
        let r = DenseHermitian::identity(4);
        let f = build_factorization(&grc_full(&r).unwrap(), &r).unwrap();
        for k in 0..4 {
            assert_eq!(f.columns()[k].max_abs_diff(&BandVector::basis(4, k)), 0.0);
        }
        assert_eq!(f.diag(), &[1.0; 4]);
        let b = vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.0, 0.0), c(7.0, -1.0)];
        assert_eq!(f.apply_inverse(&b).unwrap(), b);
        assert_eq!(f.inverse_dense(), DenseHermitian::identity(4));
    }

    #[test]
    fn two_by_two_factor() {
        let r = rho_half();
        let f = build_factorization(&grc_full(&r).unwrap(), &r).unwrap();
        assert_eq!(f.columns()[0].to_dense(), vec![c(1.0, 0.0), c(-0.5, 0.0)]);
        assert_eq!(f.columns()[1].to_dense(), vec![c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(f.diag(), &[0.75, 1.0]);
    }

    #[test]
    fn two_by_two_apply() {
        let r = rho_half();
        let f = build_factorization(&grc_full(&r).unwrap(), &r).unwrap();
        let x = f.apply_inverse(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((x[0] - c(4.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((x[1] - c(-2.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn two_by_two_inverse_dense() {
        let r = rho_half();
        let f = build_factorization(&grc_full(&r).unwrap(), &r).unwrap();
        let inv = f.inverse_dense();
        let expect = [[1.0, -0.5], [-0.5, 1.0]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                assert!((inv.get(i, j) - c(e / 0.75, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn mismatched_diagonal_is_caught() {
        let r = rho_half();
        let cols = vec![
            BandVector::new(2, 0, vec![c(1.0, 0.0), c(-0.5, 0.0)]).unwrap(),
            BandVector::basis(2, 1),
        ];
        assert!(matches!(
            InverseFactor::verified(cols, vec![0.8, 1.0], &r),
            Err(Error::FactorizationMismatch { column: 0, .. })
        ));
    }

    #[test]
    fn size_mismatch_on_apply() {
        let f = InverseFactor::from_parts(vec![BandVector::basis(1, 0)], vec![2.0]).unwrap();
        assert!(matches!(
            f.apply_inverse(&[]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn factor_file_round_trip() {
        let r = DenseHermitian::from_upper(3, |i, j| {
            if i == j {
                c(3.0, 0.0)
            } else {
                c(0.4 / (1 + j - i) as f64, 0.1 * (j - i) as f64)
            }
        });
        let f = build_factorization(&grc_full(&r).unwrap(), &r).unwrap();
        let mut buf = Vec::new();
        f.write_text(&mut buf).unwrap();
        assert_eq!(InverseFactor::read_text(buf.as_slice()).unwrap(), f);
    }
}
