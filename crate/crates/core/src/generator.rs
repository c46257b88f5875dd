//! Compact description of a Hermitian Toeplitz-block-Toeplitz matrix.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::access::MatrixAccess;
use crate::dense::DenseHermitian;
use crate::error::{Error, Result};
use crate::textio::{format_complex, parse_complexes, parse_usizes, Lines};

/// Generator `c(d, s)` of an `n1·n2` square TBT matrix.
///
/// Block `d ≥ 0` of the first block row is the `n1 × n1` Toeplitz matrix
/// `R_d[a][b] = c(d, b - a)`; blocks below the diagonal are `R_{-d} = R_dᴴ`.
/// This makes `r_{i,j} = c(j/n1 - i/n1, j%n1 - i%n1)` whenever `j/n1 ≥ i/n1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TbtGenerator {
    n1: usize,
    n2: usize,
    c: Vec<Complex64>,
}

impl TbtGenerator {
    /// `values[d]` holds `c(d, s)` for `s = -(n1-1) ..= n1-1`.
    ///
    /// Block `R_0` must be Hermitian to within `1e-12·c(0,0)`; it is then made
    /// exactly Hermitian from its upper half. `c(0,0)` must be real and positive.
    pub fn new(n1: usize, n2: usize, values: Vec<Vec<Complex64>>) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::InvalidGenerator("sizes must be positive".into()));
        }
        if values.len() != n2 {
            return Err(Error::InvalidGenerator(format!(
                "expected {n2} block rows, found {}",
                values.len()
            )));
        }
        let w = 2 * n1 - 1;
        let mut c = Vec::with_capacity(n2 * w);
        for (d, row) in values.into_iter().enumerate() {
            if row.len() != w {
                return Err(Error::InvalidGenerator(format!(
                    "block {d}: expected {w} values, found {}",
                    row.len()
                )));
            }
            c.extend(row);
        }
        if c.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidGenerator("non-finite generator value".into()));
        }
        let mut g = Self { n1, n2, c };
        let c00 = g.c(0, 0);
        if c00.re.is_nan() || c00.re <= 0.0 {
            return Err(Error::InvalidGenerator(
                "c(0,0) must be strictly positive".into(),
            ));
        }
        let tol = 1e-12 * c00.re;
        if c00.im.abs() > tol {
            return Err(Error::InvalidGenerator("c(0,0) must be real".into()));
        }
        for s in 1..n1 as isize {
            if (g.c(0, -s) - g.c(0, s).conj()).norm() > tol {
                return Err(Error::InvalidGenerator(format!(
                    "block 0 is not Hermitian: c(0,-{s}) != conj(c(0,{s}))"
                )));
            }
        }
        *g.slot(0, 0) = Complex64::new(c00.re, 0.0);
        for s in 1..n1 as isize {
            let v = g.c(0, s).conj();
            *g.slot(0, -s) = v;
        }
        Ok(g)
    }

    /// The generator of the `n1·n2` identity matrix.
    pub fn identity(n1: usize, n2: usize) -> Self {
        let mut values = vec![vec![Complex64::new(0.0, 0.0); 2 * n1 - 1]; n2];
        values[0][n1 - 1] = Complex64::new(1.0, 0.0);
        Self::new(n1, n2, values).expect("identity generator is valid")
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn n(&self) -> usize {
        self.n1 * self.n2
    }

    fn offset(&self, d: usize, s: isize) -> usize {
        debug_assert!(d < self.n2 && s.unsigned_abs() < self.n1);
        d * (2 * self.n1 - 1) + (s + self.n1 as isize - 1) as usize
    }

    fn slot(&mut self, d: usize, s: isize) -> &mut Complex64 {
        let o = self.offset(d, s);
        &mut self.c[o]
    }

    /// Generator value `c(d, s)`.
    pub fn c(&self, d: usize, s: isize) -> Complex64 {
        self.c[self.offset(d, s)]
    }

    pub fn c00(&self) -> f64 {
        self.c[self.offset(0, 0)].re
    }

    /// Multiplies `c(0,0)` by `1 + ridge`.
    pub fn with_ridge(mut self, ridge: f64) -> Self {
        let c00 = self.c00();
        *self.slot(0, 0) = Complex64::new(c00 + ridge * c00, 0.0);
        self
    }

    /// Returns a copy with `c(d, s)` replaced; block 0 is kept Hermitian by
    /// writing `conj(value)` at `c(0, -s)` too.
    pub fn with_value(&self, d: usize, s: isize, value: Complex64) -> Result<Self> {
        if d >= self.n2 || s.unsigned_abs() >= self.n1 {
            return Err(Error::IndexOutOfRange {
                i: d,
                j: s.unsigned_abs(),
                n: self.n(),
            });
        }
        let mut g = self.clone();
        *g.slot(d, s) = value;
        if d == 0 {
            *g.slot(0, -s) = value.conj();
        }
        let c00 = g.c(0, 0);
        if c00.re.is_nan() || c00.re <= 0.0 || c00.im != 0.0 {
            return Err(Error::InvalidGenerator(
                "c(0,0) must be real and positive".into(),
            ));
        }
        Ok(g)
    }

    /// Entry `r_{i,j}` with range checking.
    pub fn tbt_entry(&self, i: usize, j: usize) -> Result<Complex64> {
        let n = self.n();
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        Ok(self.entry(i, j))
    }

    /// Block `R_d` (`d` may be negative) as an `n1 × n1` matrix.
    pub fn block(&self, d: isize) -> crate::dense::CMatrix {
        let n1 = self.n1;
        let off = d.unsigned_abs() * n1;
        if d >= 0 {
            crate::dense::CMatrix::from_fn(n1, n1, |a, b| self.entry(a, off + b))
        } else {
            crate::dense::CMatrix::from_fn(n1, n1, |a, b| self.entry(off + a, b))
        }
    }

    pub fn assemble_dense(&self) -> DenseHermitian {
        DenseHermitian::from_upper(self.n(), |i, j| self.entry(i, j))
    }

    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {}", self.n1, self.n2)?;
        let width = 2 * self.n1 - 1;
        for d in 0..self.n2 {
            let row: Vec<String> = self.c[d * width..(d + 1) * width]
                .iter()
                .map(|&z| format_complex(z))
                .collect();
            writeln!(w, "{}", row.join(" "))?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = Lines::new(r);
        let (lineno, header) = lines.next_record()?.ok_or(Error::Parse {
            line: 0,
            message: "empty generator file".into(),
        })?;
        let dims = parse_usizes(&header, lineno)?;
        let [n1, n2] = dims[..] else {
            return Err(Error::Parse {
                line: lineno,
                message: "expected `n1 n2`".into(),
            });
        };
        let mut values = Vec::with_capacity(n2);
        for _ in 0..n2 {
            let (lineno, line) = lines.next_record()?.ok_or(Error::Parse {
                line: lines.line(),
                message: "missing generator block row".into(),
            })?;
            values.push(parse_complexes(&line, lineno)?);
        }
        if let Some((lineno, _)) = lines.next_record()? {
            return Err(Error::Parse {
                line: lineno,
                message: "trailing data after generator".into(),
            });
        }
        Self::new(n1, n2, values)
    }
}

impl MatrixAccess for TbtGenerator {
    fn dim(&self) -> usize {
        self.n()
    }

    #[inline]
    fn entry(&self, i: usize, j: usize) -> Complex64 {
        let n1 = self.n1;
        let (bi, ii) = (i / n1, (i % n1) as isize);
        let (bj, jj) = (j / n1, (j % n1) as isize);
        if bj >= bi {
            self.c(bj - bi, jj - ii)
        } else {
            self.c(bi - bj, ii - jj).conj()
        }
    }
}
