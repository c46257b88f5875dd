//! Small dense complex matrices and the Hermitian wrapper used by the oracle path.

use std::io::{BufRead, Write};
use std::ops::{Add, Sub};

use num_complex::Complex64;

use crate::access::MatrixAccess;
use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::textio::{format_complex, Lines};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major rectangular complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        self.matmul_counted(rhs, &mut OpCounter::new())
    }

    pub fn matmul_counted(&self, rhs: &Self, counter: &mut OpCounter) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == ZERO {
                    continue;
                }
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(rhs.row(t)) {
                    *d += a * b;
                }
            }
        }
        let flops = (self.rows * self.cols * rhs.cols) as u64;
        counter.record(flops, flops, 0);
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// `J · conj(self) · J` for a square matrix (row and column order reversed).
    pub fn flip_conj(&self) -> Self {
        let (r, c) = (self.rows, self.cols);
        Self::from_fn(r, c, |i, j| self.get(r - 1 - i, c - 1 - j).conj())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest off-diagonal magnitude of a square matrix.
    pub fn max_off_diagonal(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    m = m.max(self.get(i, j).norm());
                }
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// `(self + selfᴴ) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }

    /// Solves `self · X = rhs` by Gaussian elimination with partial pivoting.
    ///
    /// A pivot of magnitude at most `pivot_floor` is reported as `None`.
    pub fn solve_counted(
        &self,
        rhs: &Self,
        pivot_floor: f64,
        counter: &mut OpCounter,
    ) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        let (mut muls, mut divs) = (0u64, 0u64);
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&x, &y| a.get(x, col).norm().total_cmp(&a.get(y, col).norm()))
                .unwrap();
            if a.get(piv, col).norm() <= pivot_floor {
                return None;
            }
            a.swap_rows(col, piv);
            b.swap_rows(col, piv);
            let d = a.get(col, col);
            for r in col + 1..n {
                let f = a.get(r, col) / d;
                divs += 1;
                if f == ZERO {
                    continue;
                }
                for c in col..n {
                    let v = a.get(col, c);
                    a[(r, c)] -= f * v;
                }
                for c in 0..m {
                    let v = b.get(col, c);
                    b[(r, c)] -= f * v;
                }
                muls += (n - col + m) as u64;
            }
        }
        for c in 0..m {
            for r in (0..n).rev() {
                let mut acc = b.get(r, c);
                for t in r + 1..n {
                    acc -= a.get(r, t) * b.get(t, c);
                }
                b[(r, c)] = acc / a.get(r, r);
            }
        }
        muls += (m * n * (n - 1) / 2) as u64;
        divs += (m * n) as u64;
        counter.record(muls, muls, divs);
        Some(b)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Writes the dense text format: `rows` (or `rows cols` when not square), then one line of `re im` pairs per row.
    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        if self.rows == self.cols {
            writeln!(w, "{}", self.rows)?;
        } else {
            writeln!(w, "{} {}", self.rows, self.cols)?;
        }
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|&z| format_complex(z)).collect();
            writeln!(w, "{}", line.join(" "))?;
        }
        Ok(())
    }

    /// Reads one matrix in the dense text format from `lines`.
    pub fn read_from(lines: &mut Lines<impl BufRead>) -> Result<Self> {
        let (lineno, header) = lines.next_record()?.ok_or(Error::Parse {
            line: lines.line(),
            message: "missing matrix header".into(),
        })?;
        let dims = crate::textio::parse_usizes(&header, lineno)?;
        let (rows, cols) = match dims.as_slice() {
            [n] => (*n, *n),
            [r, c] => (*r, *c),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    message: "expected `n` or `rows cols`".into(),
                })
            }
        };
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let (lineno, line) = lines.next_record()?.ok_or(Error::Parse {
                line: lines.line(),
                message: "unexpected end of matrix".into(),
            })?;
            let row = crate::textio::parse_complexes(&line, lineno)?;
            if row.len() != cols {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected {cols} complex values, found {}", row.len()),
                });
            }
            data.extend(row);
        }
        Ok(Self { rows, cols, data })
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl MatrixAccess for CMatrix {
    fn dim(&self) -> usize {
        self.rows
    }

    fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.get(i, j)
    }
}

/// Square matrix with `m(j,i) == conj(m(i,j))` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseHermitian {
    inner: CMatrix,
}

impl DenseHermitian {
    /// Accepts a square matrix that is Hermitian to within `1e-12` relative to its
    /// largest entry, then copies the upper triangle onto the lower one.
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.rows != m.cols || m.rows == 0 {
            return Err(Error::SizeMismatch {
                expected: m.rows,
                actual: m.cols,
            });
        }
        if m.data
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Domain("non-finite matrix entry".into()));
        }
        let tol = 1e-12 * m.max_abs().max(f64::MIN_POSITIVE);
        for i in 0..m.rows {
            for j in i..m.cols {
                if (m.get(i, j) - m.get(j, i).conj()).norm() > tol {
                    return Err(Error::Domain(format!(
                        "matrix is not Hermitian at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self::symmetrize_upper(&m))
    }

    fn symmetrize_upper(m: &CMatrix) -> Self {
        let inner = CMatrix::from_fn(m.rows, m.cols, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => m.get(i, j),
            std::cmp::Ordering::Equal => Complex64::new(m.get(i, i).re, 0.0),
            std::cmp::Ordering::Greater => m.get(j, i).conj(),
        });
        Self { inner }
    }

    /// Builds from the upper triangle of `f`; the lower triangle is its conjugate mirror.
    pub fn from_upper(n: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let m = CMatrix::from_fn(n, n, |i, j| if i <= j { f(i, j) } else { ZERO });
        Self::symmetrize_upper(&m)
    }

    /// Wraps an approximately Hermitian matrix by averaging it with its conjugate transpose.
    pub fn from_hermitian_part(m: &CMatrix) -> Self {
        Self::symmetrize_upper(&m.hermitian_part())
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: CMatrix::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.inner.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.inner.get(i, j)
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> CMatrix {
        self.inner
    }

    pub fn write_text<W: Write>(&self, w: W) -> Result<()> {
        self.inner.write_text(w)
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = Lines::new(r);
        Self::new(CMatrix::read_from(&mut lines)?)
    }
}

impl MatrixAccess for DenseHermitian {
    fn dim(&self) -> usize {
        self.inner.rows
    }

    fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.inner.get(i, j)
    }
}
