//! Coefficient vectors that carry an explicit support window.

use num_complex::Complex64;

use crate::access::MatrixAccess;
use crate::counter::OpCounter;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Length-`n` vector whose entries outside `[lo, hi]` are exactly zero.
///
/// Only the support window is stored, so every operation costs time proportional
/// to the support width rather than to `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandVector {
    n: usize,
    lo: usize,
    coeff: Vec<Complex64>,
}

impl BandVector {
    pub fn new(n: usize, lo: usize, coeff: Vec<Complex64>) -> Result<Self> {
        if coeff.is_empty() || lo + coeff.len() > n {
            return Err(Error::SizeMismatch {
                expected: n.saturating_sub(lo),
                actual: coeff.len(),
            });
        }
        Ok(Self { n, lo, coeff })
    }

    /// Canonical basis vector `e_k`.
    pub fn basis(n: usize, k: usize) -> Self {
        assert!(k < n, "basis index {k} out of range for length {n}");
        Self {
            n,
            lo: k,
            coeff: vec![ONE],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.lo + self.coeff.len() - 1
    }

    pub fn width(&self) -> usize {
        self.coeff.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeff
    }

    /// Entry `i` of the full-length vector.
    pub fn get(&self, i: usize) -> Complex64 {
        if i >= self.lo && i <= self.hi() {
            self.coeff[i - self.lo]
        } else {
            ZERO
        }
    }

    pub fn to_dense(&self) -> Vec<Complex64> {
        let mut out = vec![ZERO; self.n];
        out[self.lo..=self.hi()].copy_from_slice(&self.coeff);
        out
    }

    /// Multiplication by `Uᵗ`: the support moves by `t`, coefficients are kept.
    ///
    /// Fails when the support would leave `[0, n-1]`, which in the fast
    /// algorithm can only mean a wrong exchange index.
    pub fn shift(&self, t: isize) -> Result<Self> {
        let lo = self.lo as isize + t;
        let hi = self.hi() as isize + t;
        if lo < 0 || hi >= self.n as isize {
            return Err(Error::ShiftOutOfRange {
                lo: self.lo,
                hi: self.hi(),
                shift: t,
                len: self.n,
            });
        }
        Ok(Self {
            n: self.n,
            lo: lo as usize,
            coeff: self.coeff.clone(),
        })
    }

    /// Reverses the coefficients inside the support window (the tilde operation).
    pub fn reverse_support(&self) -> Self {
        let mut coeff = self.coeff.clone();
        coeff.reverse();
        Self {
            n: self.n,
            lo: self.lo,
            coeff,
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            n: self.n,
            lo: self.lo,
            coeff: self.coeff.iter().map(|c| c.conj()).collect(),
        }
    }

    /// `conj(reverse_support(self))` shifted by `t`, the exchange map on vectors.
    pub fn mirrored(&self, t: isize) -> Result<Self> {
        let mut out = self.reverse_support().shift(t)?;
        out.coeff.iter_mut().for_each(|c| *c = c.conj());
        Ok(out)
    }

    /// `self - scale·other` over the union of both supports.
    pub fn sub_scaled(&self, scale: Complex64, other: &Self, counter: &mut OpCounter) -> Self {
        debug_assert_eq!(self.n, other.n);
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let mut coeff = vec![ZERO; hi - lo + 1];
        coeff[self.lo - lo..=self.hi() - lo].copy_from_slice(&self.coeff);
        for (slot, &c) in coeff[other.lo - lo..=other.hi() - lo]
            .iter_mut()
            .zip(&other.coeff)
        {
            *slot -= scale * c;
        }
        let w = other.coeff.len() as u64;
        counter.record(w, w, 0);
        Self {
            n: self.n,
            lo,
            coeff,
        }
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeff.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max_i |self_i - other_i|` over the full length.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        (lo..=hi)
            .map(|i| (self.get(i) - other.get(i)).norm())
            .fold(0.0, f64::max)
    }
}

/// `Σ_{i∈[lo,hi]} v_i · m(i, col)`, the unconjugated product `vᵀ M e_col`.
pub fn column_inner<M: MatrixAccess + ?Sized>(
    v: &BandVector,
    m: &M,
    col: usize,
    counter: &mut OpCounter,
) -> Complex64 {
    let w = v.width() as u64;
    counter.record(w, w - 1, 0);
    v.coeff
        .iter()
        .enumerate()
        .map(|(off, &c)| c * m.entry(v.lo + off, col))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{CMatrix, DenseHermitian};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn shift_moves_basis() {
        let e0 = BandVector::basis(4, 0);
        assert_eq!(e0.shift(1).unwrap(), BandVector::basis(4, 1));
        assert_eq!(e0.shift(0).unwrap(), e0);
    }

    #[test]
    fn shift_inverse_pair() {
        let v = BandVector::new(8, 1, vec![c(1.0, 2.0), c(-0.5, 0.0)]).unwrap();
        assert_eq!(v.shift(2).unwrap().shift(-2).unwrap(), v);
    }

    #[test]
    fn shift_out_of_range_is_an_error() {
        let v = BandVector::new(4, 2, vec![ONE, ONE]).unwrap();
        assert!(matches!(v.shift(1), Err(Error::ShiftOutOfRange { .. })));
        assert!(matches!(v.shift(-3), Err(Error::ShiftOutOfRange { .. })));
    }

    #[test]
    fn reverse_examples() {
        let s = BandVector::new(5, 3, vec![c(4.0, 1.0)]).unwrap();
        assert_eq!(s.reverse_support(), s);
        let v = BandVector::new(5, 2, vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        let r = v.reverse_support();
        assert_eq!((r.lo(), r.hi()), (2, 4));
        assert_eq!(r.coeffs(), &[c(3.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(r.reverse_support(), v);
    }

    #[test]
    fn sub_scaled_spans_union() {
        let p = BandVector::new(6, 1, vec![ONE, c(0.5, 0.0)]).unwrap();
        let q = BandVector::new(6, 2, vec![c(0.0, 1.0), ONE]).unwrap();
        let mut ctr = OpCounter::new();
        let out = p.sub_scaled(c(2.0, 0.0), &q, &mut ctr);
        assert_eq!((out.lo(), out.hi()), (1, 3));
        assert_eq!(out.get(1), ONE);
        assert_eq!(out.get(2), c(0.5, -2.0));
        assert_eq!(out.get(3), c(-2.0, 0.0));
        assert_eq!(ctr.mul, 2);
    }

    #[test]
    fn column_inner_of_basis_reads_entry() {
        let m = CMatrix::from_fn(3, 3, |i, j| c((i * 3 + j) as f64, 0.0));
        let mut ctr = OpCounter::new();
        let e1 = BandVector::basis(3, 1);
        assert_eq!(column_inner(&e1, &m, 2, &mut ctr), m.get(1, 2));
        assert_eq!(ctr.mul, 1);
    }

    #[test]
    fn column_inner_against_identity() {
        let id = DenseHermitian::identity(5);
        let v = BandVector::new(5, 1, vec![c(1.0, 1.0), c(2.0, 0.0), c(0.0, 3.0)]).unwrap();
        let mut ctr = OpCounter::new();
        for col in 0..5 {
            assert_eq!(column_inner(&v, &id, col, &mut ctr), v.get(col));
        }
    }

    #[test]
    fn column_inner_matches_dense_dot() {
        let m = CMatrix::from_fn(5, 5, |i, j| {
            c(
                (i as f64 + 1.0).sin() * (j as f64),
                (i + 2 * j) as f64 * 0.1,
            )
        });
        let v = BandVector::new(5, 1, vec![c(0.3, -1.0), c(2.0, 0.5), c(-0.7, 0.2)]).unwrap();
        let full = v.to_dense();
        let mut ctr = OpCounter::new();
        for col in 0..5 {
            let dense: Complex64 = (0..5).map(|i| full[i] * m.get(i, col)).sum();
            assert!((column_inner(&v, &m, col, &mut ctr) - dense).norm() < 1e-14);
        }
        assert_eq!(ctr.mul, 15);
    }
}
