//! Generalized reflection-coefficient recursion for an arbitrary Hermitian
//! positive-definite matrix.
//!
//! For every pair `k ≤ l` the recursion produces a forward vector `p(k,l)`
//! (support `[k,l]`, unit head at `k`) and a backward vector `q(k,l)` (unit
//! tail at `l`), linked to their parents by the reflection coefficients:
//!
//! ```text
//! p(k,l) = p(k,l-1) - a(k,l)·q(k+1,l)
//! q(k,l) = q(k+1,l) - a'(k,l)·p(k,l-1)
//! v(k,l)  = v(k+1,l)·(1 - a·a')       v(k,l)  = q(k,l)ᵀ R e_l
//! v'(k,l) = v'(k,l-1)·(1 - a·a')      v'(k,l) = p(k,l)ᵀ R e_k
//! ```
//!
//! Only one inner product is formed per step: for Hermitian `R`,
//! `q(k+1,l)ᵀ R e_k = conj(p(k,l-1)ᵀ R e_l)`.

use num_complex::Complex64;

use crate::access::MatrixAccess;
use crate::band::{column_inner, BandVector};
use crate::counter::OpCounter;
use crate::error::{Error, Result};

/// `1 - a·a'` at or below this value (relative to 1) means "not positive definite".
pub const PD_TOLERANCE: f64 = 1e3 * f64::EPSILON;

/// Largest accepted imaginary part of `1 - a·a'`, relative to `1 + |a·a'|`.
pub const IMAG_TOLERANCE: f64 = 1e-10;

/// Everything the recursion knows about one index pair.
#[derive(Debug, Clone, PartialEq)]
pub struct GrcEntry {
    pub a: Complex64,
    pub a_prime: Complex64,
    pub v: f64,
    pub v_prime: f64,
    pub p: BandVector,
    pub q: BandVector,
}

impl GrcEntry {
    /// Seed for the pair `(k, k)`; `a` and `a'` do not exist there and are set to zero.
    pub fn diagonal(n: usize, k: usize, r_kk: f64) -> Self {
        Self {
            a: Complex64::new(0.0, 0.0),
            a_prime: Complex64::new(0.0, 0.0),
            v: r_kk,
            v_prime: r_kk,
            p: BandVector::basis(n, k),
            q: BandVector::basis(n, k),
        }
    }

    /// Largest relative deviation of any field from `other`.
    ///
    /// Scalars use `|x - y| / max(|x|, |y|)`; vectors use the max-norm of the
    /// difference over the max-norm of `other` (at least 1 because of the unit head).
    pub fn max_rel_deviation(&self, other: &Self) -> f64 {
        let scalar = |x: Complex64, y: Complex64| {
            if x == y {
                0.0
            } else {
                (x - y).norm() / x.norm().max(y.norm())
            }
        };
        let vector =
            |x: &BandVector, y: &BandVector| x.max_abs_diff(y) / y.max_abs().max(f64::MIN_POSITIVE);
        [
            scalar(self.a, other.a),
            scalar(self.a_prime, other.a_prime),
            scalar(self.v.into(), other.v.into()),
            scalar(self.v_prime.into(), other.v_prime.into()),
            vector(&self.p, &other.p),
            vector(&self.q, &other.q),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// One recursion step: from the parents `p̂ = p(k,l-1)`, `q̂ = q(k+1,l)` and
/// `v̂ = v(k+1,l)`, `v̂' = v'(k,l-1)` to the entry at `(k, l)`.
#[allow(clippy::too_many_arguments)]
pub fn grc_step<M: MatrixAccess + ?Sized>(
    p_hat: &BandVector,
    q_hat: &BandVector,
    v_hat: f64,
    v_hat_prime: f64,
    m: &M,
    k: usize,
    l: usize,
    counter: &mut OpCounter,
) -> Result<GrcEntry> {
    debug_assert!(p_hat.lo() >= k && p_hat.hi() < l);
    debug_assert!(q_hat.lo() > k && q_hat.hi() <= l);
    for v in [v_hat, v_hat_prime] {
        if !v.is_finite() || v < f64::MIN_POSITIVE {
            return Err(Error::NumericalBreakdown {
                k,
                l,
                reason: "parent prediction error underflowed",
            });
        }
    }
    let num = column_inner(p_hat, m, l, counter);
    let a = num / v_hat;
    let a_prime = num.conj() / v_hat_prime;
    let prod = a * a_prime;
    let factor = Complex64::new(1.0, 0.0) - prod;
    counter.record(1, 1, 2);
    if factor.im.abs() > IMAG_TOLERANCE * (1.0 + prod.norm()) {
        return Err(Error::NumericalBreakdown {
            k,
            l,
            reason: "1 - a*a' is not real",
        });
    }
    if factor.re.is_nan() || factor.re <= PD_TOLERANCE {
        return Err(Error::NotPositiveDefinite {
            k,
            l,
            factor: factor.re,
        });
    }
    let p = p_hat.sub_scaled(a, q_hat, counter);
    let q = q_hat.sub_scaled(a_prime, p_hat, counter);
    counter.record(2, 0, 0);
    Ok(GrcEntry {
        a,
        a_prime,
        v: v_hat * factor.re,
        v_prime: v_hat_prime * factor.re,
        p,
        q,
    })
}

/// Complete coefficient tables for every pair `0 ≤ k ≤ l ≤ n-1`.
#[derive(Debug, Clone)]
pub struct CoeffTables {
    n: usize,
    entries: Vec<Option<GrcEntry>>,
}

impl CoeffTables {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, l: usize) -> Result<&GrcEntry> {
        if k > l || l >= self.n {
            return Err(Error::IndexOutOfRange {
                i: k,
                j: l,
                n: self.n,
            });
        }
        self.entries[k * self.n + l]
            .as_ref()
            .ok_or(Error::InternalIndexError { k, l })
    }

    /// Pairs in the order they were filled (diagonal by diagonal).
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |d| (0..n - d).map(move |k| (k, k + d)))
    }
}

pub fn grc_full<M: MatrixAccess + ?Sized>(m: &M) -> Result<CoeffTables> {
    grc_full_counted(m, &mut OpCounter::new())
}

/// Fills the tables by increasing `l - k`, each off-diagonal pair by [`grc_step`].
pub fn grc_full_counted<M: MatrixAccess + ?Sized>(
    m: &M,
    counter: &mut OpCounter,
) -> Result<CoeffTables> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::SizeMismatch {
            expected: 1,
            actual: 0,
        });
    }
    let mut entries: Vec<Option<GrcEntry>> = vec![None; n * n];
    for k in 0..n {
        let r = m.entry(k, k);
        if r.re.is_nan() || r.re <= PD_TOLERANCE * r.re.abs().max(1.0) {
            return Err(Error::NotPositiveDefinite {
                k,
                l: k,
                factor: r.re,
            });
        }
        entries[k * n + k] = Some(GrcEntry::diagonal(n, k, r.re));
    }
    for d in 1..n {
        for k in 0..n - d {
            let l = k + d;
            let left = entries[k * n + l - 1]
                .as_ref()
                .expect("filled on previous diagonal");
            let below = entries[(k + 1) * n + l]
                .as_ref()
                .expect("filled on previous diagonal");
            let e = grc_step(&left.p, &below.q, below.v, left.v_prime, m, k, l, counter)?;
            entries[k * n + l] = Some(e);
        }
    }
    Ok(CoeffTables { n, entries })
}
