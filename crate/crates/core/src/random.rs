//! Reproducible positive-definite TBT instances.
//!
//! The pseudo-random source is SplitMix64, written out here so other
//! implementations can regenerate identical instances from a seed:
//!
//! ```text
//! state  = state + 0x9E3779B97F4A7C15            (wrapping)
//! z      = state
//! z      = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (wrapping)
//! z      = (z ^ (z >> 27)) * 0x94D049BB133111EB  (wrapping)
//! output = z ^ (z >> 31)
//! uniform in [-1, 1): (output >> 11) * 2^-53 * 2 - 1
//! ```
//!
//! A complex field `x(u, v)` is drawn on a `(n1 + L) × (n2 + L)` grid,
//! `L = max(n1, n2)`, row `v` (block direction) outer, `u` inner, real part
//! before imaginary part. The generator is its biased autocorrelation
//! `c(d, s) = (1/N) Σ x(u, v)·conj(x(u - s, v - d))` with the field taken as
//! zero off the grid, which is a Gram matrix and therefore positive semidefinite.
//! Finally `c(0,0)` is multiplied by `1 + ridge`.

use num_complex::Complex64;

use crate::generator::TbtGenerator;

/// SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[-1, 1)`.
    pub fn next_signed_unit(&mut self) -> f64 {
        let u = (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        2.0 * u - 1.0
    }
}

pub const DEFAULT_RIDGE: f64 = 1e-6;

/// Draws a positive-definite TBT generator; identical inputs give bit-identical output.
pub fn generate_pd_tbt(n1: usize, n2: usize, seed: u64, ridge: f64) -> TbtGenerator {
    assert!(n1 >= 1 && n2 >= 1, "sizes must be positive");
    let big_l = n1.max(n2);
    let (nu, nv) = (n1 + big_l, n2 + big_l);
    let mut rng = SplitMix64::new(seed);
    let mut field = Vec::with_capacity(nu * nv);
    for _ in 0..nu * nv {
        let re = rng.next_signed_unit();
        let im = rng.next_signed_unit();
        field.push(Complex64::new(re, im));
    }
    let x = |u: usize, v: usize| field[v * nu + u];
    let norm = 1.0 / (nu * nv) as f64;

    let autocorr = |d: usize, s: isize| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for v in d..nv {
            for u in 0..nu {
                let us = u as isize - s;
                if us < 0 || us >= nu as isize {
                    continue;
                }
                acc += x(u, v) * x(us as usize, v - d).conj();
            }
        }
        acc * norm
    };

    let w = 2 * n1 - 1;
    let mut values = vec![vec![Complex64::new(0.0, 0.0); w]; n2];
    for (d, row) in values.iter_mut().enumerate() {
        for s in -(n1 as isize - 1)..n1 as isize {
            let slot = (s + n1 as isize - 1) as usize;
            row[slot] = if d == 0 && s < 0 {
                Complex64::new(0.0, 0.0)
            } else {
                autocorr(d, s)
            };
        }
    }
    for s in 1..n1 {
        values[0][n1 - 1 - s] = values[0][n1 - 1 + s].conj();
    }
    values[0][n1 - 1].im = 0.0;
    TbtGenerator::new(n1, n2, values)
        .expect("autocorrelation generator is valid")
        .with_ridge(ridge)
}
