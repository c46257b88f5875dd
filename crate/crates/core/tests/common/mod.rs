//! Test-only oracles, independent of the library's recursion code paths.
#![allow(dead_code)]

use num_complex::Complex64;
use tbt_grc::{generate_pd_tbt, CMatrix, TbtGenerator};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dense matrix assembled block by block: block `(I, J)` is the Toeplitz block
/// `R_{J-I}` built from the generator, `R_{-d} = R_dᴴ`.
pub fn block_assembly(g: &TbtGenerator) -> CMatrix {
    let (n1, n2) = (g.n1(), g.n2());
    let toeplitz = |d: usize| -> Vec<Vec<Complex64>> {
        (0..n1)
            .map(|a| (0..n1).map(|b| g.c(d, b as isize - a as isize)).collect())
            .collect()
    };
    let blocks: Vec<_> = (0..n2).map(toeplitz).collect();
    let n = n1 * n2;
    let mut m = vec![vec![c(0.0, 0.0); n]; n];
    for bi in 0..n2 {
        for bj in 0..n2 {
            for a in 0..n1 {
                for b in 0..n1 {
                    m[bi * n1 + a][bj * n1 + b] = if bj >= bi {
                        blocks[bj - bi][a][b]
                    } else {
                        blocks[bi - bj][b][a].conj()
                    };
                }
            }
        }
    }
    CMatrix::from_fn(n, n, |i, j| m[i][j])
}

/// Textbook Gauss–Jordan inverse with partial pivoting.
pub fn gauss_jordan_inverse(m: &CMatrix) -> CMatrix {
    let n = m.rows();
    let mut a: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            let mut row: Vec<Complex64> = (0..n).map(|j| m.get(i, j)).collect();
            row.extend((0..n).map(|j| if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
            .unwrap();
        a.swap(col, piv);
        let d = a[col][col];
        for v in a[col].iter_mut() {
            *v /= d;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (v, p) in a[r].iter_mut().zip(pivot_row) {
                    *v -= f * p;
                }
            }
        }
    }
    CMatrix::from_fn(n, n, |i, j| a[i][n + j])
}

/// Random Hermitian positive-definite matrix `B Bᴴ + n·I` from a seed.
pub fn random_pd(n: usize, seed: u64) -> CMatrix {
    let mut rng = tbt_grc::SplitMix64::new(seed);
    let b = CMatrix::from_fn(n, n, |_, _| {
        let re = rng.next_signed_unit();
        c(re, rng.next_signed_unit())
    });
    let mut m = b.matmul(&b.conj_transpose());
    for i in 0..n {
        m[(i, i)] += c(n as f64, 0.0);
    }
    m.hermitian_part()
}

pub fn instance(n1: usize, n2: usize, seed: u64) -> TbtGenerator {
    generate_pd_tbt(n1, n2, seed, tbt_grc::random::DEFAULT_RIDGE)
}

/// Generator whose matrix is not positive definite: tiny `c(0,0)`, large lags.
pub fn indefinite(n1: usize, n2: usize) -> TbtGenerator {
    let g = instance(n1, n2, 1);
    let g = g.with_value(0, 0, c(0.01, 0.0)).unwrap();
    if n2 >= 2 {
        g.with_value(1, 0, c(1.0, 0.5)).unwrap()
    } else {
        g.with_value(0, 1, c(1.0, 0.5)).unwrap()
    }
}

/// Relative Frobenius distance `‖x − y‖ / ‖y‖`.
pub fn rel_frobenius(x: &CMatrix, y: &CMatrix) -> f64 {
    (x - y).frobenius_norm() / y.frobenius_norm()
}
