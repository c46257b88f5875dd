//! Inversion of Hermitian positive-definite Toeplitz-block-Toeplitz (TBT)
//! matrices through generalized reflection coefficients.
//!
//! The crate has three solvers that share one set of types:
//!
//! * [`grc_full`]: the reflection-coefficient recursion for any Hermitian
//!   positive-definite matrix, `O(n³)`. It is the reference path.
//! * [`tbt_grc`]: the TBT-specialized recursion. It computes only the canonical
//!   half of the first block row and reconstructs the rest through block shifts
//!   and the antidiagonal exchange, `O(n1³·n2²)`.
//! * [`wwr_recurse`]: the block-Levinson (Whittle–Wiggins–Robinson) recursion
//!   used as a baseline.
//!
//! Both coefficient routes produce an [`InverseFactor`] with
//! `R⁻¹ = conj(Rᴾ)·(Dᴾ)⁻¹·Rᴾᵀ`.
//!
//! ```
//! use tbt_grc::{generate_pd_tbt, tbt_factorization, MatrixAccess};
//! use num_complex::Complex64;
//!
//! let g = generate_pd_tbt(3, 4, 7, 1e-6);
//! let f = tbt_factorization(&g).unwrap();
//! let b = vec![Complex64::new(1.0, 0.0); g.n()];
//! let x = f.apply_inverse(&b).unwrap();
//! let rx0: Complex64 = (0..g.n()).map(|j| g.entry(0, j) * x[j]).sum();
//! assert!((rx0 - b[0]).norm() < 1e-10);
//! ```

mod access;
mod band;
mod counter;
mod dense;
mod error;
mod factor;
mod generator;
mod textio;

pub mod cost;
pub mod fast;
pub mod index;
pub mod oracle;
pub mod random;
pub mod verify;
pub mod wwr;

pub use access::MatrixAccess;
pub use band::{column_inner, BandVector};
pub use counter::OpCounter;
pub use dense::{CMatrix, DenseHermitian};
pub use error::{Error, Result};
pub use factor::{build_factorization, InverseFactor};
pub use generator::TbtGenerator;
pub use textio::{format_sig6, Lines};

pub use cost::{comparison_table, opc_closed_form, opc_triple_sum, opcwwr, CostReport};
pub use fast::{tbt_factorization, tbt_grc, tbt_grc_counted, CanonicalTables};
pub use index::{index_exchange, mod_op, sec_op};
pub use oracle::{grc_full, grc_full_counted, grc_step, CoeffTables, GrcEntry};
pub use random::{generate_pd_tbt, SplitMix64};
pub use verify::{run_verify, VerifyReport};
pub use wwr::{wwr_recurse, wwr_recurse_counted, wwr_residual, WwrState};
