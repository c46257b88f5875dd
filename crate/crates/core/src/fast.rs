//! Fast generalized reflection coefficients for Hermitian Toeplitz-block-Toeplitz
//! matrices.
//!
//! Two structural facts cut the work of the general recursion from `O(n³)` to
//! `O(n1³·n2²)`:
//!
//! * block shift: the pair `(k, l)` carries the same coefficients as
//!   `(k mod n1, l - k sec n1)`, with vectors moved by `k sec n1`;
//! * exchange: the pair and its antidiagonal mirror `(k', l')` within the block
//!   cell are related by `a = conj(a'_mirror)`, `a' = conj(a_mirror)`,
//!   `v = v'_mirror`, `v' = v_mirror`, `p = U^{k-k'} conj(reverse(q_mirror))`,
//!   `q = U^{k-k'} conj(reverse(p_mirror))`.
//!
//! Only the canonical half is computed: `k < n1` and `k ≤ k'`, i.e.
//! `k + l mod n1 ≤ n1 - 1`. Everything else is reconstructed by [`CanonicalTables::fetch`].

use crate::band::BandVector;
use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::factor::{widen_to_tail, InverseFactor};
use crate::generator::TbtGenerator;
use crate::index::{index_exchange, mod_op, sec_op};
use crate::oracle::{grc_step, GrcEntry};

/// Where a step takes one of its parent tuples from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// A stored canonical entry.
    Stored { k: usize, l: usize },
    /// The exchange image of a stored entry: `p̂ = U^{k-k'} conj(reverse(q))`, `v̂' = v`.
    Exchanged { k: usize, l: usize },
    /// `q̂ = U conj(reverse(p̂))`, `v̂ = v̂'`, used when the pair sits on the antidiagonal.
    ReflectedFromP,
}

/// One invocation of the step routine in the fast schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub k: usize,
    pub l: usize,
    pub p_source: Source,
    pub q_source: Source,
}

/// True when `(k, l)` belongs to the stored canonical half (diagonal seeds included).
pub fn is_canonical(k: usize, l: usize, n1: usize, n: usize) -> bool {
    k < n1 && k <= l && l < n && (k == l || k + mod_op(l, n1) < n1)
}

/// The loop structure of the fast algorithm, without doing any arithmetic.
///
/// For each block diagonal `d2` the lower-triangle loop (skipped for `d2 = 0`)
/// walks `k = u + d1`, `l = d2·n1 + u` with `d1` descending; the upper-triangle
/// loop walks `k = u`, `l = d2·n1 + u + d1` with `d1` ascending. Pairs with
/// `k > k'` are skipped; their values come from the exchange.
pub fn schedule(n1: usize, n2: usize) -> Vec<Step> {
    let mut steps = Vec::new();
    let push = |steps: &mut Vec<Step>, k: usize, l: usize, first_in_row: bool| {
        let k_mirror = n1 - 1 - mod_op(l, n1);
        if k > k_mirror {
            return;
        }
        let p_source = if first_in_row {
            let (mk, ml) = index_exchange(k, l - 1, n1);
            Source::Exchanged { k: mk, l: ml }
        } else {
            Source::Stored { k, l: l - 1 }
        };
        let q_source = if k == k_mirror {
            Source::ReflectedFromP
        } else {
            Source::Stored { k: k + 1, l }
        };
        steps.push(Step {
            k,
            l,
            p_source,
            q_source,
        });
    };
    for d2 in 0..n2 {
        if d2 != 0 {
            for d1 in (0..n1).rev() {
                for u in 0..n1 - d1 {
                    push(&mut steps, u + d1, d2 * n1 + u, u == 0);
                }
            }
        }
        for d1 in 1..n1 {
            for u in 0..n1 - d1 {
                push(&mut steps, u, d2 * n1 + u + d1, false);
            }
        }
    }
    steps
}

/// Coefficients of the canonical half of a TBT matrix.
#[derive(Debug, Clone)]
pub struct CanonicalTables {
    g: TbtGenerator,
    entries: Vec<Option<GrcEntry>>,
}

impl CanonicalTables {
    pub fn generator(&self) -> &TbtGenerator {
        &self.g
    }

    fn slot(&self, k: usize, l: usize) -> usize {
        k * self.g.n() + l
    }

    /// A stored entry; anything else is an [`Error::InternalIndexError`].
    pub fn stored(&self, k: usize, l: usize) -> Result<&GrcEntry> {
        if !is_canonical(k, l, self.g.n1(), self.g.n()) {
            return Err(Error::InternalIndexError { k, l });
        }
        self.entries[self.slot(k, l)]
            .as_ref()
            .ok_or(Error::InternalIndexError { k, l })
    }

    /// Keys currently held, in index order.
    pub fn stored_keys(&self) -> Vec<(usize, usize)> {
        let n = self.g.n();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_some())
            .map(|(i, _)| (i / n, i % n))
            .collect()
    }

    /// The full tuple at any `0 ≤ k ≤ l ≤ n-1`.
    ///
    /// Diagonal pairs are synthesized from `c(0,0)`. Other pairs are reduced to
    /// the first block row; if the reduced pair is not stored, its mirror is and
    /// the exchange relations apply. The result is then shifted back by `k sec n1`.
    pub fn fetch(&self, k: usize, l: usize) -> Result<GrcEntry> {
        let n = self.g.n();
        let n1 = self.g.n1();
        if k > l || l >= n {
            return Err(Error::IndexOutOfRange { i: k, j: l, n });
        }
        if k == l {
            return Ok(GrcEntry::diagonal(n, k, self.g.c00()));
        }
        let tau = sec_op(k, n1);
        let (k0, l0) = (k - tau, l - tau);
        let base = if is_canonical(k0, l0, n1, n) {
            self.stored(k0, l0)?.clone()
        } else {
            let (mk, ml) = index_exchange(k0, l0, n1);
            exchange(self.stored(mk, ml)?, k0 as isize - mk as isize)?
        };
        if tau == 0 {
            return Ok(base);
        }
        Ok(GrcEntry {
            p: base.p.shift(tau as isize)?,
            q: base.q.shift(tau as isize)?,
            ..base
        })
    }

    /// Column `k` of the inverse factor: `(p(k, n-1), v'(k, n-1))`.
    pub fn column(&self, k: usize) -> Result<(BandVector, f64)> {
        let e = self.fetch(k, self.g.n() - 1)?;
        Ok((widen_to_tail(&e.p), e.v_prime))
    }
}

/// Exchange image of a mirror entry, with vectors moved by `shift = k - k'`.
fn exchange(m: &GrcEntry, shift: isize) -> Result<GrcEntry> {
    Ok(GrcEntry {
        a: m.a_prime.conj(),
        a_prime: m.a.conj(),
        v: m.v_prime,
        v_prime: m.v,
        p: m.q.mirrored(shift)?,
        q: m.p.mirrored(shift)?,
    })
}

pub fn tbt_grc(g: &TbtGenerator) -> Result<CanonicalTables> {
    tbt_grc_counted(g, &mut OpCounter::new())
}

/// Runs the fast recursion, reading the matrix only through the generator.
pub fn tbt_grc_counted(g: &TbtGenerator, counter: &mut OpCounter) -> Result<CanonicalTables> {
    let (n1, n2, n) = (g.n1(), g.n2(), g.n());
    let mut tables = CanonicalTables {
        g: g.clone(),
        entries: vec![None; n1 * n],
    };
    for k in 0..n1 {
        let slot = tables.slot(k, k);
        tables.entries[slot] = Some(GrcEntry::diagonal(n, k, g.c00()));
    }
    for step in schedule(n1, n2) {
        let Step { k, l, .. } = step;
        let (p_hat, v_hat_prime) = match step.p_source {
            Source::Stored { k: sk, l: sl } => {
                let e = tables.stored(sk, sl)?;
                (e.p.clone(), e.v_prime)
            }
            Source::Exchanged { k: mk, l: ml } => {
                let e = tables.stored(mk, ml)?;
                (e.q.mirrored(k as isize - mk as isize)?, e.v)
            }
            Source::ReflectedFromP => return Err(Error::InternalIndexError { k, l: l - 1 }),
        };
        let (q_hat, v_hat) = match step.q_source {
            Source::Stored { k: sk, l: sl } => {
                let e = tables.stored(sk, sl)?;
                (e.q.clone(), e.v)
            }
            Source::ReflectedFromP => (p_hat.mirrored(1)?, v_hat_prime),
            Source::Exchanged { .. } => return Err(Error::InternalIndexError { k: k + 1, l }),
        };
        let entry = grc_step(&p_hat, &q_hat, v_hat, v_hat_prime, g, k, l, counter)?;
        let slot = tables.slot(k, l);
        tables.entries[slot] = Some(entry);
    }
    Ok(tables)
}

/// Inverse factor of the TBT matrix assembled from the fast tables.
pub fn tbt_factorization(g: &TbtGenerator) -> Result<InverseFactor> {
    let tables = tbt_grc(g)?;
    factor_from_tables(&tables)
}

pub fn factor_from_tables(tables: &CanonicalTables) -> Result<InverseFactor> {
    let n = tables.generator().n();
    let (columns, diag): (Vec<_>, Vec<_>) = (0..n)
        .map(|k| tables.column(k))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    InverseFactor::verified(columns, diag, tables.generator())
}
