//! Integer index machinery: remainder, block floor and the antidiagonal exchange.

/// Nonnegative remainder `a - b·floor(a/b)`.
#[inline]
pub fn mod_op(a: usize, b: usize) -> usize {
    debug_assert!(b >= 1);
    a % b
}

/// Largest multiple of `b` not exceeding `a`; the complement of [`mod_op`].
#[inline]
pub fn sec_op(a: usize, b: usize) -> usize {
    a - mod_op(a, b)
}

/// Mirror of the pair `(k, l)` with respect to the antidiagonal of its block cell.
///
/// Returns `(k', l')` with
/// `k' = k sec n1 + n1 - 1 - l mod n1` and `l' = l sec n1 + n1 - 1 - k mod n1`.
/// The distance is preserved: `l' - k' == l - k`.
#[inline]
pub fn index_exchange(k: usize, l: usize, n1: usize) -> (usize, usize) {
    debug_assert!(k <= l);
    (
        sec_op(k, n1) + n1 - 1 - mod_op(l, n1),
        sec_op(l, n1) + n1 - 1 - mod_op(k, n1),
    )
}
