use num_complex::Complex64;

/// Read-only `(i, j) -> r_{i,j}` view of a square matrix.
///
/// The dense oracle reads a [`DenseHermitian`](crate::DenseHermitian); the fast
/// algorithm reads a [`TbtGenerator`](crate::TbtGenerator) directly, never a
/// materialized matrix.
pub trait MatrixAccess {
    fn dim(&self) -> usize;

    /// Entry `(i, j)`; both indices must be below [`dim`](MatrixAccess::dim).
    fn entry(&self, i: usize, j: usize) -> Complex64;
}

impl<T: MatrixAccess + ?Sized> MatrixAccess for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn entry(&self, i: usize, j: usize) -> Complex64 {
        (**self).entry(i, j)
    }
}
