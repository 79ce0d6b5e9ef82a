//! Square matrices over a ring and their division-free determinant.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `n × n` matrix from an entry function of `(row, col)`, both
    /// 0-based.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<E>) -> Result<Self> {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j)?);
            }
        }
        Ok(Matrix {
            rows: n,
            cols: n,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        // chunks(0) panics, so an empty matrix yields no rows explicitly
        let width = self.cols.max(1);
        self.data.chunks(width).take(self.rows)
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Determinant by Laplace expansion along rows, memoized over the set of
/// columns already used.
///
/// `minor[S]` holds the determinant of the submatrix on rows `0..|S|` and
/// columns `S`. Needs `O(2ⁿ·n)` ring operations and no division, so it works
/// over any commutative ring. The 0×0 determinant is one.
pub fn ring_determinant<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem> {
    if m.nrows() != m.ncols() {
        return Err(Error::Shape(format!(
            "determinant of a non-square {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    let n = m.nrows();
    if n >= usize::BITS as usize {
        return Err(Error::Shape(format!(
            "matrix too large for subset expansion: n = {n}"
        )));
    }
    let full = (1usize << n) - 1;
    let mut minor = vec![ring.zero(); full + 1];
    minor[0] = ring.one();
    for set in 1..=full {
        let row = set.count_ones() as usize - 1;
        let mut acc = ring.zero();
        for col in 0..n {
            if set & (1 << col) == 0 {
                continue;
            }
            let entry = m.get(row, col);
            let rest = set & !(1 << col);
            if ring.is_zero(entry) || ring.is_zero(&minor[rest]) {
                continue;
            }
            let term = ring.mul(entry, &minor[rest]);
            // sign (-1)^{row + position of col in set} = (-1)^{#cols in set above col}
            let above = (set >> (col + 1)).count_ones();
            acc = if above % 2 == 0 {
                ring.add(&acc, &term)
            } else {
                ring.sub(&acc, &term)
            };
        }
        minor[set] = acc;
    }
    Ok(minor[full].clone())
}
