//! Partitions, Young diagrams and tableaux.
//!
//! Cells are addressed 1-based as `(row, column)`, rows counted from the
//! top. Entries of a tableau are stored row-major.

mod bits;
mod oyt;

pub use bits::{bit_tableau_stats, build_bit_tableau, BitStats, BitTableau};
pub use oyt::{enumerate_oyt, OrderedFilling, OytIter};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts `λ₁ ≥ … ≥ λ_h ≥ 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `λ_i`, 1-based; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.0.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Number of rows `h`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of the first row, `λ₁` (zero for the empty partition).
    pub fn width(&self) -> usize {
        self.part(1)
    }

    /// `λ′` with `λ′_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        Partition(
            (1..=self.width())
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, cell: CellIndex) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells of `D(λ)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = CellIndex> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| CellIndex::new(i + 1, j)))
    }

    /// Cells with no neighbour to the right and none below, top to bottom.
    pub fn corners(&self) -> Vec<CellIndex> {
        self.cells()
            .filter(|c| !self.contains(c.right()) && !self.contains(c.below()))
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with `|λ| ≤ n`, ordered by size, including the empty one.
    pub fn all_up_to_size(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Row-major offset of an in-diagram cell.
    fn offset(&self, cell: CellIndex) -> usize {
        self.0[..cell.row - 1].iter().sum::<usize>() + cell.col - 1
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A cell `(i, j)` of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellIndex {
    pub row: usize,
    pub col: usize,
}

impl CellIndex {
    pub const fn new(row: usize, col: usize) -> Self {
        CellIndex { row, col }
    }

    pub fn right(self) -> Self {
        CellIndex::new(self.row, self.col + 1)
    }

    pub fn below(self) -> Self {
        CellIndex::new(self.row + 1, self.col)
    }

    pub fn diagonal(self) -> Self {
        CellIndex::new(self.row + 1, self.col + 1)
    }

    /// Content `j − i`, the diagonal the cell lies on.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn transpose(self) -> Self {
        CellIndex::new(self.col, self.row)
    }
}

/// One entry per cell of a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapedTableau<E> {
    shape: Partition,
    entries: Vec<E>,
}

impl<E: Clone> ShapedTableau<E> {
    pub fn new(shape: Partition, entries: Vec<E>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::Shape(format!(
                "shape {shape} has {} cells but {} entries were given",
                shape.size(),
                entries.len()
            )));
        }
        Ok(ShapedTableau { shape, entries })
    }

    /// Builds a tableau from its rows; the shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Ok(ShapedTableau {
            shape,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(shape: Partition, mut f: impl FnMut(CellIndex) -> E) -> Self {
        let entries = shape.cells().map(&mut f).collect();
        ShapedTableau { shape, entries }
    }

    pub fn try_from_fn(
        shape: Partition,
        mut f: impl FnMut(CellIndex) -> Result<E>,
    ) -> Result<Self> {
        let entries = shape.cells().map(&mut f).collect::<Result<_>>()?;
        Ok(ShapedTableau { shape, entries })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn get(&self, cell: CellIndex) -> Option<&E> {
        self.shape
            .contains(cell)
            .then(|| &self.entries[self.shape.offset(cell)])
    }

    /// Iterates `(cell, entry)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (CellIndex, &E)> {
        self.shape.cells().zip(&self.entries)
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut rest = &self.entries[..];
        for &len in self.shape.parts() {
            let (row, tail) = rest.split_at(len);
            out.push(row.to_vec());
            rest = tail;
        }
        out
    }

    /// The transposed tableau `k′` of shape `λ′` with `k′_{i,j} = k_{j,i}`.
    pub fn conjugate(&self) -> ShapedTableau<E> {
        let shape = self.shape.conjugate();
        let entries = shape
            .cells()
            .map(|c| self.entries[self.shape.offset(c.transpose())].clone())
            .collect();
        ShapedTableau { shape, entries }
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> ShapedTableau<F> {
        ShapedTableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }
}
