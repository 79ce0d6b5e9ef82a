use super::{CellIndex, Partition, ShapedTableau};

/// An ordered Young tableau `m` together with its vertical and horizontal
/// equality counts `v(m)` and `h(m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedFilling {
    pub tableau: ShapedTableau<usize>,
    pub v_count: usize,
    pub h_count: usize,
}

impl OrderedFilling {
    /// Wraps a filling and counts its equalities. Does not check the order
    /// conditions; see [`OrderedFilling::is_ordered`].
    pub fn from_tableau(tableau: ShapedTableau<usize>) -> Self {
        let mut v_count = 0;
        let mut h_count = 0;
        for (cell, m) in tableau.iter() {
            if tableau.get(cell.below()) == Some(m) {
                v_count += 1;
            }
            if tableau.get(cell.right()) == Some(m) {
                h_count += 1;
            }
        }
        OrderedFilling {
            tableau,
            v_count,
            h_count,
        }
    }

    /// Row and column weak increase, strict increase along diagonals, and
    /// entries in `1..n`.
    pub fn is_ordered(&self, n: usize) -> bool {
        let t = &self.tableau;
        t.iter().all(|(cell, &m)| {
            m >= 1
                && m < n
                && t.get(cell.below()).is_none_or(|&x| m <= x)
                && t.get(cell.right()).is_none_or(|&x| m <= x)
                && t.get(cell.diagonal()).is_none_or(|&x| m < x)
        })
    }
}

/// Neighbours of a cell that come earlier in row-major order and bound its
/// entry from below.
#[derive(Debug, Clone, Copy)]
struct Bounds {
    left: Option<usize>,
    up: Option<usize>,
    up_left: Option<usize>,
}

/// Streams `OYT_N(λ)` in lexicographic order of the row-major entry
/// sequence.
///
/// Backtracking fills cells in row-major order. Every constraint on a cell
/// is a lower bound coming from its left, upper or upper-left neighbour, all
/// of which are filled earlier, so each partial filling that satisfies its
/// bounds extends to a valid one by setting the remaining cells to their
/// minimal values, when those stay below `N`.
#[derive(Debug, Clone)]
pub struct OytIter {
    shape: Partition,
    bounds: Vec<Bounds>,
    entries: Vec<usize>,
    n: usize,
    started: bool,
    done: bool,
}

impl OytIter {
    fn new(shape: Partition, n: usize) -> Self {
        let cells: Vec<CellIndex> = shape.cells().collect();
        let index = |c: CellIndex| shape.contains(c).then(|| shape.offset(c));
        let bounds = cells
            .iter()
            .map(|&c| Bounds {
                left: (c.col > 1)
                    .then(|| index(CellIndex::new(c.row, c.col - 1)))
                    .flatten(),
                up: (c.row > 1)
                    .then(|| index(CellIndex::new(c.row - 1, c.col)))
                    .flatten(),
                up_left: (c.row > 1 && c.col > 1)
                    .then(|| index(CellIndex::new(c.row - 1, c.col - 1)))
                    .flatten(),
            })
            .collect();
        let entries = vec![0; cells.len()];
        OytIter {
            shape,
            bounds,
            entries,
            n,
            started: false,
            done: false,
        }
    }

    fn lower_bound(&self, pos: usize) -> usize {
        let b = self.bounds[pos];
        let mut low = 1;
        if let Some(k) = b.left {
            low = low.max(self.entries[k]);
        }
        if let Some(k) = b.up {
            low = low.max(self.entries[k]);
        }
        if let Some(k) = b.up_left {
            low = low.max(self.entries[k] + 1);
        }
        low
    }

    /// Sets cells `from..` to their minimal admissible values.
    fn fill_minimal(&mut self, from: usize) -> bool {
        for pos in from..self.entries.len() {
            let low = self.lower_bound(pos);
            if low >= self.n {
                return false;
            }
            self.entries[pos] = low;
        }
        true
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return self.fill_minimal(0);
        }
        for pos in (0..self.entries.len()).rev() {
            if self.entries[pos] + 1 < self.n {
                self.entries[pos] += 1;
                if self.fill_minimal(pos + 1) {
                    return true;
                }
            }
        }
        false
    }

    fn current(&self) -> OrderedFilling {
        let tableau = ShapedTableau {
            shape: self.shape.clone(),
            entries: self.entries.clone(),
        };
        let mut v_count = 0;
        let mut h_count = 0;
        for (pos, b) in self.bounds.iter().enumerate() {
            let m = self.entries[pos];
            if b.up.is_some_and(|k| self.entries[k] == m) {
                v_count += 1;
            }
            if b.left.is_some_and(|k| self.entries[k] == m) {
                h_count += 1;
            }
        }
        OrderedFilling {
            tableau,
            v_count,
            h_count,
        }
    }
}

impl Iterator for OytIter {
    type Item = OrderedFilling;

    fn next(&mut self) -> Option<OrderedFilling> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All ordered Young tableaux of shape `λ` with entries in `1..n`.
///
/// The empty shape yields one empty filling; `n = 1` with a nonempty shape
/// yields nothing.
pub fn enumerate_oyt(shape: &Partition, n: usize) -> OytIter {
    OytIter::new(shape.clone(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Every filling of `λ` with entries in `1..n`, filtered by the order
    /// conditions.
    fn brute_force(shape: &Partition, n: usize) -> Vec<OrderedFilling> {
        let cells = shape.size();
        let mut out = Vec::new();
        if n <= 1 && cells > 0 {
            return out;
        }
        let base = n.saturating_sub(1).max(1);
        let total = base.pow(cells as u32);
        for code in 0..total {
            let mut c = code;
            let mut entries = vec![0; cells];
            for e in entries.iter_mut().rev() {
                *e = c % base + 1;
                c /= base;
            }
            let f =
                OrderedFilling::from_tableau(ShapedTableau::new(shape.clone(), entries).unwrap());
            if f.is_ordered(n) {
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn square_n4_contains_listed_elements() {
        let all: Vec<_> = enumerate_oyt(&p(&[2, 2]), 4)
            .map(|f| f.tableau.rows())
            .collect();
        assert!(all.contains(&vec![vec![1, 1], vec![1, 2]]));
        assert!(all.contains(&vec![vec![1, 2], vec![1, 2]]));
        assert!(all.contains(&vec![vec![2, 3], vec![3, 3]]));
        assert!(!all.contains(&vec![vec![1, 1], vec![1, 1]]));
    }

    #[test]
    fn square_n4_count_matches_brute_force() {
        let oracle = brute_force(&p(&[2, 2]), 4).len();
        assert_eq!(oracle, 17);
        assert_eq!(enumerate_oyt(&p(&[2, 2]), 4).count(), oracle);
    }

    #[test]
    fn equality_counts_example() {
        let t =
            ShapedTableau::from_rows(vec![vec![2, 2, 3], vec![2, 3], vec![2, 4], vec![2]]).unwrap();
        let f = OrderedFilling::from_tableau(t);
        assert!(f.is_ordered(5));
        assert_eq!((f.v_count, f.h_count), (3, 1));
        let found = enumerate_oyt(&p(&[3, 2, 2, 1]), 5)
            .find(|g| g.tableau == f.tableau)
            .unwrap();
        assert_eq!((found.v_count, found.h_count), (3, 1));
    }

    #[test]
    fn trivial_streams() {
        let empty: Vec<_> = enumerate_oyt(&Partition::empty(), 1).collect();
        assert_eq!(empty.len(), 1);
        assert_eq!((empty[0].v_count, empty[0].h_count), (0, 0));
        assert_eq!(enumerate_oyt(&p(&[1]), 1).count(), 0);
        assert_eq!(enumerate_oyt(&p(&[2, 1]), 2).count(), 1);
        assert_eq!(enumerate_oyt(&p(&[2, 2]), 2).count(), 0);
        assert_eq!(enumerate_oyt(&p(&[1]), 5).count(), 4);
    }

    #[test]
    fn agrees_with_brute_force_small() {
        for lam in Partition::all_up_to_size(5) {
            for n in 1..=5 {
                let fast: Vec<_> = enumerate_oyt(&lam, n).collect();
                let slow = brute_force(&lam, n);
                assert_eq!(fast, slow, "λ = {lam}, N = {n}");
            }
        }
    }

    #[test]
    fn counts_bounded_and_transpose_symmetric() {
        for lam in Partition::all_up_to_size(5) {
            for n in 1..=5 {
                for f in enumerate_oyt(&lam, n) {
                    if !lam.is_empty() {
                        assert!(f.v_count + f.h_count < lam.size());
                    }
                    let g = OrderedFilling::from_tableau(f.tableau.conjugate());
                    assert!(g.is_ordered(n));
                    assert_eq!((g.v_count, g.h_count), (f.h_count, f.v_count));
                }
            }
        }
    }
}
