use super::{Partition, ShapedTableau};
use crate::error::{Error, Result};

/// The zero-one tableau `F(λ, b)`: column `j` holds zeros in rows
/// `1..=b_j` and ones below.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitTableau {
    pub tableau: ShapedTableau<bool>,
}

/// `v₁`, `h₁` and the 1-ordered flag of a [`BitTableau`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct BitStats {
    pub one_ordered: bool,
    pub v1: usize,
    pub h1: usize,
}

/// Builds `F(λ, b)` with `f_{i,j} = 1` iff `i > b_j`.
///
/// `b` needs one entry per column, weakly decreasing, with `b_j ≤ λ′_j`.
pub fn build_bit_tableau(shape: &Partition, b: &[usize]) -> Result<BitTableau> {
    let cols = shape.conjugate();
    if b.len() != shape.width() {
        return Err(Error::InvalidInput(format!(
            "b has {} entries but {shape} has {} columns",
            b.len(),
            shape.width()
        )));
    }
    if b.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!(
            "b = {b:?} is not weakly decreasing"
        )));
    }
    if let Some(j) = (1..=b.len()).find(|&j| b[j - 1] > cols.part(j)) {
        return Err(Error::InvalidInput(format!(
            "b_{j} = {} exceeds the column length {}",
            b[j - 1],
            cols.part(j)
        )));
    }
    let tableau = ShapedTableau::from_fn(shape.clone(), |c| c.row > b[c.col - 1]);
    Ok(BitTableau { tableau })
}

pub fn bit_tableau_stats(f: &BitTableau) -> BitStats {
    let t = &f.tableau;
    let mut stats = BitStats {
        one_ordered: true,
        v1: 0,
        h1: 0,
    };
    for (cell, &bit) in t.iter() {
        if !bit {
            continue;
        }
        if t.get(cell.below()) == Some(&true) {
            stats.v1 += 1;
        }
        if t.get(cell.right()) == Some(&true) {
            stats.h1 += 1;
        }
        if t.get(cell.diagonal()) == Some(&true) {
            stats.one_ordered = false;
        }
    }
    stats
}

impl BitTableau {
    pub fn stats(&self) -> BitStats {
        bit_tableau_stats(self)
    }

    /// Every admissible `b` for `λ`: weakly decreasing with `b_j ≤ λ′_j`.
    pub fn admissible_b(shape: &Partition) -> Vec<Vec<usize>> {
        fn go(
            cols: &[usize],
            j: usize,
            prev: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if j == cols.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..=prev.min(cols[j]) {
                cur.push(v);
                go(cols, j + 1, v, cur, out);
                cur.pop();
            }
        }
        let cols = shape.conjugate().parts().to_vec();
        let mut out = Vec::new();
        go(&cols, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bits(rows: &[&[u8]]) -> Vec<Vec<bool>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| x == 1).collect())
            .collect()
    }

    #[test]
    fn worked_example() {
        let f = build_bit_tableau(&p(&[4, 2, 2, 1]), &[2, 1, 1, 0]).unwrap();
        assert_eq!(
            f.tableau.rows(),
            bits(&[&[0, 0, 0, 1], &[0, 1], &[1, 1], &[1]])
        );
        assert_eq!(
            f.stats(),
            BitStats {
                one_ordered: true,
                v1: 2,
                h1: 1
            }
        );
    }

    #[test]
    fn full_and_empty_columns() {
        let lam = p(&[3, 2, 2]);
        let full = build_bit_tableau(&lam, lam.conjugate().parts()).unwrap();
        assert!(full.tableau.entries().iter().all(|&x| !x));
        assert_eq!(
            full.stats(),
            BitStats {
                one_ordered: true,
                v1: 0,
                h1: 0
            }
        );
        let ones = build_bit_tableau(&lam, &[0, 0, 0]).unwrap();
        assert!(ones.tableau.entries().iter().all(|&x| x));
    }

    #[test]
    fn square_all_ones_not_one_ordered() {
        let f = build_bit_tableau(&p(&[2, 2]), &[0, 0]).unwrap();
        assert_eq!(
            f.stats(),
            BitStats {
                one_ordered: false,
                v1: 2,
                h1: 2
            }
        );
    }

    #[test]
    fn invalid_b_rejected() {
        let lam = p(&[2, 1]);
        assert!(build_bit_tableau(&lam, &[0, 1]).is_err());
        assert!(build_bit_tableau(&lam, &[1, 2]).is_err());
        assert!(build_bit_tableau(&lam, &[3, 0]).is_err());
        assert!(build_bit_tableau(&lam, &[1]).is_err());
    }

    #[test]
    fn admissible_b_enumeration() {
        // λ = (2,1), λ′ = (2,1): b₁ ∈ 0..=2, b₂ ≤ min(b₁, 1)
        let all = BitTableau::admissible_b(&p(&[2, 1]));
        assert_eq!(
            all,
            vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]
        );
        assert_eq!(
            BitTableau::admissible_b(&Partition::empty()),
            vec![Vec::<usize>::new()]
        );
        for b in all {
            assert!(build_bit_tableau(&p(&[2, 1]), &b).is_ok());
        }
    }
}
