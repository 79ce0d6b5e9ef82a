//! Truncated interpolated (Schur) multiple zeta values over a generic
//! coefficient map.
//!
//! Index orientation: in `ζᵗ_N(k₁, …, k_r)` the first label `k₁` is paired
//! with the smallest summation variable `m₁`, which is the top cell of the
//! corresponding single-column tableau.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{CoefficientMap, MapTable};
use crate::ring::{inverse_power, RationalField, RationalScalar, Ring};
use crate::shapes::{enumerate_oyt, CellIndex, Partition, ShapedTableau};
use crate::tpoly::{PolyRing, TPolynomial};

type Elem<F> = <<F as CoefficientMap>::Ring as Ring>::Elem;
type Poly<F> = TPolynomial<Elem<F>>;

fn poly_ring<F: CoefficientMap>(f: &F) -> PolyRing<F::Ring> {
    PolyRing::new(f.ring().clone())
}

fn check_bound(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "truncation bound N must be at least 1".into(),
        ));
    }
    Ok(())
}

/// A sequence `(a_d)` indexed by diagonal offset `d = j − i`, known on a
/// finite window.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagonalWeightSequence {
    weights: BTreeMap<i64, i64>,
}

impl DiagonalWeightSequence {
    pub fn new(weights: BTreeMap<i64, i64>) -> Self {
        DiagonalWeightSequence { weights }
    }

    /// `a_start, a_{start+1}, …` from consecutive values.
    pub fn from_values(start: i64, values: &[i64]) -> Self {
        let weights = values
            .iter()
            .enumerate()
            .map(|(k, &v)| (start + k as i64, v))
            .collect();
        DiagonalWeightSequence { weights }
    }

    /// The constant sequence `c` on `lo..=hi`.
    pub fn constant(lo: i64, hi: i64, c: i64) -> Self {
        DiagonalWeightSequence {
            weights: (lo..=hi).map(|d| (d, c)).collect(),
        }
    }

    pub fn get(&self, d: i64) -> Result<i64> {
        self.weights.get(&d).copied().ok_or(Error::MissingWeight(d))
    }

    pub fn window(&self) -> &BTreeMap<i64, i64> {
        &self.weights
    }

    /// `a_lo, …, a_hi` when `lo ≤ hi`, descending `a_lo, a_{lo−1}, …, a_hi`
    /// when `lo > hi`.
    pub fn run(&self, from: i64, to: i64) -> Result<Vec<i64>> {
        if from <= to {
            (from..=to).map(|d| self.get(d)).collect()
        } else {
            (to..=from).rev().map(|d| self.get(d)).collect()
        }
    }

    /// The offsets `1 − h ..= λ₁ − 1` that the tableau of shape `λ` reads.
    pub fn required_offsets(shape: &Partition) -> std::ops::RangeInclusive<i64> {
        (1 - shape.len() as i64)..=(shape.width() as i64 - 1)
    }

    /// The diagonal-constant tableau `k_{i,j} = a_{j−i}`.
    pub fn tableau(&self, shape: &Partition) -> Result<ShapedTableau<i64>> {
        ShapedTableau::try_from_fn(shape.clone(), |c: CellIndex| self.get(c.content()))
    }
}

/// `ζᵗ_N(k) = Σ_{m ∈ OYT_N(λ)} t^{v(m)} (1−t)^{h(m)} Π f(k_{i,j}, m_{i,j})`,
/// by full enumeration of the ordered fillings.
pub fn schur_value<F: CoefficientMap>(k: &ShapedTableau<i64>, n: usize, f: &F) -> Result<Poly<F>> {
    check_bound(n)?;
    let ring = f.ring();
    let table = MapTable::build(f, k.entries().iter().copied(), n)?;
    // group terms by (v, h) so the t-polynomial factors are built once each
    let mut buckets: HashMap<(usize, usize), Elem<F>> = HashMap::new();
    for filling in enumerate_oyt(k.shape(), n) {
        let weight = k
            .entries()
            .iter()
            .zip(filling.tableau.entries())
            .fold(ring.one(), |acc, (&label, &m)| {
                ring.mul(&acc, table.get(label, m))
            });
        let slot = buckets
            .entry((filling.v_count, filling.h_count))
            .or_insert_with(|| ring.zero());
        *slot = ring.add(slot, &weight);
    }
    Ok(combine_buckets(&poly_ring(f), buckets))
}

fn combine_buckets<R: Ring>(
    pr: &PolyRing<R>,
    buckets: HashMap<(usize, usize), R::Elem>,
) -> TPolynomial<R::Elem> {
    let mut keys: Vec<_> = buckets.keys().copied().collect();
    keys.sort_unstable();
    keys.into_iter().fold(pr.zero(), |acc, key| {
        let term = pr.scale(&pr.t_one_minus_t_power(key.0, key.1), &buckets[&key]);
        pr.add(&acc, &term)
    })
}

/// `Σ_{0<m₁≤…≤m_r<N} t^{e(m)} Π f(k_i, m_i)` with `e` the number of adjacent
/// equalities, by direct enumeration of the chains.
pub fn linear_value<F: CoefficientMap>(keys: &[i64], n: usize, f: &F) -> Result<Poly<F>> {
    check_bound(n)?;
    let ring = f.ring();
    let table = MapTable::build(f, keys.iter().copied(), n)?;
    let mut by_equalities: Vec<Elem<F>> = vec![ring.zero(); keys.len().max(1)];

    fn walk<R: Ring>(
        ring: &R,
        table: &MapTable<R::Elem>,
        keys: &[i64],
        n: usize,
        prev: usize,
        equalities: usize,
        weight: R::Elem,
        out: &mut [R::Elem],
    ) {
        let Some((&k, rest)) = keys.split_first() else {
            out[equalities] = ring.add(&out[equalities], &weight);
            return;
        };
        for m in prev.max(1)..n {
            let w = ring.mul(&weight, table.get(k, m));
            let e = equalities + usize::from(m == prev);
            walk(ring, table, rest, n, m, e, w, out);
        }
    }

    walk(ring, &table, keys, n, 0, 0, ring.one(), &mut by_equalities);
    let pr = poly_ring(f);
    Ok(pr.from_coeffs(by_equalities))
}

/// The same value as [`linear_value`], through the recursion that splits off
/// the block of `g + 1` trailing labels sitting on the largest summation
/// variable:
///
/// `ζᵗ_N(k₁…k_r) = Σ_{g=0}^{r−1} t^g Σ_{m=1}^{N−1} f(k_{r−g},m)⋯f(k_r,m) · ζᵗ_m(k₁…k_{r−g−1})`.
pub fn linear_value_by_recursion<F: CoefficientMap>(
    keys: &[i64],
    n: usize,
    f: &F,
) -> Result<Poly<F>> {
    check_bound(n)?;
    let ring = f.ring();
    let pr = poly_ring(f);
    let table = MapTable::build(f, keys.iter().copied(), n)?;
    let r = keys.len();
    // memo[len][bound] = ζᵗ_bound(k₁…k_len) for 1 ≤ bound ≤ n
    let mut memo: Vec<Vec<Poly<F>>> = vec![vec![pr.one(); n + 1]];
    for len in 1..=r {
        let mut row = vec![pr.zero(); n + 1];
        for bound in 1..=n {
            let mut acc = pr.zero();
            for g in 0..len {
                let mut inner = pr.zero();
                for m in 1..bound {
                    let block = keys[len - g - 1..len]
                        .iter()
                        .fold(ring.one(), |a, &k| ring.mul(&a, table.get(k, m)));
                    inner = pr.add(&inner, &pr.scale(&memo[len - g - 1][m], &block));
                }
                acc = pr.add(&acc, &pr.mul(&inner, &pr.monomial(ring.one(), g)));
            }
            row[bound] = acc;
        }
        memo.push(row);
    }
    Ok(memo[r][n].clone())
}

/// Strict truncated multiple zeta value `Σ_{0<m₁<…<m_s<N} Π m_i^{-k_i}`.
pub fn strict_truncated_mzv(keys: &[i64], n: usize) -> RationalScalar {
    fn go(keys: &[i64], n: usize, prev: usize, acc: RationalScalar) -> RationalScalar {
        let Some((&k, rest)) = keys.split_first() else {
            return acc;
        };
        let mut total = RationalField.zero();
        for m in prev + 1..n {
            total += go(rest, n, m, &acc * inverse_power(m as u64, k));
        }
        total
    }
    go(keys, n, 0, RationalField.one())
}

/// Rational `ζᵗ_N(k₁…k_r)` as `Σ_d t^d · (sum of strict values over the
/// indices obtained by replacing exactly d of the r−1 commas by plus signs)`.
pub fn merge_expansion(keys: &[i64], n: usize) -> Result<TPolynomial<RationalScalar>> {
    check_bound(n)?;
    let pr = PolyRing::new(RationalField);
    if keys.is_empty() {
        return Ok(pr.one());
    }
    let gaps = keys.len() - 1;
    let mut coeffs = vec![RationalField.zero(); gaps + 1];
    for pattern in 0u64..(1 << gaps) {
        let mut merged = vec![keys[0]];
        for (g, &k) in keys[1..].iter().enumerate() {
            if pattern & (1 << g) != 0 {
                *merged.last_mut().unwrap() += k;
            } else {
                merged.push(k);
            }
        }
        coeffs[pattern.count_ones() as usize] += strict_truncated_mzv(&merged, n);
    }
    Ok(pr.from_coeffs(coeffs))
}

/// Whether `k_{i,j} ≥ 2` on every corner of the shape and `k_{i,j} ≥ 1`
/// elsewhere, the condition under which the untruncated series converges.
pub fn corner_condition(k: &ShapedTableau<i64>) -> bool {
    let corners = k.shape().corners();
    k.iter().all(|(cell, &w)| {
        if corners.contains(&cell) {
            w >= 2
        } else {
            w >= 1
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{QAnalogueMap, QuasiSymmetricMap, RationalMap};
    use crate::qseries::QSeriesRing;
    use crate::ring::rational;

    fn qpoly(cs: &[(i64, i64)]) -> TPolynomial<RationalScalar> {
        PolyRing::new(RationalField).from_coeffs(cs.iter().map(|&(a, b)| rational(a, b)).collect())
    }

    fn column(keys: &[i64]) -> ShapedTableau<i64> {
        ShapedTableau::from_rows(keys.iter().map(|&k| vec![k]).collect()).unwrap()
    }

    #[test]
    fn trivial_values() {
        let f = RationalMap::new();
        let k = ShapedTableau::from_rows(vec![vec![2, 3], vec![1]]).unwrap();
        assert!(schur_value(&k, 1, &f).unwrap().is_zero());
        let empty = ShapedTableau::new(Partition::empty(), Vec::new()).unwrap();
        assert_eq!(schur_value(&empty, 7, &f).unwrap(), qpoly(&[(1, 1)]));
        assert!(schur_value(&k, 0, &f).is_err());
    }

    #[test]
    fn column_and_row_examples() {
        let f = RationalMap::new();
        let col = column(&[2, 2]);
        assert_eq!(
            schur_value(&col, 3, &f).unwrap(),
            qpoly(&[(1, 4), (17, 16)])
        );
        let row = ShapedTableau::from_rows(vec![vec![2, 2]]).unwrap();
        assert_eq!(
            schur_value(&row, 3, &f).unwrap(),
            qpoly(&[(21, 16), (-17, 16)])
        );
    }

    #[test]
    fn linear_examples() {
        let f = RationalMap::new();
        assert_eq!(linear_value(&[], 5, &f).unwrap(), qpoly(&[(1, 1)]));
        assert_eq!(linear_value(&[2], 3, &f).unwrap(), qpoly(&[(5, 4)]));
        assert_eq!(
            linear_value(&[2, 2], 3, &f).unwrap(),
            qpoly(&[(1, 4), (17, 16)])
        );
        assert_eq!(
            linear_value_by_recursion(&[2, 2], 3, &f).unwrap(),
            qpoly(&[(1, 4), (17, 16)])
        );
        assert_eq!(
            merge_expansion(&[2, 2], 3).unwrap(),
            qpoly(&[(1, 4), (17, 16)])
        );
        assert_eq!(
            linear_value_by_recursion(&[3, 2, 2], 5, &f).unwrap(),
            linear_value(&[3, 2, 2], 5, &f).unwrap()
        );
    }

    #[test]
    fn top_coefficient_is_fully_merged_sum() {
        let f = RationalMap::new();
        let keys = [2, 1, 3];
        let n = 6;
        let v = linear_value(&keys, n, &f).unwrap();
        let expected: RationalScalar = (1..n).map(|m| inverse_power(m as u64, 6)).sum();
        assert_eq!(v.coeffs()[2], expected);
    }

    #[test]
    fn linear_agrees_with_column_tableau() {
        let f = RationalMap::new();
        for keys in [vec![1], vec![2, -1], vec![3, 0, 2], vec![1, 2, 1, 2]] {
            for n in 1..6 {
                assert_eq!(
                    linear_value(&keys, n, &f).unwrap(),
                    schur_value(&column(&keys), n, &f).unwrap(),
                    "keys {keys:?}, N = {n}"
                );
            }
        }
    }

    #[test]
    fn strict_sum_direct() {
        // ζ_4(1, 2) = 1·(1/4 + 1/9) + (1/2)(1/9)
        assert_eq!(
            strict_truncated_mzv(&[1, 2], 4),
            rational(1, 4) + rational(1, 9) + rational(1, 18)
        );
        assert_eq!(strict_truncated_mzv(&[], 1), rational(1, 1));
    }

    #[test]
    fn corner_condition_examples() {
        let hook = ShapedTableau::from_rows(vec![vec![1, 2], vec![2]]).unwrap();
        assert!(corner_condition(&hook));
        assert!(!corner_condition(&column(&[1])));
        let twos = ShapedTableau::from_fn(Partition::new(vec![3, 2, 2, 1]).unwrap(), |_| 2);
        assert!(corner_condition(&twos));
        let zero_inside = ShapedTableau::from_rows(vec![vec![0, 2], vec![2]]).unwrap();
        assert!(!corner_condition(&zero_inside));
    }

    #[test]
    fn domain_errors_surface() {
        let qf = QAnalogueMap::new(QSeriesRing::new(4).unwrap());
        let err = schur_value(&column(&[1, 0]), 3, &qf).unwrap_err();
        assert!(err.is_domain());
        assert!(linear_value(&[-1], 1, &QuasiSymmetricMap::new())
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn diagonal_tableau_and_runs() {
        let a = DiagonalWeightSequence::from_values(-1, &[5, 6, 7]);
        let lam = Partition::new(vec![2, 1]).unwrap();
        let k = a.tableau(&lam).unwrap();
        assert_eq!(k.rows(), vec![vec![6, 7], vec![5]]);
        assert_eq!(a.run(1, -1).unwrap(), vec![7, 6, 5]);
        assert_eq!(a.run(-1, 0).unwrap(), vec![5, 6]);
        assert_eq!(a.get(2), Err(Error::MissingWeight(2)));
        let tall = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(a.tableau(&tall), Err(Error::MissingWeight(-2)));
        assert_eq!(DiagonalWeightSequence::required_offsets(&lam), -1..=1);
    }
}
