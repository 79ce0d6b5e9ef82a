//! Determinant expressions for Schur values with diagonal-constant weights.
//!
//! For `k_{i,j} = a_{j−i}` the value `ζᵗ_N(k)` is the determinant of a
//! `λ₁ × λ₁` matrix of single-column values (the H-side) and of an
//! `h × h` matrix of single-column values at `1 − t` (the E-side).

use serde::Serialize;

use crate::error::Result;
use crate::maps::CoefficientMap;
use crate::matrix::{ring_determinant, Matrix};
use crate::ring::Ring;
use crate::schur::{
    corner_condition, linear_value_by_recursion, schur_value, DiagonalWeightSequence,
};
use crate::shapes::Partition;
use crate::tpoly::{PolyRing, TPolynomial};

type Elem<F> = <<F as CoefficientMap>::Ring as Ring>::Elem;
type Poly<F> = TPolynomial<Elem<F>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// `λ₁ × λ₁`, entry `(i, j)` is `ζᵗ_N(a_{j−1}, a_{j−2}, …, a_{i−λ′_i})`.
    H,
    /// `h × h`, entry `(i, j)` is `ζ^{1−t}_N(a_{1−j}, a_{2−j}, …, a_{λ_i−i})`.
    E,
}

/// Index sequence of entry `(i, j)` (1-based), or `None` when its length
/// is negative.
pub fn entry_keys(
    shape: &Partition,
    side: Side,
    i: usize,
    j: usize,
    a: &DiagonalWeightSequence,
) -> Result<Option<Vec<i64>>> {
    let (i, j) = (i as i64, j as i64);
    let (len, from, to) = match side {
        Side::H => {
            let col = shape.conjugate().part(i as usize) as i64;
            (col + j - i, j - 1, i - col)
        }
        Side::E => {
            let row = shape.part(i as usize) as i64;
            (row - i + j, 1 - j, row - i)
        }
    };
    if len < 0 {
        return Ok(None);
    }
    if len == 0 {
        return Ok(Some(Vec::new()));
    }
    a.run(from, to).map(Some)
}

/// The H-side or E-side matrix for `λ` on `1 ≤ m < N`.
pub fn build_jt_matrix<F: CoefficientMap>(
    shape: &Partition,
    side: Side,
    n: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<Matrix<Poly<F>>> {
    let pr = PolyRing::new(f.ring().clone());
    let size = match side {
        Side::H => shape.width(),
        Side::E => shape.len(),
    };
    Matrix::try_from_fn(size, |i, j| {
        let Some(keys) = entry_keys(shape, side, i + 1, j + 1, a)? else {
            return Ok(pr.zero());
        };
        let value = linear_value_by_recursion(&keys, n, f)?;
        Ok(match side {
            Side::H => value,
            Side::E => pr.substitute_one_minus_t(&value),
        })
    })
}

pub fn jt_determinant<F: CoefficientMap>(
    shape: &Partition,
    side: Side,
    n: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<Poly<F>> {
    let pr = PolyRing::new(f.ring().clone());
    ring_determinant(&pr, &build_jt_matrix(shape, side, n, f, a)?)
}

#[derive(Debug, Clone)]
pub struct JtReport<E> {
    pub schur: TPolynomial<E>,
    pub det_h: TPolynomial<E>,
    pub det_e: TPolynomial<E>,
    pub equal: bool,
    pub notes: Vec<String>,
}

/// Computes the Schur value of `k_{i,j} = a_{j−i}` and both determinants.
pub fn verify_jacobi_trudi<F: CoefficientMap>(
    shape: &Partition,
    n: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<JtReport<Elem<F>>> {
    let pr = PolyRing::new(f.ring().clone());
    let k = a.tableau(shape)?;
    let schur = schur_value(&k, n, f)?;
    let det_h = jt_determinant(shape, Side::H, n, f, a)?;
    let det_e = jt_determinant(shape, Side::E, n, f, a)?;
    let equal = pr.eq(&schur, &det_h) && pr.eq(&det_h, &det_e);
    let mut notes = Vec::new();
    if !corner_condition(&k) {
        notes.push(
            "weights violate the corner condition; only the truncated identity is meaningful"
                .into(),
        );
    }
    if n <= 1 && !shape.is_empty() {
        notes.push("empty summation range: every side is the zero polynomial".into());
    }
    Ok(JtReport {
        schur,
        det_h,
        det_e,
        equal,
        notes,
    })
}

/// Diagonal weights `a_d = k_{|d|+1}` for `|d| < r`.
pub fn palindromic_weights(k: &[i64]) -> DiagonalWeightSequence {
    let r = k.len() as i64;
    DiagonalWeightSequence::new(
        (1 - r..r)
            .map(|d| (d, k[d.unsigned_abs() as usize]))
            .collect(),
    )
}

#[derive(Debug, Clone)]
pub struct PalindromeReport<E> {
    pub polynomial: TPolynomial<E>,
    pub reflected: TPolynomial<E>,
    pub palindromic: bool,
}

/// `M(t)`, the H-side determinant for the square `(r^r)` with
/// `a_d = k_{|d|+1}`, against `M(1 − t)`.
pub fn verify_palindromic_matrix<F: CoefficientMap>(
    k: &[i64],
    n: usize,
    f: &F,
) -> Result<PalindromeReport<Elem<F>>> {
    let pr = PolyRing::new(f.ring().clone());
    let r = k.len();
    let shape = Partition::new(vec![r; r])?;
    let polynomial = jt_determinant(&shape, Side::H, n, f, &palindromic_weights(k))?;
    let reflected = pr.substitute_one_minus_t(&polynomial);
    let palindromic = pr.eq(&polynomial, &reflected);
    Ok(PalindromeReport {
        polynomial,
        reflected,
        palindromic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{QAnalogueMap, RationalMap};
    use crate::qseries::QSeriesRing;
    use crate::ring::RationalField;
    use crate::schur::linear_value;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_matrix_layout() {
        let a = DiagonalWeightSequence::from_values(-1, &[5, 6, 7]);
        let lam = p(&[2, 1]);
        assert_eq!(
            entry_keys(&lam, Side::H, 1, 1, &a).unwrap(),
            Some(vec![6, 5])
        );
        assert_eq!(
            entry_keys(&lam, Side::H, 1, 2, &a).unwrap(),
            Some(vec![7, 6, 5])
        );
        assert_eq!(entry_keys(&lam, Side::H, 2, 1, &a).unwrap(), Some(vec![]));
        assert_eq!(entry_keys(&lam, Side::H, 2, 2, &a).unwrap(), Some(vec![7]));
        // E-side of (2,1): rows λ = (2,1)
        assert_eq!(
            entry_keys(&lam, Side::E, 1, 1, &a).unwrap(),
            Some(vec![6, 7])
        );
        assert_eq!(
            entry_keys(&lam, Side::E, 1, 2, &a).unwrap(),
            Some(vec![5, 6, 7])
        );
        assert_eq!(entry_keys(&lam, Side::E, 2, 1, &a).unwrap(), Some(vec![]));
        assert_eq!(entry_keys(&lam, Side::E, 2, 2, &a).unwrap(), Some(vec![5]));
        // negative length below the subdiagonal of a row
        let row = p(&[3]);
        assert_eq!(entry_keys(&row, Side::H, 3, 1, &a).unwrap(), None);
    }

    #[test]
    fn row_matrix_shape_and_value() {
        let f = RationalMap::new();
        let pr = PolyRing::new(RationalField);
        for r in 1..=4usize {
            let ks: Vec<i64> = (0..r as i64).map(|i| 2 + (i % 2)).collect();
            let a = DiagonalWeightSequence::from_values(0, &ks);
            let lam = p(&[r]);
            for n in 1..=5 {
                let m = build_jt_matrix(&lam, Side::H, n, &f, &a).unwrap();
                for i in 0..r {
                    for j in 0..r {
                        if i == j + 1 {
                            assert_eq!(m.get(i, j), &pr.one());
                        } else if i > j + 1 {
                            assert!(m.get(i, j).is_zero());
                        }
                    }
                }
                let det = ring_determinant(&pr, &m).unwrap();
                let want = pr.substitute_one_minus_t(&linear_value(&ks, n, &f).unwrap());
                assert_eq!(det, want, "r={r} N={n}");
            }
        }
    }

    #[test]
    fn hook_constant_two() {
        let a = DiagonalWeightSequence::constant(-1, 1, 2);
        let r = verify_jacobi_trudi(&p(&[2, 1]), 4, &RationalMap::new(), &a).unwrap();
        assert!(r.equal, "{r:?}");
        assert!(r.notes.is_empty());
    }

    #[test]
    fn column_is_its_own_entry() {
        let a = DiagonalWeightSequence::from_values(-2, &[1, 3, 2]);
        let f = RationalMap::new();
        let r = verify_jacobi_trudi(&p(&[1, 1, 1]), 4, &f, &a).unwrap();
        assert!(r.equal);
        assert_eq!(r.det_h, linear_value(&[2, 3, 1], 4, &f).unwrap());
    }

    #[test]
    fn square_in_q_series() {
        let f = QAnalogueMap::new(QSeriesRing::new(8).unwrap());
        let a = DiagonalWeightSequence::from_values(-1, &[1, 2, 1]);
        let r = verify_jacobi_trudi(&p(&[2, 2]), 4, &f, &a).unwrap();
        assert!(r.equal);
        assert!(!r.schur.is_zero());
    }

    #[test]
    fn negative_weights_and_empty_shape() {
        let f = RationalMap::new();
        let a = DiagonalWeightSequence::from_values(-2, &[-2, 3, -1, 0, 1]);
        let r = verify_jacobi_trudi(&p(&[3, 2, 1]), 4, &f, &a).unwrap();
        assert!(r.equal);
        assert!(!r.notes.is_empty());
        let e = verify_jacobi_trudi(&Partition::empty(), 3, &f, &a).unwrap();
        assert!(e.equal);
        assert_eq!(e.schur, PolyRing::new(RationalField).one());
    }

    #[test]
    fn palindromes() {
        let f = RationalMap::new();
        let r1 = verify_palindromic_matrix(&[2], 5, &f).unwrap();
        assert!(r1.palindromic);
        assert!(r1.polynomial.degree().unwrap_or(0) == 0);
        assert!(
            verify_palindromic_matrix(&[2, 3], 4, &f)
                .unwrap()
                .palindromic
        );
        let r3 = verify_palindromic_matrix(&[2, 2, 2], 3, &f).unwrap();
        assert!(r3.palindromic);
    }

    #[test]
    fn missing_window_is_an_error() {
        let a = DiagonalWeightSequence::constant(0, 0, 2);
        assert!(build_jt_matrix(&p(&[2, 1]), Side::H, 3, &RationalMap::new(), &a).is_err());
    }
}
