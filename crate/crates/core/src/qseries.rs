//! Truncated power series in `q` with rational coefficients.

use num::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::{format_rational, RationalScalar, Ring};

pub const DEFAULT_ORDER: usize = 16;

/// A power series `c₀ + c₁q + … + c_{Q−1}q^{Q−1} + O(q^Q)`.
///
/// The coefficient vector always has exactly `order` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<RationalScalar>,
}

impl QSeries {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[RationalScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RationalScalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(RationalScalar::zero)
    }
}

/// The ring ℚ[[q]]/(q^Q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QSeriesRing {
    order: usize,
}

impl Default for QSeriesRing {
    fn default() -> Self {
        QSeriesRing {
            order: DEFAULT_ORDER,
        }
    }
}

impl QSeriesRing {
    /// `order` must be positive.
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("series order must be positive".into()));
        }
        Ok(QSeriesRing { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Builds a series from the leading coefficients; missing ones are zero
    /// and terms at or beyond `q^Q` are dropped.
    pub fn from_coeffs(&self, mut coeffs: Vec<RationalScalar>) -> QSeries {
        coeffs.resize(self.order, RationalScalar::zero());
        QSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn from_rational(&self, c: RationalScalar) -> QSeries {
        self.from_coeffs(vec![c])
    }

    /// `q^e`, which is zero once `e ≥ Q`.
    pub fn q_power(&self, e: usize) -> QSeries {
        let mut coeffs = vec![RationalScalar::zero(); self.order];
        if e < self.order {
            coeffs[e] = RationalScalar::one();
        }
        QSeries {
            order: self.order,
            coeffs,
        }
    }

    /// `[m]_q = 1 + q + … + q^{m−1}`.
    pub fn q_integer(&self, m: usize) -> QSeries {
        let mut coeffs = vec![RationalScalar::zero(); self.order];
        for c in coeffs.iter_mut().take(m) {
            *c = RationalScalar::one();
        }
        QSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Multiplicative inverse modulo `q^Q`.
    pub fn invert(&self, s: &QSeries) -> Result<QSeries> {
        self.check(s);
        let c0 = &s.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let mut out = vec![RationalScalar::zero(); self.order];
        out[0] = inv0.clone();
        for n in 1..self.order {
            let mut acc = RationalScalar::zero();
            for k in 1..=n {
                if !s.coeffs[k].is_zero() {
                    acc += &s.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -(acc * &inv0);
        }
        Ok(QSeries {
            order: self.order,
            coeffs: out,
        })
    }

    fn check(&self, s: &QSeries) {
        assert_eq!(s.order, self.order, "series order does not match its ring");
    }
}

impl Ring for QSeriesRing {
    type Elem = QSeries;

    fn zero(&self) -> QSeries {
        self.from_coeffs(Vec::new())
    }

    fn one(&self) -> QSeries {
        self.q_power(0)
    }

    fn add(&self, a: &QSeries, b: &QSeries) -> QSeries {
        self.check(a);
        self.check(b);
        QSeries {
            order: self.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    fn neg(&self, a: &QSeries) -> QSeries {
        self.check(a);
        QSeries {
            order: self.order,
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    fn mul(&self, a: &QSeries, b: &QSeries) -> QSeries {
        self.check(a);
        self.check(b);
        let mut out = vec![RationalScalar::zero(); self.order];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().take(self.order - i).enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        QSeries {
            order: self.order,
            coeffs: out,
        }
    }

    fn is_zero(&self, a: &QSeries) -> bool {
        a.coeffs.iter().all(Zero::is_zero)
    }

    fn exact_div(&self, a: &QSeries, b: &QSeries) -> Option<QSeries> {
        self.invert(b).ok().map(|inv| self.mul(a, &inv))
    }

    fn name(&self) -> String {
        format!("qseries:{}", self.order)
    }

    fn to_json(&self, a: &QSeries) -> Value {
        let coeffs: Vec<String> = a.coeffs.iter().map(format_rational).collect();
        json!({ "order": a.order, "coeffs": coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    fn series(r: &QSeriesRing, cs: &[i64]) -> QSeries {
        r.from_coeffs(cs.iter().map(|&c| rational(c, 1)).collect())
    }

    #[test]
    fn invert_one() {
        let r = QSeriesRing::new(6).unwrap();
        assert_eq!(r.invert(&r.one()).unwrap(), r.one());
    }

    #[test]
    fn invert_q_two_is_alternating() {
        let r = QSeriesRing::new(4).unwrap();
        let inv = r.invert(&r.q_integer(2)).unwrap();
        assert_eq!(inv, series(&r, &[1, -1, 1, -1]));
    }

    #[test]
    fn invert_q_three_multiplies_back() {
        let r = QSeriesRing::new(5).unwrap();
        let s = r.q_integer(3);
        assert_eq!(s, series(&r, &[1, 1, 1]));
        let inv = r.invert(&s).unwrap();
        assert_eq!(r.mul(&s, &inv), r.one());
        // 1/(1+q+q^2) = (1-q)/(1-q^3) = 1 - q + q^3 - q^4 + ...
        assert_eq!(inv, series(&r, &[1, -1, 0, 1, -1]));
    }

    #[test]
    fn zero_constant_term_rejected() {
        let r = QSeriesRing::new(4).unwrap();
        assert_eq!(r.invert(&r.q_power(1)), Err(Error::NotInvertible));
        assert!(r.exact_div(&r.one(), &r.zero()).is_none());
    }

    #[test]
    fn truncation_drops_high_terms() {
        let r = QSeriesRing::new(3).unwrap();
        assert!(r.is_zero(&r.q_power(3)));
        let q2 = r.q_power(2);
        assert!(r.is_zero(&r.mul(&q2, &q2)));
        assert_eq!(r.q_integer(10), series(&r, &[1, 1, 1]));
    }

    #[test]
    fn json_shape() {
        let r = QSeriesRing::new(3).unwrap();
        let s = r.from_coeffs(vec![rational(1, 2), rational(0, 1), rational(-3, 1)]);
        assert_eq!(
            r.to_json(&s).to_string(),
            r#"{"coeffs":["1/2","0","-3"],"order":3}"#
        );
    }

    #[test]
    fn order_zero_rejected() {
        assert!(QSeriesRing::new(0).is_err());
        assert_eq!(QSeriesRing::default().order(), DEFAULT_ORDER);
    }
}
