//! Coefficient maps `f(k, m)` and the built-in choices: `m^{-k}` over ℚ,
//! the `q`-analogue `q^{m(k−1)}/[m]_q^k`, and the quasi-symmetric `x_m^k`.

use std::collections::BTreeMap;

use num::BigInt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialPolynomial, MonomialRing};
use crate::qseries::{QSeries, QSeriesRing};
use crate::ring::{inverse_power, RationalField, RationalScalar, Ring};

/// A map `f : A × ℕ → R` with weight labels `A ⊆ ℤ`.
pub trait CoefficientMap: Send + Sync {
    type Ring: Ring;

    fn ring(&self) -> &Self::Ring;

    /// Rejects labels outside the map's domain.
    fn check_label(&self, _k: i64) -> Result<()> {
        Ok(())
    }

    /// `f(k, m)` for `m ≥ 1`.
    fn eval(&self, k: i64, m: usize) -> Result<<Self::Ring as Ring>::Elem>;

    fn name(&self) -> String {
        self.ring().name()
    }
}

/// `f(k, m) = m^{-k}`; any integer label.
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalMap {
    ring: RationalField,
}

impl RationalMap {
    pub fn new() -> Self {
        RationalMap::default()
    }
}

impl CoefficientMap for RationalMap {
    type Ring = RationalField;

    fn ring(&self) -> &RationalField {
        &self.ring
    }

    fn eval(&self, k: i64, m: usize) -> Result<RationalScalar> {
        Ok(inverse_power(m as u64, k))
    }
}

/// `f(k, m) = q^{m(k−1)} · [m]_q^{-k}` modulo `q^Q`; labels `k ≥ 1`.
#[derive(Debug, Clone, Copy)]
pub struct QAnalogueMap {
    ring: QSeriesRing,
}

impl QAnalogueMap {
    pub fn new(ring: QSeriesRing) -> Self {
        QAnalogueMap { ring }
    }
}

impl CoefficientMap for QAnalogueMap {
    type Ring = QSeriesRing;

    fn ring(&self) -> &QSeriesRing {
        &self.ring
    }

    fn check_label(&self, k: i64) -> Result<()> {
        if k < 1 {
            return Err(Error::Domain(format!(
                "the q-analogue map needs weights k >= 1, got {k} (q^(m(k-1)) would have a negative exponent)"
            )));
        }
        Ok(())
    }

    fn eval(&self, k: i64, m: usize) -> Result<QSeries> {
        self.check_label(k)?;
        let inv = self.ring.invert(&self.ring.q_integer(m))?;
        let shift = m.saturating_mul((k - 1) as usize);
        let q_part = self.ring.q_power(shift);
        let exp = u32::try_from(k).map_err(|_| Error::Domain(format!("weight {k} too large")))?;
        Ok(self.ring.mul(&q_part, &self.ring.pow(&inv, exp)))
    }
}

/// `f(k, m) = x_m^k` in ℤ[x₁, x₂, …]; labels `k ≥ 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuasiSymmetricMap {
    ring: MonomialRing,
}

impl QuasiSymmetricMap {
    pub fn new() -> Self {
        QuasiSymmetricMap::default()
    }
}

impl CoefficientMap for QuasiSymmetricMap {
    type Ring = MonomialRing;

    fn ring(&self) -> &MonomialRing {
        &self.ring
    }

    fn check_label(&self, k: i64) -> Result<()> {
        if k < 1 {
            return Err(Error::Domain(format!(
                "the quasi-symmetric map needs weights k >= 1, got {k}"
            )));
        }
        Ok(())
    }

    fn eval(&self, k: i64, m: usize) -> Result<MonomialPolynomial> {
        self.check_label(k)?;
        let var =
            u32::try_from(m).map_err(|_| Error::Domain(format!("variable index {m} too large")))?;
        let exp = u32::try_from(k).map_err(|_| Error::Domain(format!("weight {k} too large")))?;
        Ok(MonomialPolynomial::term(
            Monomial::var_power(var, exp),
            BigInt::from(1),
        ))
    }
}

/// A coefficient map given by a closure.
#[derive(Clone)]
pub struct FnMap<R, F> {
    ring: R,
    f: F,
}

impl<R, F> FnMap<R, F>
where
    R: Ring,
    F: Fn(i64, usize) -> R::Elem + Send + Sync,
{
    pub fn new(ring: R, f: F) -> Self {
        FnMap { ring, f }
    }
}

impl<R, F> CoefficientMap for FnMap<R, F>
where
    R: Ring,
    F: Fn(i64, usize) -> R::Elem + Send + Sync,
{
    type Ring = R;

    fn ring(&self) -> &R {
        &self.ring
    }

    fn eval(&self, k: i64, m: usize) -> Result<R::Elem> {
        Ok((self.f)(k, m))
    }
}

/// Precomputed values `f(k, m)` for a fixed set of labels and `1 ≤ m < N`.
pub struct MapTable<E> {
    values: BTreeMap<i64, Vec<E>>,
}

impl<E: Clone> MapTable<E> {
    pub fn build<F>(f: &F, labels: impl IntoIterator<Item = i64>, n: usize) -> Result<Self>
    where
        F: CoefficientMap<Ring: Ring<Elem = E>>,
    {
        let mut values = BTreeMap::new();
        for k in labels {
            if values.contains_key(&k) {
                continue;
            }
            f.check_label(k)?;
            let row = (1..n).map(|m| f.eval(k, m)).collect::<Result<Vec<_>>>()?;
            values.insert(k, row);
        }
        Ok(MapTable { values })
    }

    /// `f(k, m)`; `k` must be one of the labels and `1 ≤ m < N`.
    pub fn get(&self, k: i64, m: usize) -> &E {
        &self.values[&k][m - 1]
    }
}
