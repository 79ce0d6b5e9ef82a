//! Dense polynomials in the interpolation variable `t`.

use serde_json::Value;

use crate::ring::Ring;

/// A polynomial `c₀ + c₁t + … + c_d t^d` over some ring.
///
/// Coefficients are stored ascending in degree with trailing zeros
/// trimmed, so the zero polynomial is the empty sequence. Construct values
/// through [`PolyRing`] so that trimming uses the coefficient ring's zero
/// test.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TPolynomial<E> {
    coeffs: Vec<E>,
}

impl<E> TPolynomial<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// The ring `R[t]` for a coefficient ring `R`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> TPolynomial<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        TPolynomial { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> TPolynomial<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> TPolynomial<R::Elem> {
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    pub fn t(&self) -> TPolynomial<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn one_minus_t(&self) -> TPolynomial<R::Elem> {
        self.from_coeffs(vec![self.base.one(), self.base.neg(&self.base.one())])
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, p: &TPolynomial<R::Elem>, k: usize) -> R::Elem {
        p.coeffs.get(k).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn scale(&self, p: &TPolynomial<R::Elem>, c: &R::Elem) -> TPolynomial<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    /// Evaluates `p` at `t = x` by Horner's rule.
    pub fn evaluate(&self, p: &TPolynomial<R::Elem>, x: &R::Elem) -> R::Elem {
        p.coeffs.iter().rev().fold(self.base.zero(), |acc, c| {
            self.base.add(&self.base.mul(&acc, x), c)
        })
    }

    /// Returns `p(1 − t)`. This map is an involution.
    pub fn substitute_one_minus_t(&self, p: &TPolynomial<R::Elem>) -> TPolynomial<R::Elem> {
        let s = self.one_minus_t();
        p.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            let shifted = self.mul(&acc, &s);
            self.add(&shifted, &self.constant(c.clone()))
        })
    }

    /// `t^v (1 − t)^h`.
    pub fn t_one_minus_t_power(&self, v: usize, h: usize) -> TPolynomial<R::Elem> {
        let base = self.pow(&self.one_minus_t(), h as u32);
        let mut coeffs = vec![self.base.zero(); v];
        coeffs.extend(base.coeffs);
        self.from_coeffs(coeffs)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = TPolynomial<R::Elem>;

    fn zero(&self) -> Self::Elem {
        TPolynomial { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() {
            (a, b)
        } else {
            (b, a)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.base.add(c, s);
        }
        self.from_coeffs(coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        TPolynomial {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.base.add(&coeffs[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(coeffs)
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.coeffs.len() == b.coeffs.len()
            && a.coeffs
                .iter()
                .zip(&b.coeffs)
                .all(|(x, y)| self.base.eq(x, y))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn name(&self) -> String {
        format!("{}[t]", self.base.name())
    }

    /// JSON array of coefficients ascending in degree.
    fn to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(a.coeffs.iter().map(|c| self.base.to_json(c)).collect())
    }
}
