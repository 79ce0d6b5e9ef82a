//! Sparse polynomials in commuting variables `x₁, x₂, …` with integer
//! coefficients, the home of quasi-symmetric functions.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};
use serde_json::{json, Value};

use crate::ring::Ring;

/// A monomial `x_{i₁}^{e₁} ⋯ x_{i_s}^{e_s}` stored as `(variable, exponent)`
/// pairs sorted by variable, all exponents positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `x_var^exp`.
    pub fn var_power(var: u32, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(var, exp)])
        }
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, &(v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Integer linear combination of monomials; zero coefficients are never
/// stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MonomialPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MonomialPolynomial {
    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MonomialPolynomial { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// The ring ℤ[x₁, x₂, …].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MonomialRing;

impl Ring for MonomialRing {
    type Elem = MonomialPolynomial;

    fn zero(&self) -> MonomialPolynomial {
        MonomialPolynomial::default()
    }

    fn one(&self) -> MonomialPolynomial {
        MonomialPolynomial::term(Monomial::one(), BigInt::one())
    }

    fn add(&self, a: &MonomialPolynomial, b: &MonomialPolynomial) -> MonomialPolynomial {
        let mut out = a.clone();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &MonomialPolynomial) -> MonomialPolynomial {
        MonomialPolynomial {
            terms: a.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn mul(&self, a: &MonomialPolynomial, b: &MonomialPolynomial) -> MonomialPolynomial {
        let mut out = MonomialPolynomial::default();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn is_zero(&self, a: &MonomialPolynomial) -> bool {
        a.terms.is_empty()
    }

    fn from_int(&self, n: i64) -> MonomialPolynomial {
        MonomialPolynomial::term(Monomial::one(), BigInt::from(n))
    }

    fn name(&self) -> String {
        "qsym".into()
    }

    /// `[{"monomial": "x1^2*x3", "coeff": "3"}, …]` in monomial order.
    fn to_json(&self, a: &MonomialPolynomial) -> Value {
        Value::Array(
            a.terms
                .iter()
                .map(|(m, c)| json!({ "monomial": m.to_string(), "coeff": c.to_string() }))
                .collect(),
        )
    }
}
