//! Exact truncated interpolated Schur multiple zeta values.
//!
//! For a Young tableau of weights `k` and a truncation bound `N` the value
//! `ζᵗ_N(k)` is the polynomial in `t` obtained by summing
//! `t^{v(m)}(1−t)^{h(m)} Π f(k_{i,j}, m_{i,j})` over all ordered fillings
//! `m` with entries below `N`. Everything is computed exactly, over any
//! coefficient ring that implements [`ring::Ring`].
//!
//! Besides the values themselves the crate checks, on finite instances, the
//! identities relating them: conjugation versus `t ↦ 1 − t`, the
//! lattice-path (Lindström–Gessel–Viennot) description on the two-coloured
//! `t`-lattice, and the Jacobi–Trudi determinant formulas.

pub mod error;
pub mod jacobi_trudi;
pub mod lattice;
pub mod maps;
pub mod matrix;
pub mod monomial;
pub mod qseries;
pub mod ring;
pub mod schur;
pub mod shapes;
pub mod tpoly;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{ring_determinant, Matrix};
pub use ring::{RationalField, RationalScalar, Ring};
pub use shapes::{CellIndex, Partition, ShapedTableau};
pub use tpoly::{PolyRing, TPolynomial};
