//! Exact arithmetic over cyclotomic fields and one quadratic layer on top,
//! plus the small dense linear algebra the rest of the crate needs.

mod cyclotomic;
mod linalg;
mod matrix;
pub mod poly;
mod quadratic;

use std::fmt;

use thiserror::Error;

pub use cyclotomic::{parse_rational, CycNumber, CycNumberJson, CyclotomicField};
pub use linalg::{kernel_basis, rank, Matrix};
pub use matrix::{adjoint_action, Mat2, Mat3};
pub use poly::cyclotomic_polynomial;
pub use quadratic::QuadExt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is a zero divisor: the radicand is a square in the base field")]
    ZeroDivisor,
    #[error("field context mismatch: {0}")]
    ContextMismatch(String),
    #[error("matrix has determinant different from 1")]
    DeterminantNotOne,
    #[error("malformed number: {0}")]
    Malformed(String),
}

/// Elements of an exact field that carry their own context (conductor,
/// radicand). Constants are produced from an existing element so that
/// generic code never has to know how the context is represented.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, FieldError>;
    /// True when both elements live in the same field context.
    fn same_field(&self, other: &Self) -> bool;

    fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn is_one(&self) -> bool {
        self.sub(&self.one_like()).is_zero()
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }
}
