use std::fmt;

use super::{CycNumber, Field, FieldError};

/// `a + b√d` over a cyclotomic base field.
///
/// Arithmetic is the ring `K[s]/(s² − d)`. It is a field exactly when `d` is
/// not a square in `K`; otherwise [`Field::inv`] reports
/// [`FieldError::ZeroDivisor`] on elements of norm zero.
#[derive(Clone)]
pub struct QuadExt {
    a: CycNumber,
    b: CycNumber,
    d: CycNumber,
}

impl QuadExt {
    pub fn new(a: CycNumber, b: CycNumber, d: CycNumber) -> Self {
        assert!(a.same_field(&b) && a.same_field(&d), "QuadExt parts must share a base field");
        QuadExt { a, b, d }
    }

    /// Embeds a base-field element.
    pub fn embed(a: CycNumber, d: &CycNumber) -> Self {
        let b = a.zero_like();
        Self::new(a, b, d.clone())
    }

    /// The adjoined square root of `d`.
    pub fn sqrt_of(d: &CycNumber) -> Self {
        Self::new(d.zero_like(), d.one_like(), d.clone())
    }

    pub fn parts(&self) -> (&CycNumber, &CycNumber) {
        (&self.a, &self.b)
    }

    pub fn radicand(&self) -> &CycNumber {
        &self.d
    }

    /// `a − b√d`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), self.b.neg(), self.d.clone())
    }

    /// `a² − b²d`, an element of the base field.
    pub fn norm(&self) -> CycNumber {
        self.a.square().sub(&self.b.square().mul(&self.d))
    }

    fn with(&self, a: CycNumber, b: CycNumber) -> Self {
        QuadExt { a, b, d: self.d.clone() }
    }
}

impl Field for QuadExt {
    fn zero_like(&self) -> Self {
        self.with(self.a.zero_like(), self.a.zero_like())
    }

    fn one_like(&self) -> Self {
        self.with(self.a.one_like(), self.a.zero_like())
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.with(self.a.from_i64_like(n), self.a.zero_like())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.with(self.a.add(&rhs.a), self.b.add(&rhs.b))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.with(self.a.sub(&rhs.a), self.b.sub(&rhs.b))
    }

    fn mul(&self, rhs: &Self) -> Self {
        let a = self.a.mul(&rhs.a).add(&self.b.mul(&rhs.b).mul(&self.d));
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        self.with(a, b)
    }

    fn neg(&self) -> Self {
        self.with(self.a.neg(), self.b.neg())
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.norm();
        if n.is_zero() {
            return Err(FieldError::ZeroDivisor);
        }
        let ninv = n.inv()?;
        Ok(self.with(self.a.mul(&ninv), self.b.neg().mul(&ninv)))
    }

    fn same_field(&self, other: &Self) -> bool {
        self.a.same_field(&other.a) && self.d == other.d
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.a == other.a && self.b == other.b
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*sqrt({})", self.a, self.b, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CyclotomicField;

    #[test]
    fn sqrt_squares_to_radicand() {
        let k = CyclotomicField::new(5);
        let d = CycNumber::zeta_pow(&k, 1).add(&CycNumber::from_i64(&k, 3));
        let s = QuadExt::sqrt_of(&d);
        assert_eq!(s.square(), QuadExt::embed(d.clone(), &d));
    }

    #[test]
    fn inverse_round_trip() {
        let k = CyclotomicField::new(4);
        let i = CycNumber::zeta_pow(&k, 1);
        // 3 is not a square in ℚ(i).
        let d = CycNumber::from_i64(&k, 3);
        let x = QuadExt::new(i.clone(), CycNumber::from_ratio(&k, 2, 5), d);
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
    }

    #[test]
    fn square_radicand_gives_zero_divisors() {
        let k = CyclotomicField::new(1);
        let d = CycNumber::from_ratio(&k, 9, 4);
        let s = QuadExt::sqrt_of(&d);
        let x = s.sub(&QuadExt::embed(CycNumber::from_ratio(&k, 3, 2), &d));
        assert!(!x.is_zero());
        assert_eq!(x.inv(), Err(FieldError::ZeroDivisor));
    }
}
