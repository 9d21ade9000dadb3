use std::fmt;

use super::{Field, FieldError};

/// A 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Field> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity_like(x: &T) -> Self {
        Mat2::new(x.one_like(), x.zero_like(), x.zero_like(), x.one_like())
    }

    pub fn diag(u: T, v: T) -> Self {
        let z = u.zero_like();
        Mat2::new(u, z.clone(), z, v)
    }

    pub fn proto(&self) -> &T {
        &self.a
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2 {
            a: self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            c: self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            d: self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat2::new(self.a.sub(&o.a), self.b.sub(&o.b), self.c.sub(&o.c), self.d.sub(&o.d))
    }

    pub fn neg(&self) -> Self {
        Mat2::new(self.a.neg(), self.b.neg(), self.c.neg(), self.d.neg())
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat2::new(self.a.mul(s), self.b.mul(s), self.c.mul(s), self.d.mul(s))
    }

    pub fn det(&self) -> T {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn trace(&self) -> T {
        self.a.add(&self.d)
    }

    /// `[[d, −b], [−c, a]]`; the inverse on the determinant-one locus.
    pub fn adjugate(&self) -> Self {
        Mat2::new(self.d.clone(), self.b.neg(), self.c.neg(), self.a.clone())
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        let det = self.det();
        if det.is_one() {
            return Ok(self.adjugate());
        }
        let inv = det.inv()?;
        Ok(self.adjugate().scale(&inv))
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// True for ±I.
    pub fn is_central(&self) -> bool {
        self.is_scalar() && (self.a.is_one() || self.a.neg().is_one())
    }

    pub fn apply(&self, v: &[T; 2]) -> [T; 2] {
        [
            self.a.mul(&v[0]).add(&self.b.mul(&v[1])),
            self.c.mul(&v[0]).add(&self.d.mul(&v[1])),
        ]
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Mat2<U> {
        Mat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

impl<T: fmt::Display> fmt::Debug for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A 3×3 matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct Mat3<T> {
    pub rows: [[T; 3]; 3],
}

impl<T: Field> Mat3<T> {
    pub fn identity_like(x: &T) -> Self {
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { x.one_like() } else { x.zero_like() }));
        Mat3 { rows }
    }

    pub fn zero_like(x: &T) -> Self {
        Mat3 {
            rows: std::array::from_fn(|_| std::array::from_fn(|_| x.zero_like())),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let rows = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(self.rows[0][0].zero_like(), |acc, k| acc.add(&self.rows[i][k].mul(&o.rows[k][j])))
            })
        });
        Mat3 { rows }
    }

    pub fn add(&self, o: &Self) -> Self {
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| self.rows[i][j].add(&o.rows[i][j])));
        Mat3 { rows }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| self.rows[i][j].sub(&o.rows[i][j])));
        Mat3 { rows }
    }

    pub fn neg(&self) -> Self {
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| self.rows[i][j].neg()));
        Mat3 { rows }
    }

    pub fn det(&self) -> T {
        let m = &self.rows;
        let t0 = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
        let t1 = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
        let t2 = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
        t0.sub(&t1).add(&t2)
    }

    pub fn is_identity(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| if i == j { self.rows[i][j].is_one() } else { self.rows[i][j].is_zero() }))
    }
}

impl<T: fmt::Display> fmt::Debug for Mat3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}]", r[0], r[1], r[2])?;
        }
        write!(f, "]")
    }
}

/// Matrix of `X ↦ gXg⁻¹` on 𝔰𝔩₂ in the ordered basis
/// H = diag(1, −1), E = [[0,1],[0,0]], F = [[0,0],[1,0]].
/// Column j holds the coordinates of the image of the j-th basis vector.
pub fn adjoint_action<T: Field>(g: &Mat2<T>) -> Result<Mat3<T>, FieldError> {
    if !g.det().is_one() {
        return Err(FieldError::DeterminantNotOne);
    }
    let Mat2 { a, b, c, d } = g;
    let two = a.from_i64_like(2);
    let rows = [
        [a.mul(d).add(&b.mul(c)), a.mul(c).neg(), b.mul(d)],
        [two.mul(a).mul(b).neg(), a.square(), b.square().neg()],
        [two.mul(c).mul(d), c.square().neg(), d.square()],
    ];
    Ok(Mat3 { rows })
}
