//! Rank and right kernels by fraction-free (Bareiss) elimination.

use super::{Field, FieldError};

/// Dense row-major matrix. `proto` supplies zero/one for empty shapes.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    proto: T,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![proto.zero_like(); rows * cols],
            proto: proto.zero_like(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize, proto: &T) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
            proto: proto.zero_like(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn proto(&self) -> &T {
        &self.proto
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.proto.zero_like(), |acc, (a, x)| acc.add(&a.mul(x)))
            })
            .collect()
    }

    fn check_context(&self) -> Result<(), FieldError> {
        match self.data.iter().find(|x| !x.same_field(&self.proto)) {
            Some(x) => Err(FieldError::ContextMismatch(format!("entry {x} is not in the matrix field"))),
            None => Ok(()),
        }
    }

    /// Row echelon form (Bareiss updates) and the pivot columns.
    fn echelon(&self) -> Result<(Vec<Vec<T>>, Vec<usize>), FieldError> {
        self.check_context()?;
        let mut m: Vec<Vec<T>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut prev = self.proto.one_like();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let piv = m[r][c].clone();
            let (top, rest) = m.split_at_mut(r + 1);
            let prow = &top[r];
            for row in rest.iter_mut() {
                let lead = row[c].clone();
                for j in c + 1..self.cols {
                    let num = piv.mul(&row[j]).sub(&lead.mul(&prow[j]));
                    row[j] = num.div(&prev)?;
                }
                row[c] = self.proto.zero_like();
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        Ok((m, pivots))
    }
}

pub fn rank<T: Field>(m: &Matrix<T>) -> Result<usize, FieldError> {
    Ok(m.echelon()?.1.len())
}

/// Basis of the right null space `{x : m·x = 0}`. One vector per free column,
/// with a 1 in that column and 0 in the other free columns.
pub fn kernel_basis<T: Field>(m: &Matrix<T>) -> Result<Vec<Vec<T>>, FieldError> {
    let (ech, pivots) = m.echelon()?;
    let n = m.cols();
    let is_pivot = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let zero = m.proto().zero_like();
    let mut basis = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut x = vec![zero.clone(); n];
        x[free] = zero.one_like();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let row = &ech[r];
            let s = (pc + 1..n).fold(zero.clone(), |acc, j| acc.add(&row[j].mul(&x[j])));
            x[pc] = s.neg().div(&row[pc])?;
        }
        basis.push(x);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CycNumber, CyclotomicField};

    fn q(k: &std::sync::Arc<CyclotomicField>, v: i64) -> CycNumber {
        CycNumber::from_i64(k, v)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let k = CyclotomicField::new(1);
        let one = q(&k, 1);
        let rows = (0..3).map(|i| (0..3).map(|j| q(&k, (i == j) as i64)).collect()).collect();
        let m = Matrix::from_rows(rows, 3, &one);
        assert_eq!(rank(&m).unwrap(), 3);
        assert!(kernel_basis(&m).unwrap().is_empty());
    }

    #[test]
    fn zero_row_has_full_kernel() {
        let k = CyclotomicField::new(1);
        let m = Matrix::zeros(1, 3, &q(&k, 0));
        assert_eq!(kernel_basis(&m).unwrap().len(), 3);
        let empty = Matrix::zeros(0, 4, &q(&k, 0));
        assert_eq!(kernel_basis(&empty).unwrap().len(), 4);
    }

    #[test]
    fn gaussian_integer_rank_one() {
        let k = CyclotomicField::new(4);
        let i = CycNumber::zeta_pow(&k, 1);
        let m = Matrix::from_rows(vec![vec![q(&k, 1), i.clone()], vec![i.clone(), q(&k, -1)]], 2, &i);
        let ker = kernel_basis(&m).unwrap();
        assert_eq!(rank(&m).unwrap(), 1);
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn mixed_contexts_rejected() {
        let k1 = CyclotomicField::new(3);
        let k2 = CyclotomicField::new(5);
        let m = Matrix::from_rows(vec![vec![q(&k1, 1), q(&k2, 1)]], 2, &q(&k1, 0));
        assert!(matches!(kernel_basis(&m), Err(FieldError::ContextMismatch(_))));
    }
}
