//! Seeded generators of SL(2) matrices with small entries, for batteries
//! and property tests.

use std::sync::Arc;

use rand::Rng;

use crate::field::{CycNumber, CyclotomicField, Field, Mat2};

/// An element of ℚ(ζ_n) whose power-basis coordinates are integers in `-bound..=bound`.
pub fn small_element<R: Rng>(rng: &mut R, field: &Arc<CyclotomicField>, bound: i64) -> CycNumber {
    (0..field.degree() as i64).fold(CycNumber::zero(field), |acc, j| {
        let c = rng.gen_range(-bound..=bound);
        acc.add(&CycNumber::zeta_pow(field, j).mul(&CycNumber::from_i64(field, c)))
    })
}

/// `[[a, b], [c, (1 + bc)/a]]` with a, b, c small and a ≠ 0.
pub fn random_sl2<R: Rng>(rng: &mut R, field: &Arc<CyclotomicField>, bound: i64) -> Mat2<CycNumber> {
    let a = loop {
        let a = small_element(rng, field, bound);
        if !a.is_zero() {
            break a;
        }
    };
    let b = small_element(rng, field, bound);
    let c = small_element(rng, field, bound);
    let d = b.mul(&c).add(&a.one_like()).div(&a).expect("a is nonzero");
    Mat2::new(a, b, c, d)
}

/// Upper triangular `[[u, x], [0, u⁻¹]]` with u, x small and u ≠ 0.
pub fn random_upper<R: Rng>(rng: &mut R, field: &Arc<CyclotomicField>, bound: i64) -> Mat2<CycNumber> {
    let u = loop {
        let u = small_element(rng, field, bound);
        if !u.is_zero() {
            break u;
        }
    };
    let x = small_element(rng, field, bound);
    let uinv = u.inv().expect("u is nonzero");
    Mat2::new(u, x, uinv.zero_like(), uinv)
}

/// A pair sharing an invariant line: upper triangular matrices conjugated by
/// one random SL(2) element.
pub fn random_reducible_pair<R: Rng>(
    rng: &mut R,
    field: &Arc<CyclotomicField>,
    bound: i64,
) -> (Mat2<CycNumber>, Mat2<CycNumber>) {
    let g = random_sl2(rng, field, bound);
    let ginv = g.adjugate();
    let a = random_upper(rng, field, bound);
    let b = random_upper(rng, field, bound);
    (g.mul(&a).mul(&ginv), g.mul(&b).mul(&ginv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_have_determinant_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let k = CyclotomicField::new(4);
        for _ in 0..20 {
            assert!(random_sl2(&mut rng, &k, 3).det().is_one());
            let (a, b) = random_reducible_pair(&mut rng, &k, 2);
            assert!(a.det().is_one() && b.det().is_one());
        }
    }
}
