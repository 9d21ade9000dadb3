use std::fmt;

use serde::{Deserialize, Serialize};

use super::Representation;
use crate::field::{CycNumber, Field, Mat2, QuadExt};

/// The five kinds of SL(2) representations, by the smallest standard
/// subgroup the image can be conjugated into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepType {
    /// Preserves no line.
    #[serde(rename = "A_irreducible")]
    Irreducible,
    /// Conjugate into the Borel subgroup, but not into B_P or D.
    #[serde(rename = "B_borel")]
    Borel,
    /// Conjugate into B_P = {±[[1,a],[0,1]]}, but not central.
    #[serde(rename = "C_parabolic")]
    Parabolic,
    /// Conjugate into the diagonal subgroup, but not central.
    #[serde(rename = "D_diagonal")]
    Diagonal,
    /// Image in {±I}.
    #[serde(rename = "E_central")]
    Central,
}

impl RepType {
    pub fn tag(self) -> &'static str {
        match self {
            RepType::Irreducible => "A_irreducible",
            RepType::Borel => "B_borel",
            RepType::Parabolic => "C_parabolic",
            RepType::Diagonal => "D_diagonal",
            RepType::Central => "E_central",
        }
    }

    pub fn is_reducible(self) -> bool {
        self != RepType::Irreducible
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

type Line = [CycNumber; 2];

enum CommonLines {
    None,
    One(Line),
    AtLeastTwo,
}

pub fn classify(rho: &Representation) -> RepType {
    let images = rho.images();
    let Some(m) = images.iter().find(|g| !g.is_central()) else {
        return RepType::Central;
    };
    match common_lines(images, m) {
        CommonLines::None => RepType::Irreducible,
        CommonLines::AtLeastTwo => RepType::Diagonal,
        CommonLines::One(v) => {
            // In a basis starting with v every image is upper triangular with
            // diagonal (λ, λ⁻¹), λ the eigenvalue on v.
            let parabolic = images.iter().all(|g| {
                let lambda = eigenvalue_on(g, &v);
                lambda.is_one() || lambda.neg().is_one()
            });
            if parabolic {
                RepType::Parabolic
            } else {
                RepType::Borel
            }
        }
    }
}

fn det2<T: Field>(u: &[T; 2], w: &[T; 2]) -> T {
    u[0].mul(&w[1]).sub(&u[1].mul(&w[0]))
}

fn preserves<T: Field>(g: &Mat2<T>, v: &[T; 2]) -> bool {
    det2(v, &g.apply(v)).is_zero()
}

fn eigenvalue_on(g: &Mat2<CycNumber>, v: &Line) -> CycNumber {
    let gv = g.apply(v);
    let i = if v[0].is_zero() { 1 } else { 0 };
    gv[i].div(&v[i]).expect("line vector is nonzero")
}

/// An eigenvector of the non-scalar `m` for the eigenvalue `lambda`.
fn eigenvector<T: Field>(m: &Mat2<T>, lambda: &T) -> [T; 2] {
    if !m.b.is_zero() {
        [m.b.clone(), lambda.sub(&m.a)]
    } else {
        // m is lower triangular; c ≠ 0 unless m is diagonal, which callers
        // handle separately when the eigenvalues differ.
        [lambda.sub(&m.d), m.c.clone()]
    }
}

fn filter_common(images: &[Mat2<CycNumber>], candidates: Vec<Line>) -> CommonLines {
    let mut kept: Vec<Line> = candidates
        .into_iter()
        .filter(|v| images.iter().all(|g| preserves(g, v)))
        .collect();
    match kept.len() {
        0 => CommonLines::None,
        1 => CommonLines::One(kept.pop().expect("one line")),
        _ => CommonLines::AtLeastTwo,
    }
}

/// Common invariant lines, found among the eigenlines of the first
/// non-central image `m`.
fn common_lines(images: &[Mat2<CycNumber>], m: &Mat2<CycNumber>) -> CommonLines {
    let t = m.trace();
    let two = t.from_i64_like(2);
    let disc = t.square().sub(&two.square());
    let half = two.inv().expect("2 is invertible");

    if disc.is_zero() {
        // Repeated eigenvalue ±1 and m ≠ ±I: a single eigenline.
        let lambda = t.mul(&half);
        return filter_common(images, vec![eigenvector(m, &lambda)]);
    }
    if m.b.is_zero() && m.c.is_zero() {
        let z = t.zero_like();
        let o = t.one_like();
        return filter_common(images, vec![[o.clone(), z.clone()], [z, o]]);
    }

    // Work formally in K(√disc) with λ = (t + √disc)/2. A test value
    // δ = α + β√disc vanishes at both roots iff δ = 0, at neither iff its
    // norm is nonzero, and at exactly one iff β ≠ 0 and α² = β²·disc, which
    // exhibits √disc = −α/β inside K.
    let s = QuadExt::sqrt_of(&disc);
    let lambda = QuadExt::embed(t.clone(), &disc).add(&s).mul(&QuadExt::embed(half.clone(), &disc));
    let mq = m.map(|x| QuadExt::embed(x.clone(), &disc));
    let v = eigenvector(&mq, &lambda);
    for g in images {
        let gq = g.map(|x| QuadExt::embed(x.clone(), &disc));
        let delta = det2(&v, &gq.apply(&v));
        if delta.is_zero() {
            continue;
        }
        if !delta.norm().is_zero() {
            return CommonLines::None;
        }
        let (alpha, beta) = delta.parts();
        let root = alpha.neg().div(beta).expect("beta is nonzero when the norm vanishes");
        debug_assert_eq!(root.square(), disc);
        let lp = t.add(&root).mul(&half);
        let lm = t.sub(&root).mul(&half);
        return filter_common(images, vec![eigenvector(m, &lp), eigenvector(m, &lm)]);
    }
    CommonLines::AtLeastTwo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CyclotomicField;
    use crate::presentation::{parse_presentation, Presentation};
    use std::sync::Arc;

    fn q(k: &Arc<CyclotomicField>, n: i64, d: i64) -> CycNumber {
        CycNumber::from_ratio(k, n, d)
    }

    fn free_rep(k: &Arc<CyclotomicField>, imgs: Vec<Mat2<CycNumber>>) -> Representation {
        Representation::new(Presentation::free(imgs.len()), k, imgs).unwrap()
    }

    #[test]
    fn anticommuting_pair_is_irreducible() {
        let k = CyclotomicField::new(4);
        let i = CycNumber::zeta_pow(&k, 1);
        let a = Mat2::diag(i.clone(), i.neg());
        let b = Mat2::new(i.zero_like(), i.one_like(), i.one_like().neg(), i.zero_like());
        assert_eq!(classify(&free_rep(&k, vec![a, b])), RepType::Irreducible);
    }

    #[test]
    fn cyclic_diagonal() {
        let k = CyclotomicField::new(5);
        let z = CycNumber::zeta_pow(&k, 1);
        let p = parse_presentation("gens: x\nrel: xxxxx").unwrap();
        let rho = Representation::new(p, &k, vec![Mat2::diag(z.clone(), z.inv().unwrap())]).unwrap();
        assert_eq!(classify(&rho), RepType::Diagonal);
    }

    #[test]
    fn parabolic_pair() {
        let k = CyclotomicField::new(1);
        let a = Mat2::new(q(&k, 1, 1), q(&k, 1, 1), q(&k, 0, 1), q(&k, 1, 1));
        let b = Mat2::new(q(&k, -1, 1), q(&k, 3, 1), q(&k, 0, 1), q(&k, -1, 1));
        assert_eq!(classify(&free_rep(&k, vec![a, b])), RepType::Parabolic);
    }

    #[test]
    fn borel_pair() {
        let k = CyclotomicField::new(1);
        let a = Mat2::diag(q(&k, 2, 1), q(&k, 1, 2));
        let b = Mat2::new(q(&k, 2, 1), q(&k, 1, 1), q(&k, 0, 1), q(&k, 1, 2));
        assert_eq!(classify(&free_rep(&k, vec![a, b])), RepType::Borel);
    }

    #[test]
    fn split_discriminant_found_through_norm() {
        // First image is non-diagonal with rational eigenvalues 2, 1/2; the
        // second shares exactly one of its eigenlines.
        let k = CyclotomicField::new(1);
        let a = Mat2::new(q(&k, 2, 1), q(&k, 1, 1), q(&k, 0, 1), q(&k, 1, 2));
        let b = Mat2::new(q(&k, 1, 1), q(&k, 5, 1), q(&k, 0, 1), q(&k, 1, 1));
        assert_eq!(classify(&free_rep(&k, vec![a.clone(), b])), RepType::Borel);
        // Same first image; the second preserves only the other eigenline (1, −3/2).
        let h = Mat2::new(q(&k, 2, 1), q(&k, 0, 1), q(&k, -3, 1), q(&k, 1, 2));
        let c = h.mul(&Mat2::new(q(&k, 3, 1), q(&k, 1, 1), q(&k, 0, 1), q(&k, 1, 3))).mul(&h.inverse().unwrap());
        let rho = free_rep(&k, vec![a, c]);
        assert_eq!(classify(&rho), RepType::Borel);
    }

    #[test]
    fn central_and_commuting() {
        let k = CyclotomicField::new(1);
        let one = q(&k, 1, 1);
        let id = Mat2::identity_like(&one);
        assert_eq!(classify(&free_rep(&k, vec![id.clone(), id.neg()])), RepType::Central);
        let d = Mat2::diag(q(&k, 3, 1), q(&k, 1, 3));
        assert_eq!(classify(&free_rep(&k, vec![id.neg(), d.clone(), d.mul(&d)])), RepType::Diagonal);
        let u = Mat2::new(one.clone(), q(&k, 4, 1), q(&k, 0, 1), one.clone());
        assert_eq!(classify(&free_rep(&k, vec![u.neg()])), RepType::Parabolic);
    }

    #[test]
    fn non_split_diagonalizable_pair() {
        // Powers of one elliptic element with irrational eigenvalues over ℚ.
        let k = CyclotomicField::new(1);
        let m = Mat2::new(q(&k, 0, 1), q(&k, 1, 1), q(&k, -1, 1), q(&k, 1, 1));
        assert_eq!(classify(&free_rep(&k, vec![m.clone(), m.mul(&m)])), RepType::Diagonal);
        let other = Mat2::new(q(&k, 1, 1), q(&k, 1, 1), q(&k, 0, 1), q(&k, 1, 1));
        assert_eq!(classify(&free_rep(&k, vec![m, other])), RepType::Irreducible);
    }
}
