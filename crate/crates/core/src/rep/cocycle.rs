//! Fox calculus through Ad∘ρ: cocycles, coboundaries, first cohomology.

use serde::{Deserialize, Serialize};

use super::Representation;
use crate::field::{adjoint_action, kernel_basis, rank, CycNumber, Mat2, Mat3, Matrix};

/// Dimensions of Z¹, B¹, H¹ and H⁰ for Ad∘ρ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CocycleReport {
    #[serde(rename = "dim_Z1")]
    pub dim_z1: usize,
    #[serde(rename = "dim_B1")]
    pub dim_b1: usize,
    #[serde(rename = "dim_H1")]
    pub dim_h1: usize,
    #[serde(rename = "dim_H0")]
    pub dim_h0: usize,
}

fn ad(g: &Mat2<CycNumber>) -> Mat3<CycNumber> {
    adjoint_action(g).expect("representation images have determinant 1")
}

/// Dimension of the joint kernel of Ad(ρ(g_i)) − I, i.e. the Lie algebra of
/// the stabilizer.
pub fn stabilizer_dim(rho: &Representation) -> usize {
    let one = rho.one();
    let id = Mat3::identity_like(&one);
    let mut rows = Vec::with_capacity(3 * rho.num_generators());
    for g in rho.images() {
        let d = ad(g).sub(&id);
        rows.extend(d.rows.iter().map(|r| r.to_vec()));
    }
    let m = Matrix::from_rows(rows, 3, &one);
    3 - rank(&m).expect("single field context")
}

/// The 3m × 3k matrix of Fox derivatives ∂r/∂g_j evaluated through Ad∘ρ,
/// for the left cocycle rule ξ(xy) = ξ(x) + Ad_{ρ(x)} ξ(y). Its right kernel
/// is Z¹ in coordinates (ξ(g_1), …, ξ(g_k)).
pub fn fox_matrix(rho: &Representation) -> Matrix<CycNumber> {
    let one = rho.one();
    let k = rho.num_generators();
    let relators = rho.presentation().relators();
    let mut out = Matrix::zeros(3 * relators.len(), 3 * k, &one);
    let inverses: Vec<Mat2<CycNumber>> = rho.images().iter().map(|g| g.adjugate()).collect();
    for (r, word) in relators.iter().enumerate() {
        let mut blocks = vec![Mat3::zero_like(&one); k];
        let mut prefix = Mat2::identity_like(&one);
        for l in word.letters() {
            let j = l.generator;
            if l.exponent > 0 {
                // ∂(u g)/∂g contributes Ad(ρ(u)).
                blocks[j] = blocks[j].add(&ad(&prefix));
                prefix = prefix.mul(&rho.images()[j]);
            } else {
                // ∂(u g⁻¹)/∂g contributes −Ad(ρ(u g⁻¹)).
                prefix = prefix.mul(&inverses[j]);
                blocks[j] = blocks[j].sub(&ad(&prefix));
            }
        }
        for (j, b) in blocks.iter().enumerate() {
            for a in 0..3 {
                for c in 0..3 {
                    out.set(3 * r + a, 3 * j + c, b.rows[a][c].clone());
                }
            }
        }
    }
    out
}

/// Basis of Z¹(Γ; Ad ρ) as vectors of length 3k.
pub fn cocycle_basis(rho: &Representation) -> Vec<Vec<CycNumber>> {
    kernel_basis(&fox_matrix(rho)).expect("single field context")
}

pub fn cocycle_report(rho: &Representation) -> CocycleReport {
    let fox = fox_matrix(rho);
    let dim_z1 = 3 * rho.num_generators() - rank(&fox).expect("single field context");
    let dim_h0 = stabilizer_dim(rho);
    let dim_b1 = 3 - dim_h0;
    debug_assert!(dim_b1 <= dim_z1, "coboundaries are cocycles");
    CocycleReport {
        dim_z1,
        dim_b1,
        dim_h1: dim_z1 - dim_b1,
        dim_h0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegularityVerdict {
    Regular,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub verdict: RegularityVerdict,
    /// Character-variety Lagrangians meet transversally: H¹ = 0.
    pub character_transversal: bool,
    /// Representation-variety Lagrangians meet transversally: Z¹ = 0.
    pub representation_transversal: bool,
    pub cocycles: CocycleReport,
}

/// `Regular` when H¹ = 0. Otherwise regularity depends on the local
/// dimension of R(Γ), which is not computed here.
pub fn is_regular_sufficient(rho: &Representation) -> RegularityReport {
    let cocycles = cocycle_report(rho);
    RegularityReport {
        verdict: if cocycles.dim_h1 == 0 {
            RegularityVerdict::Regular
        } else {
            RegularityVerdict::Inconclusive
        },
        character_transversal: cocycles.dim_h1 == 0,
        representation_transversal: cocycles.dim_z1 == 0,
        cocycles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CyclotomicField, Field};
    use crate::presentation::{parse_presentation, Presentation};

    fn cyclic(p: u32, j: i64) -> Representation {
        let k = CyclotomicField::new(p);
        let z = CycNumber::zeta_pow(&k, j);
        let pres = Presentation::with_default_names(1, vec![crate::presentation::Word::power(0, p as i64)]);
        Representation::new(pres, &k, vec![Mat2::diag(z.clone(), z.inv().unwrap())]).unwrap()
    }

    #[test]
    fn free_group_has_no_constraints() {
        let k = CyclotomicField::new(1);
        let rho = Representation::trivial(Presentation::free(3), &k);
        assert_eq!(fox_matrix(&rho).rows(), 0);
        let rep = cocycle_report(&rho);
        assert_eq!((rep.dim_z1, rep.dim_h0, rep.dim_b1, rep.dim_h1), (9, 3, 0, 9));
    }

    #[test]
    fn order_two_with_minus_identity() {
        let k = CyclotomicField::new(1);
        let p = parse_presentation("gens: x\nrel: xx").unwrap();
        let m = Mat2::identity_like(&CycNumber::from_i64(&k, 1)).neg();
        let rho = Representation::new(p, &k, vec![m]).unwrap();
        let fox = fox_matrix(&rho);
        let two = CycNumber::from_i64(&k, 2);
        for a in 0..3 {
            for c in 0..3 {
                let expect = if a == c { two.clone() } else { two.zero_like() };
                assert_eq!(fox.get(a, c), &expect);
            }
        }
        assert_eq!(cocycle_report(&rho).dim_z1, 0);
    }

    #[test]
    fn cyclic_block_is_geometric_sum() {
        for p in [3u32, 5, 7] {
            let rho = cyclic(p, 1);
            let fox = fox_matrix(&rho);
            let expected = [p as i64, 0, 0];
            for (a, &e) in expected.iter().enumerate() {
                assert_eq!(fox.get(a, a), &CycNumber::from_i64(rho.field(), e));
            }
            let rep = cocycle_report(&rho);
            assert_eq!((rep.dim_z1, rep.dim_b1, rep.dim_h1, rep.dim_h0), (2, 2, 0, 1));
            assert_eq!(is_regular_sufficient(&rho).verdict, RegularityVerdict::Regular);
        }
    }

    #[test]
    fn three_torus_trivial_rep() {
        let k = CyclotomicField::new(1);
        let p = parse_presentation("gens: a b c\nrel: abAB\nrel: acAC\nrel: bcBC").unwrap();
        let rho = Representation::trivial(p, &k);
        let rep = cocycle_report(&rho);
        assert_eq!(rep.dim_z1, 9);
        let reg = is_regular_sufficient(&rho);
        assert_eq!(reg.verdict, RegularityVerdict::Inconclusive);
        assert!(!reg.character_transversal && !reg.representation_transversal);
    }

    #[test]
    fn cocycles_satisfy_the_relator_constraint() {
        // Every kernel vector of the Fox matrix, extended multiplicatively to
        // the relator word, must give ξ(r) = 0.
        let k = CyclotomicField::new(4);
        let i = CycNumber::zeta_pow(&k, 1);
        let p = parse_presentation("gens: a b z\nrel: abABZ\nrel: zz\nrel: azAZ\nrel: bzBZ").unwrap();
        let a = Mat2::diag(i.clone(), i.neg());
        let b = Mat2::new(i.zero_like(), i.one_like(), i.one_like().neg(), i.zero_like());
        let z = Mat2::identity_like(&i).neg();
        let rho = Representation::new(p, &k, vec![a, b, z]).unwrap();
        for xi in cocycle_basis(&rho) {
            for r in rho.presentation().relators() {
                let mut acc = vec![i.zero_like(); 3];
                let mut prefix = Mat2::identity_like(&i);
                for l in r.letters() {
                    let g = &rho.images()[l.generator];
                    let xg: Vec<CycNumber> = xi[3 * l.generator..3 * l.generator + 3].to_vec();
                    let (step, next) = if l.exponent > 0 {
                        (xg, prefix.mul(g))
                    } else {
                        // ξ(g⁻¹) = −Ad(g⁻¹) ξ(g)
                        let gi = g.inverse().unwrap();
                        let adgi = adjoint_action(&gi).unwrap();
                        let v: Vec<CycNumber> = (0..3)
                            .map(|r| (0..3).fold(i.zero_like(), |s, c| s.add(&adgi.rows[r][c].mul(&xg[c]))).neg())
                            .collect();
                        (v, prefix.mul(&gi))
                    };
                    let adp = adjoint_action(&prefix).unwrap();
                    for (r, slot) in acc.iter_mut().enumerate() {
                        let add = (0..3).fold(i.zero_like(), |s, c| s.add(&adp.rows[r][c].mul(&step[c])));
                        *slot = slot.add(&add);
                    }
                    prefix = next;
                }
                assert!(acc.iter().all(|x| x.is_zero()));
            }
        }
    }
}
