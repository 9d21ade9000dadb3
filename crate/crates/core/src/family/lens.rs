use rayon::prelude::*;
use serde::Serialize;

use crate::field::{CycNumber, CyclotomicField, Field, Mat2};
use crate::presentation::{Presentation, Word};
use crate::rep::{classify, cocycle_report, RepType, Representation};

use super::spec::FamilyError;

/// A point of R(ℤ/p) checked through the representation layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Image of the generator, as "diag(z^j, z^-j)", "I" or "-I".
    pub image: String,
    pub classification: RepType,
    #[serde(rename = "dim_H1")]
    pub dim_h1: usize,
}

impl Witness {
    pub fn is_expected(&self, expected: RepType) -> bool {
        self.classification == expected && self.dim_h1 == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LensComponents {
    pub p: u64,
    pub points: u64,
    pub ts2_copies: u64,
    /// Points of the character variety: the isolated points plus one per TS².
    pub character_points: u64,
    pub point_witnesses: Vec<Witness>,
    pub ts2_witnesses: Vec<Witness>,
}

impl LensComponents {
    pub fn witnesses_pass(&self) -> bool {
        self.point_witnesses.iter().all(|w| w.is_expected(RepType::Central))
            && self.ts2_witnesses.iter().all(|w| w.is_expected(RepType::Diagonal))
    }
}

fn witness(rho: &Representation, image: String) -> Witness {
    Witness {
        image,
        classification: classify(rho),
        dim_h1: cocycle_report(rho).dim_h1,
    }
}

/// Components of R(L(p,q)) = R(ℤ/p): ±I are isolated points and each
/// diagonal class diag(ζ^j, ζ^{−j}) with ζ^j ≠ ±1 sweeps out a copy of TS².
pub fn lens_components(p: u64, q: i64) -> Result<LensComponents, FamilyError> {
    super::FamilySpec::Lens { p, q }.validate()?;
    let pres = Presentation::with_default_names(1, vec![Word::power(0, p as i64)]);
    let field = CyclotomicField::new(p as u32);
    let one = CycNumber::from_i64(&field, 1);
    let even = p % 2 == 0;
    let ts2 = if even { (p - 2) / 2 } else { (p - 1) / 2 };

    let mut point_witnesses = vec![witness(&Representation::trivial(pres.clone(), &field), "I".into())];
    if even {
        let m = Mat2::diag(one.neg(), one.neg());
        let rho = Representation::new(pres.clone(), &field, vec![m]).expect("-I has order 2");
        point_witnesses.push(witness(&rho, "-I".into()));
    }
    let ts2_witnesses = (1..=ts2)
        .into_par_iter()
        .map(|j| {
            let j = j as i64;
            let m = Mat2::diag(CycNumber::zeta_pow(&field, j), CycNumber::zeta_pow(&field, -j));
            let rho = Representation::new(pres.clone(), &field, vec![m]).expect("diagonal root of unity");
            witness(&rho, format!("diag(z^{j}, z^-{j})"))
        })
        .collect();
    let points = if even { 2 } else { 1 };
    Ok(LensComponents {
        p,
        points,
        ts2_copies: ts2,
        character_points: points + ts2,
        point_witnesses,
        ts2_witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lens_inventories() {
        let c = lens_components(1, 0).unwrap();
        assert_eq!((c.points, c.ts2_copies, c.character_points), (1, 0, 1));
        let c = lens_components(5, 1).unwrap();
        assert_eq!((c.points, c.ts2_copies, c.character_points), (1, 2, 3));
        assert!(c.witnesses_pass());
        let c = lens_components(4, 1).unwrap();
        assert_eq!((c.points, c.ts2_copies, c.character_points), (2, 1, 3));
        assert!(c.witnesses_pass());
        assert!(lens_components(6, 3).is_err());
    }
}
