use serde::{Deserialize, Serialize};

use super::catalog::SpaceCatalogEntry;
use super::graded::GradedAbelianGroup;

/// `multiplicity` disjoint copies of a catalog space carrying the constant
/// sheaf ℤ[shift].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafComponent {
    pub space: SpaceCatalogEntry,
    pub shift: i64,
    pub multiplicity: u64,
}

/// A shifted trivial local system on a disjoint union of catalog spaces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafModel {
    pub components: Vec<SheafComponent>,
}

impl SheafModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, space: SpaceCatalogEntry, shift: i64, multiplicity: u64) {
        if multiplicity > 0 {
            self.components.push(SheafComponent {
                space,
                shift,
                multiplicity,
            });
        }
    }

    pub fn with(mut self, space: SpaceCatalogEntry, shift: i64, multiplicity: u64) -> Self {
        self.push(space, shift, multiplicity);
        self
    }
}

fn assemble(m: &SheafModel, pick: impl Fn(&SpaceCatalogEntry) -> &GradedAbelianGroup) -> GradedAbelianGroup {
    m.components.iter().fold(GradedAbelianGroup::zero(), |acc, c| {
        acc.sum(&pick(&c.space).shift(c.shift).scale(c.multiplicity))
    })
}

pub fn hypercohomology(m: &SheafModel) -> GradedAbelianGroup {
    assemble(m, |e| &e.cohomology)
}

pub fn hypercohomology_cs(m: &SheafModel) -> GradedAbelianGroup {
    assemble(m, |e| &e.compact_support_cohomology)
}
