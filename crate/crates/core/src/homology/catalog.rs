use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::graded::GradedAbelianGroup;

/// Component topologies that occur in the family computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Point,
    S2,
    RP3,
    S3,
    /// Tangent bundle of S², a smooth affine quadric surface.
    TS2,
    /// PSL(2,ℂ) ≃ ℝP³ × ℝ³.
    PSL2C,
    /// SL(2,ℂ) ≃ S³ × ℝ³.
    SL2C,
    /// ℂ^k.
    Affine(u32),
    /// SL(2,ℂ)^k.
    SL2CPower(u32),
}

impl Space {
    pub fn name(&self) -> String {
        match self {
            Space::Point => "point".into(),
            Space::S2 => "S2".into(),
            Space::RP3 => "RP3".into(),
            Space::S3 => "S3".into(),
            Space::TS2 => "TS2".into(),
            Space::PSL2C => "PSL2C".into(),
            Space::SL2C => "SL2C".into(),
            Space::Affine(k) => format!("C^{k}"),
            Space::SL2CPower(k) => format!("SL2C^{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceCatalogEntry {
    pub name: String,
    /// `None` for the compact real manifolds S², ℝP³, S³.
    pub complex_dimension: Option<u32>,
    pub real_dimension: u32,
    pub cohomology: GradedAbelianGroup,
    pub compact_support_cohomology: GradedAbelianGroup,
}

fn group(parts: &[(i64, u64, &[u64])]) -> GradedAbelianGroup {
    let mut g = GradedAbelianGroup::zero();
    for &(d, r, t) in parts {
        g.insert(d, r, t).expect("valid catalog torsion");
    }
    g
}

fn power(g: &GradedAbelianGroup, k: u32) -> GradedAbelianGroup {
    (0..k).fold(GradedAbelianGroup::free(0, 1), |acc, _| {
        acc.tensor_free(g).expect("torsion-free factor")
    })
}

fn standard_entry(space: Space) -> SpaceCatalogEntry {
    let (complex_dimension, real_dimension, cohomology, compact_support_cohomology) = match space {
        Space::Point => (Some(0), 0, group(&[(0, 1, &[])]), group(&[(0, 1, &[])])),
        Space::S2 => {
            let h = group(&[(0, 1, &[]), (2, 1, &[])]);
            (None, 2, h.clone(), h)
        }
        Space::RP3 => {
            let h = group(&[(0, 1, &[]), (2, 0, &[2]), (3, 1, &[])]);
            (None, 3, h.clone(), h)
        }
        Space::S3 => {
            let h = group(&[(0, 1, &[]), (3, 1, &[])]);
            (None, 3, h.clone(), h)
        }
        Space::TS2 => (
            Some(2),
            4,
            group(&[(0, 1, &[]), (2, 1, &[])]),
            group(&[(2, 1, &[]), (4, 1, &[])]),
        ),
        Space::PSL2C => (
            Some(3),
            6,
            group(&[(0, 1, &[]), (2, 0, &[2]), (3, 1, &[])]),
            group(&[(3, 1, &[]), (5, 0, &[2]), (6, 1, &[])]),
        ),
        Space::SL2C => (
            Some(3),
            6,
            group(&[(0, 1, &[]), (3, 1, &[])]),
            group(&[(3, 1, &[]), (6, 1, &[])]),
        ),
        Space::Affine(k) => (
            Some(k),
            2 * k,
            GradedAbelianGroup::free(0, 1),
            GradedAbelianGroup::free(2 * k as i64, 1),
        ),
        Space::SL2CPower(k) => {
            let g = standard_entry(Space::SL2C);
            (
                Some(3 * k),
                6 * k,
                power(&g.cohomology, k),
                power(&g.compact_support_cohomology, k),
            )
        }
    };
    SpaceCatalogEntry {
        name: space.name(),
        complex_dimension,
        real_dimension,
        cohomology,
        compact_support_cohomology,
    }
}

/// The fixed table of component topologies. Overrides replace entries by
/// name; they exist so that tests can inject a corrupted entry and watch the
/// duality checks fail.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    overrides: BTreeMap<String, SpaceCatalogEntry>,
}

impl Catalog {
    pub fn standard() -> Self {
        Self::default()
    }

    pub fn with_override(mut self, entry: SpaceCatalogEntry) -> Self {
        self.overrides.insert(entry.name.clone(), entry);
        self
    }

    pub fn entry(&self, space: Space) -> SpaceCatalogEntry {
        self.overrides
            .get(&space.name())
            .cloned()
            .unwrap_or_else(|| standard_entry(space))
    }

    /// The fixed spaces plus a few members of each parametrized family.
    pub fn listed_spaces() -> Vec<Space> {
        let mut v = vec![
            Space::Point,
            Space::S2,
            Space::RP3,
            Space::S3,
            Space::TS2,
            Space::PSL2C,
            Space::SL2C,
        ];
        v.extend((1..=4).map(Space::Affine));
        v.extend((1..=4).map(Space::SL2CPower));
        v
    }

    /// Runs the Poincaré-duality oracle over every listed entry; returns the
    /// names and failure messages of entries that do not pass.
    pub fn validate(&self) -> Vec<(String, String)> {
        Self::listed_spaces()
            .into_iter()
            .filter_map(|s| {
                let e = self.entry(s);
                poincare_duality_check(&e).err().map(|m| (e.name, m))
            })
            .collect()
    }
}

/// Checks H_c^i ≅ H_{n−i} for an oriented n-manifold, reading homology off
/// cohomology by H_j = free(H^j) ⊕ tors(H^{j+1}).
pub fn poincare_duality_check(entry: &SpaceCatalogEntry) -> Result<(), String> {
    let n = entry.real_dimension as i64;
    let mut expected = GradedAbelianGroup::zero();
    for (j, part) in entry.cohomology.iter() {
        expected.insert(n - j, part.rank, &[]).expect("no torsion");
        if !part.torsion.is_empty() {
            expected
                .insert(n - (j - 1), 0, &part.torsion)
                .expect("canonical torsion");
        }
    }
    if expected == entry.compact_support_cohomology {
        Ok(())
    } else {
        Err(format!(
            "compact-support cohomology {} does not match Poincare dual {} of {}",
            entry.compact_support_cohomology, expected, entry.name
        ))
    }
}
