use serde::Serialize;
use thiserror::Error;

use super::catalog::{Catalog, Space, SpaceCatalogEntry};
use super::graded::GradedAbelianGroup;
use super::sheaf::SheafModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("exponent {value} at position {index} is below 2")]
    ExponentTooSmall { index: usize, value: u64 },
    #[error("need at least one variable")]
    NoVariables,
    #[error("k = {k} is outside 0..={n}")]
    KOutOfRange { n: u32, k: u32 },
    #[error("Milnor number overflows u64")]
    Overflow,
}

/// Milnor number and reduced Milnor-fiber cohomology of x₁^{a₁}+…+x_n^{a_n}
/// at the origin: μ = Π(a_i − 1), with ℤ^μ in degree n − 1.
pub fn milnor_brieskorn_pham(a: &[u64]) -> Result<(u64, GradedAbelianGroup), MilnorError> {
    if a.is_empty() {
        return Err(MilnorError::NoVariables);
    }
    let mut mu: u64 = 1;
    for (index, &value) in a.iter().enumerate() {
        if value < 2 {
            return Err(MilnorError::ExponentTooSmall { index, value });
        }
        mu = mu.checked_mul(value - 1).ok_or(MilnorError::Overflow)?;
    }
    Ok((mu, GradedAbelianGroup::free(a.len() as i64 - 1, mu)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleanModel {
    pub n: u32,
    pub k: u32,
    /// f = x_{k+1}² + … + x_n² in these variables.
    pub function: String,
    pub critical_locus: String,
    pub sheaf: SheafModel,
}

/// Vanishing-cycle model for the Morse–Bott function x_{k+1}² + … + x_n² on
/// ℂⁿ: the constant sheaf ℤ[k] on its critical locus ℂᵏ.
pub fn clean_model_sheaf(n: u32, k: u32, catalog: &Catalog) -> Result<CleanModel, MilnorError> {
    if k > n {
        return Err(MilnorError::KOutOfRange { n, k });
    }
    let space = if k == 0 { Space::Point } else { Space::Affine(k) };
    let entry: SpaceCatalogEntry = catalog.entry(space);
    let function = if k == n {
        "0".to_string()
    } else {
        ((k + 1)..=n).map(|i| format!("x{i}^2")).collect::<Vec<_>>().join(" + ")
    };
    Ok(CleanModel {
        n,
        k,
        function,
        critical_locus: entry.name.clone(),
        sheaf: SheafModel::new().with(entry, k as i64, 1),
    })
}
