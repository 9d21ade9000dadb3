//! Graded abelian groups, a small catalog of component spaces, hypercohomology
//! of shifted constant sheaves on them, and Milnor-fiber local models.

mod catalog;
mod graded;
mod milnor;
mod sheaf;

pub use catalog::{poincare_duality_check, Catalog, Space, SpaceCatalogEntry};
pub use graded::{DegreePart, GradedAbelianGroup, GradedError};
pub use milnor::{clean_model_sheaf, milnor_brieskorn_pham, CleanModel, MilnorError};
pub use sheaf::{hypercohomology, hypercohomology_cs, SheafComponent, SheafModel};
