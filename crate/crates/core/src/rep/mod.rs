//! SL(2) representations of finitely presented groups over cyclotomic fields.

mod classify;
mod cocycle;
mod polysys;
mod report;
pub mod sample;
mod traces;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{CycNumber, CycNumberJson, CyclotomicField, Field, FieldError, Mat2};
use crate::presentation::{evaluate_word, parse_presentation, ParseError, Presentation, WordError};

pub use classify::{classify, RepType};
pub use cocycle::{
    cocycle_basis, cocycle_report, fox_matrix, is_regular_sufficient, stabilizer_dim, CocycleReport, RegularityReport, RegularityVerdict,
};
pub use polysys::{build_poly_system, jacobian_nullity_at, MPoly, PolyOrigin, PolySystem, PolySystemError};
pub use report::{rep_report, JacobianCheck, RepReport};
pub use traces::{trace_coordinates, trace_subsets, TraceError, MAX_TRACE_GENERATORS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of generator {generator} does not have determinant 1")]
    DeterminantNotOne { generator: String },
    #[error("relator {index} ({relator}) does not evaluate to the identity")]
    RelatorNotSatisfied { index: usize, relator: String },
    #[error("images live in different fields")]
    ContextMismatch,
    #[error("malformed representation: {0}")]
    Malformed(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl From<WordError> for RepError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::ImageCountMismatch { index, available } => RepError::ImageCount {
                expected: index + 1,
                got: available,
            },
            WordError::Field(f) => RepError::Field(f),
        }
    }
}

/// A homomorphism from a presented group to SL(2, ℚ(ζ_n)), stored as the
/// images of the generators. Construction checks determinants and relators.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    presentation: Presentation,
    field: Arc<CyclotomicField>,
    images: Vec<Mat2<CycNumber>>,
}

impl Representation {
    pub fn new(
        presentation: Presentation,
        field: &Arc<CyclotomicField>,
        images: Vec<Mat2<CycNumber>>,
    ) -> Result<Self, RepError> {
        if images.len() != presentation.num_generators() {
            return Err(RepError::ImageCount {
                expected: presentation.num_generators(),
                got: images.len(),
            });
        }
        let proto = CycNumber::zero(field);
        for m in &images {
            if [&m.a, &m.b, &m.c, &m.d].iter().any(|x| !x.same_field(&proto)) {
                return Err(RepError::ContextMismatch);
            }
        }
        for (i, m) in images.iter().enumerate() {
            if !m.det().is_one() {
                return Err(RepError::DeterminantNotOne {
                    generator: presentation.names()[i].clone(),
                });
            }
        }
        let one = proto.one_like();
        for (index, r) in presentation.relators().iter().enumerate() {
            if !evaluate_word(r, &images, &one)?.is_identity() {
                return Err(RepError::RelatorNotSatisfied {
                    index,
                    relator: presentation.format_word(r),
                });
            }
        }
        Ok(Representation {
            presentation,
            field: field.clone(),
            images,
        })
    }

    /// The trivial representation.
    pub fn trivial(presentation: Presentation, field: &Arc<CyclotomicField>) -> Self {
        let id = Mat2::identity_like(&CycNumber::from_i64(field, 1));
        let images = vec![id; presentation.num_generators()];
        Representation {
            presentation,
            field: field.clone(),
            images,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn images(&self) -> &[Mat2<CycNumber>] {
        &self.images
    }

    pub fn one(&self) -> CycNumber {
        CycNumber::from_i64(&self.field, 1)
    }

    pub fn num_generators(&self) -> usize {
        self.images.len()
    }

    /// `ρ ↦ gρg⁻¹`; `g` must have determinant 1.
    pub fn conjugate(&self, g: &Mat2<CycNumber>) -> Result<Self, RepError> {
        let ginv = g.inverse()?;
        let images = self.images.iter().map(|m| g.mul(m).mul(&ginv)).collect();
        Representation::new(self.presentation.clone(), &self.field, images)
    }

    pub fn to_json(&self) -> RepresentationJson {
        RepresentationJson {
            presentation: self.presentation.to_string(),
            conductor: self.field.conductor(),
            matrices: self
                .images
                .iter()
                .map(|m| {
                    let e = |x: &CycNumber| x.to_json().coeffs;
                    vec![vec![e(&m.a), e(&m.b)], vec![e(&m.c), e(&m.d)]]
                })
                .collect(),
        }
    }

    /// Parses the JSON form. `presentation_override`, when given, replaces
    /// the embedded presentation text.
    pub fn from_json(j: &RepresentationJson, presentation_override: Option<&Presentation>) -> Result<Self, RepError> {
        let presentation = match presentation_override {
            Some(p) => p.clone(),
            None => parse_presentation(&j.presentation)?,
        };
        if j.conductor == 0 {
            return Err(RepError::Malformed("conductor must be positive".into()));
        }
        let field = CyclotomicField::new(j.conductor);
        let entry = |v: &Vec<String>| {
            CycNumber::from_json(&CycNumberJson {
                conductor: j.conductor,
                coeffs: v.clone(),
            })
        };
        let mut images = Vec::with_capacity(j.matrices.len());
        for (g, m) in j.matrices.iter().enumerate() {
            if m.len() != 2 || m.iter().any(|r| r.len() != 2) {
                return Err(RepError::Malformed(format!("matrix {g} is not 2x2")));
            }
            images.push(Mat2::new(entry(&m[0][0])?, entry(&m[0][1])?, entry(&m[1][0])?, entry(&m[1][1])?));
        }
        Representation::new(presentation, &field, images)
    }
}

/// Wire form: `{"presentation": "...", "conductor": n, "matrices": [[[c..],[c..]],[[c..],[c..]]], ...]}`
/// where every entry is a power-basis coefficient vector of rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    #[serde(default)]
    pub presentation: String,
    pub conductor: u32,
    pub matrices: Vec<Vec<Vec<Vec<String>>>>,
}
