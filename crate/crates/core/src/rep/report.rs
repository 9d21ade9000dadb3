use serde::Serialize;

use super::{
    build_poly_system, classify, is_regular_sufficient, jacobian_nullity_at, trace_coordinates, CocycleReport,
    PolySystemError, RegularityReport, RepType, Representation, MAX_TRACE_GENERATORS,
};
use crate::field::CycNumberJson;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobianCheck {
    pub status: &'static str,
    pub jacobian_nullity: usize,
    #[serde(rename = "fox_dim_Z1")]
    pub fox_dim_z1: usize,
}

impl JacobianCheck {
    pub fn passed(&self) -> bool {
        self.jacobian_nullity == self.fox_dim_z1
    }
}

/// Everything known about one representation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepReport {
    pub classification: RepType,
    pub cocycles: CocycleReport,
    pub regularity: RegularityReport,
    pub jacobian_check: JacobianCheck,
    pub trace_coordinates: Option<Vec<CycNumberJson>>,
}

pub fn rep_report(rho: &Representation) -> Result<RepReport, PolySystemError> {
    let regularity = is_regular_sufficient(rho);
    let cocycles = regularity.cocycles;
    let nullity = jacobian_nullity_at(&build_poly_system(rho.presentation()), rho)?;
    let jacobian_check = JacobianCheck {
        status: if nullity == cocycles.dim_z1 { "pass" } else { "fail" },
        jacobian_nullity: nullity,
        fox_dim_z1: cocycles.dim_z1,
    };
    let trace_coordinates = (rho.num_generators() <= MAX_TRACE_GENERATORS).then(|| {
        trace_coordinates(rho)
            .expect("generator count checked")
            .iter()
            .map(|t| t.to_json())
            .collect()
    });
    Ok(RepReport {
        classification: classify(rho),
        cocycles,
        regularity,
        jacobian_check,
        trace_coordinates,
    })
}
