use std::collections::BTreeMap;

use serde::Serialize;

use crate::homology::{hypercohomology, hypercohomology_cs, Catalog, GradedAbelianGroup, SheafModel, Space};

use super::alpha::{alpha_m_histogram, arrange_exponents};
use super::lens::{lens_components, LensComponents};
use super::spec::{FamilyError, FamilySpec};

/// A graded group that is either computed, withheld, or known only through
/// a description of its summands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GroupValue {
    Computed(GradedAbelianGroup),
    Refused { refused: String },
    Symbolic { symbolic: SymbolicGroup },
}

impl GroupValue {
    pub fn computed(&self) -> Option<&GradedAbelianGroup> {
        match self {
            GroupValue::Computed(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_refused(&self) -> bool {
        matches!(self, GroupValue::Refused { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicGroup {
    pub description: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub shift_candidates: Vec<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub summands: Vec<SeifertSummand>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_characteristic: Option<i64>,
}

/// The summands H^{*+2m−6}(ℳ_α) for all α with a given m ≥ 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertSummand {
    pub m: usize,
    pub shift: i64,
    pub count: u64,
    pub euler_characteristic_each: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaValue {
    Known(i64),
    Unavailable,
}

impl Serialize for LambdaValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            LambdaValue::Known(v) => s.serialize_i64(*v),
            LambdaValue::Unavailable => s.serialize_str("unavailable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub space: String,
    pub shift: i64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refusal {
    pub field: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub field: String,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<GradedAbelianGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<GradedAbelianGroup>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub shift_candidates: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Components {
    #[serde(rename = "HP")]
    pub hp: Vec<ComponentInfo>,
    #[serde(rename = "HPsharp")]
    pub hp_sharp: Vec<ComponentInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lens: Option<LensComponents>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_m_counts: Option<BTreeMap<usize, u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    #[serde(rename = "HP")]
    pub hp: GroupValue,
    #[serde(rename = "HPsharp")]
    pub hp_sharp: GroupValue,
    #[serde(rename = "HP_cs")]
    pub hp_cs: GroupValue,
    #[serde(rename = "HPsharp_cs")]
    pub hp_sharp_cs: GroupValue,
    #[serde(rename = "lambdaP")]
    pub lambda_p: LambdaValue,
    #[serde(rename = "lambdaC")]
    pub lambda_c: i64,
    pub components: Components,
    pub refused: Vec<Refusal>,
    pub discrepancies: Vec<Discrepancy>,
    pub checks: Vec<Check>,
}

impl FamilyReport {
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

fn component_list(m: &SheafModel) -> Vec<ComponentInfo> {
    m.components
        .iter()
        .map(|c| ComponentInfo {
            space: c.space.name.clone(),
            shift: c.shift,
            multiplicity: c.multiplicity,
        })
        .collect()
}

/// χ(ℳ_α) = (m−1)(m−2)2^{m−4}.
pub fn seifert_component_euler(m: usize) -> i64 {
    let m = m as i64;
    if m < 3 {
        return 0;
    }
    (m - 1) * (m - 2) * (1i64 << m) / 16
}

/// Σ_{i<j<l} (a_i−1)(a_j−1)(a_l−1)/4.
pub fn lambda_c_seifert(a: &[u64]) -> i64 {
    let n = a.len();
    let mut total: i64 = 0;
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                total += ((a[i] - 1) * (a[j] - 1) * (a[l] - 1) / 4) as i64;
            }
        }
    }
    total
}

/// ℤ^k_(−3) ⊕ ℤ^k_(0): the closed form usually quoted for connected sums.
fn connsum_closed_form(k: u32) -> GradedAbelianGroup {
    GradedAbelianGroup::free(-3, k as u64).sum(&GradedAbelianGroup::free(0, k as u64))
}

struct Builder {
    hp: GroupValue,
    hp_cs: GroupValue,
    hp_sharp: GroupValue,
    hp_sharp_cs: GroupValue,
    hp_components: Vec<ComponentInfo>,
    hp_sharp_components: Vec<ComponentInfo>,
    lambda_p: LambdaValue,
    lambda_c: i64,
    lens: Option<LensComponents>,
    alpha_m_counts: Option<BTreeMap<usize, u64>>,
    refused: Vec<Refusal>,
    discrepancies: Vec<Discrepancy>,
    checks: Vec<Check>,
}

impl Builder {
    fn new() -> Self {
        let zero = GroupValue::Computed(GradedAbelianGroup::zero());
        Builder {
            hp: zero.clone(),
            hp_cs: zero.clone(),
            hp_sharp: zero.clone(),
            hp_sharp_cs: zero,
            hp_components: Vec::new(),
            hp_sharp_components: Vec::new(),
            lambda_p: LambdaValue::Known(0),
            lambda_c: 0,
            lens: None,
            alpha_m_counts: None,
            refused: Vec::new(),
            discrepancies: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn set_hp(&mut self, m: &SheafModel) {
        self.hp = GroupValue::Computed(hypercohomology(m));
        self.hp_cs = GroupValue::Computed(hypercohomology_cs(m));
        self.hp_components = component_list(m);
    }

    fn set_hp_sharp(&mut self, m: &SheafModel) {
        self.hp_sharp = GroupValue::Computed(hypercohomology(m));
        self.hp_sharp_cs = GroupValue::Computed(hypercohomology_cs(m));
        self.hp_sharp_components = component_list(m);
    }

    fn refuse_hp(&mut self, reason: &str) {
        self.hp = GroupValue::Refused { refused: reason.into() };
        self.hp_cs = GroupValue::Refused { refused: reason.into() };
        self.refused.push(Refusal {
            field: "HP".into(),
            reason: reason.into(),
        });
    }

    fn refuse_hp_sharp(&mut self, reason: &str) {
        self.hp_sharp = GroupValue::Refused { refused: reason.into() };
        self.hp_sharp_cs = GroupValue::Refused { refused: reason.into() };
        self.refused.push(Refusal {
            field: "HPsharp".into(),
            reason: reason.into(),
        });
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    fn finish(mut self, spec: &FamilySpec) -> FamilyReport {
        for (label, h, hc) in [("HP", &self.hp, &self.hp_cs), ("HPsharp", &self.hp_sharp, &self.hp_sharp_cs)] {
            if let (Some(h), Some(hc)) = (h.computed(), hc.computed()) {
                let (d, e, n) = (
                    *hc == h.uct_dual(),
                    hc.euler_characteristic() == h.euler_characteristic(),
                    h.supported_nonpositive(),
                );
                self.checks.push(Check {
                    name: format!("{label}_duality"),
                    passed: d,
                });
                self.checks.push(Check {
                    name: format!("{label}_euler_duality"),
                    passed: e,
                });
                self.checks.push(Check {
                    name: format!("{label}_nonpositive"),
                    passed: n,
                });
            }
        }
        if let (Some(order), Some(h)) = (spec.h1_order(), self.hp_sharp.computed()) {
            let chi = h.euler_characteristic();
            self.check("HPsharp_euler_equals_H1_order", chi == order as i64);
        }
        if let (LambdaValue::Known(l), Some(h)) = (self.lambda_p, self.hp.computed()) {
            let chi = h.euler_characteristic();
            self.check("lambdaP_equals_euler_HP", l == chi);
        }
        FamilyReport {
            family: spec.to_string(),
            hp: self.hp,
            hp_sharp: self.hp_sharp,
            hp_cs: self.hp_cs,
            hp_sharp_cs: self.hp_sharp_cs,
            lambda_p: self.lambda_p,
            lambda_c: self.lambda_c,
            components: Components {
                hp: self.hp_components,
                hp_sharp: self.hp_sharp_components,
                lens: self.lens,
                alpha_m_counts: self.alpha_m_counts,
            },
            refused: self.refused,
            discrepancies: self.discrepancies,
            checks: self.checks,
        }
    }
}

fn brieskorn_count(a: &[u64; 3]) -> u64 {
    (a[0] - 1) * (a[1] - 1) * (a[2] - 1) / 4
}

/// Framed model for a Seifert sphere with three exceptional fibers: the
/// trivial point plus N copies of PSL(2,ℂ) carrying ℤ[3].
fn brieskorn_sharp_model(n: u64, catalog: &Catalog) -> SheafModel {
    SheafModel::new()
        .with(catalog.entry(Space::Point), 0, 1)
        .with(catalog.entry(Space::PSL2C), 3, n)
}

/// HP, HP#, their compactly supported versions and the two Casson-type
/// invariants for a family member, with internal consistency checks.
pub fn hp_invariants(spec: &FamilySpec, catalog: &Catalog, parallel: bool) -> Result<FamilyReport, FamilyError> {
    spec.validate()?;
    let mut b = Builder::new();
    match spec {
        FamilySpec::Sphere3 => {
            b.set_hp(&SheafModel::new());
            b.set_hp_sharp(&SheafModel::new().with(catalog.entry(Space::Point), 0, 1));
        }
        FamilySpec::ConnSum(k) => {
            let k = *k;
            let sharp = SheafModel::new().with(catalog.entry(Space::SL2CPower(k)), 3 * k as i64, 1);
            b.set_hp_sharp(&sharp);
            let computed = hypercohomology(&sharp);
            let closed = connsum_closed_form(k);
            if computed != closed {
                b.discrepancies.push(Discrepancy {
                    field: "HPsharp".into(),
                    note: format!(
                        "Kunneth ranks C({k},j) in degrees 3j-{} differ from the closed form Z^{k}_(-3) + Z^{k}_(0); \
                         the Kunneth group is reported",
                        3 * k
                    ),
                    computed: Some(computed),
                    closed_form: Some(closed),
                    shift_candidates: Vec::new(),
                });
            }
            match k {
                1 => b.set_hp(&SheafModel::new()),
                2 => {
                    b.refuse_hp("local system on the irreducible locus is not identified for k = 2");
                    b.lambda_p = LambdaValue::Unavailable;
                }
                _ => {
                    let candidates = vec![3 * k as i64 + 3, 3 * k as i64 - 3];
                    let description = format!("H^{{*+s}}(X_irr(F_{k}); Z)");
                    b.hp = GroupValue::Symbolic {
                        symbolic: SymbolicGroup {
                            description: description.clone(),
                            shift_candidates: candidates.clone(),
                            summands: Vec::new(),
                            euler_characteristic: None,
                        },
                    };
                    b.hp_cs = GroupValue::Symbolic {
                        symbolic: SymbolicGroup {
                            description: format!("H_c^{{*+s}}(X_irr(F_{k}); Z)"),
                            shift_candidates: candidates.clone(),
                            summands: Vec::new(),
                            euler_characteristic: None,
                        },
                    };
                    b.discrepancies.push(Discrepancy {
                        field: "HP".into(),
                        note: format!(
                            "shift 3k+3 = {} quoted with the closed form disagrees with dim X_irr(F_k) = 3k-3 = {}",
                            candidates[0], candidates[1]
                        ),
                        computed: None,
                        closed_form: None,
                        shift_candidates: candidates,
                    });
                    b.lambda_p = LambdaValue::Unavailable;
                }
            }
        }
        FamilySpec::Lens { p, q } => {
            let lens = lens_components(*p, *q)?;
            b.set_hp(&SheafModel::new());
            b.set_hp_sharp(
                &SheafModel::new()
                    .with(catalog.entry(Space::Point), 0, lens.points)
                    .with(catalog.entry(Space::TS2), 2, lens.ts2_copies),
            );
            b.check("lens_witnesses", lens.witnesses_pass());
            b.lens = Some(lens);
        }
        FamilySpec::Brieskorn(a) => {
            let n = brieskorn_count(a);
            b.set_hp(&SheafModel::new().with(catalog.entry(Space::Point), 0, n));
            b.set_hp_sharp(&brieskorn_sharp_model(n, catalog));
            b.lambda_p = LambdaValue::Known(n as i64);
            b.lambda_c = n as i64;
        }
        FamilySpec::Seifert(a) => {
            let arranged = arrange_exponents(a)?;
            let hist = alpha_m_histogram(&arranged, parallel)?;
            let lambda_p: i64 = hist
                .iter()
                .map(|(&m, &c)| seifert_component_euler(m) * c as i64)
                .sum();
            b.lambda_p = LambdaValue::Known(lambda_p);
            b.lambda_c = lambda_c_seifert(&arranged);
            let isolated = hist.get(&3).copied().unwrap_or(0);
            if hist.keys().all(|&m| m <= 3) {
                b.set_hp(&SheafModel::new().with(catalog.entry(Space::Point), 0, isolated));
            } else {
                let summands: Vec<SeifertSummand> = hist
                    .iter()
                    .filter(|(&m, _)| m >= 3)
                    .map(|(&m, &count)| SeifertSummand {
                        m,
                        shift: 2 * m as i64 - 6,
                        count,
                        euler_characteristic_each: seifert_component_euler(m),
                    })
                    .collect();
                b.hp = GroupValue::Symbolic {
                    symbolic: SymbolicGroup {
                        description: "direct sum over alpha with m >= 3 of H^{*+2m-6}(M_alpha; Z)".into(),
                        shift_candidates: Vec::new(),
                        summands,
                        euler_characteristic: Some(lambda_p),
                    },
                };
                b.hp_cs = GroupValue::Refused {
                    refused: "only Euler characteristics of the positive-dimensional components are known".into(),
                };
                b.refused.push(Refusal {
                    field: "HP".into(),
                    reason: "group structure of positive-dimensional components is not determined; \
                             summands and Euler characteristics are reported"
                        .into(),
                });
            }
            if let [p, q, r] = arranged[..] {
                let n = brieskorn_count(&[p, q, r]);
                b.set_hp_sharp(&brieskorn_sharp_model(n, catalog));
                let agrees = isolated == n && hist.keys().all(|&m| m <= 3) && lambda_p == n as i64 && b.lambda_c == n as i64;
                b.check("seifert_brieskorn_agreement", agrees);
            } else {
                b.refuse_hp_sharp("framed group is only determined for three exceptional fibers");
            }
            b.alpha_m_counts = Some(hist);
        }
    }
    Ok(b.finish(spec))
}
