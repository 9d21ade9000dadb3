//! The embedded release battery run by `charvar self-check`.

use std::sync::Arc;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::family::{alpha_m_histogram, hp_invariants, FamilyReport, FamilySpec, GroupValue};
use crate::field::{CycNumber, CyclotomicField, Field, Mat2};
use crate::homology::{clean_model_sheaf, milnor_brieskorn_pham, Catalog, GradedAbelianGroup, SpaceCatalogEntry};
use crate::presentation::{parse_presentation, Presentation, Word};
use crate::rep::sample::{random_reducible_pair, random_sl2};
use crate::rep::{
    build_poly_system, classify, cocycle_report, jacobian_nullity_at, stabilizer_dim, RepType, Representation,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Replaces an entry's compactly supported cohomology by its ordinary
/// cohomology shifted one degree up, which breaks Poincaré duality.
pub fn corrupt_entry(mut entry: SpaceCatalogEntry) -> SpaceCatalogEntry {
    entry.compact_support_cohomology = entry.cohomology.shift(-1);
    entry
}

fn outcome(id: u32, name: &str, failures: Vec<String>, total: usize) -> CheckOutcome {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{total} cases")
    } else {
        format!("{} of {total} failed; first: {}", failures.len(), failures[0])
    };
    CheckOutcome {
        id,
        name: name.into(),
        passed,
        detail,
    }
}

fn family(s: &str, catalog: &Catalog) -> FamilyReport {
    let spec: FamilySpec = s.parse().expect("battery spec parses");
    hp_invariants(&spec, catalog, false).expect("battery spec is valid")
}

fn lens_expected(p: u64) -> GradedAbelianGroup {
    let (points, copies) = if p % 2 == 1 { (1, (p - 1) / 2) } else { (2, (p - 2) / 2) };
    GradedAbelianGroup::free(0, points)
        .sum(&GradedAbelianGroup::free(-2, copies))
        .sum(&GradedAbelianGroup::free(0, copies))
}

fn brieskorn_expected(n: u64) -> GradedAbelianGroup {
    let mut g = GradedAbelianGroup::free(-3, n).sum(&GradedAbelianGroup::free(0, n + 1));
    g.insert(-1, 0, &vec![2; n as usize]).expect("valid torsion");
    g
}

fn mat(k: &Arc<CyclotomicField>, e: [[i64; 2]; 2]) -> Mat2<CycNumber> {
    let c = |x| CycNumber::from_i64(k, x);
    Mat2::new(c(e[0][0]), c(e[0][1]), c(e[1][0]), c(e[1][1]))
}

/// (label, representation) pairs spanning cyclic, abelian, free and
/// central-extension groups.
pub fn oracle_battery() -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    for p in 2..=13u64 {
        let k = CyclotomicField::new(p as u32);
        let pres = Presentation::with_default_names(1, vec![Word::power(0, p as i64)]);
        for j in 0..p as i64 {
            let m = Mat2::diag(CycNumber::zeta_pow(&k, j), CycNumber::zeta_pow(&k, -j));
            let rho = Representation::new(pres.clone(), &k, vec![m]).expect("root of unity");
            out.push((format!("<x|x^{p}> diag(z^{j}, z^-{j})"), rho));
        }
    }
    let q = CyclotomicField::new(1);
    let z2 = parse_presentation("gens: a b\nrel: abAB").expect("static");
    let z2_images = [
        ("trivial", [[1, 0], [0, 1]], [[1, 0], [0, 1]]),
        ("diagonal", [[2, 0], [0, 1]], [[3, 0], [0, 1]]),
        ("parabolic", [[1, 1], [0, 1]], [[1, 2], [0, 1]]),
        ("central", [[-1, 0], [0, -1]], [[1, 0], [0, 1]]),
    ];
    for (label, a, b) in z2_images {
        let (mut a, mut b) = (mat(&q, a), mat(&q, b));
        if label == "diagonal" {
            let half = CycNumber::from_ratio(&q, 1, 2);
            let third = CycNumber::from_ratio(&q, 1, 3);
            a.d = half;
            b.d = third;
        }
        let rho = Representation::new(z2.clone(), &q, vec![a, b]).expect("commuting pair");
        out.push((format!("Z^2 {label}"), rho));
    }
    let z3 = parse_presentation("gens: a b c\nrel: abAB\nrel: acAC\nrel: bcBC").expect("static");
    out.push(("Z^3 trivial".into(), Representation::trivial(z3.clone(), &q)));
    let k4 = CyclotomicField::new(4);
    let i = CycNumber::zeta_pow(&k4, 1);
    let d = Mat2::diag(i.clone(), i.neg());
    let rho = Representation::new(
        z3.clone(),
        &k4,
        vec![d.clone(), d.mul(&d), Mat2::identity_like(&i.one_like())],
    )
    .expect("commuting diagonal triple");
    out.push(("Z^3 diagonal".into(), rho));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=3 {
        let f = Presentation::free(n);
        out.push((format!("F{n} trivial"), Representation::trivial(f.clone(), &q)));
        let imgs = (0..n).map(|_| random_sl2(&mut rng, &k4, 3)).collect();
        out.push((format!("F{n} random"), Representation::new(f, &k4, imgs).expect("free group")));
    }
    let ext = parse_presentation("gens: a b z\nrel: abABZ\nrel: zz\nrel: azAZ\nrel: bzBZ").expect("static");
    let b = Mat2::new(i.zero_like(), i.one_like(), i.one_like().neg(), i.zero_like());
    let z = Mat2::identity_like(&i.one_like()).neg();
    let rho = Representation::new(ext, &k4, vec![d, b, z]).expect("anticommuting pair with z = -I");
    out.push(("central extension, anticommuting pair".into(), rho));
    out
}

fn pairwise_coprime_triples(seed: u64, count: usize, max: u64) -> Vec<[u64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let t = [rng.gen_range(2..=max), rng.gen_range(2..=max), rng.gen_range(2..=max)];
        if t[0].gcd(&t[1]) == 1 && t[0].gcd(&t[2]) == 1 && t[1].gcd(&t[2]) == 1 {
            out.push(t);
        }
    }
    out
}

fn fricke_defect(a: &Mat2<CycNumber>, b: &Mat2<CycNumber>) -> CycNumber {
    let x = a.trace();
    let y = b.trace();
    let z = a.mul(b).trace();
    let comm = a.mul(b).mul(&a.adjugate()).mul(&b.adjugate()).trace();
    let two = x.from_i64_like(2);
    let four = x.from_i64_like(4);
    let lhs = comm.sub(&two);
    let rhs = x.square().add(&y.square()).add(&z.square()).sub(&x.mul(&y).mul(&z)).sub(&four);
    lhs.sub(&rhs)
}

/// Runs all checks against `catalog`; pass a corrupted catalog to exercise
/// the failure path.
pub fn run_self_check(catalog: &Catalog) -> Vec<CheckOutcome> {
    let mut results = Vec::new();
    let mut family_reports: Vec<FamilyReport> = Vec::new();

    let mut fails = Vec::new();
    let mut total = 0;
    for p in 2..=25u64 {
        for q in [1i64, p as i64 - 1] {
            total += 1;
            let r = family(&format!("lens:{p},{q}"), catalog);
            let ok = r.hp.computed().is_some_and(GradedAbelianGroup::is_zero)
                && r.hp_sharp.computed() == Some(&lens_expected(p))
                && r.hp_sharp.computed().map(GradedAbelianGroup::euler_characteristic) == Some(p as i64);
            if !ok {
                fails.push(format!("lens:{p},{q}"));
            }
            family_reports.push(r);
        }
    }
    results.push(outcome(1, "lens spaces", fails, total));

    let mut fails = Vec::new();
    let triples = [[2, 3, 5], [2, 3, 7], [2, 5, 7], [3, 4, 5], [3, 5, 7]];
    for t in triples {
        let n = (t[0] - 1) * (t[1] - 1) * (t[2] - 1) / 4;
        let r = family(&format!("brieskorn:{},{},{}", t[0], t[1], t[2]), catalog);
        let ok = r.hp.computed() == Some(&GradedAbelianGroup::free(0, n))
            && r.hp_sharp.computed() == Some(&brieskorn_expected(n))
            && r.hp_sharp.computed().map(GradedAbelianGroup::euler_characteristic) == Some(1);
        if !ok {
            fails.push(format!("{t:?}"));
        }
        family_reports.push(r);
    }
    results.push(outcome(2, "Brieskorn spheres", fails, triples.len()));

    let r = family("seifert:2,3,5,7", catalog);
    let counts = r.components.alpha_m_counts.clone().unwrap_or_default();
    let ok = counts.get(&3) == Some(&23)
        && counts.get(&4) == Some(&6)
        && r.lambda_c == 23
        && r.lambda_p == crate::family::LambdaValue::Known(59);
    results.push(outcome(
        3,
        "Seifert (2,3,5,7)",
        if ok { vec![] } else { vec![format!("counts {counts:?}")] },
        1,
    ));
    family_reports.push(r);

    let triples = pairwise_coprime_triples(0xa1fa, 50, 50);
    let fails: Vec<String> = triples
        .par_iter()
        .filter_map(|t| {
            let h = alpha_m_histogram(t, false).ok()?;
            let n = (t[0] - 1) * (t[1] - 1) * (t[2] - 1) / 4;
            let ok = h.get(&3).copied().unwrap_or(0) == n && h.keys().all(|&m| m <= 3);
            (!ok).then(|| format!("{t:?}"))
        })
        .collect();
    results.push(outcome(4, "alpha enumeration vs closed form", fails, triples.len()));

    let battery = oracle_battery();
    let fails: Vec<String> = battery
        .par_iter()
        .filter_map(|(label, rho)| {
            let sys = build_poly_system(rho.presentation());
            let nullity = jacobian_nullity_at(&sys, rho).ok();
            let z1 = cocycle_report(rho).dim_z1;
            (nullity != Some(z1)).then(|| format!("{label}: jacobian {nullity:?}, Z1 {z1}"))
        })
        .collect();
    results.push(outcome(5, "Fox vs Jacobian", fails, battery.len()));

    let mut fails = Vec::new();
    let mut total = 0;
    for p in 2..=13u64 {
        let k = CyclotomicField::new(p as u32);
        let pres = Presentation::with_default_names(1, vec![Word::power(0, p as i64)]);
        let one = CycNumber::from_i64(&k, 1);
        let mut images: Vec<(String, Mat2<CycNumber>)> = (0..p as i64)
            .map(|j| {
                (
                    format!("p={p} j={j}"),
                    Mat2::diag(CycNumber::zeta_pow(&k, j), CycNumber::zeta_pow(&k, -j)),
                )
            })
            .collect();
        if p % 2 == 0 {
            images.push((format!("p={p} -I"), Mat2::diag(one.neg(), one.neg())));
        }
        for (label, m) in images {
            total += 1;
            let rho = Representation::new(pres.clone(), &k, vec![m]).expect("root of unity");
            if cocycle_report(&rho).dim_h1 != 0 {
                fails.push(label);
            }
        }
    }
    results.push(outcome(6, "cyclic group cohomology", fails, total));

    let q = CyclotomicField::new(1);
    let t3 = parse_presentation("gens: a b c\nrel: abAB\nrel: acAC\nrel: bcBC").expect("static");
    let z1 = cocycle_report(&Representation::trivial(t3, &q)).dim_z1;
    results.push(outcome(
        7,
        "three-torus tangent space",
        if z1 == 9 { vec![] } else { vec![format!("dim Z1 = {z1}")] },
        1,
    ));

    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xf4ee);
    let k4 = CyclotomicField::new(4);
    for n in 1..=5usize {
        let z1 = cocycle_report(&Representation::trivial(Presentation::free(n), &q)).dim_z1;
        if z1 != 3 * n {
            fails.push(format!("F{n} trivial Z1 = {z1}"));
        }
        if n >= 2 {
            let imgs = (0..n).map(|_| random_sl2(&mut rng, &k4, 3)).collect();
            let rho = Representation::new(Presentation::free(n), &k4, imgs).expect("free group");
            let c = cocycle_report(&rho);
            if classify(&rho) != RepType::Irreducible || c.dim_h1 != 3 * n - 3 || stabilizer_dim(&rho) != 0 {
                fails.push(format!("F{n} sampled: H1 = {}", c.dim_h1));
            }
        }
    }
    results.push(outcome(8, "free groups", fails, 9));

    let mut rng = ChaCha8Rng::seed_from_u64(0xf41c);
    let pairs: Vec<(Mat2<CycNumber>, Mat2<CycNumber>)> = (0..100)
        .map(|i| {
            if i % 2 == 0 {
                random_reducible_pair(&mut rng, &k4, 2)
            } else {
                (random_sl2(&mut rng, &k4, 2), random_sl2(&mut rng, &k4, 2))
            }
        })
        .collect();
    let fails: Vec<String> = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(i, (a, b))| {
            let defect = fricke_defect(a, b);
            let comm = a.mul(b).mul(&a.adjugate()).mul(&b.adjugate()).trace().sub(&a.a.from_i64_like(2));
            let rho = Representation::new(Presentation::free(2), &k4, vec![a.clone(), b.clone()]).ok()?;
            let ok = defect.is_zero() && (classify(&rho).is_reducible() == comm.is_zero());
            (!ok).then(|| format!("pair {i}"))
        })
        .collect();
    results.push(outcome(9, "Fricke identity and reducibility", fails, pairs.len()));

    family_reports.push(family("S3", catalog));
    for k in 1..=4 {
        family_reports.push(family(&format!("connsum:{k}"), catalog));
    }
    let mut fails: Vec<String> = catalog
        .validate()
        .into_iter()
        .map(|(name, msg)| format!("catalog {name}: {msg}"))
        .collect();
    for r in &family_reports {
        for c in &r.checks {
            if c.name.ends_with("duality") && !c.passed {
                fails.push(format!("{} {}", r.family, c.name));
            }
        }
    }
    results.push(outcome(10, "duality", fails, family_reports.len()));

    let mut fails = Vec::new();
    for n in 1..=6usize {
        match milnor_brieskorn_pham(&vec![2; n]) {
            Ok((1, g)) if g == GradedAbelianGroup::free(n as i64 - 1, 1) => {}
            other => fails.push(format!("quadric n={n}: {other:?}")),
        }
    }
    for (a, mu) in [(vec![2u64, 3], 2u64), (vec![3, 3, 3], 8), (vec![2, 3, 5], 8)] {
        if milnor_brieskorn_pham(&a).map(|x| x.0) != Ok(mu) {
            fails.push(format!("{a:?}"));
        }
    }
    for (n, k) in [(3, 0), (5, 2), (4, 4)] {
        match clean_model_sheaf(n, k, catalog) {
            Ok(m) if m.sheaf.components.len() == 1 && m.sheaf.components[0].shift == k as i64 => {}
            _ => fails.push(format!("clean model ({n},{k})")),
        }
    }
    results.push(outcome(11, "Milnor local models", fails, 12));

    let mut fails = Vec::new();
    for r in &family_reports {
        for (label, g) in [("HP", &r.hp), ("HPsharp", &r.hp_sharp)] {
            if let GroupValue::Computed(g) = g {
                if !g.supported_nonpositive() {
                    fails.push(format!("{} {label}", r.family));
                }
            }
        }
    }
    results.push(outcome(12, "non-positive support", fails, family_reports.len()));

    let mut fails = Vec::new();
    let r1 = family("connsum:1", catalog);
    let expected = GradedAbelianGroup::free(-3, 1).sum(&GradedAbelianGroup::free(0, 1));
    if r1.hp_sharp.computed() != Some(&expected) {
        fails.push("connsum:1 HPsharp".into());
    }
    for k in [2u32, 3] {
        let r = family(&format!("connsum:{k}"), catalog);
        let rank = r.hp_sharp.computed().map(GradedAbelianGroup::total_rank);
        if rank != Some(1 << k) || !r.discrepancies.iter().any(|d| d.field == "HPsharp") {
            fails.push(format!("connsum:{k} HPsharp"));
        }
        if k == 2 && !r.hp.is_refused() {
            fails.push("connsum:2 HP not refused".into());
        }
    }
    results.push(outcome(13, "connected sums", fails, 3));

    results
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::Space;

    #[test]
    fn battery_is_large_enough() {
        assert!(oracle_battery().len() >= 20);
    }

    #[test]
    fn corrupted_catalog_fails_duality() {
        let bad = corrupt_entry(Catalog::standard().entry(Space::PSL2C));
        let results = run_self_check(&Catalog::standard().with_override(bad));
        let duality = results.iter().find(|r| r.id == 10).unwrap();
        assert!(!duality.passed);
    }
}
