use charvar::family::{hp_invariants, FamilySpec, LambdaValue};
use charvar::field::{CyclotomicField, Field};
use charvar::homology::Catalog;
use charvar::presentation::Presentation;
use charvar::rep::sample::{random_reducible_pair, random_sl2};
use charvar::rep::{
    build_poly_system, classify, cocycle_report, jacobian_nullity_at, trace_coordinates, Representation,
};
use num_integer::Integer;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sampled_pair(seed: u64, reducible: bool) -> Representation {
    let k = CyclotomicField::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = if reducible {
        random_reducible_pair(&mut rng, &k, 2)
    } else {
        (random_sl2(&mut rng, &k, 2), random_sl2(&mut rng, &k, 2))
    };
    Representation::new(Presentation::free(2), &k, vec![a, b]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invariants_survive_conjugation(seed in any::<u64>(), reducible in any::<bool>()) {
        let rho = sampled_pair(seed, reducible);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
        let g = random_sl2(&mut rng, rho.field(), 2);
        let sigma = rho.conjugate(&g).unwrap();
        prop_assert_eq!(classify(&rho), classify(&sigma));
        prop_assert_eq!(cocycle_report(&rho), cocycle_report(&sigma));
        prop_assert_eq!(trace_coordinates(&rho).unwrap(), trace_coordinates(&sigma).unwrap());
    }

    #[test]
    fn jacobian_nullity_matches_fox(seed in any::<u64>(), reducible in any::<bool>()) {
        let rho = sampled_pair(seed, reducible);
        let sys = build_poly_system(rho.presentation());
        prop_assert_eq!(jacobian_nullity_at(&sys, &rho).unwrap(), cocycle_report(&rho).dim_z1);
    }

    #[test]
    fn cocycle_dimensions_add_up(seed in any::<u64>(), reducible in any::<bool>()) {
        let rho = sampled_pair(seed, reducible);
        let c = cocycle_report(&rho);
        prop_assert_eq!(c.dim_z1, 6);
        prop_assert_eq!(c.dim_b1 + c.dim_h0, 3);
        prop_assert_eq!(c.dim_h1, c.dim_z1 - c.dim_b1);
    }

    #[test]
    fn seifert_triples_agree_with_brieskorn(p in 2u64..40, q in 2u64..40, r in 2u64..40) {
        prop_assume!(p.gcd(&q) == 1 && p.gcd(&r) == 1 && q.gcd(&r) == 1);
        let cat = Catalog::standard();
        let s = hp_invariants(&FamilySpec::Seifert(vec![p, q, r]), &cat, false).unwrap();
        let b = hp_invariants(&FamilySpec::Brieskorn([p, q, r]), &cat, false).unwrap();
        let n = ((p - 1) * (q - 1) * (r - 1) / 4) as i64;
        prop_assert_eq!(&s.hp, &b.hp);
        prop_assert_eq!(&s.hp_sharp, &b.hp_sharp);
        prop_assert_eq!(s.lambda_p, LambdaValue::Known(n));
        prop_assert_eq!(s.lambda_c, n);
        prop_assert!(s.consistent() && b.consistent());
    }

    #[test]
    fn lens_framed_euler_is_order_of_h1(p in 1u64..30, q in 1i64..30) {
        prop_assume!((p as i64).gcd(&q) == 1);
        let r = hp_invariants(&FamilySpec::Lens { p, q }, &Catalog::standard(), false).unwrap();
        prop_assert_eq!(r.hp_sharp.computed().unwrap().euler_characteristic(), p as i64);
        prop_assert!(r.consistent());
    }
}

#[test]
fn reducible_samples_have_vanishing_commutator_trace_defect() {
    for seed in 0..10 {
        let rho = sampled_pair(seed, true);
        let [a, b] = [&rho.images()[0], &rho.images()[1]];
        let comm = a.mul(b).mul(&a.adjugate()).mul(&b.adjugate());
        assert!(comm.trace().sub(&comm.a.from_i64_like(2)).is_zero());
        assert!(classify(&rho).is_reducible());
    }
}
