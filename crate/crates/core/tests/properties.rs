mod common;

use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use surftop::classifier::classify;
use surftop::complexes::{betti_mod2, polarized_double_cover_separates, separates_homology_oracle};
use surftop::covering::chi_total;
use surftop::dynamics::{fold, orbit_points, orbit_stats, Rational};
use surftop::signature::{normalize, SurfaceSig};

fn sig() -> impl Strategy<Value = SurfaceSig> {
    (0i64..=10, 0i64..=10, 0i64..=10).prop_map(|(g, c, n)| normalize(g, c, n).unwrap())
}

fn reduced() -> impl Strategy<Value = Rational> {
    (1i64..=2_000).prop_flat_map(|q| (0..q).prop_map(move |p| Ratio::new(p, q)))
}

proptest! {
    #[test]
    fn normalize_is_idempotent_and_keeps_euler(g in 0i64..=30, c in 0i64..=30, n in 0i64..=30) {
        let s = normalize(g, c, n).unwrap();
        prop_assert_eq!(normalize(s.genus().into(), s.crosscaps().into(), s.punctures().into()).unwrap(), s);
        prop_assert_eq!(s.euler(), 2 - 2 * g - c - n);
        prop_assert_eq!(s.is_orientable(), c == 0);
    }

    #[test]
    fn puncture_lowers_euler_by_one(s in sig()) {
        prop_assert_eq!(s.puncture().euler(), s.euler() - 1);
        prop_assert_eq!(s.cross_cap().euler(), s.euler() - 1);
        prop_assert_eq!(s.handle().euler(), s.euler() - 2);
    }

    #[test]
    fn invariants_determine_the_surface(a in sig(), b in sig()) {
        prop_assert_eq!(a.invariants() == b.invariants(), a == b);
    }

    #[test]
    fn dichotomic_surfaces_are_orientable(s in sig()) {
        prop_assert!(!s.is_dichotomic() || s.is_orientable());
    }

    #[test]
    fn verdicts_are_coherent(s in sig()) {
        prop_assert!(classify(&s).is_coherent());
    }

    #[test]
    fn literal_round_trip(s in sig()) {
        prop_assert_eq!(s.to_string().parse::<SurfaceSig>().unwrap(), s);
    }

    #[test]
    fn trivial_cover_keeps_euler(chi in -50i64..=2) {
        prop_assert_eq!(chi_total(1, chi, 0), chi);
    }

    #[test]
    fn fold_commutes_with_orbit(alpha in reduced(), seed in reduced(), n in 1usize..200) {
        let raw = orbit_points(&alpha, n, &seed);
        let mirrored = orbit_points(&(Rational::from_integer(1) - alpha), n, &(Rational::from_integer(1) - seed));
        for (x, y) in raw.iter().zip(&mirrored) {
            prop_assert_eq!(fold(x), fold(y));
            prop_assert!(fold(x) * 2 <= Rational::from_integer(1));
        }
    }

    #[test]
    fn orbit_gaps_match_sorting_oracle(alpha in reduced(), n in 1usize..300) {
        let mut xs: Vec<Rational> = (0..n as i64)
            .map(|i| {
                let v = alpha * i;
                v - v.floor()
            })
            .collect();
        xs.sort();
        xs.dedup();
        let mut gaps: Vec<Rational> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        gaps.push(Rational::from_integer(1) - xs[xs.len() - 1] + xs[0]);
        let stats = orbit_stats(&alpha, n).unwrap();
        prop_assert_eq!(&stats.points, &xs);
        prop_assert_eq!(stats.max_gap, *gaps.iter().max().unwrap());
        gaps.sort();
        gaps.dedup();
        prop_assert_eq!(stats.distinct_gaps, gaps.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn betti_numbers_give_euler(seed in any::<u64>(), family in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, mesh) = common::base_meshes().swap_remove(family);
        let sub = common::random_subdivision(&mesh, &mut rng);
        let b = betti_mod2(&sub).unwrap();
        prop_assert_eq!(b.euler(), sub.euler());
        prop_assert_eq!(b.euler(), mesh.euler());
        prop_assert_eq!((b.b0, b.b2), (1, 1));
    }

    #[test]
    fn every_cycle_separates_a_sphere(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, mesh) = common::base_meshes().swap_remove(0);
        let sub = common::random_subdivision(&mesh, &mut rng);
        prop_assert_eq!(betti_mod2(&sub).unwrap().b1, 0);
        for _ in 0..5 {
            let cycle = common::random_simple_cycle(&sub, &mut rng);
            prop_assert!(polarized_double_cover_separates(&sub, &cycle).unwrap());
            prop_assert!(separates_homology_oracle(&sub, &cycle));
        }
    }

    #[test]
    fn separation_routes_agree(seed in any::<u64>(), family in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, mesh) = common::base_meshes().swap_remove(family);
        let sub = common::random_subdivision(&mesh, &mut rng);
        for _ in 0..5 {
            let cycle = common::random_simple_cycle(&sub, &mut rng);
            prop_assert_eq!(
                polarized_double_cover_separates(&sub, &cycle).unwrap(),
                separates_homology_oracle(&sub, &cycle)
            );
        }
    }
}
