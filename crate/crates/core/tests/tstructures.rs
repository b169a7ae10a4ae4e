mod common;

use proptest::prelude::*;
use tiltwork_core::complex::{cohomology, derived_hom, Complex};
use tiltwork_core::exact::{Carrier, ExactStructure, Flavor};
use tiltwork_core::fpmod::{is_iso, FpModule, TorsionPairZ};
use tiltwork_core::sampling::Sampler;
use tiltwork_core::tstructure::*;
use tiltwork_core::{IntMatrix, RingSpec};

const Z: RingSpec = RingSpec::Integers;

fn split() -> ExactStructure {
    ExactStructure::new(Carrier::FreeZ, Flavor::Split)
}

fn order(m: &FpModule) -> Option<u64> {
    if m.invariants().free_rank > 0 {
        return None;
    }
    Some(m.invariants().torsion.iter().map(|d| u64::try_from(d.as_int().unwrap()).unwrap()).product())
}

#[test]
fn membership_examples() {
    let c2 = Complex::two_term(&IntMatrix::from_i64(&[&[2]]), 0);
    assert!(TStructureSpec::Left(split()).heart_membership(&c2).unwrap());
    assert!(!TStructureSpec::Right(split()).heart_membership(&c2).unwrap());
    let z = Complex::stalk(&FpModule::free(Z, 1), 0);
    assert!(TStructureSpec::Natural.heart_membership(&z).unwrap());
    assert!(!TStructureSpec::HRSTilt(TorsionPairZ).heart_membership(&z).unwrap());
    assert!(TStructureSpec::HRSTilt(TorsionPairZ).heart_membership(&z.shift(1)).unwrap());
}

fn diagonal(a: &[i64]) -> Vec<Vec<i64>> {
    (0..a.len()).map(|i| (0..a.len()).map(|j| if i == j { a[i] } else { 0 }).collect()).collect()
}

#[test]
fn heart_homs_match_brute_force_counts() {
    let cases: [(&[i64], &[i64]); 4] = [(&[2], &[4]), (&[4], &[6]), (&[2, 2], &[2]), (&[3], &[2, 9])];
    for (a, b) in cases {
        let (pa, pb) = (diagonal(a), diagonal(b));
        let rows = |p: &[Vec<i64>]| -> IntMatrix {
            let refs: Vec<&[i64]> = p.iter().map(|r| r.as_slice()).collect();
            IntMatrix::from_i64(&refs)
        };
        let m = FpModule::new(rows(&pa));
        let n = FpModule::new(rows(&pb));
        let expected = common::count_homs(&pa, a.len(), b) as u64;
        let h = derived_hom(&fpmod_to_heart(&m), &fpmod_to_heart(&n), 0).unwrap();
        assert_eq!(order(&h), Some(expected), "{a:?} -> {b:?}");
    }
}

#[test]
fn star_aisle_examples() {
    let z2 = Complex::stalk(&FpModule::cyclic(2), 0);
    assert!(star_membership(&z2, Carrier::TorsionClassZ, 1).unwrap().is_some());
    let z = Complex::stalk(&FpModule::free(Z, 1), 0);
    assert!(star_membership(&z, Carrier::TorsionClassZ, 1).unwrap().is_none());
    assert!(star_membership(&z, Carrier::FpZ, 2).unwrap().is_some());
    assert!(star_membership(&z, Carrier::TorsionClassZ, 2).is_err());
}

fn spec_strategy() -> impl Strategy<Value = TStructureSpec> {
    prop_oneof![
        Just(TStructureSpec::Natural),
        Just(TStructureSpec::Left(split())),
        Just(TStructureSpec::Right(split())),
        Just(TStructureSpec::HRSTilt(TorsionPairZ)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gap_inclusions(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = sample_object(&mut s, Ambient::Homotopy(Z), 3);
        let (left, right) = (TStructureSpec::Left(split()), TStructureSpec::Right(split()));
        let (a, _) = truncate_le(&right, -1, &x).unwrap();
        prop_assert!(left.in_aisle(0, &a).unwrap());
        let (b, _) = truncate_le(&left, 0, &x).unwrap();
        prop_assert!(right.in_aisle(0, &b).unwrap());
    }

    #[test]
    fn star_agrees_with_tilted_aisle(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = sample_object(&mut s, Ambient::Derived(Z), 3);
        let star = star_membership(&x, Carrier::TorsionClassZ, 1).unwrap().is_some();
        prop_assert_eq!(star, TStructureSpec::HRSTilt(TorsionPairZ).in_aisle(0, &x).unwrap());
        let star1 = TStructureSpec::StarAisle { class: Carrier::TorsionClassZ, n: 1 };
        prop_assert_eq!(star, star1.in_aisle(0, &x).unwrap());
    }

    #[test]
    fn natural_t_cohomology_is_cohomology(seed in any::<u64>(), n in -2i64..3) {
        let mut s = Sampler::new(seed);
        let x = sample_object(&mut s, Ambient::Derived(Z), 3);
        let h = t_cohomology(&TStructureSpec::Natural, &x, n).unwrap();
        prop_assert!(cohomology(&h, 0).module.is_isomorphic(&cohomology(&x, n).module));
        for d in [-1, 1] {
            prop_assert!(cohomology(&h, d).module.is_zero());
        }
    }

    #[test]
    fn truncations_land_in_aisle_and_coaisle(seed in any::<u64>(), spec in spec_strategy(), n in -1i64..2) {
        let mut s = Sampler::new(seed);
        let x = sample_object(&mut s, spec.ambient().unwrap(), 3);
        let (a, _) = truncate_le(&spec, n, &x).unwrap();
        let (b, _) = truncate_ge(&spec, n + 1, &x).unwrap();
        prop_assert!(spec.in_aisle(n, &a).unwrap());
        prop_assert!(spec.in_coaisle(n + 1, &b).unwrap());
        prop_assert!(spec.ambient().unwrap().hom_vanishes(&a, &b).unwrap());
    }

    #[test]
    fn heart_is_fully_faithful(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (m, n) = (s.module(Z), s.module(Z));
        prop_assert!(is_iso(&heart_comparison(&m, &n).unwrap()));
        let back = heart_to_fpmod(&fpmod_to_heart(&m));
        prop_assert!(back.is_isomorphic(&m));
    }

    #[test]
    fn tilted_pairs_decompose(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let b = s.range(0, 3);
        let extra = s.range(0, 2);
        let mut d = s.matrix(Z, b, b + extra);
        if tiltwork_core::linalg::rank(&d) < b {
            d = IntMatrix::hstack(Z, b, &[&d, &IntMatrix::identity(Z, b)]);
        }
        let x = Complex::two_term(&d, 0);
        let dec = tilted_torsion_decomposition(&x).unwrap().expect("heart object");
        prop_assert!(dec.sub_is_torsionfree_shift && dec.quotient_is_torsion && dec.orthogonal);
    }
}
