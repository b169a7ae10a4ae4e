mod common;

use proptest::prelude::*;
use tiltwork_core::fpmod::*;
use tiltwork_core::sampling::Sampler;
use tiltwork_core::{Elem, IntMatrix, RingSpec};

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

fn map(src: &FpModule, tgt: &FpModule, g: &[&[i64]]) -> FpMorphism {
    FpMorphism::new(src.clone(), tgt.clone(), m(g)).unwrap()
}

#[test]
fn kernel_examples() {
    let z = FpModule::cyclic(0);
    let (k, _) = kernel(&map(&z, &z, &[&[2]]));
    assert!(k.is_zero());

    let z2 = FpModule::cyclic(2);
    let (k, incl) = kernel(&map(&z, &z2, &[&[1]]));
    assert!(k.is_isomorphic(&z));
    assert_eq!(incl.matrix().get(0, 0).as_int().unwrap().magnitude(), &2u32.into());

    let z4 = FpModule::cyclic(4);
    let f = map(&z4, &z4, &[&[2]]);
    let (k, incl) = kernel(&f);
    let size = common::count_kernel(&[vec![2]], &[4], &[4]);
    assert_eq!(size, 2);
    assert!(k.is_isomorphic(&FpModule::cyclic(size as i64)));
    let expected = map(&FpModule::cyclic(2), &z4, &[&[2]]);
    let c = k.canonical();
    assert!(incl.compose(&c.from).unwrap().equals(&expected).unwrap());
}

#[test]
fn cokernel_examples() {
    let z2 = FpModule::free(RingSpec::Integers, 2);
    let (c, _) = cokernel(&map(&z2, &z2, &[&[2, 0], &[0, 3]]));
    let factors = common::invariant_factors(&[vec![2, 0], vec![0, 3]]);
    assert_eq!(factors, vec![1, 6]);
    assert!(c.is_isomorphic(&FpModule::cyclic(6)));

    assert!(cokernel(&FpMorphism::identity(&z2)).0.is_zero());
    let z = FpModule::cyclic(0);
    assert!(cokernel(&FpMorphism::zero(&z, &z)).0.is_isomorphic(&z));
}

#[test]
fn hom_group_against_enumeration() {
    let h = hom_group(&FpModule::cyclic(4), &FpModule::cyclic(6)).unwrap();
    let count = common::count_homs(&[vec![4]], 1, &[6]);
    assert_eq!(count, 2);
    assert!(h.module.is_isomorphic(&FpModule::cyclic(2)));

    let n = FpModule::new(m(&[&[3, 0], &[1, 5]]));
    assert!(hom_group(&FpModule::cyclic(0), &n).unwrap().module.is_isomorphic(&n));
    assert!(hom_group(&FpModule::cyclic(2), &FpModule::cyclic(0)).unwrap().module.is_zero());
}

#[test]
fn hom_orders_match_brute_force() {
    let sources: &[&[&[i64]]] = &[&[&[2, 1], &[0, 2]], &[&[6]], &[&[4, 2], &[2, 0]], &[&[3, 3], &[0, 6]]];
    let targets: &[&[i64]] = &[&[2, 4], &[6], &[3, 3], &[4]];
    for p in sources {
        let pm = m(p);
        let pv = common::to_i64(&pm);
        let src = FpModule::new(pm);
        for orders in targets {
            let tgt = FpModule::new(IntMatrix::diagonal(
                RingSpec::Integers,
                orders.len(),
                orders.len(),
                &orders.iter().map(|&n| Elem::from(n)).collect::<Vec<_>>(),
            ));
            let h = hom_group(&src, &tgt).unwrap();
            assert!(h.module.is_torsion());
            let order: i64 =
                h.module.invariants().torsion.iter().map(|d| i64::try_from(d.as_int().unwrap()).unwrap()).product();
            assert_eq!(order as usize, common::count_homs(&pv, src.generators(), orders), "{p:?} -> {orders:?}");
        }
    }
}

#[test]
fn torsion_and_resolution_examples() {
    let d = torsion_decompose(&FpModule::new(m(&[&[0], &[4]]))).unwrap();
    assert!(d.torsion.is_isomorphic(&FpModule::cyclic(4)));
    assert!(d.quotient.is_isomorphic(&FpModule::cyclic(0)));
    let d = torsion_decompose(&FpModule::free(RingSpec::Integers, 2)).unwrap();
    assert!(d.torsion.is_zero());
    let p = [vec![2, 1], vec![0, 2]];
    assert_eq!(common::invariant_factors(&p), vec![1, 4]);
    let d = torsion_decompose(&FpModule::new(m(&[&[2, 1], &[0, 2]]))).unwrap();
    assert!(d.torsion.is_isomorphic(&FpModule::cyclic(4)));
    assert!(d.quotient.is_zero());

    let r = projective_resolution(&FpModule::cyclic(6), 1).unwrap();
    assert_eq!(r.maps, vec![m(&[&[6]])]);
    assert!(projective_resolution(&FpModule::free(RingSpec::Integers, 2), 0).unwrap().is_empty());
    let r = projective_resolution(&FpModule::new(m(&[&[2, 4], &[6, 8]])), 1).unwrap();
    assert_eq!(r.ranks, vec![2, 2]);
    assert_ne!(common::det(&[vec![2, 4], vec![6, 8]]), 0);
}

#[test]
fn polynomial_modules() {
    let ring = RingSpec::RationalPolynomials;
    let x = Elem::from(tiltwork_core::Poly::from_i64s(&[0, 1]));
    let x2m1 = Elem::from(tiltwork_core::Poly::from_i64s(&[-1, 0, 1]));
    let p = IntMatrix::diagonal(ring, 2, 2, &[x.clone(), x2m1]);
    let md = FpModule::new(p);
    assert_eq!(md.invariants().torsion.len(), 1);
    assert!(torsion_decompose(&md).is_err());
    assert!(projective_resolution(&md, 1).unwrap().len() == 1);
}

fn ring_strategy() -> impl Strategy<Value = RingSpec> {
    prop_oneof![Just(RingSpec::Integers), Just(RingSpec::RationalPolynomials)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_universal_property(seed in any::<u64>(), ring in ring_strategy()) {
        let mut s = Sampler::new(seed);
        let a = s.module(ring);
        let b = s.module(ring);
        let x = s.module(ring);
        let f = s.morphism(&a, &b);
        let (k, incl) = kernel(&f);
        prop_assert!(f.compose(&incl).unwrap().is_zero());
        prop_assert!(is_mono(&incl));
        let h = s.morphism(&x, &k);
        let g = incl.compose(&h).unwrap();
        let fac = kernel_factor(&incl, &g).expect("factorization exists");
        prop_assert!(fac.equals(&h).unwrap());
    }

    #[test]
    fn cokernel_universal_property(seed in any::<u64>(), ring in ring_strategy()) {
        let mut s = Sampler::new(seed);
        let a = s.module(ring);
        let b = s.module(ring);
        let y = s.module(ring);
        let f = s.morphism(&a, &b);
        let (c, proj) = cokernel(&f);
        prop_assert!(proj.compose(&f).unwrap().is_zero());
        prop_assert!(is_epi(&proj));
        let h = s.morphism(&c, &y);
        let g = h.compose(&proj).unwrap();
        let fac = cokernel_factor(&proj, &g).expect("factorization exists");
        prop_assert!(fac.equals(&h).unwrap());
    }

    #[test]
    fn torsion_pair_axioms(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let mm = s.module(RingSpec::Integers);
        let d = torsion_decompose(&mm).unwrap();
        let pair = TorsionPairZ;
        prop_assert!(pair.in_torsion_class(&d.torsion));
        prop_assert!(pair.in_torsionfree_class(&d.quotient));
        let y = s.free_module(RingSpec::Integers);
        prop_assert!(hom_group(&d.torsion, &y).unwrap().module.is_zero());
        prop_assert!(is_mono(&d.incl));
        prop_assert!(is_epi(&d.proj));
        let (k, k_incl) = kernel(&d.proj);
        prop_assert!(factor_through(&d.incl, &k_incl).unwrap().is_some());
        prop_assert!(factor_through(&k_incl, &d.incl).unwrap().is_some());
        prop_assert!(k.is_isomorphic(&d.torsion));
    }

    #[test]
    fn global_dimension_one(seed in any::<u64>(), ring in ring_strategy()) {
        let mut s = Sampler::new(seed);
        let mm = s.module(ring);
        let r = projective_resolution(&mm, 1).unwrap();
        prop_assert!(r.len() <= 1);
    }

    #[test]
    fn subgroups_of_free_are_free(seed in any::<u64>(), ring in ring_strategy()) {
        let mut s = Sampler::new(seed);
        let a = s.free_module(ring);
        let b = s.free_module(ring);
        let f = s.morphism(&a, &b);
        let (k, _) = kernel(&f);
        prop_assert!(k.presentation().is_zero());
    }

    #[test]
    fn hom_group_coordinates(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = s.module(RingSpec::Integers);
        let b = s.module(RingSpec::Integers);
        let h = hom_group(&a, &b).unwrap();
        let f = s.morphism(&a, &b);
        let c = h.coordinates(&f);
        prop_assert!(h.element(&c).equals(&f).unwrap());
    }
}
