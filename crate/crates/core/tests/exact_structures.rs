mod common;

use proptest::prelude::*;
use tiltwork_core::exact::*;
use tiltwork_core::fpmod::*;
use tiltwork_core::sampling::Sampler;
use tiltwork_core::{IntMatrix, RingSpec};

const Z: RingSpec = RingSpec::Integers;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

fn ex(c: Carrier, f: Flavor) -> ExactStructure {
    ExactStructure::new(c, f)
}

#[test]
fn deflation_examples() {
    let z = FpModule::cyclic(0);
    let twice = FpMorphism::new(z.clone(), z.clone(), m(&[&[2]])).unwrap();
    assert!(!ex(Carrier::FpZ, Flavor::Maximal).is_deflation(&twice).unwrap());

    let z2 = FpModule::free(Z, 2);
    let pr = FpMorphism::new(z2, z.clone(), m(&[&[1, 0]])).unwrap();
    assert!(ex(Carrier::FreeZ, Flavor::Split).is_deflation(&pr).unwrap());

    let q = FpMorphism::new(FpModule::cyclic(4), FpModule::cyclic(2), m(&[&[1]])).unwrap();
    let tors = ex(Carrier::TorsionClassZ, Flavor::Inherited);
    assert!(tors.is_deflation(&q).unwrap());
    assert!(tors.e_kernel(&q).unwrap().0.is_isomorphic(&FpModule::cyclic(2)));

    assert!(matches!(
        ex(Carrier::FreeZ, Flavor::Split).is_deflation(&q),
        Err(tiltwork_core::Error::CarrierMismatch(_))
    ));
}

#[test]
fn kernel_cokernel_examples() {
    let free = ex(Carrier::FreeZ, Flavor::Split);
    let z = FpModule::cyclic(0);
    let twice = FpMorphism::new(z.clone(), z.clone(), m(&[&[2]])).unwrap();
    assert!(free.e_cokernel(&twice).unwrap().0.is_zero());
    assert!(free.e_kernel(&twice).unwrap().0.is_zero());
    assert!(free.e_cokernel(&FpMorphism::zero(&z, &z)).unwrap().0.is_isomorphic(&z));

    let f = FpMorphism::new(FpModule::free(Z, 2), z.clone(), m(&[&[2, 3]])).unwrap();
    let dk = free.d_kernel(&f).unwrap();
    let oracle = [3i64, -2];
    assert_eq!(2 * oracle[0] + 3 * oracle[1], 0);
    let g = common::to_i64(dk.incl.matrix());
    assert_eq!(g.len(), 2);
    assert_eq!(g[0][0] * oracle[1] - g[1][0] * oracle[0], 0);
    assert_eq!(common::gcd(g[0][0], g[1][0]), 1);

    let zero = FpMorphism::zero(&FpModule::free(Z, 2), &z);
    let dk = free.d_kernel(&zero).unwrap();
    assert!(is_iso(&dk.incl));
    let dk = free.d_kernel(&twice).unwrap();
    assert!(dk.module.is_zero());
    let (pi, k) = (dk.factorizer)(&FpMorphism::zero(&z, &z)).unwrap();
    assert!(is_iso(&pi));
    assert!(k.is_zero());
}

fn carrier_module(s: &mut Sampler, c: Carrier) -> FpModule {
    match c {
        Carrier::FreeZ | Carrier::TorsionFreeClassZ => s.free_module(Z),
        Carrier::FreePolyQ => s.free_module(RingSpec::RationalPolynomials),
        Carrier::FpZ => s.module(Z),
        Carrier::TorsionClassZ => s.finite_module(),
    }
}

fn structure_strategy() -> impl Strategy<Value = ExactStructure> {
    (0usize..5, 0usize..3).prop_map(|(c, f)| ExactStructure::new(Carrier::ALL[c], Flavor::ALL[f]))
}

/// A deflation produced from a random split or surjective map.
fn random_deflation(s: &mut Sampler, e: &ExactStructure) -> FpMorphism {
    let t = carrier_module(s, e.carrier);
    let k = carrier_module(s, e.carrier);
    let sum = direct_sum(e.ring(), &[&t, &k]);
    let mix = s.morphism(&t, &k);
    let pr = sum.projections[0].clone();
    // compose with the automorphism (t, k) ↦ (t, k + mix t) of the sum
    let auto = copair(&sum, &[&pair(&sum, &[&FpMorphism::identity(&t), &mix]), &sum.injections[1]]);
    pr.compose(&auto).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn deflations_compose(seed in any::<u64>(), e in structure_strategy()) {
        let mut s = Sampler::new(seed);
        let p = random_deflation(&mut s, &e);
        prop_assert!(e.is_deflation(&p).unwrap());
        let t = p.target().clone();
        let k = carrier_module(&mut s, e.carrier);
        let sum = direct_sum(e.ring(), &[&t, &k]);
        let q = FpMorphism::new(sum.module.clone(), sum.module.clone(), IntMatrix::identity(e.ring(), sum.module.generators())).unwrap();
        let q = sum.projections[0].compose(&q).unwrap();
        prop_assert!(e.is_deflation(&q).unwrap());
        let p2 = FpMorphism::identity(p.source());
        prop_assert!(e.is_deflation(&p.compose(&p2).unwrap()).unwrap());
        let lifted = random_deflation(&mut s, &e);
        if lifted.target() == p.source() {
            prop_assert!(e.is_deflation(&p.compose(&lifted).unwrap()).unwrap());
        }
        let (_, incl) = kernel(&p);
        prop_assert!(e.is_conflation(&incl, &p).unwrap());
    }

    #[test]
    fn pullback_of_deflation(seed in any::<u64>(), e in structure_strategy()) {
        let mut s = Sampler::new(seed);
        let p = random_deflation(&mut s, &e);
        let x = carrier_module(&mut s, e.carrier);
        let g = s.morphism(&x, p.target());
        let (pb, p1, p2) = pullback(&g, &p);
        prop_assert!(e.contains(&pb));
        prop_assert!(e.is_deflation(&p1).unwrap());
        prop_assert!(g.compose(&p1).unwrap().equals(&p.compose(&p2).unwrap()).unwrap());
        let i = kernel(&p).1;
        let h = s.morphism(i.source(), &x);
        let (po, _, q2) = pushout(&i, &h);
        prop_assert!(e.contains(&po));
        prop_assert!(e.is_inflation(&q2).unwrap());
    }

    #[test]
    fn free_maximal_equals_split(seed in any::<u64>(), poly in any::<bool>()) {
        let mut s = Sampler::new(seed);
        let (carrier, ring) = if poly { (Carrier::FreePolyQ, RingSpec::RationalPolynomials) } else { (Carrier::FreeZ, Z) };
        for _ in 0..5 {
            let a = s.free_module(ring);
            let b = s.free_module(ring);
            let f = if s.chance(0.5) { s.morphism(&a, &b) } else { random_deflation(&mut s, &ex(carrier, Flavor::Split)) };
            prop_assert_eq!(
                ex(carrier, Flavor::Maximal).is_deflation(&f).unwrap(),
                ex(carrier, Flavor::Split).is_deflation(&f).unwrap()
            );
            prop_assert_eq!(
                ex(carrier, Flavor::Maximal).is_inflation(&f).unwrap(),
                ex(carrier, Flavor::Split).is_inflation(&f).unwrap()
            );
        }
    }

    #[test]
    fn e_kernel_cokernel_universal(seed in any::<u64>(), e in structure_strategy()) {
        let mut s = Sampler::new(seed);
        let a = carrier_module(&mut s, e.carrier);
        let b = carrier_module(&mut s, e.carrier);
        let f = s.morphism(&a, &b);
        let (k, incl) = e.e_kernel(&f).unwrap();
        prop_assert!(e.contains(&k));
        prop_assert!(f.compose(&incl).unwrap().is_zero());
        let t = carrier_module(&mut s, e.carrier);
        let h = s.morphism(&t, &k);
        let jk = incl.compose(&h).unwrap();
        let fac = factor_through(&incl, &jk).unwrap().unwrap();
        prop_assert!(fac.equals(&h).unwrap());
        let dk = e.d_kernel(&f).unwrap();
        let (pi, kk) = (dk.factorizer)(&jk).unwrap();
        prop_assert!(e.is_deflation(&pi).unwrap());
        prop_assert!(jk.compose(&pi).unwrap().equals(&dk.incl.compose(&kk).unwrap()).unwrap());

        let (c, proj) = e.e_cokernel(&f).unwrap();
        prop_assert!(e.contains(&c));
        prop_assert!(proj.compose(&f).unwrap().is_zero());
        let h = s.morphism(&c, &t);
        let j = h.compose(&proj).unwrap();
        let fac = extend_along(&proj, &j).unwrap().unwrap();
        prop_assert!(fac.equals(&h).unwrap());

        let dc = e.d_cokernel(&f).unwrap();
        let (iota, kk) = (dc.factorizer)(&j).unwrap();
        prop_assert!(e.is_inflation(&iota).unwrap());
        prop_assert!(iota.compose(&j).unwrap().equals(&kk.compose(&dc.proj).unwrap()).unwrap());
    }
}
