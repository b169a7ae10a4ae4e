use crate::error::{Error, Result};
use crate::exact::{Carrier, ExactStructure, Flavor};
use crate::fpmod::{copair, direct_sum, pullback, FpModule, FpMorphism};
use crate::ring::RingSpec;
use crate::sampling::Sampler;

use super::{upper_triangular, FreydMorphism, FreydObject};

/// A random object of the carrier category.
pub fn sample_in_carrier(s: &mut Sampler, carrier: Carrier) -> FpModule {
    match carrier {
        Carrier::FpZ => s.module(RingSpec::Integers),
        Carrier::TorsionClassZ => s.finite_module(),
        Carrier::FreeZ | Carrier::TorsionFreeClassZ => s.free_module(RingSpec::Integers),
        Carrier::FreePolyQ => s.free_module(RingSpec::RationalPolynomials),
    }
}

/// A random functor `Coker E(−, f)` with `f` a random carrier morphism.
pub fn sample_object(s: &mut Sampler, carrier: Carrier) -> FreydObject {
    let (a1, a0) = (sample_in_carrier(s, carrier), sample_in_carrier(s, carrier));
    let f = s.morphism(&a1, &a0);
    FreydObject::new(carrier, f).expect("sampled in the carrier")
}

/// A random deflation of `ex`, presenting an effaceable functor.
pub fn sample_deflation(s: &mut Sampler, ex: &ExactStructure) -> Result<FpMorphism> {
    match ex.flavor {
        Flavor::Split => {
            let (a, c) = (sample_in_carrier(s, ex.carrier), sample_in_carrier(s, ex.carrier));
            let sum = direct_sum(ex.ring(), &[&a, &c]);
            let u = s.morphism(&c, &a);
            let id = FpMorphism::identity(&a);
            Ok(copair(&sum, &[&id, &u]))
        }
        Flavor::Maximal | Flavor::Inherited => {
            let (x, y) = (sample_in_carrier(s, ex.carrier), sample_in_carrier(s, ex.carrier));
            let h = s.morphism(&x, &y);
            Ok(ex.e_cokernel(&h)?.1)
        }
    }
}

/// A random morphism out of `src`: its top is random and the target is
/// built so that the square commutes.
pub fn morphism_from(s: &mut Sampler, src: &FreydObject) -> Result<FreydMorphism> {
    let b = sample_object(s, src.carrier());
    let phi0 = s.morphism(src.top(), b.top());
    let ring = phi0.matrix().ring();
    let sum = direct_sum(ring, &[b.bottom(), src.bottom()]);
    let composite = phi0.compose(src.map())?;
    let target = FreydObject::new(src.carrier(), copair(&sum, &[b.map(), &composite]))?;
    FreydMorphism::new(src.clone(), target, phi0, sum.injections[1].clone())
}

/// A random morphism into `dst`.
pub fn morphism_into(s: &mut Sampler, dst: &FreydObject) -> Result<FreydMorphism> {
    let b0 = sample_in_carrier(s, dst.carrier());
    let psi0 = s.morphism(&b0, dst.top());
    let (_, p1, p2) = pullback(&psi0, dst.map());
    let source = FreydObject::new(dst.carrier(), p1)?;
    FreydMorphism::new(source, dst.clone(), psi0, p2)
}

/// The functor presented by `[[f1, x], [0, f2]]` for a random `x`, with
/// the canonical maps `F1 → E → F2`.
pub fn horseshoe_extension(
    s: &mut Sampler,
    f1: &FreydObject,
    f2: &FreydObject,
) -> Result<(FreydObject, FreydMorphism, FreydMorphism)> {
    if f1.carrier() != f2.carrier() {
        return Err(Error::CarrierMismatch("extension of functors on different carriers".into()));
    }
    let x = s.morphism(f2.bottom(), f1.top());
    let e = FreydObject::new(f1.carrier(), upper_triangular(f1.map(), &x, f2.map()))?;
    let ring = x.matrix().ring();
    let tops = direct_sum(ring, &[f1.top(), f2.top()]);
    let bottoms = direct_sum(ring, &[f1.bottom(), f2.bottom()]);
    let inj = FreydMorphism::new(f1.clone(), e.clone(), tops.injections[0].clone(), bottoms.injections[0].clone())?;
    let proj = FreydMorphism::new(e.clone(), f2.clone(), tops.projections[1].clone(), bottoms.projections[1].clone())?;
    Ok((e, inj, proj))
}

/// `f' = [f | f∘z] ⊕ id_C: A1 ⊕ A1' ⊕ C → A0 ⊕ C`, another presentation
/// of the same functor.
pub fn equivalent_presentation(s: &mut Sampler, f: &FreydObject) -> Result<FreydObject> {
    let carrier = f.carrier();
    let (extra, c) = (sample_in_carrier(s, carrier), sample_in_carrier(s, carrier));
    let z = s.morphism(&extra, f.bottom());
    let ring = z.matrix().ring();
    let fz = f.map().compose(&z)?;
    let left = direct_sum(ring, &[f.bottom(), &extra]);
    let wide = copair(&left, &[f.map(), &fz]);
    let x = FpMorphism::zero(&c, wide.target());
    let g = upper_triangular(&wide, &x, &FpMorphism::identity(&c));
    FreydObject::new(carrier, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_morphisms_commute() {
        let mut s = Sampler::new(4);
        for carrier in [Carrier::FpZ, Carrier::FreeZ, Carrier::TorsionClassZ, Carrier::FreePolyQ] {
            for _ in 0..5 {
                let f = sample_object(&mut s, carrier);
                morphism_from(&mut s, &f).unwrap();
                morphism_into(&mut s, &f).unwrap();
                let g = sample_object(&mut s, carrier);
                let (_, i, p) = horseshoe_extension(&mut s, &f, &g).unwrap();
                assert!(p.compose(&i).unwrap().is_zero().unwrap());
                equivalent_presentation(&mut s, &f).unwrap();
            }
        }
    }

    #[test]
    fn sampled_deflations_are_deflations() {
        let mut s = Sampler::new(5);
        for ex in [
            ExactStructure::new(Carrier::FreeZ, Flavor::Split),
            ExactStructure::new(Carrier::FpZ, Flavor::Maximal),
            ExactStructure::new(Carrier::TorsionClassZ, Flavor::Inherited),
            ExactStructure::new(Carrier::FreePolyQ, Flavor::Maximal),
        ] {
            for _ in 0..5 {
                let d = sample_deflation(&mut s, &ex).unwrap();
                assert!(ex.is_deflation(&d).unwrap(), "{ex}");
            }
        }
    }
}
