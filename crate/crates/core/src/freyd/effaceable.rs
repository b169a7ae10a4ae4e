use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{Carrier, ExactStructure, Flavor};
use crate::fpmod::{cokernel, hom_group, FpModule, FpMorphism};
use crate::report::{run_samples, CheckReport, Probe};
use crate::ring::RingSpec;
use crate::sampling::Bounds;

use super::sample::{horseshoe_extension, morphism_from, morphism_into, sample_deflation, sample_object};
use super::{cokernel as f_cokernel, image, kernel, FreydMorphism, FreydObject};

fn check_carrier(f: &FreydObject, ex: &ExactStructure) -> Result<()> {
    if f.carrier() != ex.carrier {
        return Err(Error::CarrierMismatch(format!(
            "functor on {:?}, exact structure on {:?}",
            f.carrier(),
            ex.carrier
        )));
    }
    Ok(())
}

/// `F` is effaceable iff its presenting map is a deflation.
pub fn is_effaceable(f: &FreydObject, ex: &ExactStructure) -> Result<bool> {
    check_carrier(f, ex)?;
    ex.is_deflation(f.map())
}

/// Factors `φ: F → A` with `A` effaceable as `F ->> B -> A` with `B`
/// effaceable, `B` presented by the pull-back of the deflation of `A`.
pub fn right_filter_factor(
    phi: &FreydMorphism,
    ex: &ExactStructure,
) -> Result<(FreydObject, FreydMorphism, FreydMorphism)> {
    if !is_effaceable(phi.target(), ex)? {
        return Err(Error::IllDefined("target is not effaceable".into()));
    }
    image(phi)
}

fn projection_supported(ex: &ExactStructure) -> Result<()> {
    match (ex.carrier, ex.flavor) {
        (Carrier::FreeZ | Carrier::TorsionFreeClassZ | Carrier::FreePolyQ, _) => Ok(()),
        (Carrier::FpZ | Carrier::TorsionClassZ, Flavor::Maximal | Flavor::Inherited) => Ok(()),
        (c, fl) => Err(Error::Unsupported(format!("no abelian localization for {c:?} with {fl:?} conflations"))),
    }
}

/// `L(F) = Coker f` computed in finitely presented modules.
pub fn auslander_project(f: &FreydObject, ex: &ExactStructure) -> Result<FpModule> {
    check_carrier(f, ex)?;
    projection_supported(ex)?;
    Ok(cokernel(f.map()).0)
}

pub fn project_morphism(phi: &FreydMorphism, ex: &ExactStructure) -> Result<FpMorphism> {
    let (s, t) = (auslander_project(phi.source(), ex)?, auslander_project(phi.target(), ex)?);
    FpMorphism::new(s, t, phi.top().matrix().clone())
}

/// `F(U) = Coker(E(U, A1) → E(U, A0))` as an abelian group.
pub fn evaluate(f: &FreydObject, u: &FpModule) -> Result<FpModule> {
    let h1 = hom_group(u, f.bottom())?;
    let h0 = hom_group(u, f.top())?;
    let m = h1.postcompose_matrix(f.map(), &h0);
    let hf = FpMorphism::new(h1.module, h0.module, m)?;
    Ok(cokernel(&hf).0)
}

/// `φ_U: F(U) → G(U)`.
pub fn evaluate_morphism(phi: &FreydMorphism, u: &FpModule) -> Result<FpMorphism> {
    let (fu, gu) = (evaluate(phi.source(), u)?, evaluate(phi.target(), u)?);
    let h0 = hom_group(u, phi.source().top())?;
    let k0 = hom_group(u, phi.target().top())?;
    FpMorphism::new(fu, gu, h0.postcompose_matrix(phi.top(), &k0))
}

/// Effaceability of the three terms of a sequence `0 → T1 → T → T2 → 0`
/// asserted exact by the caller, when they contradict Serre closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreViolation {
    pub sub: bool,
    pub middle: bool,
    pub quotient: bool,
}

pub fn serre_violation(
    ex: &ExactStructure,
    sub: &FreydObject,
    middle: &FreydObject,
    quotient: &FreydObject,
) -> Result<Option<SerreViolation>> {
    let v = SerreViolation {
        sub: is_effaceable(sub, ex)?,
        middle: is_effaceable(middle, ex)?,
        quotient: is_effaceable(quotient, ex)?,
    };
    Ok((v.middle != (v.sub && v.quotient)).then_some(v))
}

fn js<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).unwrap_or(serde_json::Value::Null)
}

fn serre_sample(s: &mut crate::sampling::Sampler, ex: &ExactStructure, probe: &mut Probe) -> Result<()> {
    let t = FreydObject::new(ex.carrier, sample_deflation(s, ex)?)?;

    let phi = morphism_from(s, &t)?;
    let (k, _) = kernel(&phi)?;
    let (i, _, _) = image(&phi)?;
    probe.expect(
        serre_violation(ex, &k, &t, &i)?.is_none(),
        "subobject",
        || json!({ "effaceable": js(&t), "morphism": js(&phi) }),
    );

    let psi = morphism_into(s, &t)?;
    let (j, _, _) = image(&psi)?;
    let (c, _) = f_cokernel(&psi)?;
    probe.expect(
        serre_violation(ex, &j, &t, &c)?.is_none(),
        "quotient",
        || json!({ "effaceable": js(&t), "morphism": js(&psi) }),
    );

    let t2 = FreydObject::new(ex.carrier, sample_deflation(s, ex)?)?;
    let (e, inj, _) = horseshoe_extension(s, &t, &t2)?;
    let (sub, _, _) = image(&inj)?;
    probe.expect(serre_violation(ex, &sub, &e, &t2)?.is_none(), "extension", || json!({ "extension": js(&e) }));
    Ok(())
}

/// Sampled closure of effaceables under subobjects, quotients and
/// extensions in `fp-E`.
pub fn serre_closure_check(ex: &ExactStructure, budget: usize, seed: u64, bounds: Bounds) -> Result<CheckReport> {
    Ok(run_samples(seed, budget, bounds, |s, probe| {
        if let Err(e) = serre_sample(s, ex, probe) {
            probe.fail("error", json!({ "message": e.to_string() }));
        }
    }))
}

/// Sampled conflations `Ker φ ↣ F ↠ Im φ` of `fp-E` evaluate to short exact
/// sequences of abelian groups on free arguments of rank at most 3.
pub fn pointwise_conflation_check(carrier: Carrier, budget: usize, seed: u64, bounds: Bounds) -> Result<CheckReport> {
    if carrier.ring() != RingSpec::Integers {
        return Err(Error::UnsupportedRing { op: "pointwise evaluation", ring: carrier.ring() });
    }
    let abelian = ExactStructure::new(Carrier::FpZ, Flavor::Maximal);
    Ok(run_samples(seed, budget, bounds, |s, probe| {
        let body = |s: &mut crate::sampling::Sampler, probe: &mut Probe| -> Result<()> {
            let f = sample_object(s, carrier);
            let phi = morphism_from(s, &f)?;
            let (_, incl) = kernel(&phi)?;
            let (_, epi, _) = image(&phi)?;
            let u = FpModule::free(RingSpec::Integers, s.range(0, 3));
            let (iu, pu) = (evaluate_morphism(&incl, &u)?, evaluate_morphism(&epi, &u)?);
            probe.expect(
                abelian.is_conflation(&iu, &pu)?,
                "pointwise exactness",
                || json!({ "object": js(&f), "morphism": js(&phi), "rank": u.generators() }),
            );
            Ok(())
        };
        if let Err(e) = body(s, probe) {
            probe.fail("error", json!({ "message": e.to_string() }));
        }
    }))
}
