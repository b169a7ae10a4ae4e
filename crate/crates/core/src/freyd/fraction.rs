use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{Carrier, ExactStructure};
use crate::fpmod::{free_cover, pullback, FpModule, FpMorphism};
use crate::report::{run_samples, CheckReport, Probe};
use crate::sampling::{Bounds, Sampler};

use super::effaceable::{auslander_project, is_effaceable, project_morphism};
use super::sample::{equivalent_presentation, morphism_from, sample_object};
use super::{cokernel, image, kernel, pullback_objects, FreydMorphism, FreydObject};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum WeakIsoStep {
    /// An epimorphism whose kernel is effaceable.
    Deflation { map: FreydMorphism, kernel: FreydObject },
    /// A monomorphism whose cokernel is effaceable.
    Inflation { map: FreydMorphism, cokernel: FreydObject },
}

impl WeakIsoStep {
    pub fn map(&self) -> &FreydMorphism {
        match self {
            WeakIsoStep::Deflation { map, .. } | WeakIsoStep::Inflation { map, .. } => map,
        }
    }
}

/// A composite of certified steps, listed in the order they are applied.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeakIso {
    exact: ExactStructure,
    map: FreydMorphism,
    steps: Vec<WeakIsoStep>,
}

impl WeakIso {
    pub fn identity(f: &FreydObject, ex: &ExactStructure) -> WeakIso {
        WeakIso { exact: *ex, map: FreydMorphism::identity(f), steps: Vec::new() }
    }

    /// Factors `φ` through its image and certifies both halves.
    pub fn certify(phi: &FreydMorphism, ex: &ExactStructure) -> Result<Option<WeakIso>> {
        let (_, epi, mono) = image(phi)?;
        let (k, _) = kernel(&epi)?;
        let (c, _) = cokernel(&mono)?;
        if !is_effaceable(&k, ex)? || !is_effaceable(&c, ex)? {
            return Ok(None);
        }
        let steps =
            vec![WeakIsoStep::Deflation { map: epi, kernel: k }, WeakIsoStep::Inflation { map: mono, cokernel: c }];
        Ok(Some(WeakIso { exact: *ex, map: phi.clone(), steps }))
    }

    pub fn map(&self) -> &FreydMorphism {
        &self.map
    }

    pub fn steps(&self) -> &[WeakIsoStep] {
        &self.steps
    }

    pub fn exact_structure(&self) -> &ExactStructure {
        &self.exact
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &WeakIso) -> Result<WeakIso> {
        if self.exact != inner.exact {
            return Err(Error::NotComposable("weak isomorphisms for different exact structures".into()));
        }
        let mut steps = inner.steps.clone();
        steps.extend(self.steps.iter().cloned());
        Ok(WeakIso { exact: self.exact, map: self.map.compose(&inner.map)?, steps })
    }

    /// Re-checks every certificate and that the steps compose to the map.
    pub fn verify(&self) -> Result<bool> {
        let mut total = FreydMorphism::identity(self.map.source());
        for step in &self.steps {
            let ok = match step {
                WeakIsoStep::Deflation { map, kernel: k } => {
                    map.is_epi()? && kernel(map)?.0 == *k && is_effaceable(k, &self.exact)?
                }
                WeakIsoStep::Inflation { map, cokernel: c } => {
                    map.is_mono()? && cokernel(map)?.0 == *c && is_effaceable(c, &self.exact)?
                }
            };
            if !ok {
                return Ok(false);
            }
            total = step.map().compose(&total)?;
        }
        total.equals(&self.map)
    }
}

/// A right roof `F ⇐ F' → G` with a certified weak isomorphism.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fraction {
    pub s: WeakIso,
    pub g: FreydMorphism,
}

impl Fraction {
    pub fn new(s: WeakIso, g: FreydMorphism) -> Result<Fraction> {
        if s.map.source() != g.source() {
            return Err(Error::NotComposable("roof legs have different sources".into()));
        }
        Ok(Fraction { s, g })
    }

    pub fn from_morphism(g: &FreydMorphism, ex: &ExactStructure) -> Fraction {
        Fraction { s: WeakIso::identity(g.source(), ex), g: g.clone() }
    }

    pub fn identity(f: &FreydObject, ex: &ExactStructure) -> Fraction {
        Fraction::from_morphism(&FreydMorphism::identity(f), ex)
    }

    pub fn zero(f: &FreydObject, g: &FreydObject, ex: &ExactStructure) -> Fraction {
        Fraction::from_morphism(&FreydMorphism::zero(f, g), ex)
    }

    pub fn source(&self) -> &FreydObject {
        self.s.map.target()
    }

    pub fn target(&self) -> &FreydObject {
        self.g.target()
    }

    /// `L(g) ∘ L(s)^{-1}`.
    pub fn project(&self) -> Result<FpMorphism> {
        let ex = &self.s.exact;
        let ls = project_morphism(&self.s.map, ex)?;
        let inv =
            ls.inverse().ok_or_else(|| Error::IllDefined("weak isomorphism does not project to an iso".into()))?;
        project_morphism(&self.g, ex)?.compose(&inv)
    }
}

/// `b ∘ a`, refining the roofs through a pull-back in `fp-E`.
pub fn fraction_compose(a: &Fraction, b: &Fraction) -> Result<Fraction> {
    if a.target() != b.source() {
        return Err(Error::NotComposable("fractions".into()));
    }
    let (_, p1, p2) = pullback_objects(&a.g, &b.s.map)?;
    let leg = WeakIso::certify(&p1, &a.s.exact)?
        .ok_or_else(|| Error::IllDefined("pull-back of a weak isomorphism is not certified".into()))?;
    Fraction::new(a.s.after(&leg)?, b.g.compose(&p2)?)
}

pub fn quotient_equal(a: &Fraction, b: &Fraction) -> Result<bool> {
    if a.source() != b.source() || a.target() != b.target() {
        return Err(Error::NotComposable("fractions are not parallel".into()));
    }
    a.project()?.equals(&b.project()?)
}

/// A fraction `F → G` projecting to `u: L(F) → L(G)`, through free covers of
/// the presentation of `F`.
pub fn lift_module_morphism(f: &FreydObject, g: &FreydObject, u: &FpMorphism, ex: &ExactStructure) -> Result<Fraction> {
    if ex.carrier == Carrier::TorsionClassZ {
        return Err(Error::Unsupported("free covers leave the finite carrier".into()));
    }
    let (lf, lg) = (auslander_project(f, ex)?, auslander_project(g, ex)?);
    if *u.source() != lf || *u.target() != lg {
        return Err(Error::NotComposable("module morphism does not match the projections".into()));
    }
    let c = free_cover(f.top());
    let (y, y1, y2) = pullback(&c, f.map());
    let d = free_cover(&y);
    let f2 = FreydObject::new(f.carrier(), y1.compose(&d)?)?;
    let s = FreydMorphism::new(f2.clone(), f.clone(), c.clone(), y2.compose(&d)?)?;
    let leg =
        WeakIso::certify(&s, ex)?.ok_or_else(|| Error::IllDefined("free cover is not a weak isomorphism".into()))?;
    let top = FpMorphism::new(c.source().clone(), g.top().clone(), u.matrix().clone())?;
    let phi = FreydMorphism::from_top(&f2, g, top)?
        .ok_or_else(|| Error::IllDefined("module morphism does not lift through the presentation".into()))?;
    Fraction::new(leg, phi)
}

/// `L(φ) = 0` iff `φ` factors through an effaceable functor, i.e. iff
/// `Im φ` is effaceable.
pub fn faithfulness_holds(phi: &FreydMorphism, ex: &ExactStructure) -> Result<bool> {
    let projected_zero = project_morphism(phi, ex)?.is_zero();
    let (i, _, _) = image(phi)?;
    Ok(projected_zero == is_effaceable(&i, ex)?)
}

fn js<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).unwrap_or(serde_json::Value::Null)
}

fn auslander_sample(s: &mut Sampler, ex: &ExactStructure, probe: &mut Probe) -> Result<()> {
    for _ in 0..2 {
        let f = sample_object(s, ex.carrier);
        let ok = auslander_project(&f, ex)?.is_zero() == is_effaceable(&f, ex)?;
        probe.expect(ok, "kernel of projection", || json!({ "object": js(&f) }));
        let f2 = equivalent_presentation(s, &f)?;
        probe.expect(
            is_effaceable(&f, ex)? == is_effaceable(&f2, ex)?,
            "presentation independence",
            || json!({ "object": js(&f), "other": js(&f2) }),
        );
    }

    let (f, g) = (sample_object(s, ex.carrier), sample_object(s, ex.carrier));
    let (lf, lg) = (auslander_project(&f, ex)?, auslander_project(&g, ex)?);
    let u = s.morphism(&lf, &lg);
    let ok = match lift_module_morphism(&f, &g, &u, ex) {
        Ok(fr) => fr.s.verify()? && fr.project()?.equals(&u)?,
        Err(_) => false,
    };
    probe.expect(ok, "fullness", || json!({ "source": js(&f), "target": js(&g), "matrix": u.matrix() }));

    let phi = morphism_from(s, &f)?;
    probe.expect(faithfulness_holds(&phi, ex)?, "faithfulness", || json!({ "morphism": js(&phi) }));

    let m = s.module(ex.ring());
    let ok = match essential_preimage(&m, ex) {
        Ok(p) => auslander_project(&p, ex)?.is_isomorphic(&m),
        Err(_) => false,
    };
    probe.expect(ok, "essential surjectivity", || json!({ "module": js(&m) }));
    Ok(())
}

/// The functor presented by a free presentation of `m`.
fn essential_preimage(m: &FpModule, ex: &ExactStructure) -> Result<FreydObject> {
    let ring = m.ring();
    let rel = FpModule::free(ring, m.relations());
    let gens = FpModule::free(ring, m.generators());
    let p = FpMorphism::new(rel, gens, m.presentation().clone())?;
    FreydObject::new(ex.carrier, p)
}

/// Sampled Auslander formula: the projection kills exactly the
/// effaceables, is full, faithful and essentially surjective.
pub fn auslander_check(ex: &ExactStructure, budget: usize, seed: u64, bounds: Bounds) -> Result<CheckReport> {
    auslander_project(&FreydObject::representable(ex.carrier, &FpModule::zero(ex.ring()))?, ex)?;
    if ex.carrier == Carrier::TorsionClassZ {
        return Err(Error::Unsupported("fullness lift on the finite carrier".into()));
    }
    Ok(run_samples(seed, budget, bounds, |s, probe| {
        if let Err(e) = auslander_sample(s, ex, probe) {
            probe.fail("error", json!({ "message": e.to_string() }));
        }
    }))
}
