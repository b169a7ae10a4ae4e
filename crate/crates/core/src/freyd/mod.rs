//! The Freyd category `fp-E` of finitely presented functors on a carrier
//! category, presented by morphisms of `E`.

mod effaceable;
mod fraction;
mod opposite;
mod sample;

pub use effaceable::{
    auslander_project, evaluate, evaluate_morphism, is_effaceable, pointwise_conflation_check, project_morphism,
    right_filter_factor, serre_closure_check, serre_violation, SerreViolation,
};
pub use fraction::{
    auslander_check, faithfulness_holds, fraction_compose, lift_module_morphism, quotient_equal, Fraction, WeakIso,
    WeakIsoStep,
};
pub use opposite::Opposite;
pub use sample::{
    equivalent_presentation, horseshoe_extension, morphism_from, morphism_into, sample_deflation, sample_in_carrier,
    sample_object,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Carrier;
use crate::fpmod::{
    block_morphism, copair, direct_sum, factor_through, pair, pullback, sum_module, FpModule, FpMorphism,
};

/// `F = Coker(E(−, A1) → E(−, A0))` for a carrier morphism `f: A1 → A0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreydObject {
    carrier: Carrier,
    map: FpMorphism,
}

impl FreydObject {
    pub fn new(carrier: Carrier, map: FpMorphism) -> Result<FreydObject> {
        for m in [map.source(), map.target()] {
            if !carrier.contains(m) {
                return Err(Error::CarrierMismatch(format!("{m} is not in {carrier:?}")));
            }
        }
        Ok(FreydObject { carrier, map })
    }

    /// The representable functor `E(−, a)`.
    pub fn representable(carrier: Carrier, a: &FpModule) -> Result<FreydObject> {
        FreydObject::new(carrier, FpMorphism::zero(&FpModule::zero(a.ring()), a))
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn map(&self) -> &FpMorphism {
        &self.map
    }

    /// `A0`.
    pub fn top(&self) -> &FpModule {
        self.map.target()
    }

    /// `A1`.
    pub fn bottom(&self) -> &FpModule {
        self.map.source()
    }

    /// The functor vanishes iff `id_{A0}` factors through `f`.
    pub fn is_zero(&self) -> bool {
        self.map.section().is_some()
    }
}

/// A natural transformation, given by `top: A0 → B0` and `bottom: A1 → B1`
/// with `g ∘ bottom = top ∘ f`. Two such are equal when their tops differ
/// by a map factoring through `g`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FreydMorphism {
    source: FreydObject,
    target: FreydObject,
    top: FpMorphism,
    bottom: FpMorphism,
}

impl FreydMorphism {
    pub fn new(source: FreydObject, target: FreydObject, top: FpMorphism, bottom: FpMorphism) -> Result<FreydMorphism> {
        let lhs = target.map.compose(&bottom)?;
        let rhs = top.compose(&source.map)?;
        if !lhs.equals(&rhs)? {
            return Err(Error::IllDefined("square does not commute".into()));
        }
        Ok(FreydMorphism { source, target, top, bottom })
    }

    /// Completes `top` to a morphism when `top ∘ f` lifts through `g`.
    pub fn from_top(source: &FreydObject, target: &FreydObject, top: FpMorphism) -> Result<Option<FreydMorphism>> {
        let Some(bottom) = factor_through(&target.map, &top.compose(&source.map)?)? else {
            return Ok(None);
        };
        FreydMorphism::new(source.clone(), target.clone(), top, bottom).map(Some)
    }

    pub fn identity(f: &FreydObject) -> FreydMorphism {
        FreydMorphism {
            source: f.clone(),
            target: f.clone(),
            top: FpMorphism::identity(f.top()),
            bottom: FpMorphism::identity(f.bottom()),
        }
    }

    pub fn zero(source: &FreydObject, target: &FreydObject) -> FreydMorphism {
        FreydMorphism {
            source: source.clone(),
            target: target.clone(),
            top: FpMorphism::zero(source.top(), target.top()),
            bottom: FpMorphism::zero(source.bottom(), target.bottom()),
        }
    }

    pub fn source(&self) -> &FreydObject {
        &self.source
    }

    pub fn target(&self) -> &FreydObject {
        &self.target
    }

    pub fn top(&self) -> &FpMorphism {
        &self.top
    }

    pub fn bottom(&self) -> &FpMorphism {
        &self.bottom
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &FreydMorphism) -> Result<FreydMorphism> {
        if inner.target != self.source {
            return Err(Error::NotComposable("Freyd morphisms".into()));
        }
        Ok(FreydMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            top: self.top.compose(&inner.top)?,
            bottom: self.bottom.compose(&inner.bottom)?,
        })
    }

    pub fn add(&self, other: &FreydMorphism) -> Result<FreydMorphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::NotComposable("Freyd morphisms are not parallel".into()));
        }
        Ok(FreydMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            top: self.top.add(&other.top)?,
            bottom: self.bottom.add(&other.bottom)?,
        })
    }

    pub fn neg(&self) -> FreydMorphism {
        FreydMorphism { top: self.top.neg(), bottom: self.bottom.neg(), ..self.clone() }
    }

    pub fn sub(&self, other: &FreydMorphism) -> Result<FreydMorphism> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(factor_through(&self.target.map, &self.top)?.is_some())
    }

    pub fn equals(&self, other: &FreydMorphism) -> Result<bool> {
        self.sub(other)?.is_zero()
    }

    pub fn is_mono(&self) -> Result<bool> {
        Ok(kernel(self)?.0.is_zero())
    }

    pub fn is_epi(&self) -> Result<bool> {
        Ok(cokernel(self)?.0.is_zero())
    }

    pub fn is_iso(&self) -> Result<bool> {
        Ok(self.is_mono()? && self.is_epi()?)
    }
}

/// The map `c → A ⊕ B` with components `a` and `b`, factored through the
/// pull-back inclusion given by `p1`, `p2`.
fn into_pullback(p1: &FpMorphism, p2: &FpMorphism, a: &FpMorphism, b: &FpMorphism) -> Result<FpMorphism> {
    let ring = p1.matrix().ring();
    let sum = direct_sum(ring, &[p1.target(), p2.target()]);
    let incl = pair(&sum, &[p1, p2]);
    let target = pair(&sum, &[a, b]);
    factor_through(&incl, &target)?.ok_or_else(|| Error::IllDefined("maps do not land in the pull-back".into()))
}

/// `Ker φ`, presented by `Q → P` with `P = A0 ×_{B0} B1` and
/// `Q = P ×_{A0} A1`.
pub fn kernel(phi: &FreydMorphism) -> Result<(FreydObject, FreydMorphism)> {
    let (f, g) = (&phi.source.map, &phi.target.map);
    let (_, p1, _) = pullback(&phi.top, g);
    let (_, q1, q2) = pullback(&p1, f);
    let k = FreydObject::new(phi.source.carrier, q1)?;
    let incl = FreydMorphism::new(k.clone(), phi.source.clone(), p1, q2)?;
    Ok((k, incl))
}

/// `Coker φ`, presented by `[g | φ_top]: B1 ⊕ A0 → B0`.
pub fn cokernel(phi: &FreydMorphism) -> Result<(FreydObject, FreydMorphism)> {
    let g = &phi.target.map;
    let ring = g.matrix().ring();
    let sum = direct_sum(ring, &[g.source(), phi.top.source()]);
    let c = FreydObject::new(phi.target.carrier, copair(&sum, &[g, &phi.top]))?;
    let proj =
        FreydMorphism::new(phi.target.clone(), c.clone(), FpMorphism::identity(g.target()), sum.injections[0].clone())?;
    Ok((c, proj))
}

/// `φ = mono ∘ epi` through `Im φ`, presented by `A0 ×_{B0} B1 → A0`.
pub fn image(phi: &FreydMorphism) -> Result<(FreydObject, FreydMorphism, FreydMorphism)> {
    let (f, g) = (&phi.source.map, &phi.target.map);
    let (_, p1, p2) = pullback(&phi.top, g);
    let i = FreydObject::new(phi.source.carrier, p1.clone())?;
    let r = into_pullback(&p1, &p2, f, &phi.bottom)?;
    let epi = FreydMorphism::new(phi.source.clone(), i.clone(), FpMorphism::identity(f.target()), r)?;
    let mono = FreydMorphism::new(i.clone(), phi.target.clone(), phi.top.clone(), p2)?;
    Ok((i, epi, mono))
}

/// `F ⊕ G` with its injections and projections.
pub fn direct_sum_objects(
    a: &FreydObject,
    b: &FreydObject,
) -> Result<(FreydObject, [FreydMorphism; 2], [FreydMorphism; 2])> {
    let ring = a.map.matrix().ring();
    let (f, g) = (&a.map, &b.map);
    let top = sum_module(ring, &[f.target(), g.target()]);
    let bottom = sum_module(ring, &[f.source(), g.source()]);
    let map = block_morphism(
        (&bottom, &[f.source(), g.source()]),
        (&top, &[f.target(), g.target()]),
        &[vec![Some(f), None], vec![None, Some(g)]],
    );
    let s = FreydObject::new(a.carrier, map)?;
    let inj = |i: usize, part: &FreydObject| -> Result<FreydMorphism> {
        let (ts, bs) =
            (sum_injection(&top, &[f.target(), g.target()], i), sum_injection(&bottom, &[f.source(), g.source()], i));
        FreydMorphism::new(part.clone(), s.clone(), ts, bs)
    };
    let proj = |i: usize, part: &FreydObject| -> Result<FreydMorphism> {
        let (ts, bs) =
            (sum_projection(&top, &[f.target(), g.target()], i), sum_projection(&bottom, &[f.source(), g.source()], i));
        FreydMorphism::new(s.clone(), part.clone(), ts, bs)
    };
    Ok((s.clone(), [inj(0, a)?, inj(1, b)?], [proj(0, a)?, proj(1, b)?]))
}

fn sum_injection(sum: &FpModule, parts: &[&FpModule; 2], i: usize) -> FpMorphism {
    let id = FpMorphism::identity(parts[i]);
    let blocks: Vec<Vec<Option<&FpMorphism>>> = (0..2).map(|j| vec![(j == i).then_some(&id)]).collect();
    block_morphism((parts[i], &[parts[i]]), (sum, parts), &blocks)
}

fn sum_projection(sum: &FpModule, parts: &[&FpModule; 2], i: usize) -> FpMorphism {
    let id = FpMorphism::identity(parts[i]);
    let row: Vec<Option<&FpMorphism>> = (0..2).map(|j| (j == i).then_some(&id)).collect();
    block_morphism((sum, parts), (parts[i], &[parts[i]]), &[row])
}

/// Pull-back of `a: F → H` and `b: G → H` in `fp-E`, with its projections.
pub fn pullback_objects(a: &FreydMorphism, b: &FreydMorphism) -> Result<(FreydObject, FreydMorphism, FreydMorphism)> {
    let (_, _, [pa, pb]) = direct_sum_objects(&a.source, &b.source)?;
    let diff = a.compose(&pa)?.sub(&b.compose(&pb)?)?;
    let (p, incl) = kernel(&diff)?;
    Ok((p, pa.compose(&incl)?, pb.compose(&incl)?))
}

/// The square matrix `[[f1, x], [0, f2]]` used to present extensions.
pub(crate) fn upper_triangular(f1: &FpMorphism, x: &FpMorphism, f2: &FpMorphism) -> FpMorphism {
    let ring = f1.matrix().ring();
    let top = sum_module(ring, &[f1.target(), f2.target()]);
    let bottom = sum_module(ring, &[f1.source(), f2.source()]);
    block_morphism(
        (&bottom, &[f1.source(), f2.source()]),
        (&top, &[f1.target(), f2.target()]),
        &[vec![Some(f1), Some(x)], vec![None, Some(f2)]],
    )
}
