use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{Carrier, ExactStructure, Flavor};
use crate::fpmod::{cokernel, free_cover, image, is_epi, is_mono, kernel, split_torsion, FpModule, FpMorphism};
use crate::matrix::IntMatrix;
use crate::report::{run_samples, CheckReport, Probe};
use crate::ring::RingSpec;
use crate::sampling::{Bounds, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TiltDirection {
    /// Cogeneration, kernels, closure under the quotient condition.
    Tilting,
    /// Generation, cokernels, closure under the kernel condition.
    Cotilting,
}

fn check_class(class: Carrier) -> Result<()> {
    match class {
        Carrier::FpZ | Carrier::FreeZ | Carrier::TorsionFreeClassZ | Carrier::TorsionClassZ => Ok(()),
        other => Err(Error::Unsupported(format!("class {other:?} inside fp-Z"))),
    }
}

/// A monomorphism from `a` into an object of the class, if one exists.
pub fn cogeneration_witness(class: Carrier, a: &FpModule) -> Result<Option<FpMorphism>> {
    check_class(class)?;
    Ok(match class {
        Carrier::FpZ => Some(FpMorphism::identity(a)),
        Carrier::TorsionClassZ => a.is_torsion().then(|| FpMorphism::identity(a)),
        _ => a.is_free().then(|| split_torsion(a).proj),
    })
}

/// An epimorphism from an object of the class onto `a`, if one exists.
pub fn generation_witness(class: Carrier, a: &FpModule) -> Result<Option<FpMorphism>> {
    check_class(class)?;
    Ok(match class {
        Carrier::FpZ => Some(FpMorphism::identity(a)),
        Carrier::TorsionClassZ => a.is_torsion().then(|| FpMorphism::identity(a)),
        _ => Some(free_cover(a)),
    })
}

fn sample_in(s: &mut Sampler, class: Carrier) -> FpModule {
    match class {
        Carrier::FpZ => s.module(RingSpec::Integers),
        Carrier::TorsionClassZ => s.finite_module(),
        _ => s.free_module(RingSpec::Integers),
    }
}

fn js(m: &FpModule) -> serde_json::Value {
    serde_json::to_value(m).unwrap_or(serde_json::Value::Null)
}

/// `coker [[P1, X], [0, P2]]`, an extension of `m2` by `m1`.
fn random_extension(s: &mut Sampler, m1: &FpModule, m2: &FpModule) -> FpModule {
    let ring = RingSpec::Integers;
    let x = s.matrix(ring, m1.generators(), m2.relations());
    let top = IntMatrix::hstack(ring, m1.generators(), &[m1.presentation(), &x]);
    let zero = IntMatrix::zeros(ring, m2.generators(), m1.relations());
    let bottom = IntMatrix::hstack(ring, m2.generators(), &[&zero, m2.presentation()]);
    FpModule::new(IntMatrix::vstack(ring, m1.relations() + m2.relations(), &[&top, &bottom]))
}

fn tilting_sample(s: &mut Sampler, class: Carrier, n: usize, probe: &mut Probe) -> Result<()> {
    let a = s.module(RingSpec::Integers);
    let ok = cogeneration_witness(class, &a)?.is_some_and(|e| is_mono(&e) && class.contains(e.target()));
    probe.expect(ok, "cogeneration", || json!({ "module": js(&a) }));

    let (m1, m2) = (sample_in(s, class), sample_in(s, class));
    let e = random_extension(s, &m1, &m2);
    probe.expect(class.contains(&e), "extension closure", || json!({ "extension": js(&e) }));

    let ex = ExactStructure::new(class, Flavor::Maximal);
    let (x1, x2) = (sample_in(s, class), sample_in(s, class));
    let f = s.morphism(&x1, &x2);
    let dk = ex.d_kernel(&f)?;
    let g = s.morphism(&dk.module, &dk.module);
    let j = dk.incl.compose(&g)?;
    let ok = class.contains(&dk.module)
        && f.compose(&dk.incl)?.is_zero()
        && (dk.factorizer)(&j).is_some_and(|(p, k)| {
            ex.is_deflation(&p).unwrap_or(false)
                && j.compose(&p).and_then(|l| l.equals(&dk.incl.compose(&k)?)).unwrap_or(false)
        });
    probe.expect(ok, "kernels", || json!({ "source": js(&x1), "target": js(&x2), "matrix": f.matrix() }));

    let b = if n == 1 {
        let x = sample_in(s, class);
        let sub = s.module(RingSpec::Integers);
        let h = s.morphism(&sub, &x);
        let (_, incl, _) = image(&h);
        cokernel(&incl).0
    } else {
        let (y2, y1) = (sample_in(s, class), sample_in(s, class));
        let d = s.morphism(&y2, &y1);
        if n >= 3 && !class.contains(&kernel(&d).0) {
            return Ok(());
        }
        cokernel(&d).0
    };
    probe.expect(class.contains(&b), "quotient condition", || json!({ "n": n, "quotient": js(&b) }));
    Ok(())
}

fn cotilting_sample(s: &mut Sampler, class: Carrier, n: usize, probe: &mut Probe) -> Result<()> {
    let a = s.module(RingSpec::Integers);
    let ok = generation_witness(class, &a)?.is_some_and(|e| is_epi(&e) && class.contains(e.source()));
    probe.expect(ok, "generation", || json!({ "module": js(&a) }));

    let (m1, m2) = (sample_in(s, class), sample_in(s, class));
    let e = random_extension(s, &m1, &m2);
    probe.expect(class.contains(&e), "extension closure", || json!({ "extension": js(&e) }));

    let ex = ExactStructure::new(class, Flavor::Maximal);
    let (x1, x2) = (sample_in(s, class), sample_in(s, class));
    let f = s.morphism(&x1, &x2);
    let dc = ex.d_cokernel(&f)?;
    let g = s.morphism(&dc.module, &dc.module);
    let j = g.compose(&dc.proj)?;
    let ok = class.contains(&dc.module)
        && dc.proj.compose(&f)?.is_zero()
        && (dc.factorizer)(&j).is_some_and(|(i, k)| {
            ex.is_inflation(&i).unwrap_or(false)
                && i.compose(&j).and_then(|l| l.equals(&k.compose(&dc.proj)?)).unwrap_or(false)
        });
    probe.expect(ok, "cokernels", || json!({ "source": js(&x1), "target": js(&x2), "matrix": f.matrix() }));

    let k = if n == 1 {
        let x = sample_in(s, class);
        let y = s.module(RingSpec::Integers);
        kernel(&s.morphism(&x, &y)).0
    } else {
        let (y1, y2) = (sample_in(s, class), sample_in(s, class));
        let d = s.morphism(&y1, &y2);
        if n >= 3 && !class.contains(&cokernel(&d).0) {
            return Ok(());
        }
        kernel(&d).0
    };
    probe.expect(class.contains(&k), "kernel condition", || json!({ "n": n, "kernel": js(&k) }));
    Ok(())
}

/// Sampled verification of the defining conditions of an `n`-tilting
/// torsion class (or, dually, an `n`-cotilting torsion-free class) inside
/// finitely generated abelian groups.
pub fn tilting_class_check(
    class: Carrier,
    direction: TiltDirection,
    n: usize,
    budget: usize,
    seed: u64,
    bounds: Bounds,
) -> Result<CheckReport> {
    check_class(class)?;
    if n == 0 {
        return Err(Error::Unsupported("tilting classes need n ≥ 1".into()));
    }
    Ok(run_samples(seed, budget, bounds, |s, probe| {
        let r = match direction {
            TiltDirection::Tilting => tilting_sample(s, class, n, probe),
            TiltDirection::Cotilting => cotilting_sample(s, class, n, probe),
        };
        if let Err(e) = r {
            probe.fail("error", json!({ "message": e.to_string() }));
        }
    }))
}
