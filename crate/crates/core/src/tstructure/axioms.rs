use serde_json::json;

use crate::complex::Complex;
use crate::error::Result;
use crate::fpmod::FpModule;
use crate::report::{run_samples, CheckReport, Probe};
use crate::ring::RingSpec;
use crate::sampling::{Bounds, Sampler};

use super::{approximating_triangle, truncate_ge, truncate_le, Ambient, TStructureSpec};

/// A random object of the ambient category: free complexes for homotopy
/// categories, free or finitely presented ones for derived categories.
pub fn sample_object(s: &mut Sampler, ambient: Ambient, max_width: usize) -> Complex {
    let width = s.range(1, max_width.max(1));
    let lo = s.range(0, 3) as i64 - 2;
    let free = match ambient {
        Ambient::Homotopy(_) => true,
        Ambient::Derived(_) => s.chance(0.3),
    };
    s.complex(ambient.ring(), free, lo, width)
}

fn payload(x: &Complex) -> serde_json::Value {
    serde_json::to_value(x).unwrap_or(serde_json::Value::Null)
}

fn check_one(spec: &TStructureSpec, ambient: Ambient, x: &Complex, y: &Complex, probe: &mut Probe) -> Result<()> {
    let (a, _) = truncate_le(spec, 0, x)?;
    probe.expect(spec.in_aisle(0, &a.shift(1))?, "aisle closed under [1]", || json!({ "object": payload(&a) }));
    let (b, _) = truncate_ge(spec, 1, y)?;
    probe.expect(spec.in_coaisle(1, &b.shift(-1))?, "co-aisle closed under [-1]", || json!({ "object": payload(&b) }));
    probe.expect(
        ambient.hom_vanishes(&a, &b)?,
        "orthogonality",
        || json!({ "aisle_object": payload(&a), "coaisle_object": payload(&b) }),
    );
    let tri = approximating_triangle(spec, x)?;
    let ok = spec.in_aisle(0, &tri.a)? && spec.in_coaisle(1, &tri.b)? && ambient.is_iso(&tri.comparison);
    probe.expect(ok, "approximating triangle", || json!({ "object": payload(x) }));
    Ok(())
}

/// Checks shift closure, orthogonality and the approximating triangle on
/// `budget` sampled objects.
pub fn check_tstructure_axioms(
    spec: &TStructureSpec,
    budget: usize,
    seed: u64,
    bounds: Bounds,
    max_width: usize,
) -> Result<CheckReport> {
    let ambient = spec.ambient()?;
    Ok(run_samples(seed, budget, bounds, |s, probe| {
        let x = sample_object(s, ambient, max_width);
        let y = sample_object(s, ambient, max_width);
        if let Err(e) = check_one(spec, ambient, &x, &y, probe) {
            probe.fail("error", json!({ "message": e.to_string(), "object": payload(&x) }));
        }
    }))
}

/// Orthogonality on the fixed object `Z` in degree 1: `Hom(τ^{≤0} X, τ^{≥1} X)`
/// must vanish. A single sample, failing for the corrupted specification.
pub fn orthogonality_control(spec: &TStructureSpec) -> Result<CheckReport> {
    let ambient = spec.ambient()?;
    let x = Complex::stalk(&FpModule::free(RingSpec::Integers, 1), 1);
    let (a, _) = truncate_le(spec, 0, &x)?;
    let (b, _) = truncate_ge(spec, 1, &x)?;
    let mut probe = Probe::new(0);
    probe.expect(
        ambient.hom_vanishes(&a, &b)?,
        "orthogonality",
        || json!({ "aisle_object": payload(&a), "coaisle_object": payload(&b) }),
    );
    Ok(CheckReport { samples: 1, failures: probe.into_failures() })
}
