//! Named property suites shared by the command-line verifier, the
//! acceptance tests and the benchmarks.

use serde_json::json;

use crate::complex::{cone, derived_hom, is_acyclic_wrt, ChainMap, Complex};
use crate::error::{Error, Result};
use crate::exact::{Carrier, ExactStructure, Flavor};
use crate::fpmod::{
    cokernel, cokernel_factor, is_iso, kernel, kernel_factor, projective_resolution, FpModule, TorsionPairZ,
};
use crate::freyd::{auslander_check, pointwise_conflation_check, serre_closure_check, serre_violation, FreydObject};
use crate::linalg::smith_normal_form;
use crate::matrix::IntMatrix;
use crate::report::{run_samples, CheckReport, Probe};
use crate::ring::RingSpec;
use crate::sampling::{Bounds, Sampler};
use crate::tstructure::{
    check_tstructure_axioms, cogeneration_witness, fpmod_to_heart, heart_comparison, heart_to_fpmod,
    intersection_normal_form, is_contractible, orthogonality_control, sample_object, star_membership,
    tilted_torsion_decomposition, tilting_class_check, truncate_le, Ambient, TStructureSpec, TiltDirection,
};

/// Parameters of one suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteContext {
    pub ring: RingSpec,
    /// Restricts structure-dependent suites to one exact structure.
    pub exact: Option<ExactStructure>,
    pub budget: usize,
    pub seed: u64,
    pub bounds: Bounds,
    pub max_width: usize,
}

impl SuiteContext {
    pub fn new(budget: usize, seed: u64) -> SuiteContext {
        SuiteContext { ring: RingSpec::Integers, exact: None, budget, seed, bounds: Bounds::default(), max_width: 3 }
    }

    fn integers_only(&self, suite: &str) -> Result<()> {
        if self.ring != RingSpec::Integers {
            return Err(Error::Unsupported(format!("suite `{suite}` over {}", self.ring)));
        }
        Ok(())
    }

    fn structures(&self, defaults: &[ExactStructure]) -> Result<Vec<ExactStructure>> {
        let chosen: Vec<ExactStructure> = match self.exact {
            Some(ex) => vec![ex],
            None => defaults.iter().copied().filter(|ex| ex.ring() == self.ring).collect(),
        };
        if chosen.is_empty() || chosen.iter().any(|ex| ex.ring() != self.ring) {
            return Err(Error::Unsupported(format!("no exact structure for this suite over {}", self.ring)));
        }
        Ok(chosen)
    }

    fn free_split(&self) -> Result<ExactStructure> {
        let defaults = [
            ExactStructure::new(Carrier::FreeZ, Flavor::Split),
            ExactStructure::new(Carrier::FreePolyQ, Flavor::Split),
        ];
        Ok(self.structures(&defaults)?[0])
    }
}

pub struct Suite {
    pub name: &'static str,
    /// The statement the suite exercises.
    pub anchor: &'static str,
    /// Part of the default battery.
    pub default: bool,
    pub run: fn(&SuiteContext) -> Result<CheckReport>,
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "smith-normal-form",
        anchor: "Smith normal form: U·M·V = D with unimodular U, V and a divisibility chain",
        default: true,
        run: smith_suite,
    },
    Suite {
        name: "universal-properties",
        anchor: "kernels and cokernels of finitely presented modules: existence and uniqueness of factorizations",
        default: true,
        run: universal_suite,
    },
    Suite {
        name: "global-dimension",
        anchor: "has projective dimension at most 1; hence RK^{<=-1} is contained in LK^{<=0}",
        default: true,
        run: global_dimension_suite,
    },
    Suite {
        name: "tstructure-natural",
        anchor: "the approximating triangle of the natural t-structure on D(fp-Z)",
        default: true,
        run: natural_suite,
    },
    Suite {
        name: "tstructure-left",
        anchor: "the approximating triangle of the left t-structure on K(E)",
        default: true,
        run: left_suite,
    },
    Suite {
        name: "tstructure-right",
        anchor: "the approximating triangle of the right t-structure on K(E)",
        default: true,
        run: right_suite,
    },
    Suite {
        name: "tstructure-hrs",
        anchor: "the approximating triangle of the tilt of D(fp-Z) with respect to the torsion pair",
        default: true,
        run: hrs_suite,
    },
    Suite {
        name: "heart-identification",
        anchor: "the left heart described in terms of coherent functors: the whole category of finitely generated abelian groups",
        default: true,
        run: heart_suite,
    },
    Suite {
        name: "heart-intersection",
        anchor: "E = LD^{<=0} ∩ RD^{>=0}: free abelian groups of finite type",
        default: true,
        run: intersection_suite,
    },
    Suite {
        name: "hrs-consistency",
        anchor: "the star aisle D^{<=-1} ⋆ T is an aisle and coincides with the tilted aisle",
        default: true,
        run: star_suite,
    },
    Suite {
        name: "acyclicity",
        anchor: "a complex of free modules is contractible if and only if it is acyclic",
        default: true,
        run: acyclicity_suite,
    },
    Suite {
        name: "tilting-classes",
        anchor: "n-tilting torsion classes: E cogenerates A and is closed under extensions and quotients",
        default: true,
        run: tilting_suite,
    },
    Suite {
        name: "serre-subcategory",
        anchor: "effaceable functors form a Serre subcategory of fp-E",
        default: true,
        run: serre_suite,
    },
    Suite {
        name: "pointwise-exactness",
        anchor: "conflations of fp-E evaluate to short exact sequences of abelian groups",
        default: true,
        run: pointwise_suite,
    },
    Suite {
        name: "auslander-formula",
        anchor: "the Auslander formulas: fp-E modulo effaceables is the abelian hull",
        default: true,
        run: auslander_suite,
    },
    Suite {
        name: "negative-controls",
        anchor: "designed-to-fail checks are detected: a non-t-structure, a non-cogenerating class, a non-Serre sequence",
        default: true,
        run: negative_controls_suite,
    },
    Suite {
        name: "corrupted",
        anchor: "orthogonality for a corrupted t-structure specification (expected to fail)",
        default: false,
        run: corrupted_suite,
    },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn default_suites() -> impl Iterator<Item = &'static Suite> {
    SUITES.iter().filter(|s| s.default)
}

fn js<T: serde::Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).unwrap_or(serde_json::Value::Null)
}

fn guarded<F>(ctx: &SuiteContext, body: F) -> CheckReport
where
    F: Fn(&mut Sampler, &mut Probe) -> Result<()> + Sync,
{
    run_samples(ctx.seed, ctx.budget, ctx.bounds, |s, probe| {
        if let Err(e) = body(s, probe) {
            probe.fail("error", json!({ "message": e.to_string() }));
        }
    })
}

/// Runs `f` per structure, prefixing check names with the structure.
fn per_structure<F>(structures: &[ExactStructure], f: F) -> Result<CheckReport>
where
    F: Fn(&ExactStructure) -> Result<CheckReport>,
{
    let mut total = CheckReport::default();
    for ex in structures {
        let mut r = f(ex)?;
        for failure in &mut r.failures {
            failure.check = format!("[{ex}] {}", failure.check);
        }
        total.merge(r);
    }
    Ok(total)
}

fn smith_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    let ring = ctx.ring;
    Ok(guarded(ctx, |s, probe| {
        let max = s.bounds.max_rank.max(1);
        let (r, c) = (s.range(1, max), s.range(1, max));
        let m = s.matrix(ring, r, c);
        let snf = smith_normal_form(&m);
        let payload = || json!({ "matrix": js(&m) });
        probe.expect((&(&snf.u * &m) * &snf.v) == snf.d, "U·M·V = D", payload);
        let diagonal = (0..r).all(|i| (0..c).all(|j| i == j || snf.d.get(i, j).is_zero()));
        let factors = snf.invariant_factors();
        let chain = factors.windows(2).all(|w| w[0].divides(&w[1]).is_some())
            && factors.iter().all(|d| !d.is_zero() && *d == d.canonical())
            && (snf.rank..r.min(c)).all(|i| snf.d.get(i, i).is_zero());
        probe.expect(diagonal && chain, "divisibility chain", payload);
        let unit = |a: &IntMatrix| a.determinant().map(|d| d.is_unit()).unwrap_or(false);
        let inverses =
            &snf.u * &snf.u_inv == IntMatrix::identity(ring, r) && &snf.v * &snf.v_inv == IntMatrix::identity(ring, c);
        probe.expect(unit(&snf.u) && unit(&snf.v) && inverses, "unimodular transforms", payload);
        Ok(())
    }))
}

fn universal_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    let ring = ctx.ring;
    Ok(guarded(ctx, |s, probe| {
        let (m, n, x) = (s.module(ring), s.module(ring), s.module(ring));
        let f = s.morphism(&m, &n);
        let (k, incl) = kernel(&f);
        let h = s.morphism(&x, &k);
        let j = incl.compose(&h)?;
        let ok = f.compose(&incl)?.is_zero()
            && kernel_factor(&incl, &j).is_some_and(|u| {
                incl.compose(&u).and_then(|v| v.equals(&j)).unwrap_or(false) && u.equals(&h).unwrap_or(false)
            });
        probe.expect(ok, "kernel factorization", || json!({ "map": js(&f), "test": js(&j) }));

        let (c, proj) = cokernel(&f);
        let h = s.morphism(&c, &x);
        let j = h.compose(&proj)?;
        let ok = proj.compose(&f)?.is_zero()
            && cokernel_factor(&proj, &j).is_some_and(|u| {
                u.compose(&proj).and_then(|v| v.equals(&j)).unwrap_or(false) && u.equals(&h).unwrap_or(false)
            });
        probe.expect(ok, "cokernel factorization", || json!({ "map": js(&f), "test": js(&j) }));
        Ok(())
    }))
}

fn global_dimension_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("global-dimension")?;
    let ex = ctx.free_split()?;
    let (left, right) = (TStructureSpec::Left(ex), TStructureSpec::Right(ex));
    let ambient = left.ambient()?;
    let width = ctx.max_width;
    Ok(guarded(ctx, |s, probe| {
        let m = s.module(RingSpec::Integers);
        probe.expect(projective_resolution(&m, 1).is_ok(), "projective dimension ≤ 1", || json!({ "module": js(&m) }));
        let x = sample_object(s, ambient, width);
        let (a, _) = truncate_le(&right, -1, &x)?;
        probe.expect(left.in_aisle(0, &a)?, "RK^{≤-1} ⊆ LK^{≤0}", || json!({ "object": js(&a) }));
        Ok(())
    }))
}

fn axioms(ctx: &SuiteContext, spec: TStructureSpec) -> Result<CheckReport> {
    check_tstructure_axioms(&spec, ctx.budget, ctx.seed, ctx.bounds, ctx.max_width)
}

fn natural_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("tstructure-natural")?;
    axioms(ctx, TStructureSpec::Natural)
}

fn left_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    axioms(ctx, TStructureSpec::Left(ctx.free_split()?))
}

fn right_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    axioms(ctx, TStructureSpec::Right(ctx.free_split()?))
}

fn hrs_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("tstructure-hrs")?;
    axioms(ctx, TStructureSpec::HRSTilt(TorsionPairZ))
}

fn heart_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("heart-identification")?;
    let left = TStructureSpec::Left(ExactStructure::new(Carrier::FreeZ, Flavor::Split));
    Ok(guarded(ctx, |s, probe| {
        let m = s.module(RingSpec::Integers);
        let x = fpmod_to_heart(&m);
        let back = heart_to_fpmod(&x);
        let ok =
            left.heart_membership(&x)? && back.canonical().module.invariants() == m.canonical().module.invariants();
        probe.expect(ok, "module round trip", || json!({ "module": js(&m) }));
        let n = s.module(RingSpec::Integers);
        probe.expect(
            is_iso(&heart_comparison(&m, &n)?),
            "morphism bijection",
            || json!({ "source": js(&m), "target": js(&n) }),
        );
        Ok(())
    }))
}

fn intersection_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("heart-intersection")?;
    let ex = ctx.free_split()?;
    let (left, right) = (TStructureSpec::Left(ex), TStructureSpec::Right(ex));
    let width = ctx.max_width;
    Ok(guarded(ctx, |s, probe| {
        let f = s.free_module(RingSpec::Integers);
        let (lo, w) = (s.range(0, 2) as i64 - 1, s.range(1, width));
        let y = s.complex(RingSpec::Integers, true, lo, w);
        let x = Complex::stalk(&f, 0).direct_sum(&cone(&ChainMap::identity(&y)));
        let ok = intersection_normal_form(&right, &left, &x)?.is_some_and(|m| m.is_free() && m.is_isomorphic(&f));
        probe.expect(ok, "normalizes to a free stalk", || json!({ "complex": js(&x) }));

        let r = sample_object(s, Ambient::Homotopy(RingSpec::Integers), width);
        if let Some(m) = intersection_normal_form(&right, &left, &r)? {
            let stalk = Complex::stalk(&m, 0);
            let ok = m.is_free() && left.heart_membership(&stalk)? && right.heart_membership(&stalk)?;
            probe.expect(ok, "normalizes to a free stalk", || json!({ "complex": js(&r) }));
        }

        let stalk = Complex::stalk(&f, 0);
        probe.expect(
            left.heart_membership(&stalk)? && right.heart_membership(&stalk)?,
            "free stalk in both hearts",
            || json!({ "module": js(&f) }),
        );
        let z = Complex::stalk(&FpModule::free(RingSpec::Integers, 1), 0);
        probe.expect(derived_hom(&stalk, &z, 1)?.is_zero(), "Ext^1(F, Z) = 0", || json!({ "module": js(&f) }));
        Ok(())
    }))
}

/// A two-term complex `Z^a → Z^b` with finite cokernel.
fn hrs_heart_object(s: &mut Sampler) -> Complex {
    let b = s.range(0, s.bounds.max_rank);
    let a = b + s.range(0, 2);
    let mut d = s.matrix(RingSpec::Integers, b, a);
    if crate::linalg::rank(&d) < b {
        let id = IntMatrix::identity(RingSpec::Integers, b);
        d = IntMatrix::hstack(RingSpec::Integers, b, &[&d, &id]);
    }
    Complex::two_term(&d, 0)
}

fn star_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("hrs-consistency")?;
    let hrs = TStructureSpec::HRSTilt(TorsionPairZ);
    let width = ctx.max_width;
    Ok(guarded(ctx, |s, probe| {
        let x = sample_object(s, Ambient::Derived(RingSpec::Integers), width);
        let star = star_membership(&x, Carrier::TorsionClassZ, 1)?.is_some();
        probe.expect(star == hrs.in_aisle(0, &x)?, "star aisle = tilted aisle", || json!({ "complex": js(&x) }));

        let h = hrs_heart_object(s);
        let ok = tilted_torsion_decomposition(&h)?
            .is_some_and(|d| d.sub_is_torsionfree_shift && d.quotient_is_torsion && d.orthogonal);
        probe.expect(ok, "tilted torsion pair decomposition", || json!({ "complex": js(&h) }));
        Ok(())
    }))
}

fn acyclicity_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    let ex = ctx.free_split()?;
    let ring = ctx.ring;
    let width = ctx.max_width;
    Ok(guarded(ctx, |s, probe| {
        let (lo, w) = (s.range(0, 2) as i64 - 1, s.range(1, width));
        let y = s.complex(ring, true, lo, w);
        let x = if s.chance(0.5) { cone(&ChainMap::identity(&y)) } else { y };
        let (exact, contractible, split) = (x.is_exact(), is_contractible(&x), is_acyclic_wrt(&x, &ex).is_some());
        probe.expect(
            exact == contractible && contractible == split,
            "three acyclicity tests agree",
            || json!({ "complex": js(&x), "exact": exact, "contractible": contractible, "split_acyclic": split }),
        );
        Ok(())
    }))
}

fn tilting_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("tilting-classes")?;
    let configs = [
        (Carrier::FpZ, TiltDirection::Tilting, 1),
        (Carrier::FpZ, TiltDirection::Tilting, 2),
        (Carrier::FpZ, TiltDirection::Tilting, 3),
        (Carrier::FreeZ, TiltDirection::Cotilting, 1),
        (Carrier::FreeZ, TiltDirection::Cotilting, 2),
    ];
    let mut total = CheckReport::default();
    for (class, dir, n) in configs {
        let mut r = tilting_class_check(class, dir, n, ctx.budget, ctx.seed, ctx.bounds)?;
        for failure in &mut r.failures {
            failure.check = format!("[{class:?} {dir:?} n={n}] {}", failure.check);
        }
        total.merge(r);
    }
    Ok(total)
}

fn serre_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    let defaults = [
        ExactStructure::new(Carrier::FreeZ, Flavor::Split),
        ExactStructure::new(Carrier::FpZ, Flavor::Maximal),
        ExactStructure::new(Carrier::TorsionClassZ, Flavor::Inherited),
        ExactStructure::new(Carrier::FreePolyQ, Flavor::Split),
    ];
    per_structure(&ctx.structures(&defaults)?, |ex| serre_closure_check(ex, ctx.budget, ctx.seed, ctx.bounds))
}

fn pointwise_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("pointwise-exactness")?;
    let carriers: Vec<Carrier> = match ctx.exact {
        Some(ex) => vec![ex.carrier],
        None => vec![Carrier::FpZ, Carrier::FreeZ, Carrier::TorsionClassZ],
    };
    let mut total = CheckReport::default();
    for c in carriers {
        let mut r = pointwise_conflation_check(c, ctx.budget, ctx.seed, ctx.bounds)?;
        for failure in &mut r.failures {
            failure.check = format!("[{c:?}] {}", failure.check);
        }
        total.merge(r);
    }
    Ok(total)
}

fn auslander_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    let defaults = [
        ExactStructure::new(Carrier::FpZ, Flavor::Maximal),
        ExactStructure::new(Carrier::FreeZ, Flavor::Split),
        ExactStructure::new(Carrier::FreePolyQ, Flavor::Maximal),
    ];
    per_structure(&ctx.structures(&defaults)?, |ex| auslander_check(ex, ctx.budget, ctx.seed, ctx.bounds))
}

fn negative_controls_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("negative-controls")?;
    let mut probe = Probe::new(0);
    let z2 = FpModule::cyclic(2);
    probe.expect(
        cogeneration_witness(Carrier::FreeZ, &z2)?.is_none(),
        "free class does not cogenerate Z/2",
        || json!({ "module": js(&z2) }),
    );
    let budget = 20;
    let r = tilting_class_check(Carrier::FreeZ, TiltDirection::Tilting, 1, budget, ctx.seed, ctx.bounds)?;
    probe.expect(
        r.failures.iter().any(|f| f.check == "cogeneration"),
        "tilting check rejects the free class",
        || json!({ "failures": r.failures.len() }),
    );
    let corrupted = orthogonality_control(&TStructureSpec::Corrupted)?;
    let natural = orthogonality_control(&TStructureSpec::Natural)?;
    probe.expect(
        corrupted.failures.len() == 1 && natural.passed(),
        "corrupted t-structure is detected",
        || json!({ "corrupted_failures": corrupted.failures.len(), "natural_failures": natural.failures.len() }),
    );
    let ex = ExactStructure::new(Carrier::FreeZ, Flavor::Split);
    let z = FpModule::free(RingSpec::Integers, 1);
    let zero = FreydObject::representable(Carrier::FreeZ, &FpModule::zero(RingSpec::Integers))?;
    let two =
        FreydObject::new(Carrier::FreeZ, crate::fpmod::FpMorphism::new(z.clone(), z, IntMatrix::from_i64(&[&[2]]))?)?;
    probe.expect(
        serre_violation(&ex, &zero, &two, &zero)?.is_some(),
        "non-effaceable middle term is reported",
        || json!({ "middle": js(&two) }),
    );
    Ok(CheckReport { samples: 4, failures: probe.into_failures() })
}

fn corrupted_suite(ctx: &SuiteContext) -> Result<CheckReport> {
    ctx.integers_only("corrupted")?;
    orthogonality_control(&TStructureSpec::Corrupted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_anchors_are_unique() {
        let mut names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
        let mut anchors: Vec<&str> = SUITES.iter().map(|s| s.anchor).collect();
        names.sort();
        names.dedup();
        anchors.sort();
        anchors.dedup();
        assert_eq!(names.len(), SUITES.len());
        assert_eq!(anchors.len(), SUITES.len());
        assert!(find("corrupted").is_some_and(|s| !s.default));
    }

    #[test]
    fn small_battery_passes() {
        let ctx = SuiteContext::new(3, 1);
        for suite in default_suites() {
            let r = (suite.run)(&ctx).unwrap();
            assert!(r.passed(), "{}: {:?}", suite.name, r.failures);
        }
        let r = (find("corrupted").unwrap().run)(&ctx).unwrap();
        assert_eq!(r.failures.len(), 1);
    }

    #[test]
    fn unsupported_combinations_are_errors() {
        let mut ctx = SuiteContext::new(2, 1);
        ctx.exact = Some(ExactStructure::new(Carrier::FpZ, Flavor::Maximal));
        assert!(matches!((find("tstructure-left").unwrap().run)(&ctx), Err(Error::Unsupported(_))));
        ctx.exact = None;
        ctx.ring = RingSpec::RationalPolynomials;
        assert!(matches!((find("tstructure-natural").unwrap().run)(&ctx), Err(Error::Unsupported(_))));
        assert!((find("smith-normal-form").unwrap().run)(&ctx).unwrap().passed());
    }
}
