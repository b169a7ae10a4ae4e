//! Quillen exact structures on the catalogued carrier categories.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::fpmod::{
    cokernel, extend_along, factor_through, is_epi, is_mono, kernel, split_torsion, FpModule, FpMorphism,
};
use crate::ring::RingSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Carrier {
    /// Free abelian groups of finite rank.
    FreeZ,
    /// Finitely generated abelian groups.
    FpZ,
    /// Finite abelian groups.
    TorsionClassZ,
    /// Torsion-free (hence free) finitely generated abelian groups.
    TorsionFreeClassZ,
    /// Free modules of finite rank over `Q[x]`.
    FreePolyQ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    Split,
    Maximal,
    Inherited,
}

impl Carrier {
    pub const ALL: [Carrier; 5] =
        [Carrier::FreeZ, Carrier::FpZ, Carrier::TorsionClassZ, Carrier::TorsionFreeClassZ, Carrier::FreePolyQ];

    pub fn ring(self) -> RingSpec {
        match self {
            Carrier::FreePolyQ => RingSpec::RationalPolynomials,
            _ => RingSpec::Integers,
        }
    }

    pub fn contains(self, m: &FpModule) -> bool {
        m.ring() == self.ring()
            && match self {
                Carrier::FpZ => true,
                Carrier::TorsionClassZ => m.is_torsion(),
                Carrier::FreeZ | Carrier::TorsionFreeClassZ | Carrier::FreePolyQ => m.is_free(),
            }
    }

    fn name(self) -> &'static str {
        match self {
            Carrier::FreeZ => "FreeZ",
            Carrier::FpZ => "FpZ",
            Carrier::TorsionClassZ => "TorsionClassZ",
            Carrier::TorsionFreeClassZ => "TorsionFreeClassZ",
            Carrier::FreePolyQ => "FreePolyQ",
        }
    }
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Split, Flavor::Maximal, Flavor::Inherited];

    fn name(self) -> &'static str {
        match self {
            Flavor::Split => "Split",
            Flavor::Maximal => "Maximal",
            Flavor::Inherited => "Inherited",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactStructure {
    pub carrier: Carrier,
    pub flavor: Flavor,
}

impl ExactStructure {
    pub fn new(carrier: Carrier, flavor: Flavor) -> ExactStructure {
        ExactStructure { carrier, flavor }
    }

    pub fn ring(&self) -> RingSpec {
        self.carrier.ring()
    }

    pub fn contains(&self, m: &FpModule) -> bool {
        self.carrier.contains(m)
    }

    fn check(&self, f: &FpMorphism) -> Result<()> {
        for m in [f.source(), f.target()] {
            if !self.contains(m) {
                return Err(Error::CarrierMismatch(format!("{m} is not in {}", self.carrier.name())));
            }
        }
        Ok(())
    }

    pub fn is_deflation(&self, f: &FpMorphism) -> Result<bool> {
        self.check(f)?;
        Ok(match self.flavor {
            Flavor::Split => f.section().is_some(),
            Flavor::Maximal | Flavor::Inherited => is_epi(f) && self.contains(&kernel(f).0),
        })
    }

    pub fn is_inflation(&self, f: &FpMorphism) -> Result<bool> {
        self.check(f)?;
        Ok(match self.flavor {
            Flavor::Split => f.retraction().is_some(),
            Flavor::Maximal | Flavor::Inherited => is_mono(f) && self.contains(&cokernel(f).0),
        })
    }

    /// `i` is a kernel of the deflation `p`.
    pub fn is_conflation(&self, i: &FpMorphism, p: &FpMorphism) -> Result<bool> {
        if !self.is_deflation(p)? || !p.compose(i)?.is_zero() || !is_mono(i) {
            return Ok(false);
        }
        let (_, k) = kernel(p);
        Ok(factor_through(i, &k)?.is_some())
    }

    /// Kernel inside the carrier category.
    pub fn e_kernel(&self, f: &FpMorphism) -> Result<(FpModule, FpMorphism)> {
        self.check(f)?;
        let (k, incl) = kernel(f);
        Ok(match self.carrier {
            Carrier::TorsionClassZ => {
                let t = split_torsion(&k);
                (t.torsion, incl.compose(&t.incl)?)
            }
            _ => (k, incl),
        })
    }

    /// Cokernel inside the carrier category.
    pub fn e_cokernel(&self, f: &FpMorphism) -> Result<(FpModule, FpMorphism)> {
        self.check(f)?;
        let (c, proj) = cokernel(f);
        Ok(match self.carrier {
            Carrier::FreeZ | Carrier::TorsionFreeClassZ | Carrier::FreePolyQ => {
                let t = split_torsion(&c);
                (t.quotient, t.proj.compose(&proj)?)
            }
            _ => (c, proj),
        })
    }

    /// A kernel in the derived sense: `K` with `f ∘ incl = 0` and a factorizer
    /// which, for any `j` with `f ∘ j = 0`, returns a deflation `π` and `k`
    /// with `j ∘ π = incl ∘ k`.
    pub fn d_kernel(&self, f: &FpMorphism) -> Result<DKernel> {
        let (module, incl) = self.e_kernel(f)?;
        let target = incl.clone();
        let factorizer: Factorizer = Arc::new(move |j: &FpMorphism| {
            let k = factor_through(&target, j).ok()??;
            Some((FpMorphism::identity(j.source()), k))
        });
        Ok(DKernel { module, incl, factorizer })
    }

    /// Dual of [`ExactStructure::d_kernel`]: for `j` with `j ∘ f = 0` returns
    /// an inflation `ι` and `k` with `ι ∘ j = k ∘ proj`.
    pub fn d_cokernel(&self, f: &FpMorphism) -> Result<DCokernel> {
        let (module, proj) = self.e_cokernel(f)?;
        let source = proj.clone();
        let factorizer: Factorizer = Arc::new(move |j: &FpMorphism| {
            let k = extend_along(&source, j).ok()??;
            Some((FpMorphism::identity(j.target()), k))
        });
        Ok(DCokernel { module, proj, factorizer })
    }
}

pub type Factorizer = Arc<dyn Fn(&FpMorphism) -> Option<(FpMorphism, FpMorphism)> + Send + Sync>;

#[derive(Clone)]
pub struct DKernel {
    pub module: FpModule,
    pub incl: FpMorphism,
    pub factorizer: Factorizer,
}

#[derive(Clone)]
pub struct DCokernel {
    pub module: FpModule,
    pub proj: FpMorphism,
    pub factorizer: Factorizer,
}

impl fmt::Debug for DKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DKernel({:?})", self.incl)
    }
}

impl fmt::Debug for DCokernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DCokernel({:?})", self.proj)
    }
}

impl fmt::Display for ExactStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "carrier={},flavor={}", self.carrier.name(), self.flavor.name())
    }
}

impl FromStr for ExactStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExactStructure> {
        let mut carrier = None;
        let mut flavor = None;
        for part in s.split(',') {
            let (k, v) =
                part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            match k.trim() {
                "carrier" => {
                    carrier = Some(
                        Carrier::ALL
                            .into_iter()
                            .find(|c| c.name() == v.trim())
                            .ok_or_else(|| Error::Parse(format!("unknown carrier `{v}`")))?,
                    )
                }
                "flavor" => {
                    flavor = Some(
                        Flavor::ALL
                            .into_iter()
                            .find(|c| c.name() == v.trim())
                            .ok_or_else(|| Error::Parse(format!("unknown flavor `{v}`")))?,
                    )
                }
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        match (carrier, flavor) {
            (Some(c), Some(f)) => Ok(ExactStructure::new(c, f)),
            _ => Err(Error::Parse(format!("incomplete exact structure `{s}`"))),
        }
    }
}

/// Decides acyclicity of `c` with respect to `ex`: every differential
/// factors as a deflation onto `D^{n+1} = Ker d^{n+1}` followed by its
/// inclusion. Returns the objects `D^n` when acyclic.
pub fn is_acyclic_wrt(c: &Complex, ex: &ExactStructure) -> Option<Vec<FpModule>> {
    let kers: Vec<(FpModule, FpMorphism)> = (c.lo()..=c.hi() + 1).map(|n| kernel(&c.diff(n))).collect();
    for n in c.lo() - 1..=c.hi() {
        let (_, incl) = &kers[(n + 1 - c.lo()) as usize];
        let p = factor_through(incl, &c.diff(n)).ok()??;
        if !ex.is_deflation(&p).ok()? {
            return None;
        }
    }
    Some(kers.into_iter().map(|(k, _)| k).collect())
}
