//! Executable t-structures: truncations, membership, approximating
//! triangles, hearts, star aisles and tilting-class predicates.

mod axioms;
mod heart;
mod star;
mod tilting;
mod truncation;

pub use axioms::sample_object;
pub use axioms::{check_tstructure_axioms, orthogonality_control};
pub use heart::{
    fpmod_morphism_to_heart, fpmod_to_heart, heart_comparison, heart_morphism_to_fpmod, heart_to_fpmod,
    intersection_normal_form, tilted_torsion_decomposition, HeartObject, TiltedDecomposition,
};
pub use star::{star_membership, StarDecomposition};
pub use tilting::{cogeneration_witness, generation_witness, tilting_class_check, TiltDirection};
pub use truncation::{approximating_triangle, t_cohomology, truncate_ge, truncate_le, ApproximatingTriangle};

use std::fmt;
use std::str::FromStr;

use crate::complex::{cone, derived_hom, free_resolution, is_nullhomotopic, ChainMap, Complex};
use crate::error::{Error, Result};
use crate::exact::{Carrier, ExactStructure};
use crate::fpmod::TorsionPairZ;
use crate::ring::RingSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TStructureSpec {
    /// The standard t-structure on `D(fp-R)`.
    Natural,
    /// `LK` on the homotopy category of a free carrier.
    Left(ExactStructure),
    /// `RK` on the homotopy category of a free carrier.
    Right(ExactStructure),
    /// Tilt of the natural t-structure on `D(fp-Z)` at (finite, free).
    HRSTilt(TorsionPairZ),
    /// Aisle `D^{≤−n} ⋆ E ⋆ E[1] ⋆ … ⋆ E[n−1]`.
    StarAisle { class: Carrier, n: usize },
    /// Negative control: the aisle of degree `n` is the natural aisle of
    /// degree `n + 1`, the co-aisle is the natural one. Not a t-structure.
    Corrupted,
}

/// The category a specification acts on and its notion of isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `K(free R-modules)`: isomorphisms are homotopy equivalences.
    Homotopy(RingSpec),
    /// `D(fp-R)`: isomorphisms are quasi-isomorphisms.
    Derived(RingSpec),
}

impl Ambient {
    pub fn ring(self) -> RingSpec {
        match self {
            Ambient::Homotopy(r) | Ambient::Derived(r) => r,
        }
    }

    pub fn contains(self, x: &Complex) -> bool {
        x.ring() == self.ring()
            && match self {
                Ambient::Homotopy(_) => x.is_free(),
                Ambient::Derived(_) => true,
            }
    }

    pub fn is_iso(self, f: &ChainMap) -> bool {
        match self {
            Ambient::Homotopy(_) => is_contractible(&cone(f)),
            Ambient::Derived(_) => f.is_quasi_iso(),
        }
    }

    pub fn is_zero_object(self, x: &Complex) -> bool {
        match self {
            Ambient::Homotopy(_) => is_contractible(x),
            Ambient::Derived(_) => x.is_exact(),
        }
    }

    /// `Hom(a, b) = 0` in the ambient category.
    pub fn hom_vanishes(self, a: &Complex, b: &Complex) -> Result<bool> {
        match self {
            Ambient::Homotopy(_) => Ok(derived_hom(a, b, 0)?.is_zero()),
            Ambient::Derived(_) => {
                let (pa, _) = free_resolution(a);
                let (pb, _) = free_resolution(b);
                Ok(derived_hom(&pa, &pb, 0)?.is_zero())
            }
        }
    }
}

pub fn is_contractible(x: &Complex) -> bool {
    is_nullhomotopic(&ChainMap::identity(x)).is_some()
}

impl TStructureSpec {
    /// The ambient category, or an error for unsupported combinations.
    pub fn ambient(&self) -> Result<Ambient> {
        match *self {
            TStructureSpec::Natural | TStructureSpec::Corrupted => Ok(Ambient::Derived(RingSpec::Integers)),
            TStructureSpec::HRSTilt(_) => Ok(Ambient::Derived(RingSpec::Integers)),
            TStructureSpec::Left(ex) | TStructureSpec::Right(ex) => match ex.carrier {
                Carrier::FreeZ | Carrier::TorsionFreeClassZ | Carrier::FreePolyQ => Ok(Ambient::Homotopy(ex.ring())),
                other => Err(Error::Unsupported(format!("left/right t-structures need a free carrier, got {other:?}"))),
            },
            TStructureSpec::StarAisle { .. } => self.resolve()?.ambient(),
        }
    }

    /// Replaces a star aisle by the specification it coincides with.
    pub(crate) fn resolve(&self) -> Result<TStructureSpec> {
        match *self {
            TStructureSpec::StarAisle { n: 0, .. } => Err(Error::Unsupported("star aisle needs n ≥ 1".into())),
            TStructureSpec::StarAisle { class: Carrier::FpZ, .. } => Ok(TStructureSpec::Natural),
            TStructureSpec::StarAisle { class: Carrier::TorsionClassZ, n: 1 } => {
                Ok(TStructureSpec::HRSTilt(TorsionPairZ))
            }
            TStructureSpec::StarAisle { class, n } => {
                Err(Error::Unsupported(format!("star aisle for {class:?} with n = {n}")))
            }
            other => Ok(other),
        }
    }

    /// Checks that `x` lies in the ambient category.
    pub fn check(&self, x: &Complex) -> Result<Ambient> {
        let amb = self.ambient()?;
        if !amb.contains(x) {
            return Err(Error::Unsupported(format!(
                "{self} does not act on {:?} complexes over {}",
                x.base(),
                x.ring()
            )));
        }
        Ok(amb)
    }

    /// `X ∈ C^{≤n}`.
    pub fn in_aisle(&self, n: i64, x: &Complex) -> Result<bool> {
        let amb = self.check(x)?;
        let (_, counit) = truncate_le(self, n, x)?;
        Ok(amb.is_iso(&counit))
    }

    /// `X ∈ C^{≥n}`.
    pub fn in_coaisle(&self, n: i64, x: &Complex) -> Result<bool> {
        let amb = self.check(x)?;
        let (_, unit) = truncate_ge(self, n, x)?;
        Ok(amb.is_iso(&unit))
    }

    pub fn heart_membership(&self, x: &Complex) -> Result<bool> {
        Ok(self.in_aisle(0, x)? && self.in_coaisle(0, x)?)
    }
}

/// Membership in the heart.
pub fn heart_membership(spec: &TStructureSpec, x: &Complex) -> Result<bool> {
    spec.heart_membership(x)
}

impl fmt::Display for TStructureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TStructureSpec::Natural => write!(f, "Natural"),
            TStructureSpec::Left(ex) => write!(f, "Left({ex})"),
            TStructureSpec::Right(ex) => write!(f, "Right({ex})"),
            TStructureSpec::HRSTilt(_) => write!(f, "HRSTilt"),
            TStructureSpec::StarAisle { class, n } => write!(f, "StarAisle({class:?},{n})"),
            TStructureSpec::Corrupted => write!(f, "Corrupted"),
        }
    }
}

impl FromStr for TStructureSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<TStructureSpec> {
        let s = s.trim();
        let arg =
            |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_prefix('(')).and_then(|r| r.strip_suffix(')'));
        if s == "Natural" {
            Ok(TStructureSpec::Natural)
        } else if s == "HRSTilt" {
            Ok(TStructureSpec::HRSTilt(TorsionPairZ))
        } else if s == "Corrupted" {
            Ok(TStructureSpec::Corrupted)
        } else if let Some(a) = arg("Left") {
            Ok(TStructureSpec::Left(a.parse()?))
        } else if let Some(a) = arg("Right") {
            Ok(TStructureSpec::Right(a.parse()?))
        } else if let Some(a) = arg("StarAisle") {
            let (c, n) =
                a.split_once(',').ok_or_else(|| Error::Parse(format!("expected StarAisle(class,n), got `{s}`")))?;
            let class = Carrier::ALL
                .into_iter()
                .find(|k| format!("{k:?}") == c.trim())
                .ok_or_else(|| Error::Parse(format!("unknown class `{c}`")))?;
            let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad n `{n}`")))?;
            Ok(TStructureSpec::StarAisle { class, n })
        } else {
            Err(Error::Parse(format!("unknown t-structure `{s}`")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Flavor;

    #[test]
    fn config_round_trip() {
        let specs = [
            TStructureSpec::Natural,
            TStructureSpec::Left(ExactStructure::new(Carrier::FreeZ, Flavor::Split)),
            TStructureSpec::Right(ExactStructure::new(Carrier::FreePolyQ, Flavor::Maximal)),
            TStructureSpec::HRSTilt(TorsionPairZ),
            TStructureSpec::StarAisle { class: Carrier::TorsionClassZ, n: 1 },
            TStructureSpec::Corrupted,
        ];
        for s in specs {
            assert_eq!(s.to_string().parse::<TStructureSpec>().unwrap(), s);
        }
        assert!("Left(carrier=FreeZ)".parse::<TStructureSpec>().is_err());
        assert!("Sideways".parse::<TStructureSpec>().is_err());
    }

    #[test]
    fn unsupported_combinations() {
        let fp = ExactStructure::new(Carrier::FpZ, Flavor::Maximal);
        assert!(matches!(TStructureSpec::Left(fp).ambient(), Err(Error::Unsupported(_))));
        assert!(TStructureSpec::StarAisle { class: Carrier::TorsionClassZ, n: 2 }.ambient().is_err());
        assert!(TStructureSpec::StarAisle { class: Carrier::FpZ, n: 0 }.ambient().is_err());
        assert_eq!(TStructureSpec::StarAisle { class: Carrier::FpZ, n: 3 }.resolve().unwrap(), TStructureSpec::Natural);
    }
}
