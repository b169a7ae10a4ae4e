use crate::complex::{cohomology, derived_hom_group, induced_map, ChainMap, Complex};
use crate::error::{Error, Result};
use crate::fpmod::{hom_group, FpModule, FpMorphism, TorsionPairZ};
use crate::linalg::{image_basis, solve_lift};
use crate::matrix::IntMatrix;
use crate::ring::Elem;

use super::{truncate_ge, truncate_le, Ambient, TStructureSpec};

/// A complex certified to lie in the heart of `spec`.
#[derive(Clone, Debug)]
pub struct HeartObject {
    spec: TStructureSpec,
    representative: Complex,
}

impl HeartObject {
    pub fn new(spec: TStructureSpec, representative: Complex) -> Result<HeartObject> {
        if !spec.heart_membership(&representative)? {
            return Err(Error::IllDefined(format!("complex is not in the heart of {spec}")));
        }
        Ok(HeartObject { spec, representative })
    }

    pub fn spec(&self) -> &TStructureSpec {
        &self.spec
    }

    pub fn representative(&self) -> &Complex {
        &self.representative
    }

    /// Left hearts: the two-term complex of a monic presentation of `H^0`.
    /// Natural heart: the stalk `H^0[0]`. Otherwise the representative.
    pub fn normal_form(&self) -> Complex {
        match self.spec {
            TStructureSpec::Left(_) => fpmod_to_heart(&heart_to_fpmod(&self.representative)),
            TStructureSpec::Natural => Complex::stalk(&cohomology(&self.representative, 0).module, 0),
            _ => self.representative.clone(),
        }
    }
}

/// `C(d) ↦ H^0 = Coker d`.
pub fn heart_to_fpmod(x: &Complex) -> FpModule {
    cohomology(x, 0).module
}

fn monic_presentation(m: &FpModule) -> IntMatrix {
    image_basis(m.presentation())
}

/// `M ↦ [R^r --d--> R^b]` in degrees `(−1, 0)` with `d` a monic
/// presentation matrix of `M`.
pub fn fpmod_to_heart(m: &FpModule) -> Complex {
    Complex::two_term(&monic_presentation(m), 0)
}

pub fn heart_morphism_to_fpmod(f: &ChainMap) -> FpMorphism {
    induced_map(f, 0)
}

/// Lifts `g: M → N` to `fpmod_to_heart(M) → fpmod_to_heart(N)`.
pub fn fpmod_morphism_to_heart(g: &FpMorphism) -> Result<ChainMap> {
    let (dm, dn) = (monic_presentation(g.source()), monic_presentation(g.target()));
    let (cm, cn) = (Complex::two_term(&dm, 0), Complex::two_term(&dn, 0));
    let w = solve_lift(&dn, &(g.matrix() * &dm))?
        .ok_or_else(|| Error::IllDefined("morphism does not preserve relations".into()))?;
    let c0 = FpMorphism::new(cm.object(0), cn.object(0), g.matrix().clone())?;
    let c1 = FpMorphism::new(cm.object(-1), cn.object(-1), w)?;
    ChainMap::new(cm, cn, -1, vec![c1, c0])
}

/// The map `Hom_K(C(M), C(N)) → Hom(M, N)` taking a chain map to its
/// degree-zero component, between the computed hom modules. It is an
/// isomorphism exactly when the heart functor is fully faithful on the pair.
pub fn heart_comparison(m: &FpModule, n: &FpModule) -> Result<FpMorphism> {
    let (dm, dn) = (monic_presentation(m), monic_presentation(n));
    let (cm, cn) = (Complex::two_term(&dm, 0), Complex::two_term(&dn, 0));
    let d = derived_hom_group(&cm, &cn, 0)?;
    let (mm, nn) = (FpModule::new(dm), FpModule::new(dn));
    let h = hom_group(&mm, &nn)?;
    let ring = m.ring();
    let k = d.module.generators();
    let mut cols = Vec::with_capacity(k);
    for i in 0..k {
        let coords: Vec<Elem> = (0..k).map(|j| if i == j { ring.one() } else { ring.zero() }).collect();
        let f = d.element(&coords);
        let g = FpMorphism::new(mm.clone(), nn.clone(), f.component(0).matrix().clone())?;
        cols.push(IntMatrix::column_vector(ring, h.coordinates(&g)));
    }
    let refs: Vec<&IntMatrix> = cols.iter().collect();
    let matrix = IntMatrix::hstack(ring, h.module.generators(), &refs);
    FpMorphism::new(d.module, h.module, matrix)
}

/// For the pairs (Right, Left) on a free carrier and (Natural, HRS tilt),
/// returns `H^0(X)` when `X` lies in both hearts.
pub fn intersection_normal_form(s1: &TStructureSpec, s2: &TStructureSpec, x: &Complex) -> Result<Option<FpModule>> {
    let supported = matches!(
        (s1, s2),
        (TStructureSpec::Right(a), TStructureSpec::Left(b)) | (TStructureSpec::Left(b), TStructureSpec::Right(a)) if a == b
    ) || matches!(
        (s1, s2),
        (TStructureSpec::Natural, TStructureSpec::HRSTilt(_)) | (TStructureSpec::HRSTilt(_), TStructureSpec::Natural)
    );
    if !supported {
        return Err(Error::Unsupported(format!("intersection of the hearts of {s1} and {s2}")));
    }
    if s1.heart_membership(x)? && s2.heart_membership(x)? {
        Ok(Some(heart_to_fpmod(x)))
    } else {
        Ok(None)
    }
}

/// `0 → τ^{≤−1} X → X → τ^{≥0} X → 0` in the heart of the HRS tilt, with
/// `τ` the natural truncations.
#[derive(Clone, Debug)]
pub struct TiltedDecomposition {
    /// `H^{−1}(X)[1]`, in the torsion-free class shifted.
    pub sub: Complex,
    /// `H^0(X)`, in the torsion class.
    pub quotient: Complex,
    pub sub_is_torsionfree_shift: bool,
    pub quotient_is_torsion: bool,
    /// `Hom(sub, quotient) = 0` in `D(fp-Z)`.
    pub orthogonal: bool,
}

pub fn tilted_torsion_decomposition(x: &Complex) -> Result<Option<TiltedDecomposition>> {
    let hrs = TStructureSpec::HRSTilt(TorsionPairZ);
    if !hrs.heart_membership(x)? {
        return Ok(None);
    }
    let (sub, _) = truncate_le(&TStructureSpec::Natural, -1, x)?;
    let (quotient, _) = truncate_ge(&TStructureSpec::Natural, 0, x)?;
    let pair = TorsionPairZ;
    let sub_is_torsionfree_shift = pair.in_torsionfree_class(&cohomology(&sub, -1).module)
        && (sub.lo()..=sub.hi()).all(|n| n == -1 || cohomology(&sub, n).module.is_zero());
    let quotient_is_torsion = pair.in_torsion_class(&cohomology(&quotient, 0).module)
        && (quotient.lo()..=quotient.hi()).all(|n| n == 0 || cohomology(&quotient, n).module.is_zero());
    let orthogonal = Ambient::Derived(x.ring()).hom_vanishes(&sub, &quotient)?;
    Ok(Some(TiltedDecomposition { sub, quotient, sub_is_torsionfree_shift, quotient_is_torsion, orthogonal }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Carrier, ExactStructure, Flavor};
    use crate::fpmod::is_iso;
    use crate::ring::RingSpec;

    fn free_z() -> ExactStructure {
        ExactStructure::new(Carrier::FreeZ, Flavor::Split)
    }

    #[test]
    fn membership_examples() {
        let c2 = Complex::two_term(&IntMatrix::from_i64(&[&[2]]), 0);
        assert!(TStructureSpec::Left(free_z()).heart_membership(&c2).unwrap());
        assert!(!TStructureSpec::Right(free_z()).heart_membership(&c2).unwrap());
        let z = Complex::stalk(&FpModule::free(RingSpec::Integers, 1), 0);
        for spec in [TStructureSpec::Left(free_z()), TStructureSpec::Right(free_z()), TStructureSpec::Natural] {
            assert!(spec.heart_membership(&z).unwrap(), "{spec}");
        }
    }

    #[test]
    fn heart_equivalence_examples() {
        let c2 = Complex::two_term(&IntMatrix::from_i64(&[&[2]]), 0);
        assert!(heart_to_fpmod(&c2).is_isomorphic(&FpModule::cyclic(2)));
        let d = Complex::two_term(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]), 0);
        assert!(heart_to_fpmod(&d).is_isomorphic(&FpModule::cyclic(6)));
        let f = FpModule::free(RingSpec::Integers, 2);
        assert!(heart_to_fpmod(&Complex::stalk(&f, 0)).is_isomorphic(&f));
        let m = FpModule::new(IntMatrix::from_i64(&[&[2, 4], &[0, 0]]));
        let round = heart_to_fpmod(&fpmod_to_heart(&m));
        assert_eq!(round.invariants(), m.canonical().module.invariants());
    }

    #[test]
    fn morphisms_lift_and_compare() {
        let m = FpModule::cyclic(4);
        let n = FpModule::new(IntMatrix::from_i64(&[&[2, 0], &[0, 0]]));
        assert!(FpMorphism::new(m.clone(), n.clone(), IntMatrix::from_i64(&[&[1], &[3]])).is_err());
        let g = FpMorphism::new(m.clone(), n.clone(), IntMatrix::from_i64(&[&[1], &[0]])).unwrap();
        let lifted = fpmod_morphism_to_heart(&g).unwrap();
        assert!(!heart_morphism_to_fpmod(&lifted).is_zero());
        assert!(is_iso(&heart_comparison(&m, &n).unwrap()));
        assert!(is_iso(&heart_comparison(&n, &m).unwrap()));
    }

    #[test]
    fn intersections() {
        let (r, l) = (TStructureSpec::Right(free_z()), TStructureSpec::Left(free_z()));
        let z2 = Complex::stalk(&FpModule::free(RingSpec::Integers, 2), 0);
        let out = intersection_normal_form(&r, &l, &z2).unwrap().unwrap();
        assert!(out.is_isomorphic(&FpModule::free(RingSpec::Integers, 2)));
        let c2 = Complex::two_term(&IntMatrix::from_i64(&[&[2]]), 0);
        assert!(intersection_normal_form(&r, &l, &c2).unwrap().is_none());
        let zero = Complex::zero(RingSpec::Integers);
        assert!(intersection_normal_form(&r, &l, &zero).unwrap().unwrap().is_zero());
        assert!(intersection_normal_form(&TStructureSpec::Natural, &l, &z2).is_err());
    }

    #[test]
    fn tilted_pair_example() {
        let x = Complex::two_term(&IntMatrix::from_i64(&[&[2, 0]]), 0);
        let d = tilted_torsion_decomposition(&x).unwrap().unwrap();
        assert!(d.sub_is_torsionfree_shift && d.quotient_is_torsion && d.orthogonal);
        assert!(cohomology(&d.sub, -1).module.is_isomorphic(&FpModule::free(RingSpec::Integers, 1)));
        assert!(tilted_torsion_decomposition(&Complex::stalk(&FpModule::free(RingSpec::Integers, 1), 0))
            .unwrap()
            .is_none());
    }
}
