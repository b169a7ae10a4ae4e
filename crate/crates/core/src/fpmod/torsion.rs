use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ring::RingSpec;

use super::{FpModule, FpMorphism};

/// The torsion pair (finite groups, free groups) on finitely presented
/// abelian groups.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct TorsionPairZ;

impl TorsionPairZ {
    pub fn in_torsion_class(&self, m: &FpModule) -> bool {
        m.ring() == RingSpec::Integers && m.is_torsion()
    }

    pub fn in_torsionfree_class(&self, m: &FpModule) -> bool {
        m.ring() == RingSpec::Integers && m.is_free()
    }

    pub fn decompose(&self, m: &FpModule) -> Result<TorsionDecomposition> {
        torsion_decompose(m)
    }
}

/// `0 → tM → M → M/tM → 0`.
#[derive(Clone, Debug)]
pub struct TorsionDecomposition {
    pub torsion: FpModule,
    pub incl: FpMorphism,
    pub quotient: FpModule,
    pub proj: FpMorphism,
}

pub fn torsion_decompose(m: &FpModule) -> Result<TorsionDecomposition> {
    if m.ring() != RingSpec::Integers {
        return Err(Error::UnsupportedRing { op: "torsion_decompose", ring: m.ring() });
    }
    Ok(split_torsion(m))
}

/// Torsion splitting valid over any catalogued domain.
pub(crate) fn split_torsion(m: &FpModule) -> TorsionDecomposition {
    let ring = m.ring();
    let canon = m.canonical();
    let s = canon.module.invariants().torsion.len();
    let f = canon.module.invariants().free_rank;
    let torsion = FpModule::from_invariants(ring, &canon.module.invariants().torsion, 0);
    let quotient = FpModule::free(ring, f);
    let mut inj = IntMatrix::zeros(ring, s + f, s);
    inj.paste(0, 0, &IntMatrix::identity(ring, s));
    let inj = FpMorphism::new(torsion.clone(), canon.module.clone(), inj).expect("summand inclusion");
    let mut pr = IntMatrix::zeros(ring, f, s + f);
    pr.paste(0, s, &IntMatrix::identity(ring, f));
    let pr = FpMorphism::new(canon.module.clone(), quotient.clone(), pr).expect("summand projection");
    TorsionDecomposition {
        incl: canon.from.compose(&inj).expect("composable"),
        proj: pr.compose(&canon.to).expect("composable"),
        torsion,
        quotient,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmod::{image, kernel};

    #[test]
    fn decomposition_examples() {
        let m = FpModule::new(IntMatrix::from_i64(&[&[0], &[4]]));
        let d = torsion_decompose(&m).unwrap();
        assert!(d.torsion.is_isomorphic(&FpModule::cyclic(4)));
        assert!(d.quotient.is_isomorphic(&FpModule::cyclic(0)));

        let m = FpModule::new(IntMatrix::from_i64(&[&[2, 1], &[0, 2]]));
        let d = torsion_decompose(&m).unwrap();
        assert!(d.torsion.is_isomorphic(&FpModule::cyclic(4)));
        assert!(d.quotient.is_zero());
        assert!(torsion_decompose(&d.torsion).unwrap().torsion.is_isomorphic(&d.torsion));
    }

    #[test]
    fn sequence_is_exact() {
        let m = FpModule::new(IntMatrix::from_i64(&[&[2, 0], &[4, 6], &[1, 3]]));
        let d = torsion_decompose(&m).unwrap();
        assert!(d.proj.compose(&d.incl).unwrap().is_zero());
        let (k, _) = kernel(&d.proj);
        let (i, _, _) = image(&d.incl);
        assert!(k.is_isomorphic(&i));
        assert!(k.is_isomorphic(&d.torsion));
    }
}
