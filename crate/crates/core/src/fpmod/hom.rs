use crate::error::{Error, Result};
use crate::linalg::{solve_lift, LinearSystem};
use crate::matrix::IntMatrix;
use crate::ring::{Elem, RingSpec};

use super::{subquotient, FpModule, FpMorphism};

/// `Hom(M, N)` as a finitely presented abelian group.
///
/// Canonical generators of `module` correspond to the morphisms whose
/// generator matrices are the columns of `generators` (vectorised
/// column-major).
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub source: FpModule,
    pub target: FpModule,
    pub module: FpModule,
    generators: IntMatrix,
    relations: IntMatrix,
}

pub fn hom_group(m: &FpModule, n: &FpModule) -> Result<HomGroup> {
    let ring = m.ring();
    if ring != RingSpec::Integers || n.ring() != ring {
        return Err(Error::UnsupportedRing { op: "hom_group", ring });
    }
    let (bm, bn) = (m.generators(), n.generators());
    let mut sys = LinearSystem::new(ring);
    let g = sys.unknown(bn, bm);
    let w = sys.unknown(n.relations(), m.relations());
    let e = sys.equation(bn, m.relations());
    sys.term(e, g, IntMatrix::identity(ring, bn), m.presentation().clone());
    sys.term(e, w, -n.presentation(), IntMatrix::identity(ring, m.relations()));
    let ker = sys.kernel();
    let gens = ker.block(0..bn * bm, 0..ker.cols());
    let relations = IntMatrix::identity(ring, bm).kron(n.presentation());
    let (module, generators) = subquotient(ring, &gens, &relations);
    Ok(HomGroup { source: m.clone(), target: n.clone(), module, generators, relations })
}

impl HomGroup {
    /// The morphism with the given coordinates in the canonical generators.
    pub fn element(&self, coords: &[Elem]) -> FpMorphism {
        let ring = self.module.ring();
        let c = IntMatrix::column_vector(ring, coords.to_vec());
        let v = &self.generators * &c;
        let g = IntMatrix::unvectorize(ring, self.target.generators(), self.source.generators(), v.entries());
        FpMorphism::new(self.source.clone(), self.target.clone(), g).expect("hom generators are well defined")
    }

    /// Coordinates of `f`, reduced modulo the torsion factors.
    pub fn coordinates(&self, f: &FpMorphism) -> Vec<Elem> {
        let ring = self.module.ring();
        let k = self.generators.cols();
        let a = IntMatrix::hstack(ring, self.generators.rows(), &[&self.generators, &self.relations]);
        let sol = solve_lift(&a, &f.matrix().vectorize())
            .expect("shapes agree")
            .expect("every morphism is a combination of hom generators");
        let tors = &self.module.invariants().torsion;
        (0..k)
            .map(|i| {
                let x = sol.get(i, 0).clone();
                match tors.get(i) {
                    Some(d) => x.residue(d),
                    None => x,
                }
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.generators.cols()
    }

    /// Matrix of `Hom(M, φ): Hom(M, N) → Hom(M, N')` in canonical coordinates.
    pub fn postcompose_matrix(&self, phi: &FpMorphism, into: &HomGroup) -> IntMatrix {
        let ring = self.module.ring();
        let cols: Vec<IntMatrix> = (0..self.rank())
            .map(|i| {
                let f = self.element(&unit_vector(ring, self.rank(), i));
                let g = phi.compose(&f).expect("composable");
                IntMatrix::column_vector(ring, into.coordinates(&g))
            })
            .collect();
        let refs: Vec<&IntMatrix> = cols.iter().collect();
        IntMatrix::hstack(ring, into.rank(), &refs)
    }
}

pub(crate) fn unit_vector(ring: RingSpec, n: usize, i: usize) -> Vec<Elem> {
    (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()
}
