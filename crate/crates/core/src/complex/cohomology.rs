use crate::fpmod::{subquotient, FpModule, FpMorphism};
use crate::linalg::{kernel_matrix, solve_lift};
use crate::matrix::IntMatrix;
use crate::ring::Elem;

use super::{ChainMap, Complex};

/// `H^n(C)` with representatives of its canonical generators in the
/// generator coordinates of `C^n`.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: i64,
    pub module: FpModule,
    pub representatives: IntMatrix,
    boundaries: IntMatrix,
}

/// Generators of `Z^n = Ker d^n` in the generator coordinates of `C^n`.
pub(crate) fn cycle_generators(c: &Complex, n: i64) -> IntMatrix {
    let d = c.diff(n);
    let stacked = IntMatrix::hstack(c.ring(), d.target().generators(), &[d.matrix(), &-d.target().presentation()]);
    let ker = kernel_matrix(&stacked);
    ker.block(0..d.source().generators(), 0..ker.cols())
}

/// Generators of `B^n` together with the relations of `C^n`.
pub(crate) fn boundary_generators(c: &Complex, n: i64) -> IntMatrix {
    let x = c.object(n);
    IntMatrix::hstack(c.ring(), x.generators(), &[x.presentation(), c.diff(n - 1).matrix()])
}

pub fn cohomology(c: &Complex, n: i64) -> Cohomology {
    let ring = c.ring();
    let cycles = cycle_generators(c, n);
    let boundaries = boundary_generators(c, n);
    let (module, representatives) = subquotient(ring, &cycles, &boundaries);
    Cohomology { degree: n, module, representatives, boundaries }
}

impl Cohomology {
    /// Coordinates of the class of a cycle (a column in generator
    /// coordinates of `C^n`), reduced modulo the torsion factors.
    pub fn class_of(&self, v: &IntMatrix) -> Vec<Elem> {
        let ring = self.module.ring();
        let k = self.representatives.cols();
        let a = IntMatrix::hstack(ring, self.representatives.rows(), &[&self.representatives, &self.boundaries]);
        let sol = solve_lift(&a, v).expect("shapes agree").expect("argument is a cycle");
        let tors = &self.module.invariants().torsion;
        (0..k)
            .map(|i| match tors.get(i) {
                Some(d) => sol.get(i, 0).residue(d),
                None => sol.get(i, 0).clone(),
            })
            .collect()
    }

    /// `H^n(f)` between the given cohomology modules.
    pub fn induced(f: &ChainMap, from: &Cohomology, to: &Cohomology) -> FpMorphism {
        let ring = from.module.ring();
        let n = from.degree;
        let images = f.component(n).matrix() * &from.representatives;
        let cols: Vec<IntMatrix> =
            (0..images.cols()).map(|j| IntMatrix::column_vector(ring, to.class_of(&images.column(j)))).collect();
        let refs: Vec<&IntMatrix> = cols.iter().collect();
        let m = IntMatrix::hstack(ring, to.module.generators(), &refs);
        FpMorphism::new(from.module.clone(), to.module.clone(), m).expect("induced map is well defined")
    }
}

/// `H^n(f)` computed from scratch.
pub fn induced_map(f: &ChainMap, n: i64) -> FpMorphism {
    let from = cohomology(f.source(), n);
    let to = cohomology(f.target(), n);
    Cohomology::induced(f, &from, &to)
}
