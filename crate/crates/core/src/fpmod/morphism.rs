use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{solve_lift, LinearSystem};
use crate::matrix::IntMatrix;
use crate::ring::Elem;

use super::FpModule;

/// A morphism of finitely presented modules.
///
/// `matrix` sends source generators to target generator coordinates and
/// `witness` certifies well-definedness: `matrix · P_src = P_tgt · witness`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMorphism {
    source: FpModule,
    target: FpModule,
    matrix: IntMatrix,
    witness: IntMatrix,
}

impl FpMorphism {
    /// Builds a morphism from its generator matrix, solving for the witness.
    pub fn new(source: FpModule, target: FpModule, matrix: IntMatrix) -> Result<FpMorphism> {
        check_shape(&source, &target, &matrix)?;
        let lhs = &matrix * source.presentation();
        let witness = solve_lift(target.presentation(), &lhs)?
            .ok_or_else(|| Error::IllDefined(format!("{matrix} does not respect the relations of the source")))?;
        Ok(FpMorphism { source, target, matrix, witness })
    }

    pub fn with_witness(
        source: FpModule,
        target: FpModule,
        matrix: IntMatrix,
        witness: IntMatrix,
    ) -> Result<FpMorphism> {
        check_shape(&source, &target, &matrix)?;
        if &matrix * source.presentation() != target.presentation().checked_mul(&witness)? {
            return Err(Error::IllDefined("witness equation fails".into()));
        }
        Ok(FpMorphism { source, target, matrix, witness })
    }

    pub fn identity(m: &FpModule) -> FpMorphism {
        let ring = m.ring();
        FpMorphism {
            source: m.clone(),
            target: m.clone(),
            matrix: IntMatrix::identity(ring, m.generators()),
            witness: IntMatrix::identity(ring, m.relations()),
        }
    }

    pub fn zero(source: &FpModule, target: &FpModule) -> FpMorphism {
        let ring = source.ring();
        FpMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(ring, target.generators(), source.generators()),
            witness: IntMatrix::zeros(ring, target.relations(), source.relations()),
        }
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn target(&self) -> &FpModule {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn witness(&self) -> &IntMatrix {
        &self.witness
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &FpMorphism) -> Result<FpMorphism> {
        if inner.target.presentation() != self.source.presentation() {
            return Err(Error::NotComposable(format!(
                "target {:?} of inner map differs from source {:?}",
                inner.target, self.source
            )));
        }
        Ok(FpMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
            witness: &self.witness * &inner.witness,
        })
    }

    fn check_parallel(&self, other: &FpMorphism) -> Result<()> {
        if self.source.presentation() != other.source.presentation()
            || self.target.presentation() != other.target.presentation()
        {
            return Err(Error::NotComposable("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &FpMorphism) -> Result<FpMorphism> {
        self.check_parallel(other)?;
        Ok(FpMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix + &other.matrix,
            witness: &self.witness + &other.witness,
        })
    }

    pub fn neg(&self) -> FpMorphism {
        FpMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: -&self.matrix,
            witness: -&self.witness,
        }
    }

    pub fn sub(&self, other: &FpMorphism) -> Result<FpMorphism> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Elem) -> FpMorphism {
        FpMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(c),
            witness: self.witness.scale(c),
        }
    }

    /// Zero as a morphism: every generator image lies in the relation span.
    pub fn is_zero(&self) -> bool {
        solve_lift(self.target.presentation(), &self.matrix).expect("shapes agree").is_some()
    }

    /// Equality of morphisms: the difference factors through the target
    /// presentation.
    pub fn equals(&self, other: &FpMorphism) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }
}

fn check_shape(source: &FpModule, target: &FpModule, matrix: &IntMatrix) -> Result<()> {
    source.presentation().check_ring(matrix)?;
    target.presentation().check_ring(matrix)?;
    if matrix.shape() != (target.generators(), source.generators()) {
        return Err(Error::Dimension(format!(
            "generator matrix {}x{} for a map from {} to {} generators",
            matrix.rows(),
            matrix.cols(),
            source.generators(),
            target.generators()
        )));
    }
    Ok(())
}

/// Finds `h` with `p ∘ h = g` (both maps into the same module).
pub fn factor_through(p: &FpMorphism, g: &FpMorphism) -> Result<Option<FpMorphism>> {
    if p.target.presentation() != g.target.presentation() {
        return Err(Error::NotComposable("factor_through: different targets".into()));
    }
    let ring = p.matrix.ring();
    let x = &p.source;
    let a = &g.source;
    let y = &p.target;
    let mut sys = LinearSystem::new(ring);
    let h = sys.unknown(x.generators(), a.generators());
    let w = sys.unknown(x.relations(), a.relations());
    let z = sys.unknown(y.relations(), a.generators());
    // h · P_a = P_x · w
    let e1 = sys.equation(x.generators(), a.relations());
    sys.term(e1, h, IntMatrix::identity(ring, x.generators()), a.presentation().clone());
    sys.term(e1, w, -x.presentation(), IntMatrix::identity(ring, a.relations()));
    // G_p · h − P_y · z = G_g
    let e2 = sys.equation(y.generators(), a.generators());
    sys.term(e2, h, p.matrix.clone(), IntMatrix::identity(ring, a.generators()));
    sys.term(e2, z, -y.presentation(), IntMatrix::identity(ring, a.generators()));
    sys.rhs(e2, g.matrix.clone());
    Ok(sys.solve().map(|mut sol| {
        let witness = sol.swap_remove(1);
        let matrix = sol.swap_remove(0);
        FpMorphism { source: a.clone(), target: x.clone(), matrix, witness }
    }))
}

/// Finds `h` with `h ∘ i = g` (both maps out of the same module).
pub fn extend_along(i: &FpMorphism, g: &FpMorphism) -> Result<Option<FpMorphism>> {
    if i.source.presentation() != g.source.presentation() {
        return Err(Error::NotComposable("extend_along: different sources".into()));
    }
    let ring = i.matrix.ring();
    let a = &i.source;
    let b = &i.target;
    let c = &g.target;
    let mut sys = LinearSystem::new(ring);
    let h = sys.unknown(c.generators(), b.generators());
    let w = sys.unknown(c.relations(), b.relations());
    let z = sys.unknown(c.relations(), a.generators());
    // h · P_b = P_c · w
    let e1 = sys.equation(c.generators(), b.relations());
    sys.term(e1, h, IntMatrix::identity(ring, c.generators()), b.presentation().clone());
    sys.term(e1, w, -c.presentation(), IntMatrix::identity(ring, b.relations()));
    // h · G_i − P_c · z = G_g
    let e2 = sys.equation(c.generators(), a.generators());
    sys.term(e2, h, IntMatrix::identity(ring, c.generators()), i.matrix.clone());
    sys.term(e2, z, -c.presentation(), IntMatrix::identity(ring, a.generators()));
    sys.rhs(e2, g.matrix.clone());
    Ok(sys.solve().map(|mut sol| {
        let witness = sol.swap_remove(1);
        let matrix = sol.swap_remove(0);
        FpMorphism { source: b.clone(), target: c.clone(), matrix, witness }
    }))
}

/// Lifts `g: F → Y` through an epimorphism `p: X ↠ Y`; `F` should be free
/// (projective), otherwise a lift need not exist.
pub fn lift_through_epi(p: &FpMorphism, g: &FpMorphism) -> Result<FpMorphism> {
    factor_through(p, g)?.ok_or_else(|| Error::Unsupported("no lift through the given map".into()))
}

impl FpMorphism {
    /// A section `s` with `self ∘ s = id`, if one exists.
    pub fn section(&self) -> Option<FpMorphism> {
        factor_through(self, &FpMorphism::identity(&self.target)).expect("same target")
    }

    /// A retraction `r` with `r ∘ self = id`, if one exists.
    pub fn retraction(&self) -> Option<FpMorphism> {
        extend_along(self, &FpMorphism::identity(&self.source)).expect("same source")
    }

    /// Two-sided inverse of an isomorphism.
    pub fn inverse(&self) -> Option<FpMorphism> {
        let s = self.section()?;
        let back = s.compose(self).ok()?;
        back.equals(&FpMorphism::identity(&self.source)).ok()?.then_some(s)
    }
}

impl fmt::Debug for FpMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMorphism({:?} -> {:?} by {})", self.source, self.target, self.matrix)
    }
}
