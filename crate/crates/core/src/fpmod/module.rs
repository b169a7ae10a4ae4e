use std::fmt;

use crate::linalg::smith_normal_form;
use crate::matrix::IntMatrix;
use crate::ring::{Elem, RingSpec};

use super::FpMorphism;

/// Isomorphism invariants: nonunit invariant factors (canonical associates,
/// in divisibility order) and the free rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub torsion: Vec<Elem>,
    pub free_rank: usize,
}

impl Invariants {
    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("R/({d})")).collect();
        if self.free_rank > 0 {
            parts.push(format!("R^{}", self.free_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// A finitely presented module: the cokernel of `presentation: R^a → R^b`.
///
/// Generators are the `b` standard basis vectors of the target, relations
/// the `a` columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpModule {
    presentation: IntMatrix,
    invariants: Invariants,
}

/// A module in canonical form together with mutually inverse isomorphisms.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub module: FpModule,
    /// `original → canonical`
    pub to: FpMorphism,
    /// `canonical → original`
    pub from: FpMorphism,
}

/// Matrices relating a presentation to its canonical form, without
/// assembling morphisms. `to: b' × b`, `from: b × b'`.
pub(crate) struct CanonicalData {
    pub module: FpModule,
    pub to: IntMatrix,
    pub from: IntMatrix,
    /// Columns of `v` (relation change of basis) for the kept torsion factors;
    /// witnesses `from · D = P · relation_witness`.
    pub relation_witness: IntMatrix,
}

impl FpModule {
    pub fn new(presentation: IntMatrix) -> FpModule {
        let snf = smith_normal_form(&presentation);
        let torsion = snf.invariant_factors().into_iter().filter(|d| !d.is_unit()).collect();
        let free_rank = presentation.rows() - snf.rank;
        FpModule { presentation, invariants: Invariants { torsion, free_rank } }
    }

    pub fn free(ring: RingSpec, rank: usize) -> FpModule {
        FpModule::new(IntMatrix::zeros(ring, rank, 0))
    }

    pub fn zero(ring: RingSpec) -> FpModule {
        FpModule::free(ring, 0)
    }

    /// `Z/n` over the integers; `n = 0` gives `Z`.
    pub fn cyclic(n: i64) -> FpModule {
        if n == 0 {
            FpModule::free(RingSpec::Integers, 1)
        } else {
            FpModule::new(IntMatrix::from_i64(&[&[n]]))
        }
    }

    /// The canonical module `⊕ R/(dᵢ) ⊕ R^free_rank`, torsion summands first.
    pub fn from_invariants(ring: RingSpec, torsion: &[Elem], free_rank: usize) -> FpModule {
        let s = torsion.len();
        FpModule::new(IntMatrix::diagonal(ring, s + free_rank, s, torsion))
    }

    pub fn ring(&self) -> RingSpec {
        self.presentation.ring()
    }

    pub fn presentation(&self) -> &IntMatrix {
        &self.presentation
    }

    pub fn invariants(&self) -> &Invariants {
        &self.invariants
    }

    pub fn generators(&self) -> usize {
        self.presentation.rows()
    }

    pub fn relations(&self) -> usize {
        self.presentation.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.invariants.is_zero()
    }

    /// No torsion (over the catalogued domains: free).
    pub fn is_free(&self) -> bool {
        self.invariants.torsion.is_empty()
    }

    /// Free rank zero.
    pub fn is_torsion(&self) -> bool {
        self.invariants.free_rank == 0
    }

    /// Presented with no effective relations, so generator coordinates are
    /// literal coordinates of a free module.
    pub fn is_literally_free(&self) -> bool {
        self.presentation.is_zero()
    }

    pub fn is_isomorphic(&self, other: &FpModule) -> bool {
        self.ring() == other.ring() && self.invariants == other.invariants
    }

    /// Is this exactly in the form produced by [`FpModule::from_invariants`]?
    pub fn is_canonical(&self) -> bool {
        let s = self.invariants.torsion.len();
        self.presentation
            == IntMatrix::diagonal(self.ring(), s + self.invariants.free_rank, s, &self.invariants.torsion)
    }

    pub(crate) fn canonical_data(&self) -> CanonicalData {
        canonical_data(&self.presentation)
    }

    pub fn canonical(&self) -> Canonical {
        let data = self.canonical_data();
        let to = FpMorphism::new(self.clone(), data.module.clone(), data.to)
            .expect("canonical change of generators is well defined");
        let from = FpMorphism::with_witness(data.module.clone(), self.clone(), data.from, data.relation_witness)
            .expect("inverse canonical change of generators is well defined");
        Canonical { module: data.module, to, from }
    }
}

pub(crate) fn canonical_data(p: &IntMatrix) -> CanonicalData {
    let ring = p.ring();
    let snf = smith_normal_form(p);
    let torsion_idx: Vec<usize> = (0..snf.rank).filter(|&i| !snf.d.get(i, i).is_unit()).collect();
    let mut kept = torsion_idx.clone();
    kept.extend(snf.rank..p.rows());
    let factors: Vec<Elem> = torsion_idx.iter().map(|&i| snf.d.get(i, i).clone()).collect();
    let module = FpModule::from_invariants(ring, &factors, p.rows() - snf.rank);
    CanonicalData {
        module,
        to: snf.u.select_rows(&kept),
        from: snf.u_inv.select_cols(&kept),
        relation_witness: snf.v.select_cols(&torsion_idx),
    }
}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpModule({} ≅ {})", self.presentation, self.invariants)
    }
}

impl fmt::Display for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.invariants, f)
    }
}
