//! Finitely presented modules over the base ring.

mod hom;
mod module;
mod morphism;
mod ops;
mod resolution;
mod torsion;

pub use hom::{hom_group, HomGroup};
pub use module::{Canonical, FpModule, Invariants};
pub use morphism::{extend_along, factor_through, lift_through_epi, FpMorphism};
pub use ops::{
    block_morphism, cokernel, cokernel_factor, copair, direct_sum, free_cover, image, is_epi, is_iso, is_mono, kernel,
    kernel_factor, pair, pullback, pushout, subquotient, sum_module, DirectSum,
};
pub use resolution::{projective_resolution, Resolution};
pub use torsion::{torsion_decompose, TorsionDecomposition, TorsionPairZ};

pub(crate) use torsion::split_torsion;
