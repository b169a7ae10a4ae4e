use crate::error::Result;
use crate::exact::ExactStructure;
use crate::fpmod::FpMorphism;

use super::FreydObject;

/// The exact structure of `E^op`: a morphism of `E` read backwards is a
/// deflation of `E^op` iff it is an inflation of `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Opposite(pub ExactStructure);

impl Opposite {
    /// `f: A → B` in `E`, viewed as `B → A` in `E^op`.
    pub fn is_deflation(&self, f: &FpMorphism) -> Result<bool> {
        self.0.is_inflation(f)
    }

    pub fn is_inflation(&self, f: &FpMorphism) -> Result<bool> {
        self.0.is_deflation(f)
    }

    /// Effaceability of the covariant functor `Coker E(A0, −) → E(A1, −)`
    /// presented by `f: A1 → A0` read in `E^op`, i.e. `f` an inflation.
    pub fn is_effaceable(&self, f: &FreydObject) -> Result<bool> {
        self.is_deflation(f.map())
    }
}
