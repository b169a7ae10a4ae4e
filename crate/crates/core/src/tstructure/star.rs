use crate::complex::{cohomology, Complex};
use crate::error::{Error, Result};
use crate::exact::Carrier;
use crate::fpmod::FpModule;
use crate::ring::RingSpec;

use super::{truncate_le, TStructureSpec};

/// Witness of `X ∈ D^{≤−n} ⋆ E ⋆ E[1] ⋆ … ⋆ E[n−1]`: the head
/// `τ^{≤−n} X` followed by the factors `H^{−k}(X)[k]`, `k = n−1, …, 0`,
/// each extended onto the previous stage by the natural truncation
/// triangle `τ^{≤−k−1} X → τ^{≤−k} X → H^{−k}(X)[k]`.
#[derive(Clone, Debug)]
pub struct StarDecomposition {
    pub head: Complex,
    /// `(degree, module)` in increasing degree.
    pub factors: Vec<(i64, FpModule)>,
}

pub fn star_membership(x: &Complex, class: Carrier, n: usize) -> Result<Option<StarDecomposition>> {
    if n == 0 {
        return Err(Error::Unsupported("star aisle needs n ≥ 1".into()));
    }
    if x.ring() != RingSpec::Integers {
        return Err(Error::UnsupportedRing { op: "star_membership", ring: x.ring() });
    }
    match (class, n) {
        (Carrier::FpZ, _) | (Carrier::TorsionClassZ, 1) => {}
        _ => return Err(Error::Unsupported(format!("star aisle for {class:?} with n = {n}"))),
    }
    if (1..=x.hi()).any(|d| !cohomology(x, d).module.is_zero()) {
        return Ok(None);
    }
    let n = n as i64;
    let mut factors = Vec::new();
    for d in -(n - 1)..=0 {
        let h = cohomology(x, d).module;
        if !class.contains(&h) {
            return Ok(None);
        }
        factors.push((d, h));
    }
    let (head, _) = truncate_le(&TStructureSpec::Natural, -n, x)?;
    Ok(Some(StarDecomposition { head, factors }))
}
