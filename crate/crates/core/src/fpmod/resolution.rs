use crate::error::{Error, Result};
use crate::linalg::{image_basis, kernel_matrix};
use crate::matrix::IntMatrix;

use super::FpModule;

/// `0 → F_k → … → F_0 → M → 0` with `maps[i]: F_{i+1} → F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub ranks: Vec<usize>,
    pub maps: Vec<IntMatrix>,
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

pub fn projective_resolution(m: &FpModule, max_len: usize) -> Result<Resolution> {
    let mut ranks = vec![m.generators()];
    let mut maps = Vec::new();
    let mut next = image_basis(m.presentation());
    while next.cols() > 0 {
        if maps.len() == max_len {
            return Err(Error::ResolutionTooLong(max_len));
        }
        let syzygies = kernel_matrix(&next);
        ranks.push(next.cols());
        maps.push(next);
        next = image_basis(&syzygies);
    }
    Ok(Resolution { ranks, maps })
}
