use crate::error::{Error, Result};
use crate::fpmod::{subquotient, FpModule, FpMorphism};
use crate::linalg::kernel_matrix;
use crate::matrix::IntMatrix;
use crate::ring::Elem;

use super::{ChainMap, Complex};

/// Degrees `p` contributing `Hom(X^p, Y^{p+n})` to the hom complex.
fn blocks(x: &Complex, y: &Complex, n: i64) -> Vec<(i64, usize, usize)> {
    (x.lo()..=x.hi()).map(|p| (p, y.object(p + n).generators(), x.object(p).generators())).collect()
}

fn dim(b: &[(i64, usize, usize)]) -> usize {
    b.iter().map(|&(_, r, c)| r * c).sum()
}

/// Matrix of `D: Hom^n(X, Y) → Hom^{n+1}(X, Y)`, `Dφ = d_Y φ − (−1)^n φ d_X`,
/// acting on column-major vectorisations of the blocks.
pub fn hom_complex_differential(x: &Complex, y: &Complex, n: i64) -> IntMatrix {
    let ring = x.ring();
    let src = blocks(x, y, n);
    let tgt = blocks(x, y, n + 1);
    let mut out = IntMatrix::zeros(ring, dim(&tgt), dim(&src));
    let sign = if n.rem_euclid(2) == 0 { ring.from_i64(-1) } else { ring.one() };
    let mut so = 0;
    let src_offsets: Vec<usize> = src
        .iter()
        .map(|&(_, r, c)| {
            let o = so;
            so += r * c;
            o
        })
        .collect();
    let mut to = 0;
    for (k, &(p, r, c)) in tgt.iter().enumerate() {
        let (_, sr, sc) = src[k];
        let dy = y.diff(p + n).matrix().clone();
        let left = IntMatrix::identity(ring, sc).kron(&dy);
        debug_assert_eq!(left.shape(), (r * c, sr * sc));
        out.paste(to, src_offsets[k], &left);
        if k + 1 < src.len() {
            let (_, nr, nc) = src[k + 1];
            let dx = x.diff(p).matrix().clone();
            let right = dx.transpose().kron(&IntMatrix::identity(ring, nr)).scale(&sign);
            debug_assert_eq!(right.shape(), (r * c, nr * nc));
            add_block(&mut out, to, src_offsets[k + 1], &right);
        }
        to += r * c;
    }
    out
}

fn add_block(out: &mut IntMatrix, row: usize, col: usize, block: &IntMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = out.get(row + i, col + j).add(block.get(i, j));
            out.set(row + i, col + j, v);
        }
    }
}

/// `H^n Hom(X, Y)` together with cocycle representatives.
#[derive(Clone, Debug)]
pub struct DerivedHom {
    pub module: FpModule,
    pub representatives: IntMatrix,
    source: Complex,
    target: Complex,
    degree: i64,
}

pub fn derived_hom_group(x: &Complex, y: &Complex, n: i64) -> Result<DerivedHom> {
    if !x.is_free() || !y.is_free() {
        return Err(Error::NonFree("derived_hom needs free-entried complexes".into()));
    }
    let ring = x.ring();
    let d = hom_complex_differential(x, y, n);
    let d_prev = hom_complex_differential(x, y, n - 1);
    let (module, representatives) = subquotient(ring, &kernel_matrix(&d), &d_prev);
    Ok(DerivedHom { module, representatives, source: x.clone(), target: y.clone(), degree: n })
}

pub fn derived_hom(x: &Complex, y: &Complex, n: i64) -> Result<FpModule> {
    Ok(derived_hom_group(x, y, n)?.module)
}

impl DerivedHom {
    /// The chain map `X → Y[n]` represented by the given coordinates.
    pub fn element(&self, coords: &[Elem]) -> ChainMap {
        let ring = self.module.ring();
        let v = &self.representatives * &IntMatrix::column_vector(ring, coords.to_vec());
        let shifted = self.target.shift(self.degree);
        let mut offset = 0;
        let bl = blocks(&self.source, &self.target, self.degree);
        let comps: Vec<(i64, FpMorphism)> = bl
            .iter()
            .map(|&(p, r, c)| {
                let m = IntMatrix::unvectorize(ring, r, c, &v.entries()[offset..offset + r * c]);
                offset += r * c;
                (p, FpMorphism::new(self.source.object(p), shifted.object(p), m).expect("free modules"))
            })
            .collect();
        ChainMap::from_fn(&self.source, &shifted, |p| {
            Ok(comps
                .iter()
                .find(|(q, _)| *q == p)
                .map(|(_, f)| f.clone())
                .unwrap_or_else(|| FpMorphism::zero(&self.source.object(p), &shifted.object(p))))
        })
        .expect("cocycles are chain maps")
    }
}
