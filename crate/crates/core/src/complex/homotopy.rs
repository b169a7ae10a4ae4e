use crate::fpmod::FpMorphism;
use crate::linalg::LinearSystem;
use crate::matrix::IntMatrix;

use super::ChainMap;

/// Components `h^n: X^n → Y^{n−1}`.
#[derive(Clone, Debug)]
pub struct Homotopy {
    pub lo: i64,
    pub components: Vec<FpMorphism>,
}

impl Homotopy {
    pub fn component(&self, n: i64) -> Option<&FpMorphism> {
        usize::try_from(n - self.lo).ok().and_then(|i| self.components.get(i))
    }

    /// Checks `f = d∘h + h∘d` degreewise.
    pub fn certifies(&self, f: &ChainMap) -> bool {
        let (lo, hi) = f.window();
        let (x, y) = (f.source(), f.target());
        (lo..=hi).all(|n| {
            let mut total = FpMorphism::zero(&x.object(n), &y.object(n));
            if let Some(h) = self.component(n) {
                total = total.add(&y.diff(n - 1).compose(h).unwrap()).unwrap();
            }
            if let Some(h) = self.component(n + 1) {
                total = total.add(&h.compose(&x.diff(n)).unwrap()).unwrap();
            }
            total.equals(&f.component(n)).unwrap()
        })
    }
}

/// Decides whether `f ≃ 0`, returning a certifying homotopy.
///
/// The homotopy components, their well-definedness witnesses and the
/// relation slack are solved for in one linear system, so entries need not
/// be free.
pub fn is_nullhomotopic(f: &ChainMap) -> Option<Homotopy> {
    let (x, y) = (f.source(), f.target());
    let ring = x.ring();
    let (lo, hi) = f.window();
    if lo > hi {
        return Some(Homotopy { lo: 0, components: vec![] });
    }
    let id = |k: usize| IntMatrix::identity(ring, k);
    let mut sys = LinearSystem::new(ring);
    let mut hs = Vec::new();
    let mut ws = Vec::new();
    for n in lo..=hi + 1 {
        let (xn, yp) = (x.object(n), y.object(n - 1));
        hs.push(sys.unknown(yp.generators(), xn.generators()));
        ws.push(sys.unknown(yp.relations(), xn.relations()));
        let e = sys.equation(yp.generators(), xn.relations());
        sys.term(e, hs[hs.len() - 1], id(yp.generators()), xn.presentation().clone());
        sys.term(e, ws[ws.len() - 1], -yp.presentation(), id(xn.relations()));
    }
    for n in lo..=hi {
        let i = (n - lo) as usize;
        let (xn, yn) = (x.object(n), y.object(n));
        let z = sys.unknown(yn.relations(), xn.generators());
        let e = sys.equation(yn.generators(), xn.generators());
        sys.term(e, hs[i], y.diff(n - 1).matrix().clone(), id(xn.generators()));
        sys.term(e, hs[i + 1], id(yn.generators()), x.diff(n).matrix().clone());
        sys.term(e, z, yn.presentation().clone(), id(xn.generators()));
        sys.rhs(e, f.component(n).matrix().clone());
    }
    let sol = sys.solve()?;
    let components = (lo..=hi + 1)
        .map(|n| {
            let i = (n - lo) as usize;
            FpMorphism::with_witness(x.object(n), y.object(n - 1), sol[hs[i]].clone(), sol[ws[i]].clone())
                .expect("solved homotopy is well defined")
        })
        .collect();
    Some(Homotopy { lo, components })
}

/// `f ≃ g`, with a homotopy for `f − g`.
pub fn homotopic(f: &ChainMap, g: &ChainMap) -> Option<Homotopy> {
    is_nullhomotopic(&f.sub(g).ok()?)
}
