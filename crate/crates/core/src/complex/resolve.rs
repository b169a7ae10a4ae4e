use crate::fpmod::{FpModule, FpMorphism};
use crate::linalg::solve_lift;
use crate::matrix::IntMatrix;

use super::{ChainMap, Complex};

/// An isomorphic complex with canonical objects, and the isomorphisms
/// `C → C'` and `C' → C`.
pub fn canonicalize(c: &Complex) -> (Complex, ChainMap, ChainMap) {
    let canon: Vec<_> = (c.lo()..=c.hi()).map(|n| c.object(n).canonical()).collect();
    let objects: Vec<FpModule> = canon.iter().map(|k| k.module.clone()).collect();
    let diffs: Vec<FpMorphism> = (c.lo()..c.hi())
        .map(|n| {
            let i = (n - c.lo()) as usize;
            canon[i + 1].to.compose(&c.diff(n)).and_then(|g| g.compose(&canon[i].from)).expect("composable")
        })
        .collect();
    let out = Complex::new(c.ring(), c.lo(), objects, diffs).expect("isomorphic complex");
    let pick = |n: i64, forward: bool| {
        if n < c.lo() || n > c.hi() {
            return Ok(FpMorphism::zero(&if forward { c.object(n) } else { out.object(n) }, &FpModule::zero(c.ring())));
        }
        let k = &canon[(n - c.lo()) as usize];
        Ok(if forward { k.to.clone() } else { k.from.clone() })
    };
    let to = ChainMap::from_fn(c, &out, |n| pick(n, true)).expect("canonical isomorphism");
    let from = ChainMap::from_fn(&out, c, |n| pick(n, false)).expect("canonical isomorphism");
    (out, to, from)
}

/// A complex of free modules with a quasi-isomorphism onto `c`.
pub fn free_resolution(c: &Complex) -> (Complex, ChainMap) {
    if c.is_free() {
        return (c.clone(), ChainMap::identity(c));
    }
    let ring = c.ring();
    let (x, _, back) = canonicalize(c);
    let b = |n: i64| x.object(n).generators();
    let a = |n: i64| x.object(n).relations();
    let p = |n: i64| x.object(n).presentation().clone();
    let g = |n: i64| x.diff(n).matrix().clone();
    let w = |n: i64| x.diff(n).witness().clone();
    let q = |n: i64| {
        let gg = &g(n + 1) * &g(n);
        solve_lift(&p(n + 2), &gg).expect("shapes").expect("d∘d = 0")
    };
    let (lo, hi) = (x.lo() - 1, x.hi());
    let ranks: Vec<usize> = (lo..=hi).map(|n| b(n) + a(n + 1)).collect();
    let maps: Vec<IntMatrix> = (lo..hi)
        .map(|n| {
            let top = IntMatrix::hstack(ring, b(n + 1), &[&g(n), &p(n + 1)]);
            let bottom = IntMatrix::hstack(ring, a(n + 2), &[&-&q(n), &-&w(n + 1)]);
            IntMatrix::vstack(ring, b(n) + a(n + 1), &[&top, &bottom])
        })
        .collect();
    let f = Complex::free(ring, lo, &ranks, &maps).expect("total complex of resolutions").trim();
    let proj = ChainMap::from_fn(&f, &x, |n| {
        let mut m = IntMatrix::zeros(ring, b(n), f.object(n).generators());
        m.paste(0, 0, &IntMatrix::identity(ring, b(n).min(f.object(n).generators())));
        FpMorphism::new(f.object(n), x.object(n), m)
    })
    .expect("augmentation is a chain map");
    (f, back.compose(&proj).expect("composable"))
}
