mod common;

use proptest::prelude::*;
use tiltwork_core::complex::*;
use tiltwork_core::fpmod::{FpModule, FpMorphism};
use tiltwork_core::sampling::Sampler;
use tiltwork_core::{IntMatrix, RingSpec};

const Z: RingSpec = RingSpec::Integers;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

fn scalar_map(x: &Complex, y: &Complex, n: i64, k: i64) -> ChainMap {
    ChainMap::from_fn(x, y, |d| {
        let (s, t) = (x.object(d), y.object(d));
        if d == n || (s.generators() == 1 && t.generators() == 1) {
            FpMorphism::new(s, t, m(&[&[k]]))
        } else {
            Ok(FpMorphism::zero(&s, &t))
        }
    })
    .unwrap()
}

#[test]
fn cone_examples() {
    let z0 = Complex::stalk(&FpModule::cyclic(0), 0);
    let c = cone(&ChainMap::identity(&z0));
    assert_eq!((c.lo(), c.hi()), (-1, 0));
    assert_eq!(c.diff(-1).matrix(), &m(&[&[1]]));
    assert!(is_nullhomotopic(&ChainMap::identity(&c)).is_some());

    let c = cone(&scalar_map(&z0, &z0, 0, 2));
    assert_eq!(c.diff(-1).matrix(), &m(&[&[2]]));

    let x = Complex::two_term(&m(&[&[3]]), 0);
    let y = Complex::stalk(&FpModule::new(m(&[&[5]])), 0);
    let c = cone(&ChainMap::zero(&x, &y));
    let expected = y.direct_sum(&x.shift(1));
    for n in -3..=2 {
        assert!(cohomology(&c, n).module.is_isomorphic(&cohomology(&expected, n).module));
    }
}

#[test]
fn nullhomotopy_examples() {
    let acyclic = Complex::two_term(&m(&[&[1]]), 0);
    let h = is_nullhomotopic(&ChainMap::identity(&acyclic)).expect("contractible");
    assert!(h.certifies(&ChainMap::identity(&acyclic)));
    assert_eq!(h.component(0).unwrap().matrix(), &m(&[&[1]]));

    let x = Complex::two_term(&m(&[&[2]]), 0);
    // 1 = 2h has no integer solution
    assert!((-5i64..=5).all(|h| 2 * h != 1));
    assert!(is_nullhomotopic(&ChainMap::identity(&x)).is_none());
    assert!(is_nullhomotopic(&ChainMap::zero(&x, &x)).is_some());
}

#[test]
fn cohomology_examples() {
    let x = Complex::two_term(&m(&[&[2]]), 0);
    assert!(cohomology(&x, -1).module.is_zero());
    assert!(cohomology(&x, 0).module.is_isomorphic(&FpModule::cyclic(2)));
    assert!(Complex::two_term(&m(&[&[1]]), 0).is_exact());
    let md = FpModule::new(m(&[&[2, 1], &[0, 6]]));
    assert!(cohomology(&Complex::stalk(&md, 0), 0).module.is_isomorphic(&md));
}

#[test]
fn derived_hom_examples() {
    let x = Complex::two_term(&m(&[&[2]]), 0);
    let y = Complex::stalk(&FpModule::cyclic(0), 0);
    assert!(derived_hom(&x, &y, 0).unwrap().is_zero());
    assert!(derived_hom(&x, &y, 1).unwrap().is_isomorphic(&FpModule::cyclic(2)));
    assert!(derived_hom(&y, &y, 0).unwrap().is_isomorphic(&FpModule::cyclic(0)));
    for n in [-3, 2, 5] {
        assert!(derived_hom(&x, &y, n).unwrap().is_zero());
    }
    let fp = Complex::stalk(&FpModule::cyclic(2), 0);
    assert!(derived_hom(&fp, &y, 0).is_err());
}

#[test]
fn free_resolution_is_quasi_iso() {
    let md = FpModule::new(m(&[&[2, 1], &[0, 6]]));
    let n = FpModule::new(m(&[&[4]]));
    let c =
        Complex::new(Z, 0, vec![md.clone(), n.clone()], vec![FpMorphism::new(md, n, m(&[&[0, 2]])).unwrap()]).unwrap();
    let (f, q) = free_resolution(&c);
    assert!(f.is_free());
    assert!(q.is_quasi_iso());
}

/// Chain maps `X → Y[n]` with entries in a small box, counted modulo
/// null-homotopic ones, against the order of the derived hom group.
#[test]
fn derived_hom_matches_bounded_enumeration() {
    let x = Complex::two_term(&m(&[&[2]]), 0);
    let y = Complex::two_term(&m(&[&[4]]), 1);
    for n in -1..=2 {
        let yn = y.shift(n);
        let degrees: Vec<i64> = (x.lo()..=x.hi()).filter(|&p| yn.object(p).generators() > 0).collect();
        let mut classes: Vec<ChainMap> = Vec::new();
        let box_range: Vec<i64> = (-4..=4).collect();
        let mut assignment = vec![0usize; degrees.len()];
        loop {
            let comp = |p: i64| {
                let (s, t) = (x.object(p), yn.object(p));
                match degrees.iter().position(|&q| q == p) {
                    Some(i) => FpMorphism::new(s, t, m(&[&[box_range[assignment[i]]]])),
                    None => Ok(FpMorphism::zero(&s, &t)),
                }
            };
            if let Ok(f) = ChainMap::from_fn(&x, &yn, comp) {
                if !classes.iter().any(|g| homotopic(&f, g).is_some()) {
                    classes.push(f);
                }
            }
            let mut k = 0;
            while k < assignment.len() {
                assignment[k] += 1;
                if assignment[k] < box_range.len() {
                    break;
                }
                assignment[k] = 0;
                k += 1;
            }
            if k == assignment.len() {
                break;
            }
        }
        let h = derived_hom(&x, &y, n).unwrap();
        assert!(h.is_torsion());
        let order: usize =
            h.invariants().torsion.iter().map(|d| usize::try_from(d.as_int().unwrap()).unwrap()).product();
        assert_eq!(classes.len(), order, "degree {n}");
    }
}

fn random_free_complex(s: &mut Sampler, ring: RingSpec, width: usize) -> Complex {
    loop {
        let lo = s.int(2);
        let ranks: Vec<usize> = (0..width).map(|_| s.range(0, 2)).collect();
        let mut maps = Vec::new();
        for i in 0..width.saturating_sub(1) {
            let mut g = s.matrix(ring, ranks[i + 1], ranks[i]);
            if i > 0 && s.chance(0.7) {
                // force d∘d = 0 by composing with a kernel basis
                let prev: &IntMatrix = &maps[i - 1];
                let k = tiltwork_core::linalg::kernel_matrix(&prev.transpose()).transpose();
                let mix = s.matrix(ring, ranks[i + 1], k.rows());
                g = &mix * &k;
            }
            maps.push(g);
        }
        if let Ok(c) = Complex::free(ring, lo, &ranks, &maps) {
            return c;
        }
    }
}

fn random_chain_map(s: &mut Sampler, x: &Complex, y: &Complex) -> ChainMap {
    let h = derived_hom_group(x, y, 0).unwrap();
    let coords: Vec<_> = (0..h.module.generators()).map(|_| tiltwork_core::Elem::from(s.int(3))).collect();
    let f = h.element(&coords);
    ChainMap::from_fn(x, y, |n| Ok(f.component(n).clone())).unwrap()
}

fn exact_at(a: &FpMorphism, b: &FpMorphism) -> bool {
    let (k, _) = tiltwork_core::fpmod::kernel(b);
    let (im, _, _) = tiltwork_core::fpmod::image(a);
    b.compose(a).unwrap().is_zero() && k.is_isomorphic(&im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cone_long_exact_sequence(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = random_free_complex(&mut s, Z, 3);
        let y = random_free_complex(&mut s, Z, 3);
        let f = random_chain_map(&mut s, &x, &y);
        let tri = cone_triangle(&f);
        let (i, p) = (&tri.inclusion, &tri.projection);
        let f1 = f.shift(1);
        for n in -5..=4 {
            let hx = cohomology(&x, n);
            let hy = cohomology(&y, n);
            let hc = cohomology(&tri.complex, n);
            let hx1 = cohomology(&x.shift(1), n);
            let hy1 = cohomology(&y.shift(1), n);
            let a = Cohomology::induced(&f, &hx, &hy);
            let b = Cohomology::induced(i, &hy, &hc);
            let c = Cohomology::induced(p, &hc, &hx1);
            let d = Cohomology::induced(&f1, &hx1, &hy1);
            prop_assert!(exact_at(&a, &b));
            prop_assert!(exact_at(&b, &c));
            prop_assert!(exact_at(&c, &d));
        }
    }

    #[test]
    fn rotated_cone_maps_to_source(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = random_free_complex(&mut s, Z, 3);
        let y = random_free_complex(&mut s, Z, 3);
        let f = random_chain_map(&mut s, &x, &y);
        let tri = cone_triangle(&f);
        let back = tri.projection.shift(-1);
        prop_assert_eq!(back.target(), &x.shift(1).shift(-1));
    }

    #[test]
    fn split_acyclic_iff_contractible(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = random_free_complex(&mut s, Z, 4);
        let contractible = is_nullhomotopic(&ChainMap::identity(&x)).is_some();
        let ex = tiltwork_core::exact::ExactStructure::new(
            tiltwork_core::exact::Carrier::FreeZ,
            tiltwork_core::exact::Flavor::Split,
        );
        prop_assert_eq!(is_acyclic_wrt(&x, &ex).is_some(), contractible);
    }

    #[test]
    fn resolution_quasi_iso(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = s.module(Z);
        let b = s.module(Z);
        let d = s.morphism(&a, &b);
        let c = Complex::new(Z, s.int(2), vec![a, b], vec![d]).unwrap();
        let (f, q) = free_resolution(&c);
        prop_assert!(f.is_free());
        prop_assert!(q.is_quasi_iso());
    }
}
