//! Seeded random generation of matrices, modules and morphisms.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::fpmod::{cokernel, FpModule, FpMorphism};
use crate::matrix::IntMatrix;
use crate::ring::{Elem, Poly, RingSpec};

/// Identifies the generation scheme below. Changes whenever a fixed seed
/// would start producing different objects.
pub const DISTRIBUTION_VERSION: u32 = 1;

/// Size limits for generated objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_rank: usize,
    pub max_entry: i64,
    pub max_degree: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds { max_rank: 3, max_entry: 10, max_degree: 2 }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    pub bounds: Bounds,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), bounds: Bounds::default() }
    }

    /// Independent stream for sample `index` of a run seeded with `seed`.
    pub fn for_sample(seed: u64, index: u64) -> Sampler {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Sampler { rng, bounds: Bounds::default() }
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Sampler {
        self.bounds = bounds;
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.gen_range(lo..=hi_inclusive)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn elem(&mut self, ring: RingSpec) -> Elem {
        let b = self.bounds.max_entry;
        match ring {
            RingSpec::Integers => Elem::from(self.int(b)),
            RingSpec::RationalPolynomials => {
                let deg = self.rng.gen_range(0..=self.bounds.max_degree);
                let small = b.min(3);
                let coeffs = (0..=deg).map(|_| BigRational::from_integer(BigInt::from(self.int(small)))).collect();
                Elem::from(Poly::from_coeffs(coeffs))
            }
        }
    }

    /// Entries drawn independently with [`Sampler::elem`].
    pub fn matrix(&mut self, ring: RingSpec, rows: usize, cols: usize) -> IntMatrix {
        let entries = (0..rows * cols).map(|_| self.elem(ring)).collect();
        IntMatrix::new(ring, rows, cols, entries).expect("shape")
    }

    pub fn module(&mut self, ring: RingSpec) -> FpModule {
        let b = self.range(0, self.bounds.max_rank);
        let a = self.range(0, self.bounds.max_rank);
        FpModule::new(self.matrix(ring, b, a))
    }

    /// A module with finite underlying group (integers only).
    pub fn finite_module(&mut self) -> FpModule {
        let b = self.range(0, self.bounds.max_rank);
        let mut p = self.matrix(RingSpec::Integers, b, b);
        loop {
            let det = p.determinant().expect("square");
            if !det.is_zero() {
                return FpModule::new(p);
            }
            p = self.matrix(RingSpec::Integers, b, b);
        }
    }

    pub fn free_module(&mut self, ring: RingSpec) -> FpModule {
        let b = self.range(0, self.bounds.max_rank);
        FpModule::free(ring, b)
    }

    /// A random morphism `m → n`, built between canonical forms.
    pub fn morphism(&mut self, m: &FpModule, n: &FpModule) -> FpMorphism {
        let ring = m.ring();
        let cm = m.canonical();
        let cn = n.canonical();
        let ds = padded_factors(&cm.module);
        let es = padded_factors(&cn.module);
        let mut g = IntMatrix::zeros(ring, es.len(), ds.len());
        for (j, e) in es.iter().enumerate() {
            for (i, d) in ds.iter().enumerate() {
                let gcd = d.gcd(e);
                let step = if gcd.is_zero() { ring.one() } else { gcd.divides(e).expect("gcd divides") };
                g.set(j, i, self.elem(ring).mul(&step));
            }
        }
        let mid = FpMorphism::new(cm.module.clone(), cn.module.clone(), g).expect("canonical map is well defined");
        cn.from.compose(&mid).and_then(|x| x.compose(&cm.to)).expect("composable")
    }

    /// A complex with `width` objects starting in degree `lo`, free or
    /// finitely presented. Each differential factors through the cokernel of
    /// the previous one.
    pub fn complex(&mut self, ring: RingSpec, free: bool, lo: i64, width: usize) -> Complex {
        let objects: Vec<FpModule> =
            (0..width).map(|_| if free { self.free_module(ring) } else { self.module(ring) }).collect();
        let mut diffs: Vec<FpMorphism> = Vec::new();
        for i in 1..width {
            let d = match diffs.last() {
                None => self.maybe_zero_morphism(&objects[i - 1], &objects[i], 0.1),
                Some(prev) => {
                    let (c, proj) = cokernel(prev);
                    let h = self.maybe_zero_morphism(&c, &objects[i], 0.1);
                    h.compose(&proj).expect("composable")
                }
            };
            diffs.push(d);
        }
        Complex::new(ring, lo, objects, diffs).expect("d ∘ d = 0 by construction")
    }

    /// `(0, …, 0)` with the given probability, otherwise a random morphism.
    pub fn maybe_zero_morphism(&mut self, m: &FpModule, n: &FpModule, p_zero: f64) -> FpMorphism {
        if self.chance(p_zero) {
            FpMorphism::zero(m, n)
        } else {
            self.morphism(m, n)
        }
    }
}

/// Invariant factors of a canonical module with zeros for the free part.
fn padded_factors(m: &FpModule) -> Vec<Elem> {
    let inv = m.invariants();
    let mut out = inv.torsion.clone();
    out.extend(std::iter::repeat_n(m.ring().zero(), inv.free_rank));
    out
}
