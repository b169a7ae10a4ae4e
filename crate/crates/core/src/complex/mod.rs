//! Bounded cochain complexes of finitely presented modules.

mod cohomology;
pub(crate) use cohomology::{boundary_generators, cycle_generators};
mod hom_complex;
mod homotopy;
mod resolve;

pub use crate::exact::is_acyclic_wrt;
pub use cohomology::{cohomology, induced_map, Cohomology};
pub use hom_complex::{derived_hom, derived_hom_group, hom_complex_differential, DerivedHom};
pub use homotopy::{homotopic, is_nullhomotopic, Homotopy};
pub use resolve::{canonicalize, free_resolution};

use std::fmt;

use crate::error::{Error, Result};
use crate::fpmod::{block_morphism, sum_module, FpModule, FpMorphism};
use crate::matrix::IntMatrix;
use crate::ring::{Elem, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    FreeModules,
    FpModules,
}

/// `… → X^n → X^{n+1} → …`, supported on `[lo, lo + objects.len())`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    ring: RingSpec,
    lo: i64,
    objects: Vec<FpModule>,
    diffs: Vec<FpMorphism>,
}

impl Complex {
    /// `diffs[i]: objects[i] → objects[i + 1]`; checks `d ∘ d = 0`.
    pub fn new(ring: RingSpec, lo: i64, objects: Vec<FpModule>, diffs: Vec<FpMorphism>) -> Result<Complex> {
        if diffs.len() + 1 != objects.len() && !(objects.is_empty() && diffs.is_empty()) {
            return Err(Error::Dimension(format!("{} objects with {} differentials", objects.len(), diffs.len())));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source().presentation() != objects[i].presentation()
                || d.target().presentation() != objects[i + 1].presentation()
            {
                return Err(Error::NotComposable(format!("differential at degree {}", lo + i as i64)));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i].compose(&diffs[i - 1])?.is_zero() {
                return Err(Error::NotAComplex(lo + i as i64 - 1));
            }
        }
        if objects.iter().any(|m| m.ring() != ring) {
            return Err(Error::RingMismatch(ring, objects.iter().find(|m| m.ring() != ring).unwrap().ring()));
        }
        Ok(Complex { ring, lo, objects, diffs })
    }

    pub fn zero(ring: RingSpec) -> Complex {
        Complex { ring, lo: 0, objects: vec![], diffs: vec![] }
    }

    /// `M` placed in degree `n`.
    pub fn stalk(m: &FpModule, n: i64) -> Complex {
        Complex { ring: m.ring(), lo: n, objects: vec![m.clone()], diffs: vec![] }
    }

    /// A complex of free modules `R^{ranks[i]}` in degree `lo + i` with the
    /// given differential matrices.
    pub fn free(ring: RingSpec, lo: i64, ranks: &[usize], maps: &[IntMatrix]) -> Result<Complex> {
        let objects: Vec<FpModule> = ranks.iter().map(|&r| FpModule::free(ring, r)).collect();
        let diffs = maps
            .iter()
            .enumerate()
            .map(|(i, g)| FpMorphism::new(objects[i].clone(), objects[i + 1].clone(), g.clone()))
            .collect::<Result<Vec<_>>>()?;
        Complex::new(ring, lo, objects, diffs)
    }

    /// Two-term complex `R^s --m--> R^b` ending in degree `end`.
    pub fn two_term(m: &IntMatrix, end: i64) -> Complex {
        Complex::free(m.ring(), end - 1, &[m.cols(), m.rows()], std::slice::from_ref(m)).expect("two-term complex")
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Last supported degree; `lo - 1` for the empty complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    fn index(&self, n: i64) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    pub fn object(&self, n: i64) -> FpModule {
        self.index(n).map_or_else(|| FpModule::zero(self.ring), |i| self.objects[i].clone())
    }

    /// `d^n: X^n → X^{n+1}`.
    pub fn diff(&self, n: i64) -> FpMorphism {
        match (self.index(n), self.index(n + 1)) {
            (Some(i), Some(_)) => self.diffs[i].clone(),
            _ => FpMorphism::zero(&self.object(n), &self.object(n + 1)),
        }
    }

    pub fn base(&self) -> Base {
        if self.objects.iter().all(FpModule::is_literally_free) {
            Base::FreeModules
        } else {
            Base::FpModules
        }
    }

    pub fn is_free(&self) -> bool {
        self.base() == Base::FreeModules
    }

    /// `X[k]^n = X^{n+k}` with differentials multiplied by `(−1)^k`.
    pub fn shift(&self, k: i64) -> Complex {
        let diffs =
            if k.rem_euclid(2) == 0 { self.diffs.clone() } else { self.diffs.iter().map(FpMorphism::neg).collect() };
        Complex { ring: self.ring, lo: self.lo - k, objects: self.objects.clone(), diffs }
    }

    /// Drops zero-generator objects at both ends.
    pub fn trim(&self) -> Complex {
        let keep = |m: &FpModule| m.generators() > 0;
        let Some(first) = self.objects.iter().position(keep) else {
            return Complex::zero(self.ring);
        };
        let last = self.objects.iter().rposition(keep).unwrap();
        self.window(self.lo + first as i64, self.lo + last as i64)
    }

    /// Restriction of the data to degrees `[a, b]` (brutal truncation on
    /// both sides).
    pub fn window(&self, a: i64, b: i64) -> Complex {
        if a > b {
            return Complex::zero(self.ring);
        }
        let objects: Vec<FpModule> = (a..=b).map(|n| self.object(n)).collect();
        let diffs: Vec<FpMorphism> = (a..b).map(|n| self.diff(n)).collect();
        Complex { ring: self.ring, lo: a, objects, diffs }
    }

    /// `σ^{≥n}`.
    pub fn brutal_ge(&self, n: i64) -> Complex {
        self.window(n.max(self.lo), self.hi()).trim()
    }

    /// `σ^{≤n}`.
    pub fn brutal_le(&self, n: i64) -> Complex {
        self.window(self.lo, n.min(self.hi())).trim()
    }

    pub fn direct_sum(&self, other: &Complex) -> Complex {
        let (lo, hi) = union_window(self, other);
        let objs: Vec<FpModule> =
            (lo..=hi).map(|n| sum_module(self.ring, &[&self.object(n), &other.object(n)])).collect();
        let diffs = (lo..hi)
            .map(|n| {
                let (s1, s2, t1, t2) = (self.object(n), other.object(n), self.object(n + 1), other.object(n + 1));
                let (d1, d2) = (self.diff(n), other.diff(n));
                let i = (n - lo) as usize;
                block_morphism(
                    (&objs[i], &[&s1, &s2]),
                    (&objs[i + 1], &[&t1, &t2]),
                    &[vec![Some(&d1), None], vec![None, Some(&d2)]],
                )
            })
            .collect();
        Complex { ring: self.ring, lo, objects: objs, diffs }
    }

    /// Every object is zero.
    pub fn is_zero(&self) -> bool {
        self.objects.iter().all(FpModule::is_zero)
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex[{}..={}](", self.lo, self.hi())?;
        for (i, m) in self.objects.iter().enumerate() {
            if i > 0 {
                write!(f, " --{}--> ", self.diffs[i - 1].matrix())?;
            }
            write!(f, "{:?}", m.presentation())?;
        }
        write!(f, ")")
    }
}

/// A morphism of complexes, stored on the union of the supports.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainMap {
    source: Complex,
    target: Complex,
    lo: i64,
    components: Vec<FpMorphism>,
}

fn union_window(a: &Complex, b: &Complex) -> (i64, i64) {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => (0, -1),
        (true, false) => (b.lo, b.hi()),
        (false, true) => (a.lo, a.hi()),
        (false, false) => (a.lo.min(b.lo), a.hi().max(b.hi())),
    }
}

impl ChainMap {
    /// Builds a chain map from its components in every degree of the union
    /// of the supports; checks commutation with the differentials.
    pub fn from_fn(
        source: &Complex,
        target: &Complex,
        mut component: impl FnMut(i64) -> Result<FpMorphism>,
    ) -> Result<ChainMap> {
        let (lo, hi) = union_window(source, target);
        let components = (lo..=hi).map(&mut component).collect::<Result<Vec<_>>>()?;
        ChainMap::new(source.clone(), target.clone(), lo, components)
    }

    pub fn new(source: Complex, target: Complex, lo: i64, components: Vec<FpMorphism>) -> Result<ChainMap> {
        let map = ChainMap { source, target, lo, components };
        let (a, b) = union_window(&map.source, &map.target);
        for n in a.min(lo)..=b.max(map.hi()) {
            let f = map.component(n);
            if f.source().presentation() != map.source.object(n).presentation()
                || f.target().presentation() != map.target.object(n).presentation()
            {
                return Err(Error::NotComposable(format!("chain map component at degree {n}")));
            }
        }
        for n in (a.min(lo) - 1)..=b.max(map.hi()) {
            let lhs = map.target.diff(n).compose(&map.component(n))?;
            let rhs = map.component(n + 1).compose(&map.source.diff(n))?;
            if !lhs.equals(&rhs)? {
                return Err(Error::IllDefined(format!("chain map does not commute at degree {n}")));
            }
        }
        Ok(map)
    }

    fn hi(&self) -> i64 {
        self.lo + self.components.len() as i64 - 1
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn component(&self, n: i64) -> FpMorphism {
        if n >= self.lo && n <= self.hi() {
            self.components[(n - self.lo) as usize].clone()
        } else {
            FpMorphism::zero(&self.source.object(n), &self.target.object(n))
        }
    }

    /// Degrees where either complex is nonzero.
    pub fn window(&self) -> (i64, i64) {
        union_window(&self.source, &self.target)
    }

    pub fn identity(c: &Complex) -> ChainMap {
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            lo: c.lo,
            components: c.objects.iter().map(FpMorphism::identity).collect(),
        }
    }

    pub fn zero(source: &Complex, target: &Complex) -> ChainMap {
        ChainMap { source: source.clone(), target: target.clone(), lo: 0, components: vec![] }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ChainMap) -> Result<ChainMap> {
        if inner.target != self.source {
            return Err(Error::NotComposable("chain maps".into()));
        }
        let (lo, hi) = union_window(&inner.source, &self.target);
        let components =
            (lo..=hi).map(|n| self.component(n).compose(&inner.component(n))).collect::<Result<Vec<_>>>()?;
        Ok(ChainMap { source: inner.source.clone(), target: self.target.clone(), lo, components })
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::NotComposable("chain maps are not parallel".into()));
        }
        let (lo, hi) = self.window();
        let components = (lo..=hi).map(|n| self.component(n).add(&other.component(n))).collect::<Result<Vec<_>>>()?;
        Ok(ChainMap { source: self.source.clone(), target: self.target.clone(), lo, components })
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap { components: self.components.iter().map(FpMorphism::neg).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Elem) -> ChainMap {
        ChainMap { components: self.components.iter().map(|f| f.scale(c)).collect(), ..self.clone() }
    }

    /// `f[k]`, with components unchanged.
    pub fn shift(&self, k: i64) -> ChainMap {
        ChainMap {
            source: self.source.shift(k),
            target: self.target.shift(k),
            lo: self.lo - k,
            components: self.components.clone(),
        }
    }

    /// Degreewise equality of morphisms (not up to homotopy).
    pub fn equals(&self, other: &ChainMap) -> Result<bool> {
        let (lo, hi) = self.window();
        for n in lo..=hi {
            if !self.component(n).equals(&other.component(n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_quasi_iso(&self) -> bool {
        cone(self).is_exact()
    }
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainMap({:?} -> {:?}; ", self.source, self.target)?;
        for (i, c) in self.components.iter().enumerate() {
            write!(f, "[{}] {} ", self.lo + i as i64, c.matrix())?;
        }
        write!(f, ")")
    }
}

/// The mapping cone with the maps `Y → cone(f) → X[1]` of the triangle.
#[derive(Clone, Debug)]
pub struct Cone {
    pub complex: Complex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// `cone(f)^n = Y^n ⊕ X^{n+1}` with `d = [[d_Y, f], [0, −d_X]]`.
pub fn cone(f: &ChainMap) -> Complex {
    cone_triangle(f).complex
}

pub fn cone_triangle(f: &ChainMap) -> Cone {
    let x = &f.source;
    let y = &f.target;
    let ring = x.ring;
    let x1 = x.shift(1);
    let (lo, hi) = union_window(y, &x1);
    let objs: Vec<FpModule> = (lo..=hi).map(|n| sum_module(ring, &[&y.object(n), &x.object(n + 1)])).collect();
    let obj = |n: i64| objs[(n - lo) as usize].clone();
    let diffs: Vec<FpMorphism> = (lo..hi)
        .map(|n| {
            let (yn, xn1, yn1, xn2) = (y.object(n), x.object(n + 1), y.object(n + 1), x.object(n + 2));
            let dy = y.diff(n);
            let fx = f.component(n + 1);
            let dx = x.diff(n + 1).neg();
            block_morphism(
                (&objs[(n - lo) as usize], &[&yn, &xn1]),
                (&objs[(n + 1 - lo) as usize], &[&yn1, &xn2]),
                &[vec![Some(&dy), Some(&fx)], vec![None, Some(&dx)]],
            )
        })
        .collect();
    let complex = Complex { ring, lo, objects: objs.clone(), diffs };
    let (ilo, ihi) = union_window(y, &complex);
    let inclusion = ChainMap {
        source: y.clone(),
        target: complex.clone(),
        lo: ilo,
        components: (ilo..=ihi)
            .map(|n| {
                let (yn, xn1) = (y.object(n), x.object(n + 1));
                let id = FpMorphism::identity(&yn);
                block_morphism(
                    (&yn, &[&yn]),
                    (&obj_or_zero(&obj, lo, hi, n, ring), &[&yn, &xn1]),
                    &[vec![Some(&id)], vec![None]],
                )
            })
            .collect(),
    };
    let (plo, phi) = union_window(&complex, &x1);
    let projection = ChainMap {
        source: complex.clone(),
        target: x1.clone(),
        lo: plo,
        components: (plo..=phi)
            .map(|n| {
                let (yn, xn1) = (y.object(n), x.object(n + 1));
                let id = FpMorphism::identity(&xn1);
                block_morphism(
                    (&obj_or_zero(&obj, lo, hi, n, ring), &[&yn, &xn1]),
                    (&xn1, &[&xn1]),
                    &[vec![None, Some(&id)]],
                )
            })
            .collect(),
    };
    Cone { complex, inclusion, projection }
}

fn obj_or_zero(obj: &impl Fn(i64) -> FpModule, lo: i64, hi: i64, n: i64, ring: RingSpec) -> FpModule {
    if n >= lo && n <= hi {
        obj(n)
    } else {
        sum_module(ring, &[])
    }
}

impl Complex {
    /// All cohomology vanishes.
    pub fn is_exact(&self) -> bool {
        (self.lo..=self.hi()).all(|n| cohomology(self, n).module.is_zero())
    }
}
