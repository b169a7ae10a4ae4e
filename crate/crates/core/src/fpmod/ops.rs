//! Kernels, cokernels, images, (co)limits of finitely presented modules.

use crate::linalg::kernel_matrix;
use crate::matrix::IntMatrix;
use crate::ring::RingSpec;

use super::module::canonical_data;
use super::{extend_along, factor_through, FpModule, FpMorphism};

/// `(im gens + im rels) / im rels` inside `R^n`, in canonical form.
///
/// Returns the module and the ambient coordinates (`n × b'`) of its
/// canonical generators.
pub fn subquotient(ring: RingSpec, gens: &IntMatrix, rels: &IntMatrix) -> (FpModule, IntMatrix) {
    let n = gens.rows();
    let k = gens.cols();
    let stacked = IntMatrix::hstack(ring, n, &[gens, &-rels]);
    let ker = kernel_matrix(&stacked);
    let relation_matrix = ker.block(0..k, 0..ker.cols());
    let data = canonical_data(&relation_matrix);
    let ambient = gens * &data.from;
    (data.module, ambient)
}

pub fn kernel(f: &FpMorphism) -> (FpModule, FpMorphism) {
    let ring = f.matrix().ring();
    let src = f.source();
    let tgt = f.target();
    let stacked = IntMatrix::hstack(ring, tgt.generators(), &[f.matrix(), &-tgt.presentation()]);
    let ker = kernel_matrix(&stacked);
    let gens = ker.block(0..src.generators(), 0..ker.cols());
    let (k, ambient) = subquotient(ring, &gens, src.presentation());
    let incl = FpMorphism::new(k.clone(), src.clone(), ambient).expect("kernel inclusion is well defined");
    (k, incl)
}

/// Cokernel presented by `[P_tgt | G_f]`; the projection is the identity on
/// generators.
pub fn cokernel(f: &FpMorphism) -> (FpModule, FpMorphism) {
    let ring = f.matrix().ring();
    let tgt = f.target();
    let pres = IntMatrix::hstack(ring, tgt.generators(), &[tgt.presentation(), f.matrix()]);
    let c = FpModule::new(pres);
    let witness = IntMatrix::vstack(
        ring,
        tgt.relations(),
        &[
            &IntMatrix::identity(ring, tgt.relations()),
            &IntMatrix::zeros(ring, f.source().generators(), tgt.relations()),
        ],
    );
    let proj = FpMorphism::with_witness(tgt.clone(), c.clone(), IntMatrix::identity(ring, tgt.generators()), witness)
        .expect("cokernel projection is well defined");
    (c, proj)
}

/// Image factorisation `f = incl ∘ coimage`.
pub fn image(f: &FpMorphism) -> (FpModule, FpMorphism, FpMorphism) {
    let ring = f.matrix().ring();
    let (i, ambient) = subquotient(ring, f.matrix(), f.target().presentation());
    let incl = FpMorphism::new(i.clone(), f.target().clone(), ambient).expect("image inclusion is well defined");
    let coimage = factor_through(&incl, f).expect("same target").expect("a map factors through its image");
    (i, incl, coimage)
}

pub fn is_mono(f: &FpMorphism) -> bool {
    kernel(f).0.is_zero()
}

pub fn is_epi(f: &FpMorphism) -> bool {
    cokernel(f).0.is_zero()
}

pub fn is_iso(f: &FpMorphism) -> bool {
    is_mono(f) && is_epi(f)
}

/// Factorisation of `g` (with `f ∘ g = 0`) through the kernel inclusion.
pub fn kernel_factor(incl: &FpMorphism, g: &FpMorphism) -> Option<FpMorphism> {
    factor_through(incl, g).ok().flatten()
}

/// Factorisation of `g` (with `g ∘ f = 0`) through the cokernel projection.
pub fn cokernel_factor(proj: &FpMorphism, g: &FpMorphism) -> Option<FpMorphism> {
    extend_along(proj, g).ok().flatten()
}

/// Biproduct with injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: FpModule,
    pub injections: Vec<FpMorphism>,
    pub projections: Vec<FpMorphism>,
}

pub fn direct_sum(ring: RingSpec, parts: &[&FpModule]) -> DirectSum {
    let blocks: Vec<&IntMatrix> = parts.iter().map(|m| m.presentation()).collect();
    let module = FpModule::new(IntMatrix::block_diag(ring, &blocks));
    let total_g = module.generators();
    let total_r = module.relations();
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let (mut go, mut ro) = (0, 0);
    for m in parts {
        let (g, r) = (m.generators(), m.relations());
        let mut inj = IntMatrix::zeros(ring, total_g, g);
        inj.paste(go, 0, &IntMatrix::identity(ring, g));
        let mut inj_w = IntMatrix::zeros(ring, total_r, r);
        inj_w.paste(ro, 0, &IntMatrix::identity(ring, r));
        injections.push(
            FpMorphism::with_witness((*m).clone(), module.clone(), inj.clone(), inj_w.clone())
                .expect("injection is well defined"),
        );
        projections.push(
            FpMorphism::with_witness(module.clone(), (*m).clone(), inj.transpose(), inj_w.transpose())
                .expect("projection is well defined"),
        );
        go += g;
        ro += r;
    }
    DirectSum { module, injections, projections }
}

/// `[f₁ f₂ …]: ⊕ Xᵢ → Y`.
pub fn copair(sum: &DirectSum, maps: &[&FpMorphism]) -> FpMorphism {
    let ring = sum.module.ring();
    let target = maps[0].target();
    let m = IntMatrix::hstack(ring, target.generators(), &maps.iter().map(|f| f.matrix()).collect::<Vec<_>>());
    FpMorphism::new(sum.module.clone(), target.clone(), m).expect("copairing is well defined")
}

/// `(f₁, f₂, …)ᵗ: X → ⊕ Yᵢ`.
pub fn pair(sum: &DirectSum, maps: &[&FpMorphism]) -> FpMorphism {
    let ring = sum.module.ring();
    let source = maps[0].source();
    let m = IntMatrix::vstack(ring, source.generators(), &maps.iter().map(|f| f.matrix()).collect::<Vec<_>>());
    FpMorphism::new(source.clone(), sum.module.clone(), m).expect("pairing is well defined")
}

/// Pull-back of `f: X → Z` and `g: Y → Z`, with projections to `X` and `Y`.
pub fn pullback(f: &FpMorphism, g: &FpMorphism) -> (FpModule, FpMorphism, FpMorphism) {
    let ring = f.matrix().ring();
    let sum = direct_sum(ring, &[f.source(), g.source()]);
    let neg_g = g.neg();
    let diff = copair(&sum, &[f, &neg_g]);
    let (p, incl) = kernel(&diff);
    let p1 = sum.projections[0].compose(&incl).expect("composable");
    let p2 = sum.projections[1].compose(&incl).expect("composable");
    (p, p1, p2)
}

/// Push-out of `f: X → Y` and `g: X → Z`, with the maps out of `Y` and `Z`.
pub fn pushout(f: &FpMorphism, g: &FpMorphism) -> (FpModule, FpMorphism, FpMorphism) {
    let ring = f.matrix().ring();
    let sum = direct_sum(ring, &[f.target(), g.target()]);
    let neg_g = g.neg();
    let diff = pair(&sum, &[f, &neg_g]);
    let (q, proj) = cokernel(&diff);
    let q1 = proj.compose(&sum.injections[0]).expect("composable");
    let q2 = proj.compose(&sum.injections[1]).expect("composable");
    (q, q1, q2)
}

/// A free module mapping onto `m`: the identity on generators.
pub fn free_cover(m: &FpModule) -> FpMorphism {
    let ring = m.ring();
    let f = FpModule::free(ring, m.generators());
    FpMorphism::new(f, m.clone(), IntMatrix::identity(ring, m.generators())).expect("free cover is well defined")
}

/// `⊕ parts` presented block-diagonally, so coordinates concatenate.
pub fn sum_module(ring: RingSpec, parts: &[&FpModule]) -> FpModule {
    let blocks: Vec<&IntMatrix> = parts.iter().map(|m| m.presentation()).collect();
    FpModule::new(IntMatrix::block_diag(ring, &blocks))
}

/// Assembles a morphism between block-diagonal sums from its blocks,
/// indexed `[target part][source part]`; `None` is the zero block.
pub fn block_morphism(
    source: (&FpModule, &[&FpModule]),
    target: (&FpModule, &[&FpModule]),
    blocks: &[Vec<Option<&FpMorphism>>],
) -> FpMorphism {
    let ring = source.0.ring();
    let mut g = IntMatrix::zeros(ring, target.0.generators(), source.0.generators());
    let mut w = IntMatrix::zeros(ring, target.0.relations(), source.0.relations());
    let (mut tg, mut tr) = (0, 0);
    for (i, t) in target.1.iter().enumerate() {
        let (mut sg, mut sr) = (0, 0);
        for (j, s) in source.1.iter().enumerate() {
            if let Some(f) = blocks[i][j] {
                g.paste(tg, sg, f.matrix());
                w.paste(tr, sr, f.witness());
            }
            sg += s.generators();
            sr += s.relations();
        }
        tg += t.generators();
        tr += t.relations();
    }
    FpMorphism::with_witness(source.0.clone(), target.0.clone(), g, w).expect("block morphism is well defined")
}
