use crate::complex::{
    boundary_generators, cohomology, cone_triangle, cycle_generators, is_nullhomotopic, ChainMap, Complex, Homotopy,
};
use crate::error::{Error, Result};
use crate::exact::ExactStructure;
use crate::fpmod::{block_morphism, cokernel, extend_along, factor_through, subquotient, FpModule, FpMorphism};
use crate::matrix::IntMatrix;

use super::TStructureSpec;

/// `(…, X^{n−1}, K)` with `K` in degree `n` mapping to `X^n` by `incl`.
fn lower_part(x: &Complex, n: i64, k: FpModule, incl: &FpMorphism) -> Result<(Complex, ChainMap)> {
    let lo = x.lo().min(n);
    let mut objects: Vec<FpModule> = (lo..n).map(|i| x.object(i)).collect();
    objects.push(k);
    let mut diffs: Vec<FpMorphism> = (lo..n - 1).map(|i| x.diff(i)).collect();
    if n > lo {
        let d = factor_through(incl, &x.diff(n - 1))?
            .ok_or_else(|| Error::IllDefined(format!("image of d^{} escapes the truncation", n - 1)))?;
        diffs.push(d);
    }
    let t = Complex::new(x.ring(), lo, objects, diffs)?;
    let counit = ChainMap::from_fn(&t, x, |i| {
        Ok(match i.cmp(&n) {
            std::cmp::Ordering::Less => FpMorphism::identity(&x.object(i)),
            std::cmp::Ordering::Equal => incl.clone(),
            std::cmp::Ordering::Greater => FpMorphism::zero(&t.object(i), &x.object(i)),
        })
    })?;
    Ok((t, counit))
}

/// `(Q, X^{n+1}, …)` with `Q` in degree `n` receiving `X^n` by `proj`.
fn upper_part(x: &Complex, n: i64, q: FpModule, proj: &FpMorphism) -> Result<(Complex, ChainMap)> {
    let hi = x.hi().max(n);
    let mut objects = vec![q];
    objects.extend((n + 1..=hi).map(|i| x.object(i)));
    let mut diffs = Vec::new();
    if hi > n {
        let d = extend_along(proj, &x.diff(n))?
            .ok_or_else(|| Error::IllDefined(format!("d^{n} does not vanish on the truncation kernel")))?;
        diffs.push(d);
        diffs.extend((n + 1..hi).map(|i| x.diff(i)));
    }
    let t = Complex::new(x.ring(), n, objects, diffs)?;
    let unit = ChainMap::from_fn(x, &t, |i| {
        Ok(match i.cmp(&n) {
            std::cmp::Ordering::Less => FpMorphism::zero(&x.object(i), &t.object(i)),
            std::cmp::Ordering::Equal => proj.clone(),
            std::cmp::Ordering::Greater => FpMorphism::identity(&x.object(i)),
        })
    })?;
    Ok((t, unit))
}

/// Splits `X` at the submodule of `X^n` generated by the columns of `s`,
/// which must lie between the boundaries and the cycles.
fn split_at(x: &Complex, n: i64, s: &IntMatrix, upper: bool) -> Result<(Complex, ChainMap)> {
    let xn = x.object(n);
    let (k, ambient) = subquotient(x.ring(), s, xn.presentation());
    let incl = FpMorphism::new(k.clone(), xn, ambient)?;
    if upper {
        let (q, proj) = cokernel(&incl);
        upper_part(x, n, q, &proj)
    } else {
        lower_part(x, n, k, &incl)
    }
}

/// Cycles, or cycles of the torsion classes only when `torsion` is set.
fn natural_cut(x: &Complex, n: i64, torsion: bool) -> IntMatrix {
    if !torsion {
        return cycle_generators(x, n);
    }
    let h = cohomology(x, n);
    let t = h.module.invariants().torsion.len();
    let reps = h.representatives.select_cols(&(0..t).collect::<Vec<_>>());
    let b = boundary_generators(x, n);
    IntMatrix::hstack(x.ring(), b.rows(), &[&reps, &b])
}

fn left_le(ex: &ExactStructure, x: &Complex, n: i64) -> Result<(Complex, ChainMap)> {
    let (k, incl) = ex.e_kernel(&x.diff(n))?;
    lower_part(x, n, k, &incl)
}

/// `(Ker_E d^{n−1}, X^{n−1}, X^n, …)` starting in degree `n − 2`.
fn left_ge(ex: &ExactStructure, x: &Complex, n: i64) -> Result<(Complex, ChainMap)> {
    let (k, incl) = ex.e_kernel(&x.diff(n - 1))?;
    let lo = n - 2;
    let hi = x.hi().max(n - 1);
    let mut objects = vec![k];
    objects.extend((n - 1..=hi).map(|i| x.object(i)));
    let mut diffs = vec![incl.clone()];
    diffs.extend((n - 1..hi).map(|i| x.diff(i)));
    let t = Complex::new(x.ring(), lo, objects, diffs)?;
    let unit = ChainMap::from_fn(x, &t, |i| {
        if i < lo {
            Ok(FpMorphism::zero(&x.object(i), &t.object(i)))
        } else if i == lo {
            factor_through(&incl, &x.diff(lo))?.ok_or_else(|| Error::IllDefined("kernel factorization".into()))
        } else {
            Ok(FpMorphism::identity(&x.object(i)))
        }
    })?;
    Ok((t, unit))
}

fn right_ge(ex: &ExactStructure, x: &Complex, n: i64) -> Result<(Complex, ChainMap)> {
    let (q, proj) = ex.e_cokernel(&x.diff(n - 1))?;
    upper_part(x, n, q, &proj)
}

/// `(…, X^n, X^{n+1}, Coker_E d^n)` ending in degree `n + 2`.
fn right_le(ex: &ExactStructure, x: &Complex, n: i64) -> Result<(Complex, ChainMap)> {
    let (c, proj) = ex.e_cokernel(&x.diff(n))?;
    let top = n + 2;
    let lo = x.lo().min(top);
    let mut objects: Vec<FpModule> = (lo..top).map(|i| x.object(i)).collect();
    objects.push(c);
    let mut diffs: Vec<FpMorphism> = (lo..top - 1).map(|i| x.diff(i)).collect();
    if lo < top {
        diffs.push(proj.clone());
    }
    let t = Complex::new(x.ring(), lo, objects, diffs)?;
    let counit = ChainMap::from_fn(&t, x, |i| {
        if i < top {
            Ok(FpMorphism::identity(&x.object(i)))
        } else if i == top {
            extend_along(&proj, &x.diff(n + 1))?.ok_or_else(|| Error::IllDefined("cokernel extension".into()))
        } else {
            Ok(FpMorphism::zero(&t.object(i), &x.object(i)))
        }
    })?;
    Ok((t, counit))
}

/// `τ^{≤n} X` with its counit `τ^{≤n} X → X`.
pub fn truncate_le(spec: &TStructureSpec, n: i64, x: &Complex) -> Result<(Complex, ChainMap)> {
    spec.check(x)?;
    match spec.resolve()? {
        TStructureSpec::Natural => split_at(x, n, &natural_cut(x, n, false), false),
        TStructureSpec::Corrupted => split_at(x, n + 1, &natural_cut(x, n + 1, false), false),
        TStructureSpec::HRSTilt(_) => split_at(x, n, &natural_cut(x, n, true), false),
        TStructureSpec::Left(ex) => left_le(&ex, x, n),
        TStructureSpec::Right(ex) => right_le(&ex, x, n),
        TStructureSpec::StarAisle { .. } => unreachable!("resolved"),
    }
}

/// `τ^{≥n} X` with its unit `X → τ^{≥n} X`.
pub fn truncate_ge(spec: &TStructureSpec, n: i64, x: &Complex) -> Result<(Complex, ChainMap)> {
    spec.check(x)?;
    match spec.resolve()? {
        TStructureSpec::Natural | TStructureSpec::Corrupted => split_at(x, n - 1, &natural_cut(x, n - 1, false), true),
        TStructureSpec::HRSTilt(_) => split_at(x, n - 1, &natural_cut(x, n - 1, true), true),
        TStructureSpec::Left(ex) => left_ge(&ex, x, n),
        TStructureSpec::Right(ex) => right_ge(&ex, x, n),
        TStructureSpec::StarAisle { .. } => unreachable!("resolved"),
    }
}

/// `A → X → B → A[1]` with `A = τ^{≤0} X`, `B = τ^{≥1} X`. The triangle is
/// the cone triangle of the counit transported along `comparison`.
#[derive(Clone, Debug)]
pub struct ApproximatingTriangle {
    pub a: Complex,
    pub counit: ChainMap,
    pub b: Complex,
    pub unit: ChainMap,
    /// Null-homotopy of `unit ∘ counit`.
    pub homotopy: Homotopy,
    /// `cone(counit) → B`, an isomorphism in the ambient category.
    pub comparison: ChainMap,
}

pub fn approximating_triangle(spec: &TStructureSpec, x: &Complex) -> Result<ApproximatingTriangle> {
    let (a, counit) = truncate_le(spec, 0, x)?;
    let (b, unit) = truncate_ge(spec, 1, x)?;
    let vu = unit.compose(&counit)?;
    let homotopy =
        is_nullhomotopic(&vu).ok_or_else(|| Error::IllDefined("truncation maps do not compose to zero".into()))?;
    let c = cone_triangle(&counit).complex;
    let comparison = ChainMap::from_fn(&c, &b, |n| {
        let (xn, an1, bn) = (x.object(n), a.object(n + 1), b.object(n));
        let v = unit.component(n);
        let h = homotopy.component(n + 1).cloned();
        Ok(block_morphism((&c.object(n), &[&xn, &an1]), (&bn, &[&bn]), &[vec![Some(&v), h.as_ref()]]))
    })?;
    Ok(ApproximatingTriangle { a, counit, b, unit, homotopy, comparison })
}

/// `H^n_t(X) = τ^{≥0} τ^{≤0} (X[n])`.
pub fn t_cohomology(spec: &TStructureSpec, x: &Complex, n: i64) -> Result<Complex> {
    let (le, _) = truncate_le(spec, 0, &x.shift(n))?;
    Ok(truncate_ge(spec, 0, &le)?.0)
}
