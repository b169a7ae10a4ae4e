//! Independent oracles: brute-force enumeration over small finite groups
//! and naive integer arithmetic, sharing nothing with the library beyond
//! the matrix container.
#![allow(dead_code)]

use tiltwork_core::IntMatrix;

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| i64::try_from(m.get(i, j).as_int().unwrap()).unwrap()).collect())
        .collect()
}

/// Elements of `Z/n₁ ⊕ … ⊕ Z/n_k`.
pub fn elements(orders: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &n in orders {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Number of homomorphisms `coker(p) → Z/n₁ ⊕ … ⊕ Z/n_k`, counting all
/// assignments of generator images that kill every relation.
pub fn count_homs(p: &[Vec<i64>], gens: usize, orders: &[i64]) -> usize {
    let elems = elements(orders);
    let mut count = 0;
    let mut idx = vec![0usize; gens];
    loop {
        let ok = (0..p.first().map_or(0, |r| r.len())).all(|j| {
            orders.iter().enumerate().all(|(c, &n)| {
                let s: i64 = (0..gens).map(|i| p[i][j] * elems[idx[i]][c]).sum();
                s.rem_euclid(n) == 0
            })
        });
        if ok {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == gens {
                return count;
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Number of `x ∈ ⊕ Z/nᵢ` with `g·x = 0` in `⊕ Z/mⱼ`.
pub fn count_kernel(g: &[Vec<i64>], src: &[i64], tgt: &[i64]) -> usize {
    elements(src)
        .into_iter()
        .filter(|x| {
            tgt.iter().enumerate().all(|(j, &m)| {
                let s: i64 = x.iter().enumerate().map(|(i, xi)| g[j][i] * xi).sum();
                s.rem_euclid(m) == 0
            })
        })
        .count()
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

/// Order of the finite group `coker(p)` for square nonsingular `p`.
pub fn coker_order(p: &[Vec<i64>]) -> i64 {
    det(p).abs()
}

/// Number of `k × k` minors' gcd: the product of the first `k` invariant
/// factors (determinantal divisors), computed without Smith reduction.
pub fn determinantal_divisor(p: &[Vec<i64>], k: usize) -> i64 {
    let rows = p.len();
    let cols = p.first().map_or(0, |r| r.len());
    if k == 0 {
        return 1;
    }
    let mut g = 0i64;
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let minor: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| p[r][c]).collect()).collect();
            g = gcd(g, det(&minor));
        }
    }
    g
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors (including units) from determinantal divisors.
pub fn invariant_factors(p: &[Vec<i64>]) -> Vec<i64> {
    let rows = p.len();
    let cols = p.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let d = determinantal_divisor(p, k);
        if d == 0 {
            break;
        }
        out.push(d / prev);
        prev = d;
    }
    out
}
