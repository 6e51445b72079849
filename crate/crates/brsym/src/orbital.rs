//! Shared engine for symmetrized orbit vectors.
//!
//! Polynomial multidegrees and tensor index sequences transform the same
//! way under the position action, and the symmetrizer applied to a basis
//! monomial/tensor produces in both cases the sparse vector
//! `Σ_{μ∈S} (φ(1)/|S|)·φ(μ)·[root·μ⁻¹]`. This module owns that expansion
//! together with the exact linear algebra on the resulting vectors: inner
//! products, Gram matrices, rank by fraction-free elimination, exact
//! proportionality tests and the pairwise-orthogonal subset search.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::characters::{CharTable, ClassFunction};
use crate::cyclotomic::CycNum;
use crate::groups::{ElemId, GroupCtx};
use crate::{Error, Result};

/// Sparse vector supported on one orbit of index tuples.
#[derive(Clone, Debug)]
pub struct OrbitVector {
    pub root: Vec<u16>,
    pub terms: BTreeMap<Vec<u16>, CycNum>,
}

impl OrbitVector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[u16]) -> Option<&CycNum> {
        self.terms.get(key)
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }
}

/// `(φ(1)/|S|) Σ_{μ∈S} φ(μ) · [root·μ⁻¹]`, the symmetrizer applied to the
/// basis element indexed by `root`, with an explicit averaging set `s`.
pub fn symmetrize(
    ctx: &GroupCtx,
    s: &[ElemId],
    phi: &ClassFunction,
    root: &[u16],
) -> Result<OrbitVector> {
    let degree = phi.eval(ctx.identity())?.clone();
    let scale = BigRational::new(BigInt::one(), BigInt::from(s.len()));
    let mut terms: BTreeMap<Vec<u16>, CycNum> = BTreeMap::new();
    for &mu in s {
        let key = ctx.apply_right(root, ctx.inv(mu));
        let contrib = (&degree * phi.eval(mu)?).scale(&scale);
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(contrib);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &contrib;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(OrbitVector {
        root: root.to_vec(),
        terms,
    })
}

/// ⟨v, w⟩ = Σ v_k · conj(w_k), exact.
pub fn inner_direct(v: &OrbitVector, w: &OrbitVector) -> CycNum {
    let mut acc = CycNum::zero(1);
    for (k, c) in &v.terms {
        if let Some(d) = w.terms.get(k) {
            acc = &acc + &(c * &d.conjugate());
        }
    }
    acc
}

/// The group action on symmetrized vectors: σ·v has coefficient of
/// `k·σ⁻¹` equal to the coefficient of `k` in v.
pub fn apply_elem(ctx: &GroupCtx, g: ElemId, v: &OrbitVector) -> OrbitVector {
    let gi = ctx.inv(g);
    OrbitVector {
        root: ctx.apply_right(&v.root, gi),
        terms: v
            .terms
            .iter()
            .map(|(k, c)| (ctx.apply_right(k, gi), c.clone()))
            .collect(),
    }
}

/// Exact scalar proportionality of two sparse vectors.
pub fn proportional(v: &OrbitVector, w: &OrbitVector) -> bool {
    if v.is_zero() || w.is_zero() {
        return v.is_zero() && w.is_zero();
    }
    if v.terms.len() != w.terms.len() {
        return false;
    }
    let (k0, c0) = v.terms.iter().next().unwrap();
    let d0 = match w.terms.get(k0) {
        Some(d) => d,
        None => return false,
    };
    // v_{k0}·w_k == w_{k0}·v_k for every k
    v.terms.iter().all(|(k, c)| match w.terms.get(k) {
        Some(d) => (c0 * d) == (d0 * c),
        None => false,
    })
}

pub fn gram(vectors: &[OrbitVector]) -> Vec<Vec<CycNum>> {
    let n = vectors.len();
    let mut m = vec![vec![CycNum::zero(1); n]; n];
    for i in 0..n {
        for j in 0..n {
            if j < i {
                m[i][j] = m[j][i].conjugate();
            } else {
                m[i][j] = inner_direct(&vectors[i], &vectors[j]);
            }
        }
    }
    m
}

/// Rank over Q(ζ) by fraction-free Gaussian elimination; rows are rescaled
/// by their rational content to keep coefficients small.
pub fn rank(matrix: &[Vec<CycNum>]) -> usize {
    let mut m: Vec<Vec<CycNum>> = matrix.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        let pval = prow[col].clone();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in 0..cols {
                row[j] = &(&row[j] * &pval) - &(&prow[j] * &f);
            }
            normalize_row(row);
        }
        r += 1;
    }
    r
}

fn normalize_row(row: &mut [CycNum]) {
    let mut content = BigRational::zero();
    for v in row.iter() {
        let c = v.rational_content();
        if !c.is_zero() {
            content = if content.is_zero() {
                c
            } else {
                BigRational::new(
                    num::integer::gcd(content.numer().clone(), c.numer().clone()),
                    num::integer::lcm(content.denom().clone(), c.denom().clone()),
                )
            };
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    let inv = content.recip();
    for v in row.iter_mut() {
        *v = v.scale(&inv);
    }
}

/// Searches for `k` pairwise-adjacent vertices (a clique) in the
/// orthogonality graph; returns the vertex set if one exists. Exhaustive,
/// with the usual candidate-count cutoff.
pub fn find_clique(adj: &[Vec<bool>], k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let n = adj.len();
    let mut chosen = Vec::with_capacity(k);
    let candidates: Vec<usize> = (0..n).collect();
    extend_clique(adj, k, &mut chosen, &candidates)
}

fn extend_clique(
    adj: &[Vec<bool>],
    k: usize,
    chosen: &mut Vec<usize>,
    candidates: &[usize],
) -> Option<Vec<usize>> {
    if chosen.len() == k {
        return Some(chosen.clone());
    }
    if chosen.len() + candidates.len() < k {
        return None;
    }
    for (idx, &v) in candidates.iter().enumerate() {
        if chosen.len() + (candidates.len() - idx) < k {
            return None;
        }
        chosen.push(v);
        let next: Vec<usize> = candidates[idx + 1..]
            .iter()
            .copied()
            .filter(|&u| adj[v][u])
            .collect();
        if let Some(sol) = extend_clique(adj, k, chosen, &next) {
            return Some(sol);
        }
        chosen.pop();
    }
    None
}

/// Orbital dimension from the ordinary constituents of φ extended by zero
/// off its domain: Σ χ(1)·(χ,1)_{stab} over the χ ∈ Irr(G) with
/// (φ̃, χ)_G ≠ 0. For an ordinary character φ these are exactly its
/// irreducible constituents.
pub fn dim_from_constituents(
    ctx: &GroupCtx,
    ordinary: &CharTable,
    phi: &ClassFunction,
    stab: &[ElemId],
) -> Result<u64> {
    let domain = phi.domain();
    let mut dim: u64 = 0;
    for row in &ordinary.rows {
        // (φ̃, χ)_G over the zero-extension of φ
        let mut c = CycNum::zero(1);
        for &g in &domain {
            c = &c + &(phi.eval(g)? * row.func.eval(ctx.inv(g))?);
        }
        if c.is_zero() {
            continue;
        }
        let mult = crate::characters::inner_with_trivial(ctx, &row.func, stab)?;
        let contribution = mult.scale(&BigRational::from_integer(BigInt::from(row.degree)));
        let as_rat = contribution
            .as_rational()
            .filter(|r| r.is_integer() && !r.is_negative())
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "non-integer orbital dimension contribution {contribution} from {}",
                    row.label
                ))
            })?;
        dim += u64::try_from(as_rat.to_integer())
            .map_err(|_| Error::Inconsistent("orbital dimension out of range".into()))?;
    }
    Ok(dim)
}
