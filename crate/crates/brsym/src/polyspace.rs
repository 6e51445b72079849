//! Brauer symmetry classes of polynomials.
//!
//! A multidegree α is an m-tuple of non-negative integers summing to d,
//! with m the number of points of the chosen action. The symmetrized
//! monomial X^{ασ,*} is the symmetrizer applied to X^{ασ}; its inner
//! products are computed two independent ways (direct sparse expansion and
//! the closed double-sum formula) and the two are cross-checked throughout
//! the test suites. Orbital dimensions come from the constituent formula
//! and are certified against exact Gram ranks.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::characters::{inner_with_trivial, CharRow, CharTable, ClassFunction};
use crate::cyclotomic::CycNum;
use crate::groups::{ElemId, GroupCtx};
use crate::orbital::{self, OrbitVector};
use crate::{guards, Error, Result};

/// α ∈ Γ⁺_{m,d}: entries per point, summing to the degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<u16>);

impl Multidegree {
    pub fn new(ctx: &GroupCtx, entries: Vec<u16>) -> Result<Self> {
        if entries.len() != ctx.points {
            return Err(Error::BadTuple(format!(
                "expected {} entries, got {}",
                ctx.points,
                entries.len()
            )));
        }
        Ok(Multidegree(entries))
    }

    /// (d, 0, …, 0) — the weight-d multidegree concentrated on the first
    /// point.
    pub fn concentrated(ctx: &GroupCtx, d: u16) -> Self {
        let mut v = vec![0u16; ctx.points];
        v[0] = d;
        Multidegree(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }
}

/// A symmetrized monomial with its provenance.
#[derive(Clone, Debug)]
pub struct SymPoly {
    pub alpha: Vec<u16>,
    pub sigma: ElemId,
    pub label: String,
    pub vec: OrbitVector,
}

impl SymPoly {
    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }
}

/// X^{ασ,*} = (φ(1)/|S|) Σ_{μ∈S} φ(μ) X^{(ασ)μ⁻¹} with S the domain of φ
/// (all of G for ordinary rows, the p-regular set for Brauer rows).
pub fn symmetrize_monomial(
    ctx: &GroupCtx,
    row: &CharRow,
    alpha: &Multidegree,
    sigma: ElemId,
) -> Result<SymPoly> {
    let s = row.func.domain();
    let root = ctx.apply_right(&alpha.0, sigma);
    let vec = orbital::symmetrize(ctx, &s, &row.func, &root)?;
    Ok(SymPoly {
        alpha: alpha.0.clone(),
        sigma,
        label: row.label.to_string(),
        vec,
    })
}

/// Symmetrization over an explicit subset (used for subgroup symmetry
/// classes and the subgroup pair formula's direct cross-check).
pub fn symmetrize_over(
    ctx: &GroupCtx,
    s: &[ElemId],
    phi: &ClassFunction,
    root: &[u16],
) -> Result<OrbitVector> {
    orbital::symmetrize(ctx, s, phi, root)
}

pub fn inner_product_direct(q1: &SymPoly, q2: &SymPoly) -> CycNum {
    orbital::inner_direct(&q1.vec, &q2.vec)
}

/// ⟨X^{ασ₁,*}, X^{ασ₂,*}⟩ by the closed double sum
/// (φ(1)²/|S|²) Σ_{μ∈S} Σ_{τ∈G_α, μσ₁⁻¹τσ₂∈S} φ(μ)·conj(φ(μσ₁⁻¹τσ₂)).
pub fn inner_product_closed(
    ctx: &GroupCtx,
    row: &CharRow,
    alpha: &Multidegree,
    sigma1: ElemId,
    sigma2: ElemId,
) -> Result<CycNum> {
    let s = row.func.domain();
    let stab = ctx.stabilizer(&alpha.0);
    let mut acc = CycNum::zero(1);
    let s1_inv = ctx.inv(sigma1);
    for &mu in &s {
        let base = ctx.mul(mu, s1_inv);
        for &tau in &stab {
            let other = ctx.mul(ctx.mul(base, tau), sigma2);
            if !row.func.defined_at(other) {
                continue;
            }
            let term = row.func.eval(mu)? * &row.func.eval(other)?.conjugate();
            acc = &acc + &term;
        }
    }
    let deg = BigInt::from(row.degree);
    let size = BigInt::from(s.len());
    Ok(acc.scale(&BigRational::new(&deg * &deg, &size * &size)))
}

/// Subgroup pair formula: for W ≤ G, φ|_W = η₁ + η₂ with η₁ ≠ η₂ linear
/// on W, γ and σ ∈ W:
/// ⟨X^{γσ,*}, X^{γ,*}⟩ = c·(η₁(σ)(η₁,1)_{W_γ} + η₂(σ)(η₂,1)_{W_γ}),
/// c = φ(1)²·|W_γ|/|W|, everything symmetrized over W.
pub fn subgroup_pair_inner_product(
    ctx: &GroupCtx,
    w: &[ElemId],
    phi: &ClassFunction,
    gamma: &Multidegree,
    sigma: ElemId,
) -> Result<CycNum> {
    if w.binary_search(&sigma).is_err() {
        return Err(Error::BadTuple("σ must lie in W".into()));
    }
    let linear = crate::characters::linear_characters(ctx, w);
    let pos = |g: ElemId| w.binary_search(&g).unwrap();
    let mut split: Option<(usize, usize)> = None;
    'outer: for i in 0..linear.len() {
        for j in i + 1..linear.len() {
            let is_sum = w.iter().enumerate().all(|(k, &g)| {
                let sum = &linear[i][k] + &linear[j][k];
                phi.eval(g).map(|v| crate::cyclotomic::eq_embedded(v, &sum)).unwrap_or(false)
            });
            if is_sum {
                split = Some((i, j));
                break 'outer;
            }
        }
    }
    let (i, j) = split.ok_or(Error::NoLinearSplit)?;

    let w_gamma: Vec<ElemId> = ctx
        .stabilizer(&gamma.0)
        .into_iter()
        .filter(|g| w.binary_search(g).is_ok())
        .collect();
    let avg = |eta: &Vec<CycNum>| -> CycNum {
        let mut acc = CycNum::zero(1);
        for &t in &w_gamma {
            acc = &acc + &eta[pos(t)];
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(w_gamma.len())))
    };
    let deg = phi.eval(ctx.identity())?.as_rational().ok_or_else(|| {
        Error::Inconsistent("character degree is not rational".into())
    })?;
    let c = BigRational::new(
        deg.numer() * deg.numer() * BigInt::from(w_gamma.len()),
        deg.denom() * deg.denom() * BigInt::from(w.len()),
    );
    let total = &(&linear[i][pos(sigma)] * &avg(&linear[i]))
        + &(&linear[j][pos(sigma)] * &avg(&linear[j]));
    Ok(total.scale(&c))
}

/// dim span{X^{ασ,*} : σ ∈ G} by the constituent formula
/// Σ_i χ_i(1)·(χ_i, 1)_{G_α}.
pub fn orbital_dim(
    ctx: &GroupCtx,
    ordinary: &CharTable,
    phi: &ClassFunction,
    alpha: &Multidegree,
) -> Result<u64> {
    let stab = ctx.stabilizer(&alpha.0);
    orbital::dim_from_constituents(ctx, ordinary, phi, &stab)
}

/// dim H_d(G;χ) = χ(1) Σ_{α∈Δ̄} (χ,1)_{G_α} over the orbit representatives
/// within the support bound.
pub fn total_dim(
    ctx: &GroupCtx,
    row: &CharRow,
    d: u16,
    support_bound: usize,
) -> Result<u64> {
    let reps = orbit_reps(ctx, d, support_bound)?;
    let mut acc = BigRational::zero();
    for rep in &reps {
        let stab = ctx.stabilizer(&rep.0);
        let mult = inner_with_trivial(ctx, &row.func, &stab)?
            .as_rational()
            .ok_or_else(|| Error::Inconsistent("non-rational multiplicity".into()))?;
        acc += mult;
    }
    let total = acc * BigRational::from_integer(BigInt::from(row.degree));
    if !total.is_integer() || total.is_negative() {
        return Err(Error::Inconsistent(format!("non-integer total dimension {total}")));
    }
    u64::try_from(total.to_integer()).map_err(|_| Error::Inconsistent("dimension overflow".into()))
}

/// Whether α lies in Δ̄ for φ: Σ_{σ ∈ G_α ∩ S} φ(σ) ≠ 0 (for ordinary φ
/// this is (χ,1)_{G_α} ≠ 0).
pub fn in_dbar(ctx: &GroupCtx, phi: &ClassFunction, alpha: &Multidegree) -> Result<bool> {
    let stab = ctx.stabilizer(&alpha.0);
    let mut acc = CycNum::zero(1);
    for &g in &stab {
        if phi.defined_at(g) {
            acc = &acc + phi.eval(g)?;
        }
    }
    Ok(!acc.is_zero())
}

/// Canonical representatives (lexicographically greatest in orbit) of all
/// multidegree orbits of weight d with at most `support_bound` nonzero
/// entries. Orbits are closed under the support bound since permutations
/// preserve the entry multiset.
pub fn orbit_reps(ctx: &GroupCtx, d: u16, support_bound: usize) -> Result<Vec<Multidegree>> {
    if d as u32 > guards::MAX_DEGREE || support_bound > guards::MAX_DEGREE as usize {
        return Err(Error::GuardRefused(format!(
            "degree {d} / support bound {support_bound} beyond desk scale"
        )));
    }
    let m = ctx.points;
    let mut tuples: Vec<Vec<u16>> = Vec::new();
    let mut positions: Vec<usize> = Vec::new();
    gen_supports(m, support_bound.min(d as usize), 0, &mut positions, &mut |pos| {
        let mut parts: Vec<u16> = Vec::new();
        gen_compositions(d, pos.len(), &mut parts, &mut |comp| {
            let mut t = vec![0u16; m];
            for (i, &p) in pos.iter().enumerate() {
                t[p] = comp[i];
            }
            tuples.push(t);
        });
    });

    let mut reps: Vec<Vec<u16>> = Vec::new();
    let mut seen: std::collections::BTreeSet<Vec<u16>> = std::collections::BTreeSet::new();
    for t in tuples {
        if seen.contains(&t) {
            continue;
        }
        let mut best = t.clone();
        for g in 0..ctx.size() {
            let img = ctx.apply_right(&t, g);
            if img > best {
                best = img.clone();
            }
            seen.insert(img);
        }
        reps.push(best);
    }
    reps.sort_unstable();
    reps.reverse();
    Ok(reps.into_iter().map(Multidegree).collect())
}

fn gen_supports(
    m: usize,
    max_size: usize,
    start: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if !acc.is_empty() {
        f(acc);
    }
    if acc.len() == max_size {
        return;
    }
    for p in start..m {
        acc.push(p);
        gen_supports(m, max_size, p + 1, acc, f);
        acc.pop();
    }
}

fn gen_compositions(d: u16, parts: usize, acc: &mut Vec<u16>, f: &mut impl FnMut(&[u16])) {
    if parts == 0 {
        if d == 0 {
            f(acc);
        }
        return;
    }
    if parts == 1 {
        if d >= 1 {
            acc.push(d);
            f(acc);
            acc.pop();
        }
        return;
    }
    for first in 1..=d.saturating_sub(parts as u16 - 1) {
        acc.push(first);
        gen_compositions(d - first, parts - 1, acc, f);
        acc.pop();
    }
}

/// All generators of the orbital subspace of α: one symmetrized monomial
/// per distinct root ασ, keeping the smallest σ as the representative.
pub fn orbital_generators(
    ctx: &GroupCtx,
    row: &CharRow,
    alpha: &Multidegree,
) -> Result<Vec<SymPoly>> {
    let mut seen: std::collections::BTreeSet<Vec<u16>> = std::collections::BTreeSet::new();
    let mut gens = Vec::new();
    for sigma in 0..ctx.size() {
        let root = ctx.apply_right(&alpha.0, sigma);
        if seen.insert(root) {
            gens.push(symmetrize_monomial(ctx, row, alpha, sigma)?);
        }
    }
    Ok(gens)
}

/// σ·q for a symmetrized polynomial (permutes the support tuples).
pub fn apply_group_elem(ctx: &GroupCtx, g: ElemId, q: &SymPoly) -> SymPoly {
    SymPoly {
        alpha: q.alpha.clone(),
        sigma: q.sigma,
        label: q.label.clone(),
        vec: orbital::apply_elem(ctx, g, &q.vec),
    }
}
