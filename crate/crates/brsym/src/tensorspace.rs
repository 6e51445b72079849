//! Brauer symmetry classes of tensors.
//!
//! V is an abstract inner product space with orthonormal basis e_1..e_n;
//! only index sequences α ∈ Γ^m_n are stored. The decomposable symmetrized
//! tensor e*_α expands through the same engine as the polynomial side
//! (σ.α = α·σ⁻¹ position-wise). The closed inner-product form for ordinary
//! irreducible rows is the single sum (χ(1)/|G|) Σ_{x ∈ σ₂G_γσ₁⁻¹} χ(x);
//! for Brauer rows that sum collapses incorrectly (the convolution
//! identity behind it needs the full group), so the closed route is the
//! same double sum as the polynomial side, which matches direct expansion
//! for every averaging set.

use num::rational::BigRational;
use num::{BigInt, Signed};

use crate::characters::{CharRow, CharTable, TableKind};
use crate::cyclotomic::CycNum;
use crate::groups::{ElemId, GroupCtx};
use crate::orbital::{self, OrbitVector};
use crate::{guards, Error, Result};

/// α ∈ Γ^m_n with 0-based entries in [0, n).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorIndex(pub Vec<u16>);

impl TensorIndex {
    pub fn new(ctx: &GroupCtx, dimv: u16, entries: Vec<u16>) -> Result<Self> {
        if entries.len() != ctx.points {
            return Err(Error::BadTuple(format!(
                "expected {} entries, got {}",
                ctx.points,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&x| x >= dimv) {
            return Err(Error::BadTuple(format!(
                "entry {bad} out of range for dim V = {dimv}"
            )));
        }
        Ok(TensorIndex(entries))
    }
}

/// A decomposable symmetrized tensor e*_α with provenance.
#[derive(Clone, Debug)]
pub struct SymTensor {
    pub alpha: Vec<u16>,
    pub label: String,
    pub vec: OrbitVector,
}

impl SymTensor {
    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }
}

/// e*_α = (φ(1)/|S|) Σ_{σ∈S} φ(σ) e_{σ.α}.
pub fn tensor_symmetrize(ctx: &GroupCtx, row: &CharRow, alpha: &TensorIndex) -> Result<SymTensor> {
    let s = row.func.domain();
    let vec = orbital::symmetrize(ctx, &s, &row.func, &alpha.0)?;
    Ok(SymTensor {
        alpha: alpha.0.clone(),
        label: row.label.to_string(),
        vec,
    })
}

pub fn inner_product_direct(t1: &SymTensor, t2: &SymTensor) -> CycNum {
    orbital::inner_direct(&t1.vec, &t2.vec)
}

/// ⟨e*_{σ₁.γ}, e*_{σ₂.γ}⟩ in closed form. Ordinary rows use the single
/// sum (χ(1)/|G|) Σ_{τ∈G_γ} χ(σ₂τσ₁⁻¹); Brauer rows use the double sum
/// (φ(1)²/|S|²) Σ_{ρ∈S} Σ_{τ∈G_γ, ρσ₂τσ₁⁻¹∈S} φ(ρσ₂τσ₁⁻¹)·conj(φ(ρ)).
pub fn estar_inner_closed(
    ctx: &GroupCtx,
    kind: TableKind,
    row: &CharRow,
    gamma: &TensorIndex,
    sigma1: ElemId,
    sigma2: ElemId,
) -> Result<CycNum> {
    let stab = ctx.stabilizer(&gamma.0);
    let s1_inv = ctx.inv(sigma1);
    match kind {
        TableKind::Ordinary => {
            let mut acc = CycNum::zero(1);
            for &tau in &stab {
                let x = ctx.mul(ctx.mul(sigma2, tau), s1_inv);
                acc = &acc + row.func.eval(x)?;
            }
            Ok(acc.scale(&BigRational::new(
                BigInt::from(row.degree),
                BigInt::from(ctx.size()),
            )))
        }
        TableKind::Brauer { .. } => {
            let s = row.func.domain();
            let mut acc = CycNum::zero(1);
            for &rho in &s {
                let base = ctx.mul(rho, sigma2);
                for &tau in &stab {
                    let mu = ctx.mul(ctx.mul(base, tau), s1_inv);
                    if !row.func.defined_at(mu) {
                        continue;
                    }
                    acc = &acc + &(row.func.eval(mu)? * &row.func.eval(rho)?.conjugate());
                }
            }
            let deg = BigInt::from(row.degree);
            let size = BigInt::from(s.len());
            Ok(acc.scale(&BigRational::new(&deg * &deg, &size * &size)))
        }
    }
}

/// The induced inner product specialized to basis tensors:
/// ⟨e*_α, e*_β⟩ = (χ(1)/|G|) Σ_{σ: σ.α = β} χ(σ) for ordinary irreducible
/// rows; zero when the indices lie in different orbits.
pub fn induced_inner_basis(
    ctx: &GroupCtx,
    row: &CharRow,
    alpha: &TensorIndex,
    beta: &TensorIndex,
) -> Result<CycNum> {
    let mut acc = CycNum::zero(1);
    for sigma in 0..ctx.size() {
        if ctx.apply_left(&alpha.0, sigma) == beta.0 {
            acc = &acc + row.func.eval(sigma)?;
        }
    }
    Ok(acc.scale(&BigRational::new(
        BigInt::from(row.degree),
        BigInt::from(ctx.size()),
    )))
}

/// Ω membership: Σ_{σ ∈ G_α ∩ S} φ(σ) ≠ 0.
pub fn in_omega(ctx: &GroupCtx, row: &CharRow, alpha: &TensorIndex) -> Result<bool> {
    let stab = ctx.stabilizer(&alpha.0);
    let mut acc = CycNum::zero(1);
    for &g in &stab {
        if row.func.defined_at(g) {
            acc = &acc + row.func.eval(g)?;
        }
    }
    Ok(!acc.is_zero())
}

/// dim V*_α. Ordinary rows use (χ(1)/|G_α|) Σ_{σ∈G_α} χ(σ), which must be
/// a non-negative integer (reported otherwise, never rounded); Brauer rows
/// use the constituent formula shared with the polynomial side.
pub fn tensor_orbital_dim(
    ctx: &GroupCtx,
    ordinary: &CharTable,
    kind: TableKind,
    row: &CharRow,
    alpha: &TensorIndex,
) -> Result<u64> {
    let stab = ctx.stabilizer(&alpha.0);
    match kind {
        TableKind::Ordinary => {
            let mut acc = CycNum::zero(1);
            for &g in &stab {
                acc = &acc + row.func.eval(g)?;
            }
            let v = acc.scale(&BigRational::new(
                BigInt::from(row.degree),
                BigInt::from(stab.len()),
            ));
            let r = v
                .as_rational()
                .filter(|r| r.is_integer() && !r.is_negative())
                .ok_or_else(|| {
                    Error::Inconsistent(format!("dim V*_α = {v} is not a non-negative integer"))
                })?;
            u64::try_from(r.to_integer())
                .map_err(|_| Error::Inconsistent("dimension overflow".into()))
        }
        TableKind::Brauer { .. } => orbital::dim_from_constituents(ctx, ordinary, &row.func, &stab),
    }
}

/// All generators of the orbital subspace of α: one symmetrized tensor per
/// distinct index σ.α, keeping the smallest σ as representative.
pub fn orbital_generators(
    ctx: &GroupCtx,
    row: &CharRow,
    alpha: &TensorIndex,
) -> Result<Vec<(ElemId, SymTensor)>> {
    let mut seen: std::collections::BTreeSet<Vec<u16>> = std::collections::BTreeSet::new();
    let mut gens = Vec::new();
    for sigma in 0..ctx.size() {
        let moved = ctx.apply_left(&alpha.0, sigma);
        if seen.insert(moved.clone()) {
            let idx = TensorIndex(moved);
            gens.push((sigma, tensor_symmetrize(ctx, row, &idx)?));
        }
    }
    Ok(gens)
}

/// Orbit decomposition of Γ^m_n up to stabilizer conjugacy: one orbit
/// representative per conjugacy class of stabilizer subgroups. The
/// o-basis verdict of an orbital subspace depends only on that class, so
/// the global verdict is the conjunction over these representatives.
pub fn orbit_stabilizer_classes(
    ctx: &GroupCtx,
    dimv: u16,
) -> Result<Vec<(TensorIndex, Vec<ElemId>)>> {
    let m = ctx.points;
    if dimv == 0 {
        return Err(Error::BadTuple("dim V must be at least 1".into()));
    }
    let total = (dimv as u64).checked_pow(m as u32).filter(|&t| t <= guards::MAX_TENSOR_SPACE);
    let Some(total) = total else {
        return Err(Error::GuardRefused(format!(
            "tensor index space {dimv}^{m} beyond desk scale"
        )));
    };
    let n = dimv as u64;
    let decode = |mut code: u64| -> Vec<u16> {
        let mut t = vec![0u16; m];
        for slot in t.iter_mut() {
            *slot = (code % n) as u16;
            code /= n;
        }
        t
    };
    let encode = |t: &[u16]| -> u64 {
        let mut code = 0u64;
        for &x in t.iter().rev() {
            code = code * n + x as u64;
        }
        code
    };

    let mut visited = vec![false; total as usize];
    let mut reps: Vec<(TensorIndex, Vec<ElemId>)> = Vec::new();
    let mut stab_classes: Vec<Vec<ElemId>> = Vec::new();
    for code in 0..total {
        if visited[code as usize] {
            continue;
        }
        let rep = decode(code);
        for g in 0..ctx.size() {
            visited[encode(&ctx.apply_right(&rep, g)) as usize] = true;
        }
        let stab = ctx.stabilizer(&rep);
        let is_new = !stab_classes.iter().any(|old| conjugate_subgroups(ctx, old, &stab));
        if is_new {
            stab_classes.push(stab.clone());
            reps.push((TensorIndex(rep), stab));
        }
    }
    Ok(reps)
}

fn conjugate_subgroups(ctx: &GroupCtx, a: &[ElemId], b: &[ElemId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    (0..ctx.size()).any(|g| {
        a.iter().all(|&x| {
            let y = ctx.conjugate(x, g);
            b.binary_search(&y).is_ok()
        })
    })
}
