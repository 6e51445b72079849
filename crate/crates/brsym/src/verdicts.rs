//! O-basis existence: closed-form criteria and the brute-force oracle.
//!
//! The closed forms decide existence from the group parameters alone:
//! linear Brauer rows have an o-basis iff p = 2 or p does not divide the
//! rotation order; degree-2 rows iff 4 divides l′ = l/gcd(l, h), with the
//! equivalent reformulation rot_order ≡ 0 mod 4h₂ (h₂ the 2-part of h)
//! checked internally. The brute-force route expands the standard
//! symmetrized generators of each orbital subspace, computes the exact
//! Gram rank k, deduplicates scalar multiples, and searches exhaustively
//! for k pairwise-orthogonal nonzero generators. An o-basis consisting of
//! standard symmetrized elements exists iff that search succeeds on every
//! orbital subspace.

use num::integer::gcd;

use crate::characters::{CharRow, CharTable, TableKind};
use crate::groups::{ElemId, GroupCtx};
use crate::orbital::{self, OrbitVector};
use crate::polyspace::{self, Multidegree};
use crate::tensorspace::{self, TensorIndex};
use crate::{guards, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum VerdictSource {
    ClosedForm,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    Orbital(Vec<u16>),
    Global,
}

#[derive(Clone, Debug)]
pub struct ObasisVerdict {
    pub exists: bool,
    /// Group elements σ whose symmetrized vectors form an o-basis.
    pub witness: Option<Vec<ElemId>>,
    pub source: VerdictSource,
    pub scope: Scope,
}

/// Criterion parameters derived from (family, param, p, label).
#[derive(Clone, Debug, serde::Serialize)]
pub struct CriterionInput {
    pub p: u32,
    pub l: u32,
    pub t: u32,
    pub degree: u32,
    pub h: Option<u32>,
    pub l_prime: Option<u32>,
    pub h_prime: Option<u32>,
    pub h1: Option<u32>,
    pub h2: Option<u32>,
}

pub fn criterion_input(ctx: &GroupCtx, table: &CharTable, row: &CharRow) -> Result<CriterionInput> {
    let TableKind::Brauer { p } = table.kind else {
        return Err(Error::Inconsistent(
            "o-basis criteria apply to Brauer rows".into(),
        ));
    };
    debug_assert_eq!(ctx.rot_order, table.l * p.pow(table.t));
    let mut input = CriterionInput {
        p,
        l: table.l,
        t: table.t,
        degree: row.degree,
        h: row.h,
        l_prime: None,
        h_prime: None,
        h1: None,
        h2: None,
    };
    if let Some(h) = row.h {
        let g = gcd(table.l, h);
        let h2 = 1 << h.trailing_zeros();
        input.l_prime = Some(table.l / g);
        input.h_prime = Some(h / g);
        input.h2 = Some(h2);
        input.h1 = Some(h / h2);
    }
    Ok(input)
}

/// 4 | l/gcd(l, h) — the degree-2 o-basis condition.
pub fn lprime_divisible_by_four(l: u64, h: u64) -> bool {
    (l / gcd(l, h)) % 4 == 0
}

/// m ≡ 0 mod 4h₂ with h = h₁h₂, h₂ the 2-part of h — the equivalent form.
pub fn four_h2_divides(m: u64, h: u64) -> bool {
    let h2 = h & h.wrapping_neg();
    m % (4 * h2) == 0
}

/// Closed-form o-basis verdict for the polynomial symmetry class of a
/// Brauer row.
pub fn criterion_poly(ctx: &GroupCtx, table: &CharTable, row: &CharRow) -> Result<ObasisVerdict> {
    let input = criterion_input(ctx, table, row)?;
    let exists = match input.h {
        None => input.p == 2 || ctx.rot_order % input.p != 0,
        Some(h) => {
            let by_lprime = lprime_divisible_by_four(input.l as u64, h as u64);
            let by_cor = four_h2_divides(ctx.rot_order as u64, h as u64);
            if by_lprime != by_cor {
                return Err(Error::Inconsistent(format!(
                    "criterion forms disagree at l={}, h={h}: l' form {by_lprime}, 4h2 form {by_cor}",
                    input.l
                )));
            }
            by_lprime
        }
    };
    Ok(ObasisVerdict {
        exists,
        witness: None,
        source: VerdictSource::ClosedForm,
        scope: Scope::Global,
    })
}

/// Closed-form verdict for the tensor symmetry class: dim V = 1 always has
/// an o-basis, otherwise the polynomial criterion decides.
pub fn criterion_tensor(
    ctx: &GroupCtx,
    table: &CharTable,
    row: &CharRow,
    dimv: u16,
) -> Result<ObasisVerdict> {
    if dimv == 0 {
        return Err(Error::BadTuple("dim V must be at least 1".into()));
    }
    if dimv == 1 {
        return Ok(ObasisVerdict {
            exists: true,
            witness: None,
            source: VerdictSource::ClosedForm,
            scope: Scope::Global,
        });
    }
    criterion_poly(ctx, table, row)
}

/// Exhaustive o-basis search over one orbital subspace. `gens` pairs each
/// distinct symmetrized generator with a representative σ.
pub fn brute_force_obasis(gens: &[(ElemId, OrbitVector)], scope: Scope) -> Result<ObasisVerdict> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let nonzero: Vec<&(ElemId, OrbitVector)> = gens.iter().filter(|(_, v)| !v.is_zero()).collect();
    if nonzero.is_empty() {
        // zero subspace: vacuously has an o-basis
        return Ok(ObasisVerdict {
            exists: true,
            witness: Some(Vec::new()),
            source: VerdictSource::BruteForce,
            scope,
        });
    }
    let vecs: Vec<OrbitVector> = nonzero.iter().map(|(_, v)| v.clone()).collect();
    let g = orbital::gram(&vecs);
    let rank = orbital::rank(&g);

    // one representative per proportionality class (scalar multiples can
    // never both appear in an orthogonal basis)
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..vecs.len() {
        if !reps.iter().any(|&r| orbital::proportional(&vecs[r], &vecs[i])) {
            reps.push(i);
        }
    }
    let adj: Vec<Vec<bool>> = reps
        .iter()
        .map(|&i| reps.iter().map(|&j| i != j && g[i][j].is_zero()).collect())
        .collect();
    let verdict = match orbital::find_clique(&adj, rank) {
        Some(pick) => {
            let mut witness: Vec<ElemId> = pick.iter().map(|&k| nonzero[reps[k]].0).collect();
            witness.sort_unstable();
            ObasisVerdict {
                exists: true,
                witness: Some(witness),
                source: VerdictSource::BruteForce,
                scope,
            }
        }
        None => ObasisVerdict {
            exists: false,
            witness: None,
            source: VerdictSource::BruteForce,
            scope,
        },
    };
    Ok(verdict)
}

/// Independent witness re-verification: all vectors nonzero, pairwise
/// inner products exactly zero, count equal to the subspace rank.
pub fn verify_witness(gens: &[(ElemId, OrbitVector)], witness: &[ElemId]) -> Result<()> {
    let nonzero: Vec<&OrbitVector> = gens
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(_, v)| v)
        .collect();
    let rank = if nonzero.is_empty() {
        0
    } else {
        let vecs: Vec<OrbitVector> = nonzero.iter().map(|v| (*v).clone()).collect();
        orbital::rank(&orbital::gram(&vecs))
    };
    if witness.len() != rank {
        return Err(Error::Inconsistent(format!(
            "witness size {} != rank {rank}",
            witness.len()
        )));
    }
    let picked: Vec<&OrbitVector> = witness
        .iter()
        .map(|s| {
            gens.iter()
                .find(|(sig, _)| sig == s)
                .map(|(_, v)| v)
                .ok_or_else(|| Error::Inconsistent(format!("witness element {s} not a generator")))
        })
        .collect::<Result<_>>()?;
    for (i, v) in picked.iter().enumerate() {
        if v.is_zero() {
            return Err(Error::Inconsistent("witness vector is zero".into()));
        }
        for w in picked.iter().skip(i + 1) {
            if !orbital::inner_direct(v, w).is_zero() {
                return Err(Error::Inconsistent("witness vectors not orthogonal".into()));
            }
        }
    }
    Ok(())
}

/// Global verdict with per-orbital detail.
#[derive(Clone, Debug)]
pub struct GlobalObasis {
    pub verdict: ObasisVerdict,
    pub orbits: Vec<(Vec<u16>, ObasisVerdict)>,
}

/// O-basis verdict for the whole degree-d polynomial symmetry class:
/// conjunction of the orbital verdicts over all orbit representatives
/// within the support bound, witnesses concatenated.
pub fn global_obasis(
    ctx: &GroupCtx,
    row: &CharRow,
    d: u16,
    support_bound: usize,
) -> Result<GlobalObasis> {
    if ctx.order > guards::MAX_GROUP_ORDER {
        return Err(Error::GuardRefused(format!(
            "group order {} beyond desk scale",
            ctx.order
        )));
    }
    let reps = polyspace::orbit_reps(ctx, d, support_bound)?;
    let mut orbits = Vec::new();
    let mut all = true;
    let mut witness: Vec<ElemId> = Vec::new();
    for rep in reps {
        let gens: Vec<(ElemId, OrbitVector)> = polyspace::orbital_generators(ctx, row, &rep)?
            .into_iter()
            .map(|q| (q.sigma, q.vec))
            .collect();
        let v = brute_force_obasis(&gens, Scope::Orbital(rep.0.clone()))?;
        all &= v.exists;
        if let Some(w) = &v.witness {
            witness.extend(w.iter().copied());
        }
        orbits.push((rep.0, v));
    }
    Ok(GlobalObasis {
        verdict: ObasisVerdict {
            exists: all,
            witness: if all { Some(witness) } else { None },
            source: VerdictSource::BruteForce,
            scope: Scope::Global,
        },
        orbits,
    })
}

/// O-basis verdict for the tensor symmetry class V_φ(G) with dim V = dimv:
/// conjunction over orbit representatives, one per stabilizer conjugacy
/// class (the orbital Gram structure depends only on that class).
pub fn tensor_global_obasis(ctx: &GroupCtx, row: &CharRow, dimv: u16) -> Result<GlobalObasis> {
    if ctx.order > guards::MAX_GROUP_ORDER {
        return Err(Error::GuardRefused(format!(
            "group order {} beyond desk scale",
            ctx.order
        )));
    }
    let classes = tensorspace::orbit_stabilizer_classes(ctx, dimv)?;
    let mut orbits = Vec::new();
    let mut all = true;
    let mut witness: Vec<ElemId> = Vec::new();
    for (rep, _) in classes {
        let gens: Vec<(ElemId, OrbitVector)> = tensorspace::orbital_generators(ctx, row, &rep)?
            .into_iter()
            .map(|(sigma, t)| (sigma, t.vec))
            .collect();
        let v = brute_force_obasis(&gens, Scope::Orbital(rep.0.clone()))?;
        all &= v.exists;
        if let Some(w) = &v.witness {
            witness.extend(w.iter().copied());
        }
        orbits.push((rep.0, v));
    }
    Ok(GlobalObasis {
        verdict: ObasisVerdict {
            exists: all,
            witness: if all { Some(witness) } else { None },
            source: VerdictSource::BruteForce,
            scope: Scope::Global,
        },
        orbits,
    })
}

/// Gram matrix of an orbital subspace of a polynomial symmetry class,
/// indexed by representative σ per distinct root ασ.
pub fn orbital_gram_poly(
    ctx: &GroupCtx,
    row: &CharRow,
    alpha: &Multidegree,
) -> Result<(Vec<ElemId>, Vec<Vec<crate::cyclotomic::CycNum>>)> {
    let gens = polyspace::orbital_generators(ctx, row, alpha)?;
    let sigmas: Vec<ElemId> = gens.iter().map(|q| q.sigma).collect();
    let vecs: Vec<OrbitVector> = gens.into_iter().map(|q| q.vec).collect();
    Ok((sigmas, orbital::gram(&vecs)))
}

/// Tensor-side orbital Gram, indexed by representative σ per distinct
/// index σ.γ.
pub fn orbital_gram_tensor(
    ctx: &GroupCtx,
    row: &CharRow,
    gamma: &TensorIndex,
) -> Result<(Vec<ElemId>, Vec<Vec<crate::cyclotomic::CycNum>>)> {
    let gens = tensorspace::orbital_generators(ctx, row, gamma)?;
    let sigmas: Vec<ElemId> = gens.iter().map(|(s, _)| *s).collect();
    let vecs: Vec<OrbitVector> = gens.into_iter().map(|(_, t)| t.vec).collect();
    Ok((sigmas, orbital::gram(&vecs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{brauer_table, Label};
    use crate::groups::{build_group, Action, Family};

    fn sd(n: u32) -> GroupCtx {
        build_group(Family::Semidihedral, n, Action::Regular).unwrap()
    }
    fn dih(m: u32) -> GroupCtx {
        build_group(Family::Dihedral, m, Action::Regular).unwrap()
    }

    #[test]
    fn criterion_linear_sd24_p3_false() {
        let ctx = sd(3);
        let t = brauer_table(&ctx, 3).unwrap();
        for k in 0..8 {
            let row = t.row(Label::chi(k, true)).unwrap();
            let v = criterion_poly(&ctx, &t, row).unwrap();
            assert!(!v.exists, "p ≠ 2 and p | 4n: no o-basis for chi'{k}");
        }
    }

    #[test]
    fn criterion_two_dim_sd24_p5() {
        let ctx = sd(3);
        let t = brauer_table(&ctx, 5).unwrap();
        // l = 12: ψ'₂ has l′ = 6 (no o-basis), ψ'₁ has l′ = 12 (o-basis)
        let psi2 = t.row(Label::psi(2, true)).unwrap();
        assert!(!criterion_poly(&ctx, &t, psi2).unwrap().exists);
        let psi1 = t.row(Label::psi(1, true)).unwrap();
        assert!(criterion_poly(&ctx, &t, psi1).unwrap().exists);
        let input = criterion_input(&ctx, &t, psi1).unwrap();
        assert_eq!(input.l_prime, Some(12));
    }

    #[test]
    fn criterion_two_dim_d12_p5() {
        let ctx = dih(12);
        let t = brauer_table(&ctx, 5).unwrap();
        let chi3 = t.row(Label::chi(3, false)).unwrap();
        assert!(criterion_poly(&ctx, &t, chi3).unwrap().exists, "l' = 4");
        let chi2 = t.row(Label::chi(2, false)).unwrap();
        assert!(!criterion_poly(&ctx, &t, chi2).unwrap().exists, "l' = 6");
        // the 4h₂ reformulation: h = 2 gives h₂ = 2 and 12 mod 8 ≠ 0
        assert!(!four_h2_divides(12, 2));
        assert!(lprime_divisible_by_four(12, 3));
    }

    #[test]
    fn criterion_tensor_dimv() {
        let ctx = sd(3);
        let t = brauer_table(&ctx, 5).unwrap();
        let psi2 = t.row(Label::psi(2, true)).unwrap();
        assert!(criterion_tensor(&ctx, &t, psi2, 1).unwrap().exists, "dim V = 1");
        assert!(!criterion_tensor(&ctx, &t, psi2, 2).unwrap().exists, "l' = 6");
        let ctx2 = sd(2);
        let t2 = brauer_table(&ctx2, 2).unwrap();
        let chi0 = t2.row(Label::chi(0, false)).unwrap();
        assert!(criterion_tensor(&ctx2, &t2, chi0, 3).unwrap().exists, "p = 2");
        assert!(criterion_tensor(&ctx2, &t2, chi0, 0).is_err());
    }

    #[test]
    fn brute_force_full_monomial_basis() {
        let ctx = sd(2);
        let t = brauer_table(&ctx, 2).unwrap();
        let chi0 = &t.rows[0];
        let alpha = Multidegree::concentrated(&ctx, 1);
        let gens: Vec<(ElemId, OrbitVector)> = polyspace::orbital_generators(&ctx, chi0, &alpha)
            .unwrap()
            .into_iter()
            .map(|q| (q.sigma, q.vec))
            .collect();
        // p = 2, Ĝ = {1}: generators are plain monomials, orthonormal
        let v = brute_force_obasis(&gens, Scope::Orbital(alpha.0.clone())).unwrap();
        assert!(v.exists);
        let w = v.witness.unwrap();
        assert_eq!(w.len(), ctx.size());
        verify_witness(&gens, &w).unwrap();
    }

    #[test]
    fn brute_force_empty_list_rejected() {
        assert!(matches!(
            brute_force_obasis(&[], Scope::Global),
            Err(Error::EmptyGenerators)
        ));
    }

    #[test]
    fn brute_force_matches_criterion_sd24_p3() {
        let ctx = sd(3);
        let t = brauer_table(&ctx, 3).unwrap();
        let chi0 = t.row(Label::chi(0, true)).unwrap();
        let alpha = Multidegree::concentrated(&ctx, 2);
        let gens: Vec<(ElemId, OrbitVector)> = polyspace::orbital_generators(&ctx, chi0, &alpha)
            .unwrap()
            .into_iter()
            .map(|q| (q.sigma, q.vec))
            .collect();
        let v = brute_force_obasis(&gens, Scope::Orbital(alpha.0.clone())).unwrap();
        assert!(!v.exists, "matches the closed-form verdict");
    }

    #[test]
    fn brute_force_d12_p5_chi3_weight2() {
        let ctx = dih(12);
        let t = brauer_table(&ctx, 5).unwrap();
        let chi3 = t.row(Label::chi(3, false)).unwrap();
        let alpha = Multidegree::concentrated(&ctx, 2);
        assert_eq!(ctx.stabilizer(&alpha.0).len(), 1, "weight-2 free orbit");
        let gens: Vec<(ElemId, OrbitVector)> = polyspace::orbital_generators(&ctx, chi3, &alpha)
            .unwrap()
            .into_iter()
            .map(|q| (q.sigma, q.vec))
            .collect();
        let v = brute_force_obasis(&gens, Scope::Orbital(alpha.0.clone())).unwrap();
        assert!(v.exists);
        verify_witness(&gens, &v.witness.unwrap()).unwrap();
    }

    #[test]
    fn global_obasis_conjunction() {
        let ctx = sd(3);
        let t = brauer_table(&ctx, 5).unwrap();
        let psi1 = t.row(Label::psi(1, true)).unwrap();
        let g = global_obasis(&ctx, psi1, 2, 2).unwrap();
        assert_eq!(
            g.verdict.exists,
            g.orbits.iter().all(|(_, v)| v.exists),
            "global = conjunction of orbitals"
        );
        let psi2 = t.row(Label::psi(2, true)).unwrap();
        let g2 = global_obasis(&ctx, psi2, 1, 1).unwrap();
        assert!(!g2.verdict.exists);
    }

    #[test]
    fn guard_refusal_on_large_group() {
        let ctx = build_group(Family::Dihedral, 30, Action::Regular).unwrap();
        let t = brauer_table(&ctx, 7).unwrap();
        let row = &t.rows[0];
        assert!(matches!(
            global_obasis(&ctx, row, 1, 1),
            Err(Error::GuardRefused(_))
        ));
    }
}
