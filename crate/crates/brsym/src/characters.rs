//! Ordinary and Brauer character tables for the two families.
//!
//! Semidihedral values follow the published tables: four (n even) or eight
//! (n odd) linear rows built from a ↦ i^c, b ↦ ±1, and 2-dimensional rows
//! ψ_h whose rotation values are 2cos(hrπ/2n) resp. 2i·sin(hrπ/2n), stored
//! exactly as ζ_{4n}^{hr} ± ζ_{4n}^{−hr}. The dihedral table is the
//! standard one. Brauer characters are restrictions of ordinary rows to the
//! p-regular set; the label sets below reproduce the published IBr lists
//! case by case, and the row count always equals the number of p-regular
//! classes.

use std::fmt;

use num::rational::BigRational;
use num::{BigInt, One};

use crate::cyclotomic::CycNum;
use crate::groups::{ElemId, Family, GroupCtx};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BaseSymbol {
    Chi,
    Psi,
}

/// Row label; `primed` marks the n-odd semidihedral alphabet (χ′, ψ′).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Label {
    pub base: BaseSymbol,
    pub primed: bool,
    pub index: u32,
}

impl Label {
    pub fn chi(index: u32, primed: bool) -> Self {
        Label { base: BaseSymbol::Chi, primed, index }
    }
    pub fn psi(index: u32, primed: bool) -> Self {
        Label { base: BaseSymbol::Psi, primed, index }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            BaseSymbol::Chi => "chi",
            BaseSymbol::Psi => "psi",
        };
        write!(f, "{}{}{}", base, if self.primed { "'" } else { "" }, self.index)
    }
}

/// A function defined on a subset of the group, constant on classes.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    values: Vec<Option<CycNum>>,
}

impl ClassFunction {
    pub fn new(values: Vec<Option<CycNum>>) -> Self {
        ClassFunction { values }
    }

    pub fn everywhere(ctx: &GroupCtx, f: impl Fn(ElemId) -> CycNum) -> Self {
        ClassFunction {
            values: (0..ctx.size()).map(|g| Some(f(g))).collect(),
        }
    }

    pub fn trivial(ctx: &GroupCtx) -> Self {
        Self::everywhere(ctx, |_| CycNum::one())
    }

    pub fn eval(&self, g: ElemId) -> Result<&CycNum> {
        self.values[g].as_ref().ok_or(Error::OutsideDomain(g))
    }

    pub fn defined_at(&self, g: ElemId) -> bool {
        self.values[g].is_some()
    }

    /// Sorted list of elements where the function is defined.
    pub fn domain(&self) -> Vec<ElemId> {
        (0..self.values.len()).filter(|&g| self.values[g].is_some()).collect()
    }

    pub fn restrict(&self, subset: &[ElemId]) -> Self {
        let mut values = vec![None; self.values.len()];
        for &g in subset {
            values[g] = self.values[g].clone();
        }
        ClassFunction { values }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Ordinary,
    Brauer { p: u32 },
}

#[derive(Clone, Debug)]
pub struct CharRow {
    pub label: Label,
    pub degree: u32,
    /// Rotation parameter of 2-dimensional rows.
    pub h: Option<u32>,
    pub func: ClassFunction,
}

pub struct CharTable {
    pub kind: TableKind,
    pub rows: Vec<CharRow>,
    /// rot_order = l·p^t with p ∤ l (for ordinary tables l = rot_order).
    pub l: u32,
    pub t: u32,
}

impl CharTable {
    pub fn row(&self, label: Label) -> Result<&CharRow> {
        self.rows
            .iter()
            .find(|r| r.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

/// a ↦ i^c, b ↦ (−1)^e as a linear character value at b^flip a^rot.
fn linear_value(c: u32, e: u32, flip: bool, rot: u32) -> CycNum {
    let k = (c * (rot % 4) + if flip { 2 * e } else { 0 }) % 4;
    CycNum::root_of_unity(4, k as i64)
}

/// Rotation value of a 2-dimensional row, stored in the published table
/// form: 2cos(hrπ/2n) = ζ^{hr} + ζ^{−hr}, except for semidihedral rows
/// with h and r both odd where it is 2i·sin(hrπ/2n) = ζ^{hr} − ζ^{−hr}.
/// Dihedral rows (twist ≡ −1) are always cosines.
fn two_dim_value(zeta_order: u32, h: u32, twist: u32, flip: bool, rot: u32) -> CycNum {
    if flip {
        return CycNum::zero(zeta_order);
    }
    let hr = (h as i64) * (rot as i64);
    let plus = CycNum::root_of_unity(zeta_order, hr);
    let minus = CycNum::root_of_unity(zeta_order, -hr);
    let cos_form = twist == zeta_order - 1 || h % 2 == 0 || rot % 2 == 0;
    let value = if cos_form { &plus + &minus } else { &plus - &minus };
    // Same value as the induced-character form ζ^{hr} + ζ^{h·twist·r}.
    debug_assert_eq!(
        value,
        &plus + &CycNum::root_of_unity(zeta_order, hr * twist as i64)
    );
    value
}

/// The full ordinary irreducible character table.
pub fn ordinary_table(ctx: &GroupCtx) -> CharTable {
    let m = ctx.rot_order;
    let mut rows = Vec::new();
    match ctx.family {
        Family::Semidihedral => {
            let n = ctx.param;
            let primed = n % 2 == 1;
            let cs: &[u32] = if primed { &[0, 2, 1, 3] } else { &[0, 2] };
            let mut k = 0;
            for &c in cs {
                for e in [0u32, 1] {
                    let func = ClassFunction::everywhere(ctx, |g| {
                        let el = ctx.elem(g);
                        linear_value(c, e, el.flip, el.rot)
                    });
                    rows.push(CharRow {
                        label: Label::chi(k, primed),
                        degree: 1,
                        h: None,
                        func,
                    });
                    k += 1;
                }
            }
            for h in two_dim_labels_sd(n) {
                let func = ClassFunction::everywhere(ctx, |g| {
                    let el = ctx.elem(g);
                    two_dim_value(m, h, ctx.twist, el.flip, el.rot)
                });
                rows.push(CharRow {
                    label: Label::psi(h, primed),
                    degree: 2,
                    h: Some(h),
                    func,
                });
            }
        }
        Family::Dihedral => {
            let linear: &[(u32, u32)] = if m % 2 == 0 {
                &[(0, 0), (0, 1), (1, 0), (1, 1)]
            } else {
                &[(0, 0), (0, 1)]
            };
            for (j, &(c, e)) in linear.iter().enumerate() {
                // λ_r = (−1)^c, λ_s = (−1)^e
                let func = ClassFunction::everywhere(ctx, |g| {
                    let el = ctx.elem(g);
                    let sign = (c * el.rot + e * el.flip as u32) % 2;
                    CycNum::from_integer(if sign == 0 { 1 } else { -1 })
                });
                rows.push(CharRow {
                    label: Label::psi(j as u32, false),
                    degree: 1,
                    h: None,
                    func,
                });
            }
            for h in 1..m {
                if 2 * h >= m {
                    break;
                }
                let func = ClassFunction::everywhere(ctx, |g| {
                    let el = ctx.elem(g);
                    two_dim_value(m, h, ctx.twist, el.flip, el.rot)
                });
                rows.push(CharRow {
                    label: Label::chi(h, false),
                    degree: 2,
                    h: Some(h),
                    func,
                });
            }
        }
    }
    debug_assert_eq!(rows.len(), ctx.conjugacy_classes().len());
    CharTable {
        kind: TableKind::Ordinary,
        rows,
        l: m,
        t: 0,
    }
}

/// 2-dimensional label set for SD_{8n}: even h in (0, 2n) plus the odd
/// orbit representatives, excluding the fixed points of h ↦ h(2n−1).
fn two_dim_labels_sd(n: u32) -> Vec<u32> {
    let mut hs: Vec<u32> = (2..2 * n).step_by(2).collect();
    if n % 2 == 0 {
        hs.extend((1..n).step_by(2));
        hs.extend((2 * n + 1..3 * n).step_by(2));
    } else {
        hs.extend((1..n.saturating_sub(1)).step_by(2));
        hs.extend((2 * n + 1..3 * n - 1).step_by(2));
    }
    hs.sort_unstable();
    hs
}

/// The index sets E, O^ε_1, O^ε_2 for odd p, with ε = 1 for n even and
/// ε = 2 for n odd.
pub fn eo_sets(l: u32, epsilon: u32) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let l = l as i64;
    let eps = epsilon as i64;
    let span = |from: i64, to: i64| -> Vec<u32> {
        let mut v = Vec::new();
        let mut j = from;
        while j <= to {
            v.push(j as u32);
            j += 2;
        }
        v
    };
    (
        span(2, l / 2 - 2),
        span(1, l / 4 - eps),
        span(l / 2 + 1, l / 2 + l / 4 - eps),
    )
}

/// ε (number of linear Brauer labels) and Π (the h-indices of the
/// 2-dimensional Brauer labels).
pub struct EpsilonPi {
    pub epsilon: u32,
    pub pi: Vec<u32>,
    pub e_set: Vec<u32>,
    pub o1: Vec<u32>,
    pub o2: Vec<u32>,
}

pub fn epsilon_pi(ctx: &GroupCtx, p: u32) -> Result<EpsilonPi> {
    let pr = ctx.pregular(p)?;
    let (l, t) = (pr.l, pr.t);
    let pt = p.pow(t);
    match ctx.family {
        Family::Semidihedral => {
            if p == 2 {
                let pi: Vec<u32> = (1..=(l - 1) / 2).map(|j| j * pt).collect();
                Ok(EpsilonPi { epsilon: 1, pi, e_set: vec![], o1: vec![], o2: vec![] })
            } else {
                let eps = if ctx.param % 2 == 0 { 1 } else { 2 };
                let (e_set, o1, o2) = eo_sets(l, eps);
                let mut pi: Vec<u32> =
                    e_set.iter().chain(&o1).chain(&o2).map(|&j| j * pt).collect();
                pi.sort_unstable();
                Ok(EpsilonPi {
                    epsilon: if ctx.param % 2 == 0 { 4 } else { 8 },
                    pi,
                    e_set,
                    o1,
                    o2,
                })
            }
        }
        Family::Dihedral => {
            let epsilon = if p == 2 {
                1
            } else if l % 2 == 0 {
                4
            } else {
                2
            };
            let pi: Vec<u32> = (1..).take_while(|j| 2 * j < l).map(|j| j * pt).collect();
            Ok(EpsilonPi { epsilon, pi, e_set: vec![], o1: vec![], o2: vec![] })
        }
    }
}

/// The irreducible Brauer characters: restrictions of the listed ordinary
/// rows to the p-regular set. Row count equals the p-regular class count.
pub fn brauer_table(ctx: &GroupCtx, p: u32) -> Result<CharTable> {
    let pr = ctx.pregular(p)?;
    let ep = epsilon_pi(ctx, p)?;
    let ord = ordinary_table(ctx);
    let primed = ctx.family == Family::Semidihedral && ctx.param % 2 == 1;

    let mut labels: Vec<Label> = Vec::new();
    match ctx.family {
        Family::Semidihedral => {
            for k in 0..ep.epsilon {
                labels.push(Label::chi(k, primed));
            }
            for &h in &ep.pi {
                labels.push(Label::psi(h, primed));
            }
        }
        Family::Dihedral => {
            for j in 0..ep.epsilon {
                labels.push(Label::psi(j, false));
            }
            for &h in &ep.pi {
                labels.push(Label::chi(h, false));
            }
        }
    }

    let mut rows = Vec::with_capacity(labels.len());
    for label in labels {
        let src = ord.row(label)?;
        rows.push(CharRow {
            label,
            degree: src.degree,
            h: src.h,
            func: src.func.restrict(&pr.set),
        });
    }
    if rows.len() != pr.classes.len() {
        return Err(Error::Inconsistent(format!(
            "IBr row count {} != p-regular class count {} (family {:?}, param {}, p {})",
            rows.len(),
            pr.classes.len(),
            ctx.family,
            ctx.param,
            p
        )));
    }
    Ok(CharTable {
        kind: TableKind::Brauer { p },
        rows,
        l: pr.l,
        t: pr.t,
    })
}

/// (φ, ψ)_K = (1/|K|) Σ_{σ∈K} φ(σ) ψ(σ⁻¹), exactly.
pub fn class_inner_product(
    ctx: &GroupCtx,
    phi: &ClassFunction,
    psi: &ClassFunction,
    subset: &[ElemId],
) -> Result<CycNum> {
    let mut acc = CycNum::zero(1);
    for &g in subset {
        let term = phi.eval(g)? * psi.eval(ctx.inv(g))?;
        acc = &acc + &term;
    }
    Ok(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(subset.len()))))
}

/// Multiplicity-style pairing (φ, 1)_K.
pub fn inner_with_trivial(ctx: &GroupCtx, phi: &ClassFunction, subset: &[ElemId]) -> Result<CycNum> {
    class_inner_product(ctx, phi, &ClassFunction::trivial(ctx), subset)
}

/// All linear characters of the subgroup `w` (sorted element list), as
/// value vectors indexed by position in `w`. Found by assigning roots of
/// unity to a greedy generating set and keeping exactly the assignments
/// that extend to homomorphisms.
pub fn linear_characters(ctx: &GroupCtx, w: &[ElemId]) -> Vec<Vec<CycNum>> {
    assert!(
        !w.is_empty() && w[0] == ctx.identity(),
        "subgroup must contain the identity"
    );
    let pos_of = |g: ElemId| w.binary_search(&g).ok();

    // Greedy generating set.
    let mut gens: Vec<ElemId> = Vec::new();
    let mut closure = vec![ctx.identity()];
    while closure.len() < w.len() {
        let next = *w.iter().find(|g| closure.binary_search(g).is_err()).unwrap();
        gens.push(next);
        closure = ctx.subgroup_closure(&gens);
    }

    // Express each element as a word in the generators (BFS).
    let mut word: Vec<Option<Vec<usize>>> = vec![None; w.len()];
    word[0] = Some(vec![]);
    let mut queue = vec![0usize];
    while let Some(xp) = queue.pop() {
        let x = w[xp];
        for (i, &g) in gens.iter().enumerate() {
            let y = ctx.mul(x, g);
            let yp = pos_of(y).expect("closure stays inside the subgroup");
            if word[yp].is_none() {
                let mut wrd = word[xp].clone().unwrap();
                wrd.push(i);
                word[yp] = Some(wrd);
                queue.push(yp);
            }
        }
    }

    let orders: Vec<u32> = gens.iter().map(|&g| ctx.element_order(g)).collect();
    let mut found: Vec<Vec<CycNum>> = Vec::new();
    let mut assignment = vec![0u32; gens.len()];
    loop {
        let gen_values: Vec<CycNum> = assignment
            .iter()
            .zip(&orders)
            .map(|(&k, &o)| CycNum::root_of_unity(o, k as i64))
            .collect();
        let values: Vec<CycNum> = (0..w.len())
            .map(|xp| {
                let mut acc = CycNum::one();
                for &i in word[xp].as_ref().unwrap() {
                    acc = &acc * &gen_values[i];
                }
                acc
            })
            .collect();
        let is_hom = (0..w.len()).all(|xp| {
            (0..w.len()).all(|yp| {
                let prod = ctx.mul(w[xp], w[yp]);
                let pp = pos_of(prod).unwrap();
                crate::cyclotomic::eq_embedded(&values[pp], &(&values[xp] * &values[yp]))
            })
        });
        if is_hom
            && !found.iter().any(|v| {
                v.iter()
                    .zip(&values)
                    .all(|(a, b)| crate::cyclotomic::eq_embedded(a, b))
            })
        {
            found.push(values);
        }
        if gens.is_empty() {
            return found;
        }
        // advance the mixed-radix assignment
        let mut i = 0;
        loop {
            if i == gens.len() {
                return found;
            }
            assignment[i] += 1;
            if assignment[i] < orders[i] {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::eq_embedded;
    use crate::groups::{build_group, Action};

    fn sd(n: u32) -> GroupCtx {
        build_group(Family::Semidihedral, n, Action::Regular).unwrap()
    }
    fn dih(m: u32) -> GroupCtx {
        build_group(Family::Dihedral, m, Action::Regular).unwrap()
    }

    fn assert_row_orthogonality(ctx: &GroupCtx, table: &CharTable) {
        for (i, ri) in table.rows.iter().enumerate() {
            for (j, rj) in table.rows.iter().enumerate() {
                let mut acc = CycNum::zero(1);
                for g in 0..ctx.size() {
                    let term = ri.func.eval(g).unwrap() * &rj.func.eval(g).unwrap().conjugate();
                    acc = &acc + &term;
                }
                let expect = CycNum::from_integer(if i == j { ctx.size() as i64 } else { 0 });
                assert!(
                    eq_embedded(&acc, &expect),
                    "rows {} and {} not orthogonal: {}",
                    ri.label,
                    rj.label,
                    acc
                );
            }
        }
    }

    #[test]
    fn table_one_chi2_row() {
        let ctx = sd(2);
        let t = ordinary_table(&ctx);
        let chi2 = t.row(Label::chi(2, false)).unwrap();
        // 1 on even rotations, −1 on odd rotations, 1 on [b], −1 on [ba]
        for r in (0..8).step_by(2) {
            assert!(eq_embedded(chi2.func.eval(ctx.elem_id(false, r)).unwrap(), &CycNum::one()));
        }
        for r in (1..8).step_by(2) {
            assert!(eq_embedded(
                chi2.func.eval(ctx.elem_id(false, r)).unwrap(),
                &CycNum::from_integer(-1)
            ));
        }
        assert!(eq_embedded(chi2.func.eval(ctx.elem_id(true, 0)).unwrap(), &CycNum::one()));
        assert!(eq_embedded(
            chi2.func.eval(ctx.elem_id(true, 1)).unwrap(),
            &CycNum::from_integer(-1)
        ));
    }

    #[test]
    fn table_two_chi4_row() {
        let ctx = sd(3);
        let t = ordinary_table(&ctx);
        let chi4 = t.row(Label::chi(4, true)).unwrap();
        let i = CycNum::root_of_unity(4, 1);
        assert!(eq_embedded(chi4.func.eval(ctx.elem_id(true, 0)).unwrap(), &CycNum::one()));
        assert!(eq_embedded(chi4.func.eval(ctx.elem_id(true, 1)).unwrap(), &i));
        assert!(eq_embedded(
            chi4.func.eval(ctx.elem_id(true, 2)).unwrap(),
            &CycNum::from_integer(-1)
        ));
        assert!(eq_embedded(chi4.func.eval(ctx.elem_id(true, 3)).unwrap(), &(-&i)));
    }

    #[test]
    fn values_constant_on_classes() {
        for ctx in [sd(2), sd(3), sd(4), dih(5), dih(6), dih(12)] {
            let t = ordinary_table(&ctx);
            for row in &t.rows {
                for class in ctx.conjugacy_classes() {
                    let v0 = row.func.eval(class[0]).unwrap();
                    for &g in class {
                        assert!(eq_embedded(v0, row.func.eval(g).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn row_orthogonality_small() {
        for n in 2..=3 {
            let ctx = sd(n);
            let t = ordinary_table(&ctx);
            assert_eq!(t.rows.len(), ctx.conjugacy_classes().len());
            assert_row_orthogonality(&ctx, &t);
        }
        for m in [3, 6, 8] {
            let ctx = dih(m);
            let t = ordinary_table(&ctx);
            assert_eq!(t.rows.len(), ctx.conjugacy_classes().len());
            assert_row_orthogonality(&ctx, &t);
        }
    }

    #[test]
    fn ibr_sd24_p3() {
        let ctx = sd(3);
        let t = brauer_table(&ctx, 3).unwrap();
        assert_eq!(t.rows.len(), 8);
        assert!(t.rows.iter().all(|r| r.degree == 1));
        let ep = epsilon_pi(&ctx, 3).unwrap();
        assert!(ep.pi.is_empty(), "E, O²₁, O²₂ all empty for l = 4");
        for k in 0..8 {
            assert!(t.row(Label::chi(k, true)).is_ok());
        }
    }

    #[test]
    fn ibr_sd16_p2() {
        let ctx = sd(2);
        let t = brauer_table(&ctx, 2).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].label, Label::chi(0, false));
    }

    #[test]
    fn ibr_sd48_p3() {
        let ctx = sd(6);
        let ep = epsilon_pi(&ctx, 3).unwrap();
        assert_eq!(ep.e_set, vec![2]);
        assert_eq!(ep.o1, vec![1]);
        assert_eq!(ep.o2, vec![5]);
        assert_eq!(ep.pi, vec![3, 6, 15]);
        let t = brauer_table(&ctx, 3).unwrap();
        assert_eq!(t.rows.len(), 7, "4 linear + |Π| = 7 = l/2 + 3");
    }

    #[test]
    fn ibr_sd_n2_p5_pi() {
        let ctx = sd(2);
        let ep = epsilon_pi(&ctx, 5).unwrap();
        assert_eq!(ep.pi, vec![1, 2, 5]);
        assert_eq!(brauer_table(&ctx, 5).unwrap().rows.len(), 7);
    }

    #[test]
    fn ibr_counts_and_distinctness() {
        for ctx in [sd(2), sd(3), sd(4), sd(5), dih(6), dih(8), dih(12), dih(9)] {
            for p in [2, 3, 5, 7] {
                let t = brauer_table(&ctx, p).unwrap();
                let pr = ctx.pregular(p).unwrap();
                assert_eq!(t.rows.len(), pr.classes.len());
                // rows pairwise distinct as functions on the p-regular set
                for i in 0..t.rows.len() {
                    for j in i + 1..t.rows.len() {
                        let same = pr.set.iter().all(|&g| {
                            eq_embedded(
                                t.rows[i].func.eval(g).unwrap(),
                                t.rows[j].func.eval(g).unwrap(),
                            )
                        });
                        assert!(
                            !same,
                            "{} = {} on p-regular set",
                            t.rows[i].label, t.rows[j].label
                        );
                    }
                }
                // each row is the restriction of its ordinary source
                let ord = ordinary_table(&ctx);
                for row in &t.rows {
                    let src = ord.row(row.label).unwrap();
                    for &g in &pr.set {
                        assert!(eq_embedded(row.func.eval(g).unwrap(), src.func.eval(g).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn brauer_degree_at_identity() {
        for ctx in [sd(3), dih(12)] {
            for p in [2, 3, 5] {
                let t = brauer_table(&ctx, p).unwrap();
                for row in &t.rows {
                    let v = row.func.eval(ctx.identity()).unwrap();
                    assert!(eq_embedded(v, &CycNum::from_integer(row.degree as i64)));
                }
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let ctx = sd(2);
        let t = ordinary_table(&ctx);
        let chi0 = t.row(Label::chi(0, false)).unwrap();
        let all: Vec<ElemId> = (0..ctx.size()).collect();
        let norm = class_inner_product(&ctx, &chi0.func, &chi0.func, &all).unwrap();
        assert!(eq_embedded(&norm, &CycNum::one()));

        let psi1 = t.row(Label::psi(1, false)).unwrap();
        let singleton = [ctx.identity()];
        let v = inner_with_trivial(&ctx, &psi1.func, &singleton).unwrap();
        assert!(eq_embedded(&v, &CycNum::from_integer(2)));

        let chi2 = t.row(Label::chi(2, false)).unwrap();
        let chi3 = t.row(Label::chi(3, false)).unwrap();
        let z = class_inner_product(&ctx, &chi2.func, &chi3.func, &all).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn inner_product_outside_domain_errors() {
        let ctx = sd(3);
        let t = brauer_table(&ctx, 3).unwrap();
        let all: Vec<ElemId> = (0..ctx.size()).collect();
        let r = class_inner_product(&ctx, &t.rows[0].func, &t.rows[0].func, &all);
        assert!(matches!(r, Err(Error::OutsideDomain(_))));
    }

    #[test]
    fn linear_characters_of_cyclic_and_full() {
        let ctx = sd(2);
        // cyclic ⟨a⟩: 8 linear characters
        let a = ctx.elem_id(false, 1);
        let w = ctx.subgroup_closure(&[a]);
        assert_eq!(linear_characters(&ctx, &w).len(), 8);
        // full SD_16: |G/[G,G]| = 4
        let whole: Vec<ElemId> = (0..ctx.size()).collect();
        assert_eq!(linear_characters(&ctx, &whole).len(), 4);
    }
}
