//! The two presented group families and their permutation actions.
//!
//! SD_{8n} = ⟨a, b | a^{4n} = b² = 1, bab = a^{2n−1}⟩ (order 8n, n ≥ 2) and
//! D_m = ⟨r, s | r^m = s² = 1, srs = r⁻¹⟩ (order 2m, m ≥ 3). Both share the
//! normal form b^f·a^k, so one multiplication rule covers both families via
//! the twist exponent s (2n−1 resp. −1). Elements are indexed by
//! id = f·M + k with M the rotation order; this fixes the deterministic
//! ordering used everywhere downstream.

use crate::cyclotomic::is_prime;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Family {
    Semidihedral,
    Dihedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Action {
    /// Left translation on the |G| group elements (Cayley action); every
    /// point stabilizer is trivial.
    Regular,
    /// For D_m the m-vertex action; for SD_{8n} the affine action on Z_{4n}
    /// (a: j ↦ j+1, b: j ↦ (2n−1)j).
    Natural,
}

/// Normal form b^flip · a^rot (resp. s^flip · r^rot).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElem {
    pub flip: bool,
    pub rot: u32,
}

pub type ElemId = usize;

pub struct GroupCtx {
    pub family: Family,
    /// n for SD_{8n}, m for D_m.
    pub param: u32,
    /// Order of the rotation subgroup: 4n resp. m.
    pub rot_order: u32,
    /// b a b = a^twist; 2n−1 for SD, m−1 for D.
    pub twist: u32,
    pub order: u32,
    pub action: Action,
    pub points: usize,
    elems: Vec<GroupElem>,
    perms: Vec<Vec<u16>>,
    inv: Vec<ElemId>,
    orders: Vec<u32>,
    classes: Vec<Vec<ElemId>>,
}

pub fn build_group(family: Family, param: u32, action: Action) -> Result<GroupCtx> {
    let min = match family {
        Family::Semidihedral => 2,
        Family::Dihedral => 3,
    };
    if param < min {
        return Err(Error::ParamTooSmall(param, min));
    }
    let rot_order = match family {
        Family::Semidihedral => 4 * param,
        Family::Dihedral => param,
    };
    let twist = match family {
        Family::Semidihedral => 2 * param - 1,
        Family::Dihedral => rot_order - 1,
    };
    let order = 2 * rot_order;
    let m = rot_order;
    let elems: Vec<GroupElem> = (0..order)
        .map(|id| GroupElem {
            flip: id >= m,
            rot: id % m,
        })
        .collect();

    let mul = |x: GroupElem, y: GroupElem| -> GroupElem {
        let left = if y.flip { x.rot * twist } else { x.rot };
        GroupElem {
            flip: x.flip ^ y.flip,
            rot: (left + y.rot) % m,
        }
    };
    let id_of = |e: GroupElem| -> ElemId { (e.flip as usize) * m as usize + e.rot as usize };

    let points = match action {
        Action::Regular => order as usize,
        Action::Natural => m as usize,
    };
    let mut perms = Vec::with_capacity(order as usize);
    for &g in &elems {
        let mut perm = vec![0u16; points];
        match action {
            Action::Regular => {
                for (x, &e) in elems.iter().enumerate() {
                    perm[x] = id_of(mul(g, e)) as u16;
                }
            }
            Action::Natural => {
                for j in 0..m {
                    let mut img = (j + g.rot) % m;
                    if g.flip {
                        img = img * twist % m;
                    }
                    perm[j as usize] = img as u16;
                }
            }
        }
        perms.push(perm);
    }

    // Faithfulness: only the identity may act trivially.
    let identity_perm: Vec<u16> = (0..points as u16).collect();
    for (id, perm) in perms.iter().enumerate() {
        if id != 0 && *perm == identity_perm {
            return Err(Error::UnfaithfulAction);
        }
    }

    let mut inv = vec![0; order as usize];
    for (id, &g) in elems.iter().enumerate() {
        let gi = if g.flip {
            GroupElem {
                flip: true,
                rot: (m - g.rot * twist % m) % m,
            }
        } else {
            GroupElem {
                flip: false,
                rot: (m - g.rot) % m,
            }
        };
        inv[id] = id_of(gi);
        debug_assert_eq!(id_of(mul(g, elems[inv[id]])), 0);
    }

    let mut orders = vec![0u32; order as usize];
    for id in 0..order as usize {
        let mut acc = elems[id];
        let mut k = 1;
        while id_of(acc) != 0 {
            acc = mul(acc, elems[id]);
            k += 1;
        }
        orders[id] = k;
    }

    let mut ctx = GroupCtx {
        family,
        param,
        rot_order,
        twist,
        order,
        action,
        points,
        elems,
        perms,
        inv,
        orders,
        classes: Vec::new(),
    };
    ctx.classes = ctx.compute_classes();
    Ok(ctx)
}

impl GroupCtx {
    pub fn size(&self) -> usize {
        self.order as usize
    }

    pub fn elem(&self, id: ElemId) -> GroupElem {
        self.elems[id]
    }

    pub fn elem_id(&self, flip: bool, rot: u32) -> ElemId {
        (flip as usize) * self.rot_order as usize + (rot % self.rot_order) as usize
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn mul(&self, x: ElemId, y: ElemId) -> ElemId {
        let (a, b) = (self.elems[x], self.elems[y]);
        let left = if b.flip {
            a.rot as u64 * self.twist as u64 % self.rot_order as u64
        } else {
            a.rot as u64
        };
        let rot = ((left + b.rot as u64) % self.rot_order as u64) as u32;
        self.elem_id(a.flip ^ b.flip, rot)
    }

    pub fn inv(&self, x: ElemId) -> ElemId {
        self.inv[x]
    }

    pub fn conjugate(&self, g: ElemId, by: ElemId) -> ElemId {
        self.mul(self.mul(by, g), self.inv[by])
    }

    pub fn element_order(&self, g: ElemId) -> u32 {
        self.orders[g]
    }

    pub fn perm(&self, g: ElemId) -> &[u16] {
        &self.perms[g]
    }

    /// Right action on index tuples: (ασ)_j = α_{σ(j)}.
    pub fn apply_right(&self, alpha: &[u16], g: ElemId) -> Vec<u16> {
        let p = &self.perms[g];
        (0..alpha.len()).map(|j| alpha[p[j] as usize]).collect()
    }

    /// Left action σ.α = (α_{σ⁻¹(1)}, …); equals the right action by σ⁻¹.
    pub fn apply_left(&self, alpha: &[u16], g: ElemId) -> Vec<u16> {
        self.apply_right(alpha, self.inv[g])
    }

    fn compute_classes(&self) -> Vec<Vec<ElemId>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut class: Vec<ElemId> = (0..n).map(|h| self.conjugate(g, h)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes.sort_by_key(|c| c[0]);
        classes
    }

    pub fn conjugacy_classes(&self) -> &[Vec<ElemId>] {
        &self.classes
    }

    pub fn class_of(&self, g: ElemId) -> usize {
        self.classes.iter().position(|c| c.binary_search(&g).is_ok()).unwrap()
    }

    /// Stabilizer of an index tuple, as a sorted element list (a subgroup).
    pub fn stabilizer(&self, alpha: &[u16]) -> Vec<ElemId> {
        (0..self.size())
            .filter(|&g| self.apply_right(alpha, g) == alpha)
            .collect()
    }

    /// Orbit of an index tuple under the right action, sorted.
    pub fn orbit(&self, alpha: &[u16]) -> Vec<Vec<u16>> {
        let mut orb: Vec<Vec<u16>> = (0..self.size())
            .map(|g| self.apply_right(alpha, g))
            .collect();
        orb.sort_unstable();
        orb.dedup();
        orb
    }

    /// Closure of a generating set, sorted.
    pub fn subgroup_closure(&self, gens: &[ElemId]) -> Vec<ElemId> {
        let mut in_set = vec![false; self.size()];
        in_set[0] = true;
        let mut stack: Vec<ElemId> = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !in_set[y] {
                        in_set[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        (0..self.size()).filter(|&x| in_set[x]).collect()
    }

    /// p-regular structure: the subset of elements of order prime to p and
    /// its conjugacy classes, plus the factorization rot_order = l·p^t.
    pub fn pregular(&self, p: u32) -> Result<PRegularData> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut l = self.rot_order;
        let mut t = 0;
        while l % p == 0 {
            l /= p;
            t += 1;
        }
        let set: Vec<ElemId> = (0..self.size())
            .filter(|&g| self.orders[g] % p != 0)
            .collect();
        let classes: Vec<Vec<ElemId>> = self
            .classes
            .iter()
            .filter(|c| self.orders[c[0]] % p != 0)
            .cloned()
            .collect();
        Ok(PRegularData { p, t, l, set, classes })
    }

    pub fn render_elem(&self, g: ElemId) -> String {
        let e = self.elems[g];
        let (gen_r, gen_f) = match self.family {
            Family::Semidihedral => ("a", "b"),
            Family::Dihedral => ("r", "s"),
        };
        match (e.flip, e.rot) {
            (false, 0) => "1".to_string(),
            (false, k) => format!("{gen_r}^{k}"),
            (true, 0) => gen_f.to_string(),
            (true, k) => format!("{gen_f}.{gen_r}^{k}"),
        }
    }
}

pub struct PRegularData {
    pub p: u32,
    pub t: u32,
    pub l: u32,
    pub set: Vec<ElemId>,
    pub classes: Vec<Vec<ElemId>>,
}

impl PRegularData {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Expected p-regular class counts and sizes for SD_{8n} from the case
/// analysis over the parity of n; serves as a conformance oracle against
/// the generic order-based computation.
pub fn sd_pregular_expected(n: u32, p: u32) -> Result<(usize, Vec<usize>)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut l = 4 * n;
    while l % p == 0 {
        l /= p;
    }
    let mut sizes: Vec<usize> = Vec::new();
    if p == 2 {
        sizes.push(1);
        for _ in 0..(l - 1) / 2 {
            sizes.push(2);
        }
    } else if n % 2 == 0 {
        sizes.extend([1, 1]);
        for _ in 0..l / 4 - 1 {
            sizes.push(2);
        }
        for _ in 0..l / 8 + l / 8 {
            sizes.push(2);
        }
        sizes.extend([2 * n as usize, 2 * n as usize]);
    } else {
        sizes.extend([1, 1, 1, 1]);
        for _ in 0..l / 4 - 1 {
            sizes.push(2);
        }
        for _ in 0..(l - 4) / 8 + (l - 4) / 8 {
            sizes.push(2);
        }
        sizes.extend([n as usize; 4]);
    }
    sizes.sort_unstable();
    Ok((sizes.len(), sizes))
}
