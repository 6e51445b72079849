use brsym::characters::{brauer_table, Label};
use brsym::groups::{build_group, Action, Family};
use brsym::orbital;
use brsym::polyspace::{orbital_generators, Multidegree};

fn main() {
    // the disagreeing case: SD_24 (n=3), p=5 (so p ∤ |G| and Brauer = ordinary),
    // psi'_1, regular action, d = 1, free orbit
    let ctx = build_group(Family::Semidihedral, 3, Action::Regular).unwrap();
    let t = brauer_table(&ctx, 5).unwrap();
    let row = t.row(Label::psi(1, true)).unwrap();
    let alpha = Multidegree::concentrated(&ctx, 1);
    let gens = orbital_generators(&ctx, row, &alpha).unwrap();
    let vecs: Vec<_> = gens.iter().map(|g| g.vec.clone()).collect();
    let gram = orbital::gram(&vecs);
    let rank = orbital::rank(&gram);
    println!("generators: {}, rank (= orbital dim): {}", vecs.len(), rank);
    // which generator pairs are orthogonal? record the group element σ2⁻¹σ1
    let mut zero_diffs = std::collections::BTreeSet::new();
    let mut max_pairwise = 0;
    for i in 0..vecs.len() {
        let mut count = 0;
        for j in 0..vecs.len() {
            if i != j && gram[i][j].is_zero() {
                count += 1;
                let diff = ctx.mul(ctx.inv(gens[j].sigma), gens[i].sigma);
                zero_diffs.insert(ctx.render_elem(diff));
            }
        }
        max_pairwise = max_pairwise.max(count);
    }
    println!("zero-inner-product differences σ2⁻¹σ1: {:?}", zero_diffs);
    // character values on rotations (never zero):
    for r in 0..12 {
        let v = row.func.eval(ctx.elem_id(false, r)).unwrap();
        print!("psi'1(a^{r}) = {}  ", v);
        if r % 4 == 3 { println!(); }
    }
    // largest pairwise-orthogonal set
    let adj: Vec<Vec<bool>> = (0..vecs.len())
        .map(|i| (0..vecs.len()).map(|j| i != j && gram[i][j].is_zero()).collect())
        .collect();
    let mut best = 0;
    for k in (1..=rank).rev() {
        if orbital::find_clique(&adj, k).is_some() {
            best = k;
            break;
        }
    }
    println!("largest pairwise-orthogonal generator set: {best} (need {rank})");
}
