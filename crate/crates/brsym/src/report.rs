//! Report rendering: exact values as JSON, floats only as annotated
//! lossy companions.
//!
//! The exact serialization of a cyclotomic number is
//! `{"order": N, "terms": [[k, "num/den"], ...]}` with terms sorted by
//! exponent. serde_json's default map is ordered, so emitted objects have
//! stable key order and reports are byte-identical across runs.

use num::complex::Complex64;
use serde_json::{json, Value};

use crate::characters::{CharTable, TableKind};
use crate::cyclotomic::CycNum;
use crate::groups::{Family, GroupCtx};

pub fn cyc_exact_json(c: &CycNum) -> Value {
    let terms: Vec<Value> = c
        .terms()
        .map(|(k, r)| json!([k, format!("{}/{}", r.numer(), r.denom())]))
        .collect();
    json!({ "order": c.order(), "terms": terms })
}

pub fn float_lossy_json(c: &CycNum) -> Value {
    let v = c.to_float();
    json!({ "re": v.re, "im": v.im, "lossy": true })
}

pub fn cyc_json(c: &CycNum) -> Value {
    json!({ "exact": cyc_exact_json(c), "float_lossy": float_lossy_json(c) })
}

/// 12-significant-digit rendering of the numeric value, for CSV cells.
pub fn render_float(c: &CycNum) -> String {
    let Complex64 { re, im } = c.to_float();
    if im == 0.0 {
        format!("{re:.11e}")
    } else {
        format!("{re:.11e}{}{:.11e}i", if im < 0.0 { "-" } else { "+" }, im.abs())
    }
}

pub fn family_tag(family: Family) -> &'static str {
    match family {
        Family::Semidihedral => "SD",
        Family::Dihedral => "D",
    }
}

/// Group/p-regular report in the documented schema.
pub fn group_json(ctx: &GroupCtx, pr: &crate::groups::PRegularData, conformance: Option<Value>) -> Value {
    let classes: Vec<Vec<String>> = pr
        .classes
        .iter()
        .map(|c| c.iter().map(|&g| ctx.render_elem(g)).collect())
        .collect();
    let mut v = json!({
        "family": family_tag(ctx.family),
        "order": ctx.order,
        "p": pr.p,
        "l": pr.l,
        "t": pr.t,
        "pregular_classes": classes,
        "pregular_set": pr.set.iter().map(|&g| ctx.render_elem(g)).collect::<Vec<_>>(),
    });
    let key = match ctx.family {
        Family::Semidihedral => "n",
        Family::Dihedral => "m",
    };
    v[key] = json!(ctx.param);
    if let Some(c) = conformance {
        v["prop_conformance"] = c;
    }
    v
}

/// Character table dump: classes, then one row per character with exact
/// and lossy-float values.
pub fn table_json(ctx: &GroupCtx, table: &CharTable) -> Value {
    let (kind, classes): (Value, Vec<&Vec<usize>>) = match table.kind {
        TableKind::Ordinary => (json!("ordinary"), ctx.conjugacy_classes().iter().collect()),
        TableKind::Brauer { p } => {
            let pr = ctx.pregular(p).expect("table exists, p already validated");
            (
                json!({"brauer": {"p": p, "l": table.l, "t": table.t}}),
                ctx.conjugacy_classes()
                    .iter()
                    .filter(|c| pr.classes.contains(c))
                    .collect(),
            )
        }
    };
    let class_json: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "rep": ctx.render_elem(c[0]),
                "size": c.len(),
            })
        })
        .collect();
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let values: Vec<Value> = classes
                .iter()
                .map(|c| cyc_json(row.func.eval(c[0]).expect("class inside domain")))
                .collect();
            json!({
                "label": row.label.to_string(),
                "degree": row.degree,
                "h": row.h,
                "values": values,
            })
        })
        .collect();
    json!({
        "family": family_tag(ctx.family),
        "param": ctx.param,
        "order": ctx.order,
        "kind": kind,
        "classes": class_json,
        "rows": rows,
    })
}

/// CSV rendering of a character table; floats only, flagged lossy in the
/// leading comment line.
pub fn table_csv(ctx: &GroupCtx, table: &CharTable) -> String {
    let classes: Vec<&Vec<usize>> = match table.kind {
        TableKind::Ordinary => ctx.conjugacy_classes().iter().collect(),
        TableKind::Brauer { p } => {
            let pr = ctx.pregular(p).expect("validated");
            ctx.conjugacy_classes()
                .iter()
                .filter(|c| pr.classes.contains(c))
                .collect()
        }
    };
    let mut out = String::from("# lossy float rendering (12 significant digits); exact values in the JSON dump\n");
    out.push_str("label,degree");
    for c in &classes {
        out.push_str(&format!(",[{}]", ctx.render_elem(c[0])));
    }
    out.push('\n');
    for row in &table.rows {
        out.push_str(&format!("{},{}", row.label, row.degree));
        for c in &classes {
            out.push_str(&format!(",{}", render_float(row.func.eval(c[0]).unwrap())));
        }
        out.push('\n');
    }
    out
}

/// Gram matrix export with exact entries and lossy float companions.
pub fn gram_json(
    ctx: &GroupCtx,
    side: &str,
    label: &str,
    alpha: &[u16],
    sigmas: &[usize],
    matrix: &[Vec<CycNum>],
    rank: usize,
) -> Value {
    json!({
        "family": family_tag(ctx.family),
        "param": ctx.param,
        "action": format!("{:?}", ctx.action).to_lowercase(),
        "side": side,
        "char": label,
        "alpha": alpha,
        "sigmas": sigmas.iter().map(|&s| ctx.render_elem(s)).collect::<Vec<_>>(),
        "rank": rank,
        "entries_exact": matrix
            .iter()
            .map(|row| row.iter().map(cyc_exact_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "entries_float_lossy": matrix
            .iter()
            .map(|row| row.iter().map(|c| render_float(c)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn gram_csv(ctx: &GroupCtx, sigmas: &[usize], matrix: &[Vec<CycNum>]) -> String {
    let mut out = String::from("# lossy float rendering (12 significant digits); exact values in the JSON export\n");
    out.push_str("sigma");
    for &s in sigmas {
        out.push_str(&format!(",{}", ctx.render_elem(s)));
    }
    out.push('\n');
    for (i, row) in matrix.iter().enumerate() {
        out.push_str(&ctx.render_elem(sigmas[i]));
        for v in row {
            out.push_str(&format!(",{}", render_float(v)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::ordinary_table;
    use crate::groups::{build_group, Action};

    #[test]
    fn cyc_json_schema() {
        let c = &CycNum::root_of_unity(8, 1) + &CycNum::root_of_unity(8, 7);
        let v = cyc_exact_json(&c);
        assert_eq!(v["order"], 8);
        assert_eq!(v["terms"][0][0], 1);
        assert_eq!(v["terms"][0][1], "1/1");
        let f = float_lossy_json(&c);
        assert_eq!(f["lossy"], true);
    }

    #[test]
    fn float_rendering_has_12_digits() {
        let c = &CycNum::root_of_unity(8, 1) + &CycNum::root_of_unity(8, 7);
        let s = render_float(&c);
        assert!(s.starts_with("1.41421356237"), "{s}");
    }

    #[test]
    fn group_json_round() {
        let ctx = build_group(Family::Semidihedral, 3, Action::Regular).unwrap();
        let pr = ctx.pregular(3).unwrap();
        let v = group_json(&ctx, &pr, None);
        assert_eq!(v["family"], "SD");
        assert_eq!(v["n"], 3);
        assert_eq!(v["order"], 24);
        assert_eq!(v["l"], 4);
        assert_eq!(v["pregular_classes"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn csv_marks_lossy() {
        let ctx = build_group(Family::Dihedral, 4, Action::Regular).unwrap();
        let t = ordinary_table(&ctx);
        let csv = table_csv(&ctx, &t);
        assert!(csv.starts_with("# lossy"));
        assert!(csv.lines().count() > t.rows.len());
    }
}
