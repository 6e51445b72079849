//! The verification sweep: closed-form criteria versus brute force over a
//! parameter grid, with structured discrepancy records.
//!
//! Every grid point is independent; the sweep runs them through rayon and
//! assembles results in grid order, so output is identical at any
//! parallelism width. Timings are recorded per point but excluded from
//! the deterministic report body.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::characters::{brauer_table, CharRow};
use crate::cyclotomic::is_prime;
use crate::groups::{build_group, Action, Family, GroupCtx};
use crate::polyspace::Multidegree;
use crate::report;
use crate::tensorspace::TensorIndex;
use crate::verdicts::{self, GlobalObasis};
use crate::{guards, Error, Result};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub sd_params: Vec<u32>,
    pub dihedral_params: Vec<u32>,
    pub primes: Vec<u32>,
    /// Polynomial degrees; the support bound equals the degree.
    pub degrees: Vec<u16>,
    /// Tensor-side dim V values; empty disables the tensor lane.
    pub tensor_dims: Vec<u16>,
    pub parallel: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            sd_params: vec![2, 3],
            dihedral_params: vec![6, 8, 12],
            primes: vec![2, 3, 5],
            degrees: vec![1, 2],
            tensor_dims: vec![1, 2, 3],
            parallel: true,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        for &p in &self.primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        for &d in &self.degrees {
            if d == 0 || d as u32 > guards::MAX_DEGREE {
                return Err(Error::GuardRefused(format!("degree {d} out of range")));
            }
        }
        for &n in &self.sd_params {
            if 8 * n > guards::MAX_GROUP_ORDER {
                return Err(Error::GuardRefused(format!("SD_{{8n}} with n = {n} beyond desk scale")));
            }
        }
        for &m in &self.dihedral_params {
            if 2 * m > guards::MAX_GROUP_ORDER {
                return Err(Error::GuardRefused(format!("D_{m} beyond desk scale")));
            }
        }
        for &dv in &self.tensor_dims {
            if dv == 0 {
                return Err(Error::GuardRefused("dim V = 0".into()));
            }
            let worst_points = self
                .sd_params
                .iter()
                .map(|&n| 4 * n)
                .chain(self.dihedral_params.iter().copied())
                .max()
                .unwrap_or(0);
            if (dv as u64).checked_pow(worst_points).map_or(true, |s| s > guards::MAX_TENSOR_SPACE) {
                return Err(Error::GuardRefused(format!(
                    "tensor space {dv}^{worst_points} beyond desk scale"
                )));
            }
        }
        if self.sd_params.is_empty() && self.dihedral_params.is_empty() {
            return Err(Error::GuardRefused("no group families selected".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sd_params": self.sd_params,
            "dihedral_params": self.dihedral_params,
            "primes": self.primes,
            "degrees": self.degrees,
            "tensor_dims": self.tensor_dims,
        })
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct GridKey {
    pub family: &'static str,
    pub param: u32,
    pub p: u32,
    pub label: String,
    pub side: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u16>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimv: Option<u16>,
}

#[derive(Clone, Debug)]
pub struct PointResult {
    pub grid: GridKey,
    pub closed: bool,
    pub brute: bool,
    pub witness: Option<Vec<String>>,
    pub millis: u128,
}

impl PointResult {
    pub fn agree(&self) -> bool {
        self.closed == self.brute
    }
}

/// Structured record of a closed-form vs brute-force disagreement,
/// carrying the Gram matrix of the first failing orbital subspace.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub grid: GridKey,
    pub closed_form: bool,
    pub brute_force: bool,
    pub witness: Option<Vec<String>>,
    pub gram: Value,
}

impl Discrepancy {
    pub fn to_json(&self) -> Value {
        json!({
            "grid": serde_json::to_value(&self.grid).expect("grid serializes"),
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "witness": self.witness,
            "gram": self.gram,
        })
    }
}

pub struct SweepReport {
    pub points: Vec<PointResult>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SweepReport {
    pub fn disagreements(&self) -> usize {
        self.discrepancies.len()
    }

    /// 0 on full agreement, 2 when discrepancies were found.
    pub fn exit_code(&self) -> i32 {
        if self.discrepancies.is_empty() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self, config: &SweepConfig, with_timings: bool) -> Value {
        let points: Vec<Value> = self
            .points
            .iter()
            .map(|pt| {
                let mut v = json!({
                    "grid": serde_json::to_value(&pt.grid).expect("grid serializes"),
                    "closed_form": pt.closed,
                    "brute_force": pt.brute,
                    "agree": pt.agree(),
                    "witness": pt.witness,
                });
                if with_timings {
                    v["millis"] = json!(pt.millis);
                }
                v
            })
            .collect();
        json!({
            "config": config.to_json(),
            "summary": {
                "total_points": self.points.len(),
                "discrepancies": self.disagreements(),
            },
            "points": points,
            "discrepancies": self.discrepancies.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
        })
    }
}

struct Task {
    family: Family,
    param: u32,
    p: u32,
}

/// Runs the full agreement sweep. Deterministic: results are assembled in
/// grid order regardless of the parallelism width.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let mut tasks = Vec::new();
    for (&family, params) in [
        (&Family::Semidihedral, &config.sd_params),
        (&Family::Dihedral, &config.dihedral_params),
    ] {
        for &param in params {
            for &p in &config.primes {
                tasks.push(Task { family, param, p });
            }
        }
    }

    let run = |task: &Task| -> Result<(Vec<PointResult>, Vec<Discrepancy>)> { run_task(task, config) };
    let outcomes: Vec<Result<(Vec<PointResult>, Vec<Discrepancy>)>> = if config.parallel {
        tasks.par_iter().map(run).collect()
    } else {
        tasks.iter().map(run).collect()
    };

    let mut points = Vec::new();
    let mut discrepancies = Vec::new();
    for outcome in outcomes {
        let (pts, ds) = outcome?;
        points.extend(pts);
        discrepancies.extend(ds);
    }
    Ok(SweepReport {
        points,
        discrepancies,
    })
}

fn run_task(task: &Task, config: &SweepConfig) -> Result<(Vec<PointResult>, Vec<Discrepancy>)> {
    let family_tag = report::family_tag(task.family);
    let ctx_poly = build_group(task.family, task.param, Action::Regular)?;
    let table_poly = brauer_table(&ctx_poly, task.p)?;
    let mut points = Vec::new();
    let mut discrepancies = Vec::new();

    for row in &table_poly.rows {
        let closed = verdicts::criterion_poly(&ctx_poly, &table_poly, row)?;
        for &d in &config.degrees {
            let start = std::time::Instant::now();
            let global = verdicts::global_obasis(&ctx_poly, row, d, d as usize)?;
            let grid = GridKey {
                family: family_tag,
                param: task.param,
                p: task.p,
                label: row.label.to_string(),
                side: "poly",
                d: Some(d),
                dimv: None,
            };
            let witness = render_witness(&ctx_poly, &global);
            let pt = PointResult {
                grid: grid.clone(),
                closed: closed.exists,
                brute: global.verdict.exists,
                witness: witness.clone(),
                millis: start.elapsed().as_millis(),
            };
            if !pt.agree() {
                discrepancies.push(poly_discrepancy(&ctx_poly, row, &global, grid.clone(), closed.exists, witness)?);
            }
            points.push(pt);
        }
    }

    if !config.tensor_dims.is_empty() {
        let ctx_tensor = build_group(task.family, task.param, Action::Natural)?;
        let table_tensor = brauer_table(&ctx_tensor, task.p)?;
        for row in &table_tensor.rows {
            for &dimv in &config.tensor_dims {
                let start = std::time::Instant::now();
                let closed = verdicts::criterion_tensor(&ctx_tensor, &table_tensor, row, dimv)?;
                let global = verdicts::tensor_global_obasis(&ctx_tensor, row, dimv)?;
                let grid = GridKey {
                    family: family_tag,
                    param: task.param,
                    p: task.p,
                    label: row.label.to_string(),
                    side: "tensor",
                    d: None,
                    dimv: Some(dimv),
                };
                let witness = render_witness(&ctx_tensor, &global);
                let pt = PointResult {
                    grid: grid.clone(),
                    closed: closed.exists,
                    brute: global.verdict.exists,
                    witness: witness.clone(),
                    millis: start.elapsed().as_millis(),
                };
                if !pt.agree() {
                    discrepancies.push(tensor_discrepancy(
                        &ctx_tensor,
                        row,
                        &global,
                        grid.clone(),
                        closed.exists,
                        witness,
                    )?);
                }
                points.push(pt);
            }
        }
    }
    Ok((points, discrepancies))
}

fn render_witness(ctx: &GroupCtx, global: &GlobalObasis) -> Option<Vec<String>> {
    global
        .verdict
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&s| ctx.render_elem(s)).collect())
}

fn failing_orbit(global: &GlobalObasis) -> Option<&Vec<u16>> {
    global
        .orbits
        .iter()
        .find(|(_, v)| !v.exists)
        .map(|(alpha, _)| alpha)
}

fn poly_discrepancy(
    ctx: &GroupCtx,
    row: &CharRow,
    global: &GlobalObasis,
    grid: GridKey,
    closed: bool,
    witness: Option<Vec<String>>,
) -> Result<Discrepancy> {
    let alpha = failing_orbit(global)
        .cloned()
        .unwrap_or_else(|| global.orbits.first().map(|(a, _)| a.clone()).unwrap_or_default());
    let md = Multidegree(alpha.clone());
    let (sigmas, gram) = verdicts::orbital_gram_poly(ctx, row, &md)?;
    let rank = crate::orbital::rank(&gram);
    let gram_json = report::gram_json(ctx, "poly", &row.label.to_string(), &alpha, &sigmas, &gram, rank);
    Ok(Discrepancy {
        grid,
        closed_form: closed,
        brute_force: global.verdict.exists,
        witness,
        gram: gram_json,
    })
}

fn tensor_discrepancy(
    ctx: &GroupCtx,
    row: &CharRow,
    global: &GlobalObasis,
    grid: GridKey,
    closed: bool,
    witness: Option<Vec<String>>,
) -> Result<Discrepancy> {
    let alpha = failing_orbit(global)
        .cloned()
        .unwrap_or_else(|| global.orbits.first().map(|(a, _)| a.clone()).unwrap_or_default());
    let ti = TensorIndex(alpha.clone());
    let (sigmas, gram) = verdicts::orbital_gram_tensor(ctx, row, &ti)?;
    let rank = crate::orbital::rank(&gram);
    let gram_json = report::gram_json(ctx, "tensor", &row.label.to_string(), &alpha, &sigmas, &gram, rank);
    Ok(Discrepancy {
        grid,
        closed_form: closed,
        brute_force: global.verdict.exists,
        witness,
        gram: gram_json,
    })
}

/// Consistency of the two closed forms as pure integer arithmetic:
/// 4 | l/gcd(l,h) vs 4h₂ | l·p^t (h ranging over p^t-multiples when t > 0).
pub fn criterion_forms_agree(l: u64, h: u64, pt: u64) -> bool {
    verdicts::lprime_divisible_by_four(l, h) == verdicts::four_h2_divides(l * pt, h)
}
