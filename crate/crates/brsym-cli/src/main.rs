//! brsym: tables, Gram matrices and o-basis verdicts for Brauer symmetry
//! classes of the semidihedral and dihedral families.
//!
//! Exit codes: 0 success/agreement, 1 usage error, 2 discrepancy found,
//! 3 desk-scale guard refusal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use brsym::characters::{brauer_table, ordinary_table, BaseSymbol, CharRow, CharTable, Label};
use brsym::groups::{build_group, Action, Family, GroupCtx};
use brsym::polyspace::Multidegree;
use brsym::report;
use brsym::sweep::{run_sweep, SweepConfig};
use brsym::tensorspace::TensorIndex;
use brsym::verdicts;
use brsym::Error;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DISCREPANCY: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "brsym",
    about = "Brauer symmetry classes of polynomials and tensors: exact tables, Gram matrices, o-basis verdicts",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Group order, p-regular set and p-regular classes (with the
    /// class-count conformance check for the semidihedral family)
    Group(GroupArgs),
    /// Ordinary character table and the irreducible Brauer characters
    Chars(CharsArgs),
    /// Exact Gram matrix of one orbital subspace
    Gram(GramArgs),
    /// Closed-form vs brute-force o-basis verdict for one character
    Verdict(VerdictArgs),
    /// Full agreement sweep between closed forms and brute force
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sd,
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionArg {
    Regular,
    Natural,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Poly,
    Tensor,
}

#[derive(Args)]
struct GroupSelect {
    /// Group family: sd (semidihedral SD_{8n}) or d (dihedral D_m)
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Parameter n for SD_{8n} (n >= 2)
    #[arg(long)]
    n: Option<u32>,
    /// Parameter m for D_m (m >= 3)
    #[arg(long)]
    m: Option<u32>,
}

impl GroupSelect {
    fn resolve(&self) -> Result<(Family, u32), String> {
        match self.family {
            FamilyArg::Sd => self
                .n
                .map(|n| (Family::Semidihedral, n))
                .ok_or_else(|| "--family sd requires --n".to_string()),
            FamilyArg::D => self
                .m
                .map(|m| (Family::Dihedral, m))
                .ok_or_else(|| "--family d requires --m".to_string()),
        }
    }
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    select: GroupSelect,
    /// Prime p for the p-regular structure
    #[arg(long)]
    p: u32,
    #[arg(long)]
    json: bool,
    /// Directory for report files
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CharsArgs {
    #[command(flatten)]
    select: GroupSelect,
    /// Prime p; when present the IBr table is included
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GramArgs {
    #[command(flatten)]
    select: GroupSelect,
    /// Prime p; when present the character is a Brauer row
    #[arg(long)]
    p: Option<u32>,
    /// Character label, e.g. chi'0, psihat2, chi3 (hat accepted and
    /// implied whenever --p is given)
    #[arg(long = "char")]
    character: String,
    /// Index tuple: the pattern d0 for (d,0,...,0) or an explicit comma
    /// list (tensor side: 1-based entries)
    #[arg(long)]
    alpha: String,
    /// Weight d used by the d0 pattern
    #[arg(long, default_value_t = 1)]
    d: u16,
    /// Permutation action (default: regular for poly, natural for tensor)
    #[arg(long, value_enum)]
    action: Option<ActionArg>,
    #[arg(long, value_enum, default_value_t = SideArg::Poly)]
    side: SideArg,
    /// dim V for the tensor side
    #[arg(long)]
    dimv: Option<u16>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerdictArgs {
    #[command(flatten)]
    select: GroupSelect,
    #[arg(long)]
    p: u32,
    #[arg(long = "char")]
    character: String,
    /// Polynomial degree for the brute-force side
    #[arg(long, default_value_t = 1)]
    d: u16,
    /// Run the tensor-side verdict at this dim V instead of the
    /// polynomial one
    #[arg(long)]
    dimv: Option<u16>,
    #[arg(long, value_enum)]
    action: Option<ActionArg>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Config file with key = value lines (keys: sd, dihedral, primes,
    /// degrees, dimvs, parallel); flags below override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// SD parameters, comma separated
    #[arg(long)]
    sd: Option<String>,
    /// Dihedral parameters, comma separated
    #[arg(long)]
    dihedral: Option<String>,
    #[arg(long)]
    primes: Option<String>,
    #[arg(long)]
    degrees: Option<String>,
    /// Tensor dim V list; pass an empty string to disable the tensor lane
    #[arg(long)]
    dimvs: Option<String>,
    /// Run grid points sequentially
    #[arg(long)]
    serial: bool,
    #[arg(long)]
    json: bool,
    /// Directory for the summary file (includes per-point timings)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.cmd {
        Cmd::Group(a) => cmd_group(a),
        Cmd::Chars(a) => cmd_chars(a),
        Cmd::Gram(a) => cmd_gram(a),
        Cmd::Verdict(a) => cmd_verdict(a),
        Cmd::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg.text);
            ExitCode::from(msg.code)
        }
    }
}

struct Failure {
    code: u8,
    text: String,
}

impl Failure {
    fn usage(text: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, text: text.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardRefused(_) => EXIT_GUARD,
            _ => EXIT_USAGE,
        };
        Failure { code, text: e.to_string() }
    }
}

impl From<String> for Failure {
    fn from(text: String) -> Self {
        Failure::usage(text)
    }
}

type CmdResult = Result<u8, Failure>;

fn parse_label(ctx: &GroupCtx, raw: &str) -> Result<Label, Failure> {
    let s = raw.trim().to_ascii_lowercase();
    let (base, rest) = if let Some(r) = s.strip_prefix("chi") {
        (BaseSymbol::Chi, r)
    } else if let Some(r) = s.strip_prefix("psi") {
        (BaseSymbol::Psi, r)
    } else {
        return Err(Failure::usage(format!("cannot parse character label '{raw}'")));
    };
    let rest = rest.strip_prefix("hat").unwrap_or(rest);
    let rest = rest.strip_prefix('\'').unwrap_or(rest);
    let index: u32 = rest
        .parse()
        .map_err(|_| Failure::usage(format!("cannot parse character label '{raw}'")))?;
    // the primed alphabet is determined by the family and parity of n
    let primed = ctx.family == Family::Semidihedral && ctx.param % 2 == 1;
    Ok(Label {
        base,
        primed,
        index,
    })
}

fn parse_alpha_poly(ctx: &GroupCtx, raw: &str, d: u16) -> Result<Multidegree, Failure> {
    let s = raw.trim();
    if s == "d0" {
        return Ok(Multidegree::concentrated(ctx, d));
    }
    let entries = parse_u16_list(s)?;
    if entries.len() > ctx.points {
        return Err(Failure::usage(format!(
            "alpha has {} entries but the action has {} points",
            entries.len(),
            ctx.points
        )));
    }
    let mut full = entries;
    full.resize(ctx.points, 0);
    Multidegree::new(ctx, full).map_err(Into::into)
}

fn parse_alpha_tensor(ctx: &GroupCtx, raw: &str, dimv: u16) -> Result<TensorIndex, Failure> {
    let entries = parse_u16_list(raw.trim())?;
    if entries.len() != ctx.points {
        return Err(Failure::usage(format!(
            "tensor alpha needs exactly {} entries (1-based), got {}",
            ctx.points,
            entries.len()
        )));
    }
    if entries.iter().any(|&e| e == 0) {
        return Err(Failure::usage("tensor alpha entries are 1-based".to_string()));
    }
    let zero_based: Vec<u16> = entries.iter().map(|&e| e - 1).collect();
    TensorIndex::new(ctx, dimv, zero_based).map_err(Into::into)
}

fn parse_u16_list(s: &str) -> Result<Vec<u16>, Failure> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u16>()
                .map_err(|_| Failure::usage(format!("invalid list entry '{tok}'")))
        })
        .collect()
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Failure::usage(format!("invalid list entry '{tok}'")))
        })
        .collect()
}

fn write_out(dir: &PathBuf, name: &str, content: &str) -> Result<(), Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::usage(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, content)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

fn cmd_group(args: GroupArgs) -> CmdResult {
    let (family, param) = args.select.resolve()?;
    let ctx = build_group(family, param, Action::Regular)?;
    let pr = ctx.pregular(args.p)?;
    let conformance = match family {
        Family::Semidihedral => {
            let (count, sizes) = brsym::groups::sd_pregular_expected(param, args.p)?;
            let matches = pr.class_count() == count && pr.class_sizes() == sizes;
            Some(json!({
                "expected_count": count,
                "expected_sizes": sizes,
                "matches": matches,
            }))
        }
        Family::Dihedral => None,
    };
    let conf_ok = conformance
        .as_ref()
        .map(|c| c["matches"] == json!(true))
        .unwrap_or(true);
    let v = report::group_json(&ctx, &pr, conformance);
    let rendered = serde_json::to_string_pretty(&v).expect("report serializes");
    if let Some(dir) = &args.out {
        write_out(dir, "group.json", &rendered)?;
    }
    if args.json {
        println!("{rendered}");
    } else {
        println!(
            "{} param {}: order {}, p = {}, rot_order = l*p^t with l = {}, t = {}",
            report::family_tag(family),
            param,
            ctx.order,
            args.p,
            pr.l,
            pr.t
        );
        println!("p-regular set size: {}", pr.set.len());
        println!("p-regular classes ({}):", pr.class_count());
        for class in &pr.classes {
            let names: Vec<String> = class.iter().map(|&g| ctx.render_elem(g)).collect();
            println!("  [{}] size {}: {}", names[0], class.len(), names.join(" "));
        }
        if family == Family::Semidihedral {
            println!("class-count conformance: {}", if conf_ok { "ok" } else { "MISMATCH" });
        }
    }
    Ok(if conf_ok { EXIT_OK } else { EXIT_DISCREPANCY })
}

fn cmd_chars(args: CharsArgs) -> CmdResult {
    let (family, param) = args.select.resolve()?;
    let ctx = build_group(family, param, Action::Regular)?;
    let ord = ordinary_table(&ctx);
    let br = args.p.map(|p| brauer_table(&ctx, p)).transpose()?;
    let mut v = json!({ "ordinary": report::table_json(&ctx, &ord) });
    if let Some(b) = &br {
        v["brauer"] = report::table_json(&ctx, b);
    }
    let rendered = serde_json::to_string_pretty(&v).expect("report serializes");
    if let Some(dir) = &args.out {
        write_out(dir, "chars.json", &rendered)?;
        write_out(dir, "chars_ordinary.csv", &report::table_csv(&ctx, &ord))?;
        if let Some(b) = &br {
            write_out(dir, &format!("chars_brauer_p{}.csv", args.p.unwrap()), &report::table_csv(&ctx, b))?;
        }
    }
    if args.json {
        println!("{rendered}");
    } else {
        print!("{}", report::table_csv(&ctx, &ord));
        if let Some(b) = &br {
            println!("--- IBr (p = {}): {} rows ---", args.p.unwrap(), b.rows.len());
            print!("{}", report::table_csv(&ctx, b));
        }
    }
    Ok(EXIT_OK)
}

fn lookup_row<'t>(table: &'t CharTable, label: Label) -> Result<&'t CharRow, Failure> {
    table.row(label).map_err(Into::into)
}

fn cmd_gram(args: GramArgs) -> CmdResult {
    let (family, param) = args.select.resolve()?;
    let action = match (args.action, args.side) {
        (Some(ActionArg::Regular), _) => Action::Regular,
        (Some(ActionArg::Natural), _) => Action::Natural,
        (None, SideArg::Poly) => Action::Regular,
        (None, SideArg::Tensor) => Action::Natural,
    };
    let ctx = build_group(family, param, action)?;
    let label = parse_label(&ctx, &args.character)?;
    let ord;
    let brt;
    let (table, row): (&CharTable, &CharRow) = match args.p {
        Some(p) => {
            brt = brauer_table(&ctx, p)?;
            (&brt, lookup_row(&brt, label)?)
        }
        None => {
            ord = ordinary_table(&ctx);
            (&ord, lookup_row(&ord, label)?)
        }
    };
    let _ = table;
    let (side, rendered_alpha, sigmas, gram) = match args.side {
        SideArg::Poly => {
            let alpha = parse_alpha_poly(&ctx, &args.alpha, args.d)?;
            let (sigmas, gram) = verdicts::orbital_gram_poly(&ctx, row, &alpha)?;
            ("poly", alpha.0.clone(), sigmas, gram)
        }
        SideArg::Tensor => {
            let dimv = args.dimv.ok_or_else(|| Failure::usage("--side tensor requires --dimv"))?;
            let alpha = parse_alpha_tensor(&ctx, &args.alpha, dimv)?;
            let (sigmas, gram) = verdicts::orbital_gram_tensor(&ctx, row, &alpha)?;
            ("tensor", alpha.0.clone(), sigmas, gram)
        }
    };
    let rank = brsym::orbital::rank(&gram);
    let v = report::gram_json(&ctx, side, &row.label.to_string(), &rendered_alpha, &sigmas, &gram, rank);
    let rendered = serde_json::to_string_pretty(&v).expect("report serializes");
    if let Some(dir) = &args.out {
        write_out(dir, "gram.json", &rendered)?;
        write_out(dir, "gram.csv", &report::gram_csv(&ctx, &sigmas, &gram))?;
    }
    if args.json {
        println!("{rendered}");
    } else {
        println!(
            "{} {} on {:?}: {}x{} exact Gram of the orbital at alpha = {:?}, rank {}",
            report::family_tag(family),
            row.label,
            action,
            sigmas.len(),
            sigmas.len(),
            rendered_alpha,
            rank
        );
        print!("{}", report::gram_csv(&ctx, &sigmas, &gram));
    }
    Ok(EXIT_OK)
}

fn cmd_verdict(args: VerdictArgs) -> CmdResult {
    let (family, param) = args.select.resolve()?;
    let (closed, brute, ctx) = match args.dimv {
        None => {
            let action = match args.action {
                Some(ActionArg::Natural) => Action::Natural,
                _ => Action::Regular,
            };
            let ctx = build_group(family, param, action)?;
            let table = brauer_table(&ctx, args.p)?;
            let label = parse_label(&ctx, &args.character)?;
            let row = lookup_row(&table, label)?;
            let closed = verdicts::criterion_poly(&ctx, &table, row)?;
            let brute = verdicts::global_obasis(&ctx, row, args.d, args.d as usize)?;
            (closed, brute, ctx)
        }
        Some(dimv) => {
            let action = match args.action {
                Some(ActionArg::Regular) => Action::Regular,
                _ => Action::Natural,
            };
            let ctx = build_group(family, param, action)?;
            let table = brauer_table(&ctx, args.p)?;
            let label = parse_label(&ctx, &args.character)?;
            let row = lookup_row(&table, label)?;
            let closed = verdicts::criterion_tensor(&ctx, &table, row, dimv)?;
            let brute = verdicts::tensor_global_obasis(&ctx, row, dimv)?;
            (closed, brute, ctx)
        }
    };
    let witness: Option<Vec<String>> = brute
        .verdict
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&s| ctx.render_elem(s)).collect());
    let agree = closed.exists == brute.verdict.exists;
    let v = json!({
        "closed_form": closed.exists,
        "brute_force": brute.verdict.exists,
        "witness": witness,
        "agree": agree,
    });
    if args.json {
        println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
    } else {
        println!(
            "closed_form: {}, brute_force: {}, witness: {}",
            closed.exists,
            brute.verdict.exists,
            witness
                .as_ref()
                .map(|w| w.join(" "))
                .unwrap_or_else(|| "null".to_string())
        );
    }
    Ok(if agree { EXIT_OK } else { EXIT_DISCREPANCY })
}

fn parse_config_file(path: &PathBuf) -> Result<SweepConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let mut config = SweepConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Failure::usage(format!(
                "{}:{}: expected key = value",
                path.display(),
                lineno + 1
            )));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "sd" => config.sd_params = parse_u32_list(value)?,
            "dihedral" => config.dihedral_params = parse_u32_list(value)?,
            "primes" => config.primes = parse_u32_list(value)?,
            "degrees" => {
                config.degrees = parse_u16_list(value)?;
            }
            "dimvs" => {
                config.tensor_dims = parse_u16_list(value)?;
            }
            "parallel" => {
                config.parallel = value
                    .parse()
                    .map_err(|_| Failure::usage(format!("invalid boolean '{value}'")))?;
            }
            other => {
                return Err(Failure::usage(format!(
                    "{}:{}: unknown config key '{other}'",
                    path.display(),
                    lineno + 1
                )));
            }
        }
    }
    Ok(config)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let mut config = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => SweepConfig::default(),
    };
    if let Some(s) = &args.sd {
        config.sd_params = parse_u32_list(s)?;
    }
    if let Some(s) = &args.dihedral {
        config.dihedral_params = parse_u32_list(s)?;
    }
    if let Some(s) = &args.primes {
        config.primes = parse_u32_list(s)?;
    }
    if let Some(s) = &args.degrees {
        config.degrees = parse_u16_list(s)?;
    }
    if let Some(s) = &args.dimvs {
        config.tensor_dims = parse_u16_list(s)?;
    }
    if args.serial {
        config.parallel = false;
    }
    // config problems are guard refusals: reject before any work
    config.validate().map_err(|e| Failure {
        code: EXIT_GUARD,
        text: e.to_string(),
    })?;
    let report = run_sweep(&config)?;
    if let Some(dir) = &args.out {
        let with_timings = report.to_json(&config, true);
        write_out(
            dir,
            "verify_summary.json",
            &serde_json::to_string_pretty(&with_timings).expect("serializes"),
        )?;
    }
    if args.json {
        let v = report.to_json(&config, false);
        println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
    } else {
        println!(
            "grid points: {}, discrepancies: {}",
            report.points.len(),
            report.disagreements()
        );
        for d in &report.discrepancies {
            println!(
                "DISCREPANCY {} param {} p {} {} [{}{}]: closed_form {} vs brute_force {}",
                d.grid.family,
                d.grid.param,
                d.grid.p,
                d.grid.label,
                d.grid.d.map(|d| format!("d={d}")).unwrap_or_default(),
                d.grid.dimv.map(|v| format!("dimV={v}")).unwrap_or_default(),
                d.closed_form,
                d.brute_force
            );
        }
    }
    Ok(report.exit_code() as u8)
}
