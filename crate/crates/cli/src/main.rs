use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use curvecodes::cache::{cached_enumerate_dual, DualCache};
use curvecodes::classify::{
    compare_against, expected_table_rows, mn_simple_exists, predict_weight_set, reproduce_tables,
    MnWitness, TableRow,
};
use curvecodes::codes::{min_distance_c_from, DistanceMethod, MinDistance};
use curvecodes::curves::{weil_ap_check, x_points, x_singular_points, XPoint};
use curvecodes::report::{render_tables, render_weight_report, table_diff, to_json_line, Format};
use curvecodes::{Budget, Error, FieldSpec};

const EXIT_MISMATCH: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_CONFIG: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "curvecodes",
    version,
    about = "Weights of binary cyclic codes via genus-2 curves"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Primitive modulus as a hex bit pattern, e.g. 0x43.
    #[arg(long, global = true, env = "CURVECODES_MODULUS")]
    modulus: Option<String>,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "CURVECODES_THREADS")]
    threads: Option<usize>,

    /// Directory for cached dual enumerations; no caching without it.
    #[arg(long, global = true, env = "CURVECODES_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json, env = "CURVECODES_FORMAT")]
    format: OutFormat,

    /// Lift the default cost limits.
    #[arg(long, global = true, env = "CURVECODES_ALLOW_EXPENSIVE")]
    allow_expensive: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutFormat {
    Json,
    Csv,
    Markdown,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
            OutFormat::Markdown => Format::Markdown,
        }
    }
}

#[derive(Args, Debug)]
struct MArg {
    /// Extension degree of GF(2^m).
    #[arg(long, env = "CURVECODES_M")]
    m: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weight tables for q = 2^6 .. 2^12, checked against the reference rows.
    Tables {
        /// JSON file of expected rows replacing the built-in ones.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
    /// Minimum distance of C.
    Mindist(MArg),
    /// Weights of the dual code.
    DualWeights {
        #[command(flatten)]
        m: MArg,
        #[command(flatten)]
        mode: DualMode,
    },
    /// Maisner–Nart witness search for a trace a1.
    MnCheck {
        #[command(flatten)]
        m: MArg,
        #[arg(long, allow_hyphen_values = true)]
        a1: i64,
    },
    /// Points of the curve X.
    X {
        #[command(flatten)]
        m: MArg,
        #[arg(value_enum)]
        what: XWhat,
    },
    /// Manage the dual-enumeration cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DualMode {
    /// Enumerate all codewords.
    #[arg(long)]
    brute: bool,
    /// Predict the weight set from the curve classification.
    #[arg(long)]
    predict: bool,
    /// Both, failing on any disagreement.
    #[arg(long)]
    compare: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum XWhat {
    Points,
    Singular,
    Weil,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CacheAction {
    Clear,
    Stats,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Consistency(_) => EXIT_MISMATCH,
            Error::Io(_) => 1,
            _ => EXIT_CONFIG,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Output {
    stdout: String,
    /// Validation failed; stdout is still printed.
    mismatch: Option<String>,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            mismatch: None,
        }
    }
}

struct Ctx {
    modulus: Option<u32>,
    cache: Option<DualCache>,
    format: Format,
    budget: Budget,
}

impl Ctx {
    fn spec(&self, m: u32) -> Result<FieldSpec, Error> {
        match self.modulus {
            Some(p) => FieldSpec::with_modulus(m, p),
            None => FieldSpec::new(m),
        }
    }
}

fn parse_hex(s: &str) -> Result<u32, Error> {
    let t = s.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u32::from_str_radix(digits, 16)
        .map_err(|_| Error::InvalidArgument(format!("modulus {s:?} is not a hex bit pattern")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_CONFIG)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            match out.mismatch {
                Some(msg) => {
                    eprintln!("{msg}");
                    ExitCode::from(EXIT_MISMATCH)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let g = cli.global;
    if let Some(n) = g.threads {
        if n == 0 {
            return Err(Error::InvalidArgument("--threads must be positive".into()).into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    let ctx = Ctx {
        modulus: g.modulus.as_deref().map(parse_hex).transpose()?,
        cache: g.cache_dir.map(DualCache::new),
        format: g.format.into(),
        budget: Budget {
            allow_expensive: g.allow_expensive,
        },
    };
    match cli.command {
        Command::Tables { expected } => cmd_tables(&ctx, expected),
        Command::Mindist(MArg { m }) => cmd_mindist(&ctx, m),
        Command::DualWeights { m, mode } => cmd_dual_weights(&ctx, m.m, &mode),
        Command::MnCheck { m, a1 } => cmd_mn_check(&ctx, m.m, a1),
        Command::X { m, what } => cmd_x(&ctx, m.m, what),
        Command::Cache { action } => cmd_cache(&ctx, action),
    }
}

fn cmd_tables(ctx: &Ctx, expected: Option<PathBuf>) -> Result<Output, Failure> {
    // The tables do not depend on the modulus, but a bad one is still a bad configuration.
    if let Some(p) = ctx.modulus {
        FieldSpec::with_modulus(p.checked_ilog2().unwrap_or(0), p)?;
    }
    let expected: Vec<TableRow> = match expected {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?
        }
        None => expected_table_rows(),
    };
    let rows = reproduce_tables()?;
    let stdout = render_tables(&rows, ctx.format)?;
    let diff = table_diff(&expected, &rows);
    Ok(Output {
        stdout,
        mismatch: (!diff.is_empty()).then(|| diff.join("\n")),
    })
}

#[derive(Serialize)]
struct MinDistOut {
    m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_at_least: Option<u32>,
    method: &'static str,
}

fn cmd_mindist(ctx: &Ctx, m: u32) -> Result<Output, Failure> {
    let spec = ctx.spec(m)?;
    let dual =
        cached_enumerate_dual(&spec, ctx.budget, ctx.cache.as_ref()).map(|(e, _)| e.distribution);
    let r = min_distance_c_from(&spec, ctx.budget, dual)?;
    let (d, d_at_least) = match r.distance {
        MinDistance::Exact(d) => (Some(d), None),
        MinDistance::AtLeast(d) => (None, Some(d)),
    };
    let method: DistanceMethod = r.method;
    let out = MinDistOut {
        m,
        d,
        d_at_least,
        method: method.tag(),
    };
    let text = match ctx.format {
        Format::Json => to_json_line(&out)?,
        Format::Csv => format!(
            "m,d,d_at_least,method\n{},{},{},{}\n",
            m,
            opt(d),
            opt(d_at_least),
            out.method
        ),
        Format::Markdown => {
            let shown = match r.distance {
                MinDistance::Exact(d) => d.to_string(),
                MinDistance::AtLeast(d) => format!(">= {d}"),
            };
            format!(
                "| m | d | method |\n|---|---|---|\n| {m} | {shown} | {} |\n",
                out.method
            )
        }
    };
    Ok(Output::ok(text))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

#[derive(Serialize)]
struct BruteOut {
    m: u32,
    modulus: String,
    weights: Vec<u32>,
    distribution: Vec<BruteRow>,
}

#[derive(Serialize)]
struct BruteRow {
    weight: u32,
    count: String,
    a: String,
    b: String,
    c: String,
}

fn cmd_dual_weights(ctx: &Ctx, m: u32, mode: &DualMode) -> Result<Output, Failure> {
    if mode.predict {
        // Validates the modulus even though the prediction ignores it.
        ctx.spec(m)?;
        let report = predict_weight_set(m)?;
        return Ok(Output::ok(render_weight_report(&report, ctx.format)?));
    }
    let spec = ctx.spec(m)?;
    let (e, _) = cached_enumerate_dual(&spec, ctx.budget, ctx.cache.as_ref())?;
    if mode.compare {
        let observed: BTreeSet<i64> = e
            .distribution
            .weight_set()
            .into_iter()
            .map(i64::from)
            .collect();
        let report = compare_against(m, &observed)?;
        let stdout = render_weight_report(&report, ctx.format)?;
        let mismatch = (!report.mismatches.is_empty()).then(|| {
            let ws: Vec<String> = report
                .mismatches
                .iter()
                .map(|x| x.weight.to_string())
                .collect();
            format!(
                "prediction and enumeration disagree at weights {}",
                ws.join(", ")
            )
        });
        return Ok(Output { stdout, mismatch });
    }
    let rows: Vec<BruteRow> = e
        .distribution
        .counts
        .iter()
        .map(|(w, c)| {
            let t = e.representatives[w];
            BruteRow {
                weight: *w,
                count: c.to_string(),
                a: format!("{:#x}", t.a),
                b: format!("{:#x}", t.b),
                c: format!("{:#x}", t.c),
            }
        })
        .collect();
    let text = match ctx.format {
        Format::Json => to_json_line(&BruteOut {
            m,
            modulus: spec.modulus_hex(),
            weights: e.distribution.weight_set().into_iter().collect(),
            distribution: rows,
        })?,
        Format::Csv => {
            let mut s = String::from("m,weight,count,a,b,c\n");
            for r in &rows {
                writeln!(s, "{m},{},{},{},{},{}", r.weight, r.count, r.a, r.b, r.c).ok();
            }
            s
        }
        Format::Markdown => {
            let mut s = String::from("| weight | count | a | b | c |\n|---|---|---|---|---|\n");
            for r in &rows {
                writeln!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    r.weight, r.count, r.a, r.b, r.c
                )
                .ok();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct MnOut {
    m: u32,
    a1: i64,
    witness: Option<MnWitnessOut>,
}

#[derive(Serialize)]
struct MnWitnessOut {
    a2: i64,
    delta_z: String,
    delta_2adic: String,
    range_ok: bool,
    divisibility_ok: bool,
    delta_z_nonsquare: bool,
    delta_2adic_nonsquare: bool,
}

impl From<MnWitness> for MnWitnessOut {
    fn from(w: MnWitness) -> Self {
        MnWitnessOut {
            a2: w.a2,
            delta_z: w.delta_z.to_string(),
            delta_2adic: w.delta_2adic.to_string(),
            range_ok: w.range_ok,
            divisibility_ok: w.divisibility_ok,
            delta_z_nonsquare: w.delta_z_nonsquare,
            delta_2adic_nonsquare: w.delta_2adic_nonsquare,
        }
    }
}

fn cmd_mn_check(ctx: &Ctx, m: u32, a1: i64) -> Result<Output, Failure> {
    ctx.spec(m)?;
    let w = mn_simple_exists(m, a1)?;
    if let Some(w) = w {
        if !w.all_conditions() {
            return Err(Error::Consistency(format!("stale witness for a1 = {a1}")).into());
        }
    }
    let text = match ctx.format {
        Format::Json => to_json_line(&MnOut {
            m,
            a1,
            witness: w.map(Into::into),
        })?,
        Format::Csv => format!(
            "m,a1,a2,delta_z,delta_2adic\n{m},{a1},{},{},{}\n",
            opt(w.map(|w| w.a2)),
            opt(w.map(|w| w.delta_z)),
            opt(w.map(|w| w.delta_2adic))
        ),
        Format::Markdown => format!(
            "| m | a1 | a2 | delta_z | delta_2adic |\n|---|---|---|---|---|\n| {m} | {a1} | {} | {} | {} |\n",
            w.map_or("none".to_string(), |w| w.a2.to_string()),
            opt(w.map(|w| w.delta_z)),
            opt(w.map(|w| w.delta_2adic))
        ),
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct PointsOut<'a> {
    m: u32,
    modulus: String,
    #[serde(rename = "N")]
    n: usize,
    good_count: usize,
    points: &'a [XPoint],
}

#[derive(Serialize)]
struct SingularOut<'a> {
    m: u32,
    modulus: String,
    count: usize,
    points: &'a [XPoint],
}

#[derive(Serialize)]
struct WeilOut {
    m: u32,
    #[serde(rename = "N")]
    n: i64,
    deviation: i64,
    bound: i64,
    margin: i64,
    ok: bool,
}

fn points_table(points: &[XPoint], format: Format) -> String {
    let mut s = match format {
        Format::Csv => String::from("x,y,z,good\n"),
        _ => String::from("| x | y | z | good |\n|---|---|---|---|\n"),
    };
    for p in points {
        let (x, y, z, g) = (
            format!("{:#x}", p.x),
            format!("{:#x}", p.y),
            format!("{:#x}", p.z),
            p.is_good(),
        );
        match format {
            Format::Csv => writeln!(s, "{x},{y},{z},{g}"),
            _ => writeln!(s, "| {x} | {y} | {z} | {g} |"),
        }
        .ok();
    }
    s
}

fn cmd_x(ctx: &Ctx, m: u32, what: XWhat) -> Result<Output, Failure> {
    let spec = ctx.spec(m)?;
    match what {
        XWhat::Points => {
            let set = x_points(&spec, ctx.budget)?;
            let text = match ctx.format {
                Format::Json => to_json_line(&PointsOut {
                    m,
                    modulus: spec.modulus_hex(),
                    n: set.len(),
                    good_count: set.good_count,
                    points: &set.points,
                })?,
                f => points_table(&set.points, f),
            };
            Ok(Output::ok(text))
        }
        XWhat::Singular => {
            let pts = x_singular_points(&spec)?;
            let text = match ctx.format {
                Format::Json => to_json_line(&SingularOut {
                    m,
                    modulus: spec.modulus_hex(),
                    count: pts.len(),
                    points: &pts,
                })?,
                f => points_table(&pts, f),
            };
            let mismatch = (pts.len() > 4)
                .then(|| format!("{} singular points, expected at most 4", pts.len()));
            Ok(Output {
                stdout: text,
                mismatch,
            })
        }
        XWhat::Weil => {
            let set = x_points(&spec, ctx.budget)?;
            let w = weil_ap_check(m, set.len());
            let out = WeilOut {
                m,
                n: w.points,
                deviation: w.deviation,
                bound: w.bound,
                margin: w.margin,
                ok: w.ok,
            };
            let text = match ctx.format {
                Format::Json => to_json_line(&out)?,
                Format::Csv => format!(
                    "m,N,deviation,bound,margin,ok\n{m},{},{},{},{},{}\n",
                    out.n, out.deviation, out.bound, out.margin, out.ok
                ),
                Format::Markdown => format!(
                    "| m | N | deviation | bound | margin | ok |\n|---|---|---|---|---|---|\n| {m} | {} | {} | {} | {} | {} |\n",
                    out.n, out.deviation, out.bound, out.margin, out.ok
                ),
            };
            let mismatch =
                (!w.ok).then(|| format!("N = {} violates the bound {}", w.points, w.bound));
            Ok(Output {
                stdout: text,
                mismatch,
            })
        }
    }
}

#[derive(Serialize)]
struct ClearOut {
    removed: usize,
}

fn cmd_cache(ctx: &Ctx, action: CacheAction) -> Result<Output, Failure> {
    let cache = ctx
        .cache
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("cache commands need --cache-dir".into()))?;
    let text = match action {
        CacheAction::Clear => {
            let removed = cache.clear()?;
            match ctx.format {
                Format::Json => to_json_line(&ClearOut { removed })?,
                Format::Csv => format!("removed\n{removed}\n"),
                Format::Markdown => format!("| removed |\n|---|\n| {removed} |\n"),
            }
        }
        CacheAction::Stats => {
            let st = cache.stats()?;
            match ctx.format {
                Format::Json => to_json_line(&st)?,
                f => {
                    let mut s = match f {
                        Format::Csv => String::from("file,m,modulus_hex,records\n"),
                        _ => String::from("| file | m | modulus | records |\n|---|---|---|---|\n"),
                    };
                    for e in &st.entries {
                        let (m, modulus) = e
                            .header
                            .as_ref()
                            .map_or((String::new(), String::new()), |h| {
                                (h.m.to_string(), h.modulus_hex.clone())
                            });
                        match f {
                            Format::Csv => writeln!(s, "{},{m},{modulus},{}", e.file, e.records),
                            _ => writeln!(s, "| {} | {m} | {modulus} | {} |", e.file, e.records),
                        }
                        .ok();
                    }
                    s
                }
            }
        }
    };
    Ok(Output::ok(text))
}
