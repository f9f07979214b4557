//! Command-line front end: runs the generator-criterion checkers, emits
//! curve data (cdf/survival/density ratios, hazards, criterion curves) as
//! CSV or JSONL, and drives the stochastic-order comparison checkers.
//!
//! Exit codes: 0 success / all checks pass; 1 a check failed; 2 invalid
//! usage or model specification; 3 unwritable output path; 4 a comparison
//! was inconclusive (hypotheses not satisfied). Logging is controlled by
//! the `ARCHIMAX_LOG` environment variable.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use archimax::{
    check_maxima_order_equivalence, check_minima_order_equivalence, criterion_hr, criterion_lr,
    criterion_rh, phr_majorization_check, ArchimaxCopula, Baseline, CheckReport,
    ExchangeableSample, Generator, Grid, Margin, OrderPart, OrderStat, PhrModel, Spacing,
    TailDependence, Verdict, Witness,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Slack used by the analytic generator criteria.
const CRITERION_TOL: f64 = 1e-10;

#[derive(Parser)]
#[command(
    name = "archimax",
    version,
    about = "Checkers and curve data for sample extremes under Archimax dependence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the monotonicity criteria and an n-monotonicity sweep on a generator.
    CheckGenerator(CheckGeneratorArgs),
    /// Write distribution-ratio, hazard, and criterion curves for one instance.
    EmitCurves(EmitCurvesArgs),
    /// Run one of the stochastic-order comparison checkers.
    Theorem(TheoremArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// Generator family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Generator parameter; required for every family except unit-exponential.
    #[arg(long)]
    theta: Option<f64>,
    /// Tail dependence function kind.
    #[arg(long, value_enum, default_value_t = TailArg::Logistic)]
    tail: TailArg,
    /// Logistic tail parameter (>= 1); defaults to --theta, else 1.
    #[arg(long)]
    tail_theta: Option<f64>,
    /// Sample size / copula dimension (default 4; for --theorem 3.1 the
    /// exponent vectors fix it instead).
    #[arg(long)]
    n: Option<usize>,
    /// Evaluation grid as lo:hi:count:lin|log (defaults depend on the command).
    #[arg(long)]
    grid: Option<String>,
    /// RNG seed, recorded in every report.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format (default: csv for emit-curves, jsonl otherwise).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct CheckGeneratorArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Which criteria to run (the n-monotonicity sweep always runs).
    #[arg(long, value_enum, default_value_t = CheckArg::All)]
    check: CheckArg,
}

#[derive(Args)]
struct EmitCurvesArgs {
    #[command(flatten)]
    model: ModelArgs,
}

#[derive(Args)]
struct TheoremArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Which comparison to run.
    #[arg(long, value_parser = ["3.1", "4.1", "5.1"])]
    theorem: String,
    /// Chain part for the extreme-order comparisons (ignored by 3.1).
    #[arg(long, value_enum, default_value_t = PartArg::Rh)]
    part: PartArg,
    /// First model's hazard exponents, comma separated (3.1 only).
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<f64>>,
    /// Second model's hazard exponents, comma separated (3.1 only).
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<f64>>,
    /// Baseline survival for 3.1: `exp` or `weibull:<shape>`.
    #[arg(long, default_value = "exp")]
    baseline: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gumbel,
    Clayton,
    Joe,
    Pareto,
    UnitExponential,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TailArg {
    Logistic,
    Max,
    Sum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Rh,
    Hr,
    Lr,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartArg {
    Rh,
    Hr,
    Lr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
}

/// A terminating problem carrying its contractual exit code.
struct Failure {
    code: u8,
    msg: String,
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("ARCHIMAX_LOG")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::CheckGenerator(args) => run_check_generator(&args),
        Command::EmitCurves(args) => run_emit_curves(&args),
        Command::Theorem(args) => run_theorem(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn build_generator(a: &ModelArgs) -> Result<Generator, Failure> {
    let need = |name: &str| -> Result<f64, Failure> {
        a.theta.ok_or_else(|| invalid(format!("--theta is required for family {name}")))
    };
    let g = match a.family {
        FamilyArg::Gumbel => Generator::gumbel(need("gumbel")?),
        FamilyArg::Clayton => Generator::clayton(need("clayton")?),
        FamilyArg::Joe => Generator::joe(need("joe")?),
        FamilyArg::Pareto => Generator::pareto_type(need("pareto")?),
        FamilyArg::UnitExponential => {
            if a.theta.is_some() {
                return Err(invalid("--theta does not apply to unit-exponential"));
            }
            Ok(Generator::unit_exponential())
        }
    };
    g.map_err(|e| invalid(e.to_string()))
}

fn tail_name(t: TailArg) -> &'static str {
    match t {
        TailArg::Logistic => "logistic",
        TailArg::Max => "max",
        TailArg::Sum => "sum",
    }
}

/// Effective logistic parameter; `None` for the parameter-free tails.
fn effective_tail_theta(a: &ModelArgs) -> Option<f64> {
    match a.tail {
        TailArg::Logistic => Some(a.tail_theta.or(a.theta).unwrap_or(1.0)),
        TailArg::Max | TailArg::Sum => None,
    }
}

fn build_tail(a: &ModelArgs, n: usize) -> Result<TailDependence, Failure> {
    if a.tail != TailArg::Logistic && a.tail_theta.is_some() {
        return Err(invalid("--tail-theta only applies to the logistic tail"));
    }
    let t = match a.tail {
        TailArg::Logistic => {
            TailDependence::logistic(effective_tail_theta(a).expect("logistic"), n)
        }
        TailArg::Max => TailDependence::max(n),
        TailArg::Sum => TailDependence::sum(n),
    };
    t.map_err(|e| invalid(e.to_string()))
}

fn effective_n(a: &ModelArgs) -> Result<usize, Failure> {
    let n = a.n.unwrap_or(4);
    if n < 2 {
        return Err(invalid(format!("--n must be >= 2, got {n}")));
    }
    Ok(n)
}

fn parse_grid(s: &str) -> Result<Grid, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err(invalid(format!("grid must be lo:hi:count:lin|log, got `{s}`")));
    }
    let lo: f64 = parts[0].parse().map_err(|_| invalid(format!("bad grid lo `{}`", parts[0])))?;
    let hi: f64 = parts[1].parse().map_err(|_| invalid(format!("bad grid hi `{}`", parts[1])))?;
    let count: usize =
        parts[2].parse().map_err(|_| invalid(format!("bad grid count `{}`", parts[2])))?;
    let spacing = match parts[3] {
        "lin" => Spacing::Linear,
        "log" => Spacing::Log,
        other => return Err(invalid(format!("grid spacing must be lin or log, got `{other}`"))),
    };
    Grid::new(lo, hi, count, spacing).map_err(|e| invalid(e.to_string()))
}

fn grid_string(g: &Grid) -> String {
    let spacing = match g.spacing {
        Spacing::Linear => "lin",
        Spacing::Log => "log",
    };
    format!("{}:{}:{}:{}", g.lo, g.hi, g.count, spacing)
}

fn resolve_grid(a: &ModelArgs, default: Grid) -> Result<Grid, Failure> {
    match &a.grid {
        Some(s) => parse_grid(s),
        None => Ok(default),
    }
}

/// Write `content` to `--out` (exit 3 on failure) or stdout.
fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(|e| Failure {
            code: 3,
            msg: format!("cannot write {}: {e}", p.display()),
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn json_f64(v: Option<f64>) -> Value {
    match v {
        Some(x) => json!(x),
        None => Value::Null,
    }
}

fn witness_json(w: &Option<Witness>) -> Value {
    match w {
        Some(w) => json!({"point": w.point, "values": w.values, "detail": w.detail}),
        None => Value::Null,
    }
}

fn check_json(command: &str, instance: &Value, check: &str, r: &CheckReport, seed: u64) -> Value {
    json!({
        "command": command,
        "instance": instance,
        "check": check,
        "verdict": r.verdict.to_string(),
        "witness": witness_json(&r.witness),
        "tolerance": r.tolerance,
        "grid": grid_string(&r.grid),
        "seed": seed,
        "notes": r.notes,
    })
}

/// CSV preamble: one `# key=value` line per config entry, in given order.
fn csv_preamble(entries: &[(&str, String)]) -> String {
    let mut s = String::new();
    for (k, v) in entries {
        writeln!(s, "# {k}={v}").unwrap();
    }
    s
}

fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x}"),
        None => "none".into(),
    }
}

fn check_csv_rows(checks: &[(String, CheckReport)]) -> String {
    let mut s = String::from("check,verdict,witness_x,witness_value\n");
    for (name, r) in checks {
        let (wx, wv) = match &r.witness {
            Some(w) => (
                w.point.first().map(|v| format!("{v}")).unwrap_or_default(),
                w.values.first().map(|v| format!("{v}")).unwrap_or_default(),
            ),
            None => (String::new(), String::new()),
        };
        writeln!(s, "{name},{},{wx},{wv}", r.verdict).unwrap();
    }
    s
}

fn exit_for(checks: &[(String, CheckReport)]) -> u8 {
    if checks.iter().all(|(_, r)| r.is_pass()) {
        0
    } else {
        1
    }
}

fn run_check_generator(args: &CheckGeneratorArgs) -> Result<u8, Failure> {
    let a = &args.model;
    let n = effective_n(a)?;
    let g = build_generator(a)?
        .with_dimension_hint(n)
        .map_err(|e| invalid(e.to_string()))?;
    let grid = resolve_grid(a, Grid::log(1e-4, 1e2, 500).expect("static grid"))?;

    let mut checks: Vec<(String, CheckReport)> = Vec::new();
    let run = |sel: CheckArg| args.check == sel || args.check == CheckArg::All;
    if run(CheckArg::Rh) {
        checks.push((
            "rh".into(),
            criterion_rh(&g, &grid, CRITERION_TOL).map_err(|e| invalid(e.to_string()))?,
        ));
    }
    if run(CheckArg::Hr) {
        checks.push((
            "hr".into(),
            criterion_hr(&g, &grid, CRITERION_TOL).map_err(|e| invalid(e.to_string()))?,
        ));
    }
    if run(CheckArg::Lr) {
        checks.push((
            "lr".into(),
            criterion_lr(&g, &grid, CRITERION_TOL).map_err(|e| invalid(e.to_string()))?,
        ));
    }
    checks.push((
        "n-monotone".into(),
        g.check_n_monotone(n, &grid).map_err(|e| invalid(e.to_string()))?,
    ));

    let check_name = match args.check {
        CheckArg::Rh => "rh",
        CheckArg::Hr => "hr",
        CheckArg::Lr => "lr",
        CheckArg::All => "all",
    };
    let format = a.format.unwrap_or(FormatArg::Jsonl);
    let content = match format {
        FormatArg::Jsonl => {
            let config = json!({
                "command": "check-generator",
                "family": g.family_name(),
                "theta": json_f64(a.theta),
                "n": n,
                "check": check_name,
                "grid": grid_string(&grid),
                "seed": a.seed,
                "format": "jsonl",
                "tolerance": CRITERION_TOL,
            });
            let instance = json!({
                "family": g.family_name(),
                "theta": json_f64(a.theta),
                "dimension_hint": n,
            });
            let mut s = format!("{config}\n");
            for (name, r) in &checks {
                writeln!(s, "{}", check_json("check-generator", &instance, name, r, a.seed))
                    .unwrap();
            }
            s
        }
        FormatArg::Csv => {
            let preamble = csv_preamble(&[
                ("command", "check-generator".into()),
                ("family", g.family_name().into()),
                ("theta", fmt_opt(a.theta)),
                ("n", n.to_string()),
                ("check", check_name.into()),
                ("grid", grid_string(&grid)),
                ("seed", a.seed.to_string()),
                ("tolerance", format!("{CRITERION_TOL:e}")),
            ]);
            format!("{preamble}{}", check_csv_rows(&checks))
        }
    };
    emit(&a.out, &content)?;
    Ok(exit_for(&checks))
}

/// One named curve evaluated over a grid.
struct Curve {
    name: String,
    points: Vec<(f64, f64)>,
}

fn curve(name: String, xs: &[f64], mut f: impl FnMut(f64) -> f64) -> Curve {
    Curve { name, points: xs.iter().map(|&x| (x, f(x))).collect() }
}

fn run_emit_curves(args: &EmitCurvesArgs) -> Result<u8, Failure> {
    let a = &args.model;
    let n = effective_n(a)?;
    let g = build_generator(a)?
        .with_dimension_hint(n)
        .map_err(|e| invalid(e.to_string()))?;
    let tail = build_tail(a, n)?;
    let copula = ArchimaxCopula::new(g, tail).map_err(|e| invalid(e.to_string()))?;
    let sample =
        ExchangeableSample::new(Margin::uniform01(), copula, n).map_err(|e| invalid(e.to_string()))?;

    let xgrid = resolve_grid(a, Grid::linear(1e-6, 0.999999, 400).expect("static grid"))?;
    let tgrid = Grid::log(1e-4, 1e2, xgrid.count).expect("criterion grid");
    let xs = xgrid.points();
    let ts = tgrid.points();

    // guarded ratio: report NaN where both sides have degenerated to 0
    let ratio = |num: f64, den: f64| if den == 0.0 && num == 0.0 { f64::NAN } else { num / den };

    let cdf_max = |k: usize, x: f64| sample.cdf_max(k, x).unwrap_or(f64::NAN);
    let cdf_2max = |x: f64| sample.cdf_second_max(n, x).unwrap_or(f64::NAN);
    let sf_min = |k: usize, x: f64| sample.sf_min(k, x).unwrap_or(f64::NAN);
    let sf_2min = |x: f64| sample.sf_second_min(n, x).unwrap_or(f64::NAN);
    let pdf = |s: OrderStat, x: f64| sample.pdf_order_stat(s, x).unwrap_or(f64::NAN);

    let m = n + 1;
    let mut curves: Vec<Curve> = vec![
        // largest statistics: each ratio is non-decreasing exactly when the
        // corresponding chain comparison holds
        curve(format!("F{m}{m}_over_F{n}{n}"), &xs, |x| ratio(cdf_max(m, x), cdf_max(n, x))),
        curve(format!("F{n}{n}_over_F{}{n}", n - 1), &xs, |x| ratio(cdf_max(n, x), cdf_2max(x))),
        curve(format!("S{m}{m}_over_S{n}{n}"), &xs, |x| {
            ratio(1.0 - cdf_max(m, x), 1.0 - cdf_max(n, x))
        }),
        curve(format!("S{n}{n}_over_S{}{n}", n - 1), &xs, |x| {
            ratio(1.0 - cdf_max(n, x), 1.0 - cdf_2max(x))
        }),
        curve(format!("f{m}{m}_over_f{n}{n}"), &xs, |x| {
            ratio(pdf(OrderStat::Max(m), x), pdf(OrderStat::Max(n), x))
        }),
        curve(format!("f{n}{n}_over_f{}{n}", n - 1), &xs, |x| {
            ratio(pdf(OrderStat::Max(n), x), pdf(OrderStat::SecondMax(n), x))
        }),
        // smallest statistics
        curve(format!("S1{n}_over_S1{m}"), &xs, |x| ratio(sf_min(n, x), sf_min(m, x))),
        curve(format!("S2{n}_over_S1{n}"), &xs, |x| ratio(sf_2min(x), sf_min(n, x))),
        curve(format!("F1{n}_over_F1{m}"), &xs, |x| {
            ratio(1.0 - sf_min(n, x), 1.0 - sf_min(m, x))
        }),
        curve(format!("F2{n}_over_F1{n}"), &xs, |x| {
            ratio(1.0 - sf_2min(x), 1.0 - sf_min(n, x))
        }),
        curve(format!("f1{n}_over_f1{m}"), &xs, |x| {
            ratio(pdf(OrderStat::Min(n), x), pdf(OrderStat::Min(m), x))
        }),
        curve(format!("f2{n}_over_f1{n}"), &xs, |x| {
            ratio(pdf(OrderStat::SecondMin(n), x), pdf(OrderStat::Min(n), x))
        }),
        // hazard and reverse hazard of the sample maximum
        curve(format!("hazard_X{n}{n}"), &xs, |x| {
            ratio(pdf(OrderStat::Max(n), x), 1.0 - cdf_max(n, x))
        }),
        curve(format!("rhazard_X{n}{n}"), &xs, |x| {
            ratio(pdf(OrderStat::Max(n), x), cdf_max(n, x))
        }),
    ];
    // generator-ratio criterion curves on a log grid over t
    curves.push(curve("crit_rh".into(), &ts, |t| {
        t * g.phi_d1(t).unwrap_or(f64::NAN) / g.phi(t).unwrap_or(f64::NAN)
    }));
    curves.push(curve("crit_hr".into(), &ts, |t| {
        t * g.phi_d1(t).unwrap_or(f64::NAN) / g.one_minus_phi(t).unwrap_or(f64::NAN)
    }));
    curves.push(curve("crit_lr".into(), &ts, |t| {
        t * g.phi_d2(t).unwrap_or(f64::NAN) / g.phi_d1(t).unwrap_or(f64::NAN)
    }));

    let format = a.format.unwrap_or(FormatArg::Csv);
    let content = match format {
        FormatArg::Csv => {
            let preamble = csv_preamble(&[
                ("command", "emit-curves".into()),
                ("family", g.family_name().into()),
                ("theta", fmt_opt(a.theta)),
                ("tail", tail_name(a.tail).into()),
                ("tail_theta", fmt_opt(effective_tail_theta(a))),
                ("n", n.to_string()),
                ("margin", "uniform01".into()),
                ("grid", grid_string(&xgrid)),
                ("criterion_grid", grid_string(&tgrid)),
                ("seed", a.seed.to_string()),
            ]);
            let mut s = format!("{preamble}x,ratio_name,value\n");
            for c in &curves {
                for &(x, v) in &c.points {
                    writeln!(s, "{x},{},{v}", c.name).unwrap();
                }
            }
            s
        }
        FormatArg::Jsonl => {
            let config = json!({
                "command": "emit-curves",
                "family": g.family_name(),
                "theta": json_f64(a.theta),
                "tail": tail_name(a.tail),
                "tail_theta": json_f64(effective_tail_theta(a)),
                "n": n,
                "margin": "uniform01",
                "grid": grid_string(&xgrid),
                "criterion_grid": grid_string(&tgrid),
                "seed": a.seed,
                "format": "jsonl",
            });
            let mut s = format!("{config}\n");
            for c in &curves {
                for &(x, v) in &c.points {
                    writeln!(s, "{}", json!({"x": x, "ratio_name": c.name, "value": v})).unwrap();
                }
            }
            s
        }
    };
    emit(&a.out, &content)?;
    Ok(0)
}

fn parse_baseline(s: &str) -> Result<Baseline, Failure> {
    if s == "exp" {
        return Ok(Baseline::Exponential);
    }
    if let Some(shape) = s.strip_prefix("weibull:") {
        let k: f64 = shape.parse().map_err(|_| invalid(format!("bad Weibull shape `{shape}`")))?;
        return Baseline::weibull(k).map_err(|e| invalid(e.to_string()));
    }
    Err(invalid(format!("baseline must be `exp` or `weibull:<shape>`, got `{s}`")))
}

fn run_theorem(args: &TheoremArgs) -> Result<u8, Failure> {
    let a = &args.model;
    let part_name = match args.part {
        PartArg::Rh => "rh",
        PartArg::Hr => "hr",
        PartArg::Lr => "lr",
    };
    let (check_name, instance, report, grid) = match args.theorem.as_str() {
        "4.1" | "5.1" => {
            let n = effective_n(a)?;
            let g = build_generator(a)?
                .with_dimension_hint(n)
                .map_err(|e| invalid(e.to_string()))?;
            let tail = build_tail(a, n)?;
            let copula = ArchimaxCopula::new(g, tail).map_err(|e| invalid(e.to_string()))?;
            let sample = ExchangeableSample::new(Margin::uniform01(), copula, n)
                .map_err(|e| invalid(e.to_string()))?;
            let grid = resolve_grid(a, Grid::linear(1e-6, 0.999999, 400).expect("static grid"))?;
            let part = match args.part {
                PartArg::Rh => OrderPart::Rh,
                PartArg::Hr => OrderPart::Hr,
                PartArg::Lr => OrderPart::Lr,
            };
            let (name, report) = if args.theorem == "4.1" {
                (
                    "maxima-order-equivalence",
                    check_maxima_order_equivalence(&sample, n, part, &grid)
                        .map_err(|e| invalid(e.to_string()))?,
                )
            } else {
                (
                    "minima-order-equivalence",
                    check_minima_order_equivalence(&sample, n, part, &grid)
                        .map_err(|e| invalid(e.to_string()))?,
                )
            };
            let instance = json!({
                "family": g.family_name(),
                "theta": json_f64(a.theta),
                "tail": tail_name(a.tail),
                "tail_theta": json_f64(effective_tail_theta(a)),
                "n": n,
                "margin": "uniform01",
                "part": part_name,
            });
            (name, instance, report, grid)
        }
        "3.1" => {
            let alpha = args.alpha.clone().unwrap_or_else(|| vec![2.0, 1.0]);
            let beta = args.beta.clone().unwrap_or_else(|| vec![1.5, 1.5]);
            if alpha.len() != beta.len() {
                return Err(invalid(format!(
                    "mismatched model specs: --alpha has {} entries, --beta has {}",
                    alpha.len(),
                    beta.len()
                )));
            }
            let n = alpha.len();
            if n < 2 {
                return Err(invalid("exponent vectors need at least 2 entries"));
            }
            if let Some(m) = a.n {
                if m != n {
                    return Err(invalid(format!(
                        "--n {m} contradicts the exponent vectors of length {n}"
                    )));
                }
            }
            let baseline = parse_baseline(&args.baseline)?;
            let g = build_generator(a)?
                .with_dimension_hint(n)
                .map_err(|e| invalid(e.to_string()))?;
            let tail = build_tail(a, n)?;
            let copula = ArchimaxCopula::new(g, tail).map_err(|e| invalid(e.to_string()))?;
            let mx = PhrModel::new(baseline.clone(), alpha.clone(), copula)
                .map_err(|e| invalid(e.to_string()))?;
            let my = PhrModel::new(baseline, beta.clone(), copula)
                .map_err(|e| invalid(e.to_string()))?;
            let grid = resolve_grid(a, Grid::linear(1e-6, 15.0, 400).expect("static grid"))?;
            let report =
                phr_majorization_check(&mx, &my, &grid).map_err(|e| invalid(e.to_string()))?;
            let instance = json!({
                "family": g.family_name(),
                "theta": json_f64(a.theta),
                "tail": tail_name(a.tail),
                "tail_theta": json_f64(effective_tail_theta(a)),
                "n": n,
                "alpha": alpha,
                "beta": beta,
                "baseline": args.baseline,
            });
            ("phr-majorization", instance, report, grid)
        }
        other => return Err(invalid(format!("unknown theorem `{other}`"))),
    };

    let format = a.format.unwrap_or(FormatArg::Jsonl);
    let checks = vec![(check_name.to_string(), report)];
    let content = match format {
        FormatArg::Jsonl => {
            let config = json!({
                "command": "theorem",
                "theorem": args.theorem,
                "part": part_name,
                "instance": instance,
                "grid": grid_string(&grid),
                "seed": a.seed,
                "format": "jsonl",
            });
            let mut s = format!("{config}\n");
            for (name, r) in &checks {
                writeln!(s, "{}", check_json("theorem", &instance, name, r, a.seed)).unwrap();
            }
            s
        }
        FormatArg::Csv => {
            let preamble = csv_preamble(&[
                ("command", "theorem".into()),
                ("theorem", args.theorem.clone()),
                ("part", part_name.into()),
                ("instance", instance.to_string()),
                ("grid", grid_string(&grid)),
                ("seed", a.seed.to_string()),
            ]);
            format!("{preamble}{}", check_csv_rows(&checks))
        }
    };
    emit(&a.out, &content)?;
    Ok(match checks[0].1.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Inconclusive => 4,
    })
}
