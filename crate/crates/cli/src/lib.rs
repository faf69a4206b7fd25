//! Command-line front end: argument parsing, dispatch to the library, and
//! JSON or text reports.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use levelcurves::arith::{ComplexBall, Dyadic};
use levelcurves::arlab::{ar_accumulate, ArError};
use levelcurves::circle::{
    blaschke_quotient_split, cayley_criterion, is_circle_preserving, is_finite_blaschke,
    reflection_criterion, CircleError,
};
use levelcurves::config::{Config, ConfigError};
use levelcurves::curve::{
    analyze_unimodular, implicitize, left_compose_factor, luroth_generator, CurveError,
    CurveStatus, PlaneCurve, UnimodularPoint,
};
use levelcurves::expr::{parse_bipoly, parse_ratfun, ParseError};
use levelcurves::level::{
    count_bound, solve_unimodular_pair, CertificationMethod, LevelError, SolutionStatus,
};
use levelcurves::poly::{BiPoly, UniPoly};
use levelcurves::ratfun::RatFun;
use serde_json::{json, Value};

/// Version of the report format in `reports.schema.json`.
pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CERTIFICATION: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Library budgets plus the output format.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RunConfig {
    pub core: Config,
    pub output_format: OutputFormat,
}

#[derive(Parser, Debug)]
#[command(name = "levelcurves", version, about = "Common unit-level sets of rational functions")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Starting working precision in bits.
    #[arg(long, global = true, default_value_t = 128)]
    precision: u32,
    /// Precision at which certification gives up.
    #[arg(long, global = true, default_value_t = 4096)]
    max_precision: u32,
    /// Acceptance threshold for fitted witnesses.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tolerance: f64,
    /// Horizon K for gcd tables.
    #[arg(long, global = true, default_value_t = 24)]
    max_k: usize,
    /// Lines per direction in the real-point search.
    #[arg(long, global = true, default_value_t = 64)]
    grid: usize,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve |P1(z)| = |P2(z)| = 1.
    Solve {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
    /// Circle preservation and Blaschke structure of a rational function.
    Blaschke {
        #[command(subcommand)]
        action: BlaschkeAction,
    },
    /// gcd(P1^k - 1, P2^k - 1) for k = 1..=K and its stabilized lcm.
    Argcd {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
    /// Plane curve tools.
    Curve {
        #[command(subcommand)]
        action: CurveAction,
    },
    /// A common inner function W with P_i = Q_i(W).
    Decompose {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
    /// The bound (deg P1 + deg P2)^2 on the number of isolated solutions.
    Bound {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
}

#[derive(Subcommand, Debug)]
enum BlaschkeAction {
    /// Decide whether |Q| = 1 on the circle and whether Q is a finite Blaschke product.
    Check {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Split Q as ζ B1 / B2.
    Split {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Subcommand, Debug)]
enum CurveAction {
    /// Unimodular points of F(x, y) = 0.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Implicit equation of the image of z -> (P1(z), P2(z)).
    Implicitize {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
}

/// A failed command with its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
    pub offset: Option<usize>,
}

impl Failure {
    fn usage(kind: &'static str, message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            kind,
            message: message.into(),
            offset: None,
        }
    }

    fn certification(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CERTIFICATION,
            kind: "CertificationFailed",
            message: message.into(),
            offset: None,
        }
    }

    fn invariant(kind: &'static str, message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVARIANT,
            kind,
            message: message.into(),
            offset: None,
        }
    }

    fn parse(input: &str, e: ParseError) -> Self {
        Self {
            code: EXIT_USAGE,
            kind: "ParseError",
            message: format!("`{input}`: {e}"),
            offset: e.offset(),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::usage("ConfigError", e.to_string())
    }
}

impl From<LevelError> for Failure {
    fn from(e: LevelError) -> Self {
        let msg = e.to_string();
        match e {
            LevelError::ConstantInput => Failure::usage("ConstantInput", msg),
            LevelError::Config(_) => Failure::usage("ConfigError", msg),
            LevelError::CertificationFailed(_) => Failure::certification(msg),
            LevelError::BoundViolation { .. } => Failure::invariant("BoundViolation", msg),
            LevelError::InternalDisagreement(_) | LevelError::WitnessFitFailed(_) => {
                Failure::invariant("InternalDisagreement", msg)
            }
        }
    }
}

impl From<CircleError> for Failure {
    fn from(e: CircleError) -> Self {
        let msg = e.to_string();
        match e {
            CircleError::CertificationFailed(_) => Failure::certification(msg),
            CircleError::NotCirclePreserving => Failure::usage("NotCirclePreserving", msg),
            CircleError::InternalDisagreement(_) => Failure::invariant("InternalDisagreement", msg),
        }
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        let msg = e.to_string();
        match e {
            CurveError::CertificationFailed(_) => Failure::certification(msg),
            CurveError::SharedComponentUnresolved => Failure {
                kind: "SharedComponentUnresolved",
                ..Failure::certification(msg)
            },
            CurveError::ImagePoint => Failure::usage("ImagePoint", msg),
            CurveError::BothConstant => Failure::usage("ConstantInput", msg),
            CurveError::NotAFactor => Failure::usage("NotAFactor", msg),
            CurveError::Poly(_) => Failure::invariant("InternalDisagreement", msg),
        }
    }
}

impl From<ArError> for Failure {
    fn from(e: ArError) -> Self {
        let msg = e.to_string();
        match e {
            ArError::Level(l) => l.into(),
            ArError::Poly(levelcurves::poly::PolyError::CertificationFailed(_)) => {
                Failure::certification(msg)
            }
            ArError::Poly(_) => Failure::invariant("InternalDisagreement", msg),
            ArError::ConstantInput => Failure::usage("ConstantInput", msg),
            ArError::ZeroInput => Failure::usage("ZeroInput", msg),
            ArError::DependentInputs { .. } => Failure::usage("DependentInputs", msg),
            ArError::HorizonTooSmall(_) => Failure::usage("HorizonTooSmall", msg),
        }
    }
}

/// A finished report in both formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

/// The outcome of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = RunConfig {
        core: Config {
            precision_bits: cli.opts.precision,
            tolerance: cli.opts.tolerance,
            max_precision_bits: cli.opts.max_precision,
            max_k: cli.opts.max_k,
            grid_resolution: cli.opts.grid,
        },
        output_format: if cli.opts.json {
            OutputFormat::Json
        } else {
            cli.opts.format
        },
    };
    let name = command_name(&cli.command);
    match dispatch(&cli.command, &config) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: match config.output_format {
                OutputFormat::Json => format!("{}\n", with_header(report.json, name)),
                OutputFormat::Text => report.text,
            },
            stderr: String::new(),
        },
        Err(f) => {
            let stdout = match config.output_format {
                OutputFormat::Json => {
                    let err = json!({
                        "error": {"kind": f.kind, "message": f.message, "offset": f.offset, "exit_code": f.code}
                    });
                    format!("{}\n", with_header(err, name))
                }
                OutputFormat::Text => String::new(),
            };
            Outcome {
                code: f.code,
                stdout,
                stderr: format!("error: {}\n", f.message),
            }
        }
    }
}

fn with_header(mut v: Value, name: &str) -> Value {
    let obj = v.as_object_mut().expect("reports are objects");
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!(name));
    v
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::Blaschke {
            action: BlaschkeAction::Check { .. },
        } => "blaschke check",
        Command::Blaschke {
            action: BlaschkeAction::Split { .. },
        } => "blaschke split",
        Command::Argcd { .. } => "argcd",
        Command::Curve {
            action: CurveAction::Analyze { .. },
        } => "curve analyze",
        Command::Curve {
            action: CurveAction::Implicitize { .. },
        } => "curve implicitize",
        Command::Decompose { .. } => "decompose",
        Command::Bound { .. } => "bound",
    }
}

fn dispatch(command: &Command, config: &RunConfig) -> Result<Report, Failure> {
    config.core.validate()?;
    let c = &config.core;
    match command {
        Command::Solve { p1, p2 } => solve(&ratfun(p1)?, &ratfun(p2)?, c),
        Command::Blaschke { action } => match action {
            BlaschkeAction::Check { q } => blaschke_check(&ratfun(q)?),
            BlaschkeAction::Split { q } => blaschke_split(&ratfun(q)?, c),
        },
        Command::Argcd { p1, p2 } => argcd(&poly(p1)?, &poly(p2)?, c),
        Command::Curve { action } => match action {
            CurveAction::Analyze { f } => curve_analyze(&bipoly(f)?, c),
            CurveAction::Implicitize { p1, p2 } => curve_implicitize(&ratfun(p1)?, &ratfun(p2)?),
        },
        Command::Decompose { p1, p2 } => decompose(&ratfun(p1)?, &ratfun(p2)?),
        Command::Bound { p1, p2 } => bound(&ratfun(p1)?, &ratfun(p2)?),
    }
}

const VARIABLES: [char; 4] = ['z', 'w', 'x', 'y'];

/// Parses a rational function in whichever single variable it uses.
pub fn parse_input(text: &str) -> Result<RatFun, ParseError> {
    let first = parse_ratfun(text, VARIABLES[0]);
    if !matches!(first, Err(ParseError::WrongVariable { .. })) {
        return first;
    }
    for v in &VARIABLES[1..] {
        if let Ok(r) = parse_ratfun(text, *v) {
            return Ok(r);
        }
    }
    first
}

fn ratfun(text: &str) -> Result<RatFun, Failure> {
    parse_input(text).map_err(|e| Failure::parse(text, e))
}

fn poly(text: &str) -> Result<UniPoly, Failure> {
    let r = ratfun(text)?;
    if !r.is_polynomial() {
        return Err(Failure::parse(text, ParseError::NotPolynomial));
    }
    let inv = r.den().coeff(0).inv().expect("non-zero denominator");
    Ok(r.num().scale(&inv))
}

fn bipoly(text: &str) -> Result<BiPoly, Failure> {
    let xy = parse_bipoly(text, ['x', 'y']);
    if let Err(ParseError::WrongVariable { .. }) = xy {
        if let Ok(f) = parse_bipoly(text, ['z', 'w']) {
            return Ok(f.renamed(['x', 'y']));
        }
    }
    xy.map_err(|e| Failure::parse(text, e))
}

/// Upward-rounded `f64` radius covering both the ball radius and the
/// rounding of its center to `f64`.
fn json_radius(b: &ComplexBall) -> f64 {
    let err = |d: &Dyadic| {
        let f = d.to_f64();
        if f.is_finite() {
            d.sub(&Dyadic::from_f64(f)).abs()
        } else {
            Dyadic::pow2(4000)
        }
    };
    let total = b.radius().add(&err(b.re())).add(&err(b.im()));
    if total.is_zero() {
        return 0.0;
    }
    total.to_f64().next_up()
}

fn ball_json(b: &ComplexBall) -> Value {
    let c = b.center_f64();
    json!({"re": c.re, "im": c.im, "radius": json_radius(b)})
}

fn ball_text(b: &ComplexBall) -> String {
    let c = b.center_f64();
    format!("{:.17} {:+.17}i ± {:.3e}", c.re, c.im, json_radius(b))
}

fn uni_text(p: &UniPoly) -> String {
    p.display_in('z').to_string()
}

fn method_name(m: CertificationMethod) -> &'static str {
    match m {
        CertificationMethod::Exact => "exact",
        CertificationMethod::Fiber => "fiber",
        CertificationMethod::Krawczyk => "krawczyk",
    }
}

fn solve(p1: &RatFun, p2: &RatFun, config: &Config) -> Result<Report, Failure> {
    let r = solve_unimodular_pair(p1, p2, config)?;
    let points: Vec<Value> = r
        .points
        .iter()
        .map(|p| {
            let mut v = ball_json(&p.z);
            let obj = v.as_object_mut().unwrap();
            obj.insert("exact".into(), json!(p.exact.as_ref().map(|e| e.to_string())));
            obj.insert("certified".into(), json!(p.certified));
            obj.insert("method".into(), json!(method_name(p.method)));
            obj.insert("values".into(), json!([ball_json(&p.values[0]), ball_json(&p.values[1])]));
            v
        })
        .collect();
    let residuals: Vec<Value> = r
        .points
        .iter()
        .map(|p| {
            json!({
                "level": [ball_json(&p.residuals[0]), ball_json(&p.residuals[1])],
                "deviation": p.deviations,
            })
        })
        .collect();
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "w": w.w.to_string(),
            "q1": w.q1.to_string(),
            "q2": w.q2.to_string(),
            "mobius": w.mobius.to_string(),
            "residual": w.residual,
        })
    });
    let trace: Vec<Value> = r
        .trace_points
        .iter()
        .map(|t| {
            let (x, y) = t.to_f64();
            json!({"x": x, "y": y, "x_exact": t.x.to_string(), "y_exact": t.y.to_string()})
        })
        .collect();
    let json = json!({
        "status": r.status.to_string(),
        "bound": r.bound,
        "points": points,
        "shared_component": r.shared_component.as_ref().map(|g| g.to_string()),
        "witness": witness,
        "witness_error": r.witness_error,
        "trace_points": trace,
        "residuals": residuals,
        "precision_bits": r.precision_bits,
    });
    let mut text = format!("status: {}\nbound: {}\n", r.status, r.bound);
    match r.status {
        SolutionStatus::Finite => {
            let _ = writeln!(text, "points: {}", r.points.len());
            for p in &r.points {
                let _ = match &p.exact {
                    Some(e) => writeln!(text, "  z = {e} (exact)"),
                    None => writeln!(text, "  z = {} ({})", ball_text(&p.z), method_name(p.method)),
                };
            }
        }
        SolutionStatus::Degenerate => {
            if let Some(g) = &r.shared_component {
                let _ = writeln!(text, "shared component: {g}");
            }
            if let Some(w) = &r.witness {
                let _ = writeln!(
                    text,
                    "witness: W = {}, Q1 = {}, Q2 = {}, M = {}, residual = {:.3e}",
                    w.w, w.q1, w.q2, w.mobius, w.residual
                );
            }
            if let Some(e) = &r.witness_error {
                let _ = writeln!(text, "witness: {e}");
            }
        }
    }
    Ok(Report { json, text })
}

fn blaschke_check(q: &RatFun) -> Result<Report, Failure> {
    let preserving = is_circle_preserving(q)?;
    let finite = is_finite_blaschke(q)?;
    let json = json!({
        "input": q.to_string(),
        "verdict": finite,
        "circle_preserving": preserving,
        "reflection_criterion": reflection_criterion(q),
        "cayley_criterion": cayley_criterion(q),
        "finite_blaschke": finite,
    });
    let text = format!(
        "input: {q}\ncircle preserving: {preserving}\nfinite Blaschke product: {finite}\n"
    );
    Ok(Report { json, text })
}

fn blaschke_split(q: &RatFun, config: &Config) -> Result<Report, Failure> {
    if !is_circle_preserving(q)? {
        let json = json!({
            "input": q.to_string(),
            "circle_preserving": false,
            "unimodular_constant": null,
            "factors": [],
        });
        let text = format!("input: {q}\ncircle preserving: false\n");
        return Ok(Report { json, text });
    }
    let form = blaschke_quotient_split(q, config.precision_bits)?;
    let factors: Vec<Value> = form
        .factors
        .iter()
        .map(|f| {
            json!({
                "zero": ball_json(&f.zero),
                "exact": f.exact_zero.as_ref().map(|e| e.to_string()),
                "multiplicity": f.multiplicity,
                "inside": f.inside,
            })
        })
        .collect();
    let json = json!({
        "input": q.to_string(),
        "circle_preserving": true,
        "unimodular_constant": ball_json(&form.unimodular_constant),
        "factors": factors,
    });
    let mut text = format!(
        "input: {q}\ncircle preserving: true\nzeta: {}\n",
        ball_text(&form.unimodular_constant)
    );
    for f in &form.factors {
        let zero = f
            .exact_zero
            .as_ref()
            .map_or_else(|| ball_text(&f.zero), |e| e.to_string());
        let side = if f.inside { "B1" } else { "B2" };
        let _ = writeln!(text, "  {side}: zero {zero}, multiplicity {}", f.multiplicity);
    }
    Ok(Report { json, text })
}

fn argcd(p1: &UniPoly, p2: &UniPoly, config: &Config) -> Result<Report, Failure> {
    let r = ar_accumulate(p1, p2, config.max_k, config)?;
    let table: Vec<Value> = r
        .table
        .iter()
        .map(|(k, g)| json!({"k": k, "gcd": uni_text(g)}))
        .collect();
    let json = json!({
        "horizon": config.max_k,
        "table": table,
        "stabilized_F": uni_text(&r.stabilized_f),
        "stabilized_at": r.stabilized_at,
        "consistency": r.consistency,
    });
    let mut text = String::new();
    for (k, g) in &r.table {
        let _ = writeln!(text, "k = {k:>3}: {}", uni_text(g));
    }
    let _ = writeln!(text, "stabilized F: {}", uni_text(&r.stabilized_f));
    if let Some(at) = r.stabilized_at {
        let _ = writeln!(text, "stabilized at k = {at}");
    }
    let _ = writeln!(text, "consistent with solve: {}", r.consistency);
    Ok(Report { json, text })
}

fn unimodular_json(p: &UnimodularPoint) -> Value {
    json!({
        "x": ball_json(&p.x),
        "y": ball_json(&p.y),
        "exact": p.exact.as_ref().map(|(x, y)| [x.to_string(), y.to_string()]),
        "real_preimage": p.real_preimage.as_ref().map(|(x, y)| [x.to_string(), y.to_string()]),
    })
}

fn unimodular_text(p: &UnimodularPoint) -> String {
    match &p.exact {
        Some((x, y)) => format!("({x}, {y})"),
        None => format!("({}, {})", ball_text(&p.x), ball_text(&p.y)),
    }
}

fn curve_analyze(f: &BiPoly, config: &Config) -> Result<Report, Failure> {
    let curve = PlaneCurve::new(f, false);
    let r = analyze_unimodular(&curve, config)?;
    let status = match r.status {
        CurveStatus::InfiniteUnimodular => "INFINITE_UNIMODULAR",
        CurveStatus::FiniteBounded => "FINITE_BOUNDED",
    };
    let json = json!({
        "status": status,
        "curve": curve.f.to_string(),
        "degree": curve.degree,
        "assumed_irreducible": curve.assumed_irreducible,
        "cayley_image": r.cayley_image.to_string(),
        "inverse_cayley_image": r.inverse_cayley_image.to_string(),
        "reality": {
            "real": r.reality.real,
            "ratio": r.reality.ratio.as_ref().map(|c| c.to_string()),
            "lambda": r.reality.lambda.as_ref().map(|c| c.to_string()),
            "real_form": r.reality.real_form.as_ref().map(|c| c.to_string()),
        },
        "simple_point": r.simple_point.as_ref().map(unimodular_json),
        "points": r.points.iter().map(unimodular_json).collect::<Vec<_>>(),
        "bound": r.bound,
        "max_singular_points": r.max_singular_points,
    });
    let mut text = format!("curve: {}\nstatus: {status}\nbound: {}\n", curve.f, r.bound);
    if let Some(p) = &r.simple_point {
        let _ = writeln!(text, "simple point: {}", unimodular_text(p));
    }
    if r.status == CurveStatus::FiniteBounded {
        let _ = writeln!(text, "points: {}", r.points.len());
        for p in &r.points {
            let _ = writeln!(text, "  {}", unimodular_text(p));
        }
    }
    Ok(Report { json, text })
}

fn curve_implicitize(p1: &RatFun, p2: &RatFun) -> Result<Report, Failure> {
    let imp = implicitize(p1, p2)?;
    let f = &imp.curve.f;
    let json = json!({
        "curve": f.to_string(),
        "raw": imp.raw.to_string(),
        "power": imp.power,
        "degree": imp.curve.degree,
        "degree_x": f.degree_in(0),
        "degree_y": f.degree_in(1),
    });
    let mut text = format!("F(x, y) = {f}\n");
    if imp.power > 1 {
        let _ = writeln!(text, "resultant = c * F^{}", imp.power);
    }
    Ok(Report { json, text })
}

fn decompose(p1: &RatFun, p2: &RatFun) -> Result<Report, Failure> {
    let w = luroth_generator(p1, p2)?;
    let q1 = left_compose_factor(p1, &w)?;
    let q2 = left_compose_factor(p2, &w)?;
    let json = json!({
        "w": w.to_string(),
        "degree": w.degree(),
        "q1": q1.to_string(),
        "q2": q2.to_string(),
    });
    let text = format!("W = {w}\nQ1 = {q1}\nQ2 = {q2}\n");
    Ok(Report { json, text })
}

fn bound(p1: &RatFun, p2: &RatFun) -> Result<Report, Failure> {
    let b = count_bound(p1, p2);
    let json = json!({"n1": p1.degree(), "n2": p2.degree(), "bound": b});
    let text = format!("({} + {})^2 = {b}\n", p1.degree(), p2.degree());
    Ok(Report { json, text })
}

#[cfg(test)]
mod tests {
    use super::*;
    use levelcurves::arith::GaussianRational;

    #[test]
    fn variables_are_detected() {
        assert_eq!(parse_input("x^2+1").unwrap(), parse_input("z^2+1").unwrap());
        assert!(matches!(parse_input("z+x"), Err(ParseError::WrongVariable { .. })));
    }

    #[test]
    fn radius_covers_rounding() {
        let b = ComplexBall::from_gaussian(&GaussianRational::from_ratio(1, 3), 128);
        assert!(json_radius(&b) > 1e-18);
        let e = ComplexBall::from_gaussian(&GaussianRational::from_integer(-1), 128);
        assert_eq!(json_radius(&e), 0.0);
    }
}
