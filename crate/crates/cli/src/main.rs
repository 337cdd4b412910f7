mod input;
mod output;

use std::io::Write;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jck_core::bounds::{degree_bound, pi, pibar, pibar_equals_pi, table_tsv, theta};
use jck_core::catalog::{catalog_get, catalog_list};
use jck_core::certify::verify_all;
use jck_core::cremona::{adjoint_cremona, bidegree_certificate, verify_involution, CremonaMap};
use jck_core::cubic::{certify_curve, inversion_i, nu3, twisted_cubic_through, StructuralPair, Translation};
use jck_core::scalar::format_scalar;
use jck_core::variety::{a3_explicit, from_cremona, oadp_solve, scroll_param, three_point_curve_check, ScrollKind, VarietyParam};
use jck_core::{Error, JordanAlgebra, RunConfig, Scalar};
use serde_json::{json, Value};

use output::Format;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

/// The result of a command: its payload and whether every certificate in it
/// passed.
struct Outcome {
    value: Value,
    passed: bool,
    /// Replaces the generic rendering under `--format text`.
    table: Option<String>,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Self { value, passed: true, table: None }
    }

    fn checked(value: Value, passed: bool) -> Self {
        Self { value, passed, table: None }
    }
}

#[derive(Parser)]
#[command(name = "jck", version, about = "Exact computations with cubic Jordan algebras, twisted cubics and Cremona maps")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every sampled "general point".
    #[arg(long, global = true, env = "JCK_SEED")]
    seed: Option<u64>,
    /// Samples per randomized check.
    #[arg(long, global = true, env = "JCK_SAMPLES")]
    samples: Option<usize>,
    /// Sample entries are drawn from [-B, B].
    #[arg(long, global = true)]
    sample_bound: Option<u32>,
    /// Resampling attempts before a genericity failure.
    #[arg(long, global = true)]
    retry_limit: Option<usize>,
    /// Largest dimension whose identities are checked symbolically.
    #[arg(long, global = true)]
    symbolic_dim_threshold: Option<usize>,
    /// Lines used by the common-factor test.
    #[arg(long, global = true)]
    gcd_lines: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
}

impl Global {
    fn config(&self) -> RunConfig {
        let d = RunConfig::default();
        RunConfig {
            seed: self.seed.unwrap_or(d.seed),
            sample_bound: self.sample_bound.unwrap_or(d.sample_bound),
            samples: self.samples.unwrap_or(d.samples),
            retry_limit: self.retry_limit.unwrap_or(d.retry_limit),
            symbolic_dim_threshold: self.symbolic_dim_threshold.unwrap_or(d.symbolic_dim_threshold),
            gcd_lines: self.gcd_lines.unwrap_or(d.gcd_lines),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra and compute its generic minimum polynomial.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// The built-in algebras.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// The twisted cubic X_J and its automorphisms.
    #[command(subcommand)]
    Cubic(CubicCmd),
    /// Quadro-quadric Cremona involutions.
    #[command(subcommand)]
    Cremona(CremonaCmd),
    /// Parametrized varieties and the secant through a general point.
    #[command(subcommand)]
    Variety(VarietyCmd),
    /// The bound functions pi, pibar, the degree bound and theta.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Run every acceptance criterion.
    VerifyAll,
}

#[derive(Args)]
struct AlgebraArg {
    /// Catalog name or path to a JSON algebra spec.
    #[arg(long)]
    algebra: String,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Check(AlgebraArg),
    Rank(AlgebraArg),
    Minpoly(AlgebraArg),
    /// The adjoint form, or its value at --point.
    Adjoint {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        point: Option<String>,
    },
    /// The norm form, or its value at --point.
    Norm {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        point: Option<String>,
    },
    Invert {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        point: String,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show { name: String },
}

#[derive(Subcommand)]
enum CubicCmd {
    /// [1 : x : x# : N(x)].
    Nu3 {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        point: String,
    },
    /// The twisted cubic through nu3 of three points, given as [x, y, z].
    Through {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        points: String,
    },
    /// Apply I, T_omega or G_g to a point (s, x, y, t) of P^{2k+1}.
    Automorphism {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        point: String,
        #[arg(long, conflicts_with_all = ["translate", "g"])]
        inversion: bool,
        #[arg(long, value_name = "OMEGA")]
        translate: Option<String>,
        #[arg(long, requires_all = ["g_sharp", "eta"])]
        g: Option<String>,
        #[arg(long)]
        g_sharp: Option<String>,
        #[arg(long)]
        eta: Option<String>,
    },
}

#[derive(Args)]
struct MapArg {
    #[arg(long, conflicts_with = "map", required_unless_present = "map")]
    algebra: Option<String>,
    /// JSON list of quadrics in x1..xn.
    #[arg(long)]
    map: Option<String>,
    /// Number of variables of --map; inferred when omitted.
    #[arg(long, requires = "map")]
    vars: Option<usize>,
}

#[derive(Subcommand)]
enum CremonaCmd {
    Verify {
        #[command(flatten)]
        m: MapArg,
        /// The linear map ell as a JSON matrix; the identity when omitted.
        #[arg(long)]
        ell: Option<String>,
    },
    Bidegree {
        #[command(flatten)]
        m: MapArg,
    },
}

#[derive(Args)]
struct VarietyArg {
    #[arg(long, conflicts_with_all = ["scroll", "explicit_a3"])]
    algebra: Option<String>,
    /// S122 or S113, with --r.
    #[arg(long, requires = "r")]
    scroll: Option<ScrollKind>,
    #[arg(long)]
    r: Option<usize>,
    /// The explicit A3 parametrization.
    #[arg(long)]
    explicit_a3: bool,
}

#[derive(Subcommand)]
enum VarietyCmd {
    Param {
        #[command(flatten)]
        v: VarietyArg,
    },
    /// The image of the line through p and q, given as [p, q].
    LineImage {
        #[command(flatten)]
        v: VarietyArg,
        #[arg(long)]
        line: String,
    },
    ThreePoint {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        points: String,
    },
    /// The secant through q = (s, x, y, t).
    Oadp {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        q: String,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    Pi {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    Pibar {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
    },
    /// pibar(r, n, delta) against pi(r, n, delta + r(n-1) + 2).
    Equal {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
    },
    Degree {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
    },
    Theta {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// The identity over ranges such as `--r 1..6`.
    Table {
        #[arg(long, value_parser = parse_range, default_value = "1..6")]
        r: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_range, default_value = "2..8")]
        n: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_range, default_value = "1..20")]
        delta: RangeInclusive<u64>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: u64 = a.trim().parse().map_err(|e| format!("{s}: {e}"))?;
    let b: u64 = b.trim_start_matches('=').trim().parse().map_err(|e| format!("{s}: {e}"))?;
    if a > b {
        return Err(format!("{s}: empty range"));
    }
    Ok(a..=b)
}

fn vec_json(v: &[Scalar]) -> Value {
    json!(v.iter().map(format_scalar).collect::<Vec<_>>())
}

fn cremona_of(m: &MapArg, cfg: &RunConfig) -> Result<(CremonaMap, Option<JordanAlgebra>), CliError> {
    match (&m.algebra, &m.map) {
        (Some(a), _) => {
            let j = input::algebra(a, cfg)?;
            Ok((adjoint_cremona(&j)?, Some(j)))
        }
        (None, Some(text)) => Ok((CremonaMap::from_components(input::polys(text, "--map", m.vars)?)?, None)),
        (None, None) => Err(CliError::Usage("one of --algebra or --map is required".into())),
    }
}

fn variety_of(v: &VarietyArg, cfg: &RunConfig) -> Result<VarietyParam, CliError> {
    if v.explicit_a3 {
        return Ok(a3_explicit());
    }
    if let Some(kind) = v.scroll {
        return Ok(scroll_param(kind, v.r.unwrap_or(1))?);
    }
    let Some(name) = &v.algebra else {
        return Err(CliError::Usage("one of --algebra, --scroll or --explicit-a3 is required".into()));
    };
    let j = input::algebra(name, cfg)?;
    let phi = adjoint_cremona(&j)?;
    let cert = verify_involution(&phi, None)?;
    Ok(from_cremona(&phi, &cert, name)?)
}

fn run(cmd: &Command, cfg: &RunConfig, format: Format) -> Result<Outcome, CliError> {
    Ok(match cmd {
        Command::Algebra(c) => algebra(c, cfg)?,
        Command::Catalog(CatalogCmd::List) => Outcome::ok(json!(catalog_list())),
        Command::Catalog(CatalogCmd::Show { name }) => {
            let e = catalog_get(name, cfg)?;
            let texts = |p: &[jck_core::MultiPoly]| p.iter().map(|f| f.to_text()).collect::<Vec<_>>();
            let (norm, adjoint) = if e.dim() <= cfg.symbolic_dim_threshold && e.algebra.rank() >= 2 {
                (json!(e.algebra.norm_form()?.to_text()), json!(texts(e.algebra.adjoint_form()?.components())))
            } else {
                (Value::Null, Value::Null)
            };
            Outcome::ok(json!({
                "name": e.name,
                "origin": e.origin,
                "dim": e.dim(),
                "rank": e.algebra.rank(),
                "spec": e.spec().to_json(),
                "norm": norm,
                "adjoint": adjoint,
                "reference_norm": e.reference_norm.as_ref().map(|p| p.to_text()),
                "reference_adjoint": e.reference_adjoint.as_deref().map(texts),
            }))
        }
        Command::Cubic(c) => cubic(c, cfg)?,
        Command::Cremona(c) => cremona(c, cfg)?,
        Command::Variety(c) => variety(c, cfg)?,
        Command::Bounds(c) => bounds(c, format)?,
        Command::VerifyAll => {
            let report = verify_all(cfg)?;
            let mut table = String::new();
            for c in &report.criteria {
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                table.push_str(&format!("{verdict}  {:>2}  {:<40} {:>5} checks", c.id, c.name, c.checks));
                if !c.sampled.is_empty() {
                    table.push_str(&format!("  (sampled: {})", c.sampled.join(", ")));
                }
                table.push('\n');
                for f in &c.failures {
                    table.push_str(&format!("          {f}\n"));
                }
            }
            Outcome { table: Some(table.trim_end().to_string()), ..Outcome::checked(json!(report), report.all_passed) }
        }
    })
}

fn algebra(c: &AlgebraCmd, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let load = |a: &AlgebraArg| input::algebra(&a.algebra, cfg);
    Ok(Outcome::ok(match c {
        AlgebraCmd::Check(a) => {
            let j = load(a)?;
            json!({"dim": j.dim(), "certificate": j.certificate()?})
        }
        AlgebraCmd::Rank(a) => json!({"rank": load(a)?.rank()}),
        AlgebraCmd::Minpoly(a) => {
            let j = load(a)?;
            let mp = j.min_poly()?;
            json!({
                "rank": mp.m,
                "sigma": mp.sigma.iter().map(|p| p.to_text()).collect::<Vec<_>>(),
                "terms": mp.sigma.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            })
        }
        AlgebraCmd::Adjoint { a, point } => {
            let j = load(a)?;
            match point {
                Some(p) => json!({"value": vec_json(&j.adjoint(&input::vector(p, "--point", j.dim())?)?)}),
                None => json!({"adjoint": j.adjoint_form()?.components().iter().map(|p| p.to_text()).collect::<Vec<_>>()}),
            }
        }
        AlgebraCmd::Norm { a, point } => {
            let j = load(a)?;
            match point {
                Some(p) => json!({"value": format_scalar(&j.norm(&input::vector(p, "--point", j.dim())?)?)}),
                None => json!({"norm": j.norm_form()?.to_text()}),
            }
        }
        AlgebraCmd::Invert { a, point } => {
            let j = load(a)?;
            json!({"inverse": vec_json(&j.invert(&input::vector(point, "--point", j.dim())?)?)})
        }
    }))
}

fn cubic(c: &CubicCmd, cfg: &RunConfig) -> Result<Outcome, CliError> {
    Ok(match c {
        CubicCmd::Nu3 { a, point } => {
            let j = input::algebra(&a.algebra, cfg)?;
            Outcome::ok(json!({"point": nu3(&j, &input::vector(point, "--point", j.dim())?)?.to_strings()}))
        }
        CubicCmd::Through { a, points } => {
            let j = input::algebra(&a.algebra, cfg)?;
            let p = input::vectors(points, "--points", 3, j.dim())?;
            let curve = twisted_cubic_through(&j, &p[0], &p[1], &p[2])?;
            let cert = certify_curve(&j, &curve, &p[0], &p[1], &p[2])?;
            Outcome::checked(json!({"curve": curve.to_json(), "certificate": cert}), cert.passed())
        }
        CubicCmd::Automorphism { a, point, inversion, translate, g, g_sharp, eta } => {
            let j = input::algebra(&a.algebra, cfg)?;
            let k = j.dim();
            let m = input::zorn(point, "--point", k)?;
            let image = match (inversion, translate, g) {
                (true, _, _) => inversion_i(&m),
                (_, Some(w), _) => Translation::new(&j, &input::vector(w, "--translate", k)?)?.apply(&m),
                (_, _, Some(g)) => {
                    let g = input::matrix(g, "--g", k)?;
                    let gs = input::matrix(g_sharp.as_deref().unwrap_or_default(), "--g-sharp", k)?;
                    let eta = input::single(eta.as_deref().unwrap_or_default(), "--eta")?;
                    StructuralPair::verify(&j, g, gs, eta)?.apply(&m)
                }
                _ => return Err(CliError::Usage("one of --inversion, --translate or --g is required".into())),
            };
            Outcome::ok(json!({"point": image.to_strings()}))
        }
    })
}

fn cremona(c: &CremonaCmd, cfg: &RunConfig) -> Result<Outcome, CliError> {
    Ok(match c {
        CremonaCmd::Verify { m, ell } => {
            let (phi, j) = cremona_of(m, cfg)?;
            let ell = ell.as_deref().map(|e| input::matrix(e, "--ell", phi.num_vars())).transpose()?;
            let cert = verify_involution(&phi, ell.as_deref())?;
            let mut value = json!(cert.to_json());
            if let Some(j) = j {
                value["n_matches_norm"] = json!(cert.n_cubic == j.norm_form()?);
            }
            let passed = value.get("n_matches_norm").map_or(true, |v| v == &json!(true));
            Outcome::checked(value, passed)
        }
        CremonaCmd::Bidegree { m } => {
            let (phi, _) = cremona_of(m, cfg)?;
            Outcome::ok(json!(bidegree_certificate(&phi, cfg)?))
        }
    })
}

fn variety(c: &VarietyCmd, cfg: &RunConfig) -> Result<Outcome, CliError> {
    Ok(match c {
        VarietyCmd::Param { v } => {
            let v = variety_of(v, cfg)?;
            let rank = v.nondegeneracy_rank(cfg)?;
            Outcome::checked(
                json!({
                    "r": v.r(),
                    "source": v.source(),
                    "components": v.components().iter().map(|p| p.to_text()).collect::<Vec<_>>(),
                    "nondegeneracy_rank": rank,
                }),
                rank == 2 * v.r() + 4,
            )
        }
        VarietyCmd::LineImage { v, line } => {
            let v = variety_of(v, cfg)?;
            let pq = input::vectors(line, "--line", 2, v.r() + 2)?;
            let li = v.line_image(&pq[0], &pq[1])?;
            Outcome::ok(json!({"tuple": li.tuple_text(), "degree": li.degree, "span_dim": li.span_dim}))
        }
        VarietyCmd::ThreePoint { a, points } => {
            let j = input::algebra(&a.algebra, cfg)?;
            let p = input::vectors(points, "--points", 3, j.dim())?;
            let phi = adjoint_cremona(&j)?;
            let v = from_cremona(&phi, &verify_involution(&phi, None)?, &a.algebra)?;
            let ok = three_point_curve_check(&v, &j, &p[0], &p[1], &p[2])?;
            Outcome::checked(json!({"curve_on_variety": ok}), ok)
        }
        VarietyCmd::Oadp { a, q } => {
            let j = input::algebra(&a.algebra, cfg)?;
            let sol = oadp_solve(&j, &input::zorn(q, "--q", j.dim())?)?;
            Outcome::checked(json!(sol.to_json()), sol.passed())
        }
    })
}

fn bounds(c: &BoundsCmd, format: Format) -> Result<Outcome, CliError> {
    // Integers print bare, as JSON numbers of any size.
    let raw = |s: String| Outcome::ok(serde_json::from_str(&s).expect("decimal digits are a JSON number"));
    Ok(match c {
        BoundsCmd::Pi { r, n, d } => raw(pi(*r, *n, *d)?.to_string()),
        BoundsCmd::Pibar { r, n, delta } => raw(pibar(*r, *n, *delta)?.to_string()),
        BoundsCmd::Equal { r, n, delta } => {
            let id = pibar_equals_pi(*r, *n, *delta)?;
            Outcome::checked(json!(id), id.equal)
        }
        BoundsCmd::Degree { r, n, delta } => Outcome::ok(json!(format_scalar(&degree_bound(*r, *n, *delta)?))),
        BoundsCmd::Theta { r, n, k } => raw(theta(*r, *n, *k)?.to_string()),
        BoundsCmd::Table { r, n, delta } => {
            let tsv = table_tsv(r.clone(), n.clone(), delta.clone())?;
            let passed = tsv.lines().skip(1).all(|l| l.ends_with("true"));
            match format {
                Format::Text => Outcome::checked(Value::String(tsv.trim_end().to_string()), passed),
                Format::Json => {
                    let mut rows = Vec::new();
                    for r in r.clone() {
                        for n in n.clone() {
                            for delta in delta.clone().filter(|d| n >= 2 && *d + 1 >= n) {
                                rows.push(json!(pibar_equals_pi(r, n, delta)?));
                            }
                        }
                    }
                    Outcome::checked(json!(rows), passed)
                }
            }
        }
    })
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownAlgebra(_)
            | Error::Parse(_)
            | Error::InvalidParameter(_)
            | Error::DimensionMismatch { .. }
            | Error::ArityMismatch { .. }
            | Error::VarCountMismatch { .. }
            | Error::ZeroVector
            | Error::DegenerateLine
    )
}

fn command_path(cmd: &Command) -> (&'static str, &'static str) {
    match cmd {
        Command::Algebra(c) => ("jordan", match c {
            AlgebraCmd::Check(_) => "validate",
            AlgebraCmd::Rank(_) => "rank",
            AlgebraCmd::Minpoly(_) => "min_poly",
            AlgebraCmd::Adjoint { .. } => "adjoint",
            AlgebraCmd::Norm { .. } => "norm",
            AlgebraCmd::Invert { .. } => "invert",
        }),
        Command::Catalog(_) => ("catalog", "catalog_get"),
        Command::Cubic(c) => ("cubic", match c {
            CubicCmd::Nu3 { .. } => "nu3",
            CubicCmd::Through { .. } => "twisted_cubic_through",
            CubicCmd::Automorphism { .. } => "automorphism",
        }),
        Command::Cremona(c) => ("cremona", match c {
            CremonaCmd::Verify { .. } => "verify_involution",
            CremonaCmd::Bidegree { .. } => "bidegree_certificate",
        }),
        Command::Variety(c) => ("variety", match c {
            VarietyCmd::Param { .. } => "from_cremona",
            VarietyCmd::LineImage { .. } => "line_image",
            VarietyCmd::ThreePoint { .. } => "three_point_curve_check",
            VarietyCmd::Oadp { .. } => "oadp_solve",
        }),
        Command::Bounds(_) => ("bounds", "bounds"),
        Command::VerifyAll => ("certify", "verify_all"),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = cli.global.config();
    let format = cli.global.format;
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let (module, operation) = command_path(&cli.command);
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let diagnostic = |error: String| {
        json!({"status": "fail", "module": module, "operation": operation, "input": argv, "error": error})
    };
    match run(&cli.command, &cfg, format) {
        Ok(Outcome { value, passed, table }) => {
            match (format, table) {
                (Format::Text, Some(t)) => emit(&t),
                _ => emit(&output::render(&value, format)),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", diagnostic("certificate did not pass".into()));
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) if is_usage(&e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            emit(&output::render(&diagnostic(e.to_string()), format));
            ExitCode::from(1)
        }
    }
}
