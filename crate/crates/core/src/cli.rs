//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::json::{poly_to_json, ratfunc_to_json};
use crate::algebra::rational::{self, format_f64_sig17, format_sig17, Rational};
use crate::algebra::{series_coefficients, AlgebraError, LaurentPoly3, RatFunc3};
use crate::analysis::{
    ce_closed_form_check, concentratable_entanglement_series, critical_lambda_sweep, fidelity_table,
    AnalysisError, AsymptoticCriterion, FidelityAsymptotics, DEFAULT_TOL,
};
use crate::family::{builtin, builtins, parse_family_spec, realize, FamilyError, FamilySpec, Sld, Wep};
use crate::oracle::{sld_bruteforce_colouring, sld_bruteforce_stabilizer, OracleError, DEFAULT_CAP};
use crate::transfer::{build_transfer_system, family_gf, weps_by_iteration, TransferError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("verification failed for {0} member(s)")]
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Family(FamilyError::UnknownFamily(_)) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "graph-wep", version, about = "Weight enumerators of recursively definable graph-state families")]
struct Cli {
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// Built-in family name.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    family: Option<String>,
    /// Family spec document (JSON).
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Figure {
    Fig3,
    Fig4,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the built-in families.
    Families {
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// The family's generating function.
    Gf {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Weight enumerator of member r.
    Wep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'r', long = "r-max")]
        r: usize,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Sector lengths of member r.
    Sld {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'r', long = "r-max")]
        r: usize,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Cross-check series coefficients, transfer iteration and both brute-force oracles.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 16)]
        max_qubits: usize,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Concentratable entanglement for r = 0..=r_max.
    Ce {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'r', long = "r-max", default_value_t = 10)]
        r: usize,
        /// Also reconstruct the values from the poles of the generating function.
        #[arg(long)]
        asymptotic: bool,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Fidelity of member r under depolarizing noise.
    Fidelity {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'r', long = "r-max", default_value_t = 10)]
        r: usize,
        #[arg(long, default_value = "0.8")]
        lambda: String,
        /// Include the single-pole approximation.
        #[arg(long)]
        asymptotic: bool,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Critical noise level of the purity criterion for r = 1..=r_max.
    CriticalLambda {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'r', long = "r-max", default_value_t = 20)]
        r: usize,
        /// Include the large-r threshold.
        #[arg(long)]
        asymptotic: bool,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// CSV data series for the fidelity-error and critical-noise figures.
    Figure {
        #[arg(value_enum)]
        which: Figure,
        #[arg(short = 'r', long = "r-max")]
        r: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = run_with(args, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    code
}

pub fn run_with<I: IntoIterator<Item = OsString>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => Err(CliError::Usage(e.to_string())),
        },
        None => execute(cli.command),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_family(args: &FamilyArgs) -> Result<FamilySpec, CliError> {
    match (&args.family, &args.spec) {
        (Some(name), _) => Ok(builtin(name)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(parse_family_spec(&text)?)
        }
        (None, None) => Err(CliError::Usage("one of --family or --spec is required".into())),
    }
}

fn unsupported(format: OutputFormat, what: &str) -> CliError {
    CliError::Usage(format!("{format:?} output is not available for {what}").to_lowercase())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn big_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn float_json(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

fn sld_json(sld: &Sld) -> Value {
    Value::Array(sld.lengths().iter().map(big_json).collect())
}

fn sld_text(sld: &Sld) -> String {
    sld.lengths().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn poly_csv(out: &mut String, part: &str, p: &LaurentPoly3) {
    for (m, c) in p.terms() {
        let _ = writeln!(out, "{part},{},{},{},{c}", m.x, m.y, m.z);
    }
}

fn gf_csv(f: &RatFunc3) -> String {
    let mut s = String::from("part,e_x,e_y,e_z,c\n");
    poly_csv(&mut s, "num", f.numerator());
    poly_csv(&mut s, "den", f.denominator());
    s
}

type Output = (String, i32);

fn execute(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Families { format } => families(format.unwrap_or(OutputFormat::Csv)),
        Command::Gf { family, format } => {
            let sys = build_transfer_system(&load_family(&family)?);
            let gf = family_gf(&sys)?;
            let text = match format.unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => pretty(&ratfunc_to_json(&gf)),
                OutputFormat::Latex => format!("{}\n", gf.to_latex()),
                OutputFormat::Csv => gf_csv(&gf),
            };
            Ok((text, 0))
        }
        Command::Wep { family, r, format } => {
            let wep = member_wep(&load_family(&family)?, r)?;
            let text = match format.unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => pretty(&poly_to_json(wep.poly())),
                OutputFormat::Latex => format!("{}\n", wep.poly().to_latex()),
                OutputFormat::Csv => {
                    let mut s = String::from("part,e_x,e_y,e_z,c\n");
                    poly_csv(&mut s, "wep", wep.poly());
                    s
                }
            };
            Ok((text, 0))
        }
        Command::Sld { family, r, format } => {
            let sld = member_wep(&load_family(&family)?, r)?.to_sld();
            let text = match format.unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => format!("{}\n", serde_json::to_string(&sld_json(&sld)).expect("serializes")),
                OutputFormat::Csv => {
                    let mut s = String::from("k,A_k\n");
                    for (k, a) in sld.lengths().iter().enumerate() {
                        let _ = writeln!(s, "{k},{a}");
                    }
                    s
                }
                f => return Err(unsupported(f, "sector lengths")),
            };
            Ok((text, 0))
        }
        Command::Verify { family, max_qubits, format } => verify(&load_family(&family)?, max_qubits, format),
        Command::Ce { family, r, asymptotic, format } => ce(&load_family(&family)?, r, asymptotic, format),
        Command::Fidelity {
            family,
            r,
            lambda,
            asymptotic,
            format,
        } => fidelity(&load_family(&family)?, r, &lambda, asymptotic, format),
        Command::CriticalLambda {
            family,
            r,
            asymptotic,
            format,
        } => critical(&load_family(&family)?, r, asymptotic, format),
        Command::Figure { which, r, out } => figure(which, r, out.as_deref()),
    }
}

fn families(format: OutputFormat) -> Result<Output, CliError> {
    let specs = builtins();
    let text = match format {
        OutputFormat::Json => pretty(&Value::Array(
            specs
                .iter()
                .map(|s| {
                    let law = s.qubit_law();
                    json!({"name": s.name(), "recursion_start": s.recursion_start(), "qubit_count": {"offset": law.offset, "step": law.step}})
                })
                .collect(),
        )),
        OutputFormat::Csv => {
            let mut t = String::from("name,recursion_start,offset,step\n");
            for s in &specs {
                let law = s.qubit_law();
                let _ = writeln!(t, "{},{},{},{}", s.name(), s.recursion_start(), law.offset, law.step);
            }
            t
        }
        f => return Err(unsupported(f, "the family list")),
    };
    Ok((text, 0))
}

fn member_wep(spec: &FamilySpec, r: usize) -> Result<Wep, CliError> {
    let sys = build_transfer_system(spec);
    Ok(weps_by_iteration(&sys, r)?.swap_remove(r))
}

fn parse_lambda(text: &str) -> Result<Rational, CliError> {
    rational::parse_rational(text).map_err(|e| CliError::Usage(format!("--lambda: {e}")))
}

struct VerifyRow {
    r: usize,
    qubits: usize,
    series: Sld,
    iteration: Sld,
    colouring: Option<Sld>,
    stabilizer: Option<Sld>,
}

impl VerifyRow {
    fn agrees(&self) -> bool {
        self.series == self.iteration
            && self.colouring.as_ref().is_none_or(|s| *s == self.series)
            && self.stabilizer.as_ref().is_none_or(|s| *s == self.series)
    }
}

/// Members with `n(r) <= max_qubits`; custom laws with step 0 are cut off at 64 members.
fn members_up_to(spec: &FamilySpec, max_qubits: usize) -> Vec<usize> {
    (0..64).take_while(|&r| spec.qubits(r) <= max_qubits).collect()
}

fn verify(spec: &FamilySpec, max_qubits: usize, format: Option<OutputFormat>) -> Result<Output, CliError> {
    if max_qubits > DEFAULT_CAP {
        return Err(CliError::Usage(format!("--max-qubits is capped at {DEFAULT_CAP}")));
    }
    let sys = build_transfer_system(spec);
    let gf = family_gf(&sys)?;
    let rs = members_up_to(spec, max_qubits);
    let r_max = rs.last().copied().unwrap_or(0);
    let series = series_coefficients(&gf, r_max)?;
    let iterated = weps_by_iteration(&sys, r_max)?;
    let rows = rs
        .par_iter()
        .map(|&r| -> Result<VerifyRow, CliError> {
            let (colouring, stabilizer) = match realize(spec, r) {
                Ok(g) => (
                    Some(sld_bruteforce_colouring(&g, max_qubits)?),
                    Some(sld_bruteforce_stabilizer(&g, max_qubits)?),
                ),
                Err(FamilyError::NotRealizable(_)) => (None, None),
                Err(e) => return Err(e.into()),
            };
            Ok(VerifyRow {
                r,
                qubits: spec.qubits(r),
                series: Wep::from_poly(series[r].clone())?.to_sld(),
                iteration: iterated[r].to_sld(),
                colouring,
                stabilizer,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let failures = rows.iter().filter(|row| !row.agrees()).count();
    let opt = |s: &Option<Sld>| s.as_ref().map_or("n/a".to_string(), sld_text);
    let text = match format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            let mut t = String::from("r,qubits,series,iteration,colouring,stabilizer,agree\n");
            for row in &rows {
                let _ = writeln!(
                    t,
                    "{},{},{},{},{},{},{}",
                    row.r,
                    row.qubits,
                    sld_text(&row.series),
                    sld_text(&row.iteration),
                    opt(&row.colouring),
                    opt(&row.stabilizer),
                    row.agrees()
                );
            }
            t
        }
        OutputFormat::Json => pretty(&json!({
            "family": spec.name(),
            "max_qubits": max_qubits,
            "ok": failures == 0,
            "rows": rows.iter().map(|row| json!({
                "r": row.r,
                "qubits": row.qubits,
                "series": sld_json(&row.series),
                "iteration": sld_json(&row.iteration),
                "colouring": row.colouring.as_ref().map(sld_json),
                "stabilizer": row.stabilizer.as_ref().map(sld_json),
                "agree": row.agrees(),
            })).collect::<Vec<_>>(),
        })),
        f => return Err(unsupported(f, "verify")),
    };
    if failures > 0 {
        let err = CliError::Mismatch(failures);
        return Ok((format!("{text}# {err}\n"), err.exit_code()));
    }
    Ok((text, 0))
}

fn ce(spec: &FamilySpec, r_max: usize, asymptotic: bool, format: Option<OutputFormat>) -> Result<Output, CliError> {
    let sys = build_transfer_system(spec);
    let values = concentratable_entanglement_series(&sys, r_max)?;
    let reconstructed = if asymptotic {
        Some(ce_closed_form_check(&sys, r_max)?.rows.into_iter().map(|row| row.reconstructed).collect::<Vec<_>>())
    } else {
        None
    };
    let text = match format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => pretty(&json!({
            "family": spec.name(),
            "rows": values.iter().enumerate().map(|(r, (cbar, c))| {
                let mut row = json!({
                    "r": r,
                    "qubits": spec.qubits(r),
                    "C_bar": cbar.to_string(),
                    "C": c.to_string(),
                    "C_float": float_json(rational::to_f64(c)),
                });
                if let Some(rec) = &reconstructed {
                    row["C_bar_residues"] = float_json(rec[r]);
                }
                row
            }).collect::<Vec<_>>(),
        })),
        OutputFormat::Csv => {
            let mut t = String::from("r,qubits,C_bar,C");
            if asymptotic {
                t.push_str(",C_bar_residues");
            }
            t.push('\n');
            for (r, (cbar, c)) in values.iter().enumerate() {
                let _ = write!(t, "{r},{},{},{}", spec.qubits(r), format_sig17(cbar), format_sig17(c));
                if let Some(rec) = &reconstructed {
                    let _ = write!(t, ",{}", format_f64_sig17(rec[r]));
                }
                t.push('\n');
            }
            t
        }
        f => return Err(unsupported(f, "concentratable entanglement")),
    };
    Ok((text, 0))
}

fn fidelity(
    spec: &FamilySpec,
    r: usize,
    lambda_text: &str,
    asymptotic: bool,
    format: Option<OutputFormat>,
) -> Result<Output, CliError> {
    let lambda = parse_lambda(lambda_text)?;
    let sys = build_transfer_system(spec);
    let exact = crate::analysis::fidelity_exact_series(&sys, &lambda, r)?;
    let asym = if asymptotic {
        Some(FidelityAsymptotics::new(&family_gf(&sys)?, &lambda)?)
    } else {
        None
    };
    let text = match format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let approx = asym.as_ref().map(|a| a.approx_f64(r));
            pretty(&json!({
                "family": spec.name(),
                "r": r,
                "lambda": lambda_text,
                "F_exact": exact[r].to_string(),
                "F_approx": approx.map(float_json),
                "z_star": asym.as_ref().map(|a| float_json(rational::to_f64(&a.z_star))),
                "gap": approx.map(|v| float_json((rational::to_f64(&exact[r]) - v).abs())),
            }))
        }
        OutputFormat::Csv => {
            let mut t = String::from("r,qubits,F_exact");
            if asymptotic {
                t.push_str(",F_approx,delta");
            }
            t.push('\n');
            for (k, f) in exact.iter().enumerate() {
                let _ = write!(t, "{k},{},{}", spec.qubits(k), format_sig17(f));
                if let Some(a) = &asym {
                    let approx = a.approx(k);
                    let delta = (f - &approx).abs();
                    let _ = write!(t, ",{},{}", format_sig17(&approx), format_sig17(&delta));
                }
                t.push('\n');
            }
            t
        }
        f => return Err(unsupported(f, "fidelity")),
    };
    Ok((text, 0))
}

fn critical(spec: &FamilySpec, r_max: usize, asymptotic: bool, format: Option<OutputFormat>) -> Result<Output, CliError> {
    let sys = build_transfer_system(spec);
    let rs: Vec<usize> = (1..=r_max).collect();
    let members = critical_lambda_sweep(&sys, &rs, DEFAULT_TOL)?;
    let approx = if asymptotic {
        Some(AsymptoticCriterion::new(&family_gf(&sys)?).critical_lambda(DEFAULT_TOL)?)
    } else {
        None
    };
    let text = match format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => pretty(&json!({
            "family": spec.name(),
            "lambda_c": members.iter().map(|m| json!({"r": m.r, "value": m.lambda_c.map(float_json)})).collect::<Vec<_>>(),
            "lambda_c_approx": approx.map(float_json),
        })),
        OutputFormat::Csv => {
            let mut t = String::from("r,qubits,lambda_c");
            if asymptotic {
                t.push_str(",lambda_c_approx");
            }
            t.push('\n');
            for m in &members {
                let v = m.lambda_c.map_or(String::new(), format_f64_sig17);
                let _ = write!(t, "{},{},{v}", m.r, m.qubits);
                if let Some(a) = approx {
                    let _ = write!(t, ",{}", format_f64_sig17(a));
                }
                t.push('\n');
            }
            t
        }
        f => return Err(unsupported(f, "critical-lambda")),
    };
    Ok((text, 0))
}

pub const FIG3_FAMILIES: [&str; 2] = ["path", "star"];
pub const FIG4_FAMILIES: [&str; 3] = ["path", "star", "joint_squares"];

/// `family,r,qubits,F_exact,F_approx,delta` at `λ = 0.8`.
pub fn figure3_csv(r_max: usize) -> Result<String, CliError> {
    let lambda = rational::ratio(4, 5);
    let mut t = String::from("family,r,qubits,F_exact,F_approx,delta\n");
    for name in FIG3_FAMILIES {
        let sys = build_transfer_system(&builtin(name)?);
        let gf = family_gf(&sys)?;
        let (_, rows) = fidelity_table(&sys, &gf, &lambda, r_max)?;
        for row in rows {
            let delta = (&row.exact - &row.approx).abs();
            let _ = writeln!(
                t,
                "{name},{},{},{},{},{}",
                row.r,
                sys.qubits(row.r),
                format_sig17(&row.exact),
                format_sig17(&row.approx),
                format_sig17(&delta)
            );
        }
    }
    Ok(t)
}

/// `family,r,qubits,lambda_c,lambda_c_approx` for `r = 1..=r_max`.
pub fn figure4_csv(r_max: usize) -> Result<String, CliError> {
    let rs: Vec<usize> = (1..=r_max).collect();
    let mut t = String::from("family,r,qubits,lambda_c,lambda_c_approx\n");
    for name in FIG4_FAMILIES {
        let sys = build_transfer_system(&builtin(name)?);
        let approx = AsymptoticCriterion::new(&family_gf(&sys)?).critical_lambda(DEFAULT_TOL)?;
        for m in critical_lambda_sweep(&sys, &rs, DEFAULT_TOL)? {
            let v = m.lambda_c.map_or(String::new(), format_f64_sig17);
            let _ = writeln!(t, "{name},{},{},{v},{}", m.r, m.qubits, format_f64_sig17(approx));
        }
    }
    Ok(t)
}

fn figure(which: Figure, r_max: Option<usize>, out: Option<&Path>) -> Result<Output, CliError> {
    let (csv, file) = match which {
        Figure::Fig3 => (figure3_csv(r_max.unwrap_or(60))?, "fig3.csv"),
        Figure::Fig4 => (figure4_csv(r_max.unwrap_or(100))?, "fig4.csv"),
    };
    match out {
        None => Ok((csv, 0)),
        Some(dir) => {
            let io = |source| CliError::Io {
                path: dir.display().to_string(),
                source,
            };
            std::fs::create_dir_all(dir).map_err(io)?;
            let path = dir.join(file);
            std::fs::write(&path, csv).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok((format!("{}\n", path.display()), 0))
        }
    }
}
