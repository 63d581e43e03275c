//! Argument parsing and command dispatch.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use mcshane_core::gapcat::{gap, gap_prime};
use mcshane_core::kernel::{g_func, s_func};
use mcshane_core::pants::{foot_widths, PantsSpec};
use mcshane_core::verify::{report_from_records, term_rows, Identity};
use mcshane_core::{BoundarySpec, ComplexValue, EndDescriptor, TraceTriple, WeierstrassClass};

use crate::output;
use crate::parallel;

/// What to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Full gap identity.
    Verify,
    /// Weierstrass identity for one class.
    Weierstrass,
    /// Weierstrass identity over all three classes.
    Combined,
    /// Perpendiculars and foot widths of one pair of pants.
    Pants,
    /// Gap width of one pair of pants.
    Gap,
    /// G and S at one complex point.
    Gs,
}

/// Output format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated values.
    #[default]
    Csv,
    /// A JSON object.
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "mcshane",
    version,
    about = "Numerical checks of McShane identities on hyperbolic cone-tori"
)]
struct Args {
    /// verify, weierstrass, combined, pants, gap or gs
    #[arg(value_enum)]
    command: Command,
    /// cusp, cone:<theta> or hole:<l>
    #[arg(long)]
    boundary: Option<String>,
    /// Largest geodesic length summed
    #[arg(long, allow_negative_numbers = true)]
    cutoff: Option<f64>,
    /// Weierstrass class A, B or C
    #[arg(long)]
    class: Option<String>,
    /// Trace triple x,y,z of another structure with the same boundary
    #[arg(long)]
    seed: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Largest accepted |residual|; the tail estimate by default
    #[arg(long, allow_negative_numbers = true)]
    tolerance: Option<f64>,
    /// Read angles in degrees
    #[arg(long)]
    degrees: bool,
    /// cusp, cone:<phi>, boundary:<l> or interior:<l>
    #[arg(long = "end-a")]
    end_a: Option<String>,
    /// cusp, cone:<phi>, boundary:<l> or interior:<l>
    #[arg(long = "end-b")]
    end_b: Option<String>,
    /// Complex x, such as 1.5, 0.5+2i or 2i
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Complex y
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Complex z
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
}

/// A validated command line.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// What to run.
    pub command: Command,
    /// `Δ₀`; a cusp for `gs`, where it is unused.
    pub boundary: BoundarySpec,
    /// Length cutoff of the series commands.
    pub cutoff: f64,
    /// Class of the `weierstrass` command.
    pub class_filter: Option<WeierstrassClass>,
    /// Trace triple replacing the symmetric seed.
    pub seed_override: Option<TraceTriple>,
    /// Output format.
    pub format: Format,
    /// Output file; stdout when absent.
    pub output_path: Option<PathBuf>,
    /// Largest accepted `|residual|`.
    pub tolerance: Option<f64>,
    /// Pants ends of `pants` and `gap`.
    pub ends: Option<(EndDescriptor, EndDescriptor)>,
    /// Arguments of `gs`.
    pub gs_args: Option<[ComplexValue; 3]>,
}

/// Rejected command line.
#[derive(Debug)]
pub enum UsageError {
    /// Reported by the parser, including `--help` and `--version`.
    Clap(clap::Error),
    /// A value the parser accepted but the command cannot use.
    Invalid(String),
}

impl UsageError {
    /// 0 for help and version output, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            UsageError::Clap(e) => e.exit_code(),
            UsageError::Invalid(_) => 2,
        }
    }

    /// Prints help to stdout and errors to stderr.
    pub fn print(&self) {
        match self {
            UsageError::Clap(e) => {
                let _ = e.print();
            }
            UsageError::Invalid(m) => eprintln!("error: {m}"),
        }
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UsageError::Clap(e) => write!(f, "{}", e.render()),
            UsageError::Invalid(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for UsageError {}

fn invalid(flag: &str, value: &str, why: impl fmt::Display) -> UsageError {
    UsageError::Invalid(format!("invalid value '{value}' for '--{flag}': {why}"))
}

fn number(flag: &str, value: &str, text: &str) -> Result<f64, UsageError> {
    text.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| invalid(flag, value, format!("'{text}' is not a finite number")))
}

fn angle(flag: &str, value: &str, text: &str, degrees: bool) -> Result<f64, UsageError> {
    let v = number(flag, value, text)?;
    Ok(if degrees { v.to_radians() } else { v })
}

/// Parses `cusp`, `cone:<theta>` or `hole:<l>`.
pub fn parse_boundary(value: &str, degrees: bool) -> Result<BoundarySpec, UsageError> {
    let flag = "boundary";
    let spec = match value.split_once(':') {
        None if value == "cusp" => return Ok(BoundarySpec::cusp()),
        Some(("cone", t)) => BoundarySpec::cone(angle(flag, value, t, degrees)?),
        Some(("hole", l)) => BoundarySpec::geodesic(number(flag, value, l)?),
        _ => {
            return Err(invalid(
                flag,
                value,
                "expected cusp, cone:<theta> or hole:<l>",
            ))
        }
    };
    spec.map_err(|e| invalid(flag, value, e))
}

/// Parses `cusp`, `cone:<phi>`, `boundary:<l>` or `interior:<l>`.
pub fn parse_end(flag: &str, value: &str, degrees: bool) -> Result<EndDescriptor, UsageError> {
    let end = match value.split_once(':') {
        None if value == "cusp" => return Ok(EndDescriptor::cusp()),
        Some(("cone", p)) => EndDescriptor::cone(angle(flag, value, p, degrees)?),
        Some(("boundary", l)) => EndDescriptor::boundary(number(flag, value, l)?),
        Some(("interior", l)) => EndDescriptor::interior(number(flag, value, l)?),
        _ => {
            return Err(invalid(
                flag,
                value,
                "expected cusp, cone:<phi>, boundary:<l> or interior:<l>",
            ))
        }
    };
    end.map_err(|e| invalid(flag, value, e))
}

/// Parses `a`, `bi`, `a+bi` or `a-bi`.
pub fn parse_complex(flag: &str, value: &str) -> Result<ComplexValue, UsageError> {
    let s: String = value.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || invalid(flag, value, "expected a, bi or a+bi");
    let Some(body) = s.strip_suffix('i') else {
        return number(flag, value, &s).map(ComplexValue::real);
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    if re.is_empty() {
        return Err(bad());
    }
    Ok(ComplexValue::new(
        number(flag, value, re)?,
        number(flag, value, im)?,
    ))
}

fn parse_class(value: &str) -> Result<WeierstrassClass, UsageError> {
    match value {
        "A" | "a" => Ok(WeierstrassClass::A),
        "B" | "b" => Ok(WeierstrassClass::B),
        "C" | "c" => Ok(WeierstrassClass::C),
        _ => Err(invalid("class", value, "expected A, B or C")),
    }
}

fn parse_seed(value: &str) -> Result<TraceTriple, UsageError> {
    let parts: Vec<&str> = value.split(',').collect();
    if parts.len() != 3 {
        return Err(invalid(
            "seed",
            value,
            "expected three comma-separated traces",
        ));
    }
    let mut t = [0.0; 3];
    for (slot, p) in t.iter_mut().zip(parts) {
        *slot = number("seed", value, p)?;
    }
    Ok(TraceTriple::new(t[0], t[1], t[2]))
}

fn positive(flag: &str, v: f64) -> Result<f64, UsageError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(invalid(flag, &v.to_string(), "must be positive and finite"))
    }
}

fn reject(present: bool, flag: &str, command: Command) -> Result<(), UsageError> {
    if present {
        let name = command.to_possible_value().expect("no skipped variants");
        Err(UsageError::Invalid(format!(
            "'--{flag}' does not apply to '{}'",
            name.get_name()
        )))
    } else {
        Ok(())
    }
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, UsageError> {
    v.as_deref()
        .ok_or_else(|| UsageError::Invalid(format!("'--{flag}' is required")))
}

/// Parses a full argument vector, program name first.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let a = Args::try_parse_from(argv).map_err(UsageError::Clap)?;
    let cmd = a.command;
    let series = matches!(
        cmd,
        Command::Verify | Command::Weierstrass | Command::Combined
    );
    let single_pants = matches!(cmd, Command::Pants | Command::Gap);
    reject(!series && a.cutoff.is_some(), "cutoff", cmd)?;
    reject(!series && a.seed.is_some(), "seed", cmd)?;
    reject(!series && a.tolerance.is_some(), "tolerance", cmd)?;
    reject(
        cmd != Command::Weierstrass && a.class.is_some(),
        "class",
        cmd,
    )?;
    reject(!single_pants && a.end_a.is_some(), "end-a", cmd)?;
    reject(!single_pants && a.end_b.is_some(), "end-b", cmd)?;
    reject(cmd != Command::Gs && a.x.is_some(), "x", cmd)?;
    reject(cmd != Command::Gs && a.y.is_some(), "y", cmd)?;
    reject(cmd != Command::Gs && a.z.is_some(), "z", cmd)?;
    reject(cmd == Command::Gs && a.boundary.is_some(), "boundary", cmd)?;

    let boundary = match cmd {
        Command::Gs => BoundarySpec::cusp(),
        _ => parse_boundary(required(&a.boundary, "boundary")?, a.degrees)?,
    };
    let default_cutoff = match cmd {
        Command::Verify => 25.0,
        _ => 30.0,
    };
    let cutoff = positive("cutoff", a.cutoff.unwrap_or(default_cutoff))?;
    let tolerance = a.tolerance.map(|t| positive("tolerance", t)).transpose()?;
    let class_filter = match cmd {
        Command::Weierstrass => Some(parse_class(required(&a.class, "class")?)?),
        _ => None,
    };
    let seed_override = a.seed.as_deref().map(parse_seed).transpose()?;
    let ends = if single_pants {
        Some((
            parse_end("end-a", required(&a.end_a, "end-a")?, a.degrees)?,
            parse_end("end-b", required(&a.end_b, "end-b")?, a.degrees)?,
        ))
    } else {
        None
    };
    let gs_args = if cmd == Command::Gs {
        Some([
            parse_complex("x", required(&a.x, "x")?)?,
            parse_complex("y", required(&a.y, "y")?)?,
            parse_complex("z", required(&a.z, "z")?)?,
        ])
    } else {
        None
    };
    Ok(RunConfig {
        command: cmd,
        boundary,
        cutoff,
        class_filter,
        seed_override,
        format: a.format,
        output_path: a.output,
        tolerance,
        ends,
        gs_args,
    })
}

/// Runs `config` with stdout and stderr, taking the worker count from
/// `MCSHANE_THREADS`. Returns the exit code.
pub fn run(config: &RunConfig) -> i32 {
    let threads = match parallel::threads_from_env() {
        Ok(n) => n,
        Err(m) => {
            eprintln!("error: {m}");
            return 2;
        }
    };
    execute(
        config,
        threads,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}

/// Runs `config` with explicit streams and worker count. Returns the exit code.
///
/// 0 when the residual is within tolerance (always, for the single-pants
/// commands), 1 when it is not, 2 when the input is rejected or the output
/// cannot be written.
pub fn execute(
    config: &RunConfig,
    threads: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match execute_inner(config, threads, out, err) {
        Ok(code) => code,
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

fn execute_inner(
    config: &RunConfig,
    threads: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, String> {
    let json = config.format == Format::Json;
    let (body, code) = match config.command {
        Command::Verify | Command::Weierstrass | Command::Combined => {
            let identity = match config.command {
                Command::Verify => Identity::Full,
                Command::Combined => Identity::Combined,
                _ => Identity::Weierstrass(config.class_filter.ok_or("'--class' is required")?),
            };
            let b = &config.boundary;
            let records = parallel::enumerate(b, config.cutoff, config.seed_override, threads)
                .map_err(|e| e.to_string())?;
            let report = report_from_records(b, identity, config.cutoff, &records);
            let tolerance = config.tolerance.unwrap_or(report.tail_estimate);
            let code = if report.residual.abs() <= tolerance {
                0
            } else {
                1
            };
            let body = if json {
                output::report_json(&report).into_bytes()
            } else {
                let mut buf = Vec::new();
                output::write_rows_csv(&mut buf, &term_rows(b, identity, &records))
                    .map_err(|e| e.to_string())?;
                writeln!(err, "{}", output::report_summary(&report)).map_err(|e| e.to_string())?;
                buf
            };
            (body, code)
        }
        Command::Pants => {
            let (a, b) = config.ends.ok_or("'--end-a' and '--end-b' are required")?;
            let spec = PantsSpec::new(config.boundary, a, b).map_err(|e| e.to_string())?;
            let layout = foot_widths(&spec).map_err(|e| e.to_string())?;
            let (names, values) = output::layout_fields(&layout);
            let values = values.map(|v| v.filter(|x| x.is_finite()));
            (output::fields(&names, &values, json).into_bytes(), 0)
        }
        Command::Gap => {
            let (a, b) = config.ends.ok_or("'--end-a' and '--end-b' are required")?;
            let (name, value) = match config.boundary.kind() {
                mcshane_core::BoundaryKind::Cusp => ("gap_prime", gap_prime(&a, &b)),
                _ => ("gap", gap(&config.boundary, &a, &b)),
            };
            let value = value.map_err(|e| e.to_string())?;
            (
                output::fields(&[name], &[Some(value)], json).into_bytes(),
                0,
            )
        }
        Command::Gs => {
            let [x, y, z] = config
                .gs_args
                .ok_or("'--x', '--y' and '--z' are required")?;
            let g = g_func(x, y, z).map_err(|e| e.to_string())?;
            let s1 = s_func(x, y, z).map_err(|e| e.to_string())?;
            let s2 = s_func(x, z, y).map_err(|e| e.to_string())?;
            let names = [
                "g_re", "g_im", "s_xyz_re", "s_xyz_im", "s_xzy_re", "s_xzy_im",
            ];
            let [a, b] = output::complex(g);
            let [c, d] = output::complex(s1);
            let [e, f] = output::complex(s2);
            (
                output::fields(&names, &[a, b, c, d, e, f], json).into_bytes(),
                0,
            )
        }
    };
    match &config.output_path {
        Some(path) => {
            let file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let mut w = BufWriter::new(file);
            w.write_all(&body)
                .and_then(|()| w.flush())
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
        None => out.write_all(&body).map_err(|e| e.to_string())?,
    }
    Ok(code)
}
