//! `zzgl`: relation sweeps, structure-constant dumps, region tables and
//! Casimir reports for the Z2xZ2-graded general linear superalgebra,
//! emitted as deterministic JSON (one object per line).
//!
//! Exit status: 0 when every requested sweep passes, 1 when violations
//! were found, 2 on usage errors.

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zzgl_core::{
    all_signatures, bracket_flip_table, casimir_matrix, centrality_report, colour_sign_exponent,
    colour_structure, defining_rep, graded_tensor_power, hw_eigenvalue, super_sign_exponent,
    super_structure, verify_b_commutation, verify_colour_relations, verify_super_relations,
    CasimirVariant, ExactScalar, GradedSignature, VerificationReport, Violation,
    WeightDiagonalRep,
};

/// Largest representation dimension a sweep will accept.
const DIMENSION_LIMIT: usize = 4096;

#[derive(Parser)]
#[command(
    name = "zzgl",
    version,
    about = "Exact verification toolkit for the Z2xZ2-graded general linear superalgebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run relation sweeps and emit one JSON report per sweep
    Verify(VerifyArgs),
    /// Dump nonzero structure constants or the bracket flip table
    Structure(StructureArgs),
    /// Print the seven-region classification as an r x r grid
    Regions(RegionsArgs),
    /// Report a quadratic Casimir candidate on the defining representation
    Casimir(CasimirArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Scope {
    Super,
    Klein,
    Colour,
    All,
}

impl Scope {
    fn sweeps(self) -> &'static [Scope] {
        match self {
            Scope::All => &[Scope::Super, Scope::Klein, Scope::Colour],
            Scope::Super => &[Scope::Super],
            Scope::Klein => &[Scope::Klein],
            Scope::Colour => &[Scope::Colour],
        }
    }

    fn label(self) -> &'static str {
        match self {
            Scope::Super => "super",
            Scope::Klein => "klein",
            Scope::Colour => "colour",
            Scope::All => "all",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Which {
    Super,
    Colour,
    Flips,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum RepSpec {
    Defining,
    Tensor(usize),
}

impl FromStr for RepSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "defining" {
            return Ok(RepSpec::Defining);
        }
        if let Some(k) = s.strip_prefix("tensor:") {
            let k: usize = k
                .parse()
                .map_err(|_| format!("invalid tensor power {k:?}"))?;
            if k == 0 || k > 3 {
                return Err(format!("tensor power must be 1..=3, got {k}"));
            }
            return Ok(RepSpec::Tensor(k));
        }
        Err(format!(
            "invalid rep {s:?}: expected \"defining\" or \"tensor:K\""
        ))
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::Defining => f.write_str("defining"),
            RepSpec::Tensor(k) => write!(f, "tensor:{k}"),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Signature "m1,m2|n1,n2"
    #[arg(long, value_name = "SIG", required_unless_present = "all_sigs", conflicts_with = "all_sigs")]
    sig: Option<String>,

    /// Representation: "defining" or "tensor:K" with K <= 3
    #[arg(long, value_name = "REP")]
    rep: Option<String>,

    /// Which relation families to sweep
    #[arg(long, value_enum, default_value_t = Scope::All)]
    scope: Scope,

    /// Sweep every signature with m+n <= max-rank (defining rep and
    /// tensor square unless --rep is given)
    #[arg(long)]
    all_sigs: bool,

    /// Rank bound for --all-sigs
    #[arg(long, value_name = "N", default_value_t = 5)]
    max_rank: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Negative-control hook: corrupt the representation before sweeping
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Args)]
struct StructureArgs {
    /// Signature "m1,m2|n1,n2"
    #[arg(long, value_name = "SIG")]
    sig: String,

    /// What to dump
    #[arg(value_enum)]
    which: Which,
}

#[derive(Args)]
struct RegionsArgs {
    /// Signature "m1,m2|n1,n2"
    #[arg(long, value_name = "SIG")]
    sig: String,

    /// Output format (human table by default)
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct CasimirArgs {
    /// Signature "m1,m2|n1,n2"
    #[arg(long, value_name = "SIG")]
    sig: String,

    /// Sign exponent: paper-literal, column-degree or row-degree
    #[arg(long, value_name = "VARIANT", value_parser = parse_variant)]
    variant: CasimirVariant,
}

fn parse_variant(s: &str) -> Result<CasimirVariant, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Serialize)]
struct VerifyRecord {
    sig: String,
    rep: String,
    scope: &'static str,
    checked: usize,
    violations: Vec<Violation>,
    pass: bool,
}

#[derive(Serialize)]
struct BracketRecord {
    sig: String,
    bracket: [[usize; 2]; 2],
    sign_exponent: u8,
    result: Vec<(ExactScalar, [usize; 2])>,
}

#[derive(Serialize)]
struct FlipRecord {
    sig: String,
    bracket: [[usize; 2]; 2],
    super_exponent: u8,
    colour_exponent: u8,
}

#[derive(Serialize)]
struct RegionsRecord {
    sig: String,
    grid: Vec<String>,
}

#[derive(Serialize)]
struct CasimirRecord {
    sig: String,
    variant: &'static str,
    central: bool,
    scalar: Option<ExactScalar>,
    hw_formula: ExactScalar,
}

fn parse_sig(text: &str) -> Result<GradedSignature, String> {
    text.parse::<GradedSignature>().map_err(|e| e.to_string())
}

fn build_rep(sig: &GradedSignature, spec: RepSpec) -> Result<WeightDiagonalRep, String> {
    let r = sig.rank();
    let base = defining_rep(sig);
    match spec {
        RepSpec::Defining => Ok(base),
        RepSpec::Tensor(k) => {
            let dim = r.checked_pow(k as u32).unwrap_or(usize::MAX);
            if dim > DIMENSION_LIMIT {
                return Err(format!(
                    "tensor:{k} of rank {r} has dimension {dim} > {DIMENSION_LIMIT}"
                ));
            }
            graded_tensor_power(&base, k).map_err(|e| e.to_string())
        }
    }
}

fn run_sweep(
    rep: &WeightDiagonalRep,
    sig: &GradedSignature,
    scope: Scope,
) -> Result<VerificationReport, String> {
    match scope {
        Scope::Super => Ok(verify_super_relations(rep)),
        Scope::Klein => Ok(verify_b_commutation(rep)),
        Scope::Colour => verify_colour_relations(rep, sig).map_err(|e| e.to_string()),
        Scope::All => unreachable!("expanded before dispatch"),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, String> {
    if args.format == Format::Table {
        return Err("table format is only available for the regions command".into());
    }
    let sigs: Vec<GradedSignature> = if args.all_sigs {
        all_signatures(args.max_rank)
    } else {
        vec![parse_sig(args.sig.as_deref().expect("required by clap"))?]
    };
    let reps: Vec<RepSpec> = match &args.rep {
        Some(text) => vec![text.parse()?],
        None if args.all_sigs => vec![RepSpec::Defining, RepSpec::Tensor(2)],
        None => vec![RepSpec::Defining],
    };

    let mut all_pass = true;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for sig in &sigs {
        for &spec in &reps {
            let mut rep = build_rep(sig, spec)?;
            if args.corrupt {
                rep = rep.corrupted();
            }
            for &scope in args.scope.sweeps() {
                let report = run_sweep(&rep, sig, scope)?;
                let record = VerifyRecord {
                    sig: sig.to_string(),
                    rep: spec.to_string(),
                    scope: scope.label(),
                    checked: report.checked,
                    pass: report.pass(),
                    violations: report.violations,
                };
                all_pass &= record.pass;
                write_json_line(&mut out, &record)?;
            }
        }
    }
    Ok(all_pass)
}

fn cmd_structure(args: &StructureArgs) -> Result<bool, String> {
    let sig = parse_sig(&args.sig)?;
    let r = sig.rank();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.which {
        Which::Super | Which::Colour => {
            for i in 1..=r {
                for j in 1..=r {
                    for k in 1..=r {
                        for l in 1..=r {
                            let (lc, sign) = match args.which {
                                Which::Super => (
                                    super_structure(&sig, i, j, k, l),
                                    super_sign_exponent(&sig, i, j, k, l),
                                ),
                                _ => (
                                    colour_structure(&sig, i, j, k, l),
                                    colour_sign_exponent(&sig, i, j, k, l),
                                ),
                            };
                            let lc = lc.map_err(|e| e.to_string())?;
                            if lc.is_zero() {
                                continue;
                            }
                            let record = BracketRecord {
                                sig: sig.to_string(),
                                bracket: [[i, j], [k, l]],
                                sign_exponent: sign.map_err(|e| e.to_string())?.bit(),
                                result: lc
                                    .iter()
                                    .map(|(e, c)| (c.clone(), [e.i, e.j]))
                                    .collect(),
                            };
                            write_json_line(&mut out, &record)?;
                        }
                    }
                }
            }
        }
        Which::Flips => {
            for ((i, j), (k, l)) in bracket_flip_table(&sig) {
                let record = FlipRecord {
                    sig: sig.to_string(),
                    bracket: [[i, j], [k, l]],
                    super_exponent: super_sign_exponent(&sig, i, j, k, l)
                        .map_err(|e| e.to_string())?
                        .bit(),
                    colour_exponent: colour_sign_exponent(&sig, i, j, k, l)
                        .map_err(|e| e.to_string())?
                        .bit(),
                };
                write_json_line(&mut out, &record)?;
            }
        }
    }
    Ok(true)
}

fn cmd_regions(args: &RegionsArgs) -> Result<bool, String> {
    let sig = parse_sig(&args.sig)?;
    let r = sig.rank();
    let grid: Vec<String> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| sig.classify_region(i, j).expect("in range").label())
                .collect()
        })
        .collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Table => {
            write_line(&mut out, &format!("regions of {sig} ({r}x{r}):"))?;
            for row in &grid {
                let spaced: Vec<String> = row.chars().map(|c| c.to_string()).collect();
                write_line(&mut out, &format!("  {}", spaced.join(" ")))?;
            }
        }
        Format::Json => {
            write_json_line(
                &mut out,
                &RegionsRecord {
                    sig: sig.to_string(),
                    grid,
                },
            )?;
        }
    }
    Ok(true)
}

fn cmd_casimir(args: &CasimirArgs) -> Result<bool, String> {
    let sig = parse_sig(&args.sig)?;
    let rep = defining_rep(&sig);
    let matrix = casimir_matrix(&rep, &sig, args.variant).map_err(|e| e.to_string())?;
    let report = centrality_report(&rep, &sig, args.variant).map_err(|e| e.to_string())?;
    let mut top_row = vec![0i64; sig.rank()];
    top_row[0] = 1;
    let record = CasimirRecord {
        sig: sig.to_string(),
        variant: args.variant.label(),
        central: report.pass(),
        scalar: matrix.scalar_multiple_of_identity(),
        hw_formula: hw_eigenvalue(&sig, &top_row).map_err(|e| e.to_string())?,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    write_json_line(&mut out, &record)?;
    Ok(true)
}

fn write_json_line<W: std::io::Write, T: Serialize>(out: &mut W, record: &T) -> Result<(), String> {
    let line = serde_json::to_string(record).map_err(|e| e.to_string())?;
    write_line(out, &line)
}

fn write_line<W: std::io::Write>(out: &mut W, line: &str) -> Result<(), String> {
    if let Err(e) = writeln!(out, "{line}") {
        // A closed downstream pipe (head, jq -e, ...) is normal
        // termination, not an error.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        return Err(e.to_string());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Structure(args) => cmd_structure(args),
        Command::Regions(args) => cmd_regions(args),
        Command::Casimir(args) => cmd_casimir(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
