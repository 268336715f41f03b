//! Command-line front end: argument handling, reports and diagrams.

pub mod config;
pub mod report;
pub mod svg;

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use realbranes::census::{census, SearchBudget, DEFAULT_SEED};
use realbranes::counting::{count_gl, count_gl2, count_sl2, torus_d};
use realbranes::klein::InvolutionKind;
use realbranes::monodromy::traces;
use realbranes::spectral::{analyze, fibre_dim, fixed_degree, spectral_genus, Group};
use serde_json::{json, Value};

use crate::config::{Config, InputFile};
use crate::report::{parse_sign, CurveSpec, Problem};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] realbranes::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Core(e) => e.code(),
            CliError::Io { .. } => "io",
        }
    }

    /// The JSON object printed on stderr.
    pub fn to_json(&self) -> Value {
        json!({"error": self.code(), "message": self.to_string()})
    }
}

#[derive(Debug, Parser)]
#[command(name = "realbranes", version, about = "Real structures on hyperelliptic curves and components of real Hitchin fibres")]
pub struct Cli {
    /// TOML file with seed and search budgets.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Topological type (n, a) of the real structures on y² = p(z).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// One kind; all four when omitted.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Sign data of q along the fixed ovals and the component counts.
    Analyze {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Cross-check with the monodromy tracer and the homology model.
        #[arg(long)]
        oracle: bool,
        /// json or svg.
        #[arg(long)]
        format: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-oval fixed-circle counts from the monodromy tracer.
    Oracle {
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for witnesses of every admissible invariant tuple.
    Census {
        #[arg(long)]
        g: usize,
        /// Random configurations after the grid.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Skip the structured grid.
        #[arg(long)]
        no_grid: bool,
        #[arg(long)]
        grid_limit: Option<usize>,
        #[arg(long)]
        curve_pool: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form dimensions and counts.
    Formulas {
        #[command(subcommand)]
        formula: Formula,
    },
    /// SVG of the real line with ovals colored by the sign of q.
    Diagram {
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum Formula {
    SpectralGenus {
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long)]
        g: u64,
    },
    FixedDegree {
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long)]
        g: u64,
    },
    FibreDim {
        /// GL or SL.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long)]
        g: u64,
    },
    CountGl {
        #[arg(long)]
        n_s: u64,
        #[arg(long)]
        g_s: u64,
    },
    CountGl2 {
        #[arg(long)]
        nplus: u64,
        #[arg(long)]
        u: u64,
    },
    CountSl2 {
        #[arg(long)]
        nzero: u64,
        #[arg(long)]
        u: u64,
    },
    TorusD {
        #[arg(long)]
        m: u64,
        /// Fixed points of the involution in the 2-torsion.
        #[arg(long)]
        fixed: u64,
    },
}

#[derive(Debug, Default, Args)]
pub struct ProblemArgs {
    /// JSON file (schema 1) with p, zeros or a1/a2, sign, kind, rho.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// The polynomial p, e.g. "(z^2-1)(z^2-4)(z^2-9)".
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Genus 2: q has zeros a1, a2 (conjugate or both real).
    #[arg(long, allow_hyphen_values = true)]
    pub a1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a2: Option<String>,
    /// Comma-separated zeros of q, 2g-2 of them; "inf" for ∞.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub zeros: Option<Vec<String>>,
    /// Overall sign of q: +1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Option<String>,
    #[arg(long)]
    pub kind: Option<String>,
    /// Holonomy sign used when no zero of q is fixed: +1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<i8>,
    /// Recorded in the report.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Default, Args)]
pub struct OutputArgs {
    /// Directory for the output files instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub files: Vec<(PathBuf, String)>,
    /// Some cross-check disagreed.
    pub mismatch: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.mismatch {
            2
        } else {
            0
        }
    }
}

fn kind_of(s: &str) -> Result<InvolutionKind, CliError> {
    s.parse().map_err(CliError::Input)
}

fn problem_of(args: &ProblemArgs) -> Result<Problem, CliError> {
    let file = args.input.as_deref().map(InputFile::load).transpose()?;
    let pick = |flag: &Option<String>, from_file: Option<&String>| flag.clone().or_else(|| from_file.cloned());
    let curve = match (pick(&args.p, file.as_ref().and_then(|f| f.p.as_ref())), file.as_ref().and_then(|f| f.roots.clone())) {
        (Some(p), None) => CurveSpec::Text(p),
        (None, Some(roots)) => CurveSpec::Roots { roots, lead: file.as_ref().and_then(|f| f.lead.clone()) },
        (Some(_), Some(_)) => return Err(CliError::Input("give either p or roots, not both".into())),
        (None, None) => return Err(CliError::Input("no polynomial given (use --p or --input)".into())),
    };
    let a1 = pick(&args.a1, file.as_ref().and_then(|f| f.a1.as_ref()));
    let a2 = pick(&args.a2, file.as_ref().and_then(|f| f.a2.as_ref()));
    let listed = args.zeros.clone().or_else(|| file.as_ref().and_then(|f| f.zeros.clone()));
    let zeros = match (listed, a1, a2) {
        (Some(z), None, None) => z.into_iter().map(|s| s.trim().to_string()).collect(),
        (None, Some(a1), Some(a2)) => vec![a1, a2],
        (None, None, None) => return Err(CliError::Input("no zeros given (use --a1/--a2 or --zeros)".into())),
        (Some(_), _, _) => return Err(CliError::Input("give either --zeros or --a1/--a2, not both".into())),
        _ => return Err(CliError::Input("--a1 and --a2 go together".into())),
    };
    let sign = match (&args.sign, file.as_ref().and_then(|f| f.sign)) {
        (Some(s), _) => parse_sign(s)?,
        (None, Some(s)) => parse_sign(&s.to_string())?,
        (None, None) => realbranes::realpoly::Sign::Positive,
    };
    let kind = match pick(&args.kind, file.as_ref().and_then(|f| f.kind.as_ref())) {
        Some(k) => kind_of(&k)?,
        None => InvolutionKind::ConjF,
    };
    let rho = args.rho.or(file.as_ref().and_then(|f| f.rho));
    Problem::new(curve, zeros, sign, kind, rho)
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn emit(out: &OutputArgs, name: &str, body: String, mismatch: bool) -> Outcome {
    match &out.out {
        Some(dir) => Outcome {
            stdout: String::new(),
            files: vec![(dir.join(name), body)],
            mismatch,
        },
        None => Outcome {
            stdout: body,
            files: Vec::new(),
            mismatch,
        },
    }
}

fn formula(f: &Formula) -> Result<Value, CliError> {
    let core = |e: realbranes::counting::CountError| CliError::Core(e.into());
    Ok(match *f {
        Formula::SpectralGenus { n, g } => json!({"spectral_genus": spectral_genus(n, g)}),
        Formula::FixedDegree { n, g } => json!({"fixed_degree": fixed_degree(n, g)}),
        Formula::FibreDim { ref group, n, g } => {
            let group: Group = group.parse().map_err(|e: String| CliError::Input(e))?;
            json!({"fibre_dim": fibre_dim(group, n, g)})
        }
        Formula::CountGl { n_s, g_s } => {
            let c = count_gl(n_s, g_s).map_err(core)?;
            json!({"d": c.d, "count": c.count})
        }
        Formula::CountGl2 { nplus, u } => {
            let c = count_gl2(nplus, u).map_err(core)?;
            json!({"d": c.d, "count": c.count})
        }
        Formula::CountSl2 { nzero, u } => {
            let c = count_sl2(nzero, u).map_err(core)?;
            json!({"d": c.d, "count": c.count})
        }
        Formula::TorusD { m, fixed } => json!({"d": torus_d(m, fixed).map_err(core)?}),
    })
}

/// Runs one parsed command without touching stdout or the filesystem.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let seed_or = |s: Option<u64>| s.or(config.seed).unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::Classify { p, kind } => {
            let kinds = match kind {
                Some(k) => vec![kind_of(k)?],
                None => vec![
                    InvolutionKind::ConjF,
                    InvolutionKind::ConjSigmaF,
                    InvolutionKind::AntipodalH,
                    InvolutionKind::AntipodalSigmaH,
                ],
            };
            Ok(emit(&OutputArgs::default(), "", to_pretty(&report::classify_report(p, &kinds)?), false))
        }
        Command::Analyze { problem, oracle, format, output } => {
            let pr = problem_of(problem)?;
            let format = format.clone().or_else(|| config.format.clone()).unwrap_or_else(|| "json".into());
            match format.as_str() {
                "json" => {
                    let (v, mismatch) = report::analysis_report(&pr, *oracle, seed_or(problem.seed))?;
                    Ok(emit(output, "report.json", to_pretty(&v), mismatch))
                }
                "svg" => diagram(&pr, output),
                other => Err(CliError::Input(format!("unknown format '{other}' (expected json or svg)"))),
            }
        }
        Command::Oracle { problem, output } => {
            let pr = problem_of(problem)?;
            let (v, mismatch) = report::oracle_report(&pr, seed_or(problem.seed))?;
            Ok(emit(output, "oracle.json", to_pretty(&v), mismatch))
        }
        Command::Census { g, budget, seed, no_grid, grid_limit, curve_pool, output } => {
            if *g < 2 {
                return Err(CliError::Input(format!("genus must be at least 2, got {g}")));
            }
            let defaults = SearchBudget::default();
            let b = SearchBudget {
                grid: !*no_grid && config.grid.unwrap_or(defaults.grid),
                grid_limit: grid_limit.or(config.grid_limit).unwrap_or(defaults.grid_limit),
                random: budget.or(config.budget).unwrap_or(defaults.random),
                curve_pool: curve_pool.or(config.curve_pool).unwrap_or(defaults.curve_pool),
            };
            let report = census(*g, &b, seed_or(*seed));
            let mismatch = !report.all_witnesses_verified();
            let mut v = report.to_json();
            v["tool_version"] = json!(report::TOOL_VERSION);
            v["mismatch"] = json!(mismatch);
            Ok(emit(output, "census.json", to_pretty(&v), mismatch))
        }
        Command::Formulas { formula: f } => Ok(emit(&OutputArgs::default(), "", to_pretty(&formula(f)?), false)),
        Command::Diagram { problem, output } => diagram(&problem_of(problem)?, output),
    }
}

fn diagram(pr: &Problem, output: &OutputArgs) -> Result<Outcome, CliError> {
    let inv = analyze(&pr.q).map_err(realbranes::Error::from)?;
    let tr = traces(&pr.q).map_err(realbranes::Error::from)?;
    Ok(emit(output, "diagram.svg", svg::render(&pr.q, &tr, Some(&inv)), false))
}

/// Writes the outcome's files, creating the output directory as needed.
pub fn write_files(outcome: &Outcome) -> Result<(), CliError> {
    for (path, body) in &outcome.files {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        }
        fs::write(path, body).map_err(|e| CliError::io(path, e))?;
    }
    Ok(())
}

/// Parses `args` and runs the command, returning the exit code and the
/// text for stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string(), String::new());
            }
            let err = CliError::Usage(e.to_string().trim().to_string());
            return (1, String::new(), to_pretty(&err.to_json()));
        }
    };
    match execute(&cli).and_then(|o| write_files(&o).map(|_| o)) {
        Ok(o) => (o.exit_code(), o.stdout, String::new()),
        Err(e) => (1, String::new(), to_pretty(&e.to_json())),
    }
}
