//! The `flipcss` command line.
//!
//! Every JSON document starts with a header recording the tool version, the
//! command line, the seed and (where relevant) the trial count. CSV output
//! carries `trials` and `seed` columns instead. Exit codes: 0 success,
//! 1 other failures (including a failed `validate`), 2 usage errors,
//! 3 illegal constructions, 4 exhausted exact-search budget.

mod mtx;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use mtx::{parse_mtx, write_mtx};

use crate::analytics::{lattice_geometry, scan_fixed_n, CaseLabel, ScanRow};
use crate::codes::{matrix_to_alist, parse_alist, repetition_code, ClassicalCode};
use crate::construct::{
    build_checked, classify, first_violation, ConstructionSpec, CssCode, EquivalenceClass,
};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::metrics::{compute_metrics, CodeMetrics, MetricsOptions, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ILLEGAL: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "flipcss",
    version,
    about = "Build and analyze CSS codes from several classical codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Assemble hx/hz and write them with a layout sidecar.
    Build(BuildArgs),
    /// Report n, k and the distance of a construction or a matrix pair.
    Metrics(MetricsArgs),
    /// Check hx * hz^T = 0.
    Validate(ValidateArgs),
    /// All (case, L) with a fixed qubit count.
    Scan(ScanArgs),
    /// Census of inequivalent constructions for one D.
    Classify(ClassifyArgs),
    /// Lattice coordinates and incidences for one of the four D = 3 cases.
    Lattice(LatticeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Alist,
    Mtx,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Alist => "alist",
            Format::Mtx => "mtx",
        }
    }
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// Number of classical codes.
    #[arg(long)]
    pub d: Option<usize>,
    /// Shorthand for one of the four D = 3 constructions.
    #[arg(long)]
    pub case: Option<CaseLabel>,
    /// Z-check seed blocks, e.g. `BBB,CCB`.
    #[arg(long = "seed-blocks")]
    pub seed_blocks: Option<String>,
    /// Odd FLIP counts, e.g. `1,3`.
    #[arg(long)]
    pub flips: Option<String>,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Periodic repetition lengths, one per sector.
    #[arg(long, value_delimiter = ',')]
    pub rep: Vec<usize>,
    /// Parity-check matrix of one sector in alist format (repeat per sector).
    #[arg(long)]
    pub alist: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// X-check matrix (alist or MatrixMarket).
    #[arg(long, requires = "hz")]
    pub hx: Option<PathBuf>,
    /// Z-check matrix (alist or MatrixMarket).
    #[arg(long, requires = "hx")]
    pub hz: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EstimatorArgs {
    /// Trials for the randomized distance estimator.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// PRNG seed of the estimator.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Candidate budget of the exact distance search (0 skips it).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

impl EstimatorArgs {
    fn options(&self) -> MetricsOptions {
        MetricsOptions {
            budget: self.budget,
            trials: self.trials,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value_t = Format::Mtx)]
    pub format: Format,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Recorded in the header.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub matrices: MatrixArgs,
    #[command(flatten)]
    pub estimator: EstimatorArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write `metrics.<ext>` into this directory instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub matrices: MatrixArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Total number of physical qubits.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_delimiter = ',', default_value = "A,B,C,D")]
    pub cases: Vec<CaseLabel>,
    #[command(flatten)]
    pub estimator: EstimatorArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[arg(long)]
    pub case: CaseLabel,
    /// Repetition lengths `L1,L2,L3`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub rep: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Serialize)]
pub struct Header {
    pub tool_version: &'static str,
    pub command_line: String,
    pub seed: u64,
    pub trials: Option<usize>,
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    header: &'a Header,
    #[serde(flatten)]
    body: T,
}

/// What a command produced: a document and whether it counts as success.
struct Outcome {
    text: String,
    ext: &'static str,
    code: i32,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::InvalidSpec(_) | Error::Parse { .. } => EXIT_USAGE,
        Error::Illegal(_) => EXIT_ILLEGAL,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_FAILURE,
    }
}

fn json<T: Serialize>(header: &Header, body: T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Document { header, body })
        .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header_row: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.into());
    w.write_record(header_row).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn serde_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(usage(format!(
            "{command} does not support --format {}",
            format.ext()
        )))
    }
}

impl SpecArgs {
    fn is_given(&self) -> bool {
        self.d.is_some()
            || self.case.is_some()
            || self.seed_blocks.is_some()
            || self.flips.is_some()
    }

    fn resolve(&self) -> Result<ConstructionSpec> {
        if let Some(case) = self.case {
            if self.seed_blocks.is_some() || self.flips.is_some() {
                return Err(usage(
                    "--case cannot be combined with --seed-blocks or --flips",
                ));
            }
            if self.d.is_some_and(|d| d != 3) {
                return Err(usage("--case denotes a D = 3 construction"));
            }
            return Ok(case.spec());
        }
        let d = self.d.ok_or_else(|| usage("--d or --case is required"))?;
        let seed = self
            .seed_blocks
            .as_deref()
            .ok_or_else(|| usage("--seed-blocks is required"))?;
        let flips = self
            .flips
            .as_deref()
            .ok_or_else(|| usage("--flips is required"))?;
        ConstructionSpec::parse(d, seed, flips)
    }
}

impl SourceArgs {
    fn codes(&self, d: usize) -> Result<Vec<ClassicalCode>> {
        match (self.rep.is_empty(), self.alist.is_empty()) {
            (false, true) => {
                if self.rep.len() != d {
                    return Err(usage(format!(
                        "--rep needs {d} lengths, got {}",
                        self.rep.len()
                    )));
                }
                self.rep.iter().map(|&l| repetition_code(l)).collect()
            }
            (true, false) => {
                if self.alist.len() != d {
                    return Err(usage(format!(
                        "--alist needs {d} files, got {}",
                        self.alist.len()
                    )));
                }
                self.alist
                    .iter()
                    .map(|p| parse_alist(&p.display().to_string(), &fs::read_to_string(p)?))
                    .collect()
            }
            (false, false) => Err(usage("use either --rep or --alist, not both")),
            (true, true) => Err(usage("one of --rep or --alist is required")),
        }
    }
}

/// Reads a matrix in MatrixMarket (detected by its banner) or alist format.
pub fn read_matrix(path: &Path) -> Result<BitMatrix> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with("%%") {
        parse_mtx(&text)
    } else {
        Ok(parse_alist(&path.display().to_string(), &text)?.into_matrix())
    }
}

fn load_code(spec: &SpecArgs, source: &SourceArgs, matrices: &MatrixArgs) -> Result<CssCode> {
    match (&matrices.hx, &matrices.hz) {
        (Some(hx), Some(hz)) => {
            if spec.is_given() || !source.rep.is_empty() || !source.alist.is_empty() {
                return Err(usage("--hx/--hz cannot be combined with a construction"));
            }
            CssCode::from_matrices(read_matrix(hx)?, read_matrix(hz)?)
        }
        _ => {
            let spec = spec.resolve()?;
            build_checked(&spec, &source.codes(spec.d())?)
        }
    }
}

#[derive(Serialize)]
struct LayoutDoc<'a> {
    spec: &'a ConstructionSpec,
    n: usize,
    hx_shape: (usize, usize),
    hz_shape: (usize, usize),
    layout: &'a crate::construct::Layout,
}

#[derive(Serialize)]
struct BuildSummary {
    n: usize,
    files: Vec<String>,
}

fn cmd_build(a: &BuildArgs, header: &Header) -> Result<Outcome> {
    require_format(a.format, &[Format::Alist, Format::Mtx], "build")?;
    let spec = a.spec.resolve()?;
    let code = build_checked(&spec, &a.source.codes(spec.d())?)?;
    let layout = code
        .layout
        .as_ref()
        .expect("assembled codes carry a layout");
    let emit = |h: &BitMatrix| match a.format {
        Format::Alist => matrix_to_alist(h),
        _ => write_mtx(h),
    };
    fs::create_dir_all(&a.out)?;
    let files = [
        (format!("hx.{}", a.format.ext()), emit(&code.hx)),
        (format!("hz.{}", a.format.ext()), emit(&code.hz)),
        (
            "layout.json".to_string(),
            json(
                header,
                LayoutDoc {
                    spec: &spec,
                    n: code.n(),
                    hx_shape: code.hx.shape(),
                    hz_shape: code.hz.shape(),
                    layout,
                },
            )?,
        ),
    ];
    for (name, text) in &files {
        fs::write(a.out.join(name), text)?;
    }
    let summary = BuildSummary {
        n: code.n(),
        files: files
            .iter()
            .map(|(name, _)| a.out.join(name).display().to_string())
            .collect(),
    };
    Ok(Outcome {
        text: json(header, summary)?,
        ext: "json",
        code: EXIT_OK,
    })
}

fn cmd_metrics(a: &MetricsArgs, header: &Header) -> Result<Outcome> {
    require_format(a.format, &[Format::Json, Format::Csv], "metrics")?;
    let code = load_code(&a.spec, &a.source, &a.matrices)?;
    let m: CodeMetrics = compute_metrics(&code, &a.estimator.options())?;
    let text = match a.format {
        Format::Csv => csv_text(
            &[
                "n",
                "k",
                "d",
                "d_kind",
                "d_x",
                "d_z",
                "estimator",
                "trials",
                "seed",
            ],
            vec![vec![
                m.n.to_string(),
                m.k.to_string(),
                opt(m.d),
                m.d_kind.as_ref().map(serde_name).unwrap_or_default(),
                opt(m.d_x),
                opt(m.d_z),
                m.estimator
                    .as_ref()
                    .map(|e| e.method.clone())
                    .unwrap_or_default(),
                a.estimator.trials.to_string(),
                a.estimator.seed.to_string(),
            ]],
        )?,
        _ => json(header, &m)?,
    };
    Ok(Outcome {
        text,
        ext: a.format.ext(),
        code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct Violation {
    x_row: usize,
    z_row: usize,
}

#[derive(Serialize)]
struct ValidateDoc {
    n: usize,
    hx_shape: (usize, usize),
    hz_shape: (usize, usize),
    valid: bool,
    first_violation: Option<Violation>,
}

fn cmd_validate(a: &ValidateArgs, header: &Header) -> Result<Outcome> {
    require_format(a.format, &[Format::Json], "validate")?;
    let code = load_code(&a.spec, &a.source, &a.matrices)?;
    let violation = first_violation(&code).map(|(x_row, z_row)| Violation { x_row, z_row });
    let valid = violation.is_none();
    let doc = ValidateDoc {
        n: code.n(),
        hx_shape: code.hx.shape(),
        hz_shape: code.hz.shape(),
        valid,
        first_violation: violation,
    };
    Ok(Outcome {
        text: json(header, doc)?,
        ext: "json",
        code: if valid { EXIT_OK } else { EXIT_FAILURE },
    })
}

#[derive(Serialize)]
struct ScanDoc<'a> {
    n: usize,
    cases: &'a [CaseLabel],
    budget: u64,
    rows: Vec<ScanRow>,
}

fn cmd_scan(a: &ScanArgs, header: &Header) -> Result<Outcome> {
    require_format(a.format, &[Format::Json, Format::Csv], "scan")?;
    let rows = scan_fixed_n(a.n, &a.cases, &a.estimator.options())?;
    let text = match a.format {
        Format::Csv => csv_text(
            &[
                "case", "L1", "L2", "L3", "n", "k", "d", "d_kind", "trials", "seed",
            ],
            rows.iter()
                .map(|r| {
                    vec![
                        r.case.to_string(),
                        r.l[0].to_string(),
                        r.l[1].to_string(),
                        r.l[2].to_string(),
                        r.n.to_string(),
                        r.k.to_string(),
                        opt(r.d),
                        r.d_kind.as_ref().map(serde_name).unwrap_or_default(),
                        a.estimator.trials.to_string(),
                        a.estimator.seed.to_string(),
                    ]
                })
                .collect(),
        )?,
        _ => json(
            header,
            ScanDoc {
                n: a.n,
                cases: &a.cases,
                budget: a.estimator.budget,
                rows,
            },
        )?,
    };
    Ok(Outcome {
        text,
        ext: a.format.ext(),
        code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct ClassifyDoc {
    d: usize,
    class_count: usize,
    classes: Vec<EquivalenceClass>,
}

fn join_set<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_classify(a: &ClassifyArgs, header: &Header) -> Result<Outcome> {
    require_format(a.format, &[Format::Json, Format::Csv], "classify")?;
    let classes = classify(a.d)?;
    let text = match a.format {
        Format::Csv => csv_text(
            &[
                "class",
                "seed_blocks",
                "flips",
                "seed_size",
                "members",
                "labelings",
                "trials",
                "seed",
            ],
            classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    vec![
                        i.to_string(),
                        join_set(c.representative.z_seed()),
                        join_set(&c.flip_counts),
                        c.seed_size.to_string(),
                        c.members.to_string(),
                        c.labelings.to_string(),
                        String::new(),
                        a.seed.to_string(),
                    ]
                })
                .collect(),
        )?,
        _ => json(
            header,
            ClassifyDoc {
                d: a.d,
                class_count: classes.len(),
                classes,
            },
        )?,
    };
    Ok(Outcome {
        text,
        ext: a.format.ext(),
        code: EXIT_OK,
    })
}

fn cmd_lattice(a: &LatticeArgs, header: &Header) -> Result<Outcome> {
    require_format(a.format, &[Format::Json], "lattice")?;
    let l: [usize; 3] = a
        .rep
        .as_slice()
        .try_into()
        .map_err(|_| usage(format!("--rep needs 3 lengths, got {}", a.rep.len())))?;
    if l.contains(&0) {
        return Err(usage("lengths must be positive"));
    }
    let geometry = lattice_geometry(a.case, l)?;
    Ok(Outcome {
        text: json(header, geometry)?,
        ext: "json",
        code: EXIT_OK,
    })
}

fn header_for(command: &Command, command_line: String) -> Header {
    let (seed, trials) = match command {
        Command::Build(a) => (a.seed, None),
        Command::Metrics(a) => (a.estimator.seed, Some(a.estimator.trials)),
        Command::Validate(a) => (a.seed, None),
        Command::Scan(a) => (a.estimator.seed, Some(a.estimator.trials)),
        Command::Classify(a) => (a.seed, None),
        Command::Lattice(a) => (a.seed, None),
    };
    Header {
        tool_version: env!("CARGO_PKG_VERSION"),
        command_line,
        seed,
        trials,
    }
}

fn dispatch<'a>(
    cli: &'a Cli,
    header: &Header,
) -> Result<(Outcome, Option<&'a Path>, &'static str)> {
    Ok(match &cli.command {
        Command::Build(a) => (cmd_build(a, header)?, None, "build"),
        Command::Metrics(a) => (cmd_metrics(a, header)?, a.out.as_deref(), "metrics"),
        Command::Validate(a) => (cmd_validate(a, header)?, a.out.as_deref(), "validate"),
        Command::Scan(a) => (cmd_scan(a, header)?, a.out.as_deref(), "scan"),
        Command::Classify(a) => (cmd_classify(a, header)?, a.out.as_deref(), "classify"),
        Command::Lattice(a) => (cmd_lattice(a, header)?, a.out.as_deref(), "lattice"),
    })
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let command_line = std::iter::once("flipcss")
        .chain(args.iter().skip(1).map(String::as_str))
        .collect::<Vec<_>>()
        .join(" ");
    let header = header_for(&cli.command, command_line);

    let result = dispatch(&cli, &header).and_then(|(outcome, dir, name)| {
        match dir {
            Some(dir) => {
                fs::create_dir_all(dir)?;
                let path = dir.join(format!("{name}.{}", outcome.ext));
                fs::write(&path, &outcome.text)?;
                writeln!(out, "{}", path.display())?;
            }
            None => out.write_all(outcome.text.as_bytes())?,
        }
        Ok(outcome.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
