//! The `pmalg` command line. [`run`] returns the report instead of printing
//! it so the whole interface can be driven from tests.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use pmalg::group::identify_small_group;
use pmalg::model::{parse_algebra, serialize_algebra, ProtomodularFrame};
use pmalg::protomod::{check, classify_n1, Property};
use pmalg::reconstruct::{
    from_action_quadruple, from_group_triple, parse_action_quadruple, parse_group_triple,
    serialize_action_quadruple, serialize_group_triple, to_action_quadruple, to_group_triple,
};
use pmalg::search::{SearchBounds, SearchSpec, Searcher};
use pmalg::termlang::{check_theory, parse_theory, presets, Theory};
use pmalg::translations::{distinct_translations, RcFrame};
use pmalg::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub text: String,
}

impl CommandResult {
    fn new(code: i32, text: String) -> Self {
        CommandResult { code, text }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandResult::new(EXIT_USAGE, format!("error: {message}\n"))
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "pmalg",
    about = "Finite-model workbench for protomodular algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check properties of an algebra (all properties by default)
    Check {
        file: PathBuf,
        /// Comma separated property labels
        #[arg(long)]
        props: Option<String>,
    },
    /// Print the group structure induced at an element
    Group {
        file: PathBuf,
        #[arg(long)]
        unit: usize,
    },
    /// List the distinct translations and their group
    Translations { file: PathBuf },
    /// Convert between algebras, group triples and action quadruples
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Enumerate all frames of a given shape
    Search {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        limit: Option<usize>,
        /// Write each frame to <dir>/frame-NNNN.pmalg
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Count frames of a given shape by property profile
    Census {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check the axioms of a theory file (or `preset:<name>`) on an algebra
    Identity { theory: String, file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Algebra from a group with section (`pmgrp`)
    FromGroup {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Algebra from a principal action (`pmact`)
    FromAction {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Group with section at an element, as `pmgrp`
    ToGroup {
        file: PathBuf,
        #[arg(long)]
        unit: usize,
    },
    /// Principal action of the translation group, as `pmact`
    ToAction { file: PathBuf },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    size: usize,
    #[arg(long, default_value = "")]
    require: String,
    #[arg(long, default_value = "")]
    forbid: String,
    /// Worker threads (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// Raise the feasibility bound on the carrier size for this n
    #[arg(long)]
    max_size: Option<usize>,
}

impl SearchArgs {
    fn build(&self, limit: Option<usize>) -> Result<(Searcher, SearchSpec), Error> {
        let spec = SearchSpec {
            n: self.n,
            size: self.size,
            require: Property::parse_list(&self.require)?,
            forbid: Property::parse_list(&self.forbid)?,
            limit,
        };
        let mut bounds = SearchBounds::default();
        if let Some(m) = self.max_size {
            bounds = bounds.with_max_size(self.n, m);
        }
        let mut searcher = Searcher::default().with_bounds(bounds);
        searcher.workers = self.workers;
        Ok((searcher, spec))
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandResult::new(code, e.render().to_string());
        }
    };
    let outcome = match cli.command {
        Command::Check { file, props } => cmd_check(&file, props.as_deref()),
        Command::Group { file, unit } => cmd_group(&file, unit),
        Command::Translations { file } => cmd_translations(&file),
        Command::Construct { kind } => cmd_construct(kind),
        Command::Search {
            search,
            limit,
            emit,
        } => cmd_search(&search, limit, emit.as_deref()),
        Command::Census { search, limit } => cmd_census(&search, limit),
        Command::Identity { theory, file } => cmd_identity(&theory, &file),
    };
    outcome.unwrap_or_else(CommandResult::usage)
}

#[derive(Debug)]
enum CliError {
    Read(PathBuf, std::io::Error),
    Write(PathBuf, std::io::Error),
    Parse(PathBuf, Error),
    Other(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Read(p, e) => write!(f, "cannot read {}: {e}", p.display()),
            CliError::Write(p, e) => write!(f, "cannot write {}: {e}", p.display()),
            CliError::Parse(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Other(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Other(e)
    }
}

type Outcome = Result<CommandResult, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Read(path.to_path_buf(), e))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> pmalg::Result<T>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|e| CliError::Parse(path.to_path_buf(), e))
}

fn load_algebra(path: &Path) -> Result<ProtomodularFrame, CliError> {
    load(path, parse_algebra)
}

fn header(frame: &ProtomodularFrame) -> String {
    format!("n {} size {}\n", frame.n(), frame.size())
}

fn cmd_check(file: &Path, props: Option<&str>) -> Outcome {
    let frame = load_algebra(file)?;
    let props = match props {
        Some(list) => Property::parse_list(list)?,
        None => Property::ALL.to_vec(),
    };
    let mut out = header(&frame);
    let mut all_hold = true;
    for p in props {
        let report = check(&frame, p);
        all_hold &= report.holds;
        writeln!(out, "{report}").unwrap();
    }
    if frame.n() == 1 {
        let class = classify_n1(&frame)?;
        let labels: Vec<&str> = class.iter().map(|c| c.label()).collect();
        let labels = if labels.is_empty() {
            "none".to_string()
        } else {
            labels.join(", ")
        };
        writeln!(out, "class: {labels}").unwrap();
        let e = frame.unit(0);
        match (0..frame.size()).find(|&a| frame.theta(&[a], e) != a) {
            None => writeln!(out, "right unit: holds").unwrap(),
            Some(a) => writeln!(
                out,
                "right unit: fails at a={a}: theta({a}, {e}) = {}",
                frame.theta(&[a], e)
            )
            .unwrap(),
        }
    }
    let code = if all_hold { EXIT_OK } else { EXIT_FAILED_CHECK };
    Ok(CommandResult::new(code, out))
}

fn rc_failure(frame: &ProtomodularFrame, mut out: String) -> CommandResult {
    writeln!(out, "{}", check(frame, Property::RightCancellable)).unwrap();
    CommandResult::new(EXIT_FAILED_CHECK, out)
}

fn group_label(g: &pmalg::group::GroupTable) -> String {
    match identify_small_group(g) {
        Ok(label) => label.to_string(),
        Err(Error::GroupTooLarge(m)) => format!("unidentified (order {m})"),
        Err(e) => format!("unidentified ({e})"),
    }
}

fn cmd_group(file: &Path, unit: usize) -> Outcome {
    let frame = load_algebra(file)?;
    let out = header(&frame);
    let Ok(rc) = RcFrame::new(&frame) else {
        return Ok(rc_failure(&frame, out));
    };
    let g = rc.group_at(unit)?;
    let d = rc.right_division(unit)?;
    let k = g.size();
    let mut out = out;
    writeln!(out, "unit {unit}").unwrap();
    out.push_str("product\n");
    write_table(&mut out, g.op_table(), k);
    out.push_str("right division\n");
    write_table(&mut out, d.table(), k);
    writeln!(out, "inverses {}", join(g.inverses())).unwrap();
    writeln!(out, "group {}", group_label(&g)).unwrap();
    Ok(CommandResult::new(EXIT_OK, out))
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_table(out: &mut String, values: &[usize], cols: usize) {
    for row in values.chunks(cols) {
        writeln!(out, "{}", join(row)).unwrap();
    }
}

fn cmd_translations(file: &Path) -> Outcome {
    let frame = load_algebra(file)?;
    let mut out = header(&frame);
    let ts = distinct_translations(&frame);
    writeln!(out, "translations {}", ts.len()).unwrap();
    for t in &ts {
        writeln!(
            out,
            "({}) -> {}",
            join(&t.rep).replace(' ', ","),
            join(&t.map)
        )
        .unwrap();
    }
    match RcFrame::new(&frame) {
        Ok(rc) => {
            let g = rc.translation_group()?;
            writeln!(
                out,
                "translation group order {} {}",
                g.order(),
                group_label(g.table())
            )
            .unwrap();
        }
        Err(_) => {
            writeln!(out, "translation group: not formed").unwrap();
            writeln!(out, "{}", check(&frame, Property::RightCancellable)).unwrap();
        }
    }
    Ok(CommandResult::new(EXIT_OK, out))
}

fn cmd_construct(kind: Construct) -> Outcome {
    let text = match kind {
        Construct::FromGroup { file, n } => {
            let t = load(&file, parse_group_triple)?;
            serialize_algebra(&from_group_triple(&t, n)?)
        }
        Construct::FromAction { file, n } => {
            let q = load(&file, parse_action_quadruple)?;
            serialize_algebra(&from_action_quadruple(&q, n)?)
        }
        Construct::ToGroup { file, unit } => {
            let frame = load_algebra(&file)?;
            match to_group_triple(&frame, unit) {
                Err(Error::NotRightCancellable) => return Ok(rc_failure(&frame, header(&frame))),
                r => serialize_group_triple(&r?),
            }
        }
        Construct::ToAction { file } => {
            let frame = load_algebra(&file)?;
            match to_action_quadruple(&frame) {
                Err(Error::NotRightCancellable) => return Ok(rc_failure(&frame, header(&frame))),
                r => serialize_action_quadruple(&r?),
            }
        }
    };
    Ok(CommandResult::new(EXIT_OK, text))
}

fn cmd_search(args: &SearchArgs, limit: Option<usize>, emit: Option<&Path>) -> Outcome {
    let (searcher, spec) = args.build(limit)?;
    let frames = searcher.enumerate(&spec)?;
    let width = frames.len().to_string().len().max(4);
    let mut out = format!("frames {}\n", frames.len());
    if let Some(dir) = emit {
        fs::create_dir_all(dir).map_err(|e| CliError::Write(dir.to_path_buf(), e))?;
        for (i, f) in frames.iter().enumerate() {
            let path = dir.join(format!("frame-{:0width$}.pmalg", i + 1));
            fs::write(&path, serialize_algebra(f)).map_err(|e| CliError::Write(path.clone(), e))?;
            writeln!(out, "{}", path.display()).unwrap();
        }
    } else {
        for (i, f) in frames.iter().enumerate() {
            writeln!(out, "# frame {:0width$}", i + 1).unwrap();
            out.push_str(&serialize_algebra(f));
        }
    }
    Ok(CommandResult::new(EXIT_OK, out))
}

fn cmd_census(args: &SearchArgs, limit: Option<usize>) -> Outcome {
    let (searcher, spec) = args.build(limit)?;
    Ok(CommandResult::new(
        EXIT_OK,
        searcher.census(&spec)?.render(),
    ))
}

fn load_theory(arg: &str) -> Result<Theory, CliError> {
    match arg.strip_prefix("preset:") {
        Some(name) => {
            let text = presets::preset(name).ok_or_else(|| {
                CliError::Other(Error::Invalid(format!(
                    "unknown preset `{name}` (available: {})",
                    presets::names().collect::<Vec<_>>().join(", ")
                )))
            })?;
            Ok(parse_theory(text)?)
        }
        None => load(Path::new(arg), parse_theory),
    }
}

fn cmd_identity(theory: &str, file: &Path) -> Outcome {
    let theory = load_theory(theory)?;
    let frame = load_algebra(file)?;
    let verdicts = check_theory(frame.model(), &theory)?;
    let mut out = format!("theory {}\n", theory.name);
    for (i, (ax, v)) in theory.axioms.iter().zip(&verdicts).enumerate() {
        writeln!(out, "axiom {}: {ax}: {v}", i + 1).unwrap();
    }
    let code = if verdicts.iter().all(|v| v.holds()) {
        EXIT_OK
    } else {
        EXIT_FAILED_CHECK
    };
    Ok(CommandResult::new(code, out))
}
