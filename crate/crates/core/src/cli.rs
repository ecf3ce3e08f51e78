//! Command-line front end.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a false verdict or a
//! rejected witness, 2 for unreadable input or a usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::catalog;
use crate::error::{Error, Result};
use crate::io::{self, Format};
use crate::par::Exec;
use crate::predicates::{self, DEFAULT_CONGRUENCE_BOUND};
use crate::report;
use crate::semigroup::Semigroup;
use crate::sweep::{self, Bounds, OracleCheck};
use crate::witness::{build_witness, WitnessTree};

/// Default subset bound on the command line, below the library default so
/// that an accidental large input fails fast.
pub const CLI_SUBSET_BOUND: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "twoclass", version, about = "Semilattice decomposition of finite semigroups")]
struct Cli {
    /// Order bound for exhaustive oracles (subsets and partitions).
    #[arg(long, global = true, value_name = "K")]
    exhaustive_bound: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputKind::Text)]
    output: OutputKind,
    /// Shard corpus sweeps over this many threads (0: one per core).
    #[arg(long, global = true, value_name = "THREADS")]
    parallel: Option<usize>,
    /// Input table format; inferred from the extension when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<InputKind>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Upclass,
    Quasiorder,
    Congruence,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a table is an associative operation.
    Validate { file: PathBuf },
    /// Full report: idempotents, center, predicates, decomposition.
    Analyze { file: PathBuf },
    /// Stage-by-stage upper class of an element.
    Upclass { file: PathBuf, x: String },
    /// Two-classes, quotient and per-class verdicts.
    Decompose { file: PathBuf },
    /// Build a witness tree for `y` above `x`, or verify one with --verify.
    Witness {
        #[arg(long)]
        verify: bool,
        file: PathBuf,
        /// `<x> <y>`, or `<tree-file>` with --verify.
        #[arg(required = true, num_args = 1..=2)]
        args: Vec<String>,
    },
    /// Evaluate one predicate; the exit code carries the verdict.
    Check {
        file: PathBuf,
        #[arg(long)]
        predicate: String,
    },
    /// Emit a catalog family member.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long, num_args = 0.., value_delimiter = ',', allow_hyphen_values = false)]
        params: Vec<usize>,
    },
    /// Emit every associative table of the given order.
    Enumerate {
        #[arg(long)]
        order: usize,
    },
    /// Compare fast algorithms with the brute-force oracles.
    CompareOracle {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        what: Option<What>,
        #[arg(long)]
        sweep: bool,
        #[arg(long, requires = "sweep")]
        order: Option<usize>,
    },
}

/// Failure while running a command: the message goes to stderr and the
/// process exits with 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, InputError>;

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cli.output == OutputKind::Json
    }

    fn format(&self) -> Option<Format> {
        self.cli.format.map(|f| match f {
            InputKind::Text => Format::Text,
            InputKind::Json => Format::Json,
        })
    }

    fn bounds(&self) -> Bounds {
        match self.cli.exhaustive_bound {
            Some(k) => Bounds { subsets: k, congruence: k },
            None => Bounds {
                subsets: CLI_SUBSET_BOUND,
                congruence: DEFAULT_CONGRUENCE_BOUND,
            },
        }
    }

    fn exec(&self) -> Exec {
        if self.cli.parallel.is_some() {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }

    fn load(&self, path: &Path) -> std::result::Result<Semigroup, InputError> {
        Ok(io::read_semigroup(path, self.format())?)
    }

    fn print(&mut self, text: &str) {
        let _ = self.out.write_all(text.as_bytes());
    }

    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) {
        let body = if self.json() {
            serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
        } else {
            text()
        };
        self.print(&body);
    }
}

fn element(s: &Semigroup, name: &str) -> std::result::Result<usize, InputError> {
    s.element_by_name(name)
        .ok_or_else(|| InputError(format!("no element named {name:?}")))
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let threads = cli.parallel.filter(|&t| t > 0);
    let (r, buf) = Exec::with_threads(threads, || {
        let mut buf = Vec::new();
        let r = {
            let mut ctx = Ctx { cli: &cli, out: &mut buf };
            dispatch(&mut ctx)
        };
        (r, buf)
    });
    let _ = out.write_all(&buf);
    match r {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(&argv, &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(ctx: &mut Ctx) -> CmdResult {
    match &ctx.cli.command {
        Command::Validate { file } => validate(ctx, file),
        Command::Analyze { file } => {
            let s = ctx.load(file)?;
            let r = report::analyze(&s, ctx.bounds().congruence)?;
            ctx.emit(&r, || r.to_text());
            Ok(0)
        }
        Command::Upclass { file, x } => {
            let s = ctx.load(file)?;
            let x = element(&s, x)?;
            let r = report::upclass(&s, x);
            ctx.emit(&r, || r.to_text());
            Ok(0)
        }
        Command::Decompose { file } => {
            let s = ctx.load(file)?;
            let r = report::decompose(&s)?;
            ctx.emit(&r, || r.to_text());
            Ok(if r.tamura_holds { 0 } else { 1 })
        }
        Command::Witness { verify, file, args } => witness(ctx, *verify, file, args),
        Command::Check { file, predicate } => check(ctx, file, predicate),
        Command::Generate { family, params } => {
            let s = generate(family, params, ctx.cli.seed)?;
            let format = if ctx.json() { Format::Json } else { Format::Text };
            ctx.print(&io::write(&s, format));
            Ok(0)
        }
        Command::Enumerate { order } => {
            let all = catalog::enumerate_all_semigroups_with(*order, ctx.exec())?;
            if ctx.json() {
                let tables: Vec<io::RawTable> = all.iter().map(io::RawTable::from_semigroup).collect();
                ctx.print(&(serde_json::to_string(&tables).expect("tables serialize") + "\n"));
            } else {
                let blocks: Vec<String> = all.iter().map(io::to_text).collect();
                ctx.print(&blocks.join("\n"));
            }
            Ok(0)
        }
        Command::CompareOracle {
            file,
            what,
            sweep,
            order,
        } => compare_oracle(ctx, file.as_deref(), *what, *sweep, *order),
    }
}

fn validate(ctx: &mut Ctx, file: &Path) -> CmdResult {
    let input = std::fs::read_to_string(file).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let format = ctx.format().unwrap_or_else(|| Format::from_path(file));
    let raw = io::parse(&input, format)?;
    let (ok, detail) = match raw.clone().into_semigroup() {
        Ok(s) => (true, format!("VALID order={}", s.order())),
        Err(Error::NonAssociative { i, j, k }) => {
            let m = |x: usize, y: usize| raw.table[x][y];
            (
                false,
                format!(
                    "INVALID non-associative triple ({i}, {j}, {k}): ({i}*{j})*{k} = {}, {i}*({j}*{k}) = {}",
                    m(m(i, j), k),
                    m(i, m(j, k))
                ),
            )
        }
        Err(e) => (false, format!("INVALID {e}")),
    };
    let value = json!({ "valid": ok, "detail": detail });
    ctx.emit(&value, || detail.clone() + "\n");
    Ok(if ok { 0 } else { 1 })
}

fn tree_json(w: &WitnessTree) -> serde_json::Value {
    let nodes: Vec<serde_json::Value> = w
        .nodes
        .iter()
        .map(|(addr, n)| json!({ "s": addr.to_string(), "x": n.x, "y": n.y, "a": n.a, "b": n.b }))
        .collect();
    json!({ "depth": w.depth, "x": w.base_x, "y": w.root_y, "nodes": nodes })
}

fn witness(ctx: &mut Ctx, verify: bool, file: &Path, args: &[String]) -> CmdResult {
    let s = ctx.load(file)?;
    if verify {
        let [tree_file] = args else {
            return Err(InputError("--verify takes exactly one tree file".into()));
        };
        let text = std::fs::read_to_string(tree_file).map_err(|e| InputError(format!("{tree_file}: {e}")))?;
        let tree = WitnessTree::parse(&text)?;
        let verdict = match tree.violations(&s) {
            Ok(v) if v.is_empty() => Ok(()),
            Ok(v) => Err(v[0].to_string()),
            Err(e @ (Error::MalformedTree(_) | Error::WitnessTooDeep(_))) => Err(e.to_string()),
            Err(e) => return Err(e.into()),
        };
        let value = match &verdict {
            Ok(()) => json!({ "verdict": "ACCEPT" }),
            Err(why) => json!({ "verdict": "REJECT", "reason": why }),
        };
        ctx.emit(&value, || match &verdict {
            Ok(()) => "ACCEPT\n".into(),
            Err(why) => format!("REJECT {why}\n"),
        });
        return Ok(if verdict.is_ok() { 0 } else { 1 });
    }
    let [x, y] = args else {
        return Err(InputError("witness takes <x> <y>".into()));
    };
    let (x, y) = (element(&s, x)?, element(&s, y)?);
    match build_witness(&s, x, y) {
        Ok(w) => {
            let value = tree_json(&w);
            ctx.emit(&value, || w.to_text());
            Ok(0)
        }
        Err(Error::NotAbove { .. }) => {
            ctx.emit(&json!({ "verdict": "NOT-ABOVE" }), || "NOT-ABOVE\n".into());
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

/// Predicate names accepted by `check`.
pub const PREDICATES: [&str; 11] = [
    "two-trivial",
    "archimedean",
    "duo",
    "viable",
    "unipotent",
    "simple",
    "zero-simple",
    "congruence-free",
    "commutative",
    "band",
    "semilattice",
];

fn check(ctx: &mut Ctx, file: &Path, predicate: &str) -> CmdResult {
    let s = ctx.load(file)?;
    let name = predicate.replace('_', "-");
    let verdict = match name.as_str() {
        "two-trivial" => predicates::is_two_trivial(&s),
        "archimedean" => predicates::is_archimedean(&s),
        "duo" => predicates::is_duo(&s),
        "viable" => predicates::is_viable(&s),
        "unipotent" => predicates::is_unipotent(&s),
        "simple" => predicates::is_simple(&s),
        "zero-simple" => predicates::is_zero_simple(&s),
        "congruence-free" => predicates::is_congruence_free(&s, ctx.bounds().congruence)?,
        "commutative" => s.is_commutative(),
        "band" => s.is_band(),
        "semilattice" => s.is_semilattice(),
        _ => {
            return Err(InputError(format!(
                "unknown predicate {predicate:?}; expected one of {}",
                PREDICATES.join(", ")
            )))
        }
    };
    ctx.emit(&json!({ "predicate": name, "value": verdict }), || {
        format!("{name}: {}\n", if verdict { "true" } else { "false" })
    });
    Ok(if verdict { 0 } else { 1 })
}

fn generate(family: &str, params: &[usize], seed: u64) -> Result<Semigroup> {
    let name = family.replace('-', "_");
    let want = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange(format!(
                "{family} takes {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let p = |i: usize| params[i];
    match name.as_str() {
        "left_zero" => want(1).and_then(|_| catalog::left_zero(p(0))),
        "right_zero" => want(1).and_then(|_| catalog::right_zero(p(0))),
        "null_semigroup" | "null" => want(1).and_then(|_| catalog::null_semigroup(p(0))),
        "cyclic_group" | "cyclic" => want(1).and_then(|_| catalog::cyclic_group(p(0))),
        "chain_semilattice" | "chain" => want(1).and_then(|_| catalog::chain_semilattice(p(0))),
        "rectangular_band" => want(2).and_then(|_| catalog::rectangular_band(p(0), p(1))),
        "monogenic" => want(2).and_then(|_| catalog::monogenic(p(0), p(1))),
        "full_transformation_monoid" => want(1).and_then(|_| catalog::full_transformation_monoid(p(0))),
        "group_with_zero" => want(1).and_then(|_| catalog::group_with_zero(p(0))),
        "symmetric_group" => want(1).and_then(|_| catalog::symmetric_group(p(0))),
        "random_transformation" | "random_transformation_subsemigroup" => {
            want(2).and_then(|_| catalog::random_transformation_subsemigroup(p(0), p(1), seed))
        }
        _ => Err(Error::ParameterOutOfRange(format!("unknown family {family:?}"))),
    }
}

fn compare_oracle(ctx: &mut Ctx, file: Option<&Path>, what: Option<What>, sweep: bool, order: Option<usize>) -> CmdResult {
    let checks: Vec<OracleCheck> = match what {
        None => OracleCheck::ALL.to_vec(),
        Some(What::Upclass) => vec![OracleCheck::Upclass],
        Some(What::Quasiorder) => vec![OracleCheck::Quasiorder],
        Some(What::Congruence) => vec![OracleCheck::Congruence],
    };
    let bounds = ctx.bounds();
    if sweep {
        if file.is_some() {
            return Err(InputError("--sweep does not take a file".into()));
        }
        let order = order.unwrap_or(3);
        let mut corpus = sweep::exhaustive_corpus(order, ctx.exec())?;
        corpus.extend(sweep::family_corpus(12));
        let r = sweep::sweep(&corpus, &checks, bounds, ctx.exec());
        let agrees = r.agrees();
        ctx.emit(&r, || {
            let mut text = format!(
                "corpus={} compared={} skipped={} disagreements={}\n",
                corpus.len(),
                r.compared,
                r.skipped,
                r.disagreements.len()
            );
            for d in &r.disagreements {
                text.push_str(&format!("DISAGREE {} {}: {}\n", d.member, d.check, d.detail));
            }
            text.push_str(if agrees { "AGREE\n" } else { "DISAGREE\n" });
            text
        });
        return Ok(if agrees { 0 } else { 1 });
    }
    let file = file.ok_or_else(|| InputError("compare-oracle needs a file or --sweep".into()))?;
    let s = ctx.load(file)?;
    let mut rows = Vec::new();
    for check in checks {
        rows.push((check, sweep::compare(&s, check, bounds)?));
    }
    let agrees = rows.iter().all(|(_, d)| d.is_none());
    let value = json!({
        "agrees": agrees,
        "checks": rows.iter().map(|(c, d)| json!({ "what": c, "agrees": d.is_none(), "diff": d })).collect::<Vec<_>>(),
    });
    ctx.emit(&value, || {
        let mut text = String::new();
        for (c, d) in &rows {
            match d {
                None => text.push_str(&format!("{c}: AGREE\n")),
                Some(diff) => text.push_str(&format!("{c}: DISAGREE {diff}\n")),
            }
        }
        text.push_str(if agrees { "AGREE\n" } else { "DISAGREE\n" });
        text
    });
    Ok(if agrees { 0 } else { 1 })
}
