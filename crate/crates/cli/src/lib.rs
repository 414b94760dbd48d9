//! Command-line front end for the `dimonoid` library.
//!
//! [`run`] parses arguments, executes one subcommand and writes the result
//! to `out` and diagnostics to `err`. It returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or a `true` answer |
//! | 1 | a `false` answer (not a dimonoid, not isomorphic, suite failure, ...) |
//! | 2 | usage error |
//! | 3 | invalid input |

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dimonoid::catalog::{self, with_workers, write_catalog};
use dimonoid::morphisms::{find_isomorphism, table_automorphisms};
use dimonoid::table::cayley_lines;
use dimonoid::{
    automorphisms, classify, matches_symmetric_product, run_theorem_suite, AutSet, DiTable, Error,
    Family, FamilyParams, OpTable, Quotient, SymmetricProductSpec,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dimonoid",
    version,
    about = "Construct, verify and classify finite dimonoids"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, short = 'o', global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Worker threads for enumeration.
    #[arg(long, global = true, env = catalog::WORKERS_ENV)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QuotientArg {
    Iso,
    IsoDual,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a member of a semigroup family.
    Build(BuildArgs),
    /// Check associativity and the three mixed axioms.
    Verify(Input),
    /// Report structural properties.
    Props(Input),
    /// List the bar-units.
    Halo(Input),
    /// Compute the automorphism group.
    Aut {
        #[command(flatten)]
        input: Input,
        /// Compare against a product of symmetric groups, e.g. `fixed=0;blocks=1,2|3,4`.
        #[arg(long)]
        spec: Option<String>,
    },
    /// Emit the dual structure.
    Dual {
        #[command(flatten)]
        input: Input,
        /// Transpose each table separately instead (not a dimonoid in general).
        #[arg(long)]
        naive: bool,
    },
    /// Decide whether two structures are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Enumerate all dimonoids of order n up to isomorphism.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = QuotientArg::Iso)]
        quotient: QuotientArg,
        /// Catalog file to write.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every theorem on all instances up to the given size.
    Suite {
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Subset, comma separated.
    #[arg(long = "A", value_delimiter = ',', num_args = 1..)]
    subset: Option<Vec<usize>>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    zero: Option<usize>,
    /// Family the zero is adjoined to (plus_zero only).
    #[arg(long)]
    base: Option<Family>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// JSON file holding a dimonoid, a semigroup table or family parameters.
    file: Option<PathBuf>,
    /// The same document given inline.
    #[arg(long)]
    json: Option<String>,
}

/// A parsed input document.
enum Structure {
    Semigroup(OpTable),
    Dimonoid(DiTable),
}

impl Structure {
    /// A semigroup is treated as the trivial dimonoid on its table.
    fn into_dimonoid(self) -> DiTable {
        match self {
            Structure::Semigroup(t) => DiTable::trivial(t),
            Structure::Dimonoid(d) => d,
        }
    }
}

/// What a subcommand produced.
struct Outcome {
    json: String,
    text: String,
    code: i32,
}

impl Outcome {
    fn new(value: &impl Serialize, text: String) -> Self {
        Outcome {
            json: to_json(value),
            text,
            code: EXIT_OK,
        }
    }

    fn truth(value: &impl Serialize, text: String, holds: bool) -> Self {
        Outcome {
            code: if holds { EXIT_OK } else { EXIT_FALSE },
            ..Outcome::new(value, text)
        }
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// Runs one invocation. `args` excludes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("dimonoid")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let workers = cli.workers.unwrap_or_else(catalog::workers_from_env);
    let result = with_workers(workers, || execute(&cli.command));
    match result {
        Ok(outcome) => {
            let body = match cli.format {
                Format::Json => outcome.json,
                Format::Table => outcome.text,
            };
            let written = match &cli.output {
                Some(path) => fs::write(path, body).map_err(|source| Error::Io {
                    path: path.clone(),
                    source,
                }),
                None => out.write_all(body.as_bytes()).map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                }),
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => report_error(&e, err),
            }
        }
        Err(e) => report_error(&e, err),
    }
}

fn report_error(e: &Error, err: &mut dyn Write) -> i32 {
    let doc = json!({ "error": { "code": e.code(), "message": e.to_string() } });
    let _ = err.write_all(to_json(&doc).as_bytes());
    EXIT_INVALID
}

fn execute(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Build(args) => build(args),
        Command::Verify(input) => verify(load(input)?),
        Command::Props(input) => props(load(input)?),
        Command::Halo(input) => halo(load(input)?.into_dimonoid()),
        Command::Aut { input, spec } => aut(load(input)?, spec.as_deref()),
        Command::Dual { input, naive } => dual(load(input)?, *naive),
        Command::Iso { first, second } => iso(
            load_file(first)?.into_dimonoid(),
            load_file(second)?.into_dimonoid(),
        ),
        Command::Classify { n, quotient, out } => classify_cmd(*n, *quotient, out.as_deref()),
        Command::Suite { n_max } => suite(*n_max),
    }
}

fn load(input: &Input) -> Result<Structure, Error> {
    match (&input.file, &input.json) {
        (Some(path), _) => load_file(path),
        (None, Some(doc)) => parse_structure(doc),
        (None, None) => unreachable!("clap enforces one input"),
    }
}

fn load_file(path: &Path) -> Result<Structure, Error> {
    let doc = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_structure(&doc)
}

fn parse_error(doc: &str, reason: impl ToString) -> Error {
    let mut input: String = doc.trim().chars().take(80).collect();
    if doc.trim().chars().count() > 80 {
        input.push_str("...");
    }
    Error::Parse {
        input,
        reason: reason.to_string(),
    }
}

/// Accepts `{"n","left","right"}`, `{"n","table"}` or family parameters.
fn parse_structure(doc: &str) -> Result<Structure, Error> {
    let value: Value = serde_json::from_str(doc).map_err(|e| parse_error(doc, e))?;
    let has = |key: &str| value.get(key).is_some();
    // table validation errors surface as their own codes, not as parse errors
    let typed = |e: serde_json::Error| parse_error(doc, e);
    if has("left") || has("right") {
        let raw: RawDi = serde_json::from_value(value).map_err(typed)?;
        let left = OpTable::from_rows(raw.n, &raw.left)?;
        let right = OpTable::from_rows(raw.n, &raw.right)?;
        Ok(Structure::Dimonoid(DiTable::pair(left, right)?))
    } else if has("table") {
        let raw: RawOp = serde_json::from_value(value).map_err(typed)?;
        Ok(Structure::Semigroup(OpTable::from_rows(raw.n, &raw.table)?))
    } else if has("family") {
        let params: FamilyParams = serde_json::from_value(value).map_err(typed)?;
        Ok(Structure::Semigroup(params.build()?))
    } else {
        Err(parse_error(
            doc,
            "expected a dimonoid (`left`, `right`), a table (`table`) or family parameters (`family`)",
        ))
    }
}

#[derive(serde::Deserialize)]
struct RawDi {
    n: usize,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

#[derive(serde::Deserialize)]
struct RawOp {
    n: usize,
    table: Vec<Vec<usize>>,
}

fn semigroup_text(t: &OpTable) -> String {
    cayley_lines(t, "∗").join("\n") + "\n"
}

fn build(args: &BuildArgs) -> Result<Outcome, Error> {
    let params = FamilyParams {
        family: args.family,
        n: args.n,
        subset: args.subset.clone(),
        a: args.a,
        c: args.c,
        zero: args.zero,
        base: args.base,
    };
    let t = params.build()?;
    Ok(Outcome::new(&t, semigroup_text(&t)))
}

fn verify(s: Structure) -> Result<Outcome, Error> {
    match s {
        Structure::Semigroup(t) => {
            let verdict = t.is_associative();
            let holds = verdict.is_ok();
            let doc = json!({ "kind": "semigroup", "associative": holds, "assoc": verdict });
            let text = match verdict.witness() {
                None => "associative: ok\n".to_string(),
                Some(w) => format!("associative: FAIL at {w:?}\n"),
            };
            Ok(Outcome::truth(&doc, text, holds))
        }
        Structure::Dimonoid(d) => {
            let report = d.report();
            let failures: Vec<Value> = report
                .failures()
                .into_iter()
                .map(|(axiom, w)| json!({ "axiom": axiom, "witness": w }))
                .collect();
            let doc = json!({
                "kind": "dimonoid",
                "dimonoid": report.is_dimonoid(),
                "axioms": report,
                "failures": failures,
            });
            let mut text = String::new();
            for (name, verdict) in report.entries() {
                match verdict.witness() {
                    None => text.push_str(&format!("{name:<12} ok\n")),
                    Some(w) => text.push_str(&format!("{name:<12} FAIL at {w:?}\n")),
                }
            }
            Ok(Outcome::truth(&doc, text, report.is_dimonoid()))
        }
    }
}

fn flag_lines(value: &Value) -> String {
    let mut text = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            text.push_str(&format!("{k:<18} {v}\n"));
        }
    }
    text
}

fn props(s: Structure) -> Result<Outcome, Error> {
    match s {
        Structure::Semigroup(t) => {
            let class = serde_json::to_value(t.semigroup_class()).expect("serializable");
            let doc = json!({ "kind": "semigroup", "class": class, "roles": t.element_roles() });
            Ok(Outcome::new(&doc, flag_lines(&class)))
        }
        Structure::Dimonoid(d) => {
            let flags = serde_json::to_value(d.flags()?).expect("serializable");
            let halo = d.halo()?;
            let doc = json!({
                "kind": "dimonoid",
                "flags": flags,
                "halo": halo,
                "left": { "class": d.left().semigroup_class(), "roles": d.left().element_roles() },
                "right": { "class": d.right().semigroup_class(), "roles": d.right().element_roles() },
            });
            let mut text = flag_lines(&flags);
            text.push_str(&format!("{:<18} {halo:?}\n", "halo"));
            Ok(Outcome::new(&doc, text))
        }
    }
}

fn halo(d: DiTable) -> Result<Outcome, Error> {
    let halo = d.halo()?;
    let text = format!("{halo:?}\n");
    Ok(Outcome::new(&json!({ "halo": halo }), text))
}

fn aut_text(auts: &AutSet) -> String {
    let mut text = format!("order {}\n", auts.order());
    for p in auts.perms() {
        text.push_str(&format!("{:?}\n", p.images()));
    }
    text
}

fn aut(s: Structure, spec: Option<&str>) -> Result<Outcome, Error> {
    let auts = match s {
        Structure::Semigroup(t) => table_automorphisms(&t)?,
        Structure::Dimonoid(d) => automorphisms(&d)?,
    };
    let Some(spec) = spec else {
        return Ok(Outcome::new(&auts, aut_text(&auts)));
    };
    let spec: SymmetricProductSpec = spec.parse()?;
    let matches = matches_symmetric_product(&auts, &spec)?;
    let doc = json!({
        "order": auts.order(),
        "spec": spec.to_string(),
        "spec_order": spec.group_order(),
        "matches": matches,
    });
    let text = format!("{}matches {spec}: {matches}\n", aut_text(&auts));
    Ok(Outcome::truth(&doc, text, matches))
}

fn dual(s: Structure, naive: bool) -> Result<Outcome, Error> {
    match s {
        Structure::Semigroup(t) => {
            let d = t.dual();
            Ok(Outcome::new(&d, semigroup_text(&d)))
        }
        Structure::Dimonoid(d) => {
            let e = if naive { d.naive_flip() } else { d.dual() };
            Ok(Outcome::new(&e, e.to_string()))
        }
    }
}

fn iso(first: DiTable, second: DiTable) -> Result<Outcome, Error> {
    let map = find_isomorphism(&first, &second);
    let holds = map.is_some();
    let doc = json!({ "isomorphic": holds, "map": map.as_ref().map(|p| p.images()) });
    let text = match &map {
        Some(p) => format!("true {:?}\n", p.images()),
        None => "false\n".to_string(),
    };
    Ok(Outcome::truth(&doc, text, holds))
}

fn classify_cmd(n: usize, quotient: QuotientArg, out: Option<&Path>) -> Result<Outcome, Error> {
    let quotient = match quotient {
        QuotientArg::Iso => Quotient::Iso,
        QuotientArg::IsoDual => Quotient::IsoAndDuality,
    };
    let entries = classify(n, quotient)?;
    if let Some(path) = out {
        catalog::save_catalog(&entries, path)?;
    }
    let mut lines = Vec::new();
    write_catalog(&entries, &mut lines).expect("writing to memory");
    let labeled: usize = entries.iter().map(|e| e.labeled_count).sum();
    let mut text = format!("order {n}: {} classes, {labeled} labeled\n", entries.len());
    for (i, e) in entries.iter().enumerate() {
        let f = e.flags;
        text.push_str(&format!(
            "#{i} aut={} halo={} labeled={} dual=#{} abelian={} commutative={} rectangular={}\n{}",
            e.aut_order,
            e.halo_size,
            e.labeled_count,
            e.dual_class,
            f.abelian,
            f.commutative,
            f.rectangular,
            e.canonical
        ));
    }
    Ok(Outcome {
        json: String::from_utf8(lines).expect("catalog is UTF-8"),
        text,
        code: EXIT_OK,
    })
}

fn suite(n_max: usize) -> Result<Outcome, Error> {
    let report = run_theorem_suite(n_max)?;
    let mut text = String::new();
    for r in &report.records {
        let status = if r.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{status} {} ({} cases)\n", r.id, r.cases));
        if let Some(c) = &r.counterexample {
            text.push_str(&format!("     counterexample: {c}\n"));
        }
    }
    for note in &report.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    Ok(Outcome::truth(&report, text, report.all_passed))
}

/// Entry point used by the binary.
pub fn main_with_stdio() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(
        std::env::args_os().skip(1),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
