//! The `kuelsh` command line: argument parsing, JSON reports and exit codes.
//!
//! [`run`] is the whole program minus process I/O, so it can be driven from
//! tests. Reports go to stdout as pretty JSON with sorted keys; a short human
//! summary goes to stderr unless `--quiet` is given; errors are JSON objects
//! `{"error": {"code", "message"}}` on stderr.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::field::{Field, FieldError, Fq};
use crate::hochschild::{self, HochschildError, Method};
use crate::invariants::{
    self, compare, fingerprint, form_from_presentation, form_search, form_validate,
    kuelshammer_sequence, Comparison, Fingerprint, InvariantError, SymmetrizingForm,
};
use crate::presentation::{
    catalog_entries, catalog_lookup, catalog_source, parse_presentation, CatalogError,
    Presentation, PresentationError,
};
use crate::rewrite::{
    build_table, complete_auto, dim_and_cartan, AlgebraTable, MonomialOrder, RewriteError,
};

pub const SCHEMA: u64 = 1;
pub const SEED_VAR: &str = "KUELSH_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_SEPARATED: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NOT_SYMMETRIC: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "kuelsh",
    version,
    about = "Derived-equivalence invariants of bound quiver algebras over finite fields"
)]
pub struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Include wall-clock timing in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the built-in presentations.
    Catalog,
    /// Compute a basis of irreducible paths.
    Basis {
        #[command(flatten)]
        source: Source,
        /// Also write dimension, basis, structure constants and Cartan matrix to this file.
        #[arg(long, value_name = "FILE")]
        emit_table: Option<PathBuf>,
    },
    /// Center, commutator space, socle, Cartan data and the Külshammer sequence.
    Invariants {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = invariants::DEFAULT_N_MAX)]
        n_max: usize,
        /// `auto`, `given` (form lines of the input) or a file of `form` lines.
        #[arg(long, default_value = "auto")]
        form: String,
    },
    /// Dimension of a Hochschild cohomology group.
    Hh {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Relative)]
        method: MethodArg,
    },
    /// Compare the invariants of two algebras.
    Compare {
        /// Presentation files (one per side without a catalog name).
        files: Vec<PathBuf>,
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long)]
        catalog2: Option<String>,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, value_name = "NAME=VALUE")]
        param: Vec<String>,
        #[arg(long, value_name = "NAME=VALUE")]
        param2: Vec<String>,
        /// Also compare dim HH^0, HH^1, HH^2.
        #[arg(long)]
        hh: bool,
        #[arg(long, default_value_t = invariants::DEFAULT_N_MAX)]
        n_max: usize,
    },
    /// Run the four separations of the nonstandard algebras from their standard counterparts.
    Reproduce {
        /// Force one characteristic for every row.
        #[arg(long)]
        p: Option<u64>,
    },
}

/// Where a single presentation comes from.
#[derive(Debug, Args)]
pub struct Source {
    /// Presentation file.
    #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
    pub input: Option<PathBuf>,
    /// Catalog entry instead of a file.
    #[arg(long)]
    pub catalog: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long, value_name = "NAME=VALUE")]
    pub param: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Relative,
    Bar,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Relative => Method::Relative,
            MethodArg::Bar => Method::Bar,
        }
    }
}

/// A failure with its machine-readable code and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    fn validation(code: &str, message: impl Into<String>) -> CliError {
        CliError {
            code: code.to_string(),
            message: message.into(),
            exit: EXIT_VALIDATION,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"code": self.code, "message": self.message}})
    }
}

/// Leading identifier of a `Debug` rendering, which is the variant name.
fn variant<E: std::fmt::Debug>(e: &E) -> String {
    format!("{e:?}")
        .chars()
        .take_while(|c| c.is_ascii_alphanumeric())
        .collect()
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> CliError {
        CliError::validation(&variant(&e), e.to_string())
    }
}

impl From<PresentationError> for CliError {
    fn from(e: PresentationError) -> CliError {
        match e {
            PresentationError::Field(f) => f.into(),
            e => CliError::validation(&variant(&e), e.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> CliError {
        match e {
            CatalogError::Presentation(p) => p.into(),
            e => CliError::validation(&variant(&e), e.to_string()),
        }
    }
}

impl From<RewriteError> for CliError {
    fn from(e: RewriteError) -> CliError {
        let exit = match e {
            RewriteError::AssociativityFailure { .. } => EXIT_INTERNAL,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code: variant(&e),
            message: e.to_string(),
            exit,
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> CliError {
        let exit = match &e {
            InvariantError::NotSymmetricAlgebra
            | InvariantError::SearchExhausted { .. }
            | InvariantError::SocleMismatch { .. } => EXIT_NOT_SYMMETRIC,
            InvariantError::Linalg(_) => EXIT_INTERNAL,
            e if e.is_internal() => EXIT_INTERNAL,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code: variant(&e),
            message: e.to_string(),
            exit,
        }
    }
}

impl From<HochschildError> for CliError {
    fn from(e: HochschildError) -> CliError {
        let exit = match e {
            HochschildError::NotAComplex(_) => EXIT_INTERNAL,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code: variant(&e),
            message: e.to_string(),
            exit,
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => error_outcome(&CliError::validation(
                    "Usage",
                    e.render().to_string().trim_end(),
                )),
            };
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(done) => {
            let mut report = json!({
                "schema": SCHEMA,
                "tool_version": env!("CARGO_PKG_VERSION"),
                "command": done.command,
                "input_digest": done.digest,
                "result": done.result,
            });
            if cli.timing {
                report["timing"] = json!({"elapsed_ms": start.elapsed().as_millis() as u64});
            }
            let mut stdout = serde_json::to_string_pretty(&report).expect("report serializes");
            stdout.push('\n');
            Outcome {
                code: done.exit,
                stdout,
                stderr: if cli.quiet {
                    String::new()
                } else {
                    done.summary
                },
            }
        }
        Err(e) => error_outcome(&e),
    }
}

fn error_outcome(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit,
        stdout: String::new(),
        stderr: format!("{}\n", e.to_json()),
    }
}

struct Done {
    command: &'static str,
    digest: String,
    result: Value,
    summary: String,
    exit: i32,
}

fn execute(cli: &Cli) -> Result<Done, CliError> {
    match &cli.command {
        Command::Catalog => cmd_catalog(),
        Command::Basis { source, emit_table } => cmd_basis(source, emit_table.as_deref()),
        Command::Invariants {
            source,
            n_max,
            form,
        } => cmd_invariants(source, *n_max, form),
        Command::Hh {
            source,
            degree,
            method,
        } => cmd_hh(source, *degree, (*method).into()),
        Command::Compare {
            files,
            catalog,
            catalog2,
            p,
            k,
            param,
            param2,
            hh,
            n_max,
        } => {
            let mut files = files.iter();
            let mut side =
                |catalog: &Option<String>, params: &[String]| -> Result<Loaded, CliError> {
                    match catalog {
                        Some(name) => load_catalog(name, *p, *k, params),
                        None => match files.next() {
                            Some(path) => load_file(path),
                            None => Err(CliError::validation(
                                "Usage",
                                "compare needs two inputs (files or --catalog/--catalog2)",
                            )),
                        },
                    }
                };
            let a = side(catalog, param)?;
            let b = side(catalog2, param2)?;
            if files.next().is_some() {
                return Err(CliError::validation("Usage", "too many inputs for compare"));
            }
            cmd_compare(a, b, *hh, *n_max)
        }
        Command::Reproduce { p } => cmd_reproduce(*p),
    }
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A parsed input together with its source text and digest.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub presentation: Presentation,
    pub text: String,
    pub digest: String,
}

fn load_file(path: &std::path::Path) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation("Io", format!("{}: {e}", path.display())))?;
    let presentation = parse_presentation(&text)?;
    Ok(Loaded {
        digest: digest(text.as_bytes()),
        presentation,
        text,
    })
}

fn parse_params(field: &Field, raw: &[String]) -> Result<Vec<(String, Fq)>, CliError> {
    raw.iter()
        .map(|s| {
            let (name, value) = s.split_once('=').ok_or_else(|| {
                CliError::validation("BadParam", format!("expected NAME=VALUE, got '{s}'"))
            })?;
            Ok((name.trim().to_string(), field.parse(value.trim())?))
        })
        .collect()
}

/// Loads a catalog entry over `F_{p^k}`.
pub fn load_catalog(name: &str, p: u64, k: u32, raw: &[String]) -> Result<Loaded, CliError> {
    let field = Field::new(p, k)?;
    let params = parse_params(&field, raw)?;
    let presentation = catalog_lookup(name, &field, &params)?;
    let text = catalog_source(name, &field, presentation.param("lambda"))?;
    let mut key = format!("catalog:{name};p={p};k={k}");
    for (n, v) in &params {
        key.push_str(&format!(";{n}={}", v.0));
    }
    Ok(Loaded {
        presentation,
        text,
        digest: digest(key.as_bytes()),
    })
}

fn load_source(s: &Source) -> Result<Loaded, CliError> {
    match (&s.catalog, &s.input) {
        (Some(name), _) => load_catalog(name, s.p, s.k, &s.param),
        (None, Some(path)) => {
            if !s.param.is_empty() {
                return Err(CliError::validation(
                    "Usage",
                    "--param only applies to catalog entries; use param lines in the file",
                ));
            }
            load_file(path)
        }
        (None, None) => Err(CliError::validation("Usage", "no input given")),
    }
}

/// Completes the presentation and builds its multiplication table.
pub fn algebra(p: &Presentation) -> Result<AlgebraTable, CliError> {
    let sys = complete_auto(p, &MonomialOrder::declaration(p))?;
    Ok(build_table(&sys)?)
}

fn seed() -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::validation(
                "BadSeed",
                format!("{SEED_VAR} must be an unsigned integer, got '{v}'"),
            )
        }),
        Err(_) => Ok(0),
    }
}

/// How the symmetrizing form was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormOrigin {
    Given,
    File,
    Search,
}

impl FormOrigin {
    fn name(self) -> &'static str {
        match self {
            FormOrigin::Given => "given",
            FormOrigin::File => "file",
            FormOrigin::Search => "search",
        }
    }
}

/// Resolves `--form auto|given|FILE`.
fn resolve_form(
    t: &AlgebraTable,
    loaded: &Loaded,
    mode: &str,
) -> Result<(SymmetrizingForm, FormOrigin), CliError> {
    match mode {
        "given" => {
            let psi = form_from_presentation(t, &loaded.presentation)?;
            Ok((form_validate(t, &psi)?, FormOrigin::Given))
        }
        "auto" if loaded.presentation.has_form() => resolve_form(t, loaded, "given"),
        "auto" => Ok((form_search(t, seed()?)?, FormOrigin::Search)),
        path => {
            let extra = std::fs::read_to_string(path)
                .map_err(|e| CliError::validation("Io", format!("{path}: {e}")))?;
            let mut text: String = loaded
                .text
                .lines()
                .filter(|l| !l.trim_start().starts_with("form"))
                .map(|l| format!("{l}\n"))
                .collect();
            text.push_str(&extra);
            let p = parse_presentation(&text)?;
            let psi = form_from_presentation(t, &p)?;
            Ok((form_validate(t, &psi)?, FormOrigin::File))
        }
    }
}

/// Form for comparison reports: `None` when the algebra has no symmetrizing form.
fn optional_form(
    t: &AlgebraTable,
    loaded: &Loaded,
) -> Result<Option<(SymmetrizingForm, FormOrigin)>, CliError> {
    match resolve_form(t, loaded, "auto") {
        Ok(f) => Ok(Some(f)),
        Err(e) if e.exit == EXIT_NOT_SYMMETRIC => Ok(None),
        Err(e) => Err(e),
    }
}

fn form_json(t: &AlgebraTable, form: &SymmetrizingForm, origin: FormOrigin) -> Value {
    let mut values = Map::new();
    for (i, c) in form.psi.iter().enumerate() {
        if !c.is_zero() {
            values.insert(t.format_basis(i), json!(c.0));
        }
    }
    json!({"origin": origin.name(), "values": values})
}

fn field_json(f: &Field) -> Value {
    json!({"p": f.p(), "k": f.k(), "modulus": f.modulus()})
}

fn cmd_catalog() -> Result<Done, CliError> {
    let entries: Vec<Value> = catalog_entries()
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "description": e.description,
                "characteristic": e.characteristic,
                "needs_lambda": e.needs_lambda,
                "has_form": e.has_form,
                "standard": e.standard,
                "vertices": e.vertices,
            })
        })
        .collect();
    let summary = catalog_entries()
        .iter()
        .map(|e| format!("{:<10} {}\n", e.name, e.description))
        .collect();
    Ok(Done {
        command: "catalog",
        digest: digest(b"catalog"),
        result: json!({"entries": entries}),
        summary,
        exit: EXIT_OK,
    })
}

fn basis_json(t: &AlgebraTable) -> Vec<Value> {
    let q = t.quiver();
    t.basis()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            json!({
                "index": i,
                "path": t.format_basis(i),
                "source": q.vertices[b.source()],
                "target": q.vertices[b.target()],
                "length": b.len(),
            })
        })
        .collect()
}

fn cmd_basis(source: &Source, emit: Option<&std::path::Path>) -> Result<Done, CliError> {
    let loaded = load_source(source)?;
    let t = algebra(&loaded.presentation)?;
    let (dim, cartan) = dim_and_cartan(&t);
    if let Some(path) = emit {
        let mut constants = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for &(r, c) in t.product(i, j) {
                    constants.push(json!([i, j, r, c.0]));
                }
            }
        }
        let table = json!({
            "schema": SCHEMA,
            "name": loaded.presentation.name,
            "field": field_json(t.field()),
            "vertices": t.quiver().vertices,
            "dim": dim,
            "basis": t.basis().iter().enumerate().map(|(i, _)| t.format_basis(i)).collect::<Vec<_>>(),
            "structure_constants": constants,
            "cartan": cartan,
        });
        let mut text = serde_json::to_string_pretty(&table).expect("table serializes");
        text.push('\n');
        std::fs::write(path, text)
            .map_err(|e| CliError::validation("Io", format!("{}: {e}", path.display())))?;
    }
    let summary = format!(
        "{}: dim {dim}, {} rewrite rules\n{}\n",
        loaded.presentation.label(),
        t.system().rules().len(),
        (0..dim)
            .map(|i| t.format_basis(i))
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(Done {
        command: "basis",
        digest: loaded.digest,
        result: json!({
            "name": loaded.presentation.name,
            "field": field_json(t.field()),
            "dim": dim,
            "basis": basis_json(&t),
            "cartan": cartan,
            "rules": t.system().rules().len(),
            "bound": t.system().bound(),
        }),
        summary,
        exit: EXIT_OK,
    })
}

fn cmd_invariants(source: &Source, n_max: usize, form: &str) -> Result<Done, CliError> {
    let loaded = load_source(source)?;
    let t = algebra(&loaded.presentation)?;
    let (sf, origin) = resolve_form(&t, &loaded, form)?;
    let fp = fingerprint(&t, Some(&sf), n_max)?;
    let k = kuelshammer_sequence(&t, &sf, n_max)?;
    let summary = format!(
        "{}: dim {}, dim Z {}, dim K {}, dim soc {}, Külshammer codims {:?}\n",
        loaded.presentation.label(),
        fp.dim,
        fp.center_dim,
        fp.commutator_dim,
        fp.socle_dim,
        k.codims
    );
    Ok(Done {
        command: "invariants",
        digest: loaded.digest,
        result: json!({
            "name": loaded.presentation.name,
            "field": field_json(t.field()),
            "dim": fp.dim,
            "dimZ": fp.center_dim,
            "dimK": fp.commutator_dim,
            "dimSoc": fp.socle_dim,
            "num_simples": fp.num_simples,
            "cartan": fp.cartan,
            "cartan_det": fp.cartan_det,
            "kuelshammer": {
                "dims": k.dims,
                "codims": k.codims,
                "stable_index": k.stable_index,
                "socle_codims": k.socle_codims(),
            },
            "form_used": form_json(&t, &sf, origin),
        }),
        summary,
        exit: EXIT_OK,
    })
}

fn cmd_hh(source: &Source, degree: usize, method: Method) -> Result<Done, CliError> {
    let loaded = load_source(source)?;
    let t = algebra(&loaded.presentation)?;
    let r = hochschild::hh_report(&t, degree, method)?;
    Ok(Done {
        command: "hh",
        digest: loaded.digest,
        summary: format!(
            "{}: dim HH^{degree} = {} ({})\n",
            loaded.presentation.label(),
            r.dim,
            method.name()
        ),
        result: json!({
            "name": loaded.presentation.name,
            "degree": degree,
            "dim": r.dim,
            "method": method.name(),
            "cochain_dims": r.cochain_dims,
            "rank_data": r.ranks,
        }),
        exit: EXIT_OK,
    })
}

/// Invariants of one side of a comparison.
pub struct Side {
    pub label: String,
    pub table: AlgebraTable,
    pub form: Option<(SymmetrizingForm, FormOrigin)>,
    pub fingerprint: Fingerprint,
}

pub fn side(loaded: &Loaded, hh: bool, n_max: usize) -> Result<Side, CliError> {
    let t = algebra(&loaded.presentation)?;
    let form = optional_form(&t, loaded)?;
    let mut fp = fingerprint(&t, form.as_ref().map(|f| &f.0), n_max)?;
    if hh {
        fp.hh = Some(hochschild::hh_dims(&t, Method::Relative)?);
    }
    Ok(Side {
        label: loaded.presentation.label(),
        table: t,
        form,
        fingerprint: fp,
    })
}

fn comparison_json(a: &Side, b: &Side, c: &Comparison) -> Value {
    let rows: Vec<Value> = c
        .rows
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "a": r.a,
                "b": r.b,
                "agrees": r.agrees(),
                "derived_invariant": r.derived,
            })
        })
        .collect();
    let form = |s: &Side| s.form.as_ref().map(|(f, o)| form_json(&s.table, f, *o));
    json!({
        "a": a.label,
        "b": b.label,
        "rows": rows,
        "witness": c.witness,
        "verdict": c.verdict(),
        "forms": {"a": form(a), "b": form(b)},
    })
}

fn cmd_compare(a: Loaded, b: Loaded, hh: bool, n_max: usize) -> Result<Done, CliError> {
    let sa = side(&a, hh, n_max)?;
    let sb = side(&b, hh, n_max)?;
    let c = compare(&sa.fingerprint, &sb.fingerprint);
    let mut summary = String::new();
    for r in &c.rows {
        summary.push_str(&format!(
            "{:<20} {:<24} {:<24} {}\n",
            r.name,
            r.a.to_string(),
            r.b.to_string(),
            if r.agrees() { "=" } else { "differs" }
        ));
    }
    summary.push_str(&c.verdict());
    summary.push('\n');
    Ok(Done {
        command: "compare",
        digest: digest(format!("{}\n{}", a.digest, b.digest).as_bytes()),
        result: comparison_json(&sa, &sb, &c),
        summary,
        exit: EXIT_OK,
    })
}

/// One comparison of the reproduction table.
struct Case {
    a: &'static str,
    b: &'static str,
    param_a: Option<&'static str>,
    param_b: Option<&'static str>,
}

struct Item {
    item: usize,
    p: u64,
    k: u32,
    hh: bool,
    cases: Vec<Case>,
}

fn items() -> Vec<Item> {
    let pair = |a, b| Case {
        a,
        b,
        param_a: None,
        param_b: None,
    };
    let lambdas = ["g", "g+1"];
    let mut row2 = Vec::new();
    for l in lambdas {
        for m in lambdas {
            row2.push(Case {
                a: "Lambda3",
                b: "Lambda3p",
                param_a: Some(l),
                param_b: Some(m),
            });
        }
    }
    vec![
        Item {
            item: 1,
            p: 3,
            k: 1,
            hh: false,
            cases: vec![pair("Lambda2", "Lambda2p")],
        },
        Item {
            item: 2,
            p: 2,
            k: 2,
            hh: false,
            cases: row2,
        },
        Item {
            item: 3,
            p: 2,
            k: 1,
            hh: false,
            cases: vec![pair("Lambda5", "Lambda5p")],
        },
        Item {
            item: 4,
            p: 2,
            k: 1,
            hh: true,
            cases: vec![pair("Lambda9", "Lambda9p")],
        },
    ]
}

fn cmd_reproduce(force_p: Option<u64>) -> Result<Done, CliError> {
    let mut rows = Vec::new();
    let mut summary = String::new();
    let mut separated = 0;
    for it in items() {
        let p = force_p.unwrap_or(it.p);
        let mut cases = Vec::new();
        let mut witnesses = Vec::new();
        let mut all = true;
        for c in &it.cases {
            let params =
                |v: Option<&str>| v.map(|v| vec![format!("lambda={v}")]).unwrap_or_default();
            let a = load_catalog(c.a, p, it.k, &params(c.param_a))?;
            let b = load_catalog(c.b, p, it.k, &params(c.param_b))?;
            let sa = side(&a, it.hh, invariants::DEFAULT_N_MAX)?;
            let sb = side(&b, it.hh, invariants::DEFAULT_N_MAX)?;
            let cmp = compare(&sa.fingerprint, &sb.fingerprint);
            let values = cmp
                .witness
                .and_then(|w| cmp.rows.iter().find(|r| r.name == w))
                .map(|r| json!({"a": r.a, "b": r.b}));
            match cmp.witness {
                Some(w) if !witnesses.contains(&w) => witnesses.push(w),
                Some(_) => {}
                None => all = false,
            }
            cases.push(json!({
                "a": sa.label,
                "b": sb.label,
                "lambda": c.param_a,
                "mu": c.param_b,
                "witness": cmp.witness,
                "values": values,
                "verdict": cmp.verdict(),
            }));
        }
        if all {
            separated += 1;
        }
        summary.push_str(&format!(
            "({}) {} vs {} over F_{}{}: {} [{}]\n",
            it.item,
            it.cases[0].a,
            it.cases[0].b,
            p,
            if it.k > 1 {
                format!("^{}", it.k)
            } else {
                String::new()
            },
            if all { "separated" } else { "NOT separated" },
            witnesses.join(", ")
        ));
        rows.push(json!({
            "item": it.item,
            "p": p,
            "k": it.k,
            "separated": all,
            "witnesses": witnesses,
            "cases": cases,
        }));
    }
    let total = rows.len();
    summary.push_str(&format!("{separated}/{total} separations\n"));
    Ok(Done {
        command: "reproduce",
        digest: digest(format!("reproduce:p={force_p:?}").as_bytes()),
        result: json!({"rows": rows, "separations": separated, "total": total}),
        summary,
        exit: if separated == total {
            EXIT_OK
        } else {
            EXIT_NOT_SEPARATED
        },
    })
}
