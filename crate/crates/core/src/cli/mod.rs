//! Command-line front end. [`run`] parses arguments, performs one
//! computation and writes either a text summary or a JSON report.
//!
//! Exit codes: 0 success, 1 validation or parse error, 2 expectation not
//! met, 3 I/O error.

pub mod documents;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::catalog;
use crate::diffop::{DefinitionTag, DiffOperators, DEFAULT_MAX_ORDER};
use crate::hom::HomSpace;
use crate::jets::{self, JetModule, RepresentabilityReport, RepresentabilityWitness, Verdict};
use crate::linalg::{format_vector, Matrix, Scalar, Subspace};

use documents::{AlgebraDocument, DocumentError, ModuleDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_EXPECTATION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nc-jets", version, about = "Jet modules and differential operators over finite-dimensional algebras")]
pub struct Cli {
    /// Print the JSON report on stdout instead of a text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to FILE (for `catalog export`, the exported document).
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArg {
    /// Algebra document, or `builtin:NAME` for a catalog algebra.
    #[arg(short = 'a', long = "algebra", value_name = "A.json")]
    pub algebra: String,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[command(flatten)]
    pub algebra: AlgebraArg,
    /// Source module: a module document, `self` or `free2`.
    #[arg(short = 'p', long = "source", value_name = "P.json")]
    pub source: String,
    /// Target module; defaults to the source.
    #[arg(short = 'q', long = "target", value_name = "Q.json")]
    pub target: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an algebra document and optionally a module document.
    Validate {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'm', long = "module", value_name = "M.json")]
        module: Option<String>,
    },
    /// Center of the algebra.
    Center(AlgebraArg),
    /// Derivations of the algebra.
    Derivations(AlgebraArg),
    /// Stages 0..=r of a differential-operator filtration.
    Diff {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long = "def", value_parser = parse_tag)]
        definition: DefinitionTag,
        #[arg(long)]
        order: usize,
    },
    /// Jet module of the source module.
    Jet {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'p', long = "source", value_name = "P.json")]
        source: String,
        #[arg(long)]
        order: usize,
        /// First-order two-sided jet (requires --order 1).
        #[arg(long)]
        two_sided: bool,
    },
    /// Compare module maps out of the jet module with a filtration stage.
    Represent {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        order: usize,
        #[arg(long = "def", value_parser = parse_tag)]
        definition: DefinitionTag,
        #[arg(long)]
        expect: Option<RepresentExpectation>,
    },
    /// Search for a failure of the jet chain rule for left-linear maps.
    #[command(name = "witness-cc3")]
    WitnessCc3 {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        expect: Option<WitnessExpectation>,
    },
    /// Pairwise containment of every applicable filtration.
    Compare {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        order: usize,
    },
    /// Built-in example algebras.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    List,
    /// Write the algebra document of NAME (or one of its modules) to -o FILE.
    Export {
        name: String,
        #[arg(long)]
        module: Option<ModuleChoice>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepresentExpectation {
    Iso,
    NotIso,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessExpectation {
    Witness,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleChoice {
    #[value(name = "self")]
    Regular,
    Free2,
}

fn parse_tag(s: &str) -> Result<DefinitionTag, String> {
    s.parse().map_err(|e: crate::diffop::DiffError| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Document(DocumentError),
    Invalid(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Document(e) if e.is_io() => EXIT_IO,
            _ => EXIT_INVALID,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Document(e) => e.to_string(),
            CliError::Invalid(m) => m.clone(),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Document(e)
    }
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Invalid(e.to_string())
            }
        }
    )*};
}
invalid_from!(
    crate::diffop::DiffError,
    crate::jets::JetError,
    crate::bimodule::BimoduleError,
    crate::linalg::LinalgError,
    catalog::UnknownEntry
);

struct Outcome {
    results: Value,
    meta: Map<String, Value>,
    text: String,
    expectation_failed: Option<String>,
}

impl Outcome {
    fn new(results: Value, text: String) -> Self {
        Outcome { results, meta: Map::new(), text, expectation_failed: None }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// output. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                EXIT_OK
            } else {
                let _ = write!(err, "{text}");
                EXIT_INVALID
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|s| s.to_string_lossy().into_owned()).collect();
    let mut inputs = Map::new();
    match execute(&cli, &mut inputs) {
        Ok(outcome) => {
            let mut report = Map::new();
            report.insert("command".into(), json!(echo));
            report.insert("inputs".into(), Value::Object(inputs));
            report.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
            report.insert("results".into(), outcome.results);
            report.extend(outcome.meta);
            let report = Value::Object(report);
            let rendered = render(&report);
            if let (Some(path), false) =
                (&cli.output, matches!(cli.command, Command::Catalog(CatalogCommand::Export { .. })))
            {
                if let Err(e) = documents::write(path, &rendered) {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_IO;
                }
            }
            if cli.json {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(out, "{}", outcome.text);
            }
            if let Some(msg) = outcome.expectation_failed {
                let _ = writeln!(err, "expectation failed: {msg}");
                EXIT_EXPECTATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let code = e.code();
            let _ = writeln!(err, "error: {}", e.message());
            if cli.json {
                let report = json!({
                    "command": echo,
                    "version": env!("CARGO_PKG_VERSION"),
                    "error": { "exit_code": code, "message": e.message() },
                });
                let _ = write!(out, "{}", render(&report));
            }
            code
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli, inputs: &mut Map<String, Value>) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate { algebra, module } => {
            let a = load_algebra(&algebra.algebra, inputs)?;
            let mut results = algebra_summary(&a);
            let mut text = format!(
                "algebra {}: dim {}, field {}, commutative {}, center dim {}\n",
                a.name(),
                a.dim(),
                a.field().label(),
                a.is_commutative(),
                a.center().dim()
            );
            if let Some(m) = module {
                let p = load_module(m, &a, "module", inputs)?;
                results["module"] = json!({ "name": p.name(), "dim": p.dim(), "central": p.is_central() });
                let _ = writeln!(text, "module {}: dim {}, central {}", p.name(), p.dim(), p.is_central());
            }
            Ok(Outcome::new(results, text))
        }
        Command::Center(arg) => {
            let a = load_algebra(&arg.algebra, inputs)?;
            let z = a.center();
            let basis: Vec<String> = z.basis().iter().map(|v| a.format_element(v)).collect();
            let text = format!("center of {} has dim {}\n{}", a.name(), z.dim(), lines(&basis));
            Ok(Outcome::new(json!({ "dim": z.dim(), "basis": z.to_strings(), "basis_display": basis }), text))
        }
        Command::Derivations(arg) => {
            let a = load_algebra(&arg.algebra, inputs)?;
            let der = a.derivations();
            let n = a.dim();
            let inner = Subspace::span(a.field(), n * n, (0..n).map(|i| a.inner_derivation(&a.basis_element(i))));
            let maps: Vec<Matrix> = der.basis().iter().map(|v| Matrix::from_col_major(a.field(), n, n, v)).collect();
            let mut text = format!("derivations of {}: dim {} (inner: {})\n", a.name(), der.dim(), inner.dim());
            for (k, d) in maps.iter().enumerate() {
                let images: Vec<String> =
                    (0..n).map(|i| format!("{} -> {}", a.basis_names()[i], a.format_element(&d.column(i)))).collect();
                let _ = writeln!(text, "  d{k}: {}", images.join(", "));
            }
            let results = json!({
                "dim": der.dim(),
                "inner_dim": inner.dim(),
                "basis": maps.iter().map(Matrix::to_strings).collect::<Vec<_>>(),
            });
            Ok(Outcome::new(results, text))
        }
        Command::Diff { pair, definition, order } => {
            let (_, p, q) = load_pair(pair, inputs)?;
            let hom = HomSpace::new(p, q)?;
            let f = DiffOperators::new(&hom)?.filtration(*definition, *order)?;
            let stages: Vec<Value> = f
                .stages
                .iter()
                .enumerate()
                .map(|(k, s)| json!({ "order": k, "dim": s.dim(), "basis": hom_basis(&hom, s) }))
                .collect();
            let text = format!("{} filtration, Hom dim {}: stage dims {:?}\n", definition, hom.dim(), f.dims());
            let mut o = Outcome::new(json!({ "hom_dim": hom.dim(), "dims": f.dims(), "stages": stages }), text);
            tag_meta(&mut o, *definition, *order);
            Ok(o)
        }
        Command::Jet { algebra, source, order, two_sided } => {
            let a = load_algebra(&algebra.algebra, inputs)?;
            let p = load_module(source, &a, "source", inputs)?;
            check_order(*order)?;
            let jet = if *two_sided {
                if *order != 1 {
                    return Err(CliError::Invalid(format!(
                        "the two-sided jet is defined for order 1 only, requested {order}"
                    )));
                }
                JetModule::two_sided_first(p)?
            } else {
                JetModule::left(p, *order)?
            };
            let results = jet_json(&jet, *two_sided);
            let text = format!(
                "{} jet of order {}: ambient dim {}, mu dim {}, jet dim {}, generated by jets {}\n",
                if *two_sided { "two-sided" } else { "left" },
                order,
                jet.ambient_dim(),
                jet.mu().dim(),
                jet.dim(),
                jet.is_generated_by_jets()
            );
            let mut o = Outcome::new(results, text);
            o.meta.insert("order".into(), json!(order));
            Ok(o)
        }
        Command::Represent { pair, order, definition, expect } => {
            let (_, p, q) = load_pair(pair, inputs)?;
            check_order(*order)?;
            let report = if *definition == DefinitionTag::Bar1 {
                if *order != 1 {
                    return Err(CliError::Invalid(format!("bar1 is defined for order 1 only, requested {order}")));
                }
                jets::representability_bar1(p.clone(), q.clone())?
            } else {
                jets::representability_check(p.clone(), q.clone(), *order, *definition)?
            };
            let hom = HomSpace::new(p.clone(), q.clone())?;
            let results = representability_json(&report, &hom, q.dim());
            let mut text = format!(
                "{} order {}: jet dim {}, hom dim {}, diff dim {}, image dim {}, image contained {}\nverdict: {}\n",
                definition,
                order,
                report.jet_dim,
                report.hom_dim,
                report.diff_dim,
                report.image_dim,
                report.image_contained,
                report.verdict.as_str()
            );
            if let Some(w) = results.get("witness").filter(|w| !w.is_null()) {
                let _ = writeln!(text, "witness: {}", w["kind"].as_str().unwrap_or_default());
            }
            let mut o = Outcome::new(results, text);
            tag_meta(&mut o, *definition, *order);
            let iso = report.verdict == Verdict::Isomorphism;
            o.expectation_failed = match expect {
                Some(RepresentExpectation::Iso) if !iso => {
                    Some(format!("expected isomorphism, got {}", report.verdict.as_str()))
                }
                Some(RepresentExpectation::NotIso) if iso => Some("expected a non-isomorphism, got isomorphism".into()),
                _ => None,
            };
            Ok(o)
        }
        Command::WitnessCc3 { pair, order, expect } => {
            let (a, p, q) = load_pair(pair, inputs)?;
            check_order(*order)?;
            let found = jets::cc3_witness_search(p, q, *order)?;
            let (results, text) = match &found {
                Some(w) => {
                    let names: Vec<&str> = w.b_tuple.iter().map(|&i| a.basis_names()[i].as_str()).collect();
                    (
                        json!({
                            "found": true,
                            "b_tuple": w.b_tuple,
                            "b_names": names,
                            "p_index": w.p_index,
                            "f_index": w.f_index,
                            "f": w.f.to_strings(),
                            "residual": format_vector(&w.residual),
                        }),
                        format!(
                            "witness: b = ({}), p = basis {}, map #{}; residual {:?}\n",
                            names.join(", "),
                            w.p_index,
                            w.f_index,
                            format_vector(&w.residual)
                        ),
                    )
                }
                None => (
                    json!({ "found": false }),
                    format!("no witness at order {order}: the residual vanishes on all basis inputs\n"),
                ),
            };
            let mut o = Outcome::new(results, text);
            o.meta.insert("order".into(), json!(order));
            o.expectation_failed = match (expect, found.is_some()) {
                (Some(WitnessExpectation::Witness), false) => Some("expected a witness, none exists".into()),
                (Some(WitnessExpectation::None), true) => Some("expected no witness, found one".into()),
                _ => None,
            };
            Ok(o)
        }
        Command::Compare { pair, order } => {
            let (_, p, q) = load_pair(pair, inputs)?;
            let hom = HomSpace::new(p, q)?;
            let cmp = DiffOperators::new(&hom)?.compare(*order)?;
            let tags: Vec<&str> = cmp.tags.iter().map(|t| t.as_str()).collect();
            let mut text = format!("order {order}, commutative {}, all equal {}\n", cmp.commutative, cmp.all_equal());
            let _ = writeln!(text, "{:>16} {}", "stage", tags.iter().map(|t| format!("{t:>15}")).collect::<String>());
            let mut stages = Vec::new();
            for s in &cmp.stages {
                let _ =
                    writeln!(text, "{:>16} {}", s.order, s.dims.iter().map(|d| format!("{d:>15}")).collect::<String>());
                let mut relations = Vec::new();
                for (i, row) in s.cells.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        if i == j {
                            continue;
                        }
                        relations.push(json!({
                            "subset": tags[i],
                            "superset": tags[j],
                            "contained": cell.contained,
                            "witness": cell.witness.as_ref().map(|w| hom.as_map(w).to_strings()),
                        }));
                    }
                }
                let dims: Map<String, Value> =
                    tags.iter().zip(&s.dims).map(|(t, d)| (t.to_string(), json!(d))).collect();
                stages.push(
                    json!({ "order": s.order, "dims": dims, "all_equal": s.all_equal(), "relations": relations }),
                );
            }
            let results =
                json!({ "tags": tags, "commutative": cmp.commutative, "all_equal": cmp.all_equal(), "stages": stages });
            let mut o = Outcome::new(results, text);
            o.meta.insert("order".into(), json!(order));
            Ok(o)
        }
        Command::Catalog(CatalogCommand::List) => {
            let mut entries = Vec::new();
            let mut text = String::new();
            for name in catalog::NAMES {
                let e = catalog::builtin(name)?;
                let _ = writeln!(
                    text,
                    "{:<12} dim {}  {:<14} {}",
                    name,
                    e.algebra.dim(),
                    commutativity(&e.algebra),
                    e.notes
                );
                entries.push(json!({
                    "name": name,
                    "dim": e.algebra.dim(),
                    "commutative": e.algebra.is_commutative(),
                    "notes": e.notes,
                }));
            }
            Ok(Outcome::new(json!({ "entries": entries }), text))
        }
        Command::Catalog(CatalogCommand::Export { name, module }) => {
            let path = cli.output.as_ref().ok_or_else(|| CliError::Invalid("catalog export needs -o FILE".into()))?;
            let e = catalog::builtin(name)?;
            let (contents, digest, kind) = match module {
                None => {
                    let doc = AlgebraDocument::from_algebra(&e.algebra);
                    (documents::to_pretty_json(&doc), documents::digest(&doc), "algebra")
                }
                Some(choice) => {
                    let m = if *choice == ModuleChoice::Regular { &e.regular } else { &e.free2 };
                    let doc = ModuleDocument::from_bimodule(m);
                    (documents::to_pretty_json(&doc), documents::digest(&doc), "module")
                }
            };
            documents::write(path, &contents)?;
            let text = format!("wrote {kind} document for {name} to {}\n", path.display());
            Ok(Outcome::new(
                json!({ "exported": name, "kind": kind, "path": path.display().to_string(), "sha256": digest }),
                text,
            ))
        }
    }
}

fn commutativity(a: &Algebra) -> &'static str {
    if a.is_commutative() {
        "commutative"
    } else {
        "noncommutative"
    }
}

fn lines(items: &[String]) -> String {
    items.iter().map(|s| format!("  {s}\n")).collect()
}

fn check_order(order: usize) -> Result<(), CliError> {
    if order > DEFAULT_MAX_ORDER {
        return Err(CliError::Invalid(format!("order {order} exceeds the supported maximum {DEFAULT_MAX_ORDER}")));
    }
    Ok(())
}

fn tag_meta(o: &mut Outcome, tag: DefinitionTag, order: usize) {
    o.meta.insert("definition".into(), json!(tag.as_str()));
    o.meta.insert("order".into(), json!(order));
}

fn algebra_summary(a: &Algebra) -> Value {
    json!({
        "algebra": {
            "name": a.name(),
            "field": a.field().label(),
            "dim": a.dim(),
            "is_commutative": a.is_commutative(),
            "center_dim": a.center().dim(),
        }
    })
}

fn load_algebra(source: &str, inputs: &mut Map<String, Value>) -> Result<Arc<Algebra>, CliError> {
    let (doc, algebra) = match source.strip_prefix("builtin:") {
        Some(name) => {
            let a = catalog::algebra(name)?;
            (AlgebraDocument::from_algebra(&a), a)
        }
        None => documents::load_algebra(Path::new(source))?,
    };
    inputs.insert("algebra".into(), json!({ "source": source, "sha256": documents::digest(&doc) }));
    Ok(Arc::new(algebra))
}

fn load_module(
    source: &str,
    a: &Arc<Algebra>,
    role: &str,
    inputs: &mut Map<String, Value>,
) -> Result<Arc<Bimodule>, CliError> {
    let module = match source {
        "self" => Bimodule::regular(a.clone()),
        "free2" => Bimodule::free(a.clone(), 2),
        path => {
            let path = Path::new(path);
            let doc = ModuleDocument::from_json(&documents::read(path)?, &path.display().to_string())?;
            doc.to_bimodule(a.clone(), path.parent().unwrap_or(Path::new(".")))?
        }
    };
    let digest = documents::digest(&ModuleDocument::from_bimodule(&module));
    inputs.insert(role.into(), json!({ "source": source, "sha256": digest }));
    Ok(Arc::new(module))
}

type Loaded = (Arc<Algebra>, Arc<Bimodule>, Arc<Bimodule>);

fn load_pair(pair: &PairArgs, inputs: &mut Map<String, Value>) -> Result<Loaded, CliError> {
    let a = load_algebra(&pair.algebra.algebra, inputs)?;
    let p = load_module(&pair.source, &a, "source", inputs)?;
    let q = match &pair.target {
        Some(t) => load_module(t, &a, "target", inputs)?,
        None => p.clone(),
    };
    Ok((a, p, q))
}

fn hom_basis(hom: &HomSpace, s: &Subspace) -> Vec<Vec<Vec<String>>> {
    s.basis().iter().map(|v| hom.as_map(v).to_strings()).collect()
}

fn matrices(ms: &[Matrix]) -> Vec<Vec<Vec<String>>> {
    ms.iter().map(Matrix::to_strings).collect()
}

fn jet_json(jet: &JetModule, two_sided: bool) -> Value {
    json!({
        "two_sided": two_sided,
        "ambient_dim": jet.ambient_dim(),
        "mu_dim": jet.mu().dim(),
        "mu_basis": jet.mu().to_strings(),
        "dim": jet.dim(),
        "jet_map": jet.jet_map().to_strings(),
        "left_action": matrices(jet.left_ops()),
        "right_action": jet.right_ops().map(matrices),
        "bullet_action": jet.bullet_ops().map(matrices),
        "generated_by_jets": jet.is_generated_by_jets(),
    })
}

fn on_jet(v: &[Scalar], q_dim: usize, jet_dim: usize, field: crate::linalg::FieldSpec) -> Vec<Vec<String>> {
    Matrix::from_col_major(field, q_dim, jet_dim, v).to_strings()
}

fn representability_json(r: &RepresentabilityReport, hom: &HomSpace, q_dim: usize) -> Value {
    let field = hom.field();
    let witness = r.witness.as_ref().map(|w| match w {
        RepresentabilityWitness::Kernel { map } => {
            json!({ "kind": "kernel", "map": on_jet(map, q_dim, r.jet_dim, field) })
        }
        RepresentabilityWitness::OutsideClass { map, pullback } => json!({
            "kind": "outside-class",
            "map": on_jet(map, q_dim, r.jet_dim, field),
            "pullback": hom.as_map(pullback).to_strings(),
        }),
        RepresentabilityWitness::NotAPullback { operator } => {
            json!({ "kind": "not-a-pullback", "operator": hom.as_map(operator).to_strings() })
        }
    });
    json!({
        "jet_dim": r.jet_dim,
        "hom_dim": r.hom_dim,
        "diff_dim": r.diff_dim,
        "image_dim": r.image_dim,
        "image_contained": r.image_contained,
        "verdict": r.verdict.as_str(),
        "witness": witness,
    })
}
