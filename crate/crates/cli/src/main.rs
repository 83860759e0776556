//! `hypersub`: generate families, subdivide, compute and predict spectra,
//! audit predictions and certify cospectral pairs.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 the mathematics
//! disagrees (verify, audit-all, a closed form without real roots, quotient
//! containment, cospectral check).

mod format;
mod ledger;
mod manifest;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hypersub::cospectral::{self, DEFAULT_BUDGET};
use hypersub::families::{self, FamilySpec};
use hypersub::io::{read_hypergraph, HypergraphDocument};
use hypersub::partitions::{check_equitable, containment_check, Partition};
use hypersub::predictors::{self, AuditReport, Instance, Theorem, DEFAULT_AUDIT_TOL};
use hypersub::spectra::DEFAULT_GROUPING_TOL;
use hypersub::{eigenvalues, subdivide, Error, Flavor, Hypergraph};

use format::{rows, sig12, values_line};
use manifest::{embed, RunManifest};

const EQUITABLE_TOL: f64 = 1e-10;
const CONTAINMENT_TOL: f64 = 1e-8;
const T8_TOL: f64 = 1e-8;
const T7_TOL: f64 = 1e-7;

#[derive(Parser)]
#[command(name = "hypersub", version, about = "Subdivision hypergraphs and their adjacency spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family in the interchange format.
    Gen(GenArgs),
    /// Subdivide every hyperedge.
    Subdivide(SubdivideArgs),
    /// Adjacency spectrum as (value, multiplicity) rows.
    Spectrum(SpectrumArgs),
    /// Quotient matrix of a partition and the containment verdict.
    Quotient(QuotientArgs),
    /// Predicted spectrum of the subdivision.
    Predict(PredictArgs),
    /// Compare both flavors against the eigensolver.
    Verify(VerifyArgs),
    /// Audit every grid point of every theorem.
    AuditAll(AuditAllArgs),
    /// Cospectrality certificates.
    #[command(subcommand)]
    Cospectral(CospectralCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: String,
    /// `key=value` pairs, comma separated.
    #[arg(long, default_value = "")]
    params: String,
    /// Relabel vertices and reorder edges by a seeded random permutation.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SubdivideArgs {
    /// Interchange file; standard input when absent.
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the new-vertex and origin-edge maps here.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Values closer than this are grouped into one row.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct QuotientArgs {
    input: Option<PathBuf>,
    /// Cells separated by `;`, members by `,`, ranges as `a-b`.
    #[arg(long)]
    cells: String,
    /// Containment tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long)]
    theorem: Theorem,
    #[arg(long, default_value = "")]
    params: String,
    /// Input hypergraph for t1 and t2.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct PredictArgs {
    #[command(flatten)]
    theorem: TheoremArgs,
    #[arg(long, default_value = "structural")]
    flavor: Flavor,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    theorem: TheoremArgs,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditAllArgs {
    #[arg(long)]
    tol: Option<f64>,
    /// `text` writes markdown.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CospectralCommand {
    /// Compare two hypergraphs as given.
    Check(CheckArgs),
    /// Subdivide a known cospectral pair (t8), or its powers with `--k` (t7).
    Forge(ForgeArgs),
}

#[derive(Args)]
struct CheckArgs {
    first: PathBuf,
    second: PathBuf,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ForgeArgs {
    /// Two named regular graphs, comma separated.
    #[arg(long)]
    base: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Directory for the certificate and both hypergraphs.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Discrepancy,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Subdivide(a) => subdivide_cmd(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Quotient(a) => quotient(a),
        Command::Predict(a) => predict(a),
        Command::Verify(a) => verify(a),
        Command::AuditAll(a) => audit_all(a),
        Command::Cospectral(CospectralCommand::Check(a)) => check(a),
        Command::Cospectral(CospectralCommand::Forge(a)) => forge(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Discrepancy) => ExitCode::from(2),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn input_name(path: Option<&Path>) -> String {
    path.map(|p| p.display().to_string()).unwrap_or_else(|| "-".into())
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<Hypergraph, Failure> {
    let text = read_text(path)?;
    read_hypergraph(&text).map_err(|e| Failure::Input(format!("{}: {e}", input_name(path))))
}

fn emit(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document serializes");
    s.push('\n');
    s
}

fn document(h: &Hypergraph, manifest: &RunManifest) -> String {
    json(&HypergraphDocument::from_hypergraph(h).with_manifest(manifest.to_value()))
}

fn gen(a: GenArgs) -> Outcome {
    let spec = FamilySpec::parse(&a.family, &a.params)?;
    let mut h = spec.build()?;
    if let Some(seed) = a.seed {
        h = h.shuffled(seed).0;
    }
    let manifest = RunManifest::new("gen")
        .param("family", spec.name)
        .param("params", &a.params)
        .seed(a.seed)
        .output(a.out.as_deref());
    emit(a.out.as_deref(), &document(&h, &manifest))
}

#[derive(Serialize)]
struct Sidecar<'a> {
    new_vertex_of_edge: &'a [usize],
    origin_edge_of_new_edge: &'a [usize],
}

fn subdivide_cmd(a: SubdivideArgs) -> Outcome {
    let h = read_input(a.input.as_deref())?;
    let s = subdivide(&h);
    let manifest = RunManifest::new("subdivide")
        .input(input_name(a.input.as_deref()))
        .output(a.out.as_deref());
    if let Some(path) = &a.sidecar {
        let body = Sidecar {
            new_vertex_of_edge: &s.new_vertex_of_edge,
            origin_edge_of_new_edge: &s.origin_edge_of_new_edge,
        };
        emit(Some(path), &json(&embed(&manifest, body)))?;
    }
    emit(a.out.as_deref(), &document(&s.hypergraph, &manifest))
}

#[derive(Serialize)]
struct SpectrumDoc {
    order: usize,
    spectrum: Vec<format::Row>,
}

fn spectrum(a: SpectrumArgs) -> Outcome {
    let h = read_input(a.input.as_deref())?;
    let tol = a.tol.unwrap_or(DEFAULT_GROUPING_TOL);
    let spec = eigenvalues(&h.adjacency_matrix()?).with_tolerance(tol);
    let table = rows(&spec);
    let manifest = RunManifest::new("spectrum")
        .param("format", a.format.name())
        .input(input_name(a.input.as_deref()))
        .output(a.out.as_deref())
        .tolerance(tol);
    let text = match a.format {
        Format::Json => json(&embed(
            &manifest,
            SpectrumDoc {
                order: spec.len(),
                spectrum: table,
            },
        )),
        Format::Text => manifest.comment() + &format::text_table(&table),
        Format::Csv => manifest.comment() + &format::csv_table(&table),
    };
    emit(a.out.as_deref(), &text)
}

#[derive(Serialize)]
struct QuotientDoc {
    cells: Vec<Vec<usize>>,
    quotient: Vec<Vec<f64>>,
    eigenvalues: Vec<f64>,
    contained: bool,
    max_deviation: f64,
    margin: f64,
}

fn quotient(a: QuotientArgs) -> Outcome {
    let h = read_input(a.input.as_deref())?;
    let adj = h.adjacency_matrix()?;
    let partition = Partition::parse(&a.cells, adj.order())?;
    let q = check_equitable(&adj, &partition, EQUITABLE_TOL)?;
    let tol = a.tol.unwrap_or(CONTAINMENT_TOL);
    let c = containment_check(&q, &adj, tol);
    let values = q.eigenvalues()?;
    let manifest = RunManifest::new("quotient")
        .param("cells", &a.cells)
        .input(input_name(a.input.as_deref()))
        .output(a.out.as_deref())
        .tolerance(tol);
    let text = match a.format {
        Format::Json => json(&embed(
            &manifest,
            QuotientDoc {
                cells: partition.cells().to_vec(),
                quotient: q.to_rows(),
                eigenvalues: values.iter().map(|&v| format::rounded(v)).collect(),
                contained: c.holds,
                max_deviation: c.max_deviation,
                margin: c.margin,
            },
        )),
        Format::Text | Format::Csv => {
            let mut out = manifest.comment();
            for row in q.to_rows() {
                out.push_str(&values_line(&row));
                out.push('\n');
            }
            out.push_str(&format!("eigenvalues: {}\n", values_line(&values)));
            out.push_str(&format!(
                "containment: {} (max deviation {:.1e}, margin {:.1e})\n",
                if c.holds { "holds" } else { "fails" },
                c.max_deviation,
                c.margin
            ));
            out
        }
    };
    emit(a.out.as_deref(), &text)?;
    if c.holds {
        Ok(())
    } else {
        Err(Failure::Discrepancy)
    }
}

fn instance(a: &TheoremArgs) -> Result<Instance, Failure> {
    let input = match &a.input {
        Some(p) => Some(read_input(Some(p))?),
        None => None,
    };
    Ok(Instance::parse(a.theorem, &a.params, input)?)
}

fn theorem_manifest(command: &str, a: &TheoremArgs) -> RunManifest {
    let mut m = RunManifest::new(command)
        .param("theorem", a.theorem)
        .param("params", &a.params);
    if let Some(p) = &a.input {
        m = m.input(p.display().to_string());
    }
    m
}

fn predict(a: PredictArgs) -> Outcome {
    let inst = instance(&a.theorem)?;
    let p = match predictors::predict(&inst, a.flavor) {
        Ok(p) => p,
        Err(e @ (Error::NonRealRoot { .. } | Error::CancellationImpossible { .. })) => {
            eprintln!("discrepancy: {} {} {}: {e}", inst.theorem(), inst.params(), a.flavor);
            return Err(Failure::Discrepancy);
        }
        Err(e) => return Err(e.into()),
    };
    let manifest = theorem_manifest("predict", &a.theorem)
        .param("flavor", a.flavor)
        .output(a.out.as_deref());
    let text = match a.format {
        Format::Json => {
            let flat: Vec<f64> = p.flatten().values().iter().map(|&v| format::rounded(v)).collect();
            json(&embed(&manifest, serde_json::json!({ "prediction": p, "values": flat })))
        }
        Format::Text | Format::Csv => {
            let mut out = manifest.comment();
            out.push_str(&format!("{} {} ({} values)\n", p.theorem, p.params, p.len()));
            for piece in &p.pieces {
                out.push_str(&format!(
                    "({}) {} x{}: {}\n",
                    piece.clause,
                    piece.label,
                    piece.multiplicity,
                    values_line(&piece.values)
                ));
            }
            out.push_str(&format::text_table(&rows(&p.flatten())));
            out
        }
    };
    emit(a.out.as_deref(), &text)
}

fn report_text(r: &AuditReport) -> String {
    let d = |x: Option<f64>| x.map(|v| format!("{v:.3e}")).unwrap_or_else(|| "n/a".into());
    let mut out = format!(
        "{} {}: order {}, tolerance {}\n  structural vs eigensolver   {}\n  closed form vs eigensolver  {}\n  closed form vs structural   {}\n",
        r.theorem,
        r.params,
        r.order,
        sig12(r.tolerance),
        d(r.structural_vs_oracle),
        d(r.closed_vs_oracle),
        d(r.closed_vs_structural)
    );
    if r.passed() {
        out.push_str("PASS\n");
    }
    for x in &r.discrepancies {
        out.push_str(&format!(
            "DISCREPANCY clause ({}) [{}] {}: {}\n",
            x.clause, x.compared, x.piece, x.note
        ));
    }
    out
}

fn verify(a: VerifyArgs) -> Outcome {
    let inst = instance(&a.theorem)?;
    let tol = a.tol.unwrap_or(DEFAULT_AUDIT_TOL);
    let r = predictors::audit(&inst, tol)?;
    let manifest = theorem_manifest("verify", &a.theorem)
        .tolerance(tol)
        .output(a.out.as_deref());
    let text = match a.format {
        Format::Json => json(&embed(&manifest, &r)),
        Format::Text | Format::Csv => manifest.comment() + &report_text(&r),
    };
    emit(a.out.as_deref(), &text)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Discrepancy)
    }
}

fn audit_all(a: AuditAllArgs) -> Outcome {
    let tol = a.tol.unwrap_or(DEFAULT_AUDIT_TOL);
    let l = ledger::build(tol)?;
    let manifest = RunManifest::new("audit-all")
        .param("format", a.format.name())
        .tolerance(tol)
        .output(a.out.as_deref());
    let text = match a.format {
        Format::Json => json(&embed(&manifest, &l)),
        Format::Text | Format::Csv => ledger::markdown(&l, &manifest.comment()),
    };
    emit(a.out.as_deref(), &text)?;
    eprintln!(
        "{} of {} grid points pass; {} discrepancies",
        l.passed,
        l.grid_points,
        l.discrepancies.len()
    );
    if l.clean() {
        Ok(())
    } else {
        Err(Failure::Discrepancy)
    }
}

fn check(a: CheckArgs) -> Outcome {
    let h1 = read_input(Some(&a.first))?;
    let h2 = read_input(Some(&a.second))?;
    let tol = a.tol.unwrap_or(T8_TOL);
    let manifest = RunManifest::new("cospectral check")
        .param("budget", a.budget)
        .input(a.first.display().to_string())
        .input(a.second.display().to_string())
        .tolerance(tol)
        .output(a.out.as_deref());
    let cmp = cospectral::are_cospectral(&h1, &h2, tol)?;
    if !cmp.equal {
        let body = serde_json::json!({ "cospectral": false, "max_deviation": finite(cmp.max_deviation) });
        emit(a.out.as_deref(), &json(&embed(&manifest, body)))?;
        return Err(Failure::Discrepancy);
    }
    let cert = cospectral::certify_direct(&h1, &h2, tol, a.budget)?;
    emit(a.out.as_deref(), &json(&embed(&manifest, &cert)))
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn forge(a: ForgeArgs) -> Outcome {
    let names: Vec<&str> = a.base.split(',').map(str::trim).collect();
    let [n1, n2] = names[..] else {
        return Err(Failure::Input(format!("--base needs two graphs, got {:?}", a.base)));
    };
    let g1 = families::named_graph(n1)?;
    let g2 = families::named_graph(n2)?;
    let (cert, construction, tol) = match a.k {
        Some(k) => {
            let tol = a.tol.unwrap_or(T7_TOL);
            (cospectral::cospectral_pair_t7(&g1, &g2, k, tol, a.budget)?, "t7", tol)
        }
        None => {
            let tol = a.tol.unwrap_or(T8_TOL);
            (cospectral::cospectral_pair_t8(&g1, &g2, tol, a.budget)?, "t8", tol)
        }
    };
    let mut manifest = RunManifest::new("cospectral forge")
        .param("base", &a.base)
        .param("construction", construction)
        .param("budget", a.budget)
        .tolerance(tol)
        .output(Some(&a.out));
    if let Some(k) = a.k {
        manifest = manifest.param("k", k);
    }
    fs::create_dir_all(&a.out).map_err(|e| Failure::Input(format!("{}: {e}", a.out.display())))?;
    let first = cert.first.clone().into_hypergraph()?;
    let second = cert.second.clone().into_hypergraph()?;
    emit(Some(&a.out.join("first.json")), &document(&first, &manifest))?;
    emit(Some(&a.out.join("second.json")), &document(&second, &manifest))?;
    emit(Some(&a.out.join("certificate.json")), &json(&embed(&manifest, &cert)))?;
    println!(
        "{construction}: {} vertices each, deviation {:.1e}, verdict {:?}, non-isomorphism {:?}",
        cert.first.n, cert.max_deviation, cert.verdict, cert.non_isomorphism
    );
    Ok(())
}
