//! Command-line driver: reproduces the multiplicity tables, decompositions,
//! structure-constant tables, and identity searches as text or JSON, with
//! optional artifact persistence (report file plus a run manifest).
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematical precondition
//! violation or runtime failure. Progress goes to stderr; the data stream
//! (stdout or `--out`) is byte-identical across reruns with the same
//! parameters.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{Integer, ToPrimitive};
use serde::Serialize;

use quatalg::exactla::{Int, Rational};
use quatalg::exactla::RatReducer;
use quatalg::identity::{
    apply_permutation, canonical_identity, fill_and_reduce_with, module_generators_with,
    parametric_scan_with, permutation_module, summarize_diagonal, Arithmetic, CanonicalIdentity,
    IdentityVector, MonomialBasis, ParametricStructure, SearchConfig, ORDER_VERSION,
};
use quatalg::multiplicity::{dim_weight_n, dim_weight_n_plus_2, multiplicity, multiplicity_brute};
use quatalg::sl2rep::basis::ExteriorBasis;
use quatalg::sl2rep::decompose::{decompose, highest_weight_vectors};
use quatalg::sl2rep::structure::{structure_table, StructureTable};

const GENERATOR_BATCH: usize = 24;

#[derive(Parser)]
#[command(
    name = "quatalg",
    version,
    about = "Exact computations with the invariant alternating quaternary products on the \
             irreducible sl(2) representations V(n)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of V(n) inside the fourth exterior power of V(n)
    Multiplicity(MultiplicityArgs),
    /// Irreducible decomposition of the fourth exterior power of V(n)
    Decompose(DecomposeArgs),
    /// Structure constants of an invariant quaternary product on V(n)
    Structure(StructureArgs),
    /// Search for multilinear polynomial identities of a quaternary product
    Identities(IdentitiesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format of the data stream
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout, plus a `.manifest.json` sidecar
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MultiplicityArgs {
    /// Single value or inclusive range `A..B`; odd n are omitted (multiplicity 0)
    #[arg(long, value_parser = parse_nspec)]
    n: NSpec,
    /// Cross-check the closed form against the partition-counting oracle
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long)]
    n: u32,
    /// Also print the canonical integral highest weight vectors per summand
    #[arg(long)]
    hwv: bool,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct StructureArgs {
    #[arg(long)]
    n: u32,
    /// Which copy of V(n) to project onto (0 = f, 1 = g)
    #[arg(long, default_value_t = 0)]
    copy: usize,
    /// Integral form is the parseable table format; rational is display only
    #[arg(long, value_enum, default_value_t = StructureForm::Integral)]
    form: StructureForm,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StructureForm {
    Rational,
    Integral,
}

#[derive(Args)]
struct IdentitiesArgs {
    #[arg(long)]
    n: u32,
    /// Degree of the multilinear identities to search for (7 or 10)
    #[arg(long, default_value_t = 7)]
    degree: u32,
    /// f, g, f+x*g (parametric pencil), f+<rational>*g, or file:PATH
    #[arg(long, default_value = "f", value_parser = parse_structure_spec)]
    structure: StructureSpec,
    /// Copy index of V(n) to use; shorthand for --structure f/g
    #[arg(long, conflicts_with = "structure")]
    copy: Option<usize>,
    /// Seed of the pseudorandom tuple stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Range of random components (rational mode; default 10)
    #[arg(long, conflicts_with = "modulus")]
    p: Option<u64>,
    /// Consecutive rank-stable iterations required to stop
    #[arg(long, default_value_t = 100)]
    s: u32,
    /// Number of tuple blocks in a parametric Smith scan
    #[arg(long, default_value_t = 4)]
    t: usize,
    /// Work over Z/p with this prime modulus instead of the rationals
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Allow the memory-hungry degree-10 search in exact rational arithmetic
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Clone)]
struct NSpec {
    lo: u32,
    hi: u32,
    raw: String,
}

fn parse_nspec(s: &str) -> Result<NSpec, String> {
    let raw = s.to_string();
    if let Some((a, b)) = s.split_once("..") {
        let lo: u32 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
        let hi: u32 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(NSpec { lo, hi, raw })
    } else {
        let v: u32 = s.trim().parse().map_err(|_| format!("bad n `{s}`"))?;
        Ok(NSpec { lo: v, hi: v, raw })
    }
}

#[derive(Clone)]
enum StructureSpec {
    Copy(usize),
    Pencil,
    Combined(Rational, String),
    File(PathBuf),
}

fn parse_structure_spec(s: &str) -> Result<StructureSpec, String> {
    match s {
        "f" => Ok(StructureSpec::Copy(0)),
        "g" => Ok(StructureSpec::Copy(1)),
        "f+x*g" => Ok(StructureSpec::Pencil),
        _ => {
            if let Some(path) = s.strip_prefix("file:") {
                return Ok(StructureSpec::File(PathBuf::from(path)));
            }
            if let Some(mid) = s.strip_prefix("f+").and_then(|r| r.strip_suffix("*g")) {
                let c: Rational = mid
                    .parse()
                    .map_err(|_| format!("bad coefficient `{mid}` in structure spec"))?;
                return Ok(StructureSpec::Combined(c, mid.to_string()));
            }
            Err(format!(
                "unrecognized structure spec `{s}`; expected f, g, f+x*g, f+<rational>*g, \
                 or file:PATH"
            ))
        }
    }
}

fn spec_string(spec: &StructureSpec) -> String {
    match spec {
        StructureSpec::Copy(0) => "f".into(),
        StructureSpec::Copy(1) => "g".into(),
        StructureSpec::Copy(k) => format!("copy:{k}"),
        StructureSpec::Pencil => "f+x*g".into(),
        StructureSpec::Combined(_, raw) => format!("f+{raw}*g"),
        StructureSpec::File(p) => format!("file:{}", p.display()),
    }
}

/// Mathematical precondition violation or runtime failure (exit code 2).
struct CliError(String);

impl CliError {
    fn new(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

/// Report plus manifest data, before format selection.
struct Rendered {
    text: String,
    json: serde_json::Value,
    manifest: RunManifest,
}

#[derive(Serialize)]
struct RunManifest {
    command: String,
    parameters: ManifestParameters,
    order_version: &'static str,
    library_version: &'static str,
    duration_seconds: f64,
}

#[derive(Serialize)]
struct ManifestParameters {
    n: String,
    degree: Option<u32>,
    copy: Option<usize>,
    structure: Option<String>,
    x: Option<String>,
    seed: Option<u64>,
    p: Option<u64>,
    s: Option<u32>,
    t: Option<usize>,
    modulus: Option<u64>,
    form: Option<String>,
    hwv: Option<bool>,
    verify: Option<bool>,
    format: String,
}

impl ManifestParameters {
    fn new(n: String, format: Format) -> Self {
        ManifestParameters {
            n,
            degree: None,
            copy: None,
            structure: None,
            x: None,
            seed: None,
            p: None,
            s: None,
            t: None,
            modulus: None,
            form: None,
            hwv: None,
            verify: None,
            format: match format {
                Format::Text => "text".into(),
                Format::Json => "json".into(),
            },
        }
    }
}

pub fn main_impl() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let started = Instant::now();
    let result = match &cli.command {
        Command::Multiplicity(args) => cmd_multiplicity(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Structure(args) => cmd_structure(args),
        Command::Identities(args) => cmd_identities(args),
    };
    let output = match &cli.command {
        Command::Multiplicity(a) => &a.output,
        Command::Decompose(a) => &a.output,
        Command::Structure(a) => &a.output,
        Command::Identities(a) => &a.output,
    };
    match result {
        Ok(mut rendered) => {
            rendered.manifest.duration_seconds =
                (started.elapsed().as_secs_f64() * 1000.0).round() / 1000.0;
            let data = match output.format {
                Format::Text => rendered.text,
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&rendered.json)
                        .expect("reports serialize");
                    s.push('\n');
                    s
                }
            };
            match &output.out {
                None => {
                    print!("{data}");
                    0
                }
                Some(path) => {
                    let manifest_path = format!("{}.manifest.json", path.display());
                    let mut manifest = serde_json::to_string_pretty(&rendered.manifest)
                        .expect("manifests serialize");
                    manifest.push('\n');
                    let write = fs::write(path, data)
                        .and_then(|()| fs::write(&manifest_path, manifest));
                    match write {
                        Ok(()) => 0,
                        Err(e) => {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            2
                        }
                    }
                }
            }
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

// ---------------------------------------------------------------------------
// multiplicity
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct MultiplicityReport {
    command: &'static str,
    entries: Vec<MultiplicityEntry>,
    verified: Option<usize>,
}

#[derive(Serialize)]
struct MultiplicityEntry {
    n: u32,
    dim_weight_n: String,
    dim_weight_n_plus_2: String,
    multiplicity: String,
}

fn cmd_multiplicity(args: &MultiplicityArgs) -> Result<Rendered, CliError> {
    let ns: Vec<u32> = (args.n.lo..=args.n.hi).filter(|n| n % 2 == 0).collect();
    let mut entries = Vec::with_capacity(ns.len());
    for &n in &ns {
        entries.push(MultiplicityEntry {
            n,
            dim_weight_n: dim_weight_n(n).to_string(),
            dim_weight_n_plus_2: dim_weight_n_plus_2(n).to_string(),
            multiplicity: multiplicity(n).to_string(),
        });
    }
    let verified = if args.verify {
        for &n in &ns {
            let closed = multiplicity(n);
            let brute = multiplicity_brute(n);
            if closed != brute {
                return Err(CliError::new(format!(
                    "closed form disagrees with the oracle at n = {n}: {closed} vs {brute}"
                )));
            }
        }
        Some(ns.len())
    } else {
        None
    };

    let mut text = String::new();
    let _ = writeln!(
        text,
        "multiplicity of V(n) in the fourth exterior power of V(n)"
    );
    let _ = writeln!(
        text,
        "{:>7} {:>14} {:>16} {:>14}",
        "n", "dim weight n", "dim weight n+2", "multiplicity"
    );
    for e in &entries {
        let _ = writeln!(
            text,
            "{:>7} {:>14} {:>16} {:>14}",
            e.n, e.dim_weight_n, e.dim_weight_n_plus_2, e.multiplicity
        );
    }
    if let Some(count) = verified {
        let _ = writeln!(
            text,
            "verified: closed form agrees with the partition-counting oracle on {count} values"
        );
    }

    let report = MultiplicityReport {
        command: "multiplicity",
        entries,
        verified,
    };
    let mut parameters = ManifestParameters::new(args.n.raw.clone(), args.output.format);
    parameters.verify = Some(args.verify);
    Ok(Rendered {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
        manifest: manifest("multiplicity", parameters),
    })
}

fn manifest(command: &str, parameters: ManifestParameters) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        parameters,
        order_version: ORDER_VERSION,
        library_version: quatalg::VERSION,
        duration_seconds: 0.0,
    }
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct DecomposeReport {
    command: &'static str,
    n: u32,
    dimension: String,
    summands: Vec<SummandReport>,
}

#[derive(Serialize)]
struct SummandReport {
    weight: i32,
    multiplicity: usize,
    quadruples: Option<Vec<[i32; 4]>>,
    hwvs: Option<Vec<Vec<String>>>,
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<Rendered, CliError> {
    let n = args.n;
    let summand_list = decompose(n);
    let basis = ExteriorBasis::new(n);
    let dimension = Int::from(basis.quads().len());

    let mut summands = Vec::with_capacity(summand_list.len());
    for &(w, mult) in &summand_list {
        let (quadruples, hwvs) = if args.hwv {
            let quads: Vec<[i32; 4]> = basis
                .quads()
                .iter()
                .filter(|q| q.weight() == w)
                .map(|q| q.0)
                .collect();
            let vectors: Vec<Vec<String>> = highest_weight_vectors(&basis, w)
                .iter()
                .map(|v| v.iter().map(Int::to_string).collect())
                .collect();
            (Some(quads), Some(vectors))
        } else {
            (None, None)
        };
        summands.push(SummandReport {
            weight: w,
            multiplicity: mult,
            quadruples,
            hwvs,
        });
    }

    let mut text = String::new();
    let _ = writeln!(
        text,
        "fourth exterior power of V({n}): dimension {dimension}"
    );
    for s in &summands {
        let _ = writeln!(text, "  V({})  multiplicity {}", s.weight, s.multiplicity);
        if let (Some(quads), Some(hwvs)) = (&s.quadruples, &s.hwvs) {
            let labels: Vec<String> = quads
                .iter()
                .map(|q| format!("[{},{},{},{}]", q[0], q[1], q[2], q[3]))
                .collect();
            let _ = writeln!(text, "    weight-{} quadruples: {}", s.weight, labels.join(", "));
            for (k, v) in hwvs.iter().enumerate() {
                let _ = writeln!(text, "    hwv {}: ({})", k + 1, v.join(", "));
            }
        }
    }

    let report = DecomposeReport {
        command: "decompose",
        n,
        dimension: dimension.to_string(),
        summands,
    };
    let mut parameters = ManifestParameters::new(n.to_string(), args.output.format);
    parameters.hwv = Some(args.hwv);
    Ok(Rendered {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
        manifest: manifest("decompose", parameters),
    })
}

// ---------------------------------------------------------------------------
// structure
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct StructureReport {
    command: &'static str,
    n: u32,
    copy: usize,
    form: &'static str,
    scale: Option<String>,
    entries: Vec<StructureEntry>,
}

#[derive(Serialize)]
struct StructureEntry {
    quadruple: [i32; 4],
    value: String,
}

fn cmd_structure(args: &StructureArgs) -> Result<Rendered, CliError> {
    let table = structure_table(args.n, args.copy).map_err(|e| CliError::new(e.to_string()))?;
    let (form, scale, values): (&'static str, Option<String>, Vec<String>) = match args.form {
        StructureForm::Integral => (
            "integral",
            Some(table.scale().to_string()),
            table.integral().iter().map(Int::to_string).collect(),
        ),
        StructureForm::Rational => (
            "rational",
            None,
            table.rational().iter().map(Rational::to_string).collect(),
        ),
    };

    let text = match args.form {
        StructureForm::Integral => table.to_text(),
        StructureForm::Rational => {
            let mut out = String::new();
            let _ = writeln!(out, "n = {}", table.n());
            if let Some(c) = table.copy() {
                let _ = writeln!(out, "copy = {c}");
            }
            for (q, x) in table.quads().iter().zip(table.rational()) {
                let _ = writeln!(out, "{q} = {x}");
            }
            out
        }
    };

    let entries = table
        .quads()
        .iter()
        .zip(&values)
        .map(|(q, v)| StructureEntry {
            quadruple: q.0,
            value: v.clone(),
        })
        .collect();
    let report = StructureReport {
        command: "structure",
        n: args.n,
        copy: args.copy,
        form,
        scale,
        entries,
    };
    let mut parameters = ManifestParameters::new(args.n.to_string(), args.output.format);
    parameters.copy = Some(args.copy);
    parameters.form = Some(form.to_string());
    Ok(Rendered {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
        manifest: manifest("structure", parameters),
    })
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SearchReport {
    command: &'static str,
    mode: &'static str,
    n: u32,
    structure: String,
    degree: u32,
    arithmetic: &'static str,
    p: u64,
    s: u32,
    seed: u64,
    order_version: &'static str,
    monomials: usize,
    iterations: u64,
    rank: usize,
    nullspace_dimension: usize,
    nullspace: Vec<String>,
    generators: Option<Vec<GeneratorReport>>,
    module_dimension: Option<usize>,
    /// Canonical identity that lies in the computed module and whose
    /// permutation orbit spans it (rational degree-7 runs only).
    canonical_generator: Option<&'static str>,
}

#[derive(Serialize)]
struct GeneratorReport {
    identity: usize,
    recognized: Option<&'static str>,
}

#[derive(Serialize)]
struct PencilReport {
    command: &'static str,
    mode: &'static str,
    n: u32,
    structure: &'static str,
    degree: u32,
    t: usize,
    rows: usize,
    columns: usize,
    p: u64,
    seed: u64,
    order_version: &'static str,
    ones: usize,
    zeros: usize,
    nonunit: Vec<String>,
    diagonal: Vec<String>,
}

fn cmd_identities(args: &IdentitiesArgs) -> Result<Rendered, CliError> {
    if args.degree != 7 && args.degree != 10 {
        return Err(CliError::new(format!(
            "degree {} is not supported; identity searches run in degree 7 or 10",
            args.degree
        )));
    }
    let spec = match args.copy {
        Some(k) => StructureSpec::Copy(k),
        None => args.structure.clone(),
    };
    if let Some(m) = args.modulus {
        if matches!(spec, StructureSpec::Pencil) {
            return Err(CliError::new(
                "parametric scans run in exact rational arithmetic; drop --mod",
            ));
        }
        if m <= args.degree as u64 || !is_prime(m) {
            return Err(CliError::new(format!(
                "modulus {m} must be a prime exceeding the degree {}",
                args.degree
            )));
        }
    }
    if args.degree == 10 && args.modulus.is_none() && !args.force {
        return Err(CliError::new(
            "a degree-10 search over the rationals keeps a dense 5775-column exact workspace; \
             pass --mod 101 for the modular search or --force to proceed anyway",
        ));
    }

    match spec {
        StructureSpec::Pencil => cmd_identities_pencil(args),
        _ => cmd_identities_search(args, &spec),
    }
}

fn cmd_identities_pencil(args: &IdentitiesArgs) -> Result<Rendered, CliError> {
    let n = args.n;
    let basis = MonomialBasis::new(args.degree).map_err(|e| CliError::new(e.to_string()))?;
    let monomials = basis.len();
    let dim = n as usize + 1;
    if args.t * dim <= monomials {
        return Err(CliError::new(format!(
            "need t(n+1) > monomial count to pin the nullspace: t = {} gives {} rows for {} \
             columns; raise --t",
            args.t,
            args.t * dim,
            monomials
        )));
    }
    let f = structure_table(n, 0).map_err(|e| CliError::new(e.to_string()))?;
    let g = structure_table(n, 1).map_err(|e| CliError::new(e.to_string()))?;
    let ps = ParametricStructure::new(f, g);
    let p = args.p.unwrap_or(10);
    let cfg = SearchConfig {
        p,
        s: args.s,
        seed: args.seed,
        arithmetic: Arithmetic::Rational,
    };
    eprintln!("scanning pencil f + x g on V({n}), t = {} blocks", args.t);
    let diag = parametric_scan_with(&ps, args.degree, args.t, &cfg, |b, t| {
        eprintln!("  block {b}/{t} reduced");
    });
    let (ones, zeros, nonunit) = summarize_diagonal(&diag);

    let report = PencilReport {
        command: "identities",
        mode: "pencil",
        n,
        structure: "f+x*g",
        degree: args.degree,
        t: args.t,
        rows: args.t * dim,
        columns: monomials,
        p,
        seed: args.seed,
        order_version: ORDER_VERSION,
        ones,
        zeros,
        nonunit: nonunit.iter().map(|d| d.to_string()).collect(),
        diagonal: diag.iter().map(|d| d.to_string()).collect(),
    };

    let mut text = String::new();
    let _ = writeln!(text, "parametric pencil f + x g on V({n}), degree {}", args.degree);
    let _ = writeln!(
        text,
        "arithmetic: rational polynomial, p = {p}, seed = {}",
        args.seed
    );
    let _ = writeln!(text, "monomial order: {ORDER_VERSION}, {monomials} monomials");
    let _ = writeln!(
        text,
        "scan matrix: t = {} blocks, {} rows, {} columns",
        args.t, report.rows, report.columns
    );
    let _ = writeln!(
        text,
        "smith diagonal: {ones} ones, {zeros} zeros, {} nonunit entries",
        report.nonunit.len()
    );
    if !report.nonunit.is_empty() {
        let _ = writeln!(text, "nonunit diagonal entries:");
        for (i, d) in diag.iter().enumerate() {
            if d.degree().map_or(false, |deg| deg > 0) {
                let _ = writeln!(text, "  d[{}] = {d}", i + 1);
            }
        }
    }

    let mut parameters = ManifestParameters::new(n.to_string(), args.output.format);
    parameters.degree = Some(args.degree);
    parameters.structure = Some("f+x*g".into());
    parameters.seed = Some(args.seed);
    parameters.p = Some(p);
    parameters.t = Some(args.t);
    Ok(Rendered {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
        manifest: manifest("identities", parameters),
    })
}

fn cmd_identities_search(args: &IdentitiesArgs, spec: &StructureSpec) -> Result<Rendered, CliError> {
    let n = args.n;
    let (table, title) = load_structure(n, spec)?;
    let (arithmetic, p) = match args.modulus {
        Some(m) => (Arithmetic::Modular, m),
        None => (Arithmetic::Rational, args.p.unwrap_or(10)),
    };
    let cfg = SearchConfig {
        p,
        s: args.s,
        seed: args.seed,
        arithmetic,
    };
    let basis = MonomialBasis::new(args.degree).map_err(|e| CliError::new(e.to_string()))?;
    let monomials = basis.len();

    eprintln!(
        "searching degree-{} identities of {title} on V({n}) ({} mode)",
        args.degree,
        arithmetic_name(arithmetic)
    );
    let outcome = fill_and_reduce_with(&table, args.degree, &cfg, |iteration, rank| {
        if iteration % 25 == 0 {
            eprintln!("  iteration {iteration}, rank {rank}");
        }
    });
    let dim = outcome.nullspace.len();
    eprintln!("search done: rank {}, nullspace dimension {dim}", outcome.rank);

    // Generator extraction is a degree-7 tool: in degree 10 the orbit of a
    // single identity already has 10! straightened images.
    let (generators, module_dimension) = if args.degree == 7 && dim > 0 {
        eprintln!("extracting permutation-module generators (batch {GENERATOR_BATCH})");
        let gens = module_generators_with(
            &basis,
            &outcome.nullspace,
            GENERATOR_BATCH,
            args.modulus,
            |processed, rank| eprintln!("  {processed} identities processed, rank {rank}"),
        );
        let reports: Vec<GeneratorReport> = gens
            .generators
            .iter()
            .map(|&i| GeneratorReport {
                identity: i + 1,
                recognized: recognize(&outcome.nullspace[i], &basis, args.modulus),
            })
            .collect();
        (Some(reports), Some(gens.dimension))
    } else {
        (None, None)
    };
    let canonical_generator = match (module_dimension, args.modulus) {
        (Some(md), None) => canonical_module_note(&basis, &outcome.nullspace, md),
        _ => None,
    };

    let report = SearchReport {
        command: "identities",
        mode: "search",
        n,
        structure: spec_string(spec),
        degree: args.degree,
        arithmetic: arithmetic_name(arithmetic),
        p,
        s: args.s,
        seed: args.seed,
        order_version: ORDER_VERSION,
        monomials,
        iterations: outcome.iterations,
        rank: outcome.rank,
        nullspace_dimension: dim,
        nullspace: outcome.nullspace.iter().map(IdentityVector::to_pair_line).collect(),
        generators,
        module_dimension,
        canonical_generator,
    };

    let mut text = String::new();
    let _ = writeln!(text, "identity search on V({n}), {title}, degree {}", args.degree);
    let _ = writeln!(
        text,
        "arithmetic: {}, p = {p}, s = {}, seed = {}",
        report.arithmetic, args.s, args.seed
    );
    let _ = writeln!(text, "monomial order: {ORDER_VERSION}, {monomials} monomials");
    let _ = writeln!(
        text,
        "rank {}, nullspace dimension {} ({} fill iterations)",
        report.rank, report.nullspace_dimension, report.iterations
    );
    if !report.nullspace.is_empty() {
        let _ = writeln!(text, "nullspace basis, one identity per line (monomial:coefficient pairs):");
        for line in &report.nullspace {
            let _ = writeln!(text, "{line}");
        }
    }
    if let (Some(gens), Some(md)) = (&report.generators, report.module_dimension) {
        let _ = writeln!(text, "permutation module generators (batch {GENERATOR_BATCH}):");
        for g in gens {
            match g.recognized {
                Some("derivation") => {
                    let _ = writeln!(
                        text,
                        "  identity {}: generator; a signed permutation image of the \
                         derivation identity",
                        g.identity
                    );
                }
                Some("alternating-sum") => {
                    let _ = writeln!(
                        text,
                        "  identity {}: generator; matches the alternating sum identity \
                         (up to sign and scale)",
                        g.identity
                    );
                }
                _ => {
                    let _ = writeln!(text, "  identity {}: generator", g.identity);
                }
            }
        }
        let _ = writeln!(text, "module dimension: {md} of {monomials}");
    }
    match report.canonical_generator {
        Some("derivation") => {
            let _ = writeln!(
                text,
                "the derivation identity lies in the module and its permutation orbit \
                 spans it: every identity found is a consequence of the derivation identity"
            );
        }
        Some("alternating-sum") => {
            let _ = writeln!(
                text,
                "the nullspace is spanned by the alternating sum identity"
            );
        }
        _ => {}
    }

    let mut parameters = ManifestParameters::new(n.to_string(), args.output.format);
    parameters.degree = Some(args.degree);
    parameters.structure = Some(spec_string(spec));
    if let StructureSpec::Copy(k) = spec {
        parameters.copy = Some(*k);
    }
    if let StructureSpec::Combined(_, raw) = spec {
        parameters.x = Some(raw.clone());
    }
    parameters.seed = Some(args.seed);
    parameters.p = Some(p);
    parameters.s = Some(args.s);
    parameters.modulus = args.modulus;
    Ok(Rendered {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
        manifest: manifest("identities", parameters),
    })
}

fn arithmetic_name(a: Arithmetic) -> &'static str {
    match a {
        Arithmetic::Rational => "rational",
        Arithmetic::Modular => "modular",
    }
}

/// Resolve a non-pencil structure spec to a table and a report title.
fn load_structure(n: u32, spec: &StructureSpec) -> Result<(StructureTable, String), CliError> {
    match spec {
        StructureSpec::Copy(k) => {
            let table = structure_table(n, *k).map_err(|e| CliError::new(e.to_string()))?;
            let title = match k {
                0 => "structure f (copy 0)".to_string(),
                1 => "structure g (copy 1)".to_string(),
                _ => format!("structure copy {k}"),
            };
            Ok((table, title))
        }
        StructureSpec::Combined(c, raw) => {
            let f = structure_table(n, 0).map_err(|e| CliError::new(e.to_string()))?;
            let g = structure_table(n, 1).map_err(|e| CliError::new(e.to_string()))?;
            Ok((
                StructureTable::combine(&f, &g, c),
                format!("structure f + ({raw}) g"),
            ))
        }
        StructureSpec::File(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::new(format!("cannot read {}: {e}", path.display())))?;
            let table = StructureTable::parse(&text)
                .map_err(|e| CliError::new(format!("{}: {e}", path.display())))?;
            if table.n() != n {
                return Err(CliError::new(format!(
                    "structure file {} is for n = {} but --n {} was given",
                    path.display(),
                    table.n(),
                    n
                )));
            }
            Ok((table, format!("structure from {}", path.display())))
        }
        StructureSpec::Pencil => unreachable!("pencil handled by the scan path"),
    }
}

/// Name the canonical degree-7 identity this vector is equivalent to: a
/// scalar multiple of the alternating sum (whose signed permutation orbit
/// is just {+S, -S}), or any signed permutation image of the derivation
/// identity.
fn recognize(
    v: &IdentityVector,
    basis: &MonomialBasis,
    modulus: Option<u64>,
) -> Option<&'static str> {
    let s = canonical_identity(basis, CanonicalIdentity::AlternatingSum);
    if matches_up_to_scalar(v, &s, modulus) {
        return Some("alternating-sum");
    }
    let d = canonical_identity(basis, CanonicalIdentity::Derivation);
    let mut perm = [1u8, 2, 3, 4, 5, 6, 7];
    let mut found = false;
    heap_permutations(7, &mut perm, &mut |sigma| {
        if !found && matches_up_to_scalar(v, &apply_permutation(basis, &d, sigma), modulus) {
            found = true;
        }
    });
    found.then_some("derivation")
}

/// Which canonical identity both belongs to the span of the nullspace and
/// has a permutation orbit of the full module dimension.
fn canonical_module_note(
    basis: &MonomialBasis,
    nullspace: &[IdentityVector],
    module_dim: usize,
) -> Option<&'static str> {
    let contains = |w: &IdentityVector| {
        let mut span = RatReducer::new(basis.len());
        for iv in nullspace {
            span.add_row(rational_row(iv));
        }
        !span.add_row(rational_row(w))
    };
    let s = canonical_identity(basis, CanonicalIdentity::AlternatingSum);
    if module_dim == 1 && contains(&s) {
        return Some("alternating-sum");
    }
    let d = canonical_identity(basis, CanonicalIdentity::Derivation);
    if contains(&d) && permutation_module(basis, std::slice::from_ref(&d)).rank() == module_dim {
        return Some("derivation");
    }
    None
}

fn rational_row(iv: &IdentityVector) -> Vec<Rational> {
    iv.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn matches_up_to_scalar(v: &IdentityVector, w: &IdentityVector, modulus: Option<u64>) -> bool {
    match modulus {
        None => {
            let vp = v.primitive();
            vp.coeffs() == w.coeffs() || vp.coeffs() == w.neg().coeffs()
        }
        Some(p) => scalar_multiple_mod(v, w, p),
    }
}

fn heap_permutations(k: usize, arr: &mut [u8; 7], visit: &mut impl FnMut(&[u8; 7])) {
    if k == 1 {
        visit(arr);
        return;
    }
    for i in 0..k {
        heap_permutations(k - 1, arr, visit);
        if k % 2 == 0 {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

/// v == lambda * w over Z/p for some nonzero lambda.
fn scalar_multiple_mod(v: &IdentityVector, w: &IdentityVector, p: u64) -> bool {
    let pm = Int::from(p);
    let residue = |x: &Int| x.mod_floor(&pm).to_u64().expect("residue fits");
    let mut lambda: Option<u64> = None;
    for (a, b) in v.coeffs().iter().zip(w.coeffs()) {
        let (ra, rb) = (residue(a), residue(b));
        if rb == 0 {
            if ra != 0 {
                return false;
            }
            continue;
        }
        let lam = mulmod(ra, pow_mod(rb, p - 2, p), p);
        match lambda {
            Some(l) if l != lam => return false,
            _ => lambda = Some(lam),
        }
    }
    matches!(lambda, Some(l) if l != 0)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    let mut d = 3u64;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
