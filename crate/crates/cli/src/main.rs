//! `paralogic`: batch entailment queries, catalog classification,
//! translations and catalog diagrams.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use paralogic::analysis::{
    classify_ideal, theorem_ideal, theorem_saturated, verify_saturated, verify_saturated_product,
    ClassificationReport, SearchBounds,
};
use paralogic::catalog::{enumerate_godel_catalog, enumerate_luk_catalog, parse_logic, CatalogIndex, LogicDescriptor};
use paralogic::entailment::{decide_standard, StandardClass};
use paralogic::formula::{parse_list, parse_sequent, Translation};
use paralogic::{Error, Formula, Limits, Verdict};

#[derive(Parser)]
#[command(name = "paralogic", version, about = "Decide consequence in finite matrix logics and classify their paraconsistent extensions")]
struct Cli {
    /// Maximum number of node evaluations per query.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Print elapsed time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decide `GAMMA |- PHI` queries.
    Entail(EntailArgs),
    /// Classify the paraconsistent logics of a catalog.
    Classify(ClassifyArgs),
    /// Apply a translation to a formula or a comma separated list.
    Translate {
        /// star1, star2, star3, ft-star, ft-hash or delta-set.
        name: String,
        formulas: String,
    },
    /// Print the certified extension graph of a catalog as DOT.
    ExportDot(DotArgs),
}

#[derive(Args)]
struct EntailArgs {
    /// An inline query.
    query: Option<String>,
    /// A file with one query per line, `GAMMA |- PHI [@ LOGIC]`, and `#`
    /// comments.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Logic to decide in; may be repeated.
    #[arg(long)]
    logic: Vec<String>,
    /// Filter class on the standard algebra; may be repeated.
    #[arg(long)]
    class: Vec<String>,
}

#[derive(Args)]
struct CatalogArgs {
    /// Goedel catalog over the subalgebras of GVn~.
    #[arg(long, value_name = "N", conflicts_with = "luk", required_unless_present = "luk")]
    godel: Option<usize>,
    /// Lukasiewicz catalog over the divisor chains of LV(n+1).
    #[arg(long, value_name = "N", requires = "i")]
    luk: Option<usize>,
    /// Filter index `i` of `F_{i/n}` for the Lukasiewicz catalog.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, default_value_t = 3)]
    max_components: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    catalog: CatalogArgs,
    /// Report on this logic of the catalog only.
    #[arg(long)]
    logic: Option<String>,
    /// Report on the product over these primes, e.g. `2,3`.
    #[arg(long, value_delimiter = ',', requires = "luk", conflicts_with = "logic")]
    primes: Vec<usize>,
    /// Depth bound of the separator search.
    #[arg(long, default_value_t = 6)]
    max_depth: usize,
    /// Variable bound of the separator search.
    #[arg(long, default_value_t = 4)]
    max_vars: usize,
    /// Seconds per separator search.
    #[arg(long, default_value_t = 60)]
    time_limit: u64,
}

#[derive(Args)]
struct DotArgs {
    #[command(flatten)]
    catalog: CatalogArgs,
    /// Keep only edges between paraconsistent logics.
    #[arg(long)]
    paraconsistent: bool,
    /// Draw every certified edge, not only the covering ones.
    #[arg(long)]
    all_edges: bool,
    /// Classify the catalog and mark the saturated logics.
    #[arg(long)]
    saturated: bool,
}

#[derive(Serialize)]
struct Record {
    query: String,
    logic: String,
    holds: Option<bool>,
    counterexample: Option<String>,
    steps: u64,
    complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

enum Target {
    Logic(LogicDescriptor),
    Class(StandardClass),
}

impl Target {
    fn label(&self) -> String {
        match self {
            Target::Logic(d) => d.label(),
            Target::Class(c) => c.name().to_string(),
        }
    }

    fn decide(&self, gamma: &[Formula], phi: &Formula, limits: &Limits) -> paralogic::Result<Verdict> {
        match self {
            Target::Logic(d) => d.entails(gamma, phi, limits),
            Target::Class(c) => Ok(decide_standard(*c, gamma, phi, limits)?.verdict),
        }
    }
}

struct Query {
    text: String,
    gamma: Vec<Formula>,
    phi: Formula,
    /// Indices into the target list.
    targets: Vec<usize>,
}

fn fail(msg: impl std::fmt::Display) -> Error {
    Error::InvalidArgument(msg.to_string())
}

/// Parses every query and logic up front, so that nothing runs on bad input.
fn read_queries(args: &EntailArgs) -> paralogic::Result<(Vec<Target>, Vec<Query>)> {
    let mut targets = Vec::new();
    for l in &args.logic {
        targets.push(Target::Logic(parse_logic(l)?));
    }
    for c in &args.class {
        targets.push(Target::Class(c.parse()?));
    }
    let defaults: Vec<usize> = (0..targets.len()).collect();
    let mut lines: Vec<(String, String)> = Vec::new();
    if let Some(q) = &args.query {
        lines.push(("argument".into(), q.clone()));
    }
    if let Some(path) = &args.file {
        let text = fs::read_to_string(path).map_err(|e| fail(format!("{}: {e}", path.display())))?;
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                lines.push((format!("{}:{}", path.display(), k + 1), line.to_string()));
            }
        }
    }
    if lines.is_empty() {
        return Err(fail("no query given"));
    }
    let mut queries = Vec::new();
    for (place, line) in lines {
        let (text, logic) = match line.rsplit_once('@') {
            Some((q, l)) => (q.trim().to_string(), Some(l.trim())),
            None => (line.trim().to_string(), None),
        };
        let (gamma, phi) = parse_sequent(&text).map_err(|e| fail(format!("{place}: {e}")))?;
        let targets_of = match logic {
            Some(l) => {
                targets.push(Target::Logic(parse_logic(l)?));
                vec![targets.len() - 1]
            }
            None if defaults.is_empty() => return Err(fail(format!("{place}: no logic given"))),
            None => defaults.clone(),
        };
        queries.push(Query {
            text,
            gamma,
            phi,
            targets: targets_of,
        });
    }
    Ok((targets, queries))
}

fn cmd_entail(args: &EntailArgs, limits: &Limits, format: Format) -> paralogic::Result<ExitCode> {
    if format == Format::Dot {
        return Err(fail("entail has no dot output"));
    }
    let (targets, queries) = read_queries(args)?;
    let (mut failed, mut errored) = (false, false);
    for q in &queries {
        for &t in &q.targets {
            let target = &targets[t];
            let record = match target.decide(&q.gamma, &q.phi, limits) {
                Ok(v) => {
                    failed |= !v.holds;
                    Record {
                        query: q.text.clone(),
                        logic: target.label(),
                        holds: Some(v.holds),
                        counterexample: v.counterexample.as_ref().map(|c| c.describe()),
                        steps: v.steps,
                        complete: true,
                        error: None,
                    }
                }
                Err(e) => {
                    errored = true;
                    Record {
                        query: q.text.clone(),
                        logic: target.label(),
                        holds: None,
                        counterexample: None,
                        steps: 0,
                        complete: false,
                        error: Some(e.to_string()),
                    }
                }
            };
            match format {
                Format::Records => println!("{}", serde_json::to_string(&record).expect("plain record")),
                _ => print_record(&record),
            }
        }
    }
    Ok(if errored {
        ExitCode::from(2)
    } else if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn print_record(r: &Record) {
    match (r.holds, &r.counterexample, &r.error) {
        (Some(true), _, _) => println!("holds  {}  {}", r.logic, r.query),
        (Some(false), cx, _) => {
            println!("fails  {}  {}", r.logic, r.query);
            if let Some(cx) = cx {
                println!("       counterexample: {cx}");
            }
        }
        (None, _, e) => println!("error  {}  {}: {}", r.logic, r.query, e.as_deref().unwrap_or("")),
    }
}

fn catalog(args: &CatalogArgs) -> paralogic::Result<CatalogIndex> {
    match (args.godel, args.luk, args.i) {
        (Some(n), None, _) => enumerate_godel_catalog(n, args.max_components),
        (None, Some(n), Some(i)) => enumerate_luk_catalog(n, i),
        _ => Err(fail("give either --godel N or --luk N --i I")),
    }
}

fn names(reports: &[&ClassificationReport]) -> String {
    if reports.is_empty() {
        return "none".into();
    }
    let v: Vec<String> = reports.iter().map(|r| r.label()).collect();
    v.join(", ")
}

fn flag(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn print_report(r: &ClassificationReport) {
    println!("{}", r.logic);
    println!("  paraconsistent: {}", flag(Some(r.paraconsistent.paraconsistent)));
    println!("  saturated: {}", flag(r.saturated));
    println!(
        "  ideal: {}{}",
        flag(r.ideal),
        r.ideal_basis.as_deref().map(|b| format!(" ({b})")).unwrap_or_default()
    );
    for a in &r.audit {
        let sep = a.separator.as_ref().map(|s| format!(": {}", s.query)).unwrap_or_default();
        println!("    extension {} {:?}{sep}", a.logic, a.status);
    }
    if let Some(w) = &r.non_ideal_witness {
        println!("  strictly between it and CPL: {} ({} / {})", w.between, w.lower.query, w.upper.query);
    }
    if let Some(l) = &r.lfi {
        println!("  LFI with o p = {}: {}", l.circ, flag(Some(l.confirmed)));
    }
    println!("  certificates re-verify: {}", flag(Some(r.certify())));
}

fn cmd_classify(args: &ClassifyArgs, limits: &Limits, format: Format) -> paralogic::Result<ExitCode> {
    if format == Format::Dot {
        return Err(fail("classify has no dot output; use export-dot"));
    }
    let bounds = SearchBounds {
        max_depth: args.max_depth,
        max_vars: args.max_vars,
        time_limit: std::time::Duration::from_secs(args.time_limit),
    };
    let single = match &args.logic {
        Some(l) => Some(parse_logic(l)?),
        None => None,
    };
    let cat = catalog(&args.catalog)?;
    let reports = if !args.primes.is_empty() {
        let (n, i) = (args.catalog.luk.unwrap_or(0), args.catalog.i.unwrap_or(0));
        vec![verify_saturated_product(n, i, &args.primes, &bounds, limits)?]
    } else if let Some(l) = &single {
        vec![verify_saturated(&cat, l, &bounds, limits)?]
    } else {
        classify_ideal(&cat, &bounds, limits)?
    };
    let all_certified = reports.iter().all(ClassificationReport::certify);
    if format == Format::Records {
        for r in &reports {
            println!("{}", serde_json::to_string(r).expect("plain report"));
        }
    } else {
        let para: Vec<&ClassificationReport> = reports.iter().filter(|r| r.paraconsistent.paraconsistent).collect();
        let side = match cat.side {
            paralogic::catalog::Side::Luk => format!("Lukasiewicz, n = {}, i = {}", cat.n, cat.i.unwrap_or(0)),
            _ => format!("Goedel, n = {}, at most {} components", cat.n, cat.max_components),
        };
        println!("catalog: {side}, {} logics, {} paraconsistent", cat.len(), para.len());
        for r in &para {
            print_report(r);
        }
        if single.is_none() && args.primes.is_empty() {
            let sat: Vec<&ClassificationReport> = para.iter().copied().filter(|r| r.saturated == Some(true)).collect();
            let ideal: Vec<&ClassificationReport> = para.iter().copied().filter(|r| r.ideal == Some(true)).collect();
            let open: Vec<&ClassificationReport> = para.iter().copied().filter(|r| r.saturated.is_none()).collect();
            println!("saturated: {}", names(&sat));
            println!("ideal: {}", names(&ideal));
            if !open.is_empty() {
                println!("undecided within the search bounds: {}", names(&open));
            }
            if let Some(t) = theorem_saturated(cat.side, cat.n) {
                println!("predicted saturated ({}): {}", t.clause, list(&t.names));
            }
            if let Some(t) = theorem_ideal(cat.side, cat.n, cat.i) {
                println!("predicted ideal ({}): {}", t.clause, list(&t.names));
            }
            println!(
                "agrees with the predictions: {}",
                flag(Some(reports.iter().all(ClassificationReport::agrees_with_theorems)))
            );
        }
    }
    Ok(if all_certified { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn list(names: &[String]) -> String {
    if names.is_empty() {
        "none".into()
    } else {
        names.join(", ")
    }
}

fn cmd_translate(name: &str, formulas: &str) -> paralogic::Result<ExitCode> {
    let t: Translation = name.parse()?;
    let fs = parse_list(formulas)?;
    let out: Vec<String> = fs.iter().map(|f| t.apply(f).to_string()).collect();
    println!("{}", out.join(", "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_export_dot(args: &DotArgs, limits: &Limits, format: Format) -> paralogic::Result<ExitCode> {
    if format != Format::Dot {
        return Err(fail("export-dot only writes dot"));
    }
    let cat = catalog(&args.catalog)?;
    let mut edges = cat.edges();
    let mut highlight = Vec::new();
    if args.paraconsistent || args.saturated {
        let reports = classify_ideal(&cat, &SearchBounds::default(), limits)?;
        if args.paraconsistent {
            let para = |k: usize| reports[k].paraconsistent.paraconsistent;
            edges.retain(|e| para(e.from) && para(e.to));
        }
        if args.saturated {
            highlight = (0..cat.len()).filter(|&k| reports[k].saturated == Some(true)).collect();
        }
    }
    if !args.all_edges {
        edges = cat.covering_edges(&edges);
    }
    print!("{}", cat.to_dot(&edges, &highlight));
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> paralogic::Result<ExitCode> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build_global()
            .map_err(|e| Error::Internal(e.to_string()))?;
    }
    let limits = match cli.budget {
        Some(b) => Limits::with_budget(b),
        None => Limits::default(),
    };
    match &cli.command {
        Command::Entail(a) => cmd_entail(a, &limits, cli.format.unwrap_or(Format::Human)),
        Command::Classify(a) => cmd_classify(a, &limits, cli.format.unwrap_or(Format::Human)),
        Command::Translate { name, formulas } => cmd_translate(name, formulas),
        Command::ExportDot(a) => cmd_export_dot(a, &limits, cli.format.unwrap_or(Format::Dot)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };
    if cli.timing {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    code
}
