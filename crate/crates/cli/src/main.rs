//! `ekrlab`: batch EKR checks over group spec files.
//!
//! Records go to stdout as JSON lines, one per group, in input order; a
//! short human summary goes to stderr. Exit codes: 0 success, 1 a
//! verification failed, 2 a budget ran out and some answer is unknown,
//! 3 the input could not be parsed.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ekrlab::dgraph::{derangement_graph_with_cap, spectrum, verify_product_identity, SpectrumOptions};
use ekrlab::ekr::{check_ekr, compute_bounds, EkrOptions, EkrReport, EkrVerdict, Status, StrictVerdict};
use ekrlab::group::{external_direct_product, internal_direct_product, wreath_product, PermutationGroup};
use ekrlab::report::{BoundRecord, EkrRecord, ProductRecord, Record, RefutationRecord, SpectrumRecord, SCHEMA_VERSION};
use ekrlab::spec::{parse_constructor, parse_spec_file, Builder, GroupSpec};
use ekrlab::witness::{
    block_pattern_witness, internal_repair_check, m20_provenance, refute_ekr, t_intersecting_certificate,
};
use ekrlab::Error;

#[derive(Parser)]
#[command(
    name = "ekrlab",
    version,
    about = "Exact EKR and strict-EKR checks for permutation groups"
)]
struct Cli {
    #[command(flatten)]
    budgets: Budgets,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Budgets {
    /// Seconds allowed per group for each search.
    #[arg(long, global = true, env = "EKRLAB_TIME_BUDGET", default_value_t = 60.0)]
    time_budget: f64,
    /// Largest group the enumerator will build.
    #[arg(long, global = true, env = "EKRLAB_ELEMENT_CAP", default_value_t = 200_000)]
    element_cap: usize,
    /// Largest number of maximum sets the strict check inspects.
    #[arg(long, global = true, env = "EKRLAB_ENUM_CAP", default_value_t = 1_000_000)]
    enum_cap: usize,
    /// Worker threads for batch items (0: one per core).
    #[arg(long, global = true, env = "EKRLAB_JOBS", default_value_t = 1)]
    jobs: usize,
}

impl Budgets {
    fn options(&self) -> EkrOptions {
        EkrOptions {
            time_budget: Duration::from_secs_f64(self.time_budget.max(0.0)),
            enum_cap: self.enum_cap,
            ..EkrOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full EKR report for every group in a spec file.
    CheckEkr { specfile: PathBuf },
    /// Independence number of each derangement graph.
    Alpha { specfile: PathBuf },
    /// Clique number of each derangement graph.
    Omega { specfile: PathBuf },
    /// Adjacency spectrum of each derangement graph.
    Spectrum {
        specfile: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
    /// Build and certify a refuting intersecting set.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// EKR report for a product of groups next to its factors.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        /// Spec files (every record is a factor) or constructor expressions.
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Edge list of a derangement graph: one "u v" line per edge, 0-based.
    DumpGraph {
        spec: String,
        /// Record to dump when the spec file holds several.
        #[arg(long)]
        label: Option<String>,
    },
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Block-pattern intersecting set in M20.
    M20 {
        genfile: PathBuf,
        /// Four block moves "a>b" (1-based), comma separated.
        #[arg(long, default_value = "1>1,2>2,3>3,4>5")]
        pattern: String,
    },
    /// t-intersecting family of Sym(2t) in the action on ordered t-tuples.
    TIntersecting {
        #[arg(long)]
        t: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductKind {
    External,
    Internal,
    Wreath,
}

/// How a run ended; the discriminant is the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Ok = 0,
    Unknown = 2,
    Failed = 1,
    Parse = 3,
}

impl Outcome {
    fn rank(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Unknown => 1,
            Outcome::Failed => 2,
            Outcome::Parse => 3,
        }
    }

    fn worst(self, other: Outcome) -> Outcome {
        if other.rank() > self.rank() {
            other
        } else {
            self
        }
    }

    fn of_error(e: &Error) -> Outcome {
        match e {
            Error::ElementCapExceeded(_)
            | Error::VertexCapExceeded { .. }
            | Error::EnumerationCapExceeded(_)
            | Error::BudgetExhausted => Outcome::Unknown,
            Error::Inconsistent(_) | Error::NotIntersecting(..) => Outcome::Failed,
            _ => Outcome::Parse,
        }
    }
}

struct Item {
    lines: Vec<String>,
    summary: String,
    outcome: Outcome,
}

impl Item {
    fn record(record: Record, summary: String, outcome: Outcome) -> Self {
        Item {
            lines: vec![record.to_line()],
            summary,
            outcome,
        }
    }

    fn error(label: &str, e: &Error) -> Self {
        Item {
            lines: Vec::new(),
            summary: format!("{label}: error: {e}"),
            outcome: Outcome::of_error(e),
        }
    }
}

fn read_specs(path: &Path) -> Result<Vec<GroupSpec>, (String, Outcome)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| (format!("{e:#}"), Outcome::Parse))?;
    parse_spec_file(&text).map_err(|e| (format!("{}: {e}", path.display()), Outcome::Parse))
}

/// Builds every record in order so `ref`s resolve; a failure stops the
/// batch, since later records may depend on it.
fn build_all(specs: &[GroupSpec], cap: usize) -> Result<Vec<(String, PermutationGroup)>, (String, Outcome)> {
    let mut builder = Builder::new(cap);
    specs
        .iter()
        .map(|s| {
            builder
                .build_spec(s)
                .map(|g| (s.label.clone(), g))
                .map_err(|e| (format!("{} (line {}): {e}", s.label, s.line), Outcome::of_error(&e)))
        })
        .collect()
}

fn verdict_outcome(r: &EkrReport) -> Outcome {
    if r.ekr == EkrVerdict::Unknown || r.strict_ekr == StrictVerdict::Unknown {
        Outcome::Unknown
    } else {
        Outcome::Ok
    }
}

fn ekr_item(label: &str, g: &PermutationGroup, options: &EkrOptions) -> Item {
    match check_ekr(g, options) {
        Ok(r) => {
            let summary = format!(
                "{label}: |G|={} alpha={}{} max-stab={} ekr={} strict={}",
                g.order(),
                r.alpha.value,
                if r.alpha.is_exact() { "" } else { "+" },
                r.max_stabilizer,
                verdict_text(r.ekr),
                strict_text(r.strict_ekr),
            );
            let outcome = verdict_outcome(&r);
            Item::record(Record::Ekr(EkrRecord::new(label, g, &r)), summary, outcome)
        }
        Err(e) => Item::error(label, &e),
    }
}

fn verdict_text(v: EkrVerdict) -> &'static str {
    match v {
        EkrVerdict::Yes => "yes",
        EkrVerdict::No => "no",
        EkrVerdict::RefutedByWitness => "refuted-by-witness",
        EkrVerdict::Unknown => "unknown",
    }
}

fn strict_text(v: StrictVerdict) -> &'static str {
    match v {
        StrictVerdict::Yes => "yes",
        StrictVerdict::No => "no",
        StrictVerdict::NotApplicable => "not-applicable",
        StrictVerdict::Unknown => "unknown",
    }
}

fn bound_item(label: &str, g: &PermutationGroup, options: &EkrOptions, omega: bool) -> Item {
    match compute_bounds(g, options) {
        Ok((a, w)) => {
            let (b, name) = if omega { (w, "omega") } else { (a, "alpha") };
            let outcome = if b.status == Status::Exact {
                Outcome::Ok
            } else {
                Outcome::Unknown
            };
            let summary = format!(
                "{label}: {name}={}{}",
                b.value,
                if b.is_exact() { "" } else { " (lower bound)" }
            );
            let rec = BoundRecord::new(label, g, &b);
            Item::record(
                if omega { Record::Omega(rec) } else { Record::Alpha(rec) },
                summary,
                outcome,
            )
        }
        Err(e) => Item::error(label, &e),
    }
}

fn spectrum_item(label: &str, g: &PermutationGroup, tolerance: f64) -> Item {
    let opts = SpectrumOptions {
        merge_tolerance: tolerance,
        ..SpectrumOptions::default()
    };
    let result = derangement_graph_with_cap(g, opts.vertex_cap).and_then(|x| {
        let s = spectrum(&x, &opts)?;
        Ok((s, x.is_disjoint_union_of_cliques()))
    });
    match result {
        Ok((s, union)) => {
            let rec = SpectrumRecord::new(label, g, &s, union);
            let text: Vec<String> = match &rec.integral {
                Some(v) => v.iter().map(|(e, m)| format!("{e}^{m}")).collect(),
                None => s
                    .eigenvalues
                    .iter()
                    .map(|e| format!("{:.6}^{}", e.value, e.multiplicity))
                    .collect(),
            };
            Item::record(
                Record::Spectrum(rec),
                format!("{label}: {}", text.join(" ")),
                Outcome::Ok,
            )
        }
        Err(e) => Item::error(label, &e),
    }
}

fn parse_pattern(text: &str) -> Option<[(usize, usize); 4]> {
    let moves: Vec<(usize, usize)> = text
        .split(',')
        .map(|m| {
            let (a, b) = m.trim().split_once('>')?;
            let (a, b): (usize, usize) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            (a >= 1 && b >= 1).then(|| (a - 1, b - 1))
        })
        .collect::<Option<_>>()?;
    moves.try_into().ok()
}

fn m20_item(genfile: &Path, pattern: &str, cap: usize) -> Item {
    let fail = |summary: String, outcome| Item {
        lines: Vec::new(),
        summary,
        outcome,
    };
    let Some(pattern) = parse_pattern(pattern) else {
        return fail(
            format!("bad --pattern {pattern:?}; expected four moves like 1>1,2>2,3>3,4>5"),
            Outcome::Parse,
        );
    };
    let specs = match read_specs(genfile) {
        Ok(s) => s,
        Err((m, o)) => return fail(m, o),
    };
    let Some(spec) = specs.first() else {
        return fail(format!("{}: no group record", genfile.display()), Outcome::Parse);
    };
    let group = match Builder::new(cap).build(&spec.source) {
        Ok(g) => g,
        Err(e) => return Item::error(&spec.label, &e),
    };
    let provenance = m20_provenance(&group);
    let Some(blocks) = provenance.block_system.clone().filter(|_| provenance.passed()) else {
        return fail(
            format!(
                "{}: provenance checks failed: {}",
                spec.label,
                provenance.failures().join("; ")
            ),
            Outcome::Failed,
        );
    };
    let set = match block_pattern_witness(&group, &blocks, &pattern) {
        Ok(s) => s,
        Err(e) => return Item::error(&spec.label, &e),
    };
    let mut cert = refute_ekr(&group, &set);
    let moves: Vec<String> = pattern.iter().map(|(a, b)| format!("B{}->B{}", a + 1, b + 1)).collect();
    let blocks_text: Vec<String> = blocks
        .blocks()
        .iter()
        .map(|b| {
            format!(
                "{{{}}}",
                b.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    cert.notes
        .push("provenance: order 960, transitive on 20 points, max stabilizer 48, 5 blocks of size 4".into());
    cert.notes.push(format!("blocks {}", blocks_text.join(" ")));
    cert.notes
        .push(format!("elements satisfying at least 3 of {}", moves.join(", ")));
    cert.notes.push(format!(
        "{} is a lower bound for alpha; maximality is not claimed",
        cert.set_size
    ));
    if cert.verified {
        let ok: Vec<usize> = (1..=30)
            .filter(|&n| internal_repair_check(cert.set_size as u128, 960, 48, n, false).ekr)
            .collect();
        if let (Some(lo), Some(hi)) = (ok.first(), ok.last()) {
            cert.notes.push(format!(
                "conditional on alpha = {}: the internal product with Sym(n) has EKR exactly for n in {lo}..={hi} (n <= 30 checked)",
                cert.set_size
            ));
        }
    }
    let summary = format!(
        "{}: intersecting set of size {} vs max stabilizer {}: {}",
        spec.label,
        cert.set_size,
        cert.max_stabilizer_size,
        if cert.verified { "verified" } else { "NOT verified" }
    );
    let outcome = if cert.verified { Outcome::Ok } else { Outcome::Failed };
    Item::record(
        Record::Refutation(RefutationRecord::new(&spec.label, &cert)),
        summary,
        outcome,
    )
}

fn t_item(t: usize) -> Item {
    let label = format!("sym{}-on-{t}-tuples", 2 * t);
    match t_intersecting_certificate(t) {
        Ok(cert) => {
            let summary = format!(
                "{label}: t-intersecting set of size {} vs max stabilizer {}: {}",
                cert.set_size,
                cert.max_stabilizer_size,
                if cert.verified { "verified" } else { "not a refutation" }
            );
            let outcome = if cert.verified { Outcome::Ok } else { Outcome::Failed };
            Item::record(
                Record::Refutation(RefutationRecord::new(&label, &cert)),
                summary,
                outcome,
            )
        }
        Err(e) => Item::error(&label, &e),
    }
}

/// A spec argument: a file whose records are all used, or one inline
/// constructor expression.
fn factor_specs(args: &[String]) -> Result<Vec<GroupSpec>, (String, Outcome)> {
    let mut out = Vec::new();
    for (i, arg) in args.iter().enumerate() {
        let path = Path::new(arg);
        if path.is_file() {
            out.extend(read_specs(path)?);
        } else {
            let c = parse_constructor(arg).map_err(|m| (format!("argument {}: {m}", i + 1), Outcome::Parse))?;
            out.push(GroupSpec {
                label: arg.clone(),
                source: c,
                line: 0,
            });
        }
    }
    Ok(out)
}

fn product_item(kind: ProductKind, args: &[String], budgets: &Budgets) -> Item {
    let fail = |(summary, outcome): (String, Outcome)| Item {
        lines: Vec::new(),
        summary,
        outcome,
    };
    let specs = match factor_specs(args) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    if kind == ProductKind::Wreath && specs.len() != 2 {
        return fail(("wreath needs exactly two factors".into(), Outcome::Parse));
    }
    let mut builder = Builder::new(budgets.element_cap);
    let mut factors = Vec::new();
    for s in &specs {
        match builder.build_spec(s) {
            Ok(g) => factors.push((s.label.clone(), g)),
            Err(e) => return Item::error(&s.label, &e),
        }
    }
    let refs: Vec<&PermutationGroup> = factors.iter().map(|(_, g)| g).collect();
    let cap_ok = match kind {
        ProductKind::Wreath => (0..refs[1].degree())
            .try_fold(refs[1].order(), |a, _| a.checked_mul(refs[0].order()))
            .is_some_and(|o| o <= budgets.element_cap),
        _ => refs
            .iter()
            .try_fold(1usize, |a, g| a.checked_mul(g.order()))
            .is_some_and(|o| o <= budgets.element_cap),
    };
    if !cap_ok {
        return Item::error("product", &Error::ElementCapExceeded(budgets.element_cap));
    }
    let (name, product) = match kind {
        ProductKind::External => ("external", external_direct_product(&refs)),
        ProductKind::Internal => ("internal", internal_direct_product(&refs)),
        ProductKind::Wreath => ("wreath", wreath_product(refs[0], refs[1])),
    };
    let label = format!(
        "{name}({})",
        factors.iter().map(|(l, _)| l.as_str()).collect::<Vec<_>>().join(", ")
    );
    let product = match product {
        Ok(p) => p,
        Err(e) => return Item::error(&label, &e),
    };
    let options = budgets.options();
    let mut factor_reports = Vec::new();
    let mut factor_records = Vec::new();
    for (l, g) in &factors {
        match check_ekr(g, &options) {
            Ok(r) => {
                factor_records.push(EkrRecord::new(l, g, &r));
                factor_reports.push(r);
            }
            Err(e) => return Item::error(l, &e),
        }
    }
    let report = match check_ekr(&product, &options) {
        Ok(r) => r,
        Err(e) => return Item::error(&label, &e),
    };
    let graph_identity = match kind {
        ProductKind::Wreath => None,
        _ => match verify_product_identity(&refs) {
            Ok(c) => Some(if kind == ProductKind::External {
                c.external
            } else {
                c.internal
            }),
            Err(e) => return Item::error(&label, &e),
        },
    };
    let exact = factor_reports.iter().all(|r| r.alpha.is_exact());
    let predicted_alpha = exact.then(|| match kind {
        ProductKind::External => factor_reports.iter().map(|r| r.alpha.value).product(),
        ProductKind::Internal => (0..factors.len())
            .map(|i| {
                factor_reports[i].alpha.value
                    * (0..factors.len())
                        .filter(|&j| j != i)
                        .map(|j| factors[j].1.order())
                        .product::<usize>()
            })
            .max()
            .unwrap_or(1),
        ProductKind::Wreath => {
            let (g, h) = (&factors[0].1, &factors[1].1);
            g.order().pow(h.degree() as u32 - 1) * g.max_stabilizer_size() * h.max_stabilizer_size()
        }
    });
    // The wreath prediction is the stabilizer size, which is α only when the
    // factors have EKR.
    let applies = kind != ProductKind::Wreath || factor_reports.iter().all(|r| r.ekr == EkrVerdict::Yes);
    let predicted_alpha = predicted_alpha.filter(|_| applies);
    let alpha_ok = match predicted_alpha {
        Some(p) if report.alpha.is_exact() => p == report.alpha.value,
        _ => true,
    };
    let mut outcome = verdict_outcome(&report);
    for r in &factor_reports {
        outcome = outcome.worst(verdict_outcome(r));
    }
    if graph_identity == Some(false) || !alpha_ok {
        outcome = Outcome::Failed;
    }
    let summary = format!(
        "{label}: |G|={} alpha={} predicted={} graph-identity={} ekr={} strict={}",
        product.order(),
        report.alpha.value,
        predicted_alpha.map_or("-".into(), |p| p.to_string()),
        graph_identity.map_or("-", |b| if b { "ok" } else { "FAILED" }),
        verdict_text(report.ekr),
        strict_text(report.strict_ekr),
    );
    let record = ProductRecord {
        schema_version: SCHEMA_VERSION,
        label: label.clone(),
        product_kind: name.into(),
        factors: factors.iter().map(|(l, _)| l.clone()).collect(),
        graph_identity,
        predicted_alpha,
        factor_reports: factor_records,
        report: EkrRecord::new(&label, &product, &report),
    };
    Item::record(Record::Product(record), summary, outcome)
}

fn dump_item(spec: &str, label: Option<&str>, cap: usize) -> Item {
    let fail = |(summary, outcome): (String, Outcome)| Item {
        lines: Vec::new(),
        summary,
        outcome,
    };
    let specs = match factor_specs(std::slice::from_ref(&spec.to_string())) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let groups = match build_all(&specs, cap) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let chosen = match label {
        Some(l) => groups.iter().find(|(name, _)| name == l),
        None => groups.first(),
    };
    let Some((name, g)) = chosen else {
        return fail((format!("no record {}", label.unwrap_or("in input")), Outcome::Parse));
    };
    match derangement_graph_with_cap(g, ekrlab::dgraph::DEFAULT_VERTEX_CAP) {
        Ok(x) => {
            let text = x.to_edge_list();
            Item {
                lines: text.lines().map(String::from).collect(),
                summary: format!("{name}: {} vertices, {} edges", x.vertex_count(), x.edge_count()),
                outcome: Outcome::Ok,
            }
        }
        Err(e) => Item::error(name, &e),
    }
}

fn batch<F>(path: &Path, budgets: &Budgets, run: F) -> Vec<Item>
where
    F: Fn(&str, &PermutationGroup) -> Item + Sync,
{
    let specs = match read_specs(path) {
        Ok(s) => s,
        Err((summary, outcome)) => {
            return vec![Item {
                lines: Vec::new(),
                summary,
                outcome,
            }]
        }
    };
    let groups = match build_all(&specs, budgets.element_cap) {
        Ok(g) => g,
        Err((summary, outcome)) => {
            return vec![Item {
                lines: Vec::new(),
                summary,
                outcome,
            }]
        }
    };
    groups.par_iter().map(|(label, g)| run(label, g)).collect()
}

fn run(cli: Cli) -> Outcome {
    let budgets = cli.budgets.clone();
    let options = budgets.options();
    let items = match &cli.command {
        Command::CheckEkr { specfile } => batch(specfile, &budgets, |l, g| ekr_item(l, g, &options)),
        Command::Alpha { specfile } => batch(specfile, &budgets, |l, g| bound_item(l, g, &options, false)),
        Command::Omega { specfile } => batch(specfile, &budgets, |l, g| bound_item(l, g, &options, true)),
        Command::Spectrum { specfile, tolerance } => batch(specfile, &budgets, |l, g| spectrum_item(l, g, *tolerance)),
        Command::Witness(WitnessCommand::M20 { genfile, pattern }) => {
            vec![m20_item(genfile, pattern, budgets.element_cap)]
        }
        Command::Witness(WitnessCommand::TIntersecting { t }) => vec![t_item(*t)],
        Command::Product { kind, specs } => vec![product_item(*kind, specs, &budgets)],
        Command::DumpGraph { spec, label } => vec![dump_item(spec, label.as_deref(), budgets.element_cap)],
    };
    let mut outcome = Outcome::Ok;
    let mut stdout = String::new();
    for item in &items {
        for line in &item.lines {
            stdout.push_str(line);
            stdout.push('\n');
        }
        eprintln!("{}", item.summary);
        outcome = outcome.worst(item.outcome);
    }
    print!("{stdout}");
    outcome
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.budgets.jobs != 1 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.budgets.jobs)
            .build_global()
        {
            eprintln!("could not start {} workers: {e}", cli.budgets.jobs);
        }
    } else {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    ExitCode::from(run(cli) as u8)
}
