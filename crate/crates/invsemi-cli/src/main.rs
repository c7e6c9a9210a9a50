//! Command-line front end: validate inverse-semigroup tables, compute the
//! congruence network and lattice, run the verification suites, and work
//! with the bundled example catalog.
//!
//! Exit codes: 0 success, 2 parse error (or bad usage), 3 validation or
//! construction failure, 4 network not stabilized within the level cap,
//! 5 verification disagreement, 6 lattice larger than the enumeration cap.

use clap::{Args, Parser, Subcommand, ValueEnum};
use invsemi::congruence;
use invsemi::formats::{self, ParseError};
use invsemi::lattice::{enumerate_congruence_lattice, CongruenceLattice, LatticeError};
use invsemi::network::{MinNetwork, DEFAULT_MAX_LEVEL};
use invsemi::report;
use invsemi::semigroup::{from_partial_bijection_generators, InverseSemigroup, DEFAULT_CLOSURE_CAP};
use invsemi::verify::{self, Family, SuiteReport, Verdict};
use invsemi::{catalog, lattice};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "invsemi",
    version,
    about = "Congruence structure of finite inverse semigroups",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate an inverse semigroup, then print a one-line summary.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the descending chains, their stabilization level, and the
    /// landmark congruences.
    Network {
        #[command(flatten)]
        input: InputArgs,
        /// Give up if the chains have not stabilized by this level.
        #[arg(long, default_value_t = DEFAULT_MAX_LEVEL)]
        max_level: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate the full congruence lattice with its Hasse diagram.
    Lattice {
        #[command(flatten)]
        input: InputArgs,
        /// Refuse orders above this cap (lattice enumeration is exponential
        /// in the worst case).
        #[arg(long, default_value_t = lattice::DEFAULT_LATTICE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run verification suites; exits 5 on any disagreement.
    Verify {
        #[command(flatten)]
        input: OptionalInputArgs,
        /// Comma-separated suites: kercliff, boeu, kercliffcon, boeuc,
        /// minimality, coincidences, class, ker, quotient — or `all`.
        #[arg(long, default_value = "all")]
        suites: String,
        /// Levels to run, e.g. `1..3` (inclusive), `2`, or `1,3`.
        #[arg(long, default_value = "1..3")]
        n: String,
        /// First parameter of the two-parameter quotient suite (m >= 2).
        #[arg(long, default_value = "2")]
        m: String,
        /// Implication family for the minimality suite: A, B, Aprime,
        /// Bprime, or `all`.
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value_t = DEFAULT_MAX_LEVEL)]
        max_level: usize,
        #[arg(long, default_value_t = lattice::DEFAULT_LATTICE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List bundled example semigroups, or emit one as an ISG1 table.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List every bundled entry with its basic facts.
    List {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print one bundled entry as a valid ISG1 table.
    Emit {
        /// Entry name, as shown by `catalog list`.
        name: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Isg1,
    Pbj1,
}

#[derive(Args)]
struct InputArgs {
    /// Read the semigroup from this file.
    #[arg(long, conflicts_with = "name")]
    input: Option<PathBuf>,
    /// Input file format.
    #[arg(long, value_enum, default_value = "isg1")]
    format: Format,
    /// Use a bundled catalog entry instead of a file.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct OptionalInputArgs {
    /// Read the semigroup from this file.
    #[arg(long, conflicts_with = "name")]
    input: Option<PathBuf>,
    /// Input file format.
    #[arg(long, value_enum, default_value = "isg1")]
    format: Format,
    /// Use a bundled catalog entry; omit both --input and --name to run
    /// against the whole catalog.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit a JSON mirror of the report instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the report (text or JSON, as selected) to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Parse(String),
    Validation(String),
    NotStabilized(String),
    Disagreement,
    LatticeTooLarge(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Validation(_) | CliError::Io(_) => 3,
            CliError::NotStabilized(_) => 4,
            CliError::Disagreement => 5,
            CliError::LatticeTooLarge(_) => 6,
        }
    }

    fn message(&self) -> Option<&str> {
        match self {
            CliError::Usage(m)
            | CliError::Parse(m)
            | CliError::Validation(m)
            | CliError::NotStabilized(m)
            | CliError::LatticeTooLarge(m)
            | CliError::Io(m) => Some(m),
            CliError::Disagreement => None,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Syntax { .. } => CliError::Parse(e.to_string()),
            ParseError::Validation(_) | ParseError::Generator(_) => {
                CliError::Validation(e.to_string())
            }
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::LatticeTooLarge(e.to_string())
    }
}

fn load_input(
    input: &Option<PathBuf>,
    format: Format,
    name: &Option<String>,
) -> Result<(String, InverseSemigroup), CliError> {
    match (input, name) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            let subject = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".to_string());
            let s = match format {
                Format::Isg1 => formats::parse_isg1(&text)?,
                Format::Pbj1 => {
                    let (degree, gens) = formats::parse_pbj1(&text)?;
                    let (s, _) =
                        from_partial_bijection_generators(degree, &gens, DEFAULT_CLOSURE_CAP)
                            .map_err(|e| CliError::Validation(e.to_string()))?;
                    s
                }
            };
            Ok((subject, s))
        }
        (None, Some(name)) => match catalog::by_name(name) {
            Some(entry) => Ok((name.clone(), entry.semigroup)),
            None => Err(CliError::Usage(format!(
                "unknown catalog entry `{name}`; available: {}",
                catalog::names().join(", ")
            ))),
        },
        (None, None) => Err(CliError::Usage(
            "expected either --input FILE or --name ENTRY".to_string(),
        )),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    }
}

fn deliver(text: String, json_value: Value, output: &OutputArgs) -> Result<(), CliError> {
    let body = if output.json {
        let mut s = serde_json::to_string_pretty(&json_value).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    };
    print!("{body}");
    if let Some(path) = &output.report {
        std::fs::write(path, &body)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn labels_json(c: &congruence::Congruence) -> Value {
    let labels: Vec<usize> = (0..c.partition().len())
        .map(|x| c.partition().label_of(x))
        .collect();
    json!(labels)
}

fn cmd_validate(input: &InputArgs, output: &OutputArgs) -> Result<(), CliError> {
    let (_, s) = load_input(&input.input, input.format, &input.name)?;
    let text = report::render_summary(&s);
    let json_value = json!({
        "order": s.order(),
        "idempotents": s.idempotents().len(),
        "zero": s.zero().is_some(),
        "clifford": verify::is_clifford(&s),
        "e_unitary": verify::is_e_unitary(&s),
        "e_reflexive": verify::is_e_reflexive(&s),
        "fundamental": verify::is_fundamental(&s),
        "e_disjunctive": verify::is_e_disjunctive(&s),
    });
    deliver(text, json_value, output)
}

fn network_json(s: &InverseSemigroup, net: &MinNetwork) -> Value {
    let levels: Vec<Value> = (0..=net.stabilization_level())
        .map(|k| {
            json!({
                "level": k,
                "alpha": labels_json(net.alpha(k)),
                "beta": labels_json(net.beta(k)),
                "meet": labels_json(&net.meet_at(s, k)),
            })
        })
        .collect();
    let mu = congruence::greatest_idempotent_separating(s);
    let tau = congruence::greatest_idempotent_pure(s);
    json!({
        "levels": levels,
        "stabilization": net.stabilization_level(),
        "landmarks": {
            "sigma": labels_json(net.sigma()),
            "eta": labels_json(net.eta()),
            "nu": labels_json(net.nu()),
            "pi": labels_json(net.pi()),
            "lambda": labels_json(net.lambda()),
            "mu": labels_json(&mu),
            "tau": labels_json(&tau),
        },
    })
}

fn cmd_network(input: &InputArgs, max_level: usize, output: &OutputArgs) -> Result<(), CliError> {
    let (_, s) = load_input(&input.input, input.format, &input.name)?;
    let net = MinNetwork::compute(&s, max_level)
        .map_err(|e| CliError::NotStabilized(e.to_string()))?;
    deliver(report::render_network(&s, &net), network_json(&s, &net), output)
}

fn lattice_json(lattice: &CongruenceLattice) -> Value {
    let congruences: Vec<Value> = lattice
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": i,
                "classes": c.class_count(),
                "labels": labels_json(c),
            })
        })
        .collect();
    let edges: Vec<Value> = lattice
        .hasse_edges()
        .into_iter()
        .map(|(a, b)| json!([a, b]))
        .collect();
    json!({ "count": lattice.len(), "congruences": congruences, "edges": edges })
}

fn cmd_lattice(input: &InputArgs, cap: usize, output: &OutputArgs) -> Result<(), CliError> {
    let (_, s) = load_input(&input.input, input.format, &input.name)?;
    let lattice = enumerate_congruence_lattice(&s, cap)?;
    deliver(report::render_lattice(&lattice), lattice_json(&lattice), output)
}

fn parse_levels(spec: &str, what: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some((lo, hi)) = token.split_once("..") {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad {what} range `{token}`")))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad {what} range `{token}`")))?;
            if hi < lo {
                return Err(CliError::Usage(format!("empty {what} range `{token}`")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(
                token
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad {what} value `{token}`")))?,
            );
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!("no {what} levels given")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

const ALL_SUITES: [&str; 9] = [
    "kercliff",
    "boeu",
    "kercliffcon",
    "boeuc",
    "minimality",
    "coincidences",
    "class",
    "ker",
    "quotient",
];

fn parse_suites(spec: &str) -> Result<Vec<&'static str>, CliError> {
    if spec.trim() == "all" {
        return Ok(ALL_SUITES.to_vec());
    }
    let mut out = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        match ALL_SUITES.iter().find(|s| **s == token) {
            Some(s) => {
                if !out.contains(s) {
                    out.push(*s);
                }
            }
            None => {
                return Err(CliError::Usage(format!(
                    "unknown suite `{token}`; available: {}, or all",
                    ALL_SUITES.join(", ")
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no suites given".to_string()));
    }
    Ok(out)
}

fn parse_families(spec: &str) -> Result<Vec<Family>, CliError> {
    if spec.trim() == "all" {
        return Ok(vec![Family::A, Family::B, Family::APrime, Family::BPrime]);
    }
    let mut out = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        match Family::parse(token) {
            Some(f) => {
                if !out.contains(&f) {
                    out.push(f);
                }
            }
            None => {
                return Err(CliError::Usage(format!(
                    "unknown family `{token}`; available: A, B, Aprime, Bprime, or all"
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no families given".to_string()));
    }
    Ok(out)
}

fn suite_json(subject: &str, family: Option<Family>, rho: Option<usize>, r: &SuiteReport) -> Value {
    let conditions: Vec<Value> = r
        .conditions
        .iter()
        .map(|(label, value)| json!({ "label": label, "value": value }))
        .collect();
    let (verdict, disagreeing) = match &r.verdict {
        Verdict::AllAgree => ("agree", Vec::new()),
        Verdict::Disagreement(idx) => ("disagree", idx.clone()),
    };
    json!({
        "subject": subject,
        "suite": r.suite,
        "family": family.map(|f| f.label()),
        "rho": rho,
        "m": r.m,
        "n": r.n,
        "conditions": conditions,
        "verdict": verdict,
        "disagreeing": disagreeing,
    })
}

struct VerifyRun {
    text: String,
    results: Vec<Value>,
    all_ok: bool,
}

impl VerifyRun {
    fn new() -> Self {
        VerifyRun {
            text: String::new(),
            results: Vec::new(),
            all_ok: true,
        }
    }

    fn record(&mut self, subject: &str, family: Option<Family>, rho: Option<usize>, r: SuiteReport) {
        let tag = match (family, rho) {
            (Some(f), _) => format!("{subject} family={}", f.label()),
            (None, Some(i)) => format!("{subject} rho=c{i}"),
            (None, None) => subject.to_string(),
        };
        self.text.push_str(&report::render_suite(&tag, &r));
        self.results.push(suite_json(subject, family, rho, &r));
        self.all_ok &= r.passed();
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_one_subject(
    run: &mut VerifyRun,
    subject: &str,
    s: &InverseSemigroup,
    suites: &[&'static str],
    ns: &[usize],
    ms: &[usize],
    families: &[Family],
    max_level: usize,
    cap: usize,
) -> Result<(), CliError> {
    let net = MinNetwork::compute(s, max_level)
        .map_err(|e| CliError::NotStabilized(format!("{subject}: {e}")))?;
    let needs_lattice = suites
        .iter()
        .any(|s| matches!(*s, "kercliff" | "boeu" | "kercliffcon" | "boeuc" | "minimality" | "quotient"));
    let lattice = if needs_lattice {
        Some(
            enumerate_congruence_lattice(s, cap)
                .map_err(|e| CliError::LatticeTooLarge(format!("{subject}: {e}")))?,
        )
    } else {
        None
    };

    for suite in suites {
        match *suite {
            "kercliff" => {
                let lattice = lattice.as_ref().expect("requested above");
                for &n in ns.iter().filter(|&&n| n >= 1) {
                    run.record(subject, None, None, verify::suite_kercliff(s, &net, lattice, n));
                }
            }
            "boeu" => {
                let lattice = lattice.as_ref().expect("requested above");
                for &n in ns.iter().filter(|&&n| n >= 1) {
                    run.record(subject, None, None, verify::suite_boeu(s, &net, lattice, n));
                }
            }
            "kercliffcon" | "boeuc" => {
                let lattice = lattice.as_ref().expect("requested above");
                for &n in ns.iter().filter(|&&n| n >= 1) {
                    for (i, ker_report, unit_report) in
                        verify::relative_suites_over_lattice(s, lattice, n)
                    {
                        if *suite == "kercliffcon" {
                            run.record(subject, None, Some(i), ker_report);
                        } else {
                            run.record(subject, None, Some(i), unit_report);
                        }
                    }
                }
            }
            "minimality" => {
                let lattice = lattice.as_ref().expect("requested above");
                for &family in families {
                    for &n in ns {
                        run.record(
                            subject,
                            Some(family),
                            None,
                            verify::check_minimality(s, &net, lattice, family, n),
                        );
                    }
                }
            }
            "coincidences" => {
                run.record(subject, None, None, verify::check_coincidences(s, &net));
            }
            "class" => {
                for &n in ns.iter().filter(|&&n| n >= 2) {
                    run.record(subject, None, None, verify::check_prop_class(s, &net, n));
                }
            }
            "ker" => {
                for &n in ns.iter().filter(|&&n| n >= 1) {
                    run.record(subject, None, None, verify::check_prop_ker(s, &net, n));
                }
            }
            "quotient" => {
                let lattice = lattice.as_ref().expect("requested above");
                for &m in ms {
                    for &n in ns.iter().filter(|&&n| n >= 1) {
                        run.record(
                            subject,
                            None,
                            None,
                            verify::check_prop_quotient(s, &net, lattice, m, n),
                        );
                    }
                }
            }
            other => unreachable!("suite list is validated: {other}"),
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    input: &OptionalInputArgs,
    suites_spec: &str,
    n_spec: &str,
    m_spec: &str,
    family_spec: &str,
    max_level: usize,
    cap: usize,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let suites = parse_suites(suites_spec)?;
    let ns = parse_levels(n_spec, "n")?;
    let ms = parse_levels(m_spec, "m")?;
    if suites.contains(&"quotient") {
        if let Some(&m) = ms.iter().find(|&&m| m < 2) {
            return Err(CliError::Usage(format!(
                "the quotient suite requires m >= 2, got m={m}"
            )));
        }
    }
    let families = parse_families(family_spec)?;

    let subjects: Vec<(String, InverseSemigroup)> = if input.input.is_none() && input.name.is_none()
    {
        catalog::catalog()
            .into_iter()
            .map(|e| (e.name.to_string(), e.semigroup))
            .collect()
    } else {
        vec![load_input(&input.input, input.format, &input.name)?]
    };

    let mut run = VerifyRun::new();
    for (subject, s) in &subjects {
        verify_one_subject(&mut run, subject, s, &suites, &ns, &ms, &families, max_level, cap)?;
    }

    let mut text = run.text.clone();
    text.push_str(if run.all_ok { "RESULT agree\n" } else { "RESULT disagreement\n" });
    let json_value = json!({
        "results": run.results,
        "all_agree": run.all_ok,
    });
    deliver(text, json_value, output)?;
    if run.all_ok {
        Ok(())
    } else {
        Err(CliError::Disagreement)
    }
}

fn cmd_catalog(action: &CatalogAction) -> Result<(), CliError> {
    match action {
        CatalogAction::List { output } => {
            let mut text = String::new();
            let mut entries = Vec::new();
            for entry in catalog::catalog() {
                let s = &entry.semigroup;
                text.push_str(&format!(
                    "{} order={} idempotents={} zero={}\n",
                    entry.name,
                    s.order(),
                    s.idempotents().len(),
                    if s.zero().is_some() { "yes" } else { "no" },
                ));
                entries.push(json!({
                    "name": entry.name,
                    "order": s.order(),
                    "idempotents": s.idempotents().len(),
                    "zero": s.zero().is_some(),
                }));
            }
            deliver(text, json!({ "entries": entries }), output)
        }
        CatalogAction::Emit { name, output } => match catalog::by_name(name) {
            Some(entry) => {
                let isg1 = formats::emit_isg1(&entry.semigroup);
                let json_value = json!({ "name": entry.name, "isg1": isg1 });
                deliver(isg1, json_value, output)
            }
            None => Err(CliError::Usage(format!(
                "unknown catalog entry `{name}`; available: {}",
                catalog::names().join(", ")
            ))),
        },
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Cmd::Validate { input, output } => cmd_validate(input, output),
        Cmd::Network { input, max_level, output } => cmd_network(input, *max_level, output),
        Cmd::Lattice { input, cap, output } => cmd_lattice(input, *cap, output),
        Cmd::Verify { input, suites, n, m, family, max_level, cap, output } => {
            cmd_verify(input, suites, n, m, family, *max_level, *cap, output)
        }
        Cmd::Catalog { action } => cmd_catalog(action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(message) = e.message() {
                eprintln!("error: {message}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
