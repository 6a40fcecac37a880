//! `qcoact`: runs the verification suites and classifications and writes
//! their reports.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check, 2 on a usage
//! or input error, 3 when a rewrite or search budget runs out.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qcoact::classify::{
    compare, default_omegas, expected_families, generate_constraints, solve, ClassificationResult, ConstraintSystem,
    SearchMode, SolveOptions,
};
use qcoact::coaction::{families, presentation_by_name, verify_at, CoactionSpec};
use qcoact::hopf::Hopf;
use qcoact::invariants::{
    canonical_map_witnesses, equivalent_x0_forms, verify_appendix, verify_s4, verify_x_coinvariance,
    verify_y_coinvariance,
};
use qcoact::ncpoly::DEFAULT_FUEL;
use qcoact::presentation::{
    confluence_report, confluence_suite, identity_report, parse_presentation_unchecked, presentation_suite,
    COMPLETION_DEGREE_CAP,
};
use qcoact::report::Params;
use qcoact::{parse_presentation, preset_bl, preset_vs, GaussRational, Rational, Report, Status};

#[derive(Parser)]
#[command(name = "qcoact", version, about = "Verify and classify first-degree SU_q(2) coactions on quantum spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Coaction family for `coaction` and `canonical`.
        #[arg(long)]
        family: Option<String>,
        /// Coaction spec as JSON, instead of a named family.
        #[arg(long, conflicts_with = "family")]
        spec: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Classify first-degree coactions at a fixed parameter point.
    Classify {
        #[arg(long, value_enum)]
        preset: Preset,
        /// Sphere dimension parameter for `vs` (the sphere is S^{2m+1}).
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Impose the block-symmetric ansatz (quaternionic sphere).
        #[arg(long)]
        ansatz: bool,
        /// Branch zero/nonzero on every unknown instead of using the lemmas.
        #[arg(long)]
        plain: bool,
        /// Compare the families found with the known ones.
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Parse a presentation file and check its identities and confluence.
    Parse {
        file: PathBuf,
        /// Try one round of completion before the confluence check.
        #[arg(long)]
        complete: bool,
        /// Accept relations that do not decrease in the term order.
        #[arg(long)]
        unchecked: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Hopf,
    Presentations,
    Coaction,
    Appendix,
    S4,
    Canonical,
    Confluence,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Vs,
    Bl,
}

#[derive(Args)]
struct Common {
    /// Value of t = q^(1/2), e.g. 3/4.
    #[arg(long)]
    t: Option<String>,
    /// Value of u = p^(1/2).
    #[arg(long)]
    u: Option<String>,
    /// Unit value of the family parameter, e.g. 3/5+4/5i.
    #[arg(long)]
    omega: Option<String>,
    /// Keep q, p and the family parameter symbolic (the default for verify).
    #[arg(long, conflicts_with_all = ["t", "u", "omega"])]
    symbolic: bool,
    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Node budget of the classification search.
    #[arg(long)]
    nodes: Option<u64>,
    /// Rewrite-step budget of each normalization.
    #[arg(long)]
    fuel: Option<u64>,
    /// Degree cap of the critical-pair search.
    #[arg(long)]
    degree: Option<usize>,
    /// List every check, not only the failing ones.
    #[arg(long, short)]
    verbose: bool,
}

/// A failure that ends the run with the given exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
}

impl From<qcoact::Error> for Failure {
    fn from(e: qcoact::Error) -> Self {
        use qcoact::Error as E;
        let code = match &e {
            _ if e.is_resource_limit() => 3,
            E::NotConfluent(_) | E::NotDecreasing(_) => 1,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

type Run<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { suite, family, spec, common } => verify(suite, family, spec, &common),
        Command::Classify { preset, m, ansatz, plain, compare, common } => {
            classify(preset, m, ansatz, plain, compare, &common)
        }
        Command::Parse { file, complete, unchecked, common } => parse(&file, complete, unchecked, &common),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn rational(flag: &str, text: &str) -> Run<Rational> {
    text.trim().parse().map_err(|_| Failure::usage(format!("--{flag}: `{text}` is not a rational number")))
}

fn omega(text: &str) -> Run<GaussRational> {
    let w: GaussRational = text.parse().map_err(|e| Failure::usage(format!("--omega: {e}")))?;
    if !num_is_one(&w.norm_sqr()) {
        return Err(Failure::usage(format!("--omega: `{text}` is not a unit")));
    }
    Ok(w)
}

fn num_is_one(r: &Rational) -> bool {
    *r == Rational::from_integer(1.into())
}

/// Rejects flags a command does not use.
fn reject(common: &Common, what: &str, flags: &[&str]) -> Run<()> {
    for &flag in flags {
        let given = match flag {
            "t" => common.t.is_some(),
            "u" => common.u.is_some(),
            "omega" => common.omega.is_some(),
            "symbolic" => common.symbolic,
            "nodes" => common.nodes.is_some(),
            "fuel" => common.fuel.is_some(),
            "degree" => common.degree.is_some(),
            _ => false,
        };
        if given {
            return Err(Failure::usage(format!("--{flag} does not apply to {what}")));
        }
    }
    Ok(())
}

fn fuel(common: &Common) -> u64 {
    common.fuel.unwrap_or(DEFAULT_FUEL)
}

fn verify(suite: Suite, family: Option<String>, spec: Option<PathBuf>, common: &Common) -> Run<u8> {
    if !matches!(suite, Suite::Coaction | Suite::Canonical) && (family.is_some() || spec.is_some()) {
        return Err(Failure::usage("--family and --spec apply to `verify coaction` and `verify canonical` only"));
    }
    let report = match suite {
        Suite::Hopf => {
            reject(common, "verify hopf", &["t", "u", "omega", "nodes", "fuel", "degree"])?;
            let h = Hopf::new();
            Report::merge("hopf", Params::default(), vec![h.check_axioms()?, h.check_fundamental_unitary()?])
        }
        Suite::Presentations => {
            reject(common, "verify presentations", &["t", "u", "omega", "nodes", "degree"])?;
            presentation_suite(fuel(common))?
        }
        Suite::Coaction => verify_coaction(family, spec, common)?,
        Suite::Appendix => {
            reject(common, "verify appendix", &["t", "u", "omega", "nodes", "fuel", "degree"])?;
            verify_appendix()?
        }
        Suite::S4 => {
            reject(common, "verify s4", &["t", "u", "omega", "nodes", "fuel", "degree"])?;
            let parts = vec![
                equivalent_x0_forms()?,
                verify_s4()?,
                verify_x_coinvariance(&families::bl_a())?,
                verify_y_coinvariance(&families::bl_b())?,
            ];
            Report::merge("s4", Params::default(), parts)
        }
        Suite::Canonical => {
            reject(common, "verify canonical", &["t", "u", "omega", "nodes", "fuel", "degree"])?;
            canonical_map_witnesses(&load_spec(family.as_deref().or(Some("bl-a")), spec.as_deref())?)?
        }
        Suite::Confluence => {
            reject(common, "verify confluence", &["t", "u", "omega", "nodes"])?;
            confluence_suite(common.degree.unwrap_or(COMPLETION_DEGREE_CAP), fuel(common))?
        }
    };
    emit_report(&report, common)
}

fn load_spec(family: Option<&str>, spec: Option<&Path>) -> Run<CoactionSpec> {
    match (family, spec) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Ok(CoactionSpec::from_json(&value)?)
        }
        (Some(name), None) => Ok(families::by_name(name)?),
        (None, None) => {
            Err(Failure::usage(format!("give --family ({}) or --spec <file.json>", families::NAMES.join(", "))))
        }
    }
}

fn verify_coaction(family: Option<String>, spec: Option<PathBuf>, common: &Common) -> Run<Report> {
    reject(common, "verify coaction", &["nodes", "degree"])?;
    let mut spec = load_spec(family.as_deref(), spec.as_deref())?;
    let pres = presentation_by_name(&spec.presentation)?.with_fuel(fuel(common));
    let w = common.omega.as_deref().map(omega).transpose()?;
    if let Some(w) = &w {
        spec = spec.at_omega(w)?;
    }
    let point = match (&common.t, &common.u) {
        (None, None) => None,
        (t, u) => {
            let t = rational("t", t.as_deref().ok_or_else(|| Failure::usage("--u needs --t as well"))?)?;
            let u = match u {
                Some(u) => rational("u", u)?,
                None => t.clone(),
            };
            Some((t, u))
        }
    };
    let mut report = verify_at(&spec, &pres, &point)?;
    report.params.omega = w.map(|w| w.to_string());
    Ok(report)
}

fn emit_report(report: &Report, common: &Common) -> Run<u8> {
    if let Some(path) = &common.json {
        let text = serde_json::to_string_pretty(report).map_err(|e| Failure::usage(e.to_string()))? + "\n";
        write_json(path, &text)?;
        if path.as_os_str() == "-" {
            return Ok(report.exit as u8);
        }
    }
    print!("{}", render_report(report, common.verbose));
    Ok(report.exit as u8)
}

fn write_json(path: &Path, text: &str) -> Run<()> {
    if path.as_os_str() == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
    }
}

fn render_params(p: &Params) -> String {
    let parts: Vec<String> = [("t", &p.t), ("u", &p.u), ("omega", &p.omega)]
        .iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| format!("{k} = {v}")))
        .collect();
    if parts.is_empty() {
        "symbolic".into()
    } else {
        parts.join(", ")
    }
}

fn render_report(r: &Report, verbose: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "suite: {} ({})", r.suite, render_params(&r.params));
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unresolved => "UNRESOLVED",
        };
        if verbose || c.status != Status::Pass {
            if c.residual_terms > 0 {
                let _ = writeln!(s, "{tag} {} ({} residual terms)", c.id, c.residual_terms);
            } else {
                let _ = writeln!(s, "{tag} {}", c.id);
            }
        }
    }
    let _ = writeln!(
        s,
        "{} checks: {} pass, {} fail, {} unresolved",
        r.checks.len(),
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::Unresolved)
    );
    s
}

fn classify(preset: Preset, m: usize, ansatz: bool, plain: bool, compare_known: bool, common: &Common) -> Run<u8> {
    reject(common, "classify", &["omega", "symbolic", "fuel", "degree"])?;
    let (Some(t), Some(u)) = (&common.t, &common.u) else {
        return Err(Failure::usage("classify needs concrete --t and --u"));
    };
    let (t, u) = (rational("t", t)?, rational("u", u)?);
    let (pres, name) = match preset {
        Preset::Vs => (preset_vs(m)?, "vs"),
        Preset::Bl => (preset_bl(), "bl"),
    };
    let sys = generate_constraints(&pres, ansatz)?;
    let mut opts = SolveOptions::new(t.clone(), u.clone());
    if plain {
        opts = opts.with_mode(SearchMode::Plain);
    }
    if let Some(n) = common.nodes {
        opts = opts.with_nodes(n);
    }
    let result = solve(&sys, &opts)?;
    let m_field = matches!(preset, Preset::Vs).then_some(m);
    let mut code = if result.budget_exhausted {
        3
    } else if !result.unresolved.is_empty() {
        1
    } else {
        0
    };
    let comparison = if compare_known {
        let expected = expected_families(name, m, t == u);
        let r = compare(&result, &sys, &expected, &default_omegas())?;
        if !r.passed() && code == 0 {
            code = 1;
        }
        Some(r)
    } else {
        None
    };
    if let Some(path) = &common.json {
        let text = serde_json::to_string_pretty(&result.to_json(&sys, name, m_field))
            .map_err(|e| Failure::usage(e.to_string()))?
            + "\n";
        write_json(path, &text)?;
        if path.as_os_str() == "-" {
            return Ok(code);
        }
    }
    print!("{}", render_classification(&result, &sys, name, m_field, common.verbose));
    if let Some(r) = comparison {
        print!("{}", render_report(&r, common.verbose));
    }
    Ok(code)
}

fn render_classification(
    r: &ClassificationResult,
    sys: &ConstraintSystem,
    preset: &str,
    m: Option<usize>,
    verbose: bool,
) -> String {
    let mut s = String::new();
    let m = m.map(|m| format!(", m = {m}")).unwrap_or_default();
    let mode = match r.mode {
        SearchMode::Lemmas => "lemmas",
        SearchMode::Plain => "plain",
    };
    let _ = writeln!(
        s,
        "preset: {preset}{m} ({}), t = {}, u = {}, ansatz: {}, mode: {mode}",
        r.presentation, r.t, r.u, r.ansatz
    );
    let _ = writeln!(s, "families: {}", r.families.len());
    for f in &r.families {
        let kind = if f.parametrized { "one-parameter" } else { "isolated" };
        let _ = writeln!(s, "  {} ({kind}, branch {})", f.id, f.branch);
        for (k, v) in f.assignment(sys) {
            let _ = writeln!(s, "    {k} = {v}");
        }
    }
    let _ = writeln!(s, "unsat branches: {}", r.unsat_branches);
    let _ = writeln!(s, "nodes: {}", r.nodes);
    let _ = writeln!(s, "unresolved: {}", r.unresolved.len());
    for u in &r.unresolved {
        let _ = writeln!(s, "  {}: {}", u.branch, u.reason);
    }
    let audit = if r.audit.complete() { "complete" } else { "incomplete" };
    let _ = writeln!(s, "audit: {audit}");
    if verbose {
        for d in &r.diagonals {
            let diag: Vec<String> = d.diagonal.iter().map(u8::to_string).collect();
            let _ = writeln!(
                s,
                "  diag(A) = ({}): {} families, {} unsat, {} unresolved",
                diag.join(","),
                d.families,
                d.unsat,
                d.unresolved
            );
        }
    }
    s
}

/// Summary of a parsed presentation, written with `--json`.
#[derive(Serialize)]
struct ParseSummary<'a> {
    name: &'a str,
    generators: &'a [String],
    params: &'a [String],
    rules: usize,
    report: &'a Report,
}

fn parse(file: &Path, complete: bool, unchecked: bool, common: &Common) -> Run<u8> {
    reject(common, "parse", &["t", "u", "omega", "nodes"])?;
    let text =
        std::fs::read_to_string(file).map_err(|e| Failure::usage(format!("cannot read {}: {e}", file.display())))?;
    let mut pres = if unchecked { parse_presentation_unchecked(&text)? } else { parse_presentation(&text)? };
    pres = pres.with_fuel(fuel(common));
    if complete {
        // the input was fine; failing to complete it is a check failure
        pres = pres.complete_once().map_err(|e| Failure {
            code: if e.is_resource_limit() { 3 } else { 1 },
            msg: format!("completion failed: {e}"),
        })?;
    }
    let degree = common.degree.unwrap_or(COMPLETION_DEGREE_CAP);
    let report = Report::merge(
        format!("parse/{}", pres.name),
        Params::default(),
        vec![identity_report(&pres)?, confluence_report(&pres, degree)?],
    );
    if let Some(path) = &common.json {
        let summary = ParseSummary {
            name: &pres.name,
            generators: &pres.generator_names,
            params: &pres.params,
            rules: pres.rules().len(),
            report: &report,
        };
        let text = serde_json::to_string_pretty(&summary).map_err(|e| Failure::usage(e.to_string()))? + "\n";
        write_json(path, &text)?;
        if path.as_os_str() == "-" {
            return Ok(report.exit as u8);
        }
    }
    println!(
        "algebra {}: {} generators ({}), {} rules after adjoint closure",
        pres.name,
        pres.generator_count(),
        pres.generator_names.join(" "),
        pres.rules().len()
    );
    print!("{}", render_report(&report, common.verbose));
    Ok(report.exit as u8)
}
