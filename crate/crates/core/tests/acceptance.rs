//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p qcoact-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use qcoact::classify::{
    compare, default_omegas, expected_families, generate_constraints, solve, ClassificationResult, ConstraintSystem,
    SearchMode, SolveOptions,
};
use qcoact::coaction::{
    coassociativity_residuals, families, presentation_by_name, random_spec, table1_residuals, verify,
};
use qcoact::hopf::Hopf;
use qcoact::invariants::{
    canonical_map_witnesses, verify_appendix, verify_s4, verify_x_coinvariance, verify_y_coinvariance,
};
use qcoact::ncpoly::DEFAULT_FUEL;
use qcoact::presentation::{confluence_suite, presentation_suite};
use qcoact::scalar::rat;
use qcoact::{preset_bl, preset_vs, Rational, Report, Result, Status};

const RANDOM_SPECS: usize = 50;
const SPEC_SEED: u64 = 0x7ab1e;

/// Verdict and a one-line summary of one criterion.
type Outcome = (bool, String);

fn failures(r: &Report) -> String {
    let ids: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    if ids.is_empty() {
        format!("{} checks pass", r.checks.len())
    } else {
        let shown = ids.iter().take(6).copied().collect::<Vec<_>>().join(", ");
        let more = if ids.len() > 6 { format!(" and {} more", ids.len() - 6) } else { String::new() };
        format!("{} of {} checks fail: {shown}{more}", ids.len(), r.checks.len())
    }
}

fn report_outcome(r: &Report) -> Outcome {
    (r.passed(), failures(r))
}

fn classify(sys: &ConstraintSystem, t: Rational, u: Rational) -> Result<ClassificationResult> {
    solve(sys, &SolveOptions::new(t, u).with_mode(SearchMode::Lemmas))
}

fn clean(r: &ClassificationResult) -> bool {
    r.unresolved.is_empty() && !r.budget_exhausted && r.audit.complete()
}

fn matched(report: &Report) -> Vec<String> {
    report
        .checks
        .iter()
        .filter(|c| c.status == Status::Pass && c.id.contains("/matches/"))
        .map(|c| c.id.rsplit('/').next().unwrap_or_default().to_string())
        .collect()
}

fn presentations() -> Result<Outcome> {
    Ok(report_outcome(&presentation_suite(DEFAULT_FUEL)?))
}

fn confluence() -> Result<Outcome> {
    Ok(report_outcome(&confluence_suite(5, DEFAULT_FUEL)?))
}

fn hopf() -> Result<Outcome> {
    let h = Hopf::new();
    let parts = vec![h.check_axioms()?, h.check_fundamental_unitary()?];
    Ok(report_outcome(&Report::merge("hopf", Default::default(), parts)))
}

fn table1() -> Result<Outcome> {
    let mut rng = qcoact::sample::rng(SPEC_SEED);
    let mut specs = Vec::new();
    for k in 0..RANDOM_SPECS {
        specs.push((format!("random{k:02}"), random_spec(&mut rng, 2 + k % 3)));
    }
    for name in families::NAMES {
        specs.push((name.to_string(), families::by_name(name)?));
    }
    let mut bad = Vec::new();
    for (name, s) in &specs {
        let (full, table) = (coassociativity_residuals(s), table1_residuals(s));
        if full.len() != 18 || full != table {
            bad.push(name.clone());
        }
    }
    Ok((bad.is_empty(), format!("{} specs, 18 residuals each; disagreements: {bad:?}", specs.len())))
}

fn known_coactions() -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut ok = true;
    for name in ["coproduct", "vs3-one", "vs3-two", "vs3-three", "bl-a", "bl-b"] {
        let spec = families::by_name(name)?;
        let r = verify(&spec, &presentation_by_name(&spec.presentation)?)?;
        ok &= r.passed();
        let failed = r.failures().count();
        lines.push(if failed == 0 { format!("{name} ok") } else { format!("{name} {failed} failing checks") });
    }
    Ok((ok, lines.join("; ")))
}

fn no_go() -> Result<Outcome> {
    let mut ok = true;
    let mut lines = Vec::new();
    for m in [2, 3] {
        let sys = generate_constraints(&preset_vs(m)?, false)?;
        for (t, u) in [(rat(3, 4), rat(3, 4)), (rat(1, 2), rat(1, 2))] {
            let r = classify(&sys, t.clone(), u.clone())?;
            ok &= r.families.is_empty() && clean(&r);
            lines.push(format!("m={m} ({t},{u}): {} families, {} unresolved", r.families.len(), r.unresolved.len()));
        }
    }
    Ok((ok, lines.join("; ")))
}

fn s3_classification() -> Result<Outcome> {
    let sys = generate_constraints(&preset_vs(1)?, false)?;
    let r = classify(&sys, rat(3, 4), rat(3, 4))?;
    let report = compare(&r, &sys, &expected_families("vs", 1, true), &default_omegas())?;
    let found = matched(&report);
    let unequal = classify(&sys, rat(3, 4), rat(1, 2))?;
    let ok = r.families.len() == 3 && report.passed() && clean(&r) && clean(&unequal);
    Ok((
        ok,
        format!(
            "p = q: {} families (expected 3), matched {found:?}; p != q: {} families, {} unresolved",
            r.families.len(),
            unequal.families.len(),
            unequal.unresolved.len()
        ),
    ))
}

fn quaternionic_classification() -> Result<Outcome> {
    let sys = generate_constraints(&preset_bl(), true)?;
    let r = classify(&sys, rat(3, 4), rat(3, 4))?;
    let report = compare(&r, &sys, &expected_families("bl", 1, true), &default_omegas())?;
    let found = matched(&report);
    let a_prime = r.a_prime_vanishes(&sys);
    let unsat = [[1, 0, 1, 0], [0, 1, 0, 1]]
        .iter()
        .all(|d| r.diagonals.iter().any(|x| x.diagonal == d && x.families == 0 && x.unresolved == 0 && x.unsat > 0));
    let ok = r.families.len() == 2 && report.passed() && a_prime && unsat && clean(&r);
    Ok((
        ok,
        format!(
            "{} families (expected 2), matched {found:?}; A' = 0: {a_prime}; diagonals (1,0,1,0), (0,1,0,1) unsat: {unsat}",
            r.families.len()
        ),
    ))
}

fn coinvariants() -> Result<Outcome> {
    let parts =
        vec![verify_x_coinvariance(&families::bl_a())?, verify_y_coinvariance(&families::bl_b())?, verify_s4()?];
    Ok(report_outcome(&Report::merge("coinvariants", Default::default(), parts)))
}

fn appendix() -> Result<Outcome> {
    Ok(report_outcome(&verify_appendix()?))
}

fn canonical() -> Result<Outcome> {
    Ok(report_outcome(&canonical_map_witnesses(&families::bl_a())?))
}

fn properties() -> Result<Outcome> {
    let outcomes = common::all();
    let ok = outcomes.iter().all(|o| o.failure.is_none() && o.cases >= 100);
    let summary = outcomes
        .iter()
        .map(|o| match &o.failure {
            None => format!("{} ({} cases)", o.name, o.cases),
            Some(f) => format!("{} FAILED: {f}", o.name),
        })
        .collect::<Vec<_>>()
        .join("; ");
    Ok((ok, summary))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 12] = [
        ("presentation identities", presentations),
        ("confluence audit", confluence),
        ("Hopf axioms and fundamental unitary", hopf),
        ("coefficient table re-derivation", table1),
        ("known coactions verify", known_coactions),
        ("no first-degree coaction for m = 2, 3", no_go),
        ("S^3 classification", s3_classification),
        ("quaternionic classification", quaternionic_classification),
        ("coinvariants and four-sphere relations", coinvariants),
        ("appendix identities", appendix),
        ("canonical-map witnesses", canonical),
        ("property suites", properties),
    ];
    let mut all = true;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        all &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("{verdict} {:>2} {title} [{:.1}s]: {detail}", k + 1, start.elapsed().as_secs_f64());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
