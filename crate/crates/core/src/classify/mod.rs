//! Classification of first-degree coactions by solving the coefficient
//! constraints exhaustively at fixed parameter values, and comparison of the
//! outcome against the known families.

mod constraints;
mod solver;

pub use constraints::{generate_constraints, ConstraintSystem, Equation, MatrixTag, Poly, Unknown};
pub use solver::{
    solve, Audit, ClassificationResult, DiagonalTally, SearchMode, SolutionFamily, SolveOptions, Unresolved,
    DEFAULT_NODES,
};

use serde_json::{json, Value};

use crate::coaction::{families, presentation_by_name, verify_at, CoactionSpec, Matrix};
use crate::error::Result;
use crate::report::{Check, Params, Report};
use crate::scalar::{GaussRational, Rational};

/// Unit samples of the free parameter used when comparing families.
pub fn default_omegas() -> Vec<GaussRational> {
    vec![
        GaussRational::from_int(1),
        GaussRational::i(),
        GaussRational::new(crate::scalar::rat(3, 5), crate::scalar::rat(4, 5)),
    ]
}

impl SolutionFamily {
    /// The coaction spec of this family with `C = I − A`, `C' = −A'`.
    pub fn spec(&self, sys: &ConstraintSystem) -> CoactionSpec {
        let n = sys.generators;
        let mut s = CoactionSpec::zero(sys.presentation.clone(), n);
        let pick = |tag: MatrixTag| {
            let mut m = Matrix::zero(n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, self.values[sys.var(tag, i, j) as usize].clone());
                }
            }
            m
        };
        s.a = pick(MatrixTag::A);
        s.ap = pick(MatrixTag::Ap);
        s.b = pick(MatrixTag::B);
        s.bp = pick(MatrixTag::Bp);
        s.d = pick(MatrixTag::D);
        s.dp = pick(MatrixTag::Dp);
        s.c = &Matrix::identity(n) - &s.a;
        s.cp = -&s.ap;
        s
    }

    /// Nonzero entries as `name → scalar text`.
    pub fn assignment(&self, sys: &ConstraintSystem) -> Vec<(String, String)> {
        sys.unknowns
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(u, v)| (u.to_string(), v.to_string()))
            .collect()
    }
}

impl ClassificationResult {
    pub fn to_json(&self, sys: &ConstraintSystem, preset: &str, m: Option<usize>) -> Value {
        let families: Vec<Value> = self
            .families
            .iter()
            .map(|f| {
                let assignment: serde_json::Map<String, Value> =
                    f.assignment(sys).into_iter().map(|(k, v)| (k, Value::String(v))).collect();
                json!({"id": f.id, "assignment": assignment})
            })
            .collect();
        let unresolved: Vec<Value> =
            self.unresolved.iter().map(|u| json!({"branch": u.branch, "reason": u.reason})).collect();
        json!({
            "preset": preset,
            "m": m,
            "t": self.t.to_string(),
            "u": self.u.to_string(),
            "ansatz": self.ansatz,
            "families": families,
            "unsat_branches": self.unsat_branches,
            "nodes": self.nodes,
            "unresolved": unresolved,
        })
    }

    /// Whether every surviving family has `A' = 0`.
    pub fn a_prime_vanishes(&self, sys: &ConstraintSystem) -> bool {
        self.families
            .iter()
            .all(|f| sys.unknowns.iter().zip(&f.values).all(|(u, v)| u.matrix != MatrixTag::Ap || v.is_zero()))
    }
}

/// Expected family `e` specialized at `(t, u)` and the unit `omega`.
fn expected_at(e: &CoactionSpec, t: &Rational, u: &Rational, omega: &GaussRational) -> Result<CoactionSpec> {
    e.map(|s| s.u_to_t().specialize(t, u))?.at_omega(omega)
}

/// A unit `λ` for which `found` equals `expected` at `λ`, read off from an
/// entry of `expected` that is linear in `w`.
fn matching_unit(found: &CoactionSpec, expected: &CoactionSpec) -> Option<GaussRational> {
    for (fm, em) in found.matrices().iter().zip(expected.matrices()) {
        for i in 0..em.dim() {
            for j in 0..em.dim() {
                let Some((e, c)) = em.get(i, j).as_monomial() else { continue };
                if e.w == 0 || e.t != 0 || e.u != 0 {
                    continue;
                }
                let f = fm.get(i, j).as_constant()?;
                let r = f * c.inv()?;
                let r = if e.w == 1 {
                    r
                } else if e.w == -1 {
                    r.conj()
                } else {
                    continue;
                };
                return num::One::is_one(&r.norm_sqr()).then_some(r);
            }
        }
    }
    Some(GaussRational::from_int(1))
}

fn coincide(found: &CoactionSpec, expected: &CoactionSpec, t: &Rational, u: &Rational) -> Result<bool> {
    // the found family is already numeric in t, u; the expected one is
    // specialized here
    let lam = match matching_unit(found, &expected.map(|s| s.u_to_t().specialize(t, u))?) {
        Some(l) => l,
        None => return Ok(false),
    };
    let e = expected_at(expected, t, u, &lam)?;
    Ok(found.matrices() == e.matrices())
}

/// Checks that found families and expected family ids correspond one to
/// one: each found family, at each sampled `ω`, passes `verify` and equals
/// some expected family at a unit parameter, and every expected family is
/// hit. A found family may be parametrized by `λω` for a fixed unit `λ`.
pub fn compare(
    result: &ClassificationResult,
    sys: &ConstraintSystem,
    expected: &[&str],
    omegas: &[GaussRational],
) -> Result<Report> {
    let pres = presentation_by_name(&sys.presentation)?;
    let point = Some((result.t.clone(), result.u.clone()));
    let expected_specs: Vec<(String, CoactionSpec)> =
        expected.iter().map(|id| Ok((id.to_string(), families::by_name(id)?))).collect::<Result<_>>()?;
    let mut checks = Vec::new();
    let mut hit = vec![false; expected_specs.len()];
    for f in &result.families {
        let spec = f.spec(sys);
        let mut matched: Option<usize> = None;
        for (k, omega) in omegas.iter().enumerate() {
            let s = spec.at_omega(omega)?;
            let report = verify_at(&s, &pres, &point)?;
            checks.push(Check::flag(format!("{}/verify/omega{k}", f.id), report.passed()));
            let mut m = None;
            for (idx, (_, e)) in expected_specs.iter().enumerate() {
                if coincide(&s, e, &result.t, &result.u)? {
                    m = Some(idx);
                    break;
                }
            }
            // the same expected family must match at every sample
            if m.is_none() || (k > 0 && m != matched) {
                matched = None;
                break;
            }
            matched = m;
        }
        let label = match matched {
            Some(i) => {
                hit[i] = true;
                format!("{}/matches/{}", f.id, expected_specs[i].0)
            }
            None => format!("{}/matches/none", f.id),
        };
        checks.push(Check::flag(label, matched.is_some()));
    }
    for ((id, _), h) in expected_specs.iter().zip(hit) {
        checks.push(Check::flag(format!("expected/{id}/found"), h));
    }
    checks.push(Check::flag("unresolved/none", result.unresolved.is_empty()));
    let params = Params { t: Some(result.t.to_string()), u: Some(result.u.to_string()), omega: None };
    Ok(Report::new(format!("compare/{}", sys.presentation), params, checks))
}

/// The families expected for a preset run, for comparison.
pub fn expected_families(preset: &str, m: usize, p_equals_q: bool) -> Vec<&'static str> {
    match (preset, m) {
        ("bl", _) => vec!["bl-a", "bl-b"],
        ("vs", 1) if p_equals_q => vec!["vs3-one", "vs3-two", "vs3-three"],
        _ => Vec::new(),
    }
}
