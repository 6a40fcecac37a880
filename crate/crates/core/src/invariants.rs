//! Coinvariant elements of the quaternionic sphere under its two coaction
//! families, the four-sphere relations they satisfy, the cubic and quartic
//! identities used to derive them, and the lifted canonical-map witnesses.
//!
//! Everything here is computed with `ω` symbolic and `q` symbolic. The
//! defining rewrite rules of `O(S^7_q)` are not confluent, so an identity
//! whose difference does not normalize to zero is decided again by the
//! completed system over `Q(i)(t)` (see [`crate::ideal`]).

use std::collections::BTreeMap;

use num::Zero;

use crate::coaction::{families, CoactionSpec};
use crate::error::{Error, Result};
use crate::hopf::{Hopf, A as HA, A_STAR as HA_STAR, B as HB, B_STAR as HB_STAR};
use crate::ideal::{field_element, FieldSystem};
use crate::ncpoly::{Element, Word};
use crate::presentation::{preset_bl, Param, Presentation};
use crate::report::{Check, Params, Report};
use crate::scalar::{GaussRational, Rational, Scalar};
use crate::tensor::TensorElement;

/// Text forms of the generators `X_i` and `Y_i`.
pub const X_DEFS: [&str; 3] = ["2(q^2 x0 x0* + x1* x1) - 1", "2(q^2 x0 x2* + x1* x3)", "2(q x0 x3* - x1* x2)"];
pub const Y_DEFS: [&str; 3] = ["2(q^2 x0* x0 + x1 x1*) - 1", "2(q^2 x0* x2 + x1 x3*)", "2(q x0* x3 - x1 x2*)"];

/// The elements `X_0, X_1, X_2` and `Y_0, Y_1, Y_2` of `O(S^7_q)`.
#[derive(Clone, Debug)]
pub struct InvariantSet {
    pub x: [Element; 3],
    pub y: [Element; 3],
}

impl InvariantSet {
    pub fn new(pres: &Presentation) -> Result<Self> {
        let parse = |defs: [&str; 3]| -> Result<[Element; 3]> {
            Ok([pres.element(defs[0])?, pres.element(defs[1])?, pres.element(defs[2])?])
        };
        Ok(InvariantSet { x: parse(X_DEFS)?, y: parse(Y_DEFS)? })
    }
}

/// Normalized `Ψ(e) − e ⊗ 1`.
pub fn coinvariant_residual(spec: &CoactionSpec, pres: &Presentation, e: &Element) -> Result<TensorElement> {
    let hopf = Hopf::new();
    let image = spec.psi_apply(e, pres, hopf.presentation())?;
    let lifted = TensorElement::tensor(&[e, &Element::one()]).normalize(&[pres, hopf.presentation()])?;
    Ok(&image - &lifted)
}

/// Ambiguity length up to which the field completion is run; every
/// identity checked here has degree at most four.
pub const COMPLETION_CAP: usize = 4;

/// Decides equality in `O(S^7_q)`: by the defining rules first, and by the
/// completed system over `Q(i)(t)` when that leaves a residual.
#[derive(Clone, Debug)]
pub struct Decider {
    pub pres: Presentation,
    field: FieldSystem,
}

impl Decider {
    pub fn new() -> Result<Self> {
        let pres = preset_bl();
        let mut field = FieldSystem::from_presentation(&pres)?;
        if !field.complete(COMPLETION_CAP, 8)? {
            return Err(Error::NotConfluent(format!("field completion up to length {COMPLETION_CAP} did not close")));
        }
        Ok(Decider { pres, field })
    }

    /// Number of terms left after reducing `e`; zero iff `e` is shown to
    /// lie in the ideal.
    pub fn residual_terms(&self, e: &Element) -> Result<usize> {
        let r = self.pres.normalize(e)?;
        if r.is_zero() {
            return Ok(0);
        }
        Ok(self.field.normalize(&field_element(&r)?)?.len())
    }

    pub fn field(&self) -> &FieldSystem {
        &self.field
    }
}

fn residual_check(d: &Decider, id: String, lhs: &Element, rhs: &Element) -> Result<Check> {
    Ok(Check::from_residual(id, d.residual_terms(&(lhs - rhs))?))
}

fn text_check(d: &Decider, id: String, lhs: &str, rhs: &str) -> Result<Check> {
    residual_check(d, id, &d.pres.element(lhs)?, &d.pres.element(rhs)?)
}

fn symbolic() -> Params {
    Params::default()
}

fn commutator(a: &Element, b: &Element) -> Element {
    &(a * b) - &(b * a)
}

/// The displayed forms of `X_0`, and the rewritten forms of `X_1, X_2`
/// and their adjoints, against the defining expressions.
pub fn equivalent_x0_forms() -> Result<Report> {
    let d = Decider::new()?;
    let pres = &d.pres;
    let inv = InvariantSet::new(pres)?;
    let [x0, x1, x2] = &inv.x;
    let forms: [(&str, &Element, String); 7] = [
        ("X0/second-form", x0, "2(x0 x0* + x1 x1*) - 1".into()),
        ("X0/third-form", x0, "1 - 2(x2 x2* + x3 x3*)".into()),
        ("X1/rewritten", x1, "2(q^(-1/2) x3 x1* + x0 x2*)".into()),
        ("X1*/rewritten", &x1.adjoint(), "2(q^(-1/2) x1 x3* + x2 x0*)".into()),
        ("X2/rewritten", x2, "2(q x0 x3* - q^(1/2) x2 x1*)".into()),
        ("X2*/rewritten", &x2.adjoint(), "2(q x3 x0* - q^(1/2) x1 x2*)".into()),
        ("X0/self-adjoint", x0, String::new()),
    ];
    let mut checks = Vec::new();
    for (id, e, text) in forms {
        let rhs = if text.is_empty() { e.adjoint() } else { pres.element(&text)? };
        checks.push(residual_check(&d, format!("forms/{id}"), e, &rhs)?);
    }
    Ok(Report::new("forms/S7q", symbolic(), checks))
}

/// The alternative display of `Y_0` and its self-adjointness. Reported
/// alongside the other suites; the second form does not follow from the
/// relations, so callers should not treat this report as a gate.
pub fn y0_forms() -> Result<Report> {
    let d = Decider::new()?;
    let inv = InvariantSet::new(&d.pres)?;
    let y0 = &inv.y[0];
    let second = d.pres.element("2(x0* x0 + x1* x1) - 1")?;
    let checks = vec![
        residual_check(&d, "forms/Y0/second-form".into(), y0, &second)?,
        residual_check(&d, "forms/Y0/self-adjoint".into(), y0, &y0.adjoint())?,
    ];
    Ok(Report::new("forms/Y", symbolic(), checks))
}

/// Centrality of `X_0`, the four commutation relations and the sphere
/// relation of the four-sphere.
pub fn verify_s4() -> Result<Report> {
    let d = Decider::new()?;
    let pres = &d.pres;
    let inv = InvariantSet::new(pres)?;
    let [x0, x1, x2] = &inv.x;
    let (x1s, x2s) = (x1.adjoint(), x2.adjoint());
    let q = |k: i32| Element::scalar(Param::Q.pow(k));
    let omq2 = Element::scalar(&Scalar::one() - &Param::Q.pow(2));
    let zero = Element::zero();
    let mut checks = Vec::new();
    for (name, e) in [("X1", x1), ("X2", x2), ("X1*", &x1s), ("X2*", &x2s)] {
        checks.push(residual_check(&d, format!("s4/central/X0-{name}"), &commutator(x0, e), &zero)?);
    }
    let relations: [(&str, Element, Element); 4] = [
        ("X1X2", x1 * x2, x2 * x1),
        ("X2*X2", &x2s * x2, &q(-1) * &(x2 * &x2s)),
        ("X1*X2", &x1s * x2, &q(-1) * &(x2 * &x1s)),
        ("X1*X1", &x1s * x1, &(&q(1) * &(x1 * &x1s)) - &(&(&q(-2) * &omq2) * &(&x2s * x2))),
    ];
    for (id, l, r) in relations {
        checks.push(residual_check(&d, format!("s4/commutation/{id}"), &l, &r)?);
    }
    let sphere = &(&(&q(1) * &(x1 * &x1s)) + &(&q(-1) * &(x2 * &x2s))) + &(x0 * x0);
    checks.push(residual_check(&d, "s4/sphere".into(), &sphere, &Element::one())?);
    {
        let (name, e) = ("X0", x0);
        checks.push(residual_check(&d, format!("s4/self-adjoint/{name}"), e, &e.adjoint())?);
    }
    Ok(Report::new("s4/S7q", symbolic(), checks))
}

const CUBIC_SIMPLE: [(&str, &str); 6] = [
    ("x0 x0* x1", "q^2 x1 x0* x0"),
    ("x0 x0* x2", "x2 x0* x0"),
    ("x0 x2* x1", "q x1 x2* x0"),
    ("x2 x0* x1", "q x1 x0* x2"),
    ("x2 x2* x0", "q x0 x2* x2"),
    ("x2 x2* x1", "q x1 x2* x2"),
];

const CUBIC_TRICKY: [(&str, &str); 5] = [
    ("x2 x1* x1", "x1 x1* x2 + (1 - q^2) x0 x0* x2"),
    ("x3 x0* x0", "x0 x0* x3 + q^(-3/2)(1 - q^2) x0 x2* x1"),
    ("x3 x1* x2", "x2 x1* x3 - q^(-1/2)(1 - q^2) x2 x2* x0"),
    ("x3 x1* x1", "x1 x1* x3 + (1 - q^2)(x3 x0* x0 - q^(-1/2) x1 x2* x0)"),
    ("x0 x3* x3", "q x3 x3* x0 + (1 - q^2)(x0 x2* x2 + q^(-1/2) x3 x1* x2)"),
];

/// Quartic identities quoted inside the six commutation items, by item.
const QUARTIC: [&[(&str, &str)]; 6] = [
    &[
        ("x0 x0* x0 x2*", "x0 x2* x0 x0*"),
        ("x1 x1* x0 x2*", "x0 x2* x1 x1*"),
        ("x0 x0* x3 x1*", "q^(-2) x3 x1* x0 x0* - q^(-3/2)(1 - q^2) x0 x2* x1 x1*"),
        ("x1 x1* x3 x1*", "x3 x1* x1 x1* - (1 - q^2) x3 x0* x0 x1* + q^(-1/2)(1 - q^2) x1 x2* x0 x1*"),
    ],
    &[
        ("x0 x0* x2 x1*", "q^(-2) x2 x1* x0 x0*"),
        ("x1 x1* x2 x1*", "x2 x1* x1 x1* - (1 - q^2) x2 x0* x0 x1*"),
        ("x0 x0* x0 x3*", "x0 x3* x0 x0* + q^(-3/2)(1 - q^2) x0 x1* x2 x0*"),
        ("x1 x1* x0 x3*", "x0 x3* x1 x1* - q^(-1/2)(1 - q^2) x0 x0* x2 x1*"),
    ],
    &[
        ("x0 x2* x2 x1*", "q^(-2) x2 x1* x0 x2*"),
        ("x3 x1* x2 x1*", "x2 x1* x3 x1* - q^(-1/2)(1 - q^2) x2 x2* x0 x1*"),
        ("x0 x2* x0 x3*", "x0 x3* x0 x2* + q^(-3/2)(1 - q^2) x0 x1* x2 x2*"),
        ("x3 x1* x0 x3*", "x0 x3* x3 x1* - (1 - q^2) x0 x2* x2 x1*"),
    ],
    &[
        ("x1 x2* x2 x1*", "q^(-1) x2 x1* x1 x2* - q^(-1)(1 - q^2) x0 x0* x2 x2*"),
        ("x1 x2* x0 x3*", "q^(-1) x0 x3* x1 x2* - q^(-3/2)(1 - q^2) x0 x0* x2 x2*"),
        ("x3 x0* x2 x1*", "q^(-1) x2 x1* x3 x0* - q^(-3/2)(1 - q^2) x2 x2* x0 x0*"),
        ("x3 x0* x0 x3*", "q^(-1) x0 x3* x3 x0* - q^(-1)(1 - q^2) x0 x2* x2 x0*"),
    ],
    &[
        ("x2 x0* x2 x1*", "q^(-1) x2 x1* x2 x0*"),
        ("x2 x0* x0 x3*", "q^(-1) x0 x3* x2 x0*"),
        ("x1 x3* x2 x1*", "q x2 x1* x1 x3* - q(1 - q^2) x2 x0* x0 x3*"),
        ("x1 x3* x0 x3*", "q^(-1) x0 x3* x1 x3* - q^(-3/2)(1 - q^2) x0 x0* x2 x3* - q^(-3/2)(1 - q^2) x1 x1* x2 x3*"),
    ],
    &[
        ("x2 x0* x0 x2*", "q x0 x2* x2 x0*"),
        ("x2 x0* x3 x1*", "q^(-1) x3 x1* x2 x0* - q^(-3/2)(1 - q^2) x2 x2* x1 x1*"),
        ("x1 x3* x0 x2*", "q^(-1) x0 x2* x1 x3* - q^(-3/2)(1 - q^2) x1 x1* x2 x2*"),
        ("x1 x3* x3 x1*", "q x3 x1* x1 x3* - q(1 - q^2) x3 x0* x0 x3* + (1 - q^2) x1 x2* x2 x1*"),
        ("x2 x0* x3 x1*", "q x3 x1* x2 x0* + q^(-1)(1 - q^2) x3 x1* x2 x0* - q^(-3/2)(1 - q^2) x2 x2* x1 x1*"),
        ("x1 x3* x0 x2*", "q x0 x2* x1 x3* + q^(-1)(1 - q^2) x0 x2* x1 x3* - q^(-3/2)(1 - q^2) x1 x1* x2 x2*"),
    ],
];

/// The final residual of each of the seven items: the bracketed
/// combination the item ends with, which must vanish.
const ITEM_FINAL: [&str; 7] = [
    "q^(-1/2) x3 x1* x0 x0* - x0 x2* x1 x1* - q^(3/2) x3 x0* x0 x1* + q x1 x2* x0 x1*",
    "x2 x1* x0 x0* - q^2 x2 x0* x0 x1* - q x0 x1* x2 x0* + q^2 x0 x0* x2 x1*",
    "x2 x1* x0 x2* - q x2 x2* x0 x1* - q x0 x1* x2 x2* + q^2 x0 x2* x2 x1*",
    "x0 x0* x2 x2* - x0 x0* x2 x2* + x2 x2* x0 x0* - q x0 x2* x2 x0*",
    "x0 x0* x2 x3* - x2 x0* x0 x3*",
    "2 q x1 x2* x2 x1* - x2 x2* x1 x1* - x1 x1* x2 x2*",
    "x0 x2* x1 x3* - q x1 x2* x0 x3*",
];

/// Intermediate expansions of items 1 to 7 that are stated as equalities
/// between an expression in the `X_i` and one in the generators.
fn item_expansions(inv: &InvariantSet, pres: &Presentation) -> Result<Vec<(String, Element, Element)>> {
    let [x0, x1, x2] = &inv.x;
    let (x1s, x2s) = (x1.adjoint(), x2.adjoint());
    let quarter = Scalar::constant(GaussRational::real(crate::scalar::rat(1, 4)));
    let qp = |k: i32| Param::Q.pow(k);
    let omq2 = &Scalar::one() - &qp(2);
    let el = |s: &str| pres.element(s);
    let mut out = Vec::new();
    out.push((
        "item1/commutator".into(),
        commutator(x0, x1).scale(&quarter),
        el(&format!("q^(-2)(1 - q^2)({})", ITEM_FINAL[0]))?,
    ));
    out.push((
        "item2/commutator".into(),
        commutator(x0, x2).scale(&quarter),
        el(&format!("-q^(-3/2)(1 - q^2)({})", ITEM_FINAL[1]))?,
    ));
    out.push((
        "item3/commutator".into(),
        commutator(x1, x2).scale(&quarter),
        el(&format!("-q^(-3/2)(1 - q^2)({})", ITEM_FINAL[2]))?,
    ));
    out.push((
        "item4/combination".into(),
        (&(&x2s * x2) - &(x2 * &x2s).scale(&qp(-1))).scale(&quarter),
        el(&format!("(1 - q^2)({})", ITEM_FINAL[3]))?,
    ));
    out.push((
        "item5/combination".into(),
        (&(&x1s * x2) - &(x2 * &x1s).scale(&qp(-1))).scale(&quarter),
        el("q^(-1)(1 - q^2)(x2 x1* x1 x3* + q^2 x2 x0* x0 x3* - x0 x0* x2 x3* - x1 x1* x2 x3*)")?,
    ));
    out.push((
        "item5/second-step".into(),
        el("q^(-1)(1 - q^2)(x2 x1* x1 x3* + q^2 x2 x0* x0 x3* - x0 x0* x2 x3* - x1 x1* x2 x3*)")?,
        el(&format!("-q(1 - q^2)({})", ITEM_FINAL[4]))?,
    ));
    out.push((
        "item6/X1*X1".into(),
        (&(&x1s * x1) - &(x1 * &x1s).scale(&qp(1))).scale(&quarter),
        el("q^(-2)(1 - q^2)(q^(1/2) x3 x1* x2 x0* - x2 x2* x1 x1* + q^(1/2) x0 x2* x1 x3* \
            - x1 x1* x2 x2* - q^2 x3 x0* x0 x3* + q x1 x2* x2 x1*)")?,
    ));
    out.push((
        "item6/X2*X2".into(),
        (&x2s * x2).scale(&quarter),
        el("q^2 x3 x0* x0 x3* - q^(1/2) x3 x1* x2 x0* - q^(1/2) x0 x2* x1 x3* + q x1 x2* x2 x1*")?,
    ));
    out.push((
        "item6/combination".into(),
        (&(&(&x1s * x1) - &(x1 * &x1s).scale(&qp(1))) + &(&x2s * x2).scale(&(&qp(-2) * &omq2))).scale(&quarter),
        el(&format!("q^(-2)(1 - q^2)({})", ITEM_FINAL[5]))?,
    ));
    out.push((
        "item7/X1X1*".into(),
        (x1 * &x1s).scale(&quarter),
        el("q^(-1) x3 x1* x1 x3* + q^(-1/2) x0 x2* x1 x3* + q^(-1/2) x3 x1* x2 x0* + x0 x2* x2 x0*")?,
    ));
    out.push((
        "item7/X2X2*".into(),
        (x2 * &x2s).scale(&quarter),
        el("q^2 x0 x3* x3 x0* - q^(3/2) x0 x3* x1 x2* - q^(3/2) x2 x1* x3 x0* + q x2 x1* x1 x2*")?,
    ));
    out.push((
        "item7/one-minus-X0-squared".into(),
        (&Element::one() - &(x0 * x0)).scale(&quarter),
        el("x0 x0* x2 x2* + x0 x0* x3 x3* + x1 x1* x2 x2* + x1 x1* x3 x3*")?,
    ));
    let sphere = &(&(&(x1 * &x1s).scale(&qp(1)) + &(x2 * &x2s).scale(&qp(-1))) + &(x0 * x0)) - &Element::one();
    out.push(("item7/sphere".into(), sphere.scale(&quarter), el(&format!("q^(-3/2)(1 - q^2)^2 ({})", ITEM_FINAL[6]))?));
    Ok(out)
}

/// Every identity of the appendix derivation: the cubic relations, the
/// quartic monomial identities of items 1 to 6, the stated expansions, and
/// the vanishing of each item's final expression.
pub fn verify_appendix() -> Result<Report> {
    let d = Decider::new()?;
    let pres = &d.pres;
    let inv = InvariantSet::new(pres)?;
    let mut checks = Vec::new();
    for (k, (l, r)) in CUBIC_SIMPLE.iter().enumerate() {
        checks.push(text_check(&d, format!("appendix/cubic-simple/{}", k + 1), l, r)?);
    }
    for (k, (l, r)) in CUBIC_TRICKY.iter().enumerate() {
        checks.push(text_check(&d, format!("appendix/cubic-tricky/{}", k + 1), l, r)?);
    }
    for (item, list) in QUARTIC.iter().enumerate() {
        for (k, (l, r)) in list.iter().enumerate() {
            checks.push(text_check(&d, format!("appendix/item{}/quartic/{}", item + 1, k + 1), l, r)?);
        }
    }
    for (id, l, r) in item_expansions(&inv, pres)? {
        checks.push(residual_check(&d, format!("appendix/{id}"), &l, &r)?);
    }
    for (k, e) in ITEM_FINAL.iter().enumerate() {
        checks.push(text_check(&d, format!("appendix/item{}/final", k + 1), e, "0")?);
    }
    Ok(Report::new("appendix/S7q", symbolic(), checks))
}

/// `Ψ(X_i) = X_i ⊗ 1` for `i = 0, 1, 2`, and the same for `X_1^*, X_2^*`.
pub fn verify_x_coinvariance(spec: &CoactionSpec) -> Result<Report> {
    let pres = preset_bl();
    let inv = InvariantSet::new(&pres)?;
    let mut checks = Vec::new();
    for (k, x) in inv.x.iter().enumerate() {
        let r = coinvariant_residual(spec, &pres, x)?;
        checks.push(Check::from_residual(format!("coinvariant/X{k}"), r.len()));
        let r = coinvariant_residual(spec, &pres, &x.adjoint())?;
        checks.push(Check::from_residual(format!("coinvariant/X{k}*"), r.len()));
    }
    Ok(Report::new("coinvariants/X", symbolic(), checks))
}

/// `Ψ'(Y_i) = Y_i ⊗ 1` for `i = 0, 1, 2` and the adjoints.
pub fn verify_y_coinvariance(spec: &CoactionSpec) -> Result<Report> {
    let pres = preset_bl();
    let inv = InvariantSet::new(&pres)?;
    let mut checks = Vec::new();
    for (k, y) in inv.y.iter().enumerate() {
        let r = coinvariant_residual(spec, &pres, y)?;
        checks.push(Check::from_residual(format!("coinvariant/Y{k}"), r.len()));
        let r = coinvariant_residual(spec, &pres, &y.adjoint())?;
        checks.push(Check::from_residual(format!("coinvariant/Y{k}*"), r.len()));
    }
    Ok(Report::new("coinvariants/Y", symbolic(), checks))
}

/// `Y_0` under the first family, reported without a claim: the residual
/// and its display.
pub fn y0_under_bl_a() -> Result<(TensorElement, String)> {
    let pres = preset_bl();
    let inv = InvariantSet::new(&pres)?;
    let r = coinvariant_residual(&families::bl_a(), &pres, &inv.y[0])?;
    let h = Hopf::new();
    let shown = r.display(&[&pres.generator_names, &h.presentation().generator_names]);
    Ok((r, shown))
}

/// One lifted canonical-map input and the image it should have.
#[derive(Clone, Debug)]
pub struct WitnessPair {
    pub id: String,
    pub input: TensorElement,
    pub expected: TensorElement,
}

/// `x ⊗ y ↦ x·Ψ(y)`, normalized in `A ⊗ H`.
pub fn lifted_canonical_map(spec: &CoactionSpec, pres: &Presentation, input: &TensorElement) -> Result<TensorElement> {
    if input.arity() != 2 {
        return Err(Error::Invalid("canonical map input must have two slots".into()));
    }
    let mut acc = TensorElement::zero(2);
    for (words, c) in input.terms() {
        let left = TensorElement::term(c.clone(), vec![words[0].clone(), Vec::new()]);
        acc = &acc + &(&left * &spec.psi_word(&words[1]));
    }
    acc.normalize(&[pres, Hopf::new().presentation()])
}

fn formal(pres: &Presentation, parts: &[(Scalar, &str, &str)]) -> Result<TensorElement> {
    let mut acc = TensorElement::zero(2);
    for (c, x, y) in parts {
        acc = &acc + &TensorElement::tensor(&[&pres.element(x)?, &pres.element(y)?]).scale(c);
    }
    Ok(acc)
}

/// The four witness inputs and their expected images `1⊗a`, `1⊗a^*`,
/// `ω̄⊗b`, `−qω⊗b^*`.
pub fn witness_pairs(pres: &Presentation) -> Result<Vec<WitnessPair>> {
    let one = Scalar::one();
    let q = Scalar::q();
    let q2 = Param::Q.pow(2);
    let mq = -&q;
    let h = |c: Scalar, l| TensorElement::term(c, vec![Vec::new(), vec![l]]);
    Ok(vec![
        WitnessPair {
            id: "a".into(),
            input: formal(
                pres,
                &[
                    (q2.clone(), "x0*", "x0"),
                    (one.clone(), "x1*", "x1"),
                    (q2.clone(), "x2*", "x2"),
                    (one.clone(), "x3*", "x3"),
                ],
            )?,
            expected: h(one.clone(), HA),
        },
        WitnessPair {
            id: "a*".into(),
            input: formal(
                pres,
                &[
                    (one.clone(), "x0", "x0*"),
                    (one.clone(), "x1", "x1*"),
                    (one.clone(), "x2", "x2*"),
                    (one.clone(), "x3", "x3*"),
                ],
            )?,
            expected: h(one.clone(), HA_STAR),
        },
        WitnessPair {
            id: "b".into(),
            input: formal(
                pres,
                &[
                    (one.clone(), "x1*", "x0*"),
                    (mq.clone(), "x0*", "x1*"),
                    (one.clone(), "x3*", "x2*"),
                    (mq.clone(), "x2*", "x3*"),
                ],
            )?,
            expected: h(Scalar::w().conj(), HB),
        },
        WitnessPair {
            id: "b*".into(),
            input: formal(
                pres,
                &[
                    (one.clone(), "x0", "x1"),
                    (mq.clone(), "x1", "x0"),
                    (one.clone(), "x2", "x3"),
                    (mq.clone(), "x3", "x2"),
                ],
            )?,
            expected: h(&mq * &Scalar::w(), HB_STAR),
        },
    ])
}

/// Evaluates the lifted canonical map on the four witnesses and compares
/// with the expected images; also checks that each image's scalar is
/// invertible.
pub fn canonical_map_witnesses(spec: &CoactionSpec) -> Result<Report> {
    let pres = preset_bl();
    let mut checks = Vec::new();
    for wp in witness_pairs(&pres)? {
        let image = lifted_canonical_map(spec, &pres, &wp.input)?;
        checks.push(Check::from_residual(format!("canonical/{}", wp.id), (&image - &wp.expected).len()));
        let invertible = wp.expected.terms().all(|(_, c)| c.inverse().is_some());
        checks.push(Check::flag(format!("canonical/{}/invertible", wp.id), invertible));
    }
    Ok(Report::new("canonical/S7q", symbolic(), checks))
}

/// Linear dependencies among `1`, the given elements, those adjoints that
/// differ from them, and all their pairwise products, at `q = t²`. Returns the labels of the
/// spanning elements and a basis of the dependencies as coefficient vectors
/// over them.
pub fn quadratic_dependencies(
    d: &Decider,
    gens: &[(String, Element)],
    t: &Rational,
) -> Result<(Vec<String>, Vec<Vec<GaussRational>>)> {
    let mut base: Vec<(String, Element)> = Vec::new();
    for (name, e) in gens {
        base.push((name.clone(), e.clone()));
        let adj = e.adjoint();
        if d.residual_terms(&(e - &adj))? != 0 {
            base.push((format!("{name}*"), adj));
        }
    }
    let mut labels = vec!["1".to_string()];
    let mut elems = vec![Element::one()];
    for (n, e) in &base {
        labels.push(n.clone());
        elems.push(e.clone());
    }
    for (n1, e1) in &base {
        for (n2, e2) in &base {
            labels.push(format!("{n1}·{n2}"));
            elems.push(e1 * e2);
        }
    }
    let t = GaussRational::real(t.clone());
    let mut columns = Vec::new();
    for e in &elems {
        let nf = d.field().normalize(&field_element(&d.pres.normalize(e)?)?)?;
        let mut col = BTreeMap::new();
        for (w, c) in nf {
            let v = c.eval(&t).ok_or_else(|| Error::InvalidPoint(format!("a coefficient has a pole at t = {t}")))?;
            if !v.is_zero() {
                col.insert(w, v);
            }
        }
        columns.push(col);
    }
    Ok((labels, null_space(&columns)))
}

/// Dependencies among degree-two expressions in `Y_i, Y_i^*`, rendered as
/// text; the relations these elements satisfy are not known in closed
/// form, so this is a report, not a check.
pub fn y_relation_probe(t: &Rational) -> Result<Vec<String>> {
    let d = Decider::new()?;
    let inv = InvariantSet::new(&d.pres)?;
    let gens: Vec<(String, Element)> = inv.y.iter().enumerate().map(|(k, y)| (format!("Y{k}"), y.clone())).collect();
    let (labels, deps) = quadratic_dependencies(&d, &gens, t)?;
    Ok(deps.iter().map(|v| render_dependency(&labels, v)).collect())
}

fn render_dependency(labels: &[String], v: &[GaussRational]) -> String {
    let parts: Vec<String> =
        labels.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(l, c)| format!("({c})·{l}")).collect();
    format!("{} = 0", parts.join(" + "))
}

/// Basis of the kernel of the matrix whose columns are the given sparse
/// vectors, by Gaussian elimination.
fn null_space(columns: &[BTreeMap<Word, GaussRational>]) -> Vec<Vec<GaussRational>> {
    let rows: Vec<Word> = {
        let mut r: Vec<_> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
        r.sort();
        r.dedup();
        r
    };
    let n = columns.len();
    let mut m: Vec<Vec<GaussRational>> = rows
        .iter()
        .map(|w| columns.iter().map(|c| c.get(w).cloned().unwrap_or_else(GaussRational::zero)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![GaussRational::zero(); n];
            v[f] = GaussRational::from_int(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}
