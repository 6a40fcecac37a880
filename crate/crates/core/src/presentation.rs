//! Presentations of *-algebras by generators and oriented relations.
//!
//! Built-in presets cover `A(SU_q(2))`, the odd Vaksman–Soibelman spheres
//! `A(S^{2m+1}_p)` and the quaternionic sphere `O(S^7_q)`. User presentations
//! are read from a small line-oriented text format:
//!
//! ```text
//! algebra S3
//! params q
//! generators a b
//! order a b b* a*          # optional, ascending precedence
//! relation b a = q a b
//! identity a a* + b b* = 1 # extra consequence checked by tests
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ncpoly::{format_word, orient, CriticalPair, Element, Letter, RewriteRule, RewriteSystem, TermOrder};
use crate::report::{Check, Params, Report};
use crate::scalar::Scalar;
use crate::syntax::{lex, syntax_err, Context, Parser, Tok};

/// Which deformation parameter a preset is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    /// `q = t^2`.
    Q,
    /// `p = u^2`.
    P,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::P => "p",
        }
    }

    /// `param^k` as a scalar.
    pub fn pow(self, k: i32) -> Scalar {
        match self {
            Param::Q => Scalar::q_pow(k),
            Param::P => Scalar::p_pow(k),
        }
    }

    /// `param^(k/2)` as a scalar.
    pub fn half_pow(self, k: i32) -> Scalar {
        match self {
            Param::Q => Scalar::t_pow(k),
            Param::P => Scalar::u_pow(k),
        }
    }
}

const RESERVED: [&str; 5] = ["q", "p", "w", "i", "sqrt"];

/// An algebra given by generators and a star-closed, oriented rewrite system.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub generator_names: Vec<String>,
    /// Parameters the relations may mention, a subset of `q`, `p`, `w`.
    pub params: Vec<String>,
    /// Defining relations as written, before star closure.
    pub base_rules: Vec<RewriteRule>,
    /// Further displayed relations that should hold; not used for rewriting.
    pub identities: Vec<(Element, Element)>,
    system: RewriteSystem,
}

impl PartialEq for Presentation {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name
            && self.generator_names == o.generator_names
            && self.params == o.params
            && self.base_rules == o.base_rules
            && self.identities == o.identities
            && self.system.rules() == o.system.rules()
            && self.system.order() == o.system.order()
    }
}

impl Presentation {
    /// Assembles a presentation, adding adjoints of the base rules.
    pub fn new(
        name: impl Into<String>,
        generator_names: Vec<String>,
        params: Vec<String>,
        order: TermOrder,
        base_rules: Vec<RewriteRule>,
        identities: Vec<(Element, Element)>,
    ) -> Result<Self> {
        let n = generator_names.len();
        let closed = close_rules(&order, &base_rules)?;
        let system = RewriteSystem::new(n, order, closed)?;
        Ok(Presentation { name: name.into(), generator_names, params, base_rules, identities, system })
    }

    /// Like [`Presentation::new`] but skips the orientation check, for
    /// deliberately broken test presentations.
    pub fn new_unchecked(
        name: impl Into<String>,
        generator_names: Vec<String>,
        params: Vec<String>,
        order: TermOrder,
        base_rules: Vec<RewriteRule>,
    ) -> Result<Self> {
        let n = generator_names.len();
        let closed = close_rules_as_given(&base_rules)?;
        let system = RewriteSystem::new_unchecked(n, order, closed)?;
        Ok(Presentation { name: name.into(), generator_names, params, base_rules, identities: Vec::new(), system })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn order(&self) -> &TermOrder {
        self.system.order()
    }

    /// All rules after star closure.
    pub fn rules(&self) -> &[RewriteRule] {
        self.system.rules()
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    /// Replaces the rewrite system's step budget.
    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.system = self.system.with_fuel(fuel);
        self
    }

    pub fn with_decrease_check(mut self, on: bool) -> Self {
        self.system = self.system.with_decrease_check(on);
        self
    }

    /// Nonzero critical-pair residuals up to `degree_cap`.
    pub fn nonconfluent_pairs(&self, degree_cap: usize) -> Result<Vec<CriticalPair>> {
        Ok(self.system.critical_pairs(degree_cap)?.into_iter().filter(|p| !p.residual.is_zero()).collect())
    }

    /// Returns `self` if confluent up to the default cap; otherwise adds the
    /// oriented residuals as rules once and fails if that does not suffice.
    pub fn complete_once(&self) -> Result<Presentation> {
        if self.nonconfluent_pairs(COMPLETION_DEGREE_CAP)?.is_empty() {
            return Ok(self.clone());
        }
        let system = self.system.complete_once(COMPLETION_DEGREE_CAP)?;
        Ok(Presentation { system, ..self.clone() })
    }

    pub fn normalize(&self, e: &Element) -> Result<Element> {
        self.system.normalize(e)
    }

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        self.system.equal(a, b)
    }

    /// Parses an element written with this presentation's generator names.
    pub fn element(&self, text: &str) -> Result<Element> {
        crate::syntax::parse_element(text, &self.generator_names, &self.params)
    }

    /// Looks up a letter by generator name, e.g. `x3` or `x3*`.
    pub fn letter(&self, name: &str) -> Option<Letter> {
        let (base, star) = match name.strip_suffix('*') {
            Some(b) => (b, true),
            None => (name, false),
        };
        let k = self.generator_names.iter().position(|g| g == base)?;
        Some(Letter { index: k as u16, star })
    }

    pub fn display(&self, e: &Element) -> String {
        e.display(&self.generator_names)
    }

    /// Base rules and identities as `(lhs, rhs)` pairs that must be equal.
    pub fn displayed_relations(&self) -> Vec<(Element, Element)> {
        let mut out: Vec<(Element, Element)> =
            self.base_rules.iter().map(|r| (Element::word(r.lhs.clone()), r.rhs.clone())).collect();
        out.extend(self.identities.iter().cloned());
        out
    }

    /// Text form accepted by [`parse_presentation`].
    pub fn to_dsl(&self) -> String {
        let names = &self.generator_names;
        let mut s = String::new();
        writeln!(s, "algebra {}", self.name).unwrap();
        if !self.params.is_empty() {
            writeln!(s, "params {}", self.params.join(" ")).unwrap();
        }
        writeln!(s, "generators {}", names.join(" ")).unwrap();
        if *self.order() != TermOrder::standard(names.len()) {
            writeln!(s, "order {}", format_word(&self.order().precedence(), names)).unwrap();
        }
        for r in &self.base_rules {
            writeln!(s, "relation {} = {}", format_word(&r.lhs, names), r.rhs.display(names)).unwrap();
        }
        for (l, r) in &self.identities {
            writeln!(s, "identity {} = {}", l.display(names), r.display(names)).unwrap();
        }
        s
    }
}

/// Adds the oriented adjoint of every rule. Adjoints that coincide with an
/// existing rule are skipped; an adjoint whose leading word is already the
/// lhs of a different rule is an error.
fn close_rules(order: &TermOrder, rules: &[RewriteRule]) -> Result<Vec<RewriteRule>> {
    let mut out: Vec<RewriteRule> = rules.to_vec();
    for r in rules {
        let adj = r.as_relation().adjoint();
        let oriented = orient(order, &adj)?;
        match out.iter().find(|x| x.lhs == oriented.lhs) {
            Some(x) if *x == oriented => {}
            Some(_) => {
                return Err(Error::NotOrientable(format!(
                    "adjoint of rule for {:?} conflicts with an existing rule",
                    r.lhs
                )))
            }
            None => out.push(oriented),
        }
    }
    Ok(out)
}

/// Adjoint closure that keeps each rule's orientation: `l -> r` gains
/// `l^* -> r^*` whatever the term order says.
fn close_rules_as_given(rules: &[RewriteRule]) -> Result<Vec<RewriteRule>> {
    let mut out: Vec<RewriteRule> = rules.to_vec();
    for r in rules {
        let lhs = Element::term(Scalar::one(), r.lhs.clone()).adjoint();
        let (word, _) = lhs.terms().next().expect("a single term");
        let adj = RewriteRule::new(word.clone(), r.rhs.adjoint());
        match out.iter().find(|x| x.lhs == adj.lhs) {
            Some(x) if *x == adj => {}
            Some(_) => {
                return Err(Error::NotOrientable(format!(
                    "adjoint of rule for {:?} conflicts with an existing rule",
                    r.lhs
                )))
            }
            None => out.push(adj),
        }
    }
    Ok(out)
}

/// Adds adjoints of all rules to a presentation. Idempotent.
pub fn star_closure(pres: &Presentation) -> Result<Presentation> {
    let closed = close_rules(pres.order(), pres.rules())?;
    let system =
        RewriteSystem::new(pres.generator_count(), pres.order().clone(), closed)?.with_fuel(pres.system.fuel());
    Ok(Presentation { system, ..pres.clone() })
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn w(letters: &[(u16, bool)]) -> Vec<Letter> {
    letters.iter().map(|&(index, star)| Letter { index, star }).collect()
}

fn el(c: Scalar, letters: &[(u16, bool)]) -> Element {
    Element::term(c, w(letters))
}

/// Defining relations of the odd sphere with generators `z_0..z_m`.
fn vs_rules(m: usize, param: Param) -> Vec<RewriteRule> {
    let n = m as u16;
    let mut rules = Vec::new();
    // z_j z_i = p z_i z_j for i < j
    for j in 0..=n {
        for i in 0..j {
            rules.push(RewriteRule::new(w(&[(j, false), (i, false)]), el(param.pow(1), &[(i, false), (j, false)])));
        }
    }
    // z_i^* z_j = p z_j z_i^* for i != j
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                rules.push(RewriteRule::new(w(&[(i, true), (j, false)]), el(param.pow(1), &[(j, false), (i, true)])));
            }
        }
    }
    // z_i^* z_i = z_i z_i^* + (1 - p^2) sum_{j > i} z_j z_j^*
    let one_minus = &Scalar::one() - &param.pow(2);
    for i in 0..=n {
        let mut rhs = el(Scalar::one(), &[(i, false), (i, true)]);
        for j in i + 1..=n {
            rhs = &rhs + &el(one_minus.clone(), &[(j, false), (j, true)]);
        }
        rules.push(RewriteRule::new(w(&[(i, true), (i, false)]), rhs));
    }
    // z_m z_m^* = 1 - sum_{j < m} z_j z_j^*
    let mut rhs = Element::one();
    for j in 0..n {
        rhs = &rhs - &el(Scalar::one(), &[(j, false), (j, true)]);
    }
    rules.push(RewriteRule::new(w(&[(n, false), (n, true)]), rhs));
    rules
}

/// `A(S^{2m+1}_p)`: generators `z0..zm` over the parameter `p`.
pub fn preset_vs(m: usize) -> Result<Presentation> {
    preset_vs_over(m, Param::P)
}

/// The odd sphere written in either deformation parameter; over `q` and with
/// `m = 1` this is literally the rewrite system of [`preset_suq2`].
pub fn preset_vs_over(m: usize, param: Param) -> Result<Presentation> {
    if m < 1 {
        return Err(Error::Invalid(format!("sphere dimension parameter m must be at least 1, got {m}")));
    }
    let n = m + 1;
    let suffix = if param == Param::Q { "-q" } else { "" };
    Presentation::new(
        format!("VS{}{suffix}", 2 * m + 1),
        names("z", n),
        vec![param.name().to_string()],
        TermOrder::standard(n),
        vs_rules(m, param),
        Vec::new(),
    )
}

/// The odd sphere with the sphere relation solved for `z_0 z_0^*` instead of
/// `z_m z_m^*`, keeping the standard order. Not terminating in general and
/// not confluent; used to exercise the confluence audit.
pub fn preset_vs_misoriented(m: usize) -> Result<Presentation> {
    if m < 1 {
        return Err(Error::Invalid(format!("sphere dimension parameter m must be at least 1, got {m}")));
    }
    let n = m + 1;
    let mut rules = vs_rules(m, Param::P);
    let mut rhs = Element::one();
    for j in 1..n as u16 {
        rhs = &rhs - &el(Scalar::one(), &[(j, false), (j, true)]);
    }
    *rules.last_mut().expect("sphere rule") = RewriteRule::new(w(&[(0, false), (0, true)]), rhs);
    Presentation::new_unchecked(
        format!("VS{}-misoriented", 2 * m + 1),
        names("z", n),
        vec!["p".into()],
        TermOrder::standard(n),
        rules,
    )
}

/// `A(SU_q(2))` with `a = index 0`, `b = index 1`.
pub fn preset_suq2() -> Presentation {
    let q = Param::Q;
    let rules = vs_rules(1, q);
    let a = |s| Letter { index: 0, star: s };
    let b = |s| Letter { index: 1, star: s };
    let e = |ls: &[Letter]| Element::word(ls.to_vec());
    let qs = |k| Element::scalar(Scalar::q_pow(k));
    let identities = vec![
        (e(&[b(false), a(false)]), &qs(1) * &e(&[a(false), b(false)])),
        (e(&[b(true), a(false)]), &qs(1) * &e(&[a(false), b(true)])),
        (e(&[b(false), b(true)]), e(&[b(true), b(false)])),
        (&e(&[a(true), a(false)]) + &(&qs(2) * &e(&[b(true), b(false)])), Element::one()),
        (&e(&[a(false), a(true)]) + &e(&[b(false), b(true)]), Element::one()),
    ];
    Presentation::new("SUq2", vec!["a".into(), "b".into()], vec!["q".into()], TermOrder::standard(2), rules, identities)
        .expect("built-in SU_q(2) presentation is orientable")
}

/// `O(S^7_q)` with generators `x0..x3` in two pairs.
pub fn preset_bl() -> Presentation {
    let q = Param::Q;
    let one = Scalar::one();
    let omq2 = &one - &q.pow(2);
    let x = |i: u16| (i, false);
    let xs = |i: u16| (i, true);
    let mut rules = Vec::new();
    for (lo, hi) in [(0u16, 1u16), (2, 3)] {
        rules.push(RewriteRule::new(w(&[x(hi), x(lo)]), el(q.pow(-1), &[x(lo), x(hi)])));
        rules.push(RewriteRule::new(w(&[xs(hi), x(lo)]), el(q.pow(1), &[x(lo), xs(hi)])));
        rules.push(RewriteRule::new(w(&[xs(lo), x(lo)]), el(one.clone(), &[x(lo), xs(lo)])));
        rules.push(RewriteRule::new(
            w(&[xs(hi), x(hi)]),
            &el(one.clone(), &[x(hi), xs(hi)]) + &el(omq2.clone(), &[x(lo), xs(lo)]),
        ));
    }
    let half = |k| q.half_pow(k);
    rules.push(RewriteRule::new(w(&[x(2), x(0)]), el(half(1), &[x(0), x(2)])));
    rules.push(RewriteRule::new(w(&[x(3), x(0)]), el(half(-1), &[x(0), x(3)])));
    rules.push(RewriteRule::new(w(&[x(2), x(1)]), el(half(1), &[x(1), x(2)])));
    rules.push(RewriteRule::new(w(&[x(3), x(1)]), el(half(-1), &[x(1), x(3)])));
    rules.push(RewriteRule::new(w(&[xs(2), x(0)]), el(half(1), &[x(0), xs(2)])));
    rules.push(RewriteRule::new(
        w(&[xs(3), x(0)]),
        &el(half(-1), &[x(0), xs(3)]) - &el(&q.pow(-1) * &omq2, &[x(2), xs(1)]),
    ));
    rules.push(RewriteRule::new(w(&[xs(2), x(1)]), el(half(1), &[x(1), xs(2)])));
    rules.push(RewriteRule::new(w(&[xs(3), x(1)]), &el(half(-1), &[x(1), xs(3)]) + &el(omq2.clone(), &[x(2), xs(0)])));
    let mut sphere = Element::one();
    for j in 0..3 {
        sphere = &sphere - &el(one.clone(), &[x(j), xs(j)]);
    }
    rules.push(RewriteRule::new(w(&[x(3), xs(3)]), sphere));
    // second displayed form of the sphere relation
    let mut alt = Element::zero();
    for (i, c) in [(0u16, q.pow(2)), (1, one.clone()), (2, q.pow(2)), (3, one.clone())] {
        alt = &alt + &el(c, &[xs(i), x(i)]);
    }
    Presentation::new(
        "S7q",
        names("x", 4),
        vec!["q".into()],
        TermOrder::standard(4),
        rules,
        vec![(alt, Element::one())],
    )
    .expect("built-in quaternionic sphere presentation is orientable")
}

/// Default degree cap for confluence checks of parsed presentations.
pub const COMPLETION_DEGREE_CAP: usize = 5;

/// Parses the presentation text format and star-closes the relations.
///
/// Confluence is not checked here; see [`Presentation::complete_once`].
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    parse(text, true)
}

/// Like [`parse_presentation`] but accepts relations whose left side does
/// not exceed the right side, for deliberately broken fixtures.
pub fn parse_presentation_unchecked(text: &str) -> Result<Presentation> {
    parse(text, false)
}

fn parse(text: &str, checked: bool) -> Result<Presentation> {
    let mut name = None;
    let mut params: Vec<String> = Vec::new();
    let mut gens: Option<Vec<String>> = None;
    let mut order_line: Option<(usize, Vec<Letter>)> = None;
    let mut rules = Vec::new();
    let mut identities = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - trimmed.len();
        let (kw, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = indent + kw.len() + 1;
        // pad so token columns refer to the original line
        let padded = format!("{}{}", " ".repeat(rest_col), rest);
        if kw == "algebra" {
            // names may contain `-`, so they are read raw rather than lexed
            let n = rest.trim();
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
            if !valid {
                return Err(syntax_err(line, rest_col + 1, "expected a single algebra name"));
            }
            name = Some(n.to_string());
            continue;
        }
        let toks = lex(&padded, line)?;
        let end = (line, raw.chars().count() + 1);
        match kw {
            "params" => {
                for t in &toks {
                    match &t.tok {
                        Tok::Ident(s) if ["q", "p", "w"].contains(&s.as_str()) => params.push(s.clone()),
                        Tok::Ident(s) => return Err(Error::UnknownParameter(s.clone())),
                        _ => return Err(syntax_err(line, t.col, "expected a parameter name")),
                    }
                }
            }
            "generators" => {
                let mut g: Vec<String> = Vec::new();
                for t in &toks {
                    match &t.tok {
                        Tok::Ident(s) if RESERVED.contains(&s.as_str()) => {
                            return Err(syntax_err(
                                line,
                                t.col,
                                format!("`{s}` is reserved and cannot name a generator"),
                            ))
                        }
                        Tok::Ident(s) if g.contains(s) => return Err(Error::DuplicateGenerator(s.clone())),
                        Tok::Ident(s) => g.push(s.clone()),
                        _ => return Err(syntax_err(line, t.col, "expected a generator name")),
                    }
                }
                if g.is_empty() {
                    return Err(syntax_err(line, rest_col, "expected at least one generator"));
                }
                gens = Some(g);
            }
            "order" => {
                let g = gens.as_ref().ok_or_else(|| syntax_err(line, 1, "`order` must follow `generators`"))?;
                let mut letters = Vec::new();
                let mut it = toks.iter().peekable();
                while let Some(t) = it.next() {
                    let Tok::Ident(s) = &t.tok else {
                        return Err(syntax_err(line, t.col, "expected a generator name"));
                    };
                    let index = g
                        .iter()
                        .position(|x| x == s)
                        .ok_or_else(|| syntax_err(line, t.col, format!("unknown generator `{s}`")))?;
                    let star = matches!(it.peek().map(|t| &t.tok), Some(Tok::Star { adjacent: true }));
                    if star {
                        it.next();
                    }
                    letters.push(Letter { index: index as u16, star });
                }
                order_line = Some((line, letters));
            }
            "relation" | "identity" => {
                let g = gens.as_ref().ok_or_else(|| syntax_err(line, 1, format!("`{kw}` must follow `generators`")))?;
                let ctx = Context { generators: g, params: &params };
                let mut p = Parser::new(&toks, &ctx, end);
                let lhs = p.expr()?;
                p.expect(&Tok::Eq, "`=`")?;
                let rhs = p.expr()?;
                if !p.at_end() {
                    return Err(p.err("unexpected trailing input"));
                }
                if kw == "identity" {
                    identities.push((lhs, rhs));
                } else {
                    rules.push((line, lhs, rhs));
                }
            }
            _ => return Err(syntax_err(line, indent + 1, format!("unknown directive `{kw}`"))),
        }
    }

    let gens = gens.ok_or_else(|| syntax_err(1, 1, "missing `generators` line"))?;
    let n = gens.len();
    let order = match order_line {
        Some((line, ls)) => TermOrder::from_precedence(n, &ls).map_err(|e| syntax_err(line, 1, e.to_string()))?,
        None => TermOrder::standard(n),
    };
    let mut base = Vec::new();
    for (line, lhs, rhs) in rules {
        base.push(orient_relation(&order, &lhs, &rhs, &gens, checked).map_err(|e| match e {
            Error::NotOrientable(m) => Error::NotOrientable(format!("line {line}: {m}")),
            other => other,
        })?);
    }
    let name = name.unwrap_or_else(|| "unnamed".into());
    if checked {
        Presentation::new(name, gens, params, order, base, identities)
    } else {
        let mut p = Presentation::new_unchecked(name, gens, params, order, base)?;
        p.identities = identities;
        Ok(p)
    }
}

/// Orients `lhs = rhs` where `lhs` is a single term with invertible
/// coefficient that exceeds every word of `rhs`.
fn orient_relation(
    order: &TermOrder,
    lhs: &Element,
    rhs: &Element,
    names: &[String],
    checked: bool,
) -> Result<RewriteRule> {
    let mut it = lhs.terms();
    let (lw, lc) = match (it.next(), it.next()) {
        (Some(t), None) => t,
        _ => return Err(Error::NotOrientable("left-hand side must be a single term".into())),
    };
    if lw.is_empty() {
        return Err(Error::NotOrientable("left-hand side must contain a generator".into()));
    }
    let inv =
        lc.inverse().ok_or_else(|| Error::NotOrientable(format!("left-hand coefficient {lc} is not invertible")))?;
    for (rw, _) in rhs.terms().filter(|_| checked) {
        if order.cmp_words(rw, lw) != std::cmp::Ordering::Less {
            return Err(Error::NotOrientable(format!(
                "`{}` does not exceed `{}`",
                format_word(lw, names),
                format_word(rw, names)
            )));
        }
    }
    Ok(RewriteRule::new(lw.clone(), rhs.scale(&inv)))
}

/// Every base relation and identity of `pres`, checked with `equal`.
pub fn identity_report(pres: &Presentation) -> Result<Report> {
    let mut checks = Vec::new();
    let n_rules = pres.base_rules.len();
    for (k, (l, r)) in pres.displayed_relations().iter().enumerate() {
        let id = if k < n_rules {
            format!("{}/relation{:02}", pres.name, k + 1)
        } else {
            format!("{}/identity{:02}", pres.name, k + 1 - n_rules)
        };
        checks.push(Check::from_residual(id, pres.normalize(&(l - r))?.len()));
    }
    Ok(Report::new(format!("presentations/{}", pres.name), Params::default(), checks))
}

/// The built-in presets: `SU_q(2)`, the spheres for `m = 1..=3` and the
/// quaternionic sphere.
pub fn builtin_presets() -> Result<Vec<Presentation>> {
    let mut out = vec![preset_suq2()];
    for m in 1..=3 {
        out.push(preset_vs(m)?);
    }
    out.push(preset_bl());
    Ok(out)
}

/// Identity reports of all built-in presets, merged; `fuel` bounds each
/// normalization.
pub fn presentation_suite(fuel: u64) -> Result<Report> {
    let parts =
        builtin_presets()?.into_iter().map(|p| identity_report(&p.with_fuel(fuel))).collect::<Result<Vec<_>>>()?;
    Ok(Report::merge("presentations", Params::default(), parts))
}

/// One check per nonconfluent critical pair up to `degree_cap`, or a
/// single passing check if there are none.
pub fn confluence_report(pres: &Presentation, degree_cap: usize) -> Result<Report> {
    let pairs = pres.nonconfluent_pairs(degree_cap)?;
    let checks = if pairs.is_empty() {
        vec![Check::flag(format!("{}/confluent", pres.name), true)]
    } else {
        pairs
            .iter()
            .map(|p| {
                let id = format!("{}/pair/{}", pres.name, format_word(&p.word, &pres.generator_names));
                Check::from_residual(id, p.residual.len())
            })
            .collect()
    };
    Ok(Report::new(format!("confluence/{}", pres.name), Params::default(), checks))
}

/// Confluence of all built-in presets; the misoriented sphere is expected
/// to show a residual, so its check passes when one is found.
pub fn confluence_suite(degree_cap: usize, fuel: u64) -> Result<Report> {
    let mut parts = Vec::new();
    for p in builtin_presets()? {
        parts.push(confluence_report(&p.with_fuel(fuel), degree_cap)?);
    }
    let bad = preset_vs_misoriented(1)?.with_fuel(fuel);
    let found = !bad.nonconfluent_pairs(degree_cap)?.is_empty();
    parts.push(Report::new(
        "confluence/misoriented",
        Params::default(),
        vec![Check::flag(format!("{}/residual-detected", bad.name), found)],
    ));
    Ok(Report::merge("confluence", Params::default(), parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_counts() {
        let vs3 = preset_vs(3).unwrap();
        assert_eq!(vs3.base_rules.len(), 23);
        assert_eq!(vs3.rules().len(), 29);
        assert_eq!(preset_vs(1).unwrap().rules().len(), 7);
        assert_eq!(preset_suq2().rules().len(), 7);
        let bl = preset_bl();
        assert_eq!(bl.base_rules.len(), 17);
        assert_eq!(bl.rules().len(), 29);
    }

    #[test]
    fn vs1_over_q_is_suq2() {
        let vs = preset_vs_over(1, Param::Q).unwrap();
        assert_eq!(vs.rules(), preset_suq2().rules());
    }

    #[test]
    fn vs_over_p_agrees_with_q_form_after_identifying_parameters() {
        let p = preset_vs(1).unwrap();
        let q = preset_vs_over(1, Param::Q).unwrap();
        for (a, b) in p.rules().iter().zip(q.rules()) {
            assert_eq!(a.lhs, b.lhs);
            let mapped = a.rhs.map_coeffs(|c| Ok(c.u_to_t())).unwrap();
            assert_eq!(mapped, b.rhs);
        }
    }

    #[test]
    fn star_closure_adds_expected_bl_rule() {
        let bl = preset_bl();
        let lhs = vec![Letter::starred(0), Letter::plain(3)];
        let rule = bl.rules().iter().find(|r| r.lhs == lhs).expect("closure rule");
        let expect = bl.element("q^(-1/2) x3 x0* - q^-1 (1 - q^2) x1 x2*").unwrap();
        assert_eq!(rule.rhs, expect);
        let again = star_closure(&bl).unwrap();
        assert_eq!(again.rules(), bl.rules());
    }

    #[test]
    fn star_closure_of_plane() {
        let gens = vec!["z0".to_string(), "z1".to_string()];
        let rule =
            RewriteRule::new(vec![Letter::plain(1), Letter::plain(0)], el(Scalar::p(), &[(0, false), (1, false)]));
        let pres =
            Presentation::new("plane", gens, vec!["p".into()], TermOrder::standard(2), vec![rule], vec![]).unwrap();
        assert_eq!(pres.rules().len(), 2);
        assert_eq!(pres.rules()[1].lhs, vec![Letter::starred(0), Letter::starred(1)]);
        assert_eq!(pres.rules()[1].rhs, el(Scalar::p(), &[(1, true), (0, true)]));
    }

    #[test]
    fn normalizes_diagonal_through_sphere() {
        let vs = preset_vs(3).unwrap();
        let nf = vs.normalize(&vs.element("z0* z0").unwrap()).unwrap();
        assert_eq!(nf, vs.element("p^2 z0 z0* + 1 - p^2").unwrap());
    }

    #[test]
    fn dsl_round_trip_for_presets() {
        let mut all = vec![preset_suq2(), preset_bl()];
        for m in 1..=3 {
            all.push(preset_vs(m).unwrap());
        }
        for pres in all {
            let text = pres.to_dsl();
            let back = parse_presentation(&text).unwrap();
            assert_eq!(back, pres, "{text}");
        }
    }

    #[test]
    fn dsl_orientation_contract() {
        let head = "algebra T\nparams q\ngenerators z0 z1\n";
        assert!(parse_presentation(&format!("{head}relation z1 z0 = q z0 z1\n")).is_ok());
        let err = parse_presentation(&format!("{head}relation z1 z0 = q z0 z1 z1\n")).unwrap_err();
        assert!(matches!(err, Error::NotOrientable(_)), "{err}");
    }

    #[test]
    fn dsl_errors() {
        let head = "algebra T\nparams q\ngenerators z0 z1\n";
        match parse_presentation(&format!("{head}relation = z0\n")) {
            Err(Error::Syntax { line: 4, col: 10, .. }) => {}
            other => panic!("{other:?}"),
        }
        let err = parse_presentation(&format!("{head}relation z1 z0 = p z0 z1\n")).unwrap_err();
        assert!(matches!(err, Error::UnknownParameter(ref s) if s == "p"), "{err}");
        let err = parse_presentation("generators a b a\n").unwrap_err();
        assert!(matches!(err, Error::DuplicateGenerator(ref s) if s == "a"));
        assert!(parse_presentation("params r\n").is_err());
        assert!(parse_presentation("generators q\n").is_err());
    }

    #[test]
    fn dsl_completion_round() {
        // z0 z0 -> z1* needs z1* z0 -> z0 z1* (and its adjoint) to be confluent
        let text = "algebra C\ngenerators z0 z1\nrelation z0 z0 = z1*\n";
        let pres = parse_presentation(text).unwrap();
        assert!(!pres.nonconfluent_pairs(5).unwrap().is_empty());
        let pres = pres.complete_once().unwrap();
        assert!(pres.rules().len() > 2);
        assert!(pres.system().critical_pairs(5).unwrap().iter().all(|p| p.residual.is_zero()));
    }
}
