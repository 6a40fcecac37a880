//! Exhaustive support enumeration with propagation, at a fixed numeric
//! point `(t, u)`.
//!
//! Branching fixes which unknowns vanish; propagation then forces zeros,
//! nonzeros and values from short equations. At a leaf every unknown has a
//! fixed support, and the remaining equations are solved by substitution.
//! A leaf ends as UNSAT, a solution family, or UNRESOLVED.

use std::collections::{BTreeMap, VecDeque};

use num::{BigUint, One, Signed, Zero};

use super::constraints::{
    lit, lit_conj, lit_var, mono_degree, ConstraintSystem, MatrixTag, Mono, Unknown, CONST, NONE,
};
use crate::error::{Error, Result};
use crate::scalar::{rational_sqrt, Exponents, GaussRational, Rational, Scalar};

type Coef = GaussRational;

/// How the search space is organized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Diagonal `A` with entries in {0, 1}, then at most one nonzero entry
    /// per column of `B`, `B'`, `D`, `D'`, then supports of `A'`.
    Lemmas,
    /// A zero/nonzero branch on every unknown, no structural assumptions.
    Plain,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub t: Rational,
    pub u: Rational,
    pub nodes: u64,
    pub mode: SearchMode,
}

/// Default node cap.
pub const DEFAULT_NODES: u64 = 1_000_000;

impl SolveOptions {
    pub fn new(t: Rational, u: Rational) -> Self {
        SolveOptions { t, u, nodes: DEFAULT_NODES, mode: SearchMode::Lemmas }
    }

    pub fn with_mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.nodes = nodes;
        self
    }
}

/// A solution: one value per unknown, in which the free unit parameter (if
/// any) appears as `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    pub id: String,
    pub branch: String,
    pub values: Vec<Scalar>,
    pub parametrized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unresolved {
    pub branch: String,
    pub reason: String,
}

/// Outcomes grouped by the diagonal of `A` (lemma mode only).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagonalTally {
    pub diagonal: Vec<u8>,
    pub families: usize,
    pub unsat: u64,
    pub unresolved: usize,
}

/// Bookkeeping that every part of the search space was visited: the
/// measures of all closed subtrees add up to `total`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Audit {
    pub total: BigUint,
    pub closed: BigUint,
    pub frontier: BigUint,
}

impl Audit {
    pub fn complete(&self) -> bool {
        self.frontier.is_zero() && self.closed == self.total
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub presentation: String,
    pub ansatz: bool,
    pub t: Rational,
    pub u: Rational,
    pub mode: SearchMode,
    pub families: Vec<SolutionFamily>,
    pub unsat_branches: u64,
    pub nodes: u64,
    pub unresolved: Vec<Unresolved>,
    pub diagonals: Vec<DiagonalTally>,
    pub audit: Audit,
    pub budget_exhausted: bool,
}

#[derive(Clone, Debug)]
enum Var {
    Free,
    Nonzero,
    Val(Coef),
    /// `x = c·root` or `x = c·conj(root)`.
    Link(Coef, u32, bool),
}

enum Resolved {
    Val(Coef),
    Lit(Coef, u32),
}

#[derive(Clone)]
struct State {
    vars: Vec<Var>,
}

struct Conflict;

type Terms = Vec<(Mono, Coef)>;

impl State {
    fn resolve(&self, l: u32) -> Resolved {
        let mut coef = Coef::one();
        let mut var = lit_var(l);
        let mut conj = lit_conj(l);
        loop {
            match &self.vars[var as usize] {
                Var::Free | Var::Nonzero => return Resolved::Lit(coef, lit(var, conj)),
                Var::Val(v) => return Resolved::Val(coef * if conj { v.conj() } else { v.clone() }),
                Var::Link(c, root, cj) => {
                    coef = coef * if conj { c.conj() } else { c.clone() };
                    conj ^= cj;
                    var = *root;
                }
            }
        }
    }

    fn reduce(&self, terms: &[(Mono, Coef)]) -> Terms {
        let mut acc: BTreeMap<Mono, Coef> = BTreeMap::new();
        'term: for (m, c) in terms {
            let mut coef = c.clone();
            let mut lits = Vec::with_capacity(2);
            for &l in m.iter().filter(|&&l| l != NONE) {
                match self.resolve(l) {
                    Resolved::Val(v) => {
                        if v.is_zero() {
                            continue 'term;
                        }
                        coef = coef * v;
                    }
                    Resolved::Lit(k, rl) => {
                        coef = coef * k;
                        lits.push(rl);
                    }
                }
            }
            lits.sort_unstable();
            lits.resize(2, NONE);
            let e = acc.entry([lits[0], lits[1]]).or_insert_with(Coef::zero);
            *e = &*e + &coef;
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn is_nonzero(&self, var: u32) -> bool {
        match &self.vars[var as usize] {
            Var::Nonzero | Var::Link(..) => true,
            Var::Val(v) => !v.is_zero(),
            Var::Free => false,
        }
    }

    fn set_zero(&mut self, var: u32, changed: &mut Vec<u32>) -> std::result::Result<(), Conflict> {
        self.set_value(var, Coef::zero(), changed)
    }

    fn set_nonzero(&mut self, var: u32, changed: &mut Vec<u32>) -> std::result::Result<(), Conflict> {
        match &self.vars[var as usize] {
            Var::Free => {
                self.vars[var as usize] = Var::Nonzero;
                changed.push(var);
                Ok(())
            }
            Var::Val(v) if v.is_zero() => Err(Conflict),
            _ => Ok(()),
        }
    }

    fn set_value(&mut self, var: u32, v: Coef, changed: &mut Vec<u32>) -> std::result::Result<(), Conflict> {
        match &self.vars[var as usize] {
            Var::Free => {}
            Var::Nonzero if !v.is_zero() => {}
            Var::Nonzero => return Err(Conflict),
            Var::Val(old) if *old == v => return Ok(()),
            Var::Val(_) => return Err(Conflict),
            Var::Link(..) => unreachable!("links are only created on roots"),
        }
        self.vars[var as usize] = Var::Val(v);
        changed.push(var);
        Ok(())
    }

    /// Makes the literal `l` equal to `s·m`, where `m` is a root literal of
    /// a different variable.
    fn link(&mut self, l: u32, s: Coef, m: u32, changed: &mut Vec<u32>) {
        let (var, target) = (lit_var(l), lit_var(m));
        debug_assert_ne!(var, target);
        let (c, cj) = if lit_conj(l) { (s.conj(), !lit_conj(m)) } else { (s, lit_conj(m)) };
        self.vars[var as usize] = Var::Link(c, target, cj);
        changed.push(var);
    }
}

fn split_const(terms: &Terms) -> (Coef, Vec<&(Mono, Coef)>) {
    let mut c0 = Coef::zero();
    let mut rest = Vec::new();
    for t in terms {
        if t.0 == CONST {
            c0 = t.1.clone();
        } else {
            rest.push(t);
        }
    }
    (c0, rest)
}

/// `|x|² = r` when `terms` reads `c·x·conj(x) + c0`.
fn modulus_of(terms: &Terms) -> Option<(u32, Coef)> {
    let (c0, rest) = split_const(terms);
    if rest.len() != 1 || c0.is_zero() {
        return None;
    }
    let (m, c) = rest[0];
    if m[1] != NONE && lit_var(m[0]) == lit_var(m[1]) && m[0] != m[1] {
        Some((lit_var(m[0]), -(c0 * c.inv()?)))
    } else {
        None
    }
}

fn positive_real(r: &Coef) -> bool {
    r.im.is_zero() && r.re.is_positive()
}

/// One pass of the propagation rules over a reduced equation.
fn apply_rules(
    state: &mut State,
    terms: Terms,
    full: bool,
    moduli: &BTreeMap<u32, Coef>,
    changed: &mut Vec<u32>,
) -> std::result::Result<(), Conflict> {
    let mut terms = terms;
    // divide out a literal that is known nonzero and common to every term
    loop {
        let Some(first) = terms.first() else { return Ok(()) };
        if terms.iter().any(|(m, _)| *m == CONST) {
            break;
        }
        let common = first
            .0
            .iter()
            .copied()
            .filter(|&l| l != NONE)
            .find(|&l| state.is_nonzero(lit_var(l)) && terms.iter().all(|(m, _)| m.contains(&l)));
        let Some(l) = common else { break };
        terms = terms
            .into_iter()
            .map(|(m, c)| {
                let mut lits: Vec<u32> = m.iter().copied().filter(|&x| x != NONE).collect();
                let pos = lits.iter().position(|&x| x == l).unwrap();
                lits.remove(pos);
                lits.resize(2, NONE);
                ([lits[0], lits[1]], c)
            })
            .collect();
    }
    let (c0, rest) = split_const(&terms);
    if rest.is_empty() {
        return if c0.is_zero() { Ok(()) } else { Err(Conflict) };
    }
    if c0.is_zero() && rest.len() == 1 {
        let m = rest[0].0;
        let (v1, v2) = (lit_var(m[0]), if m[1] == NONE { None } else { Some(lit_var(m[1])) });
        match v2 {
            None => state.set_zero(v1, changed)?,
            Some(v2) if v2 == v1 => state.set_zero(v1, changed)?,
            Some(v2) => {
                if state.is_nonzero(v1) {
                    state.set_zero(v2, changed)?;
                } else if state.is_nonzero(v2) {
                    state.set_zero(v1, changed)?;
                }
            }
        }
        return Ok(());
    }
    if !c0.is_zero() && rest.len() == 1 {
        let (m, c) = rest[0];
        for &l in m.iter().filter(|&&l| l != NONE) {
            state.set_nonzero(lit_var(l), changed)?;
        }
        let r = -(c0.clone() * c.inv().expect("nonzero coefficient"));
        if mono_degree(m) == 1 {
            let v = if lit_conj(m[0]) { r.conj() } else { r };
            state.set_value(lit_var(m[0]), v, changed)?;
        } else if lit_var(m[0]) == lit_var(m[1]) && m[0] != m[1] {
            if !positive_real(&r) {
                return Err(Conflict);
            }
        } else if full && lit_var(m[0]) != lit_var(m[1]) {
            // c·l1·l2 = −c0 with |l1|² known: l2 = (−c0 / (c·|l1|²))·conj(l1)
            for (a, b) in [(m[0], m[1]), (m[1], m[0])] {
                if let Some(modulus) = moduli.get(&lit_var(a)) {
                    let s = r.clone() * modulus.inv().expect("positive modulus");
                    state.link(b, s, a ^ 1, changed);
                    return Ok(());
                }
            }
        }
        return Ok(());
    }
    if full && c0.is_zero() && rest.len() == 2 && rest.iter().all(|(m, _)| mono_degree(m) == 1) {
        let (m1, c1) = rest[0];
        let (m2, c2) = rest[1];
        if lit_var(m1[0]) != lit_var(m2[0]) {
            // link the later variable to the earlier one
            let (la, ca, lb, cb) =
                if lit_var(m1[0]) > lit_var(m2[0]) { (m1[0], c1, m2[0], c2) } else { (m2[0], c2, m1[0], c1) };
            let s = -(cb.clone() * ca.inv().expect("nonzero coefficient"));
            state.link(la, s, lb, changed);
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
enum Slot {
    Values { var: u32, entry: Unknown, options: Vec<Coef> },
    Column { tag: MatrixTag, col: usize, vars: Vec<u32> },
    Support { var: u32, entry: Unknown },
}

impl Slot {
    fn width(&self) -> u64 {
        match self {
            Slot::Values { options, .. } => options.len() as u64,
            Slot::Column { vars, .. } => vars.len() as u64 + 1,
            Slot::Support { .. } => 2,
        }
    }

    fn apply(
        &self,
        k: usize,
        state: &mut State,
        changed: &mut Vec<u32>,
    ) -> std::result::Result<Option<String>, Conflict> {
        match self {
            Slot::Values { var, entry, options } => {
                state.set_value(*var, options[k].clone(), changed)?;
                Ok(Some(format!("{entry}={}", options[k])))
            }
            Slot::Column { tag, col, vars } => {
                // ansatz entries may share a variable; set nonzero first so a
                // shared zero is detected as a conflict
                if k > 0 {
                    state.set_nonzero(vars[k - 1], changed)?;
                }
                for (r, &v) in vars.iter().enumerate() {
                    if r + 1 != k {
                        state.set_zero(v, changed)?;
                    }
                }
                Ok((k > 0).then(|| format!("{}[{},{}]≠0", tag.name(), k - 1, col)))
            }
            Slot::Support { var, entry } => {
                if k == 0 {
                    state.set_zero(*var, changed)?;
                    Ok(None)
                } else {
                    state.set_nonzero(*var, changed)?;
                    Ok(Some(format!("{entry}≠0")))
                }
            }
        }
    }
}

struct Search {
    eqs: Vec<Terms>,
    by_var: Vec<Vec<usize>>,
    slots: Vec<Slot>,
    suffix: Vec<BigUint>,
    /// For each diagonal position, the index of its value slot.
    diag_slot: Vec<usize>,
    diag_choice: Vec<Option<u8>>,
    cap: u64,
    nodes: u64,
    unsat: u64,
    families: Vec<SolutionFamily>,
    unresolved: Vec<Unresolved>,
    tallies: BTreeMap<Vec<u8>, DiagonalTally>,
    audit: Audit,
    exhausted: bool,
    track_diagonal: bool,
}

impl Search {
    fn propagate(&self, state: &mut State, seeds: Vec<u32>, all: bool) -> std::result::Result<(), Conflict> {
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut queued = vec![false; self.eqs.len()];
        let push = |q: &mut VecDeque<usize>, queued: &mut Vec<bool>, e: usize| {
            if !queued[e] {
                queued[e] = true;
                q.push_back(e);
            }
        };
        if all {
            for e in 0..self.eqs.len() {
                push(&mut queue, &mut queued, e);
            }
        }
        for v in seeds {
            for &e in &self.by_var[v as usize] {
                push(&mut queue, &mut queued, e);
            }
        }
        let empty = BTreeMap::new();
        while let Some(e) = queue.pop_front() {
            queued[e] = false;
            let terms = state.reduce(&self.eqs[e]);
            let mut changed = Vec::new();
            apply_rules(state, terms, false, &empty, &mut changed)?;
            for v in changed {
                for &e2 in &self.by_var[v as usize] {
                    push(&mut queue, &mut queued, e2);
                }
            }
        }
        Ok(())
    }

    /// Substitution phase at a leaf, with every support fixed.
    fn settle(&self, state: &mut State) -> std::result::Result<(), Conflict> {
        loop {
            let mut moduli = BTreeMap::new();
            let reduced: Vec<Terms> = self.eqs.iter().map(|e| state.reduce(e)).collect();
            for t in &reduced {
                if let Some((v, r)) = modulus_of(t) {
                    if !positive_real(&r) {
                        return Err(Conflict);
                    }
                    if let Some(old) = moduli.insert(v, r.clone()) {
                        if old != r {
                            return Err(Conflict);
                        }
                    }
                }
            }
            let mut changed = Vec::new();
            for t in reduced {
                apply_rules(state, t, true, &moduli, &mut changed)?;
                if !changed.is_empty() {
                    break;
                }
            }
            if changed.is_empty() {
                return Ok(());
            }
        }
    }

    /// Every diagonal of `A` consistent with the choices made so far.
    fn diagonals(&self) -> Vec<Vec<u8>> {
        let open: Vec<usize> = (0..self.diag_choice.len()).filter(|&k| self.diag_choice[k].is_none()).collect();
        (0..1usize << open.len())
            .map(|bits| {
                let mut choice: Vec<u8> = self.diag_choice.iter().map(|c| c.unwrap_or(0)).collect();
                for (b, &k) in open.iter().enumerate() {
                    choice[k] = (bits >> b & 1) as u8;
                }
                self.diag_slot.iter().map(|&k| choice[k]).collect()
            })
            .collect()
    }

    fn tally(&mut self, f: impl Fn(&mut DiagonalTally)) {
        if !self.track_diagonal {
            return;
        }
        for d in self.diagonals() {
            let t =
                self.tallies.entry(d.clone()).or_insert_with(|| DiagonalTally { diagonal: d, ..Default::default() });
            f(t);
        }
    }

    fn unsat_here(&mut self, measure: BigUint) {
        self.unsat += 1;
        self.audit.closed += measure;
        self.tally(|t| t.unsat += 1);
    }

    fn dfs(&mut self, mut state: State, depth: usize, seeds: Vec<u32>, path: &mut Vec<String>) {
        self.nodes += 1;
        if self.nodes > self.cap {
            self.exhausted = true;
            self.audit.frontier += &self.suffix[depth];
            self.unresolved.push(Unresolved { branch: path.join(" "), reason: "node budget exhausted".into() });
            return;
        }
        if let Err(Conflict) = self.propagate(&mut state, seeds, false) {
            let m = self.suffix[depth].clone();
            self.unsat_here(m);
            return;
        }
        if depth == self.slots.len() {
            self.leaf(state, path);
            return;
        }
        let slot = self.slots[depth].clone();
        let is_diag = matches!(slot, Slot::Values { .. });
        for k in 0..slot.width() as usize {
            if is_diag {
                self.diag_choice[depth] = Some(k as u8);
            }
            let mut child = state.clone();
            let mut changed = Vec::new();
            match slot.apply(k, &mut child, &mut changed) {
                Ok(label) => {
                    let pushed = label.is_some();
                    if let Some(l) = label {
                        path.push(l);
                    }
                    self.dfs(child, depth + 1, changed, path);
                    if pushed {
                        path.pop();
                    }
                }
                Err(_) => {
                    let m = self.suffix[depth + 1].clone();
                    self.unsat_here(m);
                }
            }
        }
        if is_diag {
            self.diag_choice[depth] = None;
        }
    }

    fn leaf(&mut self, mut state: State, path: &[String]) {
        let branch = path.join(" ");
        if self.settle(&mut state).is_err() {
            self.unsat_here(BigUint::one());
            return;
        }
        self.audit.closed += BigUint::one();
        let roots: Vec<u32> =
            (0..state.vars.len() as u32).filter(|&v| matches!(state.vars[v as usize], Var::Nonzero)).collect();
        let remaining: Vec<Terms> = self.eqs.iter().map(|e| state.reduce(e)).filter(|t| !t.is_empty()).collect();
        let outcome = match roots.as_slice() {
            [] if remaining.is_empty() => Ok((None, Coef::one())),
            [] => Err("constant equations remain".to_string()),
            [x] => {
                let moduli: Vec<Option<(u32, Coef)>> = remaining.iter().map(modulus_of).collect();
                match moduli.first() {
                    Some(Some((_, r)))
                        if moduli.iter().all(|m| m.as_ref().map(|(v, s)| v == x && s == r).unwrap_or(false)) =>
                    {
                        match rational_sqrt(&r.re) {
                            Some(s) => Ok((Some(*x), Coef::real(s))),
                            None => Err(format!("modulus {r} is not an exact square")),
                        }
                    }
                    None => Err("free nonzero unknown without a modulus equation".to_string()),
                    _ => Err(format!("{} equations of unsupported shape remain", remaining.len())),
                }
            }
            _ => Err(format!("{} unknowns and {} equations remain", roots.len(), remaining.len())),
        };
        match outcome {
            Ok((root, scale)) => {
                let values = (0..state.vars.len() as u32)
                    .map(|v| match state.resolve(lit(v, false)) {
                        Resolved::Val(c) => Scalar::constant(c),
                        Resolved::Lit(c, l) => {
                            debug_assert_eq!(Some(lit_var(l)), root);
                            let k = if lit_conj(l) { -1 } else { 1 };
                            Scalar::monomial(c * scale.clone(), Exponents::new(0, 0, k))
                        }
                    })
                    .collect();
                let fam = SolutionFamily {
                    id: format!("family-{}", self.families.len() + 1),
                    branch,
                    values,
                    parametrized: root.is_some(),
                };
                if !self.families.iter().any(|f| f.values == fam.values) {
                    self.families.push(fam);
                }
                self.tally(|t| t.families += 1);
            }
            Err(reason) => {
                self.unresolved.push(Unresolved { branch, reason });
                self.tally(|t| t.unresolved += 1);
            }
        }
    }
}

/// The slots in branching order, and for each diagonal position of `A` the
/// index of its value slot (lemma mode).
fn build_slots(sys: &ConstraintSystem, mode: SearchMode, state: &mut State) -> (Vec<Slot>, Vec<usize>) {
    let n = sys.generators;
    let mut slots = Vec::new();
    let mut seen = vec![false; sys.unknowns.len()];
    let take = |v: u32, seen: &mut Vec<bool>| !std::mem::replace(&mut seen[v as usize], true);
    let mut diag_slot = Vec::new();
    match mode {
        SearchMode::Lemmas => {
            for i in 0..n {
                let v = sys.var(MatrixTag::A, i, i);
                if take(v, &mut seen) {
                    let entry = Unknown { matrix: MatrixTag::A, row: i, col: i };
                    slots.push(Slot::Values { var: v, entry, options: vec![Coef::zero(), Coef::one()] });
                }
                let k = slots.iter().position(|s| matches!(s, Slot::Values { var, .. } if *var == v)).unwrap();
                diag_slot.push(k);
            }
            for i in 0..n {
                for j in 0..n {
                    let v = sys.var(MatrixTag::A, i, j);
                    if i != j && take(v, &mut seen) {
                        state.vars[v as usize] = Var::Val(Coef::zero());
                    }
                }
            }
            for tag in [MatrixTag::B, MatrixTag::Bp, MatrixTag::D, MatrixTag::Dp] {
                for col in 0..n {
                    let vars = sys.column_vars(tag, col);
                    for &v in &vars {
                        seen[v as usize] = true;
                    }
                    slots.push(Slot::Column { tag, col, vars });
                }
            }
            for (v, u) in sys.unknowns.iter().enumerate() {
                if take(v as u32, &mut seen) {
                    slots.push(Slot::Support { var: v as u32, entry: *u });
                }
            }
        }
        SearchMode::Plain => {
            for tag in [MatrixTag::A, MatrixTag::B, MatrixTag::Bp, MatrixTag::D, MatrixTag::Dp, MatrixTag::Ap] {
                for (v, u) in sys.unknowns.iter().enumerate() {
                    if u.matrix == tag && take(v as u32, &mut seen) {
                        slots.push(Slot::Support { var: v as u32, entry: *u });
                    }
                }
            }
        }
    }
    (slots, diag_slot)
}

/// Solves `sys` at the point `(t, u)` by exhaustive branching.
pub fn solve(sys: &ConstraintSystem, opts: &SolveOptions) -> Result<ClassificationResult> {
    let zero = Rational::zero();
    let one = Rational::one();
    for (name, v) in [("t", &opts.t), ("u", &opts.u)] {
        if *v <= zero || *v >= one {
            return Err(Error::InvalidPoint(format!("{name} = {v} is not in (0, 1)")));
        }
    }
    let w1 = Coef::one();
    let mut eqs: Vec<Terms> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for eq in &sys.equations {
        let mut terms: Terms = Vec::new();
        for (m, c) in eq.poly.terms() {
            let v = c.eval(&opts.t, &opts.u, &w1)?;
            if !v.is_zero() {
                terms.push((*m, v));
            }
        }
        if let Some(lead) = terms.last().map(|(_, c)| c.inv().expect("nonzero")) {
            for t in terms.iter_mut() {
                t.1 = t.1.clone() * lead.clone();
            }
            if seen.insert(format!("{terms:?}")) {
                eqs.push(terms);
            }
        }
    }
    let mut by_var = vec![Vec::new(); sys.unknowns.len()];
    for (e, terms) in eqs.iter().enumerate() {
        let mut vars: Vec<u32> =
            terms.iter().flat_map(|(m, _)| m.iter().copied().filter(|&l| l != NONE).map(lit_var)).collect();
        vars.sort_unstable();
        vars.dedup();
        for v in vars {
            by_var[v as usize].push(e);
        }
    }

    let mut root = State { vars: vec![Var::Free; sys.unknowns.len()] };
    let (slots, diag_slot) = build_slots(sys, opts.mode, &mut root);
    let n_diag = slots.iter().filter(|s| matches!(s, Slot::Values { .. })).count();
    let mut suffix = vec![BigUint::one(); slots.len() + 1];
    for k in (0..slots.len()).rev() {
        suffix[k] = &suffix[k + 1] * BigUint::from(slots[k].width());
    }
    let mut search = Search {
        eqs,
        by_var,
        slots,
        audit: Audit { total: suffix[0].clone(), ..Default::default() },
        suffix,
        diag_slot,
        diag_choice: vec![None; n_diag],
        cap: opts.nodes,
        nodes: 0,
        unsat: 0,
        families: Vec::new(),
        unresolved: Vec::new(),
        tallies: BTreeMap::new(),
        exhausted: false,
        track_diagonal: opts.mode == SearchMode::Lemmas,
    };
    let mut state = root;
    if search.propagate(&mut state, Vec::new(), true).is_err() {
        search.nodes = 1;
        let m = search.suffix[0].clone();
        search.unsat_here(m);
    } else {
        search.dfs(state, 0, Vec::new(), &mut Vec::new());
    }
    Ok(ClassificationResult {
        presentation: sys.presentation.clone(),
        ansatz: sys.ansatz,
        t: opts.t.clone(),
        u: opts.u.clone(),
        mode: opts.mode,
        families: search.families,
        unsat_branches: search.unsat,
        nodes: search.nodes,
        unresolved: search.unresolved,
        diagonals: search.tallies.into_values().collect(),
        audit: search.audit,
        budget_exhausted: search.exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::generate_constraints;
    use crate::presentation::preset_vs;
    use crate::scalar::rat;

    fn c(n: i64) -> Coef {
        Coef::from_int(n)
    }

    fn fresh(n: usize) -> State {
        State { vars: vec![Var::Free; n] }
    }

    fn run(state: &mut State, terms: Terms) -> std::result::Result<Vec<u32>, Conflict> {
        let mut changed = Vec::new();
        apply_rules(state, terms, false, &BTreeMap::new(), &mut changed)?;
        Ok(changed)
    }

    #[test]
    fn single_linear_term_forces_zero() {
        let mut s = fresh(2);
        let changed = run(&mut s, vec![([lit(1, true), NONE], c(3))]).ok().unwrap();
        assert_eq!(changed, vec![1]);
        assert!(matches!(&s.vars[1], Var::Val(v) if v.is_zero()));
    }

    #[test]
    fn product_with_known_nonzero_factor_forces_the_other() {
        let mut s = fresh(2);
        s.vars[0] = Var::Nonzero;
        run(&mut s, vec![([lit(0, false), lit(1, true)], c(1))]).ok().unwrap();
        assert!(matches!(&s.vars[1], Var::Val(v) if v.is_zero()));
        assert!(matches!(s.vars[0], Var::Nonzero));
    }

    #[test]
    fn negative_modulus_is_unsat() {
        // x·conj(x) + q = 0
        let mut s = fresh(1);
        let q = Coef::real(rat(9, 16));
        assert!(run(&mut s, vec![(CONST, q.clone()), ([lit(0, false), lit(0, true)], c(1))]).is_err());
        let mut s = fresh(1);
        run(&mut s, vec![(CONST, -q), ([lit(0, false), lit(0, true)], c(1))]).ok().unwrap();
        assert!(matches!(s.vars[0], Var::Nonzero));
    }

    #[test]
    fn constant_plus_linear_term_assigns() {
        // 2·conj(x) − (1 + i) = 0
        let mut s = fresh(1);
        let rhs = Coef::new(rat(-1, 1), rat(-1, 1));
        run(&mut s, vec![(CONST, rhs), ([lit(0, true), NONE], c(2))]).ok().unwrap();
        assert!(matches!(&s.vars[0], Var::Val(v) if *v == Coef::new(rat(1, 2), rat(-1, 2))));
    }

    #[test]
    fn nonzero_constant_alone_is_a_conflict() {
        let mut s = fresh(1);
        s.vars[0] = Var::Nonzero;
        // x = 0 with x known nonzero: dividing out x leaves the constant 1
        assert!(run(&mut s, vec![([lit(0, false), NONE], c(1))]).is_err());
    }

    #[test]
    fn rejects_points_outside_the_unit_interval() {
        let sys = generate_constraints(&preset_vs(1).unwrap(), false).unwrap();
        for (t, u) in [(rat(0, 1), rat(1, 2)), (rat(1, 2), rat(1, 1)), (rat(3, 2), rat(1, 2))] {
            assert!(matches!(solve(&sys, &SolveOptions::new(t, u)), Err(Error::InvalidPoint(_))));
        }
    }

    #[test]
    fn small_budget_reports_the_frontier() {
        let sys = generate_constraints(&preset_vs(1).unwrap(), false).unwrap();
        let r = solve(&sys, &SolveOptions::new(rat(3, 4), rat(3, 4)).with_nodes(3)).unwrap();
        assert!(r.budget_exhausted);
        assert!(!r.unresolved.is_empty());
        assert!(!r.audit.frontier.is_zero());
        assert!(!r.audit.complete());
        assert_eq!(&r.audit.closed + &r.audit.frontier, r.audit.total);
    }
}
