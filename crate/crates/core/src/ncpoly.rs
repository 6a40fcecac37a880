//! Noncommutative *-polynomials and rewriting to normal form.
//!
//! Elements are finite sums of words in letters `z_i` and `z_i^*` with
//! [`Scalar`] coefficients. A [`RewriteSystem`] holds oriented relations
//! `lhs -> rhs` compatible with a degree-lexicographic [`TermOrder`];
//! [`RewriteSystem::normalize`] reduces an element to its normal form.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{GaussRational, Scalar};

/// A generator `z_index` or its adjoint `z_index^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u16,
    pub star: bool,
}

impl Letter {
    pub const fn plain(index: u16) -> Self {
        Letter { index, star: false }
    }

    pub const fn starred(index: u16) -> Self {
        Letter { index, star: true }
    }

    pub fn adjoint(self) -> Self {
        Letter { index: self.index, star: !self.star }
    }

    /// Dense code `2 * index + star`, used to index per-letter tables.
    pub fn code(self) -> usize {
        2 * self.index as usize + self.star as usize
    }

    pub fn from_code(code: usize) -> Self {
        Letter { index: (code / 2) as u16, star: code % 2 == 1 }
    }
}

pub type Word = Vec<Letter>;

/// Adjoint of a word: reversed, with every letter starred or unstarred.
pub fn word_adjoint(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.adjoint()).collect()
}

/// Formats a word with the given generator names, e.g. `z0 z1*`.
pub fn format_word(w: &[Letter], names: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter()
        .map(|l| {
            let name = names.get(l.index as usize).cloned().unwrap_or_else(|| format!("z{}", l.index));
            if l.star {
                format!("{name}*")
            } else {
                name
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Finite linear combination of words.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::term(s, Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(Scalar::one(), w)
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(vec![l])
    }

    pub fn term(s: Scalar, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(w, s);
        }
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[Letter]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Maximal word length, or 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_index(&self) -> Option<u16> {
        self.terms.keys().flatten().map(|l| l.index).max()
    }

    pub fn add_term(&mut self, w: Word, s: Scalar) {
        if s.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(s);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &s;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, s: &Scalar) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, s);
        out
    }

    /// The *-involution: reverses words, flips stars, conjugates coefficients.
    pub fn adjoint(&self) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(word_adjoint(w), c.conj());
        }
        out
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitutes a letter-to-element map, extended multiplicatively.
    pub fn substitute(&self, image: impl Fn(Letter) -> Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            let mut acc = Element::scalar(c.clone());
            for &l in w {
                acc = &acc * &image(l);
            }
            out = &out + &acc;
        }
        out
    }

    /// Formats with generator names in the presentation syntax.
    pub fn display(&self, names: &[String]) -> String {
        format_sum(self.terms.iter().rev().map(|(w, c)| (c, format_word(w, names), w.is_empty())))
    }
}

/// Formats `sum c_k * body_k`; `bare` marks bodies that are the unit.
pub(crate) fn format_sum<'a>(items: impl Iterator<Item = (&'a Scalar, String, bool)>) -> String {
    let mut out = String::new();
    for (k, (c, body, bare)) in items.enumerate() {
        let (neg, c_abs) = match c.as_monomial() {
            Some((_, v)) if is_negative_like(v) => (true, -c),
            _ => (false, c.clone()),
        };
        let coeff = if c_abs.len() > 1 { format!("({c_abs})") } else { c_abs.to_string() };
        let piece = if bare {
            coeff
        } else if c_abs.is_one() {
            body
        } else {
            format!("{coeff} {body}")
        };
        match (k, neg) {
            (0, false) => out.push_str(&piece),
            (0, true) => {
                out.push('-');
                out.push_str(&piece);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&piece);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&piece);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn is_negative_like(v: &GaussRational) -> bool {
    use num::Signed;
    use num::Zero;
    if v.im.is_zero() {
        v.re.is_negative()
    } else {
        v.re.is_zero() && v.im.is_negative()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self.display(&[]))
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, o: Element) -> Element {
        &self + &o
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, o: Element) -> Element {
        &self - &o
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        let mut out = Element::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, o: Element) -> Element {
        &self * &o
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }
}

impl From<Scalar> for Element {
    fn from(s: Scalar) -> Self {
        Element::scalar(s)
    }
}

impl From<Letter> for Element {
    fn from(l: Letter) -> Self {
        Element::letter(l)
    }
}

/// Degree-lexicographic order on words induced by a precedence on letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    /// `rank[letter.code()]`; larger rank means greater letter.
    rank: Vec<u16>,
}

impl TermOrder {
    /// Default precedence: plain letters ascending by index, then starred
    /// letters descending by index, so `z_0^*` is the greatest letter.
    pub fn standard(generators: usize) -> Self {
        let mut rank = vec![0u16; 2 * generators];
        for i in 0..generators {
            rank[Letter::plain(i as u16).code()] = i as u16;
            rank[Letter::starred(i as u16).code()] = (generators + (generators - 1 - i)) as u16;
        }
        TermOrder { rank }
    }

    /// Builds an order from letters listed in ascending precedence. Every
    /// letter must appear exactly once.
    pub fn from_precedence(generators: usize, ascending: &[Letter]) -> Result<Self> {
        if ascending.len() != 2 * generators {
            return Err(Error::Invalid(format!(
                "order lists {} letters, expected {}",
                ascending.len(),
                2 * generators
            )));
        }
        let mut rank = vec![u16::MAX; 2 * generators];
        for (r, l) in ascending.iter().enumerate() {
            if l.index as usize >= generators {
                return Err(Error::LetterOutOfRange { index: l.index as usize, generators });
            }
            if rank[l.code()] != u16::MAX {
                return Err(Error::Invalid(format!("letter {l:?} listed twice in order")));
            }
            rank[l.code()] = r as u16;
        }
        Ok(TermOrder { rank })
    }

    pub fn generators(&self) -> usize {
        self.rank.len() / 2
    }

    pub fn rank(&self, l: Letter) -> u16 {
        self.rank[l.code()]
    }

    /// Letters in ascending precedence.
    pub fn precedence(&self) -> Vec<Letter> {
        let mut ls: Vec<Letter> = (0..self.rank.len()).map(Letter::from_code).collect();
        ls.sort_by_key(|l| self.rank(*l));
        ls
    }

    pub fn cmp_words(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                match self.rank(*x).cmp(&self.rank(*y)) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Greatest word of a nonzero element together with its coefficient.
    pub fn leading<'a>(&self, e: &'a Element) -> Option<(&'a Word, &'a Scalar)> {
        e.terms().max_by(|(a, _), (b, _)| self.cmp_words(a, b))
    }
}

/// An oriented relation `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: Element) -> Self {
        RewriteRule { lhs, rhs }
    }

    /// The relation as an element `lhs - rhs` that vanishes in the algebra.
    pub fn as_relation(&self) -> Element {
        &Element::word(self.lhs.clone()) - &self.rhs
    }
}

/// Words as rank sequences, ordered degree-lexicographically by the derived
/// `Ord` on `(len, ranks)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Key(usize, Vec<u16>);

impl Key {
    fn new(ranks: Vec<u16>) -> Self {
        Key(ranks.len(), ranks)
    }
}

/// Default cap on rewrite steps per normalization.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// A set of rewrite rules over a fixed number of generators.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    generators: usize,
    order: TermOrder,
    rules: Vec<RewriteRule>,
    /// Right-hand sides in rank space.
    rhs_ranks: Vec<Vec<(Vec<u16>, Scalar)>>,
    lookup: HashMap<Vec<u16>, usize>,
    lhs_lens: Vec<usize>,
    letter_of_rank: Vec<Letter>,
    fuel: u64,
    check_decrease: bool,
}

impl RewriteSystem {
    /// Builds a system, rejecting rules whose right-hand side has a word not
    /// smaller than the left-hand side, and duplicate left-hand sides.
    pub fn new(generators: usize, order: TermOrder, rules: Vec<RewriteRule>) -> Result<Self> {
        for r in &rules {
            for (w, _) in r.rhs.terms() {
                if order.cmp_words(w, &r.lhs) != Ordering::Less {
                    return Err(Error::NotOrientable(format!(
                        "right-hand word {:?} is not below left-hand word {:?}",
                        w, r.lhs
                    )));
                }
            }
        }
        Self::new_unchecked(generators, order, rules)
    }

    /// Builds a system without checking orientation. Normalization may then
    /// fail to terminate and is bounded only by the fuel cap.
    pub fn new_unchecked(generators: usize, order: TermOrder, rules: Vec<RewriteRule>) -> Result<Self> {
        if order.generators() != generators {
            return Err(Error::Invalid("term order generator count mismatch".into()));
        }
        let mut letter_of_rank = vec![Letter::plain(0); 2 * generators];
        for code in 0..2 * generators {
            let l = Letter::from_code(code);
            letter_of_rank[order.rank(l) as usize] = l;
        }
        let mut sys = RewriteSystem {
            generators,
            order,
            rules: Vec::new(),
            rhs_ranks: Vec::new(),
            lookup: HashMap::new(),
            lhs_lens: Vec::new(),
            letter_of_rank,
            fuel: DEFAULT_FUEL,
            check_decrease: false,
        };
        for r in rules {
            sys.push_rule(r)?;
        }
        Ok(sys)
    }

    fn push_rule(&mut self, r: RewriteRule) -> Result<()> {
        if r.lhs.is_empty() {
            return Err(Error::NotOrientable("empty left-hand side".into()));
        }
        let lhs = self.to_ranks(&r.lhs)?;
        let mut rhs = Vec::new();
        for (w, c) in r.rhs.terms() {
            rhs.push((self.to_ranks(w)?, c.clone()));
        }
        if self.lookup.insert(lhs, self.rules.len()).is_some() {
            return Err(Error::NotOrientable(format!("duplicate left-hand side {:?}", r.lhs)));
        }
        if !self.lhs_lens.contains(&r.lhs.len()) {
            self.lhs_lens.push(r.lhs.len());
            self.lhs_lens.sort_unstable();
        }
        self.rules.push(r);
        self.rhs_ranks.push(rhs);
        Ok(())
    }

    /// Sets the per-normalization step budget.
    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    /// Makes every rewrite step verify that the produced words decrease.
    pub fn with_decrease_check(mut self, on: bool) -> Self {
        self.check_decrease = on;
        self
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    fn to_ranks(&self, w: &[Letter]) -> Result<Vec<u16>> {
        w.iter()
            .map(|l| {
                if (l.index as usize) < self.generators {
                    Ok(self.order.rank(*l))
                } else {
                    Err(Error::LetterOutOfRange { index: l.index as usize, generators: self.generators })
                }
            })
            .collect()
    }

    fn word_of_ranks(&self, r: &[u16]) -> Word {
        r.iter().map(|&k| self.letter_of_rank[k as usize]).collect()
    }

    /// Position and rule of the leftmost reducible subword.
    fn find_redex(&self, w: &[u16]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for &len in &self.lhs_lens {
                if pos + len > w.len() {
                    break;
                }
                if let Some(&ri) = self.lookup.get(&w[pos..pos + len]) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    /// Whether no rule applies anywhere in `w`.
    pub fn is_irreducible(&self, w: &[Letter]) -> Result<bool> {
        Ok(self.find_redex(&self.to_ranks(w)?).is_none())
    }

    /// Rewrites to normal form by always reducing the greatest remaining word
    /// at its leftmost redex.
    pub fn normalize(&self, e: &Element) -> Result<Element> {
        let mut work: BTreeMap<Key, Scalar> = BTreeMap::new();
        for (w, c) in e.terms() {
            add_key(&mut work, Key::new(self.to_ranks(w)?), c.clone());
        }
        let mut out = Element::zero();
        let mut steps = 0u64;
        while let Some((key, coeff)) = work.pop_last() {
            let Some((pos, ri)) = self.find_redex(&key.1) else {
                out.add_term(self.word_of_ranks(&key.1), coeff);
                continue;
            };
            steps += 1;
            if steps > self.fuel {
                return Err(Error::FuelExhausted(self.fuel));
            }
            let len = self.rules[ri].lhs.len();
            for (rw, rc) in &self.rhs_ranks[ri] {
                let mut nw = Vec::with_capacity(key.1.len() - len + rw.len());
                nw.extend_from_slice(&key.1[..pos]);
                nw.extend_from_slice(rw);
                nw.extend_from_slice(&key.1[pos + len..]);
                let nk = Key::new(nw);
                if self.check_decrease && nk >= key {
                    return Err(Error::NotDecreasing(format!(
                        "{:?} produced {:?}",
                        self.word_of_ranks(&key.1),
                        self.word_of_ranks(&nk.1)
                    )));
                }
                add_key(&mut work, nk, &coeff * rc);
            }
        }
        Ok(out)
    }

    /// Whether `a` and `b` have the same normal form.
    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.normalize(&(a - b))?.is_zero())
    }

    /// All overlap and inclusion ambiguities of total length at most
    /// `degree_cap`, each with the difference of its two reductions.
    pub fn critical_pairs(&self, degree_cap: usize) -> Result<Vec<CriticalPair>> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // overlaps: a proper suffix of l1 equals a proper prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] || l1.len() + l2.len() - k > degree_cap {
                        continue;
                    }
                    let mut word = l1.clone();
                    word.extend_from_slice(&l2[k..]);
                    let a = self.rewrite_at(&word, 0, i);
                    let b = self.rewrite_at(&word, l1.len() - k, j);
                    if seen.insert((word.clone(), i, j)) {
                        out.push(self.make_pair(word, i, j, a, b)?);
                    }
                }
                // inclusions: l2 is a proper subword of l1
                if i != j && l2.len() < l1.len() && l1.len() <= degree_cap {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] == l2[..] {
                            let a = self.rewrite_at(l1, 0, i);
                            let b = self.rewrite_at(l1, pos, j);
                            if seen.insert((l1.clone(), i, j)) {
                                out.push(self.make_pair(l1.clone(), i, j, a, b)?);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn rewrite_at(&self, word: &[Letter], pos: usize, rule: usize) -> Element {
        let r = &self.rules[rule];
        let left = Element::word(word[..pos].to_vec());
        let right = Element::word(word[pos + r.lhs.len()..].to_vec());
        &(&left * &r.rhs) * &right
    }

    fn make_pair(&self, word: Word, i: usize, j: usize, a: Element, b: Element) -> Result<CriticalPair> {
        let residual = &self.normalize(&a)? - &self.normalize(&b)?;
        Ok(CriticalPair { word, rules: (i, j), residual })
    }

    /// Runs one round of completion: every nonzero critical-pair residual is
    /// oriented by its greatest word and added as a rule. Fails if the result
    /// still has nonzero residuals or a residual cannot be oriented.
    pub fn complete_once(&self, degree_cap: usize) -> Result<RewriteSystem> {
        let pairs = self.critical_pairs(degree_cap)?;
        let mut rules = self.rules.clone();
        let mut added = 0;
        for p in pairs.iter().filter(|p| !p.residual.is_zero()) {
            // earlier additions may already cover this residual
            let tmp = RewriteSystem::new(self.generators, self.order.clone(), rules.clone())?.with_fuel(self.fuel);
            let res = tmp.normalize(&p.residual)?;
            if res.is_zero() {
                continue;
            }
            rules.push(orient(&self.order, &res)?);
            added += 1;
        }
        let next = RewriteSystem::new(self.generators, self.order.clone(), rules)?
            .with_fuel(self.fuel)
            .with_decrease_check(self.check_decrease);
        if added > 0 {
            if let Some(bad) = next.critical_pairs(degree_cap)?.into_iter().find(|p| !p.residual.is_zero()) {
                return Err(Error::NotConfluent(format!(
                    "ambiguity on {:?} leaves residual with {} terms after completion",
                    bad.word,
                    bad.residual.len()
                )));
            }
        }
        Ok(next)
    }
    /// Repeats completion rounds until every ambiguity of length at most
    /// `degree_cap` resolves, or `max_rounds` rounds have run. Residuals are
    /// oriented by their greatest word, so leading coefficients must be
    /// invertible (always the case after specializing the parameters).
    pub fn complete(&self, degree_cap: usize, max_rounds: usize) -> Result<RewriteSystem> {
        let mut sys = self.clone();
        for _ in 0..max_rounds {
            let mut rules = sys.rules.clone();
            let mut added = 0;
            for p in sys.critical_pairs(degree_cap)?.iter().filter(|p| !p.residual.is_zero()) {
                let tmp = RewriteSystem::new(self.generators, self.order.clone(), rules.clone())?.with_fuel(self.fuel);
                let res = tmp.normalize(&p.residual)?;
                if !res.is_zero() {
                    rules.push(orient(&self.order, &res)?);
                    added += 1;
                }
            }
            if added == 0 {
                return Ok(sys);
            }
            sys = RewriteSystem::new(self.generators, self.order.clone(), rules)?
                .with_fuel(self.fuel)
                .with_decrease_check(self.check_decrease);
        }
        if let Some(bad) = sys.critical_pairs(degree_cap)?.into_iter().find(|p| !p.residual.is_zero()) {
            return Err(Error::NotConfluent(format!(
                "ambiguity on {:?} still leaves a residual after {max_rounds} rounds",
                bad.word
            )));
        }
        Ok(sys)
    }
}

/// Orients a relation `e = 0` as `leading word -> rest`, provided the leading
/// coefficient is invertible.
pub fn orient(order: &TermOrder, e: &Element) -> Result<RewriteRule> {
    let (lw, lc) = order.leading(e).ok_or_else(|| Error::NotOrientable("zero relation".into()))?;
    let inv =
        lc.inverse().ok_or_else(|| Error::NotOrientable(format!("leading coefficient {lc} is not invertible")))?;
    let lw = lw.clone();
    let mut rhs = e.scale(&-&inv);
    rhs.add_term(lw.clone(), Scalar::one());
    Ok(RewriteRule::new(lw, rhs))
}

fn add_key(map: &mut BTreeMap<Key, Scalar>, k: Key, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// An ambiguity: a word reducible in two ways, and the difference of the two
/// normal forms.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    /// Indices of the two rules involved.
    pub rules: (usize, usize),
    pub residual: Element,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: u16) -> Element {
        Element::letter(Letter::plain(i))
    }

    fn zs(i: u16) -> Element {
        Element::letter(Letter::starred(i))
    }

    /// q-commuting plane: z1 z0 -> q z0 z1.
    fn plane() -> RewriteSystem {
        let rule = RewriteRule::new(
            vec![Letter::plain(1), Letter::plain(0)],
            Element::term(Scalar::q(), vec![Letter::plain(0), Letter::plain(1)]),
        );
        RewriteSystem::new(2, TermOrder::standard(2), vec![rule]).unwrap()
    }

    #[test]
    fn standard_order_ranks_star_zero_highest() {
        let o = TermOrder::standard(3);
        assert_eq!(o.rank(Letter::plain(0)), 0);
        assert_eq!(o.rank(Letter::plain(2)), 2);
        assert_eq!(o.rank(Letter::starred(2)), 3);
        assert_eq!(o.rank(Letter::starred(0)), 5);
        assert_eq!(o.precedence().last(), Some(&Letter::starred(0)));
    }

    #[test]
    fn degree_dominates_lex() {
        let o = TermOrder::standard(2);
        let short = [Letter::starred(0)];
        let long = [Letter::plain(0), Letter::plain(0)];
        assert_eq!(o.cmp_words(&short, &long), Ordering::Less);
    }

    #[test]
    fn normalizes_plane_words() {
        let sys = plane();
        let e = &(&z(1) * &z(1)) * &z(0);
        let nf = sys.normalize(&e).unwrap();
        let expect = Element::term(Scalar::q_pow(2), vec![Letter::plain(0), Letter::plain(1), Letter::plain(1)]);
        assert_eq!(nf, expect);
    }

    #[test]
    fn adjoint_reverses_and_conjugates() {
        let e = Element::term(Scalar::i(), vec![Letter::plain(0), Letter::starred(1)]);
        let a = e.adjoint();
        assert_eq!(a, Element::term(-&Scalar::i(), vec![Letter::plain(1), Letter::starred(0)]));
        assert_eq!(a.adjoint(), e);
    }

    #[test]
    fn rejects_letters_outside_presentation() {
        let sys = plane();
        let err = sys.normalize(&z(2)).unwrap_err();
        assert!(matches!(err, Error::LetterOutOfRange { index: 2, generators: 2 }));
    }

    #[test]
    fn rejects_misoriented_rule() {
        let rule = RewriteRule::new(vec![Letter::plain(0)], z(1));
        let err = RewriteSystem::new(2, TermOrder::standard(2), vec![rule]).unwrap_err();
        assert!(matches!(err, Error::NotOrientable(_)));
    }

    #[test]
    fn fuel_bounds_looping_system() {
        // z0 -> z1, z1 -> z0 loops forever
        let rules =
            vec![RewriteRule::new(vec![Letter::plain(0)], z(1)), RewriteRule::new(vec![Letter::plain(1)], z(0))];
        let sys = RewriteSystem::new_unchecked(2, TermOrder::standard(2), rules).unwrap().with_fuel(100);
        assert!(matches!(sys.normalize(&z(0)), Err(Error::FuelExhausted(100))));
        let checked = sys.with_decrease_check(true);
        assert!(matches!(checked.normalize(&z(1)), Err(Error::NotDecreasing(_))));
    }

    #[test]
    fn completion_adds_missing_rule() {
        // z0 z0 -> z1 and z0 z0 z0 overlaps into z1 z0 vs z0 z1
        let rules = vec![RewriteRule::new(vec![Letter::plain(0), Letter::plain(0)], zs(1))];
        let sys = RewriteSystem::new(2, TermOrder::standard(2), rules).unwrap();
        let pairs = sys.critical_pairs(4).unwrap();
        assert!(pairs.iter().any(|p| !p.residual.is_zero()));
        let done = sys.complete_once(4).unwrap();
        assert_eq!(done.rules().len(), 2);
        assert!(done.critical_pairs(4).unwrap().iter().all(|p| p.residual.is_zero()));
    }

    #[test]
    fn plane_is_confluent() {
        assert!(plane().critical_pairs(5).unwrap().iter().all(|p| p.residual.is_zero()));
    }
}
