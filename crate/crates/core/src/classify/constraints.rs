//! Polynomial constraints on the coefficient-matrix entries of a
//! first-degree coaction, generated symbolically in `t` and `u`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::hopf::{Hopf, A as HA, A_STAR as HA_STAR, B as HB, B_STAR as HB_STAR};
use crate::ncpoly::{format_word, word_adjoint, Element, Letter, Word};
use crate::presentation::Presentation;
use crate::scalar::Scalar;

/// The independent coefficient matrices; `C = I − A` and `C' = −A'` are
/// eliminated by the counit condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatrixTag {
    A,
    Ap,
    B,
    Bp,
    D,
    Dp,
}

impl MatrixTag {
    pub const ALL: [MatrixTag; 6] =
        [MatrixTag::A, MatrixTag::Ap, MatrixTag::B, MatrixTag::Bp, MatrixTag::D, MatrixTag::Dp];

    pub fn name(self) -> &'static str {
        match self {
            MatrixTag::A => "A",
            MatrixTag::Ap => "Ap",
            MatrixTag::B => "B",
            MatrixTag::Bp => "Bp",
            MatrixTag::D => "D",
            MatrixTag::Dp => "Dp",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// A matrix entry standing for an unknown. Under the symmetric ansatz one
/// unknown stands for two entries; the representative is the one in the
/// first block row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Unknown {
    pub matrix: MatrixTag,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.matrix.name(), self.row, self.col)
    }
}

/// Marker for an absent factor in a [`Mono`].
pub const NONE: u32 = u32::MAX;

/// Literal code `2·var + conj`.
pub fn lit(var: u32, conj: bool) -> u32 {
    2 * var + conj as u32
}

pub fn lit_var(l: u32) -> u32 {
    l / 2
}

pub fn lit_conj(l: u32) -> bool {
    l % 2 == 1
}

pub fn lit_bar(l: u32) -> u32 {
    l ^ 1
}

/// A monomial of degree at most two: sorted literal codes padded with
/// [`NONE`].
pub type Mono = [u32; 2];

pub const CONST: Mono = [NONE, NONE];

pub fn mono_of(l: u32) -> Mono {
    [l, NONE]
}

pub fn mono_degree(m: &Mono) -> usize {
    m.iter().filter(|&&x| x != NONE).count()
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Option<Mono> {
    let mut lits: Vec<u32> = a.iter().chain(b).copied().filter(|&x| x != NONE).collect();
    if lits.len() > 2 {
        return None;
    }
    lits.sort_unstable();
    lits.resize(2, NONE);
    Some([lits[0], lits[1]])
}

fn mono_bar(m: &Mono) -> Mono {
    let mut lits: Vec<u32> = m.iter().map(|&x| if x == NONE { NONE } else { lit_bar(x) }).collect();
    lits.sort_unstable();
    [lits[0], lits[1]]
}

/// Polynomial of degree at most two in the unknowns and their conjugates.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::default();
        p.add_term(CONST, c);
        p
    }

    pub fn lit(l: u32) -> Self {
        let mut p = Poly::default();
        p.add_term(mono_of(l), Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&mut self, o: &Poly, s: &Scalar) {
        for (m, c) in &o.terms {
            self.add_term(*m, c * s);
        }
    }

    pub fn mul(&self, o: &Poly) -> Result<Poly> {
        let mut out = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = mono_mul(m1, m2).ok_or_else(|| {
                    Error::Invalid("unsupported relation degree: constraints above degree two".into())
                })?;
                out.add_term(m, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn conj(&self) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            out.add_term(mono_bar(m), c.conj());
        }
        out
    }

    /// Scales so that the leading coefficient is one when it is invertible.
    fn canonical(&self) -> Poly {
        let Some(inv) = self.terms.values().next_back().and_then(Scalar::inverse) else {
            return self.clone();
        };
        let mut out = Poly::default();
        out.add(self, &inv);
        out
    }

    pub fn display(&self, sys: &ConstraintSystem) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m.iter().filter(|&&x| x != NONE).map(|&x| sys.lit_name(x)).collect();
                if vars.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})·{}", vars.join("·"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.terms {
            write!(f, "{m:?}:{c};")?;
        }
        Ok(())
    }
}

/// Tensors whose coefficients are polynomials in the unknowns.
#[derive(Clone, Default)]
struct PolyTensor {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Poly>,
}

impl PolyTensor {
    fn zero(arity: usize) -> Self {
        PolyTensor { arity, terms: BTreeMap::new() }
    }

    fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add(vec![Vec::new(); arity], &Poly::constant(Scalar::one()), &Scalar::one());
        t
    }

    fn add(&mut self, key: Vec<Word>, p: &Poly, s: &Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                let mut q = Poly::default();
                q.add(p, s);
                if !q.is_zero() {
                    v.insert(q);
                }
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add(p, s);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_tensor(&mut self, o: &PolyTensor, s: &Scalar) {
        for (k, p) in &o.terms {
            self.add(k.clone(), p, s);
        }
    }

    fn mul(&self, o: &PolyTensor) -> Result<PolyTensor> {
        let mut out = PolyTensor::zero(self.arity);
        for (k1, p1) in &self.terms {
            for (k2, p2) in &o.terms {
                let key = k1
                    .iter()
                    .zip(k2)
                    .map(|(a, b)| {
                        let mut w = a.clone();
                        w.extend_from_slice(b);
                        w
                    })
                    .collect();
                out.add(key, &p1.mul(p2)?, &Scalar::one());
            }
        }
        Ok(out)
    }

    fn adjoint(&self) -> PolyTensor {
        let mut out = PolyTensor::zero(self.arity);
        for (k, p) in &self.terms {
            out.add(k.iter().map(|w| word_adjoint(w)).collect(), &p.conj(), &Scalar::one());
        }
        out
    }

    fn normalize(&self, slots: &[&Presentation], caches: &mut [HashMap<Word, Element>]) -> Result<PolyTensor> {
        let mut out = PolyTensor::zero(self.arity);
        for (ws, p) in &self.terms {
            for (k, w) in ws.iter().enumerate() {
                if !caches[k].contains_key(w) {
                    let nf = slots[k].normalize(&Element::word(w.clone()))?;
                    caches[k].insert(w.clone(), nf);
                }
            }
            let mut expanded: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), Scalar::one())];
            for (k, w) in ws.iter().enumerate() {
                let mut next = Vec::new();
                for (prefix, c) in &expanded {
                    for (nw, d) in caches[k][w].terms() {
                        let mut key = prefix.clone();
                        key.push(nw.clone());
                        next.push((key, c * d));
                    }
                }
                expanded = next;
            }
            for (key, c) in expanded {
                out.add(key, p, &c);
            }
        }
        Ok(out)
    }
}

/// A labelled equation `poly = 0`.
#[derive(Clone, Debug)]
pub struct Equation {
    pub label: String,
    pub poly: Poly,
}

/// Constraints on the unknown matrix entries of a first-degree coaction on
/// a fixed presentation.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub presentation: String,
    pub generators: usize,
    pub ansatz: bool,
    pub unknowns: Vec<Unknown>,
    /// Variable index for each entry, per matrix, row-major.
    entries: Vec<Vec<u32>>,
    pub equations: Vec<Equation>,
}

impl ConstraintSystem {
    pub fn var(&self, m: MatrixTag, row: usize, col: usize) -> u32 {
        self.entries[m.slot()][row * self.generators + col]
    }

    pub fn lit_name(&self, l: u32) -> String {
        let u = self.unknowns[lit_var(l) as usize];
        if lit_conj(l) {
            format!("conj({u})")
        } else {
            u.to_string()
        }
    }

    /// Distinct variables of a matrix column, in row order.
    pub fn column_vars(&self, m: MatrixTag, col: usize) -> Vec<u32> {
        (0..self.generators).map(|r| self.var(m, r, col)).collect()
    }

    fn entry_poly(&self, m: MatrixTag, j: usize, k: usize) -> Poly {
        Poly::lit(lit(self.var(m, j, k), false))
    }

    /// Symbolic `Ψ(z_j)`.
    fn psi_plain(&self, j: usize) -> PolyTensor {
        let n = self.generators;
        let mut out = PolyTensor::zero(2);
        let one = Scalar::one();
        for k in 0..n {
            let zk = vec![Letter::plain(k as u16)];
            let zks = vec![Letter::starred(k as u16)];
            let mut c = Poly::constant(if j == k { Scalar::one() } else { Scalar::zero() });
            c.add(&self.entry_poly(MatrixTag::A, j, k), &Scalar::from_int(-1));
            let mut cp = Poly::default();
            cp.add(&self.entry_poly(MatrixTag::Ap, j, k), &Scalar::from_int(-1));
            let slots: [(Poly, &Word, Letter); 8] = [
                (self.entry_poly(MatrixTag::A, j, k), &zk, HA),
                (self.entry_poly(MatrixTag::Ap, j, k), &zks, HA),
                (self.entry_poly(MatrixTag::B, j, k), &zk, HB),
                (self.entry_poly(MatrixTag::Bp, j, k), &zks, HB),
                (c, &zk, HA_STAR),
                (cp, &zks, HA_STAR),
                (self.entry_poly(MatrixTag::D, j, k), &zk, HB_STAR),
                (self.entry_poly(MatrixTag::Dp, j, k), &zks, HB_STAR),
            ];
            for (p, w, h) in slots {
                out.add(vec![w.clone(), vec![h]], &p, &one);
            }
        }
        out
    }

    /// Number of distinct (variable, literal-pair) monomials, a size measure.
    pub fn monomial_count(&self) -> usize {
        self.equations.iter().map(|e| e.poly.terms.len()).sum()
    }
}

fn key_label(key: &[Word], names: &[&[String]]) -> String {
    key.iter()
        .enumerate()
        .map(|(k, w)| format_word(w, names.get(k).copied().unwrap_or(&[])))
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Builds the constraint system for first-degree coactions of `SU_q(2)` on
/// `pres`: counit (identically satisfied after eliminating `C`, `C'`),
/// coassociativity coefficients, and one homomorphism equation per displayed
/// relation and normal-form monomial of `A ⊗ H`. With `ansatz`, the
/// coefficient matrices are taken block-symmetric, `M₁₁ = M₂₂` and
/// `M₁₂ = M₂₁` in 2×2 blocks.
pub fn generate_constraints(pres: &Presentation, ansatz: bool) -> Result<ConstraintSystem> {
    let n = pres.generator_count();
    if ansatz && !n.is_multiple_of(2) {
        return Err(Error::Invalid("the symmetric ansatz needs an even number of generators".into()));
    }
    let mut unknowns = Vec::new();
    let mut index: HashMap<Unknown, u32> = HashMap::new();
    let mut entries = Vec::new();
    for m in MatrixTag::ALL {
        let mut e = Vec::with_capacity(n * n);
        for row in 0..n {
            for col in 0..n {
                let rep = if ansatz {
                    let (bi, bj) = (row / 2, col / 2);
                    // same-block entries map to block (0,0), off-block to block (0,1)
                    let bcol = if bi == bj { 0 } else { 1 };
                    Unknown { matrix: m, row: row % 2, col: 2 * bcol + col % 2 }
                } else {
                    Unknown { matrix: m, row, col }
                };
                let v = *index.entry(rep).or_insert_with(|| {
                    unknowns.push(rep);
                    unknowns.len() as u32 - 1
                });
                e.push(v);
            }
        }
        entries.push(e);
    }
    let mut sys = ConstraintSystem {
        presentation: pres.name.clone(),
        generators: n,
        ansatz,
        unknowns,
        entries,
        equations: Vec::new(),
    };

    let hopf = Hopf::new();
    let h = hopf.presentation();
    let hn = h.generator_names.clone();
    let an = pres.generator_names.clone();
    let mut equations = Vec::new();
    let psi: Vec<PolyTensor> = (0..n).map(|j| sys.psi_plain(j)).collect();
    let psi_star: Vec<PolyTensor> = psi.iter().map(PolyTensor::adjoint).collect();
    let image = |l: Letter| if l.star { &psi_star[l.index as usize] } else { &psi[l.index as usize] };

    for j in 0..n {
        let name = &an[j];
        // counit: (id ⊗ ε)Ψ(z_j) − z_j
        let mut counit: BTreeMap<Word, Poly> = BTreeMap::new();
        for (key, p) in &psi[j].terms {
            let e = hopf.counit_word(&key[1]);
            counit.entry(key[0].clone()).or_default().add(p, &e);
        }
        counit
            .entry(vec![Letter::plain(j as u16)])
            .or_default()
            .add(&Poly::constant(Scalar::one()), &Scalar::from_int(-1));
        for (w, p) in counit {
            equations.push(Equation { label: format!("counit/{name}/{}", format_word(&w, &an)), poly: p });
        }

        // coassociativity: (Ψ ⊗ id)Ψ(z_j) − (id ⊗ Δ)Ψ(z_j)
        let mut res = PolyTensor::zero(3);
        for (key, p) in &psi[j].terms {
            let inner = image(key[0][0]);
            for (k2, p2) in &inner.terms {
                res.add(vec![k2[0].clone(), k2[1].clone(), key[1].clone()], &p.mul(p2)?, &Scalar::one());
            }
            for (hw, c) in hopf.coproduct_word(&key[1]).terms() {
                res.add(vec![key[0].clone(), hw[0].clone(), hw[1].clone()], p, &-c);
            }
        }
        for (key, p) in res.terms {
            let label = format!("coassoc/{name}/{}", key_label(&key, &[&an, &hn, &hn]));
            equations.push(Equation { label, poly: p });
        }
    }

    let mut caches = vec![HashMap::new(), HashMap::new()];
    for (k, (l, r)) in pres.displayed_relations().iter().enumerate() {
        let rel = l - r;
        if rel.degree() > 2 {
            return Err(Error::Invalid(format!("unsupported relation degree {} in relation {k}", rel.degree())));
        }
        let mut acc = PolyTensor::zero(2);
        for (w, c) in rel.terms() {
            let mut t = PolyTensor::one(2);
            for &l in w {
                t = t.mul(image(l))?;
            }
            acc.add_tensor(&t, c);
        }
        let nf = acc.normalize(&[pres, h], &mut caches)?;
        let tag = if k < pres.base_rules.len() {
            format!("relation{k:02}")
        } else {
            format!("identity{:02}", k - pres.base_rules.len())
        };
        for (key, p) in nf.terms {
            equations.push(Equation { label: format!("{tag}/{}", key_label(&key, &[&an, &hn])), poly: p });
        }
    }

    let mut seen = HashSet::new();
    for eq in equations {
        if eq.poly.is_zero() {
            continue;
        }
        let canon = eq.poly.canonical();
        if seen.insert(format!("{canon:?}")) {
            sys.equations.push(Equation { label: eq.label, poly: canon });
        }
    }
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{preset_bl, preset_vs, preset_vs_over, Param};

    #[test]
    fn coefficients_are_w_free_and_counit_is_eliminated() {
        let sys = generate_constraints(&preset_vs_over(1, Param::Q).unwrap(), false).unwrap();
        assert!(sys.equations.iter().all(|e| e.poly.terms().all(|(_, c)| c.is_w_free())));
        assert!(!sys.equations.iter().any(|e| e.label.starts_with("counit/")));
        assert_eq!(sys.unknowns.len(), 6 * 4);
    }

    #[test]
    fn ansatz_halves_unknowns() {
        let bl = preset_bl();
        let plain = generate_constraints(&bl, false).unwrap();
        let sym = generate_constraints(&bl, true).unwrap();
        assert_eq!(plain.unknowns.len(), 96);
        assert_eq!(sym.unknowns.len(), 48);
        assert_eq!(sym.var(MatrixTag::Dp, 2, 3), sym.var(MatrixTag::Dp, 0, 1));
        assert_eq!(sym.var(MatrixTag::B, 0, 2), sym.var(MatrixTag::B, 2, 0));
    }

    #[test]
    fn bare_column_products_appear() {
        // z_1 z_0 = p z_0 z_1 on z_0 z_0 ⊗ a a gives a_{00} a_{10} (1 − p) = 0 up to scale
        let sys = generate_constraints(&preset_vs(1).unwrap(), false).unwrap();
        let a00 = lit(sys.var(MatrixTag::A, 0, 0), false);
        let a10 = lit(sys.var(MatrixTag::A, 1, 0), false);
        let eq = sys.equations.iter().find(|e| e.label == "relation00/z0 z0⊗a a").expect("equation for z0 z0 ⊗ a a");
        let monos: Vec<&Mono> = eq.poly.terms().map(|(m, _)| m).collect();
        assert_eq!(monos, vec![&[a00, a10]]);
    }
}
