//! Elements of tensor products of algebras, such as `A ⊗ H` and `A ⊗ H ⊗ H`.
//!
//! Terms are tuples of words, one per tensor slot. Multiplication is slotwise
//! with no braiding; normalization rewrites each slot in its own presentation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ncpoly::{word_adjoint, Element, Word};
use crate::presentation::Presentation;
use crate::scalar::Scalar;

#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        TensorElement { arity, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn one(arity: usize) -> Self {
        Self::term(Scalar::one(), vec![Vec::new(); arity])
    }

    pub fn term(c: Scalar, words: Vec<Word>) -> Self {
        let mut t = Self::zero(words.len());
        t.add_term(words, c);
        t
    }

    /// `e_1 ⊗ e_2 ⊗ ... ⊗ e_k`.
    pub fn tensor(factors: &[&Element]) -> Self {
        let mut acc = Self::one(0);
        for f in factors {
            let mut next = Self::zero(acc.arity + 1);
            for (ws, c) in &acc.terms {
                for (w, d) in f.terms() {
                    let mut nws = ws.clone();
                    nws.push(w.clone());
                    next.add_term(nws, c * d);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, words: &[Word]) -> Scalar {
        self.terms.get(words).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Scalar) {
        debug_assert_eq!(words.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(words) {
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

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.arity);
        for (ws, c) in &self.terms {
            out.add_term(ws.clone(), c * s);
        }
        out
    }

    /// Slotwise adjoint with conjugated coefficients.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.arity);
        for (ws, c) in &self.terms {
            out.add_term(ws.iter().map(|w| word_adjoint(w)).collect(), c.conj());
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut out = Self::zero(self.arity);
        for (ws, c) in &self.terms {
            out.add_term(ws.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Rewrites every slot to normal form in the matching presentation.
    pub fn normalize(&self, slots: &[&Presentation]) -> Result<Self> {
        if slots.len() != self.arity {
            return Err(Error::Invalid(format!(
                "tensor of arity {} normalized with {} presentations",
                self.arity,
                slots.len()
            )));
        }
        let mut caches: Vec<HashMap<Word, Element>> = vec![HashMap::new(); self.arity];
        let mut out = Self::zero(self.arity);
        for (ws, c) in &self.terms {
            for (k, w) in ws.iter().enumerate() {
                if !caches[k].contains_key(w) {
                    let nf = slots[k].normalize(&Element::word(w.clone()))?;
                    caches[k].insert(w.clone(), nf);
                }
            }
            let parts: Vec<&Element> = ws.iter().enumerate().map(|(k, w)| &caches[k][w]).collect();
            let prod = Self::tensor(&parts);
            for (pw, pc) in prod.terms {
                out.add_term(pw, &pc * c);
            }
        }
        Ok(out)
    }

    /// Replaces slot `k` by a scalar-valued linear map, lowering the arity.
    pub fn contract_slot(&self, k: usize, f: impl Fn(&Word) -> Scalar) -> Self {
        let mut out = Self::zero(self.arity - 1);
        for (ws, c) in &self.terms {
            let v = f(&ws[k]);
            if v.is_zero() {
                continue;
            }
            let mut nws = ws.clone();
            nws.remove(k);
            out.add_term(nws, c * &v);
        }
        out
    }

    /// Replaces slot `k` by an element-valued linear map, keeping the arity.
    pub fn map_slot(&self, k: usize, f: impl Fn(&Word) -> Result<Element>) -> Result<Self> {
        let mut out = Self::zero(self.arity);
        for (ws, c) in &self.terms {
            for (w, d) in f(&ws[k])?.into_terms() {
                let mut nws = ws.clone();
                nws[k] = w;
                out.add_term(nws, c * &d);
            }
        }
        Ok(out)
    }

    /// Replaces slot `k` by a map into two-fold tensors, raising the arity.
    pub fn expand_slot(&self, k: usize, f: impl Fn(&Word) -> Result<TensorElement>) -> Result<Self> {
        let mut out = Self::zero(self.arity + 1);
        for (ws, c) in &self.terms {
            let img = f(&ws[k])?;
            if img.arity != 2 {
                return Err(Error::Invalid("slot expansion must produce a two-fold tensor".into()));
            }
            for (pair, d) in img.terms {
                let mut nws = Vec::with_capacity(self.arity + 1);
                nws.extend_from_slice(&ws[..k]);
                nws.extend(pair);
                nws.extend_from_slice(&ws[k + 1..]);
                out.add_term(nws, c * &d);
            }
        }
        Ok(out)
    }

    /// Multiplies the slots together into a single element (all slots must
    /// live in the same algebra).
    pub fn multiply_out(&self) -> Element {
        let mut out = Element::zero();
        for (ws, c) in &self.terms {
            out.add_term(ws.concat(), c.clone());
        }
        out
    }

    /// Maximal number of terms in any slot word, a crude size measure.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|ws| ws.iter().map(Vec::len).sum::<usize>()).max().unwrap_or(0)
    }

    pub fn display(&self, names: &[&[String]]) -> String {
        crate::ncpoly::format_sum(self.terms.iter().rev().map(|(ws, c)| {
            let body = ws
                .iter()
                .enumerate()
                .map(|(k, w)| crate::ncpoly::format_word(w, names.get(k).copied().unwrap_or(&[])))
                .collect::<Vec<_>>()
                .join(" ⊗ ");
            (c, body, false)
        }))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({})", self.display(&[]))
    }
}

impl<'a> Add<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn add(self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, o.arity, "tensor arity mismatch");
        let mut out = self.clone();
        for (ws, c) in &o.terms {
            out.add_term(ws.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn sub(self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, o.arity, "tensor arity mismatch");
        let mut out = self.clone();
        for (ws, c) in &o.terms {
            out.add_term(ws.clone(), -c);
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl<'a> Mul<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn mul(self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, o.arity, "tensor arity mismatch");
        let mut out = TensorElement::zero(self.arity);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let ws = w1
                    .iter()
                    .zip(w2)
                    .map(|(a, b)| {
                        let mut w = a.clone();
                        w.extend_from_slice(b);
                        w
                    })
                    .collect();
                out.add_term(ws, c1 * c2);
            }
        }
        out
    }
}
