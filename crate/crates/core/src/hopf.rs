//! Hopf *-algebra structure of `A(SU_q(2))`.
//!
//! Generators are `a` (index 0) and `b` (index 1). The coproduct is
//! `Δ(u) = u ⊗̇ u` for the fundamental unitary `u = [[a, b], [-q b^*, a^*]]`.

use crate::error::Result;
use crate::ncpoly::{Element, Letter, Word};
use crate::presentation::{preset_suq2, Presentation};
use crate::report::{Check, Params, Report};
use crate::sample;
use crate::scalar::Scalar;
use crate::tensor::TensorElement;

pub const A: Letter = Letter::plain(0);
pub const A_STAR: Letter = Letter::starred(0);
pub const B: Letter = Letter::plain(1);
pub const B_STAR: Letter = Letter::starred(1);

/// Seed for the random elements used by [`Hopf::check_axioms`].
pub const AXIOM_SEED: u64 = 0x5eed_0002;

/// Number of random elements checked per axiom family.
pub const RANDOM_ELEMENTS: usize = 20;

fn el(l: Letter) -> Element {
    Element::letter(l)
}

/// Coproduct, counit and antipode on `A(SU_q(2))`.
#[derive(Clone, Debug)]
pub struct Hopf {
    pres: Presentation,
    delta: [TensorElement; 4],
    eps: [Scalar; 4],
    antipode: [Element; 4],
}

impl Default for Hopf {
    fn default() -> Self {
        Self::new()
    }
}

impl Hopf {
    pub fn new() -> Self {
        let q = Scalar::q();
        let t = |x: Letter, y: Letter| TensorElement::tensor(&[&el(x), &el(y)]);
        let mut delta: [TensorElement; 4] = Default::default();
        let mut eps: [Scalar; 4] = Default::default();
        let mut antipode: [Element; 4] = Default::default();
        // Δ(a) = a⊗a − q b⊗b^*, Δ(a^*) = a^*⊗a^* − q b^*⊗b
        delta[A.code()] = &t(A, A) - &t(B, B_STAR).scale(&q);
        delta[A_STAR.code()] = &t(A_STAR, A_STAR) - &t(B_STAR, B).scale(&q);
        // Δ(b) = b⊗a^* + a⊗b, Δ(b^*) = b^*⊗a + a^*⊗b^*
        delta[B.code()] = &t(B, A_STAR) + &t(A, B);
        delta[B_STAR.code()] = &t(B_STAR, A) + &t(A_STAR, B_STAR);
        eps[A.code()] = Scalar::one();
        eps[A_STAR.code()] = Scalar::one();
        eps[B.code()] = Scalar::zero();
        eps[B_STAR.code()] = Scalar::zero();
        antipode[A.code()] = el(A_STAR);
        antipode[A_STAR.code()] = el(A);
        antipode[B.code()] = el(B).scale(&-&q);
        antipode[B_STAR.code()] = el(B_STAR).scale(&-&Scalar::q_pow(-1));
        Hopf { pres: preset_suq2(), delta, eps, antipode }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// `Δ` on a word, not normalized.
    pub fn coproduct_word(&self, w: &Word) -> TensorElement {
        let mut acc = TensorElement::one(2);
        for l in w {
            acc = &acc * &self.delta[l.code()];
        }
        acc
    }

    /// `Δ(e)`, normalized in both slots.
    pub fn coproduct(&self, e: &Element) -> Result<TensorElement> {
        let mut acc = TensorElement::zero(2);
        for (w, c) in e.terms() {
            acc = &acc + &self.coproduct_word(w).scale(c);
        }
        acc.normalize(&[&self.pres, &self.pres])
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        let mut acc = Scalar::one();
        for l in w {
            acc = &acc * &self.eps[l.code()];
        }
        acc
    }

    pub fn counit(&self, e: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in e.terms() {
            acc += &(c * &self.counit_word(w));
        }
        acc
    }

    /// `S` on a word (anti-multiplicative), not normalized.
    pub fn antipode_word(&self, w: &Word) -> Element {
        let mut acc = Element::one();
        for l in w.iter().rev() {
            acc = &acc * &self.antipode[l.code()];
        }
        acc
    }

    /// `S(e)`, normalized.
    pub fn antipode(&self, e: &Element) -> Result<Element> {
        let mut acc = Element::zero();
        for (w, c) in e.terms() {
            acc.add_scaled(&self.antipode_word(w), c);
        }
        self.pres.normalize(&acc)
    }

    fn h3(&self) -> [&Presentation; 3] {
        [&self.pres, &self.pres, &self.pres]
    }

    /// `(Δ⊗id)Δ(e) − (id⊗Δ)Δ(e)`, normalized.
    pub fn coassociativity_residual(&self, e: &Element) -> Result<TensorElement> {
        let d = self.coproduct(e)?;
        let left = d.expand_slot(0, |w| Ok(self.coproduct_word(w)))?;
        let right = d.expand_slot(1, |w| Ok(self.coproduct_word(w)))?;
        (&left - &right).normalize(&self.h3())
    }

    /// `(ε⊗id)Δ(e) − e` and `(id⊗ε)Δ(e) − e`, normalized.
    pub fn counit_residuals(&self, e: &Element) -> Result<(Element, Element)> {
        let d = self.coproduct(e)?;
        let base = self.pres.normalize(e)?;
        let left = d.contract_slot(0, |w| self.counit_word(w)).multiply_out();
        let right = d.contract_slot(1, |w| self.counit_word(w)).multiply_out();
        Ok((self.pres.normalize(&(&left - &base))?, self.pres.normalize(&(&right - &base))?))
    }

    /// `m(S⊗id)Δ(e) − ε(e)1` and `m(id⊗S)Δ(e) − ε(e)1`, normalized.
    pub fn antipode_residuals(&self, e: &Element) -> Result<(Element, Element)> {
        let d = self.coproduct(e)?;
        let unit = Element::scalar(self.counit(e));
        let left = d.map_slot(0, |w| Ok(self.antipode_word(w)))?.multiply_out();
        let right = d.map_slot(1, |w| Ok(self.antipode_word(w)))?.multiply_out();
        Ok((self.pres.normalize(&(&left - &unit))?, self.pres.normalize(&(&right - &unit))?))
    }

    /// `Δ(e^*) − Δ(e)^*` (normalized) and `ε(e^*) − conj ε(e)`.
    pub fn star_residuals(&self, e: &Element) -> Result<(TensorElement, Scalar)> {
        let d_star = self.coproduct(&e.adjoint())?;
        let star_d = self.coproduct(e)?.adjoint().normalize(&[&self.pres, &self.pres])?;
        let eps = &self.counit(&e.adjoint()) - &self.counit(e).conj();
        Ok((&d_star - &star_d, eps))
    }

    /// Hopf-axiom checks on the four generators and on random elements of
    /// degree at most 3, plus well-definedness of `Δ`, `ε`, `S` on every
    /// rewrite rule.
    pub fn check_axioms(&self) -> Result<Report> {
        let mut samples: Vec<(String, Element)> =
            vec![("a".into(), el(A)), ("a*".into(), el(A_STAR)), ("b".into(), el(B)), ("b*".into(), el(B_STAR))];
        let mut r = sample::rng(AXIOM_SEED);
        for k in 0..RANDOM_ELEMENTS {
            samples.push((format!("random{k:02}"), sample::element(&mut r, 2, 3)));
        }
        let mut checks = Vec::new();
        for (id, e) in &samples {
            checks.push(Check::from_residual(format!("coassociativity/{id}"), self.coassociativity_residual(e)?.len()));
            let (l, rr) = self.counit_residuals(e)?;
            checks.push(Check::from_residual(format!("counit-left/{id}"), l.len()));
            checks.push(Check::from_residual(format!("counit-right/{id}"), rr.len()));
            let (l, rr) = self.antipode_residuals(e)?;
            checks.push(Check::from_residual(format!("antipode-left/{id}"), l.len()));
            checks.push(Check::from_residual(format!("antipode-right/{id}"), rr.len()));
            let (d, s) = self.star_residuals(e)?;
            checks.push(Check::from_residual(format!("star-coproduct/{id}"), d.len()));
            checks.push(Check::from_residual(format!("star-counit/{id}"), s.len()));
        }
        for (k, rule) in self.pres.rules().iter().enumerate() {
            let rel = rule.as_relation();
            checks
                .push(Check::from_residual(format!("well-defined-coproduct/rule{k:02}"), self.coproduct(&rel)?.len()));
            checks.push(Check::from_residual(format!("well-defined-counit/rule{k:02}"), self.counit(&rel).len()));
            checks.push(Check::from_residual(format!("well-defined-antipode/rule{k:02}"), self.antipode(&rel)?.len()));
        }
        Ok(Report::new("hopf", Params::default(), checks))
    }

    /// Fundamental unitary `u = [[a, b], [-q b^*, a^*]]`.
    pub fn fundamental_unitary() -> [[Element; 2]; 2] {
        let q = Scalar::q();
        [[el(A), el(B)], [el(B_STAR).scale(&-&q), el(A_STAR)]]
    }

    /// Unitarity `u u^* = u^* u = 1` and `Δ(u_ij) = Σ_k u_ik ⊗ u_kj`.
    pub fn check_fundamental_unitary(&self) -> Result<Report> {
        let u = Self::fundamental_unitary();
        let u_star = |i: usize, j: usize| u[j][i].adjoint();
        let mut checks = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                let delta_ij = Element::scalar(if i == j { Scalar::one() } else { Scalar::zero() });
                let mut uus = Element::zero();
                let mut usu = Element::zero();
                let mut dotx = TensorElement::zero(2);
                for (k, u_ik) in u[i].iter().enumerate() {
                    uus = &uus + &(u_ik * &u_star(k, j));
                    usu = &usu + &(&u_star(i, k) * &u[k][j]);
                    dotx = &dotx + &TensorElement::tensor(&[u_ik, &u[k][j]]);
                }
                let r1 = self.pres.normalize(&(&uus - &delta_ij))?;
                let r2 = self.pres.normalize(&(&usu - &delta_ij))?;
                let r3 = &self.coproduct(&u[i][j])? - &dotx.normalize(&[&self.pres, &self.pres])?;
                checks.push(Check::from_residual(format!("u-ustar/{i}{j}"), r1.len()));
                checks.push(Check::from_residual(format!("ustar-u/{i}{j}"), r2.len()));
                checks.push(Check::from_residual(format!("coproduct-u/{i}{j}"), r3.len()));
            }
        }
        Ok(Report::new("fundamental-unitary", Params::default(), checks))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Hopf {
        Hopf::new()
    }

    #[test]
    fn coproduct_of_a() {
        let h = h();
        let d = h.coproduct(&el(A)).unwrap();
        let expect = &TensorElement::tensor(&[&el(A), &el(A)])
            - &TensorElement::tensor(&[&el(B), &el(B_STAR)]).scale(&Scalar::q());
        assert_eq!(d, expect);
        assert_eq!(h.coproduct(&Element::one()).unwrap(), TensorElement::one(2));
    }

    #[test]
    fn coproduct_is_multiplicative_on_ab() {
        let h = h();
        let ab = &el(A) * &el(B);
        let prod = &h.coproduct(&el(A)).unwrap() * &h.coproduct(&el(B)).unwrap();
        let pres = h.presentation();
        assert_eq!(h.coproduct(&ab).unwrap(), prod.normalize(&[pres, pres]).unwrap());
    }

    #[test]
    fn counit_examples() {
        let h = h();
        assert!(h.counit(&el(A)).is_one());
        assert!(h.counit(&(&el(B) * &el(B_STAR))).is_zero());
        let pres = h.presentation();
        let e = pres.element("a* a + q^2 b* b").unwrap();
        assert!(h.counit(&e).is_one());
    }

    #[test]
    fn antipode_examples() {
        let h = h();
        assert_eq!(h.antipode(&el(B)).unwrap(), el(B).scale(&-&Scalar::q()));
        let pres = h.presentation();
        let s_ab = h.antipode(&(&el(A) * &el(B))).unwrap();
        assert_eq!(s_ab, pres.normalize(&pres.element("-q b a*").unwrap()).unwrap());
        assert_eq!(h.antipode(&Element::one()).unwrap(), Element::one());
    }

    #[test]
    fn coassociativity_on_b_matches_hand_expansion() {
        let h = h();
        let d = h.coproduct(&el(B)).unwrap();
        let left = d.expand_slot(0, |w| Ok(h.coproduct_word(w))).unwrap();
        let pres = h.presentation();
        let left = left.normalize(&[pres, pres, pres]).unwrap();
        let t = |x, y, z| TensorElement::tensor(&[&el(x), &el(y), &el(z)]);
        // Δ(b)⊗a^* + Δ(a)⊗b
        let expect =
            &(&(&t(B, A_STAR, A_STAR) + &t(A, B, A_STAR)) + &t(A, A, B)) - &t(B, B_STAR, B).scale(&Scalar::q());
        assert_eq!(left, expect);
        assert!(h.coassociativity_residual(&el(B)).unwrap().is_zero());
    }

    #[test]
    fn antipode_law_on_b() {
        let h = h();
        let (l, r) = h.antipode_residuals(&el(B)).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn unitary_entry_examples() {
        let h = h();
        let pres = h.presentation();
        // (u u^*)_11 and (u^* u)_11
        for text in ["q^2 b* b + a* a", "b* b + a a*"] {
            let e = pres.element(text).unwrap();
            assert!(pres.equal(&e, &Element::one()).unwrap(), "{text}");
        }
        assert!(h.check_fundamental_unitary().unwrap().passed());
    }
}
