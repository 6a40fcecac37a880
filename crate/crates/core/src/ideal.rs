//! Ideal membership for presentations whose rewrite system is not
//! confluent, decided over the field of rational functions in `t`.
//!
//! Over the Laurent ring a critical-pair residual may have a leading
//! coefficient such as `1 + q^{-1}` that cannot be inverted. Over `Q(i)(t)`
//! every nonzero coefficient is a unit, so completion can orient every
//! residual. An element that reduces to zero here lies in the ideal for all
//! `q` except the finitely many roots of the denominators involved.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::ncpoly::{Element, Letter, TermOrder, Word};
use crate::presentation::Presentation;
use crate::scalar::{GaussRational, Scalar};

/// Polynomial in `t`, coefficients from the lowest degree up, no trailing
/// zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
struct UPoly(Vec<GaussRational>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn constant(c: GaussRational) -> Self {
        UPoly(vec![c]).trimmed()
    }

    fn monomial(c: GaussRational, k: usize) -> Self {
        let mut v = vec![GaussRational::zero(); k];
        v.push(c);
        UPoly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> &GaussRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = GaussRational::zero();
        UPoly((0..n).map(|k| self.0.get(k).unwrap_or(&z) + o.0.get(k).unwrap_or(&z)).collect()).trimmed()
    }

    fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![GaussRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        UPoly(v).trimmed()
    }

    fn scale(&self, c: &GaussRational) -> UPoly {
        UPoly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let inv = d.lead().inv().expect("nonzero divisor");
        let mut r = self.clone();
        let mut q = vec![GaussRational::zero(); self.0.len().saturating_sub(d.0.len()) + 1];
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let k = r.0.len() - d.0.len();
            let c = r.lead() * &inv;
            q[k] = c.clone();
            r = r.add(&UPoly::monomial(-c, k).mul(d));
        }
        (UPoly(q).trimmed(), r)
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().expect("nonzero"))
    }

    fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// A rational function `num / den` in `t`, reduced, with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: UPoly,
    den: UPoly,
}

impl RatFn {
    fn new(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return RatFn::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = (num.divrem(&g).0, den.divrem(&g).0);
        let c = den.lead().inv().expect("nonzero denominator");
        RatFn { num: num.scale(&c), den: den.scale(&c) }
    }

    pub fn zero() -> Self {
        RatFn { num: UPoly::zero(), den: UPoly::constant(GaussRational::one()) }
    }

    pub fn one() -> Self {
        RatFn { num: UPoly::constant(GaussRational::one()), den: UPoly::constant(GaussRational::one()) }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Converts a scalar free of `u` and `w`.
    pub fn from_scalar(s: &Scalar) -> Result<Self> {
        let mut min = 0;
        for (e, _) in s.terms() {
            if e.u != 0 || e.w != 0 {
                return Err(Error::Invalid(format!("coefficient {s} depends on p or w")));
            }
            min = min.min(e.t);
        }
        let mut num = UPoly::zero();
        for (e, c) in s.terms() {
            num = num.add(&UPoly::monomial(c.clone(), (e.t - min) as usize));
        }
        Ok(RatFn::new(num, UPoly::monomial(GaussRational::one(), (-min) as usize)))
    }

    /// Value at `t = t_val`, unless the denominator vanishes there.
    pub fn eval(&self, t_val: &GaussRational) -> Option<GaussRational> {
        let at = |p: &UPoly| p.0.iter().rev().fold(GaussRational::zero(), |acc, c| &(&acc * t_val) + c);
        Some(at(&self.num) * at(&self.den).inv()?)
    }

    fn add(&self, o: &RatFn) -> RatFn {
        if self.den == o.den {
            return RatFn::new(self.num.add(&o.num), self.den.clone());
        }
        RatFn::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    fn neg(&self) -> RatFn {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    fn mul(&self, o: &RatFn) -> RatFn {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero();
        }
        RatFn::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn inv(&self) -> Option<RatFn> {
        (!self.is_zero()).then(|| RatFn::new(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &UPoly| {
            p.0.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("({c})t^{k}"))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        write!(f, "[{}] / [{}]", show(&self.num), show(&self.den))
    }
}

/// A noncommutative polynomial with rational-function coefficients.
pub type FieldElement = BTreeMap<Word, RatFn>;

fn add_to(e: &mut FieldElement, w: Word, c: RatFn) {
    if c.is_zero() {
        return;
    }
    match e.get_mut(&w) {
        Some(old) => {
            let s = old.add(&c);
            if s.is_zero() {
                e.remove(&w);
            } else {
                *old = s;
            }
        }
        None => {
            e.insert(w, c);
        }
    }
}

pub fn field_element(e: &Element) -> Result<FieldElement> {
    let mut out = FieldElement::new();
    for (w, c) in e.terms() {
        add_to(&mut out, w.clone(), RatFn::from_scalar(c)?);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
struct FieldRule {
    lhs: Word,
    rhs: FieldElement,
}

/// A rewrite system over `Q(i)(t)`.
#[derive(Clone, Debug)]
pub struct FieldSystem {
    order: TermOrder,
    rules: Vec<FieldRule>,
    fuel: u64,
}

impl FieldSystem {
    /// The closed rules of `pres`, with coefficients read in `Q(i)(t)`.
    pub fn from_presentation(pres: &Presentation) -> Result<Self> {
        let rules = pres
            .rules()
            .iter()
            .map(|r| Ok(FieldRule { lhs: r.lhs.clone(), rhs: field_element(&r.rhs)? }))
            .collect::<Result<_>>()?;
        Ok(FieldSystem { order: pres.order().clone(), rules, fuel: 1_000_000 })
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    fn redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for (k, r) in self.rules.iter().enumerate() {
            if r.lhs.len() <= w.len() {
                if let Some(pos) = w.windows(r.lhs.len()).position(|s| s == &r.lhs[..]) {
                    return Some((pos, k));
                }
            }
        }
        None
    }

    fn substitute(&self, w: &[Letter], pos: usize, rule: usize, c: &RatFn, into: &mut FieldElement) {
        let r = &self.rules[rule];
        for (rw, rc) in &r.rhs {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + r.lhs.len()..]);
            add_to(into, nw, c.mul(rc));
        }
    }

    pub fn normalize(&self, e: &FieldElement) -> Result<FieldElement> {
        let mut work = e.clone();
        let mut out = FieldElement::new();
        let mut steps = 0u64;
        while let Some((w, c)) = work.pop_first() {
            match self.redex(&w) {
                Some((pos, k)) => {
                    steps += 1;
                    if steps > self.fuel {
                        return Err(Error::FuelExhausted(self.fuel));
                    }
                    self.substitute(&w, pos, k, &c, &mut work);
                }
                None => add_to(&mut out, w, c),
            }
        }
        Ok(out)
    }

    /// Whether `e` reduces to zero.
    pub fn reduces_to_zero(&self, e: &Element) -> Result<bool> {
        Ok(self.normalize(&field_element(e)?)?.is_empty())
    }

    fn rewrite_at(&self, w: &[Letter], pos: usize, rule: usize) -> FieldElement {
        let mut out = FieldElement::new();
        self.substitute(w, pos, rule, &RatFn::one(), &mut out);
        out
    }

    fn residuals(&self, degree_cap: usize) -> Result<Vec<FieldElement>> {
        let mut out = Vec::new();
        let mut push = |a: FieldElement, b: FieldElement| -> Result<()> {
            let mut d = self.normalize(&a)?;
            for (w, c) in self.normalize(&b)? {
                add_to(&mut d, w, c.neg());
            }
            if !d.is_empty() {
                out.push(d);
            }
            Ok(())
        };
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] || l1.len() + l2.len() - k > degree_cap {
                        continue;
                    }
                    let mut word = l1.clone();
                    word.extend_from_slice(&l2[k..]);
                    push(self.rewrite_at(&word, 0, i), self.rewrite_at(&word, l1.len() - k, j))?;
                }
                if i != j && l2.len() < l1.len() && l1.len() <= degree_cap {
                    if let Some(pos) = l1.windows(l2.len()).position(|s| s == &l2[..]) {
                        push(self.rewrite_at(l1, 0, i), self.rewrite_at(l1, pos, j))?;
                    }
                }
            }
        }
        Ok(out)
    }

    fn orient(&self, e: &FieldElement) -> FieldRule {
        let lw = e.keys().max_by(|a, b| self.order.cmp_words(a, b)).expect("nonzero relation").clone();
        let inv = e[&lw].inv().expect("nonzero coefficient").neg();
        let rhs = e.iter().filter(|(w, _)| **w != lw).map(|(w, c)| (w.clone(), c.mul(&inv))).collect();
        FieldRule { lhs: lw, rhs }
    }

    /// Completion restricted to ambiguities of length at most
    /// `degree_cap`, for at most `max_rounds` rounds. Returns whether every
    /// such ambiguity resolves at the end.
    pub fn complete(&mut self, degree_cap: usize, max_rounds: usize) -> Result<bool> {
        for _ in 0..max_rounds {
            let residuals = self.residuals(degree_cap)?;
            if residuals.is_empty() {
                return Ok(true);
            }
            for r in residuals {
                let r = self.normalize(&r)?;
                if !r.is_empty() {
                    let rule = self.orient(&r);
                    if rule.lhs.is_empty() {
                        return Err(Error::Invalid("the ideal contains a nonzero constant".into()));
                    }
                    self.rules.push(rule);
                }
            }
        }
        Ok(self.residuals(degree_cap)?.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{preset_bl, preset_suq2};

    fn t_poly(cs: &[i64]) -> UPoly {
        UPoly(cs.iter().map(|&c| GaussRational::from_int(c)).collect()).trimmed()
    }

    #[test]
    fn polynomial_gcd_and_reduction() {
        // (t − 1)(t + 2) and (t − 1)(t + 3)
        let a = t_poly(&[-2, 1, 1]);
        let b = t_poly(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), t_poly(&[-1, 1]));
        let f = RatFn::new(a, b);
        assert_eq!(f, RatFn::new(t_poly(&[2, 1]), t_poly(&[3, 1])));
    }

    #[test]
    fn laurent_scalars_convert() {
        // 1 − q^{-1} = (t² − 1)/t²
        let s = &Scalar::one() - &Scalar::q_pow(-1);
        let f = RatFn::from_scalar(&s).unwrap();
        assert_eq!(f, RatFn::new(t_poly(&[-1, 0, 1]), t_poly(&[0, 0, 1])));
        assert!(RatFn::from_scalar(&Scalar::w()).is_err());
        let half = RatFn::new(t_poly(&[1]), t_poly(&[2]));
        assert_eq!(RatFn::from_scalar(&Scalar::rational(1, 2)).unwrap(), half);
        assert_eq!(half.mul(&half.inv().unwrap()), RatFn::one());
    }

    #[test]
    fn confluent_system_needs_no_new_rules() {
        let mut sys = FieldSystem::from_presentation(&preset_suq2()).unwrap();
        let n = sys.rule_count();
        assert!(sys.complete(4, 3).unwrap());
        assert_eq!(sys.rule_count(), n);
    }

    #[test]
    fn completion_resolves_the_quaternionic_sphere_in_low_degree() {
        let pres = preset_bl();
        let mut sys = FieldSystem::from_presentation(&pres).unwrap();
        assert!(sys.complete(3, 4).unwrap());
        assert!(sys.rule_count() > pres.rules().len());
        // the residuals the defining rules leave now reduce to zero
        let pairs = pres.nonconfluent_pairs(3).unwrap();
        assert!(!pairs.is_empty());
        for p in pairs {
            assert!(sys.reduces_to_zero(&p.residual).unwrap());
        }
        assert!(!sys.reduces_to_zero(&pres.element("1").unwrap()).unwrap());
    }
}
