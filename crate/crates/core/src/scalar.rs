//! Exact coefficient arithmetic.
//!
//! A [`Scalar`] is a Laurent polynomial over the Gaussian rationals in three
//! variables: `t` (a square root of `q`), `u` (a square root of `p`) and a
//! unit-modulus parameter `w`. The involution conjugates coefficients and
//! sends `w` to `w^-1`, so `w * conj(w) = 1` holds identically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = BigRational;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_integer(n.into()))
    }

    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|^2`, always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRational { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Whether printing needs a leading minus sign (used to format sums).
    fn is_negative_like(&self) -> bool {
        if self.im.is_zero() {
            self.re.is_negative()
        } else {
            self.re.is_zero() && self.im.is_negative()
        }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, o: GaussRational) -> GaussRational {
        GaussRational { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, o: GaussRational) -> GaussRational {
        &self - &o
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, o: GaussRational) -> GaussRational {
        &self * &o
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRational::real(&self.re * &o.re);
        }
        GaussRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im = if self.im.abs().is_one() {
            if self.im.is_negative() {
                "-i".to_string()
            } else {
                "i".to_string()
            }
        } else {
            format!("{}i", fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            write!(f, "{}", im)
        } else if self.im.is_negative() {
            write!(f, "{}{}", fmt_rational(&self.re), im)
        } else {
            write!(f, "{}+{}", fmt_rational(&self.re), im)
        }
    }
}

impl FromStr for GaussRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let sc: Scalar = s.parse()?;
        sc.as_constant().ok_or_else(|| Error::Invalid(format!("`{s}` is not a numeric constant")))
    }
}

/// Exponent triple of a Laurent monomial `t^t u^u w^w`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents {
    pub t: i32,
    pub u: i32,
    pub w: i32,
}

impl Exponents {
    pub const ONE: Exponents = Exponents { t: 0, u: 0, w: 0 };

    pub fn new(t: i32, u: i32, w: i32) -> Self {
        Exponents { t, u, w }
    }

    fn add(self, o: Exponents) -> Exponents {
        Exponents { t: self.t + o.t, u: self.u + o.u, w: self.w + o.w }
    }
}

/// Laurent polynomial in `t = q^(1/2)`, `u = p^(1/2)`, `w` over the Gaussian
/// rationals, kept in canonical form (no zero coefficients).
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<Exponents, GaussRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, Exponents::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::constant(GaussRational::real(rat(n, d)))
    }

    pub fn i() -> Self {
        Self::constant(GaussRational::i())
    }

    pub fn monomial(c: GaussRational, e: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Scalar { terms }
    }

    /// `t^k`, i.e. `q^(k/2)`.
    pub fn t_pow(k: i32) -> Self {
        Self::monomial(GaussRational::one(), Exponents::new(k, 0, 0))
    }

    /// `u^k`, i.e. `p^(k/2)`.
    pub fn u_pow(k: i32) -> Self {
        Self::monomial(GaussRational::one(), Exponents::new(0, k, 0))
    }

    pub fn w_pow(k: i32) -> Self {
        Self::monomial(GaussRational::one(), Exponents::new(0, 0, k))
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::t_pow(2 * k)
    }

    /// `p^k`.
    pub fn p_pow(k: i32) -> Self {
        Self::u_pow(2 * k)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn p() -> Self {
        Self::p_pow(1)
    }

    pub fn w() -> Self {
        Self::w_pow(1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussRational)> {
        self.terms.iter()
    }

    /// The value if this scalar is a constant (no `t`, `u`, `w` dependence).
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&Exponents::ONE).cloned(),
            _ => None,
        }
    }

    /// The single term of a monomial scalar.
    pub fn as_monomial(&self) -> Option<(&Exponents, &GaussRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_w_free(&self) -> bool {
        self.terms.keys().all(|e| e.w == 0)
    }

    fn add_term(&mut self, e: Exponents, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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

    pub fn scale(&self, c: &GaussRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Ring involution: conjugates coefficients and negates the `w` exponent.
    pub fn conj(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(e, c)| (Exponents::new(e.t, e.u, -e.w), c.conj())).collect() }
    }

    /// Multiplicative inverse, defined for monomials only (the units of the ring).
    pub fn inverse(&self) -> Option<Scalar> {
        let (e, c) = self.as_monomial()?;
        Some(Scalar::monomial(c.inv()?, Exponents::new(-e.t, -e.u, -e.w)))
    }

    /// Integer power; negative powers exist only for monomials.
    pub fn pow(&self, k: i32) -> Option<Scalar> {
        if k < 0 {
            return self.inverse()?.pow(-k);
        }
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        Some(acc)
    }

    /// Rational power `num/den` of a monic monomial whose exponents are all
    /// divisible by `den` (e.g. `q^(1/2) = t`).
    pub fn root_pow(&self, num: i32, den: i32) -> Option<Scalar> {
        if den == 1 {
            return self.pow(num);
        }
        let (e, c) = self.as_monomial()?;
        if !c.is_one() || e.t % den != 0 || e.u % den != 0 || e.w % den != 0 {
            return None;
        }
        Some(Scalar::monomial(GaussRational::one(), Exponents::new(e.t / den * num, e.u / den * num, e.w / den * num)))
    }

    /// Evaluates at `t = t_val`, `u = u_val`, `w = w_val`.
    ///
    /// Requires `t_val, u_val > 0` and `|w_val| = 1`.
    pub fn eval(&self, t_val: &Rational, u_val: &Rational, w_val: &GaussRational) -> Result<GaussRational> {
        check_point(t_val, u_val, Some(w_val))?;
        let mut acc = GaussRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            v = &v * &GaussRational::real(rat_pow(t_val, e.t));
            v = &v * &GaussRational::real(rat_pow(u_val, e.u));
            v = &v * &gauss_pow_unit(w_val, e.w);
            acc = acc + v;
        }
        Ok(acc)
    }

    /// Substitutes numeric `t` and `u`, keeping `w` symbolic.
    pub fn specialize(&self, t_val: &Rational, u_val: &Rational) -> Result<Scalar> {
        check_point(t_val, u_val, None)?;
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            let f = rat_pow(t_val, e.t) * rat_pow(u_val, e.u);
            out.add_term(Exponents::new(0, 0, e.w), c * &GaussRational::real(f));
        }
        Ok(out)
    }

    /// Substitutes `w = w_val` (unit modulus), keeping `t` and `u` symbolic.
    pub fn specialize_w(&self, w_val: &GaussRational) -> Result<Scalar> {
        if !w_val.norm_sqr().is_one() {
            return Err(Error::InvalidPoint(format!("|w|^2 = {} is not 1", w_val.norm_sqr())));
        }
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            out.add_term(Exponents::new(e.t, e.u, 0), c * &gauss_pow_unit(w_val, e.w));
        }
        Ok(out)
    }

    /// Replaces `u` by `t` (identifies `p` with `q`).
    pub fn u_to_t(&self) -> Scalar {
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            out.add_term(Exponents::new(e.t + e.u, 0, e.w), c.clone());
        }
        out
    }
}

fn check_point(t_val: &Rational, u_val: &Rational, w_val: Option<&GaussRational>) -> Result<()> {
    if !t_val.is_positive() || !u_val.is_positive() {
        return Err(Error::InvalidPoint(format!("parameters must be positive (t = {t_val}, u = {u_val})")));
    }
    if let Some(w) = w_val {
        if !w.norm_sqr().is_one() {
            return Err(Error::InvalidPoint(format!("|w|^2 = {} is not 1", w.norm_sqr())));
        }
    }
    Ok(())
}

fn rat_pow(r: &Rational, k: i32) -> Rational {
    if k >= 0 {
        num::pow::pow(r.clone(), k as usize)
    } else {
        num::pow::pow(r.recip(), (-k) as usize)
    }
}

fn gauss_pow_unit(w: &GaussRational, k: i32) -> GaussRational {
    // |w| = 1, so w^-1 = conj(w)
    let base = if k >= 0 { w.clone() } else { w.conj() };
    let mut acc = GaussRational::one();
    for _ in 0..k.unsigned_abs() {
        acc = &acc * &base;
    }
    acc
}

impl From<GaussRational> for Scalar {
    fn from(c: GaussRational) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, o: Scalar) -> Scalar {
        self += &o;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1.add(*e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

fn fmt_var(out: &mut Vec<String>, half: &str, full: &str, k: i32) {
    if k == 0 {
        return;
    }
    if k % 2 == 0 {
        let n = k / 2;
        out.push(if n == 1 { full.to_string() } else { format!("{full}^{n}") });
    } else {
        out.push(if k == 1 { half.to_string() } else { format!("{half}^{k}") });
    }
}

fn fmt_monomial(e: &Exponents) -> String {
    let mut parts = Vec::new();
    fmt_var(&mut parts, "sqrt(q)", "q", e.t);
    fmt_var(&mut parts, "sqrt(p)", "p", e.u);
    if e.w == 1 {
        parts.push("w".to_string());
    } else if e.w != 0 {
        parts.push(format!("w^{}", e.w));
    }
    parts.join("*")
}

fn fmt_coeff(c: &GaussRational) -> String {
    if !c.re.is_zero() && !c.im.is_zero() {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Output is valid scalar syntax: `Scalar::from_str(&s.to_string()) == s`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest powers first
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_like();
            let c_abs = if neg { -c } else { c.clone() };
            let mono = fmt_monomial(e);
            let body = if mono.is_empty() {
                fmt_coeff(&c_abs)
            } else if c_abs.is_one() {
                mono
            } else {
                format!("{}*{}", fmt_coeff(&c_abs), mono)
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::syntax::parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert!((&Scalar::one() + &Scalar::from_int(-1)).is_zero());
        let two_q = &Scalar::q() + &Scalar::q();
        assert_eq!(two_q, Scalar::monomial(GaussRational::from_int(2), Exponents::new(2, 0, 0)));
        assert_eq!(&s("1 - q^2") + &s("q^2"), Scalar::one());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&Scalar::t_pow(1) * &Scalar::t_pow(1), Scalar::q());
        assert_eq!(&Scalar::w() * &Scalar::w_pow(-1), Scalar::one());
        assert_eq!(&s("1 - q") * &s("1 + q"), s("1 - q^2"));
    }

    #[test]
    fn conjugation_examples() {
        let x = &(&Scalar::i() * &Scalar::w()) * &Scalar::t_pow(1);
        let expected = &(&(-&Scalar::i()) * &Scalar::w_pow(-1)) * &Scalar::t_pow(1);
        assert_eq!(x.conj(), expected);
        assert_eq!(s("-q").conj(), s("-q"));
    }

    #[test]
    fn evaluation_examples() {
        let one = GaussRational::one();
        let v = s("1 - q^2").eval(&rat(3, 4), &rat(1, 2), &one).unwrap();
        assert_eq!(v, GaussRational::real(rat(175, 256)));
        let w = GaussRational::new(rat(3, 5), rat(4, 5));
        let v = (&Scalar::w() * &Scalar::w_pow(-1)).eval(&rat(1, 3), &rat(1, 3), &w).unwrap();
        assert!(v.is_one());
        let v = s("q - p").eval(&rat(3, 4), &rat(3, 4), &one).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn evaluation_rejects_bad_points() {
        let one = GaussRational::one();
        let w_bad = GaussRational::new(rat(1, 2), rat(1, 2));
        assert!(Scalar::q().eval(&rat(1, 2), &rat(1, 2), &w_bad).is_err());
        assert!(Scalar::q().eval(&rat(0, 1), &rat(1, 2), &one).is_err());
        assert!(Scalar::q().eval(&rat(1, 2), &rat(-1, 2), &one).is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["-(1-q^2)*sqrt(q)^-1", "3/5+4/5i", "(2-i)*w^-3*p + q^(3/2)", "0", "-i*w"] {
            let v = s(text);
            assert_eq!(s(&v.to_string()), v, "{text} printed as {v}");
        }
    }

    #[test]
    fn half_powers() {
        assert_eq!(s("q^(1/2)"), Scalar::t_pow(1));
        assert_eq!(s("q^(-3/2)"), Scalar::t_pow(-3));
        assert_eq!(s("sqrt(p)^2"), Scalar::p());
    }

    #[test]
    fn perfect_square_roots() {
        assert_eq!(rational_sqrt(&rat(81, 256)), Some(rat(9, 16)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
    }

    fn arb_gauss() -> impl Strategy<Value = GaussRational> {
        (-4i64..5, 1i64..4, -3i64..4).prop_map(|(a, b, c)| GaussRational::new(rat(a, b), rat(c, b)))
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        prop::collection::vec((arb_gauss(), -3i32..4, -2i32..3, -2i32..3), 0..4).prop_map(|ts| {
            let mut out = Scalar::zero();
            for (c, t, u, w) in ts {
                out += &Scalar::monomial(c, Exponents::new(t, u, w));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn conj_is_ring_involution(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn eval_is_star_homomorphism(a in arb_scalar(), b in arb_scalar()) {
            let (t, u) = (rat(3, 4), rat(1, 2));
            let w = GaussRational::new(rat(3, 5), rat(4, 5));
            let ea = a.eval(&t, &u, &w).unwrap();
            let eb = b.eval(&t, &u, &w).unwrap();
            prop_assert_eq!((&a * &b).eval(&t, &u, &w).unwrap(), &ea * &eb);
            prop_assert_eq!(a.conj().eval(&t, &u, &w).unwrap(), ea.conj());
        }

        #[test]
        fn display_parse_identity(a in arb_scalar()) {
            prop_assert_eq!(s(&a.to_string()), a);
        }
    }
}
