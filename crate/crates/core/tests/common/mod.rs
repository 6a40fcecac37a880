//! Seeded property suites shared by the `properties` test target and the
//! acceptance run.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

use qcoact::scalar::{rat, Exponents};
use qcoact::{preset_bl, preset_suq2, preset_vs, Element, GaussRational, Letter, Presentation, Scalar};

pub const CASES: u32 = 128;
const SEED: [u8; 32] = *b"qcoact property suite seed 0001!";

/// Outcome of one suite: its name, cases run, and the first failure.
pub struct Outcome {
    pub name: &'static str,
    pub cases: u32,
    pub failure: Option<String>,
}

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn run<S: Strategy>(name: &'static str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome
where
    S::Value: std::fmt::Debug,
{
    let failure = match runner().run(&strategy, test) {
        Ok(()) => None,
        Err(TestError::Fail(reason, value)) => Some(format!("{reason} for {value:?}")),
        Err(TestError::Abort(reason)) => Some(reason.to_string()),
    };
    Outcome { name, cases: CASES, failure }
}

fn gauss() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, -2i64..=2, 1i64..=3).prop_map(|(re, im, d)| GaussRational::new(rat(re, d), rat(im, d)))
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((gauss(), -3i32..=3, -2i32..=2, -2i32..=2), 0..4).prop_map(|terms| {
        let mut s = Scalar::zero();
        for (c, t, u, w) in terms {
            s += &Scalar::monomial(c, Exponents::new(t, u, w));
        }
        s
    })
}

/// Elements over `n` generators, words up to length `len`, coefficients
/// Laurent in `t` only so they make sense in every preset.
pub fn element(n: u16, len: usize) -> impl Strategy<Value = Element> {
    let letter = (0..n, any::<bool>()).prop_map(|(index, star)| Letter { index, star });
    let coeff = (gauss(), -2i32..=2).prop_map(|(c, t)| Scalar::monomial(c, Exponents::new(t, 0, 0)));
    prop::collection::vec((coeff, prop::collection::vec(letter, 0..=len)), 0..4).prop_map(|terms| {
        let mut e = Element::zero();
        for (c, w) in terms {
            e.add_term(w, c);
        }
        e
    })
}

fn presets() -> Vec<Presentation> {
    vec![preset_suq2(), preset_vs(2).unwrap(), preset_bl()]
}

fn confluent_presets() -> Vec<Presentation> {
    vec![preset_suq2(), preset_vs(2).unwrap()]
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn ok<T>(r: qcoact::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

pub fn scalar_ring_axioms() -> Outcome {
    run("scalar ring axioms", (scalar(), scalar(), scalar()), |(a, b, c)| {
        check(&(&a * &b) * &c == &a * &(&b * &c), "associativity")?;
        check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
        check(&a * &b == &b * &a, "commutativity")?;
        check(&a + &b == &b + &a, "additive commutativity")?;
        check((&a + &(-&a)).is_zero(), "additive inverse")?;
        check(&a * &Scalar::one() == a, "unit")
    })
}

pub fn scalar_involution() -> Outcome {
    run("scalar involution", (scalar(), scalar()), |(a, b)| {
        check(a.conj().conj() == a, "involutive")?;
        check((&a * &b).conj() == &a.conj() * &b.conj(), "multiplicative")?;
        check((&a + &b).conj() == &a.conj() + &b.conj(), "additive")
    })
}

pub fn rewriting_terminates_by_decrease() -> Outcome {
    run("rewriting decreases every step", (0..3usize, element(4, 5)), |(k, e)| {
        let p = presets().swap_remove(k).with_decrease_check(true);
        let n = p.generator_count() as u16;
        let e = restrict(&e, n);
        ok(p.normalize(&e)).map(|_| ())
    })
}

pub fn normalization_is_idempotent() -> Outcome {
    run("normal forms are fixed points", (0..3usize, element(4, 5)), |(k, e)| {
        let p = presets().swap_remove(k);
        let e = restrict(&e, p.generator_count() as u16);
        let nf = ok(p.normalize(&e))?;
        check(ok(p.normalize(&nf))? == nf, "idempotence")?;
        for (w, _) in nf.terms() {
            check(ok(p.system().is_irreducible(w))?, "irreducible words")?;
        }
        Ok(())
    })
}

pub fn adjoint_is_anti_involution() -> Outcome {
    run("adjoint is an involutive anti-homomorphism", (element(4, 4), element(4, 4)), |(a, b)| {
        check(a.adjoint().adjoint() == a, "involutive")?;
        check((&a * &b).adjoint() == &b.adjoint() * &a.adjoint(), "anti-multiplicative")?;
        check((&a + &b).adjoint() == &a.adjoint() + &b.adjoint(), "additive")
    })
}

/// Needs a confluent system: on the quaternionic sphere `x3 x3^* x0` and
/// its adjoint reach different normal forms.
pub fn adjoint_respects_relations() -> Outcome {
    run("adjoint commutes with normalization", (0..2usize, element(4, 4)), |(k, e)| {
        let p = confluent_presets().swap_remove(k);
        let e = restrict(&e, p.generator_count() as u16);
        let lhs = ok(p.normalize(&ok(p.normalize(&e))?.adjoint()))?;
        check(ok(p.equal(&lhs, &e.adjoint()))?, "adjoint of normal form")
    })
}

/// `b = a + x·(l − r)·y` for a rule `l → r` is equal to `a`, and equality
/// is preserved by sums and products on either side.
pub fn equality_is_a_congruence() -> Outcome {
    let s = (0..2usize, element(3, 3), element(3, 2), element(3, 2), element(3, 3), any::<prop::sample::Index>());
    run("equal() is a congruence", s, |(k, a, x, y, c, idx)| {
        let p = confluent_presets().swap_remove(k);
        let n = p.generator_count() as u16;
        let (a, x, y, c) = (restrict(&a, n), restrict(&x, n), restrict(&y, n), restrict(&c, n));
        let rule = &p.rules()[idx.index(p.rules().len())];
        let b = &a + &(&(&x * &rule.as_relation()) * &y);
        check(ok(p.equal(&a, &b))?, "relation multiples vanish")?;
        check(ok(p.equal(&b, &a))?, "symmetry")?;
        check(ok(p.equal(&(&a + &c), &(&b + &c)))?, "sum")?;
        check(ok(p.equal(&(&a * &c), &(&b * &c)))?, "right product")?;
        check(ok(p.equal(&(&c * &a), &(&c * &b)))?, "left product")?;
        check(ok(p.equal(&a.adjoint(), &b.adjoint()))?, "adjoint")
    })
}

/// Drops letters outside the first `n` generators by folding indices.
fn restrict(e: &Element, n: u16) -> Element {
    let mut out = Element::zero();
    for (w, c) in e.terms() {
        let w = w.iter().map(|l| Letter { index: l.index % n, star: l.star }).collect();
        out.add_term(w, c.clone());
    }
    out
}

pub fn all() -> Vec<Outcome> {
    vec![
        scalar_ring_axioms(),
        scalar_involution(),
        rewriting_terminates_by_decrease(),
        normalization_is_idempotent(),
        adjoint_is_anti_involution(),
        adjoint_respects_relations(),
        equality_is_a_congruence(),
    ]
}
