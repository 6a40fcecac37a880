//! Seeded random elements and scalars for randomized checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ncpoly::{Element, Letter};
use crate::scalar::{rat, Exponents, GaussRational, Scalar};

/// Deterministic generator used by every randomized check in the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small Gaussian rational with numerators in `-3..=3` and denominators
/// in `1..=3`.
pub fn gauss(r: &mut impl Rng) -> GaussRational {
    let d = r.random_range(1..=3);
    let re = r.random_range(-3..=3);
    let im = if r.random_bool(0.3) { r.random_range(-3..=3) } else { 0 };
    GaussRational::new(rat(re, d), rat(im, d))
}

/// A nonzero Gaussian rational.
pub fn nonzero_gauss(r: &mut impl Rng) -> GaussRational {
    loop {
        let g = gauss(r);
        if !num::Zero::is_zero(&g) {
            return g;
        }
    }
}

/// A scalar with up to three terms; `with_u` and `with_w` allow `p` and `w`.
pub fn scalar(r: &mut impl Rng, with_u: bool, with_w: bool) -> Scalar {
    let mut out = Scalar::zero();
    for _ in 0..r.random_range(1..=3) {
        let e = Exponents::new(
            r.random_range(-3..=3),
            if with_u { r.random_range(-2..=2) } else { 0 },
            if with_w { r.random_range(-2..=2) } else { 0 },
        );
        out += &Scalar::monomial(gauss(r), e);
    }
    out
}

/// A random element over `generators` letters with words of length at most
/// `max_degree` and monomial coefficients in `q`.
pub fn element(r: &mut impl Rng, generators: usize, max_degree: usize) -> Element {
    let mut out = Element::zero();
    for _ in 0..r.random_range(1..=4) {
        let len = r.random_range(0..=max_degree);
        let word = (0..len)
            .map(|_| Letter { index: r.random_range(0..generators) as u16, star: r.random_bool(0.5) })
            .collect();
        let c = Scalar::monomial(nonzero_gauss(r), Exponents::new(2 * r.random_range(-1..=1), 0, 0));
        out.add_term(word, c);
    }
    out
}
