//! Deterministic sample generators for the property and verification suites.
//!
//! Everything here is seeded, so test runs and batch verifications are
//! reproducible bit for bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidElem;
use crate::klein::KleinElem;
use crate::maps::{self, MapDescriptor};
use crate::words::{FreeWord, Letter, Sym};

/// A seeded generator for reproducible sampling.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A freely reduced word of length at most `max_len`.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> FreeWord {
    let len = rng.random_range(0..=max_len);
    let letters: Vec<Letter> = (0..len)
        .map(|_| {
            let sym = if rng.random_bool(0.5) { Sym::A2 } else { Sym::B2 };
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            Letter::new(sym, sign)
        })
        .collect();
    FreeWord::reduce(&letters)
}

/// A Klein-bottle element with both exponents in [-bound, bound].
pub fn random_klein(rng: &mut impl Rng, bound: i64) -> KleinElem {
    KleinElem::new(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound))
}

/// A braid normal form with |w| <= max_len, |r|, |s| <= bound and k in {0, 1}.
pub fn random_braid(rng: &mut impl Rng, max_len: usize, bound: i64) -> BraidElem {
    BraidElem::new(
        random_word(rng, max_len),
        random_klein(rng, bound),
        rng.random_bool(0.5),
    )
}

/// A random pure braid (k = 0).
pub fn random_pure(rng: &mut impl Rng, max_len: usize, bound: i64) -> BraidElem {
    BraidElem::new(random_word(rng, max_len), random_klein(rng, bound), false)
}

/// All freely reduced words of length at most `max_len`.
pub fn short_words(max_len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity()];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            for sym in [Sym::A2, Sym::B2] {
                for sign in [1i8, -1] {
                    let l = Letter::new(sym, sign);
                    if stem.last().is_some_and(|&last| last == l.inverse()) {
                        continue;
                    }
                    let mut ext = stem.clone();
                    ext.push(l);
                    out.push(FreeWord::reduce(&ext));
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    out
}

/// A deterministic corpus of valid non-split descriptors.
///
/// Seeds come from the two explicit type-B0 families, the trivial-alpha
/// type-A family, and a bounded search over short normal forms. The corpus
/// is then closed under operations that preserve validity: precomposition
/// with automorphisms of the Klein-bottle group and conjugation in the braid
/// group. Every returned descriptor satisfies alpha beta alpha = beta and is
/// not split.
pub fn valid_descriptors(seed: u64, extra_rounds: usize) -> Vec<MapDescriptor> {
    let mut rng = rng(seed);
    let mut out: Vec<MapDescriptor> = Vec::new();

    for x in -2..=2 {
        for y in -2..=2 {
            for z in [-3i64, -1, 1, 3] {
                out.push(maps::fixture_b0_odd(x, y, z).expect("odd z"));
                for l in -2..=2 {
                    out.push(maps::fixture_b0_even(x, y, z, l).expect("odd z"));
                }
            }
        }
    }

    // Trivial-alpha type-A descriptors: (1, beta) is a homomorphism for any
    // beta with a sigma factor.
    for _ in 0..40 {
        let beta = BraidElem::new(random_word(&mut rng, 4), random_klein(&mut rng, 3), true);
        out.push(MapDescriptor::new(BraidElem::identity(), beta));
    }

    // Bounded search over short normal forms for type-A descriptors with a
    // non-trivial alpha.
    let words = short_words(2);
    let span = -1i64..=1;
    let mut small: Vec<BraidElem> = Vec::new();
    for w in &words {
        for r in span.clone() {
            for s in span.clone() {
                small.push(BraidElem::new(w.clone(), KleinElem::new(r, s), false));
            }
        }
    }
    let mut found = 0usize;
    'search: for alpha in &small {
        if alpha == &BraidElem::identity() {
            continue;
        }
        for beta_pure in &small {
            let beta = BraidElem::new(beta_pure.free_part().clone(), beta_pure.klein_part(), true);
            let d = MapDescriptor::new(alpha.clone(), beta);
            if d.is_homomorphism() {
                out.push(d);
                found += 1;
                if found >= 60 {
                    break 'search;
                }
            }
        }
    }

    // Closure under validity-preserving moves.
    let base = out.len();
    for _ in 0..extra_rounds {
        let pick = rng.random_range(0..base);
        let mut d = out[pick].clone();
        for _ in 0..rng.random_range(1..=2) {
            d = match rng.random_range(0..5) {
                // beta -> alpha beta (precompose with alpha -> alpha, beta -> alpha beta)
                0 => MapDescriptor::new(d.alpha.clone(), d.alpha.mul(&d.beta)),
                // beta -> alpha^{-1} beta
                1 => MapDescriptor::new(d.alpha.clone(), d.alpha.inverse().mul(&d.beta)),
                // alpha -> alpha^{-1}
                2 => MapDescriptor::new(d.alpha.inverse(), d.beta.clone()),
                // beta -> beta^{-1}
                3 => MapDescriptor::new(d.alpha.clone(), d.beta.inverse()),
                // conjugate both images by a random braid
                _ => {
                    let g = random_braid(&mut rng, 3, 2);
                    let g_inv = g.inverse();
                    MapDescriptor::new(
                        g.mul(&d.alpha).mul(&g_inv),
                        g.mul(&d.beta).mul(&g_inv),
                    )
                }
            };
        }
        debug_assert!(d.is_homomorphism());
        out.push(d);
    }

    out
}
