//! Normal-form arithmetic in the braid group B2(K) of the Klein bottle.
//!
//! The group is presented on generators a1, b1, a2, b2, sigma with relations
//!
//! ```text
//!  1. a1 a2 = a2 a1                 6. sigma^2 = b2^{-1} a2 b2 a2
//!  2. a1 b2 a1^{-1} = a2^2 b2       7. sigma^{-1} a1 sigma = a1
//!  3. b1 a2 b1^{-1} = a2^{-1}       8. sigma^{-1} b1 sigma = sigma^{-2} b1
//!  4. b1 b2 b1^{-1} = a2 b2 a2      9. sigma^{-1} a2 sigma = a2^{-1} sigma^2 a1
//!  5. a1 b1 a1 b1^{-1} = 1         10. sigma^{-1} b2 sigma = sigma^{-2} b2^{-1} b1
//! ```
//!
//! Every element has a unique normal form `w(a2,b2) a1^r b1^s sigma^k` with
//! `k` in {0, 1}; equality is componentwise. The pure subgroup (k = 0) is the
//! semidirect product of F2(a2,b2) by the Klein-bottle group acting through
//! [`theta`]; multiplication by a sigma factor pushes sigma rightward with a
//! conjugation table derived once from relations 6-10 and normalizes sigma^2
//! into the free prefix.

use crate::error::Error;
use crate::klein::{eval_word, KleinElem};
use crate::words::{FreeWord, Sym};

/// Normal form `w(a2,b2) a1^r b1^s sigma^k`: a reduced free word, a
/// Klein-bottle element (r, s), and the sigma exponent k as a flag.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidElem {
    word: FreeWord,
    klein: KleinElem,
    sigma: bool,
}

/// theta_{a1^r b1^s}, the action of the Klein-bottle group on F2(a2, b2):
///
/// ```text
/// s even:  a2 -> a2        b2 -> a2^{2r} b2
/// s odd:   a2 -> a2^{-1}   b2 -> a2^{2r+1} b2 a2
/// ```
pub fn theta(g: KleinElem, w: &FreeWord) -> FreeWord {
    let (img_a, img_b) = theta_images(g);
    w.substitute(&img_a, &img_b)
}

fn theta_images(g: KleinElem) -> (FreeWord, FreeWord) {
    if g.n % 2 == 0 {
        (
            FreeWord::gen(Sym::A2),
            FreeWord::gen_pow(Sym::A2, 2 * g.m).concat(&FreeWord::gen(Sym::B2)),
        )
    } else {
        (
            FreeWord::gen_pow(Sym::A2, -1),
            FreeWord::gen_pow(Sym::A2, 2 * g.m + 1)
                .concat(&FreeWord::gen(Sym::B2))
                .concat(&FreeWord::gen(Sym::A2)),
        )
    }
}

/// sigma^2 as the free word b2^{-1} a2 b2 a2 (relation 6).
pub fn sigma_sq_word() -> FreeWord {
    FreeWord::gen_pow(Sym::B2, -1)
        .concat(&FreeWord::gen(Sym::A2))
        .concat(&FreeWord::gen(Sym::B2))
        .concat(&FreeWord::gen(Sym::A2))
}

/// A pure braid (w, g) = w(a2,b2) a1^r b1^s, with the semidirect-product law.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Pure {
    word: FreeWord,
    klein: KleinElem,
}

impl Pure {
    fn identity() -> Self {
        Pure { word: FreeWord::identity(), klein: KleinElem::IDENTITY }
    }

    /// (w1, g1)(w2, g2) = (w1 theta_{g1}(w2), g1 g2).
    fn mul(&self, rhs: &Pure) -> Pure {
        Pure {
            word: self.word.concat(&theta(self.klein, &rhs.word)),
            klein: self.klein.mul(rhs.klein),
        }
    }

    /// (w, g)^{-1} = (theta_{g^{-1}}(w^{-1}), g^{-1}).
    fn inverse(&self) -> Pure {
        let g_inv = self.klein.inverse();
        Pure { word: theta(g_inv, &self.word.invert()), klein: g_inv }
    }

    fn pow(&self, e: i64) -> Pure {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut acc = Pure::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

// Conjugates sigma x sigma^{-1} of the pure generators, solved once from
// relations 6-10 and frozen here. The relation suite and the associativity
// fuzz tests enforce them against the presentation.
//
//   sigma a1 sigma^{-1} = a1
//   sigma b1 sigma^{-1} = sigma^2 b1            = (W, (0,1))
//   sigma a2 sigma^{-1} = b2^{-1} a2 b2 a1      = (b2^{-1} a2 b2, (1,0))
//   sigma b2 sigma^{-1} = b2^{-1} W b1          = (b2^{-2} a2 b2 a2, (0,1))
//
// where W = b2^{-1} a2 b2 a2 is the sigma^2 word.
fn conj_a1() -> Pure {
    Pure { word: FreeWord::identity(), klein: KleinElem::a() }
}

fn conj_b1() -> Pure {
    Pure { word: sigma_sq_word(), klein: KleinElem::b() }
}

fn conj_a2() -> Pure {
    let word = FreeWord::gen_pow(Sym::B2, -1)
        .concat(&FreeWord::gen(Sym::A2))
        .concat(&FreeWord::gen(Sym::B2));
    Pure { word, klein: KleinElem::a() }
}

fn conj_b2() -> Pure {
    let word = FreeWord::gen_pow(Sym::B2, -1).concat(&sigma_sq_word());
    Pure { word, klein: KleinElem::b() }
}

/// sigma p sigma^{-1} for a pure braid p, extended from the generator table.
fn conj_by_sigma(p: &Pure) -> Pure {
    let mut acc = Pure::identity();
    for &l in p.word.letters() {
        let c = match l.sym {
            Sym::A2 => conj_a2(),
            Sym::B2 => conj_b2(),
        };
        acc = acc.mul(&if l.sign == 1 { c } else { c.inverse() });
    }
    acc = acc.mul(&conj_a1().pow(p.klein.m));
    acc.mul(&conj_b1().pow(p.klein.n))
}

impl BraidElem {
    pub fn identity() -> Self {
        BraidElem::default()
    }

    /// Assemble a normal form from its three components. Any reduced triple
    /// is a valid normal form, so this cannot fail.
    pub fn new(word: FreeWord, klein: KleinElem, sigma: bool) -> Self {
        BraidElem { word, klein, sigma }
    }

    pub fn a1() -> Self {
        BraidElem::new(FreeWord::identity(), KleinElem::a(), false)
    }

    pub fn b1() -> Self {
        BraidElem::new(FreeWord::identity(), KleinElem::b(), false)
    }

    pub fn a2() -> Self {
        BraidElem::new(FreeWord::gen(Sym::A2), KleinElem::IDENTITY, false)
    }

    pub fn b2() -> Self {
        BraidElem::new(FreeWord::gen(Sym::B2), KleinElem::IDENTITY, false)
    }

    pub fn sigma() -> Self {
        BraidElem::new(FreeWord::identity(), KleinElem::IDENTITY, true)
    }

    /// The F2(a2, b2) prefix of the normal form.
    pub fn free_part(&self) -> &FreeWord {
        &self.word
    }

    /// The a1^r b1^s part of the normal form.
    pub fn klein_part(&self) -> KleinElem {
        self.klein
    }

    /// The sigma exponent as 0 or 1.
    pub fn k(&self) -> u8 {
        u8::from(self.sigma)
    }

    /// True iff the sigma exponent is zero.
    pub fn is_pure(&self) -> bool {
        !self.sigma
    }

    fn pure_part(&self) -> Pure {
        Pure { word: self.word.clone(), klein: self.klein }
    }

    fn from_pure(p: Pure, sigma: bool) -> Self {
        BraidElem { word: p.word, klein: p.klein, sigma }
    }

    /// Normal form of the product.
    pub fn mul(&self, rhs: &BraidElem) -> BraidElem {
        let lhs = self.pure_part();
        if !self.sigma {
            return BraidElem::from_pure(lhs.mul(&rhs.pure_part()), rhs.sigma);
        }
        // self = p sigma: push sigma through rhs's pure part, then absorb
        // sigma^2 = W into the free prefix when both factors carry sigma.
        let pushed = conj_by_sigma(&rhs.pure_part());
        let p = lhs.mul(&pushed);
        if rhs.sigma {
            let p = p.mul(&Pure { word: sigma_sq_word(), klein: KleinElem::IDENTITY });
            BraidElem::from_pure(p, false)
        } else {
            BraidElem::from_pure(p, true)
        }
    }

    /// Normal form of the inverse.
    pub fn inverse(&self) -> BraidElem {
        let p_inv = self.pure_part().inverse();
        if !self.sigma {
            return BraidElem::from_pure(p_inv, false);
        }
        // (p sigma)^{-1} = sigma^{-1} p^{-1} = W^{-1} (sigma p^{-1} sigma^{-1}) sigma
        let pushed = conj_by_sigma(&p_inv);
        let w_inv = Pure { word: sigma_sq_word().invert(), klein: KleinElem::IDENTITY };
        BraidElem::from_pure(w_inv.mul(&pushed), true)
    }

    /// Repeated multiplication; negative exponents repeat the inverse.
    pub fn pow(&self, e: i64) -> BraidElem {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut acc = BraidElem::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// First-strand projection of a pure braid: kills the free prefix and
    /// returns the a1^r b1^s part.
    pub fn pr1(&self) -> Result<KleinElem, Error> {
        if self.sigma {
            return Err(Error::NotPure);
        }
        Ok(self.klein)
    }

    /// Second-strand projection of a pure braid: the free prefix maps through
    /// the Klein-bottle quotient and multiplies onto the a1^r b1^s part.
    pub fn pr2(&self) -> Result<KleinElem, Error> {
        if self.sigma {
            return Err(Error::NotPure);
        }
        Ok(eval_word(&self.word).mul(self.klein))
    }
}
