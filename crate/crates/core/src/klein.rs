//! Normal-form arithmetic in the Klein-bottle group <a, b : a b a = b>.

use std::ops::Mul;

use crate::words::{FreeWord, Sym};

/// (-1)^e for an integer exponent.
pub(crate) fn neg_one_pow(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The element a^m b^n. The defining relation rewrites b a = a^{-1} b, so
/// every element has exactly one such form and equality is componentwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct KleinElem {
    pub m: i64,
    pub n: i64,
}

impl KleinElem {
    pub const IDENTITY: KleinElem = KleinElem { m: 0, n: 0 };

    pub fn new(m: i64, n: i64) -> Self {
        KleinElem { m, n }
    }

    /// The generator a.
    pub fn a() -> Self {
        KleinElem { m: 1, n: 0 }
    }

    /// The generator b.
    pub fn b() -> Self {
        KleinElem { m: 0, n: 1 }
    }

    /// (m, n)^{-1} = (-(-1)^n m, -n).
    pub fn inverse(self) -> KleinElem {
        KleinElem {
            m: -neg_one_pow(self.n) * self.m,
            n: -self.n,
        }
    }

    /// Repeated multiplication; negative exponents repeat the inverse.
    pub fn pow(self, e: i64) -> KleinElem {
        let base = if e >= 0 { self } else { self.inverse() };
        let mut acc = KleinElem::IDENTITY;
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(base);
        }
        acc
    }
}

impl Mul for KleinElem {
    type Output = KleinElem;

    /// (m1, n1) (m2, n2) = (m1 + (-1)^{n1} m2, n1 + n2).
    fn mul(self, rhs: KleinElem) -> KleinElem {
        KleinElem {
            m: self.m + neg_one_pow(self.n) * rhs.m,
            n: self.n + rhs.n,
        }
    }
}

/// Image of a free word under the quotient killing b2^{-1} a2 b2 a2, i.e.
/// a2 -> a, b2 -> b. The n coordinate equals the b2 exponent sum.
pub fn eval_word(w: &FreeWord) -> KleinElem {
    w.letters().iter().fold(KleinElem::IDENTITY, |acc, l| {
        let g = match l.sym {
            Sym::A2 => KleinElem::a(),
            Sym::B2 => KleinElem::b(),
        };
        acc.mul(if l.sign == 1 { g } else { g.inverse() })
    })
}
