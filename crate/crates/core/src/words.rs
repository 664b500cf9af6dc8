//! Freely reduced words in the free group F2(a2, b2).

/// Generator symbols of the rank-2 free group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    A2,
    B2,
}

/// One signed letter: `sym` raised to `sign`, with `sign` in {+1, -1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub sym: Sym,
    pub sign: i8,
}

impl Letter {
    pub fn new(sym: Sym, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Letter { sym, sign }
    }

    pub fn inverse(self) -> Self {
        Letter { sym: self.sym, sign: -self.sign }
    }

    fn cancels(self, other: Letter) -> bool {
        self.sym == other.sym && self.sign == -other.sign
    }
}

/// A freely reduced word; the empty word is the identity.
///
/// Reduction is an invariant of the type: every constructor and operation
/// returns a word with no adjacent `x x^{-1}` pair, so equality of values is
/// equality in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// Freely reduce an arbitrary letter sequence. Idempotent.
    pub fn reduce(raw: &[Letter]) -> Self {
        let mut word = FreeWord { letters: Vec::with_capacity(raw.len()) };
        for &l in raw {
            word.push_reduced(l);
        }
        word
    }

    /// The one-letter word `sym`.
    pub fn gen(sym: Sym) -> Self {
        FreeWord { letters: vec![Letter::new(sym, 1)] }
    }

    /// The word `sym^e`.
    pub fn gen_pow(sym: Sym, e: i64) -> Self {
        let sign = if e >= 0 { 1 } else { -1 };
        FreeWord {
            letters: std::iter::repeat_n(Letter::new(sym, sign), e.unsigned_abs() as usize)
                .collect(),
        }
    }

    fn push_reduced(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    /// Reduced product `self * other`.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push_reduced(l);
        }
        out
    }

    /// Group inverse: reversed letters with flipped signs.
    pub fn invert(&self) -> FreeWord {
        // The reversal of a reduced word is reduced.
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Signed count of occurrences of `sym`.
    pub fn exp_sum(&self, sym: Sym) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.sym == sym)
            .map(|l| i64::from(l.sign))
            .sum()
    }

    /// Homomorphic image under a2 -> `image_a2`, b2 -> `image_b2`, reduced.
    pub fn substitute(&self, image_a2: &FreeWord, image_b2: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in &self.letters {
            let img = match l.sym {
                Sym::A2 => image_a2,
                Sym::B2 => image_b2,
            };
            if l.sign == 1 {
                for &x in &img.letters {
                    out.push_reduced(x);
                }
            } else {
                for &x in img.letters.iter().rev() {
                    out.push_reduced(x.inverse());
                }
            }
        }
        out
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}
