//! Plain-ASCII concrete syntax for braid normal forms.
//!
//! Grammar: `word := "1" | term+`, `term := gen ("^" int)?` with
//! `gen` one of `a1 b1 a2 b2 s`; uppercase letters denote inverses
//! (`A1` is `a1^-1`, `S` is `sigma^-1`) and whitespace between terms is
//! optional. `1` denotes the empty word.

use kleinbraid::braid::sigma_sq_word;
use kleinbraid::words::Sym;
use kleinbraid::{BraidElem, FreeWord, KleinElem};
use thiserror::Error;

/// Exponent magnitudes accepted by the parser.
pub const MAX_EXPONENT: i64 = 10_000;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent overflow at byte {pos}: |exponent| must be at most {MAX_EXPONENT}")]
    ExponentOverflow { pos: usize },
}

fn syntax(pos: usize, msg: impl Into<String>) -> WordError {
    WordError::Syntax { pos, msg: msg.into() }
}

enum Term {
    A1,
    B1,
    A2,
    B2,
    Sigma,
    One,
}

/// sigma^e in normal form: sigma^{2t} = W^t with W the sigma^2 word.
fn sigma_pow(e: i64) -> BraidElem {
    let t = e.div_euclid(2);
    let odd = e.rem_euclid(2) == 1;
    let factor = if t >= 0 { sigma_sq_word() } else { sigma_sq_word().invert() };
    let mut word = FreeWord::identity();
    for _ in 0..t.unsigned_abs() {
        word = word.concat(&factor);
    }
    BraidElem::new(word, KleinElem::IDENTITY, odd)
}

fn term_elem(term: &Term, e: i64) -> BraidElem {
    match term {
        Term::A1 => BraidElem::new(FreeWord::identity(), KleinElem::new(e, 0), false),
        Term::B1 => BraidElem::new(FreeWord::identity(), KleinElem::new(0, e), false),
        Term::A2 => BraidElem::new(FreeWord::gen_pow(Sym::A2, e), KleinElem::IDENTITY, false),
        Term::B2 => BraidElem::new(FreeWord::gen_pow(Sym::B2, e), KleinElem::IDENTITY, false),
        Term::Sigma => sigma_pow(e),
        Term::One => BraidElem::identity(),
    }
}

/// Parse a braid word and return its normal form.
pub fn parse_braid(text: &str) -> Result<BraidElem, WordError> {
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut acc = BraidElem::identity();
    let mut seen_term = false;

    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let c = bytes[i];
        let (term, sign) = match c {
            b'a' | b'A' | b'b' | b'B' => {
                let sign = if c.is_ascii_uppercase() { -1i64 } else { 1 };
                let strand = bytes
                    .get(i + 1)
                    .ok_or_else(|| syntax(i, "generator letter needs a strand digit 1 or 2"))?;
                let term = match (c.to_ascii_lowercase(), strand) {
                    (b'a', b'1') => Term::A1,
                    (b'a', b'2') => Term::A2,
                    (b'b', b'1') => Term::B1,
                    (b'b', b'2') => Term::B2,
                    _ => return Err(syntax(i + 1, "expected strand digit 1 or 2")),
                };
                i += 2;
                (term, sign)
            }
            b's' => {
                i += 1;
                (Term::Sigma, 1)
            }
            b'S' => {
                i += 1;
                (Term::Sigma, -1)
            }
            b'1' => {
                i += 1;
                (Term::One, 1)
            }
            _ => {
                return Err(syntax(
                    i,
                    format!("unexpected character {:?}; expected a1 b1 a2 b2 s or 1", c as char),
                ))
            }
        };

        let mut exponent = 1i64;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let digits_start = i;
            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == digits_start || !bytes[i - 1].is_ascii_digit() {
                return Err(syntax(digits_start, "expected an integer exponent after ^"));
            }
            exponent = text[digits_start..i]
                .parse()
                .map_err(|_| WordError::ExponentOverflow { pos: digits_start })?;
            if exponent.unsigned_abs() > MAX_EXPONENT as u64 {
                return Err(WordError::ExponentOverflow { pos: digits_start });
            }
        }

        let _ = start;
        acc = acc.mul(&term_elem(&term, sign * exponent));
        seen_term = true;
    }

    if !seen_term {
        return Err(syntax(0, "empty word; write 1 for the identity"));
    }
    Ok(acc)
}

/// Canonical rendering `w a1^r b1^s s^k` with unit exponents elided and `1`
/// for the identity. `parse_braid(print_braid(x)) == x` for every normal
/// form.
pub fn print_braid(x: &BraidElem) -> String {
    let mut parts: Vec<String> = Vec::new();

    let letters = x.free_part().letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let name = match (l.sym, l.sign) {
            (Sym::A2, 1) => "a2",
            (Sym::A2, _) => "A2",
            (Sym::B2, 1) => "b2",
            (Sym::B2, _) => "B2",
        };
        let count = j - i;
        parts.push(if count == 1 { name.to_string() } else { format!("{name}^{count}") });
        i = j;
    }

    let g = x.klein_part();
    if g.m != 0 {
        parts.push(if g.m == 1 { "a1".to_string() } else { format!("a1^{}", g.m) });
    }
    if g.n != 0 {
        parts.push(if g.n == 1 { "b1".to_string() } else { format!("b1^{}", g.n) });
    }
    if !x.is_pure() {
        parts.push("s".to_string());
    }

    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}
