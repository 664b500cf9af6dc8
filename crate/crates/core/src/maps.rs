//! Descriptors of 2-valued self-maps of the Klein bottle.
//!
//! A descriptor records the images (alpha_hat, beta_hat) of the two
//! fundamental-group generators in B2(K). It describes a map exactly when
//! alpha_hat beta_hat alpha_hat = beta_hat, the image of the defining
//! relation, and it is non-split exactly when at least one image carries a
//! sigma factor.

use crate::braid::BraidElem;
use crate::error::Error;
use crate::klein::KleinElem;
use crate::words::FreeWord;

/// The pair of generator images defining a 2-valued map candidate.
///
/// Validity is a checked property ([`MapDescriptor::is_homomorphism`]), not a
/// construction invariant, so the CLI can explain why an input fails.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapDescriptor {
    pub alpha: BraidElem,
    pub beta: BraidElem,
}

/// Classification of a descriptor by its sigma flags (k1, k2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapClass {
    /// (0, 0): both images pure; the map splits into two single-valued maps.
    Split,
    /// (0, 1): the induced double cover is the torus.
    TypeA,
    /// (1, 0): the induced double cover is again a Klein bottle.
    TypeB0,
    /// (1, 1): as B0, via the automorphism beta -> alpha beta.
    TypeB1,
}

impl MapClass {
    pub fn from_flags(k1: u8, k2: u8) -> Self {
        match (k1, k2) {
            (0, 0) => MapClass::Split,
            (0, 1) => MapClass::TypeA,
            (1, 0) => MapClass::TypeB0,
            (1, 1) => MapClass::TypeB1,
            _ => unreachable!("sigma flags are 0 or 1"),
        }
    }

    pub fn is_split(self) -> bool {
        self == MapClass::Split
    }
}

/// The parameters read off the two normal forms:
/// alpha_hat = w1 a1^{r1} b1^{s1} sigma^{k1}, beta_hat = w2 a1^{r2} b1^{s2} sigma^{k2},
/// with (m_i, n_i) the image of w_i in the Klein-bottle quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapParams {
    pub w1: FreeWord,
    pub w2: FreeWord,
    pub r1: i64,
    pub s1: i64,
    pub r2: i64,
    pub s2: i64,
    pub k1: u8,
    pub k2: u8,
    pub m1: i64,
    pub n1: i64,
    pub m2: i64,
    pub n2: i64,
}

impl MapParams {
    pub fn class(&self) -> MapClass {
        MapClass::from_flags(self.k1, self.k2)
    }
}

impl MapDescriptor {
    pub fn new(alpha: BraidElem, beta: BraidElem) -> Self {
        MapDescriptor { alpha, beta }
    }

    /// True iff alpha beta alpha = beta in B2(K).
    pub fn is_homomorphism(&self) -> bool {
        self.alpha.mul(&self.beta).mul(&self.alpha) == self.beta
    }

    /// Classify by sigma flags. Split descriptors are accepted here (both
    /// flags read off directly); non-split ones must pass the homomorphism
    /// check first.
    pub fn classify(&self) -> Result<MapClass, Error> {
        let class = MapClass::from_flags(self.alpha.k(), self.beta.k());
        if class.is_split() {
            return Ok(MapClass::Split);
        }
        if !self.is_homomorphism() {
            return Err(Error::InvalidMap);
        }
        Ok(class)
    }

    /// Componentwise read-off of the two normal forms.
    pub fn params(&self) -> MapParams {
        let w1 = self.alpha.free_part().clone();
        let w2 = self.beta.free_part().clone();
        let KleinElem { m: m1, n: n1 } = crate::klein::eval_word(&w1);
        let KleinElem { m: m2, n: n2 } = crate::klein::eval_word(&w2);
        MapParams {
            r1: self.alpha.klein_part().m,
            s1: self.alpha.klein_part().n,
            r2: self.beta.klein_part().m,
            s2: self.beta.klein_part().n,
            k1: self.alpha.k(),
            k2: self.beta.k(),
            m1,
            n1,
            m2,
            n2,
            w1,
            w2,
        }
    }
}

/// First explicit type-B0 family:
/// alpha -> (b2^{-1} a2 b2 a2) a1^x sigma, beta -> (b2^{-1} a2 b2 a2)^l a1^y b1^z,
/// valid for every x, y, l and odd z.
pub fn fixture_b0_even(x: i64, y: i64, z: i64, l: i64) -> Result<MapDescriptor, Error> {
    if z % 2 == 0 {
        return Err(Error::BadParity);
    }
    let w = crate::braid::sigma_sq_word();
    let alpha = BraidElem::new(w.clone(), KleinElem::new(x, 0), true);
    let mut w_pow = FreeWord::identity();
    let factor = if l >= 0 { w } else { w.invert() };
    for _ in 0..l.unsigned_abs() {
        w_pow = w_pow.concat(&factor);
    }
    let beta = BraidElem::new(w_pow, KleinElem::new(y, z), false);
    Ok(MapDescriptor::new(alpha, beta))
}

/// Second explicit type-B0 family:
/// alpha -> a2^{-1} a1^{x+1} sigma, beta -> a2^{-1} a1^y b1^z, valid for odd z.
pub fn fixture_b0_odd(x: i64, y: i64, z: i64) -> Result<MapDescriptor, Error> {
    if z % 2 == 0 {
        return Err(Error::BadParity);
    }
    let a2_inv = FreeWord::gen_pow(crate::words::Sym::A2, -1);
    let alpha = BraidElem::new(a2_inv.clone(), KleinElem::new(x + 1, 0), true);
    let beta = BraidElem::new(a2_inv, KleinElem::new(y, z), false);
    Ok(MapDescriptor::new(alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::sigma_sq_word;
    use crate::words::Sym;

    #[test]
    fn trivial_alpha_with_sigma_beta_is_a_homomorphism() {
        let d = MapDescriptor::new(BraidElem::identity(), BraidElem::sigma());
        assert!(d.is_homomorphism());
        assert_eq!(d.classify(), Ok(MapClass::TypeA));
    }

    #[test]
    fn remark_family_is_a_homomorphism() {
        let d = fixture_b0_even(1, 2, 3, 0).unwrap();
        assert!(d.is_homomorphism());
        assert_eq!(d.classify(), Ok(MapClass::TypeB0));
    }

    #[test]
    fn a1_and_sigma_is_not_a_homomorphism() {
        let d = MapDescriptor::new(BraidElem::a1(), BraidElem::sigma());
        assert!(!d.is_homomorphism());
        assert_eq!(d.classify(), Err(Error::InvalidMap));
    }

    #[test]
    fn split_flags_classify_without_validity() {
        let d = MapDescriptor::new(BraidElem::a2(), BraidElem::a2().mul(&BraidElem::b2()));
        assert_eq!(d.classify(), Ok(MapClass::Split));
    }

    #[test]
    fn params_read_off_examples() {
        let d = MapDescriptor::new(BraidElem::identity(), BraidElem::sigma());
        let p = d.params();
        assert_eq!(
            (p.r1, p.s1, p.r2, p.s2, p.k1, p.k2, p.m1, p.n1, p.m2, p.n2),
            (0, 0, 0, 0, 0, 1, 0, 0, 0, 0)
        );

        // beta = a2^{-1} a1^y b1^z
        let (y, z) = (5, 3);
        let d = fixture_b0_odd(0, y, z).unwrap();
        let p = d.params();
        assert_eq!(p.w2, FreeWord::gen_pow(Sym::A2, -1));
        assert_eq!((p.m2, p.n2, p.r2, p.s2, p.k2), (-1, 0, y, z, 0));

        // alpha = (b2^{-1} a2 b2 a2) a1^x sigma has m1 = n1 = 0
        let d = fixture_b0_even(4, 0, 1, 0).unwrap();
        let p = d.params();
        assert_eq!((p.m1, p.n1, p.r1, p.s1, p.k1), (0, 0, 4, 0, 1));
    }

    #[test]
    fn fixture_even_family_examples() {
        assert!(fixture_b0_even(1, 2, 3, 0).is_ok());
        assert!(fixture_b0_even(0, 0, 1, 2).is_ok());
        assert_eq!(fixture_b0_even(1, 2, 4, 0), Err(Error::BadParity));
    }

    #[test]
    fn fixture_odd_family_examples() {
        let d = fixture_b0_odd(0, 0, 1).unwrap();
        assert_eq!(d.alpha, BraidElem::new(FreeWord::gen_pow(Sym::A2, -1), KleinElem::new(1, 0), true));
        assert_eq!(d.beta, BraidElem::new(FreeWord::gen_pow(Sym::A2, -1), KleinElem::new(0, 1), false));
        assert!(fixture_b0_odd(1, 2, 3).is_ok());
        assert_eq!(fixture_b0_odd(1, 2, 2), Err(Error::BadParity));
    }

    #[test]
    fn both_families_validate_on_a_small_grid() {
        for x in -3..=3 {
            for y in -3..=3 {
                for z in [-5i64, -3, -1, 1, 3, 5] {
                    let d = fixture_b0_odd(x, y, z).unwrap();
                    assert!(d.is_homomorphism(), "odd family at ({x},{y},{z})");
                    assert_eq!(d.classify(), Ok(MapClass::TypeB0));
                    for l in -3..=3 {
                        let d = fixture_b0_even(x, y, z, l).unwrap();
                        assert!(d.is_homomorphism(), "even family at ({x},{y},{z},{l})");
                        assert_eq!(d.classify(), Ok(MapClass::TypeB0));
                    }
                }
            }
        }
    }

    #[test]
    fn fixture_params_round_trip() {
        let (x, y, z, l) = (2, -1, 3, -2);
        let p = fixture_b0_even(x, y, z, l).unwrap().params();
        assert_eq!((p.r1, p.s1, p.k1), (x, 0, 1));
        assert_eq!((p.r2, p.s2, p.k2), (y, z, 0));
        // pr of the sigma^2 word is trivial
        assert_eq!((p.m1, p.n1, p.m2, p.n2), (0, 0, 0, 0));
        assert_eq!(p.w1, sigma_sq_word());

        let p = fixture_b0_odd(x, y, z).unwrap().params();
        assert_eq!((p.r1, p.s1, p.k1), (x + 1, 0, 1));
        assert_eq!((p.r2, p.s2, p.k2), (y, z, 0));
        assert_eq!((p.m1, p.n1, p.m2, p.n2), (-1, 0, -1, 0));
    }

    #[test]
    fn split_iff_both_pure() {
        let mut rng = crate::corpus::rng(0x515);
        for _ in 0..200 {
            let a = crate::corpus::random_braid(&mut rng, 4, 3);
            let b = crate::corpus::random_braid(&mut rng, 4, 3);
            let d = MapDescriptor::new(a.clone(), b.clone());
            let split = d.params().class().is_split();
            assert_eq!(split, a.is_pure() && b.is_pure());
        }
    }
}
