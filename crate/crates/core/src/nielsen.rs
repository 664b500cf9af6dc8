//! Nielsen fixed-point numbers of non-split descriptors, by two routes.
//!
//! The closed formula consumes the descriptor parameters directly; the
//! coincidence route computes the first lift factor and evaluates the
//! Nielsen coincidence number against the covering map. The two must agree
//! on every valid descriptor, which makes the identity N(phi) = N(q, f1)
//! executable.

use crate::error::Error;
use crate::klein::neg_one_pow;
use crate::lift::{
    classify_torus_hom, lift_factors, CoveringKind, SurfaceHom, TorusHomType, TorusType4,
};
use crate::maps::{MapClass, MapDescriptor, MapParams};

/// Which case of the closed formula produced the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremBranch {
    /// k1 = 1, k2 = 0: |1 - s2| max{|(1 + (-1)^{s1}) r1 + m1|, 2}.
    B0,
    /// k1 = 1, k2 = 1: |1 - s2 + s1| max{|(1 + (-1)^{s1}) r1 + m1|, 2}.
    B1,
    /// k1 = 0 with s1, n2 even and r1 != 0: |r1| |2 s2 + n2 - 2|.
    AScaled,
    /// remaining k1 = 0 case: |2 s2 + n2 - 2|.
    AOtherwise,
}

impl TheoremBranch {
    pub fn label(self) -> &'static str {
        match self {
            TheoremBranch::B0 => "b0",
            TheoremBranch::B1 => "b1",
            TheoremBranch::AScaled => "a-scaled",
            TheoremBranch::AOtherwise => "a-otherwise",
        }
    }
}

/// Closed formula for the Nielsen number, with the branch that fired.
pub fn nielsen_number_with_branch(p: &MapParams) -> Result<(u64, TheoremBranch), Error> {
    let base = ((1 + neg_one_pow(p.s1)) * p.r1 + p.m1).unsigned_abs().max(2);
    match (p.k1, p.k2) {
        (0, 0) => Err(Error::SplitMap),
        (1, 0) => Ok(((1 - p.s2).unsigned_abs() * base, TheoremBranch::B0)),
        (1, 1) => Ok(((1 - p.s2 + p.s1).unsigned_abs() * base, TheoremBranch::B1)),
        (0, 1) => {
            let tail = (2 * p.s2 + p.n2 - 2).unsigned_abs();
            if p.s1 % 2 == 0 && p.n2 % 2 == 0 && p.r1 != 0 {
                Ok((p.r1.unsigned_abs() * tail, TheoremBranch::AScaled))
            } else {
                Ok((tail, TheoremBranch::AOtherwise))
            }
        }
        _ => unreachable!("sigma flags are 0 or 1"),
    }
}

/// Closed formula for the Nielsen number of a non-split descriptor.
pub fn nielsen_number(p: &MapParams) -> Result<u64, Error> {
    nielsen_number_with_branch(p).map(|(n, _)| n)
}

/// Nielsen coincidence number of a torus-to-Klein pair (f, g) with g of
/// type 4. Symmetric in its arguments; no formula covers f of type 2.
pub fn coincidence_torus_klein(f: &TorusHomType, g: &TorusType4) -> Result<u64, Error> {
    let TorusType4 { t1, v1, t2, v2 } = *g;
    match *f {
        TorusHomType::T1 { s1, s2, .. } => {
            Ok((t1 * (2 * v2 - 2 * s2) - t2 * (2 * v1 - 2 * s1 - 1)).unsigned_abs())
        }
        TorusHomType::T2 { .. } => Err(Error::UnsupportedType),
        TorusHomType::T3 { s1, s2, .. } => {
            Ok((t1 * (2 * v2 - 2 * s2 - 1) - t2 * (2 * v1 - 2 * s1)).unsigned_abs())
        }
        TorusHomType::T4 { r1, s1, r2, s2 } => Ok(((r1 - t1) * (s2 - v2)
            - (r2 - t2) * (s1 - v1))
            .unsigned_abs()
            + ((r1 + t1) * (s2 - v2) - (r2 + t2) * (s1 - v1)).unsigned_abs()),
    }
}

/// Nielsen coincidence number of two Klein-bottle self-maps whose a-images
/// are powers of alpha: with f_i sending a to alpha^{r_i} and b to
/// alpha^{s_i} beta^{t_i}, it is |t1 - t2| max{|r1|, |r2|}.
pub fn coincidence_klein_klein(f1: &SurfaceHom, f2: &SurfaceHom) -> Result<u64, Error> {
    if f1.img_a.n != 0 || f2.img_a.n != 0 {
        return Err(Error::UnsupportedForm);
    }
    let (t1, t2) = (f1.img_b.n, f2.img_b.n);
    let (r1, r2) = (f1.img_a.m, f2.img_a.m);
    Ok((t1 - t2).unsigned_abs() * r1.unsigned_abs().max(r2.unsigned_abs()))
}

/// The coincidence route: N(q, f1) for the covering map of the descriptor's
/// class and the pr1-computed lift factor.
pub fn nielsen_via_coincidence(d: &MapDescriptor) -> Result<u64, Error> {
    let class = d.classify()?;
    let cover = CoveringKind::for_class(class)?;
    let (f1, _) = lift_factors(d)?;
    match cover {
        CoveringKind::Torus => {
            let f1_type = classify_torus_hom(&f1)?;
            let q = cover.torus_type4().expect("torus cover is type 4");
            coincidence_torus_klein(&f1_type, &q)
        }
        CoveringKind::KleinB0 | CoveringKind::KleinB1 => {
            coincidence_klein_klein(&f1, &cover.covering_hom())
        }
    }
}

/// The exact vanishing conditions of the closed formula:
/// k1 = 1, k2 = 0 and s2 = 1; or k1 = 1, k2 = 1 and s2 - s1 = 1; or
/// k1 = 0, k2 = 1 and n2 = 2 (1 - s2).
pub fn is_nielsen_zero(p: &MapParams) -> Result<bool, Error> {
    match (p.k1, p.k2) {
        (0, 0) => Err(Error::SplitMap),
        (1, 0) => Ok(p.s2 == 1),
        (1, 1) => Ok(p.s2 - p.s1 == 1),
        (0, 1) => Ok(p.n2 == 2 * (1 - p.s2)),
        _ => unreachable!("sigma flags are 0 or 1"),
    }
}

/// Both routes side by side for one descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NielsenReport {
    pub class: MapClass,
    pub branch: TheoremBranch,
    pub n_formula: u64,
    pub n_coincidence: u64,
    /// Equality of the two routes; must hold for every valid descriptor.
    pub agree: bool,
    /// The closed formula's vanishing predicate.
    pub zero: bool,
}

/// Evaluate both routes and the vanishing predicate for a valid non-split
/// descriptor.
pub fn analyze(d: &MapDescriptor) -> Result<NielsenReport, Error> {
    let class = d.classify()?;
    if class.is_split() {
        return Err(Error::SplitMap);
    }
    let params = d.params();
    let (n_formula, branch) = nielsen_number_with_branch(&params)?;
    let n_coincidence = nielsen_via_coincidence(d)?;
    Ok(NielsenReport {
        class,
        branch,
        n_formula,
        n_coincidence,
        agree: n_formula == n_coincidence,
        zero: is_nielsen_zero(&params)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidElem;
    use crate::corpus;
    use crate::klein::KleinElem;
    use crate::maps::{fixture_b0_even, fixture_b0_odd};
    use crate::words::FreeWord;

    fn trivial_type_a() -> MapDescriptor {
        MapDescriptor::new(BraidElem::identity(), BraidElem::sigma())
    }

    fn raw_params() -> MapParams {
        MapParams {
            w1: FreeWord::identity(),
            w2: FreeWord::identity(),
            r1: 0,
            s1: 0,
            r2: 0,
            s2: 0,
            k1: 0,
            k2: 1,
            m1: 0,
            n1: 0,
            m2: 0,
            n2: 0,
        }
    }

    #[test]
    fn formula_spot_values() {
        let p = trivial_type_a().params();
        assert_eq!(nielsen_number(&p), Ok(2));
        assert_eq!(
            nielsen_number_with_branch(&p).unwrap().1,
            TheoremBranch::AOtherwise
        );

        let p = fixture_b0_even(1, 2, 3, 0).unwrap().params();
        assert_eq!(nielsen_number_with_branch(&p), Ok((4, TheoremBranch::B0)));

        for (x, y, z) in [(0i64, 0i64, 1i64), (1, 2, 3), (-2, 1, -3)] {
            let p = fixture_b0_odd(x, y, z).unwrap().params();
            let expected = (1 - z).unsigned_abs() * (2 * x + 1).unsigned_abs().max(2);
            assert_eq!(nielsen_number(&p), Ok(expected), "odd family ({x},{y},{z})");
        }

        let mut p = raw_params();
        p.k1 = 0;
        p.k2 = 0;
        assert_eq!(nielsen_number(&p), Err(Error::SplitMap));
    }

    #[test]
    fn torus_coincidence_examples() {
        let q = TorusType4 { t1: 1, v1: 0, t2: 0, v2: 1 };
        let trivial = TorusHomType::T4 { r1: 0, s1: 0, r2: 0, s2: 0 };
        assert_eq!(coincidence_torus_klein(&trivial, &q), Ok(2));

        // f = g of type 4 has no coincidences forced
        let f = TorusHomType::T4 { r1: 1, s1: 0, r2: 0, s2: 1 };
        assert_eq!(coincidence_torus_klein(&f, &q), Ok(0));

        // type 1 degenerate case: 2 v2 - 2 s2 = 0 with t2 = 0
        let f = TorusHomType::T1 { r1: 5, s1: 2, s2: 1 };
        assert_eq!(coincidence_torus_klein(&f, &q), Ok(0));

        let f = TorusHomType::T2 { r1: 1, s1: 0, s2: 0 };
        assert_eq!(coincidence_torus_klein(&f, &q), Err(Error::UnsupportedType));
    }

    #[test]
    fn klein_coincidence_examples() {
        let f = SurfaceHom::klein(KleinElem::new(1, 0), KleinElem::new(0, 1));
        let trivial = SurfaceHom::klein(KleinElem::IDENTITY, KleinElem::IDENTITY);
        assert_eq!(coincidence_klein_klein(&f, &f), Ok(0));
        assert_eq!(coincidence_klein_klein(&f, &trivial), Ok(1));

        // the coincidence route for the even fixture family
        let (x, z) = (2i64, 5i64);
        let f = SurfaceHom::klein(KleinElem::new(2 * x, 0), KleinElem::new(7, z));
        let q = CoveringKind::KleinB0.covering_hom();
        assert_eq!(
            coincidence_klein_klein(&f, &q),
            Ok((z - 1).unsigned_abs() * (2 * x).unsigned_abs().max(2))
        );

        let bad = SurfaceHom::klein(KleinElem::new(1, 1), KleinElem::IDENTITY);
        assert_eq!(coincidence_klein_klein(&bad, &q), Err(Error::UnsupportedForm));
    }

    #[test]
    fn coincidence_symmetry() {
        // the Klein formula is symmetric by inspection; check the torus one
        // against swapped type-4 arguments
        let mut rng = corpus::rng(0x57);
        for _ in 0..200 {
            let f = TorusHomType::T4 {
                r1: corpus::random_klein(&mut rng, 4).m,
                s1: corpus::random_klein(&mut rng, 4).m,
                r2: corpus::random_klein(&mut rng, 4).m,
                s2: corpus::random_klein(&mut rng, 4).m,
            };
            let g = TorusType4 {
                t1: corpus::random_klein(&mut rng, 4).m,
                v1: corpus::random_klein(&mut rng, 4).m,
                t2: corpus::random_klein(&mut rng, 4).m,
                v2: corpus::random_klein(&mut rng, 4).m,
            };
            let fwd = coincidence_torus_klein(&f, &g).unwrap();
            let f_swapped = TorusHomType::T4 { r1: g.t1, s1: g.v1, r2: g.t2, s2: g.v2 };
            let g_swapped = f.as_type4().unwrap();
            assert_eq!(fwd, coincidence_torus_klein(&f_swapped, &g_swapped).unwrap());
        }
    }

    #[test]
    fn via_coincidence_spot_values() {
        assert_eq!(nielsen_via_coincidence(&trivial_type_a()), Ok(2));
        assert_eq!(
            nielsen_via_coincidence(&fixture_b0_even(1, 2, 3, 0).unwrap()),
            Ok(4)
        );
        assert_eq!(
            nielsen_via_coincidence(&fixture_b0_odd(0, 0, 1).unwrap()),
            Ok(0)
        );
        let split = MapDescriptor::new(BraidElem::a2(), BraidElem::b2());
        assert_eq!(nielsen_via_coincidence(&split), Err(Error::SplitMap));
    }

    #[test]
    fn routes_agree_on_corpus() {
        for d in corpus::valid_descriptors(21, 200) {
            let report = analyze(&d).unwrap();
            assert!(
                report.agree,
                "formula {} != coincidence {} on {d:?}",
                report.n_formula, report.n_coincidence
            );
        }
    }

    #[test]
    fn zero_predicate_examples() {
        let p = fixture_b0_odd(0, 0, 1).unwrap().params();
        assert_eq!(is_nielsen_zero(&p), Ok(true));

        let p = trivial_type_a().params();
        assert_eq!(is_nielsen_zero(&p), Ok(false));

        let mut p = raw_params();
        p.k1 = 1;
        p.k2 = 1;
        p.s1 = 2;
        p.s2 = 3;
        assert_eq!(is_nielsen_zero(&p), Ok(true));

        p.k1 = 0;
        p.k2 = 0;
        assert_eq!(is_nielsen_zero(&p), Err(Error::SplitMap));
    }

    #[test]
    fn zero_predicate_matches_formula_on_a_small_grid() {
        let mut p = raw_params();
        for (k1, k2) in [(0u8, 1u8), (1, 0), (1, 1)] {
            p.k1 = k1;
            p.k2 = k2;
            for r1 in -3..=3 {
                for s1 in -3..=3 {
                    for s2 in -3..=3 {
                        for m1 in -3..=3 {
                            for n2 in -3..=3 {
                                p.r1 = r1;
                                p.s1 = s1;
                                p.s2 = s2;
                                p.m1 = m1;
                                p.n2 = n2;
                                assert_eq!(
                                    is_nielsen_zero(&p).unwrap(),
                                    nielsen_number(&p).unwrap() == 0,
                                    "params {p:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn report_fields_are_consistent() {
        let report = analyze(&fixture_b0_odd(0, 0, 1).unwrap()).unwrap();
        assert_eq!(report.class, MapClass::TypeB0);
        assert_eq!(report.branch, TheoremBranch::B0);
        assert_eq!(report.n_formula, 0);
        assert!(report.agree);
        assert!(report.zero);

        let split = MapDescriptor::new(BraidElem::identity(), BraidElem::a2());
        assert_eq!(analyze(&split), Err(Error::SplitMap));
        let invalid = MapDescriptor::new(BraidElem::a1(), BraidElem::sigma());
        assert_eq!(analyze(&invalid), Err(Error::InvalidMap));
    }
}
