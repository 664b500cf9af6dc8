//! Double covers, lift factors and Borsuk-Ulam classification.
//!
//! A valid non-split descriptor induces a 2-sheeted cover of the Klein
//! bottle (the torus for type A, a Klein bottle for types B0/B1) and a pair
//! of single-valued lift factors f1, f2 obtained by projecting the lifted
//! generator images to each strand. The first factor always fails the
//! Borsuk-Ulam property with respect to the deck transformation, which is
//! what the classifiers here decide.

use crate::braid::BraidElem;
use crate::error::Error;
use crate::klein::{neg_one_pow, KleinElem};
use crate::maps::{MapClass, MapDescriptor, MapParams};

/// Where a lift factor lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceDomain {
    Torus,
    Klein,
}

/// A homomorphism out of a torus or Klein-bottle group, recorded by the
/// images of the two generators in the Klein-bottle group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceHom {
    pub domain: SurfaceDomain,
    pub img_a: KleinElem,
    pub img_b: KleinElem,
}

impl SurfaceHom {
    pub fn torus(img_a: KleinElem, img_b: KleinElem) -> Self {
        SurfaceHom { domain: SurfaceDomain::Torus, img_a, img_b }
    }

    pub fn klein(img_a: KleinElem, img_b: KleinElem) -> Self {
        SurfaceHom { domain: SurfaceDomain::Klein, img_a, img_b }
    }

    /// Do the generator images satisfy the domain's defining relation?
    pub fn satisfies_domain_relation(&self) -> bool {
        match self.domain {
            SurfaceDomain::Torus => self.img_a.mul(self.img_b) == self.img_b.mul(self.img_a),
            SurfaceDomain::Klein => {
                self.img_a.mul(self.img_b).mul(self.img_a) == self.img_b
            }
        }
    }
}

/// The double cover induced by a non-split descriptor class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoveringKind {
    /// Type A: torus cover, q(a) = alpha, q(b) = beta^2.
    Torus,
    /// Type B0: Klein cover, q(a) = alpha^2, q(b) = beta.
    KleinB0,
    /// Type B1: Klein cover, q(a) = alpha^2, q(b) = alpha beta.
    KleinB1,
}

impl CoveringKind {
    pub fn for_class(class: MapClass) -> Result<Self, Error> {
        match class {
            MapClass::Split => Err(Error::SplitMap),
            MapClass::TypeA => Ok(CoveringKind::Torus),
            MapClass::TypeB0 => Ok(CoveringKind::KleinB0),
            MapClass::TypeB1 => Ok(CoveringKind::KleinB1),
        }
    }

    /// Images of the covering-space generators under q.
    pub fn q_images(self) -> (KleinElem, KleinElem) {
        match self {
            CoveringKind::Torus => (KleinElem::new(1, 0), KleinElem::new(0, 2)),
            CoveringKind::KleinB0 => (KleinElem::new(2, 0), KleinElem::new(0, 1)),
            CoveringKind::KleinB1 => (KleinElem::new(2, 0), KleinElem::new(1, 1)),
        }
    }

    /// q as a surface homomorphism.
    pub fn covering_hom(self) -> SurfaceHom {
        let (img_a, img_b) = self.q_images();
        match self {
            CoveringKind::Torus => SurfaceHom::torus(img_a, img_b),
            _ => SurfaceHom::klein(img_a, img_b),
        }
    }
}

/// Images of the cover's generators in B2(K) under the lifted map.
///
/// Type A lifts (a, b) to (alpha_hat, beta_hat^2); B0 to (alpha_hat^2,
/// beta_hat); B1 to (alpha_hat^2, alpha_hat beta_hat). Both images are pure
/// for a valid descriptor.
pub fn lift_images(d: &MapDescriptor) -> Result<(BraidElem, BraidElem), Error> {
    match d.classify()? {
        MapClass::Split => Err(Error::SplitMap),
        MapClass::TypeA => Ok((d.alpha.clone(), d.beta.pow(2))),
        MapClass::TypeB0 => Ok((d.alpha.pow(2), d.beta.clone())),
        MapClass::TypeB1 => Ok((d.alpha.pow(2), d.alpha.mul(&d.beta))),
    }
}

/// The two lift factors as surface homomorphisms: f1 projects the lifted
/// images to the first strand, f2 to the second.
pub fn lift_factors(d: &MapDescriptor) -> Result<(SurfaceHom, SurfaceHom), Error> {
    let class = d.classify()?;
    if class.is_split() {
        return Err(Error::SplitMap);
    }
    let (img_a, img_b) = lift_images(d)?;
    let domain = if class == MapClass::TypeA {
        SurfaceDomain::Torus
    } else {
        SurfaceDomain::Klein
    };
    let f1 = SurfaceHom { domain, img_a: img_a.pr1()?, img_b: img_b.pr1()? };
    let f2 = SurfaceHom { domain, img_a: img_a.pr2()?, img_b: img_b.pr2()? };
    Ok((f1, f2))
}

/// Closed form of the first lift factor in terms of the descriptor
/// parameters, one case per class:
///
/// ```text
/// A:  a -> (r1, s1)                          b -> ((-1)^{s2} m2 + (1 + (-1)^{n2+s2}) r2, 2 s2 + n2)
/// B0: a -> ((-1)^{s1} m1 + (1 + (-1)^{s1}) r1, 0)   b -> (r2, s2)
/// B1: a -> ((1 + (-1)^{s1}) r1 + (-1)^{s1} m1, 0)   b -> (r1 + (-1)^{s1} m2 + (-1)^{s1} r2, s2 - s1)
/// ```
///
/// On every valid descriptor this equals the pr1-computed factor from
/// [`lift_factors`].
pub fn closed_form_f1(p: &MapParams, class: MapClass) -> Result<SurfaceHom, Error> {
    match class {
        MapClass::Split => Err(Error::SplitMap),
        MapClass::TypeA => Ok(SurfaceHom::torus(
            KleinElem::new(p.r1, p.s1),
            KleinElem::new(
                neg_one_pow(p.s2) * p.m2 + (1 + neg_one_pow(p.n2 + p.s2)) * p.r2,
                2 * p.s2 + p.n2,
            ),
        )),
        MapClass::TypeB0 => Ok(SurfaceHom::klein(
            KleinElem::new(neg_one_pow(p.s1) * p.m1 + (1 + neg_one_pow(p.s1)) * p.r1, 0),
            KleinElem::new(p.r2, p.s2),
        )),
        MapClass::TypeB1 => Ok(SurfaceHom::klein(
            KleinElem::new((1 + neg_one_pow(p.s1)) * p.r1 + neg_one_pow(p.s1) * p.m1, 0),
            KleinElem::new(
                p.r1 + neg_one_pow(p.s1) * p.m2 + neg_one_pow(p.s1) * p.r2,
                p.s2 - p.s1,
            ),
        )),
    }
}

/// One named necessary condition on descriptor parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstraintCheck {
    pub name: &'static str,
    pub satisfied: bool,
}

/// Outcome of [`check_constraints`]: the per-class parity and linear
/// conditions on the parameters, each marked satisfied or violated. These
/// are necessary consequences of validity used as cross-checks; the
/// homomorphism test remains the single source of truth, so a violation is
/// reported rather than rejected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintReport {
    pub checks: Vec<ConstraintCheck>,
}

impl ConstraintReport {
    pub fn satisfied(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| c.satisfied).map(|c| c.name).collect()
    }

    pub fn violated(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.satisfied).map(|c| c.name).collect()
    }

    pub fn all_satisfied(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied)
    }

    fn push(&mut self, name: &'static str, satisfied: bool) {
        self.checks.push(ConstraintCheck { name, satisfied });
    }
}

/// Can `c1 k = d1` and `c2 k = d2` be solved by one integer k?
fn linear_pair_solvable(c1: i64, d1: i64, c2: i64, d2: i64) -> bool {
    debug_assert!(c1 == 0 || c1 == 2);
    debug_assert!(c2 == 0 || c2 == 2);
    match (c1 == 0, c2 == 0) {
        (true, true) => d1 == 0 && d2 == 0,
        (true, false) => d1 == 0 && d2 % 2 == 0,
        (false, true) => d1 % 2 == 0 && d2 == 0,
        (false, false) => d1 % 2 == 0 && d1 == d2,
    }
}

/// Check the per-class necessary conditions on the parameters.
///
/// The two basepoint equations share a pair of undetermined integers (k, l)
/// coming from the path between the lifted basepoints; only the parity of l
/// matters, so they are checked as a joint feasibility question over
/// l in {0, 1} and k in Z.
pub fn check_constraints(p: &MapParams, class: MapClass) -> ConstraintReport {
    let mut report = ConstraintReport::default();
    match class {
        MapClass::Split => {}
        MapClass::TypeA => {
            report.push("n1 = -2 s1", p.n1 == -2 * p.s1);
            let feasible = [0i64, 1].into_iter().any(|l| {
                // m1 equation: m1 = -(1 + (-1)^{l+s1}) r1 + (1 - (-1)^{s1}) k.
                // (The a-image inverts as a1^{-(-1)^{s1} r1} b1^{-s1}, so the
                // r1 coefficient carries the combined parity l + s1.)
                let c1 = 1 - neg_one_pow(p.s1);
                let d1 = p.m1 + (1 + neg_one_pow(l + p.s1)) * p.r1;
                let c2 = 1 - neg_one_pow(p.n2);
                let d2 = (1 - neg_one_pow(l + p.s2)) * p.m2
                    - (neg_one_pow(l) * (1 + neg_one_pow(p.s2 + p.n2))
                        - neg_one_pow(p.n2) * (1 + neg_one_pow(p.s2)))
                        * p.r2;
                linear_pair_solvable(c1, d1, c2, d2)
            });
            report.push("basepoint equations solvable", feasible);
        }
        MapClass::TypeB0 => {
            report.push("s2 odd", p.s2 % 2 != 0);
            report.push("n1 = -2 s1", p.n1 == -2 * p.s1);
            report.push("n2 = 0", p.n2 == 0);
            let feasible = [0i64, 1].into_iter().any(|l| {
                let eq1 = (1 - neg_one_pow(p.s1 + l)) * p.m1
                    == (neg_one_pow(l) - 1) * (1 + neg_one_pow(p.s1)) * p.r1;
                let residue = p.m2
                    + neg_one_pow(p.s1 + l) * p.m1
                    + neg_one_pow(l) * (1 + neg_one_pow(p.s1)) * p.r1;
                eq1 && residue % 2 == 0
            });
            report.push("basepoint equations solvable", feasible);
        }
        MapClass::TypeB1 => {
            report.push("s2 - s1 odd", (p.s2 - p.s1) % 2 != 0);
            report.push("n1 = -2 s1", p.n1 == -2 * p.s1);
            report.push("n2 = -2 s1", p.n2 == -2 * p.s1);
            let feasible = [0i64, 1].into_iter().any(|l| {
                let eq1 = (1 - neg_one_pow(p.s1 + l)) * p.m1
                    == (neg_one_pow(l) - 1) * (1 + neg_one_pow(p.s1)) * p.r1;
                let residue = p.m2
                    - ((neg_one_pow(p.s1 + l) + 1) * (p.m1 + p.r1)
                        + (neg_one_pow(l) - 1) * p.r2);
                eq1 && residue % 2 == 0
            });
            report.push("basepoint equations solvable", feasible);
        }
    }
    report
}

/// The four homotopy types of based torus-to-Klein-bottle homomorphisms,
/// with their defining parameters:
///
/// ```text
/// type 1: a -> alpha^{r1} beta^{2 s1 + 1}   b -> beta^{2 s2}
/// type 2: a -> alpha^{r1} beta^{2 s1 + 1}   b -> alpha^{r1} beta^{2 s2 + 1}
/// type 3: a -> beta^{2 s1}                  b -> alpha^{r2} beta^{2 s2 + 1}
/// type 4: a -> alpha^{r1} beta^{2 s1}       b -> alpha^{r2} beta^{2 s2}
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusHomType {
    T1 { r1: i64, s1: i64, s2: i64 },
    T2 { r1: i64, s1: i64, s2: i64 },
    T3 { s1: i64, r2: i64, s2: i64 },
    T4 { r1: i64, s1: i64, r2: i64, s2: i64 },
}

/// Type-4 data for the second argument of the torus coincidence formula:
/// a -> alpha^{t1} beta^{2 v1}, b -> alpha^{t2} beta^{2 v2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusType4 {
    pub t1: i64,
    pub v1: i64,
    pub t2: i64,
    pub v2: i64,
}

impl TorusHomType {
    pub fn as_type4(&self) -> Option<TorusType4> {
        match *self {
            TorusHomType::T4 { r1, s1, r2, s2 } => {
                Some(TorusType4 { t1: r1, v1: s1, t2: r2, v2: s2 })
            }
            _ => None,
        }
    }
}

impl CoveringKind {
    /// The torus cover's q as type-4 data (t1, v1, t2, v2) = (1, 0, 0, 1).
    pub fn torus_type4(self) -> Option<TorusType4> {
        match self {
            CoveringKind::Torus => Some(TorusType4 { t1: 1, v1: 0, t2: 0, v2: 1 }),
            _ => None,
        }
    }
}

/// Sort a commuting pair of generator images into one of the four types by
/// the parities of the beta exponents. Images that do not commute fit no
/// type and are rejected.
pub fn classify_torus_hom(h: &SurfaceHom) -> Result<TorusHomType, Error> {
    let (a, b) = (h.img_a, h.img_b);
    match (a.n % 2 != 0, b.n % 2 != 0) {
        (true, false) => {
            if b.m != 0 {
                return Err(Error::Unclassifiable);
            }
            Ok(TorusHomType::T1 { r1: a.m, s1: (a.n - 1) / 2, s2: b.n / 2 })
        }
        (true, true) => {
            if a.m != b.m {
                return Err(Error::Unclassifiable);
            }
            Ok(TorusHomType::T2 { r1: a.m, s1: (a.n - 1) / 2, s2: (b.n - 1) / 2 })
        }
        (false, true) => {
            if a.m != 0 {
                return Err(Error::Unclassifiable);
            }
            Ok(TorusHomType::T3 { s1: a.n / 2, r2: b.m, s2: (b.n - 1) / 2 })
        }
        (false, false) => Ok(TorusHomType::T4 { r1: a.m, s1: a.n / 2, r2: b.m, s2: b.n / 2 }),
    }
}

/// Does a torus-to-Klein-bottle class fail the Borsuk-Ulam property with
/// respect to the torus cover's deck transformation?
pub fn bu_fails_torus(t: &TorusHomType) -> bool {
    match *t {
        TorusHomType::T1 { s2, .. } => s2 % 2 != 0,
        TorusHomType::T2 { .. } => false,
        TorusHomType::T3 { s1, .. } => s1 == 0,
        TorusHomType::T4 { r1, s1, r2, s2 } => {
            (s1 == 0 && (s2 != 0 || r1 == 0 || r2 % 2 != 0))
                || (r2 == 0 && s2 != 0)
                || (r1 == 0 && r2 == 0 && s1 == 0 && s2 == 0)
        }
    }
}

/// Does a Klein-bottle self-map class fail the Borsuk-Ulam property with
/// respect to the Klein cover's deck transformation? Exactly the classes
/// a -> alpha^r, b -> alpha^s beta^{2t+1}.
pub fn bu_fails_klein(h: &SurfaceHom) -> bool {
    h.img_a.n == 0 && h.img_b.n % 2 != 0
}

/// Borsuk-Ulam failure for either domain.
pub fn bu_fails(h: &SurfaceHom) -> Result<bool, Error> {
    match h.domain {
        SurfaceDomain::Torus => Ok(bu_fails_torus(&classify_torus_hom(h)?)),
        SurfaceDomain::Klein => Ok(bu_fails_klein(h)),
    }
}
