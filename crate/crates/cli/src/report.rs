//! The structured report document emitted by the map-level commands.
//!
//! One JSON document per invocation in `--format json`; a rendered table in
//! `--format human`. Identical input yields byte-identical output.

use serde::{Deserialize, Serialize};

use kleinbraid::braid::BraidElem;
use kleinbraid::lift::{ConstraintReport, SurfaceDomain, SurfaceHom};
use kleinbraid::maps::{MapClass, MapDescriptor, MapParams};
use kleinbraid::nielsen::NielsenReport;
use kleinbraid::{FreeWord, KleinElem};

use crate::syntax::print_braid;

pub fn class_label(class: MapClass) -> &'static str {
    match class {
        MapClass::Split => "split",
        MapClass::TypeA => "A",
        MapClass::TypeB0 => "B0",
        MapClass::TypeB1 => "B1",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KleinDoc {
    pub m: i64,
    pub n: i64,
}

impl From<KleinElem> for KleinDoc {
    fn from(e: KleinElem) -> Self {
        KleinDoc { m: e.m, n: e.n }
    }
}

impl KleinDoc {
    /// Human form a^m b^n with unit exponents elided, `1` for the identity.
    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        if self.m != 0 {
            parts.push(if self.m == 1 { "a".to_string() } else { format!("a^{}", self.m) });
        }
        if self.n != 0 {
            parts.push(if self.n == 1 { "b".to_string() } else { format!("b^{}", self.n) });
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub w1: String,
    pub w2: String,
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

fn word_text(w: &FreeWord) -> String {
    print_braid(&BraidElem::new(w.clone(), KleinElem::IDENTITY, false))
}

impl From<&MapParams> for ParamsDoc {
    fn from(p: &MapParams) -> Self {
        ParamsDoc {
            w1: word_text(&p.w1),
            w2: word_text(&p.w2),
            r1: p.r1,
            s1: p.s1,
            r2: p.r2,
            s2: p.s2,
            k1: p.k1,
            k2: p.k2,
            m1: p.m1,
            n1: p.n1,
            m2: p.m2,
            n2: p.n2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintsDoc {
    pub satisfied: Vec<String>,
    pub violated: Vec<String>,
}

impl From<&ConstraintReport> for ConstraintsDoc {
    fn from(r: &ConstraintReport) -> Self {
        ConstraintsDoc {
            satisfied: r.satisfied().iter().map(|s| s.to_string()).collect(),
            violated: r.violated().iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDoc {
    pub domain: String,
    pub img_a: KleinDoc,
    pub img_b: KleinDoc,
    pub bu_fails: bool,
}

impl HomDoc {
    pub fn new(h: &SurfaceHom, bu_fails: bool) -> Self {
        HomDoc {
            domain: match h.domain {
                SurfaceDomain::Torus => "torus".to_string(),
                SurfaceDomain::Klein => "klein".to_string(),
            },
            img_a: h.img_a.into(),
            img_b: h.img_b.into(),
            bu_fails,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NielsenDoc {
    pub formula: u64,
    pub coincidence: u64,
    pub agree: bool,
    pub branch: String,
    pub zero: bool,
}

impl From<&NielsenReport> for NielsenDoc {
    fn from(r: &NielsenReport) -> Self {
        NielsenDoc {
            formula: r.n_formula,
            coincidence: r.n_coincidence,
            agree: r.agree,
            branch: r.branch.label().to_string(),
            zero: r.zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub alpha: String,
    pub beta: String,
    pub valid: bool,
    pub split: bool,
    #[serde(rename = "type")]
    pub map_type: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraints: Option<ConstraintsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f1: Option<HomDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f2: Option<HomDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nielsen: Option<NielsenDoc>,
}

impl ReportDocument {
    /// The header common to every map-level command.
    pub fn header(d: &MapDescriptor) -> Self {
        ReportDocument {
            alpha: print_braid(&d.alpha),
            beta: print_braid(&d.beta),
            valid: d.is_homomorphism(),
            split: d.alpha.is_pure() && d.beta.is_pure(),
            map_type: class_label(MapClass::from_flags(d.alpha.k(), d.beta.k())).to_string(),
            params: None,
            constraints: None,
            f1: None,
            f2: None,
            nielsen: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_human(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        out.push_str(&format!("alpha:       {}\n", self.alpha));
        out.push_str(&format!("beta:        {}\n", self.beta));
        out.push_str(&format!("valid:       {}\n", yes_no(self.valid)));
        out.push_str(&format!("split:       {}\n", yes_no(self.split)));
        out.push_str(&format!("type:        {}\n", self.map_type));
        if let Some(p) = &self.params {
            out.push_str(&format!(
                "params:      w1 = {}  r1 = {}  s1 = {}  k1 = {}  (m1, n1) = ({}, {})\n",
                p.w1, p.r1, p.s1, p.k1, p.m1, p.n1
            ));
            out.push_str(&format!(
                "             w2 = {}  r2 = {}  s2 = {}  k2 = {}  (m2, n2) = ({}, {})\n",
                p.w2, p.r2, p.s2, p.k2, p.m2, p.n2
            ));
        }
        if let Some(c) = &self.constraints {
            out.push_str(&format!(
                "constraints: {} satisfied, {} violated\n",
                c.satisfied.len(),
                c.violated.len()
            ));
            for name in &c.violated {
                out.push_str(&format!("             violated: {name}\n"));
            }
        }
        for (label, hom) in [("f1", &self.f1), ("f2", &self.f2)] {
            if let Some(h) = hom {
                out.push_str(&format!(
                    "{label}:          {}  a -> {}  b -> {}  BU fails: {}\n",
                    h.domain,
                    h.img_a.display(),
                    h.img_b.display(),
                    yes_no(h.bu_fails)
                ));
            }
        }
        if let Some(n) = &self.nielsen {
            out.push_str(&format!(
                "nielsen:     formula = {}  coincidence = {}  agree = {}  branch = {}  zero = {}\n",
                n.formula,
                n.coincidence,
                yes_no(n.agree),
                n.branch,
                yes_no(n.zero)
            ));
        }
        out
    }
}

/// Output of the word-level commands (normalize, mul, inv).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDocument {
    pub normal_form: String,
}

impl WordDocument {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

/// One evaluated sweep cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRowDoc {
    pub family: String,
    pub x: i64,
    pub y: i64,
    pub z: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    #[serde(rename = "type")]
    pub map_type: String,
    pub formula: u64,
    pub coincidence: u64,
    pub agree: bool,
    pub zero: bool,
}

impl From<&kleinbraid::sweep::SweepRow> for SweepRowDoc {
    fn from(row: &kleinbraid::sweep::SweepRow) -> Self {
        SweepRowDoc {
            family: row.cell.family.label().to_string(),
            x: row.cell.x,
            y: row.cell.y,
            z: row.cell.z,
            l: row.cell.l,
            map_type: class_label(row.class).to_string(),
            formula: row.n_formula,
            coincidence: row.n_coincidence,
            agree: row.agree,
            zero: row.zero,
        }
    }
}

/// The sweep command's JSON document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub rows: Vec<SweepRowDoc>,
}

impl SweepDocument {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kleinbraid::maps::fixture_b0_even;
    use kleinbraid::nielsen;

    #[test]
    fn document_round_trips_through_serde() {
        let d = fixture_b0_even(1, 2, 3, 0).unwrap();
        let mut doc = ReportDocument::header(&d);
        doc.params = Some((&d.params()).into());
        let report = nielsen::analyze(&d).unwrap();
        doc.nielsen = Some((&report).into());

        let json = doc.to_json();
        let parsed: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn klein_display_forms() {
        assert_eq!(KleinDoc { m: 0, n: 0 }.display(), "1");
        assert_eq!(KleinDoc { m: 1, n: 0 }.display(), "a");
        assert_eq!(KleinDoc { m: 2, n: -1 }.display(), "a^2 b^-1");
        assert_eq!(KleinDoc { m: 0, n: 3 }.display(), "b^3");
    }
}
