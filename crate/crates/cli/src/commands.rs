//! Argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success; 1 syntax or invocation error; 2 invalid map
//! (the homomorphism check fails); 3 split map; 4 internal cross-check
//! disagreement (the two Nielsen routes differ, which must never happen).

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use kleinbraid::lift::{bu_fails, check_constraints, lift_factors};
use kleinbraid::maps::{self, MapDescriptor};
use kleinbraid::nielsen;
use kleinbraid::sweep::{self, FixtureFamily};
use kleinbraid::Error as CoreError;

use crate::mapfile::{parse_map_descriptor, render_map_descriptor};
use crate::report::{
    class_label, HomDoc, ReportDocument, SweepDocument, SweepRowDoc, WordDocument,
};
use crate::syntax::{parse_braid, print_braid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SYNTAX: i32 = 1;
pub const EXIT_INVALID_MAP: i32 = 2;
pub const EXIT_SPLIT_MAP: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "kleinbraid",
    version,
    about = "Exact calculator for 2-valued non-split self-maps of the Klein bottle",
    long_about = "Exact calculator for the braid group B2(K) of the Klein bottle and for \
                  2-valued non-split self-maps of the Klein bottle: braid normal forms, map \
                  validation and classification, lift factors with Borsuk-Ulam status, and \
                  Nielsen fixed-point numbers computed by two independent routes that must \
                  agree.\n\nBraid words use generators a1 b1 a2 b2 s (s is sigma), uppercase \
                  for inverses, optional ^exponent, and 1 for the empty word."
)]
pub struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "b0-even")]
    B0Even,
    #[value(name = "b0-odd")]
    B0Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepFamilyArg {
    Both,
    #[value(name = "b0-even")]
    B0Even,
    #[value(name = "b0-odd")]
    B0Odd,
}

/// An integer range argument: `N`, `A..B` (inclusive) or `v1,v2,...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range(pub Vec<i64>);

const RANGE_VALUE_BOUND: i64 = 1000;
const RANGE_SIZE_BOUND: usize = 100_000;

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_value = |t: &str| -> Result<i64, String> {
            let v: i64 = t.trim().parse().map_err(|_| format!("`{t}` is not an integer"))?;
            if v.abs() > RANGE_VALUE_BOUND {
                return Err(format!("|{v}| exceeds the range bound {RANGE_VALUE_BOUND}"));
            }
            Ok(v)
        };
        let values = if let Some((a, b)) = s.split_once("..") {
            let (a, b) = (parse_value(a)?, parse_value(b)?);
            if a > b {
                return Err(format!("empty range {a}..{b}"));
            }
            (a..=b).collect()
        } else if s.contains(',') {
            s.split(',').map(parse_value).collect::<Result<Vec<_>, _>>()?
        } else {
            vec![parse_value(s)?]
        };
        if values.len() > RANGE_SIZE_BOUND {
            return Err(format!("range has more than {RANGE_SIZE_BOUND} values"));
        }
        Ok(Range(values))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form of a braid word
    Normalize { word: String },

    /// Multiply two braid words and print the normal form of the product
    Mul { lhs: String, rhs: String },

    /// Print the normal form of the inverse of a braid word
    Inv { word: String },

    /// Validate a map descriptor file: homomorphism check plus the
    /// per-class parameter constraints
    Check { file: PathBuf },

    /// Print a descriptor's type: A, B0, B1 or split
    Classify { file: PathBuf },

    /// Print the lift factors f1, f2 and their Borsuk-Ulam status
    Lift { file: PathBuf },

    /// Full Nielsen report: closed formula and coincidence cross-check
    Nielsen { file: PathBuf },

    /// Emit map descriptor files for the built-in fixture families
    Fixtures {
        /// Which family to generate
        #[arg(value_enum)]
        family: FamilyArg,
        /// x values (N, A..B or comma list)
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x: Range,
        /// y values
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        y: Range,
        /// z values (must be odd)
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        z: Range,
        /// l values (b0-even only)
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        l: Range,
        /// Directory for the generated files; required for more than one
        /// descriptor, stdout otherwise
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },

    /// Batch-evaluate Nielsen reports over fixture grids
    Sweep {
        /// Which family grid to sweep
        #[arg(long, value_enum, default_value_t = SweepFamilyArg::Both)]
        family: SweepFamilyArg,
        /// x values
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        x: Range,
        /// y values
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        y: Range,
        /// z values; even entries are skipped
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        z: Range,
        /// l values (b0-even cells only)
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        l: Range,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn syntax(message: impl Into<String>) -> Self {
        Failure { code: EXIT_SYNTAX, message: message.into() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::InvalidMap => EXIT_INVALID_MAP,
            CoreError::SplitMap => EXIT_SPLIT_MAP,
            CoreError::BadParity => EXIT_SYNTAX,
            _ => EXIT_INVALID_MAP,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Entry point shared by the binary and the tests.
pub fn run(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_SYNTAX
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<i32, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Normalize { word } => {
            let x = parse_word(&word)?;
            emit_word(format, &x, out);
            Ok(EXIT_OK)
        }
        Command::Mul { lhs, rhs } => {
            let x = parse_word(&lhs)?;
            let y = parse_word(&rhs)?;
            emit_word(format, &x.mul(&y), out);
            Ok(EXIT_OK)
        }
        Command::Inv { word } => {
            let x = parse_word(&word)?;
            emit_word(format, &x.inverse(), out);
            Ok(EXIT_OK)
        }
        Command::Check { file } => {
            let d = load_descriptor(&file)?;
            let params = d.params();
            let mut doc = ReportDocument::header(&d);
            doc.params = Some((&params).into());
            doc.constraints = Some((&check_constraints(&params, params.class())).into());
            emit_report(format, &doc, out);
            Ok(if doc.valid { EXIT_OK } else { EXIT_INVALID_MAP })
        }
        Command::Classify { file } => {
            let d = load_descriptor(&file)?;
            let class = d.classify()?;
            if format == Format::Json {
                emit_report(format, &ReportDocument::header(&d), out);
            } else {
                let _ = writeln!(out, "{}", class_label(class));
            }
            Ok(EXIT_OK)
        }
        Command::Lift { file } => {
            let d = load_descriptor(&file)?;
            let class = d.classify()?;
            if class.is_split() {
                return Err(CoreError::SplitMap.into());
            }
            let mut doc = ReportDocument::header(&d);
            doc.params = Some((&d.params()).into());
            let (f1, f2) = lift_factors(&d)?;
            doc.f1 = Some(HomDoc::new(&f1, bu_fails(&f1)?));
            doc.f2 = Some(HomDoc::new(&f2, bu_fails(&f2)?));
            emit_report(format, &doc, out);
            Ok(EXIT_OK)
        }
        Command::Nielsen { file } => {
            let d = load_descriptor(&file)?;
            let class = d.classify()?;
            if class.is_split() {
                return Err(CoreError::SplitMap.into());
            }
            let params = d.params();
            let mut doc = ReportDocument::header(&d);
            doc.params = Some((&params).into());
            doc.constraints = Some((&check_constraints(&params, class)).into());
            let (f1, f2) = lift_factors(&d)?;
            doc.f1 = Some(HomDoc::new(&f1, bu_fails(&f1)?));
            doc.f2 = Some(HomDoc::new(&f2, bu_fails(&f2)?));
            let report = nielsen::analyze(&d)?;
            doc.nielsen = Some((&report).into());
            emit_report(format, &doc, out);
            Ok(if report.agree { EXIT_OK } else { EXIT_DISAGREE })
        }
        Command::Fixtures { family, x, y, z, l, out_dir } => {
            fixtures_command(family, &x, &y, &z, &l, out_dir.as_deref(), out)
        }
        Command::Sweep { family, x, y, z, l } => {
            sweep_command(format, family, &x, &y, &z, &l, out)
        }
    }
}

fn parse_word(text: &str) -> Result<kleinbraid::BraidElem, Failure> {
    parse_braid(text).map_err(|e| Failure::syntax(e.to_string()))
}

fn load_descriptor(path: &std::path::Path) -> Result<MapDescriptor, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::syntax(format!("{}: {e}", path.display())))?;
    parse_map_descriptor(&text)
        .map_err(|e| Failure::syntax(format!("{}: {e}", path.display())))
}

fn emit_word(format: Format, x: &kleinbraid::BraidElem, out: &mut impl Write) {
    match format {
        Format::Human => {
            let _ = writeln!(out, "{}", print_braid(x));
        }
        Format::Json => {
            let doc = WordDocument { normal_form: print_braid(x) };
            let _ = write!(out, "{}", doc.to_json());
        }
    }
}

fn emit_report(format: Format, doc: &ReportDocument, out: &mut impl Write) {
    match format {
        Format::Human => {
            let _ = write!(out, "{}", doc.to_human());
        }
        Format::Json => {
            let _ = write!(out, "{}", doc.to_json());
        }
    }
}

fn fixtures_command(
    family: FamilyArg,
    xs: &Range,
    ys: &Range,
    zs: &Range,
    ls: &Range,
    out_dir: Option<&std::path::Path>,
    out: &mut impl Write,
) -> Result<i32, Failure> {
    let mut items: Vec<(String, String)> = Vec::new();
    for &x in &xs.0 {
        for &y in &ys.0 {
            for &z in &zs.0 {
                match family {
                    FamilyArg::B0Even => {
                        for &l in &ls.0 {
                            let d = maps::fixture_b0_even(x, y, z, l)?;
                            let stem = format!("b0-even_x{x}_y{y}_z{z}_l{l}");
                            let comment = format!("kleinbraid fixture b0-even x={x} y={y} z={z} l={l}");
                            items.push((stem, render_map_descriptor(&d, Some(&comment))));
                        }
                    }
                    FamilyArg::B0Odd => {
                        let d = maps::fixture_b0_odd(x, y, z)?;
                        let stem = format!("b0-odd_x{x}_y{y}_z{z}");
                        let comment = format!("kleinbraid fixture b0-odd x={x} y={y} z={z}");
                        items.push((stem, render_map_descriptor(&d, Some(&comment))));
                    }
                }
            }
        }
    }

    match out_dir {
        None if items.len() == 1 => {
            let _ = write!(out, "{}", items[0].1);
            Ok(EXIT_OK)
        }
        None => Err(Failure::syntax(format!(
            "{} descriptors requested; pass --out-dir to write them as files",
            items.len()
        ))),
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .map_err(|e| Failure::syntax(format!("{}: {e}", dir.display())))?;
            for (stem, text) in &items {
                let path = dir.join(format!("{stem}.map"));
                std::fs::write(&path, text)
                    .map_err(|e| Failure::syntax(format!("{}: {e}", path.display())))?;
                let _ = writeln!(out, "{}", path.display());
            }
            Ok(EXIT_OK)
        }
    }
}

fn sweep_command(
    format: Format,
    family: SweepFamilyArg,
    xs: &Range,
    ys: &Range,
    zs: &Range,
    ls: &Range,
    out: &mut impl Write,
) -> Result<i32, Failure> {
    let odd_zs: Vec<i64> = zs.0.iter().copied().filter(|z| z % 2 != 0).collect();
    if odd_zs.is_empty() {
        return Err(Failure::syntax("no odd z values in range"));
    }

    let mut cells = Vec::new();
    if matches!(family, SweepFamilyArg::Both | SweepFamilyArg::B0Even) {
        cells.extend(sweep::grid(FixtureFamily::B0Even, &xs.0, &ys.0, &odd_zs, &ls.0)?);
    }
    if matches!(family, SweepFamilyArg::Both | SweepFamilyArg::B0Odd) {
        cells.extend(sweep::grid(FixtureFamily::B0Odd, &xs.0, &ys.0, &odd_zs, &ls.0)?);
    }

    let rows = sweep::evaluate(&cells)?;
    let disagreement = rows.iter().any(|r| !r.agree);

    match format {
        Format::Json => {
            let doc = SweepDocument { rows: rows.iter().map(SweepRowDoc::from).collect() };
            let _ = write!(out, "{}", doc.to_json());
        }
        Format::Human => {
            let _ = writeln!(
                out,
                "{:<8} {:>5} {:>5} {:>5} {:>5}  {:<5} {:>8} {:>12}  {:<6} {:<4}",
                "family", "x", "y", "z", "l", "type", "formula", "coincidence", "agree", "zero"
            );
            for row in &rows {
                let l_text = row.cell.l.map_or("-".to_string(), |l| l.to_string());
                let _ = writeln!(
                    out,
                    "{:<8} {:>5} {:>5} {:>5} {:>5}  {:<5} {:>8} {:>12}  {:<6} {:<4}",
                    row.cell.family.label(),
                    row.cell.x,
                    row.cell.y,
                    row.cell.z,
                    l_text,
                    class_label(row.class),
                    row.n_formula,
                    row.n_coincidence,
                    if row.agree { "yes" } else { "no" },
                    if row.zero { "yes" } else { "no" }
                );
            }
        }
    }

    Ok(if disagreement { EXIT_DISAGREE } else { EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(Range::from_str("3").unwrap().0, vec![3]);
        assert_eq!(Range::from_str("-2..1").unwrap().0, vec![-2, -1, 0, 1]);
        assert_eq!(Range::from_str("1,3,5").unwrap().0, vec![1, 3, 5]);
        assert!(Range::from_str("5..1").is_err());
        assert!(Range::from_str("abc").is_err());
        assert!(Range::from_str("100000").is_err());
    }
}
