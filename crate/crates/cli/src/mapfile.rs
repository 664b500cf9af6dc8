//! Map descriptor files: one `alpha = <word>` line and one `beta = <word>`
//! line, with `#` comments and blank lines allowed.

use crate::syntax::{parse_braid, WordError};
use kleinbraid::MapDescriptor;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MapFileError {
    #[error("line {line}: {source}")]
    Word {
        line: usize,
        #[source]
        source: WordError,
    },
    #[error("line {line}: expected `alpha = <word>` or `beta = <word>`")]
    Malformed { line: usize },
    #[error("line {line}: duplicate `{key}` line")]
    Duplicate { line: usize, key: &'static str },
    #[error("missing `{key}` line")]
    Missing { key: &'static str },
}

/// Parse a map descriptor file.
pub fn parse_map_descriptor(text: &str) -> Result<MapDescriptor, MapFileError> {
    let mut alpha = None;
    let mut beta = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, word_text) =
            line.split_once('=').ok_or(MapFileError::Malformed { line: line_no })?;
        let slot = match key.trim() {
            "alpha" => &mut alpha,
            "beta" => &mut beta,
            _ => return Err(MapFileError::Malformed { line: line_no }),
        };
        let key_name: &'static str = if key.trim() == "alpha" { "alpha" } else { "beta" };
        if slot.is_some() {
            return Err(MapFileError::Duplicate { line: line_no, key: key_name });
        }
        let braid = parse_braid(word_text)
            .map_err(|source| MapFileError::Word { line: line_no, source })?;
        *slot = Some(braid);
    }

    let alpha = alpha.ok_or(MapFileError::Missing { key: "alpha" })?;
    let beta = beta.ok_or(MapFileError::Missing { key: "beta" })?;
    Ok(MapDescriptor::new(alpha, beta))
}

/// Render a descriptor back into the file format, with an optional leading
/// comment.
pub fn render_map_descriptor(d: &MapDescriptor, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str("alpha = ");
    out.push_str(&crate::syntax::print_braid(&d.alpha));
    out.push('\n');
    out.push_str("beta = ");
    out.push_str(&crate::syntax::print_braid(&d.beta));
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kleinbraid::BraidElem;

    #[test]
    fn parses_a_simple_file() {
        let d = parse_map_descriptor("# trivial type A\nalpha = 1\nbeta = s\n").unwrap();
        assert_eq!(d.alpha, BraidElem::identity());
        assert_eq!(d.beta, BraidElem::sigma());
    }

    #[test]
    fn round_trips_through_render() {
        let d = kleinbraid::maps::fixture_b0_even(1, 2, 3, 0).unwrap();
        let text = render_map_descriptor(&d, Some("fixture"));
        assert_eq!(parse_map_descriptor(&text).unwrap(), d);
    }

    #[test]
    fn reports_errors_with_line_numbers() {
        assert_eq!(
            parse_map_descriptor("alpha = 1\n"),
            Err(MapFileError::Missing { key: "beta" })
        );
        assert_eq!(
            parse_map_descriptor("alpha = 1\nbeta = s\nalpha = s"),
            Err(MapFileError::Duplicate { line: 3, key: "alpha" })
        );
        assert!(matches!(
            parse_map_descriptor("alpha = 1\nbeta = zz"),
            Err(MapFileError::Word { line: 2, .. })
        ));
        assert_eq!(
            parse_map_descriptor("gamma = 1"),
            Err(MapFileError::Malformed { line: 1 })
        );
    }
}
