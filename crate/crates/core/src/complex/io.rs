//! The `.cplx` text format: one facet per line as space separated positive
//! integers, `#` starts a comment line. An empty file is the complex `{∅}`.

use super::Complex;
use crate::error::{Error, Result};

/// Parses facet lists, reporting the 1-based line of the first bad token.
pub fn parse_cplx(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut facets = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut facet = Vec::new();
        for tok in line.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("expected a vertex id, found {tok:?}"),
            })?;
            if v <= 0 || v > u32::MAX as i64 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("vertex id {v} is not a positive 32-bit integer"),
                });
            }
            facet.push(v);
        }
        facets.push(facet);
    }
    Ok(facets)
}

/// Deterministic writer: facets sorted lexicographically, one per line.
pub fn write_cplx(complex: &Complex) -> String {
    let mut out = String::new();
    for facet in complex.facet_labels() {
        let line: Vec<String> = facet.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

impl Complex {
    pub fn parse(text: &str) -> Result<Complex> {
        Complex::from_facets(&parse_cplx(text)?)
    }

    pub fn parse_with_limit(text: &str, max_faces: usize) -> Result<Complex> {
        Complex::from_facets_with_limit(&parse_cplx(text)?, max_faces)
    }

    pub fn to_cplx(&self) -> String {
        write_cplx(self)
    }
}
