//! Reading and writing Cayley tables.
//!
//! Text form: `#` comment lines are ignored; the first remaining line is the
//! order `n`, followed by `n` rows of `n` whitespace-separated indices.
//! JSON form: `{"order": n, "table": [[...]], "labels": [...]}` with
//! `labels` optional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{validate, Semigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    /// `.json` means JSON; anything else is text.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Text,
        }
    }
}

/// A table as read from disk, before the associativity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl RawTable {
    pub fn from_semigroup(s: &Semigroup) -> Self {
        RawTable {
            order: s.order(),
            table: s.rows(),
            labels: s.labels().map(<[String]>::to_vec),
        }
    }

    pub fn into_semigroup(self) -> Result<Semigroup> {
        let s = validate(self.order, &self.table)?;
        match self.labels {
            Some(l) => s.with_labels(l),
            None => Ok(s),
        }
    }
}

pub fn parse_text(input: &str) -> Result<RawTable> {
    let mut lines = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| Error::Parse("missing order line".into()))?;
    let order: usize = head
        .parse()
        .map_err(|_| Error::Parse(format!("order line {head:?} is not an integer")))?;
    let mut table = Vec::with_capacity(order);
    for (i, line) in lines.enumerate() {
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("row {i}: {t:?} is not an index")))
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    Ok(RawTable {
        order,
        table,
        labels: None,
    })
}

pub fn parse_json(input: &str) -> Result<RawTable> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse(input: &str, format: Format) -> Result<RawTable> {
    match format {
        Format::Text => parse_text(input),
        Format::Json => parse_json(input),
    }
}

/// Reads and validates a table. `format` defaults to the one implied by
/// the file extension.
pub fn read_semigroup(path: &Path, format: Option<Format>) -> Result<Semigroup> {
    let input = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&input, format.unwrap_or_else(|| Format::from_path(path)))?.into_semigroup()
}

/// Text form. Labels have no place in it and are dropped.
pub fn to_text(s: &Semigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_json(s: &Semigroup) -> String {
    serde_json::to_string(&RawTable::from_semigroup(s)).expect("tables serialize")
}

pub fn write(s: &Semigroup, format: Format) -> String {
    match format {
        Format::Text => to_text(s),
        Format::Json => to_json(s) + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn text_round_trip() {
        let s = catalog::group_with_zero(2).unwrap();
        let text = to_text(&s);
        assert_eq!(text, "3\n0 1 2\n1 0 2\n2 2 2\n");
        assert_eq!(parse_text(&text).unwrap().into_semigroup().unwrap(), s);
    }

    #[test]
    fn comments_and_blank_lines() {
        let raw = parse_text("# chain\n\n2\n0 0\n# middle\n0 1\n").unwrap();
        assert_eq!(raw.table, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn json_with_labels() {
        let raw = parse_json(r#"{"order":2,"table":[[0,1],[1,0]],"labels":["e","a"]}"#).unwrap();
        let s = raw.into_semigroup().unwrap();
        assert_eq!(s.element_by_name("a"), Some(1));
        assert_eq!(parse_json(&to_json(&s)).unwrap().into_semigroup().unwrap(), s);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_text(""), Err(Error::Parse(_))));
        assert!(matches!(parse_text("2\n0 x\n0 0"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_text("2\n0 1\n0 0").unwrap().into_semigroup(),
            Err(Error::NonAssociative { .. })
        ));
        assert!(matches!(
            parse_text("2\n0 1").unwrap().into_semigroup(),
            Err(Error::BadRowCount { .. })
        ));
        assert!(matches!(parse_json("{\"order\":1}"), Err(Error::Parse(_))));
    }

    #[test]
    fn format_from_extension() {
        assert_eq!(Format::from_path(Path::new("a.JSON")), Format::Json);
        assert_eq!(Format::from_path(Path::new("a.txt")), Format::Text);
        assert_eq!(Format::from_path(Path::new("a")), Format::Text);
    }
}
