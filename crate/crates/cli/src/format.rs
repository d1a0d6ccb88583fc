//! Instance files.
//!
//! A header `d k r variant` (Boolean) or `d k r variant q metric` (q-ary),
//! then one row per line. Boolean rows are strings over `0`, `1` and `?`;
//! q-ary rows are whitespace-separated values below `q`, or `?`. Blank lines
//! and lines starting with `#` are skipped.

use std::fmt::Write as _;

use inclust_core::encode::{Entry, Metric, QaryInstance, QaryMatrix};
use inclust_core::instance::UnknownVariant;
use inclust_core::{dedupe, Instance, Symbol, TriVector, Variant};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Boolean(Instance),
    Qary(QaryInstance),
}

impl InstanceFile {
    pub fn variant(&self) -> Variant {
        match self {
            InstanceFile::Boolean(i) => i.variant(),
            InstanceFile::Qary(q) => q.variant,
        }
    }

    pub fn row_count(&self) -> usize {
        match self {
            InstanceFile::Boolean(i) => i.rows().len(),
            InstanceFile::Qary(q) => q.matrix.rows().len(),
        }
    }

    /// The Boolean instance solvers see: the file itself, or the encoding.
    pub fn boolean(&self) -> Instance {
        match self {
            InstanceFile::Boolean(i) => i.clone(),
            InstanceFile::Qary(q) => q.encoded(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: expected a header `d k r variant [q metric]`")]
    Empty,
    #[error("line {line}, column {column}: {reason}")]
    At { line: usize, column: usize, reason: Reason },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Reason {
    #[error("header needs 4 fields (d k r variant) or 6 (d k r variant q metric), found {0}")]
    HeaderArity(usize),
    #[error("{field} must be a non-negative integer, found `{text}`")]
    Number { field: &'static str, text: String },
    #[error(transparent)]
    Variant(#[from] UnknownVariant),
    #[error("unknown metric `{0}` (expected hamming or manhattan)")]
    Metric(String),
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("q must be at least 2")]
    DomainTooSmall,
    #[error("unexpected symbol `{0}`")]
    Symbol(String),
    #[error("value {value} is not below q = {q}")]
    OutOfDomain { value: usize, q: usize },
    #[error("row has {found} entries, expected d = {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("no rows after the header")]
    NoRows,
}

/// A parsed file and how many duplicate rows were dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub file: InstanceFile,
    pub duplicates_dropped: usize,
}

struct Header {
    d: usize,
    k: usize,
    r: usize,
    variant: Variant,
    domain: Option<(usize, Metric)>,
}

fn at(line: usize, column: usize, reason: Reason) -> ParseError {
    ParseError::At { line, column, reason }
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, ch)) in text.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, i)),
            (true, Some((c, s))) => {
                out.push((c, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, s)) = start {
        out.push((c, &text[s..]));
    }
    out
}

fn number(line: usize, (column, text): (usize, &str), field: &'static str) -> Result<usize, ParseError> {
    text.parse().map_err(|_| at(line, column, Reason::Number { field, text: text.into() }))
}

fn header(line: usize, text: &str) -> Result<Header, ParseError> {
    let t = tokens(text);
    if t.len() != 4 && t.len() != 6 {
        return Err(at(line, 1, Reason::HeaderArity(t.len())));
    }
    let d = number(line, t[0], "d")?;
    if d == 0 {
        return Err(at(line, t[0].0, Reason::NotPositive("d")));
    }
    let k = number(line, t[1], "k")?;
    if k == 0 {
        return Err(at(line, t[1].0, Reason::NotPositive("k")));
    }
    let r = number(line, t[2], "r")?;
    let variant = t[3].1.parse::<Variant>().map_err(|e| at(line, t[3].0, e.into()))?;
    let domain = if t.len() == 6 {
        let q = number(line, t[4], "q")?;
        if q < 2 {
            return Err(at(line, t[4].0, Reason::DomainTooSmall));
        }
        let metric = t[5].1.parse::<Metric>().map_err(|_| at(line, t[5].0, Reason::Metric(t[5].1.into())))?;
        Some((q, metric))
    } else {
        None
    };
    Ok(Header { d, k, r, variant, domain })
}

fn boolean_row(line: usize, text: &str, d: usize) -> Result<TriVector, ParseError> {
    let t = tokens(text);
    if t.len() != 1 {
        let (column, _) = t[1];
        return Err(at(line, column, Reason::Symbol(" ".into())));
    }
    let (start, word) = t[0];
    let mut symbols = Vec::with_capacity(word.len());
    for (i, ch) in word.chars().enumerate() {
        let s = Symbol::from_char(ch).ok_or_else(|| at(line, start + i, Reason::Symbol(ch.into())))?;
        symbols.push(s);
    }
    if symbols.len() != d {
        return Err(at(line, start, Reason::RowLength { expected: d, found: symbols.len() }));
    }
    Ok(TriVector::from_symbols(&symbols))
}

fn qary_row(line: usize, text: &str, d: usize, q: usize) -> Result<Vec<Entry>, ParseError> {
    let t = tokens(text);
    if t.len() != d {
        return Err(at(line, 1, Reason::RowLength { expected: d, found: t.len() }));
    }
    t.into_iter()
        .map(|(column, word)| {
            if word == "?" {
                return Ok(None);
            }
            let value: usize = word.parse().map_err(|_| at(line, column, Reason::Symbol(word.into())))?;
            if value >= q {
                return Err(at(line, column, Reason::OutOfDomain { value, q }));
            }
            Ok(Some(value))
        })
        .collect()
}

fn drop_duplicates<T: Ord + Clone>(rows: Vec<T>) -> (Vec<T>, usize) {
    let mut seen = std::collections::BTreeSet::new();
    let before = rows.len();
    let kept: Vec<T> = rows.into_iter().filter(|r| seen.insert(r.clone())).collect();
    let dropped = before - kept.len();
    (kept, dropped)
}

/// Parses an instance file. Duplicate rows are dropped (first occurrence
/// kept) unless `keep_duplicates` is set.
pub fn parse_instance(text: &str, keep_duplicates: bool) -> Result<Parsed, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (hline, htext) = lines.next().ok_or(ParseError::Empty)?;
    let h = header(hline, htext)?;
    let last_line = text.lines().count();
    match h.domain {
        None => {
            let mut rows = Vec::new();
            for (line, l) in lines {
                rows.push(boolean_row(line, l, h.d)?);
            }
            if rows.is_empty() {
                return Err(at(last_line + 1, 1, Reason::NoRows));
            }
            let before = rows.len();
            if !keep_duplicates {
                rows = dedupe(&rows);
            }
            let duplicates_dropped = before - rows.len();
            let inst = Instance::new(rows, h.k, h.r, h.variant).expect("header and rows validated");
            Ok(Parsed { file: InstanceFile::Boolean(inst), duplicates_dropped })
        }
        Some((q, metric)) => {
            let mut rows = Vec::new();
            for (line, l) in lines {
                rows.push(qary_row(line, l, h.d, q)?);
            }
            if rows.is_empty() {
                return Err(at(last_line + 1, 1, Reason::NoRows));
            }
            let (rows, duplicates_dropped) = if keep_duplicates { (rows, 0) } else { drop_duplicates(rows) };
            let matrix = QaryMatrix::new(q, rows).expect("header and rows validated");
            let inst = QaryInstance::new(matrix, h.k, h.r, h.variant, metric).expect("k checked");
            Ok(Parsed { file: InstanceFile::Qary(inst), duplicates_dropped })
        }
    }
}

pub fn print_boolean(inst: &Instance) -> String {
    let mut out = format!("{} {} {} {}\n", inst.dim(), inst.k(), inst.r(), inst.variant());
    for row in inst.rows() {
        writeln!(out, "{row}").unwrap();
    }
    out
}

pub fn print_qary(inst: &QaryInstance) -> String {
    let m = &inst.matrix;
    let mut out = format!("{} {} {} {} {} {}\n", m.dim(), inst.k, inst.r, inst.variant, m.q(), inst.metric.name());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.map_or_else(|| "?".into(), |v| v.to_string())).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

pub fn print_instance(file: &InstanceFile) -> String {
    match file {
        InstanceFile::Boolean(i) => print_boolean(i),
        InstanceFile::Qary(q) => print_qary(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean(text: &str) -> Instance {
        match parse_instance(text, false).unwrap().file {
            InstanceFile::Boolean(i) => i,
            other => panic!("expected a Boolean instance, got {other:?}"),
        }
    }

    #[test]
    fn boolean_file() {
        let inst = boolean("# two rows\n3 2 1 in\n01?\n\n110\n");
        assert_eq!((inst.dim(), inst.k(), inst.r(), inst.variant()), (3, 2, 1, Variant::In));
        assert_eq!(inst.rows()[0].to_string(), "01?");
        assert_eq!(print_boolean(&inst), "3 2 1 in\n01?\n110\n");
    }

    #[test]
    fn duplicates_dropped_unless_kept() {
        let text = "2 1 0 diam\n01\n01\n10\n";
        let p = parse_instance(text, false).unwrap();
        assert_eq!((p.file.row_count(), p.duplicates_dropped), (2, 1));
        let p = parse_instance(text, true).unwrap();
        assert_eq!((p.file.row_count(), p.duplicates_dropped), (3, 0));
    }

    #[test]
    fn qary_file() {
        let p = parse_instance("2 1 1 any 3 manhattan\n0 2\n? 1\n", false).unwrap();
        let InstanceFile::Qary(q) = &p.file else { panic!("expected q-ary") };
        assert_eq!(q.matrix.rows()[1], vec![None, Some(1)]);
        assert_eq!(q.metric, Metric::Manhattan);
        assert_eq!(print_instance(&p.file), "2 1 1 any 3 manhattan\n0 2\n? 1\n");
    }

    #[test]
    fn errors_name_positions() {
        let e = parse_instance("3 1 0 in\n0x1\n", false).unwrap_err();
        assert_eq!(e, at(2, 2, Reason::Symbol("x".into())));
        assert!(e.to_string().starts_with("line 2, column 2"));
        assert_eq!(parse_instance("", false).unwrap_err(), ParseError::Empty);
        assert_eq!(parse_instance("  \n# only\n", false).unwrap_err(), ParseError::Empty);
        assert!(matches!(
            parse_instance("3 1 0 in\n01\n", false),
            Err(ParseError::At { line: 2, reason: Reason::RowLength { expected: 3, found: 2 }, .. })
        ));
        assert!(matches!(
            parse_instance("2 1 0 center\n01\n", false),
            Err(ParseError::At { line: 1, column: 7, reason: Reason::Variant(_) })
        ));
        assert!(matches!(
            parse_instance("2 0 0 in\n01\n", false),
            Err(ParseError::At { reason: Reason::NotPositive("k"), .. })
        ));
        assert!(matches!(
            parse_instance("2 1 0 in 3 hamming\n0 3\n", false),
            Err(ParseError::At { line: 2, column: 3, reason: Reason::OutOfDomain { value: 3, q: 3 } })
        ));
        assert!(matches!(parse_instance("2 1 0 in\n", false), Err(ParseError::At { reason: Reason::NoRows, .. })));
    }
}
