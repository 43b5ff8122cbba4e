//! The `RPT/1` report format: a header, then one `key=value` per line.

use crate::book::BookReport;
use crate::error::{Error, Result};
use crate::oracle::OracleResult;
use crate::verify::{ColoringReport, GridBound};

use super::tokens;

pub const HEADER: &str = "RPT/1";

/// Ordered key/value pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report(pub Vec<(String, String)>);

impl Report {
    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.0.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Body lines only, as printed on stdout.
    pub fn to_lines(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

pub fn write_report(r: &Report) -> String {
    format!("{HEADER}\n{}", r.to_lines())
}

pub fn parse_report(text: &str) -> Result<Report> {
    let mut r = Report::default();
    for (line, toks) in tokens(text, HEADER)? {
        if toks.len() != 1 {
            return Err(Error::parse(line, "expected a single key=value"));
        }
        match toks[0].split_once('=') {
            Some((k, v)) if !k.is_empty() => r.push(k, v),
            _ => return Err(Error::parse(line, format!("expected key=value, found {:?}", toks[0]))),
        }
    }
    Ok(r)
}

pub fn coloring_report(c: &ColoringReport) -> Report {
    let mut r = Report::default();
    r.push("red_count", c.red_count);
    r.push("blue_count", c.blue_count);
    r.push("max_red_degree", c.max_red_degree);
    r.push("red_is_forest", c.red_is_forest);
    r.push("red_tree_count", c.red_tree_count);
    r.push("red_spanned_vertices", c.red_spanned_vertices);
    r.push("blue_is_maximal_plane", c.blue_is_maximal_plane);
    r.push("one_red_per_pair", c.one_red_per_pair);
    r
}

pub fn book_report(b: &BookReport) -> Report {
    let mut r = Report::default();
    r.push("p1", b.p1);
    r.push("p2", b.p2);
    r.push("p3", b.p3);
    r.push("noncrossing", b.noncrossing);
    r.push("valid", b.all());
    r
}

pub fn oracle_report(o: &OracleResult) -> Report {
    let mut r = Report::default();
    r.push("selections", o.selections);
    r.push("min_max_degree", o.min_max_degree);
    let bits: String = o
        .witness
        .0
        .iter()
        .map(|d| if *d == crate::optimal::Diag::White { '1' } else { '0' })
        .collect();
    r.push("witness", bits);
    r.push("forest_colorings", o.forest_colorings);
    for (k, count) in &o.forest_stats {
        r.push(
            &format!("forests[trees={},spanned={},max_degree={}]", k.tree_count, k.spanned, k.max_degree),
            count,
        );
    }
    if let Some(w) = o.watched_forest_min {
        r.push("watched_forest_min", w);
    }
    r
}

pub fn grid_report(b: &GridBound) -> Report {
    let mut r = Report::default();
    r.push("h", b.h);
    r.push("bound", b.bound);
    r.push("no_degree_3_coloring", b.no_degree_3_coloring);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::grid_degree_bound;

    #[test]
    fn round_trip() {
        let r = grid_report(&grid_degree_bound(5).unwrap());
        let text = write_report(&r);
        assert_eq!(text, "RPT/1\nh=5\nbound=78/25\nno_degree_3_coloring=true\n");
        assert_eq!(parse_report(&text).unwrap(), r);
    }

    #[test]
    fn rejects_bare_word() {
        assert!(matches!(parse_report("RPT/1\nfoo\n"), Err(Error::Parse { line: 2, .. })));
    }
}
