//! Text formats and drawings.

pub mod book;
pub mod dot;
pub mod o1p;
pub mod rbc;
pub mod report;
pub mod svg;

use crate::error::{Error, Result};

/// Non-empty, non-comment lines after a required header, with 1-based
/// line numbers.
pub(crate) struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, l) in self.inner.by_ref() {
            self.last = i + 1;
            let l = l.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            return Some((i + 1, l.split_whitespace().collect()));
        }
        None
    }
}

impl Lines<'_> {
    pub(crate) fn last_line(&self) -> usize {
        self.last
    }
}

pub(crate) fn tokens<'a>(text: &'a str, header: &str) -> Result<Lines<'a>> {
    let mut inner = text.lines().enumerate();
    match inner.next() {
        Some((_, first)) if first.trim() == header => Ok(Lines { inner, last: 1 }),
        _ => Err(Error::parse(1, format!("missing header {header}"))),
    }
}

/// Pulls numeric fields off a token stream, tagging errors with the line.
pub(crate) struct Num<'a, 'b, I: Iterator<Item = &'a str>> {
    line: usize,
    it: &'b mut I,
}

impl<'a, 'b, I: Iterator<Item = &'a str>> Num<'a, 'b, I> {
    pub(crate) fn new(line: usize, it: &'b mut I) -> Self {
        Num { line, it }
    }

    fn parse_tok(&self, t: &str) -> Result<usize> {
        t.parse()
            .map_err(|_| Error::parse(self.line, format!("expected a non-negative integer, found {t:?}")))
    }

    pub(crate) fn next(&mut self) -> Result<usize> {
        let t = self.it.next().ok_or_else(|| Error::parse(self.line, "missing field"))?;
        self.parse_tok(t)
    }

    /// A number, or `-` for none.
    pub(crate) fn optional(&mut self) -> Result<Option<usize>> {
        match self.it.next() {
            Some("-") => Ok(None),
            Some(t) => self.parse_tok(t).map(Some),
            None => Err(Error::parse(self.line, "missing field")),
        }
    }

    pub(crate) fn vertex(&mut self, n: usize) -> Result<usize> {
        let v = self.next()?;
        if v >= n {
            return Err(Error::parse(self.line, format!("vertex {v} out of range")));
        }
        Ok(v)
    }

    pub(crate) fn rest(&mut self) -> Result<Vec<usize>> {
        let toks: Vec<&str> = self.it.by_ref().collect();
        toks.into_iter().map(|t| self.parse_tok(t)).collect()
    }

    pub(crate) fn end(&mut self) -> Result<()> {
        match self.it.next() {
            None => Ok(()),
            Some(t) => Err(Error::parse(self.line, format!("unexpected trailing field {t:?}"))),
        }
    }
}
