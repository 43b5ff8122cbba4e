//! The `BOOK/1` format for 2-page book embeddings.
//!
//! ```text
//! BOOK/1
//! spine 0 4 1 5 ...
//! upper 0 3 7 ...
//! lower 1 2 4 ...
//! ```
//!
//! Every edge id `0..m` appears on exactly one page.

use std::fmt::Write as _;

use crate::book::{BookEmbedding, Page};
use crate::error::{Error, Result};

use super::{tokens, Num};

pub const HEADER: &str = "BOOK/1";

pub fn parse_book(text: &str) -> Result<BookEmbedding> {
    let mut lines = tokens(text, HEADER)?;
    let mut spine = None;
    let mut pages: [Option<Vec<usize>>; 2] = [None, None];
    for (line, toks) in lines.by_ref() {
        let mut it = toks.iter().copied();
        let key = it.next().expect("non-empty line");
        let list = Num::new(line, &mut it).rest()?;
        let slot = match key {
            "spine" => &mut spine,
            "upper" => &mut pages[0],
            "lower" => &mut pages[1],
            other => return Err(Error::parse(line, format!("unknown keyword {other:?}"))),
        };
        if slot.replace(list).is_some() {
            return Err(Error::parse(line, format!("duplicate {key} line")));
        }
    }
    let last = lines.last_line();
    let spine = spine.ok_or_else(|| Error::parse(last, "missing spine line"))?;
    let [upper, lower] = pages;
    let (upper, lower) = (upper.unwrap_or_default(), lower.unwrap_or_default());
    let m = upper.len() + lower.len();
    let mut page: Vec<Option<Page>> = vec![None; m];
    for (list, p) in [(upper, Page::Upper), (lower, Page::Lower)] {
        for e in list {
            if e >= m || page[e].replace(p).is_some() {
                return Err(Error::InvalidBook(format!("edge {e} is listed twice or out of range")));
            }
        }
    }
    BookEmbedding::new(spine, page.into_iter().map(|p| p.expect("every slot filled")).collect())
}

pub fn write_book(d: &BookEmbedding) -> String {
    let mut s = format!("{HEADER}\nspine");
    for v in d.spine() {
        let _ = write!(s, " {v}");
    }
    for (name, p) in [("upper", Page::Upper), ("lower", Page::Lower)] {
        let _ = write!(s, "\n{name}");
        for (e, _) in d.pages().iter().enumerate().filter(|(_, &q)| q == p) {
            let _ = write!(s, " {e}");
        }
    }
    s.push('\n');
    s
}
