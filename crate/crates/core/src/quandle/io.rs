//! Plain-text table format.
//!
//! ```text
//! # optional comment lines, only before the header
//! quandle 3
//! 0 2 1
//! 2 1 0
//! 1 0 2
//! ```
//!
//! Row x lists x*0 .. x*(n-1) as 0-based integers separated by single
//! spaces; every line ends with LF.

use super::{QuandleError, QuandleTable};

pub fn serialize(q: &QuandleTable) -> String {
    let n = q.size();
    let mut out = String::with_capacity(n * n * 4 + 16);
    out.push_str(&format!("quandle {n}\n"));
    for x in 0..n {
        let row: Vec<String> = q.row(x).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn deserialize(text: &str) -> Result<QuandleTable, QuandleError> {
    let err = |line: usize, msg: String| QuandleError::Parse { line, msg };
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (header_line, n) = loop {
        let Some((ln, l)) = lines.next() else {
            return Err(err(1, "missing header".into()));
        };
        if l.starts_with('#') {
            continue;
        }
        if l.ends_with('\r') {
            return Err(err(ln, "CR line ending".into()));
        }
        let n = l
            .strip_prefix("quandle ")
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n >= 1 && n <= u16::MAX as usize)
            .ok_or_else(|| err(ln, format!("expected 'quandle <n>', got '{l}'")))?;
        break (ln, n);
    };
    let mut star = Vec::with_capacity(n * n);
    for r in 0..n {
        let Some((ln, l)) = lines.next() else {
            return Err(err(header_line + r + 1, format!("header says {n} rows, found {r}")));
        };
        if l.is_empty() {
            return Err(err(ln, format!("header says {n} rows, found {r}")));
        }
        if l.ends_with('\r') {
            return Err(err(ln, "CR line ending".into()));
        }
        let fields: Vec<&str> = l.split(' ').collect();
        if fields.len() != n {
            return Err(err(ln, format!("row {r} has {} entries, expected {n}", fields.len())));
        }
        let mut seen = vec![false; n];
        for f in fields {
            let v: usize = f.parse().map_err(|_| err(ln, format!("bad entry '{f}'")))?;
            if v >= n || seen[v] {
                return Err(err(ln, format!("row {r} not a permutation")));
            }
            seen[v] = true;
            star.push(v as u16);
        }
    }
    match lines.next() {
        Some((_, "")) if lines.next().is_none() => {}
        Some((ln, _)) => return Err(err(ln, format!("header says {n} rows, found more"))),
        None => return Err(err(header_line + n, "missing final LF".into())),
    }
    QuandleTable::new(n, star).map_err(|e| err(header_line, e.to_string()))
}
