//! Version-tagged plain-text matroid format.
//!
//! ```text
//! matroid 1
//! n 4 r 2
//! bases 6
//! 1 2
//! 1 3
//! ...
//! ```
//!
//! Basis lines list 1-based elements in ascending order and are sorted
//! lexicographically as integer sequences. Lines starting with `#` are
//! comments and are skipped by the parser.

use std::fmt::Write as _;

use super::{exchange_violation, Matroid, SubsetWord, MAX_N};
use crate::error::{Error, Result};

/// Canonical text for `m`.
pub fn write_matroid(m: &Matroid) -> String {
    let mut rows: Vec<Vec<usize>> = m.bases().iter().map(|b| b.elements().collect()).collect();
    rows.sort();
    let mut out = String::new();
    writeln!(out, "matroid 1").unwrap();
    writeln!(out, "n {} r {}", m.n(), m.rank()).unwrap();
    writeln!(out, "bases {}", rows.len()).unwrap();
    for row in rows {
        let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

fn syntax(line: usize, reason: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        reason: reason.into(),
    }
}

fn numbers_after(line_no: usize, line: &str, keys: &[&str]) -> Result<Vec<usize>> {
    let tokens: Vec<&str> = line.split(' ').collect();
    if tokens.len() != keys.len() * 2 {
        return Err(syntax(line_no, format!("expected `{}`", keys.join(" <v> ") + " <v>")));
    }
    let mut out = Vec::new();
    for (pair, key) in tokens.chunks(2).zip(keys) {
        if pair[0] != *key {
            return Err(syntax(
                line_no,
                format!("expected keyword `{key}`, found `{}`", pair[0]),
            ));
        }
        out.push(
            pair[1]
                .parse()
                .map_err(|_| syntax(line_no, format!("`{}` is not a nonnegative integer", pair[1])))?,
        );
    }
    Ok(out)
}

/// Parses the text format, rejecting duplicates, wrong sizes and families
/// that fail basis exchange with distinct errors.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#'));

    let (no, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    if header != "matroid 1" {
        return Err(syntax(no, "expected header `matroid 1`"));
    }
    let (no, dims) = lines
        .next()
        .ok_or_else(|| syntax(no + 1, "missing `n <n> r <r>` line"))?;
    let nr = numbers_after(no, dims, &["n", "r"])?;
    let (n, r) = (nr[0], nr[1]);
    if n > MAX_N {
        return Err(syntax(no, format!("ground set size {n} exceeds {MAX_N}")));
    }
    if r > n {
        return Err(syntax(no, format!("rank {r} exceeds ground set size {n}")));
    }
    let (no, count_line) = lines
        .next()
        .ok_or_else(|| syntax(no + 1, "missing `bases <count>` line"))?;
    let count = numbers_after(no, count_line, &["bases"])?[0];
    if count == 0 {
        return Err(syntax(no, "a matroid has at least one basis"));
    }

    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(count);
    let mut bases = Vec::with_capacity(count);
    let mut last_no = no;
    for _ in 0..count {
        let (no, line) = lines
            .next()
            .ok_or_else(|| syntax(last_no + 1, format!("expected {count} basis lines")))?;
        last_no = no;
        let elements: Vec<usize> = if line.is_empty() {
            Vec::new()
        } else {
            line.split(' ')
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| syntax(no, format!("`{t}` is not an element")))
                })
                .collect::<Result<_>>()?
        };
        if elements.iter().any(|&e| e == 0 || e > n) {
            return Err(syntax(no, format!("element outside 1..={n}")));
        }
        if elements.windows(2).any(|p| p[0] >= p[1]) {
            let word = SubsetWord::from_elements(elements.iter().copied());
            if elements.windows(2).any(|p| p[0] == p[1]) {
                return Err(syntax(no, format!("repeated element in {word}")));
            }
            return Err(syntax(no, "elements must be ascending"));
        }
        let word = SubsetWord::from_elements(elements.iter().copied());
        if elements.len() != r {
            return Err(Error::WrongPopcount {
                basis: word.to_string(),
                found: elements.len(),
                rank: r,
            });
        }
        if let Some(prev) = rows.last() {
            if *prev == elements {
                return Err(Error::DuplicateBasis(word.to_string()));
            }
            if *prev > elements {
                if rows.contains(&elements) {
                    return Err(Error::DuplicateBasis(word.to_string()));
                }
                return Err(syntax(no, "basis lines must be sorted lexicographically"));
            }
        }
        rows.push(elements);
        bases.push(word);
    }
    if let Some((no, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(syntax(no, format!("unexpected trailing content `{extra}`")));
    }
    bases.sort_unstable();
    if let Some((x_set, y_set, x)) = exchange_violation(n, &bases) {
        return Err(Error::ExchangeFailure(format!(
            "removing {x} from {x_set} has no partner in {y_set}"
        )));
    }
    Ok(Matroid::from_sorted_bases(n, bases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn write_is_exact() {
        let text = write_matroid(&Matroid::uniform(2, 3));
        assert_eq!(text, "matroid 1\nn 3 r 2\nbases 3\n1 2\n1 3\n2 3\n");
        let zero = write_matroid(&Matroid::uniform(0, 2));
        assert_eq!(zero, "matroid 1\nn 2 r 0\nbases 1\n\n");
        assert_eq!(parse_matroid(&zero).unwrap(), Matroid::uniform(0, 2));
    }

    #[test]
    fn lexicographic_not_word_order() {
        // Word order would put {1,2} (0b11) before {3} ... but rank-2 rows show it best:
        // {2,3} = 0b110 < {1,4} = 0b1001 as words, yet "1 4" precedes "2 3".
        let text = write_matroid(&Matroid::uniform(2, 4));
        assert_eq!(text, "matroid 1\nn 4 r 2\nbases 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    }

    #[test]
    fn round_trip_fano() {
        let f = Matroid::fano();
        assert_eq!(parse_matroid(&write_matroid(&f)).unwrap(), f);
    }

    #[test]
    fn distinct_rejections() {
        let dup = "matroid 1\nn 3 r 2\nbases 3\n1 2\n1 2\n2 3\n";
        assert!(matches!(parse_matroid(dup), Err(Error::DuplicateBasis(_))));
        let pop = "matroid 1\nn 3 r 2\nbases 2\n1 2\n1 2 3\n";
        assert!(matches!(parse_matroid(pop), Err(Error::WrongPopcount { .. })));
        let exch = "matroid 1\nn 4 r 2\nbases 2\n1 2\n3 4\n";
        assert!(matches!(parse_matroid(exch), Err(Error::ExchangeFailure(_))));
        let bad = "matroid 2\nn 4 r 2\nbases 1\n1 2\n";
        assert!(matches!(parse_matroid(bad), Err(Error::Syntax { line: 1, .. })));
        let unsorted = "matroid 1\nn 3 r 2\nbases 2\n2 3\n1 2\n";
        assert!(matches!(parse_matroid(unsorted), Err(Error::Syntax { .. })));
    }

    #[test]
    fn comments_are_skipped() {
        let text = "matroid 1\nn 2 r 1\nbases 2\n1\n2\n# seed=1 policy=none\n";
        assert_eq!(parse_matroid(text).unwrap(), Matroid::uniform(1, 2));
    }
}
