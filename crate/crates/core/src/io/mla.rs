//! The `.mla` algebra format.
//!
//! ```text
//! elements: a b
//! upper:
//! a b
//! b b
//! lower:
//! a a
//! a b
//! ```
//!
//! Row `x` of `upper:` lists `x ⩗ y` for each column `y` in elements order;
//! `lower:` likewise for `x ⩘ y`.

use crate::algebra::AlgebraTables;
use crate::error::{Error, Result};
use crate::io::mlx::{content, directive, parse_labels};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Table {
    Upper,
    Lower,
}

impl Table {
    fn name(self) -> &'static str {
        match self {
            Table::Upper => "upper",
            Table::Lower => "lower",
        }
    }
}

pub fn parse_mla(text: &str) -> Result<AlgebraTables> {
    let mut labels: Option<Vec<String>> = None;
    let mut upper: Option<Vec<usize>> = None;
    let mut lower: Option<Vec<usize>> = None;
    // table being filled and rows read so far
    let mut current: Option<(Table, Vec<usize>, usize)> = None;
    let mut last_line = 0;

    let finish = |cur: Option<(Table, Vec<usize>, usize)>,
                  n: usize,
                  line: usize,
                  upper: &mut Option<Vec<usize>>,
                  lower: &mut Option<Vec<usize>>|
     -> Result<()> {
        if let Some((t, cells, rows)) = cur {
            if rows != n {
                return Err(parse_error(
                    line,
                    format!("{} table has {rows} rows, expected {n}", t.name()),
                ));
            }
            match t {
                Table::Upper => *upper = Some(cells),
                Table::Lower => *lower = Some(cells),
            }
        }
        Ok(())
    };

    for (k, raw) in text.split('\n').enumerate() {
        let line = k + 1;
        let s = content(raw);
        if s.is_empty() {
            continue;
        }
        last_line = line;
        if let Some(rest) = directive(s, "elements") {
            if labels.is_some() {
                return Err(parse_error(line, "duplicate elements line"));
            }
            if current.is_some() {
                return Err(parse_error(line, "elements line inside a table"));
            }
            labels = Some(parse_labels(line, rest)?);
            continue;
        }
        let header = if let Some(rest) = directive(s, "upper") {
            Some((Table::Upper, rest))
        } else {
            directive(s, "lower").map(|rest| (Table::Lower, rest))
        };
        if let Some((t, rest)) = header {
            let Some(l) = &labels else {
                return Err(parse_error(line, "table before `elements:` line"));
            };
            let seen = match t {
                Table::Upper => upper.is_some(),
                Table::Lower => lower.is_some(),
            } || current.as_ref().is_some_and(|c| c.0 == t);
            if seen {
                return Err(parse_error(line, format!("duplicate section `{}`", t.name())));
            }
            if !rest.is_empty() {
                return Err(parse_error(line, format!("rows go on the lines after `{}:`", t.name())));
            }
            finish(current.take(), l.len(), line, &mut upper, &mut lower)?;
            current = Some((t, Vec::new(), 0));
            continue;
        }
        let (Some(l), Some((t, cells, rows))) = (&labels, current.as_mut()) else {
            return Err(parse_error(line, format!("unexpected line `{s}`")));
        };
        let n = l.len();
        if *rows == n {
            return Err(parse_error(
                line,
                format!("{} table has more than {n} rows", t.name()),
            ));
        }
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.len() != n {
            return Err(parse_error(
                line,
                format!(
                    "{} row {} has {} entries, expected {n}",
                    t.name(),
                    *rows + 1,
                    tokens.len()
                ),
            ));
        }
        for tok in tokens {
            let i = l
                .iter()
                .position(|x| x == tok)
                .ok_or_else(|| parse_error(line, format!("unknown label `{tok}`")))?;
            cells.push(i);
        }
        *rows += 1;
    }

    let Some(labels) = labels else {
        return Err(parse_error(last_line.max(1), "missing `elements:` line"));
    };
    finish(current.take(), labels.len(), last_line, &mut upper, &mut lower)?;
    let upper = upper.ok_or_else(|| parse_error(last_line, "missing `upper:` table"))?;
    let lower = lower.ok_or_else(|| parse_error(last_line, "missing `lower:` table"))?;
    AlgebraTables::new(labels, upper, lower)
}

pub fn emit_mla(a: &AlgebraTables) -> String {
    let n = a.len();
    let mut out = format!("elements: {}\n", a.labels().join(" "));
    for (name, table) in [("upper", a.upper_table()), ("lower", a.lower_table())] {
        out.push_str(name);
        out.push_str(":\n");
        for row in table.chunks(n.max(1)) {
            let cells: Vec<&str> = row.iter().map(|&i| a.labels()[i].as_str()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra_from_biposet;
    use crate::gen::divisor_mixed_lattice;

    #[test]
    fn divisors_of_twelve_round_trip() {
        let a = algebra_from_biposet(&divisor_mixed_lattice(12).unwrap()).unwrap();
        let text = emit_mla(&a);
        assert_eq!(text.lines().count(), 1 + 2 * 7);
        assert_eq!(parse_mla(&text).unwrap(), a);
    }

    #[test]
    fn one_element() {
        let a = parse_mla("elements: e\nupper:\ne\nlower:\ne\n").unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(emit_mla(&a), "elements: e\nupper:\ne\nlower:\ne\n");
    }

    #[test]
    fn crlf_and_comments() {
        let a = parse_mla("# chain\r\nelements: a b\r\nupper:\r\na b\r\nb b # row b\r\nlower:\r\na a\r\na b\r\n")
            .unwrap();
        assert_eq!(a.up(0, 1), 1);
        assert_eq!(a.lo(1, 0), 0);
    }

    #[test]
    fn errors_name_the_row() {
        let cases = [
            ("elements: a b\nupper:\na b\nb\nlower:\na a\na b\n", 4, "upper row 2 has 1 entries"),
            ("elements: a b\nupper:\na b\nb z\n", 4, "unknown label"),
            ("elements: a b\nupper:\na b\nlower:\na a\na b\n", 4, "upper table has 1 rows"),
            ("elements: a b\nupper:\na b\nb b\nb b\n", 5, "more than 2 rows"),
            ("elements: a b\nupper:\na b\nb b\n", 4, "missing `lower:`"),
            ("upper:\n", 1, "before `elements:`"),
            ("elements: a\nupper:\na\nupper:\na\n", 4, "duplicate section"),
        ];
        for (text, want_line, want) in cases {
            match parse_mla(text) {
                Err(Error::Parse { line, message }) => {
                    assert!(message.contains(want), "{text:?}: {message}");
                    assert_eq!(line, want_line, "{text:?}: {message}");
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
