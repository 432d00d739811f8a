//! The `.mlx` structure format.
//!
//! ```text
//! # divisors of 6
//! elements: 1 2 3 6
//! leq:
//! 1 2
//! 2 3
//! 3 6
//! sleq:
//! 1 2
//! 1 3
//! 2 6
//! 3 6
//! ```
//!
//! `#` starts a comment. Pairs under `leq:` and `sleq:` are generators and
//! are closed reflexively and transitively, unless the document contains
//! `closure: off`, in which case each section must list its full relation.

use std::collections::HashSet;

use crate::biposet::FiniteBiPoset;
use crate::error::{Error, Result};
use crate::order::{Relation, ViolationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MlxPair {
    pub from: usize,
    pub to: usize,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlxDocument {
    pub labels: Vec<String>,
    pub leq: Vec<MlxPair>,
    pub sleq: Vec<MlxPair>,
    pub closure: bool,
    /// Line numbers of the `leq:` and `sleq:` headers, when present.
    pub leq_line: Option<usize>,
    pub sleq_line: Option<usize>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits a raw line into its content with comments and CR removed.
pub(crate) fn content(raw: &str) -> &str {
    let s = raw.strip_suffix('\r').unwrap_or(raw);
    match s.find('#') {
        Some(k) => s[..k].trim(),
        None => s.trim(),
    }
}

/// Parses a directive of the form `key:` or `key: rest`.
pub(crate) fn directive<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?;
    let rest = rest.trim_start();
    rest.strip_prefix(':').map(str::trim)
}

pub(crate) fn parse_labels(line: usize, rest: &str) -> Result<Vec<String>> {
    let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    let mut seen = HashSet::new();
    for l in &labels {
        if !seen.insert(l.as_str()) {
            return Err(parse_error(line, format!("duplicate label `{l}`")));
        }
    }
    if labels.is_empty() {
        return Err(parse_error(line, "elements line lists no labels"));
    }
    Ok(labels)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Leq,
    Sleq,
}

pub fn parse_mlx(text: &str) -> Result<MlxDocument> {
    let mut labels: Option<(usize, Vec<String>)> = None;
    let mut raw_pairs: Vec<(Section, String, String, usize)> = Vec::new();
    let mut section: Option<Section> = None;
    let mut leq_line = None;
    let mut sleq_line = None;
    let mut closure: Option<bool> = None;
    let mut last_line = 0;

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
            labels = Some((line, parse_labels(line, rest)?));
            section = None;
        } else if let Some(rest) = directive(s, "closure") {
            if closure.is_some() {
                return Err(parse_error(line, "duplicate closure line"));
            }
            closure = Some(match rest {
                "on" => true,
                "off" => false,
                other => {
                    return Err(parse_error(
                        line,
                        format!("closure must be `on` or `off`, got `{other}`"),
                    ))
                }
            });
            section = None;
        } else if let Some(rest) = directive(s, "sleq") {
            if sleq_line.is_some() {
                return Err(parse_error(line, "duplicate section `sleq`"));
            }
            if !rest.is_empty() {
                return Err(parse_error(line, "pairs go on the lines after `sleq:`"));
            }
            sleq_line = Some(line);
            section = Some(Section::Sleq);
        } else if let Some(rest) = directive(s, "leq") {
            if leq_line.is_some() {
                return Err(parse_error(line, "duplicate section `leq`"));
            }
            if !rest.is_empty() {
                return Err(parse_error(line, "pairs go on the lines after `leq:`"));
            }
            leq_line = Some(line);
            section = Some(Section::Leq);
        } else {
            let Some(sec) = section else {
                return Err(parse_error(line, format!("unexpected line `{s}`")));
            };
            let tokens: Vec<&str> = s.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(parse_error(
                    line,
                    format!("expected a pair `x y`, got {} tokens", tokens.len()),
                ));
            }
            raw_pairs.push((sec, tokens[0].to_string(), tokens[1].to_string(), line));
        }
    }

    let Some((_, labels)) = labels else {
        return Err(parse_error(last_line.max(1), "missing `elements:` line"));
    };
    let index = |l: &str, line: usize| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| parse_error(line, format!("unknown label `{l}`")))
    };
    let mut leq = Vec::new();
    let mut sleq = Vec::new();
    for (sec, a, b, line) in raw_pairs {
        let pair = MlxPair {
            from: index(&a, line)?,
            to: index(&b, line)?,
            line,
        };
        match sec {
            Section::Leq => leq.push(pair),
            Section::Sleq => sleq.push(pair),
        }
    }
    Ok(MlxDocument {
        labels,
        leq,
        sleq,
        closure: closure.unwrap_or(true),
        leq_line,
        sleq_line,
    })
}

impl MlxDocument {
    fn build(&self, name: &str, pairs: &[MlxPair], header: Option<usize>) -> Result<Relation> {
        let n = self.labels.len();
        let gens: Vec<(usize, usize)> = pairs.iter().map(|p| (p.from, p.to)).collect();
        let header = header.unwrap_or(1);
        if self.closure {
            let r = Relation::reflexive_transitive_closure(&gens, n)?;
            if r.validate().is_ok() {
                return Ok(r);
            }
            // closure only fails through antisymmetry; blame the first
            // generator whose addition creates a cycle
            for k in 1..=gens.len() {
                let prefix = Relation::reflexive_transitive_closure(&gens[..k], n)?;
                if let Err(v) = prefix.validate() {
                    let (a, b) = (v.witness[0], v.witness[1]);
                    return Err(parse_error(
                        pairs[k - 1].line,
                        format!(
                            "antisymmetry violation in {name} after closure: `{}` and `{}`",
                            self.labels[a], self.labels[b]
                        ),
                    ));
                }
            }
            unreachable!("full closure invalid but every prefix valid");
        }
        let r = Relation::from_pairs(n, &gens)?;
        match r.validate() {
            Ok(()) => Ok(r),
            Err(v) => {
                let names: Vec<&str> = v.witness.iter().map(|&i| self.labels[i].as_str()).collect();
                let line = match v.kind {
                    ViolationKind::Antisymmetry => pairs
                        .iter()
                        .filter(|p| {
                            (p.from, p.to) == (v.witness[0], v.witness[1])
                                || (p.from, p.to) == (v.witness[1], v.witness[0])
                        })
                        .map(|p| p.line)
                        .max()
                        .unwrap_or(header),
                    _ => header,
                };
                Err(parse_error(
                    line,
                    format!("{} violation in {name} at {}", v.kind, names.join(" ")),
                ))
            }
        }
    }

    pub fn to_biposet(&self) -> Result<FiniteBiPoset> {
        let leq = self.build("leq", &self.leq, self.leq_line)?;
        let sleq = self.build("sleq", &self.sleq, self.sleq_line)?;
        FiniteBiPoset::new(self.labels.clone(), leq, sleq)
    }
}

/// Parses and validates in one step.
pub fn read_mlx(text: &str) -> Result<FiniteBiPoset> {
    parse_mlx(text)?.to_biposet()
}

/// Writes the structure with its cover pairs as generators.
pub fn emit_mlx(b: &FiniteBiPoset) -> String {
    let mut out = String::new();
    out.push_str("elements: ");
    out.push_str(&b.labels().join(" "));
    out.push('\n');
    for (name, r) in [("leq", b.leq()), ("sleq", b.sleq())] {
        out.push_str(name);
        out.push_str(":\n");
        for (x, y) in r.covers() {
            out.push_str(b.label(x));
            out.push(' ');
            out.push_str(b.label(y));
            out.push('\n');
        }
    }
    out
}
