//! Carriers with two partial orders and their mixed envelopes.
//!
//! Throughout, `leq` is the order written `x ≤ y` and `sleq` the order
//! written `x ≼ y`. The mixed upper envelope `x ⩗ y` is the `≤`-least `w`
//! with `x ≼ w` and `y ≤ w`; the mixed lower envelope `x ⩘ y` is the
//! `≤`-greatest `w` with `w ≼ x` and `w ≤ y`. Either may fail to exist, and
//! that is reported as data rather than as an error.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laws::{self, LawId};
use crate::order::Relation;
use crate::verdict::{search, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnvelopeKind {
    Upper,
    Lower,
}

impl fmt::Display for EnvelopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnvelopeKind::Upper => "upper",
            EnvelopeKind::Lower => "lower",
        })
    }
}

/// The first `(x, y)` whose envelope of the given kind does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MissingEnvelope {
    pub kind: EnvelopeKind,
    pub x: usize,
    pub y: usize,
}

impl fmt::Display for MissingEnvelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} envelope of ({}, {}) does not exist",
            self.kind, self.x, self.y
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteBiPoset {
    labels: Vec<String>,
    leq: Relation,
    sleq: Relation,
}

impl FiniteBiPoset {
    /// Validates both relations as partial orders on the labelled carrier.
    pub fn new(labels: Vec<String>, leq: Relation, sleq: Relation) -> Result<Self> {
        let n = labels.len();
        for r in [&leq, &sleq] {
            if r.size() != n {
                return Err(Error::LabelCount {
                    labels: n,
                    size: r.size(),
                });
            }
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        leq.validate().map_err(|violation| Error::NotPartialOrder {
            order: "leq",
            violation,
        })?;
        sleq.validate().map_err(|violation| Error::NotPartialOrder {
            order: "sleq",
            violation,
        })?;
        Ok(FiniteBiPoset { labels, leq, sleq })
    }

    /// Same as [`FiniteBiPoset::new`] with labels `"0"`, `"1"`, ...
    pub fn with_index_labels(leq: Relation, sleq: Relation) -> Result<Self> {
        let labels = (0..leq.size()).map(|i| i.to_string()).collect();
        FiniteBiPoset::new(labels, leq, sleq)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self) -> &Relation {
        &self.leq
    }

    pub fn sleq(&self) -> &Relation {
        &self.sleq
    }

    /// `x ⩗ y`: the `≤`-least element of `{w : x ≼ w, y ≤ w}`.
    pub fn upper_envelope(&self, x: usize, y: usize) -> Option<usize> {
        let candidates: Vec<usize> = (0..self.len())
            .filter(|&w| self.sleq.get(x, w) && self.leq.get(y, w))
            .collect();
        self.leq.least(&candidates)
    }

    /// `x ⩘ y`: the `≤`-greatest element of `{w : w ≼ x, w ≤ y}`.
    pub fn lower_envelope(&self, x: usize, y: usize) -> Option<usize> {
        let candidates: Vec<usize> = (0..self.len())
            .filter(|&w| self.sleq.get(w, x) && self.leq.get(w, y))
            .collect();
        self.leq.greatest(&candidates)
    }

    pub fn envelope_tables(&self) -> EnvelopeTables {
        let n = self.len();
        let mut upper = Vec::with_capacity(n * n);
        let mut lower = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                upper.push(self.upper_envelope(x, y));
                lower.push(self.lower_envelope(x, y));
            }
        }
        EnvelopeTables { n, upper, lower }
    }

    pub fn is_mixed_lattice(&self) -> bool {
        self.envelope_tables().first_missing().is_none()
    }

    /// Restriction of both orders to `subset`, keeping the given order of
    /// elements.
    pub fn induced_substructure(&self, subset: &[usize]) -> Result<FiniteBiPoset> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen = HashSet::new();
        for &i in subset {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: self.len(),
                });
            }
            if !seen.insert(i) {
                return Err(Error::DuplicateLabel(self.labels[i].clone()));
            }
        }
        Ok(FiniteBiPoset {
            labels: subset.iter().map(|&i| self.labels[i].clone()).collect(),
            leq: self.leq.restrict(subset),
            sleq: self.sleq.restrict(subset),
        })
    }

    /// Resolves labels to indices.
    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }
}

/// Full `n × n` envelope tables, with `None` where an envelope is missing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnvelopeTables {
    n: usize,
    upper: Vec<Option<usize>>,
    lower: Vec<Option<usize>>,
}

impl EnvelopeTables {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn upper(&self, x: usize, y: usize) -> Option<usize> {
        self.upper[x * self.n + y]
    }

    pub fn lower(&self, x: usize, y: usize) -> Option<usize> {
        self.lower[x * self.n + y]
    }

    pub fn get(&self, kind: EnvelopeKind, x: usize, y: usize) -> Option<usize> {
        match kind {
            EnvelopeKind::Upper => self.upper(x, y),
            EnvelopeKind::Lower => self.lower(x, y),
        }
    }

    pub fn present_count(&self) -> usize {
        self.upper.iter().chain(&self.lower).flatten().count()
    }

    /// First missing entry, scanning `(x, y)` lexicographically and the
    /// upper table before the lower one at each position.
    pub fn first_missing(&self) -> Option<MissingEnvelope> {
        for x in 0..self.n {
            for y in 0..self.n {
                for kind in [EnvelopeKind::Upper, EnvelopeKind::Lower] {
                    if self.get(kind, x, y).is_none() {
                        return Some(MissingEnvelope { kind, x, y });
                    }
                }
            }
        }
        None
    }
}

/// A bi-ordered set known to be a mixed lattice, with total envelope tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedLattice {
    poset: FiniteBiPoset,
    upper: Vec<usize>,
    lower: Vec<usize>,
}

impl MixedLattice {
    pub fn new(poset: FiniteBiPoset) -> Result<Self> {
        let tables = poset.envelope_tables();
        MixedLattice::from_tables(poset, &tables)
    }

    pub fn from_tables(poset: FiniteBiPoset, tables: &EnvelopeTables) -> Result<Self> {
        if let Some(missing) = tables.first_missing() {
            return Err(Error::NotMixedLattice(missing));
        }
        Ok(MixedLattice {
            poset,
            upper: tables.upper.iter().map(|e| e.unwrap()).collect(),
            lower: tables.lower.iter().map(|e| e.unwrap()).collect(),
        })
    }

    pub fn poset(&self) -> &FiniteBiPoset {
        &self.poset
    }

    pub fn into_poset(self) -> FiniteBiPoset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn upper(&self, x: usize, y: usize) -> usize {
        self.upper[x * self.len() + y]
    }

    #[inline]
    pub fn lower(&self, x: usize, y: usize) -> usize {
        self.lower[x * self.len() + y]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq.get(x, y)
    }

    #[inline]
    pub fn sleq(&self, x: usize, y: usize) -> bool {
        self.poset.sleq.get(x, y)
    }

    pub fn upper_table(&self) -> &[usize] {
        &self.upper
    }

    pub fn lower_table(&self) -> &[usize] {
        &self.lower
    }

    /// Closure of `subset` under both envelopes computed in `self`.
    pub fn is_mixed_sublattice(&self, subset: &[usize]) -> Result<SublatticeVerdict> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let n = self.len();
        let mut member = vec![false; n];
        for &i in subset {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
            member[i] = true;
        }
        let mut sorted: Vec<usize> = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &x in &sorted {
            for &y in &sorted {
                for kind in [EnvelopeKind::Upper, EnvelopeKind::Lower] {
                    let v = match kind {
                        EnvelopeKind::Upper => self.upper(x, y),
                        EnvelopeKind::Lower => self.lower(x, y),
                    };
                    if !member[v] {
                        return Ok(SublatticeVerdict {
                            closed: false,
                            witness: Some(SublatticeWitness {
                                x,
                                y,
                                kind,
                                value: v,
                            }),
                        });
                    }
                }
            }
        }
        Ok(SublatticeVerdict {
            closed: true,
            witness: None,
        })
    }

    /// Checks the basic envelope identities at every tuple.
    ///
    /// Items, each quantified over all elements:
    /// * `idempotence`: `x ⩗ x = x` and `x ⩘ x = x`;
    /// * `bounds`: `x ⩘ y ≼ x ≼ x ⩗ y` and `x ⩘ y ≤ y ≤ x ⩗ y`;
    /// * `monotonicity`: `x ≼ u`, `y ≤ v` imply `x ⩗ y ≤ u ⩗ v` and
    ///   `x ⩘ y ≤ u ⩘ v` (witness `(x, y, u, v)`);
    /// * `sleq_characterization`: `x ≼ y ⟺ x ⩗ y = y ⟺ y ⩘ x = x`;
    /// * `absorption`: `(x ⩘ y) ⩗ x = x` and `(x ⩗ y) ⩘ x = x`;
    /// * `r0_absorption`: `x ⩗ (y ⩘ x) = x` and `x ⩘ (y ⩗ x) = x`, only
    ///   evaluated when condition r0 holds.
    pub fn check_basic_identities(&self) -> BasicIdentityReport {
        let n = self.len();
        let idempotence = search(n, 1, |t| {
            let x = t[0];
            self.upper(x, x) == x && self.lower(x, x) == x
        });
        let bounds = search(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            let (u, l) = (self.upper(x, y), self.lower(x, y));
            self.sleq(l, x) && self.sleq(x, u) && self.leq(l, y) && self.leq(y, u)
        });
        let monotonicity = search(n, 4, |t| {
            let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
            !(self.sleq(x, u) && self.leq(y, v))
                || (self.leq(self.upper(x, y), self.upper(u, v))
                    && self.leq(self.lower(x, y), self.lower(u, v)))
        });
        let sleq_characterization = search(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            let a = self.sleq(x, y);
            a == (self.upper(x, y) == y) && a == (self.lower(y, x) == x)
        });
        let absorption = search(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            self.upper(self.lower(x, y), x) == x && self.lower(self.upper(x, y), x) == x
        });
        let r0_absorption = laws::check_law(self, LawId::R0).holds.then(|| {
            search(n, 2, |t| {
                let (x, y) = (t[0], t[1]);
                self.upper(x, self.lower(y, x)) == x && self.lower(x, self.upper(y, x)) == x
            })
        });
        BasicIdentityReport {
            idempotence,
            bounds,
            monotonicity,
            sleq_characterization,
            absorption,
            r0_absorption,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SublatticeWitness {
    pub x: usize,
    pub y: usize,
    pub kind: EnvelopeKind,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SublatticeVerdict {
    pub closed: bool,
    pub witness: Option<SublatticeWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicIdentityReport {
    pub idempotence: Verdict,
    pub bounds: Verdict,
    pub monotonicity: Verdict,
    pub sleq_characterization: Verdict,
    pub absorption: Verdict,
    /// `None` when condition r0 does not hold.
    pub r0_absorption: Option<Verdict>,
}

impl BasicIdentityReport {
    pub fn items(&self) -> Vec<(&'static str, &Verdict)> {
        let mut v = vec![
            ("idempotence", &self.idempotence),
            ("bounds", &self.bounds),
            ("monotonicity", &self.monotonicity),
            ("sleq_characterization", &self.sleq_characterization),
            ("absorption", &self.absorption),
        ];
        if let Some(r) = &self.r0_absorption {
            v.push(("r0_absorption", r));
        }
        v
    }

    pub fn all_hold(&self) -> bool {
        self.items().iter().all(|(_, v)| v.holds)
    }
}
