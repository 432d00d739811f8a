//! JSON and plain-text renderings of reports, with witnesses as labels.
//!
//! Law report:
//!
//! ```json
//! {
//!   "mixed_lattice": true,
//!   "missing_envelope": null,
//!   "laws": { "MONO_LOWER": { "holds": false, "witness": ["2", "4", "6"] }, ... },
//!   "summary": { "quasi_regular": false, "prereg": true, "r0": true,
//!                "conditions_agree": true, "class": "pre_regular_only" }
//! }
//! ```
//!
//! `laws` has one key per law name; `witness` is `null` when the law holds.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{check_axioms, derived_identities, AlgebraTables, AxiomId};
use crate::biposet::{FiniteBiPoset, MissingEnvelope, MixedLattice};
use crate::gen::{classify, EnumerationSummary, StructureClass};
use crate::laws::{full_report, LawId};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledVerdict {
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

impl LabelledVerdict {
    pub fn new(v: &Verdict, labels: &[String]) -> Self {
        LabelledVerdict {
            holds: v.holds,
            witness: v
                .witness
                .as_ref()
                .map(|w| w.iter().map(|&i| labels[i].clone()).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledMissing {
    pub kind: String,
    pub x: String,
    pub y: String,
}

impl LabelledMissing {
    pub fn new(m: &MissingEnvelope, labels: &[String]) -> Self {
        LabelledMissing {
            kind: m.kind.to_string(),
            x: labels[m.x].clone(),
            y: labels[m.y].clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawSummary {
    pub quasi_regular: bool,
    pub prereg: bool,
    pub r0: bool,
    pub conditions_agree: bool,
    pub class: StructureClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawsDocument {
    pub mixed_lattice: bool,
    pub missing_envelope: Option<LabelledMissing>,
    pub laws: BTreeMap<&'static str, LabelledVerdict>,
    pub summary: Option<LawSummary>,
}

pub fn laws_document(b: &FiniteBiPoset) -> LawsDocument {
    let labels = b.labels();
    let tables = b.envelope_tables();
    let ml = match MixedLattice::from_tables(b.clone(), &tables) {
        Ok(ml) => ml,
        Err(_) => {
            return LawsDocument {
                mixed_lattice: false,
                missing_envelope: tables
                    .first_missing()
                    .map(|m| LabelledMissing::new(&m, labels)),
                laws: BTreeMap::new(),
                summary: None,
            }
        }
    };
    let report = full_report(&ml);
    LawsDocument {
        mixed_lattice: true,
        missing_envelope: None,
        laws: report
            .verdicts
            .iter()
            .map(|(id, v)| (id.name(), LabelledVerdict::new(v, labels)))
            .collect(),
        summary: Some(LawSummary {
            quasi_regular: report.quasi_regular,
            prereg: report.holds(LawId::PreReg),
            r0: report.holds(LawId::R0),
            conditions_agree: report.conditions_agree,
            class: classify(&ml),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomSummary {
    pub quasi_regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomsDocument {
    /// True when M1 through M4b all hold.
    pub mixed_lattice: bool,
    pub axioms: BTreeMap<&'static str, LabelledVerdict>,
    /// Derived identities, only computed when the defining axioms hold.
    pub derived: Option<BTreeMap<&'static str, LabelledVerdict>>,
    pub summary: AxiomSummary,
}

pub fn axioms_document(a: &AlgebraTables) -> AxiomsDocument {
    let labels = a.labels();
    let report = check_axioms(a);
    let derived = derived_identities(a).ok().map(|d| {
        d.items()
            .iter()
            .map(|(name, v)| (*name, LabelledVerdict::new(v, labels)))
            .collect()
    });
    AxiomsDocument {
        mixed_lattice: report.is_mixed_lattice(),
        axioms: report
            .verdicts
            .iter()
            .map(|(id, v)| (id.name(), LabelledVerdict::new(v, labels)))
            .collect(),
        derived,
        summary: AxiomSummary {
            quasi_regular: report.is_mixed_lattice()
                && report.holds(AxiomId::Q1)
                && report.holds(AxiomId::Q2),
        },
    }
}

fn witness_text(v: &LabelledVerdict) -> String {
    match &v.witness {
        Some(w) => format!("fails  at ({})", w.join(", ")),
        None => "holds".to_string(),
    }
}

pub fn laws_text(doc: &LawsDocument) -> String {
    let mut out = String::new();
    if let Some(m) = &doc.missing_envelope {
        out.push_str(&format!(
            "not a mixed lattice: {} envelope of ({}, {}) does not exist\n",
            m.kind, m.x, m.y
        ));
        return out;
    }
    for id in LawId::ALL {
        let v = &doc.laws[id.name()];
        out.push_str(&format!("{:<12} {}\n", id.name(), witness_text(v)));
    }
    if let Some(s) = &doc.summary {
        out.push_str(&format!(
            "quasi-regular: {}  pre-regular: {}  r0: {}  equivalent conditions agree: {}\n",
            yes_no(s.quasi_regular),
            yes_no(s.prereg),
            yes_no(s.r0),
            yes_no(s.conditions_agree)
        ));
    }
    out
}

pub fn axioms_text(doc: &AxiomsDocument) -> String {
    let mut out = String::new();
    for id in AxiomId::ALL {
        out.push_str(&format!("{:<6} {}\n", id.name(), witness_text(&doc.axioms[id.name()])));
    }
    match &doc.derived {
        Some(d) => {
            for (name, v) in d {
                out.push_str(&format!("{:<18} {}\n", name, witness_text(v)));
            }
        }
        None => out.push_str("derived identities skipped: M1-M4b do not all hold\n"),
    }
    out.push_str(&format!("mixed lattice: {}\n", yes_no(doc.mixed_lattice)));
    out
}

pub fn summary_text(s: &EnumerationSummary) -> String {
    format!(
        "n = {}\nposets: {}\npairs examined: {}\nmixed lattices: {}\n  quasi-regular: {}\n  pre-regular only: {}\n  r0 only: {}\n  neither: {}\n",
        s.n,
        s.posets,
        s.pairs_examined,
        s.mixed_lattices,
        s.by_class.quasi_regular,
        s.by_class.pre_regular_only,
        s.by_class.r0_only,
        s.by_class.neither
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
