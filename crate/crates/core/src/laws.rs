//! Named conditions on a mixed lattice, each checked exhaustively.
//!
//! Witness tuples list the variables in the order given in the formula
//! column below, and the reported witness is the lexicographically first
//! failing tuple.
//!
//! | id           | variables      | formula                                          |
//! |--------------|----------------|--------------------------------------------------|
//! | `R0`         | `(x, y)`       | `x ≤ y ⟺ y ⩗ x = y ⟺ x ⩘ y = x`                 |
//! | `R0CHAR`     | `(x, y)`       | `y ≼ x ∧ x ≤ y ⟹ x = y`                          |
//! | `PREREG`     | `(x, y)`       | `x ≼ y ⟹ x ≤ y`                                  |
//! | `QR1`        | `(x, y, z)`    | `x ≼ z ∧ y ≼ z ⟹ x ⩗ y ≼ z`                      |
//! | `QR2`        | `(x, y, z)`    | `z ≼ x ∧ z ≼ y ⟹ z ≼ x ⩘ y`                      |
//! | `MONO_LOWER` | `(x, y, z)`    | `x ≼ y ⟹ z ⩘ x ≼ z ⩘ y`                          |
//! | `MONO_UPPER` | `(x, y, z)`    | `x ≼ y ⟹ z ⩗ x ≼ z ⩗ y`                          |
//! | `DIST1`      | `(x, y, z)`    | `(z ⩘ x) ⩗ (z ⩘ y) ≤ z ⩘ (x ⩗ y)`                |
//! | `DIST2`      | `(x, y, z)`    | `z ⩗ (x ⩘ y) ≤ (z ⩗ x) ⩘ (z ⩗ y)`                |
//! | `ASS1`       | `(x, y, z)`    | `x ⩘ (y ⩘ z) ≤ (x ⩘ y) ⩘ z`                      |
//! | `ASS2`       | `(x, y, z)`    | `(x ⩗ y) ⩗ z ≤ x ⩗ (y ⩗ z)`                      |
//! | `MOD1`       | `(x, y, z)`    | `(z ⩘ x) ⩗ (z ⩘ y) ≤ z ⩘ ((z ⩘ x) ⩗ y)`          |
//! | `COND_J`     | `(x, y, z)`    | `x ≼ z ⟹ x ⩗ (z ⩘ y) ≤ z ⩘ (x ⩗ y)`              |
//!
//! The last ten are equivalent on every mixed lattice; a structure where
//! they hold is called quasi-regular.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::biposet::MixedLattice;
use crate::error::Error;
use crate::verdict::{search, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LawId {
    R0,
    R0Char,
    PreReg,
    Qr1,
    Qr2,
    MonoLower,
    MonoUpper,
    Dist1,
    Dist2,
    Ass1,
    Ass2,
    Mod1,
    CondJ,
}

impl LawId {
    pub const ALL: [LawId; 13] = [
        LawId::R0,
        LawId::R0Char,
        LawId::PreReg,
        LawId::Qr1,
        LawId::Qr2,
        LawId::MonoLower,
        LawId::MonoUpper,
        LawId::Dist1,
        LawId::Dist2,
        LawId::Ass1,
        LawId::Ass2,
        LawId::Mod1,
        LawId::CondJ,
    ];

    /// The ten mutually equivalent quasi-regularity conditions.
    pub const QUASI_REGULAR: [LawId; 10] = [
        LawId::Qr1,
        LawId::MonoLower,
        LawId::Dist1,
        LawId::Ass1,
        LawId::Qr2,
        LawId::MonoUpper,
        LawId::Dist2,
        LawId::Ass2,
        LawId::Mod1,
        LawId::CondJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::R0 => "R0",
            LawId::R0Char => "R0CHAR",
            LawId::PreReg => "PREREG",
            LawId::Qr1 => "QR1",
            LawId::Qr2 => "QR2",
            LawId::MonoLower => "MONO_LOWER",
            LawId::MonoUpper => "MONO_UPPER",
            LawId::Dist1 => "DIST1",
            LawId::Dist2 => "DIST2",
            LawId::Ass1 => "ASS1",
            LawId::Ass2 => "ASS2",
            LawId::Mod1 => "MOD1",
            LawId::CondJ => "COND_J",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            LawId::R0 | LawId::R0Char | LawId::PreReg => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        LawId::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown law `{s}`")))
    }
}

/// Evaluates the law's formula at one tuple of element indices.
pub fn holds_at(m: &MixedLattice, id: LawId, t: &[usize]) -> bool {
    let up = |a, b| m.upper(a, b);
    let lo = |a, b| m.lower(a, b);
    let le = |a, b| m.leq(a, b);
    let sle = |a, b| m.sleq(a, b);
    match id {
        LawId::R0 => {
            let (x, y) = (t[0], t[1]);
            let a = le(x, y);
            a == (up(y, x) == y) && a == (lo(x, y) == x)
        }
        LawId::R0Char => {
            let (x, y) = (t[0], t[1]);
            !(sle(y, x) && le(x, y)) || x == y
        }
        LawId::PreReg => !sle(t[0], t[1]) || le(t[0], t[1]),
        LawId::Qr1 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            !(sle(x, z) && sle(y, z)) || sle(up(x, y), z)
        }
        LawId::Qr2 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            !(sle(z, x) && sle(z, y)) || sle(z, lo(x, y))
        }
        LawId::MonoLower => {
            let (x, y, z) = (t[0], t[1], t[2]);
            !sle(x, y) || sle(lo(z, x), lo(z, y))
        }
        LawId::MonoUpper => {
            let (x, y, z) = (t[0], t[1], t[2]);
            !sle(x, y) || sle(up(z, x), up(z, y))
        }
        LawId::Dist1 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            le(up(lo(z, x), lo(z, y)), lo(z, up(x, y)))
        }
        LawId::Dist2 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            le(up(z, lo(x, y)), lo(up(z, x), up(z, y)))
        }
        LawId::Ass1 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            le(lo(x, lo(y, z)), lo(lo(x, y), z))
        }
        LawId::Ass2 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            le(up(up(x, y), z), up(x, up(y, z)))
        }
        LawId::Mod1 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            let zx = lo(z, x);
            le(up(zx, lo(z, y)), lo(z, up(zx, y)))
        }
        LawId::CondJ => {
            let (x, y, z) = (t[0], t[1], t[2]);
            !sle(x, z) || le(up(x, lo(z, y)), lo(z, up(x, y)))
        }
    }
}

pub fn check_law(m: &MixedLattice, id: LawId) -> Verdict {
    search(m.len(), id.arity(), |t| holds_at(m, id, t))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub verdicts: BTreeMap<LawId, Verdict>,
    /// Verdict of `QR1`.
    pub quasi_regular: bool,
    /// True when the ten quasi-regularity conditions share one verdict.
    pub conditions_agree: bool,
}

impl LawReport {
    pub fn verdict(&self, id: LawId) -> &Verdict {
        &self.verdicts[&id]
    }

    pub fn holds(&self, id: LawId) -> bool {
        self.verdicts[&id].holds
    }
}

pub fn full_report(m: &MixedLattice) -> LawReport {
    let verdicts: BTreeMap<LawId, Verdict> =
        LawId::ALL.iter().map(|&id| (id, check_law(m, id))).collect();
    let quasi_regular = verdicts[&LawId::Qr1].holds;
    let conditions_agree = LawId::QUASI_REGULAR
        .iter()
        .all(|id| verdicts[id].holds == quasi_regular);
    LawReport {
        verdicts,
        quasi_regular,
        conditions_agree,
    }
}

/// Conditional equalities valid in quasi-regular mixed lattices.
///
/// * `ass1_equality`: `y ≼ x ∨ z ≼ y ∨ y ≤ z ⟹ x ⩘ (y ⩘ z) = (x ⩘ y) ⩘ z`
/// * `dist1_equality`: `x ≼ y ∨ y ≤ x ⟹ (z ⩘ x) ⩗ (z ⩘ y) = z ⩘ (x ⩗ y)`
/// * `ass2_equality`: `x ≼ y ∨ y ≼ z ∨ z ≤ y ⟹ x ⩗ (y ⩗ z) = (x ⩗ y) ⩗ z`
/// * `dist2_equality`: `y ≼ x ∨ x ≤ y ⟹ (z ⩗ x) ⩘ (z ⩗ y) = z ⩗ (x ⩘ y)`
///
/// All witnesses are `(x, y, z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionalReport {
    pub ass1_equality: Verdict,
    pub dist1_equality: Verdict,
    pub ass2_equality: Verdict,
    pub dist2_equality: Verdict,
}

impl ConditionalReport {
    pub fn items(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("ass1_equality", &self.ass1_equality),
            ("dist1_equality", &self.dist1_equality),
            ("ass2_equality", &self.ass2_equality),
            ("dist2_equality", &self.dist2_equality),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.items().iter().all(|(_, v)| v.holds)
    }
}

/// Refusal of [`check_conditional_equalities`] on a structure that is not
/// quasi-regular. Carries the `QR1` witness and the `MONO_LOWER` witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotQuasiRegular {
    pub qr1_witness: Vec<usize>,
    pub mono_lower_witness: Option<Vec<usize>>,
}

impl fmt::Display for NotQuasiRegular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not quasi-regular: QR1 fails at {:?}", self.qr1_witness)
    }
}

pub fn check_conditional_equalities(
    m: &MixedLattice,
) -> Result<ConditionalReport, NotQuasiRegular> {
    let qr1 = check_law(m, LawId::Qr1);
    if let Some(w) = qr1.witness {
        return Err(NotQuasiRegular {
            qr1_witness: w,
            mono_lower_witness: check_law(m, LawId::MonoLower).witness,
        });
    }
    let n = m.len();
    let up = |a, b| m.upper(a, b);
    let lo = |a, b| m.lower(a, b);
    let ass1_equality = search(n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        !(m.sleq(y, x) || m.sleq(z, y) || m.leq(y, z)) || lo(x, lo(y, z)) == lo(lo(x, y), z)
    });
    let dist1_equality = search(n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        !(m.sleq(x, y) || m.leq(y, x)) || up(lo(z, x), lo(z, y)) == lo(z, up(x, y))
    });
    let ass2_equality = search(n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        !(m.sleq(x, y) || m.sleq(y, z) || m.leq(z, y)) || up(x, up(y, z)) == up(up(x, y), z)
    });
    let dist2_equality = search(n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        !(m.sleq(y, x) || m.leq(x, y)) || lo(up(z, x), up(z, y)) == up(z, lo(x, y))
    });
    Ok(ConditionalReport {
        ass1_equality,
        dist1_equality,
        ass2_equality,
        dist2_equality,
    })
}
