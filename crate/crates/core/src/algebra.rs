//! Mixed lattices presented as algebras with two binary operations.
//!
//! An [`AlgebraTables`] value is an arbitrary pair of total operation tables;
//! nothing is assumed about it until [`check_axioms`] has been run, so
//! near-miss tables can be diagnosed axiom by axiom.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::biposet::{FiniteBiPoset, MixedLattice};
use crate::error::{Error, Result};
use crate::laws::{self, LawId};
use crate::order::Relation;
use crate::verdict::{search, Verdict};

/// Two binary operations `⩗` (upper) and `⩘` (lower) on some carrier.
pub trait MixedOps {
    type Elem: Clone + PartialEq;

    fn upper(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn lower(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

/// Postulates of the algebraic presentation and a few companions.
///
/// | id    | variables      | identity                                                   |
/// |-------|----------------|------------------------------------------------------------|
/// | `M1`  | `(x, y)`       | `x ⩗ y = x ⩘ y ⟺ x = y`                                    |
/// | `M2a` | `(x, y)`       | `(x ⩘ y) ⩗ x = x` and `(x ⩗ y) ⩘ x = x`                    |
/// | `M2b` | `(x, y)`       | `x ⩗ (y ⩘ x) = x` and `x ⩘ (y ⩗ x) = x`                    |
/// | `M3a` | `(x, y, z)`    | `z ⩘ (x ⩗ y) = [z ⩘ (x ⩗ y)] ⩗ (z ⩘ y)`                    |
/// | `M3b` | `(x, y, z)`    | `z ⩗ (x ⩘ y) = [z ⩗ (x ⩘ y)] ⩘ (z ⩗ y)`                    |
/// | `M4a` | `(x, y, z)`    | `(x ⩗ y) ⩘ z = [(x ⩗ y) ⩘ z] ⩗ (x ⩘ z)`                    |
/// | `M4b` | `(x, y, z)`    | `(x ⩘ y) ⩗ z = [(x ⩘ y) ⩗ z] ⩘ (x ⩗ z)`                    |
/// | `Q1`  | `(x, y, z)`    | `z ⩘ (x ⩗ y) = (z ⩘ x) ⩗ [z ⩘ (x ⩗ y)]`                    |
/// | `Q2`  | `(x, y, z)`    | `z ⩗ (x ⩘ y) = (z ⩗ x) ⩘ [z ⩗ (x ⩘ y)]`                    |
/// | `P`   | `(x, y)`       | `y ⩘ x = x ⟹ x ⩘ y = x`                                    |
/// | `R1`  | `(x, y, u, v)` | `(x ⩘ v) ⩘ [(x ⩗ y) ⩘ (u ⩗ v)] = x ⩘ v`                    |
/// | `R2`  | `(x, y, u, v)` | `(x ⩗ v) ⩗ [(x ⩘ y) ⩗ (u ⩘ v)] = x ⩗ v`                    |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AxiomId {
    M1,
    M2a,
    M2b,
    M3a,
    M3b,
    M4a,
    M4b,
    Q1,
    Q2,
    P,
    R1,
    R2,
}

impl AxiomId {
    pub const ALL: [AxiomId; 12] = [
        AxiomId::M1,
        AxiomId::M2a,
        AxiomId::M2b,
        AxiomId::M3a,
        AxiomId::M3b,
        AxiomId::M4a,
        AxiomId::M4b,
        AxiomId::Q1,
        AxiomId::Q2,
        AxiomId::P,
        AxiomId::R1,
        AxiomId::R2,
    ];

    /// The defining postulates M1 through M4b.
    pub const DEFINING: [AxiomId; 7] = [
        AxiomId::M1,
        AxiomId::M2a,
        AxiomId::M2b,
        AxiomId::M3a,
        AxiomId::M3b,
        AxiomId::M4a,
        AxiomId::M4b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::M1 => "M1",
            AxiomId::M2a => "M2a",
            AxiomId::M2b => "M2b",
            AxiomId::M3a => "M3a",
            AxiomId::M3b => "M3b",
            AxiomId::M4a => "M4a",
            AxiomId::M4b => "M4b",
            AxiomId::Q1 => "Q1",
            AxiomId::Q2 => "Q2",
            AxiomId::P => "P",
            AxiomId::R1 => "R1",
            AxiomId::R2 => "R2",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            AxiomId::M1 | AxiomId::M2a | AxiomId::M2b | AxiomId::P => 2,
            AxiomId::R1 | AxiomId::R2 => 4,
            _ => 3,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates one axiom at one tuple (variables in the documented order).
pub fn axiom_holds<O: MixedOps>(ops: &O, id: AxiomId, t: &[O::Elem]) -> bool {
    let up = |a: &O::Elem, b: &O::Elem| ops.upper(a, b);
    let lo = |a: &O::Elem, b: &O::Elem| ops.lower(a, b);
    match id {
        AxiomId::M1 => {
            let (x, y) = (&t[0], &t[1]);
            (up(x, y) == lo(x, y)) == (x == y)
        }
        AxiomId::M2a => {
            let (x, y) = (&t[0], &t[1]);
            up(&lo(x, y), x) == *x && lo(&up(x, y), x) == *x
        }
        AxiomId::M2b => {
            let (x, y) = (&t[0], &t[1]);
            up(x, &lo(y, x)) == *x && lo(x, &up(y, x)) == *x
        }
        AxiomId::M3a => {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let a = lo(z, &up(x, y));
            a == up(&a, &lo(z, y))
        }
        AxiomId::M3b => {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let a = up(z, &lo(x, y));
            a == lo(&a, &up(z, y))
        }
        AxiomId::M4a => {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let a = lo(&up(x, y), z);
            a == up(&a, &lo(x, z))
        }
        AxiomId::M4b => {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let a = up(&lo(x, y), z);
            a == lo(&a, &up(x, z))
        }
        AxiomId::Q1 => {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let a = lo(z, &up(x, y));
            a == up(&lo(z, x), &a)
        }
        AxiomId::Q2 => {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let a = up(z, &lo(x, y));
            a == lo(&up(z, x), &a)
        }
        AxiomId::P => {
            let (x, y) = (&t[0], &t[1]);
            lo(y, x) != *x || lo(x, y) == *x
        }
        AxiomId::R1 => {
            let (x, y, u, v) = (&t[0], &t[1], &t[2], &t[3]);
            let xv = lo(x, v);
            lo(&xv, &lo(&up(x, y), &up(u, v))) == xv
        }
        AxiomId::R2 => {
            let (x, y, u, v) = (&t[0], &t[1], &t[2], &t[3]);
            let xv = up(x, v);
            up(&xv, &up(&lo(x, y), &lo(u, v))) == xv
        }
    }
}

/// Total operation tables on a labelled carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraTables {
    labels: Vec<String>,
    upper: Vec<usize>,
    lower: Vec<usize>,
}

impl AlgebraTables {
    /// `upper[x * n + y]` is `x ⩗ y`, likewise for `lower`.
    pub fn new(labels: Vec<String>, upper: Vec<usize>, lower: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        for t in [&upper, &lower] {
            if t.len() != n * n {
                return Err(Error::MatrixShape { size: n, len: t.len() });
            }
            if let Some(&bad) = t.iter().find(|&&e| e >= n) {
                return Err(Error::IndexOutOfRange { index: bad, size: n });
            }
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(AlgebraTables {
            labels,
            upper,
            lower,
        })
    }

    pub fn with_index_labels(n: usize, upper: Vec<usize>, lower: Vec<usize>) -> Result<Self> {
        AlgebraTables::new((0..n).map(|i| i.to_string()).collect(), upper, lower)
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

    pub fn upper_table(&self) -> &[usize] {
        &self.upper
    }

    pub fn lower_table(&self) -> &[usize] {
        &self.lower
    }

    #[inline]
    pub fn up(&self, x: usize, y: usize) -> usize {
        self.upper[x * self.len() + y]
    }

    #[inline]
    pub fn lo(&self, x: usize, y: usize) -> usize {
        self.lower[x * self.len() + y]
    }
}

impl MixedOps for AlgebraTables {
    type Elem = usize;

    fn upper(&self, x: &usize, y: &usize) -> usize {
        self.up(*x, *y)
    }

    fn lower(&self, x: &usize, y: &usize) -> usize {
        self.lo(*x, *y)
    }
}

pub fn check_axiom(a: &AlgebraTables, id: AxiomId) -> Verdict {
    search(a.len(), id.arity(), |t| axiom_holds(a, id, t))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub verdicts: BTreeMap<AxiomId, Verdict>,
}

impl AxiomReport {
    pub fn holds(&self, id: AxiomId) -> bool {
        self.verdicts[&id].holds
    }

    pub fn is_mixed_lattice(&self) -> bool {
        AxiomId::DEFINING.iter().all(|&id| self.holds(id))
    }

    pub fn first_failed_defining(&self) -> Option<(AxiomId, &Verdict)> {
        AxiomId::DEFINING
            .iter()
            .map(|id| (*id, &self.verdicts[id]))
            .find(|(_, v)| !v.holds)
    }
}

pub fn check_axioms(a: &AlgebraTables) -> AxiomReport {
    AxiomReport {
        verdicts: AxiomId::ALL
            .iter()
            .map(|&id| (id, check_axiom(a, id)))
            .collect(),
    }
}

/// True iff M1 through M4b all hold; cheaper than a full report.
pub fn satisfies_defining_axioms(a: &AlgebraTables) -> bool {
    AxiomId::DEFINING
        .iter()
        .all(|&id| check_axiom(a, id).holds)
}

/// Consequences of M1 through M4b, each over `(x)` or `(x, y)`:
///
/// * `idempotence`: `x ⩘ x = x` and `x ⩗ x = x`;
/// * `order_duality`: `x = y ⩘ x ⟺ y = x ⩗ y` and `y = y ⩘ x ⟺ x = x ⩗ y`;
/// * `lower_absorption`: `x ⩘ (x ⩘ y) = x ⩘ y` and `(x ⩘ y) ⩘ y = x ⩘ y`;
/// * `upper_absorption`: `x ⩗ (x ⩗ y) = x ⩗ y` and `(x ⩗ y) ⩗ y = x ⩗ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedReport {
    pub idempotence: Verdict,
    pub order_duality: Verdict,
    pub lower_absorption: Verdict,
    pub upper_absorption: Verdict,
}

impl DerivedReport {
    pub fn items(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("idempotence", &self.idempotence),
            ("order_duality", &self.order_duality),
            ("lower_absorption", &self.lower_absorption),
            ("upper_absorption", &self.upper_absorption),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.items().iter().all(|(_, v)| v.holds)
    }
}

fn require_defining(a: &AlgebraTables) -> Result<()> {
    for id in AxiomId::DEFINING {
        if let Some(w) = check_axiom(a, id).witness {
            return Err(Error::AxiomFails {
                axiom: id.name(),
                witness: w,
            });
        }
    }
    Ok(())
}

pub fn derived_identities(a: &AlgebraTables) -> Result<DerivedReport> {
    require_defining(a)?;
    let n = a.len();
    Ok(DerivedReport {
        idempotence: search(n, 1, |t| a.lo(t[0], t[0]) == t[0] && a.up(t[0], t[0]) == t[0]),
        order_duality: search(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            (x == a.lo(y, x)) == (y == a.up(x, y)) && (y == a.lo(y, x)) == (x == a.up(x, y))
        }),
        lower_absorption: search(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            let xy = a.lo(x, y);
            a.lo(x, xy) == xy && a.lo(xy, y) == xy
        }),
        upper_absorption: search(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            let xy = a.up(x, y);
            a.up(x, xy) == xy && a.up(xy, y) == xy
        }),
    })
}

/// Recovers the two orders: `x ≼ y ⟺ y ⩘ x = x` and `x ≤ y ⟺ x ⩘ y = x`.
///
/// Requires M1 through M4b. The result is checked to be a pair of partial
/// orders whose envelopes reproduce the input tables; a failure there is an
/// internal inconsistency, not bad input.
pub fn orders_from_algebra(a: &AlgebraTables) -> Result<FiniteBiPoset> {
    require_defining(a)?;
    let n = a.len();
    let sleq = Relation::from_fn(n, |x, y| a.lo(y, x) == x);
    let leq = Relation::from_fn(n, |x, y| a.lo(x, y) == x);
    let b = FiniteBiPoset::new(a.labels.clone(), leq, sleq)
        .map_err(|e| Error::Inconsistent(format!("derived relations: {e}")))?;
    let ml = MixedLattice::new(b)
        .map_err(|e| Error::Inconsistent(format!("derived orders: {e}")))?;
    if ml.upper_table() != a.upper_table() || ml.lower_table() != a.lower_table() {
        return Err(Error::Inconsistent(
            "envelopes of the derived orders differ from the input tables".into(),
        ));
    }
    Ok(ml.into_poset())
}

/// Envelope tables of a mixed lattice satisfying r0, as an algebra.
pub fn algebra_from_biposet(b: &FiniteBiPoset) -> Result<AlgebraTables> {
    let ml = MixedLattice::new(b.clone())?;
    algebra_from_mixed_lattice(&ml)
}

pub fn algebra_from_mixed_lattice(ml: &MixedLattice) -> Result<AlgebraTables> {
    if !laws::check_law(ml, LawId::R0).holds {
        let w = laws::check_law(ml, LawId::R0Char).witness.ok_or_else(|| {
            Error::Inconsistent("r0 fails but its order characterization holds".into())
        })?;
        return Err(Error::R0Fails { x: w[0], y: w[1] });
    }
    AlgebraTables::new(
        ml.poset().labels().to_vec(),
        ml.upper_table().to_vec(),
        ml.lower_table().to_vec(),
    )
}
