//! Structure builders: divisor examples, exhaustive enumeration of small
//! labelled structures, seeded random generation, products, and a naive
//! envelope oracle kept independent of [`crate::biposet`].

use serde::Serialize;

use crate::algebra::{check_axiom, AlgebraTables, AxiomId};
use crate::biposet::{EnvelopeKind, FiniteBiPoset, MixedLattice};
use crate::error::{Error, Result};
use crate::laws::{check_law, LawId};
use crate::order::Relation;

pub const MAX_POSET_ENUMERATION: usize = 5;
pub const MAX_MIXED_ENUMERATION: usize = 4;
pub const MAX_ALGEBRA_ENUMERATION: usize = 3;

/// 64-bit linear congruential generator.
///
/// `state ← state · 6364136223846793005 + 1442695040888963407 (mod 2⁶⁴)`,
/// seeded with `state = seed`. Each 32-bit output is the high half of the
/// state after one step; [`Lcg::next_u64`] concatenates two outputs, high
/// word first.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    pub fn next_u64(&mut self) -> u64 {
        let hi = self.next_u32() as u64;
        let lo = self.next_u32() as u64;
        (hi << 32) | lo
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// `lo + next_u64() mod (hi - lo + 1)`.
    pub fn range_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        let span = hi - lo;
        if span == u64::MAX {
            return self.next_u64();
        }
        lo + self.next_u64() % (span + 1)
    }
}

/// Divisors of `n` in increasing order, with the usual order and
/// divisibility.
pub fn divisor_mixed_lattice(n: u64) -> Result<FiniteBiPoset> {
    if n == 0 {
        return Err(Error::Input("N must be a positive integer".into()));
    }
    let mut divisors = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            divisors.push(d);
            if d != n / d {
                divisors.push(n / d);
            }
        }
        d += 1;
    }
    divisors.sort_unstable();
    let k = divisors.len();
    FiniteBiPoset::new(
        divisors.iter().map(u64::to_string).collect(),
        Relation::from_fn(k, |i, j| divisors[i] <= divisors[j]),
        Relation::from_fn(k, |i, j| divisors[j] % divisors[i] == 0),
    )
}

/// All labelled partial orders on `n` elements.
///
/// Candidates are the antisymmetric reflexive relations, indexed by a
/// base-3 counter with one digit per unordered pair `i < j` (in
/// lexicographic order, first pair least significant): `0` unrelated,
/// `1` for `i < j`, `2` for `j < i`. Transitive candidates are emitted in
/// counter order.
pub fn enumerate_posets(n: usize) -> Result<Vec<Relation>> {
    if n > MAX_POSET_ENUMERATION {
        return Err(Error::TooLarge {
            n,
            limit: MAX_POSET_ENUMERATION,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut matrix = vec![false; n * n];
        for i in 0..n {
            matrix[i * n + i] = true;
        }
        for &(i, j) in &pairs {
            match code % 3 {
                1 => matrix[i * n + j] = true,
                2 => matrix[j * n + i] = true,
                _ => {}
            }
            code /= 3;
        }
        let r = Relation::from_matrix(n, matrix).expect("square");
        if r.is_partial_order() {
            out.push(r);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub quasi_regular: usize,
    pub pre_regular_only: usize,
    pub r0_only: usize,
    pub neither: usize,
}

impl ClassCounts {
    pub fn total(&self) -> usize {
        self.quasi_regular + self.pre_regular_only + self.r0_only + self.neither
    }
}

/// Nested (non-exclusive) counts: each class contains the next.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct NestedCounts {
    pub r0: usize,
    pub pre_regular: usize,
    pub quasi_regular: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    pub n: usize,
    pub posets: usize,
    pub pairs_examined: usize,
    pub mixed_lattices: usize,
    pub by_class: ClassCounts,
    pub nested: NestedCounts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureClass {
    QuasiRegular,
    PreRegularOnly,
    R0Only,
    Neither,
}

/// Exclusive class by strongest condition satisfied.
pub fn classify(m: &MixedLattice) -> StructureClass {
    if check_law(m, LawId::Qr1).holds {
        StructureClass::QuasiRegular
    } else if check_law(m, LawId::PreReg).holds {
        StructureClass::PreRegularOnly
    } else if check_law(m, LawId::R0).holds {
        StructureClass::R0Only
    } else {
        StructureClass::Neither
    }
}

pub struct Enumeration {
    pub structures: Vec<MixedLattice>,
    pub summary: EnumerationSummary,
}

/// All ordered pairs `(≤, ≼)` of labelled partial orders on `n` elements
/// that form a mixed lattice, `≤` outer and `≼` inner in
/// [`enumerate_posets`] order.
pub fn enumerate_mixed_lattices(n: usize) -> Result<Enumeration> {
    if n > MAX_MIXED_ENUMERATION {
        return Err(Error::TooLarge {
            n,
            limit: MAX_MIXED_ENUMERATION,
        });
    }
    let posets = enumerate_posets(n)?;
    let mut structures = Vec::new();
    let mut by_class = ClassCounts::default();
    let mut nested = NestedCounts::default();
    let mut pairs_examined = 0;
    for leq in &posets {
        for sleq in &posets {
            pairs_examined += 1;
            let b = FiniteBiPoset::with_index_labels(leq.clone(), sleq.clone())?;
            let Ok(m) = MixedLattice::new(b) else {
                continue;
            };
            match classify(&m) {
                StructureClass::QuasiRegular => by_class.quasi_regular += 1,
                StructureClass::PreRegularOnly => by_class.pre_regular_only += 1,
                StructureClass::R0Only => by_class.r0_only += 1,
                StructureClass::Neither => by_class.neither += 1,
            }
            nested.r0 += check_law(&m, LawId::R0).holds as usize;
            nested.pre_regular += check_law(&m, LawId::PreReg).holds as usize;
            nested.quasi_regular += check_law(&m, LawId::Qr1).holds as usize;
            structures.push(m);
        }
    }
    let summary = EnumerationSummary {
        n,
        posets: posets.len(),
        pairs_examined,
        mixed_lattices: structures.len(),
        by_class,
        nested,
    };
    Ok(Enumeration {
        structures,
        summary,
    })
}

/// Every idempotent pair of tables on `n` elements satisfying all of
/// `axioms`.
///
/// Idempotence follows from M2a and M2b, so restricting to idempotent
/// tables loses no algebra that satisfies the defining postulates.
pub fn enumerate_algebras_satisfying(n: usize, axioms: &[AxiomId]) -> Result<Vec<AlgebraTables>> {
    if n > MAX_ALGEBRA_ENUMERATION {
        return Err(Error::TooLarge {
            n,
            limit: MAX_ALGEBRA_ENUMERATION,
        });
    }
    let off: Vec<usize> = (0..n * n).filter(|k| k / n != k % n).collect();
    let slots = 2 * off.len();
    let total = n.pow(slots as u32);
    let mut upper: Vec<usize> = (0..n * n).map(|k| if k / n == k % n { k / n } else { 0 }).collect();
    let mut lower = upper.clone();
    let mut out = Vec::new();
    for mut code in 0..total {
        for &k in &off {
            upper[k] = code % n;
            code /= n;
        }
        for &k in &off {
            lower[k] = code % n;
            code /= n;
        }
        let a = AlgebraTables::with_index_labels(n, upper.clone(), lower.clone())?;
        if axioms.iter().all(|&id| check_axiom(&a, id).holds) {
            out.push(a);
        }
    }
    Ok(out)
}

/// Every algebra on `n` elements satisfying M1 through M4b.
pub fn enumerate_algebras(n: usize) -> Result<Vec<AlgebraTables>> {
    enumerate_algebras_satisfying(n, &AxiomId::DEFINING)
}

/// Seeded random pair of partial orders.
///
/// For each order in turn (`≤` then `≼`), every ordered pair `i ≠ j` is
/// kept as a generator with probability `density`, and the generators are
/// closed. Draws that are not antisymmetric are retried, up to 1000 times,
/// after which the discrete order is used.
pub fn random_biposet(n: usize, seed: u64, density: f64) -> Result<FiniteBiPoset> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Input(format!("density {density} outside [0, 1]")));
    }
    let mut rng = Lcg::new(seed);
    let draw = |rng: &mut Lcg| {
        for _ in 0..1000 {
            let mut gens = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j && rng.next_f64() < density {
                        gens.push((i, j));
                    }
                }
            }
            let r = Relation::reflexive_transitive_closure(&gens, n).expect("in range");
            if r.is_partial_order() {
                return r;
            }
        }
        Relation::identity(n)
    };
    let leq = draw(&mut rng);
    let sleq = draw(&mut rng);
    FiniteBiPoset::with_index_labels(leq, sleq)
}

/// Cartesian product with both orders componentwise. Element `i * |b2| + j`
/// is the pair `(i, j)` and is labelled `(a;b)`.
pub fn product(b1: &FiniteBiPoset, b2: &FiniteBiPoset) -> Result<FiniteBiPoset> {
    for b in [b1, b2] {
        if let Some(missing) = b.envelope_tables().first_missing() {
            return Err(Error::NotMixedLattice(missing));
        }
    }
    let m = b2.len();
    let n = b1.len() * m;
    let labels = (0..n)
        .map(|k| format!("({};{})", b1.label(k / m), b2.label(k % m)))
        .collect();
    let leq = Relation::from_fn(n, |p, q| {
        b1.leq().get(p / m, q / m) && b2.leq().get(p % m, q % m)
    });
    let sleq = Relation::from_fn(n, |p, q| {
        b1.sleq().get(p / m, q / m) && b2.sleq().get(p % m, q % m)
    });
    FiniteBiPoset::new(labels, leq, sleq)
}

/// Naive envelope: collect the filtered set, then return a member that
/// compares below (upper) or above (lower) every other member.
pub fn oracle_envelope(b: &FiniteBiPoset, x: usize, y: usize, kind: EnvelopeKind) -> Option<usize> {
    let leq = |a: usize, c: usize| b.leq().matrix()[a * b.len() + c];
    let sleq = |a: usize, c: usize| b.sleq().matrix()[a * b.len() + c];
    let mut set = Vec::new();
    for w in 0..b.len() {
        let member = match kind {
            EnvelopeKind::Upper => sleq(x, w) && leq(y, w),
            EnvelopeKind::Lower => sleq(w, x) && leq(w, y),
        };
        if member {
            set.push(w);
        }
    }
    for &c in &set {
        let mut extreme = true;
        for &d in &set {
            let ok = match kind {
                EnvelopeKind::Upper => leq(c, d),
                EnvelopeKind::Lower => leq(d, c),
            };
            if !ok {
                extreme = false;
                break;
            }
        }
        if extreme {
            return Some(c);
        }
    }
    None
}
