//! Finite binary relations over dense element indices `0..n`.
//!
//! A [`Relation`] is stored as a flat row-major boolean matrix; entry
//! `(i, j)` means element `i` is related to element `j`. All the order
//! algorithms in this crate (closure, validation, least/greatest elements,
//! cover pairs) work on these indices and never look at labels.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    size: usize,
    matrix: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Reflexivity => "reflexivity",
            ViolationKind::Antisymmetry => "antisymmetry",
            ViolationKind::Transitivity => "transitivity",
        })
    }
}

/// A failed partial-order axiom together with the indices that break it.
///
/// The witness has one index for reflexivity (`x` with `x` unrelated to
/// itself), two for antisymmetry (`x != y` related both ways) and three for
/// transitivity (`x ~ y`, `y ~ z` but not `x ~ z`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderViolation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.kind, self.witness)
    }
}

impl Relation {
    /// The empty relation (no pairs at all, not even reflexive ones).
    pub fn empty(size: usize) -> Self {
        Relation {
            size,
            matrix: vec![false; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut r = Relation::empty(size);
        for i in 0..size {
            r.matrix[i * size + i] = true;
        }
        r
    }

    pub fn from_matrix(size: usize, matrix: Vec<bool>) -> Result<Self> {
        if matrix.len() != size * size {
            return Err(Error::MatrixShape {
                size,
                len: matrix.len(),
            });
        }
        Ok(Relation { size, matrix })
    }

    /// Builds the relation consisting of exactly `pairs`, with no closure.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut r = Relation::empty(size);
        for &(i, j) in pairs {
            r.check_index(i)?;
            r.check_index(j)?;
            r.matrix[i * size + j] = true;
        }
        Ok(r)
    }

    /// Builds a relation from a predicate evaluated on every ordered pair.
    pub fn from_fn(size: usize, mut related: impl FnMut(usize, usize) -> bool) -> Self {
        let mut matrix = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                matrix.push(related(i, j));
            }
        }
        Relation { size, matrix }
    }

    /// Smallest reflexive and transitive relation containing `pairs`.
    pub fn reflexive_transitive_closure(pairs: &[(usize, usize)], size: usize) -> Result<Self> {
        let mut r = Relation::from_pairs(size, pairs)?;
        r.close();
        Ok(r)
    }

    /// Reflexive-transitive closure of this relation (Warshall).
    pub fn closure(&self) -> Self {
        let mut r = self.clone();
        r.close();
        r
    }

    fn close(&mut self) {
        let n = self.size;
        for i in 0..n {
            self.matrix[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if !self.matrix[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if self.matrix[k * n + j] {
                        self.matrix[i * n + j] = true;
                    }
                }
            }
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.size {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                size: self.size,
            })
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.size + j]
    }

    pub fn matrix(&self) -> &[bool] {
        &self.matrix
    }

    /// All related pairs in row-major order, including reflexive ones.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.size;
        (0..n * n)
            .filter(move |&k| self.matrix[k])
            .map(move |k| (k / n, k % n))
    }

    /// Number of related pairs `(i, j)` with `i != j`.
    pub fn strict_pair_count(&self) -> usize {
        self.pairs().filter(|&(i, j)| i != j).count()
    }

    /// The converse relation.
    pub fn transpose(&self) -> Self {
        Relation::from_fn(self.size, |i, j| self.get(j, i))
    }

    /// True if every pair of `self` is also a pair of `other`.
    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.size == other.size
            && self
                .matrix
                .iter()
                .zip(&other.matrix)
                .all(|(&a, &b)| !a || b)
    }

    /// Checks reflexivity, antisymmetry and transitivity in that order.
    ///
    /// Within each axiom the scan is lexicographic in the witness indices,
    /// so the reported violation is the first one in that order.
    pub fn validate(&self) -> std::result::Result<(), OrderViolation> {
        let n = self.size;
        for x in 0..n {
            if !self.get(x, x) {
                return Err(OrderViolation {
                    kind: ViolationKind::Reflexivity,
                    witness: vec![x],
                });
            }
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if self.get(x, y) && self.get(y, x) {
                    return Err(OrderViolation {
                        kind: ViolationKind::Antisymmetry,
                        witness: vec![x, y],
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.get(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.get(y, z) && !self.get(x, z) {
                        return Err(OrderViolation {
                            kind: ViolationKind::Transitivity,
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_partial_order(&self) -> bool {
        self.validate().is_ok()
    }

    /// The element of `subset` below every member of `subset`, if any.
    ///
    /// Assumes `self` is a partial order. Returns `None` for an empty subset
    /// and for subsets that only have (several) minimal elements.
    pub fn least(&self, subset: &[usize]) -> Option<usize> {
        let mut best = *subset.first()?;
        for &c in &subset[1..] {
            if self.get(c, best) {
                best = c;
            }
        }
        subset.iter().all(|&c| self.get(best, c)).then_some(best)
    }

    /// The element of `subset` above every member of `subset`, if any.
    pub fn greatest(&self, subset: &[usize]) -> Option<usize> {
        let mut best = *subset.first()?;
        for &c in &subset[1..] {
            if self.get(best, c) {
                best = c;
            }
        }
        subset.iter().all(|&c| self.get(c, best)).then_some(best)
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly in between.
    ///
    /// Assumes `self` is a partial order. Pairs are returned in row-major
    /// order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == y || !self.get(x, y) {
                    continue;
                }
                let between =
                    (0..n).any(|z| z != x && z != y && self.get(x, z) && self.get(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Restriction to `subset`; element `k` of the result is `subset[k]`.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        Relation::from_fn(subset.len(), |i, j| self.get(subset[i], subset[j]))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<_> = self.pairs().filter(|&(i, j)| i != j).collect();
        f.debug_struct("Relation")
            .field("size", &self.size)
            .field("strict_pairs", &pairs)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const DIV12: [u64; 6] = [1, 2, 3, 4, 6, 12];

    fn divisibility(labels: &[u64]) -> Relation {
        Relation::from_fn(labels.len(), |i, j| labels[j] % labels[i] == 0)
    }

    fn usual(labels: &[u64]) -> Relation {
        Relation::from_fn(labels.len(), |i, j| labels[i] <= labels[j])
    }

    fn index(labels: &[u64], v: u64) -> usize {
        labels.iter().position(|&l| l == v).unwrap()
    }

    #[test]
    fn closure_of_nothing_is_identity() {
        let r = Relation::reflexive_transitive_closure(&[], 3).unwrap();
        assert_eq!(r, Relation::identity(3));
    }

    #[test]
    fn closure_adds_transitive_pair() {
        let r = Relation::reflexive_transitive_closure(&[(0, 1), (1, 2)], 3).unwrap();
        assert!(r.get(0, 2));
        assert_eq!(r.strict_pair_count(), 3);
        assert!(!r.get(2, 0));
    }

    #[test]
    fn closure_of_divisibility_covers() {
        let covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)];
        let r = Relation::reflexive_transitive_closure(&covers, 6).unwrap();
        // brute-force pairwise divisibility test
        let mut expected = 0;
        for a in DIV12 {
            for b in DIV12 {
                if a != b && b % a == 0 {
                    expected += 1;
                }
            }
        }
        assert_eq!(expected, 12);
        assert_eq!(r.strict_pair_count(), expected);
        assert_eq!(r, divisibility(&DIV12));
    }

    #[test]
    fn closure_rejects_out_of_range() {
        let err = Relation::reflexive_transitive_closure(&[(0, 3)], 3).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 3, size: 3 });
    }

    #[test]
    fn validate_identity_and_antisymmetry() {
        assert!(Relation::identity(3).validate().is_ok());
        let r = Relation::reflexive_transitive_closure(&[(0, 1), (1, 0)], 3).unwrap();
        assert_eq!(
            r.validate(),
            Err(OrderViolation {
                kind: ViolationKind::Antisymmetry,
                witness: vec![0, 1]
            })
        );
    }

    #[test]
    fn validate_reports_first_violation() {
        let r = Relation::from_pairs(3, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(r.validate().unwrap_err().witness, vec![2]);
        let r = Relation::from_pairs(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(
            r.validate().unwrap_err(),
            OrderViolation {
                kind: ViolationKind::Transitivity,
                witness: vec![0, 1, 2]
            }
        );
    }

    #[test]
    fn divisibility_on_one_to_twelve_is_partial_order() {
        let labels: Vec<u64> = (1..=12).collect();
        let mut gens = Vec::new();
        for a in 1..=12u64 {
            for k in 2..=12u64 {
                if a * k <= 12 {
                    gens.push(((a - 1) as usize, (a * k - 1) as usize));
                }
            }
        }
        let r = Relation::reflexive_transitive_closure(&gens, 12).unwrap();
        assert!(r.validate().is_ok());
        assert_eq!(r, divisibility(&labels));
    }

    #[test]
    fn least_and_greatest() {
        let chain = usual(&[8, 12]);
        assert_eq!(chain.least(&[0, 1]), Some(0));
        assert_eq!(chain.greatest(&[0, 1]), Some(1));

        let div = divisibility(&DIV12);
        let ix = |v| index(&DIV12, v);
        assert_eq!(div.least(&[ix(2), ix(3)]), None);
        assert_eq!(div.least(&[ix(2), ix(4), ix(6), ix(12)]), Some(ix(2)));
        assert_eq!(div.greatest(&[ix(4), ix(6)]), None);
        assert_eq!(div.greatest(&[ix(1), ix(2), ix(3), ix(6)]), Some(ix(6)));
        assert_eq!(div.least(&[]), None);
        assert_eq!(div.greatest(&[]), None);
    }

    #[test]
    fn covers_examples() {
        assert!(Relation::identity(4).covers().is_empty());
        let chain = Relation::reflexive_transitive_closure(&[(0, 1), (1, 2)], 3).unwrap();
        assert_eq!(chain.covers(), vec![(0, 1), (1, 2)]);

        let div = divisibility(&DIV12);
        let got: Vec<(u64, u64)> = div
            .covers()
            .into_iter()
            .map(|(i, j)| (DIV12[i], DIV12[j]))
            .collect();
        // brute-force betweenness scan over the labels
        let mut expected = Vec::new();
        for a in DIV12 {
            for b in DIV12 {
                if a != b
                    && b % a == 0
                    && !DIV12
                        .iter()
                        .any(|&c| c != a && c != b && c % a == 0 && b % c == 0)
                {
                    expected.push((a, b));
                }
            }
        }
        assert_eq!(got, expected);
        assert_eq!(
            got,
            vec![(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12)]
        );
    }

    fn arb_pairs() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..8)))
    }

    proptest! {
        #[test]
        fn closure_operator_laws((n, pairs) in arb_pairs(), extra in prop::collection::vec((0usize..5, 0usize..5), 0..4)) {
            let c = Relation::reflexive_transitive_closure(&pairs, n).unwrap();
            // extensive
            prop_assert!(Relation::from_pairs(n, &pairs).unwrap().is_subset_of(&c));
            // idempotent
            prop_assert_eq!(c.closure(), c.clone());
            // monotone
            let mut more = pairs.clone();
            more.extend(extra.into_iter().filter(|&(i, j)| i < n && j < n));
            let c2 = Relation::reflexive_transitive_closure(&more, n).unwrap();
            prop_assert!(c.is_subset_of(&c2));
        }

        #[test]
        fn covers_reconstruct_order((n, pairs) in arb_pairs()) {
            let c = Relation::reflexive_transitive_closure(&pairs, n).unwrap();
            prop_assume!(c.is_partial_order());
            let back = Relation::reflexive_transitive_closure(&c.covers(), n).unwrap();
            prop_assert_eq!(back, c);
        }

        #[test]
        fn least_is_member_and_below_all((n, pairs) in arb_pairs(), mask in 0u32..32) {
            let c = Relation::reflexive_transitive_closure(&pairs, n).unwrap();
            prop_assume!(c.is_partial_order());
            let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if let Some(m) = c.least(&subset) {
                prop_assert!(subset.contains(&m));
                prop_assert!(subset.iter().all(|&s| c.get(m, s)));
            } else {
                prop_assert!(!subset.iter().any(|&m| subset.iter().all(|&s| c.get(m, s))));
            }
            if let Some(m) = c.greatest(&subset) {
                prop_assert!(subset.contains(&m));
                prop_assert!(subset.iter().all(|&s| c.get(s, m)));
            } else {
                prop_assert!(!subset.iter().any(|&m| subset.iter().all(|&s| c.get(s, m))));
            }
        }
    }
}
