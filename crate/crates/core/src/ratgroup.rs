//! The multiplicative group of positive rationals with the numeric order
//! `≤` and the divisibility order `≼` (`p ≼ q` iff `q / p` is a positive
//! integer).
//!
//! The carrier is infinite, so envelopes come from closed forms instead of
//! a search:
//!
//! * `r ⩗ q = r · ⌈q / r⌉`, the least multiple of `r` that is `≥ q`;
//! * `r ⩘ q = r / ⌈r / q⌉`, the greatest divisor of `r` that is `≤ q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{axiom_holds, AxiomId, MixedOps};
use crate::error::{Error, Result};
use crate::gen::Lcg;

/// A positive rational in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PosRational {
    num: BigUint,
    den: BigUint,
}

impl PosRational {
    pub fn new(num: BigUint, den: BigUint) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::Input("positive rationals need nonzero parts".into()));
        }
        let g = num.gcd(&den);
        Ok(PosRational {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn from_u64s(num: u64, den: u64) -> Result<Self> {
        PosRational::new(BigUint::from(num), BigUint::from(den))
    }

    pub fn integer(n: u64) -> Result<Self> {
        PosRational::from_u64s(n, 1)
    }

    pub fn one() -> Self {
        PosRational {
            num: BigUint::one(),
            den: BigUint::one(),
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Self {
        PosRational {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// `⌈self⌉` as an integer.
    pub fn ceil(&self) -> BigUint {
        let (q, r) = self.num.div_rem(&self.den);
        if r.is_zero() {
            q
        } else {
            q + 1u32
        }
    }

    fn scale(&self, k: &BigUint) -> Self {
        PosRational::new(&self.num * k, self.den.clone()).expect("k >= 1")
    }

    fn shrink(&self, k: &BigUint) -> Self {
        PosRational::new(self.num.clone(), &self.den * k).expect("k >= 1")
    }
}

impl Ord for PosRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for PosRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &PosRational {
    type Output = PosRational;

    fn mul(self, rhs: &PosRational) -> PosRational {
        PosRational::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero product")
    }
}

impl Div for &PosRational {
    type Output = PosRational;

    fn div(self, rhs: &PosRational) -> PosRational {
        PosRational::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero quotient")
    }
}

impl fmt::Display for PosRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for PosRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PosRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Input(format!("malformed rational `{whole}`")));
    }
    Ok(BigUint::parse_bytes(s.as_bytes(), 10).expect("ascii digits"))
}

impl FromStr for PosRational {
    type Err = Error;

    /// Accepts `p` or `p/q` in ASCII decimal with no whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_digits(n, s)?, parse_digits(d, s)?),
            None => (parse_digits(s, s)?, BigUint::one()),
        };
        PosRational::new(n, d)
    }
}

/// Numeric order `p ≤ q`.
pub fn leq(p: &PosRational, q: &PosRational) -> bool {
    p <= q
}

/// Divisibility order: `p ≼ q` iff `q / p` is a positive integer.
pub fn sleq(p: &PosRational, q: &PosRational) -> bool {
    (q / p).is_integer()
}

/// `r ⩗ q`: the least `t` with `t ≥ q` and `r ≼ t`.
pub fn env_upper(r: &PosRational, q: &PosRational) -> PosRational {
    r.scale(&(q / r).ceil())
}

/// `r ⩘ q`: the greatest `s` with `s ≤ q` and `s ≼ r`.
pub fn env_lower(r: &PosRational, q: &PosRational) -> PosRational {
    r.shrink(&(r / q).ceil())
}

/// The envelope operations of the positive rationals.
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalOps;

impl MixedOps for RationalOps {
    type Elem = PosRational;

    fn upper(&self, x: &PosRational, y: &PosRational) -> PosRational {
        env_upper(x, y)
    }

    fn lower(&self, x: &PosRational, y: &PosRational) -> PosRational {
        env_lower(x, y)
    }
}

/// Names of the statements checked at each sampled triple.
pub const GROUP_LAWS: [&str; 11] = [
    "leq_translation",
    "sleq_translation",
    "upper_distributes",
    "lower_distributes",
    "M1",
    "M2a",
    "M2b",
    "M3a",
    "M3b",
    "M4a",
    "M4b",
];

/// Evaluates one entry of [`GROUP_LAWS`] at `(x, y, z)`.
pub fn group_law_holds(law: &str, x: &PosRational, y: &PosRational, z: &PosRational) -> bool {
    let xz = x * z;
    let yz = y * z;
    match law {
        "leq_translation" => !leq(x, y) || leq(&xz, &yz),
        "sleq_translation" => !sleq(x, y) || sleq(&xz, &yz),
        "upper_distributes" => &env_upper(x, y) * z == env_upper(&xz, &yz),
        "lower_distributes" => &env_lower(x, y) * z == env_lower(&xz, &yz),
        other => {
            let id = AxiomId::ALL
                .into_iter()
                .find(|a| a.name() == other)
                .unwrap_or_else(|| panic!("unknown group law {other}"));
            let t = [x.clone(), y.clone(), z.clone()];
            axiom_holds(&RationalOps, id, &t[..id.arity()])
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupLawFailure {
    pub law: &'static str,
    pub x: PosRational,
    pub y: PosRational,
    pub z: PosRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupLawReport {
    pub samples: usize,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<GroupLawFailure>,
}

/// Checks every entry of [`GROUP_LAWS`] at one triple.
pub fn check_group_laws_at(
    x: &PosRational,
    y: &PosRational,
    z: &PosRational,
) -> Vec<&'static str> {
    GROUP_LAWS
        .into_iter()
        .filter(|law| !group_law_holds(law, x, y, z))
        .collect()
}

/// Draws a rational with numerator and denominator uniform in `[1, bound]`.
pub fn sample_rational(rng: &mut Lcg, bound: u64) -> PosRational {
    let n = rng.range_inclusive(1, bound);
    let d = rng.range_inclusive(1, bound);
    PosRational::from_u64s(n, d).expect("positive parts")
}

/// Spot-checks the group laws on `count` pseudorandom triples.
pub fn check_group_laws(seed: u64, count: usize, bound: u64) -> Result<GroupLawReport> {
    if count == 0 || bound == 0 {
        return Err(Error::Input("count and bound must be at least 1".into()));
    }
    let mut rng = Lcg::new(seed);
    let mut report = GroupLawReport {
        samples: count,
        checks: 0,
        failures: 0,
        first_failure: None,
    };
    for _ in 0..count {
        let x = sample_rational(&mut rng, bound);
        let y = sample_rational(&mut rng, bound);
        let z = sample_rational(&mut rng, bound);
        for law in GROUP_LAWS {
            report.checks += 1;
            if !group_law_holds(law, &x, &y, &z) {
                report.failures += 1;
                if report.first_failure.is_none() {
                    report.first_failure = Some(GroupLawFailure {
                        law,
                        x: x.clone(),
                        y: y.clone(),
                        z: z.clone(),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> PosRational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("14/4").to_string(), "7/2");
        assert_eq!(q("6/3").to_string(), "2");
        assert_eq!(q("7").to_string(), "7");
        for bad in ["", "0", "1/0", "0/3", " 1", "1 /2", "-1", "+1", "1/2/3", "a", "1/"] {
            assert!(bad.parse::<PosRational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn order_examples() {
        assert!(sleq(&q("7/2"), &q("7")));
        assert!(!sleq(&q("2"), &q("3")));
        assert!(leq(&q("7/2"), &q("5")));
        assert!(!leq(&q("5"), &q("7/2")));
    }

    #[test]
    fn envelope_examples() {
        assert_eq!(env_upper(&q("7"), &q("5")), q("7"));
        assert_eq!(env_upper(&q("3/2"), &q("4")), q("9/2"));
        assert_eq!(env_lower(&q("7"), &q("5")), q("7/2"));
        assert_eq!(env_lower(&q("14"), &q("10")), q("7"));
        for r in ["1", "7/2", "22/7"] {
            assert_eq!(env_upper(&q(r), &q(r)), q(r));
            assert_eq!(env_lower(&q(r), &q(r)), q(r));
        }
    }

    #[test]
    fn distributivity_instance() {
        let two = q("2");
        let lhs = env_lower(&(&two * &q("7")), &(&two * &q("5")));
        assert_eq!(lhs, q("7"));
        assert_eq!(lhs, &two * &env_lower(&q("7"), &q("5")));
        assert!(check_group_laws_at(&q("7"), &q("5"), &q("2")).is_empty());
    }

    #[test]
    fn diagonal_triples_pass() {
        for (x, z) in [("3/5", "2"), ("1", "1"), ("100/7", "9/4")] {
            assert!(check_group_laws_at(&q(x), &q(x), &q(z)).is_empty());
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(check_group_laws(1, 0, 5).is_err());
        assert!(check_group_laws(1, 5, 0).is_err());
    }

    #[test]
    fn integer_envelopes_match_divisors_of_sixty() {
        use crate::biposet::{FiniteBiPoset, MixedLattice};
        use crate::order::Relation;
        let labels: Vec<u64> = (1..=60).filter(|d| 60 % d == 0).collect();
        let n = labels.len();
        let b = FiniteBiPoset::new(
            labels.iter().map(u64::to_string).collect(),
            Relation::from_fn(n, |i, j| labels[i] <= labels[j]),
            Relation::from_fn(n, |i, j| labels[j] % labels[i] == 0),
        )
        .unwrap();
        let ml = MixedLattice::new(b).unwrap();
        let mut compared = 0;
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (q(&labels[i].to_string()), q(&labels[j].to_string()));
                for (formula, table) in [
                    (env_upper(&x, &y), ml.upper(i, j)),
                    (env_lower(&x, &y), ml.lower(i, j)),
                ] {
                    if let Some(k) = labels.iter().position(|l| q(&l.to_string()) == formula) {
                        assert_eq!(k, table, "x={x} y={y}");
                        compared += 1;
                    }
                }
            }
        }
        assert!(compared > n * n);
    }

    fn arb_rational() -> impl Strategy<Value = PosRational> {
        (1u64..=1000, 1u64..=1000).prop_map(|(n, d)| PosRational::from_u64s(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn lower_envelope_certificate(r in arb_rational(), bound in arb_rational()) {
            let s = env_lower(&r, &bound);
            prop_assert!(s <= bound);
            prop_assert!(sleq(&s, &r));
            let k = (&r / &bound).ceil();
            if k >= BigUint::from(2u32) {
                // the next larger divisor of r is too big
                let prev = r.shrink(&(k - 1u32));
                prop_assert!(prev > bound);
            }
        }

        #[test]
        fn upper_envelope_certificate(r in arb_rational(), bound in arb_rational()) {
            let t = env_upper(&r, &bound);
            prop_assert!(t >= bound);
            prop_assert!(sleq(&r, &t));
            let k = (&t / &r).ceil();
            if k >= BigUint::from(2u32) {
                prop_assert!(r.scale(&(k - 1u32)) < bound);
            }
        }

        #[test]
        fn duality_under_inversion(r in arb_rational(), s in arb_rational()) {
            prop_assert_eq!(env_upper(&r, &s), env_lower(&r.recip(), &s.recip()).recip());
        }

        #[test]
        fn basic_identities_at_samples(x in arb_rational(), y in arb_rational(), u in arb_rational(), v in arb_rational()) {
            // idempotence
            prop_assert_eq!(env_upper(&x, &x), x.clone());
            prop_assert_eq!(env_lower(&x, &x), x.clone());
            // bounds
            let (up, lo) = (env_upper(&x, &y), env_lower(&x, &y));
            prop_assert!(sleq(&lo, &x) && sleq(&x, &up) && lo <= y && y <= up);
            // monotonicity, with u replaced by a multiple of x so the premise is met
            let u2 = &x * &PosRational::integer(u.ceil().try_into().unwrap_or(1u64)).unwrap();
            let v2 = if y <= v { v.clone() } else { y.clone() };
            prop_assert!(env_upper(&x, &y) <= env_upper(&u2, &v2));
            prop_assert!(env_lower(&x, &y) <= env_lower(&u2, &v2));
            // sleq characterization
            let a = sleq(&x, &y);
            prop_assert_eq!(a, env_upper(&x, &y) == y);
            prop_assert_eq!(a, env_lower(&y, &x) == x);
            // absorption
            prop_assert_eq!(env_upper(&env_lower(&x, &y), &x), x.clone());
            prop_assert_eq!(env_lower(&env_upper(&x, &y), &x), x.clone());
        }

        #[test]
        fn group_laws_at_samples(x in arb_rational(), y in arb_rational(), z in arb_rational()) {
            prop_assert!(check_group_laws_at(&x, &y, &z).is_empty());
        }
    }
}
