use serde::Serialize;

/// Outcome of an exhaustively checked, universally quantified statement.
///
/// `witness` is present exactly when `holds` is false and is the
/// lexicographically first tuple (first variable outermost) at which the
/// statement fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Evaluates `holds` on every tuple in `{0..n}^arity` in lexicographic
/// order and stops at the first failure.
pub fn search(n: usize, arity: usize, mut holds: impl FnMut(&[usize]) -> bool) -> Verdict {
    if n == 0 {
        return Verdict::pass();
    }
    let mut tuple = vec![0usize; arity];
    loop {
        if !holds(&tuple) {
            return Verdict::fail(tuple);
        }
        // odometer increment, last position fastest
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Verdict::pass();
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_visits_in_lexicographic_order() {
        let mut seen = Vec::new();
        let v = search(2, 2, |t| {
            seen.push(t.to_vec());
            true
        });
        assert!(v.holds);
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn search_returns_first_failure() {
        let v = search(3, 3, |t| t[0] + t[1] + t[2] < 3);
        assert_eq!(v, Verdict::fail(vec![0, 1, 2]));
    }

    #[test]
    fn nullary_and_empty() {
        assert!(search(0, 3, |_| false).holds);
        assert_eq!(search(3, 0, |_| false), Verdict::fail(vec![]));
    }
}
