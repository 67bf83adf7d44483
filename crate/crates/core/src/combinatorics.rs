//! Surjections, compositions, partitions and the counting functions that
//! index the bases of every model.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A surjection `{1..n} ↠ {1..k}`, stored as its value tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection {
    values: Vec<usize>,
    k: usize,
}

impl Surjection {
    /// Checks that `values` hits every element of `{1..max}` and nothing else.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let k = values.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; k + 1];
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidParameter("surjection values start at 1".into()));
            }
            seen[v] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidParameter(format!("{values:?} is not surjective onto 1..{k}")));
        }
        Ok(Surjection { values, k })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Size of the domain.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Size of the image.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Identifies the values `i` and `i + 1`, then closes the gap.
    pub fn merge(&self, i: usize) -> Result<Surjection> {
        if i < 1 || i + 1 > self.k {
            return Err(Error::IndexOutOfRange {
                index: i,
                valid: if self.k >= 2 {
                    format!("1..={}", self.k - 1)
                } else {
                    "none".into()
                },
            });
        }
        Ok(Surjection {
            values: self
                .values
                .iter()
                .map(|&v| if v > i { v - 1 } else { v })
                .collect(),
            k: self.k - 1,
        })
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Free function form of [`Surjection::merge`].
pub fn merge(a: &Surjection, i: usize) -> Result<Surjection> {
    a.merge(i)
}

type SurjectionTable = RwLock<HashMap<(usize, usize), Arc<Vec<Surjection>>>>;

fn surjection_memo() -> &'static SurjectionTable {
    static MEMO: OnceLock<SurjectionTable> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// All surjections `{1..n} ↠ {1..k}` in lexicographic order of value tuples.
/// Results are cached; concurrent fills compute the same list.
pub fn surjections(n: usize, k: usize) -> Arc<Vec<Surjection>> {
    if let Some(v) = surjection_memo().read().expect("memo poisoned").get(&(n, k)) {
        return Arc::clone(v);
    }
    let list = Arc::new(enumerate_surjections(n, k));
    let mut w = surjection_memo().write().expect("memo poisoned");
    Arc::clone(w.entry((n, k)).or_insert(list))
}

fn enumerate_surjections(n: usize, k: usize) -> Vec<Surjection> {
    let mut out = Vec::new();
    if k > n || (k == 0 && n > 0) {
        return out;
    }
    let mut cur = Vec::with_capacity(n);
    let mut counts = vec![0usize; k + 1];
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, counts: &mut [usize], missing: usize, out: &mut Vec<Surjection>) {
        if cur.len() == n {
            if missing == 0 {
                out.push(Surjection {
                    values: cur.clone(),
                    k,
                });
            }
            return;
        }
        // Prune once the remaining slots cannot cover the missing values.
        if n - cur.len() < missing {
            return;
        }
        for v in 1..=k {
            let fresh = counts[v] == 0;
            counts[v] += 1;
            cur.push(v);
            rec(n, k, cur, counts, missing - usize::from(fresh), out);
            cur.pop();
            counts[v] -= 1;
        }
    }
    rec(n, k, &mut cur, &mut counts, k, &mut out);
    out
}

/// Position of each surjection within `surjections(n, k)`.
pub fn surjection_index(n: usize, k: usize) -> HashMap<Vec<usize>, usize> {
    surjections(n, k)
        .iter()
        .enumerate()
        .map(|(i, s)| (s.values.clone(), i))
        .collect()
}

/// An ordered splitting of `n` into positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts sorted decreasingly: the partition this composition rearranges.
    pub fn sorted_parts(&self) -> Vec<usize> {
        let mut p = self.parts.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Compositions of `n` with exactly `m` parts, lexicographic.
pub fn compositions(n: usize, m: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(Composition { parts: Vec::new() });
        }
        return out;
    }
    if n < m {
        return out;
    }
    let mut cur = Vec::with_capacity(m);
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rest);
            out.push(Composition { parts: cur.clone() });
            cur.pop();
            return;
        }
        for first in 1..=rest - (slots - 1) {
            cur.push(first);
            rec(rest - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, m, &mut cur, &mut out);
    out
}

/// Partitions of `n` into exactly `m` parts, each listed decreasingly, in
/// reverse lexicographic order.
pub fn partitions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(rest: usize, slots: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest < slots {
            return;
        }
        for p in (1..=max.min(rest - (slots - 1))).rev() {
            // Remaining parts are at most p each.
            if p * slots < rest {
                break;
            }
            cur.push(p);
            rec(rest - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    rec(n, m, n, &mut Vec::new(), &mut out);
    out
}

/// `Part(n, m)`: partitions of `n` into exactly `m` parts.
pub fn partitions_count(n: usize, m: usize) -> BigUint {
    // p(n, m) = p(n - 1, m - 1) + p(n - m, m)
    let mut t = vec![vec![BigUint::zero(); m + 1]; n + 1];
    t[0][0] = BigUint::one();
    for i in 1..=n {
        for j in 1..=m.min(i) {
            let a = t[i - 1][j - 1].clone();
            let b = t[i - j][j].clone();
            t[i][j] = a + b;
        }
    }
    t[n][m].clone()
}

/// Total number of partitions of `n`.
pub fn partition_number(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    (1..=n).map(|m| partitions_count(n, m)).sum()
}

/// Stirling numbers of the second kind.
pub fn stirling(n: usize, m: usize) -> BigUint {
    // S(i, j) = j S(i - 1, j) + S(i - 1, j - 1)
    let mut row = vec![BigUint::zero(); m + 1];
    row[0] = BigUint::one();
    for _ in 0..n {
        for j in (1..=m).rev() {
            let prev = row[j - 1].clone();
            row[j] = &row[j] * BigUint::from(j) + prev;
        }
        row[0] = BigUint::zero();
    }
    row[m].clone()
}

/// Number of set partitions of an `n`-element set.
pub fn bell(n: usize) -> BigUint {
    (0..=n).map(|m| stirling(n, m)).sum()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `|sur(n, m)| = m! · S(n, m)`.
pub fn surjection_count(n: usize, m: usize) -> BigUint {
    factorial(m) * stirling(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(s: &[Surjection]) -> Vec<Vec<usize>> {
        s.iter().map(|x| x.values().to_vec()).collect()
    }

    #[test]
    fn small_surjection_lists() {
        assert_eq!(vals(&surjections(2, 2)), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(vals(&surjections(3, 1)), vec![vec![1, 1, 1]]);
        assert_eq!(surjections(0, 0).len(), 1);
        assert!(surjections(2, 3).is_empty());
        assert!(surjections(2, 0).is_empty());
    }

    #[test]
    fn merge_examples() {
        let a = Surjection::new(vec![1, 2]).unwrap();
        assert_eq!(a.merge(1).unwrap().values(), &[1, 1]);
        let b = Surjection::new(vec![1, 3, 2]).unwrap();
        assert_eq!(b.merge(2).unwrap().values(), &[1, 2, 2]);
        assert!(matches!(b.merge(3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(b.merge(0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn counts() {
        assert_eq!(compositions(4, 2).len(), 3);
        assert_eq!(partitions_count(4, 2), BigUint::from(2u32));
        assert_eq!(partitions(4, 2), vec![vec![3, 1], vec![2, 2]]);
        assert_eq!(bell(3), BigUint::from(5u32));
        assert_eq!(stirling(5, 5), BigUint::one());
        assert_eq!(partitions_count(5, 1), BigUint::one());
        assert_eq!(partition_number(5), BigUint::from(7u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
    }

    #[test]
    fn rejects_non_surjection() {
        assert!(Surjection::new(vec![1, 3]).is_err());
        assert!(Composition::new(vec![2, 0]).is_err());
    }
}
