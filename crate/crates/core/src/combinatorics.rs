//! Integer partitions and exact binomial coefficients.
//!
//! Partitions hold positive parts only. A bound on the number of parts plays
//! the role of "at most `k` parts"; zero parts never appear here.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A non-increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The unique partition of zero.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn from_parts(mut parts: Vec<u32>) -> crate::Result<Self> {
        if parts.contains(&0) {
            return Err(crate::Error::Domain("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// True when no part repeats.
    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> ConjugatePartition {
        ConjugatePartition(transpose(&self.0))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = crate::Error;

    fn try_from(parts: Vec<u32>) -> crate::Result<Self> {
        Partition::from_parts(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Transposed Young diagram of a [`Partition`]: `mu[m-1] = #{ j : lambda_j >= m }`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugatePartition(Vec<u32>);

impl ConjugatePartition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Conjugating again recovers the source partition.
    pub fn conjugate(&self) -> Partition {
        Partition(transpose(&self.0))
    }
}

fn transpose(parts: &[u32]) -> Vec<u32> {
    let largest = parts.first().copied().unwrap_or(0);
    (1..=largest)
        .map(|m| parts.iter().take_while(|&&p| p >= m).count() as u32)
        .collect()
}

pub fn conjugate(p: &Partition) -> ConjugatePartition {
    p.conjugate()
}

/// Calls `visit` on every partition of `total` into at most `max_parts` parts,
/// each at most `max_part`, in lexicographically decreasing order.
pub fn for_each_partition<F: FnMut(&[u32])>(total: u32, max_parts: u32, max_part: u32, mut visit: F) {
    let mut buf = Vec::with_capacity(max_parts as usize);
    walk(total, max_parts, max_part, &mut buf, &mut visit);
}

fn walk<F: FnMut(&[u32])>(remaining: u32, parts_left: u32, cap: u32, buf: &mut Vec<u32>, visit: &mut F) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    // the remaining parts cannot cover what is left
    if parts_left == 0 || (parts_left as u64) * (cap as u64) < remaining as u64 {
        return;
    }
    let mut part = cap.min(remaining);
    while part >= 1 {
        if (parts_left as u64) * (part as u64) < remaining as u64 {
            break;
        }
        buf.push(part);
        walk(remaining - part, parts_left - 1, part, buf, visit);
        buf.pop();
        part -= 1;
    }
}

/// Every partition of `total` with at most `max_parts` parts, each at most
/// `max_part`, in lexicographically decreasing order.
pub fn enumerate_partitions(total: u32, max_parts: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(total, max_parts, max_part, |p| out.push(Partition(p.to_vec())));
    out
}

/// `C(a, k)`, zero outside `0 <= k <= a`. `None` on `u128` overflow.
pub fn checked_binomial(a: u64, k: i64) -> Option<u128> {
    if k < 0 || k as u64 > a {
        return Some(0);
    }
    let k = (k as u64).min(a - k as u64);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (a - i) is divisible by i + 1; cancel first so only the
        // final value has to fit
        let d = i as u128 + 1;
        let g = gcd(acc, d);
        acc = (acc / g).checked_mul((a - i) as u128 / (d / g))?;
    }
    Some(acc)
}

fn gcd(mut x: u128, mut y: u128) -> u128 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// `C(a, k)` with `C(a, k) = 0` for `k < 0` or `k > a`.
///
/// Exact for every `a <= 128`; panics rather than wrapping if a larger
/// argument overflows `u128`.
pub fn binomial(a: u64, k: i64) -> u128 {
    checked_binomial(a, k).unwrap_or_else(|| panic!("binomial C({a},{k}) overflows u128"))
}

/// `sum_{i=0}^{k} (-1)^i C(a+b-i, k-i) C(b, i)`, evaluated term by term.
///
/// The alternating sum collapses to `C(a, k)`; this function exists so that
/// the collapse can be tested rather than assumed.
pub fn alternating_binomial_identity_lhs(a: u64, b: u64, k: u64) -> i128 {
    let mut sum: i128 = 0;
    for i in 0..=k {
        let top = (a + b).checked_sub(i);
        let first = match top {
            Some(t) => binomial(t, k as i64 - i as i64),
            None => 0,
        };
        let term = i128::try_from(first * binomial(b, i as i64)).expect("term overflows i128");
        sum = if i % 2 == 0 { sum + term } else { sum - term };
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parts(ps: &[Partition]) -> Vec<Vec<u32>> {
        ps.iter().map(|p| p.parts().to_vec()).collect()
    }

    /// Brute force: every non-increasing tuple of length <= max_parts with
    /// entries in 1..=max_part, filtered by sum.
    fn brute_partition_count(total: u32, max_parts: u32, max_part: u32) -> usize {
        fn rec(len_left: u32, cap: u32, sum: u32, total: u32, count: &mut usize) {
            if sum == total {
                *count += 1;
            }
            if len_left == 0 || sum >= total {
                return;
            }
            for p in 1..=cap {
                rec(len_left - 1, p, sum + p, total, count);
            }
        }
        let mut count = 0;
        rec(max_parts, max_part, 0, total, &mut count);
        count
    }

    #[test]
    fn partitions_of_six() {
        let got = parts(&enumerate_partitions(6, 3, 5));
        assert_eq!(
            got,
            vec![
                vec![5, 1],
                vec![4, 2],
                vec![4, 1, 1],
                vec![3, 3],
                vec![3, 2, 1],
                vec![2, 2, 2]
            ]
        );
    }

    #[test]
    fn partitions_of_zero_and_twelve() {
        assert_eq!(parts(&enumerate_partitions(0, 3, 5)), vec![Vec::<u32>::new()]);
        assert_eq!(parts(&enumerate_partitions(0, 0, 0)), vec![Vec::<u32>::new()]);
        assert_eq!(
            parts(&enumerate_partitions(12, 3, 5)),
            vec![vec![5, 5, 2], vec![5, 4, 3], vec![4, 4, 4]]
        );
    }

    #[test]
    fn impossible_bounds_are_empty() {
        assert!(enumerate_partitions(7, 0, 5).is_empty());
        assert!(enumerate_partitions(7, 3, 0).is_empty());
        assert!(enumerate_partitions(16, 3, 5).is_empty());
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::from_parts(vec![5, 4, 1, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[4, 2, 2, 2, 1]);
        assert!(Partition::empty().conjugate().parts().is_empty());
        let p = Partition::from_parts(vec![3, 3]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 2, 2]);
    }

    #[test]
    fn from_parts_sorts_and_rejects_zero() {
        assert_eq!(Partition::from_parts(vec![1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
        assert!(Partition::from_parts(vec![2, 0]).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(128, 64), 23_951_146_041_928_082_866_135_587_776_380_551_750);
        assert_eq!(checked_binomial(200, 100), None);
    }

    #[test]
    fn identity_lhs_examples() {
        assert_eq!(alternating_binomial_identity_lhs(2, 3, 2), 1);
        assert_eq!(alternating_binomial_identity_lhs(4, 4, 3), 4);
        for a in 0..8 {
            for k in 0..8 {
                assert_eq!(
                    alternating_binomial_identity_lhs(a, 0, k),
                    binomial(a, k as i64) as i128
                );
            }
        }
    }

    #[test]
    fn identity_holds_on_full_grid() {
        for a in 0..=12u64 {
            for b in 0..=12u64 {
                for k in 0..=12u64 {
                    assert_eq!(
                        alternating_binomial_identity_lhs(a, b, k),
                        binomial(a, k as i64) as i128,
                        "a={a} b={b} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_match_brute_force() {
        for total in 0..=24 {
            for max_parts in 0..=7 {
                for max_part in 0..=9 {
                    assert_eq!(
                        enumerate_partitions(total, max_parts, max_part).len(),
                        brute_partition_count(total, max_parts, max_part),
                        "({total},{max_parts},{max_part})"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn counts_match_brute_force_sampled(total in 0u32..=60, max_parts in 0u32..=6, max_part in 0u32..=12) {
            prop_assert_eq!(
                enumerate_partitions(total, max_parts, max_part).len(),
                brute_partition_count(total, max_parts, max_part)
            );
        }

        #[test]
        fn enumeration_is_strictly_decreasing_and_valid(total in 0u32..=30, max_parts in 0u32..=8, max_part in 0u32..=10) {
            let ps = enumerate_partitions(total, max_parts, max_part);
            for p in &ps {
                prop_assert_eq!(p.total(), total as u64);
                prop_assert!(p.len() as u32 <= max_parts);
                prop_assert!(p.parts().iter().all(|&x| x >= 1 && x <= max_part));
                prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
            prop_assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }

        #[test]
        fn conjugate_is_an_involution(raw in proptest::collection::vec(1u32..=20, 0..=20)) {
            let p = Partition::from_parts(raw).unwrap();
            let mu = p.conjugate();
            prop_assert_eq!(mu.parts().len() as u32, p.largest());
            prop_assert_eq!(mu.conjugate(), p);
        }
    }
}
