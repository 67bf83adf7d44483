use std::collections::BTreeSet;

use num_bigint::BigUint;
use polyext_core::combinatorics::*;

/// Every function `{1..n} → {1..k}` in lexicographic order, filtered.
fn brute_surjections(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let total = k.pow(n as u32);
    for mut code in 0..total {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = code % k + 1;
            code /= k;
        }
        let image: BTreeSet<usize> = v.iter().copied().collect();
        if image.len() == k {
            out.push(v);
        }
    }
    out
}

/// Set partitions via restricted growth strings.
fn brute_set_partitions(n: usize) -> Vec<usize> {
    let mut blocks_count = vec![0usize; n + 1];
    fn rec(i: usize, n: usize, max: usize, counts: &mut [usize]) {
        if i == n {
            counts[max] += 1;
            return;
        }
        for b in 0..=max {
            rec(i + 1, n, max.max(b + 1), counts);
        }
    }
    rec(0, n, 0, &mut blocks_count);
    blocks_count
}

#[test]
fn surjections_match_brute_force() {
    for n in 0..=6 {
        for k in 0..=n + 1 {
            let got: Vec<Vec<usize>> = surjections(n, k).iter().map(|s| s.values().to_vec()).collect();
            assert_eq!(got, brute_surjections(n, k), "sur({n},{k})");
            assert_eq!(BigUint::from(got.len()), surjection_count(n, k));
            let index = surjection_index(n, k);
            for (i, s) in got.iter().enumerate() {
                assert_eq!(index[s], i);
            }
        }
    }
}

#[test]
fn merges_stay_surjective() {
    for n in 1..=5 {
        for k in 2..=n {
            for s in surjections(n, k).iter() {
                for i in 1..k {
                    let m = s.merge(i).unwrap();
                    assert_eq!(m.k(), k - 1);
                    assert!(Surjection::new(m.values().to_vec()).is_ok());
                    assert_eq!(merge(s, i).unwrap(), m);
                }
            }
        }
    }
}

#[test]
fn stirling_and_bell_match_set_partitions() {
    for n in 0..=8 {
        let counts = brute_set_partitions(n);
        for (k, &c) in counts.iter().enumerate() {
            assert_eq!(stirling(n, k), BigUint::from(c), "S({n},{k})");
        }
        assert_eq!(bell(n), BigUint::from(counts.iter().sum::<usize>()));
    }
}

#[test]
fn compositions_match_brute_force() {
    for n in 0..=8 {
        for m in 0..=n + 1 {
            // Compositions of n into m parts ↔ (m-1)-subsets of the n-1 gaps.
            let mut brute = Vec::new();
            if n >= 1 && m >= 1 {
                for mask in 0u32..(1 << (n - 1)) {
                    if mask.count_ones() as usize != m - 1 {
                        continue;
                    }
                    let mut parts = Vec::new();
                    let mut len = 1;
                    for g in 0..n - 1 {
                        if mask & (1 << g) != 0 {
                            parts.push(len);
                            len = 1;
                        } else {
                            len += 1;
                        }
                    }
                    parts.push(len);
                    brute.push(parts);
                }
                brute.sort();
            } else if n == 0 && m == 0 {
                brute.push(Vec::new());
            }
            let got: Vec<Vec<usize>> = compositions(n, m).iter().map(|c| c.parts().to_vec()).collect();
            assert_eq!(got, brute, "Comp({n},{m})");
            if n >= 1 && m >= 1 {
                assert_eq!(BigUint::from(got.len()), binomial(n - 1, m - 1));
            }
        }
    }
}

#[test]
fn partitions_are_sorted_compositions() {
    for n in 1..=9 {
        let mut total = 0usize;
        for m in 1..=n {
            let from_comps: BTreeSet<Vec<usize>> = compositions(n, m).iter().map(|c| c.sorted_parts()).collect();
            let listed: BTreeSet<Vec<usize>> = partitions(n, m).into_iter().collect();
            assert_eq!(listed, from_comps);
            assert_eq!(partitions_count(n, m), BigUint::from(listed.len()));
            total += listed.len();
        }
        assert_eq!(partition_number(n), BigUint::from(total));
    }
}

#[test]
fn small_values() {
    assert_eq!(surjection_count(3, 2), BigUint::from(6u32));
    assert_eq!(bell(8), BigUint::from(4140u32));
    assert_eq!(partition_number(8), BigUint::from(22u32));
    assert_eq!(factorial(6), BigUint::from(720u32));
}
