//! Random test data with known answers.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use polyext_core::complex::Basis;
use polyext_core::{BoundedComplex, FgAbGroup, GradedAbGroup, IntegerMatrix, Orientation};
use rand::Rng;

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
    let entries: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntegerMatrix::from_dense(rows, cols, &entries).unwrap()
}

/// A random unimodular matrix and its inverse, built from elementary moves.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> (IntegerMatrix, IntegerMatrix) {
    let mut p = vec![vec![0i64; n]; n];
    let mut q = vec![vec![0i64; n]; n];
    for i in 0..n {
        p[i][i] = 1;
        q[i][i] = 1;
    }
    if n >= 2 {
        for _ in 0..3 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c: i64 = rng.gen_range(-2..=2);
            // P ← E·P with E = I + c·e_ij; then Q ← Q·E⁻¹.
            let src = p[j].clone();
            for (x, y) in p[i].iter_mut().zip(&src) {
                *x += c * y;
            }
            for row in q.iter_mut() {
                row[j] -= c * row[i];
            }
        }
    }
    if n >= 1 && rng.gen_bool(0.5) {
        let i = rng.gen_range(0..n);
        for x in p[i].iter_mut() {
            *x = -*x;
        }
        for row in q.iter_mut() {
            row[i] = -row[i];
        }
    }
    (IntegerMatrix::from_dense(n, n, &p).unwrap(), IntegerMatrix::from_dense(n, n, &q).unwrap())
}

/// A random complex of free modules together with its homology.
///
/// It is a sum of elementary pieces (`Z` alone, or `Z --k--> Z`) whose bases
/// are then scrambled by unimodular changes of basis in every degree.
pub fn random_complex<R: Rng>(rng: &mut R, orientation: Orientation, max_len: i64) -> (BoundedComplex, GradedAbGroup) {
    let step = orientation.step();
    let lo: i64 = rng.gen_range(-2..=1);
    let len: i64 = rng.gen_range(1..=max_len);
    let hi = lo + len - 1;
    let idx = |d: i64| (d - lo) as usize;
    let mut dims = vec![0usize; len as usize];
    // (source degree, source index, target index, k)
    let mut arrows = Vec::new();
    let mut expected = GradedAbGroup::trivial();
    let pieces = rng.gen_range(0..=5);
    for _ in 0..pieces {
        let d = rng.gen_range(lo..=hi);
        let t = d + step;
        if t >= lo && t <= hi && rng.gen_bool(0.6) {
            let k: i64 = rng.gen_range(0..=6);
            let s = dims[idx(d)];
            let r = dims[idx(t)];
            dims[idx(d)] += 1;
            dims[idx(t)] += 1;
            arrows.push((d, s, r, k));
            match k {
                0 => {
                    expected.add_component(d, &FgAbGroup::free(1));
                    expected.add_component(t, &FgAbGroup::free(1));
                }
                1 => {}
                _ => expected.add_component(t, &FgAbGroup::cyclic(k as u64)),
            }
        } else {
            dims[idx(d)] += 1;
            expected.add_component(d, &FgAbGroup::free(1));
        }
    }
    let changes: Vec<(IntegerMatrix, IntegerMatrix)> = dims.iter().map(|&n| random_unimodular(rng, n)).collect();
    let differentials = (lo..=hi)
        .map(|d| {
            let t = d + step;
            let rows = if t >= lo && t <= hi { dims[idx(t)] } else { 0 };
            let trip: Vec<(usize, usize, BigInt)> = arrows
                .iter()
                .filter(|a| a.0 == d)
                .map(|&(_, s, r, k)| (r, s, BigInt::from(k)))
                .collect();
            let m = IntegerMatrix::from_triplets(rows, dims[idx(d)], trip).unwrap();
            if rows == 0 {
                return m;
            }
            // d' = P_t · d · P_d⁻¹
            let p_t = &changes[idx(t)].0;
            let q_d = &changes[idx(d)].1;
            p_t.mul(&m).unwrap().mul(q_d).unwrap()
        })
        .collect();
    let basis = dims.iter().map(|&n| Basis::Anonymous(n)).collect();
    let c = BoundedComplex::new(orientation, lo, basis, differentials).unwrap();
    (c, expected)
}

/// `A ⊗ B` for finitely generated abelian groups.
pub fn tensor_groups(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut torsion: Vec<BigUint> = Vec::new();
    for d in a.torsion() {
        torsion.extend(std::iter::repeat_n(d.clone(), b.rank()));
    }
    for e in b.torsion() {
        torsion.extend(std::iter::repeat_n(e.clone(), a.rank()));
    }
    torsion.extend(tor_orders(a, b));
    FgAbGroup::new(a.rank() * b.rank(), torsion)
}

/// `Tor(A, B)`.
pub fn tor_groups(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    FgAbGroup::new(0, tor_orders(a, b))
}

fn tor_orders(a: &FgAbGroup, b: &FgAbGroup) -> Vec<BigUint> {
    use num_integer::Integer;
    let mut out = Vec::new();
    for d in a.torsion() {
        for e in b.torsion() {
            out.push(d.gcd(e));
        }
    }
    out
}

/// Checks `d ∘ d = 0` through the public accessors.
pub fn assert_squares_zero(c: &BoundedComplex) {
    let step = c.orientation().step();
    for d in c.degrees() {
        let next = d + step;
        if next < c.min_deg() || next > c.max_deg() {
            continue;
        }
        let a = c.differential(d).unwrap();
        let b = c.differential(next).unwrap();
        assert!(b.mul(a).unwrap().is_zero(), "d∘d ≠ 0 at degree {d}");
    }
}
