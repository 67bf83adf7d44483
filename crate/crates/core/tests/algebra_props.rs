mod common;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use polyext_core::algebra::{determinant, invariant_factors};
use polyext_core::{smith_normal_form, subquotient_group, FgAbGroup, IntegerMatrix, Orientation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_matrix() -> impl Strategy<Value = IntegerMatrix> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)
            .prop_map(move |rows| IntegerMatrix::from_dense(r, c, &rows).unwrap())
    })
}

fn check_smith(m: &IntegerMatrix) {
    let sf = smith_normal_form(m);
    assert_eq!(sf.u.mul(m).unwrap().mul(&sf.v).unwrap(), sf.s, "U·M·V ≠ S");
    assert_eq!(sf.v.mul(&sf.v_inv).unwrap(), IntegerMatrix::identity(m.cols()));
    assert!(determinant(&sf.u).abs().is_one());
    assert!(determinant(&sf.v).abs().is_one());
    for i in 0..sf.s.rows() {
        for j in 0..sf.s.cols() {
            let x = sf.s.get(i, j);
            if i != j || i >= sf.rank {
                assert!(x.is_zero(), "off-diagonal or excess entry at ({i},{j})");
            }
        }
    }
    let diag = sf.diagonal();
    assert!(diag.iter().all(|x| x.is_positive()));
    for w in diag.windows(2) {
        assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
    }
    let inv = invariant_factors(m);
    assert_eq!(inv.rank, sf.rank);
    let from_diag: Vec<BigUint> = diag
        .iter()
        .filter(|x| !x.is_one())
        .map(|x| x.magnitude().clone())
        .collect();
    assert_eq!(inv.torsion, from_diag);
    if m.rows() == m.cols() {
        let prod: BigInt = if sf.rank == m.rows() { diag.iter().product() } else { BigInt::zero() };
        assert_eq!(determinant(m).abs(), prod);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn smith_postconditions(m in small_matrix()) {
        check_smith(&m);
    }

    #[test]
    fn transpose_has_same_invariants(m in small_matrix()) {
        prop_assert_eq!(invariant_factors(&m), invariant_factors(&m.transpose()));
    }
}

#[test]
fn thousand_seeded_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        use rand::Rng;
        let r = rng.gen_range(0..=6);
        let c = rng.gen_range(0..=6);
        check_smith(&common::random_matrix(&mut rng, r, c, 9));
    }
}

#[test]
fn subquotient_matches_homology_and_ignores_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (c, expected) = common::random_complex(&mut rng, Orientation::Homological, 4);
        for d in c.degrees() {
            let z = c.differential_or_zero(d);
            let b = c.differential_or_zero(d + 1);
            let g = subquotient_group(&z, &b).unwrap();
            assert_eq!(g, expected.get(d), "degree {d}");
            let (p, q) = common::random_unimodular(&mut rng, c.dim(d));
            let g2 = subquotient_group(&z.mul(&q).unwrap(), &p.mul(&b).unwrap()).unwrap();
            assert_eq!(g2, g);
        }
    }
}

#[test]
fn group_arithmetic() {
    let g = FgAbGroup::new(1, [4u32, 6]);
    assert_eq!(g.torsion(), &[BigUint::from(2u32), BigUint::from(12u32)]);
    assert_eq!(g.torsion_order(), BigUint::from(24u32));
    assert_eq!(g.exponent(), BigUint::from(12u32));
    assert_eq!(g.to_string(), "Z ⊕ Z/2 ⊕ Z/12");
    assert_eq!(FgAbGroup::cyclic(6).display_primary(), "Z/2 ⊕ Z/3");
    assert_eq!(FgAbGroup::cyclic(1), FgAbGroup::trivial());
}
