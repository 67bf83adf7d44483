//! Benchmark workloads shared by the criterion targets.

use polyext_core::groupcoh::{group_cohomology, FiniteGroup, GModule};
use polyext_core::models::lambda2_pullback_complex;
use polyext_core::{
    ext, smith_normal_form, ExtOptions, FunctorDescriptor, GradedAbGroup, IntegerMatrix, Method, SmithForm,
};

/// A reproducible dense `n × n` matrix with entries in `[-bound, bound]`.
pub fn pseudo_random_matrix(n: usize, bound: i64, seed: u64) -> IntegerMatrix {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let width = (2 * bound + 1) as u64;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) % width) as i64 - bound
                })
                .collect()
        })
        .collect();
    IntegerMatrix::from_dense(n, n, &rows).expect("square matrix")
}

pub fn smith(n: usize) -> SmithForm {
    smith_normal_form(&pseudo_random_matrix(n, 9, n as u64))
}

/// One row of the `Ext(ab, S^n)` table through the chain model.
pub fn ab_symmetric_row(n: usize) -> GradedAbGroup {
    let options = ExtOptions {
        method: Method::ChainLevel,
        ..ExtOptions::default()
    };
    ext(FunctorDescriptor::ab(), FunctorDescriptor::symmetric(n), options)
        .expect("chain model exists")
        .value
}

pub fn sigma3_cohomology(d: usize) -> GradedAbGroup {
    group_cohomology(&GModule::trivial(&FiniteGroup::symmetric(3), 1), d)
}

pub fn lambda2(n: usize, d: i64) -> GradedAbGroup {
    lambda2_pullback_complex(n, d).expect("supported").evaluate()
}
