//! Closed-form answers.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::algebra::{FgAbGroup, GradedAbGroup, Truncation};
use crate::combinatorics::{binomial, partitions_count, stirling, surjection_count};
use crate::error::{Error, Result};
use crate::groupcoh::{bsigma3_mod_bsigma2_closed, rp_infinity_reduced_cohomology};

/// A value together with the remarks that accompany it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Evaluation {
    pub value: GradedAbGroup,
    pub warnings: Vec<String>,
    pub periodicity: Option<String>,
}

impl Evaluation {
    pub fn exact(value: GradedAbGroup) -> Self {
        Evaluation {
            value,
            warnings: Vec::new(),
            periodicity: None,
        }
    }
}

fn rank(count: &BigUint) -> Result<usize> {
    count
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter(format!("rank {count} does not fit in memory")))
}

/// `Z^count` placed in degree `n - m`.
fn free_in_shift(m: usize, n: usize, count: &BigUint) -> Result<GradedAbGroup> {
    Ok(GradedAbGroup::concentrated(n as i64 - m as i64, FgAbGroup::free(rank(count)?)))
}

pub(crate) fn tensor_tensor(m: usize, n: usize) -> Result<Evaluation> {
    free_in_shift(m, n, &surjection_count(n, m)).map(Evaluation::exact)
}

/// `|Comp(n, m)| = C(n-1, m-1)`.
pub(crate) fn tensor_exterior(m: usize, n: usize) -> Result<Evaluation> {
    let count = if n == 0 || m == 0 {
        BigUint::from(u8::from(n == m))
    } else {
        binomial(n - 1, m - 1)
    };
    free_in_shift(m, n, &count).map(Evaluation::exact)
}

pub(crate) fn tensor_divided(m: usize, n: usize) -> Result<Evaluation> {
    free_in_shift(m, n, &BigUint::from(u8::from(m == n))).map(Evaluation::exact)
}

/// Reference values of `Ext^i(ab, S^n∘ab)` for `n ≤ 9`, as `(degree, cyclic order)`.
pub(crate) const AB_SYMMETRIC_TABLE: [&[(i64, u64)]; 9] = [
    &[(0, 0)],
    &[(1, 2)],
    &[(1, 3), (2, 2)],
    &[(1, 2), (2, 3), (3, 2)],
    &[(1, 5), (2, 2), (4, 2)],
    &[(2, 10), (3, 6), (5, 2)],
    &[(1, 7), (3, 2), (4, 6), (6, 2)],
    &[(1, 2), (2, 7), (3, 2), (4, 2), (5, 2), (7, 2)],
    &[(1, 3), (2, 2), (4, 2), (5, 6), (6, 2), (8, 2)],
];

/// Table lookup; order 0 stands for `Z`.
pub(crate) fn ab_symmetric(n: usize) -> Option<Evaluation> {
    let row = AB_SYMMETRIC_TABLE.get(n.checked_sub(1)?)?;
    Some(Evaluation::exact(GradedAbGroup::from_components(row.iter().map(|&(d, k)| {
        let g = if k == 0 { FgAbGroup::free(1) } else { FgAbGroup::cyclic(k) };
        (d, g)
    }))))
}

/// `R̄_n` is a sphere of dimension `n - 1` for odd `n` and contractible otherwise.
pub(crate) fn ab_passi(n: usize) -> Result<Evaluation> {
    let value = if n % 2 == 1 {
        GradedAbGroup::concentrated(n as i64 - 1, FgAbGroup::free(1))
    } else {
        GradedAbGroup::trivial()
    };
    Ok(Evaluation::exact(value))
}

/// Only the two corners of `Ext(Pa_m, T^n)` have a closed form.
pub(crate) fn passi_tensor(m: usize, n: usize) -> Option<Evaluation> {
    if m >= n {
        Some(Evaluation::exact(GradedAbGroup::concentrated(0, FgAbGroup::free(1))))
    } else if m == 1 {
        Some(Evaluation::exact(GradedAbGroup::concentrated(n as i64 - 1, FgAbGroup::free(1))))
    } else {
        None
    }
}

fn family(start: i64, step: i64, group: &str, copies: usize) -> String {
    let g = if copies == 1 {
        group.to_string()
    } else {
        format!("({group})^{copies}")
    };
    format!("{g} in degrees {start}, {}, {}, … (period {step})", start + step, start + 2 * step)
}

pub(crate) fn lambda2(n: usize, d: i64) -> Result<Evaluation> {
    let shift = n as i64 - 2;
    let mut parts = vec![free_in_shift(2, n, &partitions_count(n, 2))?];
    let mut out = Evaluation::exact(GradedAbGroup::trivial());
    if n % 2 == 1 {
        let bound = (d - shift - 1).max(0) as usize;
        parts.push(rp_infinity_reduced_cohomology(bound).shift(shift + 1));
        out.periodicity = Some(family(n as i64 + 1, 2, "Z/2", 1));
    }
    if n == 1 {
        out.warnings.push("Ext(Lambda^2, Lambda^1) extends the n ≥ 2 formula; not independently established".into());
    }
    out.value = GradedAbGroup::direct_sum(parts.iter()).with_truncation(truncation_for(&out.periodicity, d));
    Ok(out)
}

pub(crate) fn lambda3(n: usize, d: i64) -> Result<Evaluation> {
    let shift = n as i64 - 2;
    let bound = (d - shift).max(0) as usize;
    let mut parts = vec![free_in_shift(3, n, &partitions_count(n, 3))?];
    let mut families = Vec::new();
    let copies = n / 2;
    if copies > 0 {
        parts.push(rp_infinity_reduced_cohomology(bound).shift(shift).power(copies));
        families.push(family(n as i64, 2, "Z/2", copies));
    }
    if !n.is_multiple_of(3) {
        parts.push(bsigma3_mod_bsigma2_closed(bound).shift(shift));
        families.push(family(n as i64 + 2, 4, "Z/3", 1));
    }
    let mut out = Evaluation::exact(GradedAbGroup::trivial());
    if n < 3 {
        out.warnings.push(format!(
            "Ext(Lambda^3, Lambda^{n}) extends the n ≥ 3 formula; not independently established"
        ));
    }
    out.periodicity = (!families.is_empty()).then(|| families.join("; "));
    out.value = GradedAbGroup::direct_sum(parts.iter()).with_truncation(truncation_for(&out.periodicity, d));
    Ok(out)
}

fn truncation_for(periodicity: &Option<String>, d: i64) -> Truncation {
    if periodicity.is_some() {
        Truncation::TruncatedAbove(d)
    } else {
        Truncation::Complete
    }
}

/// Rational `Ext(Λ^m, Λ^n) = Σ^{n-m} Q^{Part(n, m)}`.
pub(crate) fn rational_exterior_exterior(m: usize, n: usize) -> Result<Evaluation> {
    free_in_shift(m, n, &partitions_count(n, m)).map(Evaluation::exact)
}

/// Rational `Ext(Λ^m, T^n) = Σ^{n-m} Q^{S(n, m)}`.
pub(crate) fn rational_exterior_tensor(m: usize, n: usize) -> Result<Evaluation> {
    free_in_shift(m, n, &stirling(n, m)).map(Evaluation::exact)
}

/// Rational `Ext(Λ^m, S^n) = Ext(Λ^m, Γ^n)`: `Q` when `m = n ≤ 1`, else zero.
pub(crate) fn rational_exterior_symmetric(m: usize, n: usize) -> Result<Evaluation> {
    free_in_shift(m, n, &BigUint::from(u8::from(m == n && n <= 1))).map(Evaluation::exact)
}
