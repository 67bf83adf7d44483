//! Stable cohomology of `aut(F_r)` with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{FunctorDescriptor, FunctorKind};
use crate::algebra::{FgAbGroup, GradedAbGroup};
use crate::combinatorics::{bell, compositions, factorial, partition_number};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableMode {
    /// Graded `Q`-dimensions.
    Rational,
    /// Symbolic sum of shifted cohomologies of classifying spaces.
    Structural,
}

/// One summand `H^{*-shift}(space; coefficients)`, repeated `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableTerm {
    pub shift: usize,
    pub space: String,
    pub coefficients: String,
    pub multiplicity: BigUint,
    /// Orbit representative this summand comes from, when there is one.
    pub origin: Option<String>,
}

impl fmt::Display for StableTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = if self.coefficients == "trivial" {
            "Z".to_string()
        } else {
            format!("Z[{}]", self.coefficients)
        };
        write!(f, "H^{{*-{}}}({}; {})", self.shift, self.space, coeff)?;
        if !self.multiplicity.is_one() {
            write!(f, "^{}", self.multiplicity)?;
        }
        if let Some(o) = &self.origin {
            write!(f, "  [orbit of {o}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StableResult {
    /// Graded ranks over `Q`.
    Rational(GradedAbGroup),
    Structural(Vec<StableTerm>),
}

fn rational_rank(count: &BigUint) -> Result<usize> {
    count
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter(format!("rank {count} does not fit in memory")))
}

/// `H^*_s(aut; F)` for `F` among `T^n`, `Λ^n`, `Γ^n`, and `S^n` rationally.
///
/// Rational answers are finite; degrees above `d` are dropped and the result
/// is then marked as truncated.
pub fn stable_cohomology(f: FunctorDescriptor, mode: StableMode, d: i64) -> Result<StableResult> {
    if d < 0 {
        return Err(Error::InvalidParameter("degree bound must be non-negative".into()));
    }
    let f = f.canonical();
    let n = f.arity();
    let unsupported = |context: &str| Error::UnsupportedFunctor {
        functor: f,
        context: context.into(),
    };
    match mode {
        StableMode::Rational => {
            let count = match f.kind() {
                FunctorKind::Tensor => bell(n),
                FunctorKind::Exterior => partition_number(n),
                FunctorKind::Divided | FunctorKind::Symmetric => BigUint::from(u8::from(n <= 1)),
                FunctorKind::Passi => return Err(unsupported("stable cohomology")),
            };
            let g = GradedAbGroup::concentrated(n as i64, FgAbGroup::free(rational_rank(&count)?));
            Ok(StableResult::Rational(if n as i64 > d { g.truncate_above(d) } else { g }))
        }
        StableMode::Structural => match f.kind() {
            FunctorKind::Tensor => Ok(StableResult::Structural(vec![StableTerm {
                shift: n,
                space: "BΣ_∞".into(),
                coefficients: "trivial".into(),
                multiplicity: bell(n),
                origin: None,
            }])),
            FunctorKind::Exterior => Ok(StableResult::Structural(exterior_terms(n))),
            FunctorKind::Divided => Ok(StableResult::Structural(vec![StableTerm {
                shift: n,
                space: format!("BΣ_∞ × BΣ_{n}"),
                coefficients: format!("sign of Σ_{n}"),
                multiplicity: BigUint::one(),
                origin: None,
            }])),
            FunctorKind::Symmetric => Err(unsupported("integral stable cohomology (rational mode only)")),
            FunctorKind::Passi => Err(unsupported("stable cohomology")),
        },
    }
}

/// Stabilizer of a composition under `Σ_d` permuting its parts: the Young
/// subgroup `∏ Σ_k` over the multiplicities `k` of equal parts.
pub fn stabilizer_multiplicities(parts: &[usize]) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_default() += 1;
    }
    let mut ks: Vec<usize> = counts.into_values().filter(|&k| k >= 2).collect();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    ks
}

/// Order of the stabilizer, for cross-checking against brute force.
pub fn stabilizer_order(parts: &[usize]) -> BigUint {
    stabilizer_multiplicities(parts).into_iter().map(factorial).product()
}

/// One summand per `Σ_d`-orbit on `Comp(n, d)`, `d = 1..n`.
fn exterior_terms(n: usize) -> Vec<StableTerm> {
    let mut out = Vec::new();
    for d in 1..=n {
        let mut seen = std::collections::HashSet::new();
        for c in compositions(n, d) {
            if !seen.insert(c.sorted_parts()) {
                continue;
            }
            let mut space = "BΣ_∞".to_string();
            for k in stabilizer_multiplicities(c.parts()) {
                space.push_str(&format!(" × BΣ_{k}"));
            }
            out.push(StableTerm {
                shift: n,
                space,
                coefficients: "trivial".into(),
                multiplicity: BigUint::one(),
                origin: Some(c.to_string()),
            });
        }
    }
    if n == 0 {
        out.push(StableTerm {
            shift: 0,
            space: "BΣ_∞".into(),
            coefficients: "trivial".into(),
            multiplicity: BigUint::one(),
            origin: None,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_three() {
        let StableResult::Structural(terms) =
            stable_cohomology(FunctorDescriptor::exterior(3), StableMode::Structural, 8).unwrap()
        else {
            panic!("structural mode");
        };
        let spaces: Vec<&str> = terms.iter().map(|t| t.space.as_str()).collect();
        assert_eq!(spaces, ["BΣ_∞", "BΣ_∞", "BΣ_∞ × BΣ_3"]);
        assert!(terms.iter().all(|t| t.shift == 3 && t.coefficients == "trivial"));
    }

    #[test]
    fn rational_examples() {
        let r = stable_cohomology(FunctorDescriptor::tensor(3), StableMode::Rational, 8).unwrap();
        assert_eq!(r, StableResult::Rational(GradedAbGroup::concentrated(3, FgAbGroup::free(5))));
        let r = stable_cohomology(FunctorDescriptor::divided(2), StableMode::Rational, 8).unwrap();
        assert_eq!(r, StableResult::Rational(GradedAbGroup::trivial()));
        assert!(matches!(
            stable_cohomology(FunctorDescriptor::passi(2), StableMode::Rational, 8),
            Err(Error::UnsupportedFunctor { .. })
        ));
        assert!(matches!(
            stable_cohomology(FunctorDescriptor::symmetric(2), StableMode::Structural, 8),
            Err(Error::UnsupportedFunctor { .. })
        ));
    }

    #[test]
    fn young_stabilizers() {
        assert_eq!(stabilizer_multiplicities(&[1, 2, 1, 2]), vec![2, 2]);
        assert_eq!(stabilizer_order(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(stabilizer_order(&[3, 1]), BigUint::one());
    }
}
