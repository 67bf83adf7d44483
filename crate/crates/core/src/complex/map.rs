use std::collections::BTreeMap;

use super::BoundedComplex;
use crate::algebra::IntegerMatrix;
use crate::error::{Error, Result};

/// Degree-preserving map of complexes, verified to commute with the
/// differentials. Missing degrees are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: BoundedComplex,
    target: BoundedComplex,
    components: BTreeMap<i64, IntegerMatrix>,
}

impl ChainMap {
    pub fn new(
        source: BoundedComplex,
        target: BoundedComplex,
        components: BTreeMap<i64, IntegerMatrix>,
    ) -> Result<Self> {
        if source.orientation() != target.orientation() {
            return Err(Error::OrientationMismatch);
        }
        for (d, m) in &components {
            if m.shape() != (target.dim(*d), source.dim(*d)) {
                return Err(Error::ShapeMismatch(format!(
                    "chain map component at degree {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.dim(*d),
                    source.dim(*d)
                )));
            }
        }
        let f = ChainMap {
            source,
            target,
            components,
        };
        f.check_commutes()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: BoundedComplex,
        target: BoundedComplex,
        components: BTreeMap<i64, IntegerMatrix>,
    ) -> Self {
        ChainMap {
            source,
            target,
            components,
        }
    }

    pub fn identity(c: &BoundedComplex) -> Self {
        let components = c
            .degrees()
            .map(|d| (d, IntegerMatrix::identity(c.dim(d))))
            .collect();
        Self::new_unchecked(c.clone(), c.clone(), components)
    }

    pub fn zero(source: &BoundedComplex, target: &BoundedComplex) -> Result<Self> {
        Self::new(source.clone(), target.clone(), BTreeMap::new())
    }

    pub fn source(&self) -> &BoundedComplex {
        &self.source
    }

    pub fn target(&self) -> &BoundedComplex {
        &self.target
    }

    pub fn component_or_zero(&self, d: i64) -> IntegerMatrix {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| IntegerMatrix::zeros(self.target.dim(d), self.source.dim(d)))
    }

    fn check_commutes(&self) -> Result<()> {
        let step = self.source.orientation().step();
        let lo = self.source.min_deg().min(self.target.min_deg());
        let hi = self.source.max_deg().max(self.target.max_deg());
        for d in lo..=hi {
            let f_next = self.component_or_zero(d + step);
            let f_here = self.component_or_zero(d);
            let lhs = f_next.mul(&self.source.differential_or_zero(d))?;
            let rhs = self.target.differential_or_zero(d).mul(&f_here)?;
            if lhs != rhs {
                return Err(Error::NotAChainMap { degree: d });
            }
        }
        Ok(())
    }

    /// `a - b` on `A ⊕ B`, for maps with a common target.
    pub fn difference(a: &ChainMap, b: &ChainMap) -> Result<ChainMap> {
        if a.target != b.target {
            return Err(Error::ShapeMismatch("maps have different targets".into()));
        }
        let source = BoundedComplex::direct_sum(&a.source, &b.source)?;
        let lo = source.min_deg();
        let hi = source.max_deg();
        let minus = num_bigint::BigInt::from(-1);
        let mut components = BTreeMap::new();
        for d in lo..=hi {
            let fa = a.component_or_zero(d);
            let fb = b.component_or_zero(d).scale(&minus);
            let empty = IntegerMatrix::zeros(0, fa.cols());
            let empty_b = IntegerMatrix::zeros(0, fb.cols());
            components.insert(d, IntegerMatrix::block(&fa, &fb, &empty, &empty_b)?);
        }
        Ok(Self::new_unchecked(source, a.target.clone(), components))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FgAbGroup, GradedAbGroup};
    use crate::complex::Orientation;

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = BoundedComplex::two_term(Orientation::Cohomological, 0, IntegerMatrix::from_rows(&[vec![3]])).unwrap();
        let cone = BoundedComplex::cone(&ChainMap::identity(&c)).unwrap();
        assert!(cone.homology().is_trivial());
    }

    #[test]
    fn cone_of_zero_source() {
        let d = BoundedComplex::two_term(Orientation::Homological, 1, IntegerMatrix::from_rows(&[vec![2]])).unwrap();
        let z = BoundedComplex::zero(Orientation::Homological);
        let cone = BoundedComplex::cone(&ChainMap::zero(&z, &d).unwrap()).unwrap();
        assert_eq!(cone.homology(), d.homology());
    }

    #[test]
    fn cone_of_doubling() {
        for o in [Orientation::Homological, Orientation::Cohomological] {
            let z = BoundedComplex::concentrated(o, 0, 1);
            let f = ChainMap::new(
                z.clone(),
                z,
                BTreeMap::from([(0, IntegerMatrix::from_rows(&[vec![2]]))]),
            )
            .unwrap();
            let h = BoundedComplex::cone(&f).unwrap().homology();
            assert_eq!(h, GradedAbGroup::concentrated(0, FgAbGroup::cyclic(2)));
        }
    }

    #[test]
    fn rejects_non_chain_map() {
        let c = BoundedComplex::two_term(Orientation::Cohomological, 0, IntegerMatrix::from_rows(&[vec![1]])).unwrap();
        let r = ChainMap::new(
            c.clone(),
            c,
            BTreeMap::from([(0, IntegerMatrix::from_rows(&[vec![1]]))]),
        );
        assert!(matches!(r, Err(Error::NotAChainMap { .. })));
    }
}
