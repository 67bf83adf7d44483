//! Ext groups between polynomial functors on free groups, computed from
//! explicit integer (co)chain complexes and checked against closed forms.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: integer matrices, Smith normal form, abelian groups.
//! * [`complex`]: bounded complexes, homology, tensor products, cones.
//! * [`combinatorics`]: surjections, compositions, partitions, counts.
//! * [`groupcoh`]: bar complexes of small symmetric groups.
//! * [`models`]: the chain-level models of Ext.
//! * [`ext`]: the dispatcher combining closed forms and models.

pub mod algebra;
pub mod combinatorics;
pub mod complex;
pub mod error;
pub mod ext;
pub mod groupcoh;
pub mod models;

pub use algebra::{
    smith_normal_form, subquotient_group, FgAbGroup, GradedAbGroup, IntegerMatrix, SmithForm, Truncation,
};
pub use complex::{BoundedComplex, ChainMap, Orientation};
pub use error::{Error, Result};
pub use ext::{
    cross_check, ext, stable_cohomology, ExtOptions, ExtResult, FunctorDescriptor, FunctorKind, Method, MethodUsed,
    StableMode, StableResult,
};
