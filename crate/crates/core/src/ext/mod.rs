//! Evaluation of Ext groups between supported functor pairs.
//!
//! Every supported pair has a closed form, a chain-level model, or both.
//! Values are isomorphism types of graded groups; any group actions that
//! appear along the way (sign twists and the like) are forgotten.

mod closed;
mod functor;
mod stable;

use std::fmt;

pub use functor::{FunctorDescriptor, FunctorKind};
pub use stable::{stable_cohomology, stabilizer_multiplicities, stabilizer_order, StableMode, StableResult, StableTerm};

use crate::algebra::{GradedAbGroup, Truncation};
use crate::error::{Error, Result};
use crate::models::{lambda2_pullback_complex, rbar_complex, surjection_complex, tensor_symmetric_ext};
use closed::Evaluation;

/// Reference values of `Ext^i(ab, S^n∘ab)`, `n = 1..=9`, as `(degree, order)`
/// pairs where order 0 means `Z`.
pub const AB_SYMMETRIC_TABLE: [&[(i64, u64)]; 9] = closed::AB_SYMMETRIC_TABLE;

/// Which evaluation route to take.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// The preferred route for the pair.
    #[default]
    Auto,
    ClosedForm,
    ChainLevel,
    /// Both routes, which must agree.
    Both,
}

/// The route that produced an [`ExtResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodUsed {
    ClosedForm,
    ChainLevel,
    Both,
}

impl fmt::Display for MethodUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MethodUsed::ClosedForm => "closed-form",
            MethodUsed::ChainLevel => "chain-level",
            MethodUsed::Both => "both",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtOptions {
    /// Report ranks over `Q` instead of integral groups.
    pub rational: bool,
    /// Infinite torsion families are cut off above this degree.
    pub degree_bound: i64,
    pub method: Method,
}

impl Default for ExtOptions {
    fn default() -> Self {
        ExtOptions {
            rational: false,
            degree_bound: 8,
            method: Method::Auto,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtResult {
    /// In Ext grading. With `rational` set, the components are free and their
    /// ranks are `Q`-dimensions.
    pub value: GradedAbGroup,
    pub method: MethodUsed,
    pub rational: bool,
    pub warnings: Vec<String>,
    /// Description of the infinite family cut off by the truncation, if any.
    pub periodicity: Option<String>,
}

/// Outcome of a successful [`cross_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub source: FunctorDescriptor,
    pub target: FunctorDescriptor,
    pub closed: GradedAbGroup,
    pub chain: GradedAbGroup,
    /// Degrees up to this bound were compared (`None`: all).
    pub compared_through: Option<i64>,
}

type Evaluator = Box<dyn Fn(i64) -> Result<Evaluation> + Send + Sync>;

enum Plan {
    Integral {
        closed: Option<Evaluator>,
        chain: Option<Evaluator>,
        prefer_chain: bool,
    },
    RationalOnly(Evaluator),
}

fn boxed<F>(f: F) -> Option<Evaluator>
where
    F: Fn(i64) -> Result<Evaluation> + Send + Sync + 'static,
{
    Some(Box::new(f))
}

fn exact<F>(f: F) -> Option<Evaluator>
where
    F: Fn() -> Result<GradedAbGroup> + Send + Sync + 'static,
{
    boxed(move |_| f().map(Evaluation::exact))
}

/// Routes for a pair of canonical descriptors.
fn plan(f: FunctorDescriptor, g: FunctorDescriptor) -> Option<Plan> {
    use FunctorKind::*;
    let (m, n) = (f.arity(), g.arity());
    let integral = |closed, chain, prefer_chain| {
        Some(Plan::Integral {
            closed,
            chain,
            prefer_chain,
        })
    };
    match (f.kind(), g.kind()) {
        (Tensor, _) if m == 0 => None,
        (Tensor, Tensor) => integral(boxed(move |_| closed::tensor_tensor(m, n)), None, false),
        (Tensor, Exterior) => integral(boxed(move |_| closed::tensor_exterior(m, n)), None, false),
        (Tensor, Divided) => integral(boxed(move |_| closed::tensor_divided(m, n)), None, false),
        (Tensor, Symmetric) => {
            let table = if m == 1 && closed::ab_symmetric(n).is_some() {
                boxed(move |_| Ok(closed::ab_symmetric(n).expect("row exists")))
            } else {
                None
            };
            integral(table, exact(move || tensor_symmetric_ext(m, n)), true)
        }
        (Tensor, Passi) if m == 1 => integral(
            boxed(move |_| closed::ab_passi(n)),
            exact(move || Ok(rbar_complex(n)?.evaluate())),
            false,
        ),
        (Passi, Tensor) => {
            let closed_form = closed::passi_tensor(m, n).map(|e| -> Evaluator { Box::new(move |_| Ok(e.clone())) });
            integral(closed_form, exact(move || Ok(surjection_complex(n, m)?.evaluate())), false)
        }
        (Exterior, Exterior) if m == 2 => integral(
            boxed(move |d| closed::lambda2(n, d)),
            boxed(move |d| {
                let mut e = closed::lambda2(n, d)?;
                e.value = lambda2_pullback_complex(n, d)?.evaluate();
                Ok(e)
            }),
            false,
        ),
        (Exterior, Exterior) if m == 3 => integral(boxed(move |d| closed::lambda3(n, d)), None, false),
        (Exterior, Exterior) => Some(Plan::RationalOnly(Box::new(move |_| closed::rational_exterior_exterior(m, n)))),
        (Exterior, Tensor) => Some(Plan::RationalOnly(Box::new(move |_| closed::rational_exterior_tensor(m, n)))),
        (Exterior, Symmetric | Divided) => {
            Some(Plan::RationalOnly(Box::new(move |_| closed::rational_exterior_symmetric(m, n))))
        }
        _ => None,
    }
}

/// Sources are folded to canonical form; targets only when the literal
/// pair has no route, so that `S^1` keeps its chain-level model.
fn plan_for(f: FunctorDescriptor, g: FunctorDescriptor) -> Option<Plan> {
    let f = f.canonical();
    plan(f, g).or_else(|| plan(f, g.canonical()))
}

/// The supported grid, for error messages and help text.
pub fn supported_pairs() -> &'static str {
    "(T^m, T^n), (T^m, Lambda^n), (T^m, Gamma^n), (T^m, S^n), (ab, Pa^n), (Pa^m, T^n), \
     (Lambda^2, Lambda^n), (Lambda^3, Lambda^n) for m, n ≥ 1; rationally also (Lambda^m, Lambda^n), \
     (Lambda^m, T^n), (Lambda^m, S^n), (Lambda^m, Gamma^n). Functors of arity ≤ 1 other than Pa^1 equal T^0 or ab."
}

fn unsupported(f: FunctorDescriptor, g: FunctorDescriptor) -> Error {
    Error::UnsupportedPair {
        source_functor: f,
        target: g,
        supported: supported_pairs().into(),
    }
}

fn no_route(f: FunctorDescriptor, g: FunctorDescriptor, what: &str) -> Error {
    Error::InvalidParameter(format!("Ext({f}, {g}) has no {what}"))
}

/// Compares two answers in every degree both of them determine.
fn compare(closed: &GradedAbGroup, chain: &GradedAbGroup) -> std::result::Result<Option<i64>, Error> {
    let bound = closed.truncation().meet(chain.truncation()).bound();
    let degrees: std::collections::BTreeSet<i64> = closed
        .components()
        .keys()
        .chain(chain.components().keys())
        .copied()
        .filter(|d| bound.is_none_or(|b| *d <= b))
        .collect();
    for d in degrees {
        let (a, b) = (closed.get(d), chain.get(d));
        if a != b {
            return Err(Error::MethodMismatch {
                degree: d,
                closed: a.to_string(),
                chain: b.to_string(),
            });
        }
    }
    Ok(bound)
}

fn check_bound(d: i64) -> Result<()> {
    if d < 0 {
        return Err(Error::InvalidParameter("degree bound must be non-negative".into()));
    }
    Ok(())
}

/// `Ext^*(F, G)` in cohomological grading.
pub fn ext(f: FunctorDescriptor, g: FunctorDescriptor, opts: ExtOptions) -> Result<ExtResult> {
    check_bound(opts.degree_bound)?;
    let d = opts.degree_bound;
    let p = plan_for(f, g).ok_or_else(|| unsupported(f, g))?;
    let (eval, method) = match p {
        Plan::RationalOnly(ev) => {
            if !opts.rational {
                return Err(unsupported(f, g));
            }
            match opts.method {
                Method::Auto | Method::ClosedForm => (ev(d)?, MethodUsed::ClosedForm),
                Method::ChainLevel => return Err(no_route(f, g, "chain-level model")),
                Method::Both => {
                    return Err(Error::OnlyOneMethod {
                        source_functor: f,
                        target: g,
                    })
                }
            }
        }
        Plan::Integral {
            closed,
            chain,
            prefer_chain,
        } => match (opts.method, closed, chain) {
            (Method::ClosedForm, Some(c), _) => (c(d)?, MethodUsed::ClosedForm),
            (Method::ClosedForm, None, _) => return Err(no_route(f, g, "closed form")),
            (Method::ChainLevel, _, Some(c)) => (c(d)?, MethodUsed::ChainLevel),
            (Method::ChainLevel, _, None) => return Err(no_route(f, g, "chain-level model")),
            (Method::Both, Some(a), Some(b)) => {
                let (ea, eb) = rayon::join(|| a(d), || b(d));
                let (ea, eb) = (ea?, eb?);
                compare(&ea.value, &eb.value)?;
                (ea, MethodUsed::Both)
            }
            (Method::Both, _, _) => {
                return Err(Error::OnlyOneMethod {
                    source_functor: f,
                    target: g,
                })
            }
            (Method::Auto, Some(_), Some(c)) if prefer_chain => (c(d)?, MethodUsed::ChainLevel),
            (Method::Auto, Some(c), _) => (c(d)?, MethodUsed::ClosedForm),
            (Method::Auto, None, Some(c)) => (c(d)?, MethodUsed::ChainLevel),
            (Method::Auto, None, None) => unreachable!("every plan has a route"),
        },
    };
    debug_assert!(
        eval.value.min_degree().is_none_or(|k| k >= 0),
        "negative Ext degree in Ext({f}, {g}): {}",
        eval.value
    );
    let Evaluation {
        mut value,
        warnings,
        mut periodicity,
    } = eval;
    if opts.rational {
        value = value.free_part();
        // Torsion families vanish rationally and the free part is finite.
        if periodicity.take().is_some() {
            value = value.with_truncation(Truncation::Complete);
        }
    }
    Ok(ExtResult {
        value,
        method,
        rational: opts.rational,
        warnings,
        periodicity,
    })
}

/// Evaluates both routes up to `d` and compares them degreewise.
pub fn cross_check(f: FunctorDescriptor, g: FunctorDescriptor, d: i64) -> Result<CrossCheckReport> {
    check_bound(d)?;
    let p = plan_for(f, g).ok_or_else(|| unsupported(f, g))?;
    let Plan::Integral {
        closed: Some(a),
        chain: Some(b),
        ..
    } = p
    else {
        return Err(Error::OnlyOneMethod {
            source_functor: f,
            target: g,
        });
    };
    let (ea, eb) = rayon::join(|| a(d), || b(d));
    let (closed, chain) = (ea?.value, eb?.value);
    let compared_through = compare(&closed, &chain)?;
    Ok(CrossCheckReport {
        source: f,
        target: g,
        closed,
        chain,
        compared_through,
    })
}

/// Whether `(F, G)` has both a closed form and a chain-level model.
pub fn has_two_methods(f: FunctorDescriptor, g: FunctorDescriptor) -> bool {
    matches!(
        plan_for(f, g),
        Some(Plan::Integral {
            closed: Some(_),
            chain: Some(_),
            ..
        })
    )
}

/// The pairs exercised by a full cross-check run.
pub fn cross_check_suite() -> Vec<(FunctorDescriptor, FunctorDescriptor)> {
    let mut out = Vec::new();
    for n in 1..=9 {
        out.push((FunctorDescriptor::ab(), FunctorDescriptor::symmetric(n)));
    }
    for n in 1..=8 {
        out.push((FunctorDescriptor::ab(), FunctorDescriptor::passi(n)));
    }
    for m in 1..=6 {
        for n in 1..=6 {
            if m >= n || m == 1 {
                out.push((FunctorDescriptor::passi(m), FunctorDescriptor::tensor(n)));
            }
        }
    }
    for n in 2..=5 {
        out.push((FunctorDescriptor::exterior(2), FunctorDescriptor::exterior(n)));
    }
    debug_assert!(out.iter().all(|&(f, g)| has_two_methods(f, g)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FgAbGroup;

    fn run(f: FunctorDescriptor, g: FunctorDescriptor) -> ExtResult {
        ext(f, g, ExtOptions::default()).unwrap()
    }

    #[test]
    fn tensor_to_tensor() {
        let r = run(FunctorDescriptor::tensor(2), FunctorDescriptor::tensor(3));
        assert_eq!(r.value, GradedAbGroup::concentrated(1, FgAbGroup::free(6)));
        assert_eq!(r.method, MethodUsed::ClosedForm);
    }

    #[test]
    fn ab_to_symmetric_uses_the_chain_model() {
        let r = run(FunctorDescriptor::ab(), FunctorDescriptor::symmetric(6));
        assert_eq!(r.method, MethodUsed::ChainLevel);
        let expected = GradedAbGroup::from_components([
            (2, FgAbGroup::cyclic(10)),
            (3, FgAbGroup::cyclic(6)),
            (5, FgAbGroup::cyclic(2)),
        ]);
        assert_eq!(r.value, expected);
    }

    #[test]
    fn lambda3_lambda3() {
        let r = run(FunctorDescriptor::exterior(3), FunctorDescriptor::exterior(3));
        assert_eq!(r.value.get(0), FgAbGroup::free(1));
        assert_eq!(r.value.get(3), FgAbGroup::cyclic(2));
        assert_eq!(r.value.get(4), FgAbGroup::trivial());
        assert_eq!(r.value.truncation(), Truncation::TruncatedAbove(8));
        assert!(r.periodicity.is_some());
    }

    #[test]
    fn unsupported_and_rational_only() {
        let f = FunctorDescriptor::exterior(4);
        let g = FunctorDescriptor::tensor(5);
        assert!(matches!(ext(f, g, ExtOptions::default()), Err(Error::UnsupportedPair { .. })));
        let opts = ExtOptions {
            rational: true,
            ..ExtOptions::default()
        };
        let r = ext(f, g, opts).unwrap();
        assert_eq!(r.value, GradedAbGroup::concentrated(1, FgAbGroup::free(10)));
        assert!(matches!(
            ext(FunctorDescriptor::symmetric(2), FunctorDescriptor::tensor(2), ExtOptions::default()),
            Err(Error::UnsupportedPair { .. })
        ));
    }

    #[test]
    fn folding_of_low_arities() {
        let r = run(FunctorDescriptor::tensor(1), FunctorDescriptor::divided(1));
        assert_eq!(r.value, GradedAbGroup::concentrated(0, FgAbGroup::free(1)));
    }

    #[test]
    fn cross_checks() {
        let r = cross_check(FunctorDescriptor::ab(), FunctorDescriptor::passi(5), 8).unwrap();
        assert_eq!(r.closed, GradedAbGroup::concentrated(4, FgAbGroup::free(1)));
        cross_check(FunctorDescriptor::passi(2), FunctorDescriptor::tensor(2), 8).unwrap();
        cross_check(FunctorDescriptor::exterior(2), FunctorDescriptor::exterior(4), 10).unwrap();
        assert!(matches!(
            cross_check(FunctorDescriptor::tensor(2), FunctorDescriptor::tensor(3), 8),
            Err(Error::OnlyOneMethod { .. })
        ));
    }

    #[test]
    fn both_methods_agree_and_report_it() {
        let opts = ExtOptions {
            method: Method::Both,
            ..ExtOptions::default()
        };
        let r = ext(FunctorDescriptor::exterior(2), FunctorDescriptor::exterior(3), opts).unwrap();
        assert_eq!(r.method, MethodUsed::Both);
        assert_eq!(r.value.get(4), FgAbGroup::cyclic(2));
    }

    #[test]
    fn rational_view_drops_torsion() {
        let opts = ExtOptions {
            rational: true,
            ..ExtOptions::default()
        };
        let r = ext(FunctorDescriptor::exterior(2), FunctorDescriptor::exterior(5), opts).unwrap();
        assert_eq!(r.value, GradedAbGroup::concentrated(3, FgAbGroup::free(2)));
        assert!(r.periodicity.is_none());
    }

    #[test]
    fn negative_bound_is_rejected() {
        let opts = ExtOptions {
            degree_bound: -1,
            ..ExtOptions::default()
        };
        assert!(matches!(
            ext(FunctorDescriptor::ab(), FunctorDescriptor::ab(), opts),
            Err(Error::InvalidParameter(_))
        ));
    }
}
