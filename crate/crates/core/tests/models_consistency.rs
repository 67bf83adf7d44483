mod common;

use num_bigint::BigUint;
use polyext_core::combinatorics::{compositions, stirling, surjections};
use polyext_core::ext::{cross_check, stabilizer_order, StableTerm};
use polyext_core::groupcoh::{
    bar_cochain_complex, bsigma3_mod_bsigma2, group_cohomology, homotopy_fixed_points, FiniteGroup, GModule,
};
use polyext_core::models::*;
use polyext_core::{ext, stable_cohomology, ExtOptions, FgAbGroup, FunctorDescriptor, GradedAbGroup, Method, StableMode, StableResult};

fn z(k: u64) -> FgAbGroup {
    FgAbGroup::cyclic(k)
}

/// `Σ_k (-1)^k |sur(n, k)|` over `1 ≤ k ≤ m`, up to sign the rank of the
/// only nonzero homology group of the surjection complex.
fn surjection_euler(n: usize, m: usize) -> i64 {
    (1..=m.min(n))
        .map(|k| {
            let c = (1..=k as u64).product::<u64>() * u64::try_from(stirling(n, k)).unwrap();
            if k % 2 == 0 {
                c as i64
            } else {
                -(c as i64)
            }
        })
        .sum()
}

#[test]
fn surjection_complex_is_concentrated() {
    for n in 1..=6 {
        for m in 1..=6 {
            let model = surjection_complex(n, m).unwrap();
            common::assert_squares_zero(&model.complex);
            let e = model.evaluate();
            if m >= n {
                assert_eq!(e, GradedAbGroup::concentrated(0, FgAbGroup::free(1)), "n={n} m={m}");
            } else {
                let rank = surjection_euler(n, m).unsigned_abs() as usize;
                assert_eq!(e, GradedAbGroup::concentrated((n - m) as i64, FgAbGroup::free(rank)), "n={n} m={m}");
            }
        }
    }
}

#[test]
fn rbar_parity() {
    for n in 1..=10 {
        let model = rbar_complex(n).unwrap();
        common::assert_squares_zero(&model.complex);
        let expected = if n % 2 == 1 {
            GradedAbGroup::concentrated(n as i64 - 1, FgAbGroup::free(1))
        } else {
            GradedAbGroup::trivial()
        };
        assert_eq!(model.evaluate(), expected, "n={n}");
    }
}

/// `⌊n/2⌋ = Part(n, 2)` in degree `n - 2`; for odd `n`, `Z/2` in `n+1, n+3, …`.
fn lambda2_oracle(n: usize, d: i64) -> GradedAbGroup {
    let mut g = GradedAbGroup::concentrated(n as i64 - 2, FgAbGroup::free(n / 2));
    if n % 2 == 1 {
        let mut k = n as i64 + 1;
        while k <= d {
            g.add_component(k, &z(2));
            k += 2;
        }
    }
    g
}

#[test]
fn lambda2_pullback_matches_oracle() {
    for n in 1..=5 {
        let model = lambda2_pullback_complex(n, 10).unwrap();
        common::assert_squares_zero(&model.complex);
        let e = model.evaluate();
        assert!(e.same_groups(&lambda2_oracle(n, 10)), "n={n}: {e}");
    }
}

#[test]
fn tensor_to_symmetric_worked_example() {
    let parts = tensor_symmetric_complex(2, 4).unwrap();
    assert_eq!(parts.len(), compositions(4, 2).len());
    for p in &parts {
        common::assert_squares_zero(p);
    }
    let e = tensor_symmetric_ext(2, 4).unwrap();
    let expected = GradedAbGroup::from_components([
        (1, FgAbGroup::new(0, [2u32, 3, 3])),
        (2, z(2).power(3)),
    ]);
    assert_eq!(e, expected);
}

#[test]
fn symmetric_power_complexes_square_to_zero() {
    for n in 1..=12 {
        common::assert_squares_zero(&symmetric_power_complex(n).unwrap());
    }
}

#[test]
fn bar_complexes_square_to_zero() {
    let s3 = FiniteGroup::symmetric(3);
    common::assert_squares_zero(&bar_cochain_complex(&GModule::trivial(&s3, 1), 4));
    common::assert_squares_zero(&bar_cochain_complex(&GModule::sign(&s3).unwrap(), 4));
    let m = composition_swap_module(5);
    common::assert_squares_zero(&homotopy_fixed_points(&m.as_complex(), 6));
}

#[test]
fn group_cohomology_is_killed_by_the_order() {
    let groups = [
        (FiniteGroup::symmetric(2), 8),
        (FiniteGroup::symmetric(3), 5),
        (FiniteGroup::cyclic(3).unwrap(), 6),
        (FiniteGroup::cyclic(4).unwrap(), 6),
    ];
    for (g, d) in groups {
        let order = BigUint::from(g.order());
        for module in [GModule::trivial(&g, 1), GModule::sign(&g).unwrap_or_else(|_| GModule::trivial(&g, 2))] {
            let h = group_cohomology(&module, d);
            for (k, c) in h.iter() {
                if k >= 1 {
                    assert_eq!(c.rank(), 0, "free part in degree {k}");
                    assert!((&order % c.exponent()) == BigUint::from(0u32), "degree {k}: {c}");
                }
            }
        }
    }
    // Cyclic groups: Z/n in every positive even degree.
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let h = group_cohomology(&GModule::trivial(&c4, 1), 6);
    let expected = GradedAbGroup::from_components([(0, FgAbGroup::free(1)), (2, z(4)), (4, z(4)), (6, z(4))]);
    assert!(h.same_groups(&expected), "{h}");
}

#[test]
fn cofiber_long_exact_sequence() {
    // H̃(BΣ3/BΣ2) → H̃(BΣ3) → H̃(BΣ2) → H̃^{+1}(BΣ3/BΣ2): with finite groups,
    // the alternating product of orders up to degree K is 1 whenever the
    // cofiber vanishes in degree K + 1.
    let d = 6;
    let cof = bsigma3_mod_bsigma2(d);
    let s3 = group_cohomology(&GModule::trivial(&FiniteGroup::symmetric(3), 1), d);
    let s2 = group_cohomology(&GModule::trivial(&FiniteGroup::symmetric(2), 1), d);
    assert!(cof.get(0).is_trivial());
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for k in 1..d as i64 {
        num *= cof.get(k).torsion_order() * s2.get(k).torsion_order();
        den *= s3.get(k).torsion_order();
        if cof.get(k + 1).is_trivial() {
            assert_eq!(num, den, "through degree {k}");
        }
    }
    for (_, c) in cof.iter() {
        assert_eq!(BigUint::from(6u32) % c.exponent(), BigUint::from(0u32));
    }
}

#[test]
fn consistency_web() {
    for n in 1..=6 {
        let a = ext(FunctorDescriptor::tensor(1), FunctorDescriptor::tensor(n), ExtOptions::default()).unwrap();
        let b = ext(FunctorDescriptor::passi(1), FunctorDescriptor::tensor(n), ExtOptions {
            method: Method::ChainLevel,
            ..ExtOptions::default()
        })
        .unwrap();
        assert_eq!(a.value, b.value, "n={n}");
    }
}

#[test]
fn lambda2_rationally() {
    for n in 2..=6 {
        let r = ext(FunctorDescriptor::exterior(2), FunctorDescriptor::exterior(n), ExtOptions {
            rational: true,
            ..ExtOptions::default()
        })
        .unwrap();
        assert!(r.value.same_groups(&GradedAbGroup::concentrated(n as i64 - 2, FgAbGroup::free(n / 2))));
    }
}

fn supported_grid() -> Vec<(FunctorDescriptor, FunctorDescriptor)> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for n in 1..=5 {
            out.push((FunctorDescriptor::tensor(m), FunctorDescriptor::tensor(n)));
            out.push((FunctorDescriptor::tensor(m), FunctorDescriptor::exterior(n)));
            out.push((FunctorDescriptor::tensor(m), FunctorDescriptor::divided(n)));
            out.push((FunctorDescriptor::tensor(m), FunctorDescriptor::symmetric(n)));
            out.push((FunctorDescriptor::passi(m), FunctorDescriptor::tensor(n)));
        }
    }
    for n in 1..=6 {
        out.push((FunctorDescriptor::ab(), FunctorDescriptor::passi(n)));
        out.push((FunctorDescriptor::exterior(2), FunctorDescriptor::exterior(n)));
        out.push((FunctorDescriptor::exterior(3), FunctorDescriptor::exterior(n)));
    }
    out
}

#[test]
fn no_negative_degrees_and_deterministic() {
    for (f, g) in supported_grid() {
        let a = ext(f, g, ExtOptions::default()).unwrap();
        assert!(a.value.min_degree().is_none_or(|k| k >= 0), "Ext({f}, {g}) = {}", a.value);
        let b = ext(f, g, ExtOptions::default()).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }
}

#[test]
fn cross_check_examples() {
    let r = cross_check(FunctorDescriptor::ab(), FunctorDescriptor::passi(5), 8).unwrap();
    assert_eq!(r.chain, GradedAbGroup::concentrated(4, FgAbGroup::free(1)));
    let r = cross_check(FunctorDescriptor::exterior(2), FunctorDescriptor::exterior(4), 10).unwrap();
    assert_eq!(r.compared_through, Some(10));
    let r = cross_check(FunctorDescriptor::passi(2), FunctorDescriptor::tensor(2), 8).unwrap();
    assert_eq!(r.chain, GradedAbGroup::concentrated(0, FgAbGroup::free(1)));
}

#[test]
fn structural_stabilizers_match_brute_force() {
    // Count permutations of positions fixing each composition directly.
    fn perms(d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(d - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, d - 1);
                out.push(q);
            }
        }
        out
    }
    for n in 1..=6 {
        let StableResult::Structural(terms) =
            stable_cohomology(FunctorDescriptor::exterior(n), StableMode::Structural, 8).unwrap()
        else {
            panic!("structural");
        };
        let total_orbits: usize = (1..=n)
            .map(|d| {
                let comps = compositions(n, d);
                let ps = perms(d);
                let mut orbits = 0;
                for c in &comps {
                    let fixed = ps
                        .iter()
                        .filter(|p| p.iter().enumerate().all(|(i, &j)| c.parts()[i] == c.parts()[j]))
                        .count();
                    assert_eq!(BigUint::from(fixed), stabilizer_order(c.parts()));
                    // Orbit–stabilizer: each orbit is counted once via its size.
                    orbits += fixed;
                }
                orbits / ps.len()
            })
            .sum();
        assert_eq!(terms.len(), total_orbits, "n={n}");
        assert!(terms.iter().all(|t: &StableTerm| t.shift == n));
    }
}

#[test]
fn surjection_lists_are_shared() {
    let a = surjections(5, 3);
    let b = surjections(5, 3);
    assert!(std::sync::Arc::ptr_eq(&a, &b));
}
