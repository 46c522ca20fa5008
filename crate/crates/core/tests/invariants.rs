//! Structural invariants checked exhaustively over the `{0,1,2}` sweep.

mod common;

use std::collections::BTreeSet;

use momentum_atlas::geomkernel;
use momentum_atlas::polytope;
use momentum_atlas::{weights, Budgets, WeightVec};

#[test]
fn roots_are_the_reflection_closure_of_the_simple_roots() {
    for name in ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3", "D4", "F4", "E6", "A1xB2"] {
        let sys = common::sys(name);
        let mut closure = BTreeSet::new();
        for a in sys.simple_roots() {
            closure.extend(sys.weyl_orbit(a, 100_000).unwrap());
        }
        assert_eq!(closure.len(), 2 * sys.positive_roots().len(), "{name}");
        assert!(closure.iter().all(|r| sys.is_root(r)), "{name}");
        let doubled: Vec<WeightVec> = closure.iter().map(|r| r.scaled(&momentum_atlas::rational::int(2))).collect();
        assert!(doubled.iter().all(|r| !sys.is_root(r)), "{name}");
    }
}

#[test]
fn fence_vertices_are_weights_and_the_yard_holds_only_lambda() {
    let b = Budgets::default();
    for (sys, lambda) in common::sweep() {
        let f = polytope::fence(&sys, &lambda, &b).unwrap();
        let ws = weights::weight_system(&sys, std::slice::from_ref(&lambda), &b).unwrap().distinct();
        for phi in &f.root_fence {
            assert!(sys.is_root(phi), "{} {lambda}: {phi}", sys.name());
        }
        for v in &f.vertices {
            assert!(ws.binary_search(v).is_ok(), "{} {lambda}: fence vertex {v}", sys.name());
            assert!(!f.in_open_yard_halfspace(v));
        }
        let in_yard: Vec<&WeightVec> = ws.iter().filter(|w| f.in_open_yard_halfspace(w)).collect();
        assert_eq!(in_yard, vec![&lambda], "{} {lambda}", sys.name());
    }
}

#[test]
fn upsilon_is_stable_under_the_stabilizer_of_lambda() {
    let b = Budgets::default();
    for (sys, lambda) in common::sweep() {
        let u = polytope::upsilon_h(&sys, &lambda, &b).unwrap();
        let plus = polytope::upsilon_plus(&sys, &lambda, &b).unwrap();
        let zero = weights::partition_simple_roots(&sys, &lambda).unwrap().zero;
        for v in &plus.vertices {
            let v = WeightVec::new(v.clone());
            assert!(u.h.contains(&v.coords));
            for &i in &zero {
                let r = sys.reflect_simple(i, &v);
                assert!(u.h.contains(&r.coords), "{} {lambda}: s_{} {v}", sys.name(), i + 1);
            }
        }
    }
}

#[test]
fn dominant_weights_lie_in_upsilon_plus() {
    let b = Budgets::default();
    for (sys, lambda) in common::sweep() {
        let plus = polytope::upsilon_plus(&sys, &lambda, &b).unwrap();
        for mu in weights::dominant_weights(&sys, &lambda, b.weights).unwrap() {
            assert!(geomkernel::lp_membership(&mu.coords, &plus).inside, "{} {lambda}: {mu}", sys.name());
        }
    }
}

#[test]
fn upsilon_plus_lies_in_the_dominant_weyl_polytope() {
    let b = Budgets::default();
    for (sys, lambda) in common::sweep() {
        let outer = geomkernel::VPolytope::polytope(sys.rank(), common::dominant_hull_vertices(&sys, &lambda, &b));
        for v in polytope::upsilon_plus(&sys, &lambda, &b).unwrap().vertices {
            assert!(geomkernel::lp_membership(&v, &outer).inside, "{} {lambda}", sys.name());
        }
    }
}
