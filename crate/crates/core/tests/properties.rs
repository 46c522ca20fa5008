//! Randomized invariants over root systems, weights and exact convex geometry.

mod common;

use momentum_atlas::geomkernel::{self, HPolyhedron, Sense, VPolytope};
use momentum_atlas::rational::Q;
use momentum_atlas::{weights, Budgets, RootSystem, WeightVec};
use num_traits::Zero;
use proptest::prelude::*;

const SYSTEMS: [&str; 12] = ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3", "D4", "F4", "A1xA2", "B2xA1"];

fn system() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(SYSTEMS.to_vec()).prop_map(common::sys)
}

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Q::new(p.into(), q.into()))
}

fn system_and_weights(count: usize) -> impl Strategy<Value = (RootSystem, Vec<WeightVec>)> {
    system().prop_flat_map(move |s| {
        let r = s.rank();
        (Just(s), prop::collection::vec(prop::collection::vec(rational(), r).prop_map(WeightVec::new), count))
    })
}

fn small_dominant() -> impl Strategy<Value = (RootSystem, WeightVec)> {
    prop::sample::select(vec!["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"]).prop_map(common::sys).prop_flat_map(|s| {
        let r = s.rank();
        (Just(s), prop::collection::vec(0i64..=2, r).prop_map(|v| WeightVec::from_ints(&v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn reflections_are_involutive_isometries((sys, ws) in system_and_weights(2)) {
        for alpha in sys.positive_roots() {
            let (nu, eta) = (&ws[0], &ws[1]);
            let r = sys.reflect(alpha, nu).unwrap();
            prop_assert_eq!(&sys.reflect(alpha, &r).unwrap(), nu);
            prop_assert_eq!(sys.pairing(&r, &sys.reflect(alpha, eta).unwrap()), sys.pairing(nu, eta));
        }
    }

    #[test]
    fn dominant_representative_is_in_the_orbit((sys, ws) in system_and_weights(1)) {
        let (dom, word) = sys.dominant_representative(&ws[0]);
        prop_assert!(dom.is_dominant());
        prop_assert_eq!(sys.apply_word(&word, &ws[0]), dom.clone());
        prop_assert_eq!(sys.norm2(&dom), sys.norm2(&ws[0]));
    }

    #[test]
    fn orbit_times_stabilizer_is_the_group((sys, lambda) in small_dominant()) {
        let orbit = sys.weyl_orbit(&lambda, 100_000).unwrap();
        let fixed: Vec<usize> = (0..sys.rank()).filter(|&i| lambda.coords[i].is_zero()).collect();
        let stab = sys.parabolic_order(&fixed).unwrap();
        prop_assert_eq!(orbit.len() * stab, sys.weyl_group_order().unwrap());
    }

    #[test]
    fn dual_is_an_involution_on_dominant_weights((sys, lambda) in small_dominant()) {
        let dual = sys.dual_highest_weight(&lambda).unwrap();
        prop_assert!(dual.is_dominant());
        prop_assert_eq!(sys.dual_highest_weight(&dual).unwrap(), lambda);
    }

    #[test]
    fn weight_systems_are_reflection_closed((sys, lambda) in small_dominant()) {
        let ws = weights::weight_system(&sys, &[lambda], &Budgets::default()).unwrap();
        let set = ws.distinct();
        for w in &set {
            for i in 0..sys.rank() {
                prop_assert!(set.binary_search(&sys.reflect_simple(i, w)).is_ok());
            }
        }
    }

    #[test]
    fn zero_witnesses_verify((sys, lambda) in small_dominant()) {
        prop_assume!(!lambda.is_zero());
        let ws = weights::weight_system(&sys, &[lambda], &Budgets::default()).unwrap();
        let search = weights::zero_witness(&ws, &Budgets::default()).unwrap();
        if let Some(w) = &search.witness {
            prop_assert!(w.verify(&sys));
        }
    }
}

fn point(dim: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-6i64..=6).prop_map(|x| Q::from_integer(x.into())), dim)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 80, ..ProptestConfig::default() })]

    /// Facets of a hull contain the inputs and regenerate exactly its extreme points.
    #[test]
    fn double_description_round_trip(dim in 1usize..=3, pts in prop::collection::vec(point(3), 1..9)) {
        let pts: Vec<Vec<Q>> = pts.into_iter().map(|p| p[..dim].to_vec()).collect();
        let hull = VPolytope::polytope(dim, pts.clone());
        let b = Budgets::default();
        let h = geomkernel::dd_convert_back(&hull, &b).unwrap();
        for p in &pts {
            prop_assert!(h.contains(p));
        }
        let back = geomkernel::dd_convert(&h, &b).unwrap();
        prop_assert!(back.rays.is_empty());
        let extreme = hull.irredundant();
        let mut a = back.vertices.clone();
        let mut e = extreme.vertices.clone();
        a.sort();
        e.sort();
        prop_assert_eq!(a, e);
    }

    /// Outside points come with an exactly verified separating functional.
    #[test]
    fn membership_certificates(dim in 1usize..=3, pts in prop::collection::vec(point(3), 1..7), q in point(3)) {
        let pts: Vec<Vec<Q>> = pts.into_iter().map(|p| p[..dim].to_vec()).collect();
        let hull = VPolytope::polytope(dim, pts);
        let q = &q[..dim];
        let m = geomkernel::lp_membership(q, &hull);
        if m.inside {
            let mut comb = vec![Q::zero(); dim];
            for (c, v) in m.coefficients.iter().zip(&hull.vertices) {
                for (x, y) in comb.iter_mut().zip(v) {
                    *x += c * y;
                }
            }
            prop_assert_eq!(comb, q.to_vec());
        } else {
            prop_assert!(m.separator.as_ref().unwrap().separates(q, &hull));
        }
    }

    /// A box has `2^dim` vertices, all satisfying its constraints.
    #[test]
    fn box_conversion_is_consistent(dim in 1usize..=3, bound in 1i64..=5) {
        let mut h = HPolyhedron::new(dim);
        for k in 0..dim {
            let mut e = vec![Q::zero(); dim];
            e[k] = Q::from_integer(1.into());
            h.push(e.clone(), Q::from_integer(bound.into()), Sense::Le).unwrap();
            h.push(e.iter().map(|x| -x).collect(), Q::zero(), Sense::Le).unwrap();
        }
        let v = geomkernel::dd_convert(&h, &Budgets::default()).unwrap();
        prop_assert_eq!(v.vertices.len(), 1 << dim);
        for p in &v.vertices {
            prop_assert!(h.contains(p));
        }
    }
}
