//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use momentum_atlas::geomkernel::{self, VPolytope};
use momentum_atlas::rational::{self, Q};
use momentum_atlas::{polytope, Budgets, RootSystem, WeightVec};
use num_traits::Zero;
use rand::Rng;

/// Systems used by the `{0,1,2}`-coordinate sweeps.
pub const SWEEP_SYSTEMS: [&str; 6] = ["A2", "A3", "B2", "C2", "B3", "G2"];

pub fn sys(name: &str) -> RootSystem {
    RootSystem::parse(name).unwrap()
}

/// Every weight with coordinates in `values`, in lexicographic order.
pub fn grid(rank: usize, values: &[i64]) -> Vec<WeightVec> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|p| values.iter().map(move |&v| [p.clone(), vec![v]].concat())).collect();
    }
    out.iter().map(|v| WeightVec::from_ints(v)).collect()
}

/// The nonzero `{0,1,2}` sweep as `(system, λ)` pairs.
pub fn sweep() -> Vec<(RootSystem, WeightVec)> {
    SWEEP_SYSTEMS
        .iter()
        .flat_map(|s| {
            let r = sys(s);
            grid(r.rank(), &[0, 1, 2]).into_iter().filter(|l| !l.is_zero()).map(move |l| (r.clone(), l))
        })
        .collect()
}

pub fn to_f64_matrix(m: &[Vec<Q>]) -> Vec<Vec<f64>> {
    m.iter().map(|r| r.iter().map(rational::to_f64).collect()).collect()
}

fn quad(g: &[Vec<f64>], a: &[f64], b: &[f64]) -> f64 {
    a.iter().enumerate().map(|(i, x)| x * g[i].iter().zip(b).map(|(gij, y)| gij * y).sum::<f64>()).sum()
}

/// Minimum-norm point of `conv(points)` under the form `g`, by away-step Frank–Wolfe with
/// exact line search, which converges linearly on polytopes.
pub fn frank_wolfe(points: &[Vec<f64>], g: &[Vec<f64>], iterations: usize) -> Vec<f64> {
    let n = points.len();
    let dim = points[0].len();
    let mut weights = vec![0.0; n];
    weights[0] = 1.0;
    let combine = |w: &[f64]| -> Vec<f64> {
        (0..dim).map(|k| w.iter().zip(points).map(|(a, p)| a * p[k]).sum()).collect()
    };
    for _ in 0..iterations {
        let x = combine(&weights);
        let score: Vec<f64> = points.iter().map(|p| quad(g, &x, p)).collect();
        let s = (0..n).min_by(|&a, &b| score[a].total_cmp(&score[b])).unwrap();
        let v = (0..n).filter(|&i| weights[i] > 0.0).max_by(|&a, &b| score[a].total_cmp(&score[b])).unwrap();
        let xgx = quad(g, &x, &x);
        let fw_gain = xgx - score[s];
        let away_gain = score[v] - xgx;
        let (d, max_step, toward) = if fw_gain >= away_gain {
            ((0..dim).map(|k| points[s][k] - x[k]).collect::<Vec<f64>>(), 1.0, true)
        } else {
            let a = weights[v];
            ((0..dim).map(|k| x[k] - points[v][k]).collect(), if a < 1.0 { a / (1.0 - a) } else { f64::INFINITY }, false)
        };
        let dgd = quad(g, &d, &d);
        if dgd <= 0.0 || fw_gain.max(away_gain) <= 0.0 {
            break;
        }
        let step = (-quad(g, &x, &d) / dgd).clamp(0.0, max_step);
        if toward {
            weights.iter_mut().for_each(|w| *w *= 1.0 - step);
            weights[s] += step;
        } else {
            weights.iter_mut().for_each(|w| *w *= 1.0 + step);
            weights[v] -= step;
            if step == max_step {
                weights[v] = 0.0;
            }
        }
    }
    combine(&weights)
}

/// Vertices of `C(Wλ) ∩ t⁺` via Weyl orbit, facet enumeration and the dominant chamber.
pub fn dominant_hull_vertices(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Vec<Vec<Q>> {
    let orbit = sys.weyl_orbit(lambda, budgets.orbit).unwrap();
    let hull = VPolytope::polytope(sys.rank(), orbit.into_iter().map(|w| w.coords).collect());
    let h = geomkernel::dd_convert_back(&hull, budgets).unwrap();
    let v = geomkernel::dd_convert(&polytope::with_chamber(&h), budgets).unwrap();
    assert!(v.rays.is_empty());
    v.vertices
}

/// A random rational convex combination, zeroing some weights to reach faces.
pub fn random_point(vertices: &[Vec<Q>], rng: &mut impl Rng) -> Vec<Q> {
    let mut w: Vec<i64> = vertices.iter().map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(1..=12) }).collect();
    if w.iter().all(|&x| x == 0) {
        let i = rng.gen_range(0..w.len());
        w[i] = 1;
    }
    let total: i64 = w.iter().sum();
    let mut p = vec![Q::zero(); vertices[0].len()];
    for (c, v) in w.iter().zip(vertices) {
        for (pk, vk) in p.iter_mut().zip(v) {
            *pk += Q::new((*c).into(), total.into()) * vk;
        }
    }
    p
}
