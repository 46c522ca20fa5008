//! Weight systems of sums of irreducible representations, root-distinctness, and the
//! search for zero as a convex combination of root-distinct weights.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, ser, Q};
use crate::rootsys::{RootSystem, WeightVec};

/// The weights of `⊕ V_{λ_i}`, each labelled by the summand it came from.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    pub system: RootSystem,
    pub summands: Vec<WeightVec>,
    /// Sorted by weight, then summand index.
    pub weights: Vec<(WeightVec, usize)>,
}

#[derive(Serialize)]
struct LabelledWeight<'a> {
    coords: &'a WeightVec,
    summand: usize,
}

#[derive(Serialize)]
struct WeightSystemJson<'a> {
    system: String,
    summands: &'a [WeightVec],
    weights: Vec<LabelledWeight<'a>>,
}

impl Serialize for WeightSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightSystemJson {
            system: self.system.name(),
            summands: &self.summands,
            weights: self.weights.iter().map(|(w, i)| LabelledWeight { coords: w, summand: *i }).collect(),
        }
        .serialize(s)
    }
}

impl WeightSystem {
    /// Distinct weights in canonical (lexicographic) order.
    pub fn distinct(&self) -> Vec<WeightVec> {
        let set: BTreeSet<&WeightVec> = self.weights.iter().map(|(w, _)| w).collect();
        set.into_iter().cloned().collect()
    }

    pub fn of_summand(&self, i: usize) -> Vec<WeightVec> {
        self.weights.iter().filter(|(_, s)| *s == i).map(|(w, _)| w.clone()).collect()
    }

    /// Summands containing the weight `w`.
    pub fn summands_of(&self, w: &WeightVec) -> Vec<usize> {
        self.weights.iter().filter(|(v, _)| v == w).map(|(_, s)| *s).collect()
    }
}

/// Dominant weights of `V_λ`: every dominant `μ` with `λ − μ` in the positive root cone.
/// Each is reached from `λ` by subtracting positive roots while staying dominant.
pub fn dominant_weights(sys: &RootSystem, lambda: &WeightVec, budget: usize) -> Result<Vec<WeightVec>> {
    sys.check_dominant_integral(lambda)?;
    let mut seen: BTreeSet<WeightVec> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for a in sys.positive_roots() {
            let nu = &mu - a;
            if nu.is_dominant() && !seen.contains(&nu) {
                if seen.len() >= budget {
                    return Err(Error::Budget { what: "weights", limit: budget as u64, scanned: seen.len() as u64 });
                }
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Exact weight set of `⊕ V_{λ_i}`, without multiplicities.
pub fn weight_system(sys: &RootSystem, highest: &[WeightVec], budgets: &Budgets) -> Result<WeightSystem> {
    if highest.is_empty() {
        return Err(Error::Invalid("no summands".into()));
    }
    let mut weights = Vec::new();
    for (i, lambda) in highest.iter().enumerate() {
        for mu in dominant_weights(sys, lambda, budgets.weights)? {
            let remaining = budgets.weights.saturating_sub(weights.len());
            let orbit = sys.weyl_orbit(&mu, budgets.orbit.min(remaining.max(1))).map_err(|e| match e {
                Error::Budget { .. } => Error::Budget { what: "weights", limit: budgets.weights as u64, scanned: weights.len() as u64 },
                other => other,
            })?;
            weights.extend(orbit.into_iter().map(|w| (w, i)));
            if weights.len() > budgets.weights {
                return Err(Error::Budget { what: "weights", limit: budgets.weights as u64, scanned: weights.len() as u64 });
            }
        }
    }
    weights.sort();
    Ok(WeightSystem { system: sys.clone(), summands: highest.to_vec(), weights })
}

/// `(Π_rd, Π_1, Π_0)`: simple roots where `λ_α ≥ 2`, `= 1`, `= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub rd: Vec<usize>,
    pub one: Vec<usize>,
    pub zero: Vec<usize>,
}

impl Partition {
    /// `Π^λ = Π_rd ⊔ Π_1`, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.rd.iter().chain(&self.one).copied().collect();
        s.sort_unstable();
        s
    }
}

pub fn partition_simple_roots(sys: &RootSystem, lambda: &WeightVec) -> Result<Partition> {
    sys.check_dominant_integral(lambda)?;
    let mut p = Partition { rd: Vec::new(), one: Vec::new(), zero: Vec::new() };
    for (i, c) in lambda.coords.iter().enumerate() {
        if c.is_zero() {
            p.zero.push(i);
        } else if c.is_one() {
            p.one.push(i);
        } else {
            p.rd.push(i);
        }
    }
    Ok(p)
}

/// No difference of two members is a root. Singletons and the empty set qualify.
pub fn is_root_distinct(sys: &RootSystem, m: &[WeightVec]) -> bool {
    for (i, a) in m.iter().enumerate() {
        for b in &m[i + 1..] {
            if sys.is_root(&(a - b)) {
                return false;
            }
        }
    }
    true
}

/// `Wλ` is root-distinct exactly when no coordinate of `λ` equals 1. With `brute_force`
/// the orbit is also checked pairwise and the two answers must agree.
pub fn orbit_root_distinct(sys: &RootSystem, lambda: &WeightVec, brute_force: bool, budgets: &Budgets) -> Result<bool> {
    let p = partition_simple_roots(sys, lambda)?;
    let fast = p.one.is_empty();
    if brute_force {
        let orbit = sys.weyl_orbit(lambda, budgets.orbit)?;
        let slow = is_root_distinct(sys, &orbit);
        assert_eq!(fast, slow, "orbit root-distinctness disagrees for {lambda}");
    }
    Ok(fast)
}

/// Convexity of the momentum image of `P(V_λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexityVerdict {
    pub convex: bool,
    pub note: String,
}

pub fn check_faithful(sys: &RootSystem, lambda: &WeightVec) -> Result<()> {
    for c in sys.components() {
        if c.indices().all(|i| lambda.coords[i].is_zero()) {
            return Err(Error::Unfaithful(format!("{lambda} is trivial on component {}", c.name())));
        }
    }
    Ok(())
}

pub fn convexity_verdict(sys: &RootSystem, lambda: &WeightVec) -> Result<ConvexityVerdict> {
    let p = partition_simple_roots(sys, lambda)?;
    check_faithful(sys, lambda)?;
    Ok(if p.one.is_empty() {
        ConvexityVerdict { convex: true, note: "μ(P) = C(Kλ)".into() }
    } else {
        ConvexityVerdict { convex: false, note: "some coordinate of λ equals 1; μ(P) is not convex".into() }
    })
}

/// Zero as a convex combination of a root-distinct, affinely independent set of weights.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroWitness {
    pub support: Vec<WeightVec>,
    #[serde(serialize_with = "ser::vec")]
    pub coefficients: Vec<Q>,
}

impl ZeroWitness {
    /// Exact re-verification: positive coefficients summing to 1, zero combination,
    /// root-distinct support of size at most rank + 1.
    pub fn verify(&self, sys: &RootSystem) -> bool {
        let sum: Q = self.coefficients.iter().sum();
        let mut comb = vec![Q::zero(); sys.rank()];
        for (a, w) in self.coefficients.iter().zip(&self.support) {
            for (c, x) in comb.iter_mut().zip(&w.coords) {
                *c += a * x;
            }
        }
        self.support.len() == self.coefficients.len()
            && self.support.len() <= sys.rank() + 1
            && self.coefficients.iter().all(|a| a.is_positive())
            && sum.is_one()
            && rational::is_zero_vec(&comb)
            && is_root_distinct(sys, &self.support)
    }
}

/// Outcome of the witness search. `witness == None` only means that no root-distinct
/// certificate exists; it does not by itself show `0 ∉ μ(P)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroWitnessSearch {
    pub witness: Option<ZeroWitness>,
    pub subsets_scanned: u64,
    pub verdict: String,
}

/// Integer vectors kept in fraction-free echelon form for incremental rank tests.
#[derive(Clone, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    /// Reduces `v` against the stored rows; returns it with its pivot if independent.
    fn reduce(&self, v: &[i128]) -> Option<Option<(usize, Vec<i128>)>> {
        let mut v = v.to_vec();
        for (p, r) in &self.rows {
            if v[*p] != 0 {
                let (a, b) = (r[*p], v[*p]);
                for (x, y) in v.iter_mut().zip(r) {
                    *x = x.checked_mul(a)?.checked_sub(y.checked_mul(b)?)?;
                }
                let g = v.iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    v.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        Some(v.iter().position(|&x| x != 0).map(|p| (p, v)))
    }

    /// Pushes `v` if it is independent of the stored rows. `None` on overflow.
    pub(crate) fn try_push(&mut self, v: &[i128]) -> Option<bool> {
        match self.reduce(v)? {
            Some(row) => {
                self.rows.push(row);
                Some(true)
            }
            None => Some(false),
        }
    }

    #[cfg(test)]
    fn len(&self) -> usize {
        self.rows.len()
    }
}

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Solves `Σ_j a_j u_j = target` for independent integer columns `u_j`, exactly.
pub(crate) fn solve_columns(cols: &[Vec<i128>], target: &[i128]) -> Option<Vec<Q>> {
    let k = cols.len();
    let d = target.len();
    // Choose k independent rows of the d×k matrix.
    let mut rows_ech = Echelon::default();
    let mut pick = Vec::new();
    for r in 0..d {
        let row: Vec<i128> = cols.iter().map(|c| c[r]).collect();
        match rows_ech.try_push(&row) {
            Some(true) => pick.push(r),
            Some(false) => {}
            None => return solve_columns_exact(cols, target),
        }
        if pick.len() == k {
            break;
        }
    }
    if pick.len() < k {
        return None;
    }
    let a: Vec<Vec<i128>> = pick.iter().map(|&r| cols.iter().map(|c| c[r]).collect()).collect();
    let b: Vec<i128> = pick.iter().map(|&r| target[r]).collect();
    let Some((num, det)) = linalg::bareiss_solve(&a, &b) else { return solve_columns_exact(cols, target) };
    // Remaining rows must hold too: Σ_j num_j u_j[r] = det · target[r].
    for r in 0..d {
        let mut s: i128 = 0;
        for (c, x) in cols.iter().zip(&num) {
            s = match c[r].checked_mul(*x).and_then(|t| s.checked_add(t)) {
                Some(v) => v,
                None => return solve_columns_exact(cols, target),
            };
        }
        match det.checked_mul(target[r]) {
            Some(v) if v == s => {}
            Some(_) => return None,
            None => return solve_columns_exact(cols, target),
        }
    }
    Some(num.iter().map(|&x| Q::new(x.into(), det.into())).collect())
}

fn solve_columns_exact(cols: &[Vec<i128>], target: &[i128]) -> Option<Vec<Q>> {
    let to_q = |x: i128| Q::from_integer(x.into());
    let d = target.len();
    let a: linalg::Matrix = (0..d).map(|r| cols.iter().map(|c| to_q(c[r])).collect()).collect();
    let b: Vec<Q> = target.iter().map(|&x| to_q(x)).collect();
    linalg::solve(&a, &b)
}

/// Integer coordinates of a weight, widened for the search kernels.
pub(crate) fn int_coords(w: &WeightVec) -> Option<Vec<i128>> {
    w.coords.iter().map(|c| rational::to_i64(c).map(i128::from)).collect()
}

/// First root-distinct weight subset, by size and then lexicographically in canonical
/// weight order, whose convex hull contains 0 in its relative interior.
pub fn zero_witness(ws: &WeightSystem, budgets: &Budgets) -> Result<ZeroWitnessSearch> {
    let sys = &ws.system;
    let weights = ws.distinct();
    let n = weights.len();
    let d = sys.rank();
    // Augmented (ν, 1) columns: affine independence is linear independence of these.
    let aug: Vec<Vec<i128>> = weights
        .iter()
        .map(|w| {
            let mut v = int_coords(w).ok_or_else(|| Error::NotIntegral(w.to_string()))?;
            v.push(1);
            Ok(v)
        })
        .collect::<Result<_>>()?;
    let mut target = vec![0i128; d];
    target.push(1);
    // Root adjacency between weights, precomputed once.
    let clash: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && sys.is_root(&(&weights[i] - &weights[j]))).collect())
        .collect();
    let mut scanned: u64 = 0;
    for k in 1..=(d + 1).min(n) {
        let mut chosen: Vec<usize> = Vec::new();
        let found = search(&aug, &clash, &target, k, 0, &mut chosen, &mut Echelon::default(), &mut scanned, budgets.subsets)?;
        if let Some((support, coefficients)) = found {
            let w = ZeroWitness { support: support.iter().map(|&i| weights[i].clone()).collect(), coefficients };
            debug_assert!(w.verify(sys));
            return Ok(ZeroWitnessSearch { witness: Some(w), subsets_scanned: scanned, verdict: "0 ∈ μ(P(V))".into() });
        }
    }
    Ok(ZeroWitnessSearch { witness: None, subsets_scanned: scanned, verdict: "no root-distinct certificate".into() })
}

#[allow(clippy::too_many_arguments)]
fn search(
    aug: &[Vec<i128>],
    clash: &[Vec<bool>],
    target: &[i128],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    ech: &mut Echelon,
    scanned: &mut u64,
    limit: u64,
) -> Result<Option<(Vec<usize>, Vec<Q>)>> {
    if chosen.len() == k {
        let cols: Vec<Vec<i128>> = chosen.iter().map(|&i| aug[i].clone()).collect();
        if let Some(a) = solve_columns(&cols, target) {
            if a.iter().all(|x| x.is_positive()) {
                return Ok(Some((chosen.clone(), a)));
            }
        }
        return Ok(None);
    }
    let n = aug.len();
    for i in start..n {
        if n - i < k - chosen.len() {
            break;
        }
        if chosen.iter().any(|&j| clash[i][j]) {
            continue;
        }
        *scanned += 1;
        if *scanned > limit {
            return Err(Error::Budget { what: "subsets", limit, scanned: *scanned - 1 });
        }
        let mut next = ech.clone();
        let independent = match next.try_push(&aug[i]) {
            Some(b) => b,
            None => {
                let m: linalg::Matrix = chosen.iter().chain([&i]).map(|&j| aug[j].iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
                linalg::rank(&m) == chosen.len() + 1
            }
        };
        if !independent {
            continue;
        }
        chosen.push(i);
        let r = search(aug, clash, target, k, i + 1, chosen, &mut next, scanned, limit)?;
        chosen.pop();
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

/// Every weight whose coordinates are drawn from `values`, in lexicographic order.
pub fn grid(rank: usize, values: &[i64]) -> Vec<WeightVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.iter().map(|v| WeightVec::from_ints(v)).collect()
}

/// Standard `ε` coordinates for `SU_n` (type `A_{n−1}`), translated to fundamental
/// coordinates via `ε_i ↦ (⟨ε_i, α_j^∨⟩)_j` with `α_j = ε_j − ε_{j+1}`.
pub mod eps {
    use super::*;
    use crate::rational::int;

    /// Sum of `ε_i` over the given 0-based indices, as a weight of `A_{n−1}`.
    pub fn sum(n: usize, indices: &[usize]) -> WeightVec {
        let mut v = vec![Q::zero(); n - 1];
        for &i in indices {
            if i < n - 1 {
                v[i] += int(1);
            }
            if i >= 1 {
                v[i - 1] -= int(1);
            }
        }
        WeightVec::new(v)
    }

    pub fn single(n: usize, i: usize) -> WeightVec {
        sum(n, &[i])
    }

    /// Highest weight of `C^n`.
    pub fn natural(n: usize) -> WeightVec {
        single(n, 0)
    }

    /// Highest weight of `(C^n)*`.
    pub fn dual(n: usize) -> WeightVec {
        sum(n, &(0..n - 1).collect::<Vec<_>>())
    }

    /// Highest weight of `Λ²C^n`.
    pub fn wedge2(n: usize) -> WeightVec {
        sum(n, &[0, 1])
    }

    /// Weight of a tensor product of factors of a product group.
    pub fn tensor(parts: &[WeightVec]) -> WeightVec {
        WeightVec::new(parts.iter().flat_map(|p| p.coords.iter().cloned()).collect())
    }
}
