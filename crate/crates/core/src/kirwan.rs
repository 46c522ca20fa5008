//! Candidate critical values `ξ_M` of `||μ||²` and their criticality.
//!
//! Every critical value is the point of some `C(M)` nearest the origin, with `M` a set
//! of at most `rank` linearly independent weights. Candidates are enumerated up to the
//! Weyl group: each orbit of subsets contains one with a dominant member, so only such
//! subsets are scanned and every `ξ_M` is reported by its dominant representative.

use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::budget::Budgets;
use crate::catalog;
use crate::error::{Error, Result};
use crate::geomkernel::{self, VPolytope};
use crate::linalg::{self, Matrix};
use crate::rational::{self, ser, Q};
use crate::rootsys::{RootSystem, WeightVec};
use crate::weights::{self, Echelon, WeightSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    Critical,
    NotCritical,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalCandidate {
    /// Dominant representative of `ξ_M`.
    pub xi: WeightVec,
    #[serde(serialize_with = "ser::q")]
    pub norm2: Q,
    /// A subset `M` realizing `ξ`, carried into the dominant chamber with `ξ`.
    pub support: Vec<WeightVec>,
    #[serde(serialize_with = "ser::vec")]
    pub coefficients: Vec<Q>,
    /// `Λ_ξ = {ν ∈ Λ(V) : (ν|ξ) = ||ξ||²}`.
    pub lambda_xi: Vec<WeightVec>,
    pub regular: bool,
    /// `Π⁽⁰⁾_ξ`: simple roots orthogonal to `ξ`.
    pub pi0: Vec<usize>,
}

impl CriticalCandidate {
    /// The Lagrange identity `(ξ|m) = ||ξ||²` on the support, and `ξ = Σ a_m m`.
    pub fn certify(&self, sys: &RootSystem) -> bool {
        let mut comb = WeightVec::zero(sys.rank());
        for (a, m) in self.coefficients.iter().zip(&self.support) {
            comb = &comb + &m.scaled(a);
        }
        let sum: Q = self.coefficients.iter().sum();
        comb == self.xi
            && sum.is_one()
            && self.coefficients.iter().all(|a| a.is_positive())
            && self.support.iter().all(|m| sys.pairing(&self.xi, m) == self.norm2)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Enumeration {
    /// Sorted by decreasing `||ξ||²`, then by coordinates.
    pub candidates: Vec<CriticalCandidate>,
    pub subsets_scanned: u64,
}

/// Largest subset handled by the allocation-free integer path.
const FAST: usize = 8;
type Augmented = [[i128; FAST + 1]; FAST];

/// Fraction-free elimination of the `n × (n+1)` augmented system in `m`. Returns the
/// numerators of the solution over the returned (signed) determinant, or `None` when the
/// matrix is singular or an entry overflows.
fn bareiss_fixed(m: &mut Augmented, n: usize) -> Option<([i128; FAST], i128)> {
    let mut prev: i128 = 1;
    let mut sign = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            let p = (k + 1..n).find(|&i| m[i][k] != 0)?;
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                m[i][j] = m[i][j].checked_mul(m[k][k])?.checked_sub(m[i][k].checked_mul(m[k][j])?)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let det = m[n - 1][n - 1];
    let mut x = [0i128; FAST];
    for i in (0..n).rev() {
        let mut s = m[i][n].checked_mul(det)?;
        for j in i + 1..n {
            s = s.checked_sub(m[i][j].checked_mul(x[j])?)?;
        }
        if s % m[i][i] != 0 {
            return None;
        }
        x[i] = s / m[i][i];
    }
    Some((x, det * sign))
}

/// Determinant of the leading `n × n` block, `Some(0)` when singular.
fn det_fixed(m: &mut Augmented, n: usize) -> Option<i128> {
    let mut prev: i128 = 1;
    let mut sign = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else { return Some(0) };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = m[i][j].checked_mul(m[k][k])?.checked_sub(m[i][k].checked_mul(m[k][j])?)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Some(m[n - 1][n - 1] * sign)
}

/// Integer data for the subset scan: weight coordinates and a scaled Gram table.
struct Kernel {
    coords: Vec<Vec<i128>>,
    gram: Vec<Vec<i128>>,
    /// Row `i` is `α_i` in fundamental coordinates.
    cartan: Vec<Vec<i128>>,
}

impl Kernel {
    fn new(sys: &RootSystem, weights: &[WeightVec]) -> Result<Kernel> {
        let flat: Vec<Q> = sys.fund_gram().iter().flatten().cloned().collect();
        let (scaled, _) = rational::common_denominator(&flat);
        let rank = sys.rank();
        let form: Vec<i128> = scaled.iter().map(|x| x.to_i128().expect("scaled form fits in i128")).collect();
        let coords: Vec<Vec<i128>> =
            weights.iter().map(|w| weights::int_coords(w).ok_or_else(|| Error::NotIntegral(w.to_string()))).collect::<Result<_>>()?;
        // `gram[i][j] = x_i · (den·G) · x_j`, with each covector formed once.
        let covectors: Vec<Vec<i128>> =
            coords.iter().map(|x| (0..rank).map(|c| (0..rank).map(|r| x[r] * form[r * rank + c]).sum()).collect()).collect();
        let gram = covectors.iter().map(|a| coords.iter().map(|b| a.iter().zip(b).map(|(p, q)| p * q).sum()).collect()).collect();
        let cartan = sys.cartan().iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
        Ok(Kernel { coords, gram, cartan })
    }

    /// `G⁻¹1` on the integer path as numerators over a common denominator, `None` if
    /// the path is unusable.
    fn solve_fast(&self, set: &[usize]) -> Option<([i128; FAST], i128)> {
        let k = set.len();
        if k > FAST {
            return None;
        }
        let mut m: Augmented = [[0; FAST + 1]; FAST];
        for (r, &i) in set.iter().enumerate() {
            for (c, &j) in set.iter().enumerate() {
                m[r][c] = self.gram[i][j];
            }
            m[r][k] = 1;
        }
        bareiss_fixed(&mut m, k)
    }

    /// Dominant representative of `Σ y_i w_i / Σ y_i` as primitive integer numerators
    /// followed by the denominator, with the simple reflections applied.
    fn dominant_key(&self, set: &[usize], y: &[i128]) -> Option<(Vec<i128>, Vec<usize>)> {
        let rank = self.cartan.len();
        let mut v = vec![0i128; rank + 1];
        for (&i, &c) in set.iter().zip(y) {
            for (x, w) in v.iter_mut().zip(&self.coords[i]) {
                *x = x.checked_add(c.checked_mul(*w)?)?;
            }
            v[rank] = v[rank].checked_add(c)?;
        }
        if v[rank] < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        let g = v.iter().fold(0i128, |g, &x| weights::gcd(g, x));
        if g > 1 {
            v.iter_mut().for_each(|x| *x /= g);
        }
        let mut word = Vec::new();
        while let Some(i) = (0..rank).find(|&i| v[i] < 0) {
            let c = v[i];
            for (x, a) in v.iter_mut().zip(&self.cartan[i]) {
                *x = x.checked_sub(c.checked_mul(*a)?)?;
            }
            word.push(i);
        }
        Some((v, word))
    }

    /// Barycentric coefficients of the point of `aff(M)` nearest 0, if all positive.
    fn positive_projection(&self, sys: &RootSystem, weights: &[WeightVec], set: &[usize]) -> Option<Vec<Q>> {
        let gq: Matrix = set.iter().map(|&i| set.iter().map(|&j| sys.pairing(&weights[i], &weights[j])).collect()).collect();
        let y = linalg::solve(&gq, &vec![Q::one(); set.len()])?;
        if y.iter().any(|x| !x.is_positive()) {
            return None;
        }
        let total: Q = y.iter().sum();
        Some(y.iter().map(|x| x / &total).collect())
    }

    /// `c` with `c · x = det[rows; x]` for `rank − 1` rows, via cofactors.
    fn cofactor_normal(&self, set: &[usize], rank: usize) -> Option<[i128; FAST]> {
        if rank > FAST || set.len() + 1 != rank {
            return None;
        }
        let mut normal = [0i128; FAST];
        for (skip, slot) in normal.iter_mut().enumerate().take(rank) {
            let mut m: Augmented = [[0; FAST + 1]; FAST];
            for (r, &i) in set.iter().enumerate() {
                for (c, col) in (0..rank).filter(|&c| c != skip).enumerate() {
                    m[r][c] = self.coords[i][col];
                }
            }
            let minor = if set.is_empty() { 1 } else { det_fixed(&mut m, set.len())? };
            *slot = if (rank - 1 + skip) % 2 == 0 { minor } else { -minor };
        }
        Some(normal)
    }
}

struct Scan<'a> {
    sys: &'a RootSystem,
    weights: &'a [WeightVec],
    kernel: Kernel,
    limit: u64,
    scanned: u64,
    found: BTreeMap<WeightVec, (Vec<WeightVec>, Vec<Q>)>,
    seen: HashSet<Vec<i128>>,
}

impl Scan<'_> {
    fn visit(&mut self, set: &[usize]) -> Result<()> {
        self.scanned += 1;
        if self.scanned > self.limit {
            return Err(Error::Budget { what: "subsets", limit: self.limit, scanned: self.scanned - 1 });
        }
        if let Some((y, det)) = self.kernel.solve_fast(set) {
            let y = &y[..set.len()];
            if y.iter().any(|&x| x == 0 || (x > 0) != (det > 0)) {
                return Ok(());
            }
            // Later subsets reaching a known `ξ` change nothing.
            if let Some((key, word)) = self.kernel.dominant_key(set, y) {
                if self.seen.contains(&key) {
                    return Ok(());
                }
                let total: i128 = y.iter().sum();
                let coef: Vec<Q> = y.iter().map(|&c| Q::new(c.into(), total.into())).collect();
                let den = Q::from_integer(key[key.len() - 1].into());
                let dom = WeightVec::new(key[..key.len() - 1].iter().map(|&x| Q::from_integer(x.into()) / &den).collect());
                self.seen.insert(key);
                self.found.entry(dom).or_insert_with(|| {
                    let support = set.iter().map(|&i| self.sys.apply_word(&word, &self.weights[i])).collect();
                    (support, coef)
                });
                return Ok(());
            }
        }
        let Some(coef) = self.kernel.positive_projection(self.sys, self.weights, set) else { return Ok(()) };
        let mut xi = WeightVec::zero(self.sys.rank());
        for (a, &i) in coef.iter().zip(set) {
            xi = &xi + &self.weights[i].scaled(a);
        }
        let (dom, word) = self.sys.dominant_representative(&xi);
        self.found.entry(dom).or_insert_with(|| {
            let support = set.iter().map(|&i| self.sys.apply_word(&word, &self.weights[i])).collect();
            (support, coef)
        });
        Ok(())
    }

    fn independent(&self, set: &[usize], j: usize, ech: &Echelon) -> (bool, Echelon) {
        let mut next = ech.clone();
        let ok = match next.try_push(&self.kernel.coords[j]) {
            Some(b) => b,
            None => {
                let m: Matrix = set.iter().chain([&j]).map(|&i| self.weights[i].coords.clone()).collect();
                linalg::rank(&m) == set.len() + 1
            }
        };
        (ok, next)
    }

    fn extend(&mut self, set: &mut Vec<usize>, allowed: &[usize], from: usize, ech: &Echelon) -> Result<()> {
        self.visit(set)?;
        let rank = self.sys.rank();
        if set.len() == rank {
            return Ok(());
        }
        // Last level: independence of `set ∪ {j}` is `normal · x_j ≠ 0`.
        if let Some(normal) = self.kernel.cofactor_normal(set, rank) {
            for &j in &allowed[from..] {
                let dot = self.kernel.coords[j][..rank]
                    .iter()
                    .zip(&normal[..rank])
                    .try_fold(0i128, |acc, (x, c)| acc.checked_add(x.checked_mul(*c)?));
                let independent = match dot {
                    Some(d) => d != 0,
                    None => self.independent(set, j, ech).0,
                };
                if independent {
                    set.push(j);
                    self.visit(set)?;
                    set.pop();
                }
            }
            return Ok(());
        }
        for pos in from..allowed.len() {
            let j = allowed[pos];
            let (independent, next) = self.independent(set, j, ech);
            if !independent {
                continue;
            }
            set.push(j);
            self.extend(set, allowed, pos + 1, &next)?;
            set.pop();
        }
        Ok(())
    }
}

/// All dominant `ξ_M` for linearly independent `M` with `|M| ≤ rank`, plus `ξ = 0`.
pub fn enumerate_candidates(ws: &WeightSystem, budgets: &Budgets) -> Result<Enumeration> {
    let sys = &ws.system;
    let weights = ws.distinct();
    let mut scan = Scan { sys, weights: &weights, kernel: Kernel::new(sys, &weights)?, limit: budgets.subsets, scanned: 0, found: BTreeMap::new(), seen: HashSet::new() };
    for (d, w) in weights.iter().enumerate() {
        if !w.is_dominant() || w.is_zero() {
            continue;
        }
        // Other dominant members must come later, so each subset is scanned once.
        let allowed: Vec<usize> = (0..weights.len()).filter(|&j| j != d && !(weights[j].is_dominant() && j < d)).collect();
        let mut ech = Echelon::default();
        ech.try_push(&scan.kernel.coords[d]).expect("single row");
        scan.extend(&mut vec![d], &allowed, 0, &ech)?;
    }
    let subsets_scanned = scan.scanned;
    let ints = scan.kernel.coords;
    let mut found = scan.found;
    if let Some((support, coefficients)) = zero_combination(sys, &weights, budgets)? {
        found.insert(sys.zero(), (support, coefficients));
    }
    let mut candidates: Vec<CriticalCandidate> =
        found.into_iter().map(|(xi, (support, coefficients))| candidate(sys, &weights, &ints, xi, support, coefficients)).collect();
    candidates.sort_by(|a, b| b.norm2.cmp(&a.norm2).then_with(|| a.xi.cmp(&b.xi)));
    Ok(Enumeration { candidates, subsets_scanned })
}

/// `0` as a convex combination of at most `rank + 1` weights, from the orbit of the
/// shortest nonzero dominant weight (a Weyl orbit always averages to 0).
fn zero_combination(sys: &RootSystem, weights: &[WeightVec], budgets: &Budgets) -> Result<Option<(Vec<WeightVec>, Vec<Q>)>> {
    if weights.iter().any(|w| w.is_zero()) {
        return Ok(Some((vec![sys.zero()], vec![Q::one()])));
    }
    let Some(d) = weights.iter().filter(|w| w.is_dominant()).min_by(|a, b| sys.norm2(a).cmp(&sys.norm2(b)).then_with(|| a.cmp(b))) else {
        return Ok(None);
    };
    let orbit = sys.weyl_orbit(d, budgets.orbit)?;
    let hull = VPolytope::polytope(sys.rank(), orbit.iter().map(|w| w.coords.clone()).collect());
    let m = geomkernel::lp_membership(&vec![Q::zero(); sys.rank()], &hull);
    if !m.inside {
        return Ok(None);
    }
    let mut support = Vec::new();
    let mut coefficients = Vec::new();
    for (w, c) in hull.vertices.iter().zip(&m.coefficients) {
        if c.is_positive() {
            support.push(WeightVec::new(w.clone()));
            coefficients.push(c.clone());
        }
    }
    Ok(Some((support, coefficients)))
}

fn candidate(sys: &RootSystem, weights: &[WeightVec], ints: &[Vec<i128>], xi: WeightVec, support: Vec<WeightVec>, coefficients: Vec<Q>) -> CriticalCandidate {
    let norm2 = sys.norm2(&xi);
    let lambda_xi = lambda_xi_in(sys, weights, Some(ints), &xi);
    let pi0: Vec<usize> = (0..sys.rank()).filter(|&i| xi.coords[i].is_zero()).collect();
    CriticalCandidate { regular: pi0.is_empty(), xi, norm2, support, coefficients, lambda_xi, pi0 }
}

/// `ints`, when given, holds the integral coordinates of `weights`.
fn lambda_xi_in(sys: &RootSystem, weights: &[WeightVec], ints: Option<&[Vec<i128>]>, xi: &WeightVec) -> Vec<WeightVec> {
    let covector = sys.covector(xi);
    let n2 = rational::dot(&covector, &xi.coords);
    // Integer path: `(w | ξ) = Σ w_i c_i / den` with integral `w`.
    let (nums, den) = rational::common_denominator(&covector);
    let target = &n2 * Q::from_integer(den);
    let owned: Option<Vec<Vec<i128>>> = match ints {
        Some(_) => None,
        None => weights.iter().map(weights::int_coords).collect(),
    };
    let nums: Option<Vec<i128>> = nums.iter().map(|n| n.to_i128()).collect();
    let target = if target.is_integer() { target.to_integer().to_i128() } else { None };
    let (Some(ints), Some(nums), Some(target)) = (ints.or(owned.as_deref()), nums, target) else {
        return slow_lambda_xi(&covector, &n2, weights);
    };
    let mut out = Vec::new();
    for (w, x) in weights.iter().zip(ints) {
        match x.iter().zip(&nums).try_fold(0i128, |acc, (a, b)| acc.checked_add(a.checked_mul(*b)?)) {
            Some(d) if d == target => out.push(w.clone()),
            Some(_) => {}
            None => return slow_lambda_xi(&covector, &n2, weights),
        }
    }
    out
}

fn slow_lambda_xi(covector: &[Q], n2: &Q, weights: &[WeightVec]) -> Vec<WeightVec> {
    weights.iter().filter(|w| &rational::dot(covector, &w.coords) == n2).cloned().collect()
}

/// `Λ_ξ`; for `ξ = 0` this is all of `Λ(V)`.
pub fn lambda_xi(ws: &WeightSystem, xi: &WeightVec) -> Result<Vec<WeightVec>> {
    ws.system.check(xi)?;
    Ok(lambda_xi_in(&ws.system, &ws.distinct(), None, xi))
}

/// The semisimple part of the centralizer of a dominant `ξ` and the projection onto it.
#[derive(Clone, Debug)]
pub struct Centralizer {
    pub pi0: Vec<usize>,
    /// `None` when `ξ` is regular.
    pub subsystem: Option<RootSystem>,
    /// Ambient index of each subsystem simple root.
    pub map: Vec<usize>,
}

impl Centralizer {
    /// Orthogonal projection onto `Span(Π⁽⁰⁾_ξ)` in the subsystem's fundamental basis:
    /// `(pr ν | α) = (ν | α)` for `α ∈ Π⁽⁰⁾`, so the coordinates simply restrict.
    pub fn project(&self, nu: &WeightVec) -> WeightVec {
        WeightVec::new(self.map.iter().map(|&i| nu.coords[i].clone()).collect())
    }
}

pub fn centralizer_data(sys: &RootSystem, xi: &WeightVec) -> Result<Centralizer> {
    sys.check(xi)?;
    if !xi.is_dominant() {
        return Err(Error::NotDominant(xi.to_string()));
    }
    let pi0: Vec<usize> = (0..sys.rank()).filter(|&i| xi.coords[i].is_zero()).collect();
    if pi0.is_empty() {
        return Ok(Centralizer { pi0, subsystem: None, map: Vec::new() });
    }
    let (sub, map) = sys.subsystem(&pi0)?;
    Ok(Centralizer { pi0, subsystem: Some(sub), map })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalityVerdict {
    pub verdict: Verdict,
    pub reason: String,
    /// Semisimple centralizer type, `""` when trivial.
    pub centralizer: String,
    pub projected: Vec<WeightVec>,
    pub witness: Option<weights::ZeroWitness>,
    /// `K′_ξ`-module structure of `V_ξ` as `(highest weight, multiplicity)`, when known.
    pub decomposition: Option<Vec<(WeightVec, u64)>>,
}

/// Decides whether `0 ∈ μ_{K′_ξ}(P(V_ξ))`: regular `ξ` always; otherwise a root-distinct
/// zero witness among the projected weights, or the tables applied to the module
/// structure of `V_ξ` when all of its multiplicities are provably known.
pub fn criticality_verdict(ws: &WeightSystem, cand: &CriticalCandidate, budgets: &Budgets) -> Result<CriticalityVerdict> {
    let sys = &ws.system;
    let cz = centralizer_data(sys, &cand.xi)?;
    let Some(sub) = &cz.subsystem else {
        return Ok(CriticalityVerdict {
            verdict: Verdict::Critical,
            reason: "ξ is regular, so Λ_ξ is root-distinct and ξ is attained on Z_ξ".into(),
            centralizer: String::new(),
            projected: Vec::new(),
            witness: None,
            decomposition: None,
        });
    };
    let mut projected: Vec<WeightVec> = cand.lambda_xi.iter().map(|w| cz.project(w)).collect();
    projected.sort();
    projected.dedup();
    let pws = WeightSystem { system: sub.clone(), summands: Vec::new(), weights: projected.iter().map(|w| (w.clone(), 0)).collect() };
    let search = weights::zero_witness(&pws, budgets)?;
    let base = |verdict, reason: String, witness, decomposition| CriticalityVerdict {
        verdict,
        reason,
        centralizer: sub.name(),
        projected: projected.clone(),
        witness,
        decomposition,
    };
    if let Some(w) = search.witness {
        return Ok(base(Verdict::Critical, "root-distinct projected weights contain 0 in their hull".into(), Some(w), None));
    }
    let decomposition = if cand.xi.is_zero() {
        Some(summand_counts(ws))
    } else {
        match ambient_character(ws, &cand.lambda_xi, budgets)? {
            Some(ch) => {
                let mut proj: BTreeMap<WeightVec, u64> = BTreeMap::new();
                for (w, m) in ch {
                    *proj.entry(cz.project(&w)).or_default() += m;
                }
                decompose(sub, proj, budgets)?
            }
            None => None,
        }
    };
    let Some(dec) = decomposition else {
        return Ok(base(
            Verdict::Unknown,
            "no root-distinct witness and the module structure of V_ξ is not determined; \
             the result does not match any of the known representations without invariants"
                .into(),
            None,
            None,
        ));
    };
    let (verdict, reason) = verdict_from_modules(sub, &dec, budgets)?;
    Ok(base(verdict, reason, None, Some(dec)))
}

fn summand_counts(ws: &WeightSystem) -> Vec<(WeightVec, u64)> {
    let mut m: BTreeMap<WeightVec, u64> = BTreeMap::new();
    for s in &ws.summands {
        *m.entry(s.clone()).or_default() += 1;
    }
    m.into_iter().collect()
}

/// Weight multiplicities of `V` on `Λ_ξ`, when each is provably determined: a weight
/// has multiplicity one in a summand when it is extremal there or the summand's Weyl
/// dimension equals its number of weights.
fn ambient_character(ws: &WeightSystem, lambda_xi: &[WeightVec], budgets: &Budgets) -> Result<Option<BTreeMap<WeightVec, u64>>> {
    let sys = &ws.system;
    let _ = budgets;
    let mut mult_free = Vec::new();
    for (s, hw) in ws.summands.iter().enumerate() {
        mult_free.push(sys.weyl_dimension(hw)? == ws.of_summand(s).len() as u64);
    }
    let mut owners: BTreeMap<&WeightVec, Vec<usize>> = BTreeMap::new();
    for (w, s) in &ws.weights {
        owners.entry(w).or_default().push(*s);
    }
    let mut out = BTreeMap::new();
    for w in lambda_xi {
        let dom = sys.dominant_representative(w).0;
        let mut m = 0;
        for &s in owners.get(w).map(Vec::as_slice).unwrap_or(&[]) {
            if mult_free[s] || dom == ws.summands[s] {
                m += 1;
            } else {
                return Ok(None);
            }
        }
        out.insert(w.clone(), m);
    }
    Ok(Some(out))
}

/// Splits a character into irreducibles by peeling off highest weights, provided each
/// irreducible met has all weight multiplicities equal to one.
fn decompose(sub: &RootSystem, mut ch: BTreeMap<WeightVec, u64>, budgets: &Budgets) -> Result<Option<Vec<(WeightVec, u64)>>> {
    let rho = sub.rho();
    let mut out = Vec::new();
    ch.retain(|_, m| *m > 0);
    while !ch.is_empty() {
        let top = ch
            .keys()
            .filter(|w| w.is_dominant())
            .max_by(|a, b| sub.pairing(a, &rho).cmp(&sub.pairing(b, &rho)).then_with(|| a.cmp(b)))
            .cloned()
            .expect("a nonempty W-invariant character has a dominant weight");
        let m = ch[&top];
        let ws = weights::weight_system(sub, std::slice::from_ref(&top), budgets)?;
        let module = ws.distinct();
        if sub.weyl_dimension(&top)? != module.len() as u64 {
            return Ok(None);
        }
        for w in &module {
            match ch.get_mut(w) {
                Some(c) if *c >= m => {
                    *c -= m;
                    if *c == 0 {
                        ch.remove(w);
                    }
                }
                _ => return Ok(None),
            }
        }
        out.push((top, m));
    }
    out.sort();
    Ok(Some(out))
}

/// Invariants exist on `⊕ m_i V_{μ_i}` as soon as one summand has them, a self-dual
/// summand repeats, a summand meets its dual, or a multiplicity reaches `|Wμ|`.
fn verdict_from_modules(sub: &RootSystem, dec: &[(WeightVec, u64)], budgets: &Budgets) -> Result<(Verdict, String)> {
    for (mu, m) in dec {
        if mu.is_zero() || !catalog::unstable_irreducible(sub, mu)? {
            return Ok((Verdict::Critical, format!("the summand with highest weight {mu} has invariants")));
        }
        let dual = sub.dual_highest_weight(mu)?;
        if dual == *mu && *m >= 2 {
            return Ok((Verdict::Critical, format!("the self-dual summand {mu} occurs {m} times")));
        }
        if dual != *mu && dec.iter().any(|(nu, _)| *nu == dual) {
            return Ok((Verdict::Critical, format!("the summands {mu} and {dual} are dual")));
        }
        if *m >= sub.weyl_orbit(mu, budgets.orbit)?.len() as u64 {
            return Ok((Verdict::Critical, format!("the summand {mu} occurs {m} ≥ |Wμ| times")));
        }
    }
    match dec {
        [(mu, 1)] => Ok((Verdict::NotCritical, format!("V_ξ is the irreducible {mu} of {} without invariants", sub.name()))),
        [(a, 1), (b, 1)] if catalog::reducible_multfree_unstable(sub, &[a.clone(), b.clone()])? => {
            Ok((Verdict::NotCritical, "V_ξ is the multiplicity-free pair without invariants".into()))
        }
        _ => Ok((Verdict::Unknown, "every summand lacks invariants but the sum is not covered by the tables".into())),
    }
}

/// A candidate with its verdict, for reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KirwanEntry {
    #[serde(flatten)]
    pub candidate: CriticalCandidate,
    pub verdict: Verdict,
    pub reason: String,
    pub centralizer: String,
    pub projected: Vec<WeightVec>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KirwanReport {
    pub system: String,
    pub summands: Vec<WeightVec>,
    pub candidates: Vec<KirwanEntry>,
    pub subsets_scanned: u64,
    pub note: String,
}

pub fn analyze(ws: &WeightSystem, budgets: &Budgets) -> Result<KirwanReport> {
    let e = enumerate_candidates(ws, budgets)?;
    let mut candidates = Vec::new();
    for c in e.candidates {
        let v = criticality_verdict(ws, &c, budgets)?;
        candidates.push(KirwanEntry { candidate: c, verdict: v.verdict, reason: v.reason, centralizer: v.centralizer, projected: v.projected });
    }
    Ok(KirwanReport {
        system: ws.system.name(),
        summands: ws.summands.clone(),
        candidates,
        subsets_scanned: e.subsets_scanned,
        note: "candidates form a superset of the critical values; only the Lagrange identity on each support is certified".into(),
    })
}
