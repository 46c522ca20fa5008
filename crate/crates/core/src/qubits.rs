//! `N` qubits under `SU(2)^N`: the `N_0` wall criterion, explicit critical states and
//! direct evaluation of the momentum map on state vectors.
//!
//! Basis index bit `k` (most significant first) is 0 for `+δ` and 1 for `−δ` in factor `k`,
//! so `|0…0⟩` is the highest weight vector. Weights use fundamental coordinates, where
//! each factor contributes `±1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::geomkernel::{self, VPolytope};
use crate::kirwan::{self, Verdict};
use crate::linalg::{self, Matrix};
use crate::rational::{self, ser, Q};
use crate::rootsys::{RootSystem, WeightVec};
use crate::weights::{self, WeightSystem};

pub const MAX_QUBITS: usize = 10;
/// Verification tolerance for floating-point state checks.
pub const TOLERANCE: f64 = 1e-9;

pub fn qubit_system(n: usize) -> Result<RootSystem> {
    if !(1..=MAX_QUBITS).contains(&n) {
        return Err(Error::Invalid(format!("number of qubits must be in 1..={MAX_QUBITS}, got {n}")));
    }
    RootSystem::parse(&vec!["A1"; n].join("x"))
}

/// `(C²)^{⊗N}` with highest weight `δ⊕…⊕δ`.
pub fn qubit_weight_system(n: usize) -> Result<WeightSystem> {
    let sys = qubit_system(n)?;
    let top = WeightVec::from_ints(&vec![1; n]);
    weights::weight_system(&sys, &[top], &Budgets::default())
}

/// Weight of basis vector `index`.
pub fn basis_weight(n: usize, index: usize) -> WeightVec {
    WeightVec::from_ints(&(0..n).map(|k| if index >> (n - 1 - k) & 1 == 0 { 1 } else { -1 }).collect::<Vec<_>>())
}

fn basis_index(nu: &WeightVec) -> usize {
    nu.coords.iter().fold(0, |acc, c| (acc << 1) | usize::from(c.is_negative()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct N0Verdict {
    /// Factors where `ξ` is nonzero.
    pub support: Vec<usize>,
    pub n0: usize,
    pub verdict: Verdict,
}

/// `N_0` = number of factors orthogonal to a dominant wall element `ξ`; the criterion
/// predicts a critical value exactly when `N_0 > 1`.
pub fn n0_criterion(xi: &WeightVec) -> Result<N0Verdict> {
    let n = xi.dim();
    qubit_system(n)?;
    if !xi.is_dominant() {
        return Err(Error::NotDominant(xi.to_string()));
    }
    let support: Vec<usize> = (0..n).filter(|&i| xi.coords[i].is_positive()).collect();
    if support.len() == n {
        return Err(Error::Invalid(format!("{xi} is regular, not on a wall")));
    }
    let n0 = n - support.len();
    Ok(N0Verdict { support, n0, verdict: if n0 > 1 { Verdict::Critical } else { Verdict::NotCritical } })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QubitState {
    pub n: usize,
    #[serde(serialize_with = "ser_amplitudes")]
    pub amplitudes: Vec<Complex64>,
}

fn ser_amplitudes<S: serde::Serializer>(a: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(a.len()))?;
    for z in a {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

impl QubitState {
    pub fn new(n: usize, amplitudes: Vec<Complex64>) -> Result<QubitState> {
        qubit_system(n)?;
        if amplitudes.len() != 1 << n {
            return Err(Error::Dimension { expected: 1 << n, got: amplitudes.len() });
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm <= TOLERANCE {
            return Err(Error::Invalid("zero vector".into()));
        }
        Ok(QubitState { n, amplitudes: amplitudes.into_iter().map(|z| z / norm).collect() })
    }

    pub fn basis(n: usize, index: usize) -> Result<QubitState> {
        let mut a = vec![Complex64::zero(); 1 << n];
        *a.get_mut(index).ok_or_else(|| Error::Invalid(format!("basis index {index} out of range")))? = Complex64::new(1.0, 0.0);
        QubitState::new(n, a)
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `exp(tξ)` acting by the phase `e^{i t (ν|ξ)}` on the weight space of `ν`.
    pub fn torus_action(&self, sys: &RootSystem, xi: &WeightVec, t: f64) -> QubitState {
        let amplitudes = self
            .amplitudes
            .iter()
            .enumerate()
            .map(|(i, z)| z * Complex64::from_polar(1.0, t * rational::to_f64(&sys.pairing(&basis_weight(self.n, i), xi))))
            .collect();
        QubitState { n: self.n, amplitudes }
    }

    /// `min_φ ‖e^{iφ}ψ − ψ'‖` for normalized states.
    pub fn projective_distance(&self, other: &QubitState) -> f64 {
        let overlap: Complex64 = self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum();
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { Complex64::new(1.0, 0.0) };
        // Direct difference; `sqrt(2 − 2|⟨ψ|ψ'⟩|)` loses half the digits near 0.
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| (a * phase - b).norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Per-factor momentum as `(torus, x, y)`: the torus entry is the fundamental coordinate
/// of the `t`-component, the others are the two off-torus directions.
pub fn evaluate_momentum(state: &QubitState) -> Result<Vec<[f64; 3]>> {
    let norm2: f64 = state.amplitudes.iter().map(|z| z.norm_sqr()).sum();
    if norm2 <= TOLERANCE * TOLERANCE {
        return Err(Error::Invalid("zero vector".into()));
    }
    let n = state.n;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let bit = 1 << (n - 1 - k);
        let (mut z, mut off) = (0.0, Complex64::zero());
        for (i, a) in state.amplitudes.iter().enumerate() {
            if i & bit == 0 {
                z += a.norm_sqr();
                // ⟨ψ| σ_+ |ψ⟩ contribution pairs the +δ and −δ components.
                off += a.conj() * state.amplitudes[i | bit];
            } else {
                z -= a.norm_sqr();
            }
        }
        out.push([z / norm2, 2.0 * off.re / norm2, 2.0 * off.im / norm2]);
    }
    Ok(out)
}

/// How `w^⊥` was obtained.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Closure {
    /// Torus translate closing the polygon of side lengths `b_ν` with angles `θ_ν`.
    Polygon { angles: Vec<f64>, residual: f64 },
    /// One side: no torus translate is orthogonal to `w`, and `w^⊥ = w` is used instead.
    SingleSide,
    /// The longest side exceeds the others; `w^⊥ = w` is used instead.
    Unclosable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalState {
    pub state: QubitState,
    /// Weights on the `ξ`-factors and barycentric coefficients with `Σ b_ν ν = ξ`.
    pub sides: Vec<WeightVec>,
    #[serde(serialize_with = "ser::vec")]
    pub coefficients: Vec<Q>,
    pub closure: Closure,
    /// Residuals: momentum distance to `ξ`, and worst `T_ξ` phase defect at `t = 0.1, 0.7`.
    pub momentum_residual: f64,
    pub torus_residual: f64,
}

/// Builds `[w ⊗ v^{λ'} + w^⊥ ⊗ v^{−λ'}]` with `λ' = δ⊕…⊕δ` on the `N_0` factors orthogonal to `ξ`.
pub fn construct_critical_point(xi: &WeightVec) -> Result<CriticalState> {
    let n = xi.dim();
    let crit = n0_criterion(xi)?;
    if crit.n0 <= 1 {
        return Err(Error::Invalid(format!("N_0 = {} so {xi} is not a critical value", crit.n0)));
    }
    let sys = qubit_system(n)?;
    let support = &crit.support;
    let local = |nu: &WeightVec| WeightVec::new(support.iter().map(|&i| nu.coords[i].clone()).collect());
    let xi_local = local(xi);
    let (sides, coefficients) = if support.is_empty() {
        (vec![WeightVec::zero(0)], vec![rational::one()])
    } else {
        local_decomposition(&sys, xi, support, &xi_local)?
    };

    let b: Vec<f64> = coefficients.iter().map(rational::to_f64).collect();
    let (angles, closure) = match sides.len() {
        1 => (vec![0.0], Closure::SingleSide),
        _ => match close_polygon(&b) {
            Some(theta) => {
                let tau = torus_solution(&sides, &theta)?;
                let angles: Vec<f64> = sides.iter().map(|nu| pair_local(nu, &tau)).collect();
                let residual = b.iter().zip(&angles).map(|(bv, a)| Complex64::from_polar(*bv, *a)).sum::<Complex64>().norm();
                (angles.clone(), Closure::Polygon { angles, residual })
            }
            None => (vec![0.0; sides.len()], Closure::Unclosable),
        },
    };

    let mut amplitudes = vec![Complex64::zero(); 1 << n];
    for (sign, phases) in [(1i64, None), (-1, Some(&angles))] {
        for (j, nu) in sides.iter().enumerate() {
            let mut full = vec![sign; n];
            for (pos, &i) in support.iter().enumerate() {
                full[i] = rational::to_i64(&nu.coords[pos]).expect("qubit weights are ±1");
            }
            let phase = phases.map_or(0.0, |p| p[j]);
            amplitudes[basis_index(&WeightVec::from_ints(&full))] += Complex64::from_polar(b[j].sqrt(), phase);
        }
    }
    let state = QubitState::new(n, amplitudes)?;
    let momentum_residual = momentum_distance(&state, xi)?;
    let torus_residual =
        [0.1, 0.7].iter().map(|&t| state.projective_distance(&state.torus_action(&sys, xi, t))).fold(0.0, f64::max);
    Ok(CriticalState { state, sides, coefficients, closure, momentum_residual, torus_residual })
}

/// `‖μ(state) − ξ‖` in Bloch coordinates.
pub fn momentum_distance(state: &QubitState, xi: &WeightVec) -> Result<f64> {
    let mu = evaluate_momentum(state)?;
    Ok(mu
        .iter()
        .zip(&xi.coords)
        .map(|(m, x)| (m[0] - rational::to_f64(x)).powi(2) + m[1].powi(2) + m[2].powi(2))
        .sum::<f64>()
        .sqrt())
}

/// `ξ` restricted to its support as a convex combination of linearly independent
/// restricted weights from `Λ_ξ`.
fn local_decomposition(sys: &RootSystem, xi: &WeightVec, support: &[usize], xi_local: &WeightVec) -> Result<(Vec<WeightVec>, Vec<Q>)> {
    let n = xi.dim();
    let n2 = sys.norm2(xi);
    let mut pool: Vec<WeightVec> = (0..1usize << n)
        .map(|i| basis_weight(n, i))
        .filter(|nu| sys.pairing(nu, xi) == n2)
        .map(|nu| WeightVec::new(support.iter().map(|&i| nu.coords[i].clone()).collect()))
        .collect();
    pool.sort();
    pool.dedup();
    let hull = VPolytope::polytope(support.len(), pool.iter().map(|w| w.coords.clone()).collect());
    let m = geomkernel::lp_membership(&xi_local.coords, &hull);
    if !m.inside {
        return Err(Error::Invalid(format!("{xi} is not a convex combination of Λ_ξ")));
    }
    let mut points: Vec<Vec<Q>> = Vec::new();
    let mut coef: Vec<Q> = Vec::new();
    for (v, c) in hull.vertices.iter().zip(&m.coefficients) {
        if c.is_positive() {
            points.push(v.clone());
            coef.push(c.clone());
        }
    }
    caratheodory(&mut points, &mut coef);
    Ok((points.into_iter().map(WeightVec::new).collect(), coef))
}

/// Removes points until they are linearly independent, keeping `Σ c_i p_i` and `Σ c_i`.
/// All points lie on a hyperplane missing 0, so linear and affine dependence agree.
fn caratheodory(points: &mut Vec<Vec<Q>>, coef: &mut Vec<Q>) {
    loop {
        // Columns are the points; a kernel vector is a linear dependency.
        let cols: Matrix = (0..points[0].len()).map(|r| points.iter().map(|p| p[r].clone()).collect()).collect();
        let Some(dep) = linalg::nullspace(&cols, points.len()).into_iter().next() else { return };
        let dep = if dep.iter().any(|d| d.is_positive()) { dep } else { dep.iter().map(|d| -d).collect() };
        let (drop, step) = dep
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_positive())
            .map(|(i, d)| (i, &coef[i] / d))
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("a positive entry exists");
        for (c, d) in coef.iter_mut().zip(&dep) {
            *c -= &step * d;
        }
        points.remove(drop);
        coef.remove(drop);
    }
}

fn pair_local(nu: &WeightVec, tau: &[f64]) -> f64 {
    // Each A1 factor has (ω|ω) = 1/2.
    nu.coords.iter().zip(tau).map(|(c, t)| rational::to_f64(c) * t / 2.0).sum()
}

/// A torus element `τ` with `(τ|ν_j) = θ_j`: the minimum-norm solution `Aᵀ(AAᵀ)⁻¹θ`.
fn torus_solution(sides: &[WeightVec], theta: &[f64]) -> Result<Vec<f64>> {
    let half = Q::new(1.into(), 2.into());
    let a: Matrix = sides.iter().map(|nu| nu.coords.iter().map(|c| c * &half).collect()).collect();
    let k = a.len();
    let gram: Matrix = (0..k).map(|i| (0..k).map(|j| a[i].iter().zip(&a[j]).map(|(x, y)| x * y).sum()).collect()).collect();
    let inv = linalg::inverse(&gram).ok_or_else(|| Error::Invalid("polygon sides are linearly dependent".into()))?;
    let y: Vec<f64> = inv.iter().map(|row| row.iter().zip(theta).map(|(c, t)| rational::to_f64(c) * t).sum()).collect();
    let dim = a.first().map_or(0, Vec::len);
    Ok((0..dim).map(|c| (0..k).map(|j| rational::to_f64(&a[j][c]) * y[j]).sum()).collect())
}

/// Angles `θ` with `Σ b_j e^{iθ_j} = 0`, provided the longest side is at most the sum of
/// the others. Sides are placed in decreasing length; the longest points along `−1` and
/// the rest form a flexible chain reaching `+max`.
pub fn close_polygon(lengths: &[f64]) -> Option<Vec<f64>> {
    if lengths.len() < 2 {
        return None;
    }
    let mut order: Vec<usize> = (0..lengths.len()).collect();
    order.sort_by(|&a, &b| lengths[b].total_cmp(&lengths[a]).then(a.cmp(&b)));
    let longest = lengths[order[0]];
    let rest: f64 = order[1..].iter().map(|&i| lengths[i]).sum();
    if longest > rest * (1.0 + 1e-12) {
        return None;
    }
    let chain: Vec<f64> = order[1..].iter().map(|&i| lengths[i]).collect();
    let chain_angles = reach(&chain, Complex64::new(longest, 0.0));
    let mut theta = vec![0.0; lengths.len()];
    theta[order[0]] = PI;
    for (pos, &i) in order[1..].iter().enumerate() {
        theta[i] = chain_angles[pos];
    }
    Some(theta)
}

/// Angles for a chain of segments ending at `target`, whose length lies in the reachable range.
fn reach(segments: &[f64], target: Complex64) -> Vec<f64> {
    let (first, rest) = segments.split_first().expect("nonempty chain");
    if rest.is_empty() {
        return vec![target.arg()];
    }
    let d = target.norm();
    let rest_hi: f64 = rest.iter().sum();
    let rest_max = rest.iter().cloned().fold(0.0, f64::max);
    let rest_lo = (2.0 * rest_max - rest_hi).max(0.0);
    // Remaining distance d' must make (first, d', d) a triangle and be reachable by `rest`.
    let lo = rest_lo.max((d - first).abs());
    let hi = rest_hi.min(d + first);
    let d_rest = if lo <= hi { (lo + hi) / 2.0 } else { hi };
    let phi = if d <= f64::EPSILON {
        0.0
    } else {
        let cos = ((first * first + d * d - d_rest * d_rest) / (2.0 * first * d)).clamp(-1.0, 1.0);
        target.arg() + cos.acos()
    };
    let step = Complex64::from_polar(*first, phi);
    let mut out = vec![phi];
    out.extend(reach(rest, target - step));
    out
}

/// One wall candidate of `||μ||²` compared against the `N_0` prediction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WallCheck {
    pub xi: WeightVec,
    pub n0: usize,
    pub predicted: Verdict,
    pub computed: Verdict,
    pub reason: String,
}

impl WallCheck {
    pub fn agrees(&self) -> bool {
        self.predicted == self.computed
    }
}

/// Every singular candidate from the general enumeration, with both verdicts.
pub fn wall_checks(n: usize, budgets: &Budgets) -> Result<Vec<WallCheck>> {
    let ws = qubit_weight_system(n)?;
    let e = kirwan::enumerate_candidates(&ws, budgets)?;
    let mut out = Vec::new();
    for c in e.candidates.iter().filter(|c| !c.regular) {
        let predicted = n0_criterion(&c.xi)?;
        let computed = kirwan::criticality_verdict(&ws, c, budgets)?;
        out.push(WallCheck { xi: c.xi.clone(), n0: predicted.n0, predicted: predicted.verdict, computed: computed.verdict, reason: computed.reason });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QubitReport {
    pub xi: WeightVec,
    #[serde(rename = "N0")]
    pub n0: usize,
    pub verdict: Verdict,
    pub state: Option<CriticalState>,
    pub momentum: Option<Vec<[f64; 3]>>,
}

pub fn report(xi: &WeightVec) -> Result<QubitReport> {
    let crit = n0_criterion(xi)?;
    let state = if crit.verdict == Verdict::Critical { Some(construct_critical_point(xi)?) } else { None };
    let momentum = state.as_ref().map(|s| evaluate_momentum(&s.state)).transpose()?;
    Ok(QubitReport { xi: xi.clone(), n0: crit.n0, verdict: crit.verdict, state, momentum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn hypercube_weights() {
        let one = qubit_weight_system(1).unwrap();
        assert_eq!(one.distinct(), vec![WeightVec::from_ints(&[-1]), WeightVec::from_ints(&[1])]);
        let three = qubit_weight_system(3).unwrap();
        assert_eq!(three.distinct().len(), 8);
        assert_eq!(three.system.weyl_orbit(&WeightVec::from_ints(&[1, 1, 1]), 100).unwrap().len(), 8);
        assert!(qubit_weight_system(0).is_err() && qubit_weight_system(11).is_err());
    }

    #[test]
    fn n0_examples() {
        // ξ = ½α_1 is δ⊕0⊕… in fundamental coordinates.
        assert_eq!(n0_criterion(&WeightVec::from_ints(&[1, 0, 0])).unwrap().verdict, Verdict::Critical);
        assert_eq!(n0_criterion(&WeightVec::from_ints(&[1, 0])).unwrap().verdict, Verdict::NotCritical);
        let v = n0_criterion(&WeightVec::from_ints(&[1, 1, 0, 0])).unwrap();
        assert_eq!((v.n0, v.verdict), (2, Verdict::Critical));
        assert!(n0_criterion(&WeightVec::from_ints(&[1, 1])).is_err());
        assert!(n0_criterion(&WeightVec::from_ints(&[1, -1, 0])).is_err());
    }

    #[test]
    fn momentum_of_simple_states() {
        let top = QubitState::basis(3, 0).unwrap();
        assert_eq!(evaluate_momentum(&top).unwrap(), vec![[1.0, 0.0, 0.0]; 3]);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = QubitState::new(2, vec![Complex64::new(s, 0.0), Complex64::zero(), Complex64::zero(), Complex64::new(s, 0.0)]).unwrap();
        for m in evaluate_momentum(&bell).unwrap() {
            assert!(m.iter().all(|x| x.abs() < TOLERANCE));
        }
        // |+⟩ on one qubit lies off the torus.
        let plus = QubitState::new(1, vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)]).unwrap();
        let m = evaluate_momentum(&plus).unwrap()[0];
        assert!(m[0].abs() < TOLERANCE && (m[1] - 1.0).abs() < TOLERANCE);
    }

    #[test]
    fn polygon_closure() {
        for lengths in [vec![0.5, 0.5], vec![0.2, 0.3, 0.4], vec![1.0, 1.0, 1.0, 3.0], vec![0.1, 0.25, 0.25, 0.2, 0.2]] {
            let theta = close_polygon(&lengths).unwrap();
            let sum: Complex64 = lengths.iter().zip(&theta).map(|(l, t)| Complex64::from_polar(*l, *t)).sum();
            assert!(sum.norm() < 1e-12, "{lengths:?}");
        }
        assert!(close_polygon(&[0.7, 0.3]).is_none());
        assert!(close_polygon(&[1.0]).is_none());
    }

    #[test]
    fn three_qubit_critical_point() {
        let xi = WeightVec::from_ints(&[1, 0, 0]);
        let c = construct_critical_point(&xi).unwrap();
        assert_eq!(c.closure, Closure::SingleSide);
        assert!((c.state.norm() - 1.0).abs() < TOLERANCE);
        assert!(c.momentum_residual < TOLERANCE);
        assert!(c.torus_residual < TOLERANCE);
        assert!(construct_critical_point(&WeightVec::from_ints(&[1, 0])).is_err());
    }

    #[test]
    fn polygon_critical_point() {
        // ξ = (1/2)(δ⊕δ⊕−δ) + (1/2)(δ⊕−δ⊕δ) on three factors, two more factors idle.
        let xi = WeightVec::new(vec![rational::one(), Q::zero(), Q::zero(), Q::zero(), Q::zero()]);
        let c = construct_critical_point(&xi).unwrap();
        assert!(c.momentum_residual < TOLERANCE && c.torus_residual < TOLERANCE);
        let xi = WeightVec::new(vec![frac(1, 3), frac(1, 3), frac(1, 3), Q::zero(), Q::zero()]);
        let c = construct_critical_point(&xi).unwrap();
        assert_eq!(c.sides.len(), 3);
        assert!(matches!(c.closure, Closure::Polygon { residual, .. } if residual < TOLERANCE));
        assert!(c.momentum_residual < TOLERANCE && c.torus_residual < TOLERANCE);
    }

    #[test]
    fn wall_candidates_up_to_three_agree() {
        for n in 1..=3 {
            for w in wall_checks(n, &Budgets::default()).unwrap() {
                assert!(w.agrees(), "N = {n}: {w:?}");
            }
        }
    }

    #[test]
    fn four_qubit_wall_with_one_idle_factor_is_attained() {
        // Rows δ⊕δ⊕−δ, δ⊕−δ⊕δ, −δ⊕δ⊕δ on the first three factors; columns ±δ on the last.
        // Orthogonal columns of equal norm and rows of norm 1/3 give μ = (1/3, 1/3, 1/3, 0).
        let xi = WeightVec::new(vec![frac(1, 3), frac(1, 3), frac(1, 3), Q::zero()]);
        let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let rows = [[1, 1, -1], [1, -1, 1], [-1, 1, 1]];
        let mut a = vec![Complex64::zero(); 16];
        for (r, row) in rows.iter().enumerate() {
            for (col, last) in [1, -1].into_iter().enumerate() {
                let nu = WeightVec::from_ints(&[row[0], row[1], row[2], last]);
                a[basis_index(&nu)] = if col == 0 { Complex64::new(1.0, 0.0) } else { omega.powu(r as u32) };
            }
        }
        let state = QubitState::new(4, a).unwrap();
        assert!(momentum_distance(&state, &xi).unwrap() < TOLERANCE);
        let sys = qubit_system(4).unwrap();
        assert!(state.projective_distance(&state.torus_action(&sys, &xi, 0.7)) < TOLERANCE);
        assert_eq!(n0_criterion(&xi).unwrap().n0, 1);
    }
}
