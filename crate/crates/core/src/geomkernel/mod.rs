//! Exact rational convex geometry: LP membership, ray-hull intersection, double
//! description in both directions, and the closest point of a hull to the origin.
//!
//! Points are plain coordinate vectors. Only [`closest_point`] needs a metric, passed
//! as a positive definite Gram matrix; constraints use the plain dot product.

pub mod dd;
pub mod simplex;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, ser, Q};
use simplex::LpOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Sense {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

/// `normal · x ≤ offset` or `normal · x = offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Constraint {
    #[serde(serialize_with = "ser::vec")]
    pub normal: Vec<Q>,
    #[serde(serialize_with = "ser::q")]
    pub offset: Q,
    pub sense: Sense,
}

impl Constraint {
    pub fn value(&self, x: &[Q]) -> Q {
        rational::dot(&self.normal, x)
    }

    pub fn satisfied_by(&self, x: &[Q]) -> bool {
        let v = self.value(x);
        match self.sense {
            Sense::Le => v <= self.offset,
            Sense::Eq => v == self.offset,
        }
    }

    pub fn is_tight(&self, x: &[Q]) -> bool {
        self.value(x) == self.offset
    }

    /// Whether the recession direction `r` stays inside the constraint.
    pub fn admits_ray(&self, r: &[Q]) -> bool {
        let v = self.value(r);
        match self.sense {
            Sense::Le => !v.is_positive(),
            Sense::Eq => v.is_zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HPolyhedron {
    pub dim: usize,
    pub constraints: Vec<Constraint>,
}

impl HPolyhedron {
    pub fn new(dim: usize) -> Self {
        HPolyhedron { dim, constraints: Vec::new() }
    }

    pub fn push(&mut self, normal: Vec<Q>, offset: Q, sense: Sense) -> Result<()> {
        if normal.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: normal.len() });
        }
        if rational::is_zero_vec(&normal) {
            return Err(Error::Invalid("zero normal in constraint".into()));
        }
        self.constraints.push(Constraint { normal, offset, sense });
        Ok(())
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(x))
    }

    pub fn admits_ray(&self, r: &[Q]) -> bool {
        self.constraints.iter().all(|c| c.admits_ray(r))
    }

    pub fn sort(&mut self) {
        self.constraints.sort();
        self.constraints.dedup();
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VPolytope {
    pub dim: usize,
    #[serde(serialize_with = "ser::mat")]
    pub vertices: Vec<Vec<Q>>,
    #[serde(serialize_with = "ser::mat")]
    pub rays: Vec<Vec<Q>>,
}

impl VPolytope {
    /// Generators in canonical sorted order with exact duplicates removed.
    pub fn new(dim: usize, mut vertices: Vec<Vec<Q>>, rays: Vec<Vec<Q>>) -> Self {
        vertices.sort();
        vertices.dedup();
        let mut rays: Vec<Vec<Q>> = rays.iter().filter(|r| !rational::is_zero_vec(r)).map(|r| dd::primitive(r)).collect();
        rays.sort();
        rays.dedup();
        VPolytope { dim, vertices, rays }
    }

    pub fn polytope(dim: usize, vertices: Vec<Vec<Q>>) -> Self {
        VPolytope::new(dim, vertices, Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Drops generators lying in the hull of the others.
    pub fn irredundant(&self) -> VPolytope {
        let mut verts = self.vertices.clone();
        let mut i = 0;
        while i < verts.len() {
            let others: Vec<Vec<Q>> = verts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
            let rest = VPolytope { dim: self.dim, vertices: others.clone(), rays: self.rays.clone() };
            if !others.is_empty() && lp_membership(&verts[i], &rest).inside {
                verts.remove(i);
            } else {
                i += 1;
            }
        }
        let mut rays = self.rays.clone();
        let mut i = 0;
        while i < rays.len() {
            let others: Vec<Vec<Q>> = rays.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
            // A ray is redundant when it lies in the cone of the others.
            let cone = VPolytope { dim: self.dim, vertices: vec![vec![Q::zero(); self.dim]], rays: others.clone() };
            if lp_membership(&rays[i], &cone).inside {
                rays.remove(i);
            } else {
                i += 1;
            }
        }
        VPolytope { dim: self.dim, vertices: verts, rays }
    }
}

/// Outcome of a hull-membership test, with an exact certificate either way.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Membership {
    pub inside: bool,
    /// Convex coefficients on the vertices followed by conic ones on the rays.
    #[serde(serialize_with = "ser::vec")]
    pub coefficients: Vec<Q>,
    /// `(h, δ)` with `h·v ≤ δ` on vertices, `h·r ≤ 0` on rays and `h·p > δ`.
    pub separator: Option<Separator>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Separator {
    #[serde(serialize_with = "ser::vec")]
    pub normal: Vec<Q>,
    #[serde(serialize_with = "ser::q")]
    pub offset: Q,
}

impl Separator {
    pub fn separates(&self, p: &[Q], hull: &VPolytope) -> bool {
        hull.vertices.iter().all(|v| rational::dot(&self.normal, v) <= self.offset)
            && hull.rays.iter().all(|r| !rational::dot(&self.normal, r).is_positive())
            && rational::dot(&self.normal, p) > self.offset
    }
}

fn membership_system(p: &[Q], hull: &VPolytope) -> (Matrix, Vec<Q>) {
    let d = p.len();
    let mut a: Matrix = (0..d)
        .map(|k| hull.vertices.iter().chain(&hull.rays).map(|g| g[k].clone()).collect())
        .collect();
    let mut last: Vec<Q> = vec![Q::one(); hull.vertices.len()];
    last.extend(std::iter::repeat(Q::zero()).take(hull.rays.len()));
    a.push(last);
    let mut b = p.to_vec();
    b.push(Q::one());
    (a, b)
}

/// Exact test of `p ∈ conv(vertices) + cone(rays)` by two-phase simplex.
pub fn lp_membership(p: &[Q], hull: &VPolytope) -> Membership {
    assert_eq!(p.len(), hull.dim, "point dimension");
    let (a, b) = membership_system(p, hull);
    let n = hull.vertices.len() + hull.rays.len();
    match simplex::minimize(&a, &b, &vec![Q::zero(); n]) {
        LpOutcome::Optimal { x, .. } => Membership { inside: true, coefficients: x, separator: None },
        LpOutcome::Infeasible { farkas } => {
            debug_assert!(simplex::verify_farkas(&a, &b, &farkas));
            let d = p.len();
            let normal: Vec<Q> = farkas[..d].iter().map(|y| -y).collect();
            let sep = Separator { normal, offset: farkas[d].clone() };
            debug_assert!(sep.separates(p, hull));
            Membership { inside: false, coefficients: Vec::new(), separator: Some(sep) }
        }
        LpOutcome::Unbounded => unreachable!("feasibility problem has zero objective"),
    }
}

/// Closed parameter interval `{t : t·direction ∈ hull}`; `None` ends are infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    #[serde(serialize_with = "ser::opt_q")]
    pub lo: Option<Q>,
    #[serde(serialize_with = "ser::opt_q")]
    pub hi: Option<Q>,
}

impl Interval {
    pub fn point(&self) -> Option<&Q> {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }
}

/// Parameters `t` with `t·direction` in the hull, by LP minimization and maximization.
pub fn ray_hull_intersection(direction: &[Q], hull: &VPolytope) -> Result<Option<Interval>> {
    if rational::is_zero_vec(direction) {
        return Err(Error::Invalid("zero direction".into()));
    }
    if direction.len() != hull.dim {
        return Err(Error::Dimension { expected: hull.dim, got: direction.len() });
    }
    let d = hull.dim;
    let (mut a, b) = membership_system(&vec![Q::zero(); d], hull);
    // Free parameter t = t⁺ − t⁻ enters as −t·direction on the coordinate rows.
    for (k, row) in a.iter_mut().enumerate() {
        if k < d {
            row.push(-direction[k].clone());
            row.push(direction[k].clone());
        } else {
            row.push(Q::zero());
            row.push(Q::zero());
        }
    }
    let n = hull.vertices.len() + hull.rays.len();
    let objective = |sign: i64| {
        let mut c = vec![Q::zero(); n];
        c.push(rational::int(sign));
        c.push(rational::int(-sign));
        c
    };
    let lo = match simplex::minimize(&a, &b, &objective(1)) {
        LpOutcome::Infeasible { .. } => return Ok(None),
        LpOutcome::Unbounded => None,
        LpOutcome::Optimal { value, .. } => Some(value),
    };
    let hi = match simplex::minimize(&a, &b, &objective(-1)) {
        LpOutcome::Infeasible { .. } => return Ok(None),
        LpOutcome::Unbounded => None,
        LpOutcome::Optimal { value, .. } => Some(-value),
    };
    Ok(Some(Interval { lo, hi }))
}

/// Largest `ε ≤ 1` such that some point satisfies every constraint of every polyhedron
/// with slack `ε`. Positive exactly when the intersection has nonempty interior;
/// `None` when even `ε = 0` is infeasible. Equality constraints force `ε = 0`.
pub fn common_interior_slack(parts: &[&HPolyhedron]) -> Option<Q> {
    let d = parts.first().map_or(0, |h| h.dim);
    let rows: Vec<&Constraint> = parts.iter().flat_map(|h| h.constraints.iter()).collect();
    // Variables: x⁺ (d), x⁻ (d), ε, then one slack per inequality and one for ε ≤ 1.
    let n_le = rows.iter().filter(|c| c.sense == Sense::Le).count();
    let n = 2 * d + 1 + n_le + 1;
    let mut a: Matrix = Vec::new();
    let mut b = Vec::new();
    let mut slack = 2 * d + 1;
    for c in &rows {
        let mut row = vec![Q::zero(); n];
        for k in 0..d {
            row[k] = c.normal[k].clone();
            row[d + k] = -c.normal[k].clone();
        }
        if c.sense == Sense::Le {
            row[2 * d] = Q::one();
            row[slack] = Q::one();
            slack += 1;
        }
        a.push(row);
        b.push(c.offset.clone());
    }
    let mut cap = vec![Q::zero(); n];
    cap[2 * d] = Q::one();
    cap[n - 1] = Q::one();
    a.push(cap);
    b.push(Q::one());
    let mut c = vec![Q::zero(); n];
    c[2 * d] = -Q::one();
    match simplex::minimize(&a, &b, &c) {
        LpOutcome::Optimal { value, .. } => Some(-value),
        LpOutcome::Infeasible { .. } => None,
        LpOutcome::Unbounded => unreachable!("ε is capped"),
    }
}

fn check_dd_dimension(dim: usize, budgets: &Budgets) -> Result<()> {
    if dim > budgets.dd_dimension {
        return Err(Error::Budget { what: "double description dimension", limit: budgets.dd_dimension as u64, scanned: dim as u64 });
    }
    Ok(())
}

/// Vertices and rays of an H-polyhedron. Lines of the recession cone are returned as
/// opposite ray pairs, and the vertices are then points of the minimal faces.
pub fn dd_convert(h: &HPolyhedron, budgets: &Budgets) -> Result<VPolytope> {
    let d = h.dim;
    check_dd_dimension(d, budgets)?;
    // Homogenize: a·x ≤ b becomes (a, −b)·(x, t) ≤ 0, plus t ≥ 0.
    let mut ineq: Matrix = Vec::new();
    let mut eq: Matrix = Vec::new();
    for c in &h.constraints {
        let mut row = c.normal.clone();
        row.push(-c.offset.clone());
        match c.sense {
            Sense::Le => ineq.push(row),
            Sense::Eq => eq.push(row),
        }
    }
    let mut t_row = vec![Q::zero(); d + 1];
    t_row[d] = -Q::one();
    ineq.push(t_row);
    let g = dd::cone_generators(&ineq, &eq, d + 1, budgets.dd_rays)?;
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for r in &g.rays {
        let t = &r[d];
        if t.is_positive() {
            vertices.push(r[..d].iter().map(|x| x / t).collect::<Vec<Q>>());
        } else {
            rays.push(r[..d].to_vec());
        }
    }
    if vertices.is_empty() {
        return Ok(VPolytope::new(d, Vec::new(), Vec::new()));
    }
    for l in &g.lines {
        debug_assert!(l[d].is_zero());
        rays.push(l[..d].to_vec());
        rays.push(rational::neg(&l[..d]));
    }
    Ok(VPolytope::new(d, vertices, rays))
}

/// Facet description of `conv(vertices) + cone(rays)`, via generators of its polar cone.
pub fn dd_convert_back(v: &VPolytope, budgets: &Budgets) -> Result<HPolyhedron> {
    let d = v.dim;
    check_dd_dimension(d, budgets)?;
    if v.vertices.is_empty() {
        return Err(Error::Invalid("cannot describe an empty generator set".into()));
    }
    // (a, b) with a·v − b ≤ 0 for vertices and a·r ≤ 0 for rays.
    let mut ineq: Matrix = Vec::new();
    for p in &v.vertices {
        let mut row = p.clone();
        row.push(-Q::one());
        ineq.push(row);
    }
    for r in &v.rays {
        let mut row = r.clone();
        row.push(Q::zero());
        ineq.push(row);
    }
    let g = dd::cone_generators(&ineq, &Vec::new(), d + 1, budgets.dd_rays)?;
    let mut h = HPolyhedron::new(d);
    for l in &g.lines {
        if !rational::is_zero_vec(&l[..d]) {
            h.push(l[..d].to_vec(), l[d].clone(), Sense::Eq)?;
        }
    }
    for r in &g.rays {
        if !rational::is_zero_vec(&r[..d]) {
            h.push(r[..d].to_vec(), r[d].clone(), Sense::Le)?;
        }
    }
    h.sort();
    Ok(h)
}

/// Nearest point of a finite hull to the origin, with its supporting face.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosestPoint {
    #[serde(serialize_with = "ser::vec")]
    pub point: Vec<Q>,
    /// One coefficient per input point; duplicates after the first get zero.
    #[serde(serialize_with = "ser::vec")]
    pub coefficients: Vec<Q>,
    /// Indices of the input points with positive coefficient, ascending.
    pub support: Vec<usize>,
    #[serde(serialize_with = "ser::q")]
    pub norm2: Q,
}

impl ClosestPoint {
    /// Exact optimality certificate: `(ξ|m) = ‖ξ‖²` on the support and `≥` elsewhere.
    pub fn certify(&self, points: &[Vec<Q>], gram: &Matrix) -> bool {
        let cov = linalg::vec_mat(&self.point, gram);
        let coef_sum: Q = self.coefficients.iter().sum();
        coef_sum.is_one()
            && self.coefficients.iter().all(|c| !c.is_negative())
            && points.iter().enumerate().all(|(i, m)| {
                let v = rational::dot(&cov, m);
                if self.support.contains(&i) {
                    v == self.norm2
                } else {
                    v >= self.norm2
                }
            })
    }
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it returns `true`.
pub fn find_subset<T>(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if let Some(t) = f(&idx) {
            return Some(t);
        }
        let i = (0..k).rev().find(|&i| idx[i] < n - k + i)?;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Projection of the origin onto the affine hull of `pts`, given their mutual Gram
/// matrix: solves `Σ_j a_j (m_i|m_j) = c`, `Σ a_j = 1`. `None` if affinely dependent.
pub fn affine_projection(gram_of_points: &Matrix) -> Option<(Vec<Q>, Q)> {
    let k = gram_of_points.len();
    let mut a: Matrix = gram_of_points
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(-Q::one());
            r
        })
        .collect();
    let mut last = vec![Q::one(); k];
    last.push(Q::zero());
    a.push(last);
    let mut b = vec![Q::zero(); k];
    b.push(Q::one());
    let sol = linalg::solve(&a, &b)?;
    let c = sol[k].clone();
    Some((sol[..k].to_vec(), c))
}

/// Closest point of `conv(points)` to the origin under the metric `gram`.
///
/// Affinely independent subsets are scanned by size and then lexicographically; the
/// first projection with positive coefficients that passes the optimality certificate
/// is the unique minimizer, so ties go to the smallest, then lexicographically least,
/// support.
pub fn closest_point(points: &[Vec<Q>], gram: &Matrix) -> ClosestPoint {
    assert!(!points.is_empty(), "closest_point needs at least one point");
    let d = points[0].len();
    let mut unique: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !unique.iter().any(|&j| &points[j] == p) {
            unique.push(i);
        }
    }
    let covs: Vec<Vec<Q>> = unique.iter().map(|&i| linalg::vec_mat(&points[i], gram)).collect();
    let pg: Matrix = covs
        .iter()
        .map(|c| unique.iter().map(|&j| rational::dot(c, &points[j])).collect())
        .collect();
    let u = unique.len();
    for k in 1..=u.min(d + 1) {
        let found = find_subset(u, k, |s| {
            let sub: Matrix = s.iter().map(|&i| s.iter().map(|&j| pg[i][j].clone()).collect()).collect();
            let (a, c) = affine_projection(&sub)?;
            if a.iter().any(|x| !x.is_positive()) {
                return None;
            }
            // (ξ|m_j) = Σ_i a_i (m_i|m_j) must be ≥ c for every point.
            let optimal = (0..u).all(|j| {
                let v: Q = s.iter().zip(&a).map(|(&i, ai)| ai * &pg[i][j]).sum();
                v >= c
            });
            optimal.then(|| (s.to_vec(), a, c))
        });
        if let Some((s, a, c)) = found {
            let mut coefficients = vec![Q::zero(); points.len()];
            let mut point = vec![Q::zero(); d];
            let mut support = Vec::new();
            for (&i, ai) in s.iter().zip(&a) {
                let orig = unique[i];
                coefficients[orig] = ai.clone();
                support.push(orig);
                for (x, y) in point.iter_mut().zip(&points[orig]) {
                    *x += ai * y;
                }
            }
            support.sort_unstable();
            return ClosestPoint { point, coefficients, support, norm2: c };
        }
    }
    unreachable!("the minimizer lies in the relative interior of a simplex face")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, ints};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Q>> {
        v.iter().map(|p| ints(p)).collect()
    }

    #[test]
    fn closest_point_examples() {
        let g = linalg::identity(2);
        let one = closest_point(&pts(&[&[3, 4]]), &g);
        assert_eq!(one.point, ints(&[3, 4]));
        assert_eq!(one.coefficients, vec![int(1)]);
        let sym = closest_point(&pts(&[&[1, 2], &[-1, -2]]), &g);
        assert!(rational::is_zero_vec(&sym.point));
        assert_eq!(sym.coefficients, vec![frac(1, 2), frac(1, 2)]);
        let seg = closest_point(&pts(&[&[2, 0], &[0, 1]]), &g);
        assert_eq!(seg.point, vec![frac(2, 5), frac(4, 5)]);
        assert_eq!(seg.coefficients, vec![frac(1, 5), frac(4, 5)]);
        assert_eq!(seg.norm2, frac(4, 5));
        assert!(seg.certify(&pts(&[&[2, 0], &[0, 1]]), &g));
    }

    #[test]
    fn closest_point_degenerate_inputs() {
        let g = linalg::identity(2);
        let z = closest_point(&pts(&[&[0, 0], &[0, 0]]), &g);
        assert_eq!(z.coefficients, vec![int(1), int(0)]);
        assert_eq!(z.support, vec![0]);
        let dup = closest_point(&pts(&[&[1, 1], &[1, 1], &[2, 0]]), &g);
        assert_eq!(dup.support, vec![0]);
        // Square around the origin: both diagonals contain 0; the first wins.
        let sq = closest_point(&pts(&[&[1, 1], &[-1, 1], &[-1, -1], &[1, -1]]), &g);
        assert_eq!(sq.support, vec![0, 2]);
    }

    #[test]
    fn closest_point_uses_metric() {
        // Gram of A1xA1 fundamental weights scaled: ‖e1‖² = 1, ‖e2‖² = 4.
        let g: Matrix = vec![ints(&[1, 0]), ints(&[0, 4])];
        let cp = closest_point(&pts(&[&[2, 0], &[0, 1]]), &g);
        assert!(cp.certify(&pts(&[&[2, 0], &[0, 1]]), &g));
        assert_eq!(cp.norm2, int(2));
    }

    #[test]
    fn membership_examples() {
        let tri = VPolytope::polytope(2, pts(&[&[0, 0], &[1, 0], &[0, 1]]));
        assert!(lp_membership(&ints(&[1, 0]), &tri).inside);
        let out = lp_membership(&ints(&[1, 1]), &tri);
        assert!(!out.inside);
        assert!(out.separator.unwrap().separates(&ints(&[1, 1]), &tri));
        let cone = VPolytope::new(2, pts(&[&[0, 0]]), pts(&[&[1, 0], &[0, 1]]));
        assert!(lp_membership(&ints(&[1, 1]), &cone).inside);
        assert!(!lp_membership(&ints(&[-1, 1]), &cone).inside);
    }

    #[test]
    fn ray_hull_examples() {
        let single = VPolytope::polytope(1, pts(&[&[1]]));
        let iv = ray_hull_intersection(&ints(&[1]), &single).unwrap().unwrap();
        assert_eq!(iv.point(), Some(&int(1)));
        // A2: ω_1 and −ω_1+ω_2 meet the ray R⁺ω_2 at ½ω_2.
        let seg = VPolytope::polytope(2, pts(&[&[1, 0], &[-1, 1]]));
        let iv = ray_hull_intersection(&ints(&[0, 1]), &seg).unwrap().unwrap();
        assert_eq!(iv.point(), Some(&frac(1, 2)));
        let away = VPolytope::polytope(2, pts(&[&[1, 1], &[2, 1]]));
        assert_eq!(ray_hull_intersection(&ints(&[0, 1]), &away).unwrap(), None);
        let half = VPolytope::new(1, pts(&[&[1]]), pts(&[&[1]]));
        let iv = ray_hull_intersection(&ints(&[1]), &half).unwrap().unwrap();
        assert_eq!(iv, Interval { lo: Some(int(1)), hi: None });
    }

    #[test]
    fn dd_examples() {
        let b = Budgets::default();
        let mut sq = HPolyhedron::new(2);
        sq.push(ints(&[-1, 0]), int(0), Sense::Le).unwrap();
        sq.push(ints(&[1, 0]), int(1), Sense::Le).unwrap();
        sq.push(ints(&[0, -1]), int(0), Sense::Le).unwrap();
        sq.push(ints(&[0, 1]), int(1), Sense::Le).unwrap();
        let v = dd_convert(&sq, &b).unwrap();
        assert_eq!(v.vertices, pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
        assert!(v.rays.is_empty());
        let back = dd_convert_back(&v, &b).unwrap();
        let mut want = sq.clone();
        want.sort();
        assert_eq!(back, want);

        let mut half = HPolyhedron::new(1);
        half.push(ints(&[-1]), int(0), Sense::Le).unwrap();
        let v = dd_convert(&half, &b).unwrap();
        assert_eq!(v.vertices, pts(&[&[0]]));
        assert_eq!(v.rays, pts(&[&[1]]));
    }

    #[test]
    fn dd_handles_empty_and_equalities() {
        let b = Budgets::default();
        let mut e = HPolyhedron::new(1);
        e.push(ints(&[1]), int(-1), Sense::Le).unwrap();
        e.push(ints(&[-1]), int(0), Sense::Le).unwrap();
        assert!(dd_convert(&e, &b).unwrap().is_empty());
        // Segment x + y = 1, x, y ≥ 0.
        let mut s = HPolyhedron::new(2);
        s.push(ints(&[1, 1]), int(1), Sense::Eq).unwrap();
        s.push(ints(&[-1, 0]), int(0), Sense::Le).unwrap();
        s.push(ints(&[0, -1]), int(0), Sense::Le).unwrap();
        let v = dd_convert(&s, &b).unwrap();
        assert_eq!(v.vertices, pts(&[&[0, 1], &[1, 0]]));
        let back = dd_convert_back(&v, &b).unwrap();
        assert!(back.constraints.iter().any(|c| c.sense == Sense::Eq));
        for p in [ints(&[0, 1]), vec![frac(1, 3), frac(2, 3)]] {
            assert!(back.contains(&p));
        }
        assert!(!back.contains(&ints(&[1, 1])));
    }

    #[test]
    fn dd_dimension_cap() {
        let b = Budgets { dd_dimension: 1, ..Budgets::default() };
        assert!(dd_convert(&HPolyhedron::new(2), &b).unwrap_err().is_budget());
    }

    #[test]
    fn subsets_in_lex_order() {
        let mut seen = Vec::new();
        let r: Option<()> = find_subset(4, 2, |s| {
            seen.push(s.to_vec());
            None
        });
        assert!(r.is_none());
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn irredundant_drops_interior_points() {
        let v = VPolytope::polytope(1, pts(&[&[0], &[1], &[2]]));
        assert_eq!(v.irredundant().vertices, pts(&[&[0], &[2]]));
    }
}
