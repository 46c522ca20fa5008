//! Weyl-polytope combinatorics at a dominant weight `λ`: the fence and its normal
//! `χ_0`, the simplicial subdivision of `C(Wλ)⁺`, the cone `Υ_λ` bounding the momentum
//! polytope, and the verdict on whether that bound is attained.
//!
//! All points are in fundamental-weight coordinates. Constraint normals are covectors,
//! so `normal · ν` equals the invariant pairing with the underlying weight.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::budget::Budgets;
use crate::catalog;
use crate::error::{Error, Result};
use crate::geomkernel::{self, HPolyhedron, Sense, VPolytope};
use crate::rational::{self, ser, Q};
use crate::rootsys::{Family, RootSystem, WeightVec};
use crate::weights::{self, Partition};

/// Parabolic orbits larger than this skip the LP cross-check of the closed form for `ξ_α`.
const XI_LP_CHECK_LIMIT: usize = 512;

fn check_lambda(sys: &RootSystem, lambda: &WeightVec) -> Result<Partition> {
    let p = weights::partition_simple_roots(sys, lambda)?;
    if lambda.is_zero() {
        return Err(Error::Invalid("λ must be nonzero".into()));
    }
    weights::check_faithful(sys, lambda)?;
    Ok(p)
}

/// The normal `χ_0` of the hyperplane through the root-fence: `(χ_0|α) = ||χ_0||²` on
/// `Π^λ` and `(χ_0|γ) = 0` on `Π_0`.
pub fn chi0(sys: &RootSystem, lambda: &WeightVec) -> Result<WeightVec> {
    let p = check_lambda(sys, lambda)?;
    // (χ|α_i) = χ_i (α_i|α_i)/2, so χ_i = 2/(α_i|α_i) on the support solves (χ|α) = 1.
    let mut coords = vec![Q::zero(); sys.rank()];
    for i in p.support() {
        coords[i] = rational::int(2) / &sys.gram()[i][i];
    }
    let chi = WeightVec::new(coords);
    let n2 = sys.norm2(&chi);
    Ok(chi.scaled(&(Q::one() / n2)))
}

/// The root-fence `Φ = W_λ Π^λ` of `λ` and the hyperplane through `λ − Φ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FenceData {
    pub lambda: WeightVec,
    pub partition: Partition,
    pub chi0: WeightVec,
    #[serde(serialize_with = "ser::q")]
    pub chi0_norm2: Q,
    pub root_fence: Vec<WeightVec>,
    pub vertices: Vec<WeightVec>,
    /// The yard of `λ` is `{ν ∈ C(Wλ) : yard_normal · ν > yard_level}`.
    #[serde(serialize_with = "ser::vec")]
    pub yard_normal: Vec<Q>,
    #[serde(serialize_with = "ser::q")]
    pub yard_level: Q,
}

impl FenceData {
    /// Whether `ν` lies strictly on `λ`'s side of the fence hyperplane.
    pub fn in_open_yard_halfspace(&self, nu: &WeightVec) -> bool {
        rational::dot(&self.yard_normal, &nu.coords) > self.yard_level
    }
}

pub fn fence(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<FenceData> {
    let partition = check_lambda(sys, lambda)?;
    let chi = chi0(sys, lambda)?;
    let n2 = sys.norm2(&chi);
    let seeds: Vec<WeightVec> = partition.support().iter().map(|&i| sys.simple_root(i).clone()).collect();
    let phi = sys.stabilizer_orbit(&seeds, &partition.zero, budgets.stabilizer)?;
    for &i in &partition.support() {
        assert_eq!(sys.pairing(&chi, sys.simple_root(i)), n2, "χ_0 on Π^λ");
    }
    for &i in &partition.zero {
        assert!(sys.pairing(&chi, sys.simple_root(i)).is_zero(), "χ_0 on Π_0");
    }
    let level = sys.pairing(lambda, &chi) - &n2;
    let vertices: Vec<WeightVec> = phi.iter().map(|f| lambda - f).collect();
    for v in &vertices {
        assert!(v.is_integral(), "fence vertex {v} is integral");
        assert_eq!(sys.pairing(v, &chi), level, "fence vertex {v} on the fence hyperplane");
    }
    Ok(FenceData {
        lambda: lambda.clone(),
        partition,
        yard_normal: sys.covector(&chi),
        chi0: chi,
        chi0_norm2: n2,
        root_fence: phi,
        vertices,
        yard_level: level,
    })
}

/// `η_α = λ − (λ_α/2) α`, the point where the edge from `λ` to `s_α λ` meets the wall of `α`.
pub fn eta(sys: &RootSystem, lambda: &WeightVec, alpha: usize) -> Result<WeightVec> {
    sys.check(lambda)?;
    if alpha >= sys.rank() {
        return Err(Error::NotSimple(alpha));
    }
    let c = &lambda.coords[alpha];
    if c.is_zero() {
        return Err(Error::Invalid(format!("simple root {} is orthogonal to λ", alpha + 1)));
    }
    Ok(lambda - &sys.simple_root(alpha).scaled(&(c / rational::int(2))))
}

/// `ξ_α`: the intersection of the ray through `ω_α` with the hull of `W_{Π∖{α}} λ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiPoint {
    pub root: usize,
    pub point: WeightVec,
    /// The parabolic orbit is `{λ}` alone.
    pub degenerate: bool,
    /// The closed form was confirmed by an LP ray–hull intersection.
    pub lp_checked: bool,
}

/// All of `W_{Π∖{α}} λ` pairs with `ω_α` as `λ` does, so the ray meets its hull at
/// `t = (λ|ω_α)/||ω_α||²`. The LP intersection is compared whenever the orbit is small.
pub fn xi_point(sys: &RootSystem, lambda: &WeightVec, alpha: usize, budgets: &Budgets) -> Result<XiPoint> {
    sys.check_dominant_integral(lambda)?;
    if alpha >= sys.rank() {
        return Err(Error::NotSimple(alpha));
    }
    let omega = sys.fundamental(alpha);
    let t = sys.pairing(lambda, &omega) / sys.norm2(&omega);
    let point = omega.scaled(&t);
    let gens: Vec<usize> = (0..sys.rank()).filter(|&j| j != alpha).collect();
    let orbit = sys.closure(std::slice::from_ref(lambda), &gens, budgets.orbit)?;
    let degenerate = orbit.len() == 1;
    let mut lp_checked = false;
    if orbit.len() <= XI_LP_CHECK_LIMIT {
        let hull = VPolytope::polytope(sys.rank(), orbit.iter().map(|v| v.coords.clone()).collect());
        let iv = geomkernel::ray_hull_intersection(&omega.coords, &hull)?
            .ok_or_else(|| Error::Invalid(format!("ray of ω_{} misses the parabolic hull", alpha + 1)))?;
        assert_eq!(iv.point(), Some(&t), "ξ_{} closed form", alpha + 1);
        lp_checked = true;
    }
    Ok(XiPoint { root: alpha, point, degenerate, lp_checked })
}

pub fn xi_set(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<Vec<XiPoint>> {
    (0..sys.rank()).map(|a| xi_point(sys, lambda, a, budgets)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Simplex {
    pub label: String,
    pub vertices: Vec<WeightVec>,
}

impl Simplex {
    pub fn hull(&self) -> VPolytope {
        let dim = self.vertices.first().map_or(0, |v| v.dim());
        VPolytope::polytope(dim, self.vertices.iter().map(|v| v.coords.clone()).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubdivisionReport {
    pub simplices: Vec<Simplex>,
    pub eta: Vec<(usize, WeightVec)>,
    pub xi: Vec<XiPoint>,
    pub note: Option<String>,
}

/// Simplices covering `C(Wλ)⁺`: `S_0 = C{0, Ξ}`, `S_λ = C{λ, Ξ}` and, for each
/// `α ∈ Π^λ`, `S_{α,λ} = C{λ, η_α, Ξ ∖ ξ_α}`. With a single `α` in `Π^λ`, `S_λ` is a
/// face of `S_0` and is omitted.
pub fn simplicial_subdivision(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<SubdivisionReport> {
    let p = check_lambda(sys, lambda)?;
    let xi = xi_set(sys, lambda, budgets)?;
    let support = p.support();
    let eta: Vec<(usize, WeightVec)> = support.iter().map(|&a| Ok((a, eta(sys, lambda, a)?))).collect::<Result<_>>()?;
    let xis: Vec<WeightVec> = xi.iter().map(|x| x.point.clone()).collect();
    let mut simplices = Vec::new();
    let with = |head: Vec<WeightVec>, skip: Option<usize>| -> Vec<WeightVec> {
        let mut v = head;
        v.extend(xis.iter().enumerate().filter(|&(b, _)| Some(b) != skip).map(|(_, x)| x.clone()));
        v
    };
    simplices.push(Simplex { label: "S_0".into(), vertices: with(vec![sys.zero()], None) });
    let note = if support.len() > 1 {
        simplices.push(Simplex { label: "S_λ".into(), vertices: with(vec![lambda.clone()], None) });
        None
    } else {
        Some("S_λ is a face of S_0".to_string())
    };
    for (a, e) in &eta {
        simplices.push(Simplex { label: format!("S_{{α{},λ}}", a + 1), vertices: with(vec![lambda.clone(), e.clone()], Some(*a)) });
    }
    Ok(SubdivisionReport { simplices, eta, xi, note })
}

/// `Υ_λ` and its dominant part.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Upsilon {
    /// Facets of `Cone_λ(Wλ)` followed by the yard cuts, deduplicated and sorted.
    pub h: HPolyhedron,
    pub cone_facets: usize,
    pub yard_cuts: usize,
}

/// `Υ_λ = {ν ∈ Cone_λ(Wλ) : (ν | w s_α χ_0) ≤ (λ | w s_α χ_0), α ∈ Π_1, w ∈ W_λ}`.
pub fn upsilon_h(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<Upsilon> {
    let f = fence(sys, lambda, budgets)?;
    let r = sys.rank();
    let cone = VPolytope::new(r, vec![lambda.coords.clone()], f.root_fence.iter().map(|phi| rational::neg(&phi.coords)).collect());
    let mut h = geomkernel::dd_convert_back(&cone, budgets)?;
    let cone_facets = h.constraints.len();
    let mut normals = Vec::new();
    for &a in &f.partition.one {
        let seed = sys.reflect_simple(a, &f.chi0);
        for u in sys.stabilizer_orbit(&[seed], &f.partition.zero, budgets.stabilizer)? {
            normals.push(u);
        }
    }
    normals.sort();
    normals.dedup();
    for u in &normals {
        h.push(sys.covector(u), sys.pairing(lambda, u), Sense::Le)?;
    }
    h.constraints.dedup();
    h.sort();
    h.constraints.dedup();
    let yard_cuts = h.constraints.len() - cone_facets.min(h.constraints.len());
    Ok(Upsilon { h, cone_facets, yard_cuts })
}

/// Adds the Weyl chamber `ν_i ≥ 0` to an H-description.
pub fn with_chamber(h: &HPolyhedron) -> HPolyhedron {
    let mut out = h.clone();
    for i in 0..h.dim {
        let mut n = vec![Q::zero(); h.dim];
        n[i] = -Q::one();
        out.push(n, Q::zero(), Sense::Le).expect("unit normal");
    }
    out.sort();
    out.constraints.dedup();
    out
}

/// Vertices of `Υ_λ ∩ t⁺`, which is bounded since it lies in `C(Wλ)⁺`.
pub fn upsilon_plus(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<VPolytope> {
    let u = upsilon_h(sys, lambda, budgets)?;
    let v = geomkernel::dd_convert(&with_chamber(&u.h), budgets)?;
    assert!(v.rays.is_empty(), "Υ_λ⁺ is bounded");
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroInUpsilon {
    /// `(λ|χ_0) ≥ ||χ_0||²`.
    pub inequality: bool,
    /// LP membership of the origin in the vertices of `Υ_λ⁺`.
    pub lp: bool,
}

impl ZeroInUpsilon {
    pub fn agree(&self) -> bool {
        self.inequality == self.lp
    }
}

pub fn zero_in_upsilon(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<ZeroInUpsilon> {
    let chi = chi0(sys, lambda)?;
    let inequality = sys.pairing(lambda, &chi) >= sys.norm2(&chi);
    let plus = upsilon_plus(sys, lambda, budgets)?;
    let lp = geomkernel::lp_membership(&vec![Q::zero(); sys.rank()], &plus).inside;
    Ok(ZeroInUpsilon { inequality, lp })
}

/// `η_β^γ`: where the edge from `λ` to `s_β(λ − γ)` meets the wall of `β`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeWallPoint {
    pub beta: usize,
    pub gamma: usize,
    pub point: WeightVec,
    /// The edge leaves `t⁺` before reaching the wall; `point` is then its exit point.
    pub flagged: bool,
}

pub fn eta_edge(sys: &RootSystem, lambda: &WeightVec, beta: usize, gamma: usize) -> Result<EdgeWallPoint> {
    sys.check_dominant_integral(lambda)?;
    let target = sys.reflect_simple(beta, &(lambda - sys.simple_root(gamma)));
    let dir = &target - lambda;
    // ν(t) = λ + t·dir; coordinate i reaches 0 at t = −λ_i / dir_i when dir_i < 0.
    let exit = |i: usize| -> Option<Q> { dir.coords[i].is_negative().then(|| -&lambda.coords[i] / &dir.coords[i]) };
    let mut t_exit = Q::one();
    for i in 0..sys.rank() {
        if let Some(t) = exit(i) {
            if t < t_exit {
                t_exit = t;
            }
        }
    }
    let at = |t: &Q| WeightVec::new(lambda.coords.iter().zip(&dir.coords).map(|(l, d)| l + t * d).collect());
    match exit(beta) {
        Some(t) if t <= t_exit => Ok(EdgeWallPoint { beta, gamma, point: at(&t), flagged: false }),
        _ => Ok(EdgeWallPoint { beta, gamma, point: at(&t_exit), flagged: true }),
    }
}

/// Candidate vertex list `{0, λ, η_α, η_β^γ, ξ_δ}` for a regular `λ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularInventory {
    pub points: Vec<(String, WeightVec)>,
    pub edge_points: Vec<EdgeWallPoint>,
    /// Extreme points of the hull of `points`, sorted.
    pub hull_vertices: Vec<WeightVec>,
}

pub fn regular_inventory(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<RegularInventory> {
    let p = check_lambda(sys, lambda)?;
    if !lambda.is_regular_dominant() {
        return Err(Error::Invalid(format!("{lambda} is not regular")));
    }
    let mut points = vec![("0".to_string(), sys.zero()), ("λ".to_string(), lambda.clone())];
    for &a in &p.rd {
        points.push((format!("η_{}", a + 1), eta(sys, lambda, a)?));
    }
    let mut edge_points = Vec::new();
    for &b in &p.one {
        for g in (0..sys.rank()).filter(|&g| g != b) {
            let e = eta_edge(sys, lambda, b, g)?;
            points.push((format!("η_{}^{}", b + 1, g + 1), e.point.clone()));
            edge_points.push(e);
        }
    }
    for x in xi_set(sys, lambda, budgets)? {
        points.push((format!("ξ_{}", x.root + 1), x.point));
    }
    let hull = VPolytope::polytope(sys.rank(), points.iter().map(|(_, v)| v.coords.clone()).collect()).irredundant();
    let hull_vertices = hull.vertices.into_iter().map(WeightVec::new).collect();
    Ok(RegularInventory { points, edge_points, hull_vertices })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiInImage {
    pub root: usize,
    pub verdict: Tri,
    pub levi: String,
    pub restricted: WeightVec,
    pub reason: String,
}

/// Whether `ξ_α ∈ μ(P)`, through the Levi subgroup with simple roots `Π ∖ {α}`: `ξ_α` is
/// central there, so it is attained exactly when the semisimple Levi part acting on the
/// face module has invariants.
pub fn xi_in_image(sys: &RootSystem, lambda: &WeightVec, alpha: usize, budgets: &Budgets) -> Result<XiInImage> {
    check_lambda(sys, lambda)?;
    if alpha >= sys.rank() {
        return Err(Error::NotSimple(alpha));
    }
    let rest: Vec<usize> = (0..sys.rank()).filter(|&j| j != alpha).collect();
    if rest.is_empty() || rest.iter().all(|&j| lambda.coords[j].is_zero()) {
        // The face module is the line through the highest weight vector.
        let xi = xi_point(sys, lambda, alpha, budgets)?;
        let on_ray = xi.point == *lambda;
        return Ok(XiInImage {
            root: alpha,
            verdict: if on_ray { Tri::Yes } else { Tri::Unknown },
            levi: "trivial".into(),
            restricted: WeightVec::zero(rest.len()),
            reason: if on_ray {
                "semisimple Levi part acts trivially and ξ_α = λ".into()
            } else {
                "semisimple Levi part acts trivially but ξ_α ≠ λ".into()
            },
        });
    }
    let (levi, map) = sys.subsystem(&rest)?;
    let restricted = WeightVec::new(map.iter().map(|&j| lambda.coords[j].clone()).collect());
    let unstable = catalog::unstable_irreducible(&levi, &restricted)?;
    Ok(XiInImage {
        root: alpha,
        verdict: if unstable { Tri::No } else { Tri::Yes },
        levi: levi.name(),
        restricted,
        reason: if unstable {
            "Levi module is in the table of representations without invariants".into()
        } else {
            "Levi module has invariants, so its momentum image contains the central ξ_α".into()
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    Exact,
    OuterBound,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentumVerdict {
    pub kind: VerdictKind,
    /// Vertices of `Υ_λ⁺`; equal to `μ(P)⁺` when `kind` is `Exact`.
    pub polytope: VPolytope,
    pub hypotheses: Vec<String>,
    pub failed: Vec<String>,
    pub notes: Vec<String>,
    pub xi_in_image: Vec<XiInImage>,
    pub inventory: Option<RegularInventory>,
    /// Whether the inventory's extreme points equal the DD vertices.
    pub inventory_matches: Option<bool>,
}

/// Natural representation of `SU_n` or `Sp_2n`, on which the group is transitive.
fn is_transitive(sys: &RootSystem, lambda: &WeightVec) -> bool {
    let [c] = sys.components() else { return false };
    let Some(l) = lambda.to_i64() else { return false };
    let unit = |i: usize| l.iter().enumerate().all(|(j, &x)| x == i64::from(j == i));
    match c.family {
        Family::A => unit(0) || unit(c.rank - 1),
        Family::C => unit(0),
        _ => false,
    }
}

pub fn momentum_polytope(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<MomentumVerdict> {
    let p = check_lambda(sys, lambda)?;
    let polytope = upsilon_plus(sys, lambda, budgets)?;
    let rank = sys.rank();
    let mut hypotheses = Vec::new();
    let mut failed = Vec::new();
    let mut notes = Vec::new();
    let mut inventory = None;
    let mut inventory_matches = None;
    let xi_img: Vec<XiInImage> = (0..rank).map(|a| xi_in_image(sys, lambda, a, budgets)).collect::<Result<_>>()?;

    let mut exact = false;
    if p.one.is_empty() {
        hypotheses.push("Π_1 = ∅: Wλ is root-distinct, so μ(P)⁺ = C(Wλ)⁺ = Υ_λ⁺".into());
        exact = true;
    } else {
        failed.push(format!("Π_1 = {{{}}} is nonempty, so μ(P) is not convex", list(&p.one)));
    }
    if lambda.is_regular_dominant() {
        if rank >= 3 {
            hypotheses.push("λ regular and rank ≥ 3: μ(P)⁺ = t⁺ ∩ Υ_λ".into());
            exact = true;
        } else {
            failed.push("regular-weight theorem needs rank ≥ 3".into());
        }
        let inv = regular_inventory(sys, lambda, budgets)?;
        let dd: Vec<WeightVec> = polytope.vertices.iter().cloned().map(WeightVec::new).collect();
        inventory_matches = Some(inv.hull_vertices == dd);
        if inv.hull_vertices != dd {
            notes.push("vertex inventory differs from the double-description vertices".into());
        }
        inventory = Some(inv);
    }
    if !exact {
        let mut ok = true;
        if rank <= 1 {
            failed.push("two-cones theorem needs rank > 1".into());
            ok = false;
        }
        for x in &xi_img {
            if x.verdict != Tri::Yes {
                failed.push(format!("ξ_{} ∈ μ(P) not established ({:?}: {})", x.root + 1, x.verdict, x.reason));
                ok = false;
            }
        }
        for &a in &p.one {
            for &g in &p.zero {
                let n = sys.cartan_integer(g, sys.simple_root(a))?;
                if n == rational::int(-1) {
                    failed.push(format!("n(γ{}, α{}) = −1", g + 1, a + 1));
                    ok = false;
                }
            }
        }
        if ok {
            hypotheses.push("Ξ(λ) ⊂ μ(P) and n(γ, α) ≠ −1 on Π_0 × Π_1: μ(P)⁺ = Υ_λ⁺".into());
            exact = true;
        }
    }
    if !exact && is_transitive(sys, lambda) {
        let only_lambda = polytope.vertices == vec![lambda.coords.clone()];
        if !only_lambda {
            notes.push("the group is transitive on P(V), so μ(P)⁺ = {λ} and the inclusion in Υ_λ⁺ is strict".into());
        }
    }
    Ok(MomentumVerdict {
        kind: if exact { VerdictKind::Exact } else { VerdictKind::OuterBound },
        polytope,
        hypotheses,
        failed,
        notes,
        xi_in_image: xi_img,
        inventory,
        inventory_matches,
    })
}

fn list(v: &[usize]) -> String {
    v.iter().map(|i| format!("α{}", i + 1)).collect::<Vec<_>>().join(", ")
}

/// Everything the polytope module computes for one `λ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolytopeReport {
    pub lambda: WeightVec,
    pub partition: Partition,
    pub chi0: WeightVec,
    pub fence: FenceData,
    pub upsilon: UpsilonReport,
    pub zero_in_upsilon: ZeroInUpsilon,
    pub verdict: MomentumVerdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct UpsilonReport {
    pub H: HPolyhedron,
    pub V: VPolytope,
}

pub fn report(sys: &RootSystem, lambda: &WeightVec, budgets: &Budgets) -> Result<PolytopeReport> {
    let fence = fence(sys, lambda, budgets)?;
    let u = upsilon_h(sys, lambda, budgets)?;
    let verdict = momentum_polytope(sys, lambda, budgets)?;
    Ok(PolytopeReport {
        lambda: lambda.clone(),
        partition: fence.partition.clone(),
        chi0: fence.chi0.clone(),
        upsilon: UpsilonReport { H: u.h, V: verdict.polytope.clone() },
        zero_in_upsilon: zero_in_upsilon(sys, lambda, budgets)?,
        fence,
        verdict,
    })
}
