//! Classification tables: irreducible representations without invariants, the
//! reducible multiplicity-free exception, and rs-continuous varieties with the
//! resulting rank of semistability.
//!
//! Matching is syntactic on families, ranks and highest weights. Each simple component
//! carrying a nonzero weight is recognized as a classical factor (`su`, `so`, `sp`,
//! `lambda2`, `spin10`) up to diagram automorphisms, so duals match automatically.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational;
use crate::rootsys::{Family, RootSystem, WeightVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Su,
    So,
    Sp,
    Lambda2,
    Spin10,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct DimExpr {
    #[serde(default)]
    pub var: Option<String>,
    #[serde(default = "one_i64")]
    pub mul: i64,
    #[serde(default)]
    pub add: i64,
}

fn one_i64() -> i64 {
    1
}

impl DimExpr {
    fn eval(&self, vars: &BTreeMap<String, i64>) -> Option<i64> {
        match &self.var {
            None => Some(self.add),
            Some(v) => vars.get(v).map(|x| self.mul * x + self.add),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct FactorPattern {
    pub kind: Kind,
    pub dim: DimExpr,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Condition {
    pub expr: BTreeMap<String, i64>,
    pub op: String,
    pub value: i64,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ParityCondition {
    pub var: String,
    pub odd: bool,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct UnstableRow {
    pub id: String,
    pub label: String,
    pub factors: Vec<FactorPattern>,
    pub conditions: Vec<Condition>,
    #[serde(default)]
    pub parity: Vec<ParityCondition>,
}

impl UnstableRow {
    fn holds(&self, vars: &BTreeMap<String, i64>) -> bool {
        let lin = self.conditions.iter().all(|c| {
            let Some(lhs) = c.expr.iter().map(|(v, k)| vars.get(v).map(|x| k * x)).sum::<Option<i64>>() else {
                return false;
            };
            match c.op.as_str() {
                ">=" => lhs >= c.value,
                ">" => lhs > c.value,
                "<=" => lhs <= c.value,
                "<" => lhs < c.value,
                "=" => lhs == c.value,
                _ => false,
            }
        });
        lin && self.parity.iter().all(|p| vars.get(&p.var).is_some_and(|x| (x % 2 != 0) == p.odd))
    }

    fn variables(&self) -> Vec<String> {
        let mut v: Vec<String> = self.factors.iter().filter_map(|f| f.dim.var.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DegreeRule {
    Const { value: i64 },
    Var { var: String, #[serde(default = "one_i64")] div: i64 },
    Parity { var: String, odd: Box<DegreeRule>, even: Box<DegreeRule> },
    Equal { a: String, b: String, equal: Box<DegreeRule>, different: Box<DegreeRule> },
}

impl DegreeRule {
    pub fn eval(&self, vars: &BTreeMap<String, i64>) -> Option<i64> {
        match self {
            DegreeRule::Const { value } => Some(*value),
            DegreeRule::Var { var, div } => vars.get(var).map(|x| x / div),
            DegreeRule::Parity { var, odd, even } => {
                let x = vars.get(var)?;
                if x % 2 != 0 {
                    odd.eval(vars)
                } else {
                    even.eval(vars)
                }
            }
            DegreeRule::Equal { a, b, equal, different } => {
                if vars.get(a)? == vars.get(b)? {
                    equal.eval(vars)
                } else {
                    different.eval(vars)
                }
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct RsRow {
    pub id: String,
    pub notation: String,
    pub ambient: String,
    pub group: String,
    pub max_rank: String,
    pub pattern: String,
    pub d1: DegreeRule,
}

#[derive(Deserialize)]
struct UnstableFile {
    rows: Vec<UnstableRow>,
}

#[derive(Deserialize)]
struct RsFile {
    rows: Vec<RsRow>,
}

#[derive(Serialize)]
pub struct Catalog {
    pub unstable: Vec<UnstableRow>,
    pub rs_continuous: Vec<RsRow>,
}

impl Catalog {
    /// The embedded tables, parsed once.
    pub fn get() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            let u: UnstableFile =
                serde_json::from_str(include_str!("../data/unstable.json")).expect("embedded unstable table parses");
            let r: RsFile =
                serde_json::from_str(include_str!("../data/rs_continuous.json")).expect("embedded rs table parses");
            Catalog { unstable: u.rows, rs_continuous: r.rows }
        })
    }
}

/// A simple component carrying a nonzero weight, as `(component index, local coords)`.
fn nontrivial_parts(sys: &RootSystem, lambda: &WeightVec) -> Result<Vec<(usize, Vec<i64>)>> {
    sys.check_dominant_integral(lambda)?;
    let mut out = Vec::new();
    for (ci, c) in sys.components().iter().enumerate() {
        let local: Vec<i64> = c.indices().map(|i| rational::to_i64(&lambda.coords[i]).expect("integral")).collect();
        if local.iter().any(|&x| x != 0) {
            out.push((ci, local));
        }
    }
    Ok(out)
}

/// Classical factors a component with the given local highest weight can stand for.
pub fn recognize(family: Family, rank: usize, local: &[i64]) -> Vec<(Kind, i64)> {
    let nz: Vec<(usize, i64)> = local.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
    let r = rank;
    let mut out = Vec::new();
    if family == Family::A && r == 1 && nz == [(0, 2)] {
        out.push((Kind::So, 3));
    }
    if nz.len() != 1 || nz[0].1 != 1 {
        return out;
    }
    let i = nz[0].0;
    match family {
        Family::A => {
            let n = r as i64 + 1;
            if i == 0 || i == r - 1 {
                out.push((Kind::Su, n));
            }
            if n >= 3 && (i == 1 || i + 3 == n as usize) {
                out.push((Kind::Lambda2, n));
            }
            if r == 1 {
                out.push((Kind::Sp, 2));
            }
            if r == 3 && i == 1 {
                out.push((Kind::So, 6));
            }
        }
        Family::B => {
            if i == 0 {
                out.push((Kind::So, 2 * r as i64 + 1));
            }
            if r == 2 && i == 1 {
                out.push((Kind::Sp, 4));
            }
        }
        Family::C => {
            if i == 0 {
                out.push((Kind::Sp, 2 * r as i64));
            }
            if r == 2 && i == 1 {
                out.push((Kind::So, 5));
            }
        }
        Family::D => {
            if i == 0 || (r == 4 && (i == 2 || i == 3)) {
                out.push((Kind::So, 2 * r as i64));
            }
            if r == 5 && (i == 3 || i == 4) {
                out.push((Kind::Spin10, 10));
            }
        }
        _ => {}
    }
    out.sort();
    out.dedup();
    out
}

/// A successful table match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnstableMatch {
    pub row: String,
    pub label: String,
    pub bindings: BTreeMap<String, i64>,
}

struct Matcher<'a> {
    row: &'a UnstableRow,
    parts: Vec<(Family, usize, Vec<i64>)>,
}

impl Matcher<'_> {
    fn run(&self) -> Option<BTreeMap<String, i64>> {
        let mut used = vec![false; self.parts.len()];
        let mut slots = vec![false; self.row.factors.len()];
        self.step(&mut used, &mut slots, &mut BTreeMap::new())
    }

    fn bind(&self, slot: usize, dim: i64, vars: &mut BTreeMap<String, i64>) -> Option<Option<String>> {
        let e = &self.row.factors[slot].dim;
        match &e.var {
            None => (e.add == dim).then_some(None),
            Some(v) => {
                let num = dim - e.add;
                if e.mul == 0 || num % e.mul != 0 {
                    return None;
                }
                let x = num / e.mul;
                match vars.get(v) {
                    Some(&y) if y != x => None,
                    Some(_) => Some(None),
                    None => {
                        vars.insert(v.clone(), x);
                        Some(Some(v.clone()))
                    }
                }
            }
        }
    }

    fn step(&self, used: &mut [bool], slots: &mut [bool], vars: &mut BTreeMap<String, i64>) -> Option<BTreeMap<String, i64>> {
        let Some(p) = used.iter().position(|u| !u) else { return self.finish(slots, vars) };
        let (fam, rank, local) = &self.parts[p];
        let mut options: Vec<(Kind, i64, Option<usize>)> =
            recognize(*fam, *rank, local).into_iter().map(|(k, d)| (k, d, None)).collect();
        // Two SU_2 factors with their natural weights form SO_4.
        if *fam == Family::A && *rank == 1 && local == &[1] {
            for (q, (f2, r2, l2)) in self.parts.iter().enumerate().skip(p + 1) {
                if !used[q] && *f2 == Family::A && *r2 == 1 && l2 == &[1] {
                    options.push((Kind::So, 4, Some(q)));
                }
            }
        }
        for (kind, dim, partner) in options {
            for s in 0..slots.len() {
                if slots[s] || self.row.factors[s].kind != kind {
                    continue;
                }
                let mut trial = vars.clone();
                if self.bind(s, dim, &mut trial).is_none() {
                    continue;
                }
                slots[s] = true;
                used[p] = true;
                if let Some(q) = partner {
                    used[q] = true;
                }
                let r = self.step(used, slots, &mut trial);
                slots[s] = false;
                used[p] = false;
                if let Some(q) = partner {
                    used[q] = false;
                }
                if r.is_some() {
                    return r;
                }
            }
        }
        None
    }

    /// Unfilled slots must be `su` factors of dimension 1, i.e. trivial groups.
    fn finish(&self, slots: &[bool], vars: &BTreeMap<String, i64>) -> Option<BTreeMap<String, i64>> {
        let mut vars = vars.clone();
        for (s, filled) in slots.iter().enumerate() {
            if *filled {
                continue;
            }
            if self.row.factors[s].kind != Kind::Su {
                return None;
            }
            self.bind(s, 1, &mut vars)?;
        }
        let all_bound = self.row.variables().iter().all(|v| vars.contains_key(v));
        (all_bound && self.row.holds(&vars)).then_some(vars)
    }
}

/// Table row matching `(system, λ)`, ignoring components on which `λ` vanishes.
pub fn match_unstable(sys: &RootSystem, lambda: &WeightVec) -> Result<Option<UnstableMatch>> {
    let parts = nontrivial_parts(sys, lambda)?;
    if parts.is_empty() {
        return Ok(None);
    }
    // Every listed representation is a product of at most three fundamental weights on
    // distinct components, with SO_3 = A1 at 2ω as the one non-fundamental factor.
    let shaped = parts.len() <= 3
        && parts.iter().all(|(ci, local)| {
            let c = sys.components()[*ci];
            let nz: Vec<i64> = local.iter().copied().filter(|&x| x != 0).collect();
            nz == [1] || (c.family == Family::A && c.rank == 1 && nz == [2])
        });
    if !shaped {
        return Ok(None);
    }
    let parts: Vec<(Family, usize, Vec<i64>)> = parts
        .into_iter()
        .map(|(ci, local)| {
            let c = sys.components()[ci];
            (c.family, c.rank, local)
        })
        .collect();
    for row in &Catalog::get().unstable {
        let m = Matcher { row, parts: parts.clone() };
        if let Some(bindings) = m.run() {
            return Ok(Some(UnstableMatch { row: row.id.clone(), label: row.label.clone(), bindings }));
        }
    }
    Ok(None)
}

/// Whether `V_λ` has no nonconstant invariants, i.e. `0 ∉ μ(P(V_λ))`, by the table.
pub fn unstable_irreducible(sys: &RootSystem, lambda: &WeightVec) -> Result<bool> {
    if match_unstable(sys, lambda)?.is_some() {
        return Ok(true);
    }
    let dual = sys.dual_highest_weight(lambda)?;
    Ok(match_unstable(sys, &dual)?.is_some())
}

/// The reducible multiplicity-free case: `SU_{2n+1}` on `(C^{2n+1})* ⊕ Λ²C^{2n+1}` or
/// its dual, `n ≥ 2` (at `n = 1` the two summands coincide).
pub fn reducible_multfree_unstable(sys: &RootSystem, summands: &[WeightVec]) -> Result<bool> {
    for s in summands {
        sys.check_dominant_integral(s)?;
    }
    let mut distinct: Vec<&WeightVec> = summands.iter().collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != summands.len() || summands.len() != 2 {
        return Ok(false);
    }
    let comps = sys.components();
    if comps.len() != 1 || comps[0].family != Family::A || comps[0].rank % 2 != 0 || comps[0].rank < 4 {
        return Ok(false);
    }
    let r = comps[0].rank;
    let fund = |i: usize| sys.fundamental(i);
    let mut pair = vec![fund(r - 1), fund(1)];
    pair.sort();
    let mut dual_pair = vec![fund(0), fund(r - 2)];
    dual_pair.sort();
    let got: Vec<WeightVec> = distinct.into_iter().cloned().collect();
    Ok(got == pair || got == dual_pair)
}

/// Recognition of a single irreducible against an rs-continuous row pattern.
fn match_rs_pattern(pattern: &str, sys: &RootSystem, parts: &[(usize, Vec<i64>)]) -> Option<BTreeMap<String, i64>> {
    let single = |f: Family| -> Option<(usize, &Vec<i64>)> {
        if parts.len() != 1 {
            return None;
        }
        let c = sys.components()[parts[0].0];
        (c.family == f).then_some((c.rank, &parts[0].1))
    };
    let is_unit = |local: &[i64], i: usize| local.iter().enumerate().all(|(j, &x)| x == if j == i { 1 } else { 0 });
    let vars = |pairs: &[(&str, i64)]| pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>();
    match pattern {
        "natural_sl" => {
            let (r, l) = single(Family::A)?;
            (is_unit(l, 0) || is_unit(l, r - 1)).then(|| vars(&[("n", r as i64 + 1)]))
        }
        "sym2_sl" => {
            let (r, l) = single(Family::A)?;
            let two = |i: usize| l.iter().enumerate().all(|(j, &x)| x == if j == i { 2 } else { 0 });
            (two(0) || two(r - 1)).then(|| vars(&[("n", r as i64 + 1)]))
        }
        "wedge2_sl" => {
            let (r, l) = single(Family::A)?;
            (r >= 3 && (is_unit(l, 1) || is_unit(l, r - 2))).then(|| vars(&[("n", r as i64 + 1)]))
        }
        "adjoint_sl" => {
            let (r, l) = single(Family::A)?;
            let adj = r >= 2 && l.iter().enumerate().all(|(j, &x)| x == if j == 0 || j == r - 1 { 1 } else { 0 });
            adj.then(|| vars(&[("n", r as i64 + 1)]))
        }
        "natural_so" => {
            if parts.len() == 2 {
                let both = parts.iter().all(|(ci, l)| {
                    let c = sys.components()[*ci];
                    c.family == Family::A && c.rank == 1 && l == &[1]
                });
                return both.then(|| vars(&[("n", 4)]));
            }
            if parts.len() != 1 {
                return None;
            }
            let c = sys.components()[parts[0].0];
            recognize(c.family, c.rank, &parts[0].1)
                .into_iter()
                .find(|(k, _)| *k == Kind::So)
                .map(|(_, n)| vars(&[("n", n)]))
        }
        "half_spin10" => {
            let (r, l) = single(Family::D)?;
            (r == 5 && (is_unit(l, 3) || is_unit(l, 4))).then(BTreeMap::new)
        }
        "wedge2_sp" => {
            let (r, l) = single(Family::C)?;
            is_unit(l, 1).then(|| vars(&[("n", r as i64)]))
        }
        "minuscule_e6" => {
            let (r, l) = single(Family::E)?;
            (r == 6 && (is_unit(l, 0) || is_unit(l, 5))).then(BTreeMap::new)
        }
        "short_f4" => {
            let (_, l) = single(Family::F)?;
            is_unit(l, 3).then(BTreeMap::new)
        }
        "segre_sl" => {
            if parts.len() != 2 {
                return None;
            }
            let mut dims = Vec::new();
            for (ci, l) in parts {
                let c = sys.components()[*ci];
                if c.family != Family::A || !(is_unit(l, 0) || is_unit(l, c.rank - 1)) {
                    return None;
                }
                dims.push(c.rank as i64 + 1);
            }
            Some(vars(&[("m", dims[0]), ("n", dims[1])]))
        }
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RsMatch {
    pub row: String,
    pub notation: String,
    pub group: String,
    pub bindings: BTreeMap<String, i64>,
    pub d1: i64,
}

/// All rs-continuous rows whose ambient representation is `V_λ`.
pub fn match_rs_continuous(sys: &RootSystem, lambda: &WeightVec) -> Result<Vec<RsMatch>> {
    let parts = nontrivial_parts(sys, lambda)?;
    let mut out = Vec::new();
    for row in &Catalog::get().rs_continuous {
        if let Some(bindings) = match_rs_pattern(&row.pattern, sys, &parts) {
            let d1 = row.d1.eval(&bindings).expect("bound variables");
            out.push(RsMatch { row: row.id.clone(), notation: row.notation.clone(), group: row.group.clone(), bindings, d1 });
        }
    }
    Ok(out)
}

/// Rank of semistability of `V_λ`, exact or bracketed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RssReport {
    pub rss: Option<i64>,
    pub lower: i64,
    pub upper: Option<i64>,
    pub self_dual: bool,
    pub table: Vec<RsMatch>,
    pub basis: Vec<String>,
}

pub fn rss_verdict(sys: &RootSystem, lambda: &WeightVec, d1: Option<i64>) -> Result<RssReport> {
    if lambda.is_zero() {
        return Err(Error::Invalid("trivial representation".into()));
    }
    if unstable_irreducible(sys, lambda)? {
        return Err(Error::Unstable(format!("{lambda} has no nonconstant invariants; r_ss is undefined")));
    }
    let self_dual = sys.dual_highest_weight(lambda)? == *lambda;
    let table = match_rs_continuous(sys, lambda)?;
    let mut basis = Vec::new();
    if let Some(m) = table.iter().find(|m| m.d1 > 0) {
        basis.push(format!(
            "rs-continuous row {} with d1 = {}; assumes {} is the full linear automorphism group of the variety",
            m.notation, m.d1, m.group
        ));
        if self_dual != (m.d1 == 2) {
            basis.push("warning: table degree and self-duality disagree".into());
        }
        return Ok(RssReport { rss: Some(m.d1), lower: m.d1, upper: Some(m.d1), self_dual, table, basis });
    }
    if self_dual {
        basis.push("V_λ is self-dual and has invariants, so r_ss = 2".into());
        return Ok(RssReport { rss: Some(2), lower: 2, upper: Some(2), self_dual, table, basis });
    }
    basis.push("V_λ is not self-dual, so the secant variety Σ_2 lies in the nullcone: r_ss ≥ 3".into());
    if let Some(d) = d1 {
        basis.push(format!("r_ss ≤ d1 = {d} (supplied)"));
    }
    Ok(RssReport { rss: None, lower: 3, upper: d1, self_dual, table, basis })
}

/// A table instance violating the expected structure of unstable irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureViolation {
    pub row: String,
    pub bindings: BTreeMap<String, i64>,
    pub system: String,
    pub reason: String,
}

/// Canonical realization of a classical factor as `(family, rank, local weight)`.
/// `so(4)` is realized as two `A1` components.
pub fn realize(kind: Kind, dim: i64) -> Option<Vec<(Family, usize, Vec<i64>)>> {
    let unit = |r: usize, i: usize| (0..r).map(|j| if j == i { 1 } else { 0 }).collect::<Vec<i64>>();
    let d = usize::try_from(dim).ok()?;
    Some(match kind {
        Kind::Su if d == 1 => Vec::new(),
        Kind::Su if d >= 2 => vec![(Family::A, d - 1, unit(d - 1, 0))],
        Kind::Sp if d == 2 => vec![(Family::A, 1, vec![1])],
        Kind::Sp if d >= 4 && d % 2 == 0 => vec![(Family::C, d / 2, unit(d / 2, 0))],
        Kind::So if d == 3 => vec![(Family::A, 1, vec![2])],
        Kind::So if d == 4 => vec![(Family::A, 1, vec![1]), (Family::A, 1, vec![1])],
        Kind::So if d == 6 => vec![(Family::A, 3, unit(3, 1))],
        Kind::So if d >= 5 && d % 2 == 1 => vec![(Family::B, (d - 1) / 2, unit((d - 1) / 2, 0))],
        Kind::So if d >= 8 && d % 2 == 0 => vec![(Family::D, d / 2, unit(d / 2, 0))],
        Kind::Lambda2 if d == 3 => vec![(Family::A, 2, unit(2, 1))],
        Kind::Lambda2 if d >= 4 => vec![(Family::A, d - 1, unit(d - 1, 1))],
        Kind::Spin10 => vec![(Family::D, 5, unit(5, 4))],
        _ => return None,
    })
}

/// Instantiates every row for variable values up to `max_var`, realizes it, and checks
/// the structural claims: at most three fundamental weights on distinct components,
/// `Π^λ = Π_1`, the marked roots short when two root lengths occur, and
/// `n_{γ,α} ∈ {0, −1}` for marked `α` and unmarked `γ`. Also checks that each instance
/// is recognized by [`unstable_irreducible`].
pub fn structure_check(max_var: i64) -> Result<(usize, Vec<StructureViolation>)> {
    let mut instances = 0;
    let mut violations = Vec::new();
    for row in &Catalog::get().unstable {
        let vars = row.variables();
        let mut assignments: Vec<BTreeMap<String, i64>> = vec![BTreeMap::new()];
        for v in &vars {
            assignments = assignments
                .into_iter()
                .flat_map(|a| {
                    (1..=max_var).map(move |x| {
                        let mut b = a.clone();
                        b.insert(v.clone(), x);
                        b
                    })
                })
                .collect();
        }
        for a in assignments.into_iter().filter(|a| row.holds(a)) {
            let mut comps = Vec::new();
            let mut realizable = true;
            for f in &row.factors {
                match f.dim.eval(&a).and_then(|d| realize(f.kind, d)) {
                    Some(c) => comps.extend(c),
                    None => realizable = false,
                }
            }
            if !realizable || comps.is_empty() {
                continue;
            }
            instances += 1;
            let sys = RootSystem::from_components(&comps.iter().map(|(f, r, _)| (*f, *r)).collect::<Vec<_>>())?;
            let lambda = WeightVec::from_ints(&comps.iter().flat_map(|(_, _, l)| l.clone()).collect::<Vec<_>>());
            let mut reasons = Vec::new();
            if !unstable_irreducible(&sys, &lambda)? {
                reasons.push("instance not recognized by the matcher".to_string());
            }
            let nonfund = lambda.coords.iter().any(|c| !c.is_zero() && *c != rational::one());
            if nonfund || comps.len() > 3 {
                reasons.push("not a sum of at most three fundamental weights".into());
            }
            for (i, c) in lambda.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let comp = sys.components()[sys.component_of(i)];
                let norms: Vec<_> = comp.indices().map(|j| sys.gram()[j][j].clone()).collect();
                let shortest = norms.iter().min().expect("nonempty");
                if sys.gram()[i][i] != *shortest {
                    reasons.push(format!("marked simple root {} is long", i + 1));
                }
                for j in comp.indices() {
                    if lambda.coords[j].is_zero() {
                        let n = sys.cartan_integer(j, sys.simple_root(i))?;
                        if n != rational::zero() && n != rational::int(-1) {
                            reasons.push(format!("n(γ{}, α{}) = {n}", j + 1, i + 1));
                        }
                    }
                }
            }
            if !reasons.is_empty() {
                violations.push(StructureViolation {
                    row: row.id.clone(),
                    bindings: a.clone(),
                    system: sys.name(),
                    reason: reasons.join("; "),
                });
            }
        }
    }
    Ok((instances, violations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    fn w(v: &[i64]) -> WeightVec {
        WeightVec::from_ints(v)
    }

    #[test]
    fn tables_load() {
        let c = Catalog::get();
        assert_eq!(c.unstable.len(), 9);
        assert_eq!(c.rs_continuous.len(), 10);
    }

    #[test]
    fn unstable_examples() {
        assert!(unstable_irreducible(&sys("A1"), &w(&[1])).unwrap());
        assert!(unstable_irreducible(&sys("A4"), &w(&[0, 1, 0, 0])).unwrap());
        assert!(!unstable_irreducible(&sys("A2"), &w(&[1, 1])).unwrap());
        assert!(unstable_irreducible(&sys("C3"), &w(&[1, 0, 0])).unwrap());
        assert!(unstable_irreducible(&sys("D5"), &w(&[0, 0, 0, 1, 0])).unwrap());
        assert!(unstable_irreducible(&sys("A1xA2xA4"), &w(&[1, 1, 0, 0, 0, 0, 1])).unwrap());
        // SU_2 ⊗ SU_2 has the determinant.
        assert!(!unstable_irreducible(&sys("A1xA1"), &w(&[1, 1])).unwrap());
        // SU_5 ⊗ SO_4 realized on A4 × A1 × A1.
        assert!(unstable_irreducible(&sys("A4xA1xA1"), &w(&[1, 0, 0, 0, 1, 1])).unwrap());
        // SU_4 ⊗ SO_4 is excluded (n > m fails).
        assert!(!unstable_irreducible(&sys("A3xA1xA1"), &w(&[1, 0, 0, 1, 1])).unwrap());
        // Sp_6 with SU_3: n = 3 < 6 and odd.
        assert!(unstable_irreducible(&sys("A2xC3"), &w(&[1, 0, 1, 0, 0])).unwrap());
        // Sp_4 with SU_2: n = 2 is even, and 2 < 4 excludes the other branch.
        assert!(!unstable_irreducible(&sys("A1xC2"), &w(&[1, 1, 0])).unwrap());
        // Adjoint of G2 is not listed.
        assert!(!unstable_irreducible(&sys("G2"), &w(&[0, 1])).unwrap());
        // Trivial components are ignored.
        assert!(unstable_irreducible(&sys("A1xA2"), &w(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn duals_match() {
        let a4 = sys("A4");
        for lam in [w(&[0, 1, 0, 0]), w(&[1, 0, 0, 0]), w(&[0, 1, 0, 1])] {
            let d = a4.dual_highest_weight(&lam).unwrap();
            assert_eq!(unstable_irreducible(&a4, &lam).unwrap(), unstable_irreducible(&a4, &d).unwrap());
        }
    }

    #[test]
    fn multiplicity_free_pair() {
        let a4 = sys("A4");
        assert!(reducible_multfree_unstable(&a4, &[w(&[0, 0, 0, 1]), w(&[0, 1, 0, 0])]).unwrap());
        assert!(reducible_multfree_unstable(&a4, &[w(&[1, 0, 0, 0]), w(&[0, 0, 1, 0])]).unwrap());
        assert!(!reducible_multfree_unstable(&a4, &[w(&[1, 0, 0, 0]), w(&[0, 1, 0, 0])]).unwrap());
        let a1a6 = sys("A1xA6");
        assert!(!reducible_multfree_unstable(&a1a6, &[w(&[1, 1, 0, 0, 0, 0, 0]), w(&[1, 0, 1, 0, 0, 0, 0])]).unwrap());
        let a6 = sys("A6");
        assert!(reducible_multfree_unstable(&a6, &[w(&[0, 0, 0, 0, 0, 1]), w(&[0, 1, 0, 0, 0, 0])]).unwrap());
    }

    #[test]
    fn rss_examples() {
        // Quadric: SO_7 natural.
        let r = rss_verdict(&sys("B3"), &w(&[1, 0, 0]), None).unwrap();
        assert_eq!(r.rss, Some(2));
        for n in 3..=6usize {
            let s = RootSystem::from_components(&[(Family::A, n - 1)]).unwrap();
            let mut l = vec![0; n - 1];
            l[0] = 2;
            let r = rss_verdict(&s, &w(&l), None).unwrap();
            assert_eq!(r.rss, Some(n as i64), "Ver_2 n={n}");
            let mut adj = vec![0; n - 1];
            adj[0] += 1;
            adj[n - 2] += 1;
            let r = rss_verdict(&s, &w(&adj), None).unwrap();
            assert_eq!(r.rss, Some(2), "adjoint n={n}");
        }
        assert!(matches!(rss_verdict(&sys("A2"), &w(&[1, 0]), None), Err(Error::Unstable(_))));
        let e6 = rss_verdict(&sys("E6"), &w(&[1, 0, 0, 0, 0, 0]), None).unwrap();
        assert_eq!(e6.rss, Some(3));
        assert!(!e6.self_dual);
        // Outside the tables and not self-dual: only bounds.
        let r = rss_verdict(&sys("A2"), &w(&[3, 0]), Some(3)).unwrap();
        assert_eq!((r.rss, r.lower, r.upper), (None, 3, Some(3)));
        // Self-dual outside the tables.
        assert_eq!(rss_verdict(&sys("G2"), &w(&[1, 0]), None).unwrap().rss, Some(2));
    }

    #[test]
    fn zero_degree_rows_are_unstable() {
        for (s, l) in [("A3", vec![1, 0, 0]), ("A4", vec![0, 1, 0, 0]), ("D5", vec![0, 0, 0, 0, 1]), ("A1xA2", vec![1, 1, 0])] {
            let m = match_rs_continuous(&sys(s), &w(&l)).unwrap();
            assert!(m.iter().any(|x| x.d1 == 0), "{s}");
            assert!(unstable_irreducible(&sys(s), &w(&l)).unwrap(), "{s}");
        }
    }

    #[test]
    fn structure_violations_are_confined_to_orthogonal_factors() {
        let (n, v) = structure_check(8).unwrap();
        assert!(n > 30);
        for x in &v {
            assert_eq!(x.row, "su-so", "{x:?}");
            assert!(x.bindings["m"] % 2 == 1, "{x:?}");
            assert!(!x.reason.contains("not recognized"), "{x:?}");
        }
    }
}
