//! Root systems of products of simple types A..G and their Weyl group actions.
//!
//! Weights are stored in the basis of fundamental weights. The Cartan matrix uses
//! `cartan[i][j] = 2 (α_i|α_j) / (α_j|α_j)`, so row `i` holds the fundamental
//! coordinates of the simple root `α_i`. Each simple component carries an invariant
//! form whose shortest roots have squared length 2, multiplied by an optional
//! positive per-component `scale`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, int, Q};

/// Default cap on the size of a generated Weyl orbit.
pub const DEFAULT_ORBIT_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn admits_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }

    /// Gram matrix of the simple roots with shortest roots of squared length 2.
    fn gram(self, n: usize) -> Vec<Vec<i64>> {
        let mut g = vec![vec![0i64; n]; n];
        let mut link = |i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    link(i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1);
                }
                link(n - 2, n - 1, -2);
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1);
                }
                link(n - 3, n - 1, -1);
            }
            Family::E => {
                link(0, 2, -1);
                link(1, 3, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1);
                }
            }
            Family::F => {
                link(0, 1, -2);
                link(1, 2, -2);
                link(2, 3, -1);
            }
            Family::G => link(0, 1, -3),
        }
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = match self {
                Family::A | Family::D | Family::E => 2,
                Family::B => {
                    if i + 1 < n {
                        4
                    } else {
                        2
                    }
                }
                Family::C => {
                    if i + 1 < n {
                        2
                    } else {
                        4
                    }
                }
                Family::F => {
                    if i < 2 {
                        4
                    } else {
                        2
                    }
                }
                Family::G => {
                    if i == 0 {
                        2
                    } else {
                        6
                    }
                }
            };
        }
        g
    }
}

/// One simple factor of a product root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// Index of the component's first simple root in the global numbering.
    pub offset: usize,
}

impl Component {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

/// An exact vector in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec {
    pub coords: Vec<Q>,
}

impl WeightVec {
    pub fn new(coords: Vec<Q>) -> Self {
        WeightVec { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVec::new(rational::ints(v))
    }

    pub fn zero(n: usize) -> Self {
        WeightVec::new(vec![Q::zero(); n])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        rational::is_zero_vec(&self.coords)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// Strictly dominant: every fundamental coordinate is positive.
    pub fn is_regular_dominant(&self) -> bool {
        self.coords.iter().all(|c| c.is_positive())
    }

    pub fn scaled(&self, c: &Q) -> WeightVec {
        WeightVec::new(rational::scale(c, &self.coords))
    }

    pub fn to_strings(&self) -> Vec<String> {
        rational::fmt_vec(&self.coords)
    }

    /// Integer coordinates, if the vector is integral and fits in `i64`.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(rational::to_i64).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(rational::to_f64).collect()
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for WeightVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, o: &WeightVec) -> WeightVec {
        WeightVec::new(rational::add(&self.coords, &o.coords))
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, o: &WeightVec) -> WeightVec {
        WeightVec::new(rational::sub(&self.coords, &o.coords))
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec::new(rational::neg(&self.coords))
    }
}

/// A product of simple root systems with its invariant form.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<Component>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: Matrix,
    scale: Vec<Q>,
    fund_gram: Matrix,
    simple: Vec<WeightVec>,
    positive: Vec<WeightVec>,
    roots: BTreeSet<Vec<i64>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, o: &Self) -> bool {
        self.components == o.components && self.scale == o.scale
    }
}

impl RootSystem {
    /// Parses `FAMILY RANK ("x" FAMILY RANK)*`, case-insensitively, e.g. `"A1xB3"`.
    pub fn parse(spec: &str) -> Result<RootSystem> {
        let cleaned: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty root system".into()));
        }
        let mut parts = Vec::new();
        for tok in cleaned.split(['x', 'X', '*']) {
            let mut chars = tok.chars();
            let fam = chars
                .next()
                .and_then(Family::from_char)
                .ok_or_else(|| Error::Parse(format!("bad component {tok:?} in {spec:?}")))?;
            let digits: String = chars.collect();
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad rank in component {tok:?} of {spec:?}")));
            }
            let n: usize = digits.parse().map_err(|_| Error::Parse(format!("bad rank in {tok:?}")))?;
            parts.push((fam, n));
        }
        RootSystem::from_components(&parts)
    }

    pub fn from_components(parts: &[(Family, usize)]) -> Result<RootSystem> {
        if parts.is_empty() {
            return Err(Error::Parse("no components".into()));
        }
        let mut components = Vec::new();
        let mut offset = 0;
        for &(family, rank) in parts {
            if !family.admits_rank(rank) {
                return Err(Error::RankOutOfRange { family: family.letter(), rank });
            }
            components.push(Component { family, rank, offset });
            offset += rank;
        }
        let scale = vec![Q::one(); components.len()];
        Ok(RootSystem::build(components, scale))
    }

    /// Same components with a per-component positive multiplier on the invariant form.
    pub fn with_scale(&self, scale: Vec<Q>) -> Result<RootSystem> {
        if scale.len() != self.components.len() {
            return Err(Error::Dimension { expected: self.components.len(), got: scale.len() });
        }
        if scale.iter().any(|s| !s.is_positive()) {
            return Err(Error::Invalid("scale entries must be positive".into()));
        }
        Ok(RootSystem::build(self.components.clone(), scale))
    }

    fn build(components: Vec<Component>, scale: Vec<Q>) -> RootSystem {
        let rank: usize = components.iter().map(|c| c.rank).sum();
        let mut gram = vec![vec![Q::zero(); rank]; rank];
        for (c, s) in components.iter().zip(&scale) {
            let g = c.family.gram(c.rank);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    gram[c.offset + i][c.offset + j] = s * int(g[i][j]);
                }
            }
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = int(2) * &gram[i][j] / &gram[j][j];
                        rational::to_i64(&v).expect("Cartan entries are integers")
                    })
                    .collect()
            })
            .collect();
        let cq: Matrix = cartan.iter().map(|r| rational::ints(r)).collect();
        let cinv = linalg::inverse(&cq).expect("Cartan matrix is invertible");
        let fund_gram: Matrix = (0..rank)
            .map(|i| (0..rank).map(|j| &cinv[i][j] * &gram[j][j] / int(2)).collect())
            .collect();
        let simple: Vec<WeightVec> = cartan.iter().map(|r| WeightVec::from_ints(r)).collect();
        let mut sys = RootSystem {
            components,
            rank,
            cartan,
            gram,
            scale,
            fund_gram,
            simple,
            positive: Vec::new(),
            roots: BTreeSet::new(),
        };
        sys.generate_roots();
        sys
    }

    /// All roots are Weyl conjugates of simple roots; positive ones have nonnegative
    /// simple-root coordinates.
    fn generate_roots(&mut self) {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for r in &self.cartan {
            if seen.insert(r.clone()) {
                queue.push_back(r.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                if v[i] == 0 {
                    continue;
                }
                let w: Vec<i64> = v.iter().zip(&self.cartan[i]).map(|(x, a)| x - v[i] * a).collect();
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut positive: Vec<WeightVec> = seen
            .iter()
            .map(|r| WeightVec::from_ints(r))
            .filter(|r| self.root_coords(r).iter().all(|c| !c.is_negative()))
            .collect();
        positive.sort();
        self.positive = positive;
        self.roots = seen;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix `(α_i|α_j)` of the simple roots.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Gram matrix `(ω_i|ω_j)` of the fundamental weights.
    pub fn fund_gram(&self) -> &Matrix {
        &self.fund_gram
    }

    pub fn scale(&self) -> &[Q] {
        &self.scale
    }

    pub fn name(&self) -> String {
        self.components.iter().map(Component::name).collect::<Vec<_>>().join("x")
    }

    /// Index of the component containing simple root `i`.
    pub fn component_of(&self, i: usize) -> usize {
        self.components.iter().position(|c| c.indices().contains(&i)).expect("index in range")
    }

    pub fn simple_root(&self, i: usize) -> &WeightVec {
        &self.simple[i]
    }

    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.simple
    }

    pub fn fundamental(&self, i: usize) -> WeightVec {
        let mut v = vec![Q::zero(); self.rank];
        v[i] = Q::one();
        WeightVec::new(v)
    }

    pub fn zero(&self) -> WeightVec {
        WeightVec::zero(self.rank)
    }

    /// Half the sum of the positive roots, i.e. the sum of the fundamental weights.
    pub fn rho(&self) -> WeightVec {
        WeightVec::new(vec![Q::one(); self.rank])
    }

    pub fn weight(&self, coords: Vec<Q>) -> Result<WeightVec> {
        self.check(&WeightVec::new(coords))
    }

    pub fn check(&self, v: &WeightVec) -> Result<WeightVec> {
        if v.dim() != self.rank {
            return Err(Error::Dimension { expected: self.rank, got: v.dim() });
        }
        Ok(v.clone())
    }

    pub fn check_dominant_integral(&self, v: &WeightVec) -> Result<()> {
        self.check(v)?;
        if !v.is_integral() {
            return Err(Error::NotIntegral(v.to_string()));
        }
        if !v.is_dominant() {
            return Err(Error::NotDominant(v.to_string()));
        }
        Ok(())
    }

    /// Coefficients of the linear functional `(· | v)` in fundamental coordinates.
    pub fn covector(&self, v: &WeightVec) -> Vec<Q> {
        linalg::vec_mat(&v.coords, &self.fund_gram)
    }

    /// The invariant form. Panics if either argument has the wrong dimension.
    pub fn pairing(&self, a: &WeightVec, b: &WeightVec) -> Q {
        assert_eq!(a.dim(), self.rank, "weight dimension");
        assert_eq!(b.dim(), self.rank, "weight dimension");
        rational::dot(&self.covector(a), &b.coords)
    }

    pub fn try_pairing(&self, a: &WeightVec, b: &WeightVec) -> Result<Q> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.pairing(a, b))
    }

    pub fn norm2(&self, a: &WeightVec) -> Q {
        self.pairing(a, a)
    }

    /// `n_{α_i,ν} = 2 (α_i|ν) / (α_i|α_i)`, evaluated through the Gram matrix.
    pub fn cartan_integer(&self, i: usize, nu: &WeightVec) -> Result<Q> {
        if i >= self.rank {
            return Err(Error::NotSimple(i));
        }
        self.check(nu)?;
        Ok(int(2) * self.pairing(&self.simple[i], nu) / &self.gram[i][i])
    }

    /// `n_{α,ν}` for an arbitrary root `α`.
    pub fn root_integer(&self, alpha: &WeightVec, nu: &WeightVec) -> Q {
        int(2) * self.pairing(alpha, nu) / self.norm2(alpha)
    }

    /// Simple-root coordinates of a weight.
    pub fn root_coords(&self, v: &WeightVec) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                let p = rational::dot(&v.coords, &self.fund_gram.iter().map(|r| r[i].clone()).collect::<Vec<_>>());
                int(2) * p / &self.gram[i][i]
            })
            .collect()
    }

    pub fn from_root_coords(&self, c: &[Q]) -> WeightVec {
        WeightVec::new(linalg::vec_mat(c, &self.cartan.iter().map(|r| rational::ints(r)).collect::<Vec<_>>()))
    }

    /// Simple reflection `s_i ν = ν − ν_i α_i`.
    pub fn reflect_simple(&self, i: usize, nu: &WeightVec) -> WeightVec {
        let c = &nu.coords[i];
        if c.is_zero() {
            return nu.clone();
        }
        WeightVec::new(
            nu.coords
                .iter()
                .zip(&self.cartan[i])
                .map(|(x, a)| x - c * int(*a))
                .collect(),
        )
    }

    /// `s_α ν = ν − n_{α,ν} α` for any root `α`.
    pub fn reflect(&self, alpha: &WeightVec, nu: &WeightVec) -> Result<WeightVec> {
        self.check(nu)?;
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        let n = self.root_integer(alpha, nu);
        Ok(nu - &alpha.scaled(&n))
    }

    pub fn is_root(&self, v: &WeightVec) -> bool {
        v.dim() == self.rank && v.to_i64().is_some_and(|c| self.roots.contains(&c))
    }

    pub fn positive_roots(&self) -> &[WeightVec] {
        &self.positive
    }

    pub fn roots(&self) -> Vec<WeightVec> {
        self.roots.iter().map(|r| WeightVec::from_ints(r)).collect()
    }

    /// Closure of `seeds` under the simple reflections listed in `gens`, sorted.
    pub fn closure(&self, seeds: &[WeightVec], gens: &[usize], budget: usize) -> Result<Vec<WeightVec>> {
        let mut seen: BTreeSet<WeightVec> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for s in seeds {
            self.check(s)?;
            if seen.insert(s.clone()) {
                queue.push_back(s.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for &i in gens {
                let w = self.reflect_simple(i, &v);
                if !seen.contains(&w) {
                    if seen.len() >= budget {
                        return Err(Error::Budget { what: "orbit", limit: budget as u64, scanned: seen.len() as u64 });
                    }
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// The Weyl orbit `Wν`, sorted lexicographically by coordinates.
    pub fn weyl_orbit(&self, nu: &WeightVec, budget: usize) -> Result<Vec<WeightVec>> {
        let all: Vec<usize> = (0..self.rank).collect();
        self.closure(std::slice::from_ref(nu), &all, budget)
    }

    /// `W_{Π₀} S`: closure of `s` under the reflections in the simple roots `pi0`.
    pub fn stabilizer_orbit(&self, s: &[WeightVec], pi0: &[usize], budget: usize) -> Result<Vec<WeightVec>> {
        if let Some(&i) = pi0.iter().find(|&&i| i >= self.rank) {
            return Err(Error::NotSimple(i));
        }
        self.closure(s, pi0, budget)
    }

    /// The dominant element of `Wν` and the simple reflections applied, in order.
    pub fn dominant_representative(&self, nu: &WeightVec) -> (WeightVec, Vec<usize>) {
        let mut v = nu.clone();
        let mut word = Vec::new();
        while let Some(i) = v.coords.iter().position(|c| c.is_negative()) {
            v = self.reflect_simple(i, &v);
            word.push(i);
        }
        (v, word)
    }

    /// Applies a word produced by [`dominant_representative`](Self::dominant_representative).
    pub fn apply_word(&self, word: &[usize], nu: &WeightVec) -> WeightVec {
        word.iter().fold(nu.clone(), |v, &i| self.reflect_simple(i, &v))
    }

    /// Highest weight of the dual representation, `−w₀λ`.
    pub fn dual_highest_weight(&self, lambda: &WeightVec) -> Result<WeightVec> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(self.dominant_representative(&-lambda).0)
    }

    /// `dim V_λ = Π_{α>0} (λ+ρ|α)/(ρ|α)`, for dominant integral `λ`.
    pub fn weyl_dimension(&self, lambda: &WeightVec) -> Result<u64> {
        self.check_dominant_integral(lambda)?;
        let rho = self.rho();
        let shifted = lambda + &rho;
        let d: Q = self.positive.iter().map(|a| self.pairing(&shifted, a) / self.pairing(&rho, a)).product();
        rational::to_i64(&d).and_then(|x| u64::try_from(x).ok()).ok_or_else(|| Error::Invalid("dimension overflows".into()))
    }

    /// Order of the parabolic subgroup generated by the given simple reflections.
    pub fn parabolic_order(&self, gens: &[usize]) -> Result<usize> {
        Ok(self.closure(&[self.rho()], gens, DEFAULT_ORBIT_BUDGET)?.len())
    }

    pub fn weyl_group_order(&self) -> Result<usize> {
        self.parabolic_order(&(0..self.rank).collect::<Vec<_>>())
    }

    /// Root subsystem spanned by the listed simple roots, as a product of simple types.
    /// The second value lists, for each subsystem simple root, its ambient index.
    pub fn subsystem(&self, indices: &[usize]) -> Result<(RootSystem, Vec<usize>)> {
        subsystem::extract(self, indices)
    }
}

mod subsystem {
    use super::*;

    /// Identifies each connected piece of the sub-diagram on `indices` and renumbers it
    /// in Bourbaki order, scaling the form to match the ambient one.
    pub(super) fn extract(sys: &RootSystem, indices: &[usize]) -> Result<(RootSystem, Vec<usize>)> {
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.is_empty() {
            return Err(Error::Invalid("empty subsystem".into()));
        }
        let adj = |a: usize, b: usize| sys.cartan[a][b] != 0 && a != b;
        let mut pieces: Vec<Vec<usize>> = Vec::new();
        let mut used = BTreeSet::new();
        for &s in &idx {
            if used.contains(&s) {
                continue;
            }
            let mut piece = vec![s];
            used.insert(s);
            let mut k = 0;
            while k < piece.len() {
                let a = piece[k];
                for &b in &idx {
                    if !used.contains(&b) && adj(a, b) {
                        used.insert(b);
                        piece.push(b);
                    }
                }
                k += 1;
            }
            pieces.push(piece);
        }
        let mut parts = Vec::new();
        let mut order: Vec<usize> = Vec::new();
        let mut scales = Vec::new();
        for piece in &pieces {
            let (fam, ordered) = classify(sys, piece)?;
            let sub = RootSystem::from_components(&[(fam, ordered.len())])?;
            // Ratio of ambient to standard squared lengths on the first root.
            scales.push(&sys.gram[ordered[0]][ordered[0]] / &sub.gram[0][0]);
            parts.push((fam, ordered.len()));
            order.extend(ordered);
        }
        let out = RootSystem::from_components(&parts)?.with_scale(scales)?;
        Ok((out, order))
    }

    /// Family of a connected Dynkin sub-diagram and its vertices in Bourbaki order.
    fn classify(sys: &RootSystem, piece: &[usize]) -> Result<(Family, Vec<usize>)> {
        let n = piece.len();
        let c = |a: usize, b: usize| sys.cartan[a][b];
        let neighbours = |a: usize| piece.iter().copied().filter(|&b| b != a && c(a, b) != 0).collect::<Vec<_>>();
        let norm = |a: usize| sys.gram[a][a].clone();
        if n == 1 {
            return Ok((Family::A, piece.to_vec()));
        }
        let branch: Vec<usize> = piece.iter().copied().filter(|&a| neighbours(a).len() == 3).collect();
        let multi = piece
            .iter()
            .flat_map(|&a| piece.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| a != b && c(a, b) * c(b, a) > 1);
        let ends: Vec<usize> = piece.iter().copied().filter(|&a| neighbours(a).len() == 1).collect();
        let walk = |start: usize| {
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = neighbours(cur).into_iter().find(|&b| b != prev && !path.contains(&b));
                match next {
                    Some(b) => {
                        prev = cur;
                        cur = b;
                        path.push(b);
                    }
                    None => break path,
                }
            }
        };
        if let Some((a, b)) = multi {
            let m = c(a, b) * c(b, a);
            if m == 3 {
                // G2: short root first.
                let (s, l) = if norm(a) < norm(b) { (a, b) } else { (b, a) };
                return Ok((Family::G, vec![s, l]));
            }
            if n == 4 && ends.len() == 2 {
                // F4 when the double bond is in the middle: long roots first.
                let p = walk(ends[0]);
                if (c(p[1], p[2]) * c(p[2], p[1])) == 2 {
                    let p = if norm(p[0]) > norm(p[3]) { p } else { p.into_iter().rev().collect() };
                    return Ok((Family::F, p));
                }
            }
            // B or C: walk from the end away from the double bond.
            let far = ends
                .iter()
                .copied()
                .find(|&e| {
                    let p = walk(e);
                    let k = p.len();
                    c(p[k - 2], p[k - 1]) * c(p[k - 1], p[k - 2]) == 2
                })
                .ok_or_else(|| Error::Invalid("unrecognised sub-diagram".into()))?;
            let p = walk(far);
            let last = p[n - 1];
            let fam = if norm(last) < norm(p[n - 2]) { Family::B } else { Family::C };
            return Ok((fam, p));
        }
        if branch.is_empty() {
            return Ok((Family::A, walk(ends[0])));
        }
        let b = branch[0];
        // Arm lengths from the branch node.
        let mut arms: Vec<Vec<usize>> = neighbours(b)
            .into_iter()
            .map(|s| {
                let mut arm = vec![s];
                let mut prev = b;
                let mut cur = s;
                while let Some(nx) = neighbours(cur).into_iter().find(|&x| x != prev) {
                    prev = cur;
                    cur = nx;
                    arm.push(nx);
                }
                arm
            })
            .collect();
        arms.sort_by_key(Vec::len);
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        if lens[0] == 1 && lens[1] == 1 {
            // D_n: long arm reversed, branch, then the two short arms.
            let mut p: Vec<usize> = arms[2].iter().rev().copied().collect();
            p.push(b);
            p.push(arms[0][0]);
            p.push(arms[1][0]);
            return Ok((Family::D, p));
        }
        if lens[0] == 1 && lens[1] == 2 && (2..=4).contains(&lens[2]) {
            // E_n Bourbaki: 1 = end of the length-2 arm, 2 = the length-1 arm,
            // 3 = inner node of the length-2 arm, 4 = branch, 5.. = long arm.
            let mut p = vec![arms[1][1], arms[0][0], arms[1][0], b];
            p.extend(arms[2].iter().copied());
            return Ok((Family::E, p));
        }
        Err(Error::Invalid("unrecognised sub-diagram".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn sys(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let a1 = sys("A1");
        assert_eq!(a1.rank(), 1);
        assert_eq!(a1.cartan(), &[vec![2]]);
        assert_eq!(a1.gram(), &vec![vec![int(2)]]);
        let c2 = sys("c2");
        assert_eq!(c2.cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(c2.gram(), &vec![vec![int(2), int(-2)], vec![int(-2), int(4)]]);
        let p = sys("A1xB3");
        assert_eq!(p.rank(), 4);
        for i in 1..4 {
            assert!(p.gram()[0][i].is_zero());
        }
        assert!(matches!(RootSystem::parse("E9"), Err(Error::RankOutOfRange { .. })));
        assert!(RootSystem::parse("Q3").is_err());
        assert!(RootSystem::parse("A").is_err());
        assert!(RootSystem::parse("").is_err());
    }

    #[test]
    fn bourbaki_cartan_matrices() {
        assert_eq!(sys("B2").cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(sys("G2").cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(
            sys("F4").cartan(),
            &[vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]]
        );
        let d4 = sys("D4");
        assert_eq!(d4.cartan()[1], vec![-1, 2, -1, -1]);
        let e6 = sys("E6");
        assert_eq!(e6.cartan()[3], vec![0, -1, -1, 2, -1, 0]);
    }

    #[test]
    fn pairing_examples() {
        let c2 = sys("C2");
        assert_eq!(c2.norm2(&c2.fundamental(0)), int(1));
        let a1 = sys("A1");
        assert_eq!(a1.norm2(&a1.fundamental(0)), frac(1, 2));
        assert!(c2.try_pairing(&c2.fundamental(0), &WeightVec::zero(3)).is_err());
    }

    #[test]
    fn cartan_integer_examples() {
        let c2 = sys("C2");
        assert_eq!(c2.cartan_integer(0, c2.simple_root(1)).unwrap(), int(-2));
        for i in 0..2 {
            assert_eq!(c2.cartan_integer(i, c2.simple_root(i)).unwrap(), int(2));
            for j in 0..2 {
                let want = if i == j { int(1) } else { int(0) };
                assert_eq!(c2.cartan_integer(i, &c2.fundamental(j)).unwrap(), want);
            }
        }
        assert!(c2.cartan_integer(5, &c2.rho()).is_err());
    }

    #[test]
    fn reflect_examples() {
        let a1 = sys("A1");
        assert_eq!(a1.reflect(a1.simple_root(0), &a1.fundamental(0)).unwrap(), WeightVec::from_ints(&[-1]));
        let a2 = sys("A2");
        assert_eq!(a2.reflect(a2.simple_root(0), &a2.fundamental(0)).unwrap(), WeightVec::from_ints(&[-1, 1]));
        assert!(a2.reflect(&a2.fundamental(0), &a2.rho()).is_err());
        // Orthogonal vectors are fixed.
        assert_eq!(a2.reflect(a2.simple_root(0), &a2.fundamental(1)).unwrap(), a2.fundamental(1));
    }

    #[test]
    fn orbit_examples() {
        let a1 = sys("A1");
        assert_eq!(a1.weyl_orbit(&a1.fundamental(0), 100).unwrap().len(), 2);
        let a2 = sys("A2");
        assert_eq!(a2.weyl_orbit(&a2.rho(), 100).unwrap().len(), 6);
        assert_eq!(a2.weyl_orbit(&a2.zero(), 100).unwrap(), vec![a2.zero()]);
        assert!(a2.weyl_orbit(&a2.rho(), 3).unwrap_err().is_budget());
    }

    #[test]
    fn stabilizer_orbit_examples() {
        let c2 = sys("C2");
        let s = c2.stabilizer_orbit(&[c2.simple_root(0).clone()], &[1], 100).unwrap();
        let a1 = c2.simple_root(0);
        let a2 = c2.simple_root(1);
        let mut want = vec![a1.clone(), a1 + a2];
        want.sort();
        assert_eq!(s, want);
        assert_eq!(c2.stabilizer_orbit(std::slice::from_ref(a1), &[], 100).unwrap(), vec![a1.clone()]);
    }

    #[test]
    fn dominant_and_dual() {
        let a1 = sys("A1");
        let (d, w) = a1.dominant_representative(&WeightVec::from_ints(&[-1]));
        assert_eq!(d, a1.fundamental(0));
        assert_eq!(w, vec![0]);
        let a2 = sys("A2");
        let v = a2.reflect_simple(0, &a2.reflect_simple(1, &a2.rho()));
        let (d, w) = a2.dominant_representative(&v);
        assert_eq!(d, a2.rho());
        assert_eq!(w.len(), 2);
        assert_eq!(a2.apply_word(&w, &v), a2.rho());
        assert_eq!(a2.dual_highest_weight(&a2.fundamental(0)).unwrap(), a2.fundamental(1));
        for s in ["B3", "C3", "G2", "F4", "A1", "E7", "D4"] {
            let r = sys(s);
            for i in 0..r.rank() {
                assert_eq!(r.dual_highest_weight(&r.fundamental(i)).unwrap(), r.fundamental(i), "{s}");
            }
        }
        assert_eq!(a2.dual_highest_weight(&a2.zero()).unwrap(), a2.zero());
    }

    #[test]
    fn root_counts_and_weyl_orders() {
        for (s, pos, w) in [
            ("A2", 3, 6),
            ("A3", 6, 24),
            ("B2", 4, 8),
            ("C2", 4, 8),
            ("G2", 6, 12),
            ("B3", 9, 48),
            ("C3", 9, 48),
            ("D4", 12, 192),
            ("F4", 24, 1152),
        ] {
            let r = sys(s);
            assert_eq!(r.positive_roots().len(), pos, "{s}");
            assert_eq!(r.weyl_group_order().unwrap(), w, "{s}");
        }
        assert_eq!(sys("E6").positive_roots().len(), 36);
        assert_eq!(sys("E8").positive_roots().len(), 120);
    }

    #[test]
    fn is_root_examples() {
        let c2 = sys("C2");
        assert!(c2.is_root(c2.simple_root(0)));
        assert!(!c2.is_root(&c2.zero()));
        assert!(c2.is_root(&WeightVec::from_ints(&[2, 0])));
        assert!(!c2.is_root(&WeightVec::from_ints(&[0, 2])));
    }

    #[test]
    fn shortest_roots_have_norm_two() {
        for s in ["A3", "B3", "C3", "D5", "E6", "F4", "G2"] {
            let r = sys(s);
            let min = r.positive_roots().iter().map(|a| r.norm2(a)).min().unwrap();
            assert_eq!(min, int(2), "{s}");
        }
    }

    #[test]
    fn scale_multiplies_the_form() {
        let r = sys("A1xA2").with_scale(vec![int(3), frac(1, 2)]).unwrap();
        assert_eq!(r.norm2(r.simple_root(0)), int(6));
        assert_eq!(r.norm2(r.simple_root(1)), int(1));
        assert_eq!(r.cartan(), sys("A1xA2").cartan());
        assert!(sys("A2").with_scale(vec![int(0)]).is_err());
    }

    #[test]
    fn subsystem_identification() {
        let b3 = sys("B3");
        let (s, order) = b3.subsystem(&[1, 2]).unwrap();
        assert_eq!(s.name(), "B2");
        assert_eq!(order, vec![1, 2]);
        let c3 = sys("C3");
        assert_eq!(c3.subsystem(&[1, 2]).unwrap().0.name(), "C2");
        let a3 = sys("A3");
        assert_eq!(a3.subsystem(&[0, 2]).unwrap().0.name(), "A1xA1");
        let e6 = sys("E6");
        assert_eq!(e6.subsystem(&[0, 2, 3, 4, 5]).unwrap().0.name(), "A5");
        assert_eq!(e6.subsystem(&[1, 2, 3, 4, 5]).unwrap().0.name(), "D5");
        assert_eq!(e6.subsystem(&[0, 1, 2, 3, 4]).unwrap().0.name(), "D5");
        let f4 = sys("F4");
        assert_eq!(f4.subsystem(&[1, 2, 3]).unwrap().0.name(), "C3");
        assert_eq!(f4.subsystem(&[0, 1, 2]).unwrap().0.name(), "B3");
        let e8 = sys("E8");
        let (e7, _) = e8.subsystem(&[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(e7.name(), "E7");
        // Gram entries are inherited from the ambient form.
        let (sub, order) = f4.subsystem(&[1, 2, 3]).unwrap();
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate() {
                assert_eq!(sub.gram()[a][b], f4.gram()[i][j]);
            }
        }
    }

    #[test]
    fn weyl_dimensions_of_familiar_modules() {
        assert_eq!(sys("A1").weyl_dimension(&WeightVec::from_ints(&[4])).unwrap(), 5);
        assert_eq!(sys("A2").weyl_dimension(&WeightVec::from_ints(&[1, 1])).unwrap(), 8);
        assert_eq!(sys("B3").weyl_dimension(&WeightVec::from_ints(&[0, 0, 1])).unwrap(), 8);
        assert_eq!(sys("E8").weyl_dimension(&WeightVec::from_ints(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), 248);
        assert!(sys("A2").weyl_dimension(&WeightVec::from_ints(&[1, -1])).is_err());
    }
}
