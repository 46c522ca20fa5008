//! Double description: generators of a polyhedral cone `{y : R y ≤ 0, E y = 0}`.
//!
//! The lineality space is split off first, so the remaining cone is pointed and the
//! incremental method with the combinatorial adjacency test applies.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, Q};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConeGenerators {
    /// Basis of the lineality space.
    pub lines: Vec<Vec<Q>>,
    /// Extreme rays of the pointed part, each a primitive integer vector.
    pub rays: Vec<Vec<Q>>,
}

/// Scales a nonzero vector to the primitive integer vector on the same ray.
pub fn primitive(v: &[Q]) -> Vec<Q> {
    let (nums, _) = rational::common_denominator(v);
    let g = nums.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    nums.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Extreme rays and lineality of `{y ∈ Q^dim : ineq·y ≤ 0, eq·y = 0}`.
pub fn cone_generators(ineq: &Matrix, eq: &Matrix, dim: usize, max_rays: usize) -> Result<ConeGenerators> {
    let all: Matrix = ineq.iter().chain(eq).cloned().collect();
    let lines = if all.is_empty() { linalg::identity(dim) } else { linalg::nullspace(&all, dim) };
    // Work in S = ker(eq) ∩ lines^⊥ with coordinates z, y = basis · z.
    let mut restrict: Matrix = eq.clone();
    restrict.extend(lines.iter().cloned());
    let basis = if restrict.is_empty() { linalg::identity(dim) } else { linalg::nullspace(&restrict, dim) };
    let k = basis.len();
    let lines: Vec<Vec<Q>> = lines.iter().map(|l| primitive(l)).collect();
    if k == 0 {
        return Ok(ConeGenerators { lines, rays: Vec::new() });
    }
    // Constraint rows in z-coordinates; rows vanishing on S are dropped.
    let rows: Matrix = ineq
        .iter()
        .map(|r| basis.iter().map(|b| rational::dot(r, b)).collect::<Vec<Q>>())
        .filter(|r| !rational::is_zero_vec(r))
        .collect();
    let z_rays = pointed_rays(&rows, k, max_rays)?;
    let rays = z_rays
        .into_iter()
        .map(|z| {
            let mut y = vec![Q::zero(); dim];
            for (zi, b) in z.iter().zip(&basis) {
                for (yj, bj) in y.iter_mut().zip(b) {
                    *yj += zi * bj;
                }
            }
            primitive(&y)
        })
        .collect();
    Ok(ConeGenerators { lines, rays })
}

/// Extreme rays of the pointed cone `{z ∈ Q^k : rows·z ≤ 0}` where `rows` has rank `k`.
fn pointed_rays(rows: &Matrix, k: usize, max_rays: usize) -> Result<Vec<Vec<Q>>> {
    // Greedy choice of k independent rows for the initial simplicial cone.
    let mut chosen: Vec<usize> = Vec::new();
    let mut span: Matrix = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = span.clone();
        trial.push(r.clone());
        if linalg::rank(&trial) > span.len() {
            span = trial;
            chosen.push(i);
            if chosen.len() == k {
                break;
            }
        }
    }
    if chosen.len() < k {
        return Err(Error::Invalid("cone is not pointed after removing lineality".into()));
    }
    let inv = linalg::inverse(&span).expect("independent rows");
    // Ray j is tight on every chosen row except j: the columns of −A_B⁻¹.
    let mut rays: Vec<Vec<Q>> = (0..k).map(|j| primitive(&inv.iter().map(|r| -r[j].clone()).collect::<Vec<_>>())).collect();
    let mut processed: Vec<usize> = chosen.clone();
    let mut zeros: Vec<BTreeSet<usize>> = rays
        .iter()
        .map(|r| processed.iter().copied().filter(|&i| rational::dot(&rows[i], r).is_zero()).collect())
        .collect();
    for (i, row) in rows.iter().enumerate() {
        if chosen.contains(&i) {
            continue;
        }
        let vals: Vec<Q> = rays.iter().map(|r| rational::dot(row, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();
        processed.push(i);
        if pos.is_empty() {
            for (j, z) in zeros.iter_mut().enumerate() {
                if vals[j].is_zero() {
                    z.insert(i);
                }
            }
            continue;
        }
        let mut new_rays: Vec<Vec<Q>> = Vec::new();
        let mut new_zeros: Vec<BTreeSet<usize>> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common: BTreeSet<usize> = zeros[p].intersection(&zeros[n]).copied().collect();
                if common.len() + 2 < k {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|o| o == p || o == n || !common.is_subset(&zeros[o]));
                if !adjacent {
                    continue;
                }
                let v: Vec<Q> = rays[n]
                    .iter()
                    .zip(&rays[p])
                    .map(|(xn, xp)| &vals[p] * xn - &vals[n] * xp)
                    .collect();
                let mut z = common;
                z.insert(i);
                new_rays.push(primitive(&v));
                new_zeros.push(z);
            }
        }
        let mut kept_rays = Vec::new();
        let mut kept_zeros = Vec::new();
        for j in 0..rays.len() {
            if !vals[j].is_positive() {
                let mut z = zeros[j].clone();
                if vals[j].is_zero() {
                    z.insert(i);
                }
                kept_rays.push(rays[j].clone());
                kept_zeros.push(z);
            }
        }
        kept_rays.extend(new_rays);
        kept_zeros.extend(new_zeros);
        if kept_rays.len() > max_rays {
            return Err(Error::Budget { what: "double description rays", limit: max_rays as u64, scanned: kept_rays.len() as u64 });
        }
        rays = kept_rays;
        zeros = kept_zeros;
    }
    let mut out: Vec<Vec<Q>> = rays;
    out.sort();
    out.dedup();
    Ok(out)
}

/// True when `v` is a positive multiple of `w`.
pub fn same_ray(v: &[Q], w: &[Q]) -> bool {
    primitive(v) == primitive(w) && !rational::is_zero_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::rational::ints;

    #[test]
    fn orthant_rays() {
        let ineq: Matrix = vec![ints(&[-1, 0]), ints(&[0, -1])];
        let g = cone_generators(&ineq, &Vec::new(), 2, 100).unwrap();
        assert!(g.lines.is_empty());
        assert_eq!(g.rays, vec![ints(&[0, 1]), ints(&[1, 0])]);
    }

    #[test]
    fn half_space_has_lineality() {
        let ineq: Matrix = vec![ints(&[-1, 0])];
        let g = cone_generators(&ineq, &Vec::new(), 2, 100).unwrap();
        assert_eq!(g.lines.len(), 1);
        assert_eq!(g.rays, vec![ints(&[1, 0])]);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // Homogenized unit square: 0 ≤ x ≤ t, 0 ≤ y ≤ t, t ≥ 0.
        let ineq: Matrix = vec![
            ints(&[-1, 0, 0]),
            ints(&[1, 0, -1]),
            ints(&[0, -1, 0]),
            ints(&[0, 1, -1]),
            ints(&[0, 0, -1]),
        ];
        let g = cone_generators(&ineq, &Vec::new(), 3, 100).unwrap();
        assert_eq!(g.rays.len(), 4);
        assert!(g.rays.iter().all(|r| r[2] == Q::one()));
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![rational::frac(1, 2), rational::frac(-3, 4)];
        assert_eq!(primitive(&v), ints(&[2, -3]));
        assert!(same_ray(&ints(&[2, 4]), &ints(&[1, 2])));
        assert!(!same_ray(&ints(&[-1, -2]), &ints(&[1, 2])));
    }
}
