//! Two-phase dense tableau simplex over `Q` with Bland's rule.
//!
//! Problems are in equality form: minimize `c·x` subject to `A x = b`, `x ≥ 0`.

use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;
use crate::rational::{self, Q};

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    /// `y` with `Aᵀy ≥ 0` and `b·y < 0`, certifying that `A x = b, x ≥ 0` has no solution.
    Infeasible { farkas: Vec<Q> },
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() - 1)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Q::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs for the columns in `allowed`.
    fn reduced(&self, cost: &[Q], j: usize) -> Q {
        let mut r = cost[j].clone();
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            if !cost[bv].is_zero() && !row[j].is_zero() {
                r -= &cost[bv] * &row[j];
            }
        }
        r
    }

    /// Runs Bland's-rule iterations over columns `< ncols`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Q], ncols: usize) -> bool {
        let rhs = self.width();
        loop {
            let Some(enter) = (0..ncols).find(|&j| !self.basis.contains(&j) && self.reduced(cost, j).is_negative())
            else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[rhs] / &row[enter];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

/// Minimizes `c·x` subject to `a x = b`, `x ≥ 0`, exactly.
pub fn minimize(a: &Matrix, b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m, "rhs length");
    assert!(a.iter().all(|r| r.len() == n), "constraint width");
    // Rows with negative rhs are negated so the artificial basis is feasible.
    let signs: Vec<Q> = b.iter().map(|x| if x.is_negative() { -Q::one() } else { Q::one() }).collect();
    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Q> = a[i].iter().map(|x| x * &signs[i]).collect();
        row.extend((0..m).map(|k| if k == i { Q::one() } else { Q::zero() }));
        row.push(&b[i] * &signs[i]);
        rows.push(row);
    }
    let mut t = Tableau { rows, basis: (n..n + m).collect() };
    let mut phase1 = vec![Q::zero(); n];
    phase1.extend(std::iter::repeat(Q::one()).take(m));
    t.optimize(&phase1, n + m);
    let infeas: Q = t
        .rows
        .iter()
        .zip(&t.basis)
        .filter(|(_, &bv)| bv >= n)
        .map(|(row, _)| row[n + m].clone())
        .sum();
    if infeas.is_positive() {
        // Duals of phase one: π_i = Σ_r c_B[r] (B⁻¹)_{r,i}; the artificial block holds B⁻¹.
        let farkas: Vec<Q> = (0..m)
            .map(|i| {
                let pi: Q = t
                    .rows
                    .iter()
                    .zip(&t.basis)
                    .filter(|(_, &bv)| bv >= n)
                    .map(|(row, _)| row[n + i].clone())
                    .sum();
                -pi * &signs[i]
            })
            .collect();
        return LpOutcome::Infeasible { farkas };
    }
    // Drive remaining artificials out of the basis; drop rows that are redundant.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, j);
                r += 1;
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
            }
        } else {
            r += 1;
        }
    }
    let mut cost = c.to_vec();
    cost.extend(std::iter::repeat(Q::zero()).take(m));
    if !t.optimize(&cost, n) {
        return LpOutcome::Unbounded;
    }
    let rhs = n + m;
    let mut x = vec![Q::zero(); n];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        if bv < n {
            x[bv] = row[rhs].clone();
        }
    }
    let value = rational::dot(c, &x);
    LpOutcome::Optimal { x, value }
}

/// Checks a Farkas certificate for `A x = b, x ≥ 0` exactly.
pub fn verify_farkas(a: &Matrix, b: &[Q], y: &[Q]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    let aty_ok = (0..n).all(|j| {
        let s: Q = a.iter().zip(y).map(|(r, yi)| &r[j] * yi).sum();
        !s.is_negative()
    });
    aty_ok && rational::dot(b, y).is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, ints};

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| ints(r)).collect()
    }

    #[test]
    fn small_optimum() {
        // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
        let a = mat(&[&[1, 2, 1, 0], &[3, 1, 0, 1]]);
        let b = ints(&[4, 6]);
        let c = ints(&[-1, -1, 0, 0]);
        match minimize(&a, &b, &c) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, frac(-14, 5));
                assert_eq!(&x[..2], &[frac(8, 5), frac(6, 5)]);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_has_certificate() {
        // x + y = 1 and x + y = 2.
        let a = mat(&[&[1, 1], &[1, 1]]);
        let b = ints(&[1, 2]);
        match minimize(&a, &b, &ints(&[0, 0])) {
            LpOutcome::Infeasible { farkas } => assert!(verify_farkas(&a, &b, &farkas)),
            o => panic!("{o:?}"),
        }
        // x = -1 with x ≥ 0.
        let a = mat(&[&[1]]);
        let b = ints(&[-1]);
        match minimize(&a, &b, &ints(&[0])) {
            LpOutcome::Infeasible { farkas } => assert!(verify_farkas(&a, &b, &farkas)),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn unbounded_detected() {
        // min -x s.t. x - y = 0.
        let a = mat(&[&[1, -1]]);
        assert_eq!(minimize(&a, &ints(&[0]), &ints(&[-1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        match minimize(&a, &ints(&[1, 2]), &ints(&[1, 0])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(0)),
            o => panic!("{o:?}"),
        }
    }
}
