//! Dense exact linear algebra over `Q`, plus a fraction-free `i128` solver for hot loops.

use num_traits::{One, Zero};

use crate::rational::Q;

pub type Matrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn transpose(m: &[Vec<Q>]) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|r| crate::rational::dot(r, v)).collect()
}

/// `v^T m`, i.e. the row vector times matrix product.
pub fn vec_mat(v: &[Q], m: &[Vec<Q>]) -> Vec<Q> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).fold(Q::zero(), |acc, (x, r)| acc + x * &r[j]))
        .collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Matrix {
    a.iter().map(|r| vec_mat(r, b)).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut w = m.to_vec();
    rref(&mut w).len()
}

/// Unique solution of `a x = b`, or `None` if inconsistent or underdetermined.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) || pivots.len() != n {
        return None;
    }
    Some((0..n).map(|i| aug[i][n].clone()).collect())
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of `{x : m x = 0}` for an `r x n` matrix.
pub fn nullspace(m: &[Vec<Q>], n: usize) -> Matrix {
    let mut w = m.to_vec();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -w[i][f].clone();
            }
            v
        })
        .collect()
}

/// Fraction-free (Bareiss) solve of a square integer system `a x = b`.
///
/// Returns `(x_num, det)` with `a (x_num / det) = b` and `det = det(a)` up to sign,
/// `None` if `a` is singular or an intermediate value overflows `i128`.
pub fn bareiss_solve(a: &[Vec<i128>], b: &[i128]) -> Option<(Vec<i128>, i128)> {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .zip(b)
        .map(|(r, &x)| {
            let mut r = r.clone();
            r.push(x);
            r
        })
        .collect();
    let mut prev: i128 = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            let p = (k + 1..n).find(|&i| m[i][k] != 0)?;
            m.swap(k, p);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = m[i][j].checked_mul(m[k][k])?.checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = v / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let det = m[n - 1][n - 1];
    if det == 0 {
        return None;
    }
    // Back substitution keeping numerators over `det`: x_i = (b_i det - sum a_ij x_j) / a_ii.
    let mut x = vec![0i128; n];
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
    Some((x, det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, -1], &[-2, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![int(1), frac(1, 2)], vec![int(1), int(1)]]);
        let x = solve(&a, &[int(1), int(0)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(solve(&m(&[&[1, 1], &[2, 2]]), &[int(1), int(3)]).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn bareiss_matches_rational_solve() {
        let a = vec![vec![4i128, -2, 1], vec![-2, 4, -2], vec![1, -2, 4]];
        let b = vec![11i128, -16, 17];
        let (x, det) = bareiss_solve(&a, &b).unwrap();
        let aq: Matrix = a.iter().map(|r| r.iter().map(|&v| int(v as i64)).collect()).collect();
        let bq: Vec<Q> = b.iter().map(|&v| int(v as i64)).collect();
        let exact = solve(&aq, &bq).unwrap();
        for (xi, e) in x.iter().zip(exact) {
            assert_eq!(frac(*xi as i64, det as i64), e);
        }
        assert!(bareiss_solve(&[vec![1, 2], vec![2, 4]], &[1, 2]).is_none());
    }
}
