//! Exact linear algebra: fraction-free elimination and integer lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Clears denominators row by row, returning an integer matrix.
fn integer_rows(a: &[Vec<BigRational>], b: &[BigRational]) -> Vec<Vec<BigInt>> {
    a.iter()
        .zip(b)
        .map(|(row, rhs)| {
            let l = row.iter().chain(std::iter::once(rhs)).fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .chain(std::iter::once(rhs))
                .map(|q| (q * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Solves the square system `a x = b` by Bareiss elimination; `None` when singular.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == n, "square system expected");
    let mut m = integer_rows(a, b);
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(m[i][i].clone());
    }
    Some(x)
}

/// Determinant of a small integer matrix by Bareiss elimination.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if p != k {
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank of an integer matrix.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c] != 0 {
                let (x, y) = (a[r][c], a[i][c]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * x - a[r][j] * y;
                }
                let g = a[i].iter().fold(0i128, |g, &v| g.gcd(&v));
                if g > 1 {
                    a[i].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        r += 1;
    }
    r
}

/// A basis of the integer kernel `{x ∈ Z^n : a x = 0}` (saturated by construction).
pub fn integer_kernel(a: &[Vec<i128>], n: usize) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = a.to_vec();
    // u starts as the identity; column operations on m are mirrored on u.
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let col_op = |mat: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in mat.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    let swap_cols = |mat: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        for row in mat.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut pivot = 0;
    for r in 0..m.len() {
        if pivot == n {
            break;
        }
        loop {
            // Move the smallest nonzero entry of row r (columns ≥ pivot) to the pivot.
            let Some(best) = (pivot..n).filter(|&j| m[r][j] != 0).min_by_key(|&j| m[r][j].abs()) else { break };
            swap_cols(&mut m, pivot, best);
            swap_cols(&mut u, pivot, best);
            let mut done = true;
            for j in pivot + 1..n {
                if m[r][j] != 0 {
                    let q = Integer::div_floor(&m[r][j], &m[r][pivot]);
                    col_op(&mut m, j, pivot, q);
                    col_op(&mut u, j, pivot, q);
                    if m[r][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][pivot] != 0 {
            pivot += 1;
        }
    }
    (pivot..n).map(|j| (0..n).map(|i| u[i][j]).collect()).collect()
}
