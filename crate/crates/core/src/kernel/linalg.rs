//! Exact dense linear algebra over Q.
//!
//! Square solves and determinants use Bareiss fraction-free elimination on
//! integer-scaled rows; rank and nullspace use reduced row echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scale each row to integers; returns the scaled rows and the product of scales.
fn integer_rows(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let out = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            total *= &l;
            row.iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect()
        })
        .collect();
    (out, total)
}

/// Bareiss elimination in place; returns the determinant of the leading
/// square block (with row-swap sign), or zero if singular.
fn bareiss_det(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..m[i].len() {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * prev
}

pub fn determinant(rows: Vec<Vec<BigRational>>) -> BigRational {
    if rows.is_empty() {
        return BigRational::one();
    }
    let (mut ints, scale) = integer_rows(&rows);
    let d = bareiss_det(&mut ints);
    BigRational::new(d, scale)
}

/// Solve the square system `A x = b` exactly. Returns `None` if `A` is singular.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (ints, _) = integer_rows(&aug);
    solve_integer(ints, n)
}

/// Fraction-free forward elimination on an integer augmented matrix
/// (n rows, n+1 columns) followed by exact back substitution.
pub fn solve_integer(mut m: Vec<Vec<BigInt>>, n: usize) -> Option<Vec<BigRational>> {
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let p = (k + 1..n).find(|&r| !m[r][k].is_zero())?;
            m.swap(k, p);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[k][n].clone());
        for j in k + 1..n {
            acc -= BigRational::from_integer(m[k][j].clone()) * &x[j];
        }
        x[k] = acc / BigRational::from_integer(m[k][k].clone());
    }
    Some(x)
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// A basis of `{x : A x = 0}`.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.iter().filter(|r| r.iter().any(|v| !v.is_zero())).cloned().collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn det_and_solve() {
        let a = vec![vec![q(2), q(1), q(0)], vec![q(1), q(3), q(1)], vec![q(0), q(1), q(4)]];
        assert_eq!(determinant(a.clone()), q(18));
        let x = solve(&a, &[q(3), q(5), q(5)]).unwrap();
        assert_eq!(x, vec![q(1), q(1), q(1)]);
    }

    #[test]
    fn singular_solve_is_none() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve(&a, &[q(1), q(1)]).is_none());
        assert_eq!(determinant(a), q(0));
    }

    #[test]
    fn nullspace_dimension() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: BigRational = a[0].iter().zip(&v).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&a), 1);
    }
}
