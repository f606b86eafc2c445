//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::Q;

/// Reduces `rows` in place to row echelon form and returns the pivot columns.
fn echelon(rows: &mut [Vec<Q>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// Solves the square system `a x = b`; on failure returns the first column without a pivot.
pub fn solve(a: Vec<Vec<Q>>, b: Vec<Q>) -> Result<Vec<Q>, usize> {
    let n = a.len();
    let mut aug: Vec<Vec<Q>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, y)| {
            row.push(y);
            row
        })
        .collect();
    let pivots = echelon(&mut aug);
    if let Some(c) = (0..n).find(|&c| pivots.get(c) != Some(&c)) {
        return Err(c);
    }
    Ok(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Dimension of the intersection of the row spans of `a` and `b`.
pub fn intersection_dim(a: &[Vec<Q>], b: &[Vec<Q>]) -> usize {
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    rank(a) + rank(b) - rank(&both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
    }

    #[test]
    fn rank_and_solve() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 1], &[1, 0], &[1, 1]])), 2);
        assert_eq!(rank(&[]), 0);
        let x = solve(m(&[&[2, 1], &[1, 3]]), vec![qi(3), qi(5)]).unwrap();
        assert_eq!(x, vec![crate::rational::q(4, 5), crate::rational::q(7, 5)]);
        assert_eq!(solve(m(&[&[1, 1], &[1, 1]]), vec![qi(1), qi(1)]), Err(1));
    }

    #[test]
    fn intersections() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(intersection_dim(&a, &b), 1);
        assert_eq!(intersection_dim(&a, &m(&[&[0, 0, 1]])), 0);
    }
}
