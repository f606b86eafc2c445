use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{qi, Q};

/// Square integer matrix with row `(T,S)`, column `(V,U)` holding `φ_{T,S}(⟨V,U⟩)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkMatrix {
    n: usize,
    entries: Vec<u64>,
    labels: Vec<String>,
}

impl MarkMatrix {
    pub(crate) fn new(n: usize, entries: Vec<u64>, labels: Vec<String>) -> Self {
        MarkMatrix { n, entries, labels }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.n + col]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|r| (0..r).all(|c| self.get(r, c) == 0))
    }

    /// Solves `M a = v`, by back substitution when triangular with nonzero diagonal.
    pub fn solve(&self, v: &[Q]) -> Result<Vec<Q>> {
        let n = self.n;
        if self.is_upper_triangular() {
            let mut a = vec![Q::zero(); n];
            for r in (0..n).rev() {
                let d = self.get(r, r);
                if d == 0 {
                    return Err(Error::SingularMarkMatrix(r));
                }
                let mut acc = v[r].clone();
                for (c, ac) in a.iter().enumerate().skip(r + 1) {
                    let e = self.get(r, c);
                    if e != 0 && !ac.is_zero() {
                        acc -= ac * qi(e as i64);
                    }
                }
                a[r] = acc / qi(d as i64);
            }
            return Ok(a);
        }
        let rows: Vec<Vec<Q>> = (0..n)
            .map(|r| (0..n).map(|c| qi(self.get(r, c) as i64)).collect())
            .collect();
        linalg::solve(rows, v.to_vec()).map_err(Error::SingularMarkMatrix)
    }

    /// CSV with a header row of class labels; the first column repeats the row label.
    pub fn to_csv(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let mut out = String::from("\"\"");
        for l in &self.labels {
            out.push(',');
            out.push_str(&quote(l));
        }
        out.push('\n');
        for r in 0..self.n {
            out.push_str(&quote(&self.labels[r]));
            for c in 0..self.n {
                out.push(',');
                out.push_str(&self.get(r, c).to_string());
            }
            out.push('\n');
        }
        out
    }
}
