//! Exact linear algebra over the rationals: null spaces and the inertia of
//! symmetric forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Basis of `{v : M v = 0}` for a `rows x cols` matrix given row by row.
pub fn nullspace(matrix: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        row += 1;
    }

    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[free] = q(1);
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

/// Inertia of a symmetric rational matrix by congruence diagonalization.
///
/// Each step picks a nonzero diagonal pivot, clears its row and column and
/// records its sign. When the diagonal of the remaining block vanishes but
/// some `S[i][j]` does not, adding row/column `j` to `i` puts `2 S[i][j]` on
/// the diagonal. A block that is entirely zero is the radical.
pub fn inertia(sym: &[Vec<Q>]) -> Inertia {
    let mut s: Vec<Vec<Q>> = sym.to_vec();
    let size = s.len();
    let (mut positive, mut negative) = (0, 0);

    while !s.is_empty() {
        let n = s.len();
        let pivot = match (0..n).find(|&i| !s[i][i].is_zero()) {
            Some(k) => k,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !s[i][j].is_zero())
                else {
                    break;
                };
                let row_j = s[j].clone();
                for (x, y) in s[i].iter_mut().zip(&row_j) {
                    *x += y;
                }
                for r in s.iter_mut() {
                    let y = r[j].clone();
                    r[i] += y;
                }
                i
            }
        };

        let d = s[pivot][pivot].clone();
        if d.is_positive() {
            positive += 1;
        } else {
            negative += 1;
        }
        let pivot_row = s[pivot].clone();
        let reduced: Vec<Vec<Q>> = (0..n)
            .filter(|&i| i != pivot)
            .map(|i| {
                let factor = &s[i][pivot] / &d;
                (0..n)
                    .filter(|&j| j != pivot)
                    .map(|j| &s[i][j] - &factor * &pivot_row[j])
                    .collect()
            })
            .collect();
        s = reduced;
    }

    Inertia {
        positive,
        negative,
        nullity: size - positive - negative,
    }
}
