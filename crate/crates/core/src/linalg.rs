//! Exact linear algebra over the integers and the rationals.
//!
//! The integer solver reduces `A` to column echelon form with unimodular
//! column operations (`A U = H`), so every step stays inside `Z` and the
//! integrality of a solution can be read off `H` directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Outcome of solving `A x = b` over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegerSolve {
    /// No rational solution at all.
    Inconsistent { rank: usize },
    /// Rational solutions exist but none of them is integral.
    NotIntegral { rank: usize },
    /// An integer solution; when `rank < ncols` it is one point of an affine lattice.
    Solved { rank: usize, point: Vec<BigInt> },
}

impl IntegerSolve {
    pub fn rank(&self) -> usize {
        match self {
            IntegerSolve::Inconsistent { rank }
            | IntegerSolve::NotIntegral { rank }
            | IntegerSolve::Solved { rank, .. } => *rank,
        }
    }
}

/// Column Hermite-style echelon form `A U = H` with `U` unimodular.
#[derive(Debug, Clone)]
struct ColumnEchelon {
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in increasing order of both.
    pivots: Vec<(usize, usize)>,
}

fn column_echelon(rows: &[Vec<BigInt>], ncols: usize) -> ColumnEchelon {
    let mut h: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| {
            (0..ncols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;

    for i in 0..h.len() {
        if r == ncols {
            break;
        }
        for j in (r + 1)..ncols {
            if h[i][j].is_zero() {
                continue;
            }
            let x = h[i][r].clone();
            let y = h[i][j].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let xg = &x / &g;
            let yg = &y / &g;
            // [col_r, col_j] <- [s col_r + t col_j, -y/g col_r + x/g col_j], det = 1
            combine_columns(&mut h, r, j, &s, &t, &yg, &xg);
            combine_columns(&mut u, r, j, &s, &t, &yg, &xg);
        }
        if !h[i][r].is_zero() {
            if h[i][r].is_negative() {
                negate_column(&mut h, r);
                negate_column(&mut u, r);
            }
            pivots.push((i, r));
            r += 1;
        }
    }
    ColumnEchelon { h, u, pivots }
}

fn combine_columns(
    m: &mut [Vec<BigInt>],
    r: usize,
    j: usize,
    s: &BigInt,
    t: &BigInt,
    yg: &BigInt,
    xg: &BigInt,
) {
    for row in m.iter_mut() {
        let a = row[r].clone();
        let b = row[j].clone();
        row[r] = s * &a + t * &b;
        row[j] = xg * &b - yg * &a;
    }
}

fn negate_column(m: &mut [Vec<BigInt>], c: usize) {
    for row in m.iter_mut() {
        row[c] = -row[c].clone();
    }
}

/// Solves `A x = b` over `Z`, where `rows` are the rows of `A` and each has
/// length `ncols`.
pub fn solve_integer(rows: &[Vec<BigInt>], rhs: &[BigInt], ncols: usize) -> IntegerSolve {
    assert_eq!(rows.len(), rhs.len(), "row count and rhs length differ");
    debug_assert!(rows.iter().all(|r| r.len() == ncols));

    let ech = column_echelon(rows, ncols);
    let rank = ech.pivots.len();

    // Forward substitution in the rationals: y is forced on pivot columns.
    let mut y: Vec<BigRational> = vec![BigRational::zero(); ncols];
    let mut next_pivot = 0;
    let mut integral = true;
    for (i, row) in ech.h.iter().enumerate() {
        let mut residual = BigRational::from_integer(rhs[i].clone());
        for (k, yk) in y.iter().enumerate().take(next_pivot) {
            if !row[k].is_zero() {
                residual -= BigRational::from_integer(row[k].clone()) * yk;
            }
        }
        if next_pivot < rank && ech.pivots[next_pivot].0 == i {
            let col = ech.pivots[next_pivot].1;
            let val = residual / BigRational::from_integer(row[col].clone());
            if !val.is_integer() {
                integral = false;
            }
            y[col] = val;
            next_pivot += 1;
        } else if !residual.is_zero() {
            return IntegerSolve::Inconsistent { rank };
        }
    }
    if !integral {
        return IntegerSolve::NotIntegral { rank };
    }

    let y: Vec<BigInt> = y.into_iter().map(|v| v.to_integer()).collect();
    let point = ech
        .u
        .iter()
        .map(|urow| urow.iter().zip(&y).map(|(a, b)| a * b).sum())
        .collect();
    IntegerSolve::Solved { rank, point }
}

/// Rank of an integer matrix over `Q`.
pub fn rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    column_echelon(rows, ncols).pivots.len()
}

/// Expresses `target` as a rational combination of `basis` vectors.
///
/// Returns `None` when `target` is outside the span or the basis is linearly
/// dependent (so the coordinates would not be unique).
pub fn rational_coordinates(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let n = basis.len();
    let dim = target.len();
    // Augmented system: rows are ambient coordinates, columns are basis vectors.
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<BigRational> = basis
                .iter()
                .map(|b| BigRational::from_integer(BigInt::from(b[i])))
                .collect();
            row.push(BigRational::from_integer(BigInt::from(target[i])));
            row
        })
        .collect();

    let mut pivot_row = 0;
    let mut pivot_cols = Vec::with_capacity(n);
    for col in 0..n {
        let sel = (pivot_row..dim).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, sel);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..dim {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=n {
                    let delta = &f * &m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
