//! Binomial tables and the signed Pascal matrices relating f-, h- and
//! e-vectors.
//!
//! The transforms in [`crate::vectors`] use summation formulas directly; the
//! matrices here exist so that the two routes can be checked against each
//! other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows `0..=n` of Pascal's triangle.
#[derive(Clone, Debug)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = vec![BigInt::one(); i + 1];
            for j in 1..i {
                row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    /// `C(n, k)`, zero when `k > n`. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            BigInt::zero()
        } else {
            self.rows[n][k].clone()
        }
    }
}

/// Square matrix of big integers, row major.
pub type Matrix = Vec<Vec<BigInt>>;

/// `(-1)^exp`.
pub(crate) fn sign(exp: usize) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn build(d: usize, entry: impl Fn(usize, usize) -> BigInt) -> Matrix {
    (0..=d).map(|i| (0..=d).map(|j| entry(i, j)).collect()).collect()
}

pub fn identity(d: usize) -> Matrix {
    build(d, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).fold(BigInt::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Row vector times matrix.
pub fn row_times(v: &[BigInt], a: &Matrix) -> Vec<BigInt> {
    let m = a.first().map_or(0, Vec::len);
    (0..m)
        .map(|j| v.iter().zip(a).fold(BigInt::zero(), |acc, (x, row)| acc + x * &row[j]))
        .collect()
}

/// Matrix times column vector.
pub fn times_col(a: &Matrix, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(BigInt::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

/// The five `(d+1) × (d+1)` matrices:
///
/// * `a`: `a_ij = (-1)^(i-j) C(i,j)`, so `fᵀ·A = eᵀ`;
/// * `a_inv`: `C(i,j)`, so `eᵀ·A⁻¹ = fᵀ`;
/// * `b`: `b_ij = (-1)^(i-j) C(d-j, i-j)`, so `B·f = h`;
/// * `b_inv`: `C(d-j, i-j)`, so `B⁻¹·h = f`;
/// * `d_hat`: `(-1)^j C(i,j)`, the product `|B|ᵀ·A` with its columns reversed,
///   so that `e_{d-j} = Σ_i h_i · d_hat[i][j]`.
///
/// All are lower triangular with unit diagonal, except `d_hat` whose diagonal
/// alternates in sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalMatrices {
    pub a: Matrix,
    pub a_inv: Matrix,
    pub b: Matrix,
    pub b_inv: Matrix,
    pub d_hat: Matrix,
}

pub fn pascal_matrices(d: usize) -> PascalMatrices {
    let c = Binomials::new(d);
    let lower = |i: usize, j: usize, v: BigInt| if i >= j { v } else { BigInt::zero() };
    PascalMatrices {
        a: build(d, |i, j| lower(i, j, sign(i.wrapping_sub(j)) * c.get(i, j))),
        a_inv: build(d, |i, j| lower(i, j, c.get(i, j))),
        b: build(d, |i, j| {
            lower(i, j, sign(i.wrapping_sub(j)) * c.get(d - j, i.wrapping_sub(j)))
        }),
        b_inv: build(d, |i, j| lower(i, j, c.get(d - j, i.wrapping_sub(j)))),
        d_hat: build(d, |i, j| lower(i, j, sign(j) * c.get(i, j))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn binomial_table() {
        let c = Binomials::new(10);
        assert_eq!(c.get(10, 5), BigInt::from(252));
        assert_eq!(c.get(3, 4), BigInt::zero());
        assert_eq!(c.get(0, 0), BigInt::one());
    }

    #[test]
    fn two_by_two() {
        let m = pascal_matrices(1);
        assert_eq!(m.a, vec![ints(&[1, 0]), ints(&[-1, 1])]);
        assert_eq!(m.a_inv, vec![ints(&[1, 0]), ints(&[1, 1])]);
    }

    #[test]
    fn last_row_of_a_alternates() {
        let m = pascal_matrices(3);
        assert_eq!(m.a[3], ints(&[-1, 3, -3, 1]));
    }

    #[test]
    fn inverses_and_absolute_values() {
        for d in 0..=8 {
            let m = pascal_matrices(d);
            assert_eq!(mat_mul(&m.a, &m.a_inv), identity(d));
            assert_eq!(mat_mul(&m.b, &m.b_inv), identity(d));
            let abs = |x: &Matrix| -> Matrix { x.iter().map(|r| r.iter().map(|v| v.abs()).collect()).collect() };
            assert_eq!(abs(&m.a), m.a_inv);
            assert_eq!(abs(&m.b), m.b_inv);
        }
    }

    #[test]
    fn d_hat_is_column_reversed_product() {
        for d in 0..=7 {
            let m = pascal_matrices(d);
            let prod = mat_mul(&transpose(&m.b_inv), &m.a);
            for (row, hat) in prod.iter().zip(&m.d_hat) {
                let mut reversed = row.clone();
                reversed.reverse();
                assert_eq!(&reversed, hat, "d={d}");
            }
        }
    }

    #[test]
    fn example_row_vector_product() {
        let m = pascal_matrices(3);
        assert_eq!(row_times(&ints(&[1, 4, 5, 1]), &m.a), ints(&[1, -3, 2, 1]));
        assert_eq!(row_times(&ints(&[1, -3, 2, 1]), &m.a_inv), ints(&[1, 4, 5, 1]));
        assert_eq!(times_col(&m.b, &ints(&[1, 4, 6, 4])), ints(&[1, 1, 1, 1]));
    }
}
