//! Exact rank by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Q;

/// Rank over the rationals of a matrix given as rows. Rows may have
/// different lengths; missing entries are zero.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let matrix: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r, width)).collect();
    integer_rank(matrix)
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Q], width: usize) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    out.resize(width, BigInt::zero());
    out
}

/// Rank of an integer matrix. Every intermediate entry stays an integer
/// because each division by the previous pivot is exact.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use alloc::vec;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![q(0), q(0)]]), 0);
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(3), q(4)]]), 2);
        let half = Q::new(1.into(), 2.into());
        assert_eq!(rank(&[vec![half.clone(), q(1)], vec![q(1), q(2)]]), 1);
        // zero leading column, ragged rows
        assert_eq!(
            rank(&[vec![q(0), q(1)], vec![q(0), q(2), q(1)], vec![q(0)]]),
            2
        );
    }

    #[test]
    fn vandermonde_is_full_rank() {
        let rows: Vec<Vec<Q>> = (1..=6)
            .map(|x: i64| (0..6).map(|e| q(x.pow(e))).collect())
            .collect();
        assert_eq!(rank(&rows), 6);
        let mut dependent = rows.clone();
        dependent[5] = rows[0]
            .iter()
            .zip(&rows[1])
            .map(|(a, b)| a * q(3) - b)
            .collect();
        assert_eq!(rank(&dependent), 5);
    }
}
