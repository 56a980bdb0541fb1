//! Exact Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

/// Rank of the matrix whose rows are given, each of length `ncols`.
pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = std::mem::take(&mut rows[rank]);
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Dimension of the solution space of the homogeneous system.
pub(crate) fn nullity(rows: Vec<Vec<BigRational>>, ncols: usize) -> usize {
    ncols - rank(rows, ncols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(rank(m(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]]), 3), 2);
        assert_eq!(nullity(m(&[]), 4), 4);
        assert_eq!(rank(m(&[&[2, 3, 5], &[7, 11, 13], &[17, 19, 23]]), 3), 3);
    }
}
