//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use crate::error::{Error, Result};

/// Rank over the rationals of a dense integer matrix given as rows.
///
/// Every intermediate entry is a minor of the input, and each division by the
/// previous pivot is exact. Arithmetic is checked; overflow is an error
/// rather than a wrong answer.
pub fn integer_rank(mut rows: Vec<Vec<i64>>) -> Result<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Internal("ragged matrix".into()));
    }
    let mut m: Vec<Vec<i128>> = rows
        .drain(..)
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();

    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col];
            for j in col + 1..ncols {
                let num = pivot
                    .checked_mul(row[j])
                    .zip(factor.checked_mul(pivot_row[j]))
                    .and_then(|(a, b)| a.checked_sub(b))
                    .ok_or(Error::Overflow)?;
                if num % prev != 0 {
                    return Err(Error::Internal("inexact Bareiss division".into()));
                }
                row[j] = num / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}
