//! Exact rank of integer matrices.
//!
//! Rows are eliminated fraction-free (`row <- p * row - a * pivot_row`) and
//! divided by their content after every step, which keeps the entries of
//! boundary matrices tiny. Machine arithmetic is checked; on overflow the
//! elimination restarts over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over the rationals of a dense row-major integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut work = rows.to_vec();
    match rank_checked(&mut work) {
        Some(r) => r,
        None => rank_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn gcd_normalize(row: &mut [i64]) {
    let g = row.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

fn rank_checked(rows: &mut [Vec<i64>]) -> Option<usize> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        // Smallest magnitude pivot keeps growth down.
        let Some(pivot) = (rank..height)
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let prow = &done[rank];
        let p = prow[col];
        for row in rest.iter_mut() {
            let a = row[col];
            if a == 0 {
                continue;
            }
            let g = p.gcd(&a);
            let (pm, am) = (p / g, a / g);
            for c in col..width {
                row[c] = row[c].checked_mul(pm)?.checked_sub(prow[c].checked_mul(am)?)?;
            }
            gcd_normalize(row);
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot) = (rank..height)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].abs())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let prow = &done[rank];
        let p = &prow[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let (pm, am) = (p / &g, &row[col] / &g);
            for c in col..width {
                row[c] = &row[c] * &pm - &prow[c] * &am;
            }
            let content = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if content > BigInt::from(1) {
                row.iter_mut().for_each(|x| *x /= &content);
            }
        }
        rank += 1;
    }
    rank
}
