//! Exact rational elimination: ranks of sparse matrices and solutions of
//! small dense systems.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseRow = BTreeMap<usize, BigRational>;

/// Rank over ℚ. Rows are consumed; pivots are chosen among the sparsest
/// remaining rows to limit fill-in.
pub fn rank(mut rows: Vec<SparseRow>) -> usize {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    while !rows.is_empty() {
        let (pi, _) = rows.iter().enumerate().min_by_key(|(_, r)| r.len()).unwrap();
        let pivot_row = rows.swap_remove(pi);
        let (&col, pv) = pivot_row.iter().next().unwrap();
        let pv = pv.clone();
        rank += 1;
        for row in rows.iter_mut() {
            let Some(f) = row.get(&col).cloned() else { continue };
            let factor = f / &pv;
            for (c, v) in &pivot_row {
                let entry = row.entry(*c).or_insert_with(BigRational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}

/// Solves `A x = b` exactly. Returns `None` when the system is inconsistent.
/// Free variables, if any, are set to zero.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=cols {
                    let delta = &f * &m[r][k];
                    m[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}
