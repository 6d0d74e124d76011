//! Smith normal form over the integers.

use std::fmt;

use crate::error::{Error, Result};

/// `ℤ^free_rank ⊕ ⊕ ℤ/dᵢ` with `d₁ | d₂ | …` and every `dᵢ > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u128>,
}

impl AbelianGroup {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn overflow() -> Error {
    Error::Precondition("integer overflow in Smith normal form".into())
}

/// Diagonal entries of the Smith normal form of `m` (rows × `cols`),
/// nonzero ones only.
pub fn invariant_factors(rows: &[Vec<i64>], cols: usize) -> Result<Vec<u128>> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            let mut v: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            v.resize(cols, 0);
            v
        })
        .collect();
    let n_rows = a.len();
    let mut diag = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == n_rows {
            break;
        }
        // bring the smallest nonzero entry of the remaining block to (top, col)
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(top) {
                for (j, &x) in row.iter().enumerate().skip(col) {
                    if x != 0 && pivot.is_none_or(|(pi, pj)| x.abs() < a[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return Ok(finish(diag));
            };
            a.swap(top, pi);
            for row in a.iter_mut() {
                row.swap(col, pj);
            }
            let p = a[top][col];
            let mut clean = true;
            for i in top + 1..n_rows {
                let q = a[i][col] / p;
                if q != 0 {
                    for j in col..cols {
                        a[i][j] = a[i][j]
                            .checked_sub(q.checked_mul(a[top][j]).ok_or_else(overflow)?)
                            .ok_or_else(overflow)?;
                    }
                }
                clean &= a[i][col] == 0;
            }
            for j in col + 1..cols {
                let q = a[top][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(top) {
                        row[j] = row[j]
                            .checked_sub(q.checked_mul(row[col]).ok_or_else(overflow)?)
                            .ok_or_else(overflow)?;
                    }
                }
                clean &= a[top][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold any entry not divisible by p into the pivot row
            let bad = (top + 1..n_rows).find(|&i| (col + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in col..cols {
                        a[top][j] = a[top][j].checked_add(a[i][j]).ok_or_else(overflow)?;
                    }
                }
                None => {
                    diag.push(p.unsigned_abs());
                    top += 1;
                    break;
                }
            }
        }
    }
    Ok(finish(diag))
}

fn finish(mut diag: Vec<u128>) -> Vec<u128> {
    diag.sort_unstable();
    diag
}

/// The abelian group `ℤ^cols / ⟨rows⟩`.
pub fn abelian_group(rows: &[Vec<i64>], cols: usize) -> Result<AbelianGroup> {
    let d = invariant_factors(rows, cols)?;
    Ok(AbelianGroup {
        free_rank: cols - d.len(),
        torsion: d.into_iter().filter(|&x| x > 1).collect(),
    })
}
