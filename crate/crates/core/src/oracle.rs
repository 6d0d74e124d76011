//! Permutation models of `A_n`, `B_n` and `D_n`, used to cross-check the
//! word arithmetic.
//!
//! A word `s_{i1}…s_{ik}` maps to the composite `g_{i1} ∘ … ∘ g_{ik}` of
//! signed permutations of `±1..±n`, stored in one-line notation.

use rand::Rng;
use serde::Serialize;

use crate::coxeter::{CoxElem, CoxeterSystem, CoxeterType, Gen, GenSet};
use crate::error::{Error, Result};

/// A signed permutation in one-line notation: `w[i−1] = w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Perm(pub Vec<i32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n as i32).collect())
    }

    pub fn apply(&self, i: i32) -> i32 {
        let v = self.0[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.apply(j)).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            let i = i as i32 + 1;
            out[v.unsigned_abs() as usize - 1] = if v < 0 { -i } else { i };
        }
        Perm(out)
    }

    fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    /// `#{i < j : w(i) + w(j) < 0}`.
    fn negative_sum_pairs(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] + w[j] < 0)
            .count()
    }

    fn negatives(&self) -> usize {
        self.0.iter().filter(|&&v| v < 0).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OracleKind {
    /// Permutations of `n + 1` points.
    A,
    /// Signed permutations.
    B,
    /// Signed permutations with an even number of sign changes.
    D,
}

/// The images of the simple reflections of a named `A_n`, `B_n` or `D_n`.
#[derive(Debug, Clone)]
pub struct PermOracle {
    pub kind: OracleKind,
    pub points: usize,
    pub gens: Vec<Perm>,
}

fn swap(n: usize, i: usize, j: usize, sign: i32) -> Perm {
    let mut p = Perm::identity(n);
    p.0.swap(i, j);
    p.0[i] *= sign;
    p.0[j] *= sign;
    p
}

impl PermOracle {
    pub fn for_system(sys: &CoxeterSystem) -> Result<Self> {
        let unsupported = || Error::UnsupportedModel("no permutation model for this system".into());
        let kind = sys.kind().ok_or_else(unsupported)?;
        let oracle = match kind {
            CoxeterType::A(n) => PermOracle {
                kind: OracleKind::A,
                points: n + 1,
                gens: (0..n).map(|i| swap(n + 1, i, i + 1, 1)).collect(),
            },
            CoxeterType::B(n) => {
                let mut neg = Perm::identity(n);
                neg.0[0] = -1;
                let mut gens = vec![neg];
                gens.extend((1..n).map(|i| swap(n, i - 1, i, 1)));
                PermOracle {
                    kind: OracleKind::B,
                    points: n,
                    gens,
                }
            }
            // s2, s2', s3.. ↦ (1 2), (1 −2), (2 3), ..
            CoxeterType::D(n) => {
                let mut gens = vec![swap(n, 0, 1, 1), swap(n, 0, 1, -1)];
                gens.extend((2..n).map(|i| swap(n, i - 1, i, 1)));
                PermOracle {
                    kind: OracleKind::D,
                    points: n,
                    gens,
                }
            }
            _ => return Err(unsupported()),
        };
        if oracle.gens.len() != sys.rank() {
            return Err(unsupported());
        }
        Ok(oracle)
    }

    pub fn of_word(&self, word: &[Gen]) -> Perm {
        word.iter().fold(Perm::identity(self.points), |acc, &s| {
            acc.compose(&self.gens[s as usize])
        })
    }

    pub fn of(&self, w: &CoxElem) -> Perm {
        self.of_word(w.word())
    }

    pub fn length(&self, p: &Perm) -> usize {
        match self.kind {
            OracleKind::A => p.inversions(),
            OracleKind::B => p.inversions() + p.negative_sum_pairs() + p.negatives(),
            OracleKind::D => p.inversions() + p.negative_sum_pairs(),
        }
    }

    pub fn right_descents(&self, p: &Perm) -> GenSet {
        let l = self.length(p);
        (0..self.gens.len())
            .filter(|&s| self.length(&p.compose(&self.gens[s])) < l)
            .fold(0, |acc, s| acc | 1 << s)
    }

    pub fn left_descents(&self, p: &Perm) -> GenSet {
        self.right_descents(&p.inverse())
    }

    /// The order of the group: `(n+1)!`, `2ⁿn!` or `2ⁿ⁻¹n!`.
    pub fn order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        match self.kind {
            OracleKind::A => fact(self.points),
            OracleKind::B => fact(self.points) << self.points,
            OracleKind::D => fact(self.points) << (self.points - 1),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct OracleReport {
    pub elements: usize,
    pub pairs: usize,
    pub exhaustive: bool,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares products, lengths, descents and injectivity against the
/// permutation model. All pairs are checked when there are at most
/// `max_pairs` of them, otherwise `max_pairs` random pairs.
pub fn oracle_check<R: Rng + ?Sized>(
    sys: &CoxeterSystem,
    max_pairs: usize,
    rng: &mut R,
) -> Result<OracleReport> {
    let oracle = PermOracle::for_system(sys)?;
    let elems = sys.enumerate_elements(None)?;
    let perms: Vec<Perm> = elems.iter().map(|w| oracle.of(w)).collect();
    let mut report = OracleReport {
        elements: elems.len(),
        ..Default::default()
    };
    if elems.len() as u128 != oracle.order() {
        report.mismatches.push(format!(
            "{} elements, expected {}",
            elems.len(),
            oracle.order()
        ));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (w, p) in elems.iter().zip(&perms) {
        if !seen.insert(p.clone()) {
            report
                .mismatches
                .push(format!("{w} collides with another element"));
        }
        if oracle.length(p) != w.length() {
            report.mismatches.push(format!("length of {w}"));
        }
        if oracle.right_descents(p) != w.descents(crate::Side::Right)
            || oracle.left_descents(p) != w.descents(crate::Side::Left)
        {
            report.mismatches.push(format!("descents of {w}"));
        }
    }
    let n = elems.len();
    let check = |i: usize, j: usize, report: &mut OracleReport| -> Result<()> {
        let prod = elems[i].multiply(&elems[j])?;
        report.pairs += 1;
        if oracle.of(&prod) != perms[i].compose(&perms[j]) {
            report
                .mismatches
                .push(format!("{} · {}", elems[i], elems[j]));
        }
        Ok(())
    };
    if n.saturating_mul(n) <= max_pairs {
        report.exhaustive = true;
        for i in 0..n {
            for j in 0..n {
                check(i, j, &mut report)?;
            }
        }
    } else {
        for _ in 0..max_pairs {
            check(rng.gen_range(0..n), rng.gen_range(0..n), &mut report)?;
        }
    }
    Ok(report)
}
