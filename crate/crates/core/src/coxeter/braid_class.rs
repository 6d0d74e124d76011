//! Brute-force closure under braid moves.
//!
//! This is the textbook solution of the word problem: two reduced words
//! represent the same element iff they are connected by braid moves, and a
//! word is non-reduced iff some word in its braid class contains `s s`.
//! It is exponential and only used for small inputs: reduced-word counts and
//! as an independent check on the descent engine.

use std::collections::{BTreeSet, VecDeque};

use super::system::{CoxeterSystem, Gen};
use crate::error::{Error, Result};

impl CoxeterSystem {
    /// All words reachable from `word` by braid moves (no cancellation).
    pub fn braid_class(&self, word: &[Gen], cap: usize) -> Result<BTreeSet<Vec<Gen>>> {
        for &s in word {
            self.check_gen(s)?;
        }
        let mut seen = BTreeSet::new();
        seen.insert(word.to_vec());
        let mut queue = VecDeque::from([word.to_vec()]);
        while let Some(w) = queue.pop_front() {
            for next in self.braid_moves(&w) {
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }

    fn braid_moves(&self, w: &[Gen]) -> Vec<Vec<Gen>> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            let (a, rest) = (w[i], &w[i..]);
            if rest.len() < 2 || rest[1] == a {
                continue;
            }
            let b = rest[1];
            let Some(m) = self.m(a, b) else { continue };
            let m = m as usize;
            if rest.len() < m {
                continue;
            }
            let alternates = (0..m).all(|j| rest[j] == if j % 2 == 0 { a } else { b });
            if alternates {
                let mut next = w.to_vec();
                for j in 0..m {
                    next[i + j] = if j % 2 == 0 { b } else { a };
                }
                out.push(next);
            }
        }
        out
    }

    /// ShortLex normal form by braid-class closure with `ss`-cancellation.
    pub fn closure_normal_form(&self, word: &[Gen], cap: usize) -> Result<Vec<Gen>> {
        let mut cur = word.to_vec();
        'outer: loop {
            let class = self.braid_class(&cur, cap)?;
            for w in &class {
                if let Some(i) = w.windows(2).position(|p| p[0] == p[1]) {
                    let mut shorter = w.clone();
                    shorter.drain(i..i + 2);
                    cur = shorter;
                    continue 'outer;
                }
            }
            return Ok(class.into_iter().next().unwrap_or_default());
        }
    }

    /// Number of reduced expressions of the element with reduced word `word`.
    pub fn count_reduced_words(&self, word: &[Gen], cap: usize) -> Result<usize> {
        Ok(self.braid_class(word, cap)?.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_classes() {
        let a2 = CoxeterSystem::from_type("A2").unwrap();
        assert_eq!(a2.count_reduced_words(&[0, 1, 0], 100).unwrap(), 2);
        let a3 = CoxeterSystem::from_type("A3").unwrap();
        let w0 = a3.longest_element(0b111).unwrap();
        assert_eq!(a3.count_reduced_words(w0.word(), 1000).unwrap(), 16);
    }

    #[test]
    fn closure_agrees_on_small_words() {
        let a2 = CoxeterSystem::from_type("I2(3)").unwrap();
        assert_eq!(
            a2.closure_normal_form(&[1, 0, 1], 100).unwrap(),
            vec![0, 1, 0]
        );
        assert_eq!(
            a2.closure_normal_form(&[0, 1, 0, 1], 100).unwrap(),
            vec![1, 0]
        );
        assert!(a2.closure_normal_form(&[0, 0], 100).unwrap().is_empty());
    }
}
