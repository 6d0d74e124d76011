//! Word rewriting on reduced expressions.
//!
//! Everything here is driven by two memoized primitives on *reduced* words:
//!
//! * `left_descents(v)`: the set of `s` with `l(s·v) < l(v)`;
//! * `left_divide(s, v)`: a reduced word for `s·v` when `s` is a left descent.
//!
//! Both recurse on strictly shorter words using only rank-2 braid moves:
//! for `v = f·y` and `r ≠ f`, `r` is a left descent of `v` iff `v` admits the
//! longest element of `⟨r, f⟩` as a reduced prefix, i.e. iff `y` admits the
//! alternating word `r f r …` of length `m(r, f) − 1` as a reduced prefix.
//! This works verbatim for infinite and non-crystallographic systems.

use super::system::{CoxeterSystem, Gen, GenSet};

impl CoxeterSystem {
    /// Left descent set of a reduced word.
    pub(crate) fn left_descents_reduced(&self, v: &[Gen]) -> GenSet {
        let Some(&first) = v.first() else {
            return 0;
        };
        if let Some(&d) = self.inner.descents.read().unwrap().get(v) {
            return d;
        }
        let tail = &v[1..];
        let mut mask = 1u64 << first;
        for r in self.gens() {
            if r == first {
                continue;
            }
            if let Some(m) = self.m(first, r) {
                if self.has_alternating_prefix(tail, r, first, m as usize - 1) {
                    mask |= 1u64 << r;
                }
            }
        }
        self.inner
            .descents
            .write()
            .unwrap()
            .insert(v.to_vec(), mask);
        mask
    }

    /// Whether the reduced word `y` has the alternating word `a b a …` of
    /// length `len` as a reduced prefix.
    fn has_alternating_prefix(&self, y: &[Gen], a: Gen, b: Gen, len: usize) -> bool {
        if len > y.len() {
            return false;
        }
        let mut cur = y.to_vec();
        for j in 0..len {
            let c = if j % 2 == 0 { a } else { b };
            if self.left_descents_reduced(&cur) & (1u64 << c) == 0 {
                return false;
            }
            cur = self.left_divide_reduced(c, &cur);
        }
        true
    }

    /// A reduced word for `s·v`; `s` must be a left descent of the reduced
    /// word `v`.
    pub(crate) fn left_divide_reduced(&self, s: Gen, v: &[Gen]) -> Vec<Gen> {
        let first = v[0];
        if s == first {
            return v[1..].to_vec();
        }
        let key = (s, v.to_vec());
        if let Some(out) = self.inner.quotients.read().unwrap().get(&key) {
            return out.clone();
        }
        let m = self
            .m(first, s)
            .expect("left descent with infinite m(first, s)") as usize;
        // v = (f s f …)_m · z = (s f s …)_m · z, so s·v = (f s f …)_{m-1} · z
        let mut z = v[1..].to_vec();
        for j in 0..m - 1 {
            let c = if j % 2 == 0 { s } else { first };
            z = self.left_divide_reduced(c, &z);
        }
        let mut out: Vec<Gen> = (0..m - 1)
            .map(|j| if j % 2 == 0 { first } else { s })
            .collect();
        out.extend(z);
        self.inner
            .quotients
            .write()
            .unwrap()
            .insert(key, out.clone());
        out
    }

    pub(crate) fn right_descents_reduced(&self, v: &[Gen]) -> GenSet {
        let rev: Vec<Gen> = v.iter().rev().copied().collect();
        self.left_descents_reduced(&rev)
    }

    /// A reduced word for `v·s` given a reduced word `v`.
    pub(crate) fn right_mul_reduced(&self, v: &[Gen], s: Gen) -> Vec<Gen> {
        if self.right_descents_reduced(v) & (1u64 << s) != 0 {
            let rev: Vec<Gen> = v.iter().rev().copied().collect();
            let mut out = self.left_divide_reduced(s, &rev);
            out.reverse();
            out
        } else {
            let mut out = v.to_vec();
            out.push(s);
            out
        }
    }

    /// A reduced word for `s·v` given a reduced word `v`.
    pub(crate) fn left_mul_reduced(&self, s: Gen, v: &[Gen]) -> Vec<Gen> {
        if self.left_descents_reduced(v) & (1u64 << s) != 0 {
            self.left_divide_reduced(s, v)
        } else {
            let mut out = Vec::with_capacity(v.len() + 1);
            out.push(s);
            out.extend_from_slice(v);
            out
        }
    }

    /// The lexicographically least reduced word of the element represented
    /// by the reduced word `v`: repeatedly strip the smallest left descent.
    pub(crate) fn shortlex_of_reduced(&self, v: &[Gen]) -> Vec<Gen> {
        let mut out = Vec::with_capacity(v.len());
        let mut cur = v.to_vec();
        while !cur.is_empty() {
            let d = self.left_descents_reduced(&cur);
            let a = d.trailing_zeros() as Gen;
            out.push(a);
            cur = self.left_divide_reduced(a, &cur);
        }
        out
    }

    /// Reduces an arbitrary word, returning some reduced word for the same
    /// element (not necessarily the normal form).
    pub(crate) fn reduce_word(&self, start: &[Gen], word: &[Gen]) -> Vec<Gen> {
        word.iter()
            .fold(start.to_vec(), |acc, &s| self.right_mul_reduced(&acc, s))
    }

    /// Drops the rewriting caches.
    pub fn clear_caches(&self) {
        self.inner.descents.write().unwrap().clear();
        self.inner.quotients.write().unwrap().clear();
    }

    pub fn cache_size(&self) -> usize {
        self.inner.descents.read().unwrap().len() + self.inner.quotients.read().unwrap().len()
    }
}
