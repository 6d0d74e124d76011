use std::collections::BTreeSet;

use super::element::{CoxElem, Side};
use super::system::{gens_of, CoxeterSystem, GenSet};
use crate::error::{Error, Result};

impl CoxeterSystem {
    /// Whether `W_I` is finite.
    pub fn is_spherical(&self, subset: GenSet) -> bool {
        self.finite_info(subset & self.all_gens()).is_some()
    }

    /// The longest element `w_I` of a spherical `W_I`.
    pub fn longest_element(&self, subset: GenSet) -> Result<CoxElem> {
        if !self.is_spherical(subset) {
            return Err(Error::NotSpherical);
        }
        let mut w = self.identity();
        loop {
            let missing = subset & !w.descents(Side::Right);
            if missing == 0 {
                return Ok(w);
            }
            w = w.mul_gen(missing.trailing_zeros() as u8);
        }
    }

    /// Whether no `s ∈ I` shortens `w` on the left.
    pub fn is_i_reduced(&self, w: &CoxElem, subset: GenSet) -> bool {
        w.descents(Side::Left) & subset == 0
    }

    /// The minimal-length representative of `W_I·w`.
    pub fn coset_rep(&self, w: &CoxElem, subset: GenSet) -> CoxElem {
        let mut cur = w.clone();
        loop {
            let d = cur.descents(Side::Left) & subset;
            if d == 0 {
                return cur;
            }
            cur = cur.gen_mul(d.trailing_zeros() as u8);
        }
    }

    /// Elements of `W`, by increasing length and ShortLex within a length.
    ///
    /// With `max_length = None` the group must be finite.
    pub fn enumerate_elements(&self, max_length: Option<usize>) -> Result<Vec<CoxElem>> {
        self.enumerate_filtered(self.all_gens(), 0, max_length)
    }

    /// Elements of the parabolic subgroup `W_I`.
    pub fn enumerate_parabolic(
        &self,
        subset: GenSet,
        max_length: Option<usize>,
    ) -> Result<Vec<CoxElem>> {
        self.enumerate_filtered(subset, 0, max_length)
    }

    /// The `I`-reduced elements (minimal representatives of `W_I\W`).
    pub fn enumerate_i_reduced(
        &self,
        subset: GenSet,
        max_length: Option<usize>,
    ) -> Result<Vec<CoxElem>> {
        self.enumerate_filtered(self.all_gens(), subset, max_length)
    }

    /// Breadth-first growth by right multiplication with generators in
    /// `allowed`, keeping only elements without left descents in `forbidden`.
    /// Both sets are closed under taking prefixes, so this is exhaustive.
    fn enumerate_filtered(
        &self,
        allowed: GenSet,
        forbidden: GenSet,
        max_length: Option<usize>,
    ) -> Result<Vec<CoxElem>> {
        let allowed = allowed & self.all_gens();
        let bound = match max_length {
            Some(b) => b,
            None if self.is_spherical(allowed) => usize::MAX,
            None => return Err(Error::InfiniteGroup),
        };
        let cap = self.caps().max_elements;
        let mut out = vec![self.identity()];
        let mut level = vec![self.identity()];
        let mut len = 0;
        while !level.is_empty() && len < bound {
            let mut next = BTreeSet::new();
            for w in &level {
                let desc = w.descents(Side::Right);
                for s in gens_of(allowed & !desc) {
                    let ws = w.mul_gen(s);
                    if ws.descents(Side::Left) & forbidden == 0 {
                        next.insert(ws);
                    }
                }
            }
            level = next.into_iter().collect();
            out.extend(level.iter().cloned());
            if out.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
            len += 1;
        }
        Ok(out)
    }
}
