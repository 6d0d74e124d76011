//! Free groups on a finite basis and their automorphisms.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

mod models;

pub use models::{
    abelianized_action, act, conj_tower_check, d_commutation_certificate, nontriviality_sample,
    substitution_check, verify_braid_relations, ActionModel, ModelKind, NontrivialityReport,
    RelationReport, SignedPerm, TowerReport,
};

/// A letter `x_i^{±1}` over a basis indexed from 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeLetter {
    pub sym: usize,
    pub inverse: bool,
}

impl FreeLetter {
    pub fn inv(self) -> Self {
        FreeLetter {
            sym: self.sym,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn basis(sym: usize) -> Self {
        FreeWord {
            letters: vec![FreeLetter {
                sym,
                inverse: false,
            }],
        }
    }

    /// Reduces `letters` freely.
    pub fn new<I: IntoIterator<Item = FreeLetter>>(letters: I) -> Self {
        let mut out: Vec<FreeLetter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    /// Builds a word from `(symbol, exponent)` pairs, exponent `±1`.
    pub fn from_pairs(pairs: &[(usize, i32)]) -> Self {
        FreeWord::new(pairs.iter().map(|&(sym, e)| FreeLetter {
            sym,
            inverse: e < 0,
        }))
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_symbol(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.sym).max()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        FreeWord::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Exponent sums per symbol, `rank` entries.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for l in &self.letters {
            v[l.sym] += if l.inverse { -1 } else { 1 };
        }
        v
    }

    pub fn random<R: Rng + ?Sized>(rank: usize, len: usize, rng: &mut R) -> FreeWord {
        FreeWord::new((0..len).map(|_| FreeLetter {
            sym: rng.gen_range(0..rank),
            inverse: rng.gen_bool(0.5),
        }))
    }

    /// Names letters from `basis`; `1` for the empty word.
    pub fn format(&self, basis: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = basis.get(l.sym).map_or("?", String::as_str);
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses space-separated names with optional `^-1`.
    pub fn parse(basis: &[String], text: &str) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, inverse) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let sym = basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            letters.push(FreeLetter { sym, inverse });
        }
        Ok(FreeWord::new(letters))
    }
}

/// An automorphism given by the images of the basis, together with the
/// images of its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAut {
    images: Vec<FreeWord>,
    inverse: Vec<FreeWord>,
}

impl FreeAut {
    pub fn identity(rank: usize) -> Self {
        let images: Vec<FreeWord> = (0..rank).map(FreeWord::basis).collect();
        FreeAut {
            inverse: images.clone(),
            images,
        }
    }

    /// Checks invertibility and computes the inverse by Nielsen reduction of
    /// the image tuple.
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if images
            .iter()
            .any(|w| w.max_symbol().is_some_and(|m| m >= rank))
        {
            return Err(Error::NotInvertible(
                "image uses a symbol outside the basis".into(),
            ));
        }
        let inverse = nielsen_inverse(&images)?;
        let aut = FreeAut { images, inverse };
        debug_assert!(aut.compose(&aut.invert()).is_identity());
        Ok(aut)
    }

    /// Sets the images of the listed symbols and fixes the rest.
    pub fn with_images(rank: usize, changes: &[(usize, FreeWord)]) -> Result<Self> {
        let mut images: Vec<FreeWord> = (0..rank).map(FreeWord::basis).collect();
        for (sym, w) in changes {
            if *sym >= rank {
                return Err(Error::NotInvertible(format!(
                    "symbol {sym} outside the basis"
                )));
            }
            images[*sym] = w.clone();
        }
        FreeAut::new(images)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, sym: usize) -> &FreeWord {
        &self.images[sym]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        apply_images(&self.images, w)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeAut) -> FreeAut {
        FreeAut {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
            inverse: self
                .inverse
                .iter()
                .map(|w| apply_images(&other.inverse, w))
                .collect(),
        }
    }

    pub fn invert(&self) -> FreeAut {
        FreeAut {
            images: self.inverse.clone(),
            inverse: self.images.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == FreeWord::basis(i))
    }

    pub fn format(&self, basis: &[String]) -> String {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, w)| **w != FreeWord::basis(*i))
            .map(|(i, w)| format!("{} ↦ {}", basis[i], w.format(basis)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.max_symbol().unwrap_or(0))
            .map(|i| format!("x{}", i + 1))
            .collect();
        f.write_str(&self.format(&names))
    }
}

fn apply_images(images: &[FreeWord], w: &FreeWord) -> FreeWord {
    FreeWord::new(w.letters.iter().flat_map(|l| {
        let img = &images[l.sym];
        if l.inverse {
            img.inverse().letters
        } else {
            img.letters.clone()
        }
    }))
}

/// Greedy Nielsen reduction of `images`. Each entry carries the word in the
/// original basis that the automorphism sends to it; when the tuple reduces
/// to a signed permutation of the basis these words give the inverse.
fn nielsen_inverse(images: &[FreeWord]) -> Result<Vec<FreeWord>> {
    let rank = images.len();
    let mut cur: Vec<FreeWord> = images.to_vec();
    let mut pre: Vec<FreeWord> = (0..rank).map(FreeWord::basis).collect();
    loop {
        let mut best: Option<(usize, FreeWord, FreeWord)> = None;
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let (u, v) = (&cur[j], cur[j].inverse());
                let (pu, pv) = (&pre[j], pre[j].inverse());
                let candidates = [
                    (cur[i].mul(u), pre[i].mul(pu)),
                    (cur[i].mul(&v), pre[i].mul(&pv)),
                    (u.mul(&cur[i]), pu.mul(&pre[i])),
                    (v.mul(&cur[i]), pv.mul(&pre[i])),
                ];
                for (c, p) in candidates {
                    let shorter = best.as_ref().map_or(cur[i].len(), |b| b.1.len());
                    if c.len() < shorter && c.len() < cur[i].len() {
                        best = Some((i, c, p));
                    }
                }
            }
        }
        match best {
            Some((i, c, p)) => {
                cur[i] = c;
                pre[i] = p;
            }
            None => break,
        }
    }
    let mut inverse = vec![None; rank];
    for (c, p) in cur.iter().zip(pre) {
        match c.letters() {
            [l] if inverse[l.sym].is_none() => {
                inverse[l.sym] = Some(if l.inverse { p.inverse() } else { p });
            }
            _ => {
                return Err(Error::NotInvertible(
                    "images do not Nielsen-reduce to a basis".into(),
                ))
            }
        }
    }
    Ok(inverse.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_and_invert() {
        let w = FreeWord::from_pairs(&[(0, 1), (0, -1), (1, 1)]);
        assert_eq!(w, FreeWord::basis(1));
        let f = FreeAut::with_images(4, &[(2, FreeWord::from_pairs(&[(1, 1), (2, -1), (3, 1)]))])
            .unwrap();
        let g = f.invert();
        assert!(f.compose(&g).is_identity());
        assert!(g.compose(&f).is_identity());
        assert!(FreeAut::new(vec![FreeWord::from_pairs(&[(0, 1), (0, 1)])]).is_err());
        assert!(FreeAut::new(vec![FreeWord::basis(1), FreeWord::basis(1)]).is_err());
    }
}
