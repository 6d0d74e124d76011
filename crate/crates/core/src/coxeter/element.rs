use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;

use super::system::{gens_of, CoxeterSystem, Gen, GenSet};
use crate::error::{Error, Result};

/// Which side a descent or multiplication happens on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An element of `W`, stored as its ShortLex-least reduced word.
///
/// Ordering is ShortLex on that word (length first, then lexicographic in
/// generator index order), which is also the order used for all canonical
/// output.
#[derive(Clone)]
pub struct CoxElem {
    sys: CoxeterSystem,
    word: Vec<Gen>,
}

impl CoxElem {
    pub fn identity(sys: &CoxeterSystem) -> Self {
        CoxElem {
            sys: sys.clone(),
            word: Vec::new(),
        }
    }

    pub fn generator(sys: &CoxeterSystem, s: Gen) -> Self {
        assert!((s as usize) < sys.rank(), "generator {s} out of range");
        CoxElem {
            sys: sys.clone(),
            word: vec![s],
        }
    }

    /// The element represented by an arbitrary word, brought to normal form.
    pub fn from_word(sys: &CoxeterSystem, word: &[Gen]) -> Result<Self> {
        for &s in word {
            sys.check_gen(s)?;
        }
        Ok(Self::from_word_unchecked(sys, word))
    }

    pub(crate) fn from_word_unchecked(sys: &CoxeterSystem, word: &[Gen]) -> Self {
        let reduced = sys.reduce_word(&[], word);
        Self::from_reduced(sys, &reduced)
    }

    /// Builds from a word already known to be reduced.
    pub(crate) fn from_reduced(sys: &CoxeterSystem, reduced: &[Gen]) -> Self {
        CoxElem {
            sys: sys.clone(),
            word: sys.shortlex_of_reduced(reduced),
        }
    }

    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        let word = sys.parse_word(text)?;
        Ok(Self::from_word_unchecked(sys, &word))
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    /// The ShortLex normal form.
    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let rev: Vec<Gen> = self.word.iter().rev().copied().collect();
        Self::from_reduced(&self.sys, &rev)
    }

    fn check_same(&self, other: &CoxElem) -> Result<()> {
        if self.sys == other.sys {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub fn multiply(&self, other: &CoxElem) -> Result<CoxElem> {
        self.check_same(other)?;
        let reduced = self.sys.reduce_word(&self.word, &other.word);
        Ok(Self::from_reduced(&self.sys, &reduced))
    }

    pub fn mul_gen(&self, s: Gen) -> CoxElem {
        let reduced = self.sys.right_mul_reduced(&self.word, s);
        Self::from_reduced(&self.sys, &reduced)
    }

    pub fn gen_mul(&self, s: Gen) -> CoxElem {
        let reduced = self.sys.left_mul_reduced(s, &self.word);
        Self::from_reduced(&self.sys, &reduced)
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &CoxElem) -> Result<CoxElem> {
        self.multiply(other)?.multiply(&self.inverse())
    }

    pub fn descents(&self, side: Side) -> GenSet {
        match side {
            Side::Left => self.sys.left_descents_reduced(&self.word),
            Side::Right => self.sys.right_descents_reduced(&self.word),
        }
    }

    pub fn descent_list(&self, side: Side) -> Vec<Gen> {
        gens_of(self.descents(side)).collect()
    }

    pub fn is_descent(&self, side: Side, s: Gen) -> bool {
        self.descents(side) & (1u64 << s) != 0
    }

    pub fn is_involution(&self) -> bool {
        self.inverse() == *self
    }

    pub fn format(&self) -> String {
        self.sys.format_word(&self.word)
    }

    /// Labels joined by `.`, for use inside bracketed symbol names.
    pub fn compact(&self) -> String {
        if self.word.is_empty() {
            "ε".to_string()
        } else {
            self.word
                .iter()
                .map(|&g| self.sys.label(g))
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

impl PartialEq for CoxElem {
    fn eq(&self, other: &Self) -> bool {
        self.sys == other.sys && self.word == other.word
    }
}

impl Eq for CoxElem {}

impl Hash for CoxElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sys.id().hash(state);
        self.word.hash(state);
    }
}

impl PartialOrd for CoxElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CoxElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sys
            .id()
            .cmp(&other.sys.id())
            .then(self.word.len().cmp(&other.word.len()))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl fmt::Debug for CoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxElem({})", self.format())
    }
}

impl fmt::Display for CoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// Panics when the operands come from different systems; use
/// [`CoxElem::multiply`] for a checked product.
impl Mul for &CoxElem {
    type Output = CoxElem;

    fn mul(self, rhs: &CoxElem) -> CoxElem {
        self.multiply(rhs).expect("Coxeter system mismatch")
    }
}

impl CoxeterSystem {
    /// ShortLex normal form of an arbitrary word.
    pub fn normal_form(&self, word: &[Gen]) -> Result<CoxElem> {
        CoxElem::from_word(self, word)
    }

    /// Whether `word` is a reduced expression.
    pub fn is_reduced(&self, word: &[Gen]) -> Result<bool> {
        for &s in word {
            self.check_gen(s)?;
        }
        let mut cur: Vec<Gen> = Vec::with_capacity(word.len());
        for &s in word {
            if self.right_descents_reduced(&cur) & (1u64 << s) != 0 {
                return Ok(false);
            }
            cur.push(s);
        }
        Ok(true)
    }

    pub fn identity(&self) -> CoxElem {
        CoxElem::identity(self)
    }

    pub fn generator(&self, s: Gen) -> CoxElem {
        CoxElem::generator(self, s)
    }

    pub fn element(&self, text: &str) -> Result<CoxElem> {
        CoxElem::parse(self, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i2(m: u32) -> CoxeterSystem {
        CoxeterSystem::from_type(&format!("I2({m})")).unwrap()
    }

    #[test]
    fn cancellation_and_braid_moves() {
        let a2 = i2(3);
        assert_eq!(a2.element("s t s s").unwrap().format(), "s t");
        assert_eq!(a2.element("t s t").unwrap().format(), "s t s");
        assert_eq!(a2.element("s t s t").unwrap().format(), "t s");
        assert!(a2.element("s t s t s t").unwrap().is_identity());
    }

    #[test]
    fn group_laws() {
        let a2 = i2(3);
        let s = a2.generator(0);
        assert!((&s * &s).is_identity());
        let st = a2.element("s t").unwrap();
        assert_eq!(st.inverse().format(), "t s");
        let b2 = i2(4);
        let w0 = b2.element("s t s t").unwrap();
        assert_eq!(w0.length(), 4);
        assert_eq!(w0, b2.element("t s t s").unwrap());
        assert!(st.multiply(&w0).is_err());
    }

    #[test]
    fn descents_and_reducedness() {
        let a2 = i2(3);
        let w0 = a2.element("s t s").unwrap();
        assert_eq!(w0.descent_list(Side::Right), vec![0, 1]);
        assert_eq!(w0.descent_list(Side::Left), vec![0, 1]);
        assert!(a2.is_reduced(&[0, 1, 0]).unwrap());
        assert!(!a2.is_reduced(&[0, 0]).unwrap());
        let st = a2.element("s t").unwrap();
        assert_eq!(st.descent_list(Side::Right), vec![1]);
        assert_eq!(st.descent_list(Side::Left), vec![0]);
    }

    #[test]
    fn infinite_dihedral_never_braids() {
        let sys = CoxeterSystem::from_type("Atilde1").unwrap();
        let w = sys.normal_form(&[0, 1, 0, 1, 0, 1, 1, 0]).unwrap();
        assert_eq!(w.word(), &[0, 1, 0, 1]);
        assert!(sys.is_reduced(&[0, 1, 0, 1, 0, 1, 0]).unwrap());
    }

    #[test]
    fn affine_normal_form() {
        let sys = CoxeterSystem::from_type("Atilde2").unwrap();
        let w = sys.element("s r t r s").unwrap();
        assert_eq!(w.length(), 5);
        assert!(w.is_involution());
        let x = sys.element("r s r s").unwrap();
        assert_eq!(x.format(), "s r");
    }
}
