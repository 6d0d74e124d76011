//! Words in the Artin braid group `B_W` and the canonical section of
//! `p: B_W → W`.
//!
//! There is deliberately no general equality test for braid words. Words can
//! be compared syntactically, inside [`ReducedLift`] (where the Coxeter image
//! determines the braid), or modulo the derived subgroup of the pure braid
//! group via [`crate::nmap::equal_mod_derived`].

use std::fmt;
use std::ops::Mul;

use rand::Rng;

use crate::coxeter::{CoxElem, CoxeterSystem, Gen};
use crate::error::{Error, Result};

/// A generator `𝐬` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: Gen) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: Gen) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    sys: CoxeterSystem,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn empty(sys: &CoxeterSystem) -> Self {
        BraidWord {
            sys: sys.clone(),
            letters: Vec::new(),
        }
    }

    pub fn new(sys: &CoxeterSystem, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            sys.check_gen(l.gen)?;
        }
        Ok(BraidWord {
            sys: sys.clone(),
            letters,
        })
    }

    /// The positive word on the given generators.
    pub fn positive(sys: &CoxeterSystem, gens: &[Gen]) -> Result<Self> {
        Self::new(sys, gens.iter().map(|&g| Letter::pos(g)).collect())
    }

    pub fn generator(sys: &CoxeterSystem, s: Gen) -> Self {
        Self::positive(sys, &[s]).expect("generator out of range")
    }

    /// Parses tokens like `s1`, `s2^-1` or `s3^2`; `ε` is the empty word.
    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "ε" || tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((name, e)) => {
                    let e: i64 = e.parse().map_err(|_| Error::BadToken(tok.to_string()))?;
                    (name, e)
                }
                None => (tok, 1),
            };
            let g = sys.gen_index(name)?;
            let l = if exp < 0 {
                Letter::neg(g)
            } else {
                Letter::pos(g)
            };
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(BraidWord {
            sys: sys.clone(),
            letters,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.inverse)
    }

    /// The generator indices, ignoring exponents.
    pub fn gens(&self) -> Vec<Gen> {
        self.letters.iter().map(|l| l.gen).collect()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.sys != other.sys {
            return Err(Error::SystemMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            sys: self.sys.clone(),
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            sys: self.sys.clone(),
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `b̃`: letters reversed, exponents kept.
    pub fn reverse(&self) -> BraidWord {
        BraidWord {
            sys: self.sys.clone(),
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            sys: self.sys.clone(),
            letters,
        }
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            sys: self.sys.clone(),
            letters: out,
        }
    }

    /// The image `p(b)` in `W`.
    pub fn project(&self) -> CoxElem {
        CoxElem::from_word_unchecked(&self.sys, &self.gens())
    }

    /// Whether `p(b) = 1`.
    pub fn is_pure(&self) -> bool {
        self.project().is_identity()
    }

    pub fn is_reduced_lift(&self) -> Result<bool> {
        if !self.is_positive() {
            return Err(Error::Precondition("negative exponent in word".into()));
        }
        Ok(self.project().length() == self.len())
    }

    /// A uniformly random word with the given number of letters.
    pub fn random<R: Rng + ?Sized>(
        sys: &CoxeterSystem,
        len: usize,
        positive: bool,
        rng: &mut R,
    ) -> Self {
        let letters = (0..len)
            .map(|_| {
                let g = rng.gen_range(0..sys.rank()) as Gen;
                if !positive && rng.gen_bool(0.5) {
                    Letter::neg(g)
                } else {
                    Letter::pos(g)
                }
            })
            .collect();
        BraidWord {
            sys: sys.clone(),
            letters,
        }
    }

    pub fn format(&self) -> String {
        if self.letters.is_empty() {
            return "ε".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = self.sys.label(l.gen);
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({})", self.format())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.concat(rhs).expect("Coxeter system mismatch")
    }
}

/// A positive word whose length equals the length of its image in `W`.
///
/// Any two reduced words of the same element are equal in `B_W`, so a lift
/// is determined by its image; we store the ShortLex normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedLift {
    element: CoxElem,
}

impl ReducedLift {
    pub fn from_word(word: &BraidWord) -> Result<Self> {
        if !word.is_reduced_lift()? {
            return Err(Error::Precondition(format!(
                "{} is not a reduced word",
                word.format()
            )));
        }
        Ok(ReducedLift {
            element: word.project(),
        })
    }

    pub fn element(&self) -> &CoxElem {
        &self.element
    }

    pub fn word(&self) -> BraidWord {
        BraidWord::positive(self.element.system(), self.element.word()).expect("valid word")
    }

    pub fn len(&self) -> usize {
        self.element.length()
    }

    pub fn is_empty(&self) -> bool {
        self.element.is_identity()
    }
}

impl fmt::Debug for ReducedLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedLift({})", self.element.format())
    }
}

/// The canonical section `q: W → B_W`.
pub fn lift(w: &CoxElem) -> ReducedLift {
    ReducedLift { element: w.clone() }
}

pub fn project(b: &BraidWord) -> CoxElem {
    b.project()
}

/// `𝐬𝐭𝐬…` with `i` letters.
pub fn alternating_word(sys: &CoxeterSystem, s: Gen, t: Gen, i: usize) -> Result<BraidWord> {
    sys.check_gen(s)?;
    sys.check_gen(t)?;
    if let Some(m) = sys.m(s, t) {
        if i > m as usize {
            return Err(Error::AlternatingTooLong { len: i, m });
        }
    }
    let gens: Vec<Gen> = (0..i).map(|j| if j % 2 == 0 { s } else { t }).collect();
    BraidWord::positive(sys, &gens)
}

/// Whether `u` is a left divisor of `v` in the positive monoid.
pub fn left_divides(u: &ReducedLift, v: &ReducedLift) -> Result<bool> {
    let q = u.element.inverse().multiply(&v.element)?;
    Ok(v.len() >= u.len() && q.length() == v.len() - u.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::from_type("I2(3)").unwrap()
    }

    #[test]
    fn parse_and_format() {
        let sys = a2();
        let b = BraidWord::parse(&sys, "s t^-1 s^2").unwrap();
        assert_eq!(b.format(), "s t^-1 s s");
        assert_eq!(b.inverse().format(), "s^-1 s^-1 t s^-1");
        assert_eq!(b.reverse().format(), "s s t^-1 s");
        assert!(BraidWord::parse(&sys, "s^x").is_err());
        assert!(BraidWord::parse(&sys, "u").is_err());
        assert_eq!(BraidWord::parse(&sys, "ε").unwrap().format(), "ε");
    }

    #[test]
    fn projection() {
        let sys = a2();
        assert_eq!(
            BraidWord::parse(&sys, "s^-1").unwrap().project().format(),
            "s"
        );
        let b = BraidWord::parse(&sys, "s t s^-1").unwrap();
        assert_eq!(b.project().format(), "s t s");
        assert!(BraidWord::parse(&sys, "s s^-1 t^2").unwrap().is_pure());
    }

    #[test]
    fn reduced_lifts() {
        let sys = a2();
        let ss = BraidWord::parse(&sys, "s s").unwrap();
        assert!(!ss.is_reduced_lift().unwrap());
        assert!(BraidWord::parse(&sys, "s t s")
            .unwrap()
            .is_reduced_lift()
            .unwrap());
        assert!(BraidWord::parse(&sys, "s^-1")
            .unwrap()
            .is_reduced_lift()
            .is_err());
        assert!(lift(&sys.identity()).is_empty());
    }

    #[test]
    fn alternating() {
        let sys = a2();
        assert!(alternating_word(&sys, 0, 1, 0).unwrap().is_empty());
        assert_eq!(alternating_word(&sys, 0, 1, 3).unwrap().format(), "s t s");
        assert!(alternating_word(&sys, 0, 1, 4).is_err());
        let a = alternating_word(&sys, 0, 1, 3).unwrap().project();
        let b = alternating_word(&sys, 1, 0, 3).unwrap().project();
        assert_eq!(a, b);
    }

    #[test]
    fn divisibility() {
        let sys = a2();
        let st = lift(&sys.element("s t").unwrap());
        assert!(left_divides(&lift(&sys.identity()), &st).unwrap());
        assert!(left_divides(&lift(&sys.generator(0)), &st).unwrap());
        assert!(!left_divides(&lift(&sys.generator(1)), &st).unwrap());
    }
}
