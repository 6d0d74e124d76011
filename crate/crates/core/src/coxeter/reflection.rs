use std::collections::BTreeSet;
use std::fmt;

use super::element::{CoxElem, Side};
use super::system::{CoxeterSystem, Gen};
use crate::error::{Error, Result};

/// A reflection `u·s·u⁻¹` together with a palindromic witness of minimal
/// length: `l(element) = 2·l(u) + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection {
    element: CoxElem,
    u: CoxElem,
    s: Gen,
}

impl Reflection {
    pub fn simple(sys: &CoxeterSystem, s: Gen) -> Self {
        Reflection {
            element: sys.generator(s),
            u: sys.identity(),
            s,
        }
    }

    /// Recognizes `w` as a reflection and computes its witness.
    pub fn from_element(w: &CoxElem) -> Result<Self> {
        let (u, s) = palindromize_elem(w)?;
        Ok(Reflection {
            element: w.clone(),
            u,
            s,
        })
    }

    pub fn element(&self) -> &CoxElem {
        &self.element
    }

    pub fn witness(&self) -> (&CoxElem, Gen) {
        (&self.u, self.s)
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.element.system()
    }

    pub fn length(&self) -> usize {
        self.element.length()
    }

    /// The palindromic reduced word `u s ũ`.
    pub fn palindrome(&self) -> Vec<Gen> {
        let mut w = self.u.word().to_vec();
        w.push(self.s);
        w.extend(self.u.word().iter().rev());
        w
    }

    pub fn format(&self) -> String {
        self.element.format()
    }
}

impl fmt::Debug for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Reflection({})", self.format())
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// Peels matching letters off both ends: at each step the smallest left
/// descent `a` with `l(a·w·a) = l(w) − 2` is chosen.
fn palindromize_elem(w: &CoxElem) -> Result<(CoxElem, Gen)> {
    let not_refl = || Error::NotAReflection(w.format());
    if w.length().is_multiple_of(2) || !w.is_involution() {
        return Err(not_refl());
    }
    let mut cur = w.clone();
    let mut prefix: Vec<Gen> = Vec::new();
    while cur.length() > 1 {
        let target = cur.length() - 2;
        let next = cur
            .descent_list(Side::Left)
            .into_iter()
            .map(|a| (a, cur.gen_mul(a).mul_gen(a)))
            .find(|(_, c)| c.length() == target);
        match next {
            Some((a, c)) => {
                prefix.push(a);
                cur = c;
            }
            None => return Err(not_refl()),
        }
    }
    let s = cur.word()[0];
    let u = CoxElem::from_reduced(w.system(), &prefix);
    Ok((u, s))
}

impl CoxeterSystem {
    /// Finds `(u, s)` with `word = u·s·u⁻¹` and `l(word) = 2·l(u) + 1`. A
    /// palindromic `word` is split as it stands.
    pub fn palindromize(&self, word: &[Gen]) -> Result<(CoxElem, Gen)> {
        if !self.is_reduced(word)? {
            return Err(Error::Precondition("word is not reduced".into()));
        }
        let elem = CoxElem::from_word(self, word)?;
        let k = word.len() / 2;
        if word.len() % 2 == 1 && word.iter().eq(word.iter().rev()) {
            return Ok((self.normal_form(&word[..k])?, word[k]));
        }
        palindromize_elem(&elem)
    }

    /// `w·r·w⁻¹` with a recomputed witness.
    pub fn conjugate_reflection(&self, w: &CoxElem, r: &Reflection) -> Result<Reflection> {
        if w.system() != self || r.system() != self {
            return Err(Error::SystemMismatch);
        }
        Reflection::from_element(&w.conjugate(r.element())?)
    }

    /// All reflections of length at most `max_length`, by increasing length
    /// and ShortLex within a length. For finite systems the bound is ignored
    /// and all of `T` is returned.
    pub fn reflections(&self, max_length: usize) -> Result<Vec<Reflection>> {
        let bound = if self.is_finite() {
            usize::MAX
        } else {
            max_length
        };
        let cap = self.caps().max_elements;
        let mut level: BTreeSet<CoxElem> = self.gens().map(|s| self.generator(s)).collect();
        let mut out: Vec<CoxElem> = Vec::new();
        while !level.is_empty() {
            let len = level.iter().next().unwrap().length();
            if len > bound {
                break;
            }
            let mut next = BTreeSet::new();
            for r in &level {
                for s in self.gens() {
                    let c = r.gen_mul(s).mul_gen(s);
                    if c.length() == len + 2 {
                        next.insert(c);
                    }
                }
            }
            out.extend(level);
            if out.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
            level = next;
        }
        out.iter().map(Reflection::from_element).collect()
    }

    /// Verifies the exchange identity `s·b = b·t` when `sb` and `bt` are
    /// reduced but `sbt` is not.
    pub fn exchange_witness(&self, b: &CoxElem, s: Gen, t: Gen) -> Result<ExchangeCertificate> {
        self.check_gen(s)?;
        self.check_gen(t)?;
        if b.system() != self {
            return Err(Error::SystemMismatch);
        }
        let sb = b.gen_mul(s);
        let bt = b.mul_gen(t);
        let n = b.length();
        if sb.length() != n + 1 || bt.length() != n + 1 {
            return Err(Error::Precondition("s·b and b·t must be reduced".into()));
        }
        if sb.mul_gen(t).length() == n + 2 {
            return Err(Error::Precondition("s·b·t is reduced".into()));
        }
        if sb != bt {
            // cannot happen in a Coxeter group
            return Err(Error::Precondition("exchange identity failed".into()));
        }
        Ok(ExchangeCertificate {
            b: b.clone(),
            s,
            t,
            value: sb,
        })
    }
}

/// A verified instance of `s·b = b·t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeCertificate {
    pub b: CoxElem,
    pub s: Gen,
    pub t: Gen,
    pub value: CoxElem,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_reflections() {
        let a2 = CoxeterSystem::from_type("A2").unwrap();
        let t = a2.reflections(1).unwrap();
        let names: Vec<String> = t.iter().map(|r| r.format()).collect();
        assert_eq!(names, ["s1", "s2", "s1 s2 s1"]);
        let i5 = CoxeterSystem::from_type("I2(5)").unwrap();
        assert_eq!(i5.reflections(0).unwrap().len(), 5);
    }

    #[test]
    fn palindromes() {
        let a2 = CoxeterSystem::from_type("I2(3)").unwrap();
        let (u, s) = a2.palindromize(&[1, 0, 1]).unwrap();
        assert_eq!((u.format().as_str(), s), ("t", 0));
        let r = Reflection::from_element(&a2.element("t s t").unwrap()).unwrap();
        assert_eq!(r.palindrome().len(), 3);
        assert!(a2.palindromize(&[0, 1]).is_err());
        let a3 = CoxeterSystem::from_type("A3").unwrap();
        assert!(a3.palindromize(&[0, 2]).is_err());
    }

    #[test]
    fn affine_reflections_are_capped() {
        let sys = CoxeterSystem::from_type("Atilde2").unwrap();
        let refl = sys.reflections(5).unwrap();
        assert!(refl.iter().all(|r| r.length() <= 5));
        assert!(refl
            .iter()
            .any(|r| r.format() == sys.element("s r t r s").unwrap().format()));
    }

    #[test]
    fn exchange() {
        let a2 = CoxeterSystem::from_type("I2(3)").unwrap();
        let b = a2.element("t s").unwrap();
        let cert = a2.exchange_witness(&b, 0, 1).unwrap();
        assert_eq!(cert.value, a2.element("s t s").unwrap());
        assert!(a2
            .exchange_witness(&a2.element("s").unwrap(), 0, 1)
            .is_err());
    }
}
