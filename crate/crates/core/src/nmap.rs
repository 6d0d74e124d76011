//! The map `N: B_W → ℤT` and the homomorphism `(N, p): B_W → ℤT ⋊ W`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{Map, Value};

use crate::braid::{lift, BraidWord, Letter};
use crate::coxeter::{CoxElem, CoxeterSystem, Gen, Reflection};
use crate::error::{Error, Result};

/// A finitely supported integer combination of reflections, keyed by the
/// reflection as an element of `W`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZTVector {
    coeffs: BTreeMap<CoxElem, i64>,
}

impl ZTVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(t: &CoxElem) -> Self {
        Self::from_terms([(t.clone(), 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (CoxElem, i64)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (t, c) in terms {
            v.add_term(&t, c);
        }
        v
    }

    pub fn add_term(&mut self, t: &CoxElem, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(t.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(t);
        }
    }

    pub fn coeff(&self, t: &CoxElem) -> i64 {
        self.coeffs.get(t).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoxElem, i64)> {
        self.coeffs.iter().map(|(t, &c)| (t, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Whether every coefficient is even, i.e. the vector lies in `2ℤT`.
    pub fn is_even(&self) -> bool {
        self.coeffs.values().all(|c| c % 2 == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Reflections with odd coefficient: the reduction mod 2.
    pub fn odd_support(&self) -> BTreeSet<CoxElem> {
        self.coeffs
            .iter()
            .filter(|(_, c)| *c % 2 != 0)
            .map(|(t, _)| t.clone())
            .collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(t, &c)| (t.clone(), c * k)))
    }

    /// `w·x`: reflections permuted by conjugation.
    pub fn act(&self, w: &CoxElem) -> Self {
        if w.is_identity() {
            return self.clone();
        }
        let winv = w.inverse();
        Self::from_terms(self.coeffs.iter().map(|(t, &c)| (&(w * t) * &winv, c)))
    }

    /// Coefficients keyed by the normal form of each reflection.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(t, &c)| (t.format(), Value::from(c)))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(sys: &CoxeterSystem, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let mut v = Self::zero();
        for (k, c) in obj {
            let c = c
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("non-integer coefficient for {k:?}")))?;
            let t = sys.element(k)?;
            Reflection::from_element(&t)?;
            v.add_term(&t, c);
        }
        Ok(v)
    }

    pub fn format(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(t, c)| format!("{c}·[{}]", t.format()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for ZTVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl fmt::Display for ZTVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Add for &ZTVector {
    type Output = ZTVector;

    fn add(self, rhs: &ZTVector) -> ZTVector {
        let mut out = self.clone();
        for (t, &c) in &rhs.coeffs {
            out.add_term(t, c);
        }
        out
    }
}

impl Neg for &ZTVector {
    type Output = ZTVector;

    fn neg(self) -> ZTVector {
        self.scale(-1)
    }
}

impl Sub for &ZTVector {
    type Output = ZTVector;

    fn sub(self, rhs: &ZTVector) -> ZTVector {
        self + &(-rhs)
    }
}

/// An element `(x, v)` of `ℤT ⋊ W` with `(x, v)(y, w) = (x + v·y, vw)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemidirectElem {
    pub vector: ZTVector,
    pub element: CoxElem,
}

impl SemidirectElem {
    pub fn identity(sys: &CoxeterSystem) -> Self {
        SemidirectElem {
            vector: ZTVector::zero(),
            element: sys.identity(),
        }
    }

    pub fn multiply(&self, other: &SemidirectElem) -> Result<SemidirectElem> {
        Ok(SemidirectElem {
            vector: &self.vector + &other.vector.act(&self.element),
            element: self.element.multiply(&other.element)?,
        })
    }

    pub fn inverse(&self) -> SemidirectElem {
        let vinv = self.element.inverse();
        SemidirectElem {
            vector: -&self.vector.act(&vinv),
            element: vinv,
        }
    }
}

/// `N(b) = Σ εᵢ · s₁…sᵢ₋₁ sᵢ sᵢ₋₁…s₁` for `b = 𝐬₁^ε₁ … 𝐬ₖ^εₖ`.
pub fn eval_n(b: &BraidWord) -> ZTVector {
    let sys = b.system();
    let mut prefix = sys.identity();
    let mut out = ZTVector::zero();
    for &Letter { gen, inverse } in b.letters() {
        let t = &prefix.mul_gen(gen) * &prefix.inverse();
        out.add_term(&t, if inverse { -1 } else { 1 });
        prefix = prefix.mul_gen(gen);
    }
    out
}

/// `(N(b), p(b))`.
pub fn eval_np(b: &BraidWord) -> SemidirectElem {
    SemidirectElem {
        vector: eval_n(b),
        element: b.project(),
    }
}

/// `N̄(w)`: the odd part of `N(q(w))`, which is the left inversion set of `w`.
pub fn nbar(w: &CoxElem) -> BTreeSet<CoxElem> {
    eval_n(&lift(w).word()).odd_support()
}

/// Decides whether `a` is `N̄(w)` for some `w`, returning that `w`.
///
/// A nonempty inversion set contains a simple reflection `s`, and then
/// `s·(A ∖ {s})·s` is the inversion set of `s·w`. Any simple reflection in
/// an inversion set is a left descent, so the first one found can be peeled
/// without backtracking.
pub fn is_admissible(sys: &CoxeterSystem, a: &BTreeSet<CoxElem>) -> Result<Option<CoxElem>> {
    if a.iter().any(|t| t.system() != sys) {
        return Err(Error::SystemMismatch);
    }
    let mut cur = a.clone();
    let mut peeled: Vec<Gen> = Vec::new();
    while !cur.is_empty() {
        let Some(s) = cur.iter().find(|t| t.length() == 1).map(|t| t.word()[0]) else {
            return Ok(None);
        };
        let g = sys.generator(s);
        cur.remove(&g);
        cur = cur.iter().map(|t| &(&g * t) * &g).collect();
        peeled.push(s);
    }
    let w = sys.normal_form(&peeled)?;
    if w.length() != peeled.len() || nbar(&w) != *a {
        return Ok(None);
    }
    Ok(Some(w))
}

/// A braid `b` with `N(b) = x`, when one exists.
///
/// The odd part fixes `b` modulo `P_W`; each remaining `2k·t` with
/// `t = u s u⁻¹` is realized by `q(u) 𝐬^{2k} q(u)⁻¹`, using the
/// ShortLex-least `u`.
pub fn in_image_of_n(sys: &CoxeterSystem, x: &ZTVector) -> Result<Option<BraidWord>> {
    let Some(w) = is_admissible(sys, &x.odd_support())? else {
        return Ok(None);
    };
    let base = lift(&w).word();
    let rest = x - &eval_n(&base);
    let mut out = BraidWord::empty(sys);
    for (t, c) in rest.terms() {
        debug_assert!(c % 2 == 0);
        let r = Reflection::from_element(t)?;
        let (u, s) = r.witness();
        let ub = lift(u).word();
        let piece = &(&ub * &BraidWord::generator(sys, s).pow(c)) * &ub.inverse();
        out = &out * &piece;
    }
    let out = &out * &base;
    if eval_n(&out) != *x {
        return Err(Error::Precondition("image witness failed to verify".into()));
    }
    Ok(Some(out))
}

/// Whether `b⁻¹b'` lies in the derived subgroup of `P_W`, i.e. whether
/// `(N, p)` agrees on the two words.
pub fn equal_mod_derived(b: &BraidWord, b2: &BraidWord) -> Result<bool> {
    if b.system() != b2.system() {
        return Err(Error::SystemMismatch);
    }
    Ok(eval_np(b) == eval_np(b2))
}

/// `c(v, w) = N(q(v)) + v·N(q(w)) − N(q(vw))`.
pub fn cocycle(v: &CoxElem, w: &CoxElem) -> Result<ZTVector> {
    let vw = v.multiply(w)?;
    let nv = eval_n(&lift(v).word());
    let nw = eval_n(&lift(w).word()).act(v);
    let nvw = eval_n(&lift(&vw).word());
    Ok(&(&nv + &nw) - &nvw)
}

/// Coefficient of `s` in `N(𝐬)` for each simple `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub coefficients: Vec<(Gen, i64)>,
}

impl ParityReport {
    pub fn pass(&self) -> bool {
        self.coefficients.iter().all(|&(_, c)| c % 2 != 0)
    }
}

/// Checks that `N(𝐬)` has odd coefficient on `s` for every generator, while
/// every cocycle value is even.
pub fn splitting_parity_witness(sys: &CoxeterSystem) -> ParityReport {
    let coefficients = sys
        .gens()
        .map(|s| {
            (
                s,
                eval_n(&BraidWord::generator(sys, s)).coeff(&sys.generator(s)),
            )
        })
        .collect();
    ParityReport { coefficients }
}

/// Result of checking that `N` grows along prefixes of positive words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonotonicityReport {
    pub words: usize,
    pub prefixes: usize,
    /// Words for which some increment left `ℕT`.
    pub failures: Vec<String>,
}

impl MonotonicityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For each positive word `v = u·r` and each split, checks that
/// `N(v) − N(u) = p(u)·N(r)` and that it has nonnegative coefficients.
pub fn monoid_monotonicity_check(samples: &[BraidWord]) -> Result<MonotonicityReport> {
    let mut report = MonotonicityReport::default();
    for v in samples {
        if !v.is_positive() {
            return Err(Error::Precondition(format!(
                "{} is not a positive word",
                v.format()
            )));
        }
        report.words += 1;
        let nv = eval_n(v);
        let sys = v.system();
        let letters = v.letters();
        for k in 0..=letters.len() {
            report.prefixes += 1;
            let u = BraidWord::new(sys, letters[..k].to_vec())?;
            let r = BraidWord::new(sys, letters[k..].to_vec())?;
            let inc = &nv - &eval_n(&u);
            if !inc.is_nonnegative() || inc != eval_n(&r).act(&u.project()) {
                report.failures.push(v.format());
                break;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let sys = CoxeterSystem::from_type("I2(3)").unwrap();
        let s = sys.generator(0);
        let b = BraidWord::parse(&sys, "s").unwrap();
        assert_eq!(eval_n(&b), ZTVector::basis(&s));
        assert_eq!(eval_n(&b.inverse()), ZTVector::basis(&s).scale(-1));
        assert_eq!(eval_n(&b.pow(6)), ZTVector::basis(&s).scale(6));
        let sq = eval_np(&b).multiply(&eval_np(&b)).unwrap();
        assert_eq!(sq.vector, ZTVector::basis(&s).scale(2));
        assert!(sq.element.is_identity());
    }

    #[test]
    fn longest_dihedral_element_hits_all_reflections() {
        let sys = CoxeterSystem::from_type("I2(3)").unwrap();
        let w0 = sys.element("s t s").unwrap();
        let all: BTreeSet<CoxElem> = sys
            .reflections(0)
            .unwrap()
            .into_iter()
            .map(|r| r.element().clone())
            .collect();
        assert_eq!(nbar(&w0), all);
        assert_eq!(is_admissible(&sys, &all).unwrap(), Some(w0));
    }

    #[test]
    fn admissibility() {
        let sys = CoxeterSystem::from_type("I2(3)").unwrap();
        assert_eq!(
            is_admissible(&sys, &BTreeSet::new()).unwrap(),
            Some(sys.identity())
        );
        let sts = sys.element("s t s").unwrap();
        assert_eq!(is_admissible(&sys, &BTreeSet::from([sts])).unwrap(), None);
    }

    #[test]
    fn image_witness() {
        let sys = CoxeterSystem::from_type("I2(3)").unwrap();
        let sts = sys.element("s t s").unwrap();
        let x = ZTVector::from_terms([(sys.generator(0), 1), (sts, 4)]);
        let b = in_image_of_n(&sys, &x).unwrap().unwrap();
        assert_eq!(eval_n(&b), x);
        let bad = ZTVector::from_terms([(sys.element("s t s").unwrap(), 1)]);
        assert!(in_image_of_n(&sys, &bad).unwrap().is_none());
    }

    #[test]
    fn cocycle_basics() {
        let sys = CoxeterSystem::from_type("B2").unwrap();
        let s = sys.generator(0);
        assert_eq!(cocycle(&s, &s).unwrap(), ZTVector::basis(&s).scale(2));
        let w = sys.element("s1 s2 s1").unwrap();
        assert!(cocycle(&sys.identity(), &w).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let sys = CoxeterSystem::from_type("A2").unwrap();
        let x = ZTVector::from_terms([(sys.element("s1 s2 s1").unwrap(), -3)]);
        let back = ZTVector::from_json(&sys, &x.to_json()).unwrap();
        assert_eq!(back, x);
    }
}
