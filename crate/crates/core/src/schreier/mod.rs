//! Reidemeister–Schreier presentations of `D_I = p⁻¹(W_I)` and of the pure
//! braid group `P_W = D_∅`.
//!
//! Coset representatives of `D_I\B_W` are the lifts of the `I`-reduced
//! elements of `W`. Generators are the simple braids in `I` together with
//! the `a[b;s] = 𝐛𝐬²𝐛⁻¹` where `bs` is reduced and `I`-reduced.

mod analysis;
mod format;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use analysis::{
    abelianization, classical_aliases, devissage, dihedral_conjugation_test, max_i_reduced,
    reflections_vs_nbar_check, retraction_h, semidirect_split, standard_chain, unique_writing,
    DevissageChain, DevissageLevel, ReflectionsReport, SplitReport,
};
pub use format::{parse_symbol_word, PresentationJson};

use crate::braid::{lift, BraidWord, Letter};
use crate::coxeter::{gens_of, CoxElem, CoxeterSystem, Gen, GenSet, Side};
use crate::error::{Error, Result};
use crate::nmap::eval_np;

/// `a[b;s] = 𝐛𝐬²𝐛⁻¹`, where `bs` is reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureGenerator {
    pub base: CoxElem,
    pub gen: Gen,
}

impl PureGenerator {
    pub fn new(base: CoxElem, gen: Gen) -> Result<Self> {
        base.system().check_gen(gen)?;
        if base.is_descent(Side::Right, gen) {
            return Err(Error::Precondition(format!(
                "{}·{} is not reduced",
                base.format(),
                base.system().label(gen)
            )));
        }
        Ok(PureGenerator { base, gen })
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.base.system()
    }

    /// `𝐛𝐬²𝐛⁻¹` as a braid word.
    pub fn to_braid(&self) -> BraidWord {
        let b = lift(&self.base).word();
        let s2 = BraidWord::generator(self.system(), self.gen).pow(2);
        &(&b * &s2) * &b.inverse()
    }

    /// The reflection `b s b⁻¹`.
    pub fn reflection(&self) -> CoxElem {
        &self.base.mul_gen(self.gen) * &self.base.inverse()
    }

    /// Whether `𝐛𝐬𝐛̃` is reduced, i.e. `l(bsb⁻¹) = 2·l(b) + 1`.
    pub fn is_palindromic(&self) -> bool {
        self.reflection().length() == 2 * self.base.length() + 1
    }

    pub fn name(&self) -> String {
        format!(
            "a[{};{}]",
            self.base.compact(),
            self.system().label(self.gen)
        )
    }
}

impl fmt::Debug for PureGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for PureGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A generator of `D_I`: either a simple braid `𝐬` with `s ∈ I`, or a pure
/// generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Symbol {
    Cox(Gen),
    Pure(PureGenerator),
}

impl Symbol {
    pub fn to_braid(&self, sys: &CoxeterSystem) -> BraidWord {
        match self {
            Symbol::Cox(s) => BraidWord::generator(sys, *s),
            Symbol::Pure(a) => a.to_braid(),
        }
    }

    pub fn name(&self, sys: &CoxeterSystem) -> String {
        match self {
            Symbol::Cox(s) => sys.label(*s).to_string(),
            Symbol::Pure(a) => a.name(),
        }
    }

    pub fn is_pure(&self) -> bool {
        matches!(self, Symbol::Pure(_))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymLetter {
    pub sym: Symbol,
    pub inverse: bool,
}

impl SymLetter {
    pub fn pos(sym: Symbol) -> Self {
        SymLetter {
            sym,
            inverse: false,
        }
    }

    pub fn inv(&self) -> Self {
        SymLetter {
            sym: self.sym.clone(),
            inverse: !self.inverse,
        }
    }
}

/// A word over generators of `D_I` and their inverses.
pub type SymWord = Vec<SymLetter>;

pub fn free_reduce(word: &[SymLetter]) -> SymWord {
    let mut out: SymWord = Vec::with_capacity(word.len());
    for l in word {
        if out
            .last()
            .is_some_and(|x| x.sym == l.sym && x.inverse != l.inverse)
        {
            out.pop();
        } else {
            out.push(l.clone());
        }
    }
    out
}

pub fn invert_word(word: &[SymLetter]) -> SymWord {
    word.iter().rev().map(SymLetter::inv).collect()
}

/// The braid word obtained by substituting each symbol.
pub fn expand(sys: &CoxeterSystem, word: &[SymLetter]) -> BraidWord {
    let mut out = BraidWord::empty(sys);
    for l in word {
        let b = l.sym.to_braid(sys);
        out = &out * &if l.inverse { b.inverse() } else { b };
    }
    out
}

pub fn format_word(sys: &CoxeterSystem, word: &[SymLetter]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter()
        .map(|l| {
            let n = l.sym.name(sys);
            if l.inverse {
                format!("{n}^-1")
            } else {
                n
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn shortlex_key(w: &[SymLetter]) -> (usize, &[SymLetter]) {
    (w.len(), w)
}

/// The lexicographically least cyclic rotation of the relator `lhs·rhs⁻¹`
/// or of its inverse, after cyclic reduction. Two relations with the same
/// canonical relator are equivalent.
pub fn canonical_relator(lhs: &[SymLetter], rhs: &[SymLetter]) -> SymWord {
    let mut r = lhs.to_vec();
    r.extend(invert_word(rhs));
    let mut r = free_reduce(&r);
    while r.len() >= 2 {
        let (a, b) = (&r[0], &r[r.len() - 1]);
        if a.sym == b.sym && a.inverse != b.inverse {
            r.remove(0);
            r.pop();
        } else {
            break;
        }
    }
    let mut best: Option<SymWord> = None;
    for cand in [r.clone(), invert_word(&r)] {
        for k in 0..cand.len().max(1) {
            let mut rot = cand[k..].to_vec();
            rot.extend_from_slice(&cand[..k]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Which closed-form family a relation comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Braid relation between two elements of `I`.
    Braid,
    /// Family (1) with the given `i`.
    One(usize),
    /// Family (2) with the given `i`.
    Two(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: SymWord,
    pub rhs: SymWord,
    pub family: Family,
}

/// Result of rewriting a braid word from a coset representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    pub word: SymWord,
    pub rep: CoxElem,
}

fn check_subset(sys: &CoxeterSystem, subset: GenSet) -> Result<()> {
    if subset & !sys.all_gens() != 0 {
        return Err(Error::GeneratorOutOfRange(
            63 - subset.leading_zeros() as usize,
        ));
    }
    Ok(())
}

/// One rewriting step: `𝐜𝐬 = γ·[cs]` for an `I`-reduced `c`.
fn step(c: &CoxElem, s: Gen, subset: GenSet) -> Result<(Option<Symbol>, CoxElem)> {
    let cs = c.mul_gen(s);
    if cs.length() < c.length() {
        let g = PureGenerator::new(cs.clone(), s)?;
        return Ok((Some(Symbol::Pure(g)), cs));
    }
    let d = cs.descents(Side::Left) & subset;
    if d == 0 {
        return Ok((None, cs));
    }
    // cs = t·c with t ∈ I
    let t = &cs * &c.inverse();
    if t.length() != 1 || subset & (1u64 << t.word()[0]) == 0 {
        return Err(Error::Precondition(format!(
            "{} is not I-reduced",
            c.format()
        )));
    }
    Ok((Some(Symbol::Cox(t.word()[0])), c.clone()))
}

/// Rewrites `𝐫𝐛` as `(word)·q([rb])`, starting from the representative `r`.
pub fn rewrite_from(rep: &CoxElem, b: &BraidWord, subset: GenSet) -> Result<Rewrite> {
    let sys = b.system();
    check_subset(sys, subset)?;
    if !sys.is_i_reduced(rep, subset) {
        return Err(Error::Precondition(format!(
            "{} is not I-reduced",
            rep.format()
        )));
    }
    let mut c = rep.clone();
    let mut word = Vec::new();
    for &Letter { gen, inverse } in b.letters() {
        if !inverse {
            let (g, next) = step(&c, gen, subset)?;
            word.extend(g.map(SymLetter::pos));
            c = next;
        } else {
            // 𝐜𝐬⁻¹ = γ(c', s)⁻¹·c' where c' = [cs]
            let (_, prev) = step(&c, gen, subset)?;
            let (g, back) = step(&prev, gen, subset)?;
            debug_assert_eq!(back, c);
            word.extend(g.map(|g| SymLetter::pos(g).inv()));
            c = prev;
        }
    }
    Ok(Rewrite { word, rep: c })
}

/// Schreier rewriting of `b` from the trivial coset.
pub fn schreier_rewrite(b: &BraidWord, subset: GenSet) -> Result<Rewrite> {
    rewrite_from(&b.system().identity(), b, subset)
}

impl Rewrite {
    /// Checks `b = (word)·q(rep)` through `(N, p)`.
    pub fn certify(&self, b: &BraidWord) -> bool {
        let sys = b.system();
        let rhs = &expand(sys, &self.word) * &lift(&self.rep).word();
        eval_np(&rhs) == eval_np(b)
    }
}

fn alt(s: Gen, t: Gen, i: usize) -> Vec<Gen> {
    (0..i).map(|j| if j % 2 == 0 { s } else { t }).collect()
}

/// `a^{(j)}_{b0,s,t} = a[b0·(st…)_j ; r]` with `r` the next letter of the
/// alternating word.
fn a_sym(b0: &CoxElem, s: Gen, t: Gen, j: usize) -> Result<SymLetter> {
    let sys = b0.system();
    let base = b0.multiply(&sys.normal_form(&alt(s, t, j))?)?;
    let r = if j.is_multiple_of(2) { s } else { t };
    Ok(SymLetter::pos(Symbol::Pure(PureGenerator::new(base, r)?)))
}

fn a_range(b0: &CoxElem, s: Gen, t: Gen, js: impl Iterator<Item = usize>) -> Result<SymWord> {
    js.map(|j| a_sym(b0, s, t, j)).collect()
}

fn conj_gen(b0: &CoxElem, x: Gen, subset: GenSet) -> Option<Gen> {
    let bx = b0.mul_gen(x);
    if bx.descents(Side::Left) & subset == 0 {
        return None;
    }
    let t = &bx * &b0.inverse();
    (t.length() == 1).then(|| t.word()[0])
}

/// The closed-form relations attached to `(b0, s, t)` with `b0` reduced on
/// the right with respect to `{s, t}`; family (1) runs over `i = 1..=max_one`.
fn relations_for(
    b0: &CoxElem,
    s: Gen,
    t: Gen,
    subset: GenSet,
    max_one: Option<usize>,
) -> Result<Vec<Relation>> {
    let sys = b0.system();
    sys.check_gen(s)?;
    sys.check_gen(t)?;
    if s == t {
        return Err(Error::Precondition("s and t must differ".into()));
    }
    let m = sys
        .m(s, t)
        .ok_or(Error::InfiniteOrder(s as usize, t as usize))? as usize;
    let desc = b0.descents(Side::Right);
    if desc & ((1u64 << s) | (1u64 << t)) != 0 {
        return Err(Error::Precondition(format!(
            "{} has a right descent in {{s, t}}",
            b0.format()
        )));
    }
    if !sys.is_i_reduced(b0, subset) {
        return Err(Error::Precondition(format!(
            "{} is not I-reduced",
            b0.format()
        )));
    }
    let mut out = Vec::new();
    match (conj_gen(b0, s, subset), conj_gen(b0, t, subset)) {
        (None, None) => {
            let top = max_one.unwrap_or(m).min(m);
            for i in 1..=top {
                out.push(Relation {
                    lhs: a_range(b0, s, t, (m - i..m).rev())?,
                    rhs: a_range(b0, t, s, (0..i).rev())?,
                    family: Family::One(i),
                });
            }
        }
        (None, Some(sp)) => {
            let spl = SymLetter::pos(Symbol::Cox(sp));
            for i in 1..m {
                let mut lhs = vec![spl.clone()];
                lhs.extend(a_range(b0, s, t, (m - i - 1..m - 1).rev())?);
                let mut rhs = a_range(b0, s, t, (0..i).rev())?;
                rhs.push(spl.clone());
                out.push(Relation {
                    lhs,
                    rhs,
                    family: Family::Two(i),
                });
            }
        }
        (Some(_), None) => {}
        (Some(sp), Some(tp)) => {
            let word = |a: Gen, b: Gen| {
                alt(a, b, m)
                    .into_iter()
                    .map(|g| SymLetter::pos(Symbol::Cox(g)))
                    .collect::<SymWord>()
            };
            out.push(Relation {
                lhs: word(sp, tp),
                rhs: word(tp, sp),
                family: Family::Braid,
            });
        }
    }
    Ok(out)
}

/// The closed-form relations of `D_I` attached to `(b0, s, t)`, with
/// family (1) for `i = 1..=m`.
pub fn relation_for(b0: &CoxElem, s: Gen, t: Gen, subset: GenSet) -> Result<Vec<Relation>> {
    relations_for(b0, s, t, subset, None)
}

/// Rewrites both sides of `𝐛(𝐬𝐭…)_m = 𝐛(𝐭𝐬…)_m` from the representative `b`.
pub fn raw_relation(b: &CoxElem, s: Gen, t: Gen, subset: GenSet) -> Result<(SymWord, SymWord)> {
    let sys = b.system();
    let m = sys
        .m(s, t)
        .ok_or(Error::InfiniteOrder(s as usize, t as usize))? as usize;
    let left = rewrite_from(b, &BraidWord::positive(sys, &alt(s, t, m))?, subset)?;
    let right = rewrite_from(b, &BraidWord::positive(sys, &alt(t, s, m))?, subset)?;
    if left.rep != right.rep {
        return Err(Error::Precondition(
            "rewritings end in different cosets".into(),
        ));
    }
    Ok((free_reduce(&left.word), free_reduce(&right.word)))
}

/// All `(b, s)` with `bs` reduced and `I`-reduced, in ShortLex order of
/// `(b, s)`. With a length bound only `l(b) < max_length` is considered.
pub fn presentation_generators(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: Option<usize>,
) -> Result<Vec<PureGenerator>> {
    check_subset(sys, subset)?;
    let reps = sys.enumerate_i_reduced(subset, max_length)?;
    let mut out = Vec::new();
    for c in reps {
        for s in c.descent_list(Side::Right) {
            out.push(PureGenerator::new(c.mul_gen(s), s)?);
        }
    }
    out.sort();
    Ok(out)
}

/// One generator per reflection `bsb⁻¹` with `bs` `I`-reduced. A witness
/// with `l(bsb⁻¹) = 2·l(b) + 1` is preferred when there is one, otherwise
/// the least `(b, s)`.
pub fn minimal_generating_set(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: Option<usize>,
) -> Result<Vec<PureGenerator>> {
    let mut best: BTreeMap<CoxElem, PureGenerator> = BTreeMap::new();
    for g in presentation_generators(sys, subset, max_length)? {
        let key = (!g.is_palindromic(), g.clone());
        match best.get(&g.reflection()) {
            Some(old) if (!old.is_palindromic(), old.clone()) <= key => {}
            _ => {
                best.insert(g.reflection(), g);
            }
        }
    }
    let mut out: Vec<PureGenerator> = best.into_values().collect();
    out.sort();
    Ok(out)
}

/// Reflections `bsb̃` with `bs` `I`-reduced and `b·s·b̃` reduced, `l(b) ≤ max_length`.
pub fn palindromic_reflections(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: Option<usize>,
) -> Result<BTreeSet<CoxElem>> {
    Ok(presentation_generators(sys, subset, max_length)?
        .into_iter()
        .filter(PureGenerator::is_palindromic)
        .map(|g| g.reflection())
        .collect())
}

/// A finite presentation of `D_I` (or a truncation of one).
#[derive(Debug, Clone)]
pub struct Presentation {
    pub system: CoxeterSystem,
    pub subset: GenSet,
    pub generators: Vec<Symbol>,
    pub relations: Vec<(SymWord, SymWord)>,
    /// Set when a length bound cut the enumeration short.
    pub partial: bool,
}

impl Presentation {
    /// Builds a presentation, normalizing the relations: free reduction,
    /// removal of tautologies, ShortLex-smaller side first, deduplication.
    pub fn new(
        system: &CoxeterSystem,
        subset: GenSet,
        generators: Vec<Symbol>,
        relations: impl IntoIterator<Item = (SymWord, SymWord)>,
        partial: bool,
    ) -> Self {
        let mut seen = BTreeSet::new();
        let mut rels = Vec::new();
        for (l, r) in relations {
            let (l, r) = (free_reduce(&l), free_reduce(&r));
            if canonical_relator(&l, &r).is_empty() {
                continue;
            }
            let (l, r) = if shortlex_key(&r) < shortlex_key(&l) {
                (r, l)
            } else {
                (l, r)
            };
            if seen.insert((l.clone(), r.clone())) {
                rels.push((l, r));
            }
        }
        rels.sort_by(|a, b| {
            (shortlex_key(&a.0), shortlex_key(&a.1)).cmp(&(shortlex_key(&b.0), shortlex_key(&b.1)))
        });
        Presentation {
            system: system.clone(),
            subset,
            generators,
            relations: rels,
            partial,
        }
    }

    pub fn pure_generators(&self) -> impl Iterator<Item = &PureGenerator> {
        self.generators.iter().filter_map(|g| match g {
            Symbol::Pure(a) => Some(a),
            Symbol::Cox(_) => None,
        })
    }

    /// The set of canonical relators, for comparing presentations up to
    /// rotation and inversion of relations.
    pub fn canonical_relators(&self) -> BTreeSet<SymWord> {
        self.relations
            .iter()
            .map(|(l, r)| canonical_relator(l, r))
            .collect()
    }

    /// Relations whose two sides differ under `(N, p)`; empty for a sound
    /// presentation.
    pub fn unsound_relations(&self) -> Vec<usize> {
        let sys = &self.system;
        self.relations
            .iter()
            .enumerate()
            .filter(|(_, (l, r))| eval_np(&expand(sys, l)) != eval_np(&expand(sys, r)))
            .map(|(i, _)| i)
            .collect()
    }

    /// Whether every symbol used in a relation is a declared generator.
    pub fn is_closed(&self) -> bool {
        let gens: BTreeSet<&Symbol> = self.generators.iter().collect();
        self.relations
            .iter()
            .flat_map(|(l, r)| l.iter().chain(r))
            .all(|x| gens.contains(&x.sym))
    }
}

fn truncated(sys: &CoxeterSystem, max_length: Option<usize>) -> Result<bool> {
    match (max_length, sys.finite_info(sys.all_gens())) {
        (None, None) => Err(Error::InfiniteGroup),
        (None, Some(_)) => Ok(false),
        (Some(l), Some(_)) => Ok(l < sys.longest_element(sys.all_gens())?.length()),
        (Some(_), None) => Ok(true),
    }
}

fn collect_relations(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: Option<usize>,
    max_one: Option<usize>,
) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for b0 in sys.enumerate_i_reduced(subset, max_length)? {
        let desc = b0.descents(Side::Right);
        for s in sys.gens() {
            for t in sys.gens() {
                if s == t || sys.m(s, t).is_none() {
                    continue;
                }
                if desc & ((1u64 << s) | (1u64 << t)) != 0 {
                    continue;
                }
                out.extend(relations_for(&b0, s, t, subset, max_one)?);
            }
        }
    }
    Ok(out)
}

/// All closed-form relations of `D_I`, with their families, before
/// normalization.
pub fn tagged_relations(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: Option<usize>,
) -> Result<Vec<Relation>> {
    check_subset(sys, subset)?;
    truncated(sys, max_length)?;
    collect_relations(sys, subset, max_length, None)
}

/// The presentation of `D_I`: generators `I` and the `a[b;s]`; relations
/// the braid relations of `I` and families (1), for `i = 1..=m`, and (2).
pub fn presentation_di(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: Option<usize>,
) -> Result<Presentation> {
    check_subset(sys, subset)?;
    let partial = truncated(sys, max_length)?;
    let mut generators: Vec<Symbol> = gens_of(subset).map(Symbol::Cox).collect();
    generators.extend(
        presentation_generators(sys, subset, max_length)?
            .into_iter()
            .map(Symbol::Pure),
    );
    let rels = collect_relations(sys, subset, max_length, None)?;
    Ok(Presentation::new(
        sys,
        subset,
        generators,
        rels.into_iter().map(|r| (r.lhs, r.rhs)),
        partial,
    ))
}

/// The presentation of `P_W`: family (1) with `I = ∅` and `i = 1..m−1`.
pub fn presentation_pure(sys: &CoxeterSystem, max_length: Option<usize>) -> Result<Presentation> {
    let partial = truncated(sys, max_length)?;
    let generators = presentation_generators(sys, 0, max_length)?
        .into_iter()
        .map(Symbol::Pure)
        .collect();
    let mut rels = Vec::new();
    for b0 in sys.enumerate_elements(max_length)? {
        let desc = b0.descents(Side::Right);
        for s in sys.gens() {
            for t in sys.gens() {
                let Some(m) = sys.m(s, t) else { continue };
                if s == t || desc & ((1u64 << s) | (1u64 << t)) != 0 {
                    continue;
                }
                rels.extend(relations_for(&b0, s, t, 0, Some(m as usize - 1))?);
            }
        }
    }
    Ok(Presentation::new(
        sys,
        0,
        generators,
        rels.into_iter().map(|r| (r.lhs, r.rhs)),
        partial,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(sys: &CoxeterSystem, gens: &[PureGenerator]) -> Vec<String> {
        let _ = sys;
        gens.iter().map(|g| g.name()).collect()
    }

    #[test]
    fn generator_counts() {
        let a2 = CoxeterSystem::from_type("A2").unwrap();
        assert_eq!(presentation_generators(&a2, 0, None).unwrap().len(), 6);
        assert_eq!(minimal_generating_set(&a2, 0, None).unwrap().len(), 3);
        let i4 = CoxeterSystem::from_type("I2(4)").unwrap();
        let g = presentation_generators(&i4, 0b01, None).unwrap();
        assert_eq!(names(&i4, &g), ["a[ε;t]", "a[t;s]", "a[t.s;t]"]);
        let b3 = CoxeterSystem::from_type("B3").unwrap();
        assert_eq!(minimal_generating_set(&b3, 0b011, None).unwrap().len(), 5);
    }

    #[test]
    fn rewriting_square() {
        let a2 = CoxeterSystem::from_type("I2(3)").unwrap();
        let b = BraidWord::parse(&a2, "s s").unwrap();
        let rw = schreier_rewrite(&b, 0).unwrap();
        assert_eq!(format_word(&a2, &rw.word), "a[ε;s]");
        assert!(rw.rep.is_identity());
        let b = BraidWord::parse(&a2, "t^-1 s t s^-1 s^-1 t").unwrap();
        let rw = schreier_rewrite(&b, 0b01).unwrap();
        assert!(rw.certify(&b));
    }

    #[test]
    fn dihedral_i4_relations() {
        let i4 = CoxeterSystem::from_type("I2(4)").unwrap();
        let p = presentation_di(&i4, 0b01, None).unwrap();
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.relations.len(), 3);
        assert!(p.unsound_relations().is_empty());
        assert!(p.is_closed());
    }

    #[test]
    fn closed_forms_match_raw_rewriting_a2() {
        let a2 = CoxeterSystem::from_type("A2").unwrap();
        let e = a2.identity();
        for r in relation_for(&e, 0, 1, 0).unwrap() {
            let Family::One(i) = r.family else { panic!() };
            let b = a2.normal_form(&alt(1, 0, i)).unwrap();
            let (l, rr) = raw_relation(&b, 0, 1, 0).unwrap();
            assert_eq!(
                canonical_relator(&l, &rr),
                canonical_relator(&r.lhs, &r.rhs)
            );
        }
    }
}
