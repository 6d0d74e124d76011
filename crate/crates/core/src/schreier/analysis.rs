use std::collections::BTreeSet;

use super::{
    minimal_generating_set, palindromic_reflections, presentation_di, presentation_generators,
    PureGenerator, SymLetter, SymWord, Symbol,
};
use crate::braid::{BraidWord, Letter};
use crate::coxeter::{gen_set, gens_of, CoxElem, CoxeterSystem, CoxeterType, Gen, GenSet};
use crate::error::{Error, Result};
use crate::nmap::nbar;
use crate::snf::{abelian_group, AbelianGroup};

/// `ℤ^gens / ⟨exponent sums of the relators⟩`.
pub fn abelianization(p: &super::Presentation) -> Result<AbelianGroup> {
    let index = |s: &Symbol| p.generators.iter().position(|g| g == s);
    let mut rows = Vec::new();
    for (l, r) in &p.relations {
        let mut row = vec![0i64; p.generators.len()];
        for (word, sign) in [(l, 1), (r, -1)] {
            for x in word {
                let i = index(&x.sym).ok_or_else(|| {
                    Error::Precondition(format!("undeclared symbol {}", x.sym.name(&p.system)))
                })?;
                row[i] += if x.inverse { -sign } else { sign };
            }
        }
        rows.push(row);
    }
    abelian_group(&rows, p.generators.len())
}

/// The retraction `h: D_I → B_I`, killing every pure generator.
pub fn retraction_h(sys: &CoxeterSystem, word: &[SymLetter]) -> BraidWord {
    let letters = word
        .iter()
        .filter_map(|x| match x.sym {
            Symbol::Cox(s) => Some(Letter {
                gen: s,
                inverse: x.inverse,
            }),
            Symbol::Pure(_) => None,
        })
        .collect();
    BraidWord::new(sys, letters).expect("symbols come from this system")
}

/// Equality in `B_I` for the words that arise as retractions of relations:
/// equal after free reduction, or both reduced positive lifts of the same
/// element.
fn equal_in_parabolic(a: &BraidWord, b: &BraidWord) -> bool {
    let (a, b) = (a.free_reduce(), b.free_reduce());
    if a == b {
        return true;
    }
    a.is_positive()
        && b.is_positive()
        && a.is_reduced_lift().unwrap_or(false)
        && b.is_reduced_lift().unwrap_or(false)
        && a.project() == b.project()
}

#[derive(Debug, Clone)]
pub struct SplitReport {
    /// Generators of the normal factor `U_I`.
    pub normal_generators: Vec<PureGenerator>,
    pub relations_checked: usize,
    /// Relations whose retractions differ in `B_I`.
    pub failures: Vec<(SymWord, SymWord)>,
    /// `h∘j = id` on the generators of `I`.
    pub section_ok: bool,
}

impl SplitReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.section_ok
    }
}

/// Checks `D_I = U_I ⋊ B_I`: every relation of `D_I` survives the
/// retraction, and `h` is a left inverse of the inclusion of `B_I`.
pub fn semidirect_split(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: Option<usize>,
) -> Result<SplitReport> {
    let p = presentation_di(sys, subset, max_length)?;
    let mut failures = Vec::new();
    for (l, r) in &p.relations {
        if !equal_in_parabolic(&retraction_h(sys, l), &retraction_h(sys, r)) {
            failures.push((l.clone(), r.clone()));
        }
    }
    let section_ok = gens_of(subset).all(|s| {
        let j = [
            SymLetter::pos(Symbol::Cox(s)),
            SymLetter::pos(Symbol::Cox(s)).inv(),
        ];
        retraction_h(sys, &j[..1]) == BraidWord::generator(sys, s)
            && retraction_h(sys, &j).free_reduce().is_empty()
    });
    Ok(SplitReport {
        normal_generators: p.pure_generators().cloned().collect(),
        relations_checked: p.relations.len(),
        failures,
        section_ok,
    })
}

/// The chain `∅ = I₀ ⊆ I₁ ⊆ … ⊆ Iₙ = S` used for the named types: the
/// first `j` generators, except `I₁ = ∅` in type `D`.
pub fn standard_chain(sys: &CoxeterSystem) -> Vec<GenSet> {
    let n = sys.rank();
    (0..=n)
        .map(|j| {
            if j == 1 && matches!(sys.kind(), Some(CoxeterType::D(_))) {
                0
            } else {
                gen_set(0..j as Gen)
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct DevissageLevel {
    /// `I_j`, the generators of the ambient parabolic subgroup.
    pub ambient: GenSet,
    /// `I_{j−1}`.
    pub subset: GenSet,
    /// One generator of `U_j` per reflection of `W_{I_j}` outside `W_{I_{j−1}}`.
    pub generators: Vec<PureGenerator>,
    /// Number of Schreier generators `a[b;s]` of `U_j`.
    pub schreier_count: usize,
}

#[derive(Debug, Clone)]
pub struct DevissageChain {
    pub chain: Vec<GenSet>,
    pub levels: Vec<DevissageLevel>,
}

impl DevissageChain {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.generators.len()).collect()
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(|l| l.generators.len()).sum()
    }
}

fn lift_from(sys: &CoxeterSystem, map: &[Gen], g: &PureGenerator) -> Result<PureGenerator> {
    let word: Vec<Gen> = g.base.word().iter().map(|&x| map[x as usize]).collect();
    PureGenerator::new(sys.normal_form(&word)?, map[g.gen as usize])
}

/// `P_W = U_n ⋊ (U_{n−1} ⋊ (… ⋊ U_1))` along a chain of parabolic subsets.
pub fn devissage(
    sys: &CoxeterSystem,
    chain: &[GenSet],
    max_length: Option<usize>,
) -> Result<DevissageChain> {
    let bad = |msg: &str| Error::InvalidChain(msg.to_string());
    if chain.first() != Some(&0) {
        return Err(bad("chain must start with the empty set"));
    }
    if chain.last() != Some(&sys.all_gens()) {
        return Err(bad("chain must end with all generators"));
    }
    if chain.windows(2).any(|w| w[0] & !w[1] != 0) {
        return Err(bad("chain must be increasing"));
    }
    let mut levels = Vec::new();
    for w in chain.windows(2) {
        let (subset, ambient) = (w[0], w[1]);
        let (generators, schreier_count) = if ambient == 0 {
            (Vec::new(), 0)
        } else {
            let (sub, map) = sys.parabolic(ambient)?;
            let sub_i = gen_set(
                map.iter()
                    .enumerate()
                    .filter(|(_, &g)| subset & (1u64 << g) != 0)
                    .map(|(i, _)| i as Gen),
            );
            let gens = minimal_generating_set(&sub, sub_i, max_length)?
                .iter()
                .map(|g| lift_from(sys, &map, g))
                .collect::<Result<Vec<_>>>()?;
            let count = presentation_generators(&sub, sub_i, max_length)?.len();
            (gens, count)
        };
        levels.push(DevissageLevel {
            ambient,
            subset,
            generators,
            schreier_count,
        });
    }
    Ok(DevissageChain {
        chain: chain.to_vec(),
        levels,
    })
}

/// `bᴵ = w_I⁻¹ w_S`, the largest `I`-reduced element.
pub fn max_i_reduced(sys: &CoxeterSystem, subset: GenSet) -> Result<CoxElem> {
    if !sys.is_finite() {
        return Err(Error::InfiniteGroup);
    }
    let wi = sys.longest_element(subset)?;
    let ws = sys.longest_element(sys.all_gens())?;
    wi.inverse().multiply(&ws)
}

/// Whether `w` has a single reduced expression.
pub fn unique_writing(w: &CoxElem) -> Result<bool> {
    let cap = w.system().caps().max_elements;
    Ok(w.system().count_reduced_words(w.word(), cap)? == 1)
}

/// The `t` with `b⁻¹s'b ∈ W_{{s,t}}` and `m(s,t)` finite, if any. Such a
/// `t` is unique because `b⁻¹s'b` is neither `1` nor `s`.
pub fn dihedral_conjugation_test(
    b: &CoxElem,
    s: Gen,
    s_prime: Gen,
    subset: GenSet,
) -> Result<Option<Gen>> {
    let sys = b.system();
    sys.check_gen(s)?;
    sys.check_gen(s_prime)?;
    if subset & (1u64 << s_prime) == 0 {
        return Err(Error::Precondition("s' must lie in I".into()));
    }
    let bs = b.mul_gen(s);
    if bs.length() != b.length() + 1 || !sys.is_i_reduced(&bs, subset) {
        return Err(Error::Precondition(
            "b·s must be reduced and I-reduced".into(),
        ));
    }
    let x = &(&b.inverse() * &sys.generator(s_prime)) * b;
    for t in sys.gens() {
        if t == s || sys.m(s, t).is_none() {
            continue;
        }
        let pair = (1u64 << s) | (1u64 << t);
        if sys.coset_rep(&x, pair).is_identity() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
pub struct ReflectionsReport {
    pub finite: bool,
    /// `N̄(w_I w_S)` for finite `W`, otherwise the reflections outside `W_I`
    /// up to the length bound.
    pub expected: BTreeSet<CoxElem>,
    /// Reflections `bsb⁻¹` with `bs` `I`-reduced; for infinite `W` also
    /// with `𝐛𝐬𝐛̃` reduced.
    pub achieved: BTreeSet<CoxElem>,
    /// Expected reflections without such an expression.
    pub missing: Vec<CoxElem>,
}

impl ReflectionsReport {
    pub fn equal(&self) -> bool {
        self.expected == self.achieved
    }
}

/// Compares the reflections reached by the generators of `D_I` with the
/// reflections outside `W_I`. For infinite `W` only reflections of length at
/// most `max_length` are considered; a palindromic witness of a reflection of
/// length `2k+1` has `l(b) = k`, so the search is exhaustive.
pub fn reflections_vs_nbar_check(
    sys: &CoxeterSystem,
    subset: GenSet,
    max_length: usize,
) -> Result<ReflectionsReport> {
    let finite = sys.is_finite();
    let (expected, bound) = if finite {
        (nbar(&max_i_reduced(sys, subset)?), None)
    } else {
        let refl = sys
            .reflections(max_length)?
            .into_iter()
            .map(|r| r.element().clone())
            .filter(|t| !sys.coset_rep(t, subset).is_identity())
            .collect::<BTreeSet<_>>();
        (refl, Some(max_length / 2 + 1))
    };
    let achieved: BTreeSet<CoxElem> = if finite {
        minimal_generating_set(sys, subset, None)?
            .iter()
            .map(|g| g.reflection())
            .collect()
    } else {
        palindromic_reflections(sys, subset, bound)?
            .into_iter()
            .filter(|t| t.length() <= max_length)
            .collect()
    };
    let missing = expected.difference(&achieved).cloned().collect();
    Ok(ReflectionsReport {
        finite,
        expected,
        achieved,
        missing,
    })
}

fn elem(sys: &CoxeterSystem, word: &[Gen]) -> CoxElem {
    sys.normal_form(word).expect("valid generators")
}

/// The subset `I` and the names `a_i`, `b_i` of the generators of `U_I`
/// used for the classical types.
///
/// For `I₂(m)` with `I = {s}` the alternating words start with `t`, the
/// only choice that keeps them `I`-reduced.
pub fn classical_aliases(sys: &CoxeterSystem) -> Option<(GenSet, Vec<(String, PureGenerator)>)> {
    let n = sys.rank();
    let gen = |base: Vec<Gen>, s: Gen| PureGenerator::new(elem(sys, &base), s).ok();
    let desc = |from: usize, to: usize| -> Vec<Gen> {
        // s_from s_{from-1} ... s_to (1-based, type A/B numbering)
        (to..=from).rev().map(|i| (i - 1) as Gen).collect()
    };
    let mut out = Vec::new();
    let subset;
    match sys.kind()? {
        CoxeterType::A(_) | CoxeterType::B(_) => {
            subset = gen_set(0..(n - 1) as Gen);
            for i in 1..=n {
                out.push((format!("a{i}"), gen(desc(n, i + 1), (i - 1) as Gen)?));
            }
            if matches!(sys.kind(), Some(CoxeterType::B(_))) {
                for i in 2..=n {
                    let mut base = desc(n, 1);
                    base.extend((2..i).map(|k| (k - 1) as Gen));
                    out.push((format!("b{i}"), gen(base, (i - 1) as Gen)?));
                }
            }
        }
        CoxeterType::I2(m) => {
            subset = 0b01;
            for i in 1..m as usize {
                let base: Vec<Gen> = (0..i - 1).map(|j| if j % 2 == 0 { 1 } else { 0 }).collect();
                let r = if i % 2 == 1 { 1 } else { 0 };
                out.push((format!("a{i}"), gen(base, r)?));
            }
        }
        CoxeterType::D(nn) if nn >= 3 => {
            // indices: s2 → 0, s2' → 1, s_k → k − 1 for k ≥ 3
            subset = sys.all_gens() & !(1u64 << (n - 1));
            let idx = |k: usize| (k - 1) as Gen;
            let down_to_3: Vec<Gen> = (3..=nn).rev().map(idx).collect();
            for (name, g) in [("2", 0), ("2'", 1)] {
                out.push((format!("a{name}"), gen(down_to_3.clone(), g)?));
            }
            for i in 3..=nn {
                let base: Vec<Gen> = (i + 1..=nn).rev().map(idx).collect();
                out.push((format!("a{i}"), gen(base, idx(i))?));
            }
            for i in 3..=nn {
                let mut base = down_to_3.clone();
                base.extend([0, 1]);
                base.extend((3..i).map(idx));
                out.push((format!("b{i}"), gen(base, idx(i))?));
            }
            let mut with2p = down_to_3.clone();
            with2p.push(1);
            out.push(("a2~".to_string(), gen(with2p, 0)?));
            let mut with2 = down_to_3;
            with2.push(0);
            out.push(("a2'~".to_string(), gen(with2, 1)?));
        }
        _ => return None,
    }
    Some((subset, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schreier::presentation_pure;

    #[test]
    fn abelianizations() {
        for (name, t) in [("A2", 3), ("B2", 4), ("I2(5)", 5)] {
            let sys = CoxeterSystem::from_type(name).unwrap();
            let ab = abelianization(&presentation_pure(&sys, None).unwrap()).unwrap();
            assert_eq!((ab.free_rank, ab.is_free()), (t, true), "{name}");
        }
    }

    #[test]
    fn chains() {
        let a3 = CoxeterSystem::from_type("A3").unwrap();
        let d = devissage(&a3, &standard_chain(&a3), None).unwrap();
        assert_eq!(d.level_sizes(), [1, 2, 3]);
        let d4 = CoxeterSystem::from_type("D4").unwrap();
        let d = devissage(&d4, &standard_chain(&d4), None).unwrap();
        assert_eq!(d.level_sizes(), [0, 2, 4, 6]);
        assert!(devissage(&a3, &[0, 0b101, 0b001, 0b111], None).is_err());
    }

    #[test]
    fn largest_i_reduced() {
        let a3 = CoxeterSystem::from_type("A3").unwrap();
        let b = max_i_reduced(&a3, 0b011).unwrap();
        assert_eq!(b.format(), "s3 s2 s1");
        assert!(unique_writing(&b).unwrap());
        let d4 = CoxeterSystem::from_type("D4").unwrap();
        let b = max_i_reduced(&d4, 0b0111).unwrap();
        assert_eq!(d4.count_reduced_words(b.word(), 100).unwrap(), 2);
    }

    #[test]
    fn dihedral_test() {
        let a3 = CoxeterSystem::from_type("A3").unwrap();
        let b = a3.element("s3").unwrap();
        assert_eq!(dihedral_conjugation_test(&b, 1, 1, 0b011).unwrap(), Some(2));
    }

    #[test]
    fn affine_counterexample() {
        let sys = CoxeterSystem::from_type("Atilde2").unwrap();
        let rep = reflections_vs_nbar_check(&sys, 0b011, 5).unwrap();
        let srtrs = sys.element("s r t r s").unwrap();
        assert!(rep.missing.contains(&srtrs));
    }

    #[test]
    fn finite_reflections_match() {
        for (name, subset) in [
            ("A3", 0b011),
            ("B3", 0b011),
            ("D4", 0b0111),
            ("I2(5)", 0b01),
        ] {
            let sys = CoxeterSystem::from_type(name).unwrap();
            let rep = reflections_vs_nbar_check(&sys, subset, 0).unwrap();
            assert!(rep.equal(), "{name}: {:?}", rep.missing);
        }
    }
}
