//! Coxeter matrices, named types, and finite-type classification.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a simple generator. Ranks are limited to 64 so that generator
/// sets fit in a `u64` mask.
pub type Gen = u8;

/// Bitmask of generators.
pub type GenSet = u64;

pub(crate) fn gen_set<I: IntoIterator<Item = Gen>>(gens: I) -> GenSet {
    gens.into_iter().fold(0, |acc, g| acc | (1u64 << g))
}

pub(crate) fn gens_of(set: GenSet) -> impl Iterator<Item = Gen> {
    (0..64u8).filter(move |&g| set & (1u64 << g) != 0)
}

static NEXT_SYSTEM_ID: AtomicU64 = AtomicU64::new(1);

/// Limits for enumerations over possibly infinite groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_length: usize,
    pub max_elements: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_length: 20,
            max_elements: 1_000_000,
        }
    }
}

/// The named Coxeter types understood by [`CoxeterSystem::named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    /// `B_n` with the double bond between `s1` and `s2`.
    B(usize),
    /// `D_n` with generators `s2, s2', s3, ..., sn`.
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    I2(u32),
    /// Affine `Ã_n`; for `n = 2` the generators are named `r, s, t`.
    ATilde(usize),
}

impl CoxeterType {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let unknown = || Error::UnknownType(text.to_string());
        let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        if let Some(rest) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m = rest.parse::<u32>().map_err(|_| unknown())?;
            if m < 2 {
                return Err(unknown());
            }
            return Ok(CoxeterType::I2(m));
        }
        for prefix in ["Atilde", "~A", "Ã"] {
            if let Some(rest) = t.strip_prefix(prefix) {
                let n = num(rest)?;
                if n < 1 {
                    return Err(unknown());
                }
                return Ok(CoxeterType::ATilde(n));
            }
        }
        let ty = match t {
            "F4" => CoxeterType::F4,
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            _ => {
                let (head, rest) = t.split_at(t.chars().next().map_or(0, |c| c.len_utf8()));
                let n = num(rest)?;
                match head {
                    "A" if n >= 1 => CoxeterType::A(n),
                    "B" | "C" if n >= 2 => CoxeterType::B(n),
                    "D" if n >= 2 => CoxeterType::D(n),
                    "E" if (6..=8).contains(&n) => CoxeterType::E(n),
                    _ => return Err(unknown()),
                }
            }
        };
        Ok(ty)
    }

    pub fn rank(&self) -> usize {
        match *self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) | CoxeterType::E(n) => n,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::I2(_) => 2,
            CoxeterType::ATilde(n) => n + 1,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::ATilde(n) => write!(f, "Atilde{n}"),
        }
    }
}

/// Order and reflection count of a finite Coxeter group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteInfo {
    /// `None` when the order does not fit in a `u128`.
    pub order: Option<u128>,
    pub reflections: usize,
}

type QuotientKey = (Gen, Vec<Gen>);

pub(crate) struct Inner {
    pub(crate) id: u64,
    pub(crate) rank: usize,
    pub(crate) m: Vec<Vec<Option<u32>>>,
    pub(crate) labels: Vec<String>,
    pub(crate) kind: Option<CoxeterType>,
    pub(crate) caps: Caps,
    /// Left descent masks, keyed by reduced word.
    pub(crate) descents: RwLock<HashMap<Vec<Gen>, GenSet>>,
    /// `s·v` for `s` a left descent of the reduced word `v`.
    pub(crate) quotients: RwLock<HashMap<QuotientKey, Vec<Gen>>>,
}

/// A Coxeter system `(W, S)` given by its Coxeter matrix.
///
/// Cloning is cheap; clones share the rewriting caches.
#[derive(Clone)]
pub struct CoxeterSystem {
    pub(crate) inner: Arc<Inner>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("kind", &self.inner.kind)
            .field("labels", &self.inner.labels)
            .field("m", &self.inner.m)
            .finish()
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

impl Eq for CoxeterSystem {}

impl std::hash::Hash for CoxeterSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.id.hash(state);
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonEntry {
    Int(i64),
    Text(String),
    Null(()),
}

#[derive(Deserialize)]
struct JsonSystem {
    rank: usize,
    m: Vec<Vec<Option<JsonEntry>>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl CoxeterSystem {
    /// Validates a Coxeter matrix; `None` entries stand for `∞`.
    ///
    /// The matrix must be square and symmetric with ones on the diagonal and
    /// off-diagonal entries at least 2.
    pub fn new(matrix: Vec<Vec<Option<u32>>>, labels: Option<Vec<String>>) -> Result<Self> {
        Self::build(matrix, labels, None)
    }

    fn build(
        matrix: Vec<Vec<Option<u32>>>,
        labels: Option<Vec<String>>,
        kind: Option<CoxeterType>,
    ) -> Result<Self> {
        let rank = matrix.len();
        if rank == 0 || rank > 64 {
            return Err(Error::BadRank(rank));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    rank,
                });
            }
        }
        for i in 0..rank {
            if matrix[i][i] != Some(1) {
                return Err(Error::BadDiagonal(i));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::Asymmetric(i, j));
                }
                if let Some(v) = matrix[i][j] {
                    if v < 2 {
                        return Err(Error::EntryTooSmall(i, j));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != rank {
                    return Err(Error::LabelCount {
                        expected: rank,
                        got: l.len(),
                    });
                }
                l
            }
            None => (1..=rank).map(|i| format!("s{i}")).collect(),
        };
        for (i, l) in labels.iter().enumerate() {
            let bad = l.is_empty()
                || l.chars()
                    .any(|c| c.is_whitespace() || "^[];.,<>|=".contains(c))
                || labels[..i].contains(l);
            if bad {
                return Err(Error::BadLabel(l.clone()));
            }
        }
        Ok(CoxeterSystem {
            inner: Arc::new(Inner {
                id: NEXT_SYSTEM_ID.fetch_add(1, Ordering::Relaxed),
                rank,
                m: matrix,
                labels,
                kind,
                caps: Caps::default(),
                descents: RwLock::new(HashMap::new()),
                quotients: RwLock::new(HashMap::new()),
            }),
        })
    }

    /// Builds a named type such as `A3`, `B3`, `D4`, `I2(5)` or `Atilde2`.
    pub fn from_type(name: &str) -> Result<Self> {
        Self::named(CoxeterType::parse(name)?)
    }

    pub fn named(kind: CoxeterType) -> Result<Self> {
        let n = kind.rank();
        let mut m = vec![vec![Some(2u32); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        let mut set = |i: usize, j: usize, v: Option<u32>| {
            m[i][j] = v;
            m[j][i] = v;
        };
        let numbered = |n: usize| (1..=n).map(|i| format!("s{i}")).collect::<Vec<_>>();
        let labels = match kind {
            CoxeterType::A(n) => {
                for i in 1..n {
                    set(i - 1, i, Some(3));
                }
                numbered(n)
            }
            CoxeterType::B(n) => {
                set(0, 1, Some(4));
                for i in 2..n {
                    set(i - 1, i, Some(3));
                }
                numbered(n)
            }
            CoxeterType::D(n) => {
                // order: s2, s2', s3, ..., sn
                if n >= 3 {
                    set(0, 2, Some(3));
                    set(1, 2, Some(3));
                    for i in 3..n {
                        set(i - 1, i, Some(3));
                    }
                }
                let mut l = vec!["s2".to_string(), "s2'".to_string()];
                l.extend((3..=n).map(|i| format!("s{i}")));
                l
            }
            CoxeterType::E(n) => {
                // Bourbaki: 1-3-4-5-..., 2-4
                set(0, 2, Some(3));
                set(1, 3, Some(3));
                for i in 3..n {
                    set(i - 1, i, Some(3));
                }
                numbered(n)
            }
            CoxeterType::F4 => {
                set(0, 1, Some(3));
                set(1, 2, Some(4));
                set(2, 3, Some(3));
                numbered(4)
            }
            CoxeterType::H3 => {
                set(0, 1, Some(5));
                set(1, 2, Some(3));
                numbered(3)
            }
            CoxeterType::H4 => {
                set(0, 1, Some(5));
                set(1, 2, Some(3));
                set(2, 3, Some(3));
                numbered(4)
            }
            CoxeterType::I2(mm) => {
                set(0, 1, Some(mm));
                vec!["s".to_string(), "t".to_string()]
            }
            CoxeterType::ATilde(n) => {
                if n == 1 {
                    set(0, 1, None);
                } else {
                    for i in 0..=n {
                        set(i, (i + 1) % (n + 1), Some(3));
                    }
                }
                if n == 2 {
                    vec!["r".to_string(), "s".to_string(), "t".to_string()]
                } else {
                    (0..=n).map(|i| format!("s{i}")).collect()
                }
            }
        };
        Self::build(m, Some(labels), Some(kind))
    }

    /// Parses `{"rank": n, "m": [[...]], "labels": [...]}`; `∞` may be
    /// written as `null`, `0`, `"inf"` or `"∞"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: JsonSystem =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut matrix = Vec::with_capacity(doc.m.len());
        for row in doc.m {
            let mut out = Vec::with_capacity(row.len());
            for entry in row {
                let v = match entry {
                    None | Some(JsonEntry::Null(())) | Some(JsonEntry::Int(0)) => None,
                    Some(JsonEntry::Int(v)) if v >= 1 && v <= u32::MAX as i64 => Some(v as u32),
                    Some(JsonEntry::Int(v)) => {
                        return Err(Error::Parse(format!("bad matrix entry {v}")))
                    }
                    Some(JsonEntry::Text(s)) => match s.as_str() {
                        "inf" | "infinity" | "∞" => None,
                        other => return Err(Error::Parse(format!("bad matrix entry {other:?}"))),
                    },
                };
                out.push(v);
            }
            matrix.push(out);
        }
        if matrix.len() != doc.rank {
            return Err(Error::BadRank(doc.rank));
        }
        Self::new(matrix, doc.labels)
    }

    /// Accepts either a named type or a JSON document.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_type(text)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m: Vec<Vec<serde_json::Value>> = self
            .inner
            .m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.map_or(serde_json::Value::Null, |x| x.into()))
                    .collect()
            })
            .collect();
        serde_json::json!({ "rank": self.rank(), "m": m, "labels": self.inner.labels })
    }

    pub fn with_caps(&self, caps: Caps) -> Self {
        let inner = &self.inner;
        let mut sys = Self::build(inner.m.clone(), Some(inner.labels.clone()), inner.kind)
            .expect("already validated");
        Arc::get_mut(&mut sys.inner).expect("fresh").caps = caps;
        sys
    }

    pub fn caps(&self) -> Caps {
        self.inner.caps
    }

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    pub fn kind(&self) -> Option<CoxeterType> {
        self.inner.kind
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        0..self.inner.rank as Gen
    }

    pub fn all_gens(&self) -> GenSet {
        if self.inner.rank == 64 {
            u64::MAX
        } else {
            (1u64 << self.inner.rank) - 1
        }
    }

    /// `m(s, t)`, with `None` for `∞`.
    pub fn m(&self, s: Gen, t: Gen) -> Option<u32> {
        self.inner.m[s as usize][t as usize]
    }

    pub fn matrix(&self) -> &[Vec<Option<u32>>] {
        &self.inner.m
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, s: Gen) -> &str {
        &self.inner.labels[s as usize]
    }

    pub fn gen_index(&self, label: &str) -> Result<Gen> {
        self.inner
            .labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as Gen)
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    pub fn check_gen(&self, s: Gen) -> Result<()> {
        if (s as usize) < self.inner.rank {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange(s as usize))
        }
    }

    /// Parses whitespace-separated generator labels.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>> {
        text.split_whitespace()
            .filter(|t| *t != "ε" && *t != "1")
            .map(|t| self.gen_index(t))
            .collect()
    }

    /// Parses a comma- or whitespace-separated subset of generators.
    pub fn parse_subset(&self, text: &str) -> Result<GenSet> {
        let mut set = 0;
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if !tok.is_empty() {
                set |= 1u64 << self.gen_index(tok)?;
            }
        }
        Ok(set)
    }

    pub fn format_word(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        word.iter()
            .map(|&g| self.label(g))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_subset(&self, set: GenSet) -> String {
        gens_of(set)
            .map(|g| self.label(g).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Connected components of the Coxeter graph restricted to `subset`.
    pub fn components(&self, subset: GenSet) -> Vec<Vec<Gen>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for g in gens_of(subset) {
            if seen & (1 << g) != 0 {
                continue;
            }
            let mut comp = vec![g];
            seen |= 1 << g;
            let mut i = 0;
            while i < comp.len() {
                let a = comp[i];
                for b in gens_of(subset) {
                    if seen & (1 << b) == 0 && self.m(a, b) != Some(2) {
                        seen |= 1 << b;
                        comp.push(b);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Order and reflection count of `W_I` if it is finite, decided by the
    /// classification of connected finite Coxeter graphs.
    pub fn finite_info(&self, subset: GenSet) -> Option<FiniteInfo> {
        let mut order = Some(1u128);
        let mut reflections = 0;
        for comp in self.components(subset) {
            let info = self.classify_component(&comp)?;
            order = match (order, info.order) {
                (Some(a), Some(b)) => a.checked_mul(b),
                _ => None,
            };
            reflections += info.reflections;
        }
        Some(FiniteInfo { order, reflections })
    }

    pub fn is_finite(&self) -> bool {
        self.finite_info(self.all_gens()).is_some()
    }

    fn classify_component(&self, comp: &[Gen]) -> Option<FiniteInfo> {
        fn factorial(n: usize) -> Option<u128> {
            (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
        }
        let n = comp.len();
        let info =
            |order: Option<u128>, reflections: usize| Some(FiniteInfo { order, reflections });
        if n == 1 {
            return info(Some(2), 1);
        }
        let mut edges = Vec::new();
        for (i, &a) in comp.iter().enumerate() {
            for &b in &comp[i + 1..] {
                match self.m(a, b) {
                    None => return None,
                    Some(2) => {}
                    Some(v) => edges.push((a, b, v)),
                }
            }
        }
        if n == 2 {
            let v = edges[0].2;
            return info(Some(2 * v as u128), v as usize);
        }
        if edges.len() != n - 1 || edges.iter().any(|e| e.2 >= 6) {
            return None;
        }
        let degree = |g: Gen| edges.iter().filter(|e| e.0 == g || e.1 == g).count();
        if comp.iter().any(|&g| degree(g) > 3) {
            return None;
        }
        let branch: Vec<Gen> = comp.iter().copied().filter(|&g| degree(g) == 3).collect();
        let big: Vec<&(Gen, Gen, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
        let two_pow = |k: usize| 1u128.checked_shl(k as u32);
        match branch.len() {
            0 => {
                if big.is_empty() {
                    return info(factorial(n + 1), n * (n + 1) / 2);
                }
                if big.len() > 1 {
                    return None;
                }
                let e = big[0];
                let at_end = degree(e.0) == 1 || degree(e.1) == 1;
                match e.2 {
                    4 if at_end => info(
                        two_pow(n).and_then(|p| factorial(n).and_then(|f| p.checked_mul(f))),
                        n * n,
                    ),
                    4 if n == 4 => info(Some(1152), 24),
                    5 if at_end && n == 3 => info(Some(120), 15),
                    5 if at_end && n == 4 => info(Some(14400), 60),
                    _ => None,
                }
            }
            1 => {
                if !big.is_empty() {
                    return None;
                }
                let centre = branch[0];
                let mut arms: Vec<usize> = Vec::new();
                for e in edges.iter().filter(|e| e.0 == centre || e.1 == centre) {
                    let mut prev = centre;
                    let mut cur = if e.0 == centre { e.1 } else { e.0 };
                    let mut len = 1;
                    loop {
                        let next = edges.iter().find_map(|f| {
                            if f.0 == cur && f.1 != prev {
                                Some(f.1)
                            } else if f.1 == cur && f.0 != prev {
                                Some(f.0)
                            } else {
                                None
                            }
                        });
                        match next {
                            Some(nx) => {
                                prev = cur;
                                cur = nx;
                                len += 1;
                            }
                            None => break,
                        }
                    }
                    arms.push(len);
                }
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => info(
                        two_pow(n - 1).and_then(|p| factorial(n).and_then(|f| p.checked_mul(f))),
                        n * (n - 1),
                    ),
                    [1, 2, 2] => info(Some(51840), 36),
                    [1, 2, 3] => info(Some(2903040), 63),
                    [1, 2, 4] => info(Some(696729600), 120),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// The standard parabolic subsystem on `subset`, with the map from its
    /// generator indices to ours.
    pub fn parabolic(&self, subset: GenSet) -> Result<(CoxeterSystem, Vec<Gen>)> {
        let map: Vec<Gen> = gens_of(subset).collect();
        if map.is_empty() {
            // rank-0 systems are not representable; callers handle ∅ directly
            return Err(Error::BadRank(0));
        }
        let m = map
            .iter()
            .map(|&a| map.iter().map(|&b| self.m(a, b)).collect())
            .collect();
        let labels = map.iter().map(|&g| self.label(g).to_string()).collect();
        let sub = CoxeterSystem::new(m, Some(labels))?;
        Ok((sub, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_small_matrices() {
        let a2 =
            CoxeterSystem::new(vec![vec![Some(1), Some(3)], vec![Some(3), Some(1)]], None).unwrap();
        assert_eq!(a2.rank(), 2);
        assert_eq!(a2.finite_info(a2.all_gens()).unwrap().order, Some(6));

        let b3 = CoxeterSystem::from_json(r#"{"rank":3,"m":[[1,3,2],[3,1,4],[2,4,1]]}"#).unwrap();
        let info = b3.finite_info(b3.all_gens()).unwrap();
        assert_eq!((info.order, info.reflections), (Some(48), 9));

        let err = CoxeterSystem::new(vec![vec![Some(1), Some(2)], vec![Some(3), Some(1)]], None);
        assert_eq!(err.unwrap_err(), Error::Asymmetric(0, 1));
        let err = CoxeterSystem::new(vec![vec![Some(2), Some(3)], vec![Some(3), Some(1)]], None);
        assert_eq!(err.unwrap_err(), Error::BadDiagonal(0));
        let err = CoxeterSystem::new(vec![vec![Some(1), Some(1)], vec![Some(1), Some(1)]], None);
        assert_eq!(err.unwrap_err(), Error::EntryTooSmall(0, 1));
    }

    #[test]
    fn json_infinity_spellings() {
        for inf in ["null", "0", "\"inf\""] {
            let doc = format!(r#"{{"rank":2,"m":[[1,{inf}],[{inf},1]],"labels":["x","y"]}}"#);
            let sys = CoxeterSystem::from_json(&doc).unwrap();
            assert_eq!(sys.m(0, 1), None);
            assert!(!sys.is_finite());
        }
    }

    #[test]
    fn named_types_classify() {
        let cases = [
            ("A3", Some(24), 6),
            ("B3", Some(48), 9),
            ("D4", Some(192), 12),
            ("I2(5)", Some(10), 5),
            ("F4", Some(1152), 24),
            ("H3", Some(120), 15),
            ("H4", Some(14400), 60),
            ("E6", Some(51840), 36),
            ("E8", Some(696729600), 120),
            ("D3", Some(24), 6),
        ];
        for (name, order, refl) in cases {
            let sys = CoxeterSystem::from_type(name).unwrap();
            let info = sys.finite_info(sys.all_gens()).expect(name);
            assert_eq!((info.order, info.reflections), (order, refl), "{name}");
        }
        for name in ["Atilde2", "Atilde1", "Atilde4"] {
            assert!(
                !CoxeterSystem::from_type(name).unwrap().is_finite(),
                "{name}"
            );
        }
        assert!(CoxeterType::parse("X9").is_err());
    }

    #[test]
    fn labels_and_words() {
        let d4 = CoxeterSystem::from_type("D4").unwrap();
        assert_eq!(d4.labels(), ["s2", "s2'", "s3", "s4"]);
        let w = d4.parse_word("s2' s3 s4").unwrap();
        assert_eq!(w, vec![1, 2, 3]);
        assert_eq!(d4.format_word(&w), "s2' s3 s4");
        assert!(d4.parse_word("s5").is_err());
        let at = CoxeterSystem::from_type("Atilde2").unwrap();
        assert_eq!(at.labels(), ["r", "s", "t"]);
    }

    #[test]
    fn parabolic_subsystem() {
        let b3 = CoxeterSystem::from_type("B3").unwrap();
        let (sub, map) = b3.parabolic(0b011).unwrap();
        assert_eq!(map, vec![0, 1]);
        assert_eq!(sub.m(0, 1), Some(4));
        assert_eq!(sub.finite_info(sub.all_gens()).unwrap().order, Some(8));
    }
}
