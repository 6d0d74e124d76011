//! Text and JSON forms of presentations.
//!
//! Text: `< g1, g2 | w1 = w2, ... >` with words written as space-separated
//! symbols, `x^-1` for inverses and `1` for the empty word.
//! JSON: `{"generators": [{"tag", "base", "gen"}], "relations": [[lhs, rhs]]}`
//! with the words in the text syntax.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{format_word, Presentation, PureGenerator, SymLetter, SymWord, Symbol};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};

fn parse_base(sys: &CoxeterSystem, text: &str) -> Result<Vec<u8>> {
    if text == "ε" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('.').map(|l| sys.gen_index(l)).collect()
}

fn parse_symbol(sys: &CoxeterSystem, tok: &str) -> Result<Symbol> {
    if let Some(inner) = tok.strip_prefix("a[").and_then(|t| t.strip_suffix(']')) {
        let (base, gen) = inner
            .split_once(';')
            .ok_or_else(|| Error::BadToken(tok.to_string()))?;
        let word = parse_base(sys, base)?;
        let base = sys.normal_form(&word)?;
        if base.length() != word.len() {
            return Err(Error::BadToken(tok.to_string()));
        }
        return Ok(Symbol::Pure(PureGenerator::new(base, sys.gen_index(gen)?)?));
    }
    Ok(Symbol::Cox(sys.gen_index(tok)?))
}

/// Parses a word such as `s1 a[s3.s2;s1]^-1`.
pub fn parse_symbol_word(sys: &CoxeterSystem, text: &str) -> Result<SymWord> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, inverse) = match tok.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (tok, false),
        };
        out.push(SymLetter {
            sym: parse_symbol(sys, name)?,
            inverse,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    pub gen: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    #[serde(default)]
    pub subset: Vec<String>,
    pub generators: Vec<GeneratorJson>,
    pub relations: Vec<[String; 2]>,
    #[serde(default)]
    pub partial: bool,
}

impl Presentation {
    pub fn to_json(&self) -> PresentationJson {
        let sys = &self.system;
        let generators = self
            .generators
            .iter()
            .map(|g| match g {
                Symbol::Cox(s) => GeneratorJson {
                    tag: "cox".into(),
                    base: None,
                    gen: sys.label(*s).into(),
                },
                Symbol::Pure(a) => GeneratorJson {
                    tag: "pure".into(),
                    base: Some(a.base.compact()),
                    gen: sys.label(a.gen).into(),
                },
            })
            .collect();
        PresentationJson {
            subset: crate::coxeter::gens_of(self.subset)
                .map(|g| sys.label(g).to_string())
                .collect(),
            generators,
            relations: self
                .relations
                .iter()
                .map(|(l, r)| [format_word(sys, l), format_word(sys, r)])
                .collect(),
            partial: self.partial,
        }
    }

    pub fn from_json(sys: &CoxeterSystem, doc: &PresentationJson) -> Result<Self> {
        let mut subset = 0u64;
        for l in &doc.subset {
            subset |= 1u64 << sys.gen_index(l)?;
        }
        let generators = doc
            .generators
            .iter()
            .map(|g| {
                let s = sys.gen_index(&g.gen)?;
                match (g.tag.as_str(), &g.base) {
                    ("cox", _) => Ok(Symbol::Cox(s)),
                    ("pure", Some(b)) => {
                        let base = sys.normal_form(&parse_base(sys, b)?)?;
                        Ok(Symbol::Pure(PureGenerator::new(base, s)?))
                    }
                    _ => Err(Error::Parse(format!("bad generator tag {:?}", g.tag))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let relations = doc
            .relations
            .iter()
            .map(|[l, r]| Ok((parse_symbol_word(sys, l)?, parse_symbol_word(sys, r)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation::new(
            sys,
            subset,
            generators,
            relations,
            doc.partial,
        ))
    }

    /// Parses the text form produced by `Display`.
    pub fn parse_text(sys: &CoxeterSystem, subset: u64, text: &str) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .ok_or_else(|| Error::Parse("expected < ... >".into()))?;
        let (gens, rels) = body
            .split_once('|')
            .ok_or_else(|| Error::Parse("missing '|'".into()))?;
        let generators = gens
            .split(',')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .map(|g| parse_symbol(sys, g))
            .collect::<Result<Vec<_>>>()?;
        let relations = rels
            .split(',')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                let (l, rr) = r
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("missing '=' in {r:?}")))?;
                Ok((parse_symbol_word(sys, l)?, parse_symbol_word(sys, rr)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation::new(sys, subset, generators, relations, false))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sys = &self.system;
        let gens: Vec<String> = self.generators.iter().map(|g| g.name(sys)).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|(l, r)| format!("{} = {}", format_word(sys, l), format_word(sys, r)))
            .collect();
        if gens.is_empty() && rels.is_empty() {
            return f.write_str("< | >");
        }
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schreier::presentation_di;

    #[test]
    fn text_and_json_round_trip() {
        let sys = CoxeterSystem::from_type("I2(4)").unwrap();
        let p = presentation_di(&sys, 0b01, None).unwrap();
        let text = p.to_string();
        let back = Presentation::parse_text(&sys, 0b01, &text).unwrap();
        assert_eq!(back.generators, p.generators);
        assert_eq!(back.relations, p.relations);
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let doc: PresentationJson = serde_json::from_str(&json).unwrap();
        let back = Presentation::from_json(&sys, &doc).unwrap();
        assert_eq!(back.relations, p.relations);
        assert_eq!(back.subset, 0b01);
    }

    #[test]
    fn words() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let w = parse_symbol_word(&sys, "s1 a[s3.s2;s1]^-1 1").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(format_word(&sys, &w), "s1 a[s3.s2;s1]^-1");
        assert!(parse_symbol_word(&sys, "a[s1.s1;s2]").is_err());
    }
}
