use std::collections::{BTreeMap, BTreeSet};

use purebraid::schreier::*;
use purebraid::CoxeterSystem;

/// Relators of `p` after replacing symbols by their representatives in
/// `ident`, with tautologies dropped.
fn relators(p: &Presentation, ident: &BTreeMap<Symbol, Symbol>) -> BTreeSet<SymWord> {
    let map = |w: &SymWord| -> SymWord {
        w.iter()
            .map(|x| SymLetter {
                sym: ident.get(&x.sym).cloned().unwrap_or_else(|| x.sym.clone()),
                inverse: x.inverse,
            })
            .collect()
    };
    p.relations
        .iter()
        .map(|(l, r)| canonical_relator(&map(l), &map(r)))
        .filter(|r| !r.is_empty())
        .collect()
}

struct Golden {
    generators: Vec<Symbol>,
    relators: BTreeSet<SymWord>,
}

/// Reads a table written with the `a_i`, `b_i` names, translating them
/// through the aliases of the system.
fn golden(s: &CoxeterSystem, file: &str) -> Golden {
    let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).unwrap();
    let (_, aliases) = classical_aliases(s).unwrap();
    let alias: BTreeMap<String, String> =
        aliases.iter().map(|(n, g)| (n.clone(), g.name())).collect();
    let translate = |w: &str| -> SymWord {
        let toks: Vec<String> = w
            .split_whitespace()
            .map(|tok| {
                let (base, inv) = match tok.strip_suffix("^-1") {
                    Some(b) => (b, "^-1"),
                    None => (tok, ""),
                };
                format!("{}{inv}", alias.get(base).map_or(base, String::as_str))
            })
            .collect();
        parse_symbol_word(s, &toks.join(" ")).unwrap()
    };
    let mut generators = Vec::new();
    let mut rels = BTreeSet::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(g) = line.strip_prefix("generators:") {
            generators = translate(g).into_iter().map(|x| x.sym).collect();
            continue;
        }
        let (l, r) = line.split_once('=').unwrap();
        rels.insert(canonical_relator(&translate(l), &translate(r)));
    }
    Golden {
        generators,
        relators: rels,
    }
}

/// Compares `presentation_di` for the classical choice of `I` with a table
/// in `tests/golden`, identifying the two extra D-type generators with
/// `a2` and `a2'`.
pub fn check_table(name: &str, file: &str) -> Result<(), String> {
    let s = CoxeterSystem::from_type(name).map_err(|e| e.to_string())?;
    let (subset, aliases) = classical_aliases(&s).ok_or("no aliases")?;
    let p = presentation_di(&s, subset, None).map_err(|e| e.to_string())?;
    let g = golden(&s, file);
    let by_name: BTreeMap<&str, &PureGenerator> =
        aliases.iter().map(|(n, g)| (n.as_str(), g)).collect();
    let mut ident = BTreeMap::new();
    for (extra, base) in [("a2~", "a2"), ("a2'~", "a2'")] {
        if let (Some(e), Some(b)) = (by_name.get(extra), by_name.get(base)) {
            ident.insert(Symbol::Pure((*e).clone()), Symbol::Pure((*b).clone()));
        }
    }
    let ours: BTreeSet<Symbol> = p
        .generators
        .iter()
        .map(|x| ident.get(x).cloned().unwrap_or_else(|| x.clone()))
        .collect();
    if ours != g.generators.iter().cloned().collect() {
        return Err(format!("{name}: generators differ"));
    }
    let rels = relators(&p, &ident);
    if rels != g.relators {
        let extra: Vec<_> = rels
            .difference(&g.relators)
            .map(|r| format_word(&s, r))
            .collect();
        let missing: Vec<_> = g
            .relators
            .difference(&rels)
            .map(|r| format_word(&s, r))
            .collect();
        return Err(format!("{name}: extra {extra:?}, missing {missing:?}"));
    }
    if !p.unsound_relations().is_empty() {
        return Err(format!("{name}: unsound relation"));
    }
    Ok(())
}
