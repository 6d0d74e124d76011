use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use purebraid::braid::BraidWord;
use purebraid::embedding::verify_embedding;
use purebraid::free::{d_commutation_certificate, verify_braid_relations, ActionModel, ModelKind};
use purebraid::nmap::{cocycle, eval_n, is_admissible, splitting_parity_witness, ZTVector};
use purebraid::oracle::oracle_check;
use purebraid::schreier::{
    classical_aliases, devissage, presentation_di, presentation_pure, standard_chain, Presentation,
};
use purebraid::{Caps, CoxElem, CoxeterSystem, GenSet, Reflection};

#[derive(Parser)]
#[command(
    name = "purebraid",
    version,
    about = "Coxeter groups, the N-map and pure braid group presentations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Length cap; required for infinite groups.
    #[arg(long, global = true)]
    max_length: Option<usize>,
    /// Cap on the number of elements visited by a single enumeration.
    #[arg(long, global = true)]
    max_elements: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// N(b) in ℤT for a braid word.
    Nmap {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
    },
    /// Whether a set of reflections is N̄(w) for some w.
    Admissible {
        #[arg(long = "type")]
        ty: String,
        /// Comma-separated reflections, each given as a word.
        #[arg(long)]
        set: String,
    },
    /// Presentation of D_I.
    Present {
        #[arg(long = "type")]
        ty: String,
        /// Generators of I, comma-separated; defaults to the classical choice.
        #[arg(long = "I", alias = "subset")]
        subset: Option<String>,
    },
    /// Presentation of the pure braid group.
    PurePresent {
        #[arg(long = "type")]
        ty: String,
    },
    /// Generators of each factor along a chain of parabolic subgroups.
    Devissage {
        #[arg(long = "type")]
        ty: String,
        /// Subsets separated by ';', e.g. "ε; s1; s1,s2".
        #[arg(long)]
        chain: Option<String>,
    },
    /// Checks the braid relations for an action on a free group.
    VerifyActions {
        /// a, b (= bxy), bab, i2, d or lemma.
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Checks the embedding of the type-B braid group in the type-A one.
    VerifyEmbedding {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// c(v, w), or a check of the cocycle identity on random triples.
    Cocycle {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, requires = "w")]
        v: Option<String>,
        #[arg(long, requires = "v")]
        w: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Compares the word arithmetic with a permutation model.
    OracleCheck {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 5000)]
        pairs: usize,
    },
}

struct Report {
    json: Value,
    text: String,
    pass: bool,
}

impl Report {
    fn answer(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            pass: true,
        }
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn system(cli: &Cli, ty: &str) -> Result<CoxeterSystem> {
    let sys = CoxeterSystem::from_type(ty)?;
    Ok(match cli.max_elements {
        Some(max_elements) => sys.with_caps(Caps {
            max_elements,
            ..sys.caps()
        }),
        None => sys,
    })
}

/// Refuses infinite groups without a length cap.
fn bound(cli: &Cli, sys: &CoxeterSystem, ty: &str) -> Result<Option<usize>> {
    if !sys.is_finite() && cli.max_length.is_none() {
        bail!("{ty} is infinite; pass --max-length");
    }
    Ok(cli.max_length)
}

fn subset_names(sys: &CoxeterSystem, set: GenSet) -> Vec<String> {
    sys.gens()
        .filter(|&g| set >> g & 1 == 1)
        .map(|g| sys.label(g).to_string())
        .collect()
}

fn presentation_report(p: &Presentation) -> Report {
    if p.partial {
        eprintln!("warning: truncated at the length cap; the presentation is partial");
    }
    let json = serde_json::to_value(p.to_json()).expect("serializable");
    Report::answer(json, p.to_string())
}

fn nmap(cli: &Cli, ty: &str, word: &str) -> Result<Report> {
    let sys = system(cli, ty)?;
    let b = BraidWord::parse(&sys, word)?;
    let v = eval_n(&b);
    let w = b.project();
    let json = json!({
        "word": b.format(),
        "element": w.format(),
        "pure": w.is_identity(),
        "vector": v.to_json(),
    });
    Ok(Report::answer(json, v.format()))
}

fn admissible(cli: &Cli, ty: &str, set: &str) -> Result<Report> {
    let sys = system(cli, ty)?;
    let mut a = std::collections::BTreeSet::new();
    for tok in set.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let t = sys.element(tok)?;
        Reflection::from_element(&t)?;
        a.insert(t);
    }
    Ok(match is_admissible(&sys, &a)? {
        Some(w) => Report::answer(
            json!({"admissible": true, "witness": w.format()}),
            w.format(),
        ),
        None => Report::answer(
            json!({"admissible": false, "witness": null}),
            "not admissible".into(),
        ),
    })
}

fn present(cli: &Cli, ty: &str, subset: Option<&str>) -> Result<Report> {
    let sys = system(cli, ty)?;
    let subset = match subset {
        Some(text) => sys.parse_subset(text)?,
        None => {
            classical_aliases(&sys)
                .ok_or_else(|| anyhow!("no default I for {ty}; pass --I"))?
                .0
        }
    };
    let p = presentation_di(&sys, subset, bound(cli, &sys, ty)?)?;
    Ok(presentation_report(&p))
}

fn pure_present(cli: &Cli, ty: &str) -> Result<Report> {
    let sys = system(cli, ty)?;
    let p = presentation_pure(&sys, bound(cli, &sys, ty)?)?;
    Ok(presentation_report(&p))
}

fn devissage_cmd(cli: &Cli, ty: &str, chain: Option<&str>) -> Result<Report> {
    let sys = system(cli, ty)?;
    let max = bound(cli, &sys, ty)?;
    let chain = match chain {
        Some(text) => text
            .split(';')
            .map(|part| sys.parse_subset(part.trim().trim_start_matches('ε')))
            .collect::<purebraid::Result<Vec<_>>>()?,
        None => standard_chain(&sys),
    };
    let d = devissage(&sys, &chain, max)?;
    let mut lines = Vec::new();
    let levels: Vec<Value> = d
        .levels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            let names: Vec<String> = l.generators.iter().map(|g| g.name()).collect();
            lines.push(format!(
                "U{}: {{{}}} in {{{}}}: {} generators: {}",
                j + 1,
                subset_names(&sys, l.subset).join(", "),
                subset_names(&sys, l.ambient).join(", "),
                names.len(),
                names.join(", ")
            ));
            json!({
                "ambient": subset_names(&sys, l.ambient),
                "subset": subset_names(&sys, l.subset),
                "generators": names,
                "schreier_generators": l.schreier_count,
            })
        })
        .collect();
    lines.push(format!("total: {}", d.total()));
    let json = json!({
        "chain": d.chain.iter().map(|&c| subset_names(&sys, c)).collect::<Vec<_>>(),
        "levels": levels,
        "total": d.total(),
    });
    Ok(Report::answer(json, lines.join("\n")))
}

fn verify_actions(ty: &str, n: usize) -> Result<Report> {
    let model = ActionModel::by_name(ty, n)?;
    let braid = verify_braid_relations(&model);
    let mut json = json!({
        "model": model.kind.to_string(),
        "rank": model.rank(),
        "checked": braid.checked,
        "failures": braid.failures,
    });
    let mut lines = vec![format!(
        "{}: {} checks, {} failures",
        model.kind,
        braid.checked,
        braid.failures.len()
    )];
    lines.extend(braid.failures.iter().map(|f| format!("  {f}")));
    let pass = if let ModelKind::D(_) = model.kind {
        let cert = d_commutation_certificate(&model)?;
        lines.push(format!(
            "commutation certificate: {}",
            pass_fail(cert.pass())
        ));
        json["certificate"] = json!({"pass": cert.pass(), "failures": cert.failures});
        cert.pass()
    } else {
        braid.pass()
    };
    json["result"] = json!(pass_fail(pass));
    lines.push(format!("result: {}", pass_fail(pass)));
    Ok(Report {
        json,
        text: lines.join("\n"),
        pass,
    })
}

fn verify_embedding_cmd(cli: &Cli, n: usize, samples: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let r = verify_embedding(n, samples, &mut rng)?;
    let json = json!({
        "n": r.n,
        "equivariance": pass_fail(r.equivariance),
        "index2": pass_fail(r.index2),
        "roundtrip": pass_fail(r.roundtrip),
        "relations": pass_fail(r.relations),
        "exhaustive_pairs": r.exhaustive_pairs,
        "sampled_pairs": r.sampled_pairs,
        "roundtrip_words": r.roundtrip_words,
        "injectivity": r.injectivity,
        "failures": r.failures,
    });
    let text = format!(
        "n = {}\nequivariance: {} ({} generator pairs, {} random pairs)\nindex2: {}\nroundtrip: {} ({} words)\nrelations: {}\ninjectivity: {}",
        r.n,
        pass_fail(r.equivariance),
        r.exhaustive_pairs,
        r.sampled_pairs,
        pass_fail(r.index2),
        pass_fail(r.roundtrip),
        r.roundtrip_words,
        pass_fail(r.relations),
        r.injectivity
    );
    Ok(Report {
        json,
        text,
        pass: r.pass(),
    })
}

fn cocycle_cmd(
    cli: &Cli,
    ty: &str,
    v: Option<&str>,
    w: Option<&str>,
    samples: usize,
) -> Result<Report> {
    let sys = system(cli, ty)?;
    if let (Some(v), Some(w)) = (v, w) {
        let c = cocycle(&sys.element(v)?, &sys.element(w)?)?;
        let json = json!({"v": v, "w": w, "value": c.to_json(), "even": c.is_even()});
        return Ok(Report::answer(json, c.format()));
    }
    let elems = sys.enumerate_elements(bound(cli, &sys, ty)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut pick = || -> CoxElem { elems[rng.gen_range(0..elems.len())].clone() };
    let mut failures = Vec::new();
    for _ in 0..samples {
        let (v, w, u) = (pick(), pick(), pick());
        let lhs = &cocycle(&w, &u)?.act(&v) + &cocycle(&v, &(&w * &u))?;
        let rhs = &cocycle(&v, &w)? + &cocycle(&(&v * &w), &u)?;
        if lhs != rhs {
            failures.push(format!("identity at ({v}, {w}, {u})"));
        }
        if !cocycle(&v, &w)?.is_even() {
            failures.push(format!("c({v}, {w}) is not even"));
        }
    }
    for s in sys.gens() {
        let t = sys.generator(s);
        if cocycle(&t, &t)? != ZTVector::basis(&t).scale(2) {
            failures.push(format!("c({t}, {t}) ≠ 2·{t}"));
        }
    }
    let parity = splitting_parity_witness(&sys);
    let coefficients: Vec<Value> = parity
        .coefficients
        .iter()
        .map(|&(s, c)| json!({"generator": sys.label(s), "coefficient": c}))
        .collect();
    let pass = failures.is_empty() && parity.pass();
    let json = json!({
        "triples": samples,
        "failures": failures,
        "parity": coefficients,
        "result": pass_fail(pass),
    });
    let mut lines = vec![format!("{samples} triples, {} failures", failures.len())];
    lines.extend(failures.iter().map(|f| format!("  {f}")));
    let coeffs: Vec<String> = parity
        .coefficients
        .iter()
        .map(|&(s, c)| format!("{}: {c}", sys.label(s)))
        .collect();
    lines.push(format!("parity: {}", coeffs.join(", ")));
    lines.push(format!("result: {}", pass_fail(pass)));
    Ok(Report {
        json,
        text: lines.join("\n"),
        pass,
    })
}

fn oracle_cmd(cli: &Cli, ty: &str, pairs: usize) -> Result<Report> {
    let sys = system(cli, ty)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let r = oracle_check(&sys, pairs, &mut rng)?;
    let json = serde_json::to_value(&r).expect("serializable");
    let text = format!(
        "{} elements, {} pairs ({}), {} mismatches\nresult: {}",
        r.elements,
        r.pairs,
        if r.exhaustive { "all" } else { "sampled" },
        r.mismatches.len(),
        pass_fail(r.pass())
    );
    Ok(Report {
        json,
        text,
        pass: r.pass(),
    })
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Nmap { ty, word } => nmap(cli, ty, word),
        Command::Admissible { ty, set } => admissible(cli, ty, set),
        Command::Present { ty, subset } => present(cli, ty, subset.as_deref()),
        Command::PurePresent { ty } => pure_present(cli, ty),
        Command::Devissage { ty, chain } => devissage_cmd(cli, ty, chain.as_deref()),
        Command::VerifyActions { ty, n } => verify_actions(ty, *n),
        Command::VerifyEmbedding { n, samples } => verify_embedding_cmd(cli, *n, *samples),
        Command::Cocycle { ty, v, w, samples } => {
            cocycle_cmd(cli, ty, v.as_deref(), w.as_deref(), *samples)
        }
        Command::OracleCheck { ty, pairs } => oracle_cmd(cli, ty, *pairs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable"),
                Format::Text => report.text,
            };
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
