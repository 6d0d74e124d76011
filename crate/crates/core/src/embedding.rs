//! The homomorphism `B(B_n) → B(A_n)` sending `s1'` to `s1²`, and the
//! matching inclusion of free groups `ψ: F' → F`.

use rand::Rng;
use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::free::{act, ActionModel, FreeLetter, FreeWord, ModelKind};
use crate::nmap::eval_np;

/// Source `B_n` acting on `F'` (basis `a1'..a_{n+1}', b2..b_{n+1}`) and
/// target `A_n` acting on `F` (basis `a1..a_{n+1}`).
#[derive(Debug, Clone)]
pub struct EmbeddingInstance {
    pub n: usize,
    pub source: ActionModel,
    pub target: ActionModel,
    /// Display names for the basis of `F'`.
    pub source_basis: Vec<String>,
    psi_images: Vec<FreeWord>,
}

fn letter(sym: usize, inverse: bool) -> FreeLetter {
    FreeLetter { sym, inverse }
}

impl EmbeddingInstance {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedModel(format!("embedding with n = {n}")));
        }
        let source = ActionModel::new(ModelKind::BAB(n + 1))?;
        let target = ActionModel::new(ModelKind::A(n))?;
        let mut source_basis: Vec<String> = (1..=n + 1).map(|i| format!("a{i}'")).collect();
        source_basis.extend((2..=n + 1).map(|i| format!("b{i}")));
        let mut psi_images = vec![FreeWord::new([letter(0, false), letter(0, false)])];
        psi_images.extend((1..=n).map(FreeWord::basis));
        for i in 2..=n + 1 {
            let up = (0..i).map(|k| letter(k, false));
            let down = (0..i - 1).rev().map(|k| letter(k, true));
            psi_images.push(FreeWord::new(up.chain(down)));
        }
        Ok(EmbeddingInstance {
            n,
            source,
            target,
            source_basis,
            psi_images,
        })
    }

    pub fn source_system(&self) -> &CoxeterSystem {
        &self.source.acting
    }

    pub fn target_system(&self) -> &CoxeterSystem {
        &self.target.acting
    }

    /// `s1'^{±1} ↦ s1^{±2}`, `si' ↦ si`.
    pub fn phi(&self, b: &BraidWord) -> Result<BraidWord> {
        if b.system() != self.source_system() {
            return Err(Error::SystemMismatch);
        }
        let letters = b
            .letters()
            .iter()
            .flat_map(|l| {
                let k = if l.gen == 0 { 2 } else { 1 };
                std::iter::repeat_n(*l, k)
            })
            .collect::<Vec<Letter>>();
        BraidWord::new(self.target_system(), letters)
    }

    pub fn psi(&self, u: &FreeWord) -> FreeWord {
        substitute(&self.psi_images, u)
    }

    pub fn psi_image(&self, sym: usize) -> &FreeWord {
        &self.psi_images[sym]
    }

    /// Rewrites `w` over `x_i = a_1…a_i`, using `a_i = x_{i−1}⁻¹ x_i`.
    pub fn to_x_basis(&self, w: &FreeWord) -> FreeWord {
        let images: Vec<FreeWord> = (0..=self.n)
            .map(|i| match i {
                0 => FreeWord::basis(0),
                _ => FreeWord::new([letter(i - 1, true), letter(i, false)]),
            })
            .collect();
        substitute(&images, w)
    }

    pub fn from_x_basis(&self, w: &FreeWord) -> FreeWord {
        let images: Vec<FreeWord> = (0..=self.n)
            .map(|i| FreeWord::new((0..=i).map(|k| letter(k, false))))
            .collect();
        substitute(&images, w)
    }

    /// Length of the `x`-form modulo 2; `true` when even.
    pub fn is_even(&self, w: &FreeWord) -> bool {
        self.to_x_basis(w).len().is_multiple_of(2)
    }

    /// The preimage under `ψ` of an even word, by Schreier rewriting over the
    /// transversal `{1, x1}`; `None` for odd words.
    pub fn membership_psi_image(&self, w: &FreeWord) -> Option<FreeWord> {
        let x = self.to_x_basis(w);
        if x.len() % 2 == 1 {
            return None;
        }
        let n = self.n;
        // h_i = x1 x_i ↦ a1'…ai', g_i = x_i x1⁻¹ ↦ b_i…b_2 (g_1 = 1)
        let h = |i: usize| FreeWord::new((0..=i).map(|k| letter(k, false)));
        let g = |i: usize| FreeWord::new((1..=i).rev().map(|k| letter(n + k, false)));
        let mut out = FreeWord::identity();
        let mut odd = false;
        for l in x.letters() {
            let piece = match (odd, l.inverse) {
                (false, false) => g(l.sym),
                (true, false) => h(l.sym),
                (false, true) => h(l.sym).inverse(),
                (true, true) => g(l.sym).inverse(),
            };
            out = out.mul(&piece);
            odd = !odd;
        }
        debug_assert!(!odd);
        Some(out)
    }

    pub fn format_source(&self, u: &FreeWord) -> String {
        u.format(&self.source_basis)
    }

    pub fn format_target(&self, u: &FreeWord) -> String {
        self.target.format(u)
    }
}

fn substitute(images: &[FreeWord], u: &FreeWord) -> FreeWord {
    FreeWord::new(u.letters().iter().flat_map(|l| {
        let img = &images[l.sym];
        if l.inverse {
            img.inverse().letters().to_vec()
        } else {
            img.letters().to_vec()
        }
    }))
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct EmbeddingReport {
    pub n: usize,
    pub equivariance: bool,
    pub index2: bool,
    pub roundtrip: bool,
    pub relations: bool,
    pub exhaustive_pairs: usize,
    pub sampled_pairs: usize,
    pub roundtrip_words: usize,
    pub injectivity: String,
    pub failures: Vec<String>,
}

/// `ψ(g·u) = φ(g)·ψ(u)` on every (generator, basis symbol) pair and on
/// `samples` random pairs with `|g| ≤ 6`.
pub fn equivariance_check<R: Rng + ?Sized>(
    inst: &EmbeddingInstance,
    samples: usize,
    rng: &mut R,
    report: &mut EmbeddingReport,
) -> Result<bool> {
    let mut ok = true;
    let mut check = |g: &BraidWord, u: &FreeWord, report: &mut EmbeddingReport| -> Result<()> {
        let lhs = inst.psi(&act(&inst.source, g, u)?);
        let rhs = act(&inst.target, &inst.phi(g)?, &inst.psi(u))?;
        if lhs != rhs {
            ok = false;
            report.failures.push(format!(
                "equivariance: g = {}, u = {}",
                g.format(),
                inst.format_source(u)
            ));
        }
        Ok(())
    };
    let src = inst.source_system();
    for s in src.gens() {
        for g in [
            BraidWord::generator(src, s),
            BraidWord::generator(src, s).inverse(),
        ] {
            for sym in 0..inst.source.rank() {
                check(&g, &FreeWord::basis(sym), report)?;
                report.exhaustive_pairs += 1;
            }
        }
    }
    for _ in 0..samples {
        let len = rng.gen_range(0..=6);
        let g = BraidWord::random(src, len, false, rng);
        let u = FreeWord::random(inst.source.rank(), rng.gen_range(0..=8), rng);
        check(&g, &u, report)?;
        report.sampled_pairs += 1;
    }
    Ok(ok)
}

/// Every `ψ(u)` for a basis symbol `u` is even, `x1` is odd, and
/// rewriting `ψ(u)` gives back `u`.
pub fn index2_check(inst: &EmbeddingInstance, report: &mut EmbeddingReport) -> bool {
    let mut ok = !inst.is_even(&FreeWord::basis(0));
    for sym in 0..inst.source.rank() {
        let img = inst.psi_image(sym);
        let back = inst.membership_psi_image(img);
        if back != Some(FreeWord::basis(sym)) {
            ok = false;
            report.failures.push(format!(
                "index2: {} ↦ {}",
                inst.source_basis[sym],
                inst.format_target(img)
            ));
        }
    }
    ok
}

/// Random even words of `F` pull back and map forward to themselves.
pub fn roundtrip_check<R: Rng + ?Sized>(
    inst: &EmbeddingInstance,
    samples: usize,
    rng: &mut R,
    report: &mut EmbeddingReport,
) -> bool {
    let mut ok = true;
    while report.roundtrip_words < samples {
        let w = FreeWord::random(inst.target.rank(), rng.gen_range(0..=12), rng);
        let Some(pre) = inst.membership_psi_image(&w) else {
            continue;
        };
        report.roundtrip_words += 1;
        if inst.psi(&pre) != w {
            ok = false;
            report
                .failures
                .push(format!("roundtrip: {}", inst.format_target(&w)));
        }
    }
    ok
}

/// For each braid relation of `B_n`, the `φ`-images act equally on `F` and
/// have equal images in `ℤT ⋊ W`.
pub fn relations_check(inst: &EmbeddingInstance, report: &mut EmbeddingReport) -> Result<bool> {
    let src = inst.source_system();
    let mut ok = true;
    for s in src.gens() {
        for t in src.gens().filter(|&t| t > s) {
            let Some(m) = src.m(s, t) else { continue };
            let alt = |a, b| {
                let gens: Vec<_> = (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect();
                BraidWord::positive(src, &gens)
            };
            let (l, r) = (inst.phi(&alt(s, t)?)?, inst.phi(&alt(t, s)?)?);
            let same_action = inst.target.automorphism(&l)? == inst.target.automorphism(&r)?;
            if !same_action || eval_np(&l) != eval_np(&r) {
                ok = false;
                report
                    .failures
                    .push(format!("relation: {} = {}", l.format(), r.format()));
            }
        }
    }
    Ok(ok)
}

/// Runs every check for `n`.
pub fn verify_embedding<R: Rng + ?Sized>(
    n: usize,
    samples: usize,
    rng: &mut R,
) -> Result<EmbeddingReport> {
    let inst = EmbeddingInstance::new(n)?;
    let mut report = EmbeddingReport {
        n,
        ..Default::default()
    };
    report.equivariance = equivariance_check(&inst, samples, rng, &mut report)?;
    report.index2 = index2_check(&inst, &mut report);
    report.roundtrip = roundtrip_check(&inst, samples, rng, &mut report);
    report.relations = relations_check(&inst, &mut report)?;
    report.injectivity = if report.failures.is_empty() {
        "certified modulo faithfulness of the type-B action".into()
    } else {
        "not certified".into()
    };
    Ok(report)
}

impl EmbeddingReport {
    pub fn pass(&self) -> bool {
        self.equivariance && self.index2 && self.roundtrip && self.relations
    }
}
