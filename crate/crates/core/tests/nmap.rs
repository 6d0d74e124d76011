use std::collections::BTreeSet;

use proptest::prelude::*;
use purebraid::braid::{alternating_word, lift, BraidWord};
use purebraid::nmap::*;
use purebraid::{CoxElem, CoxeterSystem, Gen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sys(name: &str) -> CoxeterSystem {
    CoxeterSystem::from_type(name).unwrap()
}

fn word(s: &CoxeterSystem, text: &str) -> BraidWord {
    BraidWord::parse(s, text).unwrap()
}

fn el(s: &CoxeterSystem, text: &str) -> CoxElem {
    s.element(text).unwrap()
}

fn random_elem<R: Rng>(elems: &[CoxElem], rng: &mut R) -> CoxElem {
    elems[rng.gen_range(0..elems.len())].clone()
}

#[test]
fn eval_n_examples() {
    let a2 = sys("I2(3)");
    let s = el(&a2, "s");
    assert_eq!(eval_n(&word(&a2, "s")), ZTVector::basis(&s));
    assert_eq!(eval_n(&word(&a2, "s^-1")), ZTVector::basis(&s).scale(-1));
    for n in 1..5 {
        let b = BraidWord::generator(&a2, 0).pow(2 * n);
        assert_eq!(eval_n(&b), ZTVector::basis(&s).scale(2 * n));
    }
    let i25 = sys("I2(5)");
    let w0 = eval_n(&alternating_word(&i25, 0, 1, 5).unwrap());
    let all: ZTVector = i25
        .reflections(1)
        .unwrap()
        .iter()
        .fold(ZTVector::zero(), |acc, r| {
            &acc + &ZTVector::basis(r.element())
        });
    assert_eq!(all.support_len(), 5);
    assert_eq!(w0, all);
}

#[test]
fn semidirect_examples() {
    let a2 = sys("I2(3)");
    let e = eval_np(&BraidWord::empty(&a2));
    assert!(e.vector.is_zero() && e.element.is_identity());
    let s = eval_np(&word(&a2, "s"));
    let ss = s.multiply(&s).unwrap();
    assert_eq!(ss.vector, ZTVector::basis(&el(&a2, "s")).scale(2));
    assert!(ss.element.is_identity());
    assert_eq!(
        s.multiply(&s.inverse()).unwrap(),
        SemidirectElem::identity(&a2)
    );
}

#[test]
fn eval_np_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["B3", "Atilde2"] {
        let s = sys(name);
        for _ in 0..500 {
            let u = BraidWord::random(&s, rng.gen_range(0..10), false, &mut rng);
            let v = BraidWord::random(&s, rng.gen_range(0..10), false, &mut rng);
            assert_eq!(
                eval_np(&(&u * &v)),
                eval_np(&u).multiply(&eval_np(&v)).unwrap()
            );
        }
    }
}

#[test]
fn pure_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in ["A3", "B3", "Atilde2"] {
        let s = sys(name);
        let mut seen = 0;
        while seen < 100 {
            let p = BraidWord::random(&s, 2 * rng.gen_range(0..6), false, &mut rng);
            if !p.is_pure() {
                continue;
            }
            seen += 1;
            let np = eval_n(&p);
            assert!(np.is_even(), "{name} {}", p.format());
            let b = BraidWord::random(&s, rng.gen_range(0..6), false, &mut rng);
            let conj = &(&b * &p) * &b.inverse();
            assert_eq!(eval_n(&conj), np.act(&b.project()));
        }
    }
}

#[test]
fn nbar_examples() {
    let a2 = sys("I2(3)");
    assert!(nbar(&a2.identity()).is_empty());
    let t: BTreeSet<CoxElem> = ["s", "t", "s t s"].iter().map(|w| el(&a2, w)).collect();
    assert_eq!(nbar(&el(&a2, "s t s")), t);
}

#[test]
fn nbar_is_the_inversion_set() {
    for name in ["A3", "B3", "D4", "I2(7)"] {
        let s = sys(name);
        let elems = s.enumerate_elements(None).unwrap();
        let mut seen = BTreeSet::new();
        for w in &elems {
            let n = nbar(w);
            assert_eq!(n.len(), w.length());
            // t ∈ N̄(w) exactly when l(t w) < l(w)
            for r in s.reflections(1).unwrap() {
                let shorter = r.element().multiply(w).unwrap().length() < w.length();
                assert_eq!(n.contains(r.element()), shorter);
            }
            assert!(seen.insert(n), "{name}: N̄ not injective");
        }
    }
}

#[test]
fn admissibility() {
    let a2 = sys("I2(3)");
    assert_eq!(
        is_admissible(&a2, &BTreeSet::new()).unwrap(),
        Some(a2.identity())
    );
    let s = el(&a2, "s");
    assert_eq!(
        is_admissible(&a2, &BTreeSet::from([s.clone()])).unwrap(),
        Some(s)
    );
    assert_eq!(
        is_admissible(&a2, &BTreeSet::from([el(&a2, "s t s")])).unwrap(),
        None
    );
}

#[test]
fn admissible_subsets_of_a3() {
    let a3 = sys("A3");
    let t: Vec<CoxElem> = a3
        .reflections(1)
        .unwrap()
        .iter()
        .map(|r| r.element().clone())
        .collect();
    assert_eq!(t.len(), 6);
    let nbars: BTreeSet<BTreeSet<CoxElem>> = a3
        .enumerate_elements(None)
        .unwrap()
        .iter()
        .map(nbar)
        .collect();
    let mut count = 0;
    for mask in 0u32..64 {
        let a: BTreeSet<CoxElem> = (0..6)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| t[k].clone())
            .collect();
        let got = is_admissible(&a3, &a).unwrap();
        assert_eq!(got.is_some(), nbars.contains(&a));
        if let Some(w) = got {
            assert_eq!(nbar(&w), a);
            count += 1;
        }
    }
    assert_eq!(count, 24);
}

#[test]
fn affine_dihedral_pair_is_never_admissible() {
    let g = sys("Atilde2");
    let (r, s, t) = (el(&g, "r"), el(&g, "s"), el(&g, "t"));
    let rsr = el(&g, "r s r");
    for a in [
        vec![rsr.clone(), t.clone()],
        vec![r.clone(), s.clone(), rsr.clone(), t.clone()],
        vec![r, s, rsr, t, el(&g, "t r s r t"), el(&g, "r s r t r s r")],
    ] {
        let a: BTreeSet<CoxElem> = a.into_iter().collect();
        assert_eq!(is_admissible(&g, &a).unwrap(), None);
    }
    for w in g.enumerate_elements(Some(5)).unwrap() {
        assert_eq!(is_admissible(&g, &nbar(&w)).unwrap(), Some(w));
    }
}

#[test]
fn image_witnesses() {
    let a2 = sys("I2(3)");
    let s = el(&a2, "s");
    let two_s = ZTVector::basis(&s).scale(2);
    let b = in_image_of_n(&a2, &two_s).unwrap().unwrap();
    assert_eq!(eval_n(&b), two_s);
    assert!(b.is_pure());
    let b = in_image_of_n(&a2, &ZTVector::basis(&s)).unwrap().unwrap();
    assert_eq!(b.format(), "s");
    let bad = ZTVector::basis(&el(&a2, "s t s"));
    assert!(in_image_of_n(&a2, &bad).unwrap().is_none());

    let a3 = sys("A3");
    let elems = a3.enumerate_elements(None).unwrap();
    let t: Vec<CoxElem> = a3
        .reflections(1)
        .unwrap()
        .iter()
        .map(|r| r.element().clone())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let w = random_elem(&elems, &mut rng);
        let odd = nbar(&w);
        let x = ZTVector::from_terms(t.iter().map(|r| {
            let k = rng.gen_range(-2i64..=2);
            (r.clone(), if odd.contains(r) { 2 * k + 1 } else { 2 * k })
        }));
        let b = in_image_of_n(&a3, &x).unwrap().expect("admissible parity");
        assert_eq!(eval_n(&b), x);
        assert_eq!(b.project(), w);
    }
}

#[test]
fn derived_equality() {
    let a2 = sys("I2(3)");
    let b = word(&a2, "s t^-1 s");
    assert!(equal_mod_derived(&b, &b).unwrap());
    assert!(equal_mod_derived(&word(&a2, "s^2 t^2"), &word(&a2, "t^2 s^2")).unwrap());
    assert!(!equal_mod_derived(&word(&a2, "s^2"), &word(&a2, "t^2")).unwrap());
    // braid relation
    assert!(equal_mod_derived(&word(&a2, "s t s"), &word(&a2, "t s t")).unwrap());
    assert!(equal_mod_derived(&b, &word(&sys("A2"), "s1")).is_err());
}

#[test]
fn cocycle_examples() {
    let a3 = sys("A3");
    let w = el(&a3, "s1 s2 s3");
    assert!(cocycle(&a3.identity(), &w).unwrap().is_zero());
    let s = el(&a3, "s2");
    assert_eq!(cocycle(&s, &s).unwrap(), ZTVector::basis(&s).scale(2));
}

#[test]
fn cocycle_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for name in ["A3", "I2(4)"] {
        let g = sys(name);
        let elems = g.enumerate_elements(None).unwrap();
        for _ in 0..200 {
            let (v, w, u) = (
                random_elem(&elems, &mut rng),
                random_elem(&elems, &mut rng),
                random_elem(&elems, &mut rng),
            );
            let vw = v.multiply(&w).unwrap();
            let wu = w.multiply(&u).unwrap();
            let lhs = &cocycle(&w, &u).unwrap().act(&v) + &cocycle(&v, &wu).unwrap();
            let rhs = &cocycle(&v, &w).unwrap() + &cocycle(&vw, &u).unwrap();
            assert_eq!(lhs, rhs, "{name}");
            assert!(cocycle(&v, &w).unwrap().is_even());
        }
    }
}

#[test]
fn parity_witness() {
    for name in ["A2", "B3", "Atilde2"] {
        let g = sys(name);
        let r = splitting_parity_witness(&g);
        assert_eq!(r.coefficients.len(), g.rank());
        assert!(r.coefficients.iter().all(|&(_, c)| c == 1));
        assert!(r.pass());
    }
}

#[test]
fn monotonicity() {
    let a2 = sys("I2(3)");
    let sts = word(&a2, "s t s");
    let r = monoid_monotonicity_check(std::slice::from_ref(&sts)).unwrap();
    assert!(r.pass());
    let mut prev = ZTVector::zero();
    for k in 1..=3 {
        let pre = BraidWord::positive(&a2, &sts.gens()[..k]).unwrap();
        let step = &eval_n(&pre) - &prev;
        assert_eq!(step.support_len(), 1);
        assert!(step.is_nonnegative());
        prev = eval_n(&pre);
    }
    let b2 = sys("I2(4)");
    let mut words = vec![BraidWord::empty(&b2)];
    let mut all = words.clone();
    for _ in 0..6 {
        words = words
            .iter()
            .flat_map(|w| (0..2 as Gen).map(move |g| w * &BraidWord::generator(w.system(), g)))
            .collect();
        all.extend(words.iter().cloned());
    }
    let r = monoid_monotonicity_check(&all).unwrap();
    assert_eq!(r.words, 127);
    assert!(r.pass(), "{:?}", r.failures);
    assert!(monoid_monotonicity_check(&[word(&a2, "s^-1")]).is_err());
}

#[test]
fn json_round_trip() {
    let b3 = sys("B3");
    let x = eval_n(&lift(&b3.longest_element(0b111).unwrap()).word());
    let j = x.to_json();
    assert_eq!(j.as_object().unwrap().len(), 9);
    assert_eq!(ZTVector::from_json(&b3, &j).unwrap(), x);
    let bad = serde_json::json!({"s1 s2": 1});
    assert!(ZTVector::from_json(&b3, &bad).is_err());
}

proptest! {
    #[test]
    fn admissibility_recovers_the_element(w in proptest::collection::vec(0u8..4, 0..16)) {
        let d4 = sys("D4");
        let e = d4.normal_form(&w).unwrap();
        prop_assert_eq!(is_admissible(&d4, &nbar(&e)).unwrap(), Some(e));
    }
}
