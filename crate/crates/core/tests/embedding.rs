use proptest::prelude::*;
use purebraid::braid::BraidWord;
use purebraid::embedding::*;
use purebraid::free::{act, FreeWord};
use purebraid::nmap::eval_np;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn inst(n: usize) -> EmbeddingInstance {
    EmbeddingInstance::new(n).unwrap()
}

fn src(e: &EmbeddingInstance, text: &str) -> FreeWord {
    FreeWord::parse(&e.source_basis, text).unwrap()
}

fn tgt(e: &EmbeddingInstance, text: &str) -> FreeWord {
    e.target.parse(text).unwrap()
}

#[test]
fn ranks() {
    for n in 2..=5 {
        let e = inst(n);
        assert_eq!(e.source.rank(), 2 * n + 1);
        assert_eq!(e.target.rank(), n + 1);
    }
    assert!(EmbeddingInstance::new(1).is_err());
}

#[test]
fn phi_letterwise() {
    let e = inst(3);
    let b = BraidWord::parse(e.source_system(), "s1").unwrap();
    assert_eq!(e.phi(&b).unwrap().format(), "s1 s1");
    let b = BraidWord::parse(e.source_system(), "s2 s1^-1").unwrap();
    assert_eq!(e.phi(&b).unwrap().format(), "s2 s1^-1 s1^-1");
}

#[test]
fn phi_defining_relation() {
    // s1² s2 s1² s2 = s2 s1² s2 s1² in the type-A model and in ℤT ⋊ W
    let e = inst(3);
    let a = e.target_system();
    let l = BraidWord::parse(a, "s1^2 s2 s1^2 s2").unwrap();
    let r = BraidWord::parse(a, "s2 s1^2 s2 s1^2").unwrap();
    assert_eq!(eval_np(&l), eval_np(&r));
    assert_eq!(
        e.target.automorphism(&l).unwrap(),
        e.target.automorphism(&r).unwrap()
    );
}

#[test]
fn psi_table() {
    let e = inst(3);
    assert_eq!(e.format_target(&e.psi(&src(&e, "a1'"))), "a1 a1");
    assert_eq!(e.format_target(&e.psi(&src(&e, "b2"))), "a1 a2 a1^-1");
    assert_eq!(
        e.format_target(&e.psi(&src(&e, "a2' b2^-1"))),
        "a2 a1 a2^-1 a1^-1"
    );
}

#[test]
fn x_basis() {
    let e = inst(3);
    let a1 = tgt(&e, "a1");
    assert_eq!(e.to_x_basis(&a1), FreeWord::basis(0));
    assert!(!e.is_even(&a1));
    let sq = e.psi(&src(&e, "a1'"));
    assert_eq!(e.to_x_basis(&sq), FreeWord::from_pairs(&[(0, 1), (0, 1)]));
    assert!(e.is_even(&sq));
}

#[test]
fn membership() {
    let e = inst(3);
    assert_eq!(
        e.membership_psi_image(&tgt(&e, "a1 a1")),
        Some(src(&e, "a1'"))
    );
    let w = tgt(&e, "a1 a2");
    assert_eq!(e.to_x_basis(&w), FreeWord::basis(1));
    assert_eq!(e.membership_psi_image(&w), None);
}

#[test]
fn equivariance_examples() {
    let e = inst(2);
    let b = e.source_system();
    for (g, u) in [("s2", "a2'"), ("s1", "b2")] {
        let g = BraidWord::parse(b, g).unwrap();
        let u = src(&e, u);
        let lhs = e.psi(&act(&e.source, &g, &u).unwrap());
        let rhs = act(&e.target, &e.phi(&g).unwrap(), &e.psi(&u)).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn full_report() {
    for n in 2..=4 {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let r = verify_embedding(n, 200, &mut rng).unwrap();
        assert!(r.pass(), "n={n}: {:?}", r.failures);
        assert_eq!(r.exhaustive_pairs, 2 * n * (2 * n + 1));
        assert_eq!(r.roundtrip_words, 200);
    }
}

proptest! {
    #[test]
    fn parity_is_a_homomorphism(seed in any::<u64>()) {
        let e = inst(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = FreeWord::random(4, 9, &mut rng);
        let v = FreeWord::random(4, 9, &mut rng);
        prop_assert_eq!(e.is_even(&u.mul(&v)), e.is_even(&u) == e.is_even(&v));
    }

    #[test]
    fn x_basis_round_trip(seed in any::<u64>()) {
        let e = inst(4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = FreeWord::random(5, 12, &mut rng);
        prop_assert_eq!(e.from_x_basis(&e.to_x_basis(&w)), w);
    }

    #[test]
    fn even_words_round_trip(seed in any::<u64>()) {
        let e = inst(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = FreeWord::random(4, 10, &mut rng);
        match e.membership_psi_image(&w) {
            Some(pre) => prop_assert_eq!(e.psi(&pre), w),
            None => prop_assert!(!e.is_even(&w)),
        }
    }
}
