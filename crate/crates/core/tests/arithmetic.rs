use proptest::prelude::*;
use quantum_permutations::exactnum::{rat, Cyclotomic, Scalar};
use quantum_permutations::ncalg::{Alphabet, NCPoly, TensorEncoding, Word};
use quantum_permutations::rewrite::RewriteSystem;
use quantum_permutations::ncalg::MonomialOrder;

fn cyclotomic(order: u64) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-5i64..=5, 1i64..=4), order as usize).prop_map(move |cs| {
        let coeffs: Vec<_> = cs.into_iter().map(|(a, b)| rat(a, b)).collect();
        Cyclotomic::from_coeffs(order, &coeffs).unwrap()
    })
}

proptest! {
    #[test]
    fn field_axioms(a in cyclotomic(12), b in cyclotomic(12), c in cyclotomic(12)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn text_round_trip(a in cyclotomic(8)) {
        prop_assert_eq!(Cyclotomic::parse_in(8, &a.to_z_string()).unwrap(), a);
    }

    #[test]
    fn embedding_is_a_ring_map(a in cyclotomic(4), b in cyclotomic(4)) {
        let e = |x: &Cyclotomic| x.embed(12).unwrap();
        prop_assert_eq!(e(&a.mul(&b)), e(&a).mul(&e(&b)));
        prop_assert_eq!(e(&a).restrict(4).unwrap(), Some(a.clone()));
    }
}

#[test]
fn roots_of_unity() {
    for m in 1..=12u64 {
        let z = Cyclotomic::zeta(m);
        let mut p = Cyclotomic::from_int(1);
        let mut sum = Cyclotomic::from_int(0);
        for _ in 0..m {
            sum = sum.add(&p);
            p = p.mul(&z);
        }
        assert!(p.is_one(), "zeta_{m}^{m}");
        assert_eq!(sum.is_zero(), m > 1, "sum of {m}-th roots");
    }
}

/// Straightening relations alone are confluent, and their irreducible words
/// of length d are the sorted tensors: for k factors on b letters there are
/// C(d + k - 1, k - 1) * b^d of them.
#[test]
fn tensor_straightening_is_confluent() {
    let base = Alphabet::new(["a", "b"]).unwrap();
    for k in [2usize, 3] {
        let enc = TensorEncoding::new(&base, k);
        let rels: Vec<NCPoly> = enc.straightening_relations(|_| true);
        let sys = RewriteSystem::from_relations(enc.alphabet(), MonomialOrder::default(), &rels).unwrap();
        let done = sys.complete(6).unwrap();
        assert!(done.system.is_confluent());
        let counts = done.system.irreducible_counts(4);
        let binom = |n: u64, r: u64| (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        let oracle: Vec<usize> = (0..=4u64).map(|d| (binom(d + k as u64 - 1, k as u64 - 1) * 2u64.pow(d as u32)) as usize).collect();
        assert_eq!(counts, oracle, "k = {k}");
        let w = Word::from(vec![enc.tagged(1, 0), enc.tagged(0, 1)]);
        let nf = done.system.normal_form(&NCPoly::monomial(enc.alphabet(), w, rat(1, 1)));
        assert!(enc.decode(nf.terms().next().unwrap().0).is_some());
    }
}
