use std::sync::OnceLock;

use proptest::prelude::*;
use quantum_permutations::exactnum::rat;
use quantum_permutations::ncalg::{NCPoly, Word};
use quantum_permutations::qperm::{magic_presentation, HopfPresentation};
use quantum_permutations::rewrite::RewriteSystem;
use num_traits::Zero;

struct Fixture {
    hopf: HopfPresentation,
    sys: RewriteSystem,
    sys2: RewriteSystem,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let hopf = magic_presentation(3);
        let sys = hopf.complete(8).unwrap();
        let sys2 = sys.tensor_power(hopf.tensor2());
        Fixture { hopf, sys, sys2 }
    })
}

fn word() -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..9, 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Structure maps send the ideal into the ideal: for a·r·b with r a
    /// defining relation, Δ, ε and S all vanish.
    #[test]
    fn structure_maps_respect_the_ideal(a in word(), b in word(), pick in any::<prop::sample::Index>()) {
        let f = fixture();
        let rels = f.hopf.relations();
        let r = &pick.get(rels).poly;
        let p = r.sandwich(&a, &b);
        prop_assert!(f.sys.reduces_to_zero(&p));
        prop_assert!(f.sys2.reduces_to_zero(&f.hopf.delta(&p)));
        prop_assert!(f.hopf.counit(&p).is_zero());
        prop_assert!(f.sys.reduces_to_zero(&f.hopf.antipode(&p).unwrap()));
    }

    /// ε is multiplicative and S reverses products.
    #[test]
    fn counit_and_antipode_on_products(a in word(), b in word()) {
        let f = fixture();
        let al = f.hopf.alphabet();
        let (x, y) = (NCPoly::monomial(al, Word::from(a), rat(1, 1)), NCPoly::monomial(al, Word::from(b), rat(1, 1)));
        let xy = &x * &y;
        prop_assert_eq!(f.hopf.counit(&xy), f.hopf.counit(&x) * f.hopf.counit(&y));
        let s = |p: &NCPoly| f.hopf.antipode(p).unwrap();
        prop_assert_eq!(s(&xy), &s(&y) * &s(&x));
    }
}
