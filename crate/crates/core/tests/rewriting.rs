use std::cmp::Ordering;
use std::sync::OnceLock;

use proptest::prelude::*;
use quantum_permutations::exactnum::{rat, Rational};
use quantum_permutations::groups::factorial;
use quantum_permutations::exactnum::linalg::rank;
use quantum_permutations::ncalg::{compare_words, Alphabet, NCPoly, Word};
use quantum_permutations::qperm::{magic_presentation, pi_n};
use quantum_permutations::rewrite::{parse_presentation, CompletionStatus, RewriteSystem};

fn magic(n: usize) -> RewriteSystem {
    static CACHE: OnceLock<Vec<RewriteSystem>> = OnceLock::new();
    CACHE.get_or_init(|| (1..=4).map(|k| magic_presentation(k).complete(8).unwrap()).collect())[n - 1].clone()
}

fn all_words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (0..letters as u16).map(move |g| w.concat(&Word::letter(g))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Dimension of the span of all words of length ≤ d, evaluated as functions
/// on S_n (faithful for n ≤ 3).
fn evaluation_filtration(n: usize, d: usize) -> Vec<usize> {
    let a = Alphabet::matrix("u", n);
    let words = all_words(n * n, d);
    (0..=d)
        .map(|e| {
            let rows: Vec<Vec<Rational>> = words
                .iter()
                .filter(|w| w.len() <= e)
                .map(|w| pi_n(&NCPoly::monomial(&a, w.clone(), rat(1, 1)), n).unwrap().values().to_vec())
                .collect();
            rank(&rows)
        })
        .collect()
}

fn parse(sys: &RewriteSystem, text: &str) -> NCPoly {
    NCPoly::parse(sys.alphabet(), text).unwrap()
}

#[test]
fn normal_form_examples() {
    let s2 = magic(2);
    assert!(s2.normal_form(&parse(&s2, "u11.u12")).is_zero());
    for n in 1..=4 {
        let s = magic(n);
        assert_eq!(s.normal_form(&parse(&s, "u11.u11")), s.normal_form(&parse(&s, "u11")));
        if n > 1 {
            assert_eq!(s.normal_form(&parse(&s, "u11")), parse(&s, "u11"));
        }
        assert_eq!(s.normal_form(&NCPoly::one(s.alphabet())), NCPoly::one(s.alphabet()));
        assert!(s.reduces_to_zero(&NCPoly::zero(s.alphabet())));
    }
}

#[test]
fn completion_examples() {
    let s2 = magic(2);
    assert!(s2.is_confluent());
    let basis: Vec<String> = s2.finite_basis(6).unwrap().iter().map(|w| NCPoly::monomial(s2.alphabet(), w.clone(), rat(1, 1)).to_string()).collect();
    assert_eq!(basis, ["1", "1*u11"]);

    let s3 = magic(3);
    assert!(s3.is_confluent());
    assert_eq!(s3.finite_basis(8).unwrap().len(), 6);

    let t = parse_presentation("generators: p q\np.p - p\nq.q - q\n").unwrap();
    let raw = t.system().unwrap();
    let done = raw.complete(10).unwrap();
    assert_eq!(done.status, CompletionStatus::Confluent);
    let lhs = |s: &RewriteSystem| s.rules().iter().map(|r| r.lhs.clone()).collect::<Vec<_>>();
    assert_eq!(lhs(&done.system), lhs(&raw));
}

#[test]
fn reduction_examples_at_n4() {
    let s = magic(4);
    let expanded = parse(&s, "u11.u12 + u11.u13 + u11.u14 + u11.u11 - u11");
    assert!(s.reduces_to_zero(&expanded));
    assert_eq!(s.normal_form(&parse(&s, "u11.u12 + u11.u13 + u11.u14 - u11 + u11.u11 - u11")), parse(&s, "-u11"));
    let c = parse(&s, "u11.u33 - u33.u11");
    assert!(!s.reduces_to_zero(&c));
}

/// Oracle: words with no rule lhs as a factor alternate between p and q.
#[test]
fn alternating_words_filtration() {
    let t = parse_presentation("generators: p q\np.p - p\nq.q - q\n").unwrap().system().unwrap().complete(10).unwrap().system;
    let oracle: Vec<usize> = (0..=3)
        .map(|d| all_words(2, d).iter().filter(|w| w.letters().windows(2).all(|x| x[0] != x[1])).count())
        .collect();
    assert_eq!(t.filtration_dimension(3).unwrap(), oracle);
    assert_eq!(oracle, [1, 3, 5, 7]);
}

#[test]
fn magic_filtrations_match_evaluation() {
    assert_eq!(magic(2).filtration_dimension(5).unwrap(), [1, 2, 2, 2, 2, 2]);
    assert_eq!(evaluation_filtration(2, 5), [1, 2, 2, 2, 2, 2]);
    let f3 = magic(3).filtration_dimension(8).unwrap();
    assert_eq!(f3, evaluation_filtration(3, 3).into_iter().chain([6; 5]).collect::<Vec<_>>());
    assert_eq!(*f3.last().unwrap(), factorial(3) as usize);
}

#[test]
fn small_magic_algebras_are_commutative() {
    for n in 1..=3 {
        let s = magic(n);
        let names = s.alphabet().names().to_vec();
        for a in &names {
            for b in &names {
                assert!(s.reduces_to_zero(&parse(&s, &format!("{a}.{b} - {b}.{a}"))), "n = {n}: [{a}, {b}]");
            }
        }
    }
}

#[test]
fn rules_decrease_leading_word() {
    for n in 1..=4 {
        let s = magic(n);
        for r in s.rules() {
            for (w, _) in r.rhs.terms() {
                assert_eq!(compare_words(w, &r.lhs, s.order()), Ordering::Less);
            }
        }
        let lhs: Vec<&Word> = s.rules().iter().map(|r| &r.lhs).collect();
        for (i, a) in lhs.iter().enumerate() {
            for (j, b) in lhs.iter().enumerate() {
                assert!(i == j || a.find(b.letters()).is_none(), "{a:?} contains {b:?}");
            }
        }
    }
}

#[test]
fn evaluation_rank_is_n_factorial() {
    for n in 1..=3 {
        assert_eq!(*evaluation_filtration(n, 2 * n).last().unwrap(), factorial(n) as usize);
    }
}

fn poly_strategy(n: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    let letters = (n * n) as u16;
    prop::collection::vec((prop::collection::vec(0..letters, 0..4), -3i64..=3), 0..5)
}

fn build(a: &std::sync::Arc<Alphabet>, terms: &[(Vec<u16>, i64)]) -> NCPoly {
    let mut p = NCPoly::zero(a);
    for (w, c) in terms {
        p.add_term(Word::from(w.clone()), rat(*c, 1));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(t in poly_strategy(3)) {
        let s = magic(3);
        let nf = s.normal_form(&build(s.alphabet(), &t));
        prop_assert_eq!(s.normal_form(&nf), nf);
    }

    #[test]
    fn normal_form_is_linear(t in poly_strategy(4), u in poly_strategy(4), a in -4i64..=4, b in -4i64..=4) {
        let s = magic(4);
        let (p, q) = (build(s.alphabet(), &t), build(s.alphabet(), &u));
        let (ra, rb) = (rat(a, 1), rat(b, 1));
        let lhs = s.normal_form(&(&p.scale(&ra) + &q.scale(&rb)));
        let rhs = &s.normal_form(&p).scale(&ra) + &s.normal_form(&q).scale(&rb);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_multiplication_is_well_defined(t in poly_strategy(4), u in poly_strategy(4)) {
        let s = magic(4);
        prop_assert!(s.is_confluent());
        let (p, q) = (build(s.alphabet(), &t), build(s.alphabet(), &u));
        let direct = s.normal_form(&(&p * &q));
        let via = s.normal_form(&(&s.normal_form(&p) * &s.normal_form(&q)));
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn reduction_never_increases_leading_word(t in poly_strategy(3)) {
        let s = magic(3);
        let p = build(s.alphabet(), &t);
        let nf = s.normal_form(&p);
        if let (Some((lp, _)), Some((ln, _))) = (p.leading_term(s.order()), nf.leading_term(s.order())) {
            prop_assert_ne!(compare_words(ln, lp, s.order()), Ordering::Greater);
        }
    }
}
