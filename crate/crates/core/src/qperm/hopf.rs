use super::presentation::HopfPresentation;
use super::QpermError;
use crate::exactnum::{Rational, Scalar};
use crate::ncalg::{Alphabet, Direction, Letter, MonomialOrder, NCPoly, TensorEncoding, Word};
use crate::report::CertificateReport;
use crate::rewrite::RewriteSystem;

/// Images of the letters of `from` (a tensor encoding) in `to`, shifting
/// every slot by `offset`.
fn shift_images(from: &TensorEncoding, to: &TensorEncoding, offset: usize) -> Vec<NCPoly> {
    (0..from.alphabet().len() as Letter)
        .map(|l| {
            let (slot, g) = from.untag(l);
            NCPoly::generator(to.alphabet(), to.tagged(slot + offset, g))
        })
        .collect()
}

/// `m ∘ (S ⊗ id)` (`left = true`) or `m ∘ (id ⊗ S)` applied to a
/// straightened element of `A ⊗ A`.
fn multiply_with_antipode(hopf: &HopfPresentation, t: &NCPoly, left: bool) -> NCPoly {
    let enc = hopf.tensor2();
    let base = hopf.alphabet();
    let mut out = NCPoly::zero(base);
    for (w, c) in t.terms() {
        let parts = enc.decode(w).expect("straightened tensor");
        let a = NCPoly::monomial(base, parts[0].clone(), Rational::from_int(1));
        let b = NCPoly::monomial(base, parts[1].clone(), Rational::from_int(1));
        let prod = if left {
            &hopf.antipode(&a).expect("antipode") * &b
        } else {
            &a * &hopf.antipode(&b).expect("antipode")
        };
        out = &out + &prod.scale(c);
    }
    out
}

/// Checks, all by reduction to zero against the presentation completed up
/// to `cap`:
/// - `Δ`, `ε`, `S` send every defining relation to zero (in `A ⊗ A`, in
///   `K`, in `A`);
/// - coassociativity and the counit laws on generators;
/// - both antipode laws on generators, and `S²(g) = g`.
pub fn verify_hopf_axioms(hopf: &HopfPresentation, cap: usize) -> Result<CertificateReport, QpermError> {
    let kind = if hopf.is_hopf() { "Hopf algebra" } else { "bialgebra" };
    let mut r = CertificateReport::new(format!("structure maps define a {kind} ({:?}, n = {})", hopf.kind, hopf.n));
    let completion = hopf.raw_system().complete(cap.max(hopf.raw_system().max_rule_degree()))?;
    let sys = completion.system;
    r.set_data("cap", cap);
    r.set_data("status", sys.status());
    r.set_data("rules", sys.rules().len());

    let base = hopf.alphabet().clone();
    let enc2 = hopf.tensor2().clone();
    let enc3 = TensorEncoding::new(&base, 3);
    let sys2 = sys.tensor_power(&enc2);
    let sys3 = sys.tensor_power(&enc3);
    let scalars = RewriteSystem::free(&Alphabet::empty(), MonomialOrder::DegLex);
    let empty = Alphabet::empty();

    for rel in hopf.relations() {
        r.check_zero(format!("delta well-defined: {}", rel.label), &hopf.delta(&rel.poly), &sys2);
        let e = NCPoly::constant(&empty, hopf.counit(&rel.poly));
        r.check_zero(format!("counit well-defined: {}", rel.label), &e, &scalars);
        if let Some(s) = hopf.antipode(&rel.poly) {
            r.check_zero(format!("antipode well-defined: {}", rel.label), &s, &sys);
        }
    }

    let left_delta: Vec<NCPoly> = {
        let inner = shift_images(&enc2, &enc3, 0);
        let delta_in_12: Vec<NCPoly> =
            hopf.delta_images().iter().map(|d| d.substitute_to(enc3.alphabet(), &inner, Direction::Homomorphism).expect("images")).collect();
        (0..enc2.alphabet().len() as Letter)
            .map(|l| {
                let (slot, g) = enc2.untag(l);
                if slot == 0 {
                    delta_in_12[g as usize].clone()
                } else {
                    NCPoly::generator(enc3.alphabet(), enc3.tagged(2, g))
                }
            })
            .collect()
    };
    let right_delta: Vec<NCPoly> = {
        let inner = shift_images(&enc2, &enc3, 1);
        let delta_in_23: Vec<NCPoly> =
            hopf.delta_images().iter().map(|d| d.substitute_to(enc3.alphabet(), &inner, Direction::Homomorphism).expect("images")).collect();
        (0..enc2.alphabet().len() as Letter)
            .map(|l| {
                let (slot, g) = enc2.untag(l);
                if slot == 0 {
                    NCPoly::generator(enc3.alphabet(), enc3.tagged(0, g))
                } else {
                    delta_in_23[g as usize].clone()
                }
            })
            .collect()
    };
    let counit_left: Vec<NCPoly> = (0..enc2.alphabet().len() as Letter)
        .map(|l| match enc2.untag(l) {
            (0, g) => NCPoly::constant(&base, hopf.counit_images()[g as usize].clone()),
            (_, g) => NCPoly::generator(&base, g),
        })
        .collect();
    let counit_right: Vec<NCPoly> = (0..enc2.alphabet().len() as Letter)
        .map(|l| match enc2.untag(l) {
            (0, g) => NCPoly::generator(&base, g),
            (_, g) => NCPoly::constant(&base, hopf.counit_images()[g as usize].clone()),
        })
        .collect();

    for g in 0..base.len() as Letter {
        let name = base.name(g).to_string();
        let x = NCPoly::generator(&base, g);
        let d = hopf.delta(&x);
        let a = d.substitute_to(enc3.alphabet(), &left_delta, Direction::Homomorphism).expect("images");
        let b = d.substitute_to(enc3.alphabet(), &right_delta, Direction::Homomorphism).expect("images");
        r.check_zero(format!("coassociativity: {name}"), &(&a - &b), &sys3);
        let el = d.substitute_to(&base, &counit_left, Direction::Homomorphism).expect("images");
        let er = d.substitute_to(&base, &counit_right, Direction::Homomorphism).expect("images");
        r.check_zero(format!("left counit: {name}"), &(&el - &x), &sys);
        r.check_zero(format!("right counit: {name}"), &(&er - &x), &sys);
        if hopf.is_hopf() {
            let unit = NCPoly::constant(&base, hopf.counit_images()[g as usize].clone());
            let sl = multiply_with_antipode(hopf, &d, true);
            let sr = multiply_with_antipode(hopf, &d, false);
            r.check_zero(format!("left antipode: {name}"), &(&sl - &unit), &sys);
            r.check_zero(format!("right antipode: {name}"), &(&sr - &unit), &sys);
            let s2 = hopf.antipode(&hopf.antipode(&x).expect("antipode")).expect("antipode");
            r.check_zero(format!("S^2 fixes {name}"), &(&s2 - &x), &sys);
        }
    }
    if !hopf.is_hopf() {
        r.note("no antipode: only the bialgebra axioms are checked");
    }
    Ok(r)
}

/// `Σ_{k,l} u_ik ⊗ u_kl ⊗ u_lj`, the expected value of both iterated
/// coproducts of `u_ij`.
pub fn iterated_coproduct(n: usize, i: usize, j: usize) -> NCPoly {
    let base = Alphabet::matrix("u", n);
    let enc3 = TensorEncoding::new(&base, 3);
    let u = |a: usize, b: usize| NCPoly::monomial(&base, Word::letter((a * n + b) as Letter), Rational::from_int(1));
    let mut out = NCPoly::zero(enc3.alphabet());
    for k in 0..n {
        for l in 0..n {
            out = &out + &enc3.pure_tensor(&[u(i, k), u(k, l), u(l, j)]);
        }
    }
    out
}
