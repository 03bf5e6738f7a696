use super::matrix::MatrixOverAlgebra;
use super::presentation::magic_presentation;
use super::wang::{two_idempotents, wang_matrix};
use super::QpermError;
use crate::exactnum::linalg::rank;
use crate::exactnum::{Rational, Scalar};
use crate::groups::{e_sigma_product_check, factorial, FunctionOnSn};
use crate::ncalg::{Direction, NCPoly};
use crate::report::CertificateReport;

/// Image of `p` under `u_ij ↦ p_ij`, `p_ij(σ) = δ_{i, σ(j)}`. The alphabet
/// of `p` must be `u11 … unn`.
pub fn pi_n(p: &NCPoly, n: usize) -> Result<FunctionOnSn, QpermError> {
    if p.alphabet().len() != n * n {
        return Err(QpermError::InvalidArgument(format!("polynomial is not over the {n}x{n} generator alphabet")));
    }
    Ok(FunctionOnSn::from_fn(n, |sigma| {
        let mut total = Rational::from_int(0);
        for (w, c) in p.terms() {
            let hit = w.letters().iter().all(|&l| {
                let (i, j) = (l as usize / n, l as usize % n);
                sigma.apply(j) == i
            });
            if hit {
                total = total.add(c);
            }
        }
        total
    }))
}

/// Every defining relation of `A_s(n, K)` maps to the zero function.
pub fn pi_n_relations_check(n: usize) -> Result<CertificateReport, QpermError> {
    let hopf = magic_presentation(n);
    let mut r = CertificateReport::new(format!("pi_{n} kills every defining relation"));
    let mut bad = Vec::new();
    for rel in hopf.relations() {
        if !pi_n(&rel.poly, n)?.is_zero() {
            bad.push(rel.label.clone());
        }
    }
    r.fact("relations", bad.is_empty(), format!("{} relations, {} with nonzero image {:?}", hopf.relations().len(), bad.len(), bad));
    Ok(r)
}

/// `π_n : A_s(n, K) → K(S_n)` is onto, and an isomorphism exactly when
/// `n ≤ 3`.
///
/// - surjectivity: `e_σ = p_{σ(1)1} ⋯ p_{σ(n)n}` for every `σ`;
/// - `n ≤ 3`: the completed presentation has `n!` basis words whose
///   evaluation matrix against `S_n` has rank `n!`, and all generator
///   commutators vanish;
/// - `n = 4`: `u11·u33 − u33·u11` has zero image but nonzero image in the
///   two-idempotent algebra, so it is a nonzero kernel element.
pub fn pi_n_isomorphism_check(n: usize, cap: usize) -> Result<CertificateReport, QpermError> {
    if n == 0 {
        return Err(QpermError::InvalidArgument("n must be positive".into()));
    }
    let mut r = CertificateReport::new(format!("pi_{n}: A_s({n}, K) -> K(S_{n}) is onto{}", if n <= 3 { " and injective" } else { "" }));
    r.absorb("onto: ", e_sigma_product_check(n));
    r.absorb("", pi_n_relations_check(n)?);
    r.set_data("n", n);
    if n <= 3 {
        let hopf = magic_presentation(n);
        let sys = hopf.complete(cap)?;
        r.set_data("status", sys.status());
        match sys.finite_basis(cap) {
            Some(basis) if sys.is_confluent() => {
                r.fact("basis size", basis.len() == factorial(n), format!("{} words, n! = {}", basis.len(), factorial(n)));
                let rows: Vec<Vec<Rational>> = basis
                    .iter()
                    .map(|w| {
                        let p = NCPoly::monomial(hopf.alphabet(), w.clone(), Rational::from_int(1));
                        pi_n(&p, n).map(|f| f.values().to_vec())
                    })
                    .collect::<Result<_, _>>()?;
                let rk = rank(&rows);
                r.fact("evaluation rank", rk == factorial(n), format!("rank {rk} of {}x{}", rows.len(), factorial(n)));
                r.set_data("basis_size", basis.len());
                r.set_data("evaluation_rank", rk);
                let names: Vec<String> = basis
                    .iter()
                    .map(|w| NCPoly::monomial(hopf.alphabet(), w.clone(), Rational::from_int(1)).to_string())
                    .collect();
                r.set_data("basis", names);
            }
            _ => {
                r.note("completion did not certify a finite basis at this cap; basis count is conditional");
                r.fact("basis size", false, "no finite confluent basis found");
            }
        }
        let u = MatrixOverAlgebra::generating(&hopf, &sys)?;
        let gens: Vec<&NCPoly> = u.entries().iter().flatten().collect();
        for (a, x) in gens.iter().enumerate() {
            for y in &gens[a + 1..] {
                let c = &(*x * *y) - &(*y * *x);
                r.check_zero(format!("[{x}, {y}]"), &c, &sys);
            }
        }
    } else if n == 4 {
        let hopf = magic_presentation(4);
        let witness = NCPoly::parse(hopf.alphabet(), "u11.u33 - u33.u11").expect("valid");
        let img = pi_n(&witness, 4)?;
        r.fact("kernel witness has zero image", img.is_zero(), format!("pi_4({witness}) = 0"));
        let t = two_idempotents();
        let w = wang_matrix(4, &t)?;
        let images: Vec<NCPoly> = w.entries().iter().flatten().cloned().collect();
        let wimg = witness.substitute_to(t.alphabet(), &images, Direction::Homomorphism).expect("images cover u");
        r.check_nonzero("kernel witness has nonzero image in T", &wimg, &t);
        r.set_data("kernel_witness", witness.to_string());
        r.set_data("wang_image", wimg.to_string());
        if let Ok(sys) = hopf.complete(cap) {
            let direct = sys.reduce(&witness);
            r.set_data("direct_normal_form", direct.normal_form.to_string());
            r.set_data("direct_status", sys.status());
        }
    } else {
        r.note("n >= 5: only the surjectivity and relation legs are run");
    }
    Ok(r)
}
