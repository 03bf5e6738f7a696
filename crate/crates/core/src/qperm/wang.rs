use std::sync::Arc;

use super::matrix::{check_magic, MatrixOverAlgebra};
use super::presentation::magic_presentation;
use super::QpermError;
use crate::ncalg::{Alphabet, Direction, MonomialOrder, NCPoly};
use crate::report::CertificateReport;
use crate::rewrite::RewriteSystem;

/// `T = ⟨p, q | p² = p, q² = q⟩`, the free product of two copies of `K²`,
/// with its confluent system.
pub fn two_idempotents() -> RewriteSystem {
    let a = Alphabet::new(["p", "q"]).expect("valid names");
    let rels = ["p.p - p", "q.q - q"].map(|t| NCPoly::parse(&a, t).expect("valid relation"));
    let raw = RewriteSystem::from_relations(&a, MonomialOrder::DegLex, &rels).expect("same alphabet");
    raw.complete(4).expect("cap above rule degree").system
}

/// `diag([[p, 1−p], [1−p, p]], [[q, 1−q], [1−q, q]], I_{n−4})` over `T`.
pub fn wang_matrix(n: usize, t: &RewriteSystem) -> Result<MatrixOverAlgebra, QpermError> {
    if n < 4 {
        return Err(QpermError::InvalidArgument(format!("the block matrix needs n >= 4, got {n}")));
    }
    let a: &Arc<Alphabet> = t.alphabet();
    let one = NCPoly::one(a);
    let p = NCPoly::var(a, "p").map_err(|e| QpermError::InvalidArgument(e.to_string()))?;
    let q = NCPoly::var(a, "q").map_err(|e| QpermError::InvalidArgument(e.to_string()))?;
    let mut entries = vec![vec![NCPoly::zero(a); n]; n];
    for (offset, e) in [(0, &p), (2, &q)] {
        let c = &one - e;
        entries[offset][offset] = e.clone();
        entries[offset + 1][offset + 1] = e.clone();
        entries[offset][offset + 1] = c.clone();
        entries[offset + 1][offset] = c;
    }
    for (i, row) in entries.iter_mut().enumerate().skip(4) {
        row[i] = one.clone();
    }
    MatrixOverAlgebra::new(entries, t)
}

/// Certificate that `A_s(n, K)`, `n ≥ 4`, is noncommutative and
/// infinite-dimensional: `u_ij ↦ W_ij` is an algebra map onto `T` (since `W`
/// is magic), `[u11, u33]` maps to `pq − qp ≠ 0`, and the filtration of `T`
/// grows as `2d + 1`.
pub fn wang_witness(n: usize, depth: usize) -> Result<CertificateReport, QpermError> {
    let t = two_idempotents();
    let w = wang_matrix(n, &t)?;
    let mut r = CertificateReport::new(format!("A_s({n}, K) is noncommutative and infinite-dimensional"));
    r.absorb("W magic: ", check_magic(&w));

    let hopf = magic_presentation(n);
    let images: Vec<NCPoly> = w.entries().iter().flatten().cloned().collect();
    let comm = NCPoly::parse(hopf.alphabet(), "u11.u33 - u33.u11").expect("valid");
    let image = comm.substitute_to(t.alphabet(), &images, Direction::Homomorphism).expect("images cover u");
    let expected = NCPoly::parse(t.alphabet(), "p.q - q.p").expect("valid");
    r.fact("image of [u11, u33]", image == expected, format!("{image}"));
    r.check_nonzero("[p, q] nonzero in T", &image, &t);
    let u12 = NCPoly::parse(hopf.alphabet(), "u12").expect("valid");
    let c = u12.substitute_to(t.alphabet(), &images, Direction::Homomorphism).expect("images cover u");
    r.check_zero("image of u12 is idempotent", &(&(&c * &c) - &c), &t);

    let dims = t.filtration_dimension(depth)?;
    let formula: Vec<usize> = (0..=depth).map(|d| 2 * d + 1).collect();
    r.fact("filtration of T", dims == formula, format!("{dims:?}"));
    r.fact("strictly increasing", dims.windows(2).all(|w| w[0] < w[1]), "dimension grows at every degree");
    r.set_data("n", n);
    r.set_data("depth", depth);
    r.set_data("filtration", &dims);
    r.set_data("commutator_image", image.to_string());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Alternating words in two letters of length ≤ d, counted directly.
    fn alternating_words(d: usize) -> usize {
        (0..=d).map(|l| if l == 0 { 1 } else { 2 }).sum()
    }

    #[test]
    fn witness_n4_n5() {
        for n in [4, 5, 6] {
            let r = wang_witness(n, 10).unwrap();
            assert!(r.is_verified(), "{r}");
            let dims: Vec<usize> = serde_json::from_value(r.data["filtration"].clone()).unwrap();
            assert_eq!(dims, (0..=10).map(alternating_words).collect::<Vec<_>>());
            assert_eq!(dims.last(), Some(&21));
        }
        assert!(wang_witness(3, 5).is_err());
    }

    #[test]
    fn target_is_confluent_with_input_rules() {
        let t = two_idempotents();
        assert!(t.is_confluent());
        assert_eq!(t.rules().len(), 2);
    }
}
