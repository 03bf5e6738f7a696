use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::QpermError;
use crate::exactnum::{Rational, Scalar};
use crate::ncalg::{Alphabet, Direction, MonomialOrder, NCPoly, TensorEncoding};
use crate::rewrite::{RewriteError, RewriteSystem};

/// The four relation families on the entries of a matrix `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `x_ki x_kj = δ_ij x_ki`
    RowOrth,
    /// `Σ_k x_ik = 1`
    RowSum,
    /// `x_ik x_jk = δ_ij x_ik`
    ColOrth,
    /// `Σ_k x_ki = 1`
    ColSum,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::RowOrth, Family::RowSum, Family::ColOrth, Family::ColSum];
    pub const SEMI_MAGIC: [Family; 2] = [Family::RowOrth, Family::RowSum];

    pub fn name(self) -> &'static str {
        match self {
            Family::RowOrth => "row-orth",
            Family::RowSum => "row-sum",
            Family::ColOrth => "col-orth",
            Family::ColSum => "col-sum",
        }
    }

    /// Every instance of the family for the matrix `x`, labelled.
    pub fn instances<C: Scalar>(self, x: &[Vec<NCPoly<C>>], alphabet: &Arc<Alphabet>) -> Vec<LabelledRelation<C>> {
        let n = x.len();
        let mut out = Vec::new();
        let one = NCPoly::one(alphabet);
        match self {
            Family::RowOrth | Family::ColOrth => {
                for k in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            let (a, b) = match self {
                                Family::RowOrth => (&x[k][i], &x[k][j]),
                                _ => (&x[i][k], &x[j][k]),
                            };
                            let mut p = a * b;
                            if i == j {
                                p = &p - a;
                            }
                            let label = format!("{}[{},{},{}]", self.name(), k + 1, i + 1, j + 1);
                            out.push(LabelledRelation { label, family: Some(self), poly: p });
                        }
                    }
                }
            }
            Family::RowSum | Family::ColSum => {
                for i in 0..n {
                    let mut p = -&one;
                    for k in 0..n {
                        let e = if self == Family::RowSum { &x[i][k] } else { &x[k][i] };
                        p = &p + e;
                    }
                    let label = format!("{}[{}]", self.name(), i + 1);
                    out.push(LabelledRelation { label, family: Some(self), poly: p });
                }
            }
        }
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = QpermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| QpermError::UnknownFamily(s.trim().to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct LabelledRelation<C: Scalar = Rational> {
    pub label: String,
    pub family: Option<Family>,
    pub poly: NCPoly<C>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationKind {
    Magic,
    SemiMagic,
    GroupAlgebraZ2,
    GroundField,
}

/// A finitely presented bialgebra or Hopf algebra: relations plus the
/// images of the generators under `Δ`, `ε` and (optionally) `S`.
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    pub kind: PresentationKind,
    /// Matrix size for the magic and semi-magic kinds.
    pub n: usize,
    alphabet: Arc<Alphabet>,
    relations: Vec<LabelledRelation>,
    raw: RewriteSystem,
    tensor2: TensorEncoding,
    delta_images: Vec<NCPoly>,
    counit_images: Vec<Rational>,
    antipode_images: Option<Vec<NCPoly>>,
}

fn matrix_presentation(n: usize, families: &[Family], kind: PresentationKind) -> HopfPresentation {
    assert!(n >= 1, "matrix size must be positive");
    let alphabet = Alphabet::matrix("u", n);
    let u = generating_entries(&alphabet, n);
    let relations: Vec<LabelledRelation> = families.iter().flat_map(|f| f.instances(&u, &alphabet)).collect();
    let tensor2 = TensorEncoding::new(&alphabet, 2);
    let mut delta_images = Vec::with_capacity(n * n);
    let mut counit_images = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut d = NCPoly::zero(tensor2.alphabet());
            for k in 0..n {
                d = &d + &tensor2.pure_tensor(&[u[i][k].clone(), u[k][j].clone()]);
            }
            delta_images.push(d);
            counit_images.push(Rational::from_int(i64::from(i == j)));
        }
    }
    let antipode_images = (kind == PresentationKind::Magic)
        .then(|| (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| u[j][i].clone()).collect());
    let polys: Vec<NCPoly> = relations.iter().map(|r| r.poly.clone()).collect();
    let raw = RewriteSystem::from_relations(&alphabet, MonomialOrder::DegLex, &polys).expect("same alphabet");
    HopfPresentation { kind, n, alphabet, relations, raw, tensor2, delta_images, counit_images, antipode_images }
}

/// Entries `u_ij` of the generating matrix as polynomials.
pub(crate) fn generating_entries(alphabet: &Arc<Alphabet>, n: usize) -> Vec<Vec<NCPoly>> {
    (0..n)
        .map(|i| (0..n).map(|j| NCPoly::generator(alphabet, (i * n + j) as u16)).collect())
        .collect()
}

/// `A_s(n, K)`: generators `u_ij` subject to all four families, with
/// `Δ(u_ij) = Σ_k u_ik ⊗ u_kj`, `ε(u_ij) = δ_ij`, `S(u_ij) = u_ji`.
pub fn magic_presentation(n: usize) -> HopfPresentation {
    matrix_presentation(n, &Family::ALL, PresentationKind::Magic)
}

/// The universal bialgebra of a semi-magic matrix: row families only and
/// no antipode.
pub fn semi_magic_presentation(n: usize) -> HopfPresentation {
    matrix_presentation(n, &Family::SEMI_MAGIC, PresentationKind::SemiMagic)
}

/// `K[Z_2] = ⟨g | g² = 1⟩` with `g` grouplike.
pub fn group_algebra_z2() -> HopfPresentation {
    let alphabet = Alphabet::new(["g"]).expect("valid name");
    let g = NCPoly::generator(&alphabet, 0);
    let rel = &(&g * &g) - &NCPoly::one(&alphabet);
    let relations = vec![LabelledRelation { label: "g.g = 1".into(), family: None, poly: rel.clone() }];
    let tensor2 = TensorEncoding::new(&alphabet, 2);
    let delta = tensor2.pure_tensor(&[g.clone(), g.clone()]);
    let raw = RewriteSystem::from_relations(&alphabet, MonomialOrder::DegLex, &[rel]).expect("same alphabet");
    HopfPresentation {
        kind: PresentationKind::GroupAlgebraZ2,
        n: 0,
        alphabet,
        relations,
        raw,
        tensor2,
        delta_images: vec![delta],
        counit_images: vec![Rational::from_int(1)],
        antipode_images: Some(vec![g]),
    }
}

/// The ground field `K` as the Hopf algebra with no generators.
pub fn ground_field() -> HopfPresentation {
    let alphabet = Alphabet::empty();
    let tensor2 = TensorEncoding::new(&alphabet, 2);
    HopfPresentation {
        kind: PresentationKind::GroundField,
        n: 0,
        raw: RewriteSystem::free(&alphabet, MonomialOrder::DegLex),
        alphabet,
        relations: Vec::new(),
        tensor2,
        delta_images: Vec::new(),
        counit_images: Vec::new(),
        antipode_images: Some(Vec::new()),
    }
}

impl HopfPresentation {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn relations(&self) -> &[LabelledRelation] {
        &self.relations
    }

    /// Oriented, inter-reduced relations before completion.
    pub fn raw_system(&self) -> &RewriteSystem {
        &self.raw
    }

    pub fn complete(&self, cap: usize) -> Result<RewriteSystem, RewriteError> {
        Ok(self.raw.complete(cap)?.system)
    }

    pub fn tensor2(&self) -> &TensorEncoding {
        &self.tensor2
    }

    pub fn delta_images(&self) -> &[NCPoly] {
        &self.delta_images
    }

    pub fn counit_images(&self) -> &[Rational] {
        &self.counit_images
    }

    pub fn antipode_images(&self) -> Option<&[NCPoly]> {
        self.antipode_images.as_deref()
    }

    pub fn is_hopf(&self) -> bool {
        self.antipode_images.is_some()
    }

    /// The generating matrix `(u_ij)` for the matrix kinds.
    pub fn generating_entries(&self) -> Option<Vec<Vec<NCPoly>>> {
        matches!(self.kind, PresentationKind::Magic | PresentationKind::SemiMagic)
            .then(|| generating_entries(&self.alphabet, self.n))
    }

    pub fn delta(&self, p: &NCPoly) -> NCPoly {
        p.substitute_to(self.tensor2.alphabet(), &self.delta_images, Direction::Homomorphism)
            .expect("images cover the alphabet")
    }

    pub fn counit(&self, p: &NCPoly) -> Rational {
        let empty = Alphabet::empty();
        let images: Vec<NCPoly> = self.counit_images.iter().map(|c| NCPoly::constant(&empty, c.clone())).collect();
        p.substitute_to(&empty, &images, Direction::Homomorphism)
            .expect("images cover the alphabet")
            .as_constant()
            .expect("constant images give a constant")
    }

    pub fn antipode(&self, p: &NCPoly) -> Option<NCPoly> {
        let images = self.antipode_images.as_ref()?;
        Some(p.substitute_to(&self.alphabet, images, Direction::Antihomomorphism).expect("images cover the alphabet"))
    }

    /// Per-family instance counts and the number of distinct relation
    /// polynomials.
    pub fn relation_counts(&self) -> RelationCounts {
        let mut per_family = Vec::new();
        for f in Family::ALL {
            let c = self.relations.iter().filter(|r| r.family == Some(f)).count();
            if c > 0 {
                per_family.push((f, c));
            }
        }
        let mut distinct: Vec<&NCPoly> = Vec::new();
        for r in &self.relations {
            if !r.poly.is_zero() && !distinct.contains(&&r.poly) {
                distinct.push(&r.poly);
            }
        }
        RelationCounts {
            generators: self.alphabet.len(),
            per_family,
            instances: self.relations.len(),
            distinct: distinct.len(),
            rules_after_inter_reduction: self.raw.rules().len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCounts {
    pub generators: usize,
    pub per_family: Vec<(Family, usize)>,
    pub instances: usize,
    pub distinct: usize,
    pub rules_after_inter_reduction: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        for h in [magic_presentation(1), semi_magic_presentation(1)] {
            let sys = h.complete(4).unwrap();
            let u = NCPoly::var(h.alphabet(), "u11").unwrap();
            assert!(sys.reduces_to_zero(&(&u - &NCPoly::one(h.alphabet()))));
            assert_eq!(sys.finite_basis(4).unwrap().len(), 1);
        }
    }

    #[test]
    fn relation_counts_n4() {
        let c = magic_presentation(4).relation_counts();
        assert_eq!(c.generators, 16);
        assert_eq!(
            c.per_family,
            vec![(Family::RowOrth, 64), (Family::RowSum, 4), (Family::ColOrth, 64), (Family::ColSum, 4)]
        );
        assert_eq!(c.instances, 136);
        // Diagonal instances x_ki x_ki − x_ki coincide in both orthogonality
        // families: 136 − 16 = 120 distinct polynomials.
        assert_eq!(c.distinct, 120);
    }

    #[test]
    fn semi_magic_keeps_columns_free() {
        let h = semi_magic_presentation(2);
        let sys = h.complete(8).unwrap();
        let w = NCPoly::parse(h.alphabet(), "u11.u21").unwrap();
        assert_eq!(sys.normal_form(&w), w);
        assert!(h.antipode_images().is_none());
        assert!(sys.rules().iter().all(|r| r.degree() <= 2));
    }

    #[test]
    fn structure_map_examples() {
        let h = magic_presentation(2);
        let u11 = NCPoly::var(h.alphabet(), "u11").unwrap();
        assert_eq!(h.delta(&u11).to_string(), "1*u12@1.u21@2 + 1*u11@1.u11@2");
        let u12 = NCPoly::var(h.alphabet(), "u12").unwrap();
        assert_eq!(h.antipode(&u12).unwrap().to_string(), "1*u21");
        let w = NCPoly::parse(h.alphabet(), "u11.u12").unwrap();
        assert_eq!(h.antipode(&w).unwrap().to_string(), "1*u21.u11");
        assert_eq!(h.counit(&u11), Rational::from_int(1));
        assert_eq!(h.counit(&u12), Rational::from_int(0));
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("2.1".parse::<Family>().is_err());
    }
}
