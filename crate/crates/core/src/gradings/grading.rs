use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use super::freeprod::{FreeProductPresentation, FreeWord};
use super::GradingError;
use crate::exactnum::linalg::{rank, Span};
use crate::exactnum::{Cyclotomic, Scalar};
use crate::groups::FiniteAbelianGroup;
use crate::report::CertificateReport;

pub type Vector = Vec<Cyclotomic>;

/// `K^n = ⊕_g A_g`, each nonzero component given by a basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Grading {
    n: usize,
    group: FreeProductPresentation,
    components: BTreeMap<FreeWord, Vec<Vector>>,
}

/// Pointwise product in `K^n`.
pub fn pointwise(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

fn is_zero_vector(v: &[Cyclotomic]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Character vectors `f_c = Σ_g χ_c(g) e_g` of `G`, indexed like its elements.
pub fn character_vectors(g: &FiniteAbelianGroup) -> Vec<Vector> {
    g.character_table()
}

impl Grading {
    pub fn new(n: usize, group: FreeProductPresentation, components: BTreeMap<FreeWord, Vec<Vector>>) -> Result<Self, GradingError> {
        for vs in components.values() {
            if vs.iter().any(|v| v.len() != n) {
                return Err(GradingError::Shape(format!("component vector length differs from n = {n}")));
            }
        }
        let components = components.into_iter().filter(|(_, vs)| !vs.is_empty()).collect();
        Ok(Grading { n, group, components })
    }

    /// Everything in degree 1.
    pub fn trivial(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| Cyclotomic::from_int(i64::from(i == j))).collect())
            .collect();
        let mut components = BTreeMap::new();
        components.insert(FreeWord::identity(), basis);
        Grading { n, group: FreeProductPresentation::trivial(), components }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &FreeProductPresentation {
        &self.group
    }

    pub fn components(&self) -> &BTreeMap<FreeWord, Vec<Vector>> {
        &self.components
    }

    pub fn component(&self, g: &FreeWord) -> &[Vector] {
        self.components.get(g).map_or(&[], Vec::as_slice)
    }

    pub fn identity_component(&self) -> &[Vector] {
        self.component(&FreeWord::identity())
    }

    pub fn support(&self) -> Vec<&FreeWord> {
        self.components.keys().collect()
    }

    /// Exchanges the labels of two components.
    pub fn swap_labels(&mut self, a: &FreeWord, b: &FreeWord) {
        let va = self.components.remove(a);
        let vb = self.components.remove(b);
        if let Some(v) = va {
            self.components.insert(b.clone(), v);
        }
        if let Some(v) = vb {
            self.components.insert(a.clone(), v);
        }
    }
}

/// The character grading of `K^{|G|}`: component `c` is spanned by
/// `f_c = Σ_g χ_c(g) e_g`.
pub fn grading_from_regular_abelian(g: &FiniteAbelianGroup) -> Grading {
    let n = g.order() as usize;
    let group = FreeProductPresentation::single(g.clone(), n);
    let components = g
        .elements()
        .into_iter()
        .zip(character_vectors(g))
        .map(|(c, f)| (group.letter(0, c), vec![f]))
        .collect();
    Grading { n, group, components }
}

/// Blockwise character gradings on `K^{m_1} ⊕ ⋯ ⊕ K^{m_k}`, graded by the
/// free product `G_1 * ⋯ * G_k`. Blocks are consecutive coordinate ranges
/// of nonincreasing size.
pub fn grading_from_partition(blocks: &[usize], groups: &[FiniteAbelianGroup]) -> Result<Grading, GradingError> {
    if blocks.len() != groups.len() {
        return Err(GradingError::Shape(format!("{} blocks but {} groups", blocks.len(), groups.len())));
    }
    if blocks.contains(&0) || blocks.windows(2).any(|w| w[0] < w[1]) {
        return Err(GradingError::Shape(format!("block sizes must be positive and nonincreasing, got {blocks:?}")));
    }
    for (m, g) in blocks.iter().zip(groups) {
        if g.order() as usize != *m {
            return Err(GradingError::Shape(format!("group {g} has order {} but its block has size {m}", g.order())));
        }
    }
    let n: usize = blocks.iter().sum();
    let mut ranges = Vec::new();
    let mut offset = 0;
    for &m in blocks {
        ranges.push((offset..offset + m).collect::<Vec<_>>());
        offset += m;
    }
    let group = FreeProductPresentation { factors: groups.to_vec(), blocks: ranges.clone() };
    let mut components: BTreeMap<FreeWord, Vec<Vector>> = BTreeMap::new();
    for (i, g) in groups.iter().enumerate() {
        for (c, f) in g.elements().into_iter().zip(character_vectors(g)) {
            let mut v = vec![Cyclotomic::from_int(0); n];
            for (k, &coord) in ranges[i].iter().enumerate() {
                v[coord] = f[k].clone();
            }
            components.entry(group.letter(i, c)).or_default().push(v);
        }
    }
    Ok(Grading { n, group, components })
}

/// A failed grading-law instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub g: String,
    pub h: String,
    pub gh: String,
    pub product: Vec<String>,
}

/// Checks the direct sum, the grading law `A_g A_h ⊂ A_{gh}` (exact span
/// membership), faithfulness, ergodicity, and that every supported element
/// has finite order and that ergodic gradings have abelian groups.
pub fn verify_grading(grading: &Grading) -> CertificateReport {
    let n = grading.n;
    let grp = &grading.group;
    let mut r = CertificateReport::new(format!("{} grading on K^{n}", grp.descriptor()));

    let all: Vec<Vector> = grading.components.values().flatten().cloned().collect();
    let rk = rank(&all);
    r.fact("direct sum", all.len() == n && rk == n, format!("{} basis vectors of rank {rk}, n = {n}", all.len()));

    let ones: Vector = vec![Cyclotomic::from_int(1); n];
    let a1 = Span::new(n, grading.identity_component());
    r.fact("unit in degree 1", a1.contains(&ones), "1 = e_1 + ... + e_n lies in A_1");

    let spans: BTreeMap<&FreeWord, Span<Cyclotomic>> =
        grading.components.iter().map(|(g, vs)| (g, Span::new(n, vs))).collect();
    let mut witness: Option<LawWitness> = None;
    let mut pairs = 0usize;
    'outer: for (g, vg) in &grading.components {
        for (h, vh) in &grading.components {
            let gh = grp.multiply(g, h);
            for a in vg {
                for b in vh {
                    pairs += 1;
                    let p = pointwise(a, b);
                    if is_zero_vector(&p) {
                        continue;
                    }
                    let inside = spans.get(&gh).is_some_and(|s| s.contains(&p));
                    if !inside {
                        witness = Some(LawWitness {
                            g: grp.format(g),
                            h: grp.format(h),
                            gh: grp.format(&gh),
                            product: p.iter().map(ToString::to_string).collect(),
                        });
                        break 'outer;
                    }
                }
            }
        }
    }
    match &witness {
        None => {
            r.fact("grading law", true, format!("{pairs} basis products land in their target components"));
        }
        Some(w) => {
            r.fact(
                format!("grading law (g = {}, h = {})", w.g, w.h),
                false,
                format!("product ({}) is not in A_{}", w.product.join(", "), w.gh),
            );
            r.set_data("witness", w);
        }
    }

    let support: Vec<&FreeWord> = grading.support();
    let letters_only = support.iter().all(|w| w.len() <= 1);
    if letters_only {
        let mut missing = Vec::new();
        for (f, group) in grp.factors.iter().enumerate() {
            let gens: Vec<Vec<u64>> = support.iter().filter_map(|w| w.letters().first()).filter(|(i, _)| *i == f).map(|(_, g)| g.clone()).collect();
            if generated_order(group, &gens) != group.order() {
                missing.push(group.to_string());
            }
        }
        r.fact("faithful", missing.is_empty(), if missing.is_empty() { "support generates the group".to_string() } else { format!("support misses generators of {}", missing.join(", ")) });
    } else {
        r.undecided("faithful", "support contains words of length > 1; generation is decided only for supports of letters");
    }

    let dim1 = grading.identity_component().len();
    let ergodic = dim1 == 1;
    r.set_data("ergodic", ergodic);
    r.set_data("dim_A1", dim1);
    let infinite: Vec<String> = support.iter().filter(|w| grp.element_order(w).is_none()).map(|w| grp.format(w)).collect();
    r.fact("supported elements have finite order", infinite.is_empty(), if infinite.is_empty() { "all finite".to_string() } else { infinite.join(", ") });
    if ergodic {
        let commuting = support.iter().tuple_combinations().all(|(a, b)| grp.commute(a, b));
        r.fact("ergodic grading has abelian group", commuting, "supported elements pairwise commute");
    }
    let orders: Vec<String> = support.iter().map(|w| format!("{}:{}", grp.format(w), grp.element_order(w).map_or("inf".into(), |o| o.to_string()))).collect();
    r.set_data("support", orders);
    r.set_data("group", grp.descriptor());
    r
}

/// Order of the subgroup of `g` generated by `gens`.
fn generated_order(g: &FiniteAbelianGroup, gens: &[Vec<u64>]) -> u64 {
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier = vec![g.identity()];
    seen.insert(g.identity());
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = g.add(&x, s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::abelian_groups_of_order;

    #[test]
    fn z2_components() {
        let gr = grading_from_regular_abelian(&FiniteAbelianGroup::cyclic(2));
        let one = gr.identity_component();
        assert_eq!(one, &[vec![Cyclotomic::from_int(1), Cyclotomic::from_int(1)]]);
        let g = gr.group().letter(0, vec![1]);
        let f = &gr.component(&g)[0];
        assert_eq!(f, &vec![Cyclotomic::from_int(1), Cyclotomic::from_int(-1)]);
        assert_eq!(pointwise(f, f), one[0]);
        let r = verify_grading(&gr);
        assert!(r.is_verified(), "{r}");
    }

    /// f_χ f_ψ = f_{χψ} directly on character vectors.
    #[test]
    fn characters_multiply() {
        for n in 1..=8 {
            for g in abelian_groups_of_order(n) {
                let els = g.elements();
                let fs = character_vectors(&g);
                for (a, fa) in els.iter().zip(&fs) {
                    for (b, fb) in els.iter().zip(&fs) {
                        let ab = g.add(a, b);
                        assert_eq!(pointwise(fa, fb), fs[g.index_of(&ab)], "{g}");
                    }
                }
            }
        }
    }

    #[test]
    fn swapped_labels_are_refuted() {
        let z4 = FiniteAbelianGroup::cyclic(4);
        let mut gr = grading_from_regular_abelian(&z4);
        assert!(verify_grading(&gr).is_verified());
        let (a, b) = (gr.group().letter(0, vec![1]), gr.group().letter(0, vec![2]));
        gr.swap_labels(&a, &b);
        let r = verify_grading(&gr);
        assert_eq!(r.verdict, crate::report::Verdict::RefutedWithWitness);
        assert!(r.data.contains_key("witness"));
    }

    #[test]
    fn trivial_grading() {
        let r = verify_grading(&Grading::trivial(3));
        assert!(r.is_verified(), "{r}");
        assert_eq!(r.data["ergodic"], false);
        assert!(verify_grading(&Grading::trivial(1)).data["ergodic"] == true);
    }

    #[test]
    fn partition_construction() {
        let gr = grading_from_partition(&[3, 2], &[FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(2)]).unwrap();
        let r = verify_grading(&gr);
        assert!(r.is_verified(), "{r}");
        assert_eq!(r.data["dim_A1"], 2);
        assert!(grading_from_partition(&[2, 3], &[FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3)]).is_err());
        assert!(grading_from_partition(&[3], &[FiniteAbelianGroup::cyclic(2)]).is_err());
        let single = grading_from_partition(&[4], &[FiniteAbelianGroup::cyclic(4)]).unwrap();
        assert_eq!(single, grading_from_regular_abelian(&FiniteAbelianGroup::cyclic(4)));
        let ones = grading_from_partition(&[1, 1, 1], &vec![FiniteAbelianGroup::trivial(); 3]).unwrap();
        assert_eq!(ones.identity_component().len(), 3);
        assert!(verify_grading(&ones).is_verified());
    }
}
