use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use super::GradingError;
use crate::groups::{FiniteAbelianGroup, GroupElement};

/// A reduced word in a free product: letters `(factor, element)` with no
/// identity letters and no two adjacent letters from the same factor. The
/// empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(Vec<(usize, GroupElement)>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[(usize, GroupElement)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `G_1 * ⋯ * G_k` with the block of coordinates each factor acts on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeProductPresentation {
    pub factors: Vec<FiniteAbelianGroup>,
    /// 0-based coordinates; may be empty when not recorded.
    pub blocks: Vec<Vec<usize>>,
}

impl FreeProductPresentation {
    pub fn single(group: FiniteAbelianGroup, n: usize) -> Self {
        FreeProductPresentation { factors: vec![group], blocks: vec![(0..n).collect()] }
    }

    pub fn trivial() -> Self {
        FreeProductPresentation { factors: Vec::new(), blocks: Vec::new() }
    }

    /// Abelian exactly when at most one factor is nontrivial.
    pub fn is_abelian(&self) -> bool {
        self.factors.iter().filter(|g| g.order() > 1).count() <= 1
    }

    pub fn letter(&self, factor: usize, g: GroupElement) -> FreeWord {
        if g.iter().all(|&a| a == 0) {
            FreeWord::identity()
        } else {
            FreeWord(vec![(factor, g)])
        }
    }

    fn push(&self, out: &mut Vec<(usize, GroupElement)>, (f, g): (usize, GroupElement)) {
        if let Some((lf, lg)) = out.last() {
            if *lf == f {
                let s = self.factors[f].add(lg, &g);
                out.pop();
                if s.iter().any(|&a| a != 0) {
                    out.push((f, s));
                }
                return;
            }
        }
        out.push((f, g));
    }

    pub fn multiply(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut out = a.0.clone();
        for l in &b.0 {
            self.push(&mut out, l.clone());
        }
        FreeWord(out)
    }

    pub fn inverse(&self, a: &FreeWord) -> FreeWord {
        FreeWord(a.0.iter().rev().map(|(f, g)| (*f, self.factors[*f].neg(g))).collect())
    }

    /// `None` for elements of infinite order. An element has finite order
    /// exactly when it is conjugate to a single letter.
    pub fn element_order(&self, a: &FreeWord) -> Option<u64> {
        let mut w = a.0.clone();
        loop {
            match w.len() {
                0 => return Some(1),
                1 => return Some(self.factors[w[0].0].element_order(&w[0].1)),
                _ => {}
            }
            let (ff, fg) = w[0].clone();
            let (lf, lg) = w[w.len() - 1].clone();
            if ff == lf {
                let s = self.factors[ff].add(&lg, &fg);
                w.pop();
                w.remove(0);
                if s.iter().any(|&x| x != 0) {
                    self.push(&mut w, (ff, s));
                }
            } else {
                return None;
            }
        }
    }

    pub fn commute(&self, a: &FreeWord, b: &FreeWord) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }

    pub fn format(&self, a: &FreeWord) -> String {
        if a.is_identity() {
            return "1".into();
        }
        let single = self.factors.len() == 1;
        a.0.iter()
            .map(|(f, g)| {
                let v = format!("({})", g.iter().join(", "));
                if single {
                    v
                } else {
                    format!("{}@{v}", f + 1)
                }
            })
            .join(".")
    }

    pub fn parse_element(&self, s: &str) -> Result<FreeWord, GradingError> {
        let s = s.trim();
        let bad = |why: &str| GradingError::Parse(format!("element {s:?}: {why}"));
        if s == "1" {
            return Ok(FreeWord::identity());
        }
        let mut out = Vec::new();
        for part in s.split('.') {
            let part = part.trim();
            let (f, vec) = match part.split_once('@') {
                Some((f, v)) => (f.trim().parse::<usize>().map_err(|_| bad("bad factor index"))?.checked_sub(1).ok_or_else(|| bad("factors are 1-based"))?, v),
                None if self.factors.len() == 1 => (0, part),
                None => return Err(bad("factor index required in a free product")),
            };
            let group = self.factors.get(f).ok_or_else(|| bad("factor index out of range"))?;
            let inner = vec.trim().strip_prefix('(').and_then(|v| v.strip_suffix(')')).ok_or_else(|| bad("expected (a, b, ...)"))?;
            let g: Vec<u64> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|t| t.trim().parse::<u64>().map_err(|_| bad("bad exponent"))).collect::<Result<_, _>>()?
            };
            if g.len() != group.rank() || g.iter().zip(group.invariant_factors()).any(|(a, d)| a >= d) {
                return Err(bad("exponent vector does not fit the factor"));
            }
            if g.iter().any(|&a| a != 0) {
                self.push(&mut out, (f, g));
            }
        }
        Ok(FreeWord(out))
    }

    pub fn descriptor(&self) -> String {
        if self.factors.is_empty() {
            return "Z1".into();
        }
        self.factors.iter().map(ToString::to_string).join(" * ")
    }
}

impl fmt::Display for FreeProductPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_z2() -> FreeProductPresentation {
        FreeProductPresentation {
            factors: vec![FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(2)],
            blocks: vec![vec![0, 1, 2], vec![3, 4]],
        }
    }

    #[test]
    fn reduced_words() {
        let g = z3_z2();
        let a = g.letter(0, vec![1]);
        let b = g.letter(1, vec![1]);
        let ab = g.multiply(&a, &b);
        assert_eq!(g.format(&ab), "1@(1).2@(1)");
        assert_eq!(g.element_order(&ab), None);
        assert_eq!(g.element_order(&a), Some(3));
        let conj = g.multiply(&g.multiply(&b, &a), &g.inverse(&b));
        assert_eq!(conj.len(), 3);
        assert_eq!(g.element_order(&conj), Some(3));
        assert!(g.multiply(&ab, &g.inverse(&ab)).is_identity());
        assert!(!g.commute(&a, &b));
        assert!(!g.is_abelian());
        assert_eq!(g.parse_element("1@(1).2@(1)").unwrap(), ab);
        assert_eq!(g.parse_element("1@(1).1@(2)").unwrap(), FreeWord::identity());
        assert!(g.parse_element("(1)").is_err());
        assert!(g.parse_element("2@(2)").is_err());
    }
}
