use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_integer::Integer;

use super::perm::Permutation;
use super::GroupError;
use crate::exactnum::Cyclotomic;

/// `Z_{d_1} × ⋯ × Z_{d_r}` with `d_1 | d_2 | ⋯ | d_r`, every `d_i ≥ 2`.
/// The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

/// Exponent vector `(a_1, …, a_r)` with `0 ≤ a_i < d_i`.
pub type GroupElement = Vec<u64>;

fn prime_powers(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(m: u64) -> Self {
        Self::from_cyclic_orders(&[m]).expect("positive order")
    }

    /// Canonical form of `Z_{m_1} × ⋯ × Z_{m_k}` for arbitrary orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self, GroupError> {
        if orders.contains(&0) {
            return Err(GroupError::Descriptor("cyclic factor of order 0".into()));
        }
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &m in orders {
            for (p, e) in prime_powers(m) {
                by_prime.entry(p).or_default().push(p.pow(e));
            }
        }
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            let offset = rank - powers.len();
            for (k, q) in powers.iter().enumerate() {
                factors[offset + k] *= q;
            }
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Least common multiple of element orders; `1` for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn identity(&self) -> GroupElement {
        vec![0; self.rank()]
    }

    /// All elements, lexicographic in their exponent vectors.
    pub fn elements(&self) -> Vec<GroupElement> {
        if self.factors.is_empty() {
            return vec![Vec::new()];
        }
        self.factors.iter().map(|&d| 0..d).multi_cartesian_product().collect()
    }

    /// Position of `g` in [`elements`](Self::elements).
    pub fn index_of(&self, g: &[u64]) -> usize {
        g.iter().zip(&self.factors).fold(0u64, |acc, (&a, &d)| acc * d + a) as usize
    }

    pub fn add(&self, g: &[u64], h: &[u64]) -> GroupElement {
        g.iter().zip(h).zip(&self.factors).map(|((a, b), d)| (a + b) % d).collect()
    }

    pub fn neg(&self, g: &[u64]) -> GroupElement {
        g.iter().zip(&self.factors).map(|(a, d)| (d - a) % d).collect()
    }

    pub fn element_order(&self, g: &[u64]) -> u64 {
        g.iter().zip(&self.factors).map(|(&a, &d)| d / a.gcd(&d)).fold(1, |x, y| x.lcm(&y))
    }

    /// `χ_c(g) = Π ζ_{d_i}^{c_i a_i}`, in `Q(ζ_exponent)`.
    pub fn character_value(&self, c: &[u64], g: &[u64]) -> Cyclotomic {
        let e = self.exponent();
        let k: u64 = c.iter().zip(g).zip(&self.factors).map(|((&ci, &ai), &d)| (ci * ai % d) * (e / d)).sum();
        Cyclotomic::zeta_pow(e, (k % e) as i64)
    }

    /// Rows indexed by characters `χ_c`, columns by elements, both in
    /// element order (the character `χ_c` is identified with `c`).
    pub fn character_table(&self) -> Vec<Vec<Cyclotomic>> {
        let els = self.elements();
        els.iter().map(|c| els.iter().map(|g| self.character_value(c, g)).collect()).collect()
    }

    /// Translation action on the elements, listed in element order:
    /// `g ↦ (x ↦ g + x)`.
    pub fn regular_embedding(&self) -> Vec<Permutation> {
        let els = self.elements();
        els.iter()
            .map(|g| Permutation::new(els.iter().map(|x| self.index_of(&self.add(g, x))).collect()).expect("translation is bijective"))
            .collect()
    }

    /// Generators of the regular embedding: one unit vector per factor.
    pub fn regular_generators(&self) -> Vec<Permutation> {
        let all = self.regular_embedding();
        (0..self.rank())
            .map(|i| {
                let mut e = self.identity();
                e[i] = 1;
                all[self.index_of(&e)].clone()
            })
            .collect()
    }

    pub fn format_element(&self, g: &[u64]) -> String {
        format!("({})", g.iter().join(", "))
    }
}

/// One representative per isomorphism class, ordered by rank then factors:
/// for 8 this is `Z8, Z2xZ4, Z2xZ2xZ2`.
pub fn abelian_groups_of_order(n: u64) -> Vec<FiniteAbelianGroup> {
    assert!(n >= 1, "group order must be positive");
    let per_prime: Vec<Vec<Vec<u64>>> = prime_powers(n)
        .into_iter()
        .map(|(p, e)| partitions(e, e).into_iter().map(|part| part.into_iter().map(|k| p.pow(k)).collect()).collect())
        .collect();
    if per_prime.is_empty() {
        return vec![FiniteAbelianGroup::trivial()];
    }
    let mut out: Vec<FiniteAbelianGroup> = per_prime
        .into_iter()
        .multi_cartesian_product()
        .map(|choice| FiniteAbelianGroup::from_cyclic_orders(&choice.concat()).expect("positive orders"))
        .collect();
    out.sort_by_key(|g| (g.rank(), Reverse(g.factors.iter().rev().copied().collect_vec())));
    out
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("Z1");
        }
        write!(f, "{}", self.factors.iter().map(|d| format!("Z{d}")).join("x"))
    }
}

impl FromStr for FiniteAbelianGroup {
    type Err = GroupError;

    /// `Z4xZ2`, `Z2×Z2`, `Z1`; factors in any order.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::Descriptor(s.to_string());
        let orders: Vec<u64> = s
            .split(['x', '×', '*'])
            .map(|t| t.trim().strip_prefix('Z').ok_or_else(bad)?.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if orders.is_empty() || orders.contains(&0) {
            return Err(bad());
        }
        Self::from_cyclic_orders(&orders)
    }
}

impl serde::Serialize for FiniteAbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Scalar;

    fn names(n: u64) -> Vec<String> {
        abelian_groups_of_order(n).iter().map(ToString::to_string).collect()
    }

    #[test]
    fn classification_lists() {
        assert_eq!(names(1), ["Z1"]);
        assert_eq!(names(4), ["Z4", "Z2xZ2"]);
        assert_eq!(names(6), ["Z6"]);
        assert_eq!(names(8), ["Z8", "Z2xZ4", "Z2xZ2xZ2"]);
        assert_eq!(names(12), ["Z12", "Z2xZ6"]);
        assert_eq!(names(16).len(), 5);
    }

    #[test]
    fn descriptors_canonicalize() {
        let g: FiniteAbelianGroup = "Z4xZ2".parse().unwrap();
        assert_eq!(g.to_string(), "Z2xZ4");
        assert_eq!("Z2xZ3".parse::<FiniteAbelianGroup>().unwrap().to_string(), "Z6");
        assert_eq!("Z1".parse::<FiniteAbelianGroup>().unwrap(), FiniteAbelianGroup::trivial());
        assert!("Z0".parse::<FiniteAbelianGroup>().is_err());
        assert!("Q8".parse::<FiniteAbelianGroup>().is_err());
    }

    #[test]
    fn regular_embeddings() {
        let z2 = FiniteAbelianGroup::cyclic(2);
        let e: Vec<String> = z2.regular_embedding().iter().map(ToString::to_string).collect();
        assert_eq!(e, ["()", "(1 2)"]);
        let klein: FiniteAbelianGroup = "Z2xZ2".parse().unwrap();
        let e: Vec<String> = klein.regular_embedding().iter().map(ToString::to_string).collect();
        assert_eq!(e, ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]);
        let z4 = FiniteAbelianGroup::cyclic(4);
        assert_eq!(z4.regular_generators()[0].to_string(), "(1 2 3 4)");
    }

    #[test]
    fn small_character_tables() {
        let t = FiniteAbelianGroup::cyclic(2).character_table();
        let as_ints: Vec<Vec<String>> = t.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        assert_eq!(as_ints, [["1", "1"], ["1", "-1"]]);
        let t3 = FiniteAbelianGroup::cyclic(3).character_table();
        assert_eq!(t3[1][1], Cyclotomic::zeta(3));
        assert_eq!(t3[2][1], Cyclotomic::zeta_pow(3, 2));
    }

    /// Independent orthogonality check: Σ_g χ(g) ψ(g)^{-1} = |G| δ.
    #[test]
    fn orthogonality_up_to_twelve() {
        for n in 1..=12 {
            for g in abelian_groups_of_order(n) {
                let t = g.character_table();
                let size = t.len();
                for a in 0..size {
                    for b in 0..size {
                        let s = (0..size).fold(Cyclotomic::from_int(0), |acc, k| acc.add(&t[a][k].mul(&t[b][k].inv().unwrap())));
                        let expect = if a == b { Cyclotomic::from_int(n as i64) } else { Cyclotomic::from_int(0) };
                        assert_eq!(s, expect, "{g} rows {a},{b}");
                    }
                }
            }
        }
    }
}
