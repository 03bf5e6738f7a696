use std::fmt;

use itertools::Itertools;

use super::GroupError;

/// A permutation of `{1, …, n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images `σ(0) … σ(n−1)`.
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::NotAPermutation(images.clone()));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From disjoint cycles written 1-based, e.g. `[[1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(GroupError::NotAPermutation(c.clone()));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_integer::lcm)
    }

    /// Nontrivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                c.push(i);
                i = self.images[i];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Position in the lexicographic listing of `S_n` (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut r = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> Permutation {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        Permutation { images: digits.into_iter().map(|d| pool.remove(d)).collect() }
    }

    /// `S_n` in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images }).collect()
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().map(|i| i + 1).join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycle_notation() {
        let s = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(s.to_string(), "(1 2 3 4)");
        assert_eq!(s.order(), 4);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        let t = Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(t.to_string(), "(1 2)(3 4)");
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn ranks_follow_listing() {
        for n in 0..=5 {
            let all = Permutation::all(n);
            assert_eq!(all.len(), factorial(n));
            for (r, p) in all.iter().enumerate() {
                assert_eq!(p.rank(), r);
                assert_eq!(&Permutation::unrank(n, r), p);
            }
        }
    }

    proptest! {
        #[test]
        fn group_laws(a in 0usize..120, b in 0usize..120, c in 0usize..120) {
            let (a, b, c) = (Permutation::unrank(5, a), Permutation::unrank(5, b), Permutation::unrank(5, c));
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(a.compose(&Permutation::identity(5)), a);
        }
    }
}
