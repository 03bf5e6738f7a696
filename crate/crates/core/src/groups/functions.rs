use std::ops::{Add, Mul, Sub};

use super::perm::{factorial, Permutation};
use crate::exactnum::{Rational, Scalar};
use crate::report::CertificateReport;

/// A function `S_n → K`, values listed in lexicographic order of `S_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionOnSn<C: Scalar = Rational> {
    n: usize,
    values: Vec<C>,
}

impl<C: Scalar> FunctionOnSn<C> {
    pub fn from_fn(n: usize, f: impl Fn(&Permutation) -> C) -> Self {
        FunctionOnSn { n, values: Permutation::all(n).iter().map(f).collect() }
    }

    pub fn constant(n: usize, c: C) -> Self {
        FunctionOnSn { n, values: vec![c; factorial(n)] }
    }

    /// The indicator `e_σ` of one permutation.
    pub fn indicator(sigma: &Permutation) -> Self {
        let n = sigma.degree();
        let mut values = vec![C::zero(); factorial(n)];
        values[sigma.rank()] = C::one();
        FunctionOnSn { n, values }
    }

    /// `p_ij(σ) = δ_{i, σ(j)}` (0-based indices).
    pub fn coordinate(n: usize, i: usize, j: usize) -> Self {
        Self::from_fn(n, |s| if s.apply(j) == i { C::one() } else { C::zero() })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn eval(&self, sigma: &Permutation) -> &C {
        &self.values[sigma.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        FunctionOnSn { n: self.n, values: self.values.iter().map(|v| v.mul(c)).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        assert_eq!(self.n, other.n, "functions on different symmetric groups");
        FunctionOnSn { n: self.n, values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect() }
    }

    /// Permutations where the function is nonzero, with values.
    pub fn support(&self) -> Vec<(Permutation, C)> {
        Permutation::all(self.n)
            .into_iter()
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(p, v)| (p, v.clone()))
            .collect()
    }
}

impl<C: Scalar> Add for &FunctionOnSn<C> {
    type Output = FunctionOnSn<C>;
    fn add(self, o: Self) -> FunctionOnSn<C> {
        self.zip(o, C::add)
    }
}

impl<C: Scalar> Sub for &FunctionOnSn<C> {
    type Output = FunctionOnSn<C>;
    fn sub(self, o: Self) -> FunctionOnSn<C> {
        self.zip(o, C::sub)
    }
}

impl<C: Scalar> Mul for &FunctionOnSn<C> {
    type Output = FunctionOnSn<C>;
    fn mul(self, o: Self) -> FunctionOnSn<C> {
        self.zip(o, C::mul)
    }
}

/// Checks `e_σ = p_{σ(1)1} ⋯ p_{σ(n)n}` pointwise for every `σ ∈ S_n`.
pub fn e_sigma_product_check(n: usize) -> CertificateReport {
    let mut report = CertificateReport::new(format!("e_sigma = product of p_(sigma(i), i) in K(S_{n})"));
    let coords: Vec<Vec<FunctionOnSn>> =
        (0..n).map(|i| (0..n).map(|j| FunctionOnSn::coordinate(n, i, j)).collect()).collect();
    let mut failures = 0usize;
    let all = Permutation::all(n);
    for sigma in &all {
        let mut prod = FunctionOnSn::constant(n, Rational::from_int(1));
        for i in 0..n {
            prod = &prod * &coords[sigma.apply(i)][i];
        }
        if prod != FunctionOnSn::indicator(sigma) {
            failures += 1;
            report.fact(format!("e_{sigma}"), false, "product differs from the indicator");
        }
    }
    report.fact("all permutations", failures == 0, format!("{} of {} products equal their indicator", all.len() - failures, all.len()));
    report.set_data("n", n);
    report.set_data("permutations_checked", all.len());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicators_are_orthogonal_idempotents() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            let mut sum = FunctionOnSn::<Rational>::constant(n, Rational::from_int(0));
            for a in &all {
                let ea = FunctionOnSn::indicator(a);
                sum = &sum + &ea;
                for b in &all {
                    let prod = &ea * &FunctionOnSn::indicator(b);
                    if a == b {
                        assert_eq!(prod, ea);
                    } else {
                        assert!(prod.is_zero());
                    }
                }
            }
            assert_eq!(sum, FunctionOnSn::constant(n, Rational::from_int(1)));
        }
    }

    #[test]
    fn coordinate_functions() {
        let p11 = FunctionOnSn::<Rational>::coordinate(2, 0, 0);
        let t = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        assert!(p11.eval(&Permutation::identity(2)).is_one());
        assert!(p11.eval(&t).is_zero());
        let three = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let prod = (0..3).fold(FunctionOnSn::constant(3, Rational::from_int(1)), |acc, i| {
            &acc * &FunctionOnSn::coordinate(3, three.apply(i), i)
        });
        assert_eq!(prod.support().len(), 1);
        assert_eq!(prod.support()[0].0, three);
    }

    #[test]
    fn e_sigma_products() {
        for n in 1..=5 {
            assert!(e_sigma_product_check(n).is_verified(), "n = {n}");
        }
    }
}
