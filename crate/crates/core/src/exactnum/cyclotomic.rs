//! Elements of the cyclotomic field `Q(ζ_m)` in the power basis
//! `1, ζ, …, ζ^{φ(m)-1}` modulo the m-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::linalg;
use super::upoly::{self, UPoly};
use super::{parse_rational, NumError, Rational};

/// Per-order data shared by all elements of `Q(ζ_m)`.
#[derive(Debug)]
struct FieldData {
    phi: usize,
    /// Monic `Φ_m`, ascending coefficients, length `phi + 1`.
    modulus: UPoly,
    /// `powers[k]` holds the coordinates of `ζ^k` for `k < powers.len()`.
    powers: Vec<Vec<Rational>>,
}

fn field_cache() -> &'static RwLock<HashMap<u64, Arc<FieldData>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn poly_cache() -> &'static RwLock<HashMap<u64, Arc<UPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<UPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cyclotomic_upoly(m: u64) -> Arc<UPoly> {
    if let Some(p) = poly_cache().read().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 = prod_{d | m} Φ_d
    let mut num: UPoly = vec![Rational::zero(); m as usize + 1];
    num[0] = -Rational::one();
    num[m as usize] = Rational::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = upoly::divrem(&num, &cyclotomic_upoly(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    let p = Arc::new(num);
    poly_cache().write().unwrap().insert(m, p.clone());
    p
}

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<Rational> {
    assert!(m > 0, "cyclotomic polynomial of order 0");
    cyclotomic_upoly(m).as_ref().clone()
}

fn field(m: u64) -> Arc<FieldData> {
    if let Some(f) = field_cache().read().unwrap().get(&m) {
        return f.clone();
    }
    let modulus = cyclotomic_upoly(m).as_ref().clone();
    let phi = modulus.len() - 1;
    debug_assert_eq!(phi as u64, euler_phi(m));
    let table_len = (m as usize).max(2 * phi - 1);
    let mut powers = Vec::with_capacity(table_len);
    let mut cur = vec![Rational::zero(); phi];
    cur[0] = Rational::one();
    for _ in 0..table_len {
        powers.push(cur.clone());
        // multiply by x, then reduce x^phi = -sum_{i<phi} modulus[i] x^i
        let top = cur.pop().unwrap();
        cur.insert(0, Rational::zero());
        if !top.is_zero() {
            for (c, mi) in cur.iter_mut().zip(&modulus) {
                *c -= &top * mi;
            }
        }
    }
    let f = Arc::new(FieldData { phi, modulus, powers });
    field_cache().write().unwrap().insert(m, f.clone());
    f
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v.into()))
    }

    /// Builds `Σ coeffs[k] ζ_m^k` for a coefficient list of any length.
    pub fn from_coeffs(order: u64, coeffs: &[Rational]) -> Result<Self, NumError> {
        if order == 0 {
            return Err(NumError::ZeroOrder);
        }
        let f = field(order);
        let mut out = vec![Rational::zero(); f.phi];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pow = &f.powers[k % order as usize];
            for (o, p) in out.iter_mut().zip(pow) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Ok(Cyclotomic { order, coeffs: out })
    }

    /// The primitive root `ζ_m = exp(2πi/m)` viewed abstractly.
    pub fn zeta(m: u64) -> Self {
        Self::zeta_pow(m, 1)
    }

    /// `ζ_m^k`; negative exponents are allowed.
    pub fn zeta_pow(m: u64, k: i64) -> Self {
        assert!(m > 0, "root of unity of order 0");
        let f = field(m);
        let e = k.rem_euclid(m as i64) as usize;
        Cyclotomic { order: m, coeffs: f.powers[e].clone() }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Image under `Q(ζ_m) → Q(ζ_{m'})`, `ζ_m ↦ ζ_{m'}^{m'/m}`.
    pub fn embed(&self, target: u64) -> Result<Self, NumError> {
        if target == 0 {
            return Err(NumError::ZeroOrder);
        }
        if !target.is_multiple_of(self.order) {
            return Err(NumError::NotDivisible { from: self.order, to: target });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let f = field(target);
        let mut out = vec![Rational::zero(); f.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pow = &f.powers[(k * step) % target as usize];
            for (o, p) in out.iter_mut().zip(pow) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Ok(Cyclotomic { order: target, coeffs: out })
    }

    /// Preimage under the embedding `Q(ζ_m) → Q(ζ_{self.order})`, if the
    /// element lies in the smaller field.
    pub fn restrict(&self, smaller: u64) -> Result<Option<Self>, NumError> {
        if smaller == 0 {
            return Err(NumError::ZeroOrder);
        }
        if !self.order.is_multiple_of(smaller) {
            return Err(NumError::NotDivisible { from: smaller, to: self.order });
        }
        let small_phi = euler_phi(smaller) as usize;
        let f = field(self.order);
        let step = (self.order / smaller) as usize;
        // columns: images of ζ_small^k, k < φ(small)
        let rows: Vec<Vec<Rational>> = (0..f.phi)
            .map(|i| {
                (0..small_phi)
                    .map(|k| f.powers[(k * step) % self.order as usize][i].clone())
                    .collect()
            })
            .collect();
        Ok(linalg::solve(&rows, &self.coeffs)
            .map(|coeffs| Cyclotomic { order: smaller, coeffs }))
    }

    /// Re-expresses the element in the smallest `Q(ζ_d)`, `d | order`, that
    /// contains it.
    pub fn minimal_order(&self) -> Self {
        let mut divisors: Vec<u64> = (1..=self.order).filter(|d| self.order.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        for d in divisors {
            if let Ok(Some(x)) = self.restrict(d) {
                return x;
            }
        }
        self.clone()
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = self.order.lcm(&other.order);
        (self.embed(l).unwrap(), other.embed(l).unwrap())
    }

    fn map_same_order(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        if self.order == other.order {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| op(a, b)).collect();
            return Cyclotomic { order: self.order, coeffs };
        }
        let (a, b) = self.unify(other);
        a.map_same_order(&b, op)
    }

    /// Renders `Σ c_k z^k` without the order suffix (the grading file syntax).
    pub fn to_z_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match k {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&format!("{abs}*"));
                    }
                    out.push('z');
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses a polynomial in `z` with rational coefficients, `z = ζ_order`,
    /// e.g. `"1/2*z^3 - z + 2"`.
    pub fn parse_in(order: u64, text: &str) -> Result<Self, NumError> {
        if order == 0 {
            return Err(NumError::ZeroOrder);
        }
        let err = || NumError::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        for (sign, term) in split_signed_terms(&compact).ok_or_else(err)? {
            let (coef, power) = match term.split_once('*') {
                Some((c, z)) => (parse_rational(c)?, parse_z_power(z).ok_or_else(err)?),
                None => match parse_z_power(term) {
                    Some(k) => (Rational::one(), k),
                    None => (parse_rational(term)?, 0),
                },
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += if sign { -coef } else { coef };
        }
        Self::from_coeffs(order, &coeffs)
    }
}

fn parse_z_power(t: &str) -> Option<usize> {
    let rest = t.strip_prefix('z')?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^')?.parse().ok()
}

/// Splits `a+b-c` into `(negated, term)` pairs; `None` on empty terms.
pub(crate) fn split_signed_terms(s: &str) -> Option<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut neg = false;
    if let Some(&b) = bytes.first() {
        if b == b'-' || b == b'+' {
            neg = b == b'-';
            start = 1;
        }
    }
    let mut i = start;
    while i <= bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start) {
            let term = &s[start..i];
            if term.is_empty() {
                return None;
            }
            out.push((neg, term));
            if i < bytes.len() {
                neg = bytes[i] == b'-';
            }
            start = i + 1;
            i = start;
            continue;
        }
        i += 1;
    }
    Some(out)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 || self.is_rational() {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "{} (order {})", self.to_z_string(), self.order)
        }
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl super::Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(<Rational as Zero>::zero())
    }
    fn one() -> Self {
        Cyclotomic::from_rational(<Rational as One>::one())
    }
    fn from_int(v: i64) -> Self {
        Cyclotomic::from_int(v)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn is_one(&self) -> bool {
        One::is_one(&self.coeffs[0]) && self.coeffs[1..].iter().all(Zero::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        self.map_same_order(other, |a, b| a + b)
    }
    fn sub(&self, other: &Self) -> Self {
        self.map_same_order(other, |a, b| a - b)
    }
    fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.order != other.order {
            // scalar fast path
            if let Some(r) = (self.order == 1).then(|| &self.coeffs[0]) {
                return Cyclotomic {
                    order: other.order,
                    coeffs: other.coeffs.iter().map(|c| c * r).collect(),
                };
            }
            if other.order == 1 {
                return other.mul(self);
            }
            let (a, b) = self.unify(other);
            return a.mul(&b);
        }
        let f = field(self.order);
        let prod = upoly::mul(&self.coeffs, &other.coeffs);
        let mut out = vec![<Rational as Zero>::zero(); f.phi];
        for (k, c) in prod.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if k < f.phi {
                out[k] += c;
            } else {
                for (o, p) in out.iter_mut().zip(&f.powers[k]) {
                    if !Zero::is_zero(p) {
                        *o += c * p;
                    }
                }
            }
        }
        Cyclotomic { order: self.order, coeffs: out }
    }
    fn inv(&self) -> Result<Self, NumError> {
        if super::Scalar::is_zero(self) {
            return Err(NumError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Cyclotomic::from_rational(self.coeffs[0].recip()));
        }
        let f = field(self.order);
        let mut a = self.coeffs.clone();
        upoly::trim(&mut a);
        let inv = upoly::inverse_mod(&a, &f.modulus).ok_or(NumError::DivisionByZero)?;
        let mut coeffs = inv;
        coeffs.resize(f.phi, <Rational as Zero>::zero());
        Ok(Cyclotomic { order: self.order, coeffs })
    }
}
