//! Dense univariate polynomials over `Q`, ascending coefficient order.
//! Only what cyclotomic arithmetic needs.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) type UPoly = Vec<Rational>;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &UPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (i, y) in b.iter().enumerate().take(db + 1) {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m` when `gcd(a, m) = 1`, via the extended
/// Euclidean algorithm.
pub(crate) fn inverse_mod(a: &UPoly, m: &UPoly) -> Option<UPoly> {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut t0, mut t1): (UPoly, UPoly) = (Vec::new(), vec![Rational::one()]);
    trim(&mut r1);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is gcd up to a unit; invertible iff it is a nonzero constant
    match degree(&r0) {
        Some(0) => {
            let c = r0[0].recip();
            let mut inv: UPoly = t0.iter().map(|x| x * &c).collect();
            let (_, r) = divrem(&inv, m);
            inv = r;
            Some(inv)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(v: &[i64]) -> UPoly {
        let mut out: UPoly = v.iter().map(|&c| rat(c, 1)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn division_identity() {
        let a = p(&[1, 0, 0, 0, 1]);
        let b = p(&[1, 1, 1]);
        let (q, r) = divrem(&a, &b);
        let back = {
            let mut s = mul(&q, &b);
            s.resize(a.len().max(s.len()), Rational::zero());
            for (i, c) in r.iter().enumerate() {
                s[i] += c;
            }
            trim(&mut s);
            s
        };
        assert_eq!(back, a);
        assert!(degree(&r).unwrap_or(0) < 2);
    }

    #[test]
    fn inverse_modulo_irreducible() {
        // x * (-x) = -x^2 = 1 mod x^2 + 1
        let m = p(&[1, 0, 1]);
        assert_eq!(inverse_mod(&p(&[0, 1]), &m).unwrap(), p(&[0, -1]));
        // x - 1 shares the factor with x^2 - 1
        assert!(inverse_mod(&p(&[-1, 1]), &p(&[-1, 0, 1])).is_none());
    }
}
