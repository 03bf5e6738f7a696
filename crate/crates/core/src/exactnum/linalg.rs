//! Exact Gaussian elimination over any [`Scalar`] field.

use super::Scalar;

/// Reduces `rows` in place to reduced row-echelon form and returns the
/// pivot column of each nonzero row (zero rows are dropped).
pub fn reduced_row_echelon<C: Scalar>(rows: &mut Vec<Vec<C>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in col..ncols {
                    let t = rows[r][j].mul(&factor);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<C: Scalar>(rows: &[Vec<C>]) -> usize {
    let mut m = rows.to_vec();
    reduced_row_echelon(&mut m).len()
}

/// Finds some `x` with `A x = b`, where `a` is given row by row.
pub fn solve<C: Scalar>(a: &[Vec<C>], b: &[C]) -> Option<Vec<C>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<C>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = reduced_row_echelon(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![C::zero(); ncols];
    for (row, &col) in aug.iter().zip(&pivots) {
        x[col] = row[ncols].clone();
    }
    Some(x)
}

/// A subspace of `C^n` kept in reduced row-echelon form, for repeated
/// membership tests.
#[derive(Debug, Clone)]
pub struct Span<C: Scalar> {
    dim: usize,
    rows: Vec<Vec<C>>,
    pivots: Vec<usize>,
}

impl<C: Scalar> Span<C> {
    pub fn new(ambient_dim: usize, vectors: &[Vec<C>]) -> Self {
        let mut rows = vectors.to_vec();
        let pivots = reduced_row_echelon(&mut rows);
        Span { dim: ambient_dim, rows, pivots }
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.dim
    }

    /// `v` minus its projection along the pivot structure; zero iff `v` is
    /// in the span.
    pub fn residual(&self, v: &[C]) -> Vec<C> {
        let mut out = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if out[col].is_zero() {
                continue;
            }
            let f = out[col].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = o.sub(&r.mul(&f));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[C]) -> bool {
        self.residual(v).iter().all(|x| x.is_zero())
    }

    pub fn basis(&self) -> &[Vec<C>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Cyclotomic, Rational};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn rank_and_solve() {
        let a = vec![r(&[1, 2, 3]), r(&[2, 4, 6]), r(&[0, 1, 1])];
        assert_eq!(rank(&a), 2);
        let x = solve(&a, &r(&[6, 12, 2])).unwrap();
        let check: Vec<Rational> = a
            .iter()
            .map(|row| row.iter().zip(&x).map(|(p, q)| p * q).sum())
            .collect();
        assert_eq!(check, r(&[6, 12, 2]));
        assert!(solve(&a, &r(&[1, 0, 0])).is_none());
    }

    #[test]
    fn span_membership_over_cyclotomics() {
        let z = Cyclotomic::zeta(3);
        let one = <Cyclotomic as Scalar>::one();
        let v = vec![one.clone(), z.clone(), z.mul(&z)];
        let span = Span::new(3, std::slice::from_ref(&v));
        let scaled: Vec<Cyclotomic> = v.iter().map(|x| x.mul(&z)).collect();
        assert!(span.contains(&scaled));
        assert!(!span.contains(&[one.clone(), one.clone(), one]));
    }
}
