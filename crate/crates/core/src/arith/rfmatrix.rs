use std::collections::BTreeMap;

use super::dense::RatMatrix;
use super::interp::rational_interpolate;
use super::rat::{ri, Rat};
use super::ratfunc::RatFunc;
use super::sparse::SparseMat;
use super::ArithError;

/// Sparse matrix of rational functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RFMatrix {
    rows: usize,
    cols: usize,
    e: BTreeMap<(usize, usize), RatFunc>,
}

impl RFMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RFMatrix { rows, cols, e: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RFMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut m = RFMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> RatFunc {
        self.e.get(&(i, j)).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        if v.is_zero() {
            self.e.remove(&(i, j));
        } else {
            self.e.insert((i, j), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &RatFunc)> {
        self.e.iter()
    }

    pub fn eval(&self, x: &Rat) -> Result<SparseMat, ArithError> {
        let mut t = Vec::with_capacity(self.e.len());
        for ((i, j), f) in &self.e {
            t.push((*i, *j, f.eval(x)?));
        }
        Ok(SparseMat::from_triplets(self.rows, self.cols, t))
    }

    pub fn mul(&self, o: &RFMatrix) -> RFMatrix {
        assert_eq!(self.cols, o.rows);
        let mut by_row: BTreeMap<usize, Vec<(usize, &RatFunc)>> = BTreeMap::new();
        for ((k, j), f) in &o.e {
            by_row.entry(*k).or_default().push((*j, f));
        }
        let mut out: BTreeMap<(usize, usize), RatFunc> = BTreeMap::new();
        for ((i, k), a) in &self.e {
            if let Some(r) = by_row.get(k) {
                for (j, b) in r {
                    let p = a * *b;
                    let slot = out.entry((*i, *j)).or_insert_with(RatFunc::zero);
                    *slot = &*slot + &p;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        RFMatrix { rows: self.rows, cols: o.cols, e: out }
    }

    pub fn sub(&self, o: &RFMatrix) -> RFMatrix {
        let mut m = self.clone();
        for ((i, j), f) in &o.e {
            let v = &m.get(*i, *j) - f;
            m.set(*i, *j, v);
        }
        m
    }

    /// Multiplies every entry by `f`.
    pub fn scale(&self, f: &RatFunc) -> RFMatrix {
        let mut m = RFMatrix::zeros(self.rows, self.cols);
        for ((i, j), g) in &self.e {
            m.set(*i, *j, g * f);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_empty()
    }

    /// Inverse by Gauss-Jordan elimination over the rational-function field.
    /// The result is checked against `self` at one evaluation point.
    pub fn inverse(&self) -> Result<RFMatrix, ArithError> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<RatFunc>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let mut b: Vec<Vec<RatFunc>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect()).collect();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Err(ArithError::SingularMatrix);
            };
            a.swap(p, c);
            b.swap(p, c);
            let inv = a[c][c].recip()?;
            for j in 0..n {
                a[c][j] = &a[c][j] * &inv;
                b[c][j] = &b[c][j] * &inv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for j in 0..n {
                    if !a[c][j].is_zero() {
                        a[r][j] = &a[r][j] - &(&f * &a[c][j]);
                    }
                    if !b[c][j].is_zero() {
                        b[r][j] = &b[r][j] - &(&f * &b[c][j]);
                    }
                }
            }
        }
        let out = RFMatrix::from_fn(n, n, |i, j| b[i][j].clone());
        let mut k = 0i64;
        loop {
            let x = ri(1000 + 7 * k);
            k += 1;
            if let (Ok(mx), Ok(ix)) = (self.eval(&x), out.eval(&x)) {
                if mx.mul(&ix) != SparseMat::identity(n) {
                    return Err(ArithError::InternalCheck("inverse verification"));
                }
                break;
            }
        }
        Ok(out)
    }
}

/// Entrywise rational interpolation of sampled matrices with declared degree bounds.
pub fn rf_from_samples(samples: &[(Rat, RatMatrix)], dn: usize, dd: usize) -> Result<RFMatrix, ArithError> {
    if samples.len() < dn + dd + 1 {
        return Err(ArithError::InsufficientSamples { have: samples.len(), need: dn + dd + 1 });
    }
    let (r, c) = (samples[0].1.rows(), samples[0].1.cols());
    let mut out = RFMatrix::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            let s: Vec<(Rat, Rat)> = samples.iter().map(|(x, m)| (x.clone(), m.get(i, j).clone())).collect();
            out.set(i, j, rational_interpolate(&s, dn, dd)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Poly;

    fn u() -> RatFunc {
        RatFunc::linear(ri(0))
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(RFMatrix::identity(3).inverse().unwrap(), RFMatrix::identity(3));
        let mut m = RFMatrix::zeros(2, 2);
        m.set(0, 0, u());
        m.set(0, 1, RatFunc::one());
        m.set(1, 1, u());
        let inv = m.inverse().unwrap();
        let uu = &u() * &u();
        assert_eq!(inv.get(0, 0), u().recip().unwrap());
        assert_eq!(inv.get(0, 1), -&uu.recip().unwrap());
        assert_eq!(inv.get(1, 1), u().recip().unwrap());
        let mut s = RFMatrix::zeros(2, 2);
        s.set(0, 0, u());
        s.set(0, 1, u());
        s.set(1, 0, RatFunc::one());
        s.set(1, 1, RatFunc::one());
        assert!(matches!(s.inverse(), Err(ArithError::SingularMatrix)));
    }

    #[test]
    fn from_samples() {
        let c = RatMatrix::from_rows(vec![vec![ri(2), ri(0)], vec![ri(-1), ri(5)]]);
        let s: Vec<_> = (0..3).map(|k| (ri(k), c.clone())).collect();
        let f = rf_from_samples(&s, 0, 0).unwrap();
        assert_eq!(f.get(1, 0), RatFunc::constant(ri(-1)));
        let g = RatFunc::new(Poly::linear(ri(1)), Poly::x()).unwrap();
        let s: Vec<_> = (1..4).map(|k| (ri(k), RatMatrix::from_rows(vec![vec![g.eval(&ri(k)).unwrap()]]))).collect();
        assert_eq!(rf_from_samples(&s, 1, 1).unwrap().get(0, 0), g);
    }
}
