use num_traits::{One, Zero};

use super::rat::Rat;
use super::ArithError;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    a: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, a: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            a.extend(row);
        }
        RatMatrix { rows: r, cols: c, a }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = RatMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let y = o.get(k, j);
                    if !y.is_zero() {
                        out.a[i * o.cols + j] += x * y;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn sub(&self, o: &RatMatrix) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.a.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let y = self.get(r, j);
                    if !y.is_zero() {
                        let v = self.get(i, j) - &f * y;
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let piv = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<RatMatrix, ArithError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(ArithError::SingularMatrix);
        }
        let mut out = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let mut m = self.a.clone();
        let mut sign = Rat::one();
        let mut prev = Rat::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Rat::zero();
                };
                for j in 0..n {
                    m.swap(p * n + j, k * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j]) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = m[k * n + k].clone();
        }
        sign * &m[n * n - 1]
    }

    /// Solves `self * x = b` for one solution, if any.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        let n = self.cols;
        let mut aug = RatMatrix::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, b[i].clone());
        }
        let piv = aug.rref();
        if piv.last() == Some(&n) {
            return None;
        }
        let mut x = vec![Rat::zero(); n];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = aug.get(r, n).clone();
        }
        Some(x)
    }
}

/// Row-reduces a list of vectors to an independent spanning list.
pub fn span_basis(vs: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    if vs.is_empty() {
        return vec![];
    }
    let mut m = RatMatrix::from_rows(vs.to_vec());
    let piv = m.rref();
    (0..piv.len()).map(|r| m.row(r)[..dim].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::ri;

    fn m(v: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(v.iter().map(|r| r.iter().map(|&x| ri(x)).collect()).collect())
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(3));
        assert_eq!(a.det(), ri(18));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_err());
        assert_eq!(s.det(), ri(0));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), ri(-1));
    }

    #[test]
    fn kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.nullspace();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(a.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }
}
