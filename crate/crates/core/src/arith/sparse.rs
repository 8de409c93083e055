use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::dense::RatMatrix;
use super::rat::Rat;
use super::ArithError;

/// Row-sparse matrix over the rationals. Rows are sorted by column and hold no
/// explicit zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat {
    nr: usize,
    nc: usize,
    rows: Vec<Vec<(usize, Rat)>>,
}

impl SparseMat {
    pub fn zeros(nr: usize, nc: usize) -> Self {
        SparseMat { nr, nc, rows: vec![vec![]; nr] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat::scalar(n, Rat::one())
    }

    pub fn scalar(n: usize, a: Rat) -> Self {
        let mut m = SparseMat::zeros(n, n);
        if !a.is_zero() {
            for i in 0..n {
                m.rows[i].push((i, a.clone()));
            }
        }
        m
    }

    pub fn diagonal(d: &[Rat]) -> Self {
        let mut m = SparseMat::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            if !x.is_zero() {
                m.rows[i].push((i, x.clone()));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(nr: usize, nc: usize, t: impl IntoIterator<Item = (usize, usize, Rat)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, Rat>> = vec![BTreeMap::new(); nr];
        for (i, j, v) in t {
            assert!(i < nr && j < nc, "triplet out of range");
            *acc[i].entry(j).or_insert_with(Rat::zero) += v;
        }
        SparseMat {
            nr,
            nc,
            rows: acc.into_iter().map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nr
    }

    pub fn ncols(&self) -> usize {
        self.nc
    }

    pub fn row(&self, i: usize) -> &[(usize, Rat)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        match self.rows[i].binary_search_by(|(c, _)| c.cmp(&j)) {
            Ok(p) => self.rows[i][p].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    fn merge(a: &[(usize, Rat)], b: &[(usize, Rat)], sb: &Rat) -> Vec<(usize, Rat)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, &b[j].1 * sb));
                j += 1;
            } else {
                let v = &a[i].1 + &b[j].1 * sb;
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// `self + s*o`.
    pub fn add_scaled(&self, o: &SparseMat, s: &Rat) -> SparseMat {
        assert_eq!((self.nr, self.nc), (o.nr, o.nc), "shape mismatch");
        if s.is_zero() {
            return self.clone();
        }
        SparseMat {
            nr: self.nr,
            nc: self.nc,
            rows: self.rows.iter().zip(&o.rows).map(|(a, b)| SparseMat::merge(a, b, s)).collect(),
        }
    }

    pub fn add(&self, o: &SparseMat) -> SparseMat {
        self.add_scaled(o, &Rat::one())
    }

    pub fn sub(&self, o: &SparseMat) -> SparseMat {
        self.add_scaled(o, &-Rat::one())
    }

    pub fn scale(&self, s: &Rat) -> SparseMat {
        if s.is_zero() {
            return SparseMat::zeros(self.nr, self.nc);
        }
        SparseMat {
            nr: self.nr,
            nc: self.nc,
            rows: self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v * s)).collect()).collect(),
        }
    }

    pub fn mul(&self, o: &SparseMat) -> SparseMat {
        assert_eq!(self.nc, o.nr, "shape mismatch in product");
        let mut rows = Vec::with_capacity(self.nr);
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for r in &self.rows {
            acc.clear();
            for (k, a) in r {
                for (j, b) in &o.rows[*k] {
                    *acc.entry(*j).or_insert_with(Rat::zero) += a * b;
                }
            }
            rows.push(std::mem::take(&mut acc).into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        SparseMat { nr: self.nr, nc: o.nc, rows }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        self.rows
            .iter()
            .map(|r| {
                let mut s = Rat::zero();
                for (j, a) in r {
                    if !v[*j].is_zero() {
                        s += a * &v[*j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn transpose(&self) -> SparseMat {
        SparseMat::from_triplets(self.nc, self.nr, self.triplets().map(|(i, j, v)| (j, i, v.clone())))
    }

    /// Super commutator `AB - (-1)^{pa*pb} BA`.
    pub fn supercommutator(&self, pa: u8, o: &SparseMat, pb: u8) -> SparseMat {
        let s = if pa & pb & 1 == 1 { Rat::one() } else { -Rat::one() };
        self.mul(o).add_scaled(&o.mul(self), &s)
    }

    /// Submatrix on the given row and column index lists.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> SparseMat {
        let mut pos = vec![usize::MAX; self.nc];
        for (p, &c) in cols.iter().enumerate() {
            pos[c] = p;
        }
        SparseMat {
            nr: rows.len(),
            nc: cols.len(),
            rows: rows
                .iter()
                .map(|&i| {
                    self.rows[i]
                        .iter()
                        .filter(|(j, _)| pos[*j] != usize::MAX)
                        .map(|(j, v)| (pos[*j], v.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_dense(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.nr, self.nc);
        for (i, j, v) in self.triplets() {
            m.set(i, j, v.clone());
        }
        m
    }

    pub fn from_dense(m: &RatMatrix) -> SparseMat {
        SparseMat::from_triplets(
            m.rows(),
            m.cols(),
            (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j, m.get(i, j).clone()))),
        )
    }

    /// Connected components of the (symmetrized) nonzero pattern.
    pub fn components(&self) -> Vec<Vec<usize>> {
        assert_eq!(self.nr, self.nc);
        let n = self.nr;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for (i, j, _) in self.triplets() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// Exact inverse, computed block by block over connected components.
    pub fn inverse(&self) -> Result<SparseMat, ArithError> {
        assert_eq!(self.nr, self.nc, "inverse of non-square matrix");
        let mut trip = vec![];
        for comp in self.components() {
            if comp.len() == 1 {
                let i = comp[0];
                let v = self.get(i, i);
                if v.is_zero() {
                    return Err(ArithError::SingularMatrix);
                }
                trip.push((i, i, v.recip()));
                continue;
            }
            let inv = self.restrict(&comp, &comp).to_dense().inverse()?;
            for (a, &i) in comp.iter().enumerate() {
                for (b, &j) in comp.iter().enumerate() {
                    trip.push((i, j, inv.get(a, b).clone()));
                }
            }
        }
        Ok(SparseMat::from_triplets(self.nr, self.nc, trip))
    }

    /// Whether the columns listed in `sel` are mapped into the span of `sel`.
    pub fn preserves(&self, sel: &[usize]) -> bool {
        let mut inside = vec![false; self.nr];
        for &s in sel {
            inside[s] = true;
        }
        self.triplets().all(|(i, j, _)| !inside[j] || inside[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{ri, rq};

    #[test]
    fn block_inverse() {
        let a = SparseMat::from_triplets(
            4,
            4,
            vec![(0, 0, ri(2)), (1, 1, ri(1)), (1, 3, ri(1)), (3, 1, ri(1)), (3, 3, ri(2)), (2, 2, rq(1, 3))],
        );
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), SparseMat::identity(4));
        assert_eq!(a.components().len(), 3);
        let s = SparseMat::from_triplets(2, 2, vec![(0, 0, ri(1)), (1, 0, ri(1))]);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = SparseMat::from_triplets(2, 2, vec![(0, 1, ri(1))]);
        let b = SparseMat::from_triplets(2, 2, vec![(1, 0, ri(1))]);
        let c = a.supercommutator(0, &b, 0);
        assert_eq!(c, SparseMat::diagonal(&[ri(1), ri(-1)]));
        let ac = a.supercommutator(1, &b, 1);
        assert_eq!(ac, SparseMat::identity(2));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.transpose(), b);
    }
}
