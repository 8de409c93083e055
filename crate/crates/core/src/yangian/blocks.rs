use num_traits::One;

use super::{TMat, YangianModule};
use crate::arith::{ri, Rat, SparseMat};
use crate::{Error, Result};

/// Result of block Gaussian elimination of `T(u)` at a point.
///
/// `d[k-1] = d_k(u)`, `x[k-1] = x_k(u)`, `y[k-1] = y_k(u)` for every `k`
/// reached, and `schur` is the Schur complement left after the pivots.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub d: Vec<SparseMat>,
    pub x: Vec<SparseMat>,
    pub y: Vec<SparseMat>,
    pub schur: TMat,
}

fn pole(u: &Rat) -> impl Fn(crate::ArithError) -> Error + '_ {
    move |_| Error::PoleHit(u.clone())
}

/// Eliminates the first `pivots` diagonal blocks of `t`. Yields `d_k`, `x_k`,
/// `y_k` for `k <= pivots + 1`.
pub fn gauss(t: &TMat, pivots: usize, u: &Rat) -> Result<Blocks> {
    assert!(pivots < t.n, "too many pivots");
    let mut s: Vec<Vec<SparseMat>> = (1..=t.n).map(|i| (1..=t.n).map(|j| t.get(i, j).clone()).collect()).collect();
    let (mut d, mut x, mut y) = (vec![], vec![], vec![]);
    let mut record = |s: &Vec<Vec<SparseMat>>| {
        d.push(s[0][0].clone());
        if s.len() > 1 {
            x.push(s[0][1].clone());
            y.push(s[1][0].clone());
        }
    };
    for _ in 0..pivots {
        record(&s);
        let inv = s[0][0].inverse().map_err(pole(u))?;
        let k = s.len();
        let mut next = Vec::with_capacity(k - 1);
        for i in 1..k {
            let left = s[i][0].mul(&inv);
            let row = (1..k)
                .map(|j| {
                    if left.is_zero() || s[0][j].is_zero() {
                        s[i][j].clone()
                    } else {
                        s[i][j].sub(&left.mul(&s[0][j]))
                    }
                })
                .collect();
            next.push(row);
        }
        s = next;
    }
    record(&s);
    let n = s.len();
    let schur = TMat::new(n, t.dim, s.into_iter().flatten().collect());
    Ok(Blocks { d, x, y, schur })
}

/// `|A|_ij = a_ij - r_i (A^{ij})^{-1} c_j` for a square grid of operator
/// blocks, computed by flattening `A^{ij}`. Indices are 1-based.
pub fn quasidet_at(a: &[Vec<SparseMat>], i: usize, j: usize) -> std::result::Result<SparseMat, crate::ArithError> {
    let k = a.len();
    let dim = a[0][0].nrows();
    if k == 1 {
        return Ok(a[0][0].clone());
    }
    let rows: Vec<usize> = (0..k).filter(|&r| r != i - 1).collect();
    let cols: Vec<usize> = (0..k).filter(|&c| c != j - 1).collect();
    let big = (k - 1) * dim;
    let mut tm = vec![];
    let mut tr = vec![];
    let mut tc = vec![];
    for (p, &r) in rows.iter().enumerate() {
        for (q, &c) in cols.iter().enumerate() {
            for (x, y, v) in a[r][c].triplets() {
                tm.push((p * dim + x, q * dim + y, v.clone()));
            }
        }
        for (x, y, v) in a[r][j - 1].triplets() {
            tc.push((p * dim + x, y, v.clone()));
        }
    }
    for (q, &c) in cols.iter().enumerate() {
        for (x, y, v) in a[i - 1][c].triplets() {
            tr.push((x, q * dim + y, v.clone()));
        }
    }
    let inv = SparseMat::from_triplets(big, big, tm).inverse()?;
    let r = SparseMat::from_triplets(dim, big, tr);
    let c = SparseMat::from_triplets(big, dim, tc);
    Ok(a[i - 1][j - 1].sub(&r.mul(&inv).mul(&c)))
}

/// `T(u)^{-1}` as a grid of blocks `t'_ij(u)`.
pub fn t_inverse_at(t: &TMat) -> std::result::Result<TMat, crate::ArithError> {
    let (n, d) = (t.n, t.dim);
    let mut trip = vec![];
    for i in 1..=n {
        for j in 1..=n {
            for (x, y, v) in t.get(i, j).triplets() {
                trip.push(((i - 1) * d + x, (j - 1) * d + y, v.clone()));
            }
        }
    }
    let inv = SparseMat::from_triplets(n * d, n * d, trip).inverse()?;
    Ok(TMat::from_fn(n, d, |i, j| {
        let rows: Vec<usize> = ((i - 1) * d..i * d).collect();
        let cols: Vec<usize> = ((j - 1) * d..j * d).collect();
        inv.restrict(&rows, &cols)
    }))
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(vec![], false)];
    }
    let mut out = vec![];
    for (p, odd) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let moved = (p.len() - pos) % 2 == 1;
            out.push((q, odd ^ moved));
        }
    }
    out
}

/// `B(u)` from its defining sum over `S_m x S_n`, using `t_ij` and the
/// entries `t'_ij` of `T^{-1}` at the shifted points `u + gamma_k`.
pub fn berezinian_at(ym: &YangianModule, u: &Rat) -> Result<SparseMat> {
    let sh = ym.shape;
    let (m, n, d) = (sh.m, sh.n, ym.dim());
    let mut even = SparseMat::zeros(d, d);
    let ts = (1..=m).map(|a| ym.t_at(&(u + ri(sh.gamma(a))))).collect::<Result<Vec<_>>>()?;
    for (perm, odd) in permutations(m) {
        let mut p = SparseMat::identity(d);
        for a in 0..m {
            p = p.mul(ts[a].get(perm[a] + 1, a + 1));
        }
        even = even.add_scaled(&p, &if odd { -Rat::one() } else { Rat::one() });
    }
    let mut oddpart = SparseMat::zeros(d, d);
    let mut tis = vec![];
    for b in 1..=n {
        let v = u + ri(sh.gamma(m + b));
        tis.push(t_inverse_at(&ym.t_at(&v)?).map_err(pole(&v))?);
    }
    for (perm, odd) in permutations(n) {
        let mut p = SparseMat::identity(d);
        for b in 0..n {
            p = p.mul(tis[b].get(m + b + 1, m + perm[b] + 1));
        }
        oddpart = oddpart.add_scaled(&p, &if odd { -Rat::one() } else { Rat::one() });
    }
    Ok(even.mul(&oddpart))
}

/// `B_k(u) = d_1(u+gamma_1) ... d_m(u+gamma_m) d_{m+1}(u+gamma_{m+1})^{-1} ... `
/// truncated at `k`.
pub fn berezinian_product_at(ym: &YangianModule, u: &Rat, k: usize) -> Result<SparseMat> {
    let sh = ym.shape;
    let mut p = SparseMat::identity(ym.dim());
    for a in 1..=k {
        let v = u + ri(sh.gamma(a));
        let b = gauss(&ym.t_at(&v)?, a - 1, &v)?;
        let da = &b.d[a - 1];
        p = if a <= sh.m { p.mul(da) } else { p.mul(&da.inverse().map_err(pole(&v))?) };
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps.iter().filter(|(_, o)| *o).count(), 3);
        for (p, odd) in ps {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(inv % 2 == 1, odd);
        }
    }
}
