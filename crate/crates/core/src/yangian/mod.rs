//! Y(gl(m|n))-modules given by explicit matrices of `t_ij(u)`.
//!
//! `t_ij(u)` is always used in the normalization where an evaluation module
//! has `t_ij(u) = (u+h) delta_ij + (-1)^i E_ij`, so each tensor factor
//! contributes one power of `u`.

mod blocks;
mod series;
mod verify;

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{Rat, RatFunc, SparseMat};
use crate::glmn::{singular_subspace, Module};
use crate::gt::{GTPattern, SuperShape, Weight};
use crate::{Error, Result};

pub use blocks::{berezinian_at, berezinian_product_at, gauss, quasidet_at, t_inverse_at, Blocks};
pub use series::{SeriesEntryJson, SeriesOperator};
pub use verify::{
    verify_berezinian, verify_defining_relations, verify_lemma_dx, verify_lemma_relations, verify_skew_invariance,
};

/// The `N x N` grid of operators `t_ij(u)` at a fixed `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMat {
    pub n: usize,
    pub dim: usize,
    blocks: Vec<SparseMat>,
}

impl TMat {
    pub fn new(n: usize, dim: usize, blocks: Vec<SparseMat>) -> Self {
        assert_eq!(blocks.len(), n * n);
        TMat { n, dim, blocks }
    }

    pub fn from_fn(n: usize, dim: usize, mut f: impl FnMut(usize, usize) -> SparseMat) -> Self {
        let mut b = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                b.push(f(i, j));
            }
        }
        TMat { n, dim, blocks: b }
    }

    /// `t_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &SparseMat {
        &self.blocks[(i - 1) * self.n + (j - 1)]
    }

    fn map(&self, f: impl Fn(&SparseMat) -> SparseMat) -> TMat {
        TMat { n: self.n, dim: self.dim, blocks: self.blocks.iter().map(f).collect() }
    }
}

/// One evaluation or skew factor of a tensor product: `L(lambda/mu)` with
/// shift `h`, where `lambda` lives over gl(m+r|n) and `r = mu.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub lambda: Weight,
    pub mu: Vec<i64>,
    pub h: Rat,
}

impl Factor {
    pub fn r(&self) -> usize {
        self.mu.len()
    }
}

#[derive(Clone, Debug)]
enum Kind {
    Eval { module: Arc<Module>, h: Rat },
    Skew { module: Arc<Module>, r: usize, sel: Vec<usize>, h: Rat },
    Tensor(Vec<YangianModule>),
    Twist { inner: Box<YangianModule>, f: RatFunc },
    Flip(Box<YangianModule>),
    DirectSum(Vec<YangianModule>),
    Corrupt(Box<YangianModule>),
}

#[derive(Clone, Debug)]
pub struct YangianModule {
    pub shape: SuperShape,
    pub parity: Vec<u8>,
    /// Per basis vector, one pattern per factor. Empty when the module has no
    /// factor structure (direct sums).
    pub labels: Vec<Vec<GTPattern>>,
    /// Factor data; empty when the module is not a (twisted) tensor product of
    /// evaluation or skew modules.
    pub factors: Vec<Factor>,
    kind: Kind,
}

/// Koszul-signed tensor product `A (x) B` where `B` has parity `pb` and the
/// left factor's basis parities are `pa`.
fn kron_signed(a: &SparseMat, b: &SparseMat, pa: &[u8], pb: u8) -> SparseMat {
    let d2 = b.nrows();
    let mut t = Vec::with_capacity(a.nnz() * b.nnz());
    for (a2, a1, x) in a.triplets() {
        let neg = pb == 1 && pa[a1] == 1;
        for (b2, b1, y) in b.triplets() {
            let v = x * y;
            t.push((a2 * d2 + b2, a1 * d2 + b1, if neg { -v } else { v }));
        }
    }
    SparseMat::from_triplets(a.nrows() * d2, a.ncols() * d2, t)
}

fn block_diag(parts: &[&SparseMat]) -> SparseMat {
    let n: usize = parts.iter().map(|p| p.nrows()).sum();
    let mut off = 0;
    let mut t = vec![];
    for p in parts {
        for (i, j, v) in p.triplets() {
            t.push((i + off, j + off, v.clone()));
        }
        off += p.nrows();
    }
    SparseMat::from_triplets(n, n, t)
}

fn sgn(odd: bool) -> Rat {
    if odd {
        -Rat::one()
    } else {
        Rat::one()
    }
}

impl YangianModule {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    /// The evaluation module `L(lambda)` with shift `h`.
    pub fn evaluation(md: Arc<Module>, h: Rat) -> YangianModule {
        YangianModule {
            shape: md.shape,
            parity: md.parity.clone(),
            labels: md.basis.iter().map(|p| vec![p.clone()]).collect(),
            factors: vec![Factor { lambda: md.weight.clone(), mu: vec![], h: h.clone() }],
            kind: Kind::Eval { module: md, h },
        }
    }

    /// The skew module `L(lambda/mu)` over Y(gl(m|n)) where `lambda` is a
    /// gl(m+r|n) weight and `r = mu.len()`.
    pub fn skew(lambda: &Weight, mu: &[i64], h: Rat) -> Result<YangianModule> {
        let md = Arc::new(Module::build(lambda)?);
        YangianModule::skew_of(md, mu, h)
    }

    pub fn skew_of(md: Arc<Module>, mu: &[i64], h: Rat) -> Result<YangianModule> {
        let r = mu.len();
        if r == 0 {
            return Ok(YangianModule::evaluation(md, h));
        }
        let sel = singular_subspace(&md, mu)?;
        let shape = SuperShape { m: md.shape.m - r, n: md.shape.n };
        if shape.size() == 0 {
            return Err(Error::Unsupported("skew module over an empty shape".into()));
        }
        Ok(YangianModule {
            shape,
            parity: sel.iter().map(|&a| md.parity[a]).collect(),
            labels: sel.iter().map(|&a| vec![md.basis[a].clone()]).collect(),
            factors: vec![Factor { lambda: md.weight.clone(), mu: mu.to_vec(), h: h.clone() }],
            kind: Kind::Skew { module: md, r, sel, h },
        })
    }

    /// Tensor product via the coproduct `t_ij -> sum_k t_ik (x) t_kj`.
    pub fn tensor(factors: Vec<YangianModule>) -> Result<YangianModule> {
        let Some(first) = factors.first() else {
            return Err(Error::Unsupported("empty tensor product".into()));
        };
        if factors.len() == 1 {
            return Ok(factors.into_iter().next().unwrap());
        }
        let shape = first.shape;
        if factors.iter().any(|f| f.shape != shape) {
            return Err(Error::ShapeMismatch);
        }
        let mut parity = vec![0u8];
        let mut labels: Vec<Vec<GTPattern>> = vec![vec![]];
        let mut fs = vec![];
        for f in &factors {
            parity = parity.iter().flat_map(|&a| f.parity.iter().map(move |&b| a ^ b)).collect();
            labels = labels
                .iter()
                .flat_map(|a| {
                    f.labels.iter().map(move |b| {
                        let mut c = a.clone();
                        c.extend(b.iter().cloned());
                        c
                    })
                })
                .collect();
            fs.extend(f.factors.iter().cloned());
        }
        let flat = factors.iter().all(|f| !f.factors.is_empty() && f.labels.iter().all(|l| l.len() == f.factors.len()));
        Ok(YangianModule {
            shape,
            parity,
            labels: if flat { labels } else { vec![] },
            factors: if flat { fs } else { vec![] },
            kind: Kind::Tensor(factors),
        })
    }

    /// `omega_f`: every `t_ij(u)` multiplied by `f(u)`.
    pub fn twist(&self, f: RatFunc) -> YangianModule {
        YangianModule {
            shape: self.shape,
            parity: self.parity.clone(),
            labels: self.labels.clone(),
            factors: self.factors.clone(),
            kind: Kind::Twist { inner: Box::new(self.clone()), f },
        }
    }

    /// The Y(gl(n|m))-module `t~_ij(u) = (-1)^{j(i+1)} t_{N+1-j,N+1-i}(u)`.
    pub fn flip(&self) -> YangianModule {
        YangianModule {
            shape: self.shape.flipped(),
            parity: self.parity.clone(),
            labels: vec![],
            factors: vec![],
            kind: Kind::Flip(Box::new(self.clone())),
        }
    }

    pub fn direct_sum(parts: Vec<YangianModule>) -> Result<YangianModule> {
        let shape = parts.first().ok_or_else(|| Error::Unsupported("empty direct sum".into()))?.shape;
        if parts.iter().any(|p| p.shape != shape) {
            return Err(Error::ShapeMismatch);
        }
        Ok(YangianModule {
            shape,
            parity: parts.iter().flat_map(|p| p.parity.iter().copied()).collect(),
            labels: vec![],
            factors: vec![],
            kind: Kind::DirectSum(parts),
        })
    }

    /// Test fixture: negates `t_12(u)` only, which breaks the defining relations.
    pub fn corrupted(&self) -> YangianModule {
        YangianModule {
            shape: self.shape,
            parity: self.parity.clone(),
            labels: self.labels.clone(),
            factors: self.factors.clone(),
            kind: Kind::Corrupt(Box::new(self.clone())),
        }
    }

    /// Number of evaluation factors, i.e. the polynomial degree of `t_ii(u)`
    /// before any twist.
    pub fn u_degree(&self) -> usize {
        match &self.kind {
            Kind::Eval { .. } | Kind::Skew { .. } => 1,
            Kind::Tensor(fs) => fs.iter().map(|f| f.u_degree()).sum(),
            Kind::Twist { inner, .. } | Kind::Flip(inner) | Kind::Corrupt(inner) => inner.u_degree(),
            Kind::DirectSum(ps) => ps.iter().map(|p| p.u_degree()).max().unwrap_or(0),
        }
    }

    /// Largest `r` among skew factors; bounds the pole structure.
    pub fn max_r(&self) -> usize {
        match &self.kind {
            Kind::Eval { .. } => 0,
            Kind::Skew { r, .. } => *r,
            Kind::Tensor(fs) | Kind::DirectSum(fs) => fs.iter().map(|f| f.max_r()).max().unwrap_or(0),
            Kind::Twist { inner, .. } | Kind::Flip(inner) | Kind::Corrupt(inner) => inner.max_r(),
        }
    }

    /// All `t_ij(u)` at the point `u`.
    pub fn t_at(&self, u: &Rat) -> Result<TMat> {
        let nn = self.n();
        match &self.kind {
            Kind::Eval { module, h } => Ok(eval_t(module, &(u + h))),
            Kind::Skew { module, r, sel, h } => {
                let full = eval_t(module, &(u + h));
                let b = gauss(&full, *r, u)?;
                let s = b.schur;
                let inside = |m: &SparseMat| m.preserves(sel);
                let mut out = Vec::with_capacity(nn * nn);
                for i in 1..=nn {
                    for j in 1..=nn {
                        let a = s.get(i, j);
                        if !inside(a) {
                            return Err(Error::InvarianceViolation);
                        }
                        out.push(a.restrict(sel, sel));
                    }
                }
                Ok(TMat::new(nn, sel.len(), out))
            }
            Kind::Tensor(fs) => {
                let mut acc = fs[0].t_at(u)?;
                let mut par = fs[0].parity.clone();
                for f in &fs[1..] {
                    let tb = f.t_at(u)?;
                    let d = par.len() * f.dim();
                    let next = TMat::from_fn(nn, d, |i, j| {
                        let mut m = SparseMat::zeros(d, d);
                        for k in 1..=nn {
                            let pb = self.shape.parity(k) ^ self.shape.parity(j);
                            m = m.add(&kron_signed(acc.get(i, k), tb.get(k, j), &par, pb));
                        }
                        m
                    });
                    par = par.iter().flat_map(|&a| f.parity.iter().map(move |&b| a ^ b)).collect();
                    acc = next;
                }
                Ok(acc)
            }
            Kind::Twist { inner, f } => {
                let c = f.eval(u).map_err(|_| Error::PoleHit(u.clone()))?;
                Ok(inner.t_at(u)?.map(|m| m.scale(&c)))
            }
            Kind::Flip(inner) => {
                let t = inner.t_at(u)?;
                let sh = self.shape;
                Ok(TMat::from_fn(nn, t.dim, |i, j| {
                    let odd = sh.parity(j) & (sh.parity(i) ^ 1) == 1;
                    t.get(nn + 1 - j, nn + 1 - i).scale(&sgn(odd))
                }))
            }
            Kind::DirectSum(ps) => {
                let ts = ps.iter().map(|p| p.t_at(u)).collect::<Result<Vec<_>>>()?;
                Ok(TMat::from_fn(nn, self.dim(), |i, j| {
                    block_diag(&ts.iter().map(|t| t.get(i, j)).collect::<Vec<_>>())
                }))
            }
            Kind::Corrupt(inner) => {
                let mut t = inner.t_at(u)?;
                if nn >= 2 {
                    t.blocks[1] = t.blocks[1].scale(&-Rat::one());
                }
                Ok(t)
            }
        }
    }

    /// The coefficients `t_ij^{(1)}` of `u^{-1}` in `t_ij(u) / u^{deg}`.
    pub fn t1(&self) -> Result<TMat> {
        let nn = self.n();
        match &self.kind {
            Kind::Eval { module, h } => Ok(eval_t1(module, h, 0, None)),
            Kind::Skew { module, r, sel, h } => Ok(eval_t1(module, h, *r, Some(sel))),
            Kind::Tensor(fs) => {
                let mut acc = fs[0].t1()?;
                let mut par = fs[0].parity.clone();
                for f in &fs[1..] {
                    let tb = f.t1()?;
                    let (d1, d2) = (par.len(), f.dim());
                    let (i1, i2) = (SparseMat::identity(d1), SparseMat::identity(d2));
                    let next = TMat::from_fn(nn, d1 * d2, |i, j| {
                        let pb = self.shape.parity(i) ^ self.shape.parity(j);
                        kron_signed(acc.get(i, j), &i2, &par, 0).add(&kron_signed(&i1, tb.get(i, j), &par, pb))
                    });
                    par = par.iter().flat_map(|&a| f.parity.iter().map(move |&b| a ^ b)).collect();
                    acc = next;
                }
                Ok(acc)
            }
            Kind::Twist { inner, f } => {
                let (num, den) = (f.num(), f.den());
                let d = den.degree().unwrap_or(0);
                if num.degree() != Some(d) || num.lead() != den.lead() {
                    return Err(Error::HypothesisNotMet("twist series must have leading term 1".into()));
                }
                let c = |p: &crate::arith::Poly| if d == 0 { Rat::zero() } else { p.coeffs()[d - 1].clone() };
                let f1 = (c(num) - c(den)) / den.lead();
                let t = inner.t1()?;
                let id = SparseMat::scalar(self.dim(), f1);
                Ok(TMat::from_fn(
                    nn,
                    self.dim(),
                    |i, j| {
                        if i == j {
                            t.get(i, j).add(&id)
                        } else {
                            t.get(i, j).clone()
                        }
                    },
                ))
            }
            Kind::Flip(inner) => {
                let t = inner.t1()?;
                let sh = self.shape;
                Ok(TMat::from_fn(nn, t.dim, |i, j| {
                    let odd = sh.parity(j) & (sh.parity(i) ^ 1) == 1;
                    t.get(nn + 1 - j, nn + 1 - i).scale(&sgn(odd))
                }))
            }
            Kind::DirectSum(ps) => {
                let ts = ps.iter().map(|p| p.t1()).collect::<Result<Vec<_>>>()?;
                Ok(TMat::from_fn(nn, self.dim(), |i, j| {
                    block_diag(&ts.iter().map(|t| t.get(i, j)).collect::<Vec<_>>())
                }))
            }
            Kind::Corrupt(inner) => {
                let mut t = inner.t1()?;
                if nn >= 2 {
                    t.blocks[1] = t.blocks[1].scale(&-Rat::one());
                }
                Ok(t)
            }
        }
    }

    /// The action of the Lie superalgebra element `E_ij` (`i != j`) through
    /// the evaluation embedding: `(-1)^i t_ij^{(1)}`.
    pub fn e_action(&self, i: usize, j: usize) -> Result<SparseMat> {
        let t = self.t1()?;
        Ok(t.get(i, j).scale(&sgn(self.shape.parity(i) == 1)))
    }
}

fn eval_t(md: &Module, x: &Rat) -> TMat {
    let nn = md.shape.size();
    let d = md.dim();
    TMat::from_fn(nn, d, |i, j| {
        let e = md.e(i, j).scale(&sgn(md.shape.parity(i) == 1));
        if i == j {
            e.add(&SparseMat::scalar(d, x.clone()))
        } else {
            e
        }
    })
}

fn eval_t1(md: &Module, h: &Rat, r: usize, sel: Option<&Vec<usize>>) -> TMat {
    let nn = md.shape.size() - r;
    let full = eval_t(md, h);
    let d = sel.map(|s| s.len()).unwrap_or(md.dim());
    TMat::from_fn(nn, d, |i, j| {
        let m = full.get(i + r, j + r);
        match sel {
            Some(s) => m.restrict(s, s),
            None => m.clone(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ri;

    fn natural(h: Rat) -> YangianModule {
        let sh = SuperShape::new(1, 1).unwrap();
        YangianModule::evaluation(Arc::new(Module::build(&Weight::natural(sh)).unwrap()), h)
    }

    #[test]
    fn evaluation_signs() {
        let y = natural(ri(0));
        let t = y.t_at(&ri(5)).unwrap();
        let md = Module::build(&Weight::natural(y.shape)).unwrap();
        let top = md.basis.iter().position(|p| p.get(1, 1) == 1).unwrap();
        assert_eq!(t.get(1, 1).get(top, top), ri(6));
        assert_eq!(t.get(2, 2).get(top, top), ri(5));
        assert_eq!(t.get(2, 2).get(1 - top, 1 - top), ri(4));
    }

    #[test]
    fn one_factor_tensor_is_identity() {
        let y = natural(rq(1, 2));
        let t = YangianModule::tensor(vec![y.clone()]).unwrap();
        assert_eq!(t.t_at(&ri(3)).unwrap(), y.t_at(&ri(3)).unwrap());
    }

    use crate::arith::rq;

    fn pts() -> Vec<(Rat, Rat)> {
        vec![(rq(7, 3), rq(-5, 2)), (rq(11, 4), rq(1, 5))]
    }

    fn sample_modules() -> Vec<YangianModule> {
        let sh11 = SuperShape::new(1, 1).unwrap();
        let w = |m, n, e: Vec<i64>| Weight::new(SuperShape::new(m, n).unwrap(), e).unwrap();
        let ev = |wt: Weight, h| YangianModule::evaluation(Arc::new(Module::build(&wt).unwrap()), h);
        vec![
            ev(Weight::natural(sh11), ri(0)),
            ev(w(2, 1, vec![2, 1, 0]), rq(1, 3)),
            ev(w(1, 2, vec![1, 1, 0]), ri(0)),
            YangianModule::tensor(vec![natural(ri(0)), natural(rq(1, 2))]).unwrap(),
            YangianModule::skew(&w(2, 1, vec![2, 1, 0]), &[1], ri(0)).unwrap(),
            YangianModule::skew(&w(2, 2, vec![2, 1, 1, 0]), &[1], rq(1, 4)).unwrap(),
            ev(w(2, 1, vec![1, 0, 0]), ri(0)).flip(),
        ]
    }

    #[test]
    fn relations_hold_on_samples() {
        for y in sample_modules() {
            let r = verify_defining_relations(&y, &pts());
            assert!(r.is_clean(), "{:?} {:?}", y.shape, &r.violations[..r.violations.len().min(5)]);
            let us: Vec<Rat> = pts().into_iter().map(|p| p.0).collect();
            let r = verify_lemma_dx(&y, &us);
            assert!(r.is_clean(), "{:?}", r.violations);
            let r = verify_lemma_relations(&y, &pts());
            assert!(r.is_clean(), "{:?}", r.violations);
            let r = verify_berezinian(&y, &us, &[rq(3, 7)]);
            assert!(r.is_clean(), "{:?}", r.violations);
        }
    }

    #[test]
    fn corruption_detected() {
        let y = natural(ri(0)).corrupted();
        assert!(!verify_defining_relations(&y, &pts()).is_clean());
    }
}
