use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::interp::{rational_interpolate, sample_point, Sampler};
use crate::arith::rat::rat_str;
use crate::arith::{ri, rq, Poly, Rat, RatFunc, RatMatrix, SparseMat};
use crate::yangian::{gauss, YangianModule};
use crate::{Error, Result};

/// A vector on which some `d_k(u0)` acts by a nontrivial Jordan block:
/// `image = (d_k(u0) - eigenvalue) vector` is nonzero although `vector` lies
/// in the generalized eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub k: usize,
    pub u0: Rat,
    pub eigenvalue: Rat,
    pub vector: Vec<Rat>,
    pub image: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Tame,
    NotTame(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    SimpleSpectrum,
    Collisions(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenEntry {
    pub vector: Vec<Rat>,
    /// `d[k-1]` is the eigenvalue of `d_k(u)`.
    pub d: Vec<RatFunc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub verdict: Verdict,
    pub separation: Separation,
    pub eigen: Vec<EigenEntry>,
}

#[derive(Serialize)]
struct WitnessJson {
    k: usize,
    u0: String,
    eigenvalue: String,
    vector: Vec<String>,
    image: Vec<String>,
}

#[derive(Serialize)]
struct EigenJson {
    vector: Vec<String>,
    d: BTreeMap<String, String>,
}

#[derive(Serialize)]
struct ReportJson {
    verdict: &'static str,
    witness: Option<WitnessJson>,
    separation: serde_json::Value,
    eigen: Vec<EigenJson>,
}

fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

impl SpectrumReport {
    pub fn is_tame(&self) -> bool {
        self.verdict == Verdict::Tame
    }

    pub fn to_json(&self) -> serde_json::Value {
        let witness = match &self.verdict {
            Verdict::Tame => None,
            Verdict::NotTame(w) => Some(WitnessJson {
                k: w.k,
                u0: rat_str(&w.u0),
                eigenvalue: rat_str(&w.eigenvalue),
                vector: strs(&w.vector),
                image: strs(&w.image),
            }),
        };
        let separation = match &self.separation {
            Separation::SimpleSpectrum => serde_json::json!("simple"),
            Separation::Collisions(c) => serde_json::json!({ "collisions": c }),
        };
        let rep = ReportJson {
            verdict: if self.is_tame() { "tame" } else { "not_tame" },
            witness,
            separation,
            eigen: self
                .eigen
                .iter()
                .map(|e| EigenJson {
                    vector: strs(&e.vector),
                    d: e.d.iter().enumerate().map(|(k, f)| ((k + 1).to_string(), f.to_string())).collect(),
                })
                .collect(),
        };
        serde_json::to_value(rep).expect("serializable")
    }
}

/// A subspace given by a basis of full-length vectors. `unit` is set while
/// the basis is a subset of the standard basis.
#[derive(Clone, Debug)]
struct Block {
    basis: Vec<Vec<Rat>>,
    unit: Option<Vec<usize>>,
}

impl Block {
    fn units(dim: usize, idx: Vec<usize>) -> Block {
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); dim];
                v[i] = ri(1);
                v
            })
            .collect();
        Block { basis, unit: Some(idx) }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The matrix `X` with `A B = B X`; fails if the span is not invariant.
    fn restrict(&self, a: &SparseMat) -> Result<RatMatrix> {
        let bad = || Error::InternalInvariantViolation("eigenspace of d_k not invariant under d_l".into());
        let d = self.dim();
        if let Some(idx) = &self.unit {
            let mut inside = vec![false; a.nrows()];
            for &i in idx {
                inside[i] = true;
            }
            for (i, j, _) in a.triplets() {
                if inside[j] && !inside[i] {
                    return Err(bad());
                }
            }
            return Ok(a.restrict(idx, idx).to_dense());
        }
        let ab: Vec<Vec<Rat>> = self.basis.iter().map(|b| a.mul_vec(b)).collect();
        let mut bt = RatMatrix::from_rows(self.basis.clone());
        let piv = bt.rref();
        let br =
            RatMatrix::from_rows((0..d).map(|r| (0..d).map(|c| self.basis[c][piv[r]].clone()).collect()).collect());
        let abr = RatMatrix::from_rows((0..d).map(|r| (0..d).map(|c| ab[c][piv[r]].clone()).collect()).collect());
        let x = br.inverse()?.mul(&abr);
        for c in 0..d {
            let col: Vec<Rat> = (0..d).map(|r| x.get(r, c).clone()).collect();
            let mut v = vec![Rat::zero(); a.nrows()];
            for (j, coef) in col.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (vi, bi) in v.iter_mut().zip(&self.basis[j]) {
                    *vi += coef * bi;
                }
            }
            if v != ab[c] {
                return Err(bad());
            }
        }
        Ok(x)
    }

    fn lift(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.basis[0].len()];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += c * bi;
            }
        }
        v
    }
}

fn shifted(x: &RatMatrix, c: &Rat) -> RatMatrix {
    let mut y = x.clone();
    for i in 0..x.rows() {
        y.set(i, i, x.get(i, i) - c);
    }
    y
}

/// Generalized eigenspace of `x` at `c` (coordinates) and the dimension of
/// the honest eigenspace.
fn generalized_kernel(x: &RatMatrix, c: &Rat) -> (Vec<Vec<Rat>>, usize) {
    let n = shifted(x, c);
    let first = n.nullspace().len();
    if first == 0 {
        return (vec![], 0);
    }
    let mut p = n.clone();
    let mut prev = first;
    loop {
        let next = p.mul(&n);
        let k = next.nullspace().len();
        if k == prev {
            return (p.nullspace(), first);
        }
        prev = k;
        p = next;
    }
}

fn char_poly_roots(x: &RatMatrix) -> Result<Vec<Rat>> {
    let d = x.rows();
    let samples: Vec<(Rat, Rat)> = (0..=d).map(|t| (ri(t as i64), shifted(x, &ri(t as i64)).det())).collect();
    let p = rational_interpolate(&samples, d, 0)?;
    let (roots, _) = Poly::clone(p.num()).rational_roots();
    Ok(roots)
}

enum Split {
    Parts(Vec<(Rat, Block)>),
    Stuck(Witness),
}

fn split(block: &Block, a: &SparseMat, k: usize, u0: &Rat) -> Result<Split> {
    let x = block.restrict(a)?;
    let d = block.dim();
    let mut cands: Vec<Rat> = vec![];
    for i in 0..d {
        if !cands.contains(x.get(i, i)) {
            cands.push(x.get(i, i).clone());
        }
    }
    let mut parts: Vec<(Rat, Vec<Vec<Rat>>)> = vec![];
    let mut covered = 0;
    let mut tried = vec![];
    let mut attempt = |cs: Vec<Rat>, parts: &mut Vec<(Rat, Vec<Vec<Rat>>)>, covered: &mut usize| -> Option<Witness> {
        for c in cs {
            if tried.contains(&c) {
                continue;
            }
            tried.push(c.clone());
            let (gen, honest) = generalized_kernel(&x, &c);
            if gen.is_empty() {
                continue;
            }
            if honest < gen.len() {
                let nm = shifted(&x, &c);
                let v = gen.iter().find(|v| nm.mul_vec(v).iter().any(|e| !e.is_zero())).expect("Jordan vector");
                let full = block.lift(v);
                let mut image = a.mul_vec(&full);
                for (im, f) in image.iter_mut().zip(&full) {
                    *im -= &c * f;
                }
                return Some(Witness { k, u0: u0.clone(), eigenvalue: c, vector: full, image });
            }
            *covered += gen.len();
            parts.push((c, gen));
        }
        None
    };
    if let Some(w) = attempt(cands, &mut parts, &mut covered) {
        return Ok(Split::Stuck(w));
    }
    if covered < d {
        if let Some(w) = attempt(char_poly_roots(&x)?, &mut parts, &mut covered) {
            return Ok(Split::Stuck(w));
        }
    }
    if covered < d {
        return Err(Error::Unsupported("eigenvalues outside the rationals".into()));
    }
    if parts.len() == 1 {
        return Ok(Split::Parts(vec![(parts.pop().unwrap().0, block.clone())]));
    }
    Ok(Split::Parts(
        parts
            .into_iter()
            .map(|(c, gen)| {
                let unit = block.unit.as_ref().and_then(|idx| {
                    let mut sel = vec![];
                    for v in &gen {
                        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
                        if nz.len() != 1 {
                            return None;
                        }
                        sel.push(idx[nz[0]]);
                    }
                    Some(sel)
                });
                let b = match unit {
                    Some(sel) => Block::units(block.basis[0].len(), sel),
                    None => Block { basis: gen.iter().map(|v| block.lift(v)).collect(), unit: None },
                };
                (c, b)
            })
            .collect(),
    ))
}

fn initial_blocks(ym: &YangianModule) -> Vec<Block> {
    let dim = ym.dim();
    let all = || vec![Block::units(dim, (0..dim).collect())];
    let Ok(t1) = ym.t1() else { return all() };
    let nn = ym.n();
    let mut groups: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
    for a in 0..dim {
        let mut key = vec![];
        for i in 1..=nn {
            let m = t1.get(i, i);
            if m.row(a).iter().any(|(j, _)| *j != a) {
                return all();
            }
            key.push(m.get(a, a));
        }
        groups.entry(key).or_default().push(a);
    }
    groups.into_values().map(|idx| Block::units(dim, idx)).collect()
}

/// `d_1(u), ..., d_N(u)` at `u`, checked for pairwise commutation.
fn ds_at(ym: &YangianModule, u: &Rat) -> Result<Vec<SparseMat>> {
    let nn = ym.n();
    let b = gauss(&ym.t_at(u)?, nn - 1, u)?;
    for k in 0..nn {
        for l in k + 1..nn {
            if b.d[k].mul(&b.d[l]) != b.d[l].mul(&b.d[k]) {
                return Err(Error::InternalInvariantViolation(format!("d_{} and d_{} do not commute", k + 1, l + 1)));
            }
        }
    }
    Ok(b.d)
}

fn offset() -> Rat {
    rq(3, 13)
}

/// Sample points, skipping poles, with the `d_k` at each, computed in parallel.
fn sampled_ds(ym: &YangianModule, count: usize, skip: usize) -> Result<Vec<(Rat, Vec<SparseMat>)>> {
    let mut out = vec![];
    let mut next = skip;
    while out.len() < count {
        let want = count - out.len();
        let pts: Vec<Rat> = (next..next + want).map(|i| sample_point(i, &offset())).collect();
        next += want;
        let got: Vec<Result<(Rat, Vec<SparseMat>)>> =
            pts.into_par_iter().map(|u| ds_at(ym, &u).map(|d| (u, d))).collect();
        for g in got {
            match g {
                Ok(x) => out.push(x),
                Err(Error::PoleHit(_)) => {}
                Err(e) => return Err(e),
            }
        }
        if next > skip + 100 * count + 100 {
            return Err(Error::Unsupported("too many poles among sample points".into()));
        }
    }
    Ok(out)
}

fn refine(blocks: Vec<Block>, pts: &[(Rat, Vec<SparseMat>)]) -> Result<std::result::Result<Vec<Block>, Witness>> {
    let mut blocks = blocks;
    for (u, ds) in pts {
        for (k0, a) in ds.iter().enumerate() {
            let mut next = vec![];
            for b in &blocks {
                match split(b, a, k0 + 1, u)? {
                    Split::Parts(ps) => next.extend(ps.into_iter().map(|(_, b)| b)),
                    Split::Stuck(w) => return Ok(Err(w)),
                }
            }
            blocks = next;
        }
    }
    Ok(Ok(blocks))
}

/// Joint generalized eigenspaces of all `d_k(u)` after refining at
/// `points` generic sample points, or a Jordan-block witness.
pub fn joint_eigenspaces(
    ym: &YangianModule,
    points: usize,
) -> Result<std::result::Result<Vec<Vec<Vec<Rat>>>, Witness>> {
    let pts = sampled_ds(ym, points, 0)?;
    Ok(refine(initial_blocks(ym), &pts)?.map(|bs| bs.into_iter().map(|b| b.basis).collect()))
}

/// Verdict only, refining at a few sample points. Cheaper than
/// [`gt_spectrum`] because no eigenvalue function is reconstructed.
pub fn tame_verdict(ym: &YangianModule) -> Result<Verdict> {
    Ok(match joint_eigenspaces(ym, 3)? {
        Ok(_) => Verdict::Tame,
        Err(w) => Verdict::NotTame(w),
    })
}

const REFINE_POINTS: usize = 3;

/// Simultaneous diagonalization of the Gelfand-Tsetlin operators `d_k(u)`.
///
/// Blocks start as weight spaces and are split into generalized eigenspaces
/// of every `d_k` at a few sample points. Eigenvalue functions are then
/// reconstructed from further samples; a later sample at which some block
/// is not an eigenspace triggers another round of splitting there.
pub fn gt_spectrum(ym: &YangianModule) -> Result<SpectrumReport> {
    let nn = ym.n();
    let mut pts = sampled_ds(ym, REFINE_POINTS, 0)?;
    let max_deg = 2 * ym.u_degree().max(1) * (nn + ym.max_r() + 1) + 4;
    let blocks = loop {
        let blocks = match refine(initial_blocks(ym), &pts)? {
            Ok(b) => b,
            Err(w) => {
                return Ok(SpectrumReport {
                    verdict: Verdict::NotTame(w),
                    separation: Separation::SimpleSpectrum,
                    eigen: vec![],
                })
            }
        };
        let mut escaped: Option<(Rat, Vec<SparseMat>)> = None;
        let mut failure: Option<Error> = None;
        let recon = {
            let mut s = Sampler::new(
                |x: &Rat| {
                    let ds = match ds_at(ym, x) {
                        Ok(d) => d,
                        Err(Error::PoleHit(_)) => return Ok(None),
                        Err(e) => {
                            failure = Some(e);
                            return Err(crate::ArithError::InternalCheck("sampling failed"));
                        }
                    };
                    let mut vals = Vec::with_capacity(blocks.len() * nn);
                    for b in &blocks {
                        for a in &ds {
                            match eigenvalue_on(b, a) {
                                Some(c) => vals.push(c),
                                None => {
                                    escaped = Some((x.clone(), ds));
                                    return Err(crate::ArithError::InternalCheck("block split"));
                                }
                            }
                        }
                    }
                    Ok(Some(vals))
                },
                offset() + rq(1, 7),
                pts.iter().map(|(u, _)| u.clone()).collect(),
            );
            s.reconstruct(max_deg)
        };
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(p) = escaped {
            pts.push(p);
            continue;
        }
        break (blocks, recon?);
    };
    let (blocks, funcs) = blocks;
    let mut eigen = vec![];
    for (bi, b) in blocks.iter().enumerate() {
        let d: Vec<RatFunc> = funcs[bi * nn..(bi + 1) * nn].to_vec();
        for v in &b.basis {
            eigen.push(EigenEntry { vector: v.clone(), d: d.clone() });
        }
    }
    let mut coll = vec![];
    for i in 0..eigen.len() {
        for j in i + 1..eigen.len() {
            if eigen[i].d == eigen[j].d {
                coll.push((i, j));
            }
        }
    }
    let separation = if coll.is_empty() { Separation::SimpleSpectrum } else { Separation::Collisions(coll) };
    Ok(SpectrumReport { verdict: Verdict::Tame, separation, eigen })
}

/// The scalar by which `a` acts on the span of `b`, if it does.
fn eigenvalue_on(b: &Block, a: &SparseMat) -> Option<Rat> {
    let v0 = &b.basis[0];
    let i0 = v0.iter().position(|x| !x.is_zero())?;
    let av0 = a.mul_vec(v0);
    let c = &av0[i0] / &v0[i0];
    for v in &b.basis {
        let av = a.mul_vec(v);
        if av.iter().zip(v).any(|(x, y)| x != &(&c * y)) {
            return None;
        }
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::glmn::Module;
    use crate::gt::{SuperShape, Weight};

    fn natural(h: Rat) -> YangianModule {
        let sh = SuperShape::new(1, 1).unwrap();
        YangianModule::evaluation(Arc::new(Module::build(&Weight::natural(sh)).unwrap()), h)
    }

    #[test]
    fn gl11_tensor_verdicts() {
        let w = YangianModule::tensor(vec![natural(ri(0)), natural(rq(1, 2))]).unwrap();
        let rep = gt_spectrum(&w).unwrap();
        assert!(rep.is_tame());
        assert_eq!(rep.eigen.len(), 4);
        assert_eq!(rep.separation, Separation::SimpleSpectrum);
        let w = YangianModule::tensor(vec![natural(ri(0)), natural(ri(0))]).unwrap();
        let rep = gt_spectrum(&w).unwrap();
        let Verdict::NotTame(wit) = rep.verdict else { panic!("expected a witness") };
        assert!(wit.image.iter().any(|x| !x.is_zero()));
        assert_eq!(tame_verdict(&w).unwrap(), Verdict::NotTame(wit));
    }

    #[test]
    fn report_json_shape() {
        let rep = gt_spectrum(&natural(ri(0))).unwrap();
        let j = rep.to_json();
        assert_eq!(j["verdict"], "tame");
        assert_eq!(j["eigen"].as_array().unwrap().len(), 2);
        assert!(j["eigen"][0]["d"]["2"].is_string());
    }
}
