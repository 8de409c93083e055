//! Highest weights, Drinfeld polynomials, the non-crossing conditions for
//! tensor products of evaluation modules, and the passage from such a tensor
//! product to a skew module times evaluation modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::interp::{sample_point, Sampler};
use crate::arith::rat::{is_int, rat_str};
use crate::arith::{ri, rq, Poly, Rat, RatFunc, RatMatrix, SparseMat};
use crate::glmn::Module;
use crate::gt::{check_admissible, enumerate_patterns, GTPattern, SuperShape, Weight};
use crate::spectra::zeta;
use crate::yangian::YangianModule;
use crate::{Error, Result};

/// Eigenvalues `lambda_i(u)` of `t_ii(u)` on a highest vector, in the
/// module's normalization (rational for skew factors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightSeries {
    pub shape: SuperShape,
    pub lambda: Vec<RatFunc>,
    pub vector: Vec<Rat>,
}

/// Roots of `P_k` (`k != m`) and of `Q_0`, `Q_1`, each sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldData {
    pub shape: SuperShape,
    pub p: BTreeMap<usize, Vec<Rat>>,
    pub q0: Vec<Rat>,
    pub q1: Vec<Rat>,
}

#[derive(Serialize)]
struct DrinfeldJson {
    #[serde(rename = "P")]
    p: BTreeMap<String, Vec<String>>,
    #[serde(rename = "Q0")]
    q0: Vec<String>,
    #[serde(rename = "Q1")]
    q1: Vec<String>,
}

impl DrinfeldData {
    pub fn to_json(&self) -> serde_json::Value {
        let s = |v: &[Rat]| v.iter().map(rat_str).collect::<Vec<_>>();
        serde_json::to_value(DrinfeldJson {
            p: self.p.iter().map(|(k, v)| (k.to_string(), s(v))).collect(),
            q0: s(&self.q0),
            q1: s(&self.q1),
        })
        .expect("serializable")
    }

    /// The polynomial `P_k(u)`.
    pub fn p_poly(&self, k: usize) -> Poly {
        Poly::from_roots(self.p.get(&k).map(|v| v.as_slice()).unwrap_or(&[]))
    }
}

/// Evaluation modules `L_h(lambda^(1)) (x) ... (x) L_h(lambda^(M))` with a
/// common shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCollection {
    pub shape: SuperShape,
    pub weights: Vec<Weight>,
    pub h: Rat,
}

impl ThetaCollection {
    pub fn new(weights: Vec<Weight>, h: Rat) -> Result<Self> {
        let shape = weights.first().ok_or_else(|| Error::Unsupported("empty collection".into()))?.shape;
        if weights.iter().any(|w| w.shape != shape) {
            return Err(Error::ShapeMismatch);
        }
        if let Some(w) = weights.iter().find(|w| !w.is_covariant()) {
            return Err(crate::GtError::NotCovariant(w.to_string()).into());
        }
        Ok(ThetaCollection { shape, weights, h })
    }

    pub fn module(&self) -> Result<YangianModule> {
        let fs = self
            .weights
            .iter()
            .map(|w| Ok(YangianModule::evaluation(Arc::new(Module::build(w)?), self.h.clone())))
            .collect::<Result<Vec<_>>>()?;
        YangianModule::tensor(fs)
    }

    pub fn dim(&self) -> Result<usize> {
        self.weights.iter().try_fold(1, |acc, w| Ok(acc * enumerate_patterns(w)?.len()))
    }

    /// Largest `k` in `1..=m+n` with `lambda_k > 0`, or 0.
    pub fn k_index(&self, s: usize) -> usize {
        let w = &self.weights[s];
        (1..=self.shape.size()).rev().find(|&k| w.at(k) > 0).unwrap_or(0)
    }

    /// `(i_s, j_s)`: the first and last `i` in `1..n-1` with
    /// `lambda_{m+i} > lambda_{m+i+1}`; `(0, n)` when the odd part is constant.
    pub fn ij_index(&self, s: usize) -> (usize, usize) {
        let (m, n) = (self.shape.m, self.shape.n);
        let w = &self.weights[s];
        let drops: Vec<usize> = (1..n).filter(|&i| w.at(m + i) > w.at(m + i + 1)).collect();
        if (1..n).all(|i| w.at(m + i) == w.at(m + i + 1)) {
            return (0, n);
        }
        (*drops.first().unwrap(), *drops.last().unwrap())
    }
}

fn raising_kernel(ym: &YangianModule) -> Result<Vec<Vec<Rat>>> {
    let dim = ym.dim();
    let nn = ym.n();
    // Restrict to the lexicographically highest gl-weight when the Cartan
    // part is diagonal in the basis; a highest vector must live there.
    let cols: Vec<usize> = (|| {
        let t1 = ym.t1().ok()?;
        let mut keys = Vec::with_capacity(dim);
        for a in 0..dim {
            let mut key = vec![];
            for i in 1..=nn {
                let m = t1.get(i, i);
                if m.row(a).iter().any(|(j, _)| *j != a) {
                    return None;
                }
                let v = m.get(a, a);
                key.push(if ym.shape.parity(i) == 1 { -v } else { v });
            }
            keys.push(key);
        }
        let top = keys.iter().max()?.clone();
        Some((0..dim).filter(|&a| keys[a] == top).collect())
    })()
    .unwrap_or_else(|| (0..dim).collect());
    let want = ym.u_degree().max(1) * (ym.max_r() + 1) + 2;
    let mut rows: Vec<Vec<Rat>> = vec![];
    let (mut got, mut i) = (0, 0);
    while got < want {
        let u = sample_point(i, &rq(7, 19));
        i += 1;
        if i > 100 * want + 100 {
            return Err(Error::Unsupported("too many poles among sample points".into()));
        }
        let t = match ym.t_at(&u) {
            Ok(t) => t,
            Err(Error::PoleHit(_)) => continue,
            Err(e) => return Err(e),
        };
        got += 1;
        for a in 1..=nn {
            for b in a + 1..=nn {
                let r: SparseMat = t.get(a, b).restrict(&(0..dim).collect::<Vec<_>>(), &cols);
                for row in 0..dim {
                    if !r.row(row).is_empty() {
                        let mut v = vec![Rat::zero(); cols.len()];
                        for (j, x) in r.row(row) {
                            v[*j] = x.clone();
                        }
                        rows.push(v);
                    }
                }
            }
        }
    }
    let ker = if rows.is_empty() {
        (0..cols.len())
            .map(|c| {
                let mut v = vec![Rat::zero(); cols.len()];
                v[c] = ri(1);
                v
            })
            .collect()
    } else {
        RatMatrix::from_rows(rows).nullspace()
    };
    Ok(ker
        .into_iter()
        .map(|k| {
            let mut v = vec![Rat::zero(); dim];
            for (c, x) in cols.iter().zip(k) {
                v[*c] = x;
            }
            v
        })
        .collect())
}

/// Eigenvalues of the `t_ii(u)` on a vector killed by every `t_ij(u)`,
/// `i < j`, of highest gl-weight.
pub fn highest_weight_series(ym: &YangianModule) -> Result<HighestWeightSeries> {
    let ker = raising_kernel(ym)?;
    let v = ker.into_iter().next().ok_or(Error::NoHighestVector)?;
    let i0 = v.iter().position(|x| !x.is_zero()).expect("nonzero kernel vector");
    let nn = ym.n();
    let mut failure = None;
    let funcs = {
        let mut s = Sampler::new(
            |x: &Rat| {
                let t = match ym.t_at(x) {
                    Ok(t) => t,
                    Err(Error::PoleHit(_)) => return Ok(None),
                    Err(e) => {
                        failure = Some(e);
                        return Err(crate::ArithError::InternalCheck("t evaluation failed"));
                    }
                };
                let mut out = Vec::with_capacity(nn);
                for i in 1..=nn {
                    let w = t.get(i, i).mul_vec(&v);
                    let c = &w[i0] / &v[i0];
                    if w.iter().zip(&v).any(|(a, b)| a != &(&c * b)) {
                        failure = Some(Error::NotEigen);
                        return Err(crate::ArithError::InternalCheck("not an eigenvector"));
                    }
                    out.push(c);
                }
                Ok(Some(out))
            },
            rq(2, 11),
            vec![],
        );
        s.reconstruct(2 * ym.u_degree().max(1) * (ym.max_r() + 1) + 4)
    };
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(HighestWeightSeries { shape: ym.shape, lambda: funcs?, vector: v })
}

fn split_roots(p: &Poly) -> Option<Vec<Rat>> {
    let (roots, rest) = p.rational_roots();
    rest.is_constant().then_some(roots)
}

/// Roots of the monic `P` with `P(u + step) / P(u) = num / den`, where
/// `num`, `den` are the root lists of a reduced ratio.
fn root_strings(num: &[Rat], den: &[Rat], step: i64) -> Option<Vec<Rat>> {
    if num.len() != den.len() {
        return None;
    }
    // Each string a..b of roots contributes a - 1 to `num` and b to `den`
    // (step +1), or b + 1 and a (step -1); the multiplicity of x is then a
    // difference of counts and does not depend on how strings are paired.
    let (lo_side, hi_side) = if step == 1 { (num, den) } else { (den, num) };
    let mut out = vec![];
    let mut classes: Vec<Rat> = vec![];
    for a in lo_side.iter().chain(hi_side) {
        let f = a - a.floor();
        if !classes.contains(&f) {
            classes.push(f);
        }
    }
    for f in classes {
        let lo: Vec<&Rat> = lo_side.iter().filter(|a| *a - a.floor() == f).collect();
        let hi: Vec<&Rat> = hi_side.iter().filter(|a| *a - a.floor() == f).collect();
        if lo.len() != hi.len() {
            return None;
        }
        let Some(&start) = lo.iter().chain(&hi).min() else { continue };
        let end = lo.iter().chain(&hi).max().unwrap();
        let mut x = start.clone();
        while &x <= *end {
            let (below_lo, upto_lo) = (lo.iter().filter(|a| ***a < x).count(), lo.iter().filter(|a| ***a <= x).count());
            let (below_hi, upto_hi) = (hi.iter().filter(|a| ***a < x).count(), hi.iter().filter(|a| ***a <= x).count());
            let mult = if step == 1 { below_lo as i64 - below_hi as i64 } else { upto_lo as i64 - upto_hi as i64 };
            if mult < 0 {
                return None;
            }
            for _ in 0..mult {
                out.push(x.clone());
            }
            x += ri(1);
        }
    }
    out.sort();
    Some(out)
}

/// Drinfeld data from the ratios of consecutive highest-weight components.
pub fn drinfeld_data(hw: &HighestWeightSeries) -> Result<DrinfeldData> {
    let sh = hw.shape;
    let nn = sh.size();
    let mut p = BTreeMap::new();
    let (mut q0, mut q1) = (vec![], vec![]);
    for k in 1..nn {
        let r = &hw.lambda[k - 1] / &hw.lambda[k];
        if r.num().lead() != r.den().lead() || r.num().degree() != r.den().degree() {
            return Err(Error::NotDominant(k));
        }
        let num = split_roots(r.num()).ok_or(Error::NotDominant(k))?;
        let den = split_roots(r.den()).ok_or(Error::NotDominant(k))?;
        if k == sh.m {
            q0 = num;
            q1 = den;
            continue;
        }
        let step = if sh.parity(k) == 0 { 1 } else { -1 };
        // P(u + step) vanishes at z - step for every root z of P.
        let roots = root_strings(&num, &den, step).ok_or(Error::NotDominant(k))?;
        p.insert(k, roots);
    }
    Ok(DrinfeldData { shape: sh, p, q0, q1 })
}

/// Closed-form Drinfeld data of a tensor product of evaluation modules
/// `L_{h_s}(lambda^(s))`, with common roots of `Q_0` and `Q_1` cancelled.
pub fn drinfeld_of_factors(shape: SuperShape, factors: &[(Weight, Rat)]) -> DrinfeldData {
    let (m, n) = (shape.m, shape.n);
    let mut p: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
    for k in (1..m).chain(m + 1..m + n) {
        p.insert(k, vec![]);
    }
    let (mut q0, mut q1) = (vec![], vec![]);
    for (w, h) in factors {
        for i in 1..m {
            for t in w.at(i + 1)..w.at(i) {
                p.get_mut(&i).unwrap().push(-ri(t) - h);
            }
        }
        for j in 1..n {
            for t in w.at(m + j + 1)..w.at(m + j) {
                p.get_mut(&(m + j)).unwrap().push(ri(t) - h);
            }
        }
        if m > 0 && n > 0 {
            q0.push(-ri(w.at(m)) - h);
            q1.push(ri(w.at(m + 1)) - h);
        }
    }
    let mut i = 0;
    while i < q0.len() {
        // Q_0 = prod (u - a) over the stored roots a; Q_1 likewise.
        if let Some(j) = q1.iter().position(|b| *b == q0[i]) {
            q0.remove(i);
            q1.remove(j);
        } else {
            i += 1;
        }
    }
    for v in p.values_mut() {
        v.sort();
    }
    q0.sort();
    q1.sort();
    DrinfeldData { shape, p, q0, q1 }
}

pub fn drinfeld_of_tensor(theta: &ThetaCollection) -> DrinfeldData {
    let fs: Vec<(Weight, Rat)> = theta.weights.iter().map(|w| (w.clone(), theta.h.clone())).collect();
    drinfeld_of_factors(theta.shape, &fs)
}

/// Whether the diagonal eigenvalue tuples `(prod_s zeta_{i, Lambda^(s)})_i`
/// are pairwise distinct over all multi-patterns.
pub fn strong_noncrossing(theta: &ThetaCollection) -> Result<bool> {
    Ok(noncrossing_collision(theta)?.is_none())
}

/// Two multi-patterns sharing every diagonal eigenvalue, if any.
pub fn noncrossing_collision(theta: &ThetaCollection) -> Result<Option<(Vec<GTPattern>, Vec<GTPattern>)>> {
    let nn = theta.shape.size();
    let per: Vec<Vec<(GTPattern, Vec<RatFunc>)>> = theta
        .weights
        .iter()
        .map(|w| {
            Ok(enumerate_patterns(w)?
                .into_iter()
                .map(|p| {
                    let z = (1..=nn).map(|k| zeta(&p, k, 0, &theta.h)).collect();
                    (p, z)
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut seen: BTreeMap<String, Vec<GTPattern>> = BTreeMap::new();
    let mut idx = vec![0usize; per.len()];
    loop {
        let mut tuple = vec![RatFunc::one(); nn];
        let mut labels = vec![];
        for (s, &i) in idx.iter().enumerate() {
            let (p, z) = &per[s][i];
            for k in 0..nn {
                tuple[k] = &tuple[k] * &z[k];
            }
            labels.push(p.clone());
        }
        let key = tuple.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(";");
        if let Some(prev) = seen.insert(key, labels.clone()) {
            return Ok(Some((prev, labels)));
        }
        let mut s = per.len();
        loop {
            if s == 0 {
                return Ok(None);
            }
            s -= 1;
            idx[s] += 1;
            if idx[s] < per[s].len() {
                break;
            }
            idx[s] = 0;
        }
    }
}

/// Which pairs `(s, t)` the inequalities of [`arithmetic_noncrossing_with`]
/// are imposed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairReading {
    /// Every ordered pair `s != t`.
    AllPairs,
    /// Neighbours only: after sorting by `lambda_1` descending for the even
    /// inequality, and by `lambda_{m+1}` ascending for the odd one.
    AdjacentSorted,
}

/// The inequalities of the tameness criterion for tensor products of
/// evaluation modules over every ordered pair; see [`arithmetic_noncrossing_with`].
pub fn arithmetic_noncrossing(theta: &ThetaCollection) -> Result<bool> {
    arithmetic_noncrossing_with(theta, PairReading::AllPairs)
}

/// The inequalities of the tameness criterion, with `k_s`, `i_s`, `j_s` as in
/// [`ThetaCollection::k_index`] and [`ThetaCollection::ij_index`]:
/// if `lambda_1^(s) >= lambda_1^(t)` then
/// `max(0, lambda_m^(s) - n) - lambda_1^(t) >= k_s - 1`, and if
/// `lambda_{m+1}^(s) <= lambda_{m+1}^(t)` and `j_t >= i_s` then
/// `lambda_{m+n}^(t) - lambda_{m+1}^(s) >= j_t - i_s + 1`.
pub fn arithmetic_noncrossing_with(theta: &ThetaCollection, reading: PairReading) -> Result<bool> {
    let (m, n) = (theta.shape.m, theta.shape.n);
    if n == 0 || m == 0 {
        return Err(Error::HypothesisNotMet("needs m, n >= 1".into()));
    }
    if theta.weights.iter().any(|w| w.is_zero()) {
        return Err(Error::HypothesisNotMet("every weight must be nontrivial".into()));
    }
    let w = &theta.weights;
    let even = |s: usize, t: usize| {
        !(w[s].at(1) >= w[t].at(1) && (w[s].at(m) - n as i64).max(0) - w[t].at(1) < theta.k_index(s) as i64 - 1)
    };
    let odd = |s: usize, t: usize| {
        let (is, _) = theta.ij_index(s);
        let (_, jt) = theta.ij_index(t);
        !(w[s].at(m + 1) <= w[t].at(m + 1) && jt >= is && w[t].at(m + n) - w[s].at(m + 1) < jt as i64 - is as i64 + 1)
    };
    if reading == PairReading::AllPairs {
        let pairs = (0..w.len()).flat_map(|s| (0..w.len()).map(move |t| (s, t)));
        return Ok(pairs.filter(|(s, t)| s != t).all(|(s, t)| even(s, t) && odd(s, t)));
    }
    let mut by_top: Vec<usize> = (0..w.len()).collect();
    by_top.sort_by_key(|&s| std::cmp::Reverse(w[s].at(1)));
    let mut by_odd: Vec<usize> = (0..w.len()).collect();
    by_odd.sort_by_key(|&s| w[s].at(m + 1));
    Ok(by_top.windows(2).all(|p| even(p[0], p[1])) && by_odd.windows(2).all(|p| odd(p[0], p[1])))
}

/// Tameness predicate for `V_{h_1}(Theta_1) (x) ... (x) V_{h_N}(Theta_N)`:
/// shifts pairwise non-congruent modulo the integers and each collection
/// strongly non-crossing.
pub fn tame_tensor_predicate(collections: &[ThetaCollection]) -> Result<bool> {
    for a in 0..collections.len() {
        for b in a + 1..collections.len() {
            if is_int(&(&collections[a].h - &collections[b].h)) {
                return Ok(false);
            }
        }
    }
    for c in collections {
        if !strong_noncrossing(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The skew factor and remaining evaluation factors whose tensor product has
/// the Drinfeld data of `V_h(Theta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPresentation {
    /// Weight over gl(m+r|n).
    pub lambda: Weight,
    pub mu: Vec<i64>,
    pub r: usize,
    pub q: Vec<i64>,
    /// `(lambda_m, ..., lambda_m | lambda_{m+1}, ..., lambda_{m+n})` for the
    /// first `M - 1` weights.
    pub tail: Vec<Weight>,
    pub h: Rat,
}

impl SkewPresentation {
    pub fn module(&self) -> Result<YangianModule> {
        let mut fs = vec![YangianModule::skew(&self.lambda, &self.mu, self.h.clone())?];
        for w in &self.tail {
            fs.push(YangianModule::evaluation(Arc::new(Module::build(w)?), self.h.clone()));
        }
        YangianModule::tensor(fs)
    }
}

/// Builds `lambda / mu` and the tail weights from a strongly non-crossing
/// collection ordered so that `lambda_{i+1}^(s) > lambda_i^(s+1) - 1`.
pub fn theta_to_skew(theta: &ThetaCollection) -> Result<SkewPresentation> {
    let sh = theta.shape;
    let (m, n) = (sh.m, sh.n);
    let w = &theta.weights;
    let big_m = w.len();
    if m == 0 {
        return Err(Error::HypothesisNotMet("needs m >= 1".into()));
    }
    for s in 0..big_m - 1 {
        for i in 1..m {
            if w[s].at(i + 1) <= w[s + 1].at(i) - 1 {
                return Err(Error::OrderingViolation(format!(
                    "factor {} against factor {} at index {i}",
                    s + 1,
                    s + 2
                )));
            }
        }
    }
    if !strong_noncrossing(theta)? {
        return Err(Error::NotNoncrossing);
    }
    let mut q = vec![1i64];
    for s in 0..big_m - 1 {
        q.push(q[s] + w[s].at(m) - w[s + 1].at(1));
    }
    let qm = *q.last().unwrap();
    let r = qm - 1;
    if r < 0 || q.windows(2).any(|p| p[1] - p[0] < m as i64 - 1) {
        return Err(Error::HypothesisNotMet(format!("q = {q:?} is not spaced by at least m - 1")));
    }
    let mut even: Vec<i64> = (1..m).map(|i| w[0].at(i) - qm + q[0]).collect();
    for s in 0..big_m - 1 {
        let v = w[s].at(m) - qm + q[s];
        let count = q[s + 1] - q[s] - m as i64 + 2;
        // For m = 1 consecutive blocks overlap in one entry.
        let count = if m == 1 && s > 0 { count - 1 } else { count };
        even.extend(std::iter::repeat(v).take(count.max(0) as usize));
        if s + 1 < big_m - 1 {
            even.extend((2..m).map(|i| w[s + 1].at(i) - qm + q[s + 1]));
        }
    }
    if big_m == 1 {
        even.push(w[0].at(m));
    } else {
        even.extend((2..=m).map(|i| w[big_m - 1].at(i)));
    }
    let r = r as usize;
    if even.len() != m + r {
        return Err(Error::InternalInvariantViolation(format!(
            "built {} even entries, expected {}",
            even.len(),
            m + r
        )));
    }
    let mut entries = even;
    entries.extend((m + 1..=m + n).map(|j| w[big_m - 1].at(j)));
    let lambda = Weight::new(SuperShape { m: m + r, n }, entries)?;
    let mut mu = vec![];
    for s in 0..big_m - 1 {
        mu.extend(std::iter::repeat(w[s].at(m) - qm + q[s]).take((q[s + 1] - q[s]) as usize));
    }
    check_admissible(&lambda, &mu)?;
    if !lambda.is_covariant() {
        return Err(crate::GtError::NotCovariant(lambda.to_string()).into());
    }
    let tail = w[..big_m - 1]
        .iter()
        .map(|x| {
            let e = std::iter::repeat(x.at(m)).take(m).chain((m + 1..=m + n).map(|j| x.at(j))).collect();
            Weight::new(sh, e)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(SkewPresentation { lambda, mu, r, q, tail, h: theta.h.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(m: usize, n: usize) -> SuperShape {
        SuperShape::new(m, n).unwrap()
    }

    fn wt(s: SuperShape, t: &str) -> Weight {
        Weight::parse(s, t).unwrap()
    }

    #[test]
    fn highest_weight_examples() {
        let s = sh(1, 1);
        let triv = ThetaCollection::new(vec![Weight::zero(s)], rq(1, 3)).unwrap();
        let hw = highest_weight_series(&triv.module().unwrap()).unwrap();
        assert_eq!(hw.lambda, vec![RatFunc::linear(rq(1, 3)); 2]);
        let nat = ThetaCollection::new(vec![Weight::natural(s)], ri(0)).unwrap();
        let hw = highest_weight_series(&nat.module().unwrap()).unwrap();
        assert_eq!(hw.lambda, vec![RatFunc::linear(ri(1)), RatFunc::linear(ri(0))]);
        let a = YangianModule::evaluation(Arc::new(Module::build(&Weight::natural(s)).unwrap()), ri(0));
        let b = YangianModule::evaluation(Arc::new(Module::build(&Weight::natural(s)).unwrap()), rq(1, 2));
        let hw = highest_weight_series(&YangianModule::tensor(vec![a, b]).unwrap()).unwrap();
        assert_eq!(hw.lambda[0], &RatFunc::linear(ri(1)) * &RatFunc::linear(rq(3, 2)));
        assert_eq!(hw.lambda[1], &RatFunc::linear(ri(0)) * &RatFunc::linear(rq(1, 2)));
    }

    #[test]
    fn drinfeld_examples() {
        let s = sh(1, 1);
        let nat = ThetaCollection::new(vec![Weight::natural(s)], ri(0)).unwrap();
        let d = drinfeld_data(&highest_weight_series(&nat.module().unwrap()).unwrap()).unwrap();
        assert_eq!((d.q0.clone(), d.q1.clone()), (vec![ri(-1)], vec![ri(0)]));
        assert_eq!(d, drinfeld_of_tensor(&nat));
        let triv = ThetaCollection::new(vec![Weight::zero(s)], ri(0)).unwrap();
        let d = drinfeld_data(&highest_weight_series(&triv.module().unwrap()).unwrap()).unwrap();
        assert!(d.q0.is_empty() && d.q1.is_empty());
        assert_eq!(d, drinfeld_of_tensor(&triv));
        let t = ThetaCollection::new(vec![wt(sh(2, 1), "2,1|0")], ri(0)).unwrap();
        let d = drinfeld_of_tensor(&t);
        assert_eq!(d.p[&1], vec![ri(-1)]);
        assert_eq!((d.q0.clone(), d.q1.clone()), (vec![ri(-1)], vec![ri(0)]));
        assert_eq!(d.to_json()["P"]["1"][0], "-1");
    }

    #[test]
    fn root_strings_handle_merged_strings() {
        // P = (u-1)(u-2)(u-3) split as 1..2 and 3..3 telescopes to u / (u-3).
        assert_eq!(root_strings(&[ri(0)], &[ri(3)], 1), Some(vec![ri(1), ri(2), ri(3)]));
        assert_eq!(root_strings(&[ri(4)], &[ri(1)], -1), Some(vec![ri(1), ri(2), ri(3)]));
        assert_eq!(root_strings(&[ri(3)], &[ri(0)], 1), None);
        assert_eq!(root_strings(&[rq(1, 2)], &[ri(0)], 1), None);
    }

    #[test]
    fn noncrossing_examples() {
        let s = sh(1, 1);
        let bad = ThetaCollection::new(vec![wt(s, "1|0"), wt(s, "1|0")], ri(0)).unwrap();
        assert!(!strong_noncrossing(&bad).unwrap());
        assert!(!arithmetic_noncrossing(&bad).unwrap());
        let good = ThetaCollection::new(vec![wt(s, "3|1"), wt(s, "1|0")], ri(0)).unwrap();
        assert!(strong_noncrossing(&good).unwrap());
        let single = ThetaCollection::new(vec![wt(sh(2, 1), "2,1|1")], ri(0)).unwrap();
        assert!(strong_noncrossing(&single).unwrap());
        assert!(arithmetic_noncrossing(&single).unwrap());
        let half = ThetaCollection::new(vec![wt(s, "1|0")], rq(1, 2)).unwrap();
        let zero = ThetaCollection::new(vec![wt(s, "1|0")], ri(0)).unwrap();
        assert!(tame_tensor_predicate(&[zero.clone(), half]).unwrap());
        assert!(!tame_tensor_predicate(&[zero.clone(), ThetaCollection { h: ri(1), ..zero }]).unwrap());
    }

    #[test]
    fn theta_to_skew_gl11() {
        let s = sh(1, 1);
        let t = ThetaCollection::new(vec![wt(s, "3|1"), wt(s, "1|0")], ri(0)).unwrap();
        let sp = theta_to_skew(&t).unwrap();
        assert_eq!(sp.q, vec![1, 3]);
        assert_eq!(sp.r, 2);
        assert_eq!(sp.lambda.entries, vec![1, 1, 1, 0]);
        assert_eq!(sp.mu, vec![1, 1]);
        assert_eq!(sp.tail, vec![wt(s, "3|1")]);
        let single = ThetaCollection::new(vec![wt(s, "2|1")], ri(0)).unwrap();
        let sp = theta_to_skew(&single).unwrap();
        assert_eq!((sp.r, sp.lambda.clone(), sp.tail.len()), (0, wt(s, "2|1"), 0));
    }
}
