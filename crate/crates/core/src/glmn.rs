//! Simple covariant gl(m|n)-modules realized on their Gelfand-Tsetlin basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::rat::rat_str;
use crate::arith::{ri, Rat, RatMatrix, SparseMat};
use crate::gt::{check_admissible, enumerate_patterns, GTPattern, SuperShape, Weight, ZZDegree};
use crate::report::Report;
use crate::{Error, Result};

/// `L(lambda)` with the Chevalley generators stored as sparse matrices.
/// Column `a` of a matrix is the image of the basis vector `basis[a]`.
#[derive(Clone, Debug)]
pub struct Module {
    pub shape: SuperShape,
    pub weight: Weight,
    pub basis: Vec<GTPattern>,
    pub parity: Vec<u8>,
    diag: Vec<SparseMat>,
    up: Vec<SparseMat>,
    down: Vec<SparseMat>,
    all: OnceLock<Vec<SparseMat>>,
}

/// Product of `nums` over product of `dens`, after cancelling equal factors.
fn ratio(mut nums: Vec<i64>, mut dens: Vec<i64>) -> Result<Rat> {
    let mut i = 0;
    while i < nums.len() {
        if let Some(p) = dens.iter().position(|&d| d == nums[i]) {
            dens.swap_remove(p);
            nums.swap_remove(i);
        } else {
            i += 1;
        }
    }
    if nums.contains(&0) {
        return Ok(Rat::zero());
    }
    if dens.contains(&0) {
        return Err(Error::InternalInvariantViolation("zero denominator in action coefficient".into()));
    }
    let n: Rat = nums.iter().fold(Rat::one(), |a, &x| a * ri(x));
    let d: Rat = dens.iter().fold(Rat::one(), |a, &x| a * ri(x));
    Ok(n / d)
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Coefficient of `xi_{Lambda + delta_ki}` in `E_{k,k+1} xi_Lambda`.
fn coef_up(p: &GTPattern, k: usize, i: usize) -> Result<Rat> {
    let m = p.shape.m;
    let l = |a: usize, b: usize| p.l(a, b);
    let li = l(k, i);
    if k < m {
        let nums = (1..=k + 1).map(|j| l(k + 1, j) - li).collect();
        let dens = (1..=k).filter(|&j| j != i).map(|j| l(k, j) - li).collect();
        return Ok(-ratio(nums, dens)?);
    }
    if k == m {
        let t = p.theta(m, i);
        if t == 0 {
            return Ok(Rat::zero());
        }
        let sg = sign(i as i64 - 1 + (1..i).map(|j| p.theta(m, j)).sum::<i64>());
        let nums = (1..i).map(|j| l(m, j) - li - 1).collect();
        let mut dens: Vec<i64> = (i + 1..=m).map(|j| l(m, j) - li).collect();
        dens.extend((1..=m).filter(|&j| j != i).map(|j| l(m + 1, j) - li - 1));
        return Ok(ratio(nums, dens)? * ri(t * sg));
    }
    if i <= m {
        let (tk, tk1) = (p.theta(k, i), p.theta(k - 1, i));
        if tk * (1 - tk1) == 0 {
            return Ok(Rat::zero());
        }
        let sg = sign((1..i).map(|j| p.theta(k, j)).sum::<i64>() + (i + 1..=m).map(|j| p.theta(k - 1, j)).sum::<i64>());
        let nums = (1..=m).filter(|&j| j != i).map(|j| l(k, j) - li - 1).collect();
        let dens = (1..=m).filter(|&j| j != i).map(|j| l(k + 1, j) - li - 1).collect();
        return Ok(ratio(nums, dens)? * ri(sg));
    }
    let mut nums = vec![];
    let mut dens = vec![];
    for j in 1..=m {
        nums.push(l(k, j) - li);
        nums.push(l(k, j) - li + 1);
        dens.push(l(k + 1, j) - li);
        dens.push(l(k - 1, j) - li + 1);
    }
    nums.extend((m + 1..=k + 1).map(|j| l(k + 1, j) - li));
    dens.extend((m + 1..=k).filter(|&j| j != i).map(|j| l(k, j) - li));
    Ok(-ratio(nums, dens)?)
}

/// Coefficient of `xi_{Lambda - delta_ki}` in `E_{k+1,k} xi_Lambda`.
fn coef_down(p: &GTPattern, k: usize, i: usize) -> Result<Rat> {
    let m = p.shape.m;
    let l = |a: usize, b: usize| p.l(a, b);
    let li = l(k, i);
    if k < m {
        let nums = (1..k).map(|j| l(k - 1, j) - li).collect();
        let dens = (1..=k).filter(|&j| j != i).map(|j| l(k, j) - li).collect();
        return ratio(nums, dens);
    }
    if k == m {
        let t = p.theta(m, i);
        if t == 1 {
            return Ok(Rat::zero());
        }
        let sg = sign(i as i64 - 1 + (1..i).map(|j| p.theta(m, j)).sum::<i64>());
        let mut nums = vec![li - l(m + 1, m + 1)];
        nums.extend((i + 1..=m).map(|j| l(m, j) - li + 1));
        nums.extend((1..m).map(|j| l(m - 1, j) - li));
        let dens = (1..i).map(|j| l(m, j) - li).collect();
        return Ok(ratio(nums, dens)? * ri((1 - t) * sg));
    }
    if i <= m {
        let (tk, tk1) = (p.theta(k, i), p.theta(k - 1, i));
        if tk1 * (1 - tk) == 0 {
            return Ok(Rat::zero());
        }
        let sg = sign((1..i).map(|j| p.theta(k, j)).sum::<i64>() + (i + 1..=m).map(|j| p.theta(k - 1, j)).sum::<i64>());
        let mut nums: Vec<i64> = (1..=m).filter(|&j| j != i).map(|j| l(k, j) - li + 1).collect();
        nums.extend((m + 1..=k + 1).map(|j| l(k + 1, j) - li));
        nums.extend((m + 1..k).map(|j| l(k - 1, j) - li + 1));
        let mut dens: Vec<i64> = (1..=m).filter(|&j| j != i).map(|j| l(k - 1, j) - li + 1).collect();
        dens.extend((m + 1..=k).map(|j| l(k, j) - li));
        dens.extend((m + 1..=k).map(|j| l(k, j) - li + 1));
        return Ok(ratio(nums, dens)? * ri(sg));
    }
    let nums = (m + 1..k).map(|j| l(k - 1, j) - li).collect();
    let dens = (m + 1..=k).filter(|&j| j != i).map(|j| l(k, j) - li).collect();
    ratio(nums, dens)
}

impl Module {
    pub fn build(w: &Weight) -> Result<Module> {
        let basis = enumerate_patterns(w)?;
        Module::from_basis(w, basis)
    }

    fn from_basis(w: &Weight, basis: Vec<GTPattern>) -> Result<Module> {
        let shape = w.shape;
        let nn = shape.size();
        let d = basis.len();
        let index: HashMap<Vec<i64>, usize> = basis.iter().enumerate().map(|(a, p)| (p.order_key(), a)).collect();
        let diag = (1..=nn)
            .map(|k| SparseMat::diagonal(&basis.iter().map(|p| ri(p.diag_weight(k))).collect::<Vec<_>>()))
            .collect();
        let mut up = vec![];
        let mut down = vec![];
        for k in 1..nn {
            let mut tu = vec![];
            let mut td = vec![];
            for (a, p) in basis.iter().enumerate() {
                for i in 1..=k {
                    if let Some(q) = p.shift(k, i, 1)? {
                        if let Some(&b) = index.get(&q.order_key()) {
                            tu.push((b, a, coef_up(p, k, i)?));
                        }
                    }
                    if let Some(q) = p.shift(k, i, -1)? {
                        if let Some(&b) = index.get(&q.order_key()) {
                            td.push((b, a, coef_down(p, k, i)?));
                        }
                    }
                }
            }
            up.push(SparseMat::from_triplets(d, d, tu));
            down.push(SparseMat::from_triplets(d, d, td));
        }
        let parity = basis.iter().map(|p| p.parity()).collect();
        Ok(Module { shape, weight: w.clone(), basis, parity, diag, up, down, all: OnceLock::new() })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Parity of `E_ij`.
    pub fn gen_parity(&self, i: usize, j: usize) -> u8 {
        self.shape.parity(i) ^ self.shape.parity(j)
    }

    pub fn e_up(&self, k: usize) -> &SparseMat {
        &self.up[k - 1]
    }

    pub fn e_down(&self, k: usize) -> &SparseMat {
        &self.down[k - 1]
    }

    /// Replaces a stored Chevalley matrix. Used to build deliberately broken fixtures.
    pub fn with_chevalley(&self, k: usize, raising: bool, mat: SparseMat) -> Module {
        let mut m = self.clone();
        if raising {
            m.up[k - 1] = mat;
        } else {
            m.down[k - 1] = mat;
        }
        m.all = OnceLock::new();
        m
    }

    /// All `E_ij`, indexed `(i-1)*N + (j-1)`, derived from the Chevalley
    /// generators by nested supercommutators.
    pub fn all_e(&self) -> &[SparseMat] {
        self.all.get_or_init(|| {
            let nn = self.shape.size();
            let mut e: Vec<Option<SparseMat>> = vec![None; nn * nn];
            let at = |i: usize, j: usize| (i - 1) * nn + (j - 1);
            for k in 1..=nn {
                e[at(k, k)] = Some(self.diag[k - 1].clone());
            }
            for k in 1..nn {
                e[at(k, k + 1)] = Some(self.up[k - 1].clone());
                e[at(k + 1, k)] = Some(self.down[k - 1].clone());
            }
            for dd in 2..nn {
                for i in 1..=nn - dd {
                    let j = i + dd;
                    let a = e[at(i, j - 1)].clone().unwrap();
                    let b = e[at(j - 1, j)].clone().unwrap();
                    e[at(i, j)] = Some(a.supercommutator(self.gen_parity(i, j - 1), &b, self.gen_parity(j - 1, j)));
                    let a = e[at(j, j - 1)].clone().unwrap();
                    let b = e[at(j - 1, i)].clone().unwrap();
                    e[at(j, i)] = Some(a.supercommutator(self.gen_parity(j, j - 1), &b, self.gen_parity(j - 1, i)));
                }
            }
            e.into_iter().map(|x| x.unwrap()).collect()
        })
    }

    pub fn e(&self, i: usize, j: usize) -> &SparseMat {
        &self.all_e()[(i - 1) * self.shape.size() + (j - 1)]
    }

    pub fn zz_degree(&self, index: usize) -> ZZDegree {
        self.basis[index].zz_degree()
    }

    pub fn to_json(&self) -> ModuleJson {
        let mut generators = BTreeMap::new();
        let nn = self.shape.size();
        let trip = |s: &SparseMat| s.triplets().map(|(i, j, v)| (i, j, rat_str(v))).collect::<Vec<_>>();
        for k in 1..=nn {
            generators.insert(format!("E_{k}_{k}"), trip(&self.diag[k - 1]));
        }
        for k in 1..nn {
            generators.insert(format!("E_{}_{}", k, k + 1), trip(&self.up[k - 1]));
            generators.insert(format!("E_{}_{}", k + 1, k), trip(&self.down[k - 1]));
        }
        ModuleJson {
            m: self.shape.m,
            n: self.shape.n,
            weight: self.weight.to_string(),
            dim: self.dim(),
            basis: self.basis.clone(),
            parity: self.parity.clone(),
            generators,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleJson {
    pub m: usize,
    pub n: usize,
    pub weight: String,
    pub dim: usize,
    pub basis: Vec<GTPattern>,
    pub parity: Vec<u8>,
    pub generators: BTreeMap<String, Vec<(usize, usize, String)>>,
}

/// Checks the supercommutator relations for every pair of `E_ij`, and that
/// each `E_ij` shifts basis parity by its own parity.
pub fn verify_superalgebra(md: &Module) -> Report {
    let mut rep = Report::new("superalgebra");
    let nn = md.shape.size();
    let d = md.dim();
    let zero = SparseMat::zeros(d, d);
    for i in 1..=nn {
        for j in 1..=nn {
            let p = md.gen_parity(i, j);
            let ok = md.e(i, j).triplets().all(|(b, a, _)| md.parity[a] ^ md.parity[b] == p);
            rep.check(ok, || format!("E_{i}_{j} does not have parity {p}"));
        }
    }
    for i in 1..=nn {
        for j in 1..=nn {
            for k in 1..=nn {
                for l in 1..=nn {
                    let (pa, pb) = (md.gen_parity(i, j), md.gen_parity(k, l));
                    let lhs = md.e(i, j).supercommutator(pa, md.e(k, l), pb);
                    let mut rhs = zero.clone();
                    if j == k {
                        rhs = rhs.add(md.e(i, l));
                    }
                    if i == l {
                        let s = if pa & pb == 1 { Rat::one() } else { -Rat::one() };
                        rhs = rhs.add_scaled(md.e(k, j), &s);
                    }
                    rep.check(lhs == rhs, || format!("[E_{i}_{j}, E_{k}_{l}]"));
                }
            }
        }
    }
    rep
}

/// Basis indices whose patterns have rows `1..r` frozen at `mu`, where the
/// module lives over gl(m+r|n) and `r = mu.len()`.
pub fn singular_subspace(md: &Module, mu: &[i64]) -> Result<Vec<usize>> {
    check_admissible(&md.weight, mu)?;
    Ok(md
        .basis
        .iter()
        .enumerate()
        .filter(|(_, p)| (1..=mu.len()).all(|k| p.row(k) == &mu[..k]))
        .map(|(a, _)| a)
        .collect())
}

/// Basis of the joint kernel of `E_jk`, `1 <= j < k <= r`, inside the weight
/// space where `E_jj` acts by `mu_j`. Computed by plain linear algebra.
pub fn singular_kernel(md: &Module, mu: &[i64]) -> Result<Vec<Vec<Rat>>> {
    check_admissible(&md.weight, mu)?;
    let r = mu.len();
    let ws: Vec<usize> = (0..md.dim()).filter(|&a| (1..=r).all(|k| md.e(k, k).get(a, a) == ri(mu[k - 1]))).collect();
    if ws.is_empty() {
        return Ok(vec![]);
    }
    let all_rows: Vec<usize> = (0..md.dim()).collect();
    let mut stacked: Vec<Vec<Rat>> = vec![];
    for j in 1..=r {
        for k in j + 1..=r {
            let block = md.e(j, k).restrict(&all_rows, &ws).to_dense();
            for row in 0..block.rows() {
                stacked.push(block.row(row).to_vec());
            }
        }
    }
    let kernel = if stacked.is_empty() {
        (0..ws.len()).map(|c| (0..ws.len()).map(|a| if a == c { Rat::one() } else { Rat::zero() }).collect()).collect()
    } else {
        RatMatrix::from_rows(stacked).nullspace()
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut full = vec![Rat::zero(); md.dim()];
            for (c, &a) in ws.iter().enumerate() {
                full[a] = v[c].clone();
            }
            full
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, n: usize, e: Vec<i64>) -> Weight {
        Weight::new(SuperShape::new(m, n).unwrap(), e).unwrap()
    }

    #[test]
    fn natural_gl11() {
        let md = Module::build(&w(1, 1, vec![1, 0])).unwrap();
        assert_eq!(md.dim(), 2);
        let top = md.basis.iter().position(|p| p.get(1, 1) == 1).unwrap();
        let bot = 1 - top;
        assert_eq!(md.e(1, 1).get(top, top), ri(1));
        assert_eq!(md.e(1, 1).get(bot, bot), ri(0));
        assert_eq!(md.e(2, 2).get(bot, bot), ri(1));
        assert!(verify_superalgebra(&md).is_clean());
    }

    #[test]
    fn corrupted_fixture_is_caught() {
        let md = Module::build(&w(2, 1, vec![1, 0, 0])).unwrap();
        let bad = md.with_chevalley(1, true, md.e_up(1).scale(&ri(2)));
        let rep = verify_superalgebra(&bad);
        assert!(!rep.is_clean());
        assert!(rep.violations.iter().any(|v| v.contains("E_1_2")));
    }

    #[test]
    fn singular_examples() {
        let md = Module::build(&w(2, 1, vec![2, 1, 0])).unwrap();
        let frozen = singular_subspace(&md, &[1]).unwrap();
        let ker = singular_kernel(&md, &[1]).unwrap();
        assert_eq!(frozen.len(), ker.len());
        assert!(singular_subspace(&md, &[3]).is_err());
        assert_eq!(singular_subspace(&md, &[]).unwrap().len(), md.dim());
    }
}
