//! The vectors `xi` of a tensor product of skew modules, obtained from the
//! tensor product of "lowest-corner" basis vectors by a fixed ordered product
//! of lowering operators `y_k(v)` at explicit points.

use num_traits::Zero;

use crate::arith::interp::Sampler;
use crate::arith::rat::sign;
use crate::arith::{ri, rq, Rat, RatFunc, SparseMat};
use crate::gt::{GTPattern, SuperShape};
use crate::yangian::{gauss, Factor, YangianModule};
use crate::{Error, Result};

/// How `y_k(v)` is applied when `v` is a pole of the operator-valued
/// function `u -> y_k(u) xi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiMode {
    /// Evaluate the rational function at `v`; a genuine pole is an error.
    Literal,
    /// Take the leading Laurent coefficient at `v` instead of the value.
    Regularized,
}

/// One lowering factor `y_k(point)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiStep {
    pub k: usize,
    pub point: Rat,
}

/// `x_k(v + (-1)^k) xi = c eta`, where `y_k(v)` is the leftmost factor of
/// `xi = y_k(v) eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaiseResult {
    pub step: XiStep,
    pub xi: Vec<Rat>,
    pub eta: Vec<Rat>,
    pub image: Vec<Rat>,
    /// `Some(c)` when `image` is a multiple of a nonzero `eta`.
    pub c: Option<Rat>,
}

/// The pattern `Lambda_0` of a skew factor: rows `1..=r` equal `mu`, the next
/// `m` rows are clipped by `mu`, the rest copy `lambda`.
pub fn kappa(f: &Factor) -> GTPattern {
    let amb = f.lambda.shape;
    let r = f.r();
    let big_m = amb.size();
    let lam = |l: usize| f.lambda.at(l);
    let rows = (1..=big_m)
        .map(|k| {
            (1..=k)
                .map(|l| {
                    if k <= r {
                        f.mu[l - 1]
                    } else if k <= amb.m && l > k - r {
                        lam(l).min(f.mu[l - k + r - 1])
                    } else {
                        lam(l)
                    }
                })
                .collect()
        })
        .collect();
    GTPattern::from_rows(amb, rows)
}

/// The ordered lowering factors of `xi` for the multi-pattern `labels`,
/// left to right.
pub fn xi_factors(shape: SuperShape, factors: &[Factor], labels: &[GTPattern]) -> Result<Vec<XiStep>> {
    if factors.len() != labels.len() || factors.is_empty() {
        return Err(Error::Unsupported("xi needs one pattern per factor".into()));
    }
    if let Some(f) = factors.iter().find(|f| f.r() >= 2) {
        return Err(Error::Unsupported(format!("xi for skew factors with r = {}", f.r())));
    }
    let (m, nn) = (shape.m, shape.size());
    let rmax = factors.iter().map(|f| f.r()).max().unwrap_or(0);
    let mut out = vec![];
    let mut push_run = |hi: i64, lo: i64, c: usize, k: usize, l: &Rat, extra: &dyn Fn(usize) -> i64| {
        for q in (lo + 1..=hi).rev() {
            for j in (c..=k).rev() {
                out.push(XiStep { k: j, point: -l + ri(q + shape.gamma(j) + extra(j)) });
            }
        }
    };
    for ip in 1..=rmax {
        for k in ip..nn {
            for (f, p) in factors.iter().zip(labels) {
                let r = f.r();
                if ip > r {
                    continue;
                }
                let top = p.shape.size();
                let q = |kk: usize| if kk < nn { f.lambda.at(ip) - p.get(kk + r, ip) - 1 } else { -1 };
                let l = ri(p.l(top, ip) + r as i64) + &f.h;
                push_run(q(k), q(k + 1), ip, k, &l, &|j| i64::from(j > m));
            }
        }
    }
    for c in 1..nn {
        for k in c..nn {
            for (f, p) in factors.iter().zip(labels) {
                let r = f.r();
                let top = p.shape.size();
                let sg = if c <= m { 1 } else { -1 };
                let pp = |kk: usize| if kk < nn { f.lambda.at(c + r) - p.get(kk + r, c + r) - sg } else { -sg };
                let l = ri(p.l(top, c + r) + r as i64) + &f.h;
                push_run(pp(k), pp(k + 1), c, k, &l, &|j| i64::from(j > m && c <= m));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy)]
enum Op {
    X,
    Y,
}

fn op_at(ym: &YangianModule, op: Op, k: usize, u: &Rat) -> Result<SparseMat> {
    let b = gauss(&ym.t_at(u)?, k - 1, u)?;
    Ok(match op {
        Op::X => b.x[k - 1].clone(),
        Op::Y => b.y[k - 1].clone(),
    })
}

/// Leading Laurent term `(order, coefficient)` of `f` at `v`; `None` for zero.
fn laurent_lead(f: &RatFunc, v: &Rat) -> Option<(i64, Rat)> {
    if f.is_zero() {
        return None;
    }
    let low = |p: &crate::arith::Poly| {
        let s = p.shift(v);
        let i = s.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero");
        (i as i64, s.coeffs()[i].clone())
    };
    let (i, a) = low(f.num());
    let (j, b) = low(f.den());
    Some((i - j, a / b))
}

fn apply_op(ym: &YangianModule, op: Op, k: usize, point: &Rat, v: &[Rat], mode: XiMode) -> Result<Vec<Rat>> {
    if k == 0 || k >= ym.n() {
        return Err(Error::Unsupported(format!("no raising or lowering operator with index {k}")));
    }
    match op_at(ym, op, k, point) {
        Ok(a) => {
            let w = a.mul_vec(v);
            if mode == XiMode::Literal || w.iter().any(|x| !x.is_zero()) {
                return Ok(w);
            }
        }
        Err(Error::PoleHit(_)) => {}
        Err(e) => return Err(e),
    }
    let max_deg = 2 * ym.u_degree().max(1) * (ym.n() + ym.max_r() + 1) + 6;
    let mut failure = None;
    let funcs = {
        let mut s = Sampler::new(
            |x: &Rat| match op_at(ym, op, k, x) {
                Ok(a) => Ok(Some(a.mul_vec(v))),
                Err(Error::PoleHit(_)) => Ok(None),
                Err(e) => {
                    failure = Some(e);
                    Err(crate::ArithError::InternalCheck("lowering operator evaluation failed"))
                }
            },
            rq(18, 77),
            vec![point.clone()],
        );
        s.reconstruct(max_deg)
    };
    if let Some(e) = failure {
        return Err(e);
    }
    let funcs = funcs?;
    match mode {
        XiMode::Literal => funcs.iter().map(|f| f.eval(point).map_err(|_| Error::PoleHit(point.clone()))).collect(),
        XiMode::Regularized => {
            let leads: Vec<Option<(i64, Rat)>> = funcs.iter().map(|f| laurent_lead(f, point)).collect();
            let Some(ord) = leads.iter().flatten().map(|(o, _)| *o).min() else {
                return Ok(vec![Rat::zero(); v.len()]);
            };
            Ok(leads
                .into_iter()
                .map(|l| match l {
                    Some((o, c)) if o == ord => c,
                    _ => Rat::zero(),
                })
                .collect())
        }
    }
}

/// `y_k(point) v`.
pub fn apply_y(ym: &YangianModule, k: usize, point: &Rat, v: &[Rat], mode: XiMode) -> Result<Vec<Rat>> {
    apply_op(ym, Op::Y, k, point, v, mode)
}

/// `x_k(point) v`.
pub fn apply_x(ym: &YangianModule, k: usize, point: &Rat, v: &[Rat], mode: XiMode) -> Result<Vec<Rat>> {
    apply_op(ym, Op::X, k, point, v, mode)
}

fn xi0(ym: &YangianModule) -> Result<Vec<Rat>> {
    let want: Vec<GTPattern> = ym.factors.iter().map(kappa).collect();
    let idx = ym
        .labels
        .iter()
        .position(|l| *l == want)
        .ok_or_else(|| Error::InternalInvariantViolation("Lambda_0 is not a basis label".into()))?;
    let mut v = vec![Rat::zero(); ym.dim()];
    v[idx] = ri(1);
    Ok(v)
}

fn apply_steps(ym: &YangianModule, steps: &[XiStep], mode: XiMode) -> Result<Vec<Rat>> {
    let mut v = xi0(ym)?;
    for s in steps.iter().rev() {
        v = apply_y(ym, s.k, &s.point, &v, mode)?;
        if v.iter().all(|x| x.is_zero()) {
            break;
        }
    }
    Ok(v)
}

fn steps_for(ym: &YangianModule, labels: &[GTPattern]) -> Result<Vec<XiStep>> {
    if ym.factors.is_empty() || ym.labels.is_empty() {
        return Err(Error::Unsupported("xi needs a tensor product of skew modules".into()));
    }
    xi_factors(ym.shape, &ym.factors, labels)
}

/// `xi` for the multi-pattern `labels` (one ambient pattern per factor,
/// not necessarily valid).
pub fn build_xi(ym: &YangianModule, labels: &[GTPattern], mode: XiMode) -> Result<Vec<Rat>> {
    let steps = steps_for(ym, labels)?;
    apply_steps(ym, &steps, mode)
}

/// `x_k(point + (-1)^k) xi`.
pub fn raise_xi(ym: &YangianModule, k: usize, point: &Rat, xi: &[Rat], mode: XiMode) -> Result<Vec<Rat>> {
    let s = sign(i64::from(ym.shape.parity(k)));
    apply_x(ym, k, &(point + s), xi, mode)
}

/// Splits off the leftmost factor of `xi`, raises, and compares with the
/// remainder. `None` when `xi` has no lowering factor at all.
pub fn raise_check(ym: &YangianModule, labels: &[GTPattern], mode: XiMode) -> Result<Option<RaiseResult>> {
    let steps = steps_for(ym, labels)?;
    let Some(first) = steps.first().cloned() else {
        return Ok(None);
    };
    let eta = apply_steps(ym, &steps[1..], mode)?;
    let xi = apply_y(ym, first.k, &first.point, &eta, mode)?;
    let image = raise_xi(ym, first.k, &first.point, &xi, mode)?;
    let c = eta.iter().position(|x| !x.is_zero()).and_then(|i| {
        let c = &image[i] / &eta[i];
        eta.iter().zip(&image).all(|(e, im)| &c * e == *im).then_some(c)
    });
    Ok(Some(RaiseResult { step: first, xi, eta, image, c }))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::glmn::Module;
    use crate::gt::{enumerate_patterns, Weight};

    fn eval(m: usize, n: usize, w: &str, h: Rat) -> YangianModule {
        let sh = SuperShape::new(m, n).unwrap();
        YangianModule::evaluation(Arc::new(Module::build(&Weight::parse(sh, w).unwrap()).unwrap()), h)
    }

    #[test]
    fn kappa_is_highest_for_evaluation() {
        let ym = eval(2, 1, "2,1|0", ri(0));
        let k = kappa(&ym.factors[0]);
        assert!(k.is_valid());
        assert_eq!(k.rows(), &[vec![2], vec![2, 1], vec![2, 1, 0]]);
        assert!(build_xi(&ym, &[k], XiMode::Literal).unwrap()[0..].iter().filter(|x| !x.is_zero()).count() == 1);
    }

    #[test]
    fn xi_on_gl11_tensor_is_eigen() {
        let ym = YangianModule::tensor(vec![eval(1, 1, "1|0", ri(0)), eval(1, 1, "1|0", rq(1, 2))]).unwrap();
        let ps = enumerate_patterns(&ym.factors[0].lambda).unwrap();
        let mut found = 0;
        for a in &ps {
            for b in &ps {
                let labels = vec![a.clone(), b.clone()];
                let xi = build_xi(&ym, &labels, XiMode::Literal).unwrap();
                assert!(xi.iter().any(|x| !x.is_zero()));
                let u = rq(7, 3);
                let b2 = gauss(&ym.t_at(&u).unwrap(), 1, &u).unwrap();
                for k in 1..=2 {
                    let z = super::super::zeta_product(&ym.factors, &labels, k).eval(&u).unwrap();
                    let dv = b2.d[k - 1].mul_vec(&xi);
                    assert!(dv.iter().zip(&xi).all(|(x, y)| *x == &z * y));
                }
                found += 1;
            }
        }
        assert_eq!(found, 4);
    }
}
