use num_traits::One;

use super::blocks::{berezinian_at, berezinian_product_at, gauss};
use super::YangianModule;
use crate::arith::{Rat, SparseMat};
use crate::report::Report;
use crate::Error;

fn sgn(odd: bool) -> Rat {
    if odd {
        -Rat::one()
    } else {
        Rat::one()
    }
}

fn comm(a: &SparseMat, b: &SparseMat) -> SparseMat {
    a.mul(b).sub(&b.mul(a))
}

/// `(u-v)[t_ij(u), t_kl(v)] = (-1)^{ij+ik+jk} (t_kj(u) t_il(v) - t_kj(v) t_il(u))`
/// with the supercommutator on the left, for every index quadruple.
pub fn verify_defining_relations(ym: &YangianModule, points: &[(Rat, Rat)]) -> Report {
    let mut rep = Report::new("defrel");
    let nn = ym.n();
    let p = |i: usize| ym.shape.parity(i);
    for (u, v) in points {
        let (tu, tv) = match (ym.t_at(u), ym.t_at(v)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                rep.check(false, || format!("cannot evaluate at ({u}, {v}): {e}"));
                continue;
            }
        };
        let uv = u - v;
        for i in 1..=nn {
            for j in 1..=nn {
                for k in 1..=nn {
                    for l in 1..=nn {
                        let pa = p(i) ^ p(j);
                        let pb = p(k) ^ p(l);
                        let lhs = tu.get(i, j).supercommutator(pa, tv.get(k, l), pb).scale(&uv);
                        let s = sgn((p(i) & p(j)) ^ (p(i) & p(k)) ^ (p(j) & p(k)) == 1);
                        let rhs = tu.get(k, j).mul(tv.get(i, l)).sub(&tv.get(k, j).mul(tu.get(i, l))).scale(&s);
                        rep.check(lhs == rhs, || format!("({i},{j},{k},{l}) at u={u}, v={v}"));
                    }
                }
            }
        }
    }
    rep
}

/// Sign `s` in `[E_{k+1,k}, d_k(u)] = s y_k(u)`: `-1` exactly when `E_{k+1,k}` is odd.
pub fn lemma_y_sign(ym: &YangianModule, k: usize) -> Rat {
    sgn(ym.shape.parity(k) != ym.shape.parity(k + 1))
}

/// `[d_k(u), E_{k,k+1}] = x_k(u)` and `[E_{k+1,k}, d_k(u)] = s y_k(u)` at the
/// given points, where `s` is [`lemma_y_sign`].
pub fn verify_lemma_dx(ym: &YangianModule, points: &[Rat]) -> Report {
    let mut rep = Report::new("lemma_dx");
    let nn = ym.n();
    let es: Result<Vec<(SparseMat, SparseMat)>, Error> =
        (1..nn).map(|k| Ok((ym.e_action(k, k + 1)?, ym.e_action(k + 1, k)?))).collect();
    let es = match es {
        Ok(e) => e,
        Err(e) => {
            rep.check(false, || format!("no Lie action: {e}"));
            return rep;
        }
    };
    for u in points {
        let b = match ym.t_at(u).and_then(|t| gauss(&t, nn - 1, u)) {
            Ok(b) => b,
            Err(e) => {
                rep.check(false, || format!("cannot evaluate at {u}: {e}"));
                continue;
            }
        };
        for k in 1..nn {
            let (up, down) = &es[k - 1];
            let d = &b.d[k - 1];
            rep.check(comm(d, up) == b.x[k - 1], || format!("[d_{k}, E_{k},{}] at {u}", k + 1));
            let s = lemma_y_sign(ym, k);
            rep.check(comm(down, d) == b.y[k - 1].scale(&s), || format!("[E_{},{k}, d_{k}] at {u}", k + 1));
        }
    }
    rep
}

/// The commutation relations between `d_k`, `x_k`, `y_k` at pairs of points,
/// plus pairwise commutativity of all `d_k`.
pub fn verify_lemma_relations(ym: &YangianModule, pairs: &[(Rat, Rat)]) -> Report {
    let mut rep = Report::new("lemma_relations");
    let nn = ym.n();
    for (u, v) in pairs {
        let (bu, bv) =
            match (ym.t_at(u).and_then(|t| gauss(&t, nn - 1, u)), ym.t_at(v).and_then(|t| gauss(&t, nn - 1, v))) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    rep.check(false, || format!("cannot evaluate at ({u}, {v}): {e}"));
                    continue;
                }
            };
        let uv = u - v;
        for k in 1..=nn {
            for l in 1..=nn {
                rep.check(comm(&bu.d[k - 1], &bv.d[l - 1]).is_zero(), || format!("[d_{k}(u), d_{l}(v)] at ({u}, {v})"));
            }
        }
        for k in 1..nn {
            let s = sgn(ym.shape.parity(k) == 1);
            let (du, dv) = (&bu.d[k - 1], &bv.d[k - 1]);
            let (xu, xv) = (&bu.x[k - 1], &bv.x[k - 1]);
            let (yu, yv) = (&bu.y[k - 1], &bv.y[k - 1]);
            let y_diff = yu.mul(dv).sub(&yv.mul(du));
            let x_diff = xv.mul(du).sub(&xu.mul(dv));
            rep.check(comm(du, yv).scale(&uv) == y_diff.scale(&s), || format!("(1) k={k} at ({u}, {v})"));
            rep.check(comm(du, xv).scale(&uv) == x_diff.scale(&s), || format!("(2) k={k} at ({u}, {v})"));
            rep.check(y_diff == dv.mul(yu).sub(&du.mul(yv)), || format!("(3) k={k} at ({u}, {v})"));
            rep.check(x_diff == du.mul(xv).sub(&dv.mul(xu)), || format!("(4) k={k} at ({u}, {v})"));
            for l in k + 1..nn {
                rep.check(comm(du, &bv.x[l - 1]).is_zero(), || format!("(5) [d_{k}, x_{l}] at ({u}, {v})"));
                rep.check(comm(du, &bv.y[l - 1]).is_zero(), || format!("(5) [d_{k}, y_{l}] at ({u}, {v})"));
            }
        }
    }
    rep
}

/// `B(u)` from its definition equals the product of shifted `d_k^{+-1}`, and
/// `B(u)` commutes with `t_ij(v)` and with `t_ij^{(1)}`.
pub fn verify_berezinian(ym: &YangianModule, points: &[Rat], probes: &[Rat]) -> Report {
    let mut rep = Report::new("berezinian");
    let nn = ym.n();
    let t1 = ym.t1();
    for u in points {
        let (b, bp) = match (berezinian_at(ym, u), berezinian_product_at(ym, u, nn)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                rep.check(false, || format!("cannot evaluate at {u}: {e}"));
                continue;
            }
        };
        rep.check(b == bp, || format!("factorization at {u}"));
        for v in probes {
            match ym.t_at(v) {
                Ok(t) => {
                    for i in 1..=nn {
                        for j in 1..=nn {
                            rep.check(comm(&b, t.get(i, j)).is_zero(), || format!("[B({u}), t_{i}{j}({v})]"));
                        }
                    }
                }
                Err(e) => rep.check(false, || format!("cannot evaluate at {v}: {e}")),
            }
        }
        if let Ok(t1) = &t1 {
            for i in 1..=nn {
                for j in 1..=nn {
                    rep.check(comm(&b, t1.get(i, j)).is_zero(), || format!("[B({u}), t1_{i}{j}]"));
                }
            }
        }
    }
    rep
}

/// The singular subspace of a skew module is preserved by the image of every
/// `t_ij(u)` at the given points.
pub fn verify_skew_invariance(ym: &YangianModule, points: &[Rat]) -> Report {
    let mut rep = Report::new("skew_invariance");
    for u in points {
        let r = ym.t_at(u);
        rep.check(!matches!(r, Err(Error::InvarianceViolation)), || format!("not invariant at {u}"));
    }
    rep
}
