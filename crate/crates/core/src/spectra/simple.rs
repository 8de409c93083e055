use num_traits::Zero;

use super::diag::{gt_spectrum, Separation};
use crate::arith::interp::sample_point;
use crate::arith::{ri, rq, Rat, SparseMat};
use crate::yangian::YangianModule;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityCertificate {
    /// Every probe generates the whole module. `eigenbasis` records that
    /// the probes were the Gelfand-Tsetlin eigenvectors of a module with
    /// simple spectrum, which makes the check conclusive.
    Cyclic { probes: usize, eigenbasis: bool },
    /// A probe whose cyclic span is a proper submodule.
    InvariantSubspace { probe: Vec<Rat>, basis: Vec<Vec<Rat>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityResult {
    pub simple: bool,
    pub certificate: SimplicityCertificate,
}

/// Incrementally reduced basis: each stored vector has a pivot at which it
/// is 1 and all later vectors are 0.
struct Span {
    rows: Vec<(usize, Vec<Rat>)>,
}

impl Span {
    fn reduce(&self, v: &mut [Rat]) {
        for (p, r) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
    }

    /// Adds `v` if it is new; returns the reduced vector when it was.
    fn insert(&mut self, mut v: Vec<Rat>) -> Option<Vec<Rat>> {
        self.reduce(&mut v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let c = v[p].clone();
        for x in v.iter_mut() {
            *x /= &c;
        }
        for (_, r) in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((p, v.clone()));
        Some(v)
    }
}

fn generators(ym: &YangianModule) -> Result<Vec<SparseMat>> {
    let want = ym.u_degree().max(1) * (ym.max_r() + 1) + 3;
    let nn = ym.n();
    let mut out = vec![];
    let mut got = 0;
    let mut i = 0;
    while got < want {
        let u = sample_point(i, &rq(5, 17));
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
            for b in 1..=nn {
                let g = t.get(a, b);
                if !g.is_zero() {
                    out.push(g.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Smallest subspace containing `v` and closed under `gens`.
fn cyclic_span(gens: &[SparseMat], v: &[Rat], dim: usize) -> Vec<Vec<Rat>> {
    let mut span = Span { rows: vec![] };
    let mut queue: Vec<Vec<Rat>> = span.insert(v.to_vec()).into_iter().collect();
    while let Some(w) = queue.pop() {
        if span.rows.len() == dim {
            break;
        }
        for g in gens {
            if let Some(new) = span.insert(g.mul_vec(&w)) {
                queue.push(new);
            }
        }
    }
    span.rows.into_iter().map(|(_, r)| r).collect()
}

/// Whether every probe vector generates the module under all `t_ij(u)`.
///
/// Probes are the eigenvectors of [`gt_spectrum`] when the module is tame
/// with simple spectrum: any submodule is then spanned by some of them, so
/// the answer is exact. Otherwise the standard basis is used.
pub fn is_simple(ym: &YangianModule) -> Result<SimplicityResult> {
    let dim = ym.dim();
    let gens = generators(ym)?;
    let eig = match gt_spectrum(ym) {
        Ok(rep) if rep.is_tame() && rep.separation == Separation::SimpleSpectrum => {
            Some(rep.eigen.into_iter().map(|e| e.vector).collect::<Vec<_>>())
        }
        Ok(_) | Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    let eigenbasis = eig.is_some();
    let probes = eig.unwrap_or_else(|| {
        (0..dim)
            .map(|a| {
                let mut v = vec![Rat::zero(); dim];
                v[a] = ri(1);
                v
            })
            .collect()
    });
    for p in &probes {
        let basis = cyclic_span(&gens, p, dim);
        if basis.len() < dim {
            return Ok(SimplicityResult {
                simple: false,
                certificate: SimplicityCertificate::InvariantSubspace { probe: p.clone(), basis },
            });
        }
    }
    Ok(SimplicityResult {
        simple: true,
        certificate: SimplicityCertificate::Cyclic { probes: probes.len(), eigenbasis },
    })
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
    fn simplicity_examples() {
        let sh = SuperShape::new(1, 1).unwrap();
        let triv = YangianModule::evaluation(Arc::new(Module::build(&Weight::zero(sh)).unwrap()), ri(0));
        assert!(is_simple(&triv).unwrap().simple);
        let w = YangianModule::tensor(vec![natural(ri(0)), natural(rq(1, 2))]).unwrap();
        let r = is_simple(&w).unwrap();
        assert!(r.simple);
        assert_eq!(r.certificate, SimplicityCertificate::Cyclic { probes: 4, eigenbasis: true });
        let ds = YangianModule::direct_sum(vec![natural(ri(0)), natural(ri(0))]).unwrap();
        let r = is_simple(&ds).unwrap();
        assert!(!r.simple);
        let SimplicityCertificate::InvariantSubspace { basis, .. } = r.certificate else { panic!() };
        assert_eq!(basis.len(), 2);
    }
}
