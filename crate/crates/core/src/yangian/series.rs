use std::cell::RefCell;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::interp::Sampler;
use crate::arith::rat::rat_str;
use crate::arith::{ArithError, RFMatrix, Rat, RatFunc, SparseMat};
use crate::{Error, Result};

/// An operator-valued rational function of `u`, reconstructed exactly from
/// point evaluations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesOperator {
    pub dim: usize,
    pub mat: RFMatrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesEntryJson {
    pub row: usize,
    pub col: usize,
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl SeriesOperator {
    /// Reconstructs `u -> f(u)` entrywise. Points where `f` reports a pole
    /// are skipped; other errors abort.
    pub fn sample(
        dim: usize,
        mut f: impl FnMut(&Rat) -> Result<SparseMat>,
        offset: Rat,
        max_deg: usize,
    ) -> Result<SeriesOperator> {
        let failure: RefCell<Option<Error>> = RefCell::new(None);
        let mut s = Sampler::new(
            |x: &Rat| match f(x) {
                Ok(m) => {
                    let mut v = vec![Rat::zero(); dim * dim];
                    for (i, j, a) in m.triplets() {
                        v[i * dim + j] = a.clone();
                    }
                    Ok(Some(v))
                }
                Err(Error::PoleHit(_)) => Ok(None),
                Err(e) => {
                    *failure.borrow_mut() = Some(e);
                    Err(ArithError::InternalCheck("series evaluation failed"))
                }
            },
            offset,
            vec![],
        );
        let res = s.reconstruct(max_deg);
        drop(s);
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        let comps = res?;
        let mut mat = RFMatrix::zeros(dim, dim);
        for (c, fnc) in comps.into_iter().enumerate() {
            mat.set(c / dim, c % dim, fnc);
        }
        Ok(SeriesOperator { dim, mat })
    }

    pub fn get(&self, i: usize, j: usize) -> RatFunc {
        self.mat.get(i, j)
    }

    pub fn eval(&self, u: &Rat) -> Result<SparseMat> {
        self.mat.eval(u).map_err(|_| Error::PoleHit(u.clone()))
    }

    pub fn to_json(&self) -> Vec<SeriesEntryJson> {
        self.mat
            .entries()
            .map(|((i, j), f)| SeriesEntryJson {
                row: *i,
                col: *j,
                num: f.num().coeffs().iter().map(rat_str).collect(),
                den: f.den().coeffs().iter().map(rat_str).collect(),
            })
            .collect()
    }
}
