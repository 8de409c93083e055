//! Rational-function reconstruction from exact point evaluations.

use num_traits::{One, Zero};

use super::dense::RatMatrix;
use super::poly::Poly;
use super::rat::{ri, Rat};
use super::ratfunc::RatFunc;
use super::ArithError;

/// Number of held-out samples every adaptive reconstruction must also reproduce.
pub const HELD_OUT: usize = 3;

/// Fits `p/q` with `deg p <= dn`, `deg q <= dd` through all samples.
pub fn rational_interpolate(samples: &[(Rat, Rat)], dn: usize, dd: usize) -> Result<RatFunc, ArithError> {
    if samples.len() < dn + dd + 1 {
        return Err(ArithError::InsufficientSamples { have: samples.len(), need: dn + dd + 1 });
    }
    if samples.iter().all(|(_, y)| y.is_zero()) {
        return Ok(RatFunc::zero());
    }
    let unknowns = dn + 1 + dd + 1;
    let mut m = RatMatrix::zeros(samples.len(), unknowns);
    for (r, (x, y)) in samples.iter().enumerate() {
        let mut pw = Rat::one();
        for i in 0..=dn.max(dd) {
            if i <= dn {
                m.set(r, i, pw.clone());
            }
            if i <= dd {
                m.set(r, dn + 1 + i, -(y * &pw));
            }
            pw *= x;
        }
    }
    let ker = m.nullspace();
    let Some(v) = ker.first() else {
        return Err(ArithError::InconsistentSamples);
    };
    let p = Poly::new(v[..=dn].to_vec());
    let q = Poly::new(v[dn + 1..].to_vec());
    if q.is_zero() {
        return Err(ArithError::InconsistentSamples);
    }
    let f = RatFunc::new(p, q)?;
    for (x, y) in samples {
        match f.eval(x) {
            Ok(val) if &val == y => {}
            _ => return Err(ArithError::InconsistentSamples),
        }
    }
    Ok(f)
}

/// Deterministic sample points `0, 1, -1, 2, -2, ...` offset by `offset`.
pub fn sample_point(k: usize, offset: &Rat) -> Rat {
    let i = k as i64;
    let v = if i == 0 {
        0
    } else if i % 2 == 1 {
        (i + 1) / 2
    } else {
        -(i / 2)
    };
    ri(v) + offset
}

/// Lazily sampled vector-valued function of one rational variable. Points where
/// the evaluator reports `None` (a pole or a singular intermediate) are skipped.
pub struct Sampler<'a> {
    f: Box<dyn FnMut(&Rat) -> Result<Option<Vec<Rat>>, ArithError> + 'a>,
    offset: Rat,
    next: usize,
    forbidden: Vec<Rat>,
    pub points: Vec<(Rat, Vec<Rat>)>,
}

impl<'a> Sampler<'a> {
    pub fn new(
        f: impl FnMut(&Rat) -> Result<Option<Vec<Rat>>, ArithError> + 'a,
        offset: Rat,
        forbidden: Vec<Rat>,
    ) -> Self {
        Sampler { f: Box::new(f), offset, next: 0, forbidden, points: vec![] }
    }

    fn ensure(&mut self, count: usize) -> Result<(), ArithError> {
        let mut misses = 0;
        while self.points.len() < count {
            let x = sample_point(self.next, &self.offset);
            self.next += 1;
            if self.forbidden.contains(&x) {
                continue;
            }
            match (self.f)(&x)? {
                Some(v) => self.points.push((x, v)),
                None => {
                    misses += 1;
                    if misses > 10_000 {
                        return Err(ArithError::InsufficientSamples { have: self.points.len(), need: count });
                    }
                }
            }
        }
        Ok(())
    }

    /// Reconstructs every component with the smallest degree bound `d`
    /// (numerator and denominator both `<= d`) that also matches `HELD_OUT`
    /// extra samples. Fails past `max_deg`.
    pub fn reconstruct(&mut self, max_deg: usize) -> Result<Vec<RatFunc>, ArithError> {
        self.ensure(1)?;
        let len = self.points[0].1.len();
        let mut out: Vec<Option<RatFunc>> = vec![None; len];
        for d in 0..=max_deg {
            let need = 2 * d + 1 + HELD_OUT;
            self.ensure(need)?;
            for (c, slot) in out.iter_mut().enumerate() {
                if slot.is_some() {
                    continue;
                }
                let s: Vec<(Rat, Rat)> = self.points.iter().map(|(x, v)| (x.clone(), v[c].clone())).collect();
                if let Ok(f) = rational_interpolate(&s, d, d) {
                    *slot = Some(f);
                }
            }
            if out.iter().all(|s| s.is_some()) {
                return Ok(out.into_iter().map(|s| s.unwrap()).collect());
            }
        }
        Err(ArithError::InconsistentSamples)
    }
}

/// Scalar convenience wrapper around [`Sampler`].
pub fn reconstruct_scalar(
    mut f: impl FnMut(&Rat) -> Result<Option<Rat>, ArithError>,
    offset: Rat,
    max_deg: usize,
) -> Result<RatFunc, ArithError> {
    let mut s = Sampler::new(move |x| Ok(f(x)?.map(|v| vec![v])), offset, vec![]);
    Ok(s.reconstruct(max_deg)?.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rq;

    #[test]
    fn interpolate_examples() {
        let f = |x: &Rat| (x + ri(1)) / x;
        let s: Vec<_> = [1, 2, 3].iter().map(|&x| (ri(x), f(&ri(x)))).collect();
        let g = rational_interpolate(&s, 1, 1).unwrap();
        assert_eq!(g.eval(&ri(7)).unwrap(), f(&ri(7)));
        let sq: Vec<_> = [1, 2, 3, 4].iter().map(|&x| (ri(x), ri(x * x))).collect();
        assert!(matches!(rational_interpolate(&sq, 1, 0), Err(ArithError::InconsistentSamples)));
        assert!(matches!(rational_interpolate(&sq[..1], 1, 0), Err(ArithError::InsufficientSamples { .. })));
    }

    #[test]
    fn adaptive() {
        let target = |x: &Rat| x * x / (x + ri(1)) + rq(1, 3);
        let g = reconstruct_scalar(
            |x| {
                if *x == ri(-1) {
                    Ok(None)
                } else {
                    Ok(Some(target(x)))
                }
            },
            ri(0),
            6,
        )
        .unwrap();
        assert_eq!(g.degrees(), (2, 1));
        assert_eq!(g.eval(&rq(5, 7)).unwrap(), target(&rq(5, 7)));
    }
}
