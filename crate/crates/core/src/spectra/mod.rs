//! Gelfand-Tsetlin spectra: closed-form eigenvalues, simultaneous
//! diagonalization of the `d_k(u)`, the tensor-product eigenvectors `xi`,
//! and simplicity checks.

mod diag;
mod simple;
mod xi;

use crate::arith::{ri, Poly, Rat, RatFunc};
use crate::gt::GTPattern;

pub use diag::{
    gt_spectrum, joint_eigenspaces, tame_verdict, EigenEntry, Separation, SpectrumReport, Verdict, Witness,
};
pub use simple::{is_simple, SimplicityCertificate, SimplicityResult};
pub use xi::{apply_x, apply_y, build_xi, kappa, raise_check, raise_xi, xi_factors, RaiseResult, XiMode, XiStep};

/// `prod (u + a) / prod (u + b)`.
pub fn linear_ratio(nums: &[Rat], dens: &[Rat]) -> RatFunc {
    let p = |v: &[Rat]| v.iter().fold(Poly::one(), |acc, a| &acc * &Poly::linear(a.clone()));
    RatFunc::new(p(nums), p(dens)).expect("nonzero denominator")
}

fn lr(p: &GTPattern, k: usize, i: usize) -> Rat {
    ri(p.l(k, i))
}

/// Eigenvalue `zeta_k(u)` of `d_k(u)` on the basis vector labelled by the
/// gl(m+r|n) pattern `p` of a skew module `L(lambda/mu)` with shift `h`.
pub fn zeta(p: &GTPattern, k: usize, r: usize, h: &Rat) -> RatFunc {
    let big_m = p.shape.m;
    let m = big_m - r;
    let sh = crate::gt::SuperShape { m, n: p.shape.n };
    let rr = ri(r as i64);
    let c = h - ri(sh.gamma(k)) + &rr;
    if k <= m {
        let i = k;
        let nums: Vec<Rat> = (1..=r + i).map(|a| &c + lr(p, r + i, a)).collect();
        let dens: Vec<Rat> = (1..r + i).map(|a| &c + lr(p, r + i - 1, a)).collect();
        return linear_ratio(&nums, &dens);
    }
    let j = k - m;
    let mut nums: Vec<Rat> = (1..=big_m).map(|a| &c + lr(p, big_m + j - 1, a)).collect();
    nums.extend((1..=j).map(|b| &c + lr(p, big_m + j, big_m + b)));
    let mut dens: Vec<Rat> = (1..=big_m).map(|a| &c + lr(p, big_m + j, a)).collect();
    dens.extend((1..j).map(|b| &c + lr(p, big_m + j - 1, big_m + b)));
    linear_ratio(&nums, &dens)
}

/// Eigenvalue `chi_k(u)` of `B_k(u)` on the same basis vector.
pub fn chi(p: &GTPattern, mu: &[i64], k: usize, h: &Rat) -> RatFunc {
    let r = mu.len();
    let big_m = p.shape.m;
    let m = big_m - r;
    let c = h + ri(r as i64);
    let o: Vec<Rat> = mu.iter().enumerate().map(|(a, &x)| &c + ri(x - a as i64)).collect();
    if k <= m {
        let i = k;
        let nums: Vec<Rat> = (1..=r + i).map(|a| &c + lr(p, r + i, a)).collect();
        return linear_ratio(&nums, &o);
    }
    let j = k - m;
    let nums: Vec<Rat> = (1..=big_m).map(|a| &c + lr(p, big_m + j, a)).collect();
    let mut dens = o;
    dens.extend((1..=j).map(|b| &c + lr(p, big_m + j, big_m + b)));
    linear_ratio(&nums, &dens)
}

/// Product over tensor factors of `zeta_k` for the multi-pattern `labels`.
pub fn zeta_product(factors: &[crate::yangian::Factor], labels: &[GTPattern], k: usize) -> RatFunc {
    factors.iter().zip(labels).fold(RatFunc::one(), |acc, (f, p)| &acc * &zeta(p, k, f.r(), &f.h))
}
