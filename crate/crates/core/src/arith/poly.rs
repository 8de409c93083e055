use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{ri, Rat};

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(a: Rat) -> Self {
        Poly::new(vec![a])
    }

    /// The indeterminate `u`.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `u + a`.
    pub fn linear(a: Rat) -> Self {
        Poly::new(vec![a, Rat::one()])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        roots.iter().fold(Poly::one(), |acc, z| &acc * &Poly::linear(-z.clone()))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn scale(&self, a: &Rat) -> Self {
        Poly::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    /// Polynomial long division: `(q, r)` with `self = q*d + r`.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let mut q = vec![Rat::zero(); r.len() - dd];
        let inv = d.lead().recip();
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &inv;
            if !coef.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] -= &coef * dj;
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// `p(u + a)`.
    pub fn shift(&self, a: &Rat) -> Poly {
        let mut out = Poly::zero();
        let lin = Poly::linear(a.clone());
        for c in self.c.iter().rev() {
            out = &(&out * &lin) + &Poly::constant(c.clone());
        }
        out
    }

    /// `p(-u)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(self.c.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect())
    }

    /// Integer coefficients with content 1 and positive lead, same roots.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut l = BigInt::one();
        for c in &self.c {
            l = l.lcm(c.denom());
        }
        let mut v: Vec<BigInt> = self.c.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for a in &v {
            g = g.gcd(a);
        }
        if v.last().is_some_and(|x| x.is_negative()) {
            g = -g;
        }
        for a in v.iter_mut() {
            *a = &*a / &g;
        }
        v
    }

    /// Rational roots with multiplicity, sorted ascending, and the cofactor
    /// left after removing them.
    pub fn rational_roots(&self) -> (Vec<Rat>, Poly) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut p = self.clone();
        let mut roots = vec![];
        let sf = match p.degree() {
            Some(d) if d >= 1 => {
                let g = Poly::gcd(&p, &p.derivative());
                p.divrem(&g).0
            }
            _ => return (roots, p),
        };
        for r in distinct_roots(&sf) {
            let lin = Poly::linear(-r.clone());
            loop {
                let (q, rem) = p.divrem(&lin);
                if !rem.is_zero() {
                    break;
                }
                roots.push(r.clone());
                p = q;
            }
        }
        roots.sort();
        (roots, p)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.c.iter().enumerate().skip(1).map(|(i, c)| c * ri(i as i64)).collect())
    }
}

/// Distinct rational roots of a squarefree polynomial.
///
/// With `a` the leading coefficient of the primitive integer form, `a x` is
/// an integer root of a monic integer polynomial `g`. Those are found as
/// roots mod a small prime, Hensel-lifted past twice the Cauchy bound.
fn distinct_roots(f: &Poly) -> Vec<Rat> {
    let z = f.primitive_integer();
    let d = z.len() - 1;
    if d == 0 {
        return vec![];
    }
    let lead = z[d].clone();
    let g: Vec<BigInt> = (0..=d)
        .map(|i| if i == d { BigInt::one() } else { &z[i] * num_traits::pow(lead.clone(), d - 1 - i) })
        .collect();
    let bound: BigInt = g.iter().map(|c| c.abs()).max().unwrap() + 1;
    let dg: Vec<BigInt> = (1..=d).map(|i| &g[i] * BigInt::from(i)).collect();
    let ev =
        |c: &[BigInt], x: &BigInt, m: &BigInt| c.iter().rev().fold(BigInt::zero(), |acc, a| (acc * x + a).mod_floor(m));
    let mut out = vec![];
    for p in (3u32..).filter(|&q| (2..q).take_while(|k| k * k <= q).all(|k| q % k != 0)) {
        let pm = BigInt::from(p);
        let mod_roots: Vec<BigInt> = (0..p).map(BigInt::from).filter(|x| ev(&g, x, &pm).is_zero()).collect();
        if mod_roots.iter().any(|x| ev(&dg, x, &pm).is_zero()) {
            continue;
        }
        for r0 in mod_roots {
            let mut r = r0;
            let mut m = pm.clone();
            while m <= &bound * 2 {
                m = &m * &m;
                let inv = ev(&dg, &r, &m).extended_gcd(&m).x;
                r = (&r - ev(&g, &r, &m) * inv).mod_floor(&m);
            }
            let k = if &r * 2 > m { r - &m } else { r };
            let x = Rat::new(k, lead.clone());
            if f.eval(&x).is_zero() {
                out.push(x);
            }
        }
        return out;
    }
    unreachable!()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = Rat::zero();
        Poly::new((0..n).map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = Rat::zero();
        Poly::new((0..n).map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = super::rat::rat_str(&a);
            match i {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if i == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rq;

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&x| ri(x)).collect())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(Poly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(Poly::gcd(&p(&[0, 1, 1]), &p(&[1, 1])), p(&[1, 1]));
        assert_eq!(Poly::gcd(&p(&[2, 4]), &Poly::zero()), p(&[2, 4]).monic());
        assert!(Poly::gcd(&Poly::zero(), &Poly::zero()).is_zero());
    }

    #[test]
    fn roots_and_shift() {
        let f = Poly::from_roots(&[rq(-3, 2), ri(0), ri(2), ri(2)]);
        let (r, rest) = f.rational_roots();
        assert_eq!(r, vec![rq(-3, 2), ri(0), ri(2), ri(2)]);
        assert!(rest.is_constant());
        let g = p(&[1, 0, 1]);
        let (r, rest) = g.rational_roots();
        assert!(r.is_empty());
        assert_eq!(rest, g);
        let big = [rq(235085571, 530948990), rq(-98765431, 7), rq(-98765431, 7), rq(1, 3)];
        let h = &Poly::from_roots(&big) * &p(&[2, 0, 1]);
        let (r, rest) = h.rational_roots();
        let mut want = big.to_vec();
        want.sort();
        assert_eq!(r, want);
        assert_eq!(rest.monic(), p(&[2, 0, 1]));
        assert_eq!(p(&[0, 0, 1]).shift(&ri(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, -2, 3]));
    }

    #[test]
    fn divrem_identity() {
        let a = p(&[3, -2, 0, 5, 1]);
        let b = p(&[1, 1, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
