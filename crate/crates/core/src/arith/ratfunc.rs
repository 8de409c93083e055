use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rat::{rat_str, Rat};
use super::ArithError;

/// Rational function `num/den` in one variable `u`, reduced, with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let l = d.lead().recip();
        Ok(RatFunc { num: n.scale(&l), den: d.scale(&l) })
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Rat::one())
    }

    pub fn constant(a: Rat) -> Self {
        RatFunc { num: Poly::constant(a), den: Poly::one() }
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// `u + a`.
    pub fn linear(a: Rat) -> Self {
        RatFunc::poly(Poly::linear(a))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat, ArithError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithError::Pole(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `f(u + a)`.
    pub fn shift(&self, a: &Rat) -> RatFunc {
        RatFunc::new(self.num.shift(a), self.den.shift(a)).expect("shift keeps denominator nonzero")
    }

    pub fn recip(&self) -> Result<RatFunc, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc, ArithError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Total degree bound `(deg num, deg den)`.
    pub fn degrees(&self) -> (usize, usize) {
        (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0))
    }

    /// Zeros and poles with multiplicity as signed orders, for functions whose
    /// numerator and denominator split over the rationals.
    pub fn divisor(&self) -> Result<Vec<(Rat, i64)>, ArithError> {
        let (zn, rn) = self.num.rational_roots();
        let (zd, rd) = self.den.rational_roots();
        if !rn.is_constant() || !rd.is_constant() {
            return Err(ArithError::IrrationalRoots);
        }
        let mut out: Vec<(Rat, i64)> = vec![];
        for (z, s) in zn.into_iter().map(|z| (z, 1)).chain(zd.into_iter().map(|z| (z, -1))) {
            match out.iter_mut().find(|(w, _)| *w == z) {
                Some(e) => e.1 += s,
                None => out.push((z, s)),
            }
        }
        out.retain(|(_, o)| *o != 0);
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.recip().expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// JSON form: coefficient strings, ascending degree.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&RatFunc> for RatFuncJson {
    fn from(f: &RatFunc) -> Self {
        RatFuncJson {
            num: f.num.coeffs().iter().map(rat_str).collect(),
            den: f.den.coeffs().iter().map(rat_str).collect(),
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        &self + &o
    }
}
