//! Covariant weights and Gelfand-Tsetlin patterns for gl(m|n).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GtError {
    #[error("shape must have m + n >= 1")]
    EmptyShape,
    #[error("weight has {got} entries, shape needs {want}")]
    WrongLength { got: usize, want: usize },
    #[error("weight {0} is not covariant")]
    NotCovariant(String),
    #[error("mu {mu:?} is not admissible for {lambda}")]
    NotAdmissible { lambda: String, mu: Vec<i64> },
    #[error("index ({k},{i}) is not a movable entry of the pattern")]
    IndexOutOfTriangle { k: usize, i: usize },
    #[error("cannot parse weight {0:?}")]
    Parse(String),
}

/// The pair (m, n) of even and odd ranks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct SuperShape {
    pub m: usize,
    pub n: usize,
}

impl SuperShape {
    pub fn new(m: usize, n: usize) -> Result<Self, GtError> {
        if m + n == 0 {
            return Err(GtError::EmptyShape);
        }
        Ok(SuperShape { m, n })
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// Parity of the 1-based index `i`: 0 for `i <= m`, else 1.
    pub fn parity(&self, i: usize) -> u8 {
        u8::from(i > self.m)
    }

    /// `gamma_k`: `-k+1` for `k <= m`, `-2m+k` otherwise.
    pub fn gamma(&self, k: usize) -> i64 {
        if k <= self.m {
            1 - k as i64
        } else {
            k as i64 - 2 * self.m as i64
        }
    }

    /// Shape with the even and odd ranks swapped.
    pub fn flipped(&self) -> SuperShape {
        SuperShape { m: self.n, n: self.m }
    }
}

impl fmt::Display for SuperShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// A gl(m|n) weight `(lambda_1, ..., lambda_{m+n})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub shape: SuperShape,
    pub entries: Vec<i64>,
}

impl Weight {
    pub fn new(shape: SuperShape, entries: Vec<i64>) -> Result<Self, GtError> {
        if entries.len() != shape.size() {
            return Err(GtError::WrongLength { got: entries.len(), want: shape.size() });
        }
        Ok(Weight { shape, entries })
    }

    pub fn zero(shape: SuperShape) -> Self {
        Weight { shape, entries: vec![0; shape.size()] }
    }

    /// The natural module's weight `(1, 0, ..., 0)`.
    pub fn natural(shape: SuperShape) -> Self {
        let mut e = vec![0; shape.size()];
        e[0] = 1;
        Weight { shape, entries: e }
    }

    /// Parses `"2,1|1,0"`; either side of `|` may be empty.
    pub fn parse(shape: SuperShape, s: &str) -> Result<Self, GtError> {
        let bad = || GtError::Parse(s.to_string());
        let (ev, od) = s.split_once('|').ok_or_else(bad)?;
        let side = |t: &str| -> Result<Vec<i64>, GtError> {
            if t.trim().is_empty() {
                return Ok(vec![]);
            }
            t.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| bad())).collect()
        };
        let e = side(ev)?;
        let o = side(od)?;
        if e.len() != shape.m || o.len() != shape.n {
            return Err(GtError::WrongLength { got: e.len() + o.len(), want: shape.size() });
        }
        Weight::new(shape, e.into_iter().chain(o).collect())
    }

    /// 1-based entry access.
    pub fn at(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_covariant(&self) -> bool {
        let (m, n) = (self.shape.m, self.shape.n);
        let e = &self.entries;
        if e.iter().any(|&x| x < 0) {
            return false;
        }
        if (0..m.saturating_sub(1)).any(|i| e[i] < e[i + 1]) {
            return false;
        }
        if (0..n.saturating_sub(1)).any(|j| e[m + j] < e[m + j + 1]) {
            return false;
        }
        let lm = if m > 0 { e[m - 1] } else { 0 };
        e[m..].iter().filter(|&&x| x > 0).count() as i64 <= lm
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.shape.m;
        let j = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", j(&self.entries[..m]), j(&self.entries[m..]))
    }
}

/// Z^2-degree of a basis vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ZZDegree {
    pub even: i64,
    pub odd: i64,
}

impl ZZDegree {
    /// `(i,j) < (k,l)` iff `i < k`, or `i = k` and `j > l`.
    pub fn compare(&self, o: &ZZDegree) -> Ordering {
        self.even.cmp(&o.even).then(o.odd.cmp(&self.odd))
    }
}

/// A triangular array `lambda_{ki}`, `1 <= i <= k <= m+n`, stored row by row
/// with row `k` at index `k-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GTPattern {
    pub shape: SuperShape,
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    /// Builds from rows listed bottom-up (row 1 first). No validation.
    pub fn from_rows(shape: SuperShape, rows: Vec<Vec<i64>>) -> Self {
        assert_eq!(rows.len(), shape.size(), "pattern needs m+n rows");
        for (k, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), k + 1, "row {} has wrong length", k + 1);
        }
        GTPattern { shape, rows }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Row `k` (1-based).
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[k - 1]
    }

    /// `lambda_{ki}` (1-based).
    pub fn get(&self, k: usize, i: usize) -> i64 {
        self.rows[k - 1][i - 1]
    }

    pub fn set(&mut self, k: usize, i: usize, v: i64) {
        self.rows[k - 1][i - 1] = v;
    }

    pub fn top(&self) -> &[i64] {
        self.rows.last().unwrap()
    }

    pub fn weight(&self) -> Weight {
        Weight { shape: self.shape, entries: self.top().to_vec() }
    }

    /// `theta_{ki} = lambda_{k+1,i} - lambda_{ki}`.
    pub fn theta(&self, k: usize, i: usize) -> i64 {
        self.get(k + 1, i) - self.get(k, i)
    }

    /// GT coordinate `l_{ki}`.
    pub fn l(&self, k: usize, i: usize) -> i64 {
        let m = self.shape.m as i64;
        let (ii, v) = (i as i64, self.get(k, i));
        if i <= self.shape.m {
            v - ii + 1
        } else {
            -v + ii - 2 * m
        }
    }

    pub fn l_coords(&self) -> Vec<Vec<i64>> {
        (1..=self.shape.size()).map(|k| (1..=k).map(|i| self.l(k, i)).collect()).collect()
    }

    pub fn row_sum(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            self.row(k).iter().sum()
        }
    }

    /// Eigenvalue of `E_kk` on the basis vector.
    pub fn diag_weight(&self, k: usize) -> i64 {
        self.row_sum(k) - self.row_sum(k - 1)
    }

    /// The gl(m|n) weight `(E_11, ..., E_NN)` of the basis vector.
    pub fn gl_weight(&self) -> Vec<i64> {
        (1..=self.shape.size()).map(|k| self.diag_weight(k)).collect()
    }

    pub fn zz_degree(&self) -> ZZDegree {
        let m = self.shape.m;
        ZZDegree {
            even: (1..=m).map(|k| self.row_sum(k)).sum(),
            odd: (m + 1..=self.shape.size()).map(|k| self.row_sum(k)).sum(),
        }
    }

    /// Parity: `sum_{i<=m} lambda_{m+n,i} - sum_{i<=m} lambda_{m,i}` mod 2,
    /// the number of odd raising steps.
    pub fn parity(&self) -> u8 {
        let (m, nn) = (self.shape.m, self.shape.size());
        if m == 0 {
            return 0;
        }
        let s: i64 = (1..=m).map(|i| self.get(nn, i) - self.get(m, i)).sum();
        s.rem_euclid(2) as u8
    }

    /// Checks the six defining conditions (besides the top row) and non-negativity.
    pub fn is_valid(&self) -> bool {
        let (m, nn) = (self.shape.m, self.shape.size());
        if self.rows.iter().flatten().any(|&x| x < 0) {
            return false;
        }
        for k in (m + 1)..=nn {
            for i in 1..=m.min(k - 1) {
                let t = self.get(k, i) - self.get(k - 1, i);
                if t != 0 && t != 1 {
                    return false;
                }
            }
        }
        for k in (m + 1)..nn {
            for i in 1..m {
                if self.get(k, i) < self.get(k, i + 1) {
                    return false;
                }
            }
        }
        for k in 1..nn {
            for i in 1..=k {
                if (k < m) || (m < i) {
                    if self.get(k + 1, i) < self.get(k, i) || self.get(k, i) < self.get(k + 1, i + 1) {
                        return false;
                    }
                }
            }
        }
        if m >= 1 {
            for k in (m + 1)..=nn {
                let c = ((m + 1)..=k).filter(|&i| self.get(k, i) > 0).count() as i64;
                if self.get(k, m) < c {
                    return false;
                }
            }
            if self.shape.n >= 1 && self.get(m + 1, m) == 0 && self.get(m, m) != 0 {
                return false;
            }
        }
        true
    }

    /// Bottom-up, left-to-right key used for the canonical order.
    pub fn order_key(&self) -> Vec<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `lambda_{ki} +- 1`, or `None` if the result is not a valid pattern.
    pub fn shift(&self, k: usize, i: usize, sign: i64) -> Result<Option<GTPattern>, GtError> {
        if k == 0 || k >= self.shape.size() || i == 0 || i > k {
            return Err(GtError::IndexOutOfTriangle { k, i });
        }
        let mut p = self.clone();
        p.set(k, i, self.get(k, i) + sign);
        Ok(if p.is_valid() { Some(p) } else { None })
    }
}

impl Serialize for GTPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.rows.iter().rev())
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().rev().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// All GT patterns with top row `w`, in canonical order.
pub fn enumerate_patterns(w: &Weight) -> Result<Vec<GTPattern>, GtError> {
    if !w.is_covariant() {
        return Err(GtError::NotCovariant(w.to_string()));
    }
    Ok(enumerate_with_frozen(w, &[]))
}

/// Patterns whose rows `1..r` are `mu` truncated (row `k` is `mu_1..mu_k`).
pub fn enumerate_skew_patterns(w: &Weight, mu: &[i64]) -> Result<Vec<GTPattern>, GtError> {
    if !w.is_covariant() {
        return Err(GtError::NotCovariant(w.to_string()));
    }
    check_admissible(w, mu)?;
    Ok(enumerate_with_frozen(w, mu))
}

/// `lambda_{m+i} <= mu_i <= lambda_i` where `m` is the even rank left after removing `r = |mu|`.
pub fn check_admissible(w: &Weight, mu: &[i64]) -> Result<(), GtError> {
    let r = mu.len();
    let err = || GtError::NotAdmissible { lambda: w.to_string(), mu: mu.to_vec() };
    if r > w.shape.m || mu.windows(2).any(|p| p[0] < p[1]) {
        return Err(err());
    }
    let m = w.shape.m - r;
    for (i0, &x) in mu.iter().enumerate() {
        let i = i0 + 1;
        if !(w.at(m + i) <= x && x <= w.at(i)) {
            return Err(err());
        }
    }
    Ok(())
}

/// All covariant weights of `shape` with entry sum at most `max_size`, in
/// lexicographic order of entries.
pub fn covariant_weights(shape: SuperShape, max_size: i64) -> Vec<Weight> {
    fn rec(shape: SuperShape, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == shape.size() {
            let w = Weight { shape, entries: cur.clone() };
            if w.is_covariant() {
                out.push(w);
            }
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(shape, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(shape, max_size, &mut vec![], &mut out);
    out
}

/// All `mu` of length `r` admissible for `w`.
pub fn admissible_mus(w: &Weight, r: usize) -> Vec<Vec<i64>> {
    if r > w.shape.m {
        return vec![];
    }
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for i in 1..=r {
        let lo = w.at(w.shape.m - r + i);
        out = out.into_iter().flat_map(|p| (lo..=w.at(i)).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out.retain(|mu| check_admissible(w, mu).is_ok());
    out
}

fn enumerate_with_frozen(w: &Weight, mu: &[i64]) -> Vec<GTPattern> {
    let shape = w.shape;
    let nn = shape.size();
    let mut rows: Vec<Vec<i64>> = (1..=nn).map(|k| vec![0; k]).collect();
    rows[nn - 1] = w.entries.clone();
    let mut out = vec![];
    fill(shape, mu, nn - 1, &mut rows, &mut out);
    out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    out
}

fn row_ok(shape: SuperShape, k: usize, row: &[i64], above: &[i64]) -> bool {
    let m = shape.m;
    if k > m && k < shape.size() {
        for i in 1..m {
            if row[i - 1] < row[i] {
                return false;
            }
        }
    }
    if m >= 1 && k > m {
        let c = ((m + 1)..=k).filter(|&i| row[i - 1] > 0).count() as i64;
        if row[m - 1] < c {
            return false;
        }
    }
    if m >= 1 && shape.n >= 1 && k == m && above[m - 1] == 0 && row[m - 1] != 0 {
        return false;
    }
    true
}

fn fill(shape: SuperShape, mu: &[i64], k: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GTPattern>) {
    if k == 0 {
        let p = GTPattern { shape, rows: rows.clone() };
        if p.is_valid() {
            out.push(p);
        }
        return;
    }
    let m = shape.m;
    let above = rows[k].clone();
    let ranges: Vec<(i64, i64)> = if k <= mu.len() {
        (0..k).map(|i| (mu[i], mu[i])).collect()
    } else {
        (1..=k)
            .map(|i| {
                if i <= m && k >= m {
                    ((above[i - 1] - 1).max(0), above[i - 1])
                } else {
                    (above[i].max(0), above[i - 1])
                }
            })
            .collect()
    };
    if ranges.iter().any(|(a, b)| a > b) {
        return;
    }
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        if row_ok(shape, k, &cur, &above) {
            rows[k - 1] = cur.clone();
            fill(shape, mu, k - 1, rows, out);
        }
        let mut p = 0;
        loop {
            if p == k {
                return;
            }
            if cur[p] < ranges[p].1 {
                cur[p] += 1;
                break;
            }
            cur[p] = ranges[p].0;
            p += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(m: usize, n: usize) -> SuperShape {
        SuperShape::new(m, n).unwrap()
    }

    #[test]
    fn covariance_examples() {
        assert!(Weight::new(sh(1, 1), vec![1, 0]).unwrap().is_covariant());
        assert!(!Weight::new(sh(2, 1), vec![0, 0, 2]).unwrap().is_covariant());
        assert!(Weight::new(sh(2, 3), vec![2, 2, 1, 1, 0]).unwrap().is_covariant());
    }

    #[test]
    fn parse_weight() {
        let w = Weight::parse(sh(2, 2), "2,1|1,0").unwrap();
        assert_eq!(w.entries, vec![2, 1, 1, 0]);
        assert_eq!(w.to_string(), "2,1|1,0");
        assert!(Weight::parse(sh(2, 2), "2,1,1,0").is_err());
        assert!(Weight::parse(sh(2, 1), "2,1|1,0").is_err());
        assert_eq!(Weight::parse(sh(0, 2), "|1,0").unwrap().entries, vec![1, 0]);
    }

    #[test]
    fn small_counts() {
        let c = |m, n, e: Vec<i64>| enumerate_patterns(&Weight::new(sh(m, n), e).unwrap()).unwrap().len();
        assert_eq!(c(1, 1, vec![1, 0]), 2);
        assert_eq!(c(2, 1, vec![1, 0, 0]), 3);
        assert_eq!(c(2, 2, vec![0, 0, 0, 0]), 1);
        assert_eq!(c(2, 1, vec![2, 1, 0]), 8);
        assert_eq!(c(1, 2, vec![1, 1, 0]), 5);
    }

    #[test]
    fn shifts_and_coords() {
        let w = Weight::new(sh(1, 1), vec![1, 0]).unwrap();
        let ps = enumerate_patterns(&w).unwrap();
        let p0 = ps.iter().find(|p| p.get(1, 1) == 0).unwrap();
        let p1 = p0.shift(1, 1, 1).unwrap().unwrap();
        assert_eq!(p1.get(1, 1), 1);
        assert_eq!(p1.shift(1, 1, 1).unwrap(), None);
        assert!(p1.shift(2, 1, 1).is_err());
        assert_eq!((p1.l(1, 1), p1.l(2, 1), p1.l(2, 2)), (1, 1, 0));
        assert_eq!(p1.zz_degree(), ZZDegree { even: 1, odd: 1 });
    }
}
