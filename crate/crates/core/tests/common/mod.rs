//! Oracles shared by the integration tests.

#![allow(dead_code)]

use gtsuper::Weight;

pub const SHAPES: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];

/// Number of (m|n)-semistandard tableaux of the diagram of `w`: letters
/// `1..=m` weakly increase along rows and strictly down columns, letters
/// `m+1..=m+n` strictly along rows and weakly down columns.
pub fn supertableaux(w: &Weight) -> usize {
    let (m, n) = (w.shape.m, w.shape.n);
    let mut rows: Vec<usize> = w.entries[..m].iter().map(|&x| x as usize).collect();
    let odd = &w.entries[m..];
    let depth = odd.iter().copied().max().unwrap_or(0);
    for k in 1..=depth {
        rows.push(odd.iter().filter(|&&x| x >= k).count());
    }
    rows.retain(|&r| r > 0);
    let cells: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();
    let mut fill = vec![vec![0usize; rows.first().copied().unwrap_or(0)]; rows.len()];
    fn go(c: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, m: usize, top: usize) -> usize {
        if c == cells.len() {
            return 1;
        }
        let (i, j) = cells[c];
        let mut total = 0;
        for x in 1..=top {
            let even = x <= m;
            if j > 0 {
                let l = fill[i][j - 1];
                if l > x || (!even && l == x) {
                    continue;
                }
            }
            if i > 0 {
                let a = fill[i - 1][j];
                if a > x || (even && a == x) {
                    continue;
                }
            }
            fill[i][j] = x;
            total += go(c + 1, cells, fill, m, top);
        }
        fill[i][j] = 0;
        total
    }
    go(0, &cells, &mut fill, m, m + n)
}
