//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's group or homology code.
#![allow(dead_code)]

use num_traits::ToPrimitive;
use wbar_core::homology::ChainComplex;

/// Composition of permutations given as image lists, `(a∘b)(i) = a[b[i]]`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The number of `k`-tuples of elements of `S_n` that commute pairwise.
pub fn commuting_tuples(n: usize, k: usize) -> usize {
    let elems = permutations(n);
    let commute = |a: &Vec<usize>, b: &Vec<usize>| compose(a, b) == compose(b, a);
    fn go(elems: &[Vec<usize>], chosen: &mut Vec<usize>, k: usize, ok: &dyn Fn(usize, usize) -> bool) -> usize {
        if chosen.len() == k {
            return 1;
        }
        let mut total = 0;
        for e in 0..elems.len() {
            if chosen.iter().all(|&c| ok(c, e)) {
                chosen.push(e);
                total += go(elems, chosen, k, ok);
                chosen.pop();
            }
        }
        total
    }
    go(&elems, &mut Vec::new(), k, &|a, b| commute(&elems[a], &elems[b]))
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank over `Q` (`p = None`) or `F_p` by row reduction of a dense copy.
pub fn rank(rows: &[Vec<i128>], p: Option<i128>) -> usize {
    let mut a: Vec<Vec<i128>> = match p {
        Some(p) => rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect(),
        None => rows.to_vec(),
    };
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        for i in 0..a.len() {
            if i == r || a[i][c] == 0 {
                continue;
            }
            let (x, y) = (a[r][c], a[i][c]);
            let pivot_row = a[r].clone();
            for (v, &w) in a[i].iter_mut().zip(&pivot_row) {
                let t = *v * x - w * y;
                *v = p.map_or(t, |p| t.rem_euclid(p));
            }
            if p.is_none() {
                let g = a[i].iter().fold(0, |g, &v| gcd(g, v));
                if g > 1 {
                    a[i].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn dense(c: &ChainComplex, d: usize) -> Vec<Vec<i128>> {
    c.boundaries[d].data.iter().map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect()).collect()
}

/// Betti number of `H_i` and the number of its torsion summands of order
/// divisible by `p`, from ranks over `Q` and `F_p`.
pub fn dense_homology(c: &ChainComplex, i: usize, p: i128) -> (usize, usize) {
    let incoming = dense(c, i + 1);
    let (in_q, in_p) = (rank(&incoming, None), rank(&incoming, Some(p)));
    let out_q = if i == 0 { 0 } else { rank(&dense(c, i), None) };
    (c.ranks[i] - out_q - in_q, in_q - in_p)
}

/// `∂_{d-1} ∂_d = 0`, multiplied out densely.
pub fn square_zero(c: &ChainComplex) -> bool {
    (2..c.boundaries.len()).all(|d| {
        let (a, b) = (dense(c, d - 1), dense(c, d));
        a.iter().all(|row| (0..c.ranks[d]).all(|j| row.iter().enumerate().map(|(k, x)| x * b[k][j]).sum::<i128>() == 0))
    })
}
