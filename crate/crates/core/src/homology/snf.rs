use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self { rows: rows.len(), cols, data: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect() }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.data[k][j].is_zero() {
                        out.data[i][j] += a * &other.data[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            BigInt::one()
        } else {
            sign * &a[n - 1][n - 1]
        }
    }
}

/// `U · M · V = D` with `D` diagonal, nonnegative and each diagonal entry
/// dividing the next.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
}

impl Snf {
    /// The nonzero diagonal entries.
    pub fn divisors(&self) -> Vec<BigInt> {
        diagonal(&self.d)
    }
}

fn diagonal(d: &Matrix) -> Vec<BigInt> {
    (0..d.rows.min(d.cols)).map(|i| d.data[i][i].clone()).take_while(|x| !x.is_zero()).collect()
}

struct Elimination {
    a: Matrix,
    u: Option<Matrix>,
    v: Option<Matrix>,
}

impl Elimination {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.data.swap(i, j);
        if let Some(u) = &mut self.u {
            u.data.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.a.data {
            r.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for r in &mut v.data {
                r.swap(i, j);
            }
        }
    }

    /// `row_i -= q row_j`
    fn sub_row(&mut self, i: usize, j: usize, q: &BigInt) {
        fn go(m: &mut Matrix, i: usize, j: usize, q: &BigInt) {
            let src = m.data[j].clone();
            for (x, y) in m.data[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
        go(&mut self.a, i, j, q);
        if let Some(u) = &mut self.u {
            go(u, i, j, q);
        }
    }

    /// `col_i -= q col_j`
    fn sub_col(&mut self, i: usize, j: usize, q: &BigInt) {
        fn go(m: &mut Matrix, i: usize, j: usize, q: &BigInt) {
            for r in &mut m.data {
                if !r[j].is_zero() {
                    let t = q * &r[j];
                    r[i] -= t;
                }
            }
        }
        go(&mut self.a, i, j, q);
        if let Some(v) = &mut self.v {
            go(v, i, j, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a.data[i] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u.data[i] {
                *x = -&*x;
            }
        }
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows, self.a.cols);
        for t in 0..rows.min(cols) {
            loop {
                // smallest nonzero entry of the remaining block
                let mut best: Option<(usize, usize)> = None;
                for i in t..rows {
                    for j in t..cols {
                        let x = &self.a.data[i][j];
                        if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < self.a.data[bi][bj].abs()) {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = best else { return };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let pivot = self.a.data[t][t].clone();
                let mut clean = true;
                for i in t + 1..rows {
                    if !self.a.data[i][t].is_zero() {
                        let q = self.a.data[i][t].clone() / &pivot;
                        self.sub_row(i, t, &q);
                        clean &= self.a.data[i][t].is_zero();
                    }
                }
                for j in t + 1..cols {
                    if !self.a.data[t][j].is_zero() {
                        let q = self.a.data[t][j].clone() / &pivot;
                        self.sub_col(j, t, &q);
                        clean &= self.a.data[t][j].is_zero();
                    }
                }
                if !clean {
                    continue;
                }
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&self.a.data[i][j] % &pivot).is_zero()));
                match bad {
                    Some(i) => self.sub_row(t, i, &-BigInt::one()),
                    None => break,
                }
            }
            if self.a.data[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

pub fn smith_normal_form(m: &Matrix) -> Snf {
    let mut e = Elimination { a: m.clone(), u: Some(Matrix::identity(m.rows)), v: Some(Matrix::identity(m.cols)) };
    e.run();
    Snf { u: e.u.expect("tracked"), d: e.a, v: e.v.expect("tracked") }
}

/// The nonzero diagonal of the Smith normal form, without the transforms.
pub fn elementary_divisors(m: &Matrix) -> Vec<BigInt> {
    let mut e = Elimination { a: m.clone(), u: None, v: None };
    e.run();
    diagonal(&e.a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn is_diagonal_chain(d: &Matrix) -> bool {
        let off = (0..d.rows).all(|i| (0..d.cols).all(|j| i == j || d.data[i][j].is_zero()));
        let divs = diagonal(d);
        let tail_zero = (divs.len()..d.rows.min(d.cols)).all(|i| d.data[i][i].is_zero());
        off && tail_zero && divs.iter().all(|x| x.is_positive()) && divs.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }

    #[test]
    fn small_cases() {
        let m = Matrix::from_i64(&[vec![2, 0], vec![0, 0]]);
        assert_eq!(smith_normal_form(&m).d, m);
        let s = smith_normal_form(&Matrix::from_i64(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.d, Matrix::from_i64(&[vec![2, 0], vec![0, 4]]));
        let s = smith_normal_form(&Matrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.divisors(), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(Matrix::from_i64(&[vec![2, 1], vec![7, 4]]).determinant(), BigInt::from(1));
        assert!(smith_normal_form(&Matrix::zero(0, 3)).d.is_zero());
    }

    #[test]
    fn random_sparse_recomposition() {
        for seed in 0..100 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| if rng.gen_bool(0.3) { rng.gen_range(-9..=9) } else { 0 }).collect())
                .collect();
            let m = Matrix::from_i64(&rows);
            let s = smith_normal_form(&m);
            assert_eq!(s.u.mul(&m).mul(&s.v), s.d, "seed {seed}");
            assert!(is_diagonal_chain(&s.d), "seed {seed}: {:?}", s.d);
            assert_eq!(s.u.determinant().abs(), BigInt::one());
            assert_eq!(s.v.determinant().abs(), BigInt::one());
            assert_eq!(elementary_divisors(&m), s.divisors());
        }
    }
}
