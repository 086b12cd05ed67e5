use std::collections::HashMap;

use super::BisimplicialSet;
use crate::error::Result;
use crate::ordinal::OrdinalMap;
use crate::sgroup::SimplicialGroup;
use crate::simplicial::SimplicialSet;
use crate::wbar::{Wbar, WbarSimplex};

/// The diagonal `dX_n = X_{n,n}`.
#[derive(Clone, Debug)]
pub struct Diagonal<B>(pub B);

impl<B: BisimplicialSet> SimplicialSet for Diagonal<B> {
    type Simplex = B::Simplex;

    fn simplices(&self, n: usize) -> Result<Vec<B::Simplex>> {
        self.0.simplices(n, n)
    }
    fn face(&self, n: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hface(n, n - 1, i, &self.0.vface(n, n, i, x))
    }
    fn degeneracy(&self, n: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hdegeneracy(n, n + 1, i, &self.0.vdegeneracy(n, n, i, x))
    }
}

/// The transpose, `X'_{p,q} = X_{q,p}`.
#[derive(Clone, Debug)]
pub struct Transpose<B>(pub B);

impl<B: BisimplicialSet> BisimplicialSet for Transpose<B> {
    type Simplex = B::Simplex;

    fn simplices(&self, p: usize, q: usize) -> Result<Vec<B::Simplex>> {
        self.0.simplices(q, p)
    }
    fn hface(&self, p: usize, q: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.0.vface(q, p, i, x)
    }
    fn hdegeneracy(&self, p: usize, q: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.0.vdegeneracy(q, p, i, x)
    }
    fn vface(&self, p: usize, q: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hface(q, p, j, x)
    }
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hdegeneracy(q, p, j, x)
    }
    fn hact(&self, theta: &OrdinalMap, q: usize, x: &B::Simplex) -> B::Simplex {
        self.0.vact(q, theta, x)
    }
    fn vact(&self, p: usize, theta: &OrdinalMap, x: &B::Simplex) -> B::Simplex {
        self.0.hact(theta, p, x)
    }
}

/// The total simplicial set: `TX_n` is the set of `(x_0, ..., x_n)` with
/// `x_i ∈ X_{i,n-i}` and `d_0^v x_i = d_{i+1}^h x_{i+1}`.
#[derive(Clone, Debug)]
pub struct Total<B>(pub B);

impl<B: BisimplicialSet> Total<B> {
    pub fn is_matched(&self, n: usize, x: &[B::Simplex]) -> bool {
        x.len() == n + 1 && (0..n).all(|i| self.0.vface(i, n - i, 0, &x[i]) == self.0.hface(i + 1, n - i - 1, i + 1, &x[i + 1]))
    }
}

impl<B: BisimplicialSet> SimplicialSet for Total<B> {
    type Simplex = Vec<B::Simplex>;

    fn simplices(&self, n: usize) -> Result<Vec<Self::Simplex>> {
        let mut partial: Vec<Vec<B::Simplex>> = self.0.simplices(0, n)?.into_iter().map(|x| vec![x]).collect();
        for i in 0..n {
            let mut by_face: HashMap<B::Simplex, Vec<B::Simplex>> = HashMap::new();
            for y in self.0.simplices(i + 1, n - i - 1)? {
                by_face.entry(self.0.hface(i + 1, n - i - 1, i + 1, &y)).or_default().push(y);
            }
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    let key = self.0.vface(i, n - i, 0, &p[i]);
                    by_face
                        .get(&key)
                        .into_iter()
                        .flatten()
                        .map(|y| {
                            let mut q = p.clone();
                            q.push(y.clone());
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        Ok(partial)
    }

    fn face(&self, n: usize, j: usize, x: &Self::Simplex) -> Self::Simplex {
        let mut out = Vec::with_capacity(n);
        for (i, xi) in x.iter().enumerate() {
            if i < j {
                out.push(self.0.vface(i, n - i, j - i, xi));
            } else if i > j {
                out.push(self.0.hface(i, n - i, j, xi));
            }
        }
        out
    }

    fn degeneracy(&self, n: usize, j: usize, x: &Self::Simplex) -> Self::Simplex {
        let mut out = Vec::with_capacity(n + 2);
        for (i, xi) in x.iter().enumerate().take(j + 1) {
            out.push(self.0.vdegeneracy(i, n - i, j - i, xi));
        }
        for (i, xi) in x.iter().enumerate().skip(j) {
            out.push(self.0.hdegeneracy(i, n - i, j, xi));
        }
        out
    }

    fn contains(&self, n: usize, x: &Self::Simplex) -> Result<bool> {
        if !self.is_matched(n, x) {
            return Ok(false);
        }
        for (i, xi) in x.iter().enumerate() {
            if !self.0.simplices(i, n - i)?.contains(xi) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `CR : dX -> TX`, `x ↦ ((d_1^h)^l x, (d_2^h)^{l-1} d_0^v x, ..., (d_0^v)^l x)`.
pub fn cr_map<B: BisimplicialSet>(b: &B, l: usize, x: &B::Simplex) -> Vec<B::Simplex> {
    let mut out = Vec::with_capacity(l + 1);
    let mut v = x.clone();
    for i in 0..=l {
        let mut y = v.clone();
        for p in (i + 1..=l).rev() {
            y = b.hface(p, l - i, i + 1, &y);
        }
        out.push(y);
        if i < l {
            v = b.vface(l, l - i, 0, &v);
        }
    }
    out
}

/// `W̄K -> TNK`, `x_i = ((d_0)^{i-1} k_{n-1}, ..., k_{n-i})`.
pub fn wbar_to_tnk<K: SimplicialGroup>(wbar: &Wbar<K>, n: usize, k: &[K::Elem]) -> Vec<Vec<K::Elem>> {
    (0..=n).map(|i| wbar.condition_tuple(n, k, i)).collect()
}

/// Inverse of [`wbar_to_tnk`]: `k_{n-i}` is the last entry of `x_i`.
pub fn tnk_to_wbar<E: Clone>(n: usize, x: &[Vec<E>]) -> WbarSimplex<E> {
    (1..=n).map(|i| x[i].last().expect("x_i has i entries").clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimplicial::{check_bisimplicial_identities, LevelwiseNerve};
    use crate::group::{cyclic, symmetric, Tau};
    use crate::sgroup::{Codiscrete, Discrete};
    use crate::simplicial::{check_simplicial_identities, check_simplicial_map};

    #[test]
    fn total_and_diagonal_are_simplicial() {
        let n = LevelwiseNerve::new(Codiscrete::new(cyclic(2).unwrap()));
        check_simplicial_identities(&Total(&n), 3).unwrap();
        check_simplicial_identities(&Diagonal(&n), 3).unwrap();
        check_bisimplicial_identities(&Transpose(&n), 2, 2).unwrap();
        check_simplicial_map(&Diagonal(&n), &Total(&n), |l, x| Ok(cr_map(&n, l, x)), 3).unwrap();
    }

    #[test]
    fn tnk_is_wbar() {
        for (k, tau) in [
            (Codiscrete::new(symmetric(3).unwrap()), Tau::Free),
            (Codiscrete::new(symmetric(3).unwrap()), Tau::LowerCentral { q: 2 }),
        ] {
            let w = Wbar::with_tau(&k, tau);
            let t = Total(LevelwiseNerve::with_tau(&k, tau));
            for n in 0..=2 {
                let ws = w.simplices(n).unwrap();
                let ts = t.simplices(n).unwrap();
                assert_eq!(ws.len(), ts.len());
                for x in &ws {
                    let y = wbar_to_tnk(&w, n, x);
                    assert!(ts.contains(&y));
                    assert_eq!(&tnk_to_wbar(n, &y), x);
                }
            }
            check_simplicial_map(&w, &t, |n, x| Ok(wbar_to_tnk(&w, n, x)), 2).unwrap();
        }
        let s3 = Discrete::new(symmetric(3).unwrap());
        let t = Total(LevelwiseNerve::with_tau(&s3, Tau::LowerCentral { q: 2 }));
        assert_eq!(t.simplices(2).unwrap().len(), 18);
    }

    #[test]
    fn cr_on_discrete_edges() {
        let s3 = Discrete::new(symmetric(3).unwrap());
        let n = LevelwiseNerve::new(&s3);
        for g in 0..6 {
            let t = cr_map(&n, 1, &vec![g]);
            assert_eq!(tnk_to_wbar(1, &t), vec![g]);
        }
    }
}
