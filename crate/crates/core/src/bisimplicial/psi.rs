use serde::Serialize;

use super::BisimplicialSet;
use crate::error::{Error, Result};
use crate::ordinal::{enumerate_maps, OrdinalMap};

/// A `q`-simplex `[n_0] -> ... -> [n_q]` of the nerve of the simplex
/// category.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DeltaChain {
    pub base: usize,
    pub maps: Vec<OrdinalMap>,
}

impl DeltaChain {
    pub fn point(n: usize) -> Self {
        Self { base: n, maps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `n_i`.
    pub fn object(&self, i: usize) -> usize {
        if i == 0 {
            self.base
        } else {
            self.maps[i - 1].target()
        }
    }

    pub fn top(&self) -> usize {
        self.object(self.maps.len())
    }

    /// The composite `[n_i] -> [n_j]` for `i <= j`.
    pub fn composite(&self, i: usize, j: usize) -> OrdinalMap {
        let mut f = OrdinalMap::identity(self.object(i));
        for t in i..j {
            f = self.maps[t].after(&f).expect("chain is composable");
        }
        f
    }

    pub fn face(&self, i: usize) -> Self {
        let q = self.maps.len();
        let mut out = self.clone();
        if i == 0 {
            out.base = self.object(1);
            out.maps.remove(0);
        } else if i == q {
            out.maps.pop();
        } else {
            let merged = self.maps[i].after(&self.maps[i - 1]).expect("composable");
            out.maps.remove(i);
            out.maps[i - 1] = merged;
        }
        out
    }

    pub fn degeneracy(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.maps.insert(i, OrdinalMap::identity(self.object(i)));
        out
    }

    /// All `q`-chains with every ordinal at most `[cap]`.
    pub fn enumerate(q: usize, cap: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (0..=cap).map(Self::point).collect();
        for _ in 0..q {
            out = out
                .into_iter()
                .flat_map(|c| {
                    let top = c.top();
                    (0..=cap).flat_map(move |n| enumerate_maps(top, n)).map(move |f| {
                        let mut d = c.clone();
                        d.maps.push(f);
                        d
                    })
                })
                .collect();
        }
        out
    }
}

/// A simplex `(σ, x)` of `ΨX`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiSimplex<S> {
    pub chain: DeltaChain,
    pub x: S,
}

/// `ΨX`: bidegree `(p,q)` holds a `q`-chain `[n_0] -> ... -> [n_q]` and an
/// `x ∈ X_{p,n_q}`; only ordinals up to `[cap]` are kept.
#[derive(Clone, Debug)]
pub struct Psi<X> {
    x: X,
    cap: usize,
}

impl<X: BisimplicialSet> Psi<X> {
    pub fn new(x: X, cap: usize) -> Self {
        Self { x, cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn inner(&self) -> &X {
        &self.x
    }

    pub fn check_cap(&self, s: &PsiSimplex<X::Simplex>) -> Result<()> {
        match (0..=s.chain.len()).map(|i| s.chain.object(i)).max() {
            Some(m) if m > self.cap => Err(Error::CapExceeded { requested: m, cap: self.cap }),
            _ => Ok(()),
        }
    }
}

impl<X: BisimplicialSet> BisimplicialSet for Psi<X> {
    type Simplex = PsiSimplex<X::Simplex>;

    fn simplices(&self, p: usize, q: usize) -> Result<Vec<Self::Simplex>> {
        let mut out = Vec::new();
        for chain in DeltaChain::enumerate(q, self.cap) {
            for x in self.x.simplices(p, chain.top())? {
                out.push(PsiSimplex { chain: chain.clone(), x });
            }
        }
        Ok(out)
    }

    fn hface(&self, p: usize, _q: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        PsiSimplex { chain: s.chain.clone(), x: self.x.hface(p, s.chain.top(), i, &s.x) }
    }

    fn hdegeneracy(&self, p: usize, _q: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        PsiSimplex { chain: s.chain.clone(), x: self.x.hdegeneracy(p, s.chain.top(), i, &s.x) }
    }

    fn vface(&self, p: usize, q: usize, j: usize, s: &Self::Simplex) -> Self::Simplex {
        let x = if j == q { self.x.vact(p, &s.chain.maps[q - 1], &s.x) } else { s.x.clone() };
        PsiSimplex { chain: s.chain.face(j), x }
    }

    fn vdegeneracy(&self, _p: usize, _q: usize, j: usize, s: &Self::Simplex) -> Self::Simplex {
        PsiSimplex { chain: s.chain.degeneracy(j), x: s.x.clone() }
    }
}

/// `BK : dΨX -> dX`, pulling `x` back vertically along `i ↦ θ_{l-1} ⋯ θ_i (n_i)`.
pub fn bk_map<X: BisimplicialSet>(x: &X, l: usize, s: &PsiSimplex<X::Simplex>) -> X::Simplex {
    let values: Vec<usize> = (0..=l).map(|i| s.chain.composite(i, l).apply(s.chain.object(i))).collect();
    let theta = OrdinalMap::new(values, s.chain.top() + 1).expect("images of the top elements are monotone");
    x.vact(l, &theta, &s.x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimplicial::{check_bisimplicial_identities, Diagonal, LevelwiseNerve};
    use crate::group::{cyclic, symmetric};
    use crate::sgroup::{Codiscrete, Discrete};
    use crate::simplicial::check_simplicial_map;

    #[test]
    fn chain_counts() {
        assert_eq!(DeltaChain::enumerate(0, 2).len(), 3);
        // maps between [0..2]: 1+2+3 + 1+3+6 + 1+4+10
        assert_eq!(DeltaChain::enumerate(1, 2).len(), 31);
    }

    #[test]
    fn psi_of_a_nerve() {
        let n = LevelwiseNerve::new(Discrete::new(cyclic(2).unwrap()));
        let psi = Psi::new(&n, 2);
        check_bisimplicial_identities(&psi, 2, 2).unwrap();
        let counts: Vec<Vec<usize>> =
            (0..=2).map(|p| (0..=2).map(|q| psi.simplices(p, q).unwrap().len()).collect()).collect();
        // a chain count times |N(Z/2)_p| = 2^p
        assert_eq!(counts[0], vec![3, 31, DeltaChain::enumerate(2, 2).len()]);
        assert_eq!(counts[2][1], 4 * 31);
        let c = LevelwiseNerve::new(Codiscrete::new(cyclic(2).unwrap()));
        check_bisimplicial_identities(&Psi::new(&c, 1), 2, 2).unwrap();
    }

    #[test]
    fn bk_is_simplicial() {
        let c = LevelwiseNerve::new(Codiscrete::new(cyclic(2).unwrap()));
        let psi = Psi::new(&c, 2);
        check_simplicial_map(&Diagonal(&psi), &Diagonal(&c), |l, s| Ok(bk_map(&c, l, s)), 2).unwrap();
        let s3 = LevelwiseNerve::new(Discrete::new(symmetric(3).unwrap()));
        let psi = Psi::new(&s3, 1);
        check_simplicial_map(&Diagonal(&psi), &Diagonal(&s3), |l, s| Ok(bk_map(&s3, l, s)), 2).unwrap();
        // on a 0-simplex it forgets the ordinal
        let v = PsiSimplex { chain: DeltaChain::point(2), x: vec![] };
        assert_eq!(bk_map(&s3, 0, &v), Vec::<usize>::new());
    }
}
