use super::BisimplicialSet;
use crate::error::Result;
use crate::group::{enumerate_admissible_in, Tau, TauChecker};
use crate::sgroup::{LevelGroup, SimplicialGroup};

/// Budget for one bidegree of a levelwise nerve.
pub const NERVE_BUDGET: u128 = 1 << 22;

/// `N(τ,K)`: in bidegree `(p,q)` the `τ`-admissible `p`-tuples of `K_q`.
/// Horizontally it is the nerve of `K_q`, vertically `K` acts entrywise.
#[derive(Clone, Debug)]
pub struct LevelwiseNerve<K> {
    k: K,
    tau: Tau,
}

impl<K: SimplicialGroup> LevelwiseNerve<K> {
    pub fn new(k: K) -> Self {
        Self { k, tau: Tau::Free }
    }

    pub fn with_tau(k: K, tau: Tau) -> Self {
        Self { k, tau }
    }

    pub fn group(&self) -> &K {
        &self.k
    }

    pub fn tau(&self) -> Tau {
        self.tau
    }

    pub fn is_member(&self, q: usize, x: &[K::Elem]) -> bool {
        let level = LevelGroup { k: &self.k, n: q };
        TauChecker::new(self.tau, &level).admissible(x)
    }
}

impl<K: SimplicialGroup> BisimplicialSet for LevelwiseNerve<K> {
    type Simplex = Vec<K::Elem>;

    fn simplices(&self, p: usize, q: usize) -> Result<Vec<Self::Simplex>> {
        let level = LevelGroup { k: &self.k, n: q };
        let elems = self.k.elements(q)?;
        enumerate_admissible_in(&TauChecker::new(self.tau, &level), &elems, p, NERVE_BUDGET)
    }

    fn hface(&self, p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        let mut out = x.clone();
        if i == 0 {
            out.remove(0);
        } else if i == p {
            out.pop();
        } else {
            let merged = self.k.mul(q, &x[i - 1], &x[i]);
            out.remove(i);
            out[i - 1] = merged;
        }
        out
    }

    fn hdegeneracy(&self, _p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        let mut out = x.clone();
        out.insert(i, self.k.one(q));
        out
    }

    fn vface(&self, _p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex {
        x.iter().map(|g| self.k.face(q, j, g)).collect()
    }

    fn vdegeneracy(&self, _p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex {
        x.iter().map(|g| self.k.degeneracy(q, j, g)).collect()
    }

    fn vact(&self, _p: usize, theta: &crate::ordinal::OrdinalMap, x: &Self::Simplex) -> Self::Simplex {
        x.iter().map(|g| self.k.act(theta, g)).collect()
    }
}
