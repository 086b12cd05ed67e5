use super::{Pointed, SimplicialSet};
use crate::error::Result;
use crate::ordinal::OrdinalMap;

/// A simplex of `ΣX`: the basepoint, or `x ∈ X_{n-1-a}` in the wedge
/// summand `a` of `(ΣX)_n`. Geometrically the first `a+1` vertices lie on
/// the cone point side and the remaining `n-a` span `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuspSimplex<S> {
    Base,
    Summand { a: usize, x: S },
}

/// Kan's suspension `(ΣX)_n = X_{n-1} ∨ ... ∨ X_0`.
#[derive(Clone, Debug)]
pub struct KanSuspension<X> {
    inner: X,
}

impl<X: Pointed> KanSuspension<X> {
    pub fn new(inner: X) -> Self {
        Self { inner }
    }

    pub fn inner(&self) -> &X {
        &self.inner
    }

    fn summand(&self, a: usize, x: X::Simplex, deg: usize) -> SuspSimplex<X::Simplex> {
        if x == self.inner.basepoint(deg) {
            SuspSimplex::Base
        } else {
            SuspSimplex::Summand { a, x }
        }
    }
}

impl<X: Pointed> SimplicialSet for KanSuspension<X> {
    type Simplex = SuspSimplex<X::Simplex>;

    fn simplices(&self, n: usize) -> Result<Vec<Self::Simplex>> {
        let mut out = vec![SuspSimplex::Base];
        for a in 0..n {
            let deg = n - 1 - a;
            let base = self.inner.basepoint(deg);
            for x in self.inner.simplices(deg)? {
                if x != base {
                    out.push(SuspSimplex::Summand { a, x });
                }
            }
        }
        Ok(out)
    }

    fn act(&self, theta: &OrdinalMap, s: &Self::Simplex) -> Self::Simplex {
        let SuspSimplex::Summand { a, x } = s else {
            return SuspSimplex::Base;
        };
        let (a, m) = (*a, theta.source());
        let below = theta.values().iter().take_while(|&&v| v <= a).count();
        if below == 0 || below == m + 1 {
            return SuspSimplex::Base;
        }
        let a2 = below - 1;
        let n = theta.target();
        let values: Vec<usize> = theta.values()[below..].iter().map(|v| v - (a + 1)).collect();
        let theta2 = OrdinalMap::new(values, n - a).expect("restriction is monotone");
        let x2 = self.inner.act(&theta2, x);
        self.summand(a2, x2, m - below)
    }

    fn face(&self, n: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        self.act(&OrdinalMap::coface(i, n).expect("face index"), s)
    }

    fn degeneracy(&self, n: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        self.act(&OrdinalMap::codegeneracy(i, n).expect("degeneracy index"), s)
    }

    fn max_degree(&self) -> Option<usize> {
        self.inner.max_degree().map(|d| d + 1)
    }
}

impl<X: Pointed> Pointed for KanSuspension<X> {
    fn basepoint(&self, _n: usize) -> Self::Simplex {
        SuspSimplex::Base
    }
}
