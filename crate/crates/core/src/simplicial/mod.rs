//! Simplicial sets as degree-indexed oracles, explicit truncations, the
//! standard simplices, décalage and Kan suspension.

mod complex;
mod decalage;
mod standard;
mod suspension;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

pub use complex::{materialize, standard_simplex_complex, ComplexJson, Materialized, SimplexRef, TruncatedComplex};
pub use decalage::{dec_g, dec_g_inverse, dec0_component, dec0_component_inverse, Dec0, DecTotal, DModel};
pub use standard::StandardSimplex;
pub use suspension::{KanSuspension, SuspSimplex};

use crate::error::{Error, Result};
use crate::ordinal::OrdinalMap;

/// A simplicial set whose levels can be enumerated. Every operation is told
/// the degree of its argument, since representations need not record it.
pub trait SimplicialSet: Sync {
    type Simplex: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    /// All `n`-simplices, degenerate ones included, in a fixed order.
    fn simplices(&self, n: usize) -> Result<Vec<Self::Simplex>>;

    /// `d_i : X_n -> X_{n-1}`.
    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex;

    /// `s_i : X_n -> X_{n+1}`.
    fn degeneracy(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex;

    /// `θ^* : X_n -> X_m` for `θ : [m] -> [n]`.
    fn act(&self, theta: &OrdinalMap, x: &Self::Simplex) -> Self::Simplex {
        let (faces, degens) = theta.operator_word();
        let mut n = theta.target();
        let mut cur = x.clone();
        for i in faces {
            cur = self.face(n, i, &cur);
            n -= 1;
        }
        for j in degens {
            cur = self.degeneracy(n, j, &cur);
            n += 1;
        }
        cur
    }

    fn is_degenerate(&self, n: usize, x: &Self::Simplex) -> bool {
        (0..n).any(|i| self.degeneracy(n - 1, i, &self.face(n, i, x)) == *x)
    }

    /// Highest degree that is represented faithfully, if any.
    fn max_degree(&self) -> Option<usize> {
        None
    }

    fn nondegenerate(&self, n: usize) -> Result<Vec<Self::Simplex>> {
        Ok(self.simplices(n)?.into_iter().filter(|x| !self.is_degenerate(n, x)).collect())
    }

    fn contains(&self, n: usize, x: &Self::Simplex) -> Result<bool> {
        Ok(self.simplices(n)?.contains(x))
    }
}

impl<T: SimplicialSet + ?Sized> SimplicialSet for &T {
    type Simplex = T::Simplex;

    fn simplices(&self, n: usize) -> Result<Vec<Self::Simplex>> {
        (**self).simplices(n)
    }
    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).face(n, i, x)
    }
    fn degeneracy(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).degeneracy(n, i, x)
    }
    fn act(&self, theta: &OrdinalMap, x: &Self::Simplex) -> Self::Simplex {
        (**self).act(theta, x)
    }
    fn is_degenerate(&self, n: usize, x: &Self::Simplex) -> bool {
        (**self).is_degenerate(n, x)
    }
    fn max_degree(&self) -> Option<usize> {
        (**self).max_degree()
    }
    fn nondegenerate(&self, n: usize) -> Result<Vec<Self::Simplex>> {
        (**self).nondegenerate(n)
    }
    fn contains(&self, n: usize, x: &Self::Simplex) -> Result<bool> {
        (**self).contains(n, x)
    }
}

/// A simplicial set with a chosen basepoint in every degree.
pub trait Pointed: SimplicialSet {
    fn basepoint(&self, n: usize) -> Self::Simplex;
}

impl<T: Pointed + ?Sized> Pointed for &T {
    fn basepoint(&self, n: usize) -> Self::Simplex {
        (**self).basepoint(n)
    }
}

/// Eilenberg–Zilber decomposition `x = σ^* y` with `σ` surjective and `y`
/// nondegenerate; returns `(σ, y)`.
pub fn normal_form<X: SimplicialSet + ?Sized>(x: &X, n: usize, s: &X::Simplex) -> (OrdinalMap, X::Simplex) {
    let mut epi = OrdinalMap::identity(n);
    let mut cur = s.clone();
    let mut deg = n;
    while let Some(i) = (0..deg).find(|&i| x.degeneracy(deg - 1, i, &x.face(deg, i, &cur)) == cur) {
        epi = OrdinalMap::codegeneracy(i, deg - 1).expect("index in range").after(&epi).expect("composable");
        cur = x.face(deg, i, &cur);
        deg -= 1;
    }
    (epi, cur)
}

/// Exhaustively checks the simplicial identities on all simplices of
/// degree at most `max_n`, and that faces and degeneracies stay inside the
/// enumerated levels.
pub fn check_simplicial_identities<X: SimplicialSet + ?Sized>(x: &X, max_n: usize) -> Result<()> {
    let levels: Vec<Vec<X::Simplex>> = (0..=max_n + 1).map(|n| x.simplices(n)).collect::<Result<_>>()?;
    let member: Vec<std::collections::HashSet<&X::Simplex>> = levels.iter().map(|l| l.iter().collect()).collect();
    let fail = |what: String| Err(Error::VerificationFailure(what));
    for n in 0..=max_n {
        for s in &levels[n] {
            for i in 0..=n {
                let si = x.degeneracy(n, i, s);
                if !member[n + 1].contains(&si) {
                    return fail(format!("s_{i} of {s:?} leaves level {}", n + 1));
                }
                for j in i..=n {
                    if x.degeneracy(n + 1, i, &x.degeneracy(n, j, s)) != x.degeneracy(n + 1, j + 1, &si) {
                        return fail(format!("s_{i} s_{j} = s_{} s_{i} fails on {s:?}", j + 1));
                    }
                }
            }
            if n == 0 {
                continue;
            }
            for i in 0..=n {
                let di = x.face(n, i, s);
                if !member[n - 1].contains(&di) {
                    return fail(format!("d_{i} of {s:?} leaves level {}", n - 1));
                }
                for j in (i + 1..=n).filter(|_| n >= 2) {
                    let lhs = x.face(n - 1, i, &x.face(n, j, s));
                    let rhs = x.face(n - 1, j - 1, &di);
                    if lhs != rhs {
                        return fail(format!("d_{i} d_{j} = d_{} d_{i} fails on {s:?}", j - 1));
                    }
                }
            }
            // d_i s_j on s in X_n, i in 0..=n+1
            for j in 0..=n {
                let sj = x.degeneracy(n, j, s);
                for i in 0..=n + 1 {
                    let lhs = x.face(n + 1, i, &sj);
                    let rhs = if i < j {
                        x.degeneracy(n - 1, j - 1, &x.face(n, i, s))
                    } else if i == j || i == j + 1 {
                        s.clone()
                    } else {
                        x.degeneracy(n - 1, j, &x.face(n, i - 1, s))
                    };
                    if lhs != rhs {
                        return fail(format!("d_{i} s_{j} identity fails on {s:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks that `f` commutes with every face and degeneracy on all simplices
/// of `x` of degree at most `max_n`.
pub fn check_simplicial_map<X, Y, F>(x: &X, y: &Y, f: F, max_n: usize) -> Result<()>
where
    X: SimplicialSet + ?Sized,
    Y: SimplicialSet + ?Sized,
    F: Fn(usize, &X::Simplex) -> Result<Y::Simplex> + Sync,
{
    use rayon::prelude::*;
    for n in 0..=max_n {
        x.simplices(n)?.par_iter().try_for_each(|s| -> Result<()> {
            let fs = f(n, s)?;
            for i in 0..=n {
                if n > 0 && f(n - 1, &x.face(n, i, s))? != y.face(n, i, &fs) {
                    return Err(Error::NotSimplicial(format!("d_{i} on {s:?} in degree {n}")));
                }
                if f(n + 1, &x.degeneracy(n, i, s))? != y.degeneracy(n, i, &fs) {
                    return Err(Error::NotSimplicial(format!("s_{i} on {s:?} in degree {n}")));
                }
            }
            Ok(())
        })?;
    }
    Ok(())
}

/// Index of the nondegenerate simplices of each degree up to `max_n`.
pub struct CellIndex<S> {
    pub cells: Vec<Vec<S>>,
    pub index: Vec<HashMap<S, usize>>,
}

impl<S: Clone + Eq + Hash> CellIndex<S> {
    pub fn build<X: SimplicialSet<Simplex = S> + ?Sized>(x: &X, max_n: usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(max_n + 1);
        let mut index = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let nd = x.nondegenerate(n)?;
            index.push(nd.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect());
            cells.push(nd);
        }
        Ok(Self { cells, index })
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_examples() {
        let d2 = StandardSimplex::new(2);
        // s0 s0 of a vertex
        let v = OrdinalMap::new(vec![1], 3).unwrap();
        let ss = d2.degeneracy(1, 0, &d2.degeneracy(0, 0, &v));
        let (epi, core) = normal_form(&d2, 2, &ss);
        assert_eq!(core, v);
        assert_eq!(epi.values(), &[0, 0, 0]);
        // d1 s0 x = x
        let x = OrdinalMap::new(vec![0, 2], 3).unwrap();
        let y = d2.face(2, 1, &d2.degeneracy(1, 0, &x));
        let (epi, core) = normal_form(&d2, 1, &y);
        assert!(epi.is_identity());
        assert_eq!(core, x);
    }
}
