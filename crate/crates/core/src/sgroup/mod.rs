//! Simplicial groups: finite ones given levelwise, and the symbolic free
//! ones (loop groups, `π_1 Dec Δ[k]`, Milnor's construction).

mod finite;
mod loops;
mod milnor;

use std::fmt::Debug;
use std::hash::Hash;

pub use finite::{AbelianNerve, Codiscrete, Discrete};
pub use loops::{epsilon, epsilon_inverse, verify_epsilon, DecGen, EpsilonReport, LoopGroup, Pi1Dec};
pub use milnor::{suspension_to_milnor, verify_suspension_milnor, MilnorFK};

use crate::error::{Error, Result};
use crate::group::GroupOps;
use crate::ordinal::OrdinalMap;
use crate::simplicial::{check_simplicial_identities, Pointed, SimplicialSet};

/// A simplicial object in groups. Structure maps are homomorphisms.
pub trait SimplicialGroup: Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn one(&self, n: usize) -> Self::Elem;
    fn mul(&self, n: usize, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, n: usize, a: &Self::Elem) -> Self::Elem;
    fn face(&self, n: usize, i: usize, a: &Self::Elem) -> Self::Elem;
    fn degeneracy(&self, n: usize, i: usize, a: &Self::Elem) -> Self::Elem;

    /// All elements of `K_n`; symbolic free levels report an error.
    fn elements(&self, n: usize) -> Result<Vec<Self::Elem>>;

    /// A generating set of `K_n`; defaults to all elements.
    fn generators(&self, n: usize) -> Result<Vec<Self::Elem>> {
        self.elements(n)
    }

    fn act(&self, theta: &OrdinalMap, a: &Self::Elem) -> Self::Elem {
        let (faces, degens) = theta.operator_word();
        let mut n = theta.target();
        let mut cur = a.clone();
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

    fn is_one(&self, n: usize, a: &Self::Elem) -> bool {
        *a == self.one(n)
    }

    fn level_order(&self, _n: usize) -> Option<u128> {
        None
    }

    fn max_degree(&self) -> Option<usize> {
        None
    }

    fn name(&self) -> String {
        "K".into()
    }
}

impl<T: SimplicialGroup + ?Sized> SimplicialGroup for &T {
    type Elem = T::Elem;
    fn one(&self, n: usize) -> T::Elem {
        (**self).one(n)
    }
    fn mul(&self, n: usize, a: &T::Elem, b: &T::Elem) -> T::Elem {
        (**self).mul(n, a, b)
    }
    fn inv(&self, n: usize, a: &T::Elem) -> T::Elem {
        (**self).inv(n, a)
    }
    fn face(&self, n: usize, i: usize, a: &T::Elem) -> T::Elem {
        (**self).face(n, i, a)
    }
    fn degeneracy(&self, n: usize, i: usize, a: &T::Elem) -> T::Elem {
        (**self).degeneracy(n, i, a)
    }
    fn elements(&self, n: usize) -> Result<Vec<T::Elem>> {
        (**self).elements(n)
    }
    fn generators(&self, n: usize) -> Result<Vec<T::Elem>> {
        (**self).generators(n)
    }
    fn act(&self, theta: &OrdinalMap, a: &T::Elem) -> T::Elem {
        (**self).act(theta, a)
    }
    fn is_one(&self, n: usize, a: &T::Elem) -> bool {
        (**self).is_one(n, a)
    }
    fn level_order(&self, n: usize) -> Option<u128> {
        (**self).level_order(n)
    }
    fn max_degree(&self) -> Option<usize> {
        (**self).max_degree()
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

/// The group `K_n` on its own.
pub struct LevelGroup<'a, K: ?Sized> {
    pub k: &'a K,
    pub n: usize,
}

impl<K: SimplicialGroup + ?Sized> GroupOps for LevelGroup<'_, K> {
    type Elem = K::Elem;
    fn one(&self) -> K::Elem {
        self.k.one(self.n)
    }
    fn mul(&self, a: &K::Elem, b: &K::Elem) -> K::Elem {
        self.k.mul(self.n, a, b)
    }
    fn inv(&self, a: &K::Elem) -> K::Elem {
        self.k.inv(self.n, a)
    }
}

/// The underlying simplicial set, pointed at the identity.
pub struct Underlying<K>(pub K);

impl<K: SimplicialGroup> SimplicialSet for Underlying<K> {
    type Simplex = K::Elem;
    fn simplices(&self, n: usize) -> Result<Vec<K::Elem>> {
        self.0.elements(n)
    }
    fn face(&self, n: usize, i: usize, x: &K::Elem) -> K::Elem {
        self.0.face(n, i, x)
    }
    fn degeneracy(&self, n: usize, i: usize, x: &K::Elem) -> K::Elem {
        self.0.degeneracy(n, i, x)
    }
    fn act(&self, theta: &OrdinalMap, x: &K::Elem) -> K::Elem {
        self.0.act(theta, x)
    }
    fn max_degree(&self) -> Option<usize> {
        self.0.max_degree()
    }
}

impl<K: SimplicialGroup> Pointed for Underlying<K> {
    fn basepoint(&self, n: usize) -> K::Elem {
        self.0.one(n)
    }
}

/// Checks the simplicial identities on all elements and that every face and
/// degeneracy is a homomorphism, on all pairs when there are at most
/// `pair_limit` of them and on a deterministic sample otherwise.
pub fn check_simplicial_group<K: SimplicialGroup>(k: &K, max_n: usize, pair_limit: usize) -> Result<()> {
    check_simplicial_identities(&Underlying(k), max_n)?;
    for n in 0..=max_n {
        let elems = k.elements(n)?;
        let total = elems.len() * elems.len();
        let stride = if total <= pair_limit { 1 } else { total / pair_limit + 1 };
        for idx in (0..total).step_by(stride) {
            let (a, b) = (&elems[idx / elems.len()], &elems[idx % elems.len()]);
            let ab = k.mul(n, a, b);
            for i in 0..=n {
                if k.degeneracy(n, i, &ab) != k.mul(n + 1, &k.degeneracy(n, i, a), &k.degeneracy(n, i, b)) {
                    return Err(Error::VerificationFailure(format!("s_{i} is not a homomorphism at level {n}")));
                }
                if n > 0 && k.face(n, i, &ab) != k.mul(n - 1, &k.face(n, i, a), &k.face(n, i, b)) {
                    return Err(Error::VerificationFailure(format!("d_{i} is not a homomorphism at level {n}")));
                }
            }
        }
    }
    Ok(())
}

/// Simplicial identities checked on generators only, as equalities of
/// elements. For free levels this is equivalent to the full check.
pub fn check_identities_on_generators<K: SimplicialGroup + ?Sized>(k: &K, max_n: usize) -> Result<()> {
    let fail = |m: String| Err(Error::VerificationFailure(m));
    for n in 0..=max_n {
        for g in k.generators(n)? {
            for j in 0..=n {
                let sj = k.degeneracy(n, j, &g);
                for i in 0..=j {
                    if k.degeneracy(n + 1, i, &sj) != k.degeneracy(n + 1, j + 1, &k.degeneracy(n, i, &g)) {
                        return fail(format!("s_{i} s_{j} fails on {g:?} at level {n}"));
                    }
                }
                for i in 0..=n + 1 {
                    let lhs = k.face(n + 1, i, &sj);
                    let rhs = if i < j {
                        k.degeneracy(n - 1, j - 1, &k.face(n, i, &g))
                    } else if i == j || i == j + 1 {
                        g.clone()
                    } else {
                        k.degeneracy(n - 1, j, &k.face(n, i - 1, &g))
                    };
                    if lhs != rhs {
                        return fail(format!("d_{i} s_{j} fails on {g:?} at level {n}"));
                    }
                }
            }
            if n >= 2 {
                for j in 1..=n {
                    let dj = k.face(n, j, &g);
                    for i in 0..j {
                        if k.face(n - 1, i, &dj) != k.face(n - 1, j - 1, &k.face(n, i, &g)) {
                            return fail(format!("d_{i} d_{j} fails on {g:?} at level {n}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
