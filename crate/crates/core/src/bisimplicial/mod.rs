//! Bisimplicial sets, their diagonal and total simplicial sets, and the
//! comparison maps between homotopy colimit models.

mod condense;
mod grothendieck;
mod nerve;
mod psi;
mod zigzag;

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::ordinal::OrdinalMap;
use crate::simplicial::{check_simplicial_identities, SimplicialSet};

pub use condense::{cr_map, tnk_to_wbar, wbar_to_tnk, Diagonal, Total, Transpose};
pub use grothendieck::{tonks, tonks_inverse, tonks_target, verify_tonks, GrothendieckNerve, IntChain, TonksReport, TonksTarget};
pub use nerve::{LevelwiseNerve, NERVE_BUDGET};
pub use psi::{bk_map, DeltaChain, Psi, PsiSimplex};
pub use zigzag::{verify_zigzag, verify_zigzag_map, Status, Verdict, ZigzagMap};

/// A bisimplicial set with horizontal degree `p` and vertical degree `q`.
pub trait BisimplicialSet: Sync {
    type Simplex: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn simplices(&self, p: usize, q: usize) -> Result<Vec<Self::Simplex>>;
    fn hface(&self, p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex;
    fn hdegeneracy(&self, p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex;
    fn vface(&self, p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex;
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex;

    /// Horizontal `θ^*` for `θ : [m] -> [p]`.
    fn hact(&self, theta: &OrdinalMap, q: usize, x: &Self::Simplex) -> Self::Simplex {
        let (faces, degens) = theta.operator_word();
        let mut p = theta.target();
        let mut cur = x.clone();
        for i in faces {
            cur = self.hface(p, q, i, &cur);
            p -= 1;
        }
        for j in degens {
            cur = self.hdegeneracy(p, q, j, &cur);
            p += 1;
        }
        cur
    }

    /// Vertical `θ^*` for `θ : [m] -> [q]`.
    fn vact(&self, p: usize, theta: &OrdinalMap, x: &Self::Simplex) -> Self::Simplex {
        let (faces, degens) = theta.operator_word();
        let mut q = theta.target();
        let mut cur = x.clone();
        for i in faces {
            cur = self.vface(p, q, i, &cur);
            q -= 1;
        }
        for j in degens {
            cur = self.vdegeneracy(p, q, j, &cur);
            q += 1;
        }
        cur
    }
}

impl<T: BisimplicialSet + ?Sized> BisimplicialSet for &T {
    type Simplex = T::Simplex;

    fn simplices(&self, p: usize, q: usize) -> Result<Vec<Self::Simplex>> {
        (**self).simplices(p, q)
    }
    fn hface(&self, p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).hface(p, q, i, x)
    }
    fn hdegeneracy(&self, p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).hdegeneracy(p, q, i, x)
    }
    fn vface(&self, p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).vface(p, q, j, x)
    }
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).vdegeneracy(p, q, j, x)
    }
    fn hact(&self, theta: &OrdinalMap, q: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).hact(theta, q, x)
    }
    fn vact(&self, p: usize, theta: &OrdinalMap, x: &Self::Simplex) -> Self::Simplex {
        (**self).vact(p, theta, x)
    }
}

/// Fixed vertical degree `q`, as a simplicial set in `p`.
pub struct Row<'a, B: ?Sized> {
    pub inner: &'a B,
    pub q: usize,
}

impl<B: BisimplicialSet + ?Sized> SimplicialSet for Row<'_, B> {
    type Simplex = B::Simplex;
    fn simplices(&self, n: usize) -> Result<Vec<B::Simplex>> {
        self.inner.simplices(n, self.q)
    }
    fn face(&self, n: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.inner.hface(n, self.q, i, x)
    }
    fn degeneracy(&self, n: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.inner.hdegeneracy(n, self.q, i, x)
    }
}

/// Fixed horizontal degree `p`, as a simplicial set in `q`.
pub struct Column<'a, B: ?Sized> {
    pub inner: &'a B,
    pub p: usize,
}

impl<B: BisimplicialSet + ?Sized> SimplicialSet for Column<'_, B> {
    type Simplex = B::Simplex;
    fn simplices(&self, n: usize) -> Result<Vec<B::Simplex>> {
        self.inner.simplices(self.p, n)
    }
    fn face(&self, n: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.inner.vface(self.p, n, j, x)
    }
    fn degeneracy(&self, n: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.inner.vdegeneracy(self.p, n, j, x)
    }
}

/// Checks every row and column up to the given degrees, and that
/// horizontal and vertical operators commute.
pub fn check_bisimplicial_identities<B: BisimplicialSet + ?Sized>(b: &B, max_p: usize, max_q: usize) -> Result<()> {
    for q in 0..=max_q {
        check_simplicial_identities(&Row { inner: b, q }, max_p)?;
    }
    for p in 0..=max_p {
        check_simplicial_identities(&Column { inner: b, p }, max_q)?;
    }
    for p in 0..=max_p {
        for q in 0..=max_q {
            for x in b.simplices(p, q)? {
                for i in 0..=p {
                    for j in 0..=q {
                        let checks = [
                            (
                                b.vdegeneracy(p + 1, q, j, &b.hdegeneracy(p, q, i, &x)),
                                b.hdegeneracy(p, q + 1, i, &b.vdegeneracy(p, q, j, &x)),
                            ),
                            (
                                if q > 0 { b.vface(p + 1, q, j, &b.hdegeneracy(p, q, i, &x)) } else { x.clone() },
                                if q > 0 { b.hdegeneracy(p, q - 1, i, &b.vface(p, q, j, &x)) } else { x.clone() },
                            ),
                            (
                                if p > 0 { b.hface(p, q + 1, i, &b.vdegeneracy(p, q, j, &x)) } else { x.clone() },
                                if p > 0 { b.vdegeneracy(p - 1, q, j, &b.hface(p, q, i, &x)) } else { x.clone() },
                            ),
                            (
                                if p > 0 && q > 0 { b.vface(p - 1, q, j, &b.hface(p, q, i, &x)) } else { x.clone() },
                                if p > 0 && q > 0 { b.hface(p, q - 1, i, &b.vface(p, q, j, &x)) } else { x.clone() },
                            ),
                        ];
                        if let Some(k) = checks.iter().position(|(l, r)| l != r) {
                            return Err(Error::VerificationFailure(format!(
                                "horizontal and vertical operators {i}, {j} do not commute (case {k}) on {x:?} at ({p},{q})"
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
