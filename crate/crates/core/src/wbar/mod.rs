//! The classifying complex `W̄K`, its subcomplexes `W̄(τ,K)`, the total
//! complex `WK`, and the maps relating them to loop groups and suspensions.

mod maps;
mod tuples;

use rayon::prelude::*;

pub use maps::{
    counit, kappa, kappa_tau, milnor_composite, triangle_identity, unit, verify_counit, verify_filtration,
    verify_kappa, verify_unit, FiltrationReport,
};
pub use tuples::{decode_hom, encode_hom, verify_tuple_bijection, TupleHom, TupleReport};

use crate::error::{Error, Result};
use crate::group::{Tau, TauChecker};
use crate::sgroup::{LevelGroup, SimplicialGroup};
use crate::simplicial::{Pointed, SimplicialSet};

/// Enumeration budget for one level of `W̄K`.
pub const WBAR_BUDGET: u128 = 1 << 22;

/// A `k`-simplex `(x_{k-1}, ..., x_0)` of `W̄K`, stored top entry first, so
/// entry `t` lies in `K_{k-1-t}`.
pub type WbarSimplex<E> = Vec<E>;

/// `W̄K`, or its subcomplex `W̄(τ,K)` when `tau` is not free.
#[derive(Clone, Debug)]
pub struct Wbar<K> {
    k: K,
    tau: Tau,
    budget: u128,
}

impl<K: SimplicialGroup> Wbar<K> {
    pub fn new(k: K) -> Self {
        Self { k, tau: Tau::Free, budget: WBAR_BUDGET }
    }

    pub fn with_tau(k: K, tau: Tau) -> Self {
        Self { k, tau, budget: WBAR_BUDGET }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn group(&self) -> &K {
        &self.k
    }

    pub fn tau(&self) -> Tau {
        self.tau
    }

    /// The `l`-th admissibility tuple `((d_0)^{l-1} x_{k-1}, ..., x_{k-l})`
    /// in `K_{k-l}`.
    pub fn condition_tuple(&self, k: usize, x: &[K::Elem], l: usize) -> Vec<K::Elem> {
        (1..=l)
            .map(|j| {
                let mut y = x[j - 1].clone();
                for level in (k - l + 1..=k - j).rev() {
                    y = self.k.face(level, 0, &y);
                }
                y
            })
            .collect()
    }

    /// Membership of a `k`-simplex of `W̄K` in `W̄(τ,K)`.
    pub fn is_member(&self, k: usize, x: &[K::Elem]) -> bool {
        if self.tau == Tau::Free {
            return true;
        }
        (1..=k).all(|l| {
            let level = LevelGroup { k: &self.k, n: k - l };
            TauChecker::new(self.tau, &level).admissible(&self.condition_tuple(k, x, l))
        })
    }

    /// The first `l` at which membership fails.
    pub fn membership_witness(&self, k: usize, x: &[K::Elem]) -> Option<usize> {
        (1..=k).find(|&l| {
            let level = LevelGroup { k: &self.k, n: k - l };
            !TauChecker::new(self.tau, &level).admissible(&self.condition_tuple(k, x, l))
        })
    }

    /// `|W̄K_k|` without enumerating.
    pub fn full_count(&self, k: usize) -> Option<u128> {
        (0..k).try_fold(1u128, |acc, n| acc.checked_mul(self.k.level_order(n)?))
    }

    fn levels(&self, k: usize) -> Result<Vec<Vec<K::Elem>>> {
        let requested = match self.full_count(k) {
            Some(c) => c,
            None => (0..k).map(|n| self.k.elements(n).map(|e| e.len() as u128)).try_fold(1u128, |a, c| {
                c.map(|c| a.saturating_mul(c))
            })?,
        };
        if requested > self.budget {
            return Err(Error::BudgetExceeded { requested, budget: self.budget });
        }
        // entry t ranges over K_{k-1-t}
        (0..k).map(|t| self.k.elements(k - 1 - t)).collect()
    }

    fn dfs(&self, k: usize, levels: &[Vec<K::Elem>], checkers: &[TauChecker<'_, LevelGroup<'_, K>>], prefix: &mut Vec<K::Elem>, out: &mut Vec<Vec<K::Elem>>) {
        let l = prefix.len();
        if l == k {
            out.push(prefix.clone());
            return;
        }
        for x in &levels[l] {
            prefix.push(x.clone());
            let l = l + 1;
            if checkers[k - l].admissible(&self.condition_tuple(k, prefix, l)) {
                self.dfs(k, levels, checkers, prefix, out);
            }
            prefix.pop();
        }
    }
}

impl<K: SimplicialGroup> SimplicialSet for Wbar<K> {
    type Simplex = WbarSimplex<K::Elem>;

    fn simplices(&self, k: usize) -> Result<Vec<Self::Simplex>> {
        if let Some(max) = self.max_degree() {
            if k > max {
                return Err(Error::InsufficientTruncation { requested: k, available: max });
            }
        }
        let levels = self.levels(k)?;
        if k == 0 {
            return Ok(vec![Vec::new()]);
        }
        if self.tau == Tau::Free {
            let mut out: Vec<Vec<K::Elem>> = vec![Vec::new()];
            for level in &levels {
                out = out
                    .into_iter()
                    .flat_map(|p| {
                        level.iter().map(move |x| {
                            let mut q = p.clone();
                            q.push(x.clone());
                            q
                        })
                    })
                    .collect();
            }
            return Ok(out);
        }
        let groups: Vec<LevelGroup<'_, K>> = (0..k).map(|n| LevelGroup { k: &self.k, n }).collect();
        let checkers: Vec<_> = groups.iter().map(|g| TauChecker::new(self.tau, g)).collect();
        let chunks: Vec<Vec<Vec<K::Elem>>> = levels[0]
            .par_iter()
            .map(|first| {
                let mut out = Vec::new();
                let mut prefix = vec![first.clone()];
                if checkers[k - 1].admissible(&prefix) {
                    self.dfs(k, &levels, &checkers, &mut prefix, &mut out);
                }
                out
            })
            .collect();
        Ok(chunks.into_iter().flatten().collect())
    }

    fn face(&self, k: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        if i == 0 {
            return x[1..].to_vec();
        }
        let mut out = Vec::with_capacity(k - 1);
        out.extend(x[..i - 1].iter().enumerate().map(|(t, y)| self.k.face(k - 1 - t, i - 1 - t, y)));
        if i < k {
            out.push(self.k.mul(k - i - 1, &self.k.face(k - i, 0, &x[i - 1]), &x[i]));
            out.extend(x[i + 1..].iter().cloned());
        }
        out
    }

    fn degeneracy(&self, k: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        let mut out = Vec::with_capacity(k + 1);
        out.extend(x[..i].iter().enumerate().map(|(t, y)| self.k.degeneracy(k - 1 - t, i - 1 - t, y)));
        out.push(self.k.one(k - i));
        out.extend(x[i..].iter().cloned());
        out
    }

    fn max_degree(&self) -> Option<usize> {
        self.k.max_degree().map(|d| d + 1)
    }

    fn contains(&self, k: usize, x: &Self::Simplex) -> Result<bool> {
        Ok(x.len() == k && self.is_member(k, x))
    }
}

impl<K: SimplicialGroup> Pointed for Wbar<K> {
    fn basepoint(&self, k: usize) -> Self::Simplex {
        (0..k).map(|t| self.k.one(k - 1 - t)).collect()
    }
}

/// `WK`: `WK_n = W̄K_{n+1}` with the faces and degeneracies shifted by one,
/// projecting to `W̄K` by `d_0` and acted on by `K` through the top entry.
#[derive(Clone, Debug)]
pub struct WTotal<K> {
    wbar: Wbar<K>,
}

impl<K: SimplicialGroup> WTotal<K> {
    pub fn new(k: K) -> Self {
        Self { wbar: Wbar::new(k) }
    }

    pub fn base(&self) -> &Wbar<K> {
        &self.wbar
    }

    pub fn project(&self, n: usize, w: &WbarSimplex<K::Elem>) -> WbarSimplex<K::Elem> {
        self.wbar.face(n + 1, 0, w)
    }

    /// `g · (g_n, x_{n-1}, ..., x_0) = (g g_n, x_{n-1}, ..., x_0)`.
    pub fn act_left(&self, n: usize, g: &K::Elem, w: &WbarSimplex<K::Elem>) -> WbarSimplex<K::Elem> {
        let mut out = w.clone();
        out[0] = self.wbar.k.mul(n, g, &w[0]);
        out
    }

    /// The fibre over a simplex of `W̄K`.
    pub fn fibre(&self, n: usize, b: &WbarSimplex<K::Elem>) -> Result<Vec<WbarSimplex<K::Elem>>> {
        Ok(self
            .wbar
            .k
            .elements(n)?
            .into_iter()
            .map(|g| {
                let mut w = vec![g];
                w.extend(b.iter().cloned());
                w
            })
            .collect())
    }
}

impl<K: SimplicialGroup> SimplicialSet for WTotal<K> {
    type Simplex = WbarSimplex<K::Elem>;

    fn simplices(&self, n: usize) -> Result<Vec<Self::Simplex>> {
        self.wbar.simplices(n + 1)
    }
    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        self.wbar.face(n + 1, i + 1, x)
    }
    fn degeneracy(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        self.wbar.degeneracy(n + 1, i + 1, x)
    }
    fn max_degree(&self) -> Option<usize> {
        self.wbar.max_degree().map(|d| d.saturating_sub(1))
    }
}
