use serde::Serialize;

use super::{DeltaChain, LevelwiseNerve, Psi, PsiSimplex, Total, Transpose};
use crate::error::{Error, Result};
use crate::group::{Tau, TauChecker};
use crate::ordinal::OrdinalMap;
use crate::sgroup::{LevelGroup, SimplicialGroup};
use crate::simplicial::{check_simplicial_map, SimplicialSet};

/// An `l`-simplex `[n_0] --(θ_0,k_0)--> ... --(θ_{l-1},k_{l-1})--> [n_l]`
/// of `N∫K`, with `k_i ∈ K_{n_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntChain<E> {
    pub base: usize,
    pub arrows: Vec<(OrdinalMap, E)>,
}

impl<E: Clone> IntChain<E> {
    pub fn delta_chain(&self) -> DeltaChain {
        DeltaChain { base: self.base, maps: self.arrows.iter().map(|(t, _)| t.clone()).collect() }
    }

    pub fn object(&self, i: usize) -> usize {
        if i == 0 {
            self.base
        } else {
            self.arrows[i - 1].0.target()
        }
    }
}

/// `N∫K`, or its subcomplex `N(τ,∫K)`, with ordinals capped at `[cap]`.
#[derive(Clone, Debug)]
pub struct GrothendieckNerve<K> {
    k: K,
    tau: Tau,
    cap: usize,
}

impl<K: SimplicialGroup> GrothendieckNerve<K> {
    pub fn new(k: K, cap: usize) -> Self {
        Self { k, tau: Tau::Free, cap }
    }

    pub fn with_tau(k: K, tau: Tau, cap: usize) -> Self {
        Self { k, tau, cap }
    }

    pub fn group(&self) -> &K {
        &self.k
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `(θ, k)(φ, k') = (θφ, k' · φ^*(k))`.
    pub fn compose(&self, outer: &(OrdinalMap, K::Elem), inner: &(OrdinalMap, K::Elem)) -> (OrdinalMap, K::Elem) {
        let (theta, k) = outer;
        let (phi, k2) = inner;
        let m = phi.source();
        (theta.after(phi).expect("composable"), self.k.mul(m, k2, &self.k.act(phi, k)))
    }

    /// `(x_s, θ_s^* x_{s+1}, ..., θ_s^* ⋯ θ_{l-2}^* x_{l-1})` in `K_{n_s}`.
    pub fn pulled_tuple(&self, c: &IntChain<K::Elem>, s: usize) -> Vec<K::Elem> {
        let mut tail: Vec<K::Elem> = Vec::new();
        for t in (s..c.arrows.len()).rev() {
            let (theta, x) = &c.arrows[t];
            tail = std::iter::once(x.clone()).chain(tail.iter().map(|y| self.k.act(theta, y))).collect();
        }
        tail
    }

    /// The first `s` at which the pulled-back tuple is not admissible.
    pub fn membership_witness(&self, c: &IntChain<K::Elem>) -> Option<usize> {
        if self.tau == Tau::Free {
            return None;
        }
        (0..c.arrows.len()).find(|&s| {
            let level = LevelGroup { k: &self.k, n: c.object(s) };
            !TauChecker::new(self.tau, &level).admissible(&self.pulled_tuple(c, s))
        })
    }

    pub fn is_member(&self, c: &IntChain<K::Elem>) -> bool {
        self.membership_witness(c).is_none()
    }
}

impl<K: SimplicialGroup> SimplicialSet for GrothendieckNerve<K> {
    type Simplex = IntChain<K::Elem>;

    fn simplices(&self, l: usize) -> Result<Vec<Self::Simplex>> {
        let mut out = Vec::new();
        for chain in DeltaChain::enumerate(l, self.cap) {
            let mut partial: Vec<Vec<K::Elem>> = vec![Vec::new()];
            for i in 0..l {
                let elems = self.k.elements(chain.object(i))?;
                partial = partial
                    .into_iter()
                    .flat_map(|p| {
                        elems.iter().map(move |x| {
                            let mut q = p.clone();
                            q.push(x.clone());
                            q
                        })
                    })
                    .collect();
            }
            for ks in partial {
                let c = IntChain { base: chain.base, arrows: chain.maps.iter().cloned().zip(ks).collect() };
                if self.is_member(&c) {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }

    fn face(&self, l: usize, i: usize, c: &Self::Simplex) -> Self::Simplex {
        let mut out = c.clone();
        if i == 0 {
            out.base = c.object(1);
            out.arrows.remove(0);
        } else if i == l {
            out.arrows.pop();
        } else {
            let merged = self.compose(&c.arrows[i], &c.arrows[i - 1]);
            out.arrows.remove(i);
            out.arrows[i - 1] = merged;
        }
        out
    }

    fn degeneracy(&self, _l: usize, i: usize, c: &Self::Simplex) -> Self::Simplex {
        let mut out = c.clone();
        let n = c.object(i);
        out.arrows.insert(i, (OrdinalMap::identity(n), self.k.one(n)));
        out
    }
}

/// The target `TΨ'N(τ,K)` of the Tonks isomorphism.
pub type TonksTarget<K> = Total<Transpose<Psi<LevelwiseNerve<K>>>>;

pub fn tonks_target<K: SimplicialGroup>(k: K, tau: Tau, cap: usize) -> TonksTarget<K> {
    Total(Transpose(Psi::new(LevelwiseNerve::with_tau(k, tau), cap)))
}

/// `N∫K -> TΨ'NK`: component `i` is the chain up to `[n_i]` together with
/// the pulled-back tuple `(k_i, θ_i^* k_{i+1}, ...)`.
pub fn tonks<K: SimplicialGroup>(g: &GrothendieckNerve<K>, c: &IntChain<K::Elem>) -> Vec<PsiSimplex<Vec<K::Elem>>> {
    let l = c.arrows.len();
    let mut tuples: Vec<Vec<K::Elem>> = vec![Vec::new(); l + 1];
    for t in (0..l).rev() {
        let (theta, x) = &c.arrows[t];
        let mut v = Vec::with_capacity(l - t);
        v.push(x.clone());
        v.extend(tuples[t + 1].iter().map(|y| g.k.act(theta, y)));
        tuples[t] = v;
    }
    let maps: Vec<OrdinalMap> = c.arrows.iter().map(|(t, _)| t.clone()).collect();
    tuples
        .into_iter()
        .enumerate()
        .map(|(i, x)| PsiSimplex { chain: DeltaChain { base: c.base, maps: maps[..i].to_vec() }, x })
        .collect()
}

pub fn tonks_inverse<E: Clone>(y: &[PsiSimplex<Vec<E>>]) -> Result<IntChain<E>> {
    let last = y.last().ok_or_else(|| Error::VerificationFailure("empty tuple".into()))?;
    let l = y.len() - 1;
    let arrows = (0..l)
        .map(|i| {
            let k = y[i].x.first().cloned().ok_or_else(|| Error::VerificationFailure(format!("component {i} is empty")))?;
            Ok((last.chain.maps[i].clone(), k))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntChain { base: last.chain.base, arrows })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TonksReport {
    pub tau: String,
    pub cap: usize,
    /// `|N(τ,∫K)_l|` within the cap, which equals `|TΨ'N(τ,K)_l|`.
    pub counts: Vec<usize>,
}

/// Checks that the Tonks map is simplicial, bijective within the cap, has
/// the given inverse, and matches `N(τ,∫K)` with `TΨ'N(τ,K)` in both
/// directions.
pub fn verify_tonks<K: SimplicialGroup>(k: &K, tau: Tau, max_l: usize, cap: usize) -> Result<TonksReport> {
    let fail = |m: String| Err(Error::VerificationFailure(m));
    let full = GrothendieckNerve::new(k, cap);
    let sub = GrothendieckNerve::with_tau(k, tau, cap);
    let free_target = tonks_target(k, Tau::Free, cap);
    let target = tonks_target(k, tau, cap);
    check_simplicial_map(&full, &free_target, |_, c| Ok(tonks(&full, c)), max_l)?;
    let mut counts = Vec::new();
    for l in 0..=max_l {
        let chains = full.simplices(l)?;
        let images = free_target.simplices(l)?;
        if chains.len() != images.len() {
            return fail(format!("level {l}: {} chains but {} matched tuples", chains.len(), images.len()));
        }
        let mut members = 0;
        for c in &chains {
            let y = tonks(&full, c);
            if !free_target.is_matched(l, &y) {
                return fail(format!("tonks({c:?}) is not matched"));
            }
            if tonks_inverse(&y)? != *c {
                return fail(format!("roundtrip fails on {c:?}"));
            }
            let in_sub = sub.is_member(c);
            let nerve = target.0 .0.inner();
            let in_target = y.iter().all(|yi| nerve.is_member(yi.chain.top(), &yi.x));
            if in_sub != in_target {
                return fail(format!("membership differs on {c:?}: {in_sub} vs {in_target}"));
            }
            members += in_sub as usize;
        }
        for y in &images {
            let c = tonks_inverse(y)?;
            if tonks(&full, &c) != *y {
                return fail(format!("tonks(tonks^-1({y:?})) differs"));
            }
        }
        let sub_images = target.simplices(l)?;
        if sub_images.len() != members {
            return fail(format!("level {l}: {members} members but {} restricted tuples", sub_images.len()));
        }
        if let Some(y) = sub_images.iter().find(|y| tonks_inverse(y).map(|c| !sub.is_member(&c)).unwrap_or(true)) {
            return fail(format!("{y:?} does not come from N(τ,∫K)"));
        }
        counts.push(members);
    }
    Ok(TonksReport { tau: tau.to_string(), cap, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};
    use crate::sgroup::{Codiscrete, Discrete};
    use crate::simplicial::check_simplicial_identities;

    #[test]
    fn composition_law() {
        let g = GrothendieckNerve::new(Codiscrete::new(symmetric(3).unwrap()), 2);
        let phi = (OrdinalMap::new(vec![0, 0], 2).unwrap(), vec![1, 2]);
        let theta = (OrdinalMap::new(vec![1, 2], 3).unwrap(), vec![3, 4]);
        let (t, k) = g.compose(&theta, &phi);
        assert_eq!(t.values(), &[1, 1]);
        // k' · φ^*(k) = (1,2)·(3,3)
        let s3 = symmetric(3).unwrap();
        assert_eq!(k, vec![s3.op(1, 3), s3.op(2, 3)]);
    }

    #[test]
    fn grothendieck_nerves_are_simplicial() {
        check_simplicial_identities(&GrothendieckNerve::new(Discrete::new(cyclic(4).unwrap()), 1), 2).unwrap();
        let z4 = GrothendieckNerve::with_tau(Discrete::new(cyclic(4).unwrap()), Tau::LowerCentral { q: 2 }, 2);
        check_simplicial_identities(&z4, 2).unwrap();
        let s3 = GrothendieckNerve::with_tau(Codiscrete::new(symmetric(3).unwrap()), Tau::LowerCentral { q: 2 }, 1);
        check_simplicial_identities(&s3, 1).unwrap();
    }

    #[test]
    fn constant_ordinal_chains_commute() {
        let s3 = symmetric(3).unwrap();
        let g = GrothendieckNerve::with_tau(Discrete::new(s3.clone()), Tau::LowerCentral { q: 2 }, 0);
        for a in 0..6 {
            for b in 0..6 {
                let id = OrdinalMap::identity(0);
                let c = IntChain { base: 0, arrows: vec![(id.clone(), a), (id, b)] };
                assert_eq!(g.is_member(&c), s3.op(a, b) == s3.op(b, a));
            }
        }
    }

    #[test]
    fn tonks_roundtrip() {
        let r = verify_tonks(&Discrete::new(cyclic(2).unwrap()), Tau::Free, 2, 2).unwrap();
        assert_eq!(r.counts[0], 3);
        verify_tonks(&Discrete::new(symmetric(3).unwrap()), Tau::LowerCentral { q: 2 }, 2, 1).unwrap();
        verify_tonks(&Codiscrete::new(symmetric(3).unwrap()), Tau::LowerCentral { q: 2 }, 2, 1).unwrap();
    }
}
