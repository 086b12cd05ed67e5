use serde::Serialize;

use super::{Wbar, WbarSimplex};
use crate::error::{Error, Result};
use crate::group::{Tau, Word};
use crate::sgroup::{LoopGroup, SimplicialGroup, Underlying};
use crate::simplicial::{check_simplicial_map, KanSuspension, SimplicialSet, SuspSimplex};

/// `κ : ΣK -> W̄K`, the inclusion of the wedge into the product.
pub fn kappa<K: SimplicialGroup>(group: &K, n: usize, s: &SuspSimplex<K::Elem>) -> WbarSimplex<K::Elem> {
    let mut out: Vec<K::Elem> = (0..n).map(|t| group.one(n - 1 - t)).collect();
    if let SuspSimplex::Summand { a, x } = s {
        out[*a] = x.clone();
    }
    out
}

/// `κ` followed by the check that the image lies in `W̄(τ,K)`.
pub fn kappa_tau<K: SimplicialGroup>(wbar: &Wbar<K>, n: usize, s: &SuspSimplex<K::Elem>) -> Result<WbarSimplex<K::Elem>> {
    let y = kappa(wbar.group(), n, s);
    match wbar.membership_witness(n, &y) {
        None => Ok(y),
        Some(l) => Err(Error::FactorizationFailure(format!(
            "κ({s:?}) = {y:?} fails the condition at l = {l} for {}",
            wbar.tau()
        ))),
    }
}

/// Checks that `κ_τ` is defined and simplicial up to degree `max_n`.
pub fn verify_kappa<K: SimplicialGroup>(group: &K, tau: Tau, max_n: usize) -> Result<()> {
    let sigma = KanSuspension::new(Underlying(group));
    let wbar = Wbar::with_tau(group, tau);
    check_simplicial_map(&sigma, &wbar, |n, s| kappa_tau(&wbar, n, s), max_n)
}

/// `η : X -> W̄GX`, `x ↦ ([x], [d_0 x], ..., [(d_0)^{n-1} x])`.
pub fn unit<X: SimplicialSet>(g: &LoopGroup<X>, n: usize, x: &X::Simplex) -> WbarSimplex<Word<X::Simplex>> {
    let mut cur = x.clone();
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        out.push(g.bracket(n - 1 - t, &cur));
        cur = g.base().face(n - t, 0, &cur);
    }
    out
}

pub fn verify_unit<X: SimplicialSet>(x: &X, max_n: usize) -> Result<()> {
    let g = LoopGroup::new(x);
    let target = Wbar::new(&g);
    check_simplicial_map(x, &target, |n, s| Ok(unit(&g, n, s)), max_n)
}

/// `ε : GW̄K -> K`, `[(x_n, ..., x_0)] ↦ x_n`.
pub fn counit<K: SimplicialGroup>(group: &K, n: usize, w: &Word<WbarSimplex<K::Elem>>) -> K::Elem {
    w.letters().iter().fold(group.one(n), |acc, (y, e)| {
        let img = if *e < 0 { group.inv(n, &y[0]) } else { y[0].clone() };
        (0..e.unsigned_abs()).fold(acc, |a, _| group.mul(n, &a, &img))
    })
}

/// Checks on generators that the counit commutes with faces and
/// degeneracies up to level `max_n`.
pub fn verify_counit<K: SimplicialGroup>(group: &K, max_n: usize) -> Result<()> {
    let g = LoopGroup::new(Wbar::new(group));
    for n in 0..=max_n {
        for w in g.generators(n)? {
            let e = counit(group, n, &w);
            for i in 0..=n {
                if n > 0 && counit(group, n - 1, &g.face(n, i, &w)) != group.face(n, i, &e) {
                    return Err(Error::NotSimplicial(format!("counit and d_{i} on {w:?}")));
                }
                if counit(group, n + 1, &g.degeneracy(n, i, &w)) != group.degeneracy(n, i, &e) {
                    return Err(Error::NotSimplicial(format!("counit and s_{i} on {w:?}")));
                }
            }
        }
    }
    Ok(())
}

/// `(W̄ε) ∘ η_{W̄K} = id` on every simplex of `W̄K` up to degree `max_n`.
pub fn triangle_identity<K: SimplicialGroup>(group: &K, max_n: usize) -> Result<()> {
    let wbar = Wbar::new(group);
    let g = LoopGroup::new(&wbar);
    for n in 0..=max_n {
        for x in wbar.simplices(n)? {
            let back: Vec<K::Elem> =
                unit(&g, n, &x).iter().enumerate().map(|(t, w)| counit(group, n - 1 - t, w)).collect();
            if back != x {
                return Err(Error::VerificationFailure(format!("triangle identity fails on {x:?}: {back:?}")));
            }
        }
    }
    Ok(())
}

/// `K_n -> FK_n -> G(ΣK)_n -> GW̄K_n -> K_n`: `k ↦ [k] ↦ [(0,k)] ↦
/// [κ(0,k)] ↦ k`.
pub fn milnor_composite<K: SimplicialGroup>(group: &K, n: usize, k: &K::Elem) -> K::Elem {
    let fk: Word<K::Elem> = if group.is_one(n, k) { Word::identity() } else { Word::generator(k.clone()) };
    let gsigma: Word<SuspSimplex<K::Elem>> = fk.map_generators(|x| SuspSimplex::Summand { a: 0, x: x.clone() });
    let gw = LoopGroup::new(Wbar::new(group));
    let gwbar = gsigma.substitute(|s| gw.bracket(n, &kappa(group, n + 1, s)));
    counit(group, n, &gwbar)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FiltrationReport {
    /// `(τ, counts by degree)` from `Γ^2` up to the free stage.
    pub stages: Vec<(String, Vec<usize>)>,
}

/// Checks `W̄(Γ^2,K) ⊆ W̄(Γ^3,K) ⊆ ... ⊆ W̄(Γ^{max_q},K) ⊆ W̄K` levelwise up
/// to degree `max_k`.
pub fn verify_filtration<K: SimplicialGroup>(group: &K, max_q: u32, max_k: usize) -> Result<FiltrationReport> {
    let mut taus: Vec<Tau> = (2..=max_q).map(|q| Tau::LowerCentral { q }).collect();
    taus.push(Tau::Free);
    let mut stages = Vec::new();
    for (idx, &tau) in taus.iter().enumerate() {
        let w = Wbar::with_tau(group, tau);
        let mut counts = Vec::new();
        for k in 0..=max_k {
            let level = w.simplices(k)?;
            if let Some(&next) = taus.get(idx + 1) {
                let bigger = Wbar::with_tau(group, next);
                if let Some(x) = level.iter().find(|x| !bigger.is_member(k, x)) {
                    return Err(Error::VerificationFailure(format!("{x:?} is in W̄({tau}) but not in W̄({next})")));
                }
            }
            counts.push(level.len());
        }
        if let Some((_, prev)) = stages.last() {
            let prev: &Vec<usize> = prev;
            if prev.iter().zip(&counts).any(|(a, b)| a > b) {
                return Err(Error::VerificationFailure(format!("counts decrease at {tau}")));
            }
        }
        stages.push((tau.to_string(), counts));
    }
    Ok(FiltrationReport { stages })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, symmetric};
    use crate::sgroup::{Codiscrete, Discrete};
    use crate::simplicial::StandardSimplex;

    #[test]
    fn kappa_on_basepoint_and_summands() {
        let k = Discrete::new(cyclic(4).unwrap());
        assert_eq!(kappa(&k, 3, &SuspSimplex::Base), vec![0, 0, 0]);
        assert_eq!(kappa(&k, 3, &SuspSimplex::Summand { a: 0, x: 2 }), vec![2, 0, 0]);
        verify_kappa(&k, Tau::Free, 3).unwrap();
        verify_kappa(&Discrete::new(symmetric(3).unwrap()), Tau::LowerCentral { q: 2 }, 3).unwrap();
        verify_kappa(&Codiscrete::new(symmetric(3).unwrap()), Tau::LowerCentral { q: 2 }, 2).unwrap();
    }

    #[test]
    fn kappa_tau_can_fail_to_factor() {
        let s3 = Discrete::new(symmetric(3).unwrap());
        let err = verify_kappa(&s3, Tau::AbelianModPow { p: 2, k: 1 }, 2).unwrap_err();
        assert!(matches!(err, Error::FactorizationFailure(_)));
    }

    #[test]
    fn unit_counit_and_triangle() {
        let x = StandardSimplex::new(2);
        verify_unit(&x, 3).unwrap();
        let g = LoopGroup::new(&x);
        assert!(unit(&g, 0, &crate::ordinal::OrdinalMap::new(vec![1], 3).unwrap()).is_empty());
        let z2 = Discrete::new(cyclic(2).unwrap());
        verify_counit(&z2, 2).unwrap();
        triangle_identity(&z2, 3).unwrap();
        verify_counit(&Codiscrete::new(cyclic(2).unwrap()), 2).unwrap();
        triangle_identity(&Codiscrete::new(symmetric(3).unwrap()), 2).unwrap();
    }

    #[test]
    fn five_map_composite_is_identity() {
        for g in [cyclic(2).unwrap(), cyclic(4).unwrap(), symmetric(3).unwrap()] {
            let k = Discrete::new(g.clone());
            for n in 0..=2 {
                for x in g.elements() {
                    assert_eq!(milnor_composite(&k, n, &x), x);
                }
            }
        }
        let k = Codiscrete::new(symmetric(3).unwrap());
        for n in 0..=2 {
            for x in k.elements(n).unwrap() {
                assert_eq!(milnor_composite(&k, n, &x), x);
            }
        }
    }

    #[test]
    fn filtration_is_monotone() {
        let r = verify_filtration(&Discrete::new(symmetric(3).unwrap()), 3, 3).unwrap();
        assert_eq!(r.stages[0].1, vec![1, 6, 18, 48]);
        assert!(r.stages[1].1[2] <= 36);
        assert_eq!(r.stages[2].1, vec![1, 6, 36, 216]);
        let d4 = verify_filtration(&Discrete::new(dihedral(4).unwrap()), 3, 3).unwrap();
        // D4 has class 2, so the Γ^3 stage is everything
        assert_eq!(d4.stages[1].1, d4.stages[2].1);
    }
}
