use super::SimplicialSet;
use crate::bisimplicial::BisimplicialSet;
use crate::error::Result;
use crate::ordinal::{enumerate_maps, OrdinalMap};

/// `Dec_0 X`: level `n` is `X_{n+1}` with the last face and degeneracy
/// forgotten, augmented by the last vertex.
#[derive(Clone, Debug)]
pub struct Dec0<X> {
    inner: X,
}

impl<X: SimplicialSet> Dec0<X> {
    pub fn new(inner: X) -> Self {
        Self { inner }
    }

    pub fn inner(&self) -> &X {
        &self.inner
    }

    /// The augmentation `(d_0)^{n+1} : X_{n+1} -> X_0`.
    pub fn augmentation(&self, n: usize, x: &X::Simplex) -> X::Simplex {
        self.inner.act(&OrdinalMap::constant(0, n + 1, n + 1).expect("vertex"), x)
    }
}

impl<X: SimplicialSet> SimplicialSet for Dec0<X> {
    type Simplex = X::Simplex;

    fn simplices(&self, n: usize) -> Result<Vec<X::Simplex>> {
        self.inner.simplices(n + 1)
    }

    fn face(&self, n: usize, i: usize, x: &X::Simplex) -> X::Simplex {
        debug_assert!(i <= n);
        self.inner.face(n + 1, i, x)
    }

    fn degeneracy(&self, n: usize, i: usize, x: &X::Simplex) -> X::Simplex {
        debug_assert!(i <= n);
        self.inner.degeneracy(n + 1, i, x)
    }

    fn is_degenerate(&self, n: usize, x: &X::Simplex) -> bool {
        (0..n).any(|i| self.degeneracy(n - 1, i, &self.face(n, i, x)) == *x)
    }

    fn max_degree(&self) -> Option<usize> {
        self.inner.max_degree().map(|d| d.saturating_sub(1))
    }

    fn contains(&self, n: usize, x: &X::Simplex) -> Result<bool> {
        self.inner.contains(n + 1, x)
    }
}

/// Component `l` of `Dec_0 Δ[k] ≅ ⊔_l Δ[l]`: sends `θ : [m] -> [l]` to the
/// map `[m+1] -> [k]` that is `θ` followed by the value `l`.
pub fn dec0_component(k: usize, l: usize, theta: &OrdinalMap) -> OrdinalMap {
    let mut values = theta.values().to_vec();
    values.push(l);
    OrdinalMap::new(values, k + 1).expect("l <= k and θ lands in [l]")
}

pub fn dec0_component_inverse(alpha: &OrdinalMap) -> (usize, OrdinalMap) {
    let m = alpha.source() - 1;
    let l = alpha.apply(m + 1);
    (l, OrdinalMap::new(alpha.values()[..=m].to_vec(), l + 1).expect("monotone"))
}

/// Total décalage: `(Dec X)_{p,q} = X_{p+q+1}`, horizontal operators act on
/// the first `p+1` vertices, vertical ones on the last `q+1`.
#[derive(Clone, Debug)]
pub struct DecTotal<X> {
    inner: X,
}

impl<X: SimplicialSet> DecTotal<X> {
    pub fn new(inner: X) -> Self {
        Self { inner }
    }
}

impl<X: SimplicialSet> BisimplicialSet for DecTotal<X> {
    type Simplex = X::Simplex;

    fn simplices(&self, p: usize, q: usize) -> Result<Vec<X::Simplex>> {
        self.inner.simplices(p + q + 1)
    }

    fn hface(&self, p: usize, q: usize, i: usize, x: &X::Simplex) -> X::Simplex {
        self.inner.face(p + q + 1, i, x)
    }

    fn hdegeneracy(&self, p: usize, q: usize, i: usize, x: &X::Simplex) -> X::Simplex {
        self.inner.degeneracy(p + q + 1, i, x)
    }

    fn vface(&self, p: usize, q: usize, j: usize, x: &X::Simplex) -> X::Simplex {
        self.inner.face(p + q + 1, p + 1 + j, x)
    }

    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &X::Simplex) -> X::Simplex {
        self.inner.degeneracy(p + q + 1, p + 1 + j, x)
    }
}

/// `D[k]`: in vertical degree `q` the coproduct over `φ : [q] -> [k]` of
/// `Δ[φ(0)]`. Simplices are pairs `(φ, θ)` with `θ : [p] -> [φ(0)]`.
#[derive(Clone, Copy, Debug)]
pub struct DModel {
    k: usize,
}

impl DModel {
    pub fn new(k: usize) -> Self {
        Self { k }
    }
}

type DSimplex = (OrdinalMap, OrdinalMap);

impl BisimplicialSet for DModel {
    type Simplex = DSimplex;

    fn simplices(&self, p: usize, q: usize) -> Result<Vec<DSimplex>> {
        Ok(enumerate_maps(q, self.k)
            .into_iter()
            .flat_map(|phi| enumerate_maps(p, phi.apply(0)).into_iter().map(move |t| (phi.clone(), t)))
            .collect())
    }

    fn hface(&self, p: usize, _q: usize, i: usize, (phi, t): &DSimplex) -> DSimplex {
        (phi.clone(), t.after(&OrdinalMap::coface(i, p).expect("index")).expect("degree"))
    }

    fn hdegeneracy(&self, p: usize, _q: usize, i: usize, (phi, t): &DSimplex) -> DSimplex {
        (phi.clone(), t.after(&OrdinalMap::codegeneracy(i, p).expect("index")).expect("degree"))
    }

    fn vface(&self, _p: usize, q: usize, j: usize, (phi, t): &DSimplex) -> DSimplex {
        let phi2 = phi.after(&OrdinalMap::coface(j, q).expect("index")).expect("degree");
        if j == 0 {
            // ι : Δ[φ(0)] -> Δ[φ(1)]
            let t2 = OrdinalMap::new(t.values().to_vec(), phi.apply(1) + 1).expect("inclusion");
            (phi2, t2)
        } else {
            (phi2, t.clone())
        }
    }

    fn vdegeneracy(&self, _p: usize, q: usize, j: usize, (phi, t): &DSimplex) -> DSimplex {
        (phi.after(&OrdinalMap::codegeneracy(j, q).expect("index")).expect("degree"), t.clone())
    }
}

/// `g : D[k] -> Dec Δ[k]`, gluing `θ` on `[p]` to `φ` on the last `q+1`
/// vertices.
pub fn dec_g(k: usize, (phi, t): &DSimplex) -> OrdinalMap {
    let mut values = t.values().to_vec();
    values.extend_from_slice(phi.values());
    OrdinalMap::new(values, k + 1).expect("θ lands in [φ(0)]")
}

pub fn dec_g_inverse(p: usize, alpha: &OrdinalMap) -> DSimplex {
    let k = alpha.target();
    let phi = OrdinalMap::new(alpha.values()[p + 1..].to_vec(), k + 1).expect("monotone");
    let t = OrdinalMap::new(alpha.values()[..=p].to_vec(), alpha.apply(p + 1) + 1).expect("monotone");
    (phi, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimplicial::check_bisimplicial_identities;
    use crate::ordinal::binomial;
    use crate::simplicial::{check_simplicial_identities, StandardSimplex};
    use std::collections::HashSet;

    #[test]
    fn dec0_counts_and_fibres() {
        for k in 0..=4 {
            let dec = Dec0::new(StandardSimplex::new(k));
            for n in 0..3 {
                let level = dec.simplices(n).unwrap();
                assert_eq!(level.len(), StandardSimplex::new(k).simplices(n + 1).unwrap().len());
                // fibre of the augmentation over l is Δ[l]_n
                for l in 0..=k {
                    let fibre: Vec<_> = level.iter().filter(|x| dec.augmentation(n, x).apply(0) == l).collect();
                    assert_eq!(fibre.len() as u64, binomial((l + n + 1) as u64, (n + 1) as u64));
                    for x in &fibre {
                        let (l2, t) = dec0_component_inverse(x);
                        assert_eq!(l2, l);
                        assert_eq!(&&dec0_component(k, l, &t), x);
                    }
                }
            }
        }
        let dec2 = Dec0::new(StandardSimplex::new(2));
        assert_eq!(dec2.simplices(0).unwrap().len(), 6);
        let point = Dec0::new(StandardSimplex::new(0));
        assert!((0..4).all(|n| point.simplices(n).unwrap().len() == 1));
        check_simplicial_identities(&dec2, 3).unwrap();
    }

    #[test]
    fn dec0_component_is_simplicial() {
        let k = 3;
        let dec = Dec0::new(StandardSimplex::new(k));
        for l in 0..=k {
            let delta = StandardSimplex::new(l);
            for n in 1..=3 {
                for t in delta.simplices(n).unwrap() {
                    let x = dec0_component(k, l, &t);
                    for i in 0..=n {
                        assert_eq!(dec.face(n, i, &x), dec0_component(k, l, &delta.face(n, i, &t)));
                        assert_eq!(dec.degeneracy(n, i, &x), dec0_component(k, l, &delta.degeneracy(n, i, &t)));
                    }
                }
            }
        }
    }

    #[test]
    fn dec_total_levels() {
        let dec = DecTotal::new(StandardSimplex::new(2));
        assert_eq!(dec.simplices(1, 1).unwrap().len(), 15);
        // vertical degree 0 row is Dec_0
        let d0 = Dec0::new(StandardSimplex::new(2));
        for p in 1..3 {
            for x in dec.simplices(p, 0).unwrap() {
                for i in 0..=p {
                    assert_eq!(dec.hface(p, 0, i, &x), d0.face(p, i, &x));
                }
            }
        }
        check_bisimplicial_identities(&dec, 2, 2).unwrap();
    }

    #[test]
    fn d_model_is_isomorphic_to_dec() {
        for k in 0..=3 {
            let d = DModel::new(k);
            let dec = DecTotal::new(StandardSimplex::new(k));
            check_bisimplicial_identities(&d, 2, 2).unwrap();
            for p in 0..=3 {
                for q in 0..=(3 - p) {
                    let src = d.simplices(p, q).unwrap();
                    let tgt = dec.simplices(p, q).unwrap();
                    let image: HashSet<OrdinalMap> = src.iter().map(|s| dec_g(k, s)).collect();
                    assert_eq!(image.len(), src.len());
                    assert_eq!(image, tgt.iter().cloned().collect());
                    for s in &src {
                        let g = dec_g(k, s);
                        assert_eq!(&dec_g_inverse(p, &g), s);
                        for i in 0..=p {
                            if p > 0 {
                                assert_eq!(dec_g(k, &d.hface(p, q, i, s)), dec.hface(p, q, i, &g));
                            }
                            assert_eq!(dec_g(k, &d.hdegeneracy(p, q, i, s)), dec.hdegeneracy(p, q, i, &g));
                        }
                        for j in 0..=q {
                            if q > 0 {
                                assert_eq!(dec_g(k, &d.vface(p, q, j, s)), dec.vface(p, q, j, &g));
                            }
                            assert_eq!(dec_g(k, &d.vdegeneracy(p, q, j, s)), dec.vdegeneracy(p, q, j, &g));
                        }
                    }
                }
            }
        }
    }
}
