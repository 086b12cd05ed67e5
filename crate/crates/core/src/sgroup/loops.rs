use serde::Serialize;

use super::{check_identities_on_generators, SimplicialGroup};
use crate::error::{Error, Result};
use crate::group::Word;
use crate::ordinal::{enumerate_maps, OrdinalMap};
use crate::simplicial::{SimplicialSet, StandardSimplex};

/// Kan's loop group `GX`: level `n` is free on `X_{n+1} ∖ s_0 X_n`.
#[derive(Clone, Debug)]
pub struct LoopGroup<X> {
    x: X,
}

impl<X: SimplicialSet> LoopGroup<X> {
    pub fn new(x: X) -> Self {
        Self { x }
    }

    pub fn base(&self) -> &X {
        &self.x
    }

    pub fn is_s0_degenerate(&self, n: usize, y: &X::Simplex) -> bool {
        self.x.degeneracy(n, 0, &self.x.face(n + 1, 0, y)) == *y
    }

    /// `[y]` for `y ∈ X_{n+1}`, which is trivial on `s_0`-degenerate simplices.
    pub fn bracket(&self, n: usize, y: &X::Simplex) -> Word<X::Simplex> {
        if self.is_s0_degenerate(n, y) {
            Word::identity()
        } else {
            Word::generator(y.clone())
        }
    }

    pub fn rank(&self, n: usize) -> Result<usize> {
        Ok(self.generators(n)?.len())
    }
}

impl<X: SimplicialSet> SimplicialGroup for LoopGroup<X> {
    type Elem = Word<X::Simplex>;

    fn one(&self, _n: usize) -> Self::Elem {
        Word::identity()
    }
    fn mul(&self, _n: usize, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.multiply(b)
    }
    fn inv(&self, _n: usize, a: &Self::Elem) -> Self::Elem {
        a.inverse()
    }
    fn face(&self, n: usize, i: usize, a: &Self::Elem) -> Self::Elem {
        a.substitute(|y| {
            if i == 0 {
                let d1 = self.bracket(n - 1, &self.x.face(n + 1, 1, y));
                let d0 = self.bracket(n - 1, &self.x.face(n + 1, 0, y));
                d1.multiply(&d0.inverse())
            } else {
                self.bracket(n - 1, &self.x.face(n + 1, i + 1, y))
            }
        })
    }
    fn degeneracy(&self, n: usize, j: usize, a: &Self::Elem) -> Self::Elem {
        a.substitute(|y| self.bracket(n + 1, &self.x.degeneracy(n + 1, j + 1, y)))
    }
    fn elements(&self, n: usize) -> Result<Vec<Self::Elem>> {
        Err(Error::InvalidGroup(format!("level {n} of a loop group is free and not enumerable")))
    }
    fn generators(&self, n: usize) -> Result<Vec<Self::Elem>> {
        Ok(self
            .x
            .simplices(n + 1)?
            .into_iter()
            .filter(|y| !self.is_s0_degenerate(n, y))
            .map(Word::generator)
            .collect())
    }
    fn max_degree(&self) -> Option<usize> {
        self.x.max_degree().map(|d| d.saturating_sub(1))
    }
    fn name(&self) -> String {
        "GX".into()
    }
}

/// A generator `[φ, e_j]` of `π_1 Dec Δ[k]`: `φ : [n] -> [k]` and
/// `1 <= j <= φ(0)`.
pub type DecGen = (OrdinalMap, usize);

/// `π_1 Dec Δ[k]`, level `n` free on the `[φ, e_j]`.
#[derive(Clone, Copy, Debug)]
pub struct Pi1Dec {
    k: usize,
}

impl Pi1Dec {
    pub fn new(k: usize) -> Self {
        Self { k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The edge `(a, b)` of `Δ[l]` as the word `e_{a+1} ⋯ e_b` in the
    /// component `φ`.
    pub fn edge(phi: &OrdinalMap, a: usize, b: usize) -> Word<DecGen> {
        Word::from_letters((a + 1..=b).map(|t| ((phi.clone(), t), 1)))
    }

    /// The cosimplicial operator `α^*[φ, e_j] = [αφ, α_*(e_j)]` for
    /// `α : [k] -> [k']`.
    pub fn cosimplicial(alpha: &OrdinalMap, w: &Word<DecGen>) -> Word<DecGen> {
        w.substitute(|(phi, j)| {
            let aphi = alpha.after(phi).expect("φ lands in the source of α");
            Self::edge(&aphi, alpha.apply(j - 1), alpha.apply(*j))
        })
    }
}

impl SimplicialGroup for Pi1Dec {
    type Elem = Word<DecGen>;

    fn one(&self, _n: usize) -> Self::Elem {
        Word::identity()
    }
    fn mul(&self, _n: usize, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.multiply(b)
    }
    fn inv(&self, _n: usize, a: &Self::Elem) -> Self::Elem {
        a.inverse()
    }
    fn face(&self, n: usize, i: usize, a: &Self::Elem) -> Self::Elem {
        let di = OrdinalMap::coface(i, n).expect("face index");
        a.map_generators(|(phi, j)| (phi.after(&di).expect("degree"), *j))
    }
    fn degeneracy(&self, n: usize, i: usize, a: &Self::Elem) -> Self::Elem {
        let si = OrdinalMap::codegeneracy(i, n).expect("degeneracy index");
        a.map_generators(|(phi, j)| (phi.after(&si).expect("degree"), *j))
    }
    fn elements(&self, n: usize) -> Result<Vec<Self::Elem>> {
        Err(Error::InvalidGroup(format!("level {n} of π1 Dec Δ[{}] is free and not enumerable", self.k)))
    }
    fn generators(&self, n: usize) -> Result<Vec<Self::Elem>> {
        Ok(enumerate_maps(n, self.k)
            .into_iter()
            .flat_map(|phi| (1..=phi.apply(0)).map(move |j| Word::generator((phi.clone(), j))))
            .collect())
    }
    fn name(&self) -> String {
        format!("π1 Dec Δ[{}]", self.k)
    }
}

/// `ε : GΔ[k]_n -> (π_1 Dec Δ[k])_n`, `[β] ↦ [βd^0, β|_{[1]}]`.
pub fn epsilon(n: usize, w: &Word<OrdinalMap>) -> Word<DecGen> {
    let d0 = OrdinalMap::coface(0, n + 1).expect("n + 1 >= 1");
    w.substitute(|beta| {
        let phi = beta.after(&d0).expect("degree");
        Pi1Dec::edge(&phi, beta.apply(0), beta.apply(1))
    })
}

/// `ε^{-1}`: on the edges into the top vertex of `Δ[φ(0)]` it sends
/// `(φ, γ)` to `α` with `α(0) = γ(0)` and `α(i) = φ(i-1)`; since
/// `e_j = (j-1, φ(0)) · (j, φ(0))^{-1}` this gives
/// `[φ, e_j] ↦ [α_{j-1}] [α_j]^{-1}`.
pub fn epsilon_inverse(k: usize, n: usize, w: &Word<DecGen>) -> Word<OrdinalMap> {
    let g = LoopGroup::new(StandardSimplex::new(k));
    let alpha = |phi: &OrdinalMap, a: usize| {
        let mut values = vec![a];
        values.extend_from_slice(phi.values());
        g.bracket(n, &OrdinalMap::new(values, k + 1).expect("a <= φ(0)"))
    };
    w.substitute(|(phi, j)| alpha(phi, j - 1).multiply(&alpha(phi, *j).inverse()))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EpsilonReport {
    pub k: usize,
    pub max_degree: usize,
    pub ranks: Vec<usize>,
    pub generators_checked: usize,
}

/// Checks that `ε` and `ε^{-1}` are mutually inverse simplicial
/// homomorphisms on generators up to degree `max_n`, and natural for the
/// cofaces and codegeneracies into `[k]`.
pub fn verify_epsilon(k: usize, max_n: usize) -> Result<EpsilonReport> {
    let g = LoopGroup::new(StandardSimplex::new(k));
    let p = Pi1Dec::new(k);
    let fail = |m: String| Err(Error::VerificationFailure(m));
    check_identities_on_generators(&g, max_n)?;
    check_identities_on_generators(&p, max_n)?;
    let mut ranks = Vec::new();
    let mut checked = 0;
    for n in 0..=max_n {
        let gens = g.generators(n)?;
        let dgens = p.generators(n)?;
        if gens.len() != dgens.len() {
            return fail(format!("rank mismatch at level {n}: {} vs {}", gens.len(), dgens.len()));
        }
        ranks.push(gens.len());
        for w in &gens {
            checked += 1;
            let e = epsilon(n, w);
            if epsilon_inverse(k, n, &e) != *w {
                return fail(format!("ε^-1 ε {w:?} != {w:?}"));
            }
            for i in 0..=n {
                if n > 0 && epsilon(n - 1, &g.face(n, i, w)) != p.face(n, i, &e) {
                    return fail(format!("ε does not commute with d_{i} on {w:?}"));
                }
                if epsilon(n + 1, &g.degeneracy(n, i, w)) != p.degeneracy(n, i, &e) {
                    return fail(format!("ε does not commute with s_{i} on {w:?}"));
                }
            }
        }
        for h in &dgens {
            checked += 1;
            let e = epsilon_inverse(k, n, h);
            if epsilon(n, &e) != *h {
                return fail(format!("ε ε^-1 {h:?} != {h:?}"));
            }
            for i in 0..=n {
                if n > 0 && epsilon_inverse(k, n - 1, &p.face(n, i, h)) != g.face(n, i, &e) {
                    return fail(format!("ε^-1 does not commute with d_{i} on {h:?}"));
                }
                if epsilon_inverse(k, n + 1, &p.degeneracy(n, i, h)) != g.degeneracy(n, i, &e) {
                    return fail(format!("ε^-1 does not commute with s_{i} on {h:?}"));
                }
            }
        }
        // naturality along α : [k'] -> [k] for cofaces and codegeneracies
        let mut alphas = Vec::new();
        if k >= 1 {
            alphas.extend((0..=k).map(|i| OrdinalMap::coface(i, k).expect("index")));
        }
        alphas.extend((0..=k).map(|i| OrdinalMap::codegeneracy(i, k).expect("index")).filter(|_| k < 4));
        for alpha in alphas {
            let src = LoopGroup::new(StandardSimplex::new(alpha.source()));
            for w in src.generators(n)? {
                let pushed = w.substitute(|beta| g.bracket(n, &alpha.after(beta).expect("degree")));
                let target_k = alpha.target();
                if target_k != k {
                    continue;
                }
                if epsilon(n, &pushed) != Pi1Dec::cosimplicial(&alpha, &epsilon(n, &w)) {
                    return fail(format!("ε is not natural for {alpha:?} on {w:?}"));
                }
            }
        }
    }
    Ok(EpsilonReport { k, max_degree: max_n, ranks, generators_checked: checked })
}
