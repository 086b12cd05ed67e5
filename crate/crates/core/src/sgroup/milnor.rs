use std::collections::HashSet;

use super::{check_identities_on_generators, LoopGroup, SimplicialGroup};
use crate::error::{Error, Result};
use crate::group::Word;
use crate::simplicial::{KanSuspension, Pointed, SuspSimplex};

/// Milnor's `FK`: level `n` free on `K_n` with the basepoint set to `1`.
#[derive(Clone, Debug)]
pub struct MilnorFK<K> {
    k: K,
}

impl<K: Pointed> MilnorFK<K> {
    pub fn new(k: K) -> Self {
        Self { k }
    }

    pub fn bracket(&self, n: usize, x: &K::Simplex) -> Word<K::Simplex> {
        if *x == self.k.basepoint(n) {
            Word::identity()
        } else {
            Word::generator(x.clone())
        }
    }
}

impl<K: Pointed> SimplicialGroup for MilnorFK<K> {
    type Elem = Word<K::Simplex>;

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
        a.substitute(|x| self.bracket(n - 1, &self.k.face(n, i, x)))
    }
    fn degeneracy(&self, n: usize, i: usize, a: &Self::Elem) -> Self::Elem {
        a.substitute(|x| self.bracket(n + 1, &self.k.degeneracy(n, i, x)))
    }
    fn elements(&self, n: usize) -> Result<Vec<Self::Elem>> {
        Err(Error::InvalidGroup(format!("level {n} of FK is free and not enumerable")))
    }
    fn generators(&self, n: usize) -> Result<Vec<Self::Elem>> {
        let base = self.k.basepoint(n);
        Ok(self.k.simplices(n)?.into_iter().filter(|x| *x != base).map(Word::generator).collect())
    }
    fn max_degree(&self) -> Option<usize> {
        self.k.max_degree()
    }
    fn name(&self) -> String {
        "FK".into()
    }
}

/// The isomorphism `G(ΣK) -> FK`, `[(0, x)] ↦ [x]`. Every other generator
/// of `G(ΣK)` is `s_0`-degenerate, hence trivial.
pub fn suspension_to_milnor<S: Clone + Eq>(w: &Word<SuspSimplex<S>>) -> Word<S> {
    w.substitute(|s| match s {
        SuspSimplex::Summand { a: 0, x } => Word::generator(x.clone()),
        _ => Word::identity(),
    })
}

/// Checks that `suspension_to_milnor` is a bijection on generators and
/// commutes with faces and degeneracies up to degree `max_n`. Returns the
/// ranks.
pub fn verify_suspension_milnor<K: Pointed + Clone>(k: &K, max_n: usize) -> Result<Vec<usize>> {
    let g = LoopGroup::new(KanSuspension::new(k.clone()));
    let f = MilnorFK::new(k.clone());
    let fail = |m: String| Err(Error::VerificationFailure(m));
    check_identities_on_generators(&f, max_n)?;
    let mut ranks = Vec::new();
    for n in 0..=max_n {
        let gens = g.generators(n)?;
        let targets: HashSet<_> = f.generators(n)?.into_iter().collect();
        let images: HashSet<_> = gens.iter().map(suspension_to_milnor).collect();
        if images.len() != gens.len() || images != targets {
            return fail(format!("G(ΣK)_{n} -> FK_{n} is not a bijection on generators"));
        }
        ranks.push(gens.len());
        for w in &gens {
            let img = suspension_to_milnor(w);
            for i in 0..=n {
                if n > 0 && suspension_to_milnor(&g.face(n, i, w)) != f.face(n, i, &img) {
                    return fail(format!("d_{i} not preserved on {w:?}"));
                }
                if suspension_to_milnor(&g.degeneracy(n, i, w)) != f.degeneracy(n, i, &img) {
                    return fail(format!("s_{i} not preserved on {w:?}"));
                }
            }
        }
    }
    Ok(ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};
    use crate::sgroup::{Codiscrete, Discrete, Underlying};

    #[test]
    fn suspension_of_discrete_group() {
        let k = Underlying(Discrete::new(symmetric(3).unwrap()));
        let ranks = verify_suspension_milnor(&&k, 3).unwrap();
        assert_eq!(ranks, vec![5; 4]);
    }

    #[test]
    fn suspension_of_codiscrete_group() {
        let k = Underlying(Codiscrete::new(cyclic(2).unwrap()));
        let ranks = verify_suspension_milnor(&&k, 2).unwrap();
        assert_eq!(ranks, vec![1, 3, 7]);
    }
}
