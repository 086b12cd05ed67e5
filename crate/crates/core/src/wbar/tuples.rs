use serde::Serialize;

use super::Wbar;
use crate::error::{Error, Result};
use crate::group::Word;
use crate::ordinal::OrdinalMap;
use crate::sgroup::{DecGen, Pi1Dec, SimplicialGroup};
use crate::simplicial::SimplicialSet;

/// The homomorphism `π_1 Dec Δ[k] -> K` attached to a tuple
/// `(x_{k-1}, ..., x_0)`.
pub struct TupleHom<'a, K: SimplicialGroup> {
    group: &'a K,
    k: usize,
    x: Vec<K::Elem>,
}

impl<K: SimplicialGroup> TupleHom<'_, K> {
    pub fn k(&self) -> usize {
        self.k
    }

    /// `f_n[φ, e_j] = ψ^* (d_0)^{l-j} x_{k-j}` with `l = φ(0)` and
    /// `φ = (d^0)^l ψ`.
    pub fn on_generator(&self, n: usize, (phi, j): &DecGen) -> K::Elem {
        let l = phi.apply(0);
        let mut y = self.x[j - 1].clone();
        for level in (self.k - l + 1..=self.k - j).rev() {
            y = self.group.face(level, 0, &y);
        }
        let psi = OrdinalMap::new(phi.values().iter().map(|v| v - l).collect(), self.k - l + 1).expect("φ(0) is its minimum");
        debug_assert_eq!(psi.source(), n);
        self.group.act(&psi, &y)
    }

    pub fn eval(&self, n: usize, w: &Word<DecGen>) -> K::Elem {
        w.letters().iter().fold(self.group.one(n), |acc, (g, e)| {
            let mut img = self.on_generator(n, g);
            if *e < 0 {
                img = self.group.inv(n, &img);
            }
            (0..e.unsigned_abs()).fold(acc, |a, _| self.group.mul(n, &a, &img))
        })
    }

    /// Checks that the homomorphism commutes with faces and degeneracies on
    /// generators up to degree `max_n`.
    pub fn check_simplicial(&self, max_n: usize) -> Result<()> {
        let p = Pi1Dec::new(self.k);
        for n in 0..=max_n {
            for g in p.generators(n)? {
                let fg = self.eval(n, &g);
                for i in 0..=n {
                    if n > 0 && self.eval(n - 1, &p.face(n, i, &g)) != self.group.face(n, i, &fg) {
                        return Err(Error::NotSimplicial(format!("d_{i} on {g:?}")));
                    }
                    if self.eval(n + 1, &p.degeneracy(n, i, &g)) != self.group.degeneracy(n, i, &fg) {
                        return Err(Error::NotSimplicial(format!("s_{i} on {g:?}")));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn decode_hom<K: SimplicialGroup>(group: &K, k: usize, x: Vec<K::Elem>) -> Result<TupleHom<'_, K>> {
    if x.len() != k {
        return Err(Error::InvalidGroup(format!("a {k}-simplex needs {k} entries, got {}", x.len())));
    }
    Ok(TupleHom { group, k, x })
}

/// `f ↦ (f[(d^0)^l, e_l])_{l=1..k}` for a homomorphism given on generators.
pub fn encode_hom<E>(k: usize, f: impl Fn(usize, &Word<DecGen>) -> E) -> Vec<E> {
    (1..=k)
        .map(|l| {
            let phi = OrdinalMap::new((l..=k).collect(), k + 1).expect("(d^0)^l");
            f(k - l, &Word::generator((phi, l)))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TupleReport {
    pub k: usize,
    pub tuples: usize,
    pub coface_checks: usize,
    pub codegeneracy_checks: usize,
}

/// For every `k`-simplex of `W̄K`: decodes it, checks the homomorphism is
/// simplicial up to degree `k + 1`, re-encodes it, and checks that
/// precomposing with `(d^i)^*` and `(s^i)^*` reproduces `d_i` and `s_i` of
/// `W̄K`.
pub fn verify_tuple_bijection<K: SimplicialGroup>(group: &K, k: usize) -> Result<TupleReport> {
    let wbar = Wbar::new(group);
    let fail = |m: String| Err(Error::VerificationFailure(m));
    let mut report = TupleReport { k, tuples: 0, coface_checks: 0, codegeneracy_checks: 0 };
    for x in wbar.simplices(k)? {
        report.tuples += 1;
        let f = decode_hom(group, k, x.clone())?;
        f.check_simplicial(k + 1)?;
        if encode_hom(k, |n, w| f.eval(n, w)) != x {
            return fail(format!("encode(decode({x:?})) differs"));
        }
        for i in 0..=k {
            if k > 0 {
                let d = OrdinalMap::coface(i, k)?;
                let y = encode_hom(k - 1, |n, w| f.eval(n, &Pi1Dec::cosimplicial(&d, w)));
                if y != wbar.face(k, i, &x) {
                    return fail(format!("coface d^{i} on {x:?} gives {y:?}"));
                }
                report.coface_checks += 1;
            }
            let s = OrdinalMap::codegeneracy(i, k)?;
            let y = encode_hom(k + 1, |n, w| f.eval(n, &Pi1Dec::cosimplicial(&s, w)));
            if y != wbar.degeneracy(k, i, &x) {
                return fail(format!("codegeneracy s^{i} on {x:?} gives {y:?}"));
            }
            report.codegeneracy_checks += 1;
        }
    }
    Ok(report)
}
