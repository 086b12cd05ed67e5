//! Finite groups, free-group words, presentations and the verbal quotient
//! predicates that decide which tuples are τ-admissible.

mod builtin;
mod finite;
mod presentation;
mod tau;
mod word;

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

pub use builtin::{builtin, cyclic, dihedral, extraspecial_32, quaternion, symmetric, BUILTIN_NAMES};
pub use finite::{FiniteGroup, GroupSpec, DEFAULT_ORDER_BUDGET};
pub use presentation::{hom_enumeration, FpPresentation};
pub use tau::{
    count_admissible, count_admissible_in, enumerate_admissible, enumerate_admissible_in, pairwise_commute, tuple_admissible, verbal_stage, Tau,
    TauChecker, VerbalVariant,
};
pub use word::{FreeGroup, Word};

/// Anything with a group law on a concrete element type.
pub trait GroupOps {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let base = if e < 0 { self.inv(a) } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// `a^{-1} b^{-1} a b`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }

    fn commutes(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}

/// Smallest subgroup containing `gens`. Elements are assumed to have finite
/// order, so closure under products suffices.
pub fn subgroup_closure<G: GroupOps>(g: &G, gens: &[G::Elem]) -> BTreeSet<G::Elem> {
    let mut set = BTreeSet::new();
    set.insert(g.one());
    let gens: Vec<G::Elem> = gens.iter().filter(|x| !g.is_one(x)).cloned().collect();
    let mut frontier = vec![g.one()];
    while let Some(x) = frontier.pop() {
        for s in &gens {
            let y = g.mul(&x, s);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}
