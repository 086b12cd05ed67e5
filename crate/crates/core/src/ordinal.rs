//! Monotone maps between finite ordinals `[m] = {0, ..., m}`.
//!
//! Every map `[m] -> [n]` in the simplex category is stored as its list of
//! values. Composition, the coface/codegeneracy generators and the unique
//! epi-mono factorization are the atoms that the rest of the crate builds
//! simplicial operators from.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

type Values = SmallVec<[usize; 8]>;

use crate::error::{Error, Result};

/// A weakly monotone map `[m] -> [n]`, `m, n >= 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrdinalMap {
    values: Values,
    codomain_size: usize,
}

impl OrdinalMap {
    pub fn new(values: Vec<usize>, codomain_size: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidMap("empty domain".into()));
        }
        if codomain_size == 0 {
            return Err(Error::InvalidMap("empty codomain".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMap(format!("{values:?} is not monotone")));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= codomain_size) {
            return Err(Error::Index { index: v, bound: codomain_size });
        }
        Ok(Self { values: Values::from_vec(values), codomain_size })
    }

    pub(crate) fn from_raw(values: impl IntoIterator<Item = usize>, codomain_size: usize) -> Self {
        let values: Values = values.into_iter().collect();
        debug_assert!(Self::new(values.to_vec(), codomain_size).is_ok());
        Self { values, codomain_size }
    }

    /// The identity of `[n]`.
    pub fn identity(n: usize) -> Self {
        Self::from_raw(0..=n, n + 1)
    }

    /// The constant map `[m] -> [n]` with value `v`.
    pub fn constant(m: usize, n: usize, v: usize) -> Result<Self> {
        Self::new(vec![v; m + 1], n + 1)
    }

    /// `d^i : [n-1] -> [n]`, the injection that skips `i`.
    pub fn coface(i: usize, n: usize) -> Result<Self> {
        if n == 0 || i > n {
            return Err(Error::Index { index: i, bound: n + 1 });
        }
        Ok(Self::from_raw((0..n).map(|t| if t < i { t } else { t + 1 }), n + 1))
    }

    /// `s^i : [n+1] -> [n]`, the surjection hitting `i` twice.
    pub fn codegeneracy(i: usize, n: usize) -> Result<Self> {
        if i > n {
            return Err(Error::Index { index: i, bound: n + 1 });
        }
        Ok(Self::from_raw((0..=n + 1).map(|t| if t <= i { t } else { t - 1 }), n + 1))
    }

    /// `(d^0)^k : [n-k] -> [n]`, the inclusion of the last `n-k+1` elements.
    pub fn last_face(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Index { index: k, bound: n + 1 });
        }
        Ok(Self::from_raw(k..=n, n + 1))
    }

    /// The `m` in `[m]`.
    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    /// The `n` in `[n]`.
    pub fn target(&self) -> usize {
        self.codomain_size - 1
    }

    pub fn domain_size(&self) -> usize {
        self.values.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.codomain_size == self.values.len() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.codomain_size - 1
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &OrdinalMap) -> Result<OrdinalMap> {
        if inner.codomain_size != self.domain_size() {
            return Err(Error::Composition { left: inner.codomain_size, right: self.domain_size() });
        }
        Ok(Self::from_raw(inner.values.iter().map(|&v| self.values[v]), self.codomain_size))
    }

    /// Unique factorization `self = mono ∘ epi` with `epi` surjective and
    /// `mono` injective.
    pub fn epi_mono_factor(&self) -> (OrdinalMap, OrdinalMap) {
        let mut image: Vec<usize> = Vec::with_capacity(self.values.len());
        let mut epi = Vec::with_capacity(self.values.len());
        for &v in &self.values {
            if image.last() != Some(&v) {
                image.push(v);
            }
            epi.push(image.len() - 1);
        }
        let mid = image.len();
        (Self::from_raw(epi, mid), Self::from_raw(image, self.codomain_size))
    }

    /// Elements of `[n]` missed by the map, ascending.
    pub fn missing(&self) -> Vec<usize> {
        (0..self.codomain_size).filter(|v| self.values.binary_search(v).is_err()).collect()
    }

    /// Positions `t` with `self(t) == self(t+1)`, ascending.
    pub fn repeats(&self) -> Vec<usize> {
        self.values.windows(2).enumerate().filter(|(_, w)| w[0] == w[1]).map(|(t, _)| t).collect()
    }

    /// Restriction to the initial segment `[k] ⊆ [m]`, as a map into
    /// `[self(k)]`.
    pub fn restrict_initial(&self, k: usize) -> OrdinalMap {
        let top = self.values[k];
        Self::from_raw(self.values[..=k].iter().copied(), top + 1)
    }

    /// The operator sequence realising `θ^*` on a simplicial object: the
    /// faces to apply first (in the listed order), then the degeneracies.
    pub fn operator_word(&self) -> (Vec<usize>, Vec<usize>) {
        let (epi, mono) = self.epi_mono_factor();
        let mut faces = mono.missing();
        faces.reverse();
        (faces, epi.repeats())
    }
}

impl fmt::Debug for OrdinalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:[{}]->[{}]", self.values, self.source(), self.target())
    }
}

/// Diagrammatic-order composition: `f : [k] -> [m]` followed by `g : [m] -> [n]`.
pub fn compose(f: &OrdinalMap, g: &OrdinalMap) -> Result<OrdinalMap> {
    g.after(f)
}

/// All monotone maps `[m] -> [n]`, lexicographic on value lists.
pub fn enumerate_maps(m: usize, n: usize) -> Vec<OrdinalMap> {
    let mut out = Vec::with_capacity(binomial((n + m + 1) as u64, (m + 1) as u64) as usize);
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(cur: &mut Vec<usize>, len: usize, n: usize, out: &mut Vec<OrdinalMap>) {
        if cur.len() == len {
            out.push(OrdinalMap::from_raw(cur.clone(), n + 1));
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=n {
            cur.push(v);
            rec(cur, len, n, out);
            cur.pop();
        }
    }
    rec(&mut cur, m + 1, n, &mut out);
    out
}

pub fn enumerate_injections(m: usize, n: usize) -> Vec<OrdinalMap> {
    enumerate_maps(m, n).into_iter().filter(OrdinalMap::is_injective).collect()
}

pub fn enumerate_surjections(m: usize, n: usize) -> Vec<OrdinalMap> {
    enumerate_maps(m, n).into_iter().filter(OrdinalMap::is_surjective).collect()
}

/// A morphism of the augmented simplex category: either an ordinary map or
/// a map out of the empty ordinal `[-1]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum AugmentedMap {
    /// `[-1] -> [n]` where `codomain_size = n + 1`; `codomain_size == 0` is
    /// the identity of `[-1]`, the monoidal unit.
    Empty { codomain_size: usize },
    Map(OrdinalMap),
}

impl AugmentedMap {
    pub fn unit() -> Self {
        AugmentedMap::Empty { codomain_size: 0 }
    }

    pub fn domain_size(&self) -> usize {
        match self {
            AugmentedMap::Empty { .. } => 0,
            AugmentedMap::Map(f) => f.domain_size(),
        }
    }

    pub fn codomain_size(&self) -> usize {
        match self {
            AugmentedMap::Empty { codomain_size } => *codomain_size,
            AugmentedMap::Map(f) => f.codomain_size(),
        }
    }

    fn values(&self) -> &[usize] {
        match self {
            AugmentedMap::Empty { .. } => &[],
            AugmentedMap::Map(f) => f.values(),
        }
    }
}

impl From<OrdinalMap> for AugmentedMap {
    fn from(f: OrdinalMap) -> Self {
        AugmentedMap::Map(f)
    }
}

/// The ordinal sum `φ + θ : [m+n+1] -> [m'+n'+1]`.
pub fn monoidal_sum(phi: &AugmentedMap, theta: &AugmentedMap) -> AugmentedMap {
    let shift = phi.codomain_size();
    let values: Vec<usize> =
        phi.values().iter().copied().chain(theta.values().iter().map(|&v| v + shift)).collect();
    let codomain_size = shift + theta.codomain_size();
    if values.is_empty() {
        AugmentedMap::Empty { codomain_size }
    } else {
        AugmentedMap::Map(OrdinalMap::from_raw(values, codomain_size))
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(v: &[usize], n: usize) -> OrdinalMap {
        OrdinalMap::new(v.to_vec(), n + 1).unwrap()
    }

    #[test]
    fn compose_pointwise() {
        let f = map(&[0, 2], 2);
        let g = map(&[0, 1, 3], 3);
        assert_eq!(compose(&f, &g).unwrap(), map(&[0, 3], 3));
        assert_eq!(compose(&OrdinalMap::identity(2), &g).unwrap(), g);
        assert!(matches!(compose(&g, &f), Err(Error::Composition { .. })));
    }

    #[test]
    fn composition_is_associative_exhaustively() {
        for f in enumerate_maps(1, 2) {
            for g in enumerate_maps(2, 3) {
                for h in enumerate_maps(3, 2) {
                    let left = h.after(&g.after(&f).unwrap()).unwrap();
                    let right = h.after(&g).unwrap().after(&f).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn generators() {
        assert_eq!(OrdinalMap::coface(0, 2).unwrap(), map(&[1, 2], 2));
        assert_eq!(OrdinalMap::codegeneracy(1, 1).unwrap(), map(&[0, 1, 1], 1));
        assert!(OrdinalMap::coface(3, 2).is_err());
        assert!(OrdinalMap::codegeneracy(2, 1).is_err());
        assert_eq!(OrdinalMap::last_face(2, 3).unwrap(), map(&[2, 3], 3));
    }

    #[test]
    fn cosimplicial_identities() {
        for n in 2..=6 {
            for j in 0..=n {
                for i in 0..j {
                    // d^j d^i = d^i d^{j-1} for i < j
                    let lhs = OrdinalMap::coface(j, n).unwrap().after(&OrdinalMap::coface(i, n - 1).unwrap()).unwrap();
                    let rhs = OrdinalMap::coface(i, n).unwrap().after(&OrdinalMap::coface(j - 1, n - 1).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        for n in 0..=5 {
            for j in 0..=n {
                for i in 0..=j {
                    // s^j s^i = s^i s^{j+1} for i <= j
                    let lhs = OrdinalMap::codegeneracy(j, n).unwrap().after(&OrdinalMap::codegeneracy(i, n + 1).unwrap()).unwrap();
                    let rhs = OrdinalMap::codegeneracy(i, n).unwrap().after(&OrdinalMap::codegeneracy(j + 1, n + 1).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
                for i in 0..=n + 1 {
                    // s^j d^i
                    let lhs = OrdinalMap::codegeneracy(j, n).unwrap().after(&OrdinalMap::coface(i, n + 1).unwrap()).unwrap();
                    let expected = if i < j {
                        OrdinalMap::coface(i, n).unwrap().after(&OrdinalMap::codegeneracy(j - 1, n - 1).unwrap()).unwrap()
                    } else if i == j || i == j + 1 {
                        OrdinalMap::identity(n)
                    } else {
                        OrdinalMap::coface(i - 1, n).unwrap().after(&OrdinalMap::codegeneracy(j, n - 1).unwrap()).unwrap()
                    };
                    if n == 0 && i != j && i != j + 1 {
                        continue;
                    }
                    assert_eq!(lhs, expected, "s^{j} d^{i} on [{n}]");
                }
            }
        }
    }

    #[test]
    fn epi_mono_examples() {
        let (e, m) = map(&[0, 0, 2], 2).epi_mono_factor();
        assert_eq!(e, map(&[0, 0, 1], 1));
        assert_eq!(m, map(&[0, 2], 2));
        let inj = map(&[0, 2, 3], 3);
        assert_eq!(inj.epi_mono_factor(), (OrdinalMap::identity(2), inj.clone()));
    }

    #[test]
    fn epi_mono_recomposes_and_is_a_bijection() {
        let all = enumerate_maps(2, 3);
        assert_eq!(all.len(), 20);
        for f in &all {
            let (e, m) = f.epi_mono_factor();
            assert!(e.is_surjective() && m.is_injective());
            assert_eq!(&m.after(&e).unwrap(), f);
        }
        // bijection onto (surjection, injection) pairs with matching middle
        for a in 0..=4 {
            for b in 0..=4 {
                let maps = enumerate_maps(a, b);
                let mut pairs = 0;
                for mid in 0..=a.min(b) {
                    pairs += enumerate_surjections(a, mid).len() * enumerate_injections(mid, b).len();
                }
                assert_eq!(maps.len(), pairs);
                let mut seen = std::collections::HashSet::new();
                for f in &maps {
                    assert!(seen.insert(f.epi_mono_factor()));
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_maps(1, 2).len(), 6);
        assert_eq!(enumerate_maps(2, 2).len(), 10);
        for k in 0..6 {
            assert_eq!(enumerate_maps(0, k).len(), k + 1);
        }
        for m in 0..5u64 {
            for n in 0..5u64 {
                assert_eq!(enumerate_maps(m as usize, n as usize).len() as u64, binomial(n + m + 1, m + 1));
            }
        }
        let maps = enumerate_maps(2, 3);
        assert!(maps.windows(2).all(|w| w[0].values() < w[1].values()));
    }

    #[test]
    fn monoidal_sum_examples() {
        let id1: AugmentedMap = OrdinalMap::identity(1).into();
        let id0: AugmentedMap = OrdinalMap::identity(0).into();
        assert_eq!(monoidal_sum(&id1, &id0), OrdinalMap::identity(2).into());
        let phi: AugmentedMap = map(&[0], 1).into();
        let theta: AugmentedMap = map(&[1], 1).into();
        assert_eq!(monoidal_sum(&phi, &theta), map(&[0, 3], 3).into());
        let f: AugmentedMap = map(&[0, 2], 3).into();
        assert_eq!(monoidal_sum(&f, &AugmentedMap::unit()), f);
        assert_eq!(monoidal_sum(&AugmentedMap::unit(), &f), f);
    }

    fn augmented_maps(max_total: usize) -> Vec<AugmentedMap> {
        let mut out = vec![AugmentedMap::unit()];
        for n in 0..max_total {
            out.push(AugmentedMap::Empty { codomain_size: n + 1 });
        }
        for m in 0..max_total {
            for n in 0..max_total {
                if m + n + 2 <= max_total + 1 {
                    out.extend(enumerate_maps(m, n).into_iter().map(AugmentedMap::Map));
                }
            }
        }
        out
    }

    #[test]
    fn monoidal_sum_is_associative_and_unital() {
        let maps = augmented_maps(3);
        for a in &maps {
            assert_eq!(&monoidal_sum(a, &AugmentedMap::unit()), a);
            assert_eq!(&monoidal_sum(&AugmentedMap::unit(), a), a);
            for b in &maps {
                for c in &maps {
                    if a.domain_size() + b.domain_size() + c.domain_size() > 5 {
                        continue;
                    }
                    assert_eq!(
                        monoidal_sum(&monoidal_sum(a, b), c),
                        monoidal_sum(a, &monoidal_sum(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn operator_word_reconstructs() {
        // θ = mono∘epi, so θ^* is "faces then degeneracies"; check that the
        // word rebuilds θ when applied to the identity simplex of Δ[n].
        for m in 0..=3 {
            for n in 0..=3 {
                for theta in enumerate_maps(m, n) {
                    let (faces, degens) = theta.operator_word();
                    let mut cur = OrdinalMap::identity(n);
                    for i in faces {
                        let k = cur.source();
                        cur = cur.after(&OrdinalMap::coface(i, k).unwrap()).unwrap();
                    }
                    for j in degens {
                        let k = cur.source();
                        cur = cur.after(&OrdinalMap::codegeneracy(j, k).unwrap()).unwrap();
                    }
                    assert_eq!(cur, theta);
                }
            }
        }
    }
}
