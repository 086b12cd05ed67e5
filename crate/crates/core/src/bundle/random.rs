use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PrincipalBundle;
use crate::error::Result;
use crate::ordinal::OrdinalMap;
use crate::sgroup::SimplicialGroup;
use crate::simplicial::{SimplexRef, SimplicialSet, TruncatedComplex};
use crate::wbar::{Wbar, WbarSimplex};

/// A quotient of a disjoint union of standard simplices together with a
/// simplicial map to `W̄K` that is constant on the identified faces.
#[derive(Clone, Debug)]
pub struct GluedBase<E> {
    pub complex: TruncatedComplex,
    pub r: Vec<Vec<WbarSimplex<E>>>,
}

/// Faces of the pieces are vertex subsets, encoded as bitmasks.
struct Gluing<'a, K: SimplicialGroup> {
    wbar: Wbar<&'a K>,
    tops: Vec<(usize, WbarSimplex<K::Elem>)>,
    nodes: HashMap<(usize, u32), usize>,
    keys: Vec<(usize, u32)>,
    parent: Vec<usize>,
}

fn vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|v| mask & (1 << v) != 0).collect()
}

impl<'a, K: SimplicialGroup> Gluing<'a, K> {
    fn new(k: &'a K, tops: Vec<(usize, WbarSimplex<K::Elem>)>) -> Self {
        let mut g = Self { wbar: Wbar::new(k), tops, nodes: HashMap::new(), keys: Vec::new(), parent: Vec::new() };
        for p in 0..g.tops.len() {
            let n = g.tops[p].0;
            for mask in 1u32..(1 << (n + 1)) {
                g.nodes.insert((p, mask), g.keys.len());
                g.parent.push(g.keys.len());
                g.keys.push((p, mask));
            }
        }
        g
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn value(&self, (p, mask): (usize, u32)) -> WbarSimplex<K::Elem> {
        let (n, x) = &self.tops[p];
        let vs = vertices(mask);
        let inclusion = OrdinalMap::new(vs.clone(), n + 1).expect("increasing");
        self.wbar.act(&inclusion, x)
    }

    /// Identifies two faces of equal dimension along the order-preserving
    /// bijection, together with all their faces, if their images agree.
    fn glue(&mut self, a: (usize, u32), b: (usize, u32)) -> bool {
        if self.value(a) != self.value(b) {
            return false;
        }
        self.union(a, b);
        true
    }

    fn union(&mut self, a: (usize, u32), b: (usize, u32)) {
        let (ra, rb) = (self.find(self.nodes[&a]), self.find(self.nodes[&b]));
        if ra == rb {
            return;
        }
        self.parent[ra] = rb;
        let (va, vb) = (vertices(a.1), vertices(b.1));
        if va.len() > 1 {
            for i in 0..va.len() {
                self.union((a.0, a.1 & !(1 << va[i])), (b.0, b.1 & !(1 << vb[i])));
            }
        }
    }

    fn build(mut self) -> Result<GluedBase<K::Elem>> {
        let dim = self.tops.iter().map(|t| t.0).max().unwrap_or(0);
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut reps: Vec<Vec<(usize, u32)>> = vec![Vec::new(); dim + 1];
        for i in 0..self.keys.len() {
            let root = self.find(i);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(root) {
                let key = self.keys[root];
                let d = key.1.count_ones() as usize - 1;
                e.insert(reps[d].len());
                reps[d].push(key);
            }
        }
        let mut faces = Vec::with_capacity(dim + 1);
        let mut r = Vec::with_capacity(dim + 1);
        for (d, level) in reps.iter().enumerate() {
            let mut fl = Vec::with_capacity(level.len());
            for &(p, mask) in level {
                let vs = vertices(mask);
                let fs = if d == 0 {
                    Vec::new()
                } else {
                    vs.iter()
                        .map(|v| {
                            let root = self.find(self.nodes[&(p, mask & !(1 << v))]);
                            SimplexRef::cell(d - 1, index[&root])
                        })
                        .collect()
                };
                fl.push(fs);
            }
            faces.push(fl);
            r.push(level.iter().map(|&key| self.value(key)).collect());
        }
        let cells = reps.iter().map(Vec::len).collect();
        Ok(GluedBase { complex: TruncatedComplex::new(cells, faces, true)?, r })
    }
}

/// Between one and three standard simplices of dimension at most `max_dim`
/// with random images in `W̄K`, then a few random identifications of faces
/// whose images agree.
pub fn random_pieces<K: SimplicialGroup, R: Rng>(k: &K, rng: &mut R, max_dim: usize) -> Result<GluedBase<K::Elem>> {
    let pieces = rng.gen_range(1..=3);
    let mut tops = Vec::with_capacity(pieces);
    for _ in 0..pieces {
        let n = rng.gen_range(0..=max_dim);
        let mut x = Vec::with_capacity(n);
        for t in 0..n {
            let level = k.elements(n - 1 - t)?;
            x.push(level.choose(rng).expect("groups are nonempty").clone());
        }
        tops.push((n, x));
    }
    let mut g = Gluing::new(k, tops);
    let attempts = rng.gen_range(0..=6);
    for _ in 0..attempts {
        let a = g.keys[rng.gen_range(0..g.keys.len())];
        let d = a.1.count_ones();
        let same: Vec<(usize, u32)> = g.keys.iter().copied().filter(|b| b.1.count_ones() == d && *b != a).collect();
        if let Some(&b) = same.choose(rng) {
            g.glue(a, b);
        }
    }
    g.build()
}

/// A seeded random bundle over a glued base of dimension at most `max_dim`.
pub fn random_bundle<K: SimplicialGroup>(k: K, seed: u64, max_dim: usize) -> Result<PrincipalBundle<K>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let glued = random_pieces(&k, &mut rng, max_dim)?;
    PrincipalBundle::from_classifying_map(glued.complex, k, glued.r)
}
