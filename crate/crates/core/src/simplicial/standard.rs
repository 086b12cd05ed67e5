use super::SimplicialSet;
use crate::error::Result;
use crate::ordinal::{enumerate_maps, OrdinalMap};

/// `Δ[k]`: the `n`-simplices are the monotone maps `[n] -> [k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardSimplex {
    k: usize,
}

impl StandardSimplex {
    pub fn new(k: usize) -> Self {
        Self { k }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// The top simplex `id : [k] -> [k]`.
    pub fn top(&self) -> OrdinalMap {
        OrdinalMap::identity(self.k)
    }
}

impl SimplicialSet for StandardSimplex {
    type Simplex = OrdinalMap;

    fn simplices(&self, n: usize) -> Result<Vec<OrdinalMap>> {
        Ok(enumerate_maps(n, self.k))
    }

    fn face(&self, n: usize, i: usize, x: &OrdinalMap) -> OrdinalMap {
        x.after(&OrdinalMap::coface(i, n).expect("face index")).expect("degree")
    }

    fn degeneracy(&self, n: usize, i: usize, x: &OrdinalMap) -> OrdinalMap {
        x.after(&OrdinalMap::codegeneracy(i, n).expect("degeneracy index")).expect("degree")
    }

    fn act(&self, theta: &OrdinalMap, x: &OrdinalMap) -> OrdinalMap {
        x.after(theta).expect("degree")
    }

    fn is_degenerate(&self, _n: usize, x: &OrdinalMap) -> bool {
        !x.is_injective()
    }

    fn contains(&self, n: usize, x: &OrdinalMap) -> Result<bool> {
        Ok(x.source() == n && x.target() == self.k)
    }
}
