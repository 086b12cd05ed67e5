use std::fmt;

use serde::{Deserialize, Serialize};

use super::{normal_form, CellIndex, SimplicialSet, StandardSimplex};
use crate::error::{Error, Result};
use crate::group::{FpPresentation, Word};
use crate::ordinal::{enumerate_surjections, OrdinalMap};

/// A simplex in normal form: a surjection applied to a nondegenerate cell.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexRef {
    pub degeneracy: OrdinalMap,
    pub cell: usize,
}

impl SimplexRef {
    pub fn cell(degree: usize, cell: usize) -> Self {
        Self { degeneracy: OrdinalMap::identity(degree), cell }
    }

    pub fn degree(&self) -> usize {
        self.degeneracy.source()
    }

    pub fn cell_degree(&self) -> usize {
        self.degeneracy.target()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracy.is_identity()
    }
}

impl fmt::Debug for SimplexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{:?}*c{}_{}", self.degeneracy.values(), self.cell_degree(), self.cell)
        } else {
            write!(f, "c{}_{}", self.cell_degree(), self.cell)
        }
    }
}

/// Finitely many nondegenerate cells in degrees `0..=dim` with their faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedComplex {
    dim: usize,
    cells: Vec<usize>,
    /// `faces[d][c][i]` is `d_i` of cell `c` in degree `d`; empty for `d = 0`.
    faces: Vec<Vec<Vec<SimplexRef>>>,
    /// No nondegenerate cells exist above `dim`.
    complete: bool,
}

/// Serialized form: `faces` lists, for every cell of positive degree in
/// order, its faces as `[cell degree, cell index, degeneracy values]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dim: usize,
    pub cells: Vec<usize>,
    pub faces: Vec<Vec<(usize, usize, Vec<usize>)>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complete: bool,
}

impl TruncatedComplex {
    /// Validates index ranges, face degrees and the face identities.
    pub fn new(cells: Vec<usize>, faces: Vec<Vec<Vec<SimplexRef>>>, complete: bool) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidComplex("no degrees given".into()));
        }
        let dim = cells.len() - 1;
        let bad = |m: String| Err(Error::InvalidComplex(m));
        if faces.len() != cells.len() {
            return bad(format!("face table has {} degrees, expected {}", faces.len(), cells.len()));
        }
        for d in 0..=dim {
            if faces[d].len() != cells[d] {
                return bad(format!("degree {d}: {} face lists for {} cells", faces[d].len(), cells[d]));
            }
            for (c, fs) in faces[d].iter().enumerate() {
                let expected = if d == 0 { 0 } else { d + 1 };
                if fs.len() != expected {
                    return bad(format!("cell {c} in degree {d} has {} faces", fs.len()));
                }
                for r in fs {
                    if r.degree() != d - 1 || !r.degeneracy.is_surjective() {
                        return bad(format!("face {r:?} of cell {c} in degree {d} is not a normal-form {}-simplex", d - 1));
                    }
                    if r.cell_degree() >= d || r.cell >= cells[r.cell_degree()] {
                        return bad(format!("face {r:?} of cell {c} in degree {d} targets a missing cell"));
                    }
                }
            }
        }
        let complex = Self { dim, cells, faces, complete };
        for d in 2..=dim {
            for c in 0..complex.cells[d] {
                let x = SimplexRef::cell(d, c);
                for j in 1..=d {
                    let dj = complex.face(d, j, &x);
                    for i in 0..j {
                        if complex.face(d - 1, i, &dj) != complex.face(d - 1, j - 1, &complex.face(d, i, &x)) {
                            return Err(Error::NotSimplicial(format!(
                                "d_{i} d_{j} != d_{} d_{i} on cell {c} of degree {d}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(complex)
    }

    pub fn from_json_value(json: &ComplexJson) -> Result<Self> {
        if json.cells.len() != json.dim + 1 {
            return Err(Error::InvalidComplex(format!("dim {} but {} cell counts", json.dim, json.cells.len())));
        }
        let expected: usize = json.cells[1..].iter().sum();
        if json.faces.len() != expected {
            return Err(Error::InvalidComplex(format!("{} face lists for {expected} positive-degree cells", json.faces.len())));
        }
        let mut faces: Vec<Vec<Vec<SimplexRef>>> = vec![vec![Vec::new(); json.cells[0]]];
        let mut it = json.faces.iter();
        for d in 1..=json.dim {
            let mut level = Vec::with_capacity(json.cells[d]);
            for _ in 0..json.cells[d] {
                let list = it.next().expect("length checked");
                let refs = list
                    .iter()
                    .map(|(deg, cell, epi)| {
                        let degeneracy = OrdinalMap::new(epi.clone(), deg + 1)
                            .map_err(|e| Error::InvalidComplex(format!("bad degeneracy {epi:?}: {e}")))?;
                        Ok(SimplexRef { degeneracy, cell: *cell })
                    })
                    .collect::<Result<Vec<_>>>()?;
                level.push(refs);
            }
            faces.push(level);
        }
        Self::new(json.cells.clone(), faces, json.complete)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: ComplexJson = serde_json::from_str(text)?;
        Self::from_json_value(&json)
    }

    pub fn to_json_value(&self) -> ComplexJson {
        let faces = self.faces[1..]
            .iter()
            .flatten()
            .map(|fs| fs.iter().map(|r| (r.cell_degree(), r.cell, r.degeneracy.values().to_vec())).collect())
            .collect();
        ComplexJson { dim: self.dim, cells: self.cells.clone(), faces, complete: self.complete }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cells
    }

    /// Declares that there are no nondegenerate cells above `dim`.
    pub fn into_complete(mut self) -> Self {
        self.complete = true;
        self
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cell_faces(&self, d: usize, c: usize) -> &[SimplexRef] {
        &self.faces[d][c]
    }

    /// Vertices `(v_0, ..., v_d)` of a simplex.
    pub fn vertices(&self, x: &SimplexRef) -> Vec<usize> {
        let n = x.degree();
        (0..=n).map(|i| self.act(&OrdinalMap::constant(0, n, i).expect("vertex"), x).cell).collect()
    }

    /// `π_1` as a presentation: one generator per nondegenerate edge and one
    /// relator `[d_2σ][d_0σ][d_1σ]^{-1}` per nondegenerate 2-cell.
    pub fn pi1_presentation(&self) -> Result<FpPresentation> {
        let edges = self.cells.get(1).copied().unwrap_or(0);
        let letter = |r: &SimplexRef| if r.is_degenerate() { Word::identity() } else { Word::generator(r.cell) };
        let relators = (0..self.cells.get(2).copied().unwrap_or(0))
            .map(|c| {
                let f = &self.faces[2][c];
                letter(&f[2]).multiply(&letter(&f[0])).multiply(&letter(&f[1]).inverse())
            })
            .collect();
        FpPresentation::new(edges, relators)
    }
}

impl SimplicialSet for TruncatedComplex {
    type Simplex = SimplexRef;

    fn simplices(&self, n: usize) -> Result<Vec<SimplexRef>> {
        if n > self.dim && !self.complete {
            return Err(Error::InsufficientTruncation { requested: n, available: self.dim });
        }
        let mut out = Vec::new();
        for r in 0..=n.min(self.dim) {
            for epi in enumerate_surjections(n, r) {
                for cell in 0..self.cells[r] {
                    out.push(SimplexRef { degeneracy: epi.clone(), cell });
                }
            }
        }
        Ok(out)
    }

    fn face(&self, n: usize, i: usize, x: &SimplexRef) -> SimplexRef {
        self.act(&OrdinalMap::coface(i, n).expect("face index"), x)
    }

    fn degeneracy(&self, n: usize, i: usize, x: &SimplexRef) -> SimplexRef {
        SimplexRef {
            degeneracy: x.degeneracy.after(&OrdinalMap::codegeneracy(i, n).expect("degeneracy index")).expect("degree"),
            cell: x.cell,
        }
    }

    fn act(&self, theta: &OrdinalMap, x: &SimplexRef) -> SimplexRef {
        let phi = x.degeneracy.after(theta).expect("degree");
        let (epi, mono) = phi.epi_mono_factor();
        if mono.is_identity() {
            return SimplexRef { degeneracy: epi, cell: x.cell };
        }
        // peel off the face d^j for the largest missing j, then recurse on
        // the stored face
        let r = mono.target();
        let j = *mono.missing().last().expect("not identity");
        let rest: Vec<usize> = mono.values().iter().map(|&v| if v > j { v - 1 } else { v }).collect();
        let rest = OrdinalMap::new(rest, r).expect("monotone");
        let theta2 = rest.after(&epi).expect("degree");
        self.act(&theta2, &self.faces[r][x.cell][j])
    }

    fn is_degenerate(&self, _n: usize, x: &SimplexRef) -> bool {
        x.is_degenerate()
    }

    fn max_degree(&self) -> Option<usize> {
        if self.complete {
            None
        } else {
            Some(self.dim)
        }
    }

    fn nondegenerate(&self, n: usize) -> Result<Vec<SimplexRef>> {
        if n > self.dim {
            return if self.complete {
                Ok(Vec::new())
            } else {
                Err(Error::InsufficientTruncation { requested: n, available: self.dim })
            };
        }
        Ok((0..self.cells[n]).map(|c| SimplexRef::cell(n, c)).collect())
    }

    fn contains(&self, n: usize, x: &SimplexRef) -> Result<bool> {
        Ok(x.degree() == n
            && x.degeneracy.is_surjective()
            && x.cell_degree() <= self.dim
            && x.cell < self.cells[x.cell_degree()])
    }
}

/// A truncation of an oracle together with the cells it was built from.
pub struct Materialized<S> {
    pub complex: TruncatedComplex,
    pub cells: CellIndex<S>,
}

impl<S> Materialized<S> {
    pub fn simplex(&self, r: &SimplexRef) -> &S {
        &self.cells.cells[r.cell_degree()][r.cell]
    }
}

/// Records the nondegenerate simplices of degree at most `n` and their
/// faces in normal form.
pub fn materialize<X: SimplicialSet + ?Sized>(x: &X, n: usize) -> Result<Materialized<X::Simplex>> {
    let index = CellIndex::build(x, n)?;
    let mut faces = vec![vec![Vec::new(); index.cells[0].len()]];
    for d in 1..=n {
        let mut level = Vec::with_capacity(index.cells[d].len());
        for s in &index.cells[d] {
            let refs = (0..=d)
                .map(|i| {
                    let (epi, core) = normal_form(x, d - 1, &x.face(d, i, s));
                    let r = epi.target();
                    let cell = *index.index[r].get(&core).ok_or_else(|| {
                        Error::NotSimplicial(format!("face {core:?} of {s:?} is not an enumerated simplex"))
                    })?;
                    Ok(SimplexRef { degeneracy: epi, cell })
                })
                .collect::<Result<Vec<_>>>()?;
            level.push(refs);
        }
        faces.push(level);
    }
    let complex = TruncatedComplex::new(index.counts(), faces, false)?;
    Ok(Materialized { complex, cells: index })
}

/// `Δ[k]` as an explicit, complete complex.
pub fn standard_simplex_complex(k: usize) -> TruncatedComplex {
    materialize(&StandardSimplex::new(k), k).expect("finite").complex.into_complete()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, hom_enumeration, symmetric};
    use crate::simplicial::check_simplicial_identities;
    use proptest::prelude::*;

    fn circle() -> TruncatedComplex {
        // one vertex, one edge whose faces are both the vertex
        let v = SimplexRef::cell(0, 0);
        TruncatedComplex::new(vec![1, 1], vec![vec![vec![]], vec![vec![v.clone(), v]]], true).unwrap()
    }

    #[test]
    fn standard_simplex_materializes() {
        let c = standard_simplex_complex(2);
        assert_eq!(c.cell_counts(), &[3, 3, 1]);
        assert_eq!(c.simplices(2).unwrap().len(), 10);
        assert!(c.nondegenerate(3).unwrap().is_empty());
        check_simplicial_identities(&c, 3).unwrap();
    }

    #[test]
    fn act_matches_oracle() {
        let d3 = StandardSimplex::new(3);
        let m = materialize(&d3, 3).unwrap();
        for n in 0..=3 {
            for r in m.complex.simplices(n).unwrap() {
                let s = d3.act(&r.degeneracy, m.simplex(&r));
                for mm in 0..=3 {
                    for theta in crate::ordinal::enumerate_maps(mm, n) {
                        let lhs = m.complex.act(&theta, &r);
                        let rhs = d3.act(&theta, &s);
                        assert_eq!(d3.act(&lhs.degeneracy, m.simplex(&lhs)), rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let c = standard_simplex_complex(3);
        let text = c.to_json();
        assert_eq!(TruncatedComplex::from_json(&text).unwrap(), c);
        let mut json = c.to_json_value();
        json.faces[0][0].1 = 7;
        assert!(TruncatedComplex::from_json_value(&json).is_err());
        let mut json = c.to_json_value();
        // swap two faces of the top triangle: breaks d_i d_j
        let first_tri = 6;
        json.faces[first_tri].swap(0, 2);
        assert!(matches!(TruncatedComplex::from_json_value(&json), Err(Error::NotSimplicial(_))));
        assert!(TruncatedComplex::from_json("{\"dim\": 1}").is_err());
    }

    #[test]
    fn truncation_is_reported() {
        let m = materialize(&StandardSimplex::new(4), 2).unwrap();
        assert!(matches!(m.complex.simplices(3), Err(Error::InsufficientTruncation { requested: 3, available: 2 })));
    }

    #[test]
    fn pi1_hom_counts() {
        let s3 = symmetric(3).unwrap();
        for k in 0..=3 {
            let p = standard_simplex_complex(k).pi1_presentation().unwrap();
            let homs = hom_enumeration(&p, &s3, 1 << 20).unwrap();
            assert_eq!(homs.len(), 6usize.pow(k as u32));
        }
        let homs = hom_enumeration(&circle().pi1_presentation().unwrap(), &cyclic(3).unwrap(), 100).unwrap();
        assert_eq!(homs.len(), 3);
        check_simplicial_identities(&circle(), 3).unwrap();
    }

    proptest! {
        #[test]
        fn normalization_is_stable(n in 0usize..4, m in 0usize..4, seed in 0usize..1000) {
            let c = standard_simplex_complex(3);
            let simplices = c.simplices(n).unwrap();
            let x = &simplices[seed % simplices.len()];
            let maps = crate::ordinal::enumerate_maps(m, n);
            let theta = &maps[(seed / 7) % maps.len()];
            let y = c.act(theta, x);
            let (epi, core) = normal_form(&c, m, &y);
            prop_assert_eq!(SimplexRef { degeneracy: core.degeneracy.after(&epi).unwrap(), cell: core.cell }, y.clone());
            // contravariance: (θφ)^* = φ^* θ^*
            let phis = crate::ordinal::enumerate_maps(1, m);
            let phi = &phis[seed % phis.len()];
            prop_assert_eq!(c.act(&theta.after(phi).unwrap(), x), c.act(phi, &y));
        }
    }
}
