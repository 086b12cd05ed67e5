//! Normalized chain complexes and integral homology through the Smith
//! normal form.

mod snf;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use snf::{elementary_divisors, smith_normal_form, Matrix, Snf};

use crate::error::{Error, Result};
use crate::simplicial::{materialize, SimplicialSet, TruncatedComplex};

/// Normalized chains: the basis in degree `d` is the nondegenerate
/// `d`-cells and `boundaries[d]` is `∂_d : C_d -> C_{d-1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<Matrix>,
    /// All chain groups above the top degree vanish.
    pub complete: bool,
}

impl ChainComplex {
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `(∂_d)_{c', c}` is the signed count of faces `d_i c` equal to `c'`.
    pub fn normalized(x: &TruncatedComplex) -> Self {
        let ranks = x.cell_counts().to_vec();
        let mut boundaries = vec![Matrix::zero(0, ranks[0])];
        for d in 1..ranks.len() {
            let mut m = Matrix::zero(ranks[d - 1], ranks[d]);
            for c in 0..ranks[d] {
                for (i, f) in x.cell_faces(d, c).iter().enumerate() {
                    if !f.is_degenerate() {
                        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                        m.data[f.cell][c] += sign;
                    }
                }
            }
            boundaries.push(m);
        }
        Self { ranks, boundaries, complete: x.is_complete() }
    }

    /// Normalized chains of an oracle, materialized through degree `n`.
    pub fn of<X: SimplicialSet + ?Sized>(x: &X, n: usize) -> Result<Self> {
        Ok(Self::normalized(&materialize(x, n)?.complex))
    }

    /// Checks `∂_{d-1} ∂_d = 0` in every degree.
    pub fn check_square_zero(&self) -> Result<()> {
        for d in 2..self.boundaries.len() {
            if !self.boundaries[d - 1].mul(&self.boundaries[d]).is_zero() {
                return Err(Error::VerificationFailure(format!("∂_{} ∂_{d} is not zero", d - 1)));
            }
        }
        Ok(())
    }

    fn boundary(&self, d: usize) -> Result<Option<&Matrix>> {
        if d < self.boundaries.len() {
            Ok(Some(&self.boundaries[d]))
        } else if self.complete {
            Ok(None)
        } else {
            Err(Error::InsufficientTruncation { requested: d, available: self.top() })
        }
    }

    /// `H_i = ker ∂_i / im ∂_{i+1}`.
    pub fn homology(&self, i: usize) -> Result<HomologyGroup> {
        let incoming = self.boundary(i + 1)?.map(elementary_divisors).unwrap_or_default();
        let outgoing = if i == 0 { 0 } else { self.boundary(i)?.map_or(0, |m| elementary_divisors(m).len()) };
        let rank = self.ranks.get(i).copied().unwrap_or(0);
        let torsion = incoming.iter().filter(|x| !x.is_one()).cloned().collect();
        Ok(HomologyGroup { betti: rank - outgoing - incoming.len(), torsion })
    }

    /// `H_0, ..., H_{max_i}`, computed in parallel.
    pub fn homology_up_to(&self, max_i: usize) -> Result<Vec<HomologyGroup>> {
        (0..=max_i).into_par_iter().map(|i| self.homology(i)).collect()
    }

    /// `dim H_i(X; F_p)`, read off from the integral elementary divisors.
    pub fn homology_mod_p(&self, i: usize, p: u64) -> Result<usize> {
        let p = BigInt::from(p);
        let rank_p = |m: Option<&Matrix>| {
            m.map_or(0, |m| elementary_divisors(m).iter().filter(|x| !(*x % &p).is_zero()).count())
        };
        let incoming = rank_p(self.boundary(i + 1)?);
        let outgoing = if i == 0 { 0 } else { rank_p(self.boundary(i)?) };
        Ok(self.ranks.get(i).copied().unwrap_or(0) - outgoing - incoming)
    }
}

/// `Z^betti ⊕ ⊕ Z/t` with the torsion coefficients in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|t| t.to_u64().expect("small torsion")).collect()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomologyReport {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
    pub truncation: usize,
}

pub fn homology_report(c: &ChainComplex, max_i: usize) -> Result<Vec<HomologyReport>> {
    Ok(c.homology_up_to(max_i)?
        .into_iter()
        .enumerate()
        .map(|(degree, h)| HomologyReport { degree, betti: h.betti, torsion: h.torsion_u64(), truncation: c.top() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric, Tau};
    use crate::sgroup::Discrete;
    use crate::simplicial::{standard_simplex_complex, SimplexRef};
    use crate::wbar::Wbar;
    use proptest::prelude::*;

    fn circle() -> TruncatedComplex {
        let v = SimplexRef::cell(0, 0);
        TruncatedComplex::new(vec![1, 1], vec![vec![vec![]], vec![vec![v.clone(), v]]], true).unwrap()
    }

    #[test]
    fn circle_and_simplex() {
        let c = ChainComplex::normalized(&circle());
        assert!(c.boundaries[1].is_zero());
        let h = c.homology_up_to(3).unwrap();
        assert_eq!((h[0].betti, h[1].betti), (1, 1));
        assert!(h[2].is_zero() && h[3].is_zero());
        let d3 = ChainComplex::normalized(&standard_simplex_complex(3));
        let h = d3.homology_up_to(3).unwrap();
        assert_eq!(h[0].to_string(), "Z");
        assert!(h[1..].iter().all(HomologyGroup::is_zero));
    }

    #[test]
    fn truncation_is_enforced() {
        let w = Wbar::new(Discrete::new(cyclic(2).unwrap()));
        let c = ChainComplex::of(&w, 3).unwrap();
        assert!(c.homology(2).is_ok());
        assert!(matches!(c.homology(3), Err(Error::InsufficientTruncation { .. })));
    }

    #[test]
    fn wbar_z2() {
        let w = Wbar::new(Discrete::new(cyclic(2).unwrap()));
        let c = ChainComplex::of(&w, 5).unwrap();
        assert_eq!(c.ranks, vec![1; 6]);
        c.check_square_zero().unwrap();
        let h = c.homology_up_to(4).unwrap();
        let shown: Vec<String> = h.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["Z", "Z/2", "0", "Z/2", "0"]);
        for i in 0..=4 {
            assert_eq!(c.homology_mod_p(i, 2).unwrap(), 1);
            assert_eq!(c.homology_mod_p(i, 3).unwrap(), (i == 0) as usize);
        }
    }

    #[test]
    fn wbar_s3_tau_and_basis_sizes() {
        let s3 = Discrete::new(symmetric(3).unwrap());
        let c = ChainComplex::of(&Wbar::new(&s3), 3).unwrap();
        assert_eq!(&c.ranks[..3], &[1, 5, 25]);
        c.check_square_zero().unwrap();
        let h = c.homology_up_to(2).unwrap();
        // H_1(BS3) = Z/2, H_2(BS3) = 0
        assert_eq!(h[1].torsion_u64(), vec![2]);
        assert!(h[2].is_zero());
        let t = ChainComplex::of(&Wbar::with_tau(&s3, Tau::LowerCentral { q: 2 }), 3).unwrap();
        t.check_square_zero().unwrap();
        assert_eq!(t.homology(0).unwrap().betti, 1);
    }

    fn permuted(c: &ChainComplex, perms: &[Vec<usize>]) -> ChainComplex {
        let boundaries = c
            .boundaries
            .iter()
            .enumerate()
            .map(|(d, m)| {
                let mut out = m.clone();
                for (r, row) in out.data.iter_mut().enumerate() {
                    for (j, x) in row.iter_mut().enumerate() {
                        let src_r = if d == 0 { r } else { perms[d - 1][r] };
                        *x = m.data[src_r][perms[d][j]].clone();
                    }
                }
                out
            })
            .collect();
        ChainComplex { ranks: c.ranks.clone(), boundaries, complete: c.complete }
    }

    proptest! {
        #[test]
        fn homology_ignores_basis_order(seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let c = ChainComplex::of(&Wbar::new(Discrete::new(cyclic(3).unwrap())), 4).unwrap();
            let perms: Vec<Vec<usize>> = c.ranks.iter().map(|&n| {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut rng);
                p
            }).collect();
            let d = permuted(&c, &perms);
            d.check_square_zero().unwrap();
            prop_assert_eq!(c.homology_up_to(3).unwrap(), d.homology_up_to(3).unwrap());
        }
    }
}
