use serde::{Deserialize, Serialize};

use super::{FiniteGroup, Word};
use crate::error::{Error, Result};

/// A finitely presented group on generators `0..generator_count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpPresentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl FpPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(&g) = r.generators().find(|&&g| g >= generator_count) {
                return Err(Error::Index { index: g, bound: generator_count });
            }
        }
        let relators = relators.into_iter().filter(|r| !r.is_identity()).collect();
        Ok(Self { generator_count, relators })
    }

    pub fn free(generator_count: usize) -> Self {
        Self { generator_count, relators: Vec::new() }
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn is_hom(&self, g: &FiniteGroup, images: &[usize]) -> bool {
        self.relators.iter().all(|r| r.evaluate(g, |&i| images[i]) == 0)
    }
}

/// Every assignment of generators to elements of `g` that kills each
/// relator, in lexicographic order.
pub fn hom_enumeration(p: &FpPresentation, g: &FiniteGroup, budget: u128) -> Result<Vec<Vec<usize>>> {
    let total = (g.order() as u128).checked_pow(p.generator_count() as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded { requested: total, budget });
    }
    let n = p.generator_count();
    let mut out = Vec::new();
    let mut images = vec![0usize; n];
    loop {
        if p.is_hom(g, &images) {
            out.push(images.clone());
        }
        // odometer, last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            images[i] += 1;
            if images[i] < g.order() {
                break;
            }
            images[i] = 0;
        }
    }
}
