use super::SimplicialGroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ordinal::OrdinalMap;

const LEVEL_BUDGET: u128 = 1 << 22;

fn tuples(order: usize, len: usize) -> Result<Vec<Vec<usize>>> {
    let total = (order as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if total > LEVEL_BUDGET {
        return Err(Error::BudgetExceeded { requested: total, budget: LEVEL_BUDGET });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0usize; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < order {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// `G` in every degree with identity structure maps.
#[derive(Clone, Debug)]
pub struct Discrete {
    pub group: FiniteGroup,
}

impl Discrete {
    pub fn new(group: FiniteGroup) -> Self {
        Self { group }
    }
}

impl SimplicialGroup for Discrete {
    type Elem = usize;

    fn one(&self, _n: usize) -> usize {
        0
    }
    fn mul(&self, _n: usize, a: &usize, b: &usize) -> usize {
        self.group.op(*a, *b)
    }
    fn inv(&self, _n: usize, a: &usize) -> usize {
        self.group.inverse_of(*a)
    }
    fn face(&self, _n: usize, _i: usize, a: &usize) -> usize {
        *a
    }
    fn degeneracy(&self, _n: usize, _i: usize, a: &usize) -> usize {
        *a
    }
    fn act(&self, _theta: &OrdinalMap, a: &usize) -> usize {
        *a
    }
    fn elements(&self, _n: usize) -> Result<Vec<usize>> {
        Ok(self.group.elements().collect())
    }
    fn level_order(&self, _n: usize) -> Option<u128> {
        Some(self.group.order() as u128)
    }
    fn name(&self) -> String {
        self.group.name().to_string()
    }
}

/// `K_n = G^{[n]}`, the functions `[n] -> G` under pointwise product, with
/// `θ^* f = f ∘ θ`. A contractible simplicial group with nontrivial faces.
#[derive(Clone, Debug)]
pub struct Codiscrete {
    pub group: FiniteGroup,
}

impl Codiscrete {
    pub fn new(group: FiniteGroup) -> Self {
        Self { group }
    }
}

impl SimplicialGroup for Codiscrete {
    type Elem = Vec<usize>;

    fn one(&self, n: usize) -> Vec<usize> {
        vec![0; n + 1]
    }
    fn mul(&self, _n: usize, a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        a.iter().zip(b).map(|(&x, &y)| self.group.op(x, y)).collect()
    }
    fn inv(&self, _n: usize, a: &Vec<usize>) -> Vec<usize> {
        a.iter().map(|&x| self.group.inverse_of(x)).collect()
    }
    fn face(&self, _n: usize, i: usize, a: &Vec<usize>) -> Vec<usize> {
        let mut out = a.clone();
        out.remove(i);
        out
    }
    fn degeneracy(&self, _n: usize, i: usize, a: &Vec<usize>) -> Vec<usize> {
        let mut out = a.clone();
        out.insert(i, a[i]);
        out
    }
    fn act(&self, theta: &OrdinalMap, a: &Vec<usize>) -> Vec<usize> {
        theta.values().iter().map(|&v| a[v]).collect()
    }
    fn elements(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        tuples(self.group.order(), n + 1)
    }
    fn level_order(&self, n: usize) -> Option<u128> {
        (self.group.order() as u128).checked_pow(n as u32 + 1)
    }
    fn name(&self) -> String {
        format!("codiscrete {}", self.group.name())
    }
}

/// The nerve of an abelian group `A`, `K_n = A^n`, as a simplicial group
/// under pointwise product. Its classifying space is `K(A, 2)`.
#[derive(Clone, Debug)]
pub struct AbelianNerve {
    pub group: FiniteGroup,
}

impl AbelianNerve {
    pub fn new(group: FiniteGroup) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::InvalidGroup(format!("{} is not abelian", group.name())));
        }
        Ok(Self { group })
    }
}

impl SimplicialGroup for AbelianNerve {
    type Elem = Vec<usize>;

    fn one(&self, n: usize) -> Vec<usize> {
        vec![0; n]
    }
    fn mul(&self, _n: usize, a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        a.iter().zip(b).map(|(&x, &y)| self.group.op(x, y)).collect()
    }
    fn inv(&self, _n: usize, a: &Vec<usize>) -> Vec<usize> {
        a.iter().map(|&x| self.group.inverse_of(x)).collect()
    }
    fn face(&self, n: usize, i: usize, a: &Vec<usize>) -> Vec<usize> {
        let mut out = a.clone();
        if i == 0 {
            out.remove(0);
        } else if i == n {
            out.pop();
        } else {
            let merged = self.group.op(a[i - 1], a[i]);
            out.remove(i);
            out[i - 1] = merged;
        }
        out
    }
    fn degeneracy(&self, _n: usize, i: usize, a: &Vec<usize>) -> Vec<usize> {
        let mut out = a.clone();
        out.insert(i, 0);
        out
    }
    fn elements(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        tuples(self.group.order(), n)
    }
    fn level_order(&self, n: usize) -> Option<u128> {
        (self.group.order() as u128).checked_pow(n as u32)
    }
    fn name(&self) -> String {
        format!("nerve {}", self.group.name())
    }
}
