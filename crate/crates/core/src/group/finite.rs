use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::GroupOps;
use crate::error::{Error, Result};

/// Largest group order accepted by default.
pub const DEFAULT_ORDER_BUDGET: usize = 512;

/// A finite group given by its Cayley table. The identity is element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

/// The JSON group description: either an explicit table or permutation
/// generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table {
        #[serde(default)]
        name: Option<String>,
        table: Vec<Vec<usize>>,
    },
    Permutations {
        #[serde(default)]
        name: Option<String>,
        permutations: Vec<Vec<usize>>,
    },
}

impl FiniteGroup {
    /// Validates closure, identity at index 0, associativity and inverses.
    pub fn from_table(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if order > DEFAULT_ORDER_BUDGET {
            return Err(Error::BudgetExceeded { requested: order as u128, budget: DEFAULT_ORDER_BUDGET as u128 });
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= order) {
                return Err(Error::InvalidGroup(format!("entry {v} in row {i} out of range")));
            }
            table.extend_from_slice(row);
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(Error::InvalidGroup("element 0 is not the identity".into()));
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            match row.iter().position(|&v| v == 0) {
                Some(b) if table[b * order + a] == 0 => inverse[a] = b,
                _ => return Err(Error::InvalidGroup(format!("element {a} has no two-sided inverse"))),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    if table[ab * order + c] != table[a * order + table[b * order + c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(Self { name: name.into(), order, table, inverse })
    }

    /// Builds the group generated by `gens` under `mul`. Elements are sorted
    /// with `identity` forced to index 0, so the result is deterministic.
    pub fn from_closure<T, F>(name: impl Into<String>, identity: T, gens: &[T], mul: F, budget: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Ord + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut seen: BTreeSet<T> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = mul(&x, g);
                if seen.insert(y.clone()) {
                    if seen.len() > budget {
                        return Err(Error::BudgetExceeded { requested: seen.len() as u128, budget: budget as u128 });
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elems: Vec<T> = Vec::with_capacity(seen.len());
        elems.push(identity.clone());
        elems.extend(seen.into_iter().filter(|x| *x != identity));
        let index: HashMap<T, usize> = elems.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let rows = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        Ok((Self::from_table(name, rows)?, elems))
    }

    /// Permutation generators given as image lists on `{0, ..., d-1}`.
    pub fn from_permutations(name: impl Into<String>, gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.first().map_or(1, Vec::len);
        for g in gens {
            let mut sorted = g.clone();
            sorted.sort_unstable();
            if g.len() != degree || sorted != (0..degree).collect::<Vec<_>>() {
                return Err(Error::InvalidGroup(format!("{g:?} is not a permutation of degree {degree}")));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        // (a*b)(i) = a(b(i)): apply b first.
        let mul = |a: &Vec<usize>, b: &Vec<usize>| b.iter().map(|&i| a[i]).collect::<Vec<usize>>();
        Ok(Self::from_closure(name, identity, gens, mul, DEFAULT_ORDER_BUDGET)?.0)
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::Table { name, table } => {
                Self::from_table(name.clone().unwrap_or_else(|| "table".into()), table.clone())
            }
            GroupSpec::Permutations { name, permutations } => {
                Self::from_permutations(name.clone().unwrap_or_else(|| "permutations".into()), permutations)
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GroupSpec = serde_json::from_str(text)?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec::Table {
            name: Some(self.name.clone()),
            table: (0..self.order).map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec()).collect(),
        }
    }

    /// Quotient by a normal subgroup; cosets are numbered by their least
    /// element.
    pub fn quotient(&self, name: impl Into<String>, normal: &BTreeSet<usize>) -> Result<Self> {
        for &n in normal {
            for g in 0..self.order {
                let conj = self.op(self.op(self.inverse[g], n), g);
                if !normal.contains(&conj) {
                    return Err(Error::InvalidGroup("subgroup is not normal".into()));
                }
            }
        }
        let rep = |g: usize| normal.iter().map(|&n| self.op(g, n)).min().unwrap();
        let reps: BTreeSet<usize> = (0..self.order).map(rep).collect();
        let reps: Vec<usize> = reps.into_iter().collect();
        let index: BTreeMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let rows = reps.iter().map(|&a| reps.iter().map(|&b| index[&rep(self.op(a, b))]).collect()).collect();
        Self::from_table(name, rows)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order).filter(|&b| self.op(a, b) == self.op(b, a)).collect()
    }
}

impl GroupOps for FiniteGroup {
    type Elem = usize;

    fn one(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.op(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.inverse[*a]
    }
}
