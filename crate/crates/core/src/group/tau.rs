use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{subgroup_closure, FiniteGroup, GroupOps};
use crate::error::{Error, Result};

/// The quotient functors of the free group that the library supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Tau {
    Free,
    /// `F / Γ^q F`.
    LowerCentral { q: u32 },
    /// `F / Γ_p^q F`.
    ModPLowerCentral { p: u32, q: u32 },
    /// `F / Γ^2 F · F^{p^k}`.
    AbelianModPow { p: u32, k: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerbalVariant {
    LowerCentral,
    ModP(u32),
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Tau {
    pub fn validate(self) -> Result<Self> {
        let bad = |m: String| Err(Error::Parse(m));
        match self {
            Tau::Free => Ok(self),
            Tau::LowerCentral { q } if q < 2 => bad(format!("lower central stage q={q} must be at least 2")),
            Tau::ModPLowerCentral { p, .. } | Tau::AbelianModPow { p, .. } if !is_prime(p) => bad(format!("{p} is not prime")),
            Tau::ModPLowerCentral { q, .. } if q < 2 => bad(format!("stage q={q} must be at least 2")),
            Tau::AbelianModPow { k, .. } if k < 1 => bad("exponent k must be at least 1".into()),
            Tau::AbelianModPow { p, k } if (p as u64).checked_pow(k).is_none_or(|e| e > u32::MAX as u64) => {
                bad(format!("{p}^{k} is too large"))
            }
            _ => Ok(self),
        }
    }

    /// True when `self`-admissible tuples are always `other`-admissible.
    pub fn refines(self, other: Tau) -> bool {
        use Tau::*;
        match (self, other) {
            (_, Free) => true,
            (LowerCentral { q }, LowerCentral { q: r }) => q <= r,
            (ModPLowerCentral { p, q }, ModPLowerCentral { p: p2, q: r }) => p == p2 && q <= r,
            (ModPLowerCentral { q, .. }, LowerCentral { q: r }) => q <= r,
            (AbelianModPow { .. }, LowerCentral { .. }) => true,
            (AbelianModPow { p, k }, AbelianModPow { p: p2, k: k2 }) => p == p2 && k <= k2,
            (AbelianModPow { p, k: 1 }, ModPLowerCentral { p: p2, .. }) => p == p2,
            _ => self == other,
        }
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tau::Free => write!(f, "free"),
            Tau::LowerCentral { q } => write!(f, "gamma:{q}"),
            Tau::ModPLowerCentral { p, q } => write!(f, "gammap:{p},{q}"),
            Tau::AbelianModPow { p, k } => write!(f, "abmodpk:{p},{k}"),
        }
    }
}

impl FromStr for Tau {
    type Err = Error;

    /// `free`, `gamma:q`, `gammap:p,q` or `abmodpk:p,k`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("cannot parse tau descriptor {s:?}"));
        let nums = |rest: &str| -> Result<Vec<u32>> { rest.split(',').map(|x| x.trim().parse().map_err(|_| err())).collect() };
        let tau = match s.trim().split_once(':') {
            None if s.trim() == "free" => Tau::Free,
            Some(("gamma", rest)) => match nums(rest)?[..] {
                [q] => Tau::LowerCentral { q },
                _ => return Err(err()),
            },
            Some(("gammap", rest)) => match nums(rest)?[..] {
                [p, q] => Tau::ModPLowerCentral { p, q },
                _ => return Err(err()),
            },
            Some(("abmodpk", rest)) => match nums(rest)?[..] {
                [p, k] => Tau::AbelianModPow { p, k },
                _ => return Err(err()),
            },
            _ => return Err(err()),
        };
        tau.validate()
    }
}

/// `Γ^q(H)`, or `Γ_p^q(H)` for the mod-p series, with `Γ^1(H) = H`.
pub fn verbal_stage<G: GroupOps>(g: &G, h: &BTreeSet<G::Elem>, variant: VerbalVariant, q: u32) -> BTreeSet<G::Elem> {
    let mut stage = h.clone();
    for _ in 1..q {
        if stage.len() <= 1 {
            break;
        }
        let mut gens: BTreeSet<G::Elem> = BTreeSet::new();
        for a in &stage {
            for b in h {
                gens.insert(g.commutator(a, b));
            }
            if let VerbalVariant::ModP(p) = variant {
                gens.insert(g.pow(a, p as i64));
            }
        }
        let gens: Vec<G::Elem> = gens.into_iter().collect();
        stage = subgroup_closure(g, &gens);
    }
    stage
}

pub fn pairwise_commute<G: GroupOps>(g: &G, tuple: &[G::Elem]) -> bool {
    tuple.iter().enumerate().all(|(i, a)| tuple[..i].iter().all(|b| g.commutes(a, b)))
}

/// Whether `e_j ↦ tuple[j]` factors through the quotient `τ F^l`.
pub fn tuple_admissible<G: GroupOps>(tau: Tau, g: &G, tuple: &[G::Elem]) -> bool {
    match tau {
        Tau::Free => true,
        Tau::LowerCentral { q: 2 } => pairwise_commute(g, tuple),
        Tau::AbelianModPow { p, k } => {
            let e = (p as i64).pow(k);
            pairwise_commute(g, tuple) && tuple.iter().all(|x| g.is_one(&g.pow(x, e)))
        }
        Tau::LowerCentral { q } => {
            let h = subgroup_closure(g, tuple);
            verbal_stage(g, &h, VerbalVariant::LowerCentral, q).len() == 1
        }
        Tau::ModPLowerCentral { p, q } => {
            let h = subgroup_closure(g, tuple);
            verbal_stage(g, &h, VerbalVariant::ModP(p), q).len() == 1
        }
    }
}

/// Admissibility with a cache keyed on the generating set.
pub struct TauChecker<'a, G: GroupOps> {
    tau: Tau,
    group: &'a G,
    cache: Mutex<HashMap<Vec<G::Elem>, bool>>,
}

impl<'a, G: GroupOps> TauChecker<'a, G> {
    pub fn new(tau: Tau, group: &'a G) -> Self {
        Self { tau, group, cache: Mutex::new(HashMap::new()) }
    }

    pub fn tau(&self) -> Tau {
        self.tau
    }

    pub fn group(&self) -> &'a G {
        self.group
    }

    pub fn admissible(&self, tuple: &[G::Elem]) -> bool {
        match self.tau {
            Tau::Free => return true,
            Tau::LowerCentral { q: 2 } => return pairwise_commute(self.group, tuple),
            _ => {}
        }
        let mut key: Vec<G::Elem> = tuple.iter().filter(|x| !self.group.is_one(x)).cloned().collect();
        key.sort();
        key.dedup();
        if key.len() <= 1 && !matches!(self.tau, Tau::AbelianModPow { .. } | Tau::ModPLowerCentral { .. }) {
            return true;
        }
        if let Some(&v) = self.cache.lock().unwrap().get(&key) {
            return v;
        }
        let v = tuple_admissible(self.tau, self.group, &key);
        self.cache.lock().unwrap().insert(key, v);
        v
    }
}

fn check_budget(order: usize, l: usize, budget: u128) -> Result<()> {
    let total = (order as u128).checked_pow(l as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded { requested: total, budget });
    }
    Ok(())
}

fn dfs<G: GroupOps>(
    checker: &TauChecker<'_, G>,
    elems: &[G::Elem],
    l: usize,
    prefix: &mut Vec<G::Elem>,
    visit: &mut dyn FnMut(&[G::Elem]),
) {
    if prefix.len() == l {
        visit(prefix);
        return;
    }
    for x in elems {
        prefix.push(x.clone());
        // admissible tuples are closed under taking prefixes
        if checker.admissible(prefix) {
            dfs(checker, elems, l, prefix, visit);
        }
        prefix.pop();
    }
}

/// All admissible `l`-tuples drawn from `elems`, in lexicographic order of
/// positions in `elems`.
pub fn enumerate_admissible_in<G>(checker: &TauChecker<'_, G>, elems: &[G::Elem], l: usize, budget: u128) -> Result<Vec<Vec<G::Elem>>>
where
    G: GroupOps + Sync,
    G::Elem: Send + Sync,
{
    check_budget(elems.len(), l, budget)?;
    if l == 0 {
        return Ok(vec![Vec::new()]);
    }
    let chunks: Vec<Vec<Vec<G::Elem>>> = elems
        .par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut prefix = vec![first.clone()];
            if checker.admissible(&prefix) {
                dfs(checker, elems, l, &mut prefix, &mut |t| out.push(t.to_vec()));
            }
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

pub fn count_admissible_in<G>(checker: &TauChecker<'_, G>, elems: &[G::Elem], l: usize, budget: u128) -> Result<u128>
where
    G: GroupOps + Sync,
    G::Elem: Send + Sync,
{
    check_budget(elems.len(), l, budget)?;
    if checker.tau() == Tau::Free || l == 0 {
        return Ok((elems.len() as u128).pow(l as u32));
    }
    Ok(elems
        .par_iter()
        .map(|first| {
            let mut n = 0u128;
            let mut prefix = vec![first.clone()];
            if checker.admissible(&prefix) {
                dfs(checker, elems, l, &mut prefix, &mut |_| n += 1);
            }
            n
        })
        .sum())
}

pub fn enumerate_admissible(tau: Tau, g: &FiniteGroup, l: usize, budget: u128) -> Result<Vec<Vec<usize>>> {
    let elems: Vec<usize> = g.elements().collect();
    enumerate_admissible_in(&TauChecker::new(tau, g), &elems, l, budget)
}

pub fn count_admissible(tau: Tau, g: &FiniteGroup, l: usize, budget: u128) -> Result<u128> {
    let elems: Vec<usize> = g.elements().collect();
    count_admissible_in(&TauChecker::new(tau, g), &elems, l, budget)
}
