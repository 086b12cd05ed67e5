use std::collections::BTreeSet;

use super::finite::{FiniteGroup, DEFAULT_ORDER_BUDGET};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: &[&str] = &["Z<n>", "D<n> (order 2n)", "S<n> (n <= 5)", "Q8", "E32"];

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group of order 0".into()));
    }
    FiniteGroup::from_table(format!("Z{n}"), (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
}

/// Dihedral group of order `2n`, elements `r^a s^b` at index `a + n b`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(Error::InvalidGroup("dihedral group needs n >= 1".into()));
    }
    let decode = |x: usize| (x % n, x / n);
    let encode = |a: usize, b: usize| a + n * b;
    // r^a s^b · r^c s^d = r^{a + (-1)^b c} s^{b+d}
    let rows = (0..2 * n)
        .map(|x| {
            (0..2 * n)
                .map(|y| {
                    let (a, b) = decode(x);
                    let (c, d) = decode(y);
                    let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                    encode(rot, (b + d) % 2)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(format!("D{n}"), rows)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=5).contains(&n) {
        return Err(Error::InvalidGroup(format!("symmetric group S{n} not supported (n <= 5)")));
    }
    if n == 1 {
        return FiniteGroup::from_table("S1", vec![vec![0]]);
    }
    let transposition: Vec<usize> = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(format!("S{n}"), &[transposition, cycle])
}

/// Quaternion group: elements `±1, ±i, ±j, ±k` as (sign, unit) pairs.
pub fn quaternion() -> Result<FiniteGroup> {
    // units 0=1, 1=i, 2=j, 3=k; product table of units with signs
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let mul = |x: &(bool, usize), y: &(bool, usize)| {
        let (s, u) = unit_mul(x.1, y.1);
        (x.0 ^ y.0 ^ s, u)
    };
    let gens = [(false, 1), (false, 2)];
    Ok(FiniteGroup::from_closure("Q8", (false, 0), &gens, mul, DEFAULT_ORDER_BUDGET)?.0)
}

/// Extraspecial group of order 32 of plus type, the central product
/// `D4 ∘ D4`.
pub fn extraspecial_32() -> Result<FiniteGroup> {
    let d4 = dihedral(4)?;
    let n = d4.order();
    let rows = (0..n * n)
        .map(|x| (0..n * n).map(|y| d4.op(x / n, y / n) * n + d4.op(x % n, y % n)).collect())
        .collect();
    let product = FiniteGroup::from_table("D4xD4", rows)?;
    // the centre of D4 is {1, r^2}; r^2 has index 2
    let diagonal: BTreeSet<usize> = [0, 2 * n + 2].into_iter().collect();
    product.quotient("E32", &diagonal)
}

/// Resolves `Z4`, `D4`, `S3`, `Q8`, `E32` and the long forms `cyclic:4`,
/// `dihedral:4`, `symmetric:3`, `quaternion`, `extraspecial32`.
pub fn builtin(name: &str) -> Result<FiniteGroup> {
    let lower = name.to_ascii_lowercase();
    let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad group size in {name:?}")));
    match lower.as_str() {
        "q8" | "quaternion" => return quaternion(),
        "e32" | "extraspecial32" | "extraspecial:32" => return extraspecial_32(),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix("cyclic:") {
        return cyclic(parse(rest)?);
    }
    if let Some(rest) = lower.strip_prefix("dihedral:") {
        return dihedral(parse(rest)?);
    }
    if let Some(rest) = lower.strip_prefix("symmetric:") {
        return symmetric(parse(rest)?);
    }
    if let Some(rest) = lower.strip_prefix('z') {
        return cyclic(parse(rest)?);
    }
    if let Some(rest) = lower.strip_prefix('d') {
        return dihedral(parse(rest)?);
    }
    if let Some(rest) = lower.strip_prefix('s') {
        return symmetric(parse(rest)?);
    }
    Err(Error::InvalidGroup(format!("unknown builtin group {name:?}; known: {}", BUILTIN_NAMES.join(", "))))
}
