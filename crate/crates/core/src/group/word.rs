use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::GroupOps;

/// A freely reduced word: adjacent letters carry distinct generators and no
/// exponent is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word<G = usize> {
    letters: Vec<(G, i64)>,
}

impl<G: Clone + Eq> Word<G> {
    pub fn identity() -> Self {
        Self { letters: Vec::new() }
    }

    pub fn generator(g: G) -> Self {
        Self { letters: vec![(g, 1)] }
    }

    pub fn power(g: G, e: i64) -> Self {
        Self::from_letters(vec![(g, e)])
    }

    /// Reduces an arbitrary letter list.
    pub fn from_letters(letters: impl IntoIterator<Item = (G, i64)>) -> Self {
        let mut out: Vec<(G, i64)> = Vec::new();
        for (g, e) in letters {
            push_letter(&mut out, g, e);
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[(G, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total number of letters counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.letters.clone();
        for (g, e) in &other.letters {
            push_letter(&mut out, g.clone(), *e);
        }
        Self { letters: out }
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|(g, e)| (g.clone(), -e)).collect() }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::identity(), |acc, _| acc.multiply(&base))
    }

    /// Substitutes a word for each generator.
    pub fn substitute<H: Clone + Eq>(&self, mut image: impl FnMut(&G) -> Word<H>) -> Word<H> {
        self.letters
            .iter()
            .fold(Word::identity(), |acc, (g, e)| acc.multiply(&image(g).pow(*e)))
    }

    /// Evaluates in a group, given the image of each generator.
    pub fn evaluate<K: GroupOps>(&self, group: &K, mut image: impl FnMut(&G) -> K::Elem) -> K::Elem {
        self.letters.iter().fold(group.one(), |acc, (g, e)| group.mul(&acc, &group.pow(&image(g), *e)))
    }

    /// Renames generators; the result is re-reduced since distinct
    /// generators may collide.
    pub fn map_generators<H: Clone + Eq>(&self, mut f: impl FnMut(&G) -> H) -> Word<H> {
        Word::from_letters(self.letters.iter().map(|(g, e)| (f(g), *e)))
    }

    pub fn generators(&self) -> impl Iterator<Item = &G> {
        self.letters.iter().map(|(g, _)| g)
    }
}

fn push_letter<G: Eq>(out: &mut Vec<(G, i64)>, g: G, e: i64) {
    if e == 0 {
        return;
    }
    if let Some((last, le)) = out.last_mut() {
        if *last == g {
            *le += e;
            if *le == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((g, e));
}

impl<G: Clone + Eq> Default for Word<G> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<G: fmt::Debug> fmt::Debug for Word<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{g:?}")?;
            } else {
                write!(f, "{g:?}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The free group on generators of type `G`, with words as elements.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeGroup<G>(std::marker::PhantomData<G>);

impl<G> FreeGroup<G> {
    pub fn new() -> Self {
        Self(std::marker::PhantomData)
    }
}

impl<G: Clone + Eq + Hash + Ord + fmt::Debug> GroupOps for FreeGroup<G> {
    type Elem = Word<G>;

    fn one(&self) -> Word<G> {
        Word::identity()
    }

    fn mul(&self, a: &Word<G>, b: &Word<G>) -> Word<G> {
        a.multiply(b)
    }

    fn inv(&self, a: &Word<G>) -> Word<G> {
        a.inverse()
    }
}
