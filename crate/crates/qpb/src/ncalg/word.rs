//! Words in the free *-monoid over a presentation's generators.

use std::cmp::Ordering;

/// One letter of a word: a generator slot plus a star flag.
///
/// Star flags on self-adjoint generators are never stored; the owning
/// presentation's `star_gen` keeps that normalisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub index: u16,
    pub star: bool,
}

impl Gen {
    pub fn new(index: u16) -> Self {
        Gen { index, star: false }
    }

    pub fn starred(index: u16) -> Self {
        Gen { index, star: true }
    }
}

/// A finite product of generators; the empty word is the algebra unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn from_gens(gens: &[Gen]) -> Self {
        Word(gens.to_vec())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `g^k` convenience constructor.
    pub fn power(g: Gen, k: usize) -> Word {
        Word(vec![g; k])
    }
}

impl Ord for Word {
    /// Graded order: by length first, then lexicographically by letters.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order_sorts_by_length_first() {
        let a = Word::single(Gen::new(5));
        let b = Word(vec![Gen::new(0), Gen::new(0)]);
        assert!(a < b);
        let c = Word(vec![Gen::new(0), Gen::starred(0)]);
        let d = Word(vec![Gen::starred(0), Gen::new(0)]);
        assert!(c < d);
    }

    #[test]
    fn concat_and_power() {
        let g = Gen::new(1);
        let w = Word::power(g, 3);
        assert_eq!(w.len(), 3);
        assert_eq!(Word::one().concat(&w), w);
    }
}
