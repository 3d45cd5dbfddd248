//! Noncommutative polynomials: finite sums of scalar-weighted words.

use super::scalar::LaurentScalar;
use super::word::{Gen, Word};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// A formal sum of words with Laurent-scalar coefficients.
///
/// Invariant: no zero coefficients.  Whether the words are in normal form
/// is a property of the operations that produced the polynomial, not of
/// the container itself; everything returned by `Presentation` methods is
/// normalised.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, LaurentScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::one())
    }

    pub fn scalar(c: LaurentScalar) -> Self {
        Self::from_term(Word::one(), c)
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_term(w, LaurentScalar::one())
    }

    pub fn from_gen(g: Gen) -> Self {
        Self::from_word(Word::single(g))
    }

    pub fn from_term(w: Word, c: LaurentScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentScalar)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Word::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word length in the support.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// If the polynomial is a single term, return it.
    pub fn as_term(&self) -> Option<(&Word, &LaurentScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, w: Word, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Free product: concatenate every pair of words, no rewriting.
    pub fn raw_mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// Linear extension of a map on words.
    pub fn map_words<F: FnMut(&Word) -> NCPoly>(&self, mut f: F) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out += &f(w).scale(c);
        }
        out
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_cancel_to_zero() {
        let w = Word::single(Gen::new(0));
        let mut p = NCPoly::from_word(w.clone());
        p.add_term(w, -LaurentScalar::one());
        assert!(p.is_zero());
    }

    #[test]
    fn raw_mul_concatenates() {
        let a = NCPoly::from_gen(Gen::new(0));
        let b = NCPoly::from_gen(Gen::starred(1));
        let ab = a.raw_mul(&b);
        let (w, c) = ab.as_term().unwrap();
        assert_eq!(w.0, vec![Gen::new(0), Gen::starred(1)]);
        assert!(c.is_one());
    }
}
